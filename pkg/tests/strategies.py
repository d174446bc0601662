"""Hypothesis strategies for exact lattice data."""
from fractions import Fraction
from math import gcd

from hypothesis import strategies as st

from model.latticeModel import FlatTorus, GramMatrix, LatticeVector

MAX_DENOMINATOR = 100
MAX_ENTRY = 50

# generators of SL(2, Z)
S = ((0, -1), (1, 0))
T = ((1, 1), (0, 1))
T_INV = ((1, -1), (0, 1))


def _product(a, b):
    return (
        (a[0][0] * b[0][0] + a[0][1] * b[1][0], a[0][0] * b[0][1] + a[0][1] * b[1][1]),
        (a[1][0] * b[0][0] + a[1][1] * b[1][0], a[1][0] * b[0][1] + a[1][1] * b[1][1]),
    )


@st.composite
def rationals(draw, positive=False):
    low = 1 if positive else -MAX_DENOMINATOR
    numerator = draw(st.integers(min_value=low, max_value=MAX_DENOMINATOR))
    denominator = draw(st.integers(min_value=1, max_value=MAX_DENOMINATOR))
    return Fraction(numerator, denominator)


@st.composite
def gram_matrices(draw):
    g11 = draw(rationals(positive=True))
    g22 = draw(rationals(positive=True))
    # |g12| < min(g11, g22) keeps the form positive definite
    denominator = draw(st.integers(min_value=1, max_value=MAX_DENOMINATOR))
    numerator = draw(st.integers(min_value=-denominator + 1, max_value=denominator - 1))
    g12 = Fraction(numerator, denominator) * min(g11, g22)
    return GramMatrix(g11, g12, g22)


@st.composite
def flat_tori(draw):
    return FlatTorus(gram=draw(gram_matrices()), orientation=draw(st.sampled_from((1, -1))))


def primitive_vectors():
    entries = st.integers(min_value=-MAX_ENTRY, max_value=MAX_ENTRY)
    return st.tuples(entries, entries).filter(lambda v: gcd(*v) == 1).map(lambda v: LatticeVector(*v))


@st.composite
def foliation_pairs(draw):
    f1 = draw(primitive_vectors())
    f2 = draw(primitive_vectors().filter(lambda v: v not in (f1, -f1)))
    return f1, f2


@st.composite
def unimodular_matrices(draw):
    word = draw(st.lists(st.sampled_from((S, T, T_INV)), max_size=8))
    matrix = ((1, 0), (0, 1))
    for generator in word:
        matrix = _product(matrix, generator)
    return matrix


@st.composite
def coprime_pairs(draw, max_p=50):
    p = draw(st.integers(min_value=1, max_value=max_p))
    q = draw(st.integers(min_value=0, max_value=p - 1).filter(lambda q: gcd(p, q) == 1))
    return p, q


@st.composite
def prism_parameters(draw, max_entry=30):
    """(m, n) coprime with m > 1, the prism manifolds that are not lens spaces"""
    m = draw(st.integers(min_value=2, max_value=max_entry))
    n = draw(st.integers(min_value=1, max_value=max_entry).filter(lambda n: gcd(m, n) == 1))
    return m, n
