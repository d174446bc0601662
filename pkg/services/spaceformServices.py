"""
Arithmetic of lens spaces L(p, q) and prism manifolds P(m, n).
"""
from math import gcd
from typing import Optional, Set

from exceptions.geometryExceptions import NotCoprime
from model.spaceformModel import LensType, PrismInvariants, PrismType, SpaceForm
from services.latticeServices import mod_inverse


def lens_normalize(p: int, q: int) -> LensType:
    if p == 0 or gcd(p, q) != 1:
        raise NotCoprime(f"Lens parameters ({p}, {q}) are not coprime", {"p": p, "q": q})
    if p < 0:
        p, q = -p, -q
    return LensType(p=p, q=q % p)


def lens_from_group_action(p: int, q: int) -> LensType:
    """S^3 / Z_p with g.(z, w) = (g z, g^q w)"""
    return lens_normalize(p, q)


def lens_orbit(lens: LensType) -> Set[int]:
    """{+-q, +-q^-1} mod p"""
    if lens.p == 1:
        return {0}
    inverse = mod_inverse(lens.q, lens.p)
    return {lens.q % lens.p, -lens.q % lens.p, inverse, -inverse % lens.p}


def lens_equivalent(a: LensType, b: LensType) -> bool:
    return a.p == b.p and b.q in lens_orbit(a)


def lens_canonical(lens: LensType) -> LensType:
    """Smallest q among the diffeomorphic normal forms L(p, +-q^{+-1})"""
    return LensType(p=lens.p, q=min(lens_orbit(lens)))


def prism_invariants(prism: PrismType) -> PrismInvariants:
    return PrismInvariants(
        group_order=4 * prism.m * prism.n,
        abelianization_order=4 * prism.n,
        is_abelian=prism.m == 1,
    )


_SUPERSCRIPTS = str.maketrans("0123456789-", "⁰¹²³⁴⁵⁶⁷⁸⁹⁻")


def _power(symbol: str, exponent: int, unicode: bool) -> str:
    if exponent == 1:
        return symbol
    if unicode:
        return symbol + str(exponent).translate(_SUPERSCRIPTS)
    return f"{symbol}^{exponent}"


def prism_presentation(prism: PrismType, unicode: bool = True) -> str:
    """Two-relator presentation of G_{m,n}, e.g. ⟨a,b | bab⁻¹=a⁻¹, a³b⁴=1⟩"""
    relator = _power("a", prism.m, unicode) + _power("b", 2 * prism.n, unicode)
    if unicode:
        return f"⟨a,b | bab⁻¹=a⁻¹, {relator}=1⟩"
    return f"<a,b | bab^-1=a^-1, {relator}=1>"


def prism_as_lens(prism: PrismType) -> Optional[LensType]:
    """P(1, n) is L(4n, 2n - 1); prism manifolds with m > 1 are not lens spaces"""
    if prism.m != 1:
        return None
    return lens_normalize(4 * prism.n, 2 * prism.n - 1)


def fundamental_group_order(form: SpaceForm) -> int:
    if isinstance(form, LensType):
        return form.p
    return prism_invariants(form).group_order


def spaceform_equivalent(a: SpaceForm, b: SpaceForm) -> bool:
    if isinstance(a, LensType) and isinstance(b, LensType):
        return lens_equivalent(a, b)
    if isinstance(a, PrismType) and isinstance(b, PrismType):
        return (a.m, a.n) == (b.m, b.n)
    prism, lens = (a, b) if isinstance(a, PrismType) else (b, a)
    as_lens = prism_as_lens(prism)
    return as_lens is not None and lens_equivalent(as_lens, lens)
