"""
Command-line front end.

Every subcommand prints its report as JSON on stdout and returns an exit code:
0 on success, 1 on a validation failure, 2 on I/O, parse or numeric failure.
Errors are written to stderr as one JSON line.
"""
import argparse
import json
import logging
import sys
from pathlib import Path
from typing import Any, Callable, Dict, List, Optional, Sequence, Tuple

from pydantic import ValidationError

from config.fileExport import dump_json, read_conformal, read_json, read_profile, write_json
from config.logConfig import setup_logging
from config.settings import DISK_SHAPE, GRID, LOG_LEVEL, STEPS, Tolerances
from controller.diskController import handle_build, handle_deform, handle_mesh, verify_profile
from controller.latticeController import handle_marking
from controller.manifoldController import (
    handle_classify,
    handle_cover,
    handle_gen,
    handle_slope,
    handle_validate,
)
from controller.moduliController import handle_components
from controller.spaceformController import get_prism_info, handle_equiv
from exceptions.geometryExceptions import (
    ConfigurationError,
    GeometryError,
    MalformedInput,
    UsageError,
)
from schemas.baseSchemas import ToleranceOverrides
from schemas.diskSchemas import DiskBuildRequest
from schemas.latticeSchemas import MarkingRequest
from schemas.manifoldSchemas import Description
from schemas.moduliSchemas import ComponentsRequest
from schemas.spaceformSchemas import EquivRequest, SpaceFormSchema

logger = logging.getLogger(__name__)

# artifact each subcommand writes to --out
ARTIFACT_FORMAT = {"build": "csv", "deform": "csv", "mesh": "obj"}


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message, {"usage": self.format_usage().strip()})


def _pair(text: str) -> Tuple[int, int]:
    try:
        first, second = (int(part) for part in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected two integers 'a,b', got '{text}'") from None
    return first, second


def _lens(text: str) -> SpaceFormSchema:
    p, q = _pair(text)
    return SpaceFormSchema(kind="lens", p=p, q=q)


def _prism(text: str) -> SpaceFormSchema:
    m, n = _pair(text)
    return SpaceFormSchema(kind="prism", m=m, n=n)


def _tolerances(args) -> Tolerances:
    return Tolerances().override(geodesic=args.tol_geodesic, flatness=args.tol_flatness, sign=args.tol_sign)


def _overrides(args) -> ToleranceOverrides:
    tolerances = _tolerances(args)
    return ToleranceOverrides(geodesic=tolerances.geodesic, flatness=tolerances.flatness, sign=tolerances.sign)


def _description(path: str):
    return Description.model_validate(read_json(path)).root


def _required_out(args) -> Path:
    if args.out is None:
        raise UsageError(f"'{args.command}' needs --out")
    return Path(args.out)


def cmd_marking(args) -> Dict[str, Any]:
    return handle_marking(MarkingRequest.model_validate(read_json(args.input)))


def cmd_slope(args) -> Dict[str, Any]:
    return handle_slope(_description(args.input))


def cmd_classify(args) -> Dict[str, Any]:
    return handle_classify(_description(args.input))


def cmd_validate(args) -> Dict[str, Any]:
    return handle_validate(_description(args.input))


def cmd_cover(args) -> Dict[str, Any]:
    return handle_cover(_description(args.input))


def cmd_equiv(args) -> Dict[str, Any]:
    forms = args.forms or []
    if len(forms) != 2:
        raise UsageError("equiv compares exactly two space forms given by --lens p,q or --prism m,n")
    return handle_equiv(EquivRequest(first=forms[0], second=forms[1]))


def cmd_prism(args) -> Dict[str, Any]:
    m, n = args.prism
    return get_prism_info(m, n)


def cmd_build(args) -> Dict[str, Any]:
    request = DiskBuildRequest(
        description=read_json(args.input),
        grid=args.grid,
        shape=args.shape,
        tolerances=_overrides(args),
    )
    out_dir = None if args.out is None else Path(args.out)
    if args.factors and out_dir is None:
        raise UsageError("--factors writes CSV files and needs --out")
    return handle_build(request, out_dir=out_dir, factors=args.factors)


def cmd_verify(args) -> Dict[str, Any]:
    return verify_profile(read_profile(args.input), _tolerances(args))


def cmd_deform(args) -> Dict[str, Any]:
    u = read_conformal(args.factor)
    u0 = read_conformal(args.standard)
    return handle_deform(u, u0, args.steps, _tolerances(args), _required_out(args))


def cmd_moduli(args) -> Dict[str, Any]:
    p, q = args.lens
    return handle_components(ComponentsRequest(p=p, q=q, bound=args.bound))


def cmd_mesh(args) -> Dict[str, Any]:
    return handle_mesh(read_profile(args.input), args.rings, args.segments, _required_out(args))


def cmd_gen(args) -> Dict[str, Any]:
    if args.count < 1:
        raise ConfigurationError("gen needs --count of at least 1", {"count": args.count})
    return handle_gen(args.seed, args.count)


def _common_flags() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--tol-geodesic", type=float, default=None, help="boundary geodesic tolerance (default 1e-10)")
    common.add_argument("--tol-flatness", type=float, default=None, help="boundary flatness tolerance (default 1e-6)")
    common.add_argument("--tol-sign", type=float, default=None, help="curvature sign tolerance of the isotopy (default 1e-6)")
    common.add_argument("--grid", type=int, default=GRID, help=f"radial grid intervals (default {GRID})")
    common.add_argument("--steps", type=int, default=STEPS, help=f"isotopy steps (default {STEPS})")
    common.add_argument("--seed", type=int, default=0, help="seed for gen (default 0)")
    common.add_argument("--out", default=None, help="output file or directory")
    common.add_argument("--format", choices=("json", "csv", "obj"), default=None, help="artifact format written to --out")
    common.add_argument("--log-level", default=LOG_LEVEL, help=f"logging level on stderr (default {LOG_LEVEL})")
    return common


def build_parser() -> argparse.ArgumentParser:
    common = _common_flags()
    parser = _Parser(prog="ggm", description="Geometric graph manifolds: markings, slopes, classification and metrics")
    commands = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def add(name: str, handler: Callable, help_text: str) -> argparse.ArgumentParser:
        sub = commands.add_parser(name, parents=[common], help=help_text, description=help_text)
        sub.set_defaults(handler=handler)
        return sub

    add("marking", cmd_marking, "Normalized marking of a direction on a flat torus").add_argument("input")
    add("slope", cmd_slope, "Slope data and relative slope class of a description").add_argument("input")
    add("classify", cmd_classify, "Lens space or prism manifold of a description").add_argument("input")
    add("validate", cmd_validate, "List every violated hypothesis of a description").add_argument("input")
    add("cover", cmd_cover, "Orientation double cover of a one-sided description").add_argument("input")

    equiv = add("equiv", cmd_equiv, "Whether two spherical space forms are diffeomorphic")
    equiv.add_argument("--lens", dest="forms", action="append", type=_lens, metavar="P,Q")
    equiv.add_argument("--prism", dest="forms", action="append", type=_prism, metavar="M,N")

    add("prism", cmd_prism, "Invariants and metric components of P(m, n)").add_argument(
        "prism", type=_pair, metavar="M,N"
    )

    build = add("build", cmd_build, "Cylinder parameters and standard disks of a description")
    build.add_argument("input")
    build.add_argument("--shape", default=DISK_SHAPE, help=f"curvature shape (default {DISK_SHAPE})")
    build.add_argument("--factors", action="store_true", help="also write the conformal factor of each disk")

    add("verify", cmd_verify, "Curvature report of a profile CSV").add_argument("input")

    deform = add("deform", cmd_deform, "Conformal isotopy from a factor CSV to the standard factor CSV")
    deform.add_argument("factor")
    deform.add_argument("standard")

    moduli = add("moduli", cmd_moduli, "Components of lens-type metrics on L(p, q)")
    moduli.add_argument("--lens", type=_pair, required=True, metavar="P,Q")
    moduli.add_argument("--bound", type=int, required=True)

    mesh = add("mesh", cmd_mesh, "Surface of revolution of a profile CSV as OBJ")
    mesh.add_argument("input")
    mesh.add_argument("--rings", type=int, default=64)
    mesh.add_argument("--segments", type=int, default=64)

    gen = add("gen", cmd_gen, "Random valid descriptions")
    gen.add_argument("--count", type=int, default=10)
    return parser


def _check_format(args) -> None:
    expected = ARTIFACT_FORMAT.get(args.command, "json")
    if args.format is not None and args.format != expected:
        raise UsageError(
            f"'{args.command}' writes {expected}, not {args.format}",
            {"command": args.command, "format": args.format},
        )


def _emit_error(exc: GeometryError) -> int:
    line = json.dumps({"success": False, "error": exc.to_dict()}, separators=(",", ":"), sort_keys=True)
    print(line, file=sys.stderr)
    return 1 if exc.is_validation else 2


def run(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except UsageError as exc:
        return _emit_error(exc)
    except SystemExit as exc:
        # --help
        return exc.code if isinstance(exc.code, int) else 0

    setup_logging(args.log_level)
    try:
        _check_format(args)
        envelope = args.handler(args)
        report = dump_json(envelope["data"])
        if args.out is not None and args.command not in ARTIFACT_FORMAT:
            write_json(envelope["data"], args.out)
    except GeometryError as exc:
        logger.debug("%s failed with %s", args.command, exc.code)
        return _emit_error(exc)
    except ValidationError as exc:
        errors: List[Dict[str, Any]] = [
            {"loc": [str(part) for part in error["loc"]], "msg": error["msg"]} for error in exc.errors()
        ]
        return _emit_error(MalformedInput("Input does not match the expected schema", {"errors": errors}))
    except OSError as exc:
        return _emit_error(MalformedInput(f"{exc.filename}: {exc.strerror}", {"path": str(exc.filename)}))

    sys.stdout.write(report)
    return 0


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
