"""
Text codecs for profiles, conformal grids, isotopy paths, meshes and JSON reports.

Reals are written with 17 significant digits so reports are byte-for-byte reproducible.
"""
import json
import logging
from pathlib import Path
from typing import Any, Dict, Iterable, List, Optional, Sequence, Tuple, Union

import numpy as np

from exceptions.geometryExceptions import MalformedInput
from model.conformalModel import ConformalDisk, IsotopyPath
from model.diskModel import DiskProfile

logger = logging.getLogger(__name__)

PathLike = Union[str, Path]

PROFILE_HEADER = "rho,h"
CONFORMAL_HEADER = "sigma,phi,u"
MANIFEST_NAME = "manifest.json"


def _real(value: float) -> str:
    return f"{float(value):.17g}"


def dump_json(payload: Dict[str, Any]) -> str:
    return json.dumps(payload, indent=2, ensure_ascii=False) + "\n"


def write_json(payload: Dict[str, Any], path: PathLike) -> Path:
    path = Path(path)
    path.write_text(dump_json(payload), encoding="utf-8")
    return path


def read_json(path: PathLike) -> Dict[str, Any]:
    try:
        return json.loads(Path(path).read_text(encoding="utf-8"))
    except json.JSONDecodeError as exc:
        raise MalformedInput(f"{path}: invalid JSON ({exc.msg})", {"path": str(path), "line": exc.lineno}) from exc
    except OSError as exc:
        raise MalformedInput(f"{path}: {exc.strerror}", {"path": str(path)}) from exc


def _read_table(path: PathLike, header: str, columns: int) -> np.ndarray:
    try:
        lines = Path(path).read_text(encoding="utf-8").splitlines()
    except OSError as exc:
        raise MalformedInput(f"{path}: {exc.strerror}", {"path": str(path)}) from exc
    if not lines or lines[0].strip() != header:
        raise MalformedInput(f"{path}: expected CSV header '{header}'", {"path": str(path)})
    rows = []
    for number, line in enumerate(lines[1:], start=2):
        if not line.strip():
            continue
        fields = line.split(",")
        try:
            if len(fields) != columns:
                raise ValueError
            rows.append([float(field) for field in fields])
        except ValueError:
            raise MalformedInput(f"{path}:{number}: malformed row", {"path": str(path), "line": number}) from None
    if not rows:
        raise MalformedInput(f"{path}: no data rows", {"path": str(path)})
    return np.array(rows)


def write_profile(d: DiskProfile, path: PathLike) -> Path:
    path = Path(path)
    lines = [PROFILE_HEADER] + [f"{_real(r)},{_real(h)}" for r, h in zip(d.rho, d.h)]
    path.write_text("\n".join(lines) + "\n", encoding="utf-8")
    return path


def read_profile(path: PathLike) -> DiskProfile:
    table = _read_table(path, PROFILE_HEADER, 2)
    try:
        return DiskProfile(rho=table[:, 0], h=table[:, 1])
    except ValueError as exc:
        raise MalformedInput(f"{path}: {exc}", {"path": str(path)}) from exc


def write_conformal(u: ConformalDisk, path: PathLike) -> Path:
    path = Path(path)
    sigma, phi = u.sigma, u.phi
    lines = [CONFORMAL_HEADER]
    for j in range(u.radii + 1):
        for k in range(u.angles):
            lines.append(f"{_real(sigma[j])},{_real(phi[k])},{_real(u.u[j, k])}")
    path.write_text("\n".join(lines) + "\n", encoding="utf-8")
    return path


def read_conformal(path: PathLike, boundary_length: Optional[float] = None) -> ConformalDisk:
    """Grid rows in sigma-major order; the boundary length defaults to the measured one"""
    table = _read_table(path, CONFORMAL_HEADER, 3)
    sigma = np.unique(table[:, 0])
    angles = table.shape[0] // sigma.size
    if sigma.size * angles != table.shape[0] or sigma.size < 2:
        raise MalformedInput(f"{path}: rows do not form a polar grid", {"path": str(path)})
    grid = table[:, 2].reshape(sigma.size, angles)
    length = boundary_length
    if length is None:
        length = float(2 * np.pi * np.mean(np.exp(grid[-1])))
    return ConformalDisk(u=grid, boundary_length=length)


def write_isotopy(path_data: IsotopyPath, directory: PathLike) -> Path:
    """Numbered CSV per step plus a manifest with s and a(s)"""
    directory = Path(directory)
    directory.mkdir(parents=True, exist_ok=True)
    width = max(3, len(str(path_data.steps)))
    steps = []
    for index, (s, disk, a, worst, length) in enumerate(
        zip(
            path_data.parameters,
            path_data.disks,
            path_data.normalizations,
            path_data.curvature_minima,
            path_data.boundary_lengths,
        )
    ):
        name = f"step_{index:0{width}d}.csv"
        write_conformal(disk, directory / name)
        steps.append(
            {
                "file": name,
                "s": _real(s),
                "a": _real(a),
                "min_curvature": _real(worst),
                "boundary_length": _real(length),
            }
        )
    manifest = {"steps": steps, "boundary_length": _real(path_data.disks[0].boundary_length)}
    write_json(manifest, directory / MANIFEST_NAME)
    logger.debug("wrote %d isotopy steps to %s", len(steps), directory)
    return directory


def write_obj(
    vertices: np.ndarray, faces: Iterable[Sequence[int]], path: PathLike
) -> Path:
    path = Path(path)
    lines: List[str] = [f"v {_real(x)} {_real(y)} {_real(z)}" for x, y, z in vertices]
    lines += ["f " + " ".join(str(i + 1) for i in face) for face in faces]
    path.write_text("\n".join(lines) + "\n", encoding="utf-8")
    return path


def read_obj(path: PathLike) -> Tuple[np.ndarray, List[Tuple[int, ...]]]:
    vertices, faces = [], []
    for line in Path(path).read_text(encoding="utf-8").splitlines():
        if line.startswith("v "):
            vertices.append([float(x) for x in line.split()[1:4]])
        elif line.startswith("f "):
            faces.append(tuple(int(i) - 1 for i in line.split()[1:]))
    return np.array(vertices), faces
