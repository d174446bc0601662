import io
import logging
import re
import sys
from pathlib import Path

from config.logConfig import setup_logging

ROOT = Path(__file__).resolve().parents[1]


def test_logging_follows_a_replaced_stderr(monkeypatch):
    root = logging.getLogger()
    level = root.level
    first = io.StringIO()
    monkeypatch.setattr(sys, "stderr", first)
    setup_logging("INFO")
    first.close()

    second = io.StringIO()
    monkeypatch.setattr(sys, "stderr", second)
    try:
        setup_logging("INFO")
        logging.getLogger("ggm.config").info("written after the swap")
    finally:
        root.setLevel(level)
    assert "written after the swap" in second.getvalue()
    assert sum(getattr(h, "_ggm_handler", False) for h in root.handlers) == 1


def test_compose_sets_every_setting():
    settings = set(re.findall(r'os\.getenv\("(\w+)"', (ROOT / "config" / "settings.py").read_text(encoding="utf-8")))
    compose = set(re.findall(r"^\s+- (\w+)=", (ROOT / "docker-compose.yml").read_text(encoding="utf-8"), re.MULTILINE))
    example = set(re.findall(r"^(\w+)=", (ROOT / ".env.example").read_text(encoding="utf-8"), re.MULTILINE))
    assert {"GGM_TOL_CURVATURE", "GGM_TOL_GAUSS_BONNET", "GGM_POLAR_RADII", "GGM_POLAR_ANGLES"} <= settings
    assert settings <= compose
    assert settings <= example
