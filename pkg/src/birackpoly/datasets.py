"""Bundled biracks, modules and link diagrams."""
from __future__ import annotations

from importlib import resources
from pathlib import Path

from .birack import Birack, parse_birack
from .diagram import LinkDiagram, build_diagram, parse_gauss_code
from .module import BirackModule, parse_module

__all__ = ["data_dir", "birack", "module", "link", "vknot", "vknot_ids", "vknots_dir"]


def data_dir() -> Path:
    return Path(str(resources.files("birackpoly") / "data"))


def _read(kind: str, name: str) -> str:
    path = data_dir() / kind / f"{name}.txt"
    if not path.is_file():
        raise KeyError(f"no bundled {kind[:-1]} named {name!r}")
    return path.read_text()


def birack(name: str) -> Birack:
    """``"rank2"`` or ``"singleton"``."""
    return parse_birack(_read("biracks", name))


def module(name: str, over: Birack | None = None) -> BirackModule:
    """Bundled module; the birack defaults to the one the module was built for."""
    if over is None:
        over = birack("singleton" if name in ("sawollek", "alexander") else "rank2")
    return parse_module(_read("modules", name), over)


def link(name: str) -> LinkDiagram:
    return build_diagram(parse_gauss_code(_read("links", name)))


def vknots_dir() -> Path:
    return data_dir() / "vknots"


def _id_key(kid: str):
    return tuple(int(p) for p in kid.split("."))


def vknot_ids() -> list[str]:
    return sorted((p.stem for p in vknots_dir().glob("*.txt")), key=_id_key)


def vknot(kid: str) -> LinkDiagram:
    return build_diagram(parse_gauss_code(_read("vknots", kid)))
