"""Versioned data files for the named scenario fixtures."""

from pathlib import Path

from ..exact import IntMatrix, RatMatrix, parse_int_matrix, parse_matrix
from ..matroids import Graph, parse_graph

_DIR = Path(__file__).parent


def fixture_path(name: str) -> Path:
    p = _DIR / name
    if not p.exists():
        raise FileNotFoundError(f"no fixture named {name!r}")
    return p


def fixture_names() -> list:
    return sorted(p.name for p in _DIR.iterdir() if p.suffix in (".txt", ".graph"))


def load_matrix(name: str) -> RatMatrix:
    return parse_matrix(fixture_path(name).read_text())


def load_int_matrix(name: str) -> IntMatrix:
    return parse_int_matrix(fixture_path(name).read_text())


def load_graph(name: str) -> Graph:
    return parse_graph(fixture_path(name).read_text())
