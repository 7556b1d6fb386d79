"""Built-in catalog of knot and pattern fixtures.

Ships the inputs the worked examples need: the unknot, the (2, n) torus
knots for odd n up to 11 (bidiagonal -1/+1 matrices), the figure eight,
stabilized variants with declared trivial blocks, the unknotted-closure
cable patterns C_{w,1} for w = 1..5 (empty matrix, winding w), and the
C_{2,q} cable patterns (matrix of the closure torus knot, winding 2).

SATGENUS_CATALOG_DIR overrides the built-in directory.
"""

import os

from .errors import FormatError
from .fileio import load_knot, load_pattern


def catalog_dir():
    override = os.environ.get("SATGENUS_CATALOG_DIR")
    if override:
        return override
    return os.path.join(os.path.dirname(__file__), "_data", "catalog")


def _entries():
    d = catalog_dir()
    if not os.path.isdir(d):
        return {}
    return {
        os.path.splitext(f)[0]: os.path.join(d, f)
        for f in sorted(os.listdir(d))
        if f.endswith(".json")
    }


def list_names():
    """Sorted catalog names with their kind ('knot' or 'pattern')."""
    out = []
    for name, path in _entries().items():
        try:
            load_knot(path)
            out.append((name, "knot"))
        except FormatError:
            load_pattern(path)
            out.append((name, "pattern"))
    return out


def knot(name):
    path = _entries().get(name)
    if path is None:
        raise FormatError(f"no catalog entry named {name!r}")
    return load_knot(path)


def pattern(name):
    path = _entries().get(name)
    if path is None:
        raise FormatError(f"no catalog entry named {name!r}")
    return load_pattern(path)


def resolve_knot(name_or_path):
    """Load from a path when one exists, else from the catalog."""
    if os.path.exists(name_or_path):
        return load_knot(name_or_path)
    return knot(name_or_path)


def resolve_pattern(name_or_path):
    if os.path.exists(name_or_path):
        return load_pattern(name_or_path)
    return pattern(name_or_path)


def all_knots():
    return [knot(n) for n, kind in list_names() if kind == "knot"]


def all_patterns():
    return [pattern(n) for n, kind in list_names() if kind == "pattern"]
