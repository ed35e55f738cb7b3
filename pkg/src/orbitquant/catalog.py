"""Left-cell data: for each orbit, the subgroup W' with sigma_x = j_{W'}^W(sgn).

The shipped table lives in ``data/catalog.json``; another file with the same
schema can be merged on top of it.
"""
import json
import re
from dataclasses import dataclass, field
from importlib import resources

from .errors import MissingSpec, NotInCatalog
from .orbits import Partition, spherical_family, validate
from .weyl import SubgroupSpec

CATALOG_VERSION = "orbit-quant/1"
_PLACEHOLDER = re.compile(r"\{([^{}]*)\}")
_TERM = re.compile(r"\s*([+-]?)\s*(p|q|\d+)\s*")


def _eval_linear(expr, env):
    pos, total = 0, 0
    expr = expr.strip()
    while pos < len(expr):
        m = _TERM.match(expr, pos)
        if not m or m.end() == pos:
            raise ValueError(f"bad size expression {expr!r}")
        sign = -1 if m.group(1) == "-" else 1
        tok = m.group(2)
        total += sign * (env[tok] if tok in env else int(tok))
        pos = m.end()
    return total


def _expand(template, env):
    return _PLACEHOLDER.sub(lambda m: str(_eval_linear(m.group(1), env)), template)


@dataclass(frozen=True)
class CellCatalogEntry:
    orbit: Partition
    abar_rank: int
    specs: dict = field(hash=False)  # bit string -> SubgroupSpec
    note: str = ""

    def elements(self):
        r = self.abar_rank
        return [format(i, f"0{r}b") if r else "" for i in range(2**r)]

    def spec(self, x):
        try:
            return self.specs[x]
        except KeyError:
            raise MissingSpec(self.orbit.parts, x) from None

    @property
    def identity(self):
        return "0" * self.abar_rank


class Catalog:
    def __init__(self, data=None):
        self.families = []
        self.entries = {}
        if data is not None:
            self.merge(data)

    def merge(self, data):
        version = data.get("version", CATALOG_VERSION)
        if version != CATALOG_VERSION:
            raise ValueError(f"unsupported catalog version {version!r}")
        self.families.extend(data.get("families", []))
        for raw in data.get("entries", []):
            p = validate(raw["partition"], "C")
            specs = {k: SubgroupSpec.parse(v) for k, v in raw["specs"].items()}
            self.entries[p.parts] = CellCatalogEntry(p, int(raw["abar_rank"]), specs, raw.get("note", ""))

    def lookup(self, p):
        p = p if isinstance(p, Partition) and p.kind == "C" else validate(tuple(p), "C")
        if p.parts in self.entries:
            return self.entries[p.parts]
        fam = spherical_family(p)
        if fam is not None:
            for family in self.families:
                if family.get("shape") == "2^{2p} 1^{2q}":
                    env = {"p": fam[0], "q": fam[1]}
                    specs = {k: SubgroupSpec.parse(_expand(v, env)) for k, v in family["specs"].items()}
                    return CellCatalogEntry(p, int(family["abar_rank"]), specs, family.get("note", ""))
        raise NotInCatalog(p.parts)


def load_default():
    text = resources.files("orbitquant").joinpath("data/catalog.json").read_text()
    return Catalog(json.loads(text))


_default = None


def default_catalog():
    global _default
    if _default is None:
        _default = load_default()
    return _default


def load_catalog(path=None):
    """Shipped catalog, optionally overridden by the entries of the file at ``path``."""
    cat = load_default()
    if path is not None:
        with open(path) as fh:
            cat.merge(json.load(fh))
    return cat


def catalog_lookup(p, catalog=None):
    return (catalog or default_catalog()).lookup(p)
