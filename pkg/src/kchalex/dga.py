"""Knot contact homology DGAs: data model, JSON format and built-in examples.

Differentials are stored as commutative Laurent polynomials in the ring
variables and the chord generators.  Only degree-1 differentials are needed
downstream; degree-2 differentials are optional.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass, field
from importlib import resources
from typing import Mapping

from .algebra.multipoly import RING_VARS, MultiPoly
from .parser import ParseError, parse_expr

_IDENT = re.compile(r"[A-Za-z][A-Za-z0-9_]*\Z")
BUILTINS = ("unknot", "rh_trefoil")


class DGAError(ValueError):
    """Malformed or invalid DGA document."""

    def __init__(self, msg: str, generator: str | None = None):
        self.generator = generator
        super().__init__(f"{generator}: {msg}" if generator else msg)


@dataclass(frozen=True)
class Generator:
    name: str
    degree: int


@dataclass(frozen=True)
class DGA:
    name: str
    generators: tuple[Generator, ...]
    differentials: Mapping[str, MultiPoly]
    metadata: Mapping = field(default_factory=dict)

    @property
    def symtab(self) -> tuple[str, ...]:
        return RING_VARS + tuple(g.name for g in self.generators)

    def chords(self, degree: int) -> list[str]:
        """Generator names of the given degree, in declaration order."""
        return [g.name for g in self.generators if g.degree == degree]

    def degree_of(self, name: str) -> int:
        for g in self.generators:
            if g.name == name:
                return g.degree
        raise KeyError(name)

    def d(self, name: str) -> MultiPoly:
        return self.differentials[name]

    def has_degree2_differentials(self) -> bool:
        return any(name in self.differentials for name in self.chords(2))

    def to_document(self) -> dict:
        doc = {
            "name": self.name,
            "generators": [{"name": g.name, "degree": g.degree} for g in self.generators],
            "differentials": {k: str(v) for k, v in self.differentials.items()},
        }
        if self.metadata:
            doc["metadata"] = dict(self.metadata)
        return doc


def _validate_generators(dga: DGA) -> None:
    seen = set()
    for g in dga.generators:
        if not _IDENT.match(g.name):
            raise DGAError("not a valid identifier", g.name)
        if g.name in RING_VARS:
            raise DGAError("name is reserved for a ring variable", g.name)
        if g.name in seen:
            raise DGAError("duplicate generator name", g.name)
        if not isinstance(g.degree, int) or isinstance(g.degree, bool) or g.degree not in (0, 1, 2):
            raise DGAError(f"degree {g.degree!r} not in {{0, 1, 2}}", g.name)
        seen.add(g.name)


def dga_validate(dga: DGA) -> None:
    """Raise DGAError naming the offending generator, or return None."""
    _validate_generators(dga)
    degree = {g.name: g.degree for g in dga.generators}
    for name, poly in dga.differentials.items():
        if name not in degree:
            raise DGAError("differential given for an undeclared generator", name)
        if degree[name] == 0:
            raise DGAError("degree-0 generators have no differential", name)
        for v in poly.variables():
            if v in RING_VARS:
                continue
            if v not in degree:
                raise DGAError(f"differential references undeclared chord {v!r}", name)
            if degree[v] >= degree[name]:
                raise DGAError(f"differential references {v!r} of degree {degree[v]}", name)
            if degree[name] == 1 and degree[v] != 0:
                raise DGAError(f"degree-1 differential references non-degree-0 chord {v!r}", name)
    for g in dga.generators:
        if g.degree == 1 and g.name not in dga.differentials:
            raise DGAError("degree-1 generator has no differential", g.name)


def dga_from_document(doc: Mapping) -> DGA:
    if not isinstance(doc, Mapping):
        raise DGAError("document must be a JSON object")
    try:
        name = doc["name"]
        gens_raw = doc["generators"]
        diffs_raw = doc.get("differentials", {})
    except KeyError as e:
        raise DGAError(f"missing field {e.args[0]!r}") from None
    if not isinstance(name, str):
        raise DGAError("'name' must be a string")
    if not isinstance(gens_raw, list) or not isinstance(diffs_raw, Mapping):
        raise DGAError("'generators' must be a list and 'differentials' an object")
    gens = []
    for entry in gens_raw:
        if not isinstance(entry, Mapping) or "name" not in entry or "degree" not in entry:
            raise DGAError(f"bad generator entry {entry!r}")
        if not isinstance(entry["name"], str):
            raise DGAError(f"bad generator name {entry['name']!r}")
        gens.append(Generator(entry["name"], entry["degree"]))
    skeleton = DGA(name, tuple(gens), {})
    _validate_generators(skeleton)
    symtab = skeleton.symtab
    diffs = {}
    for gname, text in diffs_raw.items():
        try:
            diffs[gname] = parse_expr(text, symtab)
        except ParseError as e:
            raise DGAError(str(e), gname) from None
    metadata = doc.get("metadata", {})
    if not isinstance(metadata, Mapping):
        raise DGAError("'metadata' must be an object")
    dga = DGA(name, tuple(gens), diffs, dict(metadata))
    dga_validate(dga)
    return dga


def parse_dga(document: str) -> DGA:
    """Parse and validate a DGA JSON document."""
    try:
        doc = json.loads(document)
    except json.JSONDecodeError as e:
        raise DGAError(f"malformed JSON: {e}") from None
    return dga_from_document(doc)


def builtin_document(name: str) -> str:
    if name not in BUILTINS:
        raise KeyError(f"unknown built-in DGA {name!r}; known: {', '.join(BUILTINS)}")
    return resources.files("kchalex.data").joinpath(f"{name}.json").read_text()


def builtin_dga(name: str) -> DGA:
    return parse_dga(builtin_document(name))


def load_dga(path_or_name: str) -> DGA:
    """Read a DGA file, or a built-in when given ``builtin:<name>`` or a bare built-in name."""
    if path_or_name.startswith("builtin:"):
        return builtin_dga(path_or_name.split(":", 1)[1])
    if path_or_name in BUILTINS:
        return builtin_dga(path_or_name)
    with open(path_or_name) as fh:
        return parse_dga(fh.read())


def transform_ring_vars(dga: DGA, k: int = 0, l: int = 0, m: int = 0) -> DGA:
    """Framing and Q-splitting change of variables applied to every differential.

    (lambda, mu, Q) -> (lambda Q^l, lambda^k mu Q^m, Q).  Metadata is dropped
    since it refers to the original variables.
    """
    gens = dga.symtab
    lam, mu, Q = (MultiPoly.var(v, gens) for v in RING_VARS)
    sub = {"lambda": lam * Q ** l, "mu": lam ** k * mu * Q ** m}
    diffs = {name: p.substitute(sub) for name, p in dga.differentials.items()}
    return DGA(f"{dga.name}[k={k},l={l},m={m}]", dga.generators, diffs)
