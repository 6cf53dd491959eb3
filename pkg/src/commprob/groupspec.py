"""Group-spec documents: parsing, validation, and group construction.

A spec is a single JSON object:

    {
      "name": "GL2(F3)",
      "kind": "matrix",                     # or "permutation"
      "field": {"p": 3, "k": 1},            # matrix kind only; k > 1 adds
                                            #   "modulus": [c0, .., ck]
      "degree": 2,                          # matrix size / permutation domain
      "generators": [[[1,1],[0,1]], [[0,1],[1,0]]]
    }

Matrix entries are field-element indices (residues mod p for k = 1, base-p
digit encodings otherwise); permutation generators are image arrays.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from importlib import resources

from .errors import GroupSpecParseError, GroupSpecValidationError
from .fields import field_create, is_prime
from .groups import FiniteGroup, group_generate, matrix_element, permutation_element


@dataclass(frozen=True)
class FieldSpec:
    p: int
    k: int
    modulus: tuple[int, ...] | None = None


@dataclass(frozen=True)
class GroupSpec:
    name: str
    kind: str
    field: FieldSpec | None
    degree: int
    generators: tuple


def _fail(path: str, message: str):
    raise GroupSpecValidationError(f"{path}: {message}")


def parse_group_spec(document: str) -> GroupSpec:
    """Parse and validate a spec document, naming the offending field on error."""
    try:
        obj = json.loads(document)
    except json.JSONDecodeError as exc:
        raise GroupSpecParseError(f"not valid JSON: {exc}") from exc
    if not isinstance(obj, dict):
        raise GroupSpecParseError("top level must be a single object")

    name = obj.get("name")
    if not isinstance(name, str) or not name:
        _fail("name", "required non-empty string")
    kind = obj.get("kind")
    if kind not in ("matrix", "permutation"):
        _fail("kind", "must be 'matrix' or 'permutation'")
    degree = obj.get("degree")
    if not isinstance(degree, int) or degree < 1:
        _fail("degree", "required integer >= 1")
    gens = obj.get("generators")
    if not isinstance(gens, list) or not gens:
        _fail("generators", "required non-empty array")

    if kind == "permutation":
        if obj.get("field") is not None:
            _fail("field", "permutation specs take no field")
        for gi, gen in enumerate(gens):
            if not isinstance(gen, list) or len(gen) != degree:
                _fail(f"generators[{gi}]", f"image array of length {degree} required")
            if sorted(gen) != list(range(degree)):
                _fail(f"generators[{gi}]", "not a permutation of 0..degree-1")
        return GroupSpec(name, kind, None, degree, tuple(tuple(g) for g in gens))

    fobj = obj.get("field")
    if not isinstance(fobj, dict):
        _fail("field", "required object for matrix specs")
    p, k = fobj.get("p"), fobj.get("k", 1)
    if not isinstance(p, int) or p < 2:
        _fail("field.p", "required integer >= 2")
    if not is_prime(p):
        _fail("field.p", f"{p} is not prime")
    if not isinstance(k, int) or k < 1:
        _fail("field.k", "required integer >= 1")
    modulus = fobj.get("modulus")
    if modulus is not None and (
        not isinstance(modulus, list) or not all(isinstance(c, int) for c in modulus)
    ):
        _fail("field.modulus", "must be an integer array")
    try:
        field = field_create(p, k, tuple(modulus) if modulus is not None else None)
    except Exception as exc:
        _fail("field", str(exc))
    order = field.order
    norm_gens = []
    for gi, gen in enumerate(gens):
        if not isinstance(gen, list) or len(gen) != degree:
            _fail(f"generators[{gi}]", f"{degree} rows required")
        for ri, row in enumerate(gen):
            if not isinstance(row, list) or len(row) != degree:
                _fail(f"generators[{gi}][{ri}]", f"row of length {degree} required")
            for ci, x in enumerate(row):
                if not isinstance(x, int) or not 0 <= x < order:
                    _fail(
                        f"generators[{gi}][{ri}][{ci}]",
                        f"field index in [0, {order}) required",
                    )
        try:
            matrix_element(field, gen)
        except ValueError as exc:
            _fail(f"generators[{gi}]", str(exc))
        norm_gens.append(tuple(tuple(row) for row in gen))
    field_spec = FieldSpec(p, k, tuple(modulus) if modulus is not None else None)
    return GroupSpec(name, kind, field_spec, degree, tuple(norm_gens))


def build_group(spec: GroupSpec, cap: int = 20000) -> FiniteGroup:
    """Generate the finite group described by a validated spec."""
    if spec.kind == "permutation":
        gens = [permutation_element(g) for g in spec.generators]
    else:
        field = field_create(spec.field.p, spec.field.k, spec.field.modulus)
        gens = [matrix_element(field, g) for g in spec.generators]
    return group_generate(gens, cap=cap, name=spec.name)


def load_group_spec(path) -> GroupSpec:
    with open(path, "r", encoding="utf-8") as handle:
        return parse_group_spec(handle.read())


CORPUS_NAMES = ("s3", "d4", "q8", "s4", "gl2_f2", "gl2_f3", "gl3_f2")


def corpus_spec(name: str) -> GroupSpec:
    """One of the bundled group specs by short name."""
    if name not in CORPUS_NAMES:
        raise KeyError(f"unknown corpus spec {name!r}; have {CORPUS_NAMES}")
    text = resources.files("commprob").joinpath(f"corpus/{name}.json").read_text("utf-8")
    return parse_group_spec(text)


def corpus_group(name: str) -> FiniteGroup:
    return build_group(corpus_spec(name))
