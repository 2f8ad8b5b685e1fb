"""Workspace files and canonical report serialization.

A workspace is a single JSON file with named entities sharing one host:

    {"version": "1", "host": {...}, "cochains": {...}, "algebras": {...},
     "frobenius": {...}, "modules": {...}, "objects": {...}}

Reports are emitted as key-sorted compact JSON so identical inputs give
identical bytes.  Grade tuples become comma-joined strings as JSON keys;
scalars in reports use the literal grammar of scalars.parse_scalar.
"""

from __future__ import annotations

import json

from .cohomology import (
    CheckReport,
    Cochain1,
    Cochain2,
    Cochain3,
    FinAbGroup,
)
from .galg import FrobeniusData, GradedAlgebra
from .gmod import Bimodule, LeftModule, RightModule
from .hostcat import (
    Grading,
    HostError,
    HostMorphism,
    host_from_json,
    morphism_from_json,
    object_from_json,
)
from .scalars import CyclotomicScalar, ScalarError, scalar_to_json

__all__ = [
    "SchemaError",
    "Workspace",
    "canonical_json",
    "encode_report",
    "algebra_from_json",
    "frobenius_from_json",
    "module_from_json",
]

WORKSPACE_VERSION = "1"


class SchemaError(ValueError):
    """Input does not match the documented schema; carries the JSON path."""

    def __init__(self, path: str, message: str):
        super().__init__(f"{path}: {message}")
        self.path = path


def grade_key(g) -> str:
    return ",".join(str(int(x)) for x in g)


def encode_report(value):
    """Make a report JSON-serializable, deterministically."""
    if isinstance(value, CyclotomicScalar):
        return scalar_to_json(value)
    if isinstance(value, CheckReport):
        return encode_report(value.to_json())
    if isinstance(value, (HostMorphism, FinAbGroup, Grading)):
        return value.to_json()
    if isinstance(value, (Cochain1, Cochain2, Cochain3)):
        return value.to_json()
    if isinstance(value, GradedAlgebra):
        return value.to_json()
    if isinstance(value, FrobeniusData):
        return value.to_json()
    if hasattr(value, "to_json") and not isinstance(value, type):
        return encode_report(value.to_json())
    if isinstance(value, dict):
        out = {}
        for k, v in value.items():
            if isinstance(k, tuple):
                k = grade_key(k)
            elif not isinstance(k, str):
                k = str(k)
            out[k] = encode_report(v)
        return out
    if isinstance(value, (list, tuple)):
        return [encode_report(v) for v in value]
    if value is None or isinstance(value, (bool, int, float, str)):
        return value
    raise TypeError(f"cannot encode {type(value).__name__} into a report")


def canonical_json(data) -> str:
    return json.dumps(encode_report(data), sort_keys=True,
                      separators=(",", ":"), ensure_ascii=False) + "\n"


def algebra_from_json(ctx, data) -> GradedAlgebra:
    carrier = object_from_json(ctx, data["carrier"])
    grading = Grading.from_json(data["grading"])
    mul = morphism_from_json(ctx, data["mul"])
    unit = morphism_from_json(ctx, data["unit"])
    return GradedAlgebra(carrier, grading, mul, unit)


def frobenius_from_json(ctx, data) -> FrobeniusData:
    return FrobeniusData(
        comul=morphism_from_json(ctx, data["comul"]),
        counit=morphism_from_json(ctx, data["counit"]),
    )


def module_from_json(ctx, data, algebra: GradedAlgebra):
    kind = data.get("kind", "right")
    if kind == "bi":
        left = morphism_from_json(ctx, data["left_action"])
        right = morphism_from_json(ctx, data["right_action"])
        carrier = object_from_json(ctx, data["carrier"])
        grading = Grading.from_json(data["module_grading"])
        return Bimodule(algebra, carrier, grading, left, right)
    carrier = object_from_json(ctx, data["carrier"])
    grading = Grading.from_json(data["module_grading"])
    action = morphism_from_json(ctx, data["action"])
    cls = RightModule if kind == "right" else LeftModule
    if kind not in ("right", "left"):
        raise ValueError(f"unknown module kind {kind!r}")
    return cls(algebra, carrier, grading, action)


_SECTIONS = ("cochains", "algebras", "frobenius", "modules", "objects")


class Workspace:
    """A parsed workspace file with lazy, cached entity constructors."""

    def __init__(self, data, source: str = "workspace"):
        self.source = source
        if not isinstance(data, dict):
            raise SchemaError(source, "workspace must be a JSON object")
        if data.get("version") != WORKSPACE_VERSION:
            raise SchemaError(f"{source}.version",
                              f"expected {WORKSPACE_VERSION!r}, got {data.get('version')!r}")
        if "host" not in data:
            raise SchemaError(f"{source}.host", "missing host")
        try:
            self.ctx = host_from_json(data["host"])
        except (HostError, ScalarError, ValueError, KeyError, TypeError) as err:
            raise SchemaError(f"{source}.host", str(err)) from err
        for section in _SECTIONS:
            if section in data and not isinstance(data[section], dict):
                raise SchemaError(f"{source}.{section}", "must be an object of named entries")
        self.data = data
        self._cache: dict = {}

    @classmethod
    def load(cls, filename: str) -> "Workspace":
        try:
            with open(filename, "r", encoding="utf-8") as fh:
                data = json.load(fh)
        except OSError as err:
            raise SchemaError(str(filename), f"cannot read file: {err}") from err
        except json.JSONDecodeError as err:
            raise SchemaError(str(filename), f"invalid JSON: {err}") from err
        return cls(data, source=str(filename))

    def _entry(self, section: str, name: str):
        table = self.data.get(section, {})
        if name not in table:
            known = ", ".join(sorted(table)) or "none defined"
            raise SchemaError(f"{self.source}.{section}.{name}",
                              f"not found (known: {known})")
        return table[name]

    def _build(self, section: str, name: str, builder, cache_key=None):
        key = cache_key if cache_key is not None else (section, name)
        if key not in self._cache:
            raw = self._entry(section, name)
            try:
                self._cache[key] = builder(raw)
            except SchemaError:
                raise
            except (HostError, ScalarError, ValueError, KeyError, TypeError) as err:
                raise SchemaError(f"{self.source}.{section}.{name}", str(err)) from err
        return self._cache[key]

    def cochain(self, name: str, degree: int = 2):
        cls = {1: Cochain1, 2: Cochain2, 3: Cochain3}[degree]
        return self._build("cochains", name, cls.from_json,
                           cache_key=("cochains", name, degree))

    def algebra(self, name: str) -> GradedAlgebra:
        return self._build("algebras", name,
                           lambda raw: algebra_from_json(self.ctx, raw))

    def frobenius(self, name: str) -> FrobeniusData:
        return self._build("frobenius", name,
                           lambda raw: frobenius_from_json(self.ctx, raw))

    def module(self, name: str):
        def build(raw):
            if "algebra_ref" in raw:
                alg = self.algebra(raw["algebra_ref"])
            elif "algebra" in raw:
                alg = algebra_from_json(self.ctx, raw["algebra"])
            else:
                raise ValueError("module needs algebra_ref or an inline algebra")
            return module_from_json(self.ctx, raw, alg)
        return self._build("modules", name, build)

    def object(self, name: str):
        return self._build("objects", name,
                           lambda raw: object_from_json(self.ctx, raw))

    def object_names(self):
        return sorted(self.data.get("objects", {}))
