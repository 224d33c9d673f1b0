"""Bi-graded character tables, their comparison, and an on-disk cell cache.

A window is (max_degree, charges, kappa): cells (D, Q) with Q in the
charge range and floor(Q) <= D <= max_degree, graded by kappa (the family
grading when kappa is None).  ``charges=None`` means every charge, which
is only allowed when each degree has finitely many.
"""
import hashlib
import json
import os
import tempfile
from dataclasses import dataclass, field

from . import __version__
from .basis import charge_range, graded_basis
from .errors import InvalidSpec, WindowMismatch, WindowRequired
from .modules import ModuleSpec, Quotient
from .serialize import SCHEMA_VERSION, dumps, spec_to_json
from .submodules import cell_dimension_any


@dataclass(frozen=True)
class Window:
    max_degree: int
    charges: tuple = None  # (qmin, qmax) or None for all charges
    kappa: int = None

    def to_json(self, spec=None) -> dict:
        kappa = self.kappa
        if kappa is None and spec is not None:
            kappa = _inner(spec).kappa_family
        return {"max_degree": self.max_degree,
                "charges": list(self.charges) if self.charges is not None else None,
                "kappa": kappa}


def _inner(spec):
    return spec.inner if isinstance(spec, Quotient) else spec


@dataclass
class CharacterTable:
    spec: str
    window: dict
    dims: dict = field(default_factory=dict)  # (degree, charge) -> dimension

    @classmethod
    def from_dims(cls, spec: str, window: dict, dims: dict) -> "CharacterTable":
        return cls(spec, dict(window), {tuple(k): int(v) for k, v in dims.items()})

    def by_degree(self) -> list:
        """Dimensions summed over charges, for degrees 0..max_degree."""
        top = self.window["max_degree"]
        out = [0] * (top + 1)
        for (deg, _), dim in self.dims.items():
            if 0 <= deg <= top:
                out[deg] += dim
        return out

    def nonzero(self) -> dict:
        return {k: v for k, v in self.dims.items() if v}

    def to_json(self) -> dict:
        return {"schema": SCHEMA_VERSION, "spec": self.spec, "window": self.window,
                "cells": [{"cell": list(k), "dim": v} for k, v in sorted(self.nonzero().items())]}

    @classmethod
    def from_json(cls, obj) -> "CharacterTable":
        return cls(obj["spec"], obj["window"], {tuple(c["cell"]): c["dim"] for c in obj["cells"]})


class CellCache:
    """Content-addressed per-cell dimensions.

    Each entry is a JSON file named by the hash of (spec, cell, kappa,
    engine version, schema).  Writes go to a temporary file that is then
    renamed, so readers never see a partial entry.  Entries whose schema or
    engine version differ are ignored.
    """

    def __init__(self, directory):
        self.directory = str(directory)
        os.makedirs(self.directory, exist_ok=True)

    @staticmethod
    def key(spec, cell, kappa) -> str:
        payload = dumps({"spec": spec_to_json(spec), "cell": list(cell), "kappa": kappa,
                         "engine": __version__, "schema": SCHEMA_VERSION})
        return hashlib.sha256(payload.encode("utf-8")).hexdigest()

    def _path(self, key):
        return os.path.join(self.directory, key[:2], key + ".json")

    def get(self, spec, cell, kappa):
        key = self.key(spec, cell, kappa)
        try:
            with open(self._path(key), encoding="utf-8") as fh:
                entry = json.load(fh)
        except (OSError, ValueError):
            return None
        if entry.get("schema") != SCHEMA_VERSION or entry.get("engine") != __version__:
            return None
        if entry.get("key") != key:
            return None
        return entry.get("dim")

    def put(self, spec, cell, kappa, dim: int):
        key = self.key(spec, cell, kappa)
        path = self._path(key)
        os.makedirs(os.path.dirname(path), exist_ok=True)
        entry = dumps({"schema": SCHEMA_VERSION, "engine": __version__, "key": key, "dim": dim})
        fd, tmp = tempfile.mkstemp(dir=os.path.dirname(path), suffix=".tmp")
        try:
            with os.fdopen(fd, "w", encoding="utf-8") as fh:
                fh.write(entry)
            os.replace(tmp, path)
        except BaseException:
            if os.path.exists(tmp):
                os.unlink(tmp)
            raise


def window_cells(spec: ModuleSpec, window: Window) -> list:
    inner = _inner(spec)
    kappa = window.kappa if window.kappa is not None else inner.kappa_family
    if window.charges is not None:
        qmin, qmax = window.charges
        cells = []
        for q in range(qmin, qmax + 1):
            if not inner.has_charge(q):
                continue
            for deg in range(inner.floor(q, kappa), window.max_degree + 1):
                cells.append((deg, q))
        return cells
    cells = []
    for deg in range(0, window.max_degree + 1):
        qs = charge_range(inner, deg, kappa)
        if qs is None:
            raise WindowRequired(f"{inner.describe()} has infinitely many charges in degree {deg}"
                              " for this grading; give a charge window")
        cells.extend((deg, q) for q in qs)
    low = [c for c in cells if c[0] < 0]
    if low:
        raise WindowRequired("negative-degree cells need an explicit charge window")
    return cells


def _cell_dim(spec, cell, kappa):
    if isinstance(spec, Quotient):
        return cell_dimension_any(spec, cell, kappa)
    return len(graded_basis(spec, cell, kappa))


def character(spec: ModuleSpec, window: Window, cache: CellCache = None, workers: int = 1) -> CharacterTable:
    """Character table of a spec over a window (quotients included)."""
    inner = _inner(spec)
    kappa = window.kappa if window.kappa is not None else inner.kappa_family
    cells = window_cells(spec, window)
    dims = {}
    todo = []
    for cell in cells:
        hit = cache.get(spec, cell, kappa) if cache is not None else None
        if hit is not None:
            dims[cell] = hit
        else:
            todo.append(cell)
    if workers > 1 and len(todo) > 1:
        from concurrent.futures import ThreadPoolExecutor

        with ThreadPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(lambda c: _cell_dim(spec, c, kappa), todo))
    else:
        results = [_cell_dim(spec, c, kappa) for c in todo]
    for cell, dim in zip(todo, results):
        dims[cell] = dim
        if cache is not None:
            cache.put(spec, cell, kappa, dim)
    desc = spec.describe()
    return CharacterTable.from_dims(desc, window.to_json(spec), dims)


def compare_characters(first: CharacterTable, second: CharacterTable) -> dict:
    """{"equal": True} or the first differing cell, in sorted cell order."""
    if first.window != second.window:
        raise WindowMismatch(f"windows differ: {first.window} vs {second.window}")
    for cell in sorted(set(first.dims) | set(second.dims)):
        x, y = first.dims.get(cell, 0), second.dims.get(cell, 0)
        if x != y:
            return {"equal": False, "cell": list(cell), "first": x, "second": y}
    return {"equal": True}


def flowed_character_table(spec: ModuleSpec, alpha, window: Window, sample=None):
    """Character of W^(α) in the grading of its predicted target, over a charge window."""
    from .lattice import flowed_character, predicted_flow_target

    if window.charges is None:
        raise InvalidSpec("flowed characters need a charge window")
    target = predicted_flow_target(_inner(spec), alpha)
    if window.kappa is not None and window.kappa != target.kappa_family:
        raise InvalidSpec("flowed characters are computed in the target's family grading")
    table, checked = flowed_character(_inner(spec), alpha, target,
                                      (window.max_degree, *window.charges), sample=sample)
    table.window = Window(window.max_degree, tuple(window.charges), target.kappa_family).to_json()
    return table, target, checked
