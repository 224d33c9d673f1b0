"""Exact linear algebra over Q.

Vectors are sparse dicts {column key: rational}.  Two independent routes
are provided: a pure-Python incremental echelon form (used for submodule
closures and for the closed-form singular systems) and a FLINT-backed
nullspace/rank for the large oracle matrices.
"""
from math import lcm

import flint

from .scalars import Q


class Echelon:
    """Incrementally maintained reduced row echelon basis of a subspace.

    Rows are kept fully reduced: no row has a nonzero entry in another
    row's pivot column.  Pivots are chosen as the smallest key of a row.
    """

    def __init__(self):
        self.rows = {}  # pivot key -> row (pivot coefficient 1)

    def __len__(self):
        return len(self.rows)

    def reduce(self, vec: dict) -> dict:
        v = dict(vec)
        for key in [k for k in v if k in self.rows]:
            coeff = v.get(key)
            if not coeff:
                continue
            for k2, c2 in self.rows[key].items():
                value = v.get(k2, 0) - coeff * c2
                if value:
                    v[k2] = value
                else:
                    v.pop(k2, None)
        return v

    def add(self, vec: dict) -> bool:
        """Insert a vector; return True if it enlarged the span."""
        v = self.reduce(vec)
        if not v:
            return False
        pivot = min(v)
        inv = 1 / Q(v[pivot])
        v = {k: c * inv for k, c in v.items()}
        for p, row in self.rows.items():
            coeff = row.get(pivot)
            if coeff:
                for k2, c2 in v.items():
                    value = row.get(k2, 0) - coeff * c2
                    if value:
                        row[k2] = value
                    else:
                        row.pop(k2, None)
        self.rows[pivot] = v
        return True

    def contains(self, vec: dict) -> bool:
        return not self.reduce(vec)

    def pivots(self) -> list:
        return sorted(self.rows)

    def basis(self) -> list:
        return [dict(self.rows[p]) for p in sorted(self.rows)]


def rank_python(vectors) -> int:
    ech = Echelon()
    for v in vectors:
        ech.add(v)
    return len(ech)


def nullspace_python(rows, columns) -> list:
    """Kernel of the matrix with the given sparse rows, over the listed columns.

    Returns a basis as dicts {column: value}, one per free column, with the
    free column set to 1.
    """
    ech = Echelon()
    index = {c: i for i, c in enumerate(columns)}
    for row in rows:
        ech.add({index[c]: v for c, v in row.items() if v})
    pivots = set(ech.rows)
    out = []
    for j in range(len(columns)):
        if j in pivots:
            continue
        vec = {columns[j]: Q(1)}
        for p, row in ech.rows.items():
            coeff = row.get(j)
            if coeff:
                vec[columns[p]] = -coeff
        out.append(vec)
    return out


def _integer_rows(rows, index, ncols):
    entries = []
    for row in rows:
        dens = [Q(v).denominator for v in row.values()]
        scale = lcm(*[int(x) for x in dens]) if dens else 1
        dense = [0] * ncols
        for c, v in row.items():
            dense[index[c]] = int(Q(v) * scale)
        entries.append(dense)
    return entries


def nullspace_flint(rows, columns) -> list:
    """Kernel basis via FLINT's integer nullspace; same contract as nullspace_python.

    The basis returned is normalized so that it is the reduced basis with
    identity on the free columns, which makes both routes comparable.
    """
    ncols = len(columns)
    if ncols == 0:
        return []
    index = {c: i for i, c in enumerate(columns)}
    rows = [r for r in rows if any(r.values())]
    if not rows:
        return [{c: Q(1)} for c in columns]
    entries = _integer_rows(rows, index, ncols)
    mat = flint.fmpz_mat(len(entries), ncols, [x for r in entries for x in r])
    rref, _den, rank = mat.rref()
    # rref is scaled by a common denominator; read pivots and solve directly
    pivots = []
    lead = []
    for i in range(rank):
        for j in range(ncols):
            if rref[i, j] != 0:
                pivots.append(j)
                lead.append(rref[i, j])
                break
    pivot_set = set(pivots)
    out = []
    for j in range(ncols):
        if j in pivot_set:
            continue
        vec = {columns[j]: Q(1)}
        for i, p in enumerate(pivots):
            entry = rref[i, j]
            if entry != 0:
                vec[columns[p]] = -Q(int(entry), int(lead[i]))
        out.append(vec)
    return out


def rank_flint(vectors, columns=None) -> int:
    vectors = [v for v in vectors if v]
    if not vectors:
        return 0
    if columns is None:
        columns = sorted({k for v in vectors for k in v})
    index = {c: i for i, c in enumerate(columns)}
    entries = _integer_rows(vectors, index, len(columns))
    mat = flint.fmpz_mat(len(entries), len(columns), [x for r in entries for x in r])
    return mat.rank()


def in_span(basis, vec) -> bool:
    ech = Echelon()
    for v in basis:
        ech.add(v)
    return ech.contains(vec)
