"""Enumeration of PBW basis elements cell by cell.

A cell is (degree, charge) in the family grading unless a kappa is given.
With the charge fixed, the number of b-letters is bounded because every
a- and b-letter costs at least its top-letter degree, and the two minimal
costs add up to a positive number in every family.  The excess degree over
the minimal costs is then distributed as partitions.
"""
from itertools import product

from . import config
from .algebra import A, B, C, D, Mode
from .errors import CellBudgetExceeded
from .modules import HW, ModuleSpec, Quotient, to_family_cell
from .partitions import partitions_bounded


def _letters(gen, degrees, spec_kappa):
    # degree -> index: a(s) has degree -s - kappa, b(r) has -r + kappa
    if gen == A:
        return tuple(sorted(Mode(A, -e - spec_kappa) for e in degrees))
    if gen == B:
        return tuple(sorted(Mode(B, spec_kappa - e) for e in degrees))
    return tuple(sorted(Mode(gen, -e) for e in degrees))


def _padded(parts, length, floor):
    return [floor + p for p in parts] + [floor] * (length - len(parts))


def _distribute(total, na, nb):
    """Yield (ea, eb, ec, ed) partitions whose weights add to total."""
    for wa in range(total + 1):
        pa_list = partitions_bounded(wa, na) if na else (((),) if wa == 0 else ())
        if not pa_list:
            continue
        for wb in range(total - wa + 1):
            pb_list = partitions_bounded(wb, nb) if nb else (((),) if wb == 0 else ())
            if not pb_list:
                continue
            for wc in range(total - wa - wb + 1):
                wd = total - wa - wb - wc
                for pa, pb, pc, pd in product(pa_list, pb_list, partitions_bounded(wc), partitions_bounded(wd)):
                    yield pa, pb, pc, pd


def _count_pairs(spec, degree, charge):
    """(na, nb, label, excess) candidates for a family-grading cell."""
    kf = spec.kappa_family
    da, db = spec.delta(A, kf), spec.delta(B, kf)
    if spec.indexed:
        # v_j has family degree 0 and charge j; words carry any charge
        out = []
        if da + db <= 0:
            raise AssertionError("non-positive letter costs")
        na = 0
        while na * da <= degree:
            nb = 0
            while na * da + nb * db <= degree:
                out.append((na, nb, charge - (na - nb), degree - na * da - nb * db))
                nb += 1
            na += 1
        return out
    out = []
    nb = max(0, -charge)
    while True:
        na = charge + nb
        base = na * da + nb * db
        if base > degree:
            break
        out.append((na, nb, HW, degree - base))
        nb += 1
    return out


def graded_basis(spec: ModuleSpec, cell, kappa=None, cap=None) -> list:
    """All PBW basis elements (word, label) of a cell, sorted lexicographically.

    ``cell`` is (degree, charge) in the family grading, or in the kappa
    grading when kappa is given.  Raises CellBudgetExceeded past the cap.
    """
    if isinstance(spec, Quotient):
        spec = spec.inner
    if cap is None:
        cap = config.cell_cap()
    if kappa is not None:
        cell = to_family_cell(spec, cell, kappa)
    degree, charge = cell
    if spec.finite:
        return _finite_basis(spec, degree, charge)
    kf = spec.kappa_family
    da, db = spec.delta(A, kf), spec.delta(B, kf)
    out = []
    for na, nb, label, excess in _count_pairs(spec, degree, charge):
        for pa, pb, pc, pd in _distribute(excess, na, nb):
            word = (_letters(D, pd, kf) + _letters(C, pc, kf)
                    + _letters(A, _padded(pa, na, da), kf) + _letters(B, _padded(pb, nb, db), kf))
            out.append((word, label))
            if len(out) > cap:
                raise CellBudgetExceeded(cell, cap)
    out.sort()
    return out


def _finite_basis(spec, degree, charge):
    if degree != 0:
        return []
    if spec.indexed:
        return [((), charge)]
    if charge > 0:
        return []
    return [((Mode(B, 0),) * (-charge), HW)]


def cell_dimension(spec: ModuleSpec, cell, kappa=None) -> int:
    return len(graded_basis(spec, cell, kappa))


def charge_range(spec: ModuleSpec, degree: int, kappa=None):
    """Charges with a nonempty cell at this degree.

    Returns None when infinitely many charges occur (indexed families, or a
    grading in which a letter of nonzero charge has degree <= 0).
    """
    if isinstance(spec, Quotient):
        spec = spec.inner
    if spec.indexed:
        return None
    if spec.finite:
        return None if degree == 0 else []
    if kappa is None:
        kappa = spec.kappa_family
    up, down = spec.delta(A, kappa), spec.delta(B, kappa)
    if up <= 0 or down <= 0:
        return None
    # floor(Q) = Q*up for Q >= 0 and -Q*down for Q < 0
    return [q for q in range(-(degree // down) - 1, degree // up + 2)
            if spec.floor(q, kappa) <= degree]
