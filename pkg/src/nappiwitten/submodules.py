"""Submodules generated by homogeneous vectors, and quotients by them.

The computation uses U(Ĥ₄) = U(N⁻) U(P), where N⁻ is spanned by the
lowering letters and P is the inducing subalgebra.  It runs in a closure
grading, doubled so that it stays integral:

    closure degree = 2 * natural degree - k2 * charge

with k2 chosen so that every mode of P has closure degree <= 0 and every
lowering letter has closure degree >= 1 (k2 = 2𝔠 for GV0, 2m+1 for GV1,
2m for THIRD).  Every nonzero vector then has closure degree >= 0.

Stage one closes the generators under single P-modes inside a finite
window of cells.  P = P₀ + P₋ by degree, and U(P)g = U(P₀)U(P₋)g.  Words in
P₋ only ever move the charge by at most the closure degree they drop.  In
P₀ the only charged modes are a(-m), b(m) for THIRD and a(-𝔠), b(𝔠) for GV0.
The THIRD pair satisfies [a, b] = μ̃, so a^(i+t) b^i = a^t p_i(ba) and its
span is a^t applied to a Krylov space of ba, and those paths leave the
charges between source and target by at most one.  The GV0 pair commutes
and is nilpotent on each closure slice, whose charges are bounded by the
degree.  So a charge margin of (max closure degree + 1) around the
generator and target charges is enough.

Stage two applies the PBW words of U(N⁻) that carry each stage-one cell to
the target cell, and row reduces the images.
"""
from .algebra import A, B, C, D, CENTRAL, GENERATORS, Mode, CHARGE
from .basis import graded_basis
from .errors import NotHomogeneous
from .linalg import Echelon
from .modules import GV0, GV1, HW, ModuleSpec, Quotient, Third, term_charge, term_natural_degree
from .straighten import act_terms, apply_mode


def closure_k2(spec: ModuleSpec) -> int:
    if isinstance(spec, Quotient):
        spec = spec.inner
    if spec.finite:
        return 0
    if isinstance(spec, GV0):
        return 2 * spec.m
    if isinstance(spec, GV1):
        return 2 * spec.m + 1
    if isinstance(spec, Third):
        return 2 * spec.m
    raise TypeError(f"no closure grading for {spec.describe()}")


def _closure_cell_of_term(spec, k2, word, label):
    q = term_charge(spec, word, label)
    return 2 * term_natural_degree(spec, word, label) - k2 * q, q


def _closure_cell(spec, k2, terms):
    cells = {_closure_cell_of_term(spec, k2, w, l) for (w, l) in terms}
    if len(cells) != 1:
        raise NotHomogeneous("generators must be nonzero and homogeneous")
    return cells.pop()


def _family_to_closure(spec, k2, cell, kappa=None):
    if kappa is None:
        kappa = spec.kappa_family
    deg, q = cell
    nat = deg + kappa * q
    return 2 * nat - k2 * q, q


def _p_modes(spec, k2, deg2):
    """P-modes (plus c(0), d(0)) that keep the closure degree >= 0 from deg2."""
    out = []
    for gen in GENERATORS:
        if spec.finite:
            x = Mode(gen, 0)
            if not spec.is_lowering(x):
                out.append(x)
            continue
        top = spec.lowering_top(gen)
        lo = top + 1
        # closure degree of x(n) is -2n - k2*charge; need deg2 + that >= 0
        hi = (deg2 - k2 * CHARGE[gen]) // 2
        for n in range(lo, hi + 1):
            out.append(Mode(gen, n))
    return out


def _nminus_words(spec, k2, e2, q):
    """Canonical N⁻ words of closure degree e2 and charge q."""
    twice = e2 + k2 * q
    if twice % 2:
        return []
    nat = twice // 2
    fam = nat - spec.kappa_family * q
    if spec.finite:
        fam = 0 if nat == 0 else None
        if fam is None:
            return []
    want = 0 if spec.indexed else HW
    return [w for (w, l) in graded_basis(spec, (fam, q)) if l == want]


def _stage_one(spec, k2, gens, target_cells):
    """Echelon bases of U(P)g on the cells the second stage needs."""
    gen_cells = [c for c, _ in gens]
    max_deg = max([c[0] for c in gen_cells] + [c[0] for c in target_cells])
    all_q = [c[1] for c in gen_cells] + [c[1] for c in target_cells]
    margin = max_deg + 1
    q_lo, q_hi = min(all_q) - margin, max(all_q) + margin
    cells = {}
    queue = []

    def push(cell, terms):
        if cells.setdefault(cell, Echelon()).add(terms):
            queue.append((cell, terms))

    for cell, terms in gens:
        push(cell, terms)
    while queue:
        cell, terms = queue.pop()
        deg2, q = cell
        for x in _p_modes(spec, k2, deg2):
            if x.gen == CENTRAL:
                continue
            tq = q + CHARGE[x.gen]
            if tq < q_lo or tq > q_hi:
                continue
            image = act_terms(spec, x, terms)
            if image:
                tcell = (deg2 - 2 * x.n - k2 * CHARGE[x.gen], tq)
                push(tcell, image)
    return cells


def submodule_echelon(spec: ModuleSpec, generators, cell, kappa=None) -> Echelon:
    """Row-reduced basis of (submodule generated by ``generators``) ∩ cell."""
    if isinstance(spec, Quotient):
        spec = spec.inner
    gens_terms = []
    for g in generators:
        terms = g._terms if hasattr(g, "_terms") else dict(g)
        if terms:
            gens_terms.append(terms)
    target = Echelon()
    if not gens_terms:
        return target
    k2 = closure_k2(spec)
    gens = [(_closure_cell(spec, k2, t), t) for t in gens_terms]
    t2 = _family_to_closure(spec, k2, cell, kappa)
    if t2[0] < 0:
        return target
    stage = _stage_one(spec, k2, gens, [t2])
    # the first stage finds each S-cell basis; apply N⁻ words into the target
    for (deg2, q), ech in stage.items():
        e2 = t2[0] - deg2
        if e2 < 0 or not ech:
            continue
        words = _nminus_words(spec, k2, e2, t2[1] - q)
        for row in ech.basis():
            for word in words:
                image = row
                for x in reversed(word):
                    image = act_terms(spec, x, image)
                    if not image:
                        break
                if image:
                    target.add(image)
    return target


def submodule_cell(spec: ModuleSpec, generators, cell, kappa=None):
    """Basis (list of ModuleVector) of the submodule's intersection with a cell."""
    from .vectors import ModuleVector

    base_spec = spec.inner if isinstance(spec, Quotient) else spec
    ech = submodule_echelon(base_spec, generators, cell, kappa)
    return [ModuleVector._raw(base_spec, row) for row in ech.basis()]


def quotient_cell(spec: Quotient, cell, kappa=None):
    """(dimension, representatives) of a cell of a quotient module.

    Representatives are the inner basis elements outside the pivot columns
    of the submodule's reduced echelon form.
    """
    from .vectors import ModuleVector

    inner = spec.inner
    basis = graded_basis(inner, cell, kappa)
    ech = submodule_echelon(inner, list(spec.generators), cell, kappa)
    pivots = set(ech.rows)
    reps = [ModuleVector._raw(inner, {key: 1}) for key in basis if key not in pivots]
    return len(basis) - len(ech), reps


def cell_dimension_any(spec: ModuleSpec, cell, kappa=None) -> int:
    """Cell dimension for any spec, quotients included."""
    if isinstance(spec, Quotient):
        return quotient_cell(spec, cell, kappa)[0]
    return len(graded_basis(spec, cell, kappa))
