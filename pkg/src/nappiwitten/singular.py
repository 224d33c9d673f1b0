"""Singular vectors: closed-form partition systems, a nullspace oracle, and a verifier.

A homogeneous vector is singular when the family's raising set kills it.
Raising sets::

    GV0(𝔠)   a(s >= -𝔠), b(r >= 𝔠),   c, d(l >= 1)
    GV1(m)   a(s >= -m), b(r >= m+1), c, d(l >= 1)
    THIRD(m) a(s >= 1-m), b(r >= m+1), c, d(l >= 1)

The closed-form systems are indexed by partitions of n.  B-side unknowns
are a_λ (λ ⊢ n) and b_{μ,r} (μ ⊢ n-r); A-side unknowns are c_{μ,r}.  The
shift s enters through the factors (s + λ_i); s = -n is the calibrated
value for every family and side.
"""
from dataclasses import dataclass, field

from .algebra import A, B, C, D, GENERATORS, Mode
from .basis import graded_basis
from .errors import AmbiguousSolution, NoDegeneracy, NotHomogeneous
from .linalg import nullspace_flint, nullspace_python
from .modules import GV1, HW, ModuleSpec, Quotient, Third, term_cell, term_charge, term_natural_degree
from .partitions import partitions_bounded, remove_part
from .scalars import Q
from .straighten import act_terms
from .vectors import ModuleVector

B_SIDE = "B_SIDE"
A_SIDE = "A_SIDE"


@dataclass(frozen=True)
class SingularVector:
    vector: ModuleVector
    cell: tuple
    certificate: tuple = field(default=())  # ((mode, image_is_zero), ...)

    @property
    def verified(self) -> bool:
        return all(ok for _, ok in self.certificate)


@dataclass
class SingularSystem:
    side: str
    n: int
    shift: object
    unknowns: list
    rows: list  # each row is {unknown: coefficient}; the system is row . x = 0

    def matrix(self):
        index = {u: i for i, u in enumerate(self.unknowns)}
        out = []
        for row in self.rows:
            dense = [Q(0)] * len(self.unknowns)
            for u, v in row.items():
                dense[index[u]] += v
            out.append(dense)
        return out


# raising modes

def raising_modes(spec: ModuleSpec, nat_degree: int, charge: int) -> list:
    """Raising modes that can act nonzero on a vector of the given bidegree.

    A mode whose image would sit below the natural-degree floor of the
    target charge annihilates by grading, so it is not listed.
    """
    if isinstance(spec, Quotient):
        spec = spec.inner
    out = []
    for gen in GENERATORS:
        lo = spec.raising_min(gen)
        if lo is None:
            continue
        ch = {A: 1, B: -1}.get(gen, 0)
        if spec.finite:
            if lo <= 0 and spec.has_charge(charge + ch):
                out.append(Mode(gen, 0))
            continue
        hi = nat_degree - spec.natural_floor(charge + ch)
        for n in range(lo, hi + 1):
            out.append(Mode(gen, n))
    return out


def _bidegree(spec, terms):
    cells = {(term_natural_degree(spec, w, l), term_charge(spec, w, l)) for (w, l) in terms}
    if len(cells) != 1:
        raise NotHomogeneous("candidate must be a nonzero homogeneous vector")
    return cells.pop()


def verify_singular(spec: ModuleSpec, candidate: ModuleVector) -> SingularVector:
    """Apply every in-range raising mode and record which images vanish."""
    if isinstance(spec, Quotient):
        spec = spec.inner
    nat, q = _bidegree(spec, candidate._terms)
    cert = []
    for x in raising_modes(spec, nat, q):
        cert.append((x, not act_terms(spec, x, candidate._terms)))
    cell = (nat - spec.kappa_family * q, q)
    return SingularVector(candidate, cell, tuple(cert))


def oracle_singular(spec: ModuleSpec, cell, kappa=None) -> list:
    """Basis of the singular subspace of a cell: the joint kernel of the raising modes.

    The basis is the reduced one (identity on the free columns), so it is
    deterministic.
    """
    if isinstance(spec, Quotient):
        spec = spec.inner
    basis = graded_basis(spec, cell, kappa)
    if not basis:
        return []
    w0, l0 = basis[0]
    nat, q = term_natural_degree(spec, w0, l0), term_charge(spec, w0, l0)
    rows = {}
    for x in raising_modes(spec, nat, q):
        for key in basis:
            for tkey, coeff in act_terms(spec, x, {key: 1}).items():
                rows.setdefault((x, tkey), {})[key] = coeff
    kernel = nullspace_flint(list(rows.values()), basis)
    return [ModuleVector._raw(spec, {k: v for k, v in vec.items() if v}) for vec in kernel]


# closed-form systems

def _distinct(parts):
    return sorted(set(parts), reverse=True)


def build_system(side: str, n: int, shift=None, zero_mode_terms=False) -> SingularSystem:
    """The partition-indexed linear system for the given side and weight n.

    With ``zero_mode_terms`` the A side also carries unknowns e_λ for the
    words c(-λ)a(-m), tied to the c-unknowns by q_i λ_i e_λ + c_{λ∖λ_i,λ_i} = 0.
    Those words vanish on a GV1 highest-weight vector, but not on the
    intermediate-series base of THIRD, where a(-m) acts invertibly.
    """
    if n < 1:
        raise ValueError("n must be positive")
    s = Q(-n) if shift is None else Q(shift)
    parts_list = partitions_bounded(n)
    pair_unknowns = []
    for r in range(n, 0, -1):
        for mu in partitions_bounded(n - r):
            pair_unknowns.append((mu, r))
    rows = []
    if side == B_SIDE:
        unknowns = [("a", lam) for lam in parts_list] + [("b", mu, r) for mu, r in pair_unknowns]
        for lam in parts_list:
            for li in _distinct(lam):
                qi = lam.count(li)
                rest = remove_part(lam, li)
                rows.append({("a", lam): Q(qi * li), ("b", rest, li): Q(-1)})
                row = {("b", rest, li): s + li}
                for lj in _distinct(lam):
                    rest2 = remove_part(rest, lj)
                    if rest2 is None:
                        continue  # multiplicity exhausted
                    key = ("b", rest2, li + lj)
                    row[key] = row.get(key, 0) + 1
                rows.append(row)
    elif side == A_SIDE:
        unknowns = [("c", mu, r) for mu, r in pair_unknowns]
        if zero_mode_terms:
            unknowns = [("e", lam) for lam in parts_list] + unknowns
        for lam in parts_list:
            distinct = _distinct(lam)
            for li in distinct:
                rest_i = remove_part(lam, li)
                if zero_mode_terms:
                    rows.append({("e", lam): Q(lam.count(li) * li), ("c", rest_i, li): Q(1)})
                for lj in distinct:
                    if lj == li:
                        continue
                    qi = lam.count(li)
                    rest_j = remove_part(lam, lj)
                    rest_ij = remove_part(rest_i, lj)
                    row = {("c", rest_j, lj): Q(qi * li)}
                    key = ("c", rest_ij, li + lj)
                    row[key] = row.get(key, 0) + 1
                    rows.append(row)
                row = {("c", rest_i, li): s + li}
                for lj in distinct:
                    rest2 = remove_part(rest_i, lj)
                    if rest2 is None:
                        continue
                    key = ("c", rest2, li + lj)
                    row[key] = row.get(key, 0) - 1
                rows.append(row)
    else:
        raise ValueError(f"unknown side {side!r}")
    rows = [{k: v for k, v in r.items() if v} for r in rows]
    return SingularSystem(side, n, s, unknowns, [r for r in rows if r])


def solve_system(system: SingularSystem) -> dict:
    """The unique solution up to scale, normalized at the first unknown with a nonzero value."""
    kernel = nullspace_python(system.rows, system.unknowns)
    if len(kernel) != 1:
        raise AmbiguousSolution(
            f"{system.side} system for n={system.n}, s={system.shift} has a "
            f"{len(kernel)}-dimensional solution space")
    sol = kernel[0]
    first = next(sol[u] for u in system.unknowns if sol.get(u))
    return {u: sol.get(u, Q(0)) / first for u in system.unknowns}


def degeneracy_value(spec: ModuleSpec):
    """c(0) eigenvalue minus m: 𝔠 - m for GV1 and μ̃ for THIRD."""
    if isinstance(spec, GV1):
        return spec.c - spec.m
    if isinstance(spec, Third):
        return spec.mu
    raise NoDegeneracy(f"closed forms exist only for GV1 and THIRD, not {spec.describe()}")


def check_degeneracy(spec: ModuleSpec, side: str, n: int):
    e = degeneracy_value(spec)
    want = -n if side == B_SIDE else n
    if e != want:
        if isinstance(spec, GV1):
            need = "c + n = m" if side == B_SIDE else "c = m + n"
        else:
            need = "mu = -n" if side == B_SIDE else "mu = n"
        raise NoDegeneracy(f"{spec.describe()} does not satisfy {need} for n={n}")


def closed_form_operator(spec: ModuleSpec, side: str, solution: dict) -> list:
    """The operator whose k-th power gives u^k, as [(coeff, modes), ...]."""
    m = spec.m
    out = []
    for u, coeff in solution.items():
        if not coeff:
            continue
        if u[0] == "a":
            modes = tuple(Mode(C, -p) for p in u[1]) + (Mode(B, m),)
        elif u[0] == "e":
            modes = tuple(Mode(C, -p) for p in u[1]) + (Mode(A, -m),)
        elif u[0] == "b":
            modes = tuple(Mode(C, -p) for p in u[1]) + (Mode(B, m - u[2]),)
        else:
            modes = tuple(Mode(C, -p) for p in u[1]) + (Mode(A, -u[2] - m),)
        out.append((coeff, modes))
    return out


def apply_operator(spec: ModuleSpec, operator, terms: dict) -> dict:
    out = {}
    for coeff, modes in operator:
        image = terms
        for x in reversed(modes):
            image = act_terms(spec, x, image)
            if not image:
                break
        for key, v in image.items():
            total = out.get(key, 0) + coeff * v
            if total:
                out[key] = total
            else:
                out.pop(key, None)
    return out


def solve_closed_form(spec: ModuleSpec, side: str, n: int, k: int = 1, base=HW,
                      shift=None, check=True, literal=False) -> SingularVector:
    """u^k from the closed-form system, normalized, with its certificate.

    ``check=False`` skips the degeneracy precondition; that is only meant
    for exploring the calibration of the shift.  On the A side of THIRD the
    c(-λ)a(-m) words are included unless ``literal`` is set, in which case
    only the c-unknown words are used (that vector fails verification).
    """
    if k < 1:
        raise ValueError("k must be positive")
    if check:
        check_degeneracy(spec, side, n)
    else:
        degeneracy_value(spec)
    spec.check_label(base)
    zero_mode = side == A_SIDE and isinstance(spec, Third) and not literal
    system = build_system(side, n, shift, zero_mode_terms=zero_mode)
    solution = solve_system(system)
    op = closed_form_operator(spec, side, solution)
    terms = {((), base): Q(1)}
    for _ in range(k):
        terms = apply_operator(spec, op, terms)
    vec = ModuleVector._raw(spec, terms)
    if not vec:
        raise NoDegeneracy("the closed-form vector vanishes on this base")
    return verify_singular(spec, vec.normalized())


def same_line(u: ModuleVector, v: ModuleVector) -> bool:
    """Whether two nonzero vectors are proportional."""
    if not u or not v or set(u.keys()) != set(v.keys()):
        return False
    key = next(iter(u.keys()))
    ratio = Q(u.coefficient(*key)) / v.coefficient(*key)
    return all(u.coefficient(*kk) == ratio * v.coefficient(*kk) for kk in u.keys())
