"""Field modes of V(1,0) on restricted modules, the conformal vector, and checks.

A PBW monomial h(-n)u of V(1,0) acts through the iterate formula::

    (h(-n)u)_q w = sum_{j>=0} C(n+j-1, j) [ h(-n-j) u_{q+j} w
                                            - (-1)^n u_{q-n-j} h(j) w ]

with 1_q = δ_{q,-1}.  Both sums are finite: a mode u_k lowers the natural
degree by k + 1 - wt(u), and nothing survives below the natural-degree
floor of the target charge.
"""
from dataclasses import dataclass, field
from math import comb

from .algebra import A, B, C, D, CHARGE, Mode
from .basis import graded_basis
from .errors import InvalidSpec
from .modules import HW, ModuleSpec, Quotient, term_charge, term_natural_degree, vacuum
from .scalars import Q
from .straighten import act_terms, apply_mode
from .vectors import ModuleVector, add_into

VACUUM0 = vacuum(0)

_FIELD_CACHES: dict = {}


def _spec_of(spec):
    if isinstance(spec, Quotient):
        spec = spec.inner
    if spec.finite:
        raise InvalidSpec(f"{spec.describe()} is a module over H4, not a restricted Ĥ4-module")
    return spec


@dataclass(frozen=True)
class FieldProgram:
    """Evaluation plan for Y(v, x) of a PBW monomial of V(1,0).

    ``factors`` lists (generator, n) for h(-n), outermost first; the field
    is the right-nested normally ordered product of the derivatives
    ∂^(n-1) h(x) / (n-1)!.
    """

    word: tuple
    factors: tuple = field(init=False)
    weight: int = field(init=False)
    charge: int = field(init=False)

    def __post_init__(self):
        object.__setattr__(self, "factors", tuple((x.gen, -x.n) for x in self.word))
        object.__setattr__(self, "weight", sum(-x.n for x in self.word))
        object.__setattr__(self, "charge", sum(CHARGE[x.gen] for x in self.word))

    def mode_terms(self, spec, q: int, wkey) -> dict:
        return _monomial_mode(spec, _cache(spec), self.word, q, wkey)


def compile_field(word) -> FieldProgram:
    return FieldProgram(tuple(word))


def _cache(spec):
    c = _FIELD_CACHES.get(spec)
    if c is None:
        c = _FIELD_CACHES.setdefault(spec, {})
    return c


def clear_caches():
    _FIELD_CACHES.clear()


def mode_bound(spec, nat: int, charge: int, weight: int, vcharge: int) -> int:
    """Largest k with u_k w possibly nonzero, for u of weight/charge (weight, vcharge)."""
    return nat + weight - 1 - spec.natural_floor(charge + vcharge)


def _monomial_mode(spec, cache, vword, q, wkey):
    key = (vword, q, wkey)
    hit = cache.get(key)
    if hit is not None:
        return hit
    if not vword:
        result = {wkey: 1} if q == -1 else {}
        cache[key] = result
        return result
    word, label = wkey
    nat = term_natural_degree(spec, word, label)
    ch = term_charge(spec, word, label)
    h, rest = vword[0], vword[1:]
    n = -h.n
    wt_rest = sum(-x.n for x in rest)
    q_rest = sum(CHARGE[x.gen] for x in rest)
    if q > mode_bound(spec, nat, ch, wt_rest + n, q_rest + CHARGE[h.gen]):
        cache[key] = {}
        return cache[key]
    result = {}
    kmax = mode_bound(spec, nat, ch, wt_rest, q_rest)
    for j in range(0, kmax - q + 1):
        inner = _monomial_mode(spec, cache, rest, q + j, wkey)
        if not inner:
            continue
        coeff = comb(n + j - 1, j)
        x = Mode(h.gen, -n - j)
        for k2, c2 in inner.items():
            add_into(result, apply_mode(spec, x, k2[0], k2[1]), coeff * c2)
    jmax = nat - spec.natural_floor(ch + CHARGE[h.gen])
    sign = 1 if n % 2 else -1  # -(-1)^n
    for j in range(0, jmax + 1):
        hw = apply_mode(spec, Mode(h.gen, j), word, label)
        if not hw:
            continue
        coeff = sign * comb(n + j - 1, j)
        for k2, c2 in hw.items():
            add_into(result, _monomial_mode(spec, cache, rest, q - n - j, k2), coeff * c2)
    cache[key] = result
    return result


def field_mode_terms(spec, vterms: dict, q: int, wterms: dict) -> dict:
    cache = _cache(spec)
    out = {}
    for (vword, _), cv in vterms.items():
        for wkey, cw in wterms.items():
            add_into(out, _monomial_mode(spec, cache, vword, q, wkey), cv * cw)
    return out


def field_mode(spec: ModuleSpec, v: ModuleVector, n: int, w: ModuleVector) -> ModuleVector:
    """v_n w: the x^(-n-1) coefficient of Y_W(v, x) w."""
    spec = _spec_of(spec)
    if v.spec != VACUUM0:
        raise InvalidSpec("the field vector must live in V(1,0) = VACUUM(0)")
    return ModuleVector._raw(spec, field_mode_terms(spec, v._terms, n, w._terms))


def va(word=()) -> ModuleVector:
    """The PBW monomial word·1 of V(1,0)."""
    return ModuleVector(VACUUM0, {(tuple(word), HW): 1})


def generator_vector(gen: int) -> ModuleVector:
    """h(-1)1 for a generator h."""
    return va((Mode(gen, -1),))


def omega() -> ModuleVector:
    """The conformal vector at level 1."""
    half = Q(1, 2)
    return ModuleVector(VACUUM0, {
        ((Mode(A, -1), Mode(B, -1)), HW): 1,
        ((Mode(D, -1), Mode(C, -1)), HW): 1,
        ((Mode(C, -2),), HW): -half,
        ((Mode(C, -1), Mode(C, -1)), HW): -half,
    })


_OMEGA = None


def _omega_terms():
    global _OMEGA
    if _OMEGA is None:
        _OMEGA = omega()._terms
    return _OMEGA


def virasoro_terms(spec, n: int, wterms: dict) -> dict:
    return field_mode_terms(spec, _omega_terms(), n + 1, wterms)


def virasoro(spec: ModuleSpec, n: int, w: ModuleVector) -> ModuleVector:
    """L(n) w = ω_{n+1} w."""
    spec = _spec_of(spec)
    return ModuleVector._raw(spec, virasoro_terms(spec, n, w._terms))


def vector_weight(v: ModuleVector):
    """(natural degree, charge) of a homogeneous V(1,0) vector."""
    cells = {(term_natural_degree(v.spec, w, l), term_charge(v.spec, w, l)) for (w, l) in v.keys()}
    if len(cells) != 1:
        raise ValueError("vector is not homogeneous")
    return cells.pop()


def gbinom(p: int, i: int):
    """Binomial coefficient C(p, i) for any integer p and i >= 0."""
    out = Q(1)
    for t in range(i):
        out = out * (p - t) / (t + 1)
    return out


@dataclass
class CheckReport:
    relation: str
    window: dict
    status: str
    checked: int = 0
    counterexample: dict = None

    @property
    def passed(self) -> bool:
        return self.status == "pass"

    def to_json(self):
        out = {"relation": self.relation, "window": self.window, "status": self.status,
               "checked": self.checked}
        if self.counterexample is not None:
            out["counterexample"] = self.counterexample
        return out


def _diff(a: dict, b: dict) -> dict:
    return add_into(dict(a), b, -1)


def borcherds_sides(spec, u: ModuleVector, v: ModuleVector, p: int, q: int, wterms: dict):
    """Both sides of [u_p, v_q] w = sum_i C(p,i) (u_i v)_{p+q-i} w."""
    lhs = _diff(field_mode_terms(spec, u._terms, p, field_mode_terms(spec, v._terms, q, wterms)),
                field_mode_terms(spec, v._terms, q, field_mode_terms(spec, u._terms, p, wterms)))
    wu, _ = vector_weight(u)
    wv, _ = vector_weight(v)
    rhs = {}
    for i in range(0, wu + wv):
        uv = field_mode_terms(VACUUM0, u._terms, i, v._terms)
        if not uv:
            continue
        add_into(rhs, field_mode_terms(spec, uv, p + q - i, wterms), gbinom(p, i))
    return lhs, rhs


def check_borcherds(spec: ModuleSpec, u: ModuleVector, v: ModuleVector, p: int, q: int,
                    cell, kappa=None) -> CheckReport:
    """Verify the commutator formula on every basis vector of a cell."""
    from .serialize import vector_to_json

    spec = _spec_of(spec)
    window = {"p": p, "q": q, "cell": list(cell), "spec": spec.describe()}
    count = 0
    for key in graded_basis(spec, cell, kappa):
        lhs, rhs = borcherds_sides(spec, u, v, p, q, {key: 1})
        count += 1
        if lhs != rhs:
            w = ModuleVector._raw(spec, {key: 1})
            return CheckReport("borcherds-commutator", window, "fail", count, {
                "w": vector_to_json(w),
                "lhs": vector_to_json(ModuleVector._raw(spec, lhs)),
                "rhs": vector_to_json(ModuleVector._raw(spec, rhs)),
            })
    return CheckReport("borcherds-commutator", window, "pass", count)


def virasoro_defect(spec, m: int, n: int, wterms: dict) -> dict:
    """[L(m), L(n)]w - (m-n)L(m+n)w - δ_{m+n,0} (m^3-m)/3 w; zero when the relation holds."""
    lhs = _diff(virasoro_terms(spec, m, virasoro_terms(spec, n, wterms)),
                virasoro_terms(spec, n, virasoro_terms(spec, m, wterms)))
    add_into(lhs, virasoro_terms(spec, m + n, wterms), -(m - n))
    if m + n == 0:
        add_into(lhs, wterms, -Q(m ** 3 - m, 3))
    return lhs


def check_virasoro(spec: ModuleSpec, max_degree: int, mrange=range(-3, 4), kappa=None,
                   charges=None) -> CheckReport:
    """[L(m), L(n)] = (m-n)L(m+n) + (m^3-m)/3 δ_{m+n,0} on all basis vectors up to max_degree.

    Without a charge window (qmin, qmax) every charge is used, which needs
    finitely many charges per degree.  Pairs with m = n are skipped: both
    sides vanish identically.
    """
    from .basis import charge_range
    from .serialize import vector_to_json

    spec = _spec_of(spec)
    window = {"max_degree": max_degree, "m": [min(mrange), max(mrange)], "spec": spec.describe()}
    if charges is not None:
        window["charges"] = list(charges)
        cells = [(deg, q) for q in range(charges[0], charges[1] + 1)
                 for deg in range(spec.floor(q, kappa), max_degree + 1)]
    else:
        cells = []
        for deg in range(spec.floor(0, kappa), max_degree + 1):
            qs = charge_range(spec, deg, kappa)
            if qs is None:
                raise InvalidSpec("Virasoro check needs a charge window for this module")
            cells.extend((deg, q) for q in qs)
    count = 0
    for cell in cells:
        for key in graded_basis(spec, cell, kappa):
            for m in mrange:
                for n in mrange:
                    if m == n:
                        continue
                    defect = virasoro_defect(spec, m, n, {key: 1})
                    count += 1
                    if defect:
                        return CheckReport("virasoro", window, "fail", count, {
                            "m": m, "n": n,
                            "w": vector_to_json(ModuleVector._raw(spec, {key: 1})),
                            "defect": vector_to_json(ModuleVector._raw(spec, defect)),
                        })
    return CheckReport("virasoro", window, "pass", count)


def mixed_defect(spec, gen: int, n: int, m: int, wterms: dict) -> dict:
    """[h(n), L(m)]w - n h(m+n) w."""
    h = Mode(gen, n)
    out = _diff(_act(spec, h, virasoro_terms(spec, m, wterms)),
                virasoro_terms(spec, m, _act(spec, h, wterms)))
    add_into(out, _act(spec, Mode(gen, m + n), wterms), -n)
    return out


def _act(spec, x, terms):
    return act_terms(spec, x, terms)
