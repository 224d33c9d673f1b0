"""The lattice L = Zc + Zd, spectral flow, and the extension vertex operators.

For α = m1 c + m2 d the operators α(n) = m1 c(n) + m2 d(n) are used with

    E^+(α, z) = exp( sum_{n>=1} α(n)/n z^(-n) )
    E^-(α, z) = exp( sum_{n>=1} α(-n)/(-n) z^n )
    Δ(α, z)  = z^(α(0)) E^+(-α, -z)

A LaurentVector is a dict {exponent of z: ModuleVector}.
"""
from dataclasses import dataclass
from typing import NamedTuple

from .algebra import C, D, Mode
from .basis import graded_basis
from .errors import InvalidSpec, NonIntegralEigenvalue, WindowRequired
from .modules import (GV0, GV1, HW, ModuleSpec, Quotient, Third, term_charge,
                      term_natural_degree)
from .scalars import Q, format_scalar, is_integral
from .straighten import act_terms
from .vectors import ModuleVector, add_into
from .voa import VACUUM0, _spec_of, field_mode_terms, mode_bound, omega


class Lattice(NamedTuple):
    m1: int  # coefficient of c
    m2: int  # coefficient of d

    def __neg__(self):
        return Lattice(-self.m1, -self.m2)

    def __add__(self, other):
        return Lattice(self.m1 + other[0], self.m2 + other[1])

    def __repr__(self):
        return f"{self.m1}c{'+' if self.m2 >= 0 else ''}{self.m2}d"


def lattice(alpha) -> Lattice:
    m1, m2 = alpha
    if int(m1) != m1 or int(m2) != m2:
        raise InvalidSpec(f"lattice elements have integer coordinates, got {alpha!r}")
    return Lattice(int(m1), int(m2))


def pairing(alpha, beta) -> int:
    """(α, β) = m1 n2 + m2 n1, since (c,c) = (d,d) = 0 and (c,d) = 1."""
    return alpha[0] * beta[1] + alpha[1] * beta[0]


def cocycle(alpha, beta) -> int:
    """ε(α, β) = (-1)^(m1 n2): bimultiplicative with ε(c,d) = -1, ε(d,c) = ε(c,c) = ε(d,d) = 1."""
    return -1 if (alpha[0] * beta[1]) % 2 else 1


# Heisenberg part

def alpha_modes(alpha, n: int):
    out = []
    if alpha[0]:
        out.append((Mode(C, n), alpha[0]))
    if alpha[1]:
        out.append((Mode(D, n), alpha[1]))
    return out


def _alpha_act(spec, alpha, n, terms):
    out = {}
    for x, coeff in alpha_modes(alpha, n):
        add_into(out, act_terms(spec, x, terms), coeff)
    return out


def alpha_zero_eigen(spec, alpha, key):
    """Eigenvalue of α(0) on a basis term: m1 c(0) + m2 d(0), with d(0) shifted by the word charge."""
    word, label = key
    charge = sum(1 if x.gen == 2 else -1 if x.gen == 3 else 0 for x in word)
    return alpha[0] * spec.c0(label) + alpha[1] * (spec.d0(label) + charge)


def _exp_series(spec, alpha, terms, coeff_of, step, max_exp=None):
    """exp(sum_{n>=1} coeff_of(n) α(step*n) z^(-step*n)) applied to terms.

    step = +1 gives an annihilation series (always finite); step = -1 a
    creation series truncated at z-exponent max_exp.
    """
    total = {0: dict(terms)}
    current = {0: dict(terms)}
    k = 0
    while current:
        k += 1
        nxt = {}
        for e, vec in current.items():
            for n in _series_range(spec, vec, step, e, max_exp):
                image = _alpha_act(spec, alpha, step * n, vec)
                if not image:
                    continue
                e2 = e - step * n
                add_into(nxt.setdefault(e2, {}), image, coeff_of(n) / k)
        current = {e: v for e, v in nxt.items() if v}
        for e, v in current.items():
            add_into(total.setdefault(e, {}), v)
    return {e: v for e, v in total.items() if v}


def _series_range(spec, terms, step, e, max_exp):
    if step > 0:
        # α(n) lowers the natural degree by n and keeps the charge
        top = 0
        for word, label in terms:
            nat = term_natural_degree(spec, word, label)
            top = max(top, nat - spec.natural_floor(term_charge(spec, word, label)))
        return range(1, top + 1)
    return range(1, max_exp - e + 1)


def exp_operator(sign: str, alpha, v: ModuleVector, window=None) -> dict:
    """E^+(α, z)v or E^-(α, z)v as a LaurentVector.

    E^+ is finite and ignores the window.  E^- needs ``window`` = (lo, hi)
    and returns the exponents inside it.
    """
    alpha = lattice(alpha)
    spec = _spec_of(v.spec)
    if sign == "+":
        raw = _exp_series(spec, alpha, v._terms, lambda n: Q(1, n), +1)
    elif sign == "-":
        if window is None:
            raise WindowRequired("E^- is an infinite series; pass an exponent window")
        lo, hi = window
        raw = _exp_series(spec, alpha, v._terms, lambda n: Q(-1, n), -1, max_exp=hi)
        raw = {e: t for e, t in raw.items() if lo <= e <= hi}
    else:
        raise ValueError("sign must be '+' or '-'")
    return {e: ModuleVector._raw(spec, t) for e, t in sorted(raw.items())}


def _delta_terms(spec, alpha, terms) -> dict:
    # E^+(-α, -z) = exp(sum_n (-α(n))/n (-z)^(-n)) = exp(sum_n (-1)^(n+1) α(n)/n z^(-n))
    groups = {}
    for key, coeff in terms.items():
        eig = alpha_zero_eigen(spec, alpha, key)
        if not is_integral(eig):
            raise NonIntegralEigenvalue(f"α(0) = {format_scalar(eig)} is not an integer")
        groups.setdefault(int(eig), {})[key] = coeff
    out = {}
    for eig, part in groups.items():
        series = _exp_series(spec, alpha, part, lambda n: Q(1 if n % 2 else -1, n), +1)
        for e, t in series.items():
            add_into(out.setdefault(e + eig, {}), t)
    return {e: t for e, t in out.items() if t}


def delta_apply(alpha, v: ModuleVector) -> dict:
    """Δ(α, z)v as a LaurentVector."""
    alpha = lattice(alpha)
    spec = _spec_of(v.spec)
    return {e: ModuleVector._raw(spec, t) for e, t in sorted(_delta_terms(spec, alpha, v._terms).items())}


def flowed_mode_terms(spec, alpha, uterms, n, wterms):
    out = {}
    for e, ue in _delta_terms(VACUUM0, alpha, uterms).items():
        add_into(out, field_mode_terms(spec, ue, n + e, wterms))
    return out


def flowed_mode(spec: ModuleSpec, alpha, u: ModuleVector, n: int, w: ModuleVector) -> ModuleVector:
    """u_(α,n) w: the mode of Y(Δ(α,z)u, z) on W, i.e. the action on W^(α)."""
    spec = _spec_of(spec)
    alpha = lattice(alpha)
    return ModuleVector._raw(spec, flowed_mode_terms(spec, alpha, u._terms, n, w._terms))


# flowed modules

def predicted_flow_target(spec: ModuleSpec, alpha) -> ModuleSpec:
    """The family that W^(α) is isomorphic to, read off the flowed base action.

    Flowed modes are a(n) -> a(n+m2), b(n) -> b(n-m2), c(0) -> c(0)+m2 and
    d(0) -> d(0)+m1.  For THIRD the flowed b(m+m2) acts on v_n by
    λ̃+ν̃+n = (λ̃+m1) + (ν̃-m1) + n, so ν̃ moves to ν̃-m1.
    """
    m1, m2 = lattice(alpha)
    if isinstance(spec, GV0):
        return GV0(spec.c + m2, spec.d + m1)
    if isinstance(spec, GV1):
        return GV1(spec.m + m2, spec.c + m2, spec.d + m1)
    if isinstance(spec, Third):
        return Third(spec.lam + m1, spec.mu, spec.nu - m1, spec.m + m2)
    raise InvalidSpec(f"no flow target known for {spec.describe()}")


def generator_label(spec):
    return 0 if spec.indexed else HW


def _generator_terms(spec):
    return {((), generator_label(spec)): Q(1)}


def _threshold(spec, alpha, gen, g_terms, scan):
    """Least s in the scan such that the flowed gen-mode kills the generator for all n >= s."""
    from .voa import generator_vector

    u = generator_vector(gen)._terms
    lo, hi = scan
    thr = hi + 1
    for n in range(hi, lo - 1, -1):
        if flowed_mode_terms(spec, alpha, u, n, g_terms):
            break
        thr = n
    return thr


def flow_profile(spec: ModuleSpec, alpha, window=None, scan=6) -> dict:
    """Flowed thresholds and Cartan eigenvalues on the generator, plus the flowed character.

    Thresholds for a and b are searched within ``scan`` of the unflowed
    raising minimum moved by the flow; for c and d only indices >= 1 are
    scanned.  ``window`` = (max_degree, qmin, qmax) in the family grading of
    the predicted target; omit it to skip the character.
    """
    from .voa import generator_vector

    spec = _spec_of(spec)
    alpha = lattice(alpha)
    g = _generator_terms(spec)
    m2 = alpha[1]
    thresholds = {}
    for sym, gen, centre in (("a", 2, spec.raising_min(2) - m2), ("b", 3, spec.raising_min(3) + m2)):
        thresholds[sym] = _threshold(spec, alpha, gen, g, (centre - scan, centre + scan))
    for sym, gen in (("c", C), ("d", D)):
        thresholds[sym] = _threshold(spec, alpha, gen, g, (1, 1 + scan))
    eig = {}
    for sym, gen in (("c", C), ("d", D)):
        image = flowed_mode_terms(spec, alpha, generator_vector(gen)._terms, 0, g)
        value = image.get(next(iter(g)), Q(0))
        if add_into(dict(image), g, -value):
            raise AssertionError(f"flowed {sym}(0) does not act by a scalar on the generator")
        eig[sym] = value
    profile = {"alpha": list(alpha), "spec": spec.describe(), "thresholds": thresholds,
               "c0": eig["c"], "d0": eig["d"]}
    if isinstance(spec, Third):
        # invariant of the base: flowed b(m+m2) a(-m-m2) on v_0
        a_up = flowed_mode_terms(spec, alpha, generator_vector(2)._terms, -spec.m - m2, g)
        ba = flowed_mode_terms(spec, alpha, generator_vector(3)._terms, spec.m + m2, a_up)
        profile["base_pairing"] = ba.get(((), 0), Q(0))
    try:
        target = predicted_flow_target(spec, alpha)
    except InvalidSpec:
        target = None
    profile["target"] = target
    if window is not None and target is not None:
        profile["character"], profile["checked"] = flowed_character(spec, alpha, target, window)
    return profile


def unflowed_profile(spec: ModuleSpec) -> dict:
    """The profile a module would have as its own flow target, read from its base policy."""
    label = generator_label(spec)
    out = {"thresholds": {"a": spec.raising_min(2), "b": spec.raising_min(3), "c": 1, "d": 1},
           "c0": spec.c0(label), "d0": spec.d0(label)}
    if isinstance(spec, Third):
        out["base_pairing"] = -spec.mu * (spec.lam + spec.nu + 1)
    return out


def target_matches(profile: dict, target: ModuleSpec) -> bool:
    """Whether a flowed profile has the thresholds and eigenvalues of the target's base."""
    want = unflowed_profile(target)
    return all(profile.get(k) == v for k, v in want.items())


def flowed_character(spec, alpha, target, window, sample=None):
    """Cell dimensions of W^(α), binned by flowed L(0) and charge.

    Cells are reported in the target's family grading.  The flowed
    natural degree of a W-cell (D, Q) is D + m2 Q; every basis vector whose
    flowed L(0) is evaluated must have eigenvalue h + D + m2 Q, where h is
    the flowed L(0) of the generator.  ``sample`` caps how many vectors per
    cell are evaluated (None: all of them).
    """
    from .characters import CharacterTable

    max_deg, qmin, qmax = window
    m2 = alpha[1]
    om = omega()._terms
    g = _generator_terms(spec)
    h_terms = flowed_mode_terms(spec, alpha, om, 1, g)
    h = h_terms.get(next(iter(g)), Q(0))
    if add_into(dict(h_terms), g, -h):
        raise AssertionError("generator is not a flowed L(0) eigenvector")
    dims = {}
    checked = 0
    kt = target.kappa_family
    for q in range(qmin, qmax + 1):
        lo = target.floor(q)
        for deg in range(lo, max_deg + 1):
            nat_flowed = deg + kt * q
            nat_w = nat_flowed - m2 * q
            cell_w = (nat_w - spec.kappa_family * q, q)
            if nat_w < spec.natural_floor(q):
                dims[(deg, q)] = 0
                continue
            basis = graded_basis(spec, cell_w)
            for key in basis[: sample if sample is not None else len(basis)]:
                image = flowed_mode_terms(spec, alpha, om, 1, {key: 1})
                want = h + nat_flowed
                if image != ({key: want} if want else {}):
                    raise AssertionError(f"flowed L(0) is not {want} on {key}")
                checked += 1
            dims[(deg, q)] = len(basis)
        # cells below the target floor are empty on both sides
    table = CharacterTable.from_dims(f"{spec.describe()}^({alpha[0]},{alpha[1]})",
                                     {"max_degree": max_deg, "charges": [qmin, qmax],
                                      "grading": "family of " + target.describe()}, dims)
    return table, checked


# extension

@dataclass(frozen=True)
class ExtensionModule:
    """W[L] = C[L] ⊗ W with the action of V(1,0)[L]."""

    spec: ModuleSpec

    def mode(self, alpha, u: ModuleVector, n: int, beta, w: ModuleVector) -> dict:
        return extension_mode((alpha, u), n, (beta, w), self.spec)

    def act(self, alpha, u: ModuleVector, n: int, ext: dict) -> dict:
        """Apply (e^α ⊗ u)_n to an ExtensionVector {β: vector}."""
        out = {}
        for beta, w in ext.items():
            for gamma, vec in self.mode(alpha, u, n, beta, w).items():
                out[gamma] = out[gamma] + vec if gamma in out else vec
        return {g: v for g, v in out.items() if v}


def build_wl(spec: ModuleSpec) -> ExtensionModule:
    """Check that every α(0) has integer eigenvalues on W and return the W[L] handle."""
    spec = _spec_of(spec)
    label = generator_label(spec)
    c0, d0 = spec.c0(label), spec.d0(label)
    if not is_integral(c0):
        raise NonIntegralEigenvalue(f"c(0) acts by {format_scalar(c0)} on the generator")
    if not is_integral(d0):
        raise NonIntegralEigenvalue(f"d(0) acts by {format_scalar(d0)} on the generator")
    return ExtensionModule(spec)


def extension_mode(u_comp, n: int, w_comp, spec: ModuleSpec) -> dict:
    """(e^α ⊗ u)_n (e^β ⊗ w) as an ExtensionVector {α+β: ModuleVector}.

    The z^(-n-1) coefficient of
        ε(α,β) z^((α,β)) E^-(-α,z) Y(Δ(β,z)u, z) E^+(-α,z) (-z)^(α(0)) w.
    """
    spec = _spec_of(spec)
    alpha, u = lattice(u_comp[0]), u_comp[1]
    beta, w = lattice(w_comp[0]), w_comp[1]
    terms = _extension_terms(spec, alpha, u._terms, n, beta, w._terms)
    if not terms:
        return {}
    return {alpha + beta: ModuleVector._raw(spec, terms)}


def _extension_terms(spec, alpha, uterms, n, beta, wterms):
    # (-z)^(α(0)) w, then E^+(-α, z)
    x = {}
    for key, coeff in wterms.items():
        eig = alpha_zero_eigen(spec, alpha, key)
        if not is_integral(eig):
            raise NonIntegralEigenvalue(f"α(0) = {format_scalar(eig)} is not an integer")
        eig = int(eig)
        add_into(x.setdefault(eig, {}), {key: coeff}, -1 if eig % 2 else 1)
    neg = -alpha
    xf = {}
    for e, part in x.items():
        for e2, t in _exp_series(spec, neg, part, lambda k: Q(1, k), +1).items():
            add_into(xf.setdefault(e + e2, {}), t)
    ue = _delta_terms(VACUUM0, beta, uterms)
    ab = pairing(alpha, beta)
    out = {}
    for f, xv in xf.items():
        if not xv:
            continue
        for e, uv in ue.items():
            wt_u = max(term_natural_degree(VACUUM0, w_, l_) for (w_, l_) in uv)
            q_u = {term_charge(VACUUM0, w_, l_) for (w_, l_) in uv}
            top = None
            for (w_, l_) in xv:
                nat = term_natural_degree(spec, w_, l_)
                ch = term_charge(spec, w_, l_)
                for qq in q_u:
                    b = mode_bound(spec, nat, ch, wt_u, qq)
                    top = b if top is None else max(top, b)
            # k = (α,β) + l + e + f + n with l >= 0 the E^- exponent
            k0 = ab + e + f + n
            for l in range(0, top - k0 + 1 if top is not None else 0):
                y = field_mode_terms(spec, uv, k0 + l, xv)
                if not y:
                    continue
                # E^-(-α, z) = exp(sum_k α(-k)/k z^k); take its z^l part
                series = _exp_series(spec, neg, y, lambda k: Q(-1, k), -1, max_exp=l)
                part = series.get(l)
                if part:
                    add_into(out, part)
    sign = cocycle(alpha, beta)
    return {k: v * sign for k, v in out.items() if v}


def extension_l0(spec, beta, w: ModuleVector) -> ModuleVector:
    """L(0) on e^β ⊗ w, through extension_mode with ω at the zero lattice component."""
    res = extension_mode(((0, 0), omega()), 1, (beta, w), spec)
    return res.get(lattice(beta), ModuleVector.zero(_spec_of(spec)))


def extension_mode_bound(spec, alpha, u: ModuleVector, beta, w: ModuleVector) -> int:
    """An n beyond which (e^α ⊗ u)_n (e^β ⊗ w) vanishes.

    E^+ lowers the z-exponent and the degree together, so the largest
    contributing mode index k - f does not depend on which E^+ term is used.
    """
    spec = _spec_of(spec)
    alpha, beta = lattice(alpha), lattice(beta)
    ab = pairing(alpha, beta)
    best = None
    for key in w.keys():
        eig = int(alpha_zero_eigen(spec, alpha, key))
        nat = term_natural_degree(spec, *key)
        ch = term_charge(spec, *key)
        for e, uv in _delta_terms(VACUUM0, beta, u._terms).items():
            for (w_, l_) in uv:
                wt_u = term_natural_degree(VACUUM0, w_, l_)
                qu = term_charge(VACUUM0, w_, l_)
                bound = mode_bound(spec, nat, ch, wt_u, qu) - eig - ab - e
                best = bound if best is None else max(best, bound)
    return best if best is not None else 0
