"""Module families over the affine Nappi-Witten algebra at level 1.

Every affine family is induced from a one-dimensional, or intermediate
series, module of a parabolic-type subalgebra P.  P is described by two
thresholds::

    a(s) in P  iff  s >= a_min
    b(r) in P  iff  r >= b_min
    c(l), d(l) in P  iff  l >= 0

and the modes outside P are the lowering letters of the PBW basis.  The
base policy says how P acts on the base vectors.

Gradings.  Each mode x(n) has natural degree -n.  A base vector label has a
natural degree too: zero for highest-weight families, ``m * j`` for the
vector v_j of a THIRD module.  A grading is fixed by an integer kappa::

    degree_kappa = natural_degree - kappa * charge

The family grading uses ``kappa_family``: 0 for GV0 and VACUUM, m+1 for
GV1 and m for THIRD.  The standard grading ``kappa_std`` is the one in
which every mode of P has degree <= 0 and every lowering letter has degree
>= 0; it is what the submodule closure works in.
"""
from dataclasses import dataclass
from typing import ClassVar

from .algebra import A, B, C, D, CENTRAL, GENERATORS, K, Mode
from .errors import InvalidBase, InvalidMode, InvalidSpec
from .scalars import Q, ZERO, format_scalar, is_integral, to_scalar

HW = 0  # label of the highest-weight base vector

_BIG = 10 ** 9


def _set(obj, name, value):
    object.__setattr__(obj, name, value)


class ModuleSpec:
    """Common interface of all module families.

    Subclasses are frozen dataclasses, so specs hash and compare by value
    and can key caches.
    """

    family: ClassVar[str] = "?"
    indexed: ClassVar[bool] = False  # base vectors v_j, j in Z
    finite: ClassVar[bool] = False  # modules over H4 itself, only index-0 modes

    # grading data, filled in by subclasses
    kappa_family: int = 0
    kappa_std: int = 0
    kappa_label: int = 0

    def params(self) -> dict:
        raise NotImplementedError

    def describe(self) -> str:
        inner = ", ".join(f"{k}={format_scalar(v) if not isinstance(v, int) else v}"
                          for k, v in self.params().items())
        return f"{self.family}({inner})"

    def __repr__(self):
        return self.describe()

    # labels

    def check_label(self, label):
        if self.indexed:
            if not isinstance(label, int) or isinstance(label, bool):
                raise InvalidBase(f"{self.family} base labels are integers, got {label!r}")
        elif label != HW:
            raise InvalidBase(f"{self.family} has the single base vector HW, got {label!r}")

    def label_charge(self, label) -> int:
        return label if self.indexed else 0

    def label_natural_degree(self, label) -> int:
        return self.kappa_label * self.label_charge(label)

    # modes

    def check_mode(self, x: Mode):
        if self.finite and x.gen != CENTRAL and x.n != 0:
            raise InvalidMode(f"{self.family} is a module over H4; only index-0 modes act, got {x!r}")

    def lowering_top(self, gen: int):
        """Largest lowering index of ``gen``, or None if gen has no lowering letters."""
        raise NotImplementedError

    def is_lowering(self, x: Mode) -> bool:
        if x.gen == CENTRAL:
            return False
        top = self.lowering_top(x.gen)
        if top is None or x.n > top:
            return False
        return not self.finite or x.n == 0

    def raising_min(self, gen: int):
        """Smallest index of ``gen`` in the raising set, or None."""
        raise NotImplementedError

    def is_raising(self, x: Mode) -> bool:
        if x.gen == CENTRAL:
            return False
        low = self.raising_min(x.gen)
        if low is None or x.n < low:
            return False
        return not self.finite or x.n == 0

    def base_act(self, x: Mode, label) -> dict:
        """Action of a mode on a base vector, as {(word, label): coeff}."""
        raise NotImplementedError

    # eigenvalues of c(0) and d(0) on a base vector

    def c0(self, label):
        raise NotImplementedError

    def d0(self, label):
        raise NotImplementedError

    # gradings

    def delta(self, gen: int, kappa: int) -> int:
        """Degree, in the kappa grading, of the top lowering letter of gen."""
        top = self.lowering_top(gen)
        if top is None:
            return _BIG
        return -top - kappa * _GEN_CHARGE[gen]

    def natural_floor(self, charge: int) -> int:
        """Least natural degree of a nonzero vector of the given charge.

        For highest-weight families the minimum is attained by the word with
        the fewest a- and b-letters; for THIRD it is the base vector v_Q.
        """
        if self.finite:
            return 0
        kf = self.kappa_family
        if self.indexed:
            return kf * charge
        da, db = self.delta(A, kf), self.delta(B, kf)
        nb = max(0, -charge)
        na = charge + nb
        return na * da + nb * db + kf * charge

    def floor(self, charge: int, kappa=None) -> int:
        if kappa is None:
            kappa = self.kappa_family
        return self.natural_floor(charge) - kappa * charge

    def has_charge(self, charge: int) -> bool:
        """Whether any basis vector carries this charge."""
        if self.family == "H4_VERMA":
            return charge <= 0
        return True


_GEN_CHARGE = {A: 1, B: -1, C: 0, D: 0}


def natural_degree(x: Mode) -> int:
    return 0 if x.gen == CENTRAL else -x.n


class _Affine(ModuleSpec):
    """Shared machinery for the three induced affine families."""

    a_min: int
    b_min: int

    def lowering_top(self, gen):
        if gen == A:
            return self.a_min - 1
        if gen == B:
            return self.b_min - 1
        return -1

    def _check_common(self, x: Mode, label):
        self.check_label(label)
        self.check_mode(x)


@dataclass(frozen=True, repr=False)
class GV0(_Affine):
    """First-class generalized Verma module V(1, 𝔠, 1_α); 𝔠 must be an integer.

    P = Ĥ₄(𝔠, 0): a(s) for s >= -𝔠, b(r) for r >= 𝔠, and the non-negative
    c, d modes.  c(0) and d(0) act on 1_α by 𝔠 and 𝔡.
    """

    c: object = 0
    d: object = 0
    family: ClassVar[str] = "GV0"

    def __post_init__(self):
        _set(self, "c", to_scalar(self.c))
        _set(self, "d", to_scalar(self.d))
        if not is_integral(self.c):
            raise InvalidSpec(f"GV0 needs an integral c(0) eigenvalue, got {format_scalar(self.c)}")

    @property
    def m(self) -> int:
        return int(self.c)

    @property
    def a_min(self):
        return -self.m

    @property
    def b_min(self):
        return self.m

    kappa_family = 0

    @property
    def kappa_std(self):
        return self.m

    def params(self):
        return {"c": self.c, "d": self.d}

    def raising_min(self, gen):
        if gen == A:
            return self.a_min
        if gen == B:
            return self.b_min
        return 1

    def c0(self, label):
        return self.c

    def d0(self, label):
        return self.d

    def base_act(self, x, label):
        self._check_common(x, label)
        if x.gen == CENTRAL:
            return {((), label): Q(1)}
        if self.is_lowering(x):
            return {((x,), label): Q(1)}
        if x.n == 0 and x.gen == C:
            return {((), label): self.c} if self.c else {}
        if x.n == 0 and x.gen == D:
            return {((), label): self.d} if self.d else {}
        return {}


def vacuum(d=0) -> GV0:
    """The vacuum module V(1, 𝔡), which is GV0(0, 𝔡)."""
    return GV0(0, d)


@dataclass(frozen=True, repr=False)
class GV1(_Affine):
    """Second-class generalized Verma module V(1, (m,1), 1_α).

    P = Ĥ₄(m, 1): a(s) for s >= -m, b(r) for r >= m+1, and the non-negative
    c, d modes.
    """

    m: int = 0
    c: object = 0
    d: object = 0
    family: ClassVar[str] = "GV1"

    def __post_init__(self):
        if isinstance(self.m, bool) or int(self.m) != self.m:
            raise InvalidSpec(f"m must be an integer, got {self.m!r}")
        _set(self, "m", int(self.m))
        _set(self, "c", to_scalar(self.c))
        _set(self, "d", to_scalar(self.d))

    @property
    def a_min(self):
        return -self.m

    @property
    def b_min(self):
        return self.m + 1

    @property
    def kappa_family(self):
        return self.m + 1

    @property
    def kappa_std(self):
        return self.m + 1

    def params(self):
        return {"m": self.m, "c": self.c, "d": self.d}

    def raising_min(self, gen):
        if gen == A:
            return self.a_min
        if gen == B:
            return self.b_min
        return 1

    def c0(self, label):
        return self.c

    def d0(self, label):
        return self.d

    def base_act(self, x, label):
        self._check_common(x, label)
        if x.gen == CENTRAL:
            return {((), label): Q(1)}
        if self.is_lowering(x):
            return {((x,), label): Q(1)}
        if x.n == 0 and x.gen == C:
            return {((), label): self.c} if self.c else {}
        if x.n == 0 and x.gen == D:
            return {((), label): self.d} if self.d else {}
        return {}


@dataclass(frozen=True, repr=False)
class Third(_Affine):
    """Third-class module induced from the intermediate series V(λ̃, μ̃, ν̃).

    Ĥ₄(m, 0)⁺ kills every v_n; the degree-zero part of Ĥ₄(m, 0) acts by::

        c(0) v_n = (μ̃ + m) v_n        d(0) v_n = (λ̃ + n) v_n
        a(-m) v_n = -μ̃ v_{n+1}        b(m) v_n = (λ̃ + ν̃ + n) v_{n-1}
    """

    lam: object = 0
    mu: object = 1
    nu: object = 0
    m: int = 0
    family: ClassVar[str] = "THIRD"
    indexed: ClassVar[bool] = True

    def __post_init__(self):
        for name in ("lam", "mu", "nu"):
            _set(self, name, to_scalar(getattr(self, name)))
        if isinstance(self.m, bool) or int(self.m) != self.m:
            raise InvalidSpec(f"m must be an integer, got {self.m!r}")
        _set(self, "m", int(self.m))
        if self.mu == 0:
            raise InvalidSpec("THIRD needs mu != 0")
        if is_integral(self.lam + self.nu):
            raise InvalidSpec("THIRD needs lam + nu outside the integers")

    @property
    def a_min(self):
        return -self.m

    @property
    def b_min(self):
        return self.m

    @property
    def kappa_family(self):
        return self.m

    @property
    def kappa_std(self):
        return self.m

    @property
    def kappa_label(self):
        return self.m

    def params(self):
        return {"lam": self.lam, "mu": self.mu, "nu": self.nu, "m": self.m}

    def raising_min(self, gen):
        if gen == A:
            return -self.m + 1
        if gen == B:
            return self.m + 1
        return 1

    def c0(self, label):
        return self.mu + self.m

    def d0(self, label):
        return self.lam + label

    def base_act(self, x, label):
        self._check_common(x, label)
        if x.gen == CENTRAL:
            return {((), label): Q(1)}
        if self.is_lowering(x):
            return {((x,), label): Q(1)}
        if x.gen == A and x.n == -self.m:
            return {((), label + 1): -self.mu}
        if x.gen == B and x.n == self.m:
            coeff = self.lam + self.nu + label
            return {((), label - 1): coeff} if coeff else {}
        if x.n == 0 and x.gen == C:
            value = self.mu + self.m
            return {((), label): value} if value else {}
        if x.n == 0 and x.gen == D:
            value = self.lam + label
            return {((), label): value} if value else {}
        return {}


@dataclass(frozen=True, repr=False)
class H4Verma(ModuleSpec):
    """Verma module M(λ) over H4: basis b^k v₀, with a v₀ = 0."""

    c: object = 0
    d: object = 0
    family: ClassVar[str] = "H4_VERMA"
    finite: ClassVar[bool] = True

    def __post_init__(self):
        _set(self, "c", to_scalar(self.c))
        _set(self, "d", to_scalar(self.d))

    def params(self):
        return {"c": self.c, "d": self.d}

    def lowering_top(self, gen):
        return 0 if gen == B else None

    def raising_min(self, gen):
        return 0 if gen == A else None

    def c0(self, label):
        return self.c

    def d0(self, label):
        return self.d

    def base_act(self, x, label):
        self.check_label(label)
        self.check_mode(x)
        if x.gen == CENTRAL:
            return {((), label): Q(1)}
        if x.gen == B:
            return {((x,), label): Q(1)}
        if x.gen == C:
            return {((), label): self.c} if self.c else {}
        if x.gen == D:
            return {((), label): self.d} if self.d else {}
        return {}


@dataclass(frozen=True, repr=False)
class H4Intermediate(ModuleSpec):
    """Intermediate series module V(λ̃, μ̃, ν̃) over H4 with basis v_n, n in Z."""

    lam: object = 0
    mu: object = 1
    nu: object = 0
    family: ClassVar[str] = "H4_INTERMEDIATE"
    finite: ClassVar[bool] = True
    indexed: ClassVar[bool] = True

    def __post_init__(self):
        for name in ("lam", "mu", "nu"):
            _set(self, name, to_scalar(getattr(self, name)))

    def params(self):
        return {"lam": self.lam, "mu": self.mu, "nu": self.nu}

    def lowering_top(self, gen):
        return None

    def raising_min(self, gen):
        return None

    def c0(self, label):
        return self.mu

    def d0(self, label):
        return self.lam + label

    def base_act(self, x, label):
        self.check_label(label)
        self.check_mode(x)
        if x.gen == CENTRAL:
            return {((), label): Q(1)}
        if x.gen == A:
            return {((), label + 1): -self.mu}
        if x.gen == B:
            coeff = self.lam + self.nu + label
            return {((), label - 1): coeff} if coeff else {}
        value = self.mu if x.gen == C else self.lam + label
        return {((), label): value} if value else {}


@dataclass(frozen=True, repr=False)
class Quotient(ModuleSpec):
    """Quotient of ``inner`` by the submodule generated by ``generators``.

    Vectors of a quotient are represented by vectors of the inner module;
    all structure except cell dimensions is delegated.
    """

    inner: ModuleSpec = None
    generators: tuple = ()
    family: ClassVar[str] = "QUOTIENT"

    def __post_init__(self):
        if not isinstance(self.inner, ModuleSpec) or isinstance(self.inner, Quotient):
            raise InvalidSpec("QUOTIENT needs a non-quotient inner spec")
        gens = tuple(self.generators)
        for g in gens:
            if g.spec != self.inner:
                raise InvalidSpec("quotient generators must live in the inner module")
        _set(self, "generators", gens)

    def params(self):
        return {"inner": self.inner, "generators": self.generators}

    def describe(self):
        return f"QUOTIENT({self.inner.describe()}, {len(self.generators)} generators)"

    @property
    def indexed(self):
        return self.inner.indexed

    @property
    def finite(self):
        return self.inner.finite

    @property
    def kappa_family(self):
        return self.inner.kappa_family

    @property
    def kappa_std(self):
        return self.inner.kappa_std

    @property
    def kappa_label(self):
        return self.inner.kappa_label

    def check_label(self, label):
        self.inner.check_label(label)

    def lowering_top(self, gen):
        return self.inner.lowering_top(gen)

    def raising_min(self, gen):
        return self.inner.raising_min(gen)

    def base_act(self, x, label):
        return self.inner.base_act(x, label)

    def c0(self, label):
        return self.inner.c0(label)

    def d0(self, label):
        return self.inner.d0(label)

    def natural_floor(self, charge):
        return self.inner.natural_floor(charge)

    def has_charge(self, charge):
        return self.inner.has_charge(charge)


FAMILIES = {
    "GV0": GV0,
    "GV1": GV1,
    "THIRD": Third,
    "H4_VERMA": H4Verma,
    "H4_INTERMEDIATE": H4Intermediate,
}


def term_natural_degree(spec: ModuleSpec, word, label) -> int:
    return sum(-x.n for x in word) + spec.label_natural_degree(label)


def term_charge(spec: ModuleSpec, word, label) -> int:
    return sum(_GEN_CHARGE[x.gen] for x in word) + spec.label_charge(label)


def term_cell(spec: ModuleSpec, word, label, kappa=None):
    """(degree, charge) of a basis term in the kappa grading (family grading by default)."""
    if kappa is None:
        kappa = spec.kappa_family
    q = term_charge(spec, word, label)
    return term_natural_degree(spec, word, label) - kappa * q, q


def mode_degree(x: Mode, kappa: int) -> int:
    if x.gen == CENTRAL:
        return 0
    return -x.n - kappa * _GEN_CHARGE[x.gen]


def to_family_cell(spec: ModuleSpec, cell, kappa: int):
    """Convert a (degree, charge) cell from the kappa grading to the family grading."""
    deg, q = cell
    return deg + (kappa - spec.kappa_family) * q, q


def from_family_cell(spec: ModuleSpec, cell, kappa: int):
    deg, q = cell
    return deg - (kappa - spec.kappa_family) * q, q
