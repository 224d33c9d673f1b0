"""Modes of the affine Nappi-Witten algebra and the affine bracket.

A mode is ``x(n) = x ⊗ t^n`` for a generator x in {a, b, c, d}, or the
central element K.  Generators are stored as small integers ordered
d < c < a < b so that plain tuple comparison of modes is the canonical
PBW order (generator first, then index).
"""
from functools import lru_cache
from typing import NamedTuple

from .errors import InvalidMode, NotARationalSquare
from .scalars import Q, rational_sqrt, to_scalar

D, C, A, B = 0, 1, 2, 3
CENTRAL = 4
GENERATORS = (D, C, A, B)
SYMBOLS = ("d", "c", "a", "b", "K")
_BY_SYMBOL = {s: i for i, s in enumerate(SYMBOLS)}

# charge of each generator: a raises the d(0) eigenvalue by one, b lowers it
CHARGE = (0, 0, 1, -1, 0)

# H4 bracket [x, y] for generators, as (generator, coefficient) pairs
_H4_BRACKET = {
    (A, B): ((C, 1),),
    (B, A): ((C, -1),),
    (D, A): ((A, 1),),
    (A, D): ((A, -1),),
    (D, B): ((B, -1),),
    (B, D): ((B, 1),),
}

# invariant form (a, b) = (c, d) = 1
_FORM = {(A, B): 1, (B, A): 1, (C, D): 1, (D, C): 1}


class Mode(NamedTuple):
    gen: int
    n: int

    def __repr__(self):
        if self.gen == CENTRAL:
            return "K"
        return f"{SYMBOLS[self.gen]}({self.n})"

    @property
    def symbol(self) -> str:
        return SYMBOLS[self.gen]

    @property
    def charge(self) -> int:
        return CHARGE[self.gen]

    @property
    def is_central(self) -> bool:
        return self.gen == CENTRAL


K = Mode(CENTRAL, 0)


def mode(symbol: str, n: int = 0) -> Mode:
    """Build a mode from its letter; ``mode("K")`` gives the central element."""
    try:
        gen = _BY_SYMBOL[symbol]
    except KeyError:
        raise InvalidMode(f"unknown generator {symbol!r}") from None
    if gen == CENTRAL:
        return K
    if isinstance(n, bool) or int(n) != n:
        raise InvalidMode(f"mode index must be an integer, got {n!r}")
    return Mode(gen, int(n))


def a(n):
    return Mode(A, n)


def b(n):
    return Mode(B, n)


def c(n):
    return Mode(C, n)


def d(n):
    return Mode(D, n)


def form(g1: int, g2: int) -> int:
    """The invariant form on generators."""
    return _FORM.get((g1, g2), 0)


@lru_cache(maxsize=None)
def bracket_terms(x: Mode, y: Mode) -> tuple:
    """[x, y] as a tuple of (mode, coefficient) pairs with integer coefficients."""
    if x.gen == CENTRAL or y.gen == CENTRAL:
        return ()
    out = []
    for g, coeff in _H4_BRACKET.get((x.gen, y.gen), ()):
        out.append((Mode(g, x.n + y.n), coeff))
    if x.n + y.n == 0:
        central = x.n * form(x.gen, y.gen)
        if central:
            out.append((K, central))
    return tuple(out)


def bracket(x: Mode, y: Mode) -> dict:
    """The affine bracket [x(m), y(n)] as a mode combination {Mode: Scalar}."""
    return {m: Q(v) for m, v in bracket_terms(x, y)}


def bracket_combination(u: dict, v: dict) -> dict:
    """Bilinear extension of ``bracket`` to mode combinations."""
    out = {}
    for x, cx in u.items():
        for y, cy in v.items():
            for m, coeff in bracket_terms(x, y):
                out[m] = out.get(m, 0) + cx * cy * coeff
    return {m: Q(v) for m, v in out.items() if v}


_SIGMA = {A: (B, 1), B: (A, 1), C: (C, -1), D: (D, -1)}


def sigma(x: Mode) -> dict:
    """The involution a <-> b, c -> -c, d -> -d, K -> K."""
    if x.gen == CENTRAL:
        return {K: Q(1)}
    g, sign = _SIGMA[x.gen]
    return {Mode(g, x.n): Q(sign)}


def sigma_combination(u: dict) -> dict:
    out = {}
    for x, cx in u.items():
        for y, cy in sigma(x).items():
            out[y] = out.get(y, 0) + cx * cy
    return {m: v for m, v in out.items() if v}


def rho(ell, word):
    """Coefficient of the level-ell to level-1 rescaling on a PBW monomial.

    Each a- or b-mode contributes a factor sqrt(ell) and each c-mode a factor
    ell; d-modes are untouched.  The word comes back unchanged.
    """
    ell = to_scalar(ell)
    root = rational_sqrt(ell)
    if root is None or root == 0:
        raise NotARationalSquare(f"{ell} is not the square of a positive rational")
    word = tuple(word)
    n_ab = sum(1 for x in word if x.gen in (A, B))
    n_c = sum(1 for x in word if x.gen == C)
    return root ** n_ab * ell ** n_c, word


def mode_to_json(x: Mode):
    if x.gen == CENTRAL:
        return "K"
    return [SYMBOLS[x.gen], x.n]


def mode_from_json(obj) -> Mode:
    if obj == "K":
        return K
    if not (isinstance(obj, (list, tuple)) and len(obj) == 2):
        raise InvalidMode(f"malformed mode {obj!r}")
    symbol, n = obj
    if symbol == "K" or not isinstance(n, int) or isinstance(n, bool):
        raise InvalidMode(f"malformed mode {obj!r}")
    return mode(symbol, n)


def parse_mode(text: str) -> Mode:
    """Parse "a(-1)", "b(3)" or "K"."""
    text = text.strip()
    if text == "K":
        return K
    if len(text) < 4 or text[1] != "(" or text[-1] != ")":
        raise InvalidMode(f"cannot parse mode {text!r}")
    try:
        n = int(text[2:-1])
    except ValueError:
        raise InvalidMode(f"cannot parse mode {text!r}") from None
    return mode(text[0], n)
