"""PBW straightening: the action of a mode on a basis word.

For a word ``y·rest`` (y the leftmost, smallest letter) the action of x is::

    x · y · rest = y · (x · rest) + [x, y] · rest

unless x is itself a lowering letter that may stand in front of y, in which
case it is simply prepended.  On the empty word the family's base policy
takes over.  K acts as 1.  Each bracket term is applied to a shorter word,
and every ``y · (...)`` call acts with a letter no larger than the letters
it meets first, so the recursion terminates.

Results are memoized per spec on (mode, word, label).
"""
import threading

from .algebra import CENTRAL, Mode, bracket_terms
from .modules import ModuleSpec

_CACHES: dict = {}
_LOCK = threading.Lock()


def _cache(spec: ModuleSpec) -> dict:
    cache = _CACHES.get(spec)
    if cache is None:
        with _LOCK:
            cache = _CACHES.setdefault(spec, {})
    return cache


def clear_caches():
    with _LOCK:
        _CACHES.clear()


def apply_mode(spec: ModuleSpec, x: Mode, word: tuple, label) -> dict:
    """x · (word · base[label]) as {(word, label): coeff}.  Do not mutate the result."""
    cache = _cache(spec)
    key = (x, word, label)
    hit = cache.get(key)
    if hit is not None:
        return hit
    if x.gen == CENTRAL:
        result = {(word, label): 1}
    elif not word:
        result = spec.base_act(x, label)
    elif x <= word[0] and spec.is_lowering(x):
        result = {((x,) + word, label): 1}
    else:
        spec.check_mode(x)
        y, rest = word[0], word[1:]
        result = {}
        for (w2, l2), c2 in apply_mode(spec, x, rest, label).items():
            for k3, c3 in apply_mode(spec, y, w2, l2).items():
                _acc(result, k3, c2 * c3)
        for z, cz in bracket_terms(x, y):
            if z.gen == CENTRAL:
                _acc(result, (rest, label), cz)
            else:
                for k3, c3 in apply_mode(spec, z, rest, label).items():
                    _acc(result, k3, cz * c3)
    cache[key] = result
    return result


def _acc(acc, key, value):
    total = acc.get(key, 0) + value
    if total:
        acc[key] = total
    else:
        acc.pop(key, None)


def act_terms(spec: ModuleSpec, x: Mode, terms) -> dict:
    """Apply x to a raw term dict."""
    out = {}
    for (word, label), coeff in terms.items():
        for key, c2 in apply_mode(spec, x, word, label).items():
            _acc(out, key, coeff * c2)
    return out


def act(spec: ModuleSpec, x: Mode, v):
    """The action of a mode on a ModuleVector, in canonical PBW form."""
    from .vectors import ModuleVector

    if v.spec != spec:
        from .errors import SpecMismatch
        raise SpecMismatch(f"vector of {v.spec.describe()} acted on in {spec.describe()}")
    spec.check_mode(x)
    return ModuleVector._raw(spec, act_terms(spec, x, v._terms))


def act_combination(spec: ModuleSpec, combo: dict, v):
    """Apply a mode combination {Mode: coeff} to a vector."""
    from .vectors import ModuleVector, add_into

    out = {}
    for x, cx in combo.items():
        add_into(out, act_terms(spec, x, v._terms), cx)
    return ModuleVector._raw(spec, out)


def act_word(spec: ModuleSpec, word, v):
    """Apply the modes of ``word`` right to left: word[0]·(word[1]·(...·v))."""
    for x in reversed(tuple(word)):
        v = act(spec, x, v)
    return v


def base_act(spec: ModuleSpec, x: Mode, label):
    """The base policy of spec as a ModuleVector."""
    from .vectors import ModuleVector

    if x.gen == CENTRAL:
        spec.check_label(label)
    return ModuleVector._raw(spec, {k: v for k, v in spec.base_act(x, label).items() if v})
