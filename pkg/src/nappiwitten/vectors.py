"""Vectors of a module: finite combinations of PBW words on base vectors."""
from .algebra import CENTRAL, Mode
from .errors import NonCanonicalWord, SpecMismatch
from .modules import HW, ModuleSpec, term_cell
from .scalars import Q, format_scalar, to_scalar


def add_into(acc: dict, terms, scale=1):
    """acc += scale * terms, dropping cancelled entries."""
    for key, coeff in terms.items() if isinstance(terms, dict) else terms:
        value = acc.get(key, 0) + scale * coeff
        if value:
            acc[key] = value
        else:
            acc.pop(key, None)
    return acc


def check_word(spec: ModuleSpec, word, label):
    """Raise NonCanonicalWord unless the word is a PBW basis word for spec."""
    spec.check_label(label)
    prev = None
    for x in word:
        if not isinstance(x, Mode) or x.gen == CENTRAL or not spec.is_lowering(x):
            raise NonCanonicalWord(f"{x!r} is not a lowering letter of {spec.describe()}")
        if prev is not None and x < prev:
            raise NonCanonicalWord(f"word {word!r} is not in canonical order")
        prev = x


class ModuleVector:
    """An immutable element of a module.

    ``terms`` maps (word, label) to a nonzero rational, where ``word`` is a
    tuple of lowering modes in canonical order.
    """

    __slots__ = ("spec", "_terms", "_hash")

    def __init__(self, spec: ModuleSpec, terms=None, check=True):
        clean = {}
        if terms:
            items = terms.items() if isinstance(terms, dict) else terms
            for (word, label), coeff in items:
                coeff = to_scalar(coeff)
                if not coeff:
                    continue
                word = tuple(word)
                if check:
                    check_word(spec, word, label)
                key = (word, label)
                value = clean.get(key, 0) + coeff
                if value:
                    clean[key] = Q(value)
                else:
                    clean.pop(key, None)
        self.spec = spec
        self._terms = clean
        self._hash = None

    @classmethod
    def _raw(cls, spec, terms: dict):
        """Wrap an already clean term dict without copying or checking."""
        v = cls.__new__(cls)
        v.spec = spec
        v._terms = terms
        v._hash = None
        return v

    @classmethod
    def base(cls, spec, label=HW, word=()):
        return cls(spec, {(tuple(word), label): 1})

    @classmethod
    def zero(cls, spec):
        return cls._raw(spec, {})

    @property
    def terms(self) -> dict:
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    def keys(self):
        return self._terms.keys()

    def coefficient(self, word, label=HW):
        return self._terms.get((tuple(word), label), Q(0))

    def __len__(self):
        return len(self._terms)

    def __bool__(self):
        return bool(self._terms)

    def is_zero(self):
        return not self._terms

    def _same(self, other):
        if not isinstance(other, ModuleVector):
            return NotImplemented
        if other.spec != self.spec:
            raise SpecMismatch(f"{self.spec.describe()} vs {other.spec.describe()}")
        return True

    def __add__(self, other):
        if self._same(other) is NotImplemented:
            return NotImplemented
        return ModuleVector._raw(self.spec, add_into(dict(self._terms), other._terms))

    def __sub__(self, other):
        if self._same(other) is NotImplemented:
            return NotImplemented
        return ModuleVector._raw(self.spec, add_into(dict(self._terms), other._terms, -1))

    def __neg__(self):
        return ModuleVector._raw(self.spec, {k: -v for k, v in self._terms.items()})

    def __mul__(self, scalar):
        if isinstance(scalar, ModuleVector):
            return NotImplemented
        s = to_scalar(scalar)
        if not s:
            return ModuleVector.zero(self.spec)
        return ModuleVector._raw(self.spec, {k: v * s for k, v in self._terms.items()})

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, ModuleVector):
            return NotImplemented
        return self.spec == other.spec and self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.spec, frozenset(self._terms.items())))
        return self._hash

    def sorted_items(self):
        return sorted(self._terms.items(), key=lambda kv: (kv[0][0], kv[0][1]))

    def cells(self, kappa=None) -> set:
        return {term_cell(self.spec, w, l, kappa) for (w, l) in self._terms}

    def cell(self, kappa=None):
        """The unique (degree, charge) cell of a homogeneous vector, else None."""
        cells = self.cells(kappa)
        return next(iter(cells)) if len(cells) == 1 else None

    def normalized(self):
        """Scale so that the lexicographically first term has coefficient 1."""
        if not self._terms:
            return self
        first = self.sorted_items()[0][1]
        return self * (1 / first)

    def __repr__(self):
        if not self._terms:
            return "0"
        parts = []
        for (word, label), coeff in self.sorted_items():
            base = "1" if (label == HW and not self.spec.indexed) else f"v[{label}]"
            w = "".join(repr(x) for x in word)
            parts.append(f"{format_scalar(coeff)}*{w}{'·' if w else ''}{base}")
        return " + ".join(parts)
