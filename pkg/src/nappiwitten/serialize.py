"""JSON encodings of specs, vectors, singular vectors and extension vectors.

Rationals are written as "p/q" strings, modes as ["a", -3] or "K".  All
dumps use sorted keys so equal objects give byte-identical text.
"""
import json

from .algebra import mode_from_json, mode_to_json
from .errors import InvalidSpec, NonCanonicalWord
from .modules import FAMILIES, HW, GV0, GV1, H4Intermediate, H4Verma, ModuleSpec, Quotient, Third
from .scalars import format_scalar, to_scalar
from .vectors import ModuleVector

SCHEMA_VERSION = 1


def dumps(obj) -> str:
    return json.dumps(obj, sort_keys=True, ensure_ascii=False, separators=(",", ":"))


def dumps_pretty(obj) -> str:
    return json.dumps(obj, sort_keys=True, ensure_ascii=False, indent=2)


# specs

_PARAMS = {
    "GV0": ("c", "d"),
    "GV1": ("m", "c", "d"),
    "THIRD": ("lam", "mu", "nu", "m"),
    "H4_VERMA": ("c", "d"),
    "H4_INTERMEDIATE": ("lam", "mu", "nu"),
}


def spec_to_json(spec: ModuleSpec) -> dict:
    if isinstance(spec, Quotient):
        return {"family": "QUOTIENT", "inner": spec_to_json(spec.inner),
                "generators": [_terms_to_json(g) for g in spec.generators]}
    out = {"family": spec.family}
    for name, value in spec.params().items():
        out[name] = value if name == "m" else format_scalar(value)
    return out


def spec_from_json(obj) -> ModuleSpec:
    if not isinstance(obj, dict) or "family" not in obj:
        raise InvalidSpec(f"malformed spec {obj!r}")
    family = obj["family"]
    if family == "VACUUM":
        return GV0(0, to_scalar(obj.get("d", "0")))
    if family == "QUOTIENT":
        inner = spec_from_json(obj["inner"])
        gens = tuple(_terms_from_json(inner, g) for g in obj.get("generators", []))
        return Quotient(inner, gens)
    if family not in FAMILIES:
        raise InvalidSpec(f"unknown family {family!r}")
    names = _PARAMS[family]
    extra = set(obj) - set(names) - {"family"}
    if extra:
        raise InvalidSpec(f"unexpected parameters {sorted(extra)} for {family}")
    kwargs = {}
    for name in names:
        if name not in obj:
            raise InvalidSpec(f"{family} needs parameter {name!r}")
        value = obj[name]
        if name == "m":
            if isinstance(value, str):
                value = int(value)
            kwargs[name] = value
        else:
            kwargs[name] = to_scalar(str(value))
    return FAMILIES[family](**kwargs)


# vectors

def _base_to_json(spec, label):
    return {"idx": label} if spec.indexed else "HW"


def _base_from_json(spec, obj):
    if obj == "HW":
        if spec.indexed:
            raise NonCanonicalWord("indexed families need {\"idx\": j} bases")
        return HW
    if isinstance(obj, dict) and set(obj) == {"idx"} and isinstance(obj["idx"], int):
        if not spec.indexed:
            raise NonCanonicalWord("this family has the single base HW")
        return obj["idx"]
    raise NonCanonicalWord(f"malformed base {obj!r}")


def _terms_to_json(v: ModuleVector) -> dict:
    terms = []
    for (word, label), coeff in v.sorted_items():
        terms.append({"coeff": format_scalar(coeff), "base": _base_to_json(v.spec, label),
                      "word": [mode_to_json(x) for x in word]})
    return {"terms": terms}


def _terms_from_json(spec, obj) -> ModuleVector:
    if not isinstance(obj, dict) or not isinstance(obj.get("terms"), list):
        raise NonCanonicalWord("vector JSON needs a 'terms' list")
    seen = set()
    items = []
    for t in obj["terms"]:
        word = tuple(mode_from_json(x) for x in t["word"])
        label = _base_from_json(spec, t["base"])
        if (word, label) in seen:
            raise NonCanonicalWord("repeated term in vector JSON")
        seen.add((word, label))
        items.append(((word, label), to_scalar(str(t["coeff"]))))
    return ModuleVector(spec if not isinstance(spec, Quotient) else spec.inner, items, check=True)


def vector_to_json(v: ModuleVector) -> dict:
    out = {"spec": spec_to_json(v.spec)}
    out.update(_terms_to_json(v))
    return out


def vector_from_json(obj) -> ModuleVector:
    spec = spec_from_json(obj["spec"])
    return _terms_from_json(spec, obj)


def singular_to_json(sv) -> dict:
    out = vector_to_json(sv.vector)
    out["cell"] = list(sv.cell)
    out["certificate"] = [{"mode": mode_to_json(x), "zero": ok} for x, ok in sv.certificate]
    out["verified"] = sv.verified
    return out


def extension_to_json(components) -> dict:
    """Encode {(m1, m2): ModuleVector} as an ExtensionVector."""
    return {"components": [{"alpha": list(alpha), "vector": vector_to_json(vec)}
                           for alpha, vec in sorted(components.items())]}


def extension_from_json(obj) -> dict:
    out = {}
    for comp in obj["components"]:
        alpha = tuple(comp["alpha"])
        if len(alpha) != 2 or not all(isinstance(x, int) for x in alpha):
            raise InvalidSpec(f"malformed lattice element {comp['alpha']!r}")
        out[alpha] = vector_from_json(comp["vector"])
    return out
