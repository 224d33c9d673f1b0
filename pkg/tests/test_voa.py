import pytest
from hypothesis import given, strategies as st

from nappiwitten.algebra import A, B, C, D, GENERATORS, Mode, a, b, c, d
from nappiwitten.basis import charge_range, graded_basis
from nappiwitten.errors import InvalidSpec
from nappiwitten.modules import GV0, GV1, H4Verma, HW, Third, term_natural_degree, vacuum
from nappiwitten.scalars import Q
from nappiwitten.straighten import act
from nappiwitten.vectors import ModuleVector
from nappiwitten import voa
from nappiwitten.voa import (VACUUM0, borcherds_sides, check_borcherds, check_virasoro,
                             compile_field, field_mode, generator_vector, mixed_defect, omega,
                             va, virasoro)

V = VACUUM0
ONE = va()
SPECS = [V, GV0(2, Q(1, 3)), GV1(1, 0, Q(1, 2)), Third(Q(1, 5), Q(3, 2), Q(1, 7), 0),
         Third(Q(1, 3), 2, Q(1, 2), 1)]


def window(spec, max_degree, charges=range(-2, 3)):
    out = []
    for q in charges:
        for deg in range(spec.floor(q), max_degree + 1):
            out.extend(graded_basis(spec, (deg, q)))
    return out


def vacuum_basis(max_degree):
    out = []
    for deg in range(max_degree + 1):
        for q in charge_range(V, deg):
            out.extend(graded_basis(V, (deg, q)))
    return out


def test_omega_terms():
    w = omega()
    assert w == ModuleVector(V, {((a(-1), b(-1)), HW): 1, ((d(-1), c(-1)), HW): 1,
                                 ((c(-2),), HW): Q(-1, 2), ((c(-1), c(-1)), HW): Q(-1, 2)})


def test_field_mode_examples():
    w = omega()
    assert not field_mode(V, w, 1, ONE)
    assert field_mode(V, w, 1, va([a(-1)])) == va([a(-1)])
    assert not field_mode(V, w, 0, ONE)
    assert field_mode(V, w, 3, w) == ONE * 2


def test_virasoro_examples():
    assert virasoro(V, 0, va([c(-2)])) == va([c(-2)]) * 2
    assert virasoro(V, -1, va([a(-1)])) == va([a(-2)])
    lhs = virasoro(V, 2, virasoro(V, -2, ONE)) - virasoro(V, -2, virasoro(V, 2, ONE))
    assert lhs == ONE * 2


@pytest.mark.parametrize("spec", SPECS, ids=repr)
def test_generator_fields_are_the_lie_action(spec):
    for key in window(spec, 3):
        w = ModuleVector._raw(spec, {key: Q(1)})
        for gen in GENERATORS:
            for n in range(-3, 4):
                assert field_mode(spec, generator_vector(gen), n, w) == act(spec, Mode(gen, n), w)


def test_vacuum_grading():
    for key in vacuum_basis(4):
        w = ModuleVector._raw(V, {key: Q(1)})
        assert virasoro(V, 0, w) == w * term_natural_degree(V, *key)


@pytest.mark.parametrize("spec", SPECS[1:], ids=repr)
def test_l0_is_diagonal_on_bases(spec):
    g = ModuleVector.base(spec, 0 if spec.indexed else HW)
    h = virasoro(spec, 0, g).coefficient((), 0 if spec.indexed else HW)
    assert virasoro(spec, 0, g) == g * h
    for key in window(spec, 3):
        w = ModuleVector._raw(spec, {key: Q(1)})
        assert virasoro(spec, 0, w) == w * (h + term_natural_degree(spec, *key))


def test_translation_property():
    targets = vacuum_basis(3)
    for vkey in vacuum_basis(2):
        v = ModuleVector._raw(V, {vkey: Q(1)})
        lv = virasoro(V, -1, v)
        for n in range(-3, 4):
            for wkey in targets[:30]:
                w = ModuleVector._raw(V, {wkey: Q(1)})
                assert field_mode(V, lv, n, w) == field_mode(V, v, n - 1, w) * (-n)


def test_field_program_is_deterministic():
    prog = compile_field((c(-1), a(-2), b(-1)))
    assert prog.weight == 4 and prog.charge == 0
    assert prog.factors == ((C, 1), (A, 2), (B, 1))
    spec = GV1(1, 0, Q(1, 2))
    key = ((c(-1), b(0)), HW)
    first = prog.mode_terms(spec, 1, key)
    voa.clear_caches()
    assert compile_field((c(-1), a(-2), b(-1))).mode_terms(spec, 1, key) == first


def test_borcherds_examples():
    u, v = generator_vector(A), generator_vector(B)
    lhs, rhs = borcherds_sides(V, u, v, 1, -1, ONE._terms)
    assert lhs == rhs == {((), HW): 1}
    cc = generator_vector(C)
    for p in range(-2, 3):
        for q in range(-2, 3):
            for key in vacuum_basis(2):
                lhs, rhs = borcherds_sides(V, cc, cc, p, q, {key: Q(1)})
                assert lhs == rhs == {}


@pytest.mark.parametrize("gen", GENERATORS)
def test_borcherds_with_omega_gives_mixed_relation(gen):
    h = generator_vector(gen)
    for m in range(-2, 3):
        for n in range(-2, 3):
            for key in vacuum_basis(2):
                w = {key: Q(1)}
                lhs, rhs = borcherds_sides(V, h, omega(), n, m + 1, w)
                assert lhs == rhs
                assert not mixed_defect(V, gen, n, m, w)


@pytest.mark.parametrize("spec", SPECS, ids=repr)
def test_borcherds_on_families(spec):
    vs = [generator_vector(g) for g in GENERATORS] + [omega()]
    for u in vs:
        for v in vs:
            report = check_borcherds(spec, u, v, 1, -1, (1, 0))
            assert report.passed, report.to_json()


def test_virasoro_low_degree():
    report = check_virasoro(V, 3)
    assert report.passed and report.checked > 0
    assert report.to_json()["status"] == "pass"


def test_virasoro_on_a_family():
    assert check_virasoro(GV0(2, Q(1, 3)), 2, range(-2, 3), charges=(-1, 1)).passed
    assert check_virasoro(Third(Q(1, 5), Q(3, 2), Q(1, 7), 1), 1, range(-2, 3), charges=(-1, 1)).passed


def test_failing_report_carries_counterexample(monkeypatch):
    monkeypatch.setattr(voa, "virasoro_defect", lambda spec, m, n, w: dict(w))
    report = check_virasoro(V, 1)
    out = report.to_json()
    assert out["status"] == "fail" and out["checked"] == 1
    assert set(out["counterexample"]) == {"m", "n", "w", "defect"}


def test_field_modes_need_restricted_modules():
    with pytest.raises(InvalidSpec):
        field_mode(H4Verma(0, 0), ONE, -1, ModuleVector.base(H4Verma(0, 0)))
    with pytest.raises(InvalidSpec):
        field_mode(GV1(1, 0, 0), ModuleVector.base(GV1(1, 0, 0)), -1, ModuleVector.base(GV1(1, 0, 0)))


@given(st.sampled_from(vacuum_basis(2)), st.sampled_from(vacuum_basis(2)), st.integers(-3, 3),
       st.integers(-2, 2), st.integers(-2, 2))
def test_field_modes_are_linear(k1, k2, n, x, y):
    u = ModuleVector._raw(V, {k1: Q(1)})
    v = ModuleVector._raw(V, {k2: Q(1)})
    w = va([c(-1), b(-1)])
    assert field_mode(V, u * x + v * y, n, w) == field_mode(V, u, n, w) * x + field_mode(V, v, n, w) * y
