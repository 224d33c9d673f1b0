import pytest

from nappiwitten.algebra import a, b, c
from nappiwitten.errors import AmbiguousSolution, NoDegeneracy, NotHomogeneous
from nappiwitten.linalg import in_span
from nappiwitten.modules import GV0, GV1, HW, Third
from nappiwitten.partitions import colored_partition_counts, partitions, parts_of, weight
from nappiwitten.scalars import Q
from nappiwitten.singular import (A_SIDE, B_SIDE, build_system, oracle_singular, same_line,
                                  solve_closed_form, solve_system, verify_singular)
from nappiwitten.vectors import ModuleVector

LAM, NU = Q(1, 5), Q(1, 7)


def vec(spec, terms, label=HW):
    return ModuleVector(spec, {(tuple(w), label): co for w, co in terms})


# partitions

def test_partition_examples():
    assert partitions(1) == [((1, 1),)]
    assert partitions(2) == [((2, 1),), ((1, 2),)]
    assert len(partitions(5)) == 7


@pytest.mark.parametrize("n", range(1, 13))
def test_partition_counts_and_weights(n):
    ps = partitions(n)
    assert len(ps) == colored_partition_counts(1, n)[n]
    assert len(set(ps)) == len(ps)
    for p in ps:
        assert weight(p) == n
        assert all(x > y for (x, _), (y, _) in zip(p, p[1:]))
        assert all(q >= 1 for _, q in p)
    expanded = [parts_of(p) for p in ps]
    assert expanded == sorted(expanded, reverse=True)


# closed forms against the known low-degree vectors

@pytest.mark.parametrize("m", [0, 1, 2, -1])
def test_b_side_n1(m):
    spec = GV1(m, m - 1, Q(1, 3))
    sv = solve_closed_form(spec, B_SIDE, 1)
    assert sv.vector == vec(spec, [((c(-1), b(m)), 1), ((b(m - 1),), 1)])
    assert sv.verified


@pytest.mark.parametrize("m", [0, 2])
def test_b_side_n2_matches_four_term_vector(m):
    spec = GV1(m, m - 2, 0)
    sv = solve_closed_form(spec, B_SIDE, 2)
    want = vec(spec, [((c(-2), b(m)), 1), ((c(-1), c(-1), b(m)), 1),
                      ((c(-1), b(m - 1)), 2), ((b(m - 2),), 2)])
    assert sv.vector == want and sv.verified


def test_n2_system_ratio():
    sol = solve_system(build_system(B_SIDE, 2))
    assert [sol[("a", (2,))], sol[("a", (1, 1))], sol[("b", (1,), 1)], sol[("b", (), 2)]] == [1, 1, 2, 2]


@pytest.mark.parametrize("m", [0, 1, -2])
def test_a_side_n1(m):
    spec = GV1(m, m + 1, 0)
    sv = solve_closed_form(spec, A_SIDE, 1)
    assert sv.vector == vec(spec, [((a(-1 - m),), 1)])
    assert sv.verified


def test_degeneracy_is_enforced():
    with pytest.raises(NoDegeneracy):
        solve_closed_form(GV1(1, Q(1, 2), 0), B_SIDE, 1)
    with pytest.raises(NoDegeneracy):
        solve_closed_form(GV1(1, 0, 0), A_SIDE, 1)
    with pytest.raises(NoDegeneracy):
        solve_closed_form(GV0(1, 0), B_SIDE, 1)
    with pytest.raises(NoDegeneracy):
        solve_closed_form(Third(LAM, 2, NU, 0), B_SIDE, 1)


def test_shift_calibration():
    # only s = -n gives a verified singular vector at n = 1, 2
    for n in (1, 2):
        for side, cval in ((B_SIDE, -n), (A_SIDE, n)):
            spec = GV1(1, 1 + cval, 0)
            good = []
            for s in range(-4, 5):
                try:
                    sv = solve_closed_form(spec, side, n, shift=s)
                except AmbiguousSolution:
                    continue
                if sv.verified:
                    good.append(s)
            assert good == [-n], (side, n, good)


# verification

def test_verify_examples():
    for m in (0, 1, 2):
        spec = GV1(m, m, Q(1, 3))
        assert verify_singular(spec, vec(spec, [((b(m),), 1)])).verified
        assert verify_singular(spec, vec(spec, [((), 1)])).verified
    spec = GV1(2, 1, 0)
    part = verify_singular(spec, vec(spec, [((b(1),), 1)]))
    assert not part.verified
    assert any(not ok for _, ok in part.certificate)


def test_verify_requires_homogeneous():
    spec = GV1(1, 0, 0)
    with pytest.raises(NotHomogeneous):
        verify_singular(spec, vec(spec, [((b(0),), 1), ((b(1),), 1)]))


# oracle

def test_oracle_matches_closed_form_example():
    spec = GV1(1, 0, 0)
    basis = oracle_singular(spec, (2, -1))
    assert len(basis) == 1
    assert same_line(basis[0], solve_closed_form(spec, B_SIDE, 1).vector)


def _cases():
    for m in (0, 1, -1):
        for n in (1, 2, 3, 4):
            yield GV1(m, m - n, Q(1, 3)), B_SIDE, n, HW
            yield GV1(m, m + n, Q(1, 3)), A_SIDE, n, HW
    for m in (0, 1):
        for n in (1, 2, 3):
            for j in (0, -1):
                yield Third(LAM, -n, NU, m), B_SIDE, n, j
                yield Third(LAM, n, NU, m), A_SIDE, n, j


@pytest.mark.parametrize("spec,side,n,base", list(_cases()), ids=lambda x: repr(x))
def test_closed_form_in_oracle(spec, side, n, base):
    for k in (1, 2):
        if k == 2 and n > 2:
            continue
        sv = solve_closed_form(spec, side, n, k, base=base)
        assert sv.verified
        basis = oracle_singular(spec, sv.cell)
        assert in_span([v._terms for v in basis], sv.vector._terms)
        if k == 1:
            assert len(basis) == 1


@pytest.mark.parametrize("spec,side", [(GV1(1, 0, 0), B_SIDE), (GV1(0, 1, 0), A_SIDE),
                                       (Third(LAM, -1, NU, 0), B_SIDE), (Third(LAM, 1, NU, 1), A_SIDE)],
                         ids=repr)
def test_powers_are_singular(spec, side):
    base = 0 if spec.indexed else HW
    for k in (1, 2, 3):
        assert solve_closed_form(spec, side, 1, k, base=base).verified


def test_nondegenerate_emptiness():
    for spec in (GV1(0, Q(1, 2), 0), GV1(1, Q(1, 3), Q(1, 2)), GV0(1, Q(1, 3)), GV0(0, 0)):
        for q in range(-2, 3):
            for deg in range(max(spec.floor(q), 1 if q == 0 else spec.floor(q)), 5):
                if (deg, q) == (0, 0):
                    continue
                assert oracle_singular(spec, (deg, q)) == [], (spec, deg, q)


def test_third_a_side_needs_zero_mode_words():
    spec = Third(LAM, 2, NU, 1)
    assert solve_closed_form(spec, A_SIDE, 2).verified
    assert not solve_closed_form(spec, A_SIDE, 2, literal=True).verified


def test_third_degeneracy_readings():
    # the mu reading (mu + n = 0) has a singular vector; the c(0) reading
    # (mu + n = m) does not, on the same cell.  m = 3 keeps mu = m - n away
    # from the A-side value mu = n.
    m, n = 3, 1
    good = solve_closed_form(Third(LAM, -n, NU, m), B_SIDE, n, base=0)
    assert good.verified
    other = Third(LAM, m - n, NU, m)
    assert oracle_singular(other, good.cell) == []
    with pytest.raises(NoDegeneracy):
        solve_closed_form(other, B_SIDE, n, base=0)


def test_third_shift_isomorphism_evidence():
    from nappiwitten.submodules import submodule_echelon

    spec = Third(LAM, -1, NU, 0)
    u0 = solve_closed_form(spec, B_SIDE, 1, base=0).vector
    u1 = solve_closed_form(spec, B_SIDE, 1, base=-1).vector
    c0, c1 = u0.cell(), u1.cell()
    for dd in range(0, 3):
        for dq in range(-3, 4):
            e0 = submodule_echelon(spec, [u0], (c0[0] + dd, c0[1] + dq))
            e1 = submodule_echelon(spec, [u1], (c1[0] + dd, c1[1] + dq))
            assert len(e0) == len(e1), (dd, dq)


def test_certificate_lists_raising_modes():
    spec = GV1(1, 0, 0)
    sv = solve_closed_form(spec, B_SIDE, 1)
    modes = [x for x, _ in sv.certificate]
    assert all(spec.is_raising(x) for x in modes)
    assert a(-1) in modes and b(2) in modes
