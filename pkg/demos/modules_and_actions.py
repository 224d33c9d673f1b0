"""Build a few modules, list small graded bases and act with modes."""
from nappiwitten.algebra import a, b, bracket, c, d
from nappiwitten.basis import graded_basis
from nappiwitten.modules import GV1, HW, Third, vacuum
from nappiwitten.scalars import Q
from nappiwitten.straighten import act
from nappiwitten.vectors import ModuleVector


def main():
    print("[a(1), b(-1)] =", bracket(a(1), b(-1)))
    print("[d(2), a(-3)] =", bracket(d(2), a(-3)))

    spec = GV1(1, 0, Q(1, 2))
    for cell in [(0, 0), (1, 0), (1, -1)]:
        print(spec.describe(), cell, "->", len(graded_basis(spec, cell)), "vectors")

    one = ModuleVector.base(spec)
    v = act(spec, b(1), one)
    print("b(1)1 =", v)
    print("a(0) b(1)1 =", act(spec, a(0), v))  # [a(0), b(1)] = c(1) kills 1

    third = Third(Q(1, 5), Q(3, 2), Q(1, 7), 0)
    v0 = ModuleVector.base(third, 0)
    print("a(0) v_0 =", act(third, a(0), v0))
    print("c(0) v_0 =", act(third, c(0), v0))

    vac = vacuum()
    w = act(vac, a(-1), act(vac, b(-1), ModuleVector.base(vac)))
    print("a(-1) b(-1)1 =", w, " cell", w.cell())


if __name__ == "__main__":
    main()
