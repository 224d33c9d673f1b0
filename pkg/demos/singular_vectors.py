"""Closed-form singular vectors, checked against the nullspace oracle."""
from nappiwitten.modules import GV1, Third
from nappiwitten.scalars import Q
from nappiwitten.singular import A_SIDE, B_SIDE, oracle_singular, same_line, solve_closed_form


def show(spec, side, n, **kw):
    sv = solve_closed_form(spec, side, n, **kw)
    basis = oracle_singular(spec, sv.cell)
    agree = len(basis) == 1 and same_line(basis[0], sv.vector)
    print(f"{spec.describe()} {side} n={n} cell={sv.cell} verified={sv.verified} oracle_agrees={agree}")
    print("   ", sv.vector)


def main():
    for n in (1, 2):
        show(GV1(1, 1 - n, 0), B_SIDE, n)
    show(GV1(0, 1, Q(1, 3)), A_SIDE, 1)
    show(Third(Q(1, 5), -1, Q(1, 7), 0), B_SIDE, 1, base=0)

    # away from the degeneracy locus nothing survives
    spec = GV1(0, Q(1, 2), 0)
    print(spec.describe(), "cell (2,-1):", oracle_singular(spec, (2, -1)))


if __name__ == "__main__":
    main()
