"""Field modes, the conformal vector and the Virasoro/Borcherds checks."""
from nappiwitten.algebra import A, C
from nappiwitten.modules import GV0, vacuum
from nappiwitten.scalars import Q
from nappiwitten.voa import (check_borcherds, check_virasoro, field_mode, generator_vector, omega,
                             va, virasoro)

V = vacuum()


def main():
    print("omega =", omega())
    one = va()
    print("L(-2)1 =", virasoro(V, -2, one))
    lhs = virasoro(V, 2, virasoro(V, -2, one)) - virasoro(V, -2, virasoro(V, 2, one))
    print("[L(2), L(-2)]1 =", lhs, "(central charge 4 gives 2)")

    print(check_virasoro(V, 3).to_json())
    print(check_virasoro(GV0(2, Q(1, 3)), 1, charges=(-1, 1)).to_json())

    a1 = generator_vector(A)
    print("a(-1)1 _(-1) c(-1)1 =", field_mode(V, a1, -1, generator_vector(C)))
    report = check_borcherds(V, omega(), a1, 1, -1, (2, 1))
    print("Borcherds(omega, a, 1, -1) on (2,1):", report.status, report.checked, "vectors")


if __name__ == "__main__":
    main()
