"""Vertex operators of the lattice extension V(1,0)[L]."""
from nappiwitten.algebra import a
from nappiwitten.lattice import build_wl, cocycle, extension_l0
from nappiwitten.modules import vacuum
from nappiwitten.voa import va

handle = build_wl(vacuum())

print("cocycle table, rows alpha in {c, d, c+d}, columns the same:")
basis = [(1, 0), (0, 1), (1, 1)]
for x in basis:
    print("   ", [cocycle(x, y) for y in basis])

one = va()
for n in (-1, -2, -3):
    out = handle.mode((1, 0), one, n, (0, 0), one)
    print(f"(e^c (x) 1)_({n}) (e^0 (x) 1) =", {k: str(v) for k, v in out.items()})

# the factor z^((d, c)) = z moves the modes down by one: n >= -1 vanish here
for n in range(-4, 2):
    out = handle.mode((0, 1), va([a(-1)]), n, (1, 0), one)
    if out:
        print(f"(e^d (x) a(-1)1)_({n}) (e^c (x) 1) =", {k: str(v) for k, v in out.items()})

for alpha, w in [((1, 1), one), ((2, -1), va([a(-1)]))]:
    print(f"L(0) on e^{alpha} (x) {w} =", extension_l0(handle.spec, alpha, w))
