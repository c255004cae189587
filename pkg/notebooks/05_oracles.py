# # Independent checks
#
# Two brute-force routes compute Hilbert-Kunz values without any polyhedral
# geometry.  The first enumerates monomials of `k[M]` directly.

from hilbertkunz import (
    HypersurfacePresentation,
    build_polycell,
    count_lattice_points,
    hk_hypersurface,
    new_semigroup,
    semigroup_bfs_hk,
)

M = new_semigroup([[2, 1], [1, 1], [1, 2]])
P = build_polycell(M)
for p in (2, 3):
    print(p, [(semigroup_bfs_hk(M, None, p, e), count_lattice_points(P, p**e)) for e in (1, 2, 3)])

# The second handles hypersurfaces `k[x_1..x_s] / (f)` over `F_p`: the
# length of `k[x] / (x_i^q, f)` is `q^s` minus the rank of multiplication by
# `f` on `k[x] / (x_i^q)`.

f = HypersurfacePresentation.create(2, [((0, 4), 1), ((3, 1), -1)], 7)
print([hk_hypersurface(f, e) for e in (1, 2)])

# `x^5 - y^5` in characteristic 2 stays within a bounded distance of `5 q`.

g = HypersurfacePresentation.create(2, [((5, 0), 1), ((0, 5), -1)], 2)
print([(2**e, hk_hypersurface(g, e)) for e in range(1, 6)])

# The diagonal quartic in four variables, characteristic 5:

h = HypersurfacePresentation.create(4, [(tuple(4 * (i == j) for j in range(4)), 1) for i in range(4)], 5)
print(hk_hypersurface(h, 1))
