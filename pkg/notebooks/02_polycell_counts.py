# # Hilbert-Kunz values as lattice counts
#
# For the maximal ideal the value `l(R / m^[q])` is the number of lattice
# points in `q P`, where `P` is the cone minus the union of the cones
# shifted to each generator.  `P` contains its lower boundary only.

from hilbertkunz import build_polycell, count_lattice_points, hilbert_samuel_multiplicity, monomial_ideal, new_semigroup, vertices
from hilbertkunz.polycell import count_fractional_points, lattice_points

M = new_semigroup([[1, 0], [1, 1], [1, 2]])
P = build_polycell(M)
print(sorted(vertices(P)))

# Counts for the first few dilations.  These grow like `3/2 n^2`.

counts = [count_lattice_points(P, n) for n in range(1, 10)]
print(counts)

# The same numbers come out of counting points of `P` on the finer grid
# `(1/n) Z^d`, and out of listing the points one by one.

print([count_fractional_points(P, n) for n in range(1, 10)] == counts)
print(lattice_points(P, 3))

# Other ideals work too, as long as the quotient has finite length.
# For `(x^2, y^3)` in two variables the count at `q` is `6 q^2`.

orth = new_semigroup([[1, 0], [0, 1]])
I = monomial_ideal(orth, [[2, 0], [0, 3]])
print([count_lattice_points(build_polycell(orth, I), q) for q in (2, 4, 8)])

# The Hilbert-Samuel multiplicity is `d!` times the volume below the Newton
# polyhedron; for the degree 2 cone it is the degree, 2.

print(hilbert_samuel_multiplicity(M), hilbert_samuel_multiplicity(orth, I))

# The counts run exactly even for large `q`:

S2 = new_semigroup([[1, 0, 0], [1, 1, 0], [1, 0, 1]] + [[1, 1, k] for k in range(1, 4)])
print(count_lattice_points(build_polycell(S2), 343))
