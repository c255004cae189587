# # Affine semigroups and their cones
#
# A semigroup ring `k[M]` is described by a list of generators in `Z^d`.
# The library checks that the semigroup is pointed and generates the full
# lattice, and computes the support hyperplanes that cut out its cone.

from hilbertkunz import contains, extreme_rays, is_normal, new_semigroup

# The rational normal cone of degree 2 is generated by `(1,0), (1,1), (1,2)`.

M = new_semigroup([[1, 0], [1, 1], [1, 2]])
print("support normals:", M.hyperplanes.normals)
print("extreme rays:", extreme_rays(M))

# Membership follows the generators, not just the cone.  `(2,3)` is
# `(1,1) + (1,2)`; `(1,3)` lies outside the cone.

print(contains(M, (2, 3)), contains(M, (1, 3)))

# Normality means every lattice point of the cone is in `M`.  The
# generators `(1,0), (1,1), (1,3)` span a cone containing `(1,2)`, which is
# not a sum of generators even though twice it is:

N = new_semigroup([[1, 0], [1, 1], [1, 3]])
print("normal:", is_normal(M), is_normal(N))
print("(1,2) in N:", contains(N, (1, 2)), " 2*(1,2) in N:", contains(N, (2, 4)))

# Invalid input is rejected with a message naming the failed check.

for gens in ([[1, 0], [-1, 0], [0, 1]], [[1, 0], [1, 2]]):
    try:
        new_semigroup(gens)
    except ValueError as exc:
        print(gens, "->", exc)

# A three dimensional example: the cone over a Hirzebruch surface has five
# generators but only four extreme rays, since `(1,1,1)` sits on an edge.

S1 = new_semigroup([[1, 0, 0], [1, 1, 0], [1, 0, 1], [1, 1, 1], [1, 1, 2]])
print(S1.hyperplanes.normals)
print(extreme_rays(S1))
