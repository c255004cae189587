# # Closed forms by interpolation
#
# `n -> #(n P ∩ Z^d)` is a quasipolynomial whose period divides the lcm of
# the vertex denominators of `P`.  Fitting it from a few counts and then
# restricting to `n = p^e` gives the Hilbert-Kunz function in closed form.

from hilbertkunz import build_polycell, ehrhart_quasipolynomial, emit_latex, hk_form, new_semigroup

M = new_semigroup([[2, 1], [1, 1], [1, 2]])
qp = ehrhart_quasipolynomial(build_polycell(M))
print("period", qp.period)
print(emit_latex(qp))

# In characteristic `p` only the residues `p^e mod 3` matter.  For `p = 3`
# the constant term vanishes; for other primes it is `-2/3`.

for p in (2, 3, 5):
    form = hk_form(M, p, e_max=3)
    print(p, form.to_json()["cycle"])

# The leading coefficient is the Hilbert-Kunz multiplicity and the second
# coefficient is constant as well.

print(form.alpha, form.beta)

# For the degree 3 rational normal cone in characteristic 2 the closed form
# alternates with the parity of `e`.

R3 = new_semigroup([[1, k] for k in range(4)])
form = hk_form(R3, 2, e_max=4)
print(form.e_start, form.rho, [form.polynomial(e) for e in (1, 2)])

# A three dimensional example with a genuinely nonzero second coefficient:

S1 = new_semigroup([[1, 0, 0], [1, 1, 0], [1, 0, 1], [1, 1, 1], [1, 1, 2]])
qp = ehrhart_quasipolynomial(build_polycell(S1))
print(emit_latex(qp))
