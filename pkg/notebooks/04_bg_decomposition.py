# # The Bruns-Gubeladze decomposition
#
# The hyperplanes `sigma_i(x) = z` for integers `z` cut `P` into cells.
# Cells modulo the lattice are conic divisor classes, and
#
#     hk(q) = sum over classes of mu(class) * nu_class(q)
#
# where `nu` counts lattice points in the dilated upper closure of a cell
# and `mu` is the minimal number of generators of the class's ideal.

import tempfile
from pathlib import Path

from hilbertkunz import bg_decomposition, build_polycell, count_lattice_points, emit_svg, new_semigroup

M = new_semigroup([[1, 0], [1, 1], [1, 2]])
dec = bg_decomposition(M)
print(len(dec.cells), "cells in", len(dec.classes), "classes")
for row in dec.report():
    print(row)

# Both expressions agree for every `q`:

P = build_polycell(M)
print([(dec.hk(q), count_lattice_points(P, q)) for q in (2, 3, 4, 5, 8, 9)])

# The number of classes of the degree `g` cone is `g`:

for g in (2, 3, 4):
    print(g, len(bg_decomposition(new_semigroup([[1, k] for k in range(g + 1)])).classes))

# The sum of cell volumes is the Hilbert-Kunz multiplicity.

from hilbertkunz import volume_via_cells

print(volume_via_cells(P))

# A picture of `3 P` with its cells coloured by class.

svg = emit_svg(P, 3, dec)
print(svg.count('class="lattice-point"'), "lattice points drawn")
out = Path(tempfile.mkdtemp()) / "regcone2.svg"
out.write_text(svg)
print("wrote", out)
