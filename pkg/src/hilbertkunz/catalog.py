"""Named example problems with known Hilbert-Kunz functions."""

from __future__ import annotations


def rational_normal_cone(g: int) -> list[list[int]]:
    return [[1, k] for k in range(g + 1)]


def hirzebruch(a: int) -> list[list[int]]:
    """Exponents of ``u, us, ut, ust, ust^2, .., ust^(a+1)``."""
    return [[1, 0, 0], [1, 1, 0], [1, 0, 1]] + [[1, 1, k] for k in range(1, a + 2)]


def orthant(d: int) -> list[list[int]]:
    return [[int(i == j) for j in range(d)] for i in range(d)]


SEMIGROUPS = {
    "orthant2": orthant(2),
    "orthant3": orthant(3),
    "regcone2": rational_normal_cone(2),
    "regcone3": rational_normal_cone(3),
    "regcone4": rational_normal_cone(4),
    "regcone5": rational_normal_cone(5),
    "toricnonproj": [[2, 1], [1, 1], [1, 2]],
    "S1": hirzebruch(1),
    "S2": hirzebruch(2),
}

HYPERSURFACES = {
    "exKunz": {"p": 7, "vars": 2, "f": [{"exp": [0, 4], "c": 1}, {"exp": [3, 1], "c": -1}]},
    "exMonsky": {"p": 2, "vars": 2, "f": [{"exp": [5, 0], "c": 1}, {"exp": [0, 5], "c": -1}]},
    "quartic": {
        "p": 5,
        "vars": 4,
        "f": [{"exp": [4 if i == j else 0 for j in range(4)], "c": 1} for i in range(4)],
    },
}


def example_specs() -> dict[str, dict]:
    specs = {}
    for name, gens in SEMIGROUPS.items():
        specs[name] = {
            "name": name,
            "kind": "semigroup",
            "generators": gens,
            "primes": [2, 3],
            "e_max": 3,
            "tasks": ["count", "interpolate", "multiplicity", "bg", "oracle", "hs-multiplicity"],
        }
    for name, data in HYPERSURFACES.items():
        specs[name] = {
            "name": name,
            "kind": "hypersurface",
            **data,
            "e_max": 1 if name == "quartic" else 2,
            "tasks": ["oracle"],
        }
    return specs

