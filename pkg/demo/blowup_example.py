"""Walk through the one-point blow-up of the projective plane.

The polytope in data/fig1.json is a trapezoid cut from the size-3 simplex.
After translating it into reflexive position, the vertical subcircle
direction (0, 1) is semifree with an isolated maximum and the width formula
applies; the skew direction (-1, -2) picks up an order-2 isotropy group on
one facet and is rejected with a witness.
"""

from pathlib import Path

from gromov_width import (
    HypothesisFailed,
    SubcircleSpec,
    edge_cross_check,
    enumerate_vertices,
    gromov_width,
    load_polytope,
    monotone_normalize,
    seidel_structure,
    toric_action,
)

DATA = Path(__file__).resolve().parent / "data"


def main():
    polytope = load_polytope(DATA / "fig1.json")
    translation, reflexive = monotone_normalize(polytope)
    print("facets:", [(list(f.normal), str(f.offset)) for f in polytope.facets])
    print("translation into reflexive position:",
          tuple(str(t) for t in translation))
    print("reflexive vertices:",
          [tuple(int(c) for c in v.position)
           for v in enumerate_vertices(reflexive)])
    print()

    spec = SubcircleSpec((0, 1), reflexive)
    action = toric_action(spec)
    print("direction (0, 1):")
    for comp in action.components:
        print(f"  {comp.label}: complex_dim {comp.complex_dim}, "
              f"weights {list(comp.weights)}, H = {comp.H}")
    report = gromov_width(action)
    print(f"  width = {report.H_max} - {report.s} = {report.width}")
    print("  Seidel element:", seidel_structure(action).formula())
    print("  edge invariants (c1, area, lattice length):")
    for row in edge_cross_check(spec):
        tail = tuple(int(c) for c in row.edge.tail.position)
        head = tuple(int(c) for c in row.edge.head.position)
        print(f"    {tail} -> {head}: {row.c1}, {row.area}, {row.lattice_length}")
    print()

    print("direction (-1, -2):")
    try:
        gromov_width(toric_action(SubcircleSpec((-1, -2), reflexive)))
    except HypothesisFailed as exc:
        print(f"  rejected: {exc}")


if __name__ == "__main__":
    main()
