"""A zoo of hypothesis failures, each caught by the matching check.

The width formula needs three things: a semifree action, an isolated
maximum, and moment data consistent with monotonicity.  This script feeds
the checks inputs that break each one and prints the witnesses.
"""

from pathlib import Path

from gromov_width import (
    ActionData,
    FixedComponent,
    HypothesisFailed,
    NotMonotone,
    SubcircleSpec,
    gromov_width,
    load_polytope,
    monotone_normalize,
    run_all_checks,
    toric_action,
)

DATA = Path(__file__).resolve().parent / "data"


def show(title, thunk):
    print(title)
    try:
        thunk()
        print("  passed unexpectedly")
    except (HypothesisFailed, NotMonotone) as exc:
        print(f"  {type(exc).__name__}: {exc}")
    print()


def main():
    show("rectangle [0,2] x [0,4] (edges of unequal level spacing):",
         lambda: monotone_normalize(load_polytope(DATA / "rect_2x4.json")))

    square = monotone_normalize(load_polytope(DATA / "p1xp1_square.json"))[1]
    show("product of spheres, direction (1, 0) (maximum is a whole edge):",
         lambda: gromov_width(toric_action(SubcircleSpec((1, 0), square))))

    fig1 = monotone_normalize(load_polytope(DATA / "fig1.json"))[1]
    show("blow-up, direction (-1, -2) (order-2 isotropy on a facet):",
         lambda: gromov_width(toric_action(SubcircleSpec((-1, -2), fig1))))

    lying = ActionData(n=3, components=(
        FixedComponent("top", 0, (-1, -1)),
        FixedComponent("bot", 0, (1, 1)),
    ))
    show("hand-written data claiming n = 3 with two weights per point:",
         lambda: gromov_width(lying))

    print("check-by-check view of the last example:")
    for result in run_all_checks(lying):
        status = "PASS" if result.passed else f"FAIL ({result.witness})"
        print(f"  {result.check}: {status}")


if __name__ == "__main__":
    main()
