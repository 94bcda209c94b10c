"""Width table for Grassmannians Gr(k, m).

Each Gr(k, m) with 1 <= k <= m - k carries the circle rotating the first k
coordinates of C^m.  The action is semifree with an isolated maximum, the
moment levels step down by m, and the width lands on m every time.
"""

import argparse

from gromov_width import GrassmannianSpec, grassmannian_action, gromov_width


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--max-codim", type=int, default=6,
                        help="largest m - k to tabulate (default 6)")
    args = parser.parse_args()

    print(f"{'space':>10} {'n':>4} {'levels':>28} {'width':>6}")
    for q in range(1, args.max_codim + 1):
        for k in range(1, q + 1):
            m = k + q
            action = grassmannian_action(GrassmannianSpec(k, m))
            report = gromov_width(action)
            levels = sorted({c.H for c in action.components}, reverse=True)
            shown = ", ".join(str(h) for h in levels[:4])
            if len(levels) > 4:
                shown += ", ..."
            print(f"{f'Gr({k},{m})':>10} {action.n:>4} {shown:>28} "
                  f"{report.width:>6}")
            assert report.width == m


if __name__ == "__main__":
    main()
