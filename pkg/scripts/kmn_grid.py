"""Der0 dimensions of K_{m,n} graph algebras against the closed forms.

    python3 scripts/kmn_grid.py --max 5
"""

import argparse
import itertools

from graphlie.derivations import (
    build_kmn_distinct_labels,
    build_kmn_single_label,
    der0,
    kmn_dimension_exact,
    kmn_dimension_formula,
)
from graphlie.lie_core import build_lie


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--max", type=int, default=4)
    args = ap.parse_args()

    print(f"{'labels':<9}{'m':>3}{'n':>3}{'der0':>7}{'exact':>7}{'published':>11}")
    builders = {"single": build_kmn_single_label, "distinct": build_kmn_distinct_labels}
    for labeling, builder in builders.items():
        for m, n in itertools.product(range(1, args.max + 1), repeat=2):
            dim = der0(build_lie(builder(m, n))).dimension
            try:
                published = str(kmn_dimension_formula(m, n, labeling))
            except ValueError:
                published = "n/a"
            flag = "" if published in ("n/a", str(dim)) else "  *"
            exact = kmn_dimension_exact(m, n, labeling)
            print(f"{labeling:<9}{m:>3}{n:>3}{dim:>7}{exact:>7}{published:>11}{flag}")


if __name__ == "__main__":
    main()
