"""Run the single-edge reversal recipe on random graphs and tally counterexamples.

Counterexamples are split by whether the labels at the tail are unique in
the whole graph, unique only within the tail's component, or shared.
"""

import argparse
import random
from collections import Counter

from graphlie.corpus import random_labeled_graph
from graphlie.graph_model import components, neighborhood, serialize
from graphlie.morphisms import reversal_isomorphism


def tail_label_class(g, tail):
    comp = next(set(c) for c in components(g) if tail in c)
    labels = {g.signed_label(tail, y)[1] for y in neighborhood(g, tail)}
    if all(g.label_multiplicity(c) == 1 for c in labels):
        return "global"
    if all(sum(e[2] == c and e[0] in comp for e in g.edges) == 1 for c in labels):
        return "component"
    return "shared"


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--samples", type=int, default=2000)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--show", type=int, default=1, help="print this many counterexamples per class")
    args = ap.parse_args()

    rng = random.Random(args.seed)
    seen, failed = Counter(), Counter()
    shown = Counter()
    done = 0
    while done < args.samples:
        n = rng.randint(2, 7)
        g = random_labeled_graph(rng, n, rng.uniform(0.3, 0.9), rng.randint(1, n + 2))
        qualifying = [(t, h) for t, h, c in g.edges if g.label_multiplicity(c) == 1]
        if not qualifying:
            continue
        done += 1
        t, h = rng.choice(qualifying)
        cls = tail_label_class(g, t)
        seen[cls] += 1
        result = reversal_isomorphism(g, t, h)
        if not result:
            failed[cls] += 1
            if shown[cls] < args.show:
                shown[cls] += 1
                print(f"-- {cls}: reversing {t}->{h}, witness {result.report.witness}")
                print(serialize(g))
    for cls in ("global", "component", "shared"):
        print(f"{cls:<10} instances={seen[cls]:>5} counterexamples={failed[cls]:>5}")


if __name__ == "__main__":
    main()
