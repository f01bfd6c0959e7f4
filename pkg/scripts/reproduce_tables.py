"""Enumerate subalgebras and graph-ideals for every tabulated low-dimensional algebra."""

from graphlie import catalog
from graphlie.substructures import enumerate_substructures


def main() -> None:
    for name in catalog.TABLE_ENTRIES:
        entry = catalog.get(name)
        print(f"{name}  ({entry.title})")
        for r in enumerate_substructures(entry.graph):
            if r.is_trivial or not r.is_subalgebra:
                continue
            kind = "graph-ideal" if r.is_graph_ideal else "subalgebra"
            print(f"    {r.describe():<24} {kind}")
        report = catalog.verify_entry(entry)
        print(f"    misses={len(report.misses)} extras={len(report.extras)}")


if __name__ == "__main__":
    main()
