"""Named graphs for the 2-step nilpotent algebras of dimension 4 to 6.

Vertex and label names follow Magnin's basis names, so e.g. in ``g5_2`` the
vertices are x1, x2, x3 and the labels are x4, x5. Abelian factors are
isolated vertices. Expected spans list the non-trivial subalgebras and
graph-ideals from the published tables.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .derivations import complete_graph_distinct_labels
from .graph_model import LabeledDigraph
from .substructures import SubstructureReport, enumerate_substructures


class CatalogError(KeyError):
    pass


@dataclass(frozen=True)
class CatalogEntry:
    name: str
    graph: LabeledDigraph
    expected_subalgebras: tuple[frozenset[str], ...] = ()
    expected_graph_ideals: tuple[frozenset[str], ...] = ()
    source: str = ""
    title: str = ""

    def __post_init__(self) -> None:
        missing = set(self.expected_graph_ideals) - set(self.expected_subalgebras)
        if missing:
            raise ValueError(f"{self.name}: graph-ideals not listed as subalgebras: {missing}")


def _spans(*groups: str) -> tuple[frozenset[str], ...]:
    return tuple(frozenset(g.split()) for g in groups)


def _g(vertices: str, *edges: str) -> LabeledDigraph:
    parsed = []
    for e in edges:
        t, h, c = e.split()
        parsed.append((t, h, c))
    return LabeledDigraph(tuple(vertices.split()), tuple(parsed))


_ENTRIES: dict[str, CatalogEntry] = {}


def _register(entry: CatalogEntry) -> None:
    _ENTRIES[entry.name] = entry


_register(CatalogEntry(
    "heis_x_g1",
    _g("x1 x2 x4", "x1 x2 x3"),
    _spans("x1 x2 x3"),
    _spans("x1 x2 x3"),
    "dimension 4 table",
    "h x g1",
))
_register(CatalogEntry(
    "g5_1",
    _g("x1 x2 x3 x4", "x1 x2 x5", "x3 x4 x5"),
    _spans("x1 x2 x5", "x3 x4 x5"),
    _spans("x1 x2 x5", "x3 x4 x5"),
    "dimension 5 table",
    "g5,1",
))
_register(CatalogEntry(
    "g5_2",
    _g("x1 x2 x3", "x1 x2 x4", "x1 x3 x5"),
    _spans("x1 x3 x5", "x1 x2 x4"),
    (),
    "dimension 5 table",
    "g5,2",
))
_register(CatalogEntry(
    "heis_x_g1_2",
    _g("x1 x2 x4 x5", "x1 x2 x3"),
    _spans("x1 x2 x3"),
    _spans("x1 x2 x3"),
    "dimension 5 table",
    "h x g1^2",
))
_register(CatalogEntry(
    "g6_1",
    _g("x1 x2 x3", "x1 x3 x4", "x2 x3 x5", "x1 x2 x6"),
    _spans("x1 x3 x4", "x1 x2 x6", "x2 x3 x5"),
    (),
    "dimension 6 table",
    "g6,1",
))
# The printed row lists <x1,x2,x6> next to <x1,x2,x5>; one edge cannot carry
# two labels, and the two 5-dimensional graph-ideals force x1-x3 : x6.
_register(CatalogEntry(
    "g6_2",
    _g("x1 x2 x3 x4", "x1 x2 x5", "x1 x3 x6", "x2 x4 x6"),
    _spans("x1 x3 x6", "x1 x2 x5", "x2 x4 x6", "x1 x2 x3 x5 x6", "x1 x2 x4 x5 x6"),
    _spans("x1 x2 x3 x5 x6", "x1 x2 x4 x5 x6"),
    "dimension 6 table",
    "g6,2",
))
_register(CatalogEntry(
    "heis_x_heis",
    _g("x1 x2 x4 x5", "x1 x2 x3", "x4 x5 x6"),
    _spans("x1 x2 x3", "x4 x5 x6"),
    _spans("x1 x2 x3", "x4 x5 x6"),
    "dimension 6 table",
    "h x h",
))
_register(CatalogEntry(
    "heis_x_g1_3",
    _g("x1 x2 x4 x5 x6", "x1 x2 x3"),
    _spans("x1 x2 x3"),
    _spans("x1 x2 x3"),
    "dimension 6 table",
    "h x g1^3",
))
_register(CatalogEntry(
    "g5_1_x_g1",
    _g("x1 x2 x3 x4 x6", "x1 x2 x5", "x3 x4 x5"),
    _spans("x1 x2 x5", "x3 x4 x5", "x1 x2 x3 x4 x5"),
    _spans("x1 x2 x5", "x3 x4 x5", "x1 x2 x3 x4 x5"),
    "dimension 6 table",
    "g5,1 x g1",
))
_register(CatalogEntry(
    "g5_2_x_g1",
    _g("x1 x2 x3 x6", "x1 x2 x4", "x1 x3 x5"),
    _spans("x1 x3 x5", "x1 x2 x4", "x1 x2 x3 x4 x5"),
    _spans("x1 x2 x3 x4 x5"),
    "dimension 6 table",
    "g5,2 x g1",
))
# Orientation recovered by searching all 64 orientations of K4 for one under
# which the published map from g51_k4_source is an isomorphism.
_register(CatalogEntry(
    "k4_single",
    _g("x1 x2 x3 x4", "x1 x2 c1", "x3 x1 c1", "x1 x4 c1", "x2 x3 c1", "x4 x2 c1", "x3 x4 c1"),
    source="K4 isomorphism example, K4 side",
    title="K4, single label",
))
# The published map sends y1, y4 to x1, x2 whose bracket is nonzero, so y1
# and y4 must be adjacent; likewise y2 and y3.
_register(CatalogEntry(
    "g51_k4_source",
    _g("y1 y2 y3 y4", "y1 y4 k", "y2 y3 k"),
    source="K4 isomorphism example, g5,1 side",
    title="g5,1 in the source basis of the K4 example",
))

TABLE_ENTRIES = (
    "heis_x_g1", "g5_1", "g5_2", "heis_x_g1_2",
    "g6_1", "g6_2", "heis_x_heis", "heis_x_g1_3", "g5_1_x_g1", "g5_2_x_g1",
)

# images of the source basis of g51_k4_source in the basis of k4_single
K4_SOURCE_MAP = {
    "y1": {"x1": 1},
    "y2": {"x1": 1, "x2": 1, "x4": -1},
    "y3": {"x1": 1, "x2": 1, "x3": 1},
    "y4": {"x2": 1},
    "k": {"c1": 1},
}

_OUT_OF_SCOPE = {"g6_3": "out of scope: parametric family g6,3 (gamma != 0, not a square)"}


def names() -> list[str]:
    return list(_ENTRIES) + ["K_p_free"] + list(_OUT_OF_SCOPE)


def get(name: str, p: int | None = None) -> CatalogEntry:
    if name in _OUT_OF_SCOPE:
        raise CatalogError(_OUT_OF_SCOPE[name])
    if name == "K_p_free" or (name.startswith("K") and name.endswith("_free")):
        if name != "K_p_free":
            try:
                p = int(name[1:-5])
            except ValueError:
                raise CatalogError(f"bad complete-graph name {name!r}") from None
        if p is None or p < 2:
            raise CatalogError("K_p_free needs p >= 2")
        return CatalogEntry(
            f"K{p}_free",
            complete_graph_distinct_labels(p),
            source="free 2-step nilpotent algebra on p generators",
            title=f"K{p}, all labels distinct",
        )
    try:
        return _ENTRIES[name]
    except KeyError:
        raise CatalogError(f"unknown catalog entry {name!r}; available: {', '.join(names())}") from None


def expected_dimension(entry: CatalogEntry) -> int | None:
    """Dimension implied by the entry name, where the name implies one."""
    title_dims = {
        "heis_x_g1": 4, "g5_1": 5, "g5_2": 5, "heis_x_g1_2": 5, "g6_1": 6, "g6_2": 6,
        "heis_x_heis": 6, "heis_x_g1_3": 6, "g5_1_x_g1": 6, "g5_2_x_g1": 6,
        "k4_single": 5, "g51_k4_source": 5,
    }
    if entry.name in title_dims:
        return title_dims[entry.name]
    if entry.name.endswith("_free"):
        p = int(entry.name[1:-5])
        return p + p * (p - 1) // 2
    return None


@dataclass
class VerifyReport:
    name: str
    found_subalgebras: list[frozenset[str]]
    found_graph_ideals: list[frozenset[str]]
    misses: list[str] = field(default_factory=list)
    extras: list[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.misses

    def as_dict(self) -> dict:
        return {
            "name": self.name,
            "subalgebras": [_fmt(s) for s in self.found_subalgebras],
            "graph_ideals": [_fmt(s) for s in self.found_graph_ideals],
            "misses": self.misses,
            "extras": self.extras,
            "passed": self.passed,
        }


def _fmt(span: frozenset[str]) -> str:
    return "<" + ",".join(sorted(span, key=_name_key)) + ">"


def _name_key(name: str):
    digits = "".join(ch for ch in name if ch.isdigit())
    return (name.rstrip("0123456789_"), int(digits) if digits else 0, name)


def verify_entry(entry: CatalogEntry) -> VerifyReport:
    reports: list[SubstructureReport] = enumerate_substructures(entry.graph)
    nontrivial = [r for r in reports if not r.is_trivial and r.is_subalgebra]
    by_span = {r.span: r for r in nontrivial}
    result = VerifyReport(
        entry.name,
        [r.span for r in nontrivial],
        [r.span for r in nontrivial if r.is_graph_ideal],
    )
    ideals = set(entry.expected_graph_ideals)
    for span in entry.expected_subalgebras:
        r = by_span.get(span)
        if r is None:
            result.misses.append(f"subalgebra {_fmt(span)} not found")
        elif r.is_graph_ideal != (span in ideals):
            want = "graph-ideal" if span in ideals else "not a graph-ideal"
            result.misses.append(f"{_fmt(span)} expected {want}")
    expected = set(entry.expected_subalgebras)
    for span in by_span:
        if span not in expected:
            result.extras.append(_fmt(span))
    return result


def verify_all() -> list[VerifyReport]:
    return [verify_entry(get(name)) for name in TABLE_ENTRIES]
