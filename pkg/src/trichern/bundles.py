"""Triangulated circle bundles: validation, fiber orientation, stalks.

A simplicial map ``total -> base`` is accepted as a circle bundle when

(a) the full preimage of every base vertex is a single simplicial cycle
    with at least three vertices;
(b) over every base edge, the maximal simplices of the preimage are
    exactly the triangles surjecting onto the edge, each with exactly one
    collapsing edge, and they form a single cycle under adjacency along
    shared surjecting edges;
(c) over every base triangle, the same holds one dimension up: surjecting
    tetrahedra with one collapsing edge apiece, a single cycle along
    shared surjecting 2-faces.

Additionally every stalk must traverse each fiber coherently: walking the
stalk cycle, the collapsing edges over a base vertex sweep out its fiber
cycle exactly once, in a consistent direction.  These combinatorial
conditions are the operative definition of bundle-ness here; they are the
machine-checkable reading of "the realization is a trivial PL circle
bundle over every closed base simplex".
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping

from .complexes import (
    Simplex,
    SimplicialComplex,
    SimplicialMap,
    ValidationReport,
    preimage_subcomplex,
    validate_map,
)
from .errors import (
    InvalidBundle,
    NonOrientableBundleStructure,
    UnknownSimplex,
    WrongDimension,
)
from .necklaces import Necklace


@dataclass(frozen=True)
class _StalkCycle:
    """Maximal cells of one stalk in an (unanchored) cyclic order.

    ``labels[i]`` is the base vertex whose fiber carries cell i's
    collapsing edge; ``collapses[i]`` is that edge directed by the stored
    traversal (tail is shared with cell i-1, head with cell i+1).
    """

    cells: tuple[Simplex, ...]
    labels: tuple[int, ...]
    collapses: tuple[tuple[int, int], ...]

    def directed_edges_over(self, base_vertex: int) -> dict[int, int]:
        return {
            t: h
            for lbl, (t, h) in zip(self.labels, self.collapses)
            if lbl == base_vertex
        }

    def reversed(self) -> "_StalkCycle":
        return _StalkCycle(
            cells=self.cells[::-1],
            labels=self.labels[::-1],
            collapses=tuple((h, t) for (t, h) in self.collapses[::-1]),
        )


class CircleBundle:
    """A validated triangulated circle bundle.

    Construct via :func:`validate_bundle`; instances always hold a map
    that passed every structural check, plus cached fiber cycles and
    stalk cycles for reuse.
    """

    def __init__(
        self,
        bundle_map: SimplicialMap,
        fiber_cycles: dict[int, tuple[int, ...]],
        stalk_cycles: dict[Simplex, _StalkCycle],
    ):
        self.map = bundle_map
        self.total = bundle_map.source
        self.base = bundle_map.target
        self.fiber_cycles = fiber_cycles
        self._stalk_cycles = stalk_cycles
        self.validated = True

    def fiber(self, base_vertex: int) -> tuple[int, ...]:
        """Vertices of the fiber cycle over a base vertex, in one of its
        two cyclic orders."""
        return self.fiber_cycles[base_vertex]

    def __repr__(self) -> str:
        return f"CircleBundle({self.total!r} over {self.base!r})"


@dataclass(frozen=True)
class FiberOrientation:
    """A coherent cyclic direction on every fiber: base vertex -> successor
    map on that fiber's vertices."""

    succ: Mapping[int, Mapping[int, int]]

    def successor(self, base_vertex: int, fiber_vertex: int) -> int:
        return self.succ[base_vertex][fiber_vertex]

    def reversed(self) -> "FiberOrientation":
        return FiberOrientation(
            {v: {b: a for a, b in m.items()} for v, m in self.succ.items()}
        )


@dataclass(frozen=True)
class ElementaryStalk:
    """One stalk, anchored: cells in the oriented cyclic order, starting
    at the collapsing edge leaving the least vertex of the anchor fiber."""

    base_simplex: Simplex
    cells: tuple[Simplex, ...]
    labels: tuple[int, ...]
    collapses: tuple[tuple[int, int], ...]


def _cycle_from_edges(edges: Iterable[tuple[int, int]]) -> tuple[int, ...] | None:
    """Order the vertices of a single cycle given its undirected edges;
    None if the edges do not form one cycle covering every vertex."""
    adj: dict[int, list[int]] = {}
    count = 0
    for a, b in edges:
        adj.setdefault(a, []).append(b)
        adj.setdefault(b, []).append(a)
        count += 1
    if not adj or count != len(adj):
        return None
    if any(len(nbrs) != 2 for nbrs in adj.values()):
        return None
    start = min(adj)
    order = [start]
    prev, cur = None, start
    while True:
        a, b = adj[cur]
        prev, cur = cur, (a if a != prev else b)
        if cur == start:
            break
        order.append(cur)
    if len(order) != len(adj):
        return None
    return tuple(order)


def _check_fiber(m: SimplicialMap, v: int, failures: list[str]) -> tuple[int, ...] | None:
    sub = preimage_subcomplex(m, Simplex((v,)))
    if not sub.facets:
        failures.append(f"fiber over vertex {v}: empty")
        return None
    if any(f.dim != 1 for f in sub.facets):
        failures.append(f"fiber over vertex {v}: not a pure graph")
        return None
    cycle = _cycle_from_edges((a, b) for a, b in sub.facets)
    if cycle is None or len(cycle) != len(sub.vertices):
        failures.append(f"fiber over vertex {v}: not a single cycle")
        return None
    if len(cycle) < 3:
        failures.append(f"fiber over vertex {v}: cycle has {len(cycle)} < 3 vertices")
        return None
    return cycle


def _fiber_edge_set(cycle: tuple[int, ...]) -> set[frozenset[int]]:
    n = len(cycle)
    return {frozenset((cycle[i], cycle[(i + 1) % n])) for i in range(n)}


def _check_stalk(
    m: SimplicialMap,
    s: Simplex,
    fiber_cycles: dict[int, tuple[int, ...]],
    failures: list[str],
) -> _StalkCycle | None:
    """Conditions (b)/(c) for one base edge or triangle."""
    name = f"stalk over {tuple(s)}"
    sub = preimage_subcomplex(m, s)
    k = s.dim
    cells: list[Simplex] = []
    collapse_pair: dict[Simplex, tuple[int, int]] = {}
    label: dict[Simplex, int] = {}
    for cell in sub.facets:
        by_image: dict[int, list[int]] = {w: [] for w in s}
        for x in cell:
            by_image[m.vertex_map[x]].append(x)
        doubled = [w for w, xs in by_image.items() if len(xs) == 2]
        if (
            cell.dim != k + 1
            or len(doubled) != 1
            or any(len(xs) not in (1, 2) for xs in by_image.values())
        ):
            failures.append(
                f"{name}: maximal cell {tuple(cell)} is not a surjecting "
                f"{k + 1}-simplex with exactly one collapsing edge"
            )
            return None
        w = doubled[0]
        cells.append(cell)
        collapse_pair[cell] = tuple(by_image[w])  # type: ignore[assignment]
        label[cell] = w
    if not cells:
        failures.append(f"{name}: no maximal cells")
        return None

    # adjacency along shared surjecting faces (cell minus one collapse endpoint)
    face_cells: dict[Simplex, list[Simplex]] = {}
    for cell in cells:
        for x in collapse_pair[cell]:
            face = cell.opposite_face(x)
            face_cells.setdefault(face, []).append(cell)
    bad = [f for f, cs in face_cells.items() if len(cs) != 2]
    if bad:
        failures.append(
            f"{name}: surjecting face {tuple(bad[0])} lies in "
            f"{len(face_cells[bad[0]])} cells instead of 2"
        )
        return None

    # walk the cycle; the start cell's direction is a free choice and the
    # closing step is consistent with it because its two surjecting faces
    # are distinct
    start = cells[0]
    x0, x1 = collapse_pair[start]
    order = [start]
    tails = [x0]
    heads = [x1]
    cur, exit_face = start, start.opposite_face(x0)
    while True:
        a, b = face_cells[exit_face]
        nxt = b if a is cur else a
        if nxt is start:
            break
        t, h = collapse_pair[nxt]
        if t not in exit_face:
            t, h = h, t
        order.append(nxt)
        tails.append(t)
        heads.append(h)
        cur, exit_face = nxt, nxt.opposite_face(t)
    if len(order) != len(cells):
        failures.append(
            f"{name}: not a single cycle (walk closed after {len(order)} of "
            f"{len(cells)} cells)"
        )
        return None

    cycle = _StalkCycle(
        cells=tuple(order),
        labels=tuple(label[c] for c in order),
        collapses=tuple(zip(tails, heads)),
    )

    # coherent fiber traversal: over each vertex of s, the collapsing
    # edges are exactly the fiber edges, each once, swept in one direction
    for w in s:
        directed = cycle.directed_edges_over(w)
        fiber = fiber_cycles.get(w)
        if fiber is None:
            return None
        edges = {frozenset((t, h)) for t, h in directed.items()}
        if len(directed) != len(fiber) or edges != _fiber_edge_set(fiber):
            failures.append(
                f"{name}: collapsing edges over vertex {w} do not sweep its "
                f"fiber cycle exactly once"
            )
            return None
        if set(directed.values()) != set(directed.keys()):
            failures.append(
                f"{name}: incoherent traversal direction of the fiber over {w}"
            )
            return None
    return cycle


def validate_bundle(
    total: SimplicialComplex,
    base: SimplicialComplex,
    bundle_map: SimplicialMap | Mapping[int, int],
) -> CircleBundle:
    """Validate ``total -> base`` as a triangulated circle bundle.

    Returns the validated bundle, or raises :class:`InvalidBundle` whose
    ``report`` itemizes every failed check by base simplex.
    """
    failures: list[str] = []
    if isinstance(bundle_map, SimplicialMap):
        m = bundle_map
        if m.source is not total or m.target is not base:
            m = SimplicialMap(total, base, bundle_map.vertex_map)
    else:
        m = SimplicialMap(total, base, bundle_map)

    if base.dim not in (1, 2) or not base.is_pure():
        failures.append(f"base must be pure of dimension 1 or 2, got {base!r}")
        raise InvalidBundle(ValidationReport(tuple(failures)))
    map_report = validate_map(m)
    if not map_report.valid:
        failures.extend(f"map: {f}" for f in map_report.failures)
        raise InvalidBundle(ValidationReport(tuple(failures)))

    fiber_cycles: dict[int, tuple[int, ...]] = {}
    for v in base.vertices:
        cycle = _check_fiber(m, v, failures)
        if cycle is not None:
            fiber_cycles[v] = cycle

    stalk_cycles: dict[Simplex, _StalkCycle] = {}
    if not failures:
        for dim in (1, 2):
            for s in base.simplices(dim):
                sc = _check_stalk(m, s, fiber_cycles, failures)
                if sc is not None:
                    stalk_cycles[s] = sc

    if failures:
        raise InvalidBundle(ValidationReport(tuple(failures)))
    return CircleBundle(m, fiber_cycles, stalk_cycles)


def bundle_report(
    total: SimplicialComplex,
    base: SimplicialComplex,
    bundle_map: SimplicialMap | Mapping[int, int],
) -> ValidationReport:
    """Report-style wrapper around :func:`validate_bundle`."""
    try:
        validate_bundle(total, base, bundle_map)
    except InvalidBundle as exc:
        return exc.report
    return ValidationReport(())


def _succ_from_cycle(cycle: tuple[int, ...]) -> dict[int, int]:
    n = len(cycle)
    return {cycle[i]: cycle[(i + 1) % n] for i in range(n)}


def default_seed(b: CircleBundle) -> tuple[int, int]:
    """Deterministic seed: the least vertex of the fiber over the least
    base vertex, directed along the stored fiber cycle."""
    v0 = min(b.base.vertices)
    cycle = b.fiber(v0)
    x = min(cycle)
    return x, _succ_from_cycle(cycle)[x]


def propagate_orientation(b: CircleBundle, seed: tuple[int, int]) -> FiberOrientation:
    """Extend a directed fiber edge to a coherent orientation of every
    fiber, transporting the direction across base edges breadth-first.

    Raises :class:`NonOrientableBundleStructure` with the offending base
    cycle if two transport routes disagree.
    """
    x, y = seed
    v0 = b.map.vertex_map.get(x)
    if v0 is None or b.map.vertex_map.get(y) != v0:
        raise UnknownSimplex(f"seed {seed} is not an edge of one fiber")
    cycle0 = b.fiber(v0)
    succ0 = _succ_from_cycle(cycle0)
    if succ0.get(x) != y:
        succ0 = {q: p for p, q in succ0.items()}
        if succ0.get(x) != y:
            raise UnknownSimplex(f"seed {seed} is not an edge of the fiber over {v0}")

    succ: dict[int, dict[int, int]] = {v0: succ0}
    parent: dict[int, tuple[int, Simplex] | None] = {v0: None}
    queue = [v0]
    base_edges = b.base.simplices(1)
    incident: dict[int, list[Simplex]] = {}
    for e in base_edges:
        for v in e:
            incident.setdefault(v, []).append(e)

    while queue:
        p = queue.pop(0)
        for e in incident.get(p, []):
            q = e[0] if e[1] == p else e[1]
            sc = b._stalk_cycles[e]
            dir_p = sc.directed_edges_over(p)
            if dir_p == succ[p]:
                induced = sc.directed_edges_over(q)
            else:
                rev = sc.reversed()
                dir_p = rev.directed_edges_over(p)
                if dir_p != succ[p]:
                    raise NonOrientableBundleStructure(
                        f"stalk over {tuple(e)} does not transport the fiber over {p}"
                    )
                induced = rev.directed_edges_over(q)
            if q not in succ:
                succ[q] = induced
                parent[q] = (p, e)
                queue.append(q)
            elif succ[q] != induced:
                raise NonOrientableBundleStructure(
                    "orientation transport disagrees around the base cycle "
                    f"{_diagnostic_cycle(parent, p, q)} (closing edge {tuple(e)})"
                )
    missing = [v for v in b.base.vertices if v not in succ]
    if missing:
        raise NonOrientableBundleStructure(
            f"base is not connected; vertices {missing} were never reached"
        )
    return FiberOrientation(succ)


def _diagnostic_cycle(parent, p: int, q: int) -> list[int]:
    def path(v: int) -> list[int]:
        out = [v]
        while parent[v] is not None:
            v = parent[v][0]
            out.append(v)
        return out

    pa, qa = path(p), path(q)
    while len(pa) > 1 and len(qa) > 1 and pa[-1] == qa[-1] and pa[-2] == qa[-2]:
        pa.pop()
        qa.pop()
    return pa + qa[::-1]


def stalk(b: CircleBundle, s: Simplex, orientation: FiberOrientation) -> ElementaryStalk:
    """The stalk over a base edge or triangle, cyclically ordered and
    anchored by the oriented fiber over the least vertex of ``s``:
    traversal follows that fiber's direction and starts at the cell whose
    collapsing edge leaves the fiber's least vertex."""
    s = Simplex(s)
    if s.dim == 0:
        raise WrongDimension("stalk needs a base edge or triangle; use preimage_subcomplex")
    sc = b._stalk_cycles.get(s)
    if sc is None:
        raise UnknownSimplex(f"{tuple(s)} is not an edge or triangle of the base")
    u = min(s)
    succ_u = dict(orientation.succ[u])
    if sc.directed_edges_over(u) != succ_u:
        sc = sc.reversed()
        if sc.directed_edges_over(u) != succ_u:
            raise NonOrientableBundleStructure(
                f"orientation does not match either traversal of the stalk over {tuple(s)}"
            )
    anchor_tail = min(b.fiber(u))
    for i, (lbl, (t, _)) in enumerate(zip(sc.labels, sc.collapses)):
        if lbl == u and t == anchor_tail:
            start = i
            break
    else:  # pragma: no cover - validation guarantees the anchor exists
        raise UnknownSimplex(f"no collapsing edge leaves vertex {anchor_tail}")
    idx = list(range(start, len(sc.cells))) + list(range(start))
    return ElementaryStalk(
        base_simplex=s,
        cells=tuple(sc.cells[i] for i in idx),
        labels=tuple(sc.labels[i] for i in idx),
        collapses=tuple(sc.collapses[i] for i in idx),
    )


def extract_necklace(st: ElementaryStalk) -> Necklace:
    """The cyclic word of collapsing-edge labels along the oriented stalk,
    with letters numbered by position in the ordered base simplex."""
    base_order = {v: i for i, v in enumerate(st.base_simplex)}
    return Necklace(
        tuple(base_order[lbl] for lbl in st.labels),
        alphabet_size=len(st.base_simplex),
    )
