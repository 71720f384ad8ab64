"""Generators and reverse engineering of elementary bundles.

`product_bundle` triangulates base x circle by the staircase (monotone
path) subdivision of each prism.  `realize_annulus` and
`realize_over_triangle` run the necklace extraction backwards: one
maximal cell per letter, glued cyclically along surjecting faces, with
vertex identifications forced by the gluing.  The output is a delta
complex; whether it is simplicial is exactly the realizability question
that screening settles.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator

from .complexes import (
    DeltaCell,
    DeltaComplex,
    SimplicialComplex,
    SimplicialMap,
    build_complex,
    is_simplicial,
)
from .errors import FiberTooSmall, RealizationAmbiguity
from .necklaces import Necklace, chern_local, delete_letter, enumerate_necklaces, is_block_word


def product_bundle(base: SimplicialComplex, m: int) -> tuple[SimplicialComplex, SimplicialMap]:
    """The product of a base complex with an m-cycle fiber.

    Total vertices are (base vertex, fiber level) pairs encoded as
    ``base_index * m + level``; each prism splits into staircase
    simplices, the wrap prism reusing the same pattern with level 0 in
    the upper role.
    """
    if m < 3:
        raise FiberTooSmall(f"fiber cycle needs at least 3 vertices, got {m}")
    index = {v: i for i, v in enumerate(base.vertices)}

    def enc(v: int, j: int) -> int:
        return index[v] * m + j

    facets = []
    for f in base.facets:
        k = f.dim
        for j in range(m):
            j2 = (j + 1) % m
            for t in range(k + 1):
                lower = [enc(f[i], j) for i in range(t + 1)]
                upper = [enc(f[i], j2) for i in range(t, k + 1)]
                facets.append(lower + upper)
    total = build_complex(facets)
    vmap = {enc(v, j): v for v in base.vertices for j in range(m)}
    return total, SimplicialMap(total, base, vmap)


@dataclass(frozen=True)
class AnnulusRealization:
    """Delta-complex annulus over an edge built from a 2-letter necklace."""

    word: Necklace
    top_vertices: tuple[int, ...]
    bottom_vertices: tuple[int, ...]
    triangles: tuple[tuple[int, tuple[int, int, int]], ...]  # (letter, vertices)
    as_delta: DeltaComplex

    @property
    def simplicial(self) -> bool:
        return min(self.word.counts) >= 3 and is_simplicial(self.as_delta)

    def duplicated_edges(self) -> list[tuple[DeltaCell, DeltaCell]]:
        return self.as_delta.duplicated_cells(1)


def realize_annulus(w: Necklace) -> AnnulusRealization:
    """The forced annulus with one triangle per letter.

    Walking the word advances a position on the letter's fiber cycle; the
    surjecting diagonals between consecutive triangles are one delta
    1-cell per step boundary, so two of them coincide as vertex sets
    exactly when the walk revisits a fiber-position pair.
    """
    if w.alphabet_size != 2 or not w.is_surjective():
        raise ValueError(f"realize_annulus needs a surjective 2-letter word, got {w.word()!r}")
    n0, n1 = w.counts
    n = w.n
    top = tuple(range(n0))
    bottom = tuple(range(n0, n0 + n1))

    pos = [0, 0]
    states = []
    for s in range(n):
        states.append((pos[0] % n0, pos[1] % n1))
        pos[w.letters[s]] += 1
    if pos != [n0, n1]:  # pragma: no cover - forced by letter counts
        raise RealizationAmbiguity(f"walk of {w.word()!r} failed to close")

    cells0 = [DeltaCell(0, i, (v,), ()) for i, v in enumerate(top + bottom)]
    # 1-cells: top fiber edges, bottom fiber edges, then one diagonal per
    # step boundary; face i of a cell drops vertex i
    edges: list[DeltaCell] = []
    for a in range(n0):
        a2 = (a + 1) % n0
        edges.append(DeltaCell(1, a, (top[a], top[a2]), (a2, a)))
    for b in range(n1):
        b2 = (b + 1) % n1
        edges.append(DeltaCell(1, n0 + b, (bottom[b], bottom[b2]), (n0 + b2, n0 + b)))
    diag0 = n0 + n1
    for s, (a, b) in enumerate(states):
        edges.append(DeltaCell(1, diag0 + s, (top[a], bottom[b]), (n0 + b, a)))

    tris: list[DeltaCell] = []
    tri_info = []
    for s in range(n):
        a, b = states[s]
        s2 = (s + 1) % n
        if w.letters[s] == 0:
            verts = (top[a], top[(a + 1) % n0], bottom[b])
            bnd = (diag0 + s2, diag0 + s, a)
        else:
            verts = (top[a], bottom[b], bottom[(b + 1) % n1])
            bnd = (n0 + b, diag0 + s2, diag0 + s)
        tris.append(DeltaCell(2, s, verts, bnd))
        tri_info.append((w.letters[s], verts))

    try:
        delta = DeltaComplex([cells0, edges, tris])
    except ValueError as exc:  # pragma: no cover - gluing is forced
        raise RealizationAmbiguity(str(exc)) from exc
    return AnnulusRealization(w, top, bottom, tuple(tri_info), delta)


@dataclass(frozen=True)
class SolidTorusRealization:
    """Delta-complex solid torus over a triangle built from a 3-letter
    necklace; restricting over each base edge gives the annulus of the
    word with the opposite letter deleted."""

    word: Necklace
    fiber_vertices: tuple[tuple[int, ...], tuple[int, ...], tuple[int, ...]]
    cells: tuple[tuple[int, tuple[int, int, int, int]], ...]  # (letter, vertices)
    as_delta: DeltaComplex
    face_annuli: tuple[AnnulusRealization, AnnulusRealization, AnnulusRealization]

    @property
    def simplicial(self) -> bool:
        return min(self.word.counts) >= 3 and is_simplicial(self.as_delta)

    def duplicated_edges(self) -> list[tuple[DeltaCell, DeltaCell]]:
        return self.as_delta.duplicated_cells(1)

    def as_bundle(self) -> tuple[SimplicialComplex, SimplicialComplex, SimplicialMap]:
        """(total, base, map) over the single triangle 〈0,1,2〉; only
        meaningful when the realization is simplicial."""
        if not self.simplicial:
            raise ValueError(f"realization of {self.word.word()!r} is not simplicial")
        total = build_complex(verts for _, verts in self.cells)
        base = build_complex([(0, 1, 2)])
        vmap = {}
        for letter, fiber in enumerate(self.fiber_vertices):
            for x in fiber:
                vmap[x] = letter
        return total, base, SimplicialMap(total, base, vmap)


def _interval_cells(
    word: tuple[int, ...], pair: tuple[int, int], states: list[tuple[int, int, int]]
) -> tuple[list[tuple[int, int]], dict[int, int], dict[int, int]]:
    """Diagonal cells for one fiber pair.

    Returns (cell states, active cell at each step boundary, cell created
    by each pair step).  One cell per step whose letter lies in the pair;
    it stays active until the next such step.
    """
    n = len(word)
    i, j = pair
    steps = [s for s in range(n) if word[s] in pair]
    cell_state = []
    created: dict[int, int] = {}
    active: dict[int, int] = {}
    for k, s in enumerate(steps):
        after = states[(s + 1) % n]
        cell_state.append((after[i], after[j]))
        created[s] = k
        t = (s + 1) % n
        nxt = steps[(k + 1) % len(steps)]
        while True:
            active[t] = k
            if t == nxt:
                break
            t = (t + 1) % n
    return cell_state, active, created


def realize_over_triangle(w: Necklace) -> SolidTorusRealization:
    """The forced solid torus with one 3-cell per letter.

    One tetrahedron per letter, glued in a cycle along surjecting
    2-faces; a letter-i cell collapses the current edge of fiber i and
    keeps the other two fiber positions as apexes.  All vertex
    identifications are dictated by the shared faces; a conflict raises
    ``RealizationAmbiguity`` instead of being resolved silently.
    """
    if w.alphabet_size != 3 or not w.is_surjective():
        raise ValueError(
            f"realize_over_triangle needs a surjective 3-letter word, got {w.word()!r}"
        )
    counts = w.counts
    n = w.n
    word = w.letters
    offsets = (0, counts[0], counts[0] + counts[1])
    fibers = tuple(
        tuple(offsets[i] + x for x in range(counts[i])) for i in range(3)
    )

    pos = [0, 0, 0]
    states: list[tuple[int, int, int]] = []
    for s in range(n):
        states.append(tuple(pos))  # type: ignore[arg-type]
        pos[word[s]] += 1
    if pos != list(counts):  # pragma: no cover - forced by letter counts
        raise RealizationAmbiguity(f"walk of {w.word()!r} failed to close")

    def fv(i: int, x: int) -> int:
        return fibers[i][x % counts[i]]

    cells0 = [DeltaCell(0, v, (v,), ()) for v in range(sum(counts))]

    # 1-cells: fiber edges first, then diagonals per fiber pair; face i of
    # a cell drops vertex i, and 0-cell indices equal vertex labels
    edges: list[DeltaCell] = []
    fiber_edge: dict[tuple[int, int], int] = {}
    for i in range(3):
        for x in range(counts[i]):
            fiber_edge[(i, x)] = len(edges)
            edges.append(
                DeltaCell(1, len(edges), (fv(i, x), fv(i, x + 1)), (fv(i, x + 1), fv(i, x)))
            )
    pairs = ((0, 1), (0, 2), (1, 2))
    diag_base: dict[tuple[int, int], int] = {}
    diag_active: dict[tuple[int, int], dict[int, int]] = {}
    diag_created: dict[tuple[int, int], dict[int, int]] = {}
    for p in pairs:
        cell_state, active, created = _interval_cells(word, p, states)
        diag_base[p] = len(edges)
        diag_active[p] = active
        diag_created[p] = created
        for xy in cell_state:
            i, j = p
            verts = (fv(i, xy[0]), fv(j, xy[1]))
            edges.append(DeltaCell(1, len(edges), verts, (verts[1], verts[0])))

    def diag_at(p: tuple[int, int], boundary: int) -> int:
        return diag_base[p] + diag_active[p][boundary]

    def diag_new(p: tuple[int, int], step: int) -> int:
        return diag_base[p] + diag_created[p][step]

    # 2-cells: one surjecting face per step boundary, then two walls per step
    faces: list[DeltaCell] = []
    for s, (a, b, c) in enumerate(states):
        verts = (fv(0, a), fv(1, b), fv(2, c))
        bnd = (diag_at((1, 2), s), diag_at((0, 2), s), diag_at((0, 1), s))
        faces.append(DeltaCell(2, s, verts, bnd))
    wall_index: dict[tuple[int, tuple[int, int]], int] = {}
    for s in range(n):
        a, b, c = states[s]
        lt = word[s]
        if lt == 0:
            specs = [
                ((0, 1), (fv(0, a), fv(0, a + 1), fv(1, b)),
                 (diag_new((0, 1), s), diag_at((0, 1), s), fiber_edge[(0, a)])),
                ((0, 2), (fv(0, a), fv(0, a + 1), fv(2, c)),
                 (diag_new((0, 2), s), diag_at((0, 2), s), fiber_edge[(0, a)])),
            ]
        elif lt == 1:
            specs = [
                ((0, 1), (fv(0, a), fv(1, b), fv(1, b + 1)),
                 (fiber_edge[(1, b)], diag_new((0, 1), s), diag_at((0, 1), s))),
                ((1, 2), (fv(1, b), fv(1, b + 1), fv(2, c)),
                 (diag_new((1, 2), s), diag_at((1, 2), s), fiber_edge[(1, b)])),
            ]
        else:
            specs = [
                ((0, 2), (fv(0, a), fv(2, c), fv(2, c + 1)),
                 (fiber_edge[(2, c)], diag_new((0, 2), s), diag_at((0, 2), s))),
                ((1, 2), (fv(1, b), fv(2, c), fv(2, c + 1)),
                 (fiber_edge[(2, c)], diag_new((1, 2), s), diag_at((1, 2), s))),
            ]
        for p, verts, bnd in specs:
            wall_index[(s, p)] = len(faces)
            faces.append(DeltaCell(2, len(faces), verts, bnd))

    # 3-cells
    cells3: list[DeltaCell] = []
    info = []
    for s in range(n):
        a, b, c = states[s]
        s2 = (s + 1) % n
        lt = word[s]
        if lt == 0:
            verts = (fv(0, a), fv(0, a + 1), fv(1, b), fv(2, c))
            bnd = (s2, s, wall_index[(s, (0, 2))], wall_index[(s, (0, 1))])
        elif lt == 1:
            verts = (fv(0, a), fv(1, b), fv(1, b + 1), fv(2, c))
            bnd = (wall_index[(s, (1, 2))], s2, s, wall_index[(s, (0, 1))])
        else:
            verts = (fv(0, a), fv(1, b), fv(2, c), fv(2, c + 1))
            bnd = (wall_index[(s, (1, 2))], wall_index[(s, (0, 2))], s2, s)
        cells3.append(DeltaCell(3, s, verts, bnd))
        info.append((lt, verts))

    try:
        delta = DeltaComplex([cells0, edges, faces, cells3])
    except ValueError as exc:  # pragma: no cover - gluing is forced
        raise RealizationAmbiguity(str(exc)) from exc

    annuli = tuple(realize_annulus(delete_letter(w, i)) for i in range(3))
    return SolidTorusRealization(w, fibers, tuple(info), delta, annuli)  # type: ignore[arg-type]


@dataclass(frozen=True)
class ScreenReport:
    """Census of necklace realizability up to a length bound."""

    n_max: int
    examined: int
    realizable: int
    rejected: int
    block_words: int
    block_words_rejected: int
    block_words_with_duplicate_edge: int
    max_abs_local: Fraction | None
    max_witness: Necklace | None
    ambiguities: tuple[Necklace, ...]

    @property
    def bound_holds(self) -> bool:
        return self.max_abs_local is not None and self.max_abs_local < Fraction(1, 2)

    @property
    def all_block_words_rejected(self) -> bool:
        return (
            self.block_words == self.block_words_rejected
            == self.block_words_with_duplicate_edge
        )

    def __str__(self) -> str:
        lines = [
            f"necklaces examined (length 9..{self.n_max}, all counts >= 3): {self.examined}",
            f"simplicially realizable: {self.realizable}, rejected: {self.rejected}",
            f"max |pC1| over realizable: {self.max_abs_local}"
            + (f" (witness {self.max_witness.word()})" if self.max_witness else ""),
            f"strict bound |pC1| < 1/2 holds: {self.bound_holds}",
            f"block words: {self.block_words}, rejected: {self.block_words_rejected}, "
            f"with duplicated edge: {self.block_words_with_duplicate_edge}",
            f"realization ambiguities: {len(self.ambiguities)}",
        ]
        return "\n".join(lines)


def _screen_candidates(n_max: int) -> Iterator[Necklace]:
    for n in range(9, n_max + 1):
        for w in enumerate_necklaces(n, 3, surjective_only=True):
            if min(w.counts) >= 3:
                yield w


def screen_realizable(n_max: int) -> ScreenReport:
    """Realize every candidate necklace and tabulate the bound.

    Candidates are the surjective 3-letter necklaces of length <= n_max
    whose letters all occur at least 3 times (smaller counts cannot give
    simplicial fibers).  Realizability means: the forced realization
    exists and is a simplicial complex.
    """
    if n_max < 9:
        raise ValueError("screening needs n_max >= 9 (counts >= 3 force length >= 9)")
    examined = realizable = rejected = 0
    blocks = blocks_rejected = blocks_dup = 0
    max_abs: Fraction | None = None
    witness: Necklace | None = None
    ambiguities: list[Necklace] = []
    for w in _screen_candidates(n_max):
        examined += 1
        block = is_block_word(w)
        if block:
            blocks += 1
        try:
            real = realize_over_triangle(w)
        except RealizationAmbiguity:
            ambiguities.append(w)
            continue
        if real.simplicial:
            realizable += 1
            value = abs(chern_local(w))
            if max_abs is None or value > max_abs:
                max_abs, witness = value, w
        else:
            rejected += 1
            if block:
                blocks_rejected += 1
                if real.duplicated_edges():
                    blocks_dup += 1
    return ScreenReport(
        n_max=n_max,
        examined=examined,
        realizable=realizable,
        rejected=rejected,
        block_words=blocks,
        block_words_rejected=blocks_rejected,
        block_words_with_duplicate_edge=blocks_dup,
        max_abs_local=max_abs,
        max_witness=witness,
        ambiguities=tuple(ambiguities),
    )
