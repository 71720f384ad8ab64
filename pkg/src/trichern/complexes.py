"""Finite ordered simplicial complexes, delta complexes and simplicial maps.

Vertices are non-negative integers and the global integer order is the
vertex order of every complex.  Simplicial complexes are stored as facets
(maximal simplices); lower-dimensional faces are materialized lazily per
dimension, since bundle stalks are queried dimension by dimension.

Delta complexes permit distinct cells of equal dimension with the same
vertex set, and cells with repeated vertices; they are the common
representation for necklace realizations, which are exactly the objects
where that freedom is needed.  Every simplicial complex embeds via
:meth:`SimplicialComplex.as_delta`.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, Iterator, Mapping

from .errors import InvalidSimplex, MapDomainError, UnknownSimplex


class Simplex(tuple):
    """A simplex: a strictly increasing tuple of vertex ids."""

    def __new__(cls, vertices: Iterable[int]) -> "Simplex":
        vs = tuple(vertices)
        if not vs:
            raise InvalidSimplex("a simplex needs at least one vertex")
        for v in vs:
            if not isinstance(v, int) or isinstance(v, bool) or v < 0:
                raise InvalidSimplex(f"vertex ids must be non-negative integers, got {v!r}")
        if len(set(vs)) != len(vs):
            raise InvalidSimplex(f"repeated vertex in simplex {vs!r}")
        return super().__new__(cls, sorted(vs))

    @property
    def vertices(self) -> tuple[int, ...]:
        return tuple(self)

    @property
    def dim(self) -> int:
        return len(self) - 1

    def faces(self, dim: int) -> Iterator["Simplex"]:
        """All faces of the given dimension, in lexicographic order."""
        for vs in combinations(self, dim + 1):
            yield Simplex(vs)

    def boundary(self) -> Iterator["Simplex"]:
        """Codimension-one faces (meaningful for dim >= 1)."""
        return self.faces(self.dim - 1)

    def opposite_face(self, vertex: int) -> "Simplex":
        """The face omitting one vertex."""
        if vertex not in self:
            raise UnknownSimplex(f"{vertex} is not a vertex of {self!r}")
        return Simplex(v for v in self if v != vertex)

    def __repr__(self) -> str:
        return f"Simplex{tuple(self)!r}"


class SimplicialComplex:
    """A finite simplicial complex given by its facets.

    Instances are immutable after construction; use :func:`build_complex`
    to construct one from raw vertex lists.
    """

    def __init__(self, facets: Iterable[Simplex]):
        maximal: list[Simplex] = []
        for s in sorted(set(facets), key=lambda s: (-len(s), s)):
            if not any(set(s) <= set(t) for t in maximal):
                maximal.append(s)
        self._facets: tuple[Simplex, ...] = tuple(sorted(maximal))
        verts: set[int] = set()
        for s in self._facets:
            verts.update(s)
        self._vertices: tuple[int, ...] = tuple(sorted(verts))
        self._faces: dict[int, tuple[Simplex, ...]] = {}

    @property
    def facets(self) -> tuple[Simplex, ...]:
        return self._facets

    @property
    def vertices(self) -> tuple[int, ...]:
        return self._vertices

    @property
    def dim(self) -> int:
        return max((s.dim for s in self._facets), default=-1)

    def is_pure(self) -> bool:
        return len({s.dim for s in self._facets}) <= 1

    def simplices(self, dim: int) -> tuple[Simplex, ...]:
        """All simplices of the given dimension (cached per dimension)."""
        if dim not in self._faces:
            found: set[Simplex] = set()
            for f in self._facets:
                if f.dim >= dim:
                    found.update(f.faces(dim))
            self._faces[dim] = tuple(sorted(found))
        return self._faces[dim]

    def all_simplices(self) -> Iterator[Simplex]:
        for d in range(self.dim + 1):
            yield from self.simplices(d)

    def has_simplex(self, s: Simplex) -> bool:
        return any(set(s) <= set(f) for f in self._facets)

    def euler_characteristic(self) -> int:
        return sum((-1) ** d * len(self.simplices(d)) for d in range(self.dim + 1))

    def as_delta(self) -> "DeltaComplex":
        """View as a delta complex (one cell per simplex)."""
        layers: list[list[DeltaCell]] = []
        index: dict[Simplex, int] = {}
        for d in range(self.dim + 1):
            layer = []
            for i, s in enumerate(self.simplices(d)):
                if d == 0:
                    bnd: tuple[int, ...] = ()
                else:
                    bnd = tuple(index[s.opposite_face(v)] for v in s)
                layer.append(DeltaCell(dim=d, index=i, vertices=tuple(s), boundary=bnd))
            for cell in layer:
                index[Simplex(cell.vertices)] = cell.index
            layers.append(layer)
        return DeltaComplex(layers)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, SimplicialComplex) and self._facets == other._facets

    def __hash__(self) -> int:
        return hash(self._facets)

    def __repr__(self) -> str:
        return f"SimplicialComplex({len(self._vertices)} vertices, {len(self._facets)} facets)"


def build_complex(facets: Iterable[Iterable[int]]) -> SimplicialComplex:
    """Build a complex from facet vertex lists.

    Non-maximal entries are absorbed and duplicates deduplicated, so the
    function is idempotent on the facet lists of its own output.
    """
    return SimplicialComplex(Simplex(f) for f in facets)


@dataclass(frozen=True)
class DeltaCell:
    """One cell of a delta complex.

    ``boundary[i]`` is the index (within the next layer down) of the face
    obtained by dropping ``vertices[i]``.  Vertices may repeat, and two
    distinct cells may carry the same vertex list.
    """

    dim: int
    index: int
    vertices: tuple[int, ...]
    boundary: tuple[int, ...]


class DeltaComplex:
    """Cells layered by dimension, glued along explicit boundary indices."""

    def __init__(self, layers: Iterable[Iterable[DeltaCell]]):
        self._layers: tuple[tuple[DeltaCell, ...], ...] = tuple(
            tuple(layer) for layer in layers
        )
        self._check_well_formed()
        self._simplicial: bool | None = None

    def _check_well_formed(self) -> None:
        for d, layer in enumerate(self._layers):
            for i, cell in enumerate(layer):
                if cell.dim != d or cell.index != i:
                    raise ValueError(f"cell {cell} filed under dimension {d}, slot {i}")
                if len(cell.vertices) != d + 1:
                    raise ValueError(f"{d}-cell with {len(cell.vertices)} vertices")
                if d == 0:
                    if cell.boundary:
                        raise ValueError("0-cells have empty boundary")
                    continue
                if len(cell.boundary) != d + 1:
                    raise ValueError(f"{d}-cell with {len(cell.boundary)} boundary faces")
                for k, fi in enumerate(cell.boundary):
                    face = self._layers[d - 1][fi]
                    expected = cell.vertices[:k] + cell.vertices[k + 1 :]
                    if face.vertices != expected:
                        raise ValueError(
                            f"boundary mismatch: face {k} of {cell} is {face}, "
                            f"expected vertices {expected}"
                        )

    @property
    def layers(self) -> tuple[tuple[DeltaCell, ...], ...]:
        return self._layers

    def cells(self, dim: int) -> tuple[DeltaCell, ...]:
        if 0 <= dim < len(self._layers):
            return self._layers[dim]
        return ()

    @property
    def dim(self) -> int:
        return len(self._layers) - 1

    @property
    def simplicial_flag(self) -> bool:
        if self._simplicial is None:
            self._simplicial = is_simplicial(self)
        return self._simplicial

    def duplicated_cells(self, dim: int) -> list[tuple[DeltaCell, DeltaCell]]:
        """Pairs of distinct same-dimension cells sharing a vertex set."""
        seen: dict[frozenset[int], DeltaCell] = {}
        pairs = []
        for cell in self.cells(dim):
            key = frozenset(cell.vertices)
            if key in seen:
                pairs.append((seen[key], cell))
            else:
                seen[key] = cell
        return pairs

    def __repr__(self) -> str:
        sizes = ", ".join(str(len(layer)) for layer in self._layers)
        return f"DeltaComplex(cells per dim: [{sizes}])"


def is_simplicial(d: DeltaComplex) -> bool:
    """True iff every cell has distinct vertices and no two distinct cells
    of equal dimension share a vertex set."""
    for dim in range(d.dim + 1):
        seen: set[frozenset[int]] = set()
        for cell in d.cells(dim):
            if len(set(cell.vertices)) != len(cell.vertices):
                return False
            key = frozenset(cell.vertices)
            if key in seen:
                return False
            seen.add(key)
    return True


@dataclass(frozen=True)
class ValidationReport:
    """Itemized failures; empty means valid."""

    failures: tuple[str, ...] = ()

    @property
    def valid(self) -> bool:
        return not self.failures

    def __str__(self) -> str:
        if self.valid:
            return "valid"
        return "\n".join(f"- {line}" for line in self.failures)


class SimplicialMap:
    """A vertex assignment inducing a simplex-wise map between complexes.

    Degeneracies are allowed: several source vertices may share an image.
    Unknown vertices raise ``MapDomainError`` at construction.
    """

    def __init__(
        self,
        source: SimplicialComplex,
        target: SimplicialComplex,
        vertex_map: Mapping[int, int],
    ):
        self.source = source
        self.target = target
        vm = dict(vertex_map)
        for v in source.vertices:
            if v not in vm:
                raise MapDomainError(f"source vertex {v} has no image")
        target_verts = set(target.vertices)
        for v, w in vm.items():
            if v not in set(source.vertices):
                raise MapDomainError(f"map defined on unknown vertex {v}")
            if w not in target_verts:
                raise MapDomainError(f"image vertex {w} is not in the target")
        self.vertex_map: dict[int, int] = vm

    def __call__(self, v: int) -> int:
        return self.vertex_map[v]

    def image(self, s: Simplex) -> Simplex:
        """Image vertex set of a simplex (duplicates collapse)."""
        return Simplex(set(self.vertex_map[v] for v in s))

    def fiber_vertices(self, w: int) -> tuple[int, ...]:
        return tuple(v for v in self.source.vertices if self.vertex_map[v] == w)

    def __repr__(self) -> str:
        return f"SimplicialMap({self.source!r} -> {self.target!r})"


def validate_map(m: SimplicialMap) -> ValidationReport:
    """Report every source simplex whose image vertex set is not a target
    simplex.  An empty report means the map is simplicial."""
    failures = []
    for s in m.source.all_simplices():
        img = m.image(s)
        if not m.target.has_simplex(img):
            failures.append(f"image of {tuple(s)} is {tuple(img)}, not a target simplex")
    return ValidationReport(tuple(failures))


def preimage_subcomplex(m: SimplicialMap, s: Simplex) -> SimplicialComplex:
    """Full subcomplex of the source on simplices mapping into the closed
    simplex ``s`` of the target."""
    if not m.target.has_simplex(s):
        raise UnknownSimplex(f"{tuple(s)} is not a simplex of the target")
    allowed = set(s)
    keep = [v for v in m.source.vertices if m.vertex_map[v] in allowed]
    keep_set = set(keep)
    pieces = []
    for f in m.source.facets:
        inter = [v for v in f if v in keep_set]
        if inter:
            pieces.append(inter)
    return build_complex(pieces) if pieces else SimplicialComplex(())
