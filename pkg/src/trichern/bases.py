"""Named base complexes used by the CLI generator and the test corpus."""
from __future__ import annotations

from .complexes import SimplicialComplex, build_complex
from itertools import combinations


def boundary_simplex(k: int = 3) -> SimplicialComplex:
    """The boundary of the standard k-simplex on vertices 0..k."""
    if k < 1:
        raise ValueError("boundary of a simplex needs k >= 1")
    return build_complex(combinations(range(k + 1), k))


def octahedron() -> SimplicialComplex:
    """Octahedron boundary: 6 vertices, 8 triangles.  Opposite pairs are
    (0,3), (1,4), (2,5)."""
    return build_complex([(a, b, c) for a in (0, 3) for b in (1, 4) for c in (2, 5)])


def icosahedron() -> SimplicialComplex:
    """Icosahedron boundary: 12 vertices, 20 triangles.

    Vertex 0 caps the upper pentagon 1..5, vertex 11 the lower pentagon
    6..10; the pentagons are joined by an antiprism band.
    """
    upper = [1 + i for i in range(5)]
    lower = [6 + i for i in range(5)]
    faces = []
    for i in range(5):
        j = (i + 1) % 5
        faces.append((0, upper[i], upper[j]))
        faces.append((11, lower[i], lower[j]))
        faces.append((upper[i], upper[j], lower[i]))
        faces.append((upper[j], lower[i], lower[j]))
    return build_complex(faces)


def projective_plane() -> SimplicialComplex:
    """The 6-vertex triangulation of the projective plane (non-orientable;
    every pair of vertices spans an edge)."""
    faces = [
        (0, 1, 2), (0, 2, 3), (0, 3, 4), (0, 4, 5), (0, 1, 5),
        (1, 2, 4), (2, 3, 5), (1, 3, 4), (2, 4, 5), (1, 3, 5),
    ]
    return build_complex(faces)


NAMED_BASES = {
    "ddelta3": boundary_simplex,
    "octahedron": octahedron,
    "icosahedron": icosahedron,
}
