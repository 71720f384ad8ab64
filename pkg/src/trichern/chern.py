"""Fundamental class of the base surface and the signed sum of local values.

The Chern-Euler number is computed in exact rationals: each base triangle
contributes its stalk necklace's local value with a sign from the surface
orientation, and the total is asserted to be an integer before it is
reported.  Integrality is a correctness oracle here, not formatting.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping

from .bundles import CircleBundle, FiberOrientation, extract_necklace, stalk
from .complexes import Simplex, SimplicialComplex
from .errors import IntegralityViolation, NonOrientable, NotClosedSurface
from .necklaces import Necklace, chern_local


@dataclass(frozen=True)
class SurfaceOrientation:
    """Coherent signs on the 2-simplices of a closed surface, canonicalized
    to +1 on the lexicographically least triangle."""

    base: SimplicialComplex
    signs: Mapping[Simplex, int]

    def sign(self, triangle: Simplex) -> int:
        return self.signs[triangle]

    def reversed(self) -> "SurfaceOrientation":
        return SurfaceOrientation(self.base, {t: -s for t, s in self.signs.items()})


def orient_closed_surface(base: SimplicialComplex) -> SurfaceOrientation:
    """Coherently orient a closed connected surface complex.

    Signs propagate from +1 on the lexicographically least triangle; two
    triangles sharing an edge must induce opposite directions on it.
    Raises ``NotClosedSurface`` if some edge is not in exactly two
    triangles (or the complex is not pure 2-dimensional and connected),
    ``NonOrientable`` if propagation meets a contradiction.
    """
    if base.dim != 2 or not base.is_pure() or not base.facets:
        raise NotClosedSurface(f"{base!r} is not a pure 2-complex")
    triangles = base.simplices(2)
    edge_tris: dict[Simplex, list[Simplex]] = {}
    for t in triangles:
        for e in t.boundary():
            edge_tris.setdefault(e, []).append(t)
    bad = {e: ts for e, ts in edge_tris.items() if len(ts) != 2}
    if bad:
        e, ts = next(iter(bad.items()))
        raise NotClosedSurface(f"edge {tuple(e)} lies in {len(ts)} triangles, need 2")

    signs: dict[Simplex, int] = {triangles[0]: 1}
    queue = [triangles[0]]
    while queue:
        t = queue.pop(0)
        for i, v in enumerate(t):
            e = t.opposite_face(v)
            other = next(x for x in edge_tris[e] if x != t)
            j = other.index(next(w for w in other if w not in e))
            induced = -signs[t] * (-1) ** (i + j)
            if other not in signs:
                signs[other] = induced
                queue.append(other)
            elif signs[other] != induced:
                raise NonOrientable(
                    f"triangles {tuple(t)} and {tuple(other)} force opposite "
                    f"signs across edge {tuple(e)}"
                )
    if len(signs) != len(triangles):
        raise NotClosedSurface("surface is not connected")
    return SurfaceOrientation(base, signs)


@dataclass(frozen=True)
class PerSimplexEntry:
    necklace: Necklace
    local_value: Fraction
    sign: int


@dataclass(frozen=True)
class ChernResult:
    """The signed sum, its integer value, and the per-simplex ledger."""

    signed_sum: Fraction
    integer_value: int
    absolute_value: int
    per_simplex: Mapping[Simplex, PerSimplexEntry]


def chern_number(
    b: CircleBundle, o: FiberOrientation, so: SurfaceOrientation
) -> ChernResult:
    """Pair the parity cocycle with the fundamental class.

    The signed sum over base triangles of sign times local value must be
    an integer for any validated bundle over a closed oriented surface;
    a non-integral sum raises ``IntegralityViolation``.
    """
    if so.base != b.base:
        raise ValueError("surface orientation belongs to a different base")
    ledger: dict[Simplex, PerSimplexEntry] = {}
    total = Fraction(0)
    for t in b.base.simplices(2):
        w = extract_necklace(stalk(b, t, o))
        value = chern_local(w)
        sign = so.sign(t)
        ledger[t] = PerSimplexEntry(w, value, sign)
        total += sign * value
    if total.denominator != 1:
        raise IntegralityViolation(
            f"signed sum {total} is not an integer; input is not a valid "
            "bundle over a closed oriented surface (or there is a bug)"
        )
    n = int(total)
    return ChernResult(total, n, abs(n), ledger)


@dataclass(frozen=True)
class BoundReport:
    """Strict local bound check: every stalk value must lie inside
    (-1/2, 1/2)."""

    entries: tuple[tuple[Simplex, Necklace, Fraction], ...]
    violations: tuple[tuple[Simplex, Necklace, Fraction], ...]

    @property
    def ok(self) -> bool:
        return not self.violations

    def __str__(self) -> str:
        lines = [
            f"{len(self.entries)} stalk(s) checked, "
            f"{len(self.violations)} at or beyond 1/2"
        ]
        for key, w, val in self.violations:
            lines.append(f"- {tuple(key)}: necklace {w.word()} has local value {val}")
        return "\n".join(lines)


def check_parity_bound(
    pairs: Iterable[tuple[Simplex, Necklace]]
) -> BoundReport:
    """Evaluate |local value| < 1/2 for labeled necklaces; the kernel of
    :func:`verify_bound`, usable on hand-built realizations too."""
    entries = []
    violations = []
    for key, w in pairs:
        val = chern_local(w)
        entries.append((key, w, val))
        if abs(val) >= Fraction(1, 2):
            violations.append((key, w, val))
    return BoundReport(tuple(entries), tuple(violations))


def verify_bound(b: CircleBundle, o: FiberOrientation) -> BoundReport:
    """Check the strict local bound on every triangle stalk of a bundle."""
    return check_parity_bound(
        (t, extract_necklace(stalk(b, t, o))) for t in b.base.simplices(2)
    )
