"""Iterating ``T+ o conj`` and ``T- o conj`` along binary words.

A word ``x1 ... xn`` selects the curvilinear triangle
``E_{x1} o ... o E_{xn}(base)``, where ``E_1 = T+ o conj`` and
``E_0 = T- o conj``.  Infinite words select the single point in which
these nested triangles shrink.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Iterator, Union

from .canonical import CanonicalBryophyllum, in_farey_closure
from .conformal import (
    Arc,
    Circle,
    Circline,
    ExtendedMobius,
    Mobius,
    ProjectivePoint,
    arc_image,
    circline_through,
    cross_ratio,
)
from .exceptions import EmptyWord, NoConvergence, NotFarey, ReferenceDegenerate
from .farey import binary_expansion
from .words import BinaryWord, EventuallyPeriodicWord, as_word

MAX_DEPTH = 64
BOUNDARY_TOL = 1e-9
VERTEX_EPS = 1e-12


def word_map(b: CanonicalBryophyllum, w) -> ExtendedMobius:
    """``E_{x1} o E_{x2} o ... o E_{xn}``; the identity for the empty word."""
    acc = ExtendedMobius.identity()
    for d in as_word(w):
        acc = acc @ b.generator(d)
    return acc


def _check_iterable(b: CanonicalBryophyllum) -> None:
    if not in_farey_closure(b.phi, b.psi):
        raise NotFarey(f"(phi, psi)=({b.phi}, {b.psi}) is outside the closed Farey region")


def base_reference(b: CanonicalBryophyllum) -> complex:
    # halfway between A0 and the middle of s0; the vertex centroid can sit on s0
    return (b.s0.angular_midpoint() + b.a0) / 2


@dataclass(frozen=True)
class CurvilinearTriangle:
    """Image of the base triangle under ``word_map(word)``.

    ``vertices`` are the images of (A0, A+, A-) and ``edges`` those of
    (s+, s-, s0).  ``reference`` is the image of a fixed interior point.
    Edges are built on first use: once a triangle is smaller than about
    1e-12 its arcs can no longer be resolved, but its vertices still can.
    """

    word: BinaryWord
    vertices: tuple[complex, complex, complex]
    reference: complex
    map: ExtendedMobius
    base_edges: tuple[Arc, Arc, Arc]

    @cached_property
    def edges(self) -> tuple[Arc, Arc, Arc]:
        return tuple(arc_image(a, self.map) for a in self.base_edges)

    @property
    def diameter(self) -> float:
        v = self.vertices
        return max(abs(v[0] - v[1]), abs(v[1] - v[2]), abs(v[0] - v[2]))

    @property
    def centroid(self) -> complex:
        return sum(self.vertices) / 3

    @property
    def depth(self) -> int:
        return len(self.word)


def _triangle(b: CanonicalBryophyllum, w: BinaryWord, m: ExtendedMobius) -> CurvilinearTriangle:
    verts = tuple(m(z) for z in b.vertices)
    return CurvilinearTriangle(w, verts, m(base_reference(b)), m, (b.splus, b.sminus, b.s0))


def nested_triangle(b: CanonicalBryophyllum, w, max_depth: int = MAX_DEPTH) -> CurvilinearTriangle:
    _check_iterable(b)
    w = as_word(w)
    if len(w) > max_depth:
        raise ValueError(f"word length {len(w)} exceeds max depth {max_depth}")
    return _triangle(b, w, word_map(b, w))


def triangles_along(b: CanonicalBryophyllum, w) -> list[CurvilinearTriangle]:
    """Triangles of every prefix of ``w``, from the base triangle down."""
    _check_iterable(b)
    w = as_word(w)
    out = [_triangle(b, (), ExtendedMobius.identity())]
    m = ExtendedMobius.identity()
    for i, d in enumerate(w):
        m = m @ b.generator(d)
        out.append(_triangle(b, w[: i + 1], m))
    return out


def triangle_levels(b: CanonicalBryophyllum, depth: int) -> Iterator[list[CurvilinearTriangle]]:
    """Triangles of depth 0, 1, ..., ``depth``, each level in lexicographic word order."""
    _check_iterable(b)
    level = [((), ExtendedMobius.identity())]
    for k in range(depth + 1):
        if k:
            level = [(w + (d,), m @ b.generator(d)) for w, m in level for d in (0, 1)]
        yield [_triangle(b, w, m) for w, m in level]


def triangles_at_depth(b: CanonicalBryophyllum, depth: int) -> list[CurvilinearTriangle]:
    """All ``2**depth`` triangles of one depth, in lexicographic word order."""
    *_, last = triangle_levels(b, depth)
    return last


def _separators(t: CurvilinearTriangle) -> list[Circline]:
    # the three edge circlines cut out the triangle together with its circumcircle
    return [e.circline() for e in t.edges] + [circline_through(*t.vertices)]


def contains_point(t: CurvilinearTriangle, z: complex, tol: float = BOUNDARY_TOL,
                   closed: bool = False) -> bool:
    """Side test against each edge circline, relative to the reference point.

    With ``closed`` a point within ``tol`` of a circline counts as inside;
    otherwise such points count as outside.
    """
    seps = _separators(t)
    guard = tol * min(1.0, t.diameter)
    ref_sides = []
    for c in seps:
        d = c.signed_distance(t.reference)
        if abs(d) <= guard:
            raise ReferenceDegenerate(f"reference point of {t.word} lies on an edge")
        ref_sides.append(d > 0)
    for c, side in zip(seps, ref_sides):
        d = c.signed_distance(z)
        if abs(d) <= tol:
            if not closed:
                return False
            continue
        if (d > 0) != side:
            return False
    return True


def shift_triangle(b: CanonicalBryophyllum, t: CurvilinearTriangle) -> CurvilinearTriangle:
    """Drop the first letter of the address: ``Delta(x1..xn) -> Delta(x2..xn)``."""
    if not t.word:
        raise EmptyWord("cannot shift the base triangle")
    return nested_triangle(b, t.word[1:])


# -- limit points ---------------------------------------------------------------------

def _periodic_fixed_point(b: CanonicalBryophyllum, w: EventuallyPeriodicWord) -> complex:
    period = word_map(b, w.period)
    if period.conjugates_first:
        period = period @ period
    m: Mobius = period.mobius
    # parabolic fixed points are only resolved to sqrt(eps) by the quadratic
    # formula; the ones that occur are base vertices, so test those first
    for v in b.vertices:
        point = ProjectivePoint.of(v)
        if m.apply(point).chordal_distance(point) <= VERTEX_EPS:
            break
    else:
        point = min(m.fixed_points(), key=lambda p: abs(m.multiplier(p)))
    return word_map(b, w.preperiod).apply(point).to_complex()


def limit_point(b: CanonicalBryophyllum, w: Union[EventuallyPeriodicWord, Iterable[int]],
                tol: float = 1e-10, max_depth: int = MAX_DEPTH,
                exact: bool = True) -> tuple[complex, float]:
    """The point selected by an infinite word, with an error bound.

    Eventually periodic words are solved exactly from the fixed point of the
    period map when ``exact`` is set (bound 0).  Otherwise prefixes are
    iterated until the vertex diameter drops below ``tol``.
    """
    _check_iterable(b)
    if tol <= 0:
        raise ValueError("tol must be positive")
    if isinstance(w, EventuallyPeriodicWord):
        if exact:
            return _periodic_fixed_point(b, w), 0.0
        digits: Iterator[int] = w.digits()
    else:
        digits = iter(w)
    m = ExtendedMobius.identity()
    depth = 0
    while True:
        verts = [m(z) for z in b.vertices]
        diam = max(abs(verts[i] - verts[j]) for i, j in ((0, 1), (1, 2), (0, 2)))
        if diam < tol:
            return sum(verts) / 3, diam
        if depth >= max_depth:
            raise NoConvergence(f"diameter {diam:.3e} >= tol {tol:.1e} at depth {depth}")
        d = next(digits, None)
        if d is None:
            raise NoConvergence(f"word ended at depth {depth} with diameter {diam:.3e}")
        m = m @ b.generator(int(d))
        depth += 1


def pi_map(b: CanonicalBryophyllum, alpha, tol: float = 1e-10, exact: bool = True) -> complex:
    """Point of the limit set addressed by the binary digits of ``alpha``."""
    word = binary_expansion(alpha).tail()
    return limit_point(b, word, tol=tol, exact=exact)[0]


# -- cross-ratios and circumcircles -----------------------------------------------------

def quadruple_cross_ratios(b: CanonicalBryophyllum, w) -> list[complex]:
    """Cross-ratios ``[Q, U, R, V]`` of consecutive triangles along ``w``.

    ``Q`` is the parent's image of A0, ``R`` the other shared vertex, ``U``
    the parent vertex left behind and ``V`` the new vertex of the child.
    """
    w = as_word(w)
    if not w:
        raise EmptyWord("need at least one letter")
    tris = triangles_along(b, w)
    out = []
    for parent, child, d in zip(tris, tris[1:], w):
        p0, p1, p2 = parent.vertices
        r, u = (p1, p2) if d else (p2, p1)
        out.append(cross_ratio(p0, u, r, child.vertices[0]))
    return out


def reference_cross_ratios(b: CanonicalBryophyllum) -> tuple[complex, complex]:
    c = cross_ratio(b.a0, b.aminus, b.aplus, b.q)
    return c, c.conjugate()


@dataclass(frozen=True)
class CircumCircle:
    center: complex
    radius: float


def circumcircle(t: CurvilinearTriangle) -> CircumCircle:
    c = circline_through(*t.vertices)
    if not isinstance(c, Circle):
        raise ValueError("triangle vertices are collinear")
    return CircumCircle(c.center, c.radius)


def shared_vertices(t1: CurvilinearTriangle, t2: CurvilinearTriangle,
                    eps: float = BOUNDARY_TOL) -> int:
    return sum(1 for u in t1.vertices if any(abs(u - v) <= eps for v in t2.vertices))


def all_words(n: int) -> list[BinaryWord]:
    return [tuple(w) for w in itertools.product((0, 1), repeat=n)]
