"""Numerical invariant checks for one canonical bryophyllum.

Each check reports its worst residual over the sampled cases.  The suite is
shared by ``bryophylla verify`` and the test-suite.
"""

from __future__ import annotations

import cmath
import math
import random
from dataclasses import dataclass
from typing import Callable, Optional

from .canonical import (
    CanonicalBryophyllum,
    arc_center_x,
    arc_center_x_from_r,
    arc_radius_R,
    in_farey_closure,
    is_farey,
    make_canonical,
)
from .conformal import Circle, Line, angle_between, circle_intersection_angle
from .dynamics import (
    circumcircle,
    contains_point,
    limit_point,
    quadruple_cross_ratios,
    reference_cross_ratios,
    shared_vertices,
    triangles_along,
    triangles_at_depth,
)
from .words import EventuallyPeriodicWord


@dataclass(frozen=True)
class CheckResult:
    name: str
    residual: float
    tol: float
    skipped: bool = False
    note: str = ""

    @property
    def passed(self) -> bool:
        return self.skipped or self.residual <= self.tol

    def line(self) -> str:
        if self.skipped:
            return f"SKIP {self.name}: {self.note}"
        status = "PASS" if self.passed else "FAIL"
        return f"{status} {self.name}: residual={self.residual:.3e} tol={self.tol:.1e}"


def _words(rng: random.Random, count: int, length: int) -> list[tuple]:
    return [tuple(rng.randint(0, 1) for _ in range(length)) for _ in range(count)]


def check_map_conditions(b: CanonicalBryophyllum, rng: random.Random, k: int) -> float:
    res = max(abs(b.tplus(b.aplus) - b.a0), abs(b.tplus(b.aminus) - b.aplus),
              abs(b.tplus(b.a0) - b.q))
    for _ in range(k):
        z = complex(rng.uniform(-2, 2), rng.uniform(-2, 2))
        w1, w2 = b.tminus.apply(z), b.tplus.apply(z.conjugate()).conjugate()
        res = max(res, w1.chordal_distance(w2))
    return res


def check_denominator_identity(b: CanonicalBryophyllum) -> float:
    phi, psi, r = b.phi, b.psi, b.r
    lhs = math.cos(phi) - r * math.cos(psi)
    rhs = math.sin(phi + psi) * math.sin(psi - phi / 2) / math.cos(phi / 2)
    return abs(lhs - rhs)


def check_arc_center(b: CanonicalBryophyllum) -> float:
    x = arc_center_x(b.phi, b.psi)
    big_r = arc_radius_R(b.phi, b.psi)
    x2 = arc_center_x_from_r(b.phi, b.psi)
    scale = max(1.0, abs(x))
    return max(abs(x - x2) / scale, abs(abs(x - b.aplus) - big_r) / scale,
               abs(abs(x - b.q) - big_r) / scale)


def check_edge_angles(b: CanonicalBryophyllum) -> float:
    a_plus = angle_between(b.ell_zero, b.ell_plus, b.aplus)
    a_minus = angle_between(b.ell_zero, b.ell_minus, b.aminus)
    return abs(a_plus - a_minus)


def check_image_of_q(b: CanonicalBryophyllum) -> float:
    ratio = (1 - b.tplus(b.q)) / (1 - b.aplus)
    return abs(ratio.imag)


def _tangent_gap(circle: Circle, line: Line, at: complex) -> float:
    return angle_between(circle, line, at)


def check_circle_through_origin(b: CanonicalBryophyllum) -> float:
    rt = 1 / (2 * math.cos(b.phi / 2))
    c = rt * cmath.exp(-0.5j * b.phi)
    dists = max(abs(abs(z - c) - rt) for z in (0, b.a0, b.aminus, b.q))
    tangency = _tangent_gap(Circle(c, rt), Line(b.a0, b.aplus - b.a0), b.a0)
    return max(dists, tangency)


def check_circle_minus_one(b: CanonicalBryophyllum) -> float:
    rad = abs(b.aplus + 1)
    circle = Circle(-1, rad)
    on = abs(abs(b.aminus + 1) - rad)
    return max(on, _tangent_gap(circle, Line(b.aplus, b.a0 - b.aplus), b.aplus))


def check_circle_secant(b: CanonicalBryophyllum) -> Optional[float]:
    if abs(math.cos(b.phi)) < 1e-6:
        return None
    center = 1 / math.cos(b.phi)
    circle = Circle(center, abs(b.aplus - center))
    return _tangent_gap(circle, Line(0, b.aplus), b.aplus)


def check_cross_ratios(b: CanonicalBryophyllum, rng: random.Random, k: int) -> float:
    refs = reference_cross_ratios(b)
    res = 0.0
    for w in _words(rng, k, 20):
        for c in quadruple_cross_ratios(b, w):
            if abs(c) <= 1e-12:
                return math.inf
            res = max(res, min(abs(c - r) for r in refs))
    return res


def check_shared_vertices(b: CanonicalBryophyllum, rng: random.Random, k: int) -> float:
    bad = 0
    for w in _words(rng, k, 12):
        tris = triangles_along(b, w)
        bad += sum(shared_vertices(s, t) != 2 for s, t in zip(tris, tris[1:]))
        bad += sum(shared_vertices(s, t) != 1 for s, t in zip(tris, tris[2:]))
    return float(bad)


def check_circumcircles(b: CanonicalBryophyllum, rng: random.Random, k: int) -> float:
    res = 0.0
    for w in _words(rng, k, 12):
        discs = [circumcircle(t) for t in triangles_along(b, w)]
        for s, t in zip(discs, discs[2:]):
            d = abs(s.center - t.center)
            res = max(res, abs(d - abs(s.radius - t.radius)), d + t.radius - s.radius)
    return res


def check_petal_angle(b: CanonicalBryophyllum, rng: random.Random, k: int) -> float:
    res = 0.0
    for w in _words(rng, k, 12):
        discs = [Circle(c.center, c.radius) for c in map(circumcircle, triangles_along(b, w))]
        angles = [circle_intersection_angle(s, t) for s, t in zip(discs, discs[1:])]
        res = max(res, max(angles) - min(angles))
    return res


def check_lexicographic_chain(b: CanonicalBryophyllum, depth: int = 6) -> float:
    tris = triangles_at_depth(b, depth)[::-1]
    bad = sum(shared_vertices(s, t) != 1 for s, t in zip(tris, tris[1:]))
    bad += not any(abs(v - b.aplus) <= 1e-9 for v in tris[0].vertices)
    bad += not any(abs(v - b.aminus) <= 1e-9 for v in tris[-1].vertices)
    return float(bad)


def check_nesting(b: CanonicalBryophyllum, rng: random.Random, k: int) -> float:
    bad = 0
    for w in _words(rng, k, 10):
        tris = triangles_along(b, w)
        for parent, child in zip(tris, tris[1:]):
            bad += sum(not contains_point(parent, v, closed=True) for v in child.vertices)
    return float(bad)


def check_two_expansions(b: CanonicalBryophyllum, rng: random.Random, k: int) -> float:
    res = 0.0
    for _ in range(k):
        w = tuple(rng.randint(0, 1) for _ in range(rng.randint(0, 8)))
        p, _ = limit_point(b, EventuallyPeriodicWord(w + (0,), (1,)))
        q, _ = limit_point(b, EventuallyPeriodicWord(w + (1,), (0,)))
        res = max(res, abs(p - q))
    return res


DEFAULT_TOLS = {
    "map_conditions": 1e-11,
    "denominator_identity": 1e-12,
    "arc_center": 1e-10,
    "edge_angles": 1e-9,
    "image_of_q": 1e-10,
    "circle_through_origin": 1e-9,
    "circle_minus_one": 1e-9,
    "circle_secant": 1e-9,
    "cross_ratios": 1e-8,
    "shared_vertices": 0.0,
    "circumcircles": 1e-8,
    "petal_angle": 1e-8,
    "lexicographic_chain": 0.0,
    "nesting": 0.0,
    "two_expansions": 1e-9,
}


def run_suite(phi: float, psi: float, samples: int = 20, tol: Optional[float] = None,
              seed: int = 0) -> list[CheckResult]:
    """Run every check; ``tol`` replaces all default tolerances when given."""
    b = make_canonical(phi, psi)
    rng = random.Random(seed)
    farey = in_farey_closure(phi, psi)
    interior = is_farey(phi, psi)

    def run(name: str, fn: Callable[[], Optional[float]], needs_farey: bool = False,
            needs_curved: bool = False, needs_interior: bool = False) -> CheckResult:
        limit = DEFAULT_TOLS[name] if tol is None else tol
        if needs_farey and not farey:
            return CheckResult(name, math.nan, limit, True, "outside the closed Farey region")
        if needs_interior and not interior:
            return CheckResult(name, math.nan, limit, True, "needs the open Farey region")
        if needs_curved and b.is_affine:
            return CheckResult(name, math.nan, limit, True, "third edge is straight")
        value = fn()
        if value is None:
            return CheckResult(name, math.nan, limit, True, "not defined at these parameters")
        return CheckResult(name, value, limit)

    return [
        run("map_conditions", lambda: check_map_conditions(b, rng, samples)),
        run("denominator_identity", lambda: check_denominator_identity(b)),
        run("arc_center", lambda: check_arc_center(b), needs_curved=True),
        run("edge_angles", lambda: check_edge_angles(b)),
        run("image_of_q", lambda: check_image_of_q(b)),
        run("circle_through_origin", lambda: check_circle_through_origin(b)),
        run("circle_minus_one", lambda: check_circle_minus_one(b)),
        run("circle_secant", lambda: check_circle_secant(b)),
        run("cross_ratios", lambda: check_cross_ratios(b, rng, samples), needs_farey=True),
        run("shared_vertices", lambda: check_shared_vertices(b, rng, samples), needs_farey=True),
        run("circumcircles", lambda: check_circumcircles(b, rng, samples), needs_farey=True),
        run("petal_angle", lambda: check_petal_angle(b, rng, samples), needs_farey=True),
        run("lexicographic_chain", lambda: check_lexicographic_chain(b), needs_interior=True),
        run("nesting", lambda: check_nesting(b, rng, samples), needs_farey=True),
        run("two_expansions", lambda: check_two_expansions(b, rng, samples), needs_farey=True),
    ]
