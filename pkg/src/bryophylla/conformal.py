"""Complex projective geometry: Mobius and anti-Mobius maps, circlines, arcs.

Points of the plane are plain Python ``complex`` values.  Wherever a map may
send a point to infinity the computation goes through :class:`ProjectivePoint`
so that poles never raise ``ZeroDivisionError``.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from typing import Union

from .exceptions import DegenerateInput, PointNotOnCircline

DET_EPS = 1e-14
COINCIDENCE_EPS = 1e-12
COLLINEAR_EPS = 1e-12
ON_CIRCLINE_EPS = 1e-9


# -- projective points --------------------------------------------------------

@dataclass(frozen=True)
class ProjectivePoint:
    """The point ``num/den`` of the Riemann sphere (``den == 0`` is infinity)."""

    num: complex
    den: complex = 1.0

    def __post_init__(self):
        if self.num == 0 and self.den == 0:
            raise DegenerateInput("projective point (0:0)")

    @classmethod
    def of(cls, z) -> "ProjectivePoint":
        if isinstance(z, ProjectivePoint):
            return z
        if z is None:
            return INFINITY
        z = complex(z)
        if not cmath.isfinite(z):
            return INFINITY
        return cls(z, 1.0)

    @property
    def is_infinite(self) -> bool:
        return abs(self.den) <= 1e-15 * abs(self.num)

    def to_complex(self) -> complex:
        if self.is_infinite:
            return complex(math.inf, 0.0)
        return self.num / self.den

    def conjugate(self) -> "ProjectivePoint":
        return ProjectivePoint(self.num.conjugate(), complex(self.den).conjugate())

    def _unit(self):
        s = math.hypot(abs(self.num), abs(self.den))
        return self.num / s, self.den / s

    def chordal_distance(self, other: "ProjectivePoint") -> float:
        """Distance on the Riemann sphere up to a constant factor, in [0, 1]."""
        x1, y1 = self._unit()
        x2, y2 = other._unit()
        return abs(x1 * y2 - x2 * y1)


INFINITY = ProjectivePoint(1.0, 0.0)


def _bracket(p: ProjectivePoint, q: ProjectivePoint) -> complex:
    return p.num * q.den - q.num * p.den


def _as_point(z) -> ProjectivePoint:
    return ProjectivePoint.of(z)


# -- Mobius maps -----------------------------------------------------------------

@dataclass(frozen=True)
class Mobius:
    """``z -> (a z + b) / (c z + d)``, stored with max entry modulus 1."""

    a: complex
    b: complex
    c: complex
    d: complex

    def __post_init__(self):
        entries = [complex(v) for v in (self.a, self.b, self.c, self.d)]
        scale = max(abs(v) for v in entries)
        if scale == 0 or not math.isfinite(scale):
            raise DegenerateInput("Mobius matrix has no finite nonzero entry")
        a, b, c, d = (v / scale for v in entries)
        if abs(a * d - b * c) <= DET_EPS:
            raise DegenerateInput("Mobius matrix is singular (|ad - bc| <= 1e-14)")
        for name, value in zip("abcd", (a, b, c, d)):
            object.__setattr__(self, name, value)

    @classmethod
    def identity(cls) -> "Mobius":
        return cls(1, 0, 0, 1)

    @classmethod
    def affine(cls, alpha: complex, beta: complex) -> "Mobius":
        return cls(alpha, beta, 0, 1)

    @property
    def det(self) -> complex:
        return self.a * self.d - self.b * self.c

    def apply(self, z) -> ProjectivePoint:
        p = _as_point(z)
        return ProjectivePoint(self.a * p.num + self.b * p.den,
                               self.c * p.num + self.d * p.den)

    def __call__(self, z) -> complex:
        return self.apply(z).to_complex()

    def __matmul__(self, other: "Mobius") -> "Mobius":
        """Composition ``self o other``."""
        return Mobius(self.a * other.a + self.b * other.c,
                      self.a * other.b + self.b * other.d,
                      self.c * other.a + self.d * other.c,
                      self.c * other.b + self.d * other.d)

    def conjugate(self) -> "Mobius":
        """Entrywise complex conjugate, i.e. ``conj o self o conj``."""
        return Mobius(self.a.conjugate(), self.b.conjugate(),
                      self.c.conjugate(), self.d.conjugate())

    def inverse(self) -> "Mobius":
        return Mobius(self.d, -self.b, -self.c, self.a)

    def matrix(self) -> tuple[complex, complex, complex, complex]:
        return (self.a, self.b, self.c, self.d)

    def proportional_to(self, other: "Mobius", tol: float = 1e-12) -> bool:
        """True if the two matrices agree up to a nonzero scalar."""
        mine, theirs = self.matrix(), other.matrix()
        k = max(range(4), key=lambda i: abs(theirs[i]))
        if abs(mine[k]) == 0:
            return False
        lam = mine[k] / theirs[k]
        return all(abs(x - lam * y) <= tol for x, y in zip(mine, theirs))

    def fixed_points(self) -> list[ProjectivePoint]:
        """Fixed points of the map (one entry for parabolic maps)."""
        a, b, c, d = self.matrix()
        if abs(c) <= 1e-15:
            if abs(a - d) <= 1e-15:
                return [INFINITY]
            return [ProjectivePoint(b, d - a), INFINITY]
        disc = cmath.sqrt((a - d) ** 2 + 4 * b * c)
        if abs(disc) <= 1e-15:
            return [ProjectivePoint((a - d) / (2 * c))]
        return [ProjectivePoint(a - d + disc, 2 * c), ProjectivePoint(a - d - disc, 2 * c)]

    def multiplier(self, fixed: ProjectivePoint) -> complex:
        """Derivative of the map at one of its fixed points."""
        if fixed.is_infinite:
            return self.d / self.a
        z = fixed.to_complex()
        return self.det / (self.c * z + self.d) ** 2


def mobius_apply(m: Mobius, z) -> ProjectivePoint:
    return m.apply(z)


def _normalizer(p1: ProjectivePoint, p2: ProjectivePoint, p3: ProjectivePoint) -> Mobius:
    # sends p1 -> 0, p2 -> 1, p3 -> infinity
    b23 = _bracket(p2, p3)
    b21 = _bracket(p2, p1)
    return Mobius(b23 * p1.den, -b23 * p1.num, b21 * p3.den, -b21 * p3.num)


def _check_distinct(points, what):
    for i in range(3):
        for j in range(i + 1, 3):
            if points[i].chordal_distance(points[j]) <= COINCIDENCE_EPS:
                raise DegenerateInput(f"{what} points {i} and {j} coincide")


def mobius_from_three_points(z1, z2, z3, w1, w2, w3) -> Mobius:
    """The unique Mobius map sending z1, z2, z3 to w1, w2, w3 (infinity allowed)."""
    zs = [_as_point(z) for z in (z1, z2, z3)]
    ws = [_as_point(w) for w in (w1, w2, w3)]
    _check_distinct(zs, "source")
    _check_distinct(ws, "target")
    return _normalizer(*ws).inverse() @ _normalizer(*zs)


# -- extended (possibly anti-holomorphic) maps ------------------------------------------

@dataclass(frozen=True)
class ExtendedMobius:
    """``z -> mobius(conj(z))`` when ``conjugates_first``, else ``mobius(z)``."""

    mobius: Mobius
    conjugates_first: bool = False

    @classmethod
    def identity(cls) -> "ExtendedMobius":
        return cls(Mobius.identity(), False)

    @classmethod
    def conj(cls) -> "ExtendedMobius":
        return cls(Mobius.identity(), True)

    def apply(self, z) -> ProjectivePoint:
        p = _as_point(z)
        if self.conjugates_first:
            p = p.conjugate()
        return self.mobius.apply(p)

    def __call__(self, z) -> complex:
        return self.apply(z).to_complex()

    def __matmul__(self, other: "ExtendedMobius") -> "ExtendedMobius":
        inner = other.mobius.conjugate() if self.conjugates_first else other.mobius
        return ExtendedMobius(self.mobius @ inner, self.conjugates_first != other.conjugates_first)

    def inverse(self) -> "ExtendedMobius":
        inv = self.mobius.inverse()
        if self.conjugates_first:
            # (M o conj)^-1 = conj o M^-1 = conj(M^-1) o conj
            return ExtendedMobius(inv.conjugate(), True)
        return ExtendedMobius(inv, False)


def extended_apply(e: ExtendedMobius, z) -> ProjectivePoint:
    return e.apply(z)


# -- cross-ratio --------------------------------------------------------------------

def cross_ratio(z1, z2, z3, z4) -> complex:
    """``(z1-z2)/(z1-z4) * (z3-z4)/(z3-z2)``, evaluated projectively."""
    p1, p2, p3, p4 = (_as_point(z) for z in (z1, z2, z3, z4))
    if p1.chordal_distance(p4) <= DET_EPS or p3.chordal_distance(p2) <= DET_EPS:
        raise DegenerateInput("cross-ratio with z1 == z4 or z3 == z2")
    return (_bracket(p1, p2) * _bracket(p3, p4)) / (_bracket(p1, p4) * _bracket(p3, p2))


# -- circlines ------------------------------------------------------------------------

@dataclass(frozen=True)
class Circle:
    center: complex
    radius: float

    def __post_init__(self):
        if not self.radius > 0:
            raise DegenerateInput("circle radius must be positive")

    def distance(self, z: complex) -> float:
        return abs(self.signed_distance(z))

    def signed_distance(self, z: complex) -> float:
        """Positive outside the circle."""
        return abs(z - self.center) - self.radius

    def tangent(self, z: complex) -> complex:
        """Counterclockwise unit tangent at the point of the circle nearest ``z``."""
        v = z - self.center
        return 1j * v / abs(v)

    def point_at(self, t: float) -> complex:
        return self.center + self.radius * cmath.exp(1j * t)

    def sample(self) -> tuple[complex, complex, complex]:
        return tuple(self.point_at(2 * math.pi * k / 3) for k in range(3))


@dataclass(frozen=True)
class Line:
    point: complex
    direction: complex

    def __post_init__(self):
        n = abs(self.direction)
        if n == 0:
            raise DegenerateInput("line direction must be nonzero")
        object.__setattr__(self, "direction", complex(self.direction) / n)

    def signed_distance(self, z: complex) -> float:
        """Positive to the left of the direction of travel."""
        return ((z - self.point) * self.direction.conjugate()).imag

    def distance(self, z: complex) -> float:
        return abs(self.signed_distance(z))

    def tangent(self, z: complex) -> complex:
        return self.direction

    def point_at(self, t: float) -> complex:
        return self.point + t * self.direction

    def sample(self) -> tuple[complex, complex, complex]:
        return (self.point, self.point + self.direction, self.point - self.direction)


Circline = Union[Circle, Line]


def circline_through(p, q, r) -> Circline:
    """Circle or line through three distinct points; one of them may be infinity."""
    pts = [_as_point(z) for z in (p, q, r)]
    _check_distinct(pts, "circline")
    finite = [pt.to_complex() for pt in pts if not pt.is_infinite]
    if len(finite) == 2:
        return Line(finite[0], finite[1] - finite[0])
    p, q, r = finite
    u, v = q - p, r - p
    cross = (u.conjugate() * v).imag
    scale = max(abs(u), abs(v), abs(r - q)) ** 2
    if abs(cross) <= COLLINEAR_EPS * scale:
        far = max((u, v), key=abs)
        return Line(p, far)
    # circumcentre relative to p
    center = p - 1j * (abs(u) ** 2 * v - abs(v) ** 2 * u) / (2 * cross)
    radius = (abs(p - center) + abs(q - center) + abs(r - center)) / 3
    return Circle(center, radius)


def circline_image(c: Circline, e) -> Circline:
    """Image of a circline under a Mobius or extended Mobius map."""
    return circline_through(*(e.apply(z) for z in c.sample()))


def same_circline(c1: Circline, c2: Circline, tol: float = 1e-9) -> bool:
    return all(c2.distance(z) <= tol for z in c1.sample())


def _tangent_line_angle(t1: complex, t2: complex) -> float:
    """Angle between two unoriented lines, in [0, pi/2]."""
    ang = abs(cmath.phase(t2 / t1))
    return min(ang, math.pi - ang)


# -- arcs ------------------------------------------------------------------------------

def _orientation(a: complex, b: complex, c: complex) -> float:
    return ((b - a).conjugate() * (c - b)).imag


@dataclass(frozen=True)
class Arc:
    """Portion of the circline through ``start``, ``mid``, ``end`` joining
    ``start`` to ``end`` via ``mid``."""

    start: complex
    mid: complex
    end: complex

    def __post_init__(self):
        pts = [complex(self.start), complex(self.mid), complex(self.end)]
        if not all(cmath.isfinite(z) for z in pts):
            raise DegenerateInput("arc points must be finite")
        for i in range(3):
            for j in range(i + 1, 3):
                if abs(pts[i] - pts[j]) <= COINCIDENCE_EPS:
                    raise DegenerateInput("arc points must be pairwise distinct")
        object.__setattr__(self, "start", pts[0])
        object.__setattr__(self, "mid", pts[1])
        object.__setattr__(self, "end", pts[2])

    @classmethod
    def segment(cls, start: complex, end: complex) -> "Arc":
        return cls(start, (start + end) / 2, end)

    def circline(self) -> Circline:
        return circline_through(self.start, self.mid, self.end)

    @property
    def is_straight(self) -> bool:
        return isinstance(self.circline(), Line)

    def reversed(self) -> "Arc":
        return Arc(self.end, self.mid, self.start)

    @property
    def endpoints(self) -> tuple[complex, complex]:
        return (self.start, self.end)

    def _sweep(self, circle: Circle) -> tuple[float, float]:
        t0 = cmath.phase(self.start - circle.center)
        t1 = cmath.phase(self.end - circle.center)
        ccw = _orientation(self.start, self.mid, self.end) > 0
        delta = (t1 - t0) % (2 * math.pi)
        if not ccw:
            delta -= 2 * math.pi
        return t0, delta

    def point_at_fraction(self, s: float) -> complex:
        """Point a fraction ``s`` of the way along the arc (by angle)."""
        c = self.circline()
        if isinstance(c, Line):
            return self.start + s * (self.end - self.start)
        t0, delta = self._sweep(c)
        return c.point_at(t0 + s * delta)

    def angular_midpoint(self) -> complex:
        return self.point_at_fraction(0.5)

    def sample(self, n: int) -> list[complex]:
        return [self.point_at_fraction(k / (n - 1)) for k in range(n)]

    def tangent_into(self, at: complex) -> complex:
        """Unit tangent at ``at`` pointing along the arc (into it at an endpoint)."""
        c = self.circline()
        if isinstance(c, Line):
            d = self.end - self.start
            if abs(at - self.end) < abs(at - self.start):
                d = -d
            return d / abs(d)
        t = c.tangent(at)
        if _orientation(self.start, self.mid, self.end) < 0:
            t = -t
        if abs(at - self.end) <= ON_CIRCLINE_EPS:
            t = -t
        return t

    def large_arc(self) -> bool:
        """True if the arc spans more than half of its circle."""
        c = self.circline()
        if isinstance(c, Line):
            return False
        return abs(self._sweep(c)[1]) > math.pi


def arc_image(a: Arc, e) -> Arc:
    pts = [e.apply(z) for z in (a.start, a.mid, a.end)]
    if any(p.is_infinite for p in pts):
        raise DegenerateInput("arc image passes a defining point through infinity")
    return Arc(*(p.to_complex() for p in pts))


def angle_between(c1, c2, at: complex) -> float:
    """Angle at ``at`` between two circlines or two arcs.

    Circlines give the angle between their unoriented tangent lines, in
    [0, pi/2].  Arcs give the angle between the tangent rays pointing into
    each arc, in [0, pi]; this is the interior angle between two edges
    meeting at a common endpoint.
    """
    curves = []
    for c in (c1, c2):
        cl = c.circline() if isinstance(c, Arc) else c
        if cl.distance(at) > ON_CIRCLINE_EPS:
            raise PointNotOnCircline(f"{at} is not on {cl}")
        curves.append(cl)
    if isinstance(c1, Arc) and isinstance(c2, Arc):
        t1, t2 = c1.tangent_into(at), c2.tangent_into(at)
        return abs(cmath.phase(t2 / t1))
    return _tangent_line_angle(curves[0].tangent(at), curves[1].tangent(at))


def circle_intersection_angle(c1: Circle, c2: Circle) -> float:
    """Angle between two intersecting circles, in [0, pi/2] (unoriented)."""
    d = abs(c1.center - c2.center)
    cos_t = (c1.radius ** 2 + c2.radius ** 2 - d ** 2) / (2 * c1.radius * c2.radius)
    t = math.acos(max(-1.0, min(1.0, cos_t)))
    return min(t, math.pi - t)


def second_intersection(c1: Circline, c2: Circline, known: complex) -> ProjectivePoint:
    """The intersection of two circlines other than ``known``.

    Inverting about ``known`` turns both circlines into lines whose crossing
    is the image of the other intersection point.
    """
    if c1.distance(known) > ON_CIRCLINE_EPS or c2.distance(known) > ON_CIRCLINE_EPS:
        raise PointNotOnCircline("known point is not on both circlines")
    inv = Mobius(0, 1, 1, -known)
    l1, l2 = circline_image(c1, inv), circline_image(c2, inv)
    if not (isinstance(l1, Line) and isinstance(l2, Line)):
        raise DegenerateInput("inversion did not straighten the circlines")
    cross = (l1.direction.conjugate() * l2.direction).imag
    if abs(cross) <= 1e-12:
        raise DegenerateInput("circlines are tangent or coincide at the known point")
    # solve l1.point + s d1 = l2.point + t d2
    s = (l2.direction.conjugate() * (l2.point - l1.point)).imag / (-cross)
    w = l1.point + s * l1.direction
    return inv.inverse().apply(w)
