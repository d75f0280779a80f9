"""Canonical bryophylla Br(phi, psi): construction, derived circles, classification."""

from __future__ import annotations

import cmath
import enum
import math
from dataclasses import dataclass

from scipy.optimize import brentq

from .conformal import (
    Arc,
    Circle,
    Circline,
    DegenerateInput,
    ExtendedMobius,
    Line,
    Mobius,
    ProjectivePoint,
    circline_image,
    circline_through,
    second_intersection,
)
from .exceptions import (
    DegenerateConfiguration,
    ExcludedLocus,
    InvalidParameters,
    StraightEdge,
)

CONSTRUCTION_EPS = 1e-12
REGION_EPS = 1e-9
MIDPOINT_EPS = 1e-9


def radius_r(phi: float, psi: float) -> float:
    """Signed distance ``r`` from the origin to ``T+(A0) = r e^{i psi}``."""
    return math.cos(phi / 2 + psi) / math.cos(phi / 2)


def _check_ranges(phi: float, psi: float) -> None:
    if not (math.isfinite(phi) and math.isfinite(psi)):
        raise InvalidParameters("phi and psi must be finite")
    if not 0 <= phi <= math.pi:
        raise InvalidParameters(f"phi={phi} outside (0, pi)")
    if not 0 <= psi <= math.pi:
        raise InvalidParameters(f"psi={psi} outside [0, pi]")
    if phi == 0 or phi == math.pi:
        raise ExcludedLocus("phi in {0, pi}: A+ and A- coincide")


def _check_valid(phi: float, psi: float) -> None:
    _check_ranges(phi, psi)
    if abs(phi + psi - math.pi) <= CONSTRUCTION_EPS:
        raise ExcludedLocus("phi + psi = pi")
    if abs(radius_r(phi, psi) - 1) <= CONSTRUCTION_EPS:
        raise ExcludedLocus("r = 1: A0 is fixed by both maps")


def _affine(phi: float, psi: float) -> bool:
    return abs(psi - phi / 2) <= CONSTRUCTION_EPS


def generator_map(phi: float, psi: float, sign: int = 1) -> Mobius:
    """``T+`` (``sign=1``) or ``T-`` (``sign=-1``) from the closed-form coefficients."""
    r = radius_r(phi, psi)
    ch = math.cos(phi / 2)
    e_half = cmath.exp(sign * 0.5j * phi)
    e_psi = cmath.exp(sign * 1j * psi)
    e_diff = cmath.exp(sign * 1j * (psi - phi / 2))
    return Mobius(r * e_psi - ch * e_half,
                  ch * e_half - r * math.cos(phi) * e_psi,
                  r * ch * e_diff - math.cos(phi),
                  1 - r * ch * e_diff)


@dataclass(frozen=True)
class CanonicalBryophyllum:
    phi: float
    psi: float
    r: float
    q: complex
    a0: complex
    aplus: complex
    aminus: complex
    splus: Arc
    sminus: Arc
    s0: Arc
    tplus: Mobius
    tminus: Mobius

    @property
    def vertices(self) -> tuple[complex, complex, complex]:
        """(A0, A+, A-)."""
        return (self.a0, self.aplus, self.aminus)

    @property
    def is_affine(self) -> bool:
        return _affine(self.phi, self.psi)

    def generator(self, digit: int) -> ExtendedMobius:
        """``T+ o conj`` for digit 1, ``T- o conj`` for digit 0."""
        return ExtendedMobius(self.tplus if digit else self.tminus, True)

    @property
    def ell_plus(self) -> Circline:
        return self.splus.circline()

    @property
    def ell_minus(self) -> Circline:
        return self.sminus.circline()

    @property
    def ell_zero(self) -> Circline:
        return self.s0.circline()

    def to_dict(self) -> dict:
        return {
            "phi": self.phi,
            "psi": self.psi,
            "r": self.r,
            "q": [self.q.real, self.q.imag],
            "vertices": {
                "A0": [self.a0.real, self.a0.imag],
                "Aplus": [self.aplus.real, self.aplus.imag],
                "Aminus": [self.aminus.real, self.aminus.imag],
            },
            "region": classify_region(self.phi, self.psi).value,
            "is_farey": is_farey(self.phi, self.psi),
            "is_affine": self.is_affine,
        }


def _s0_arc(phi: float, psi: float, q: complex) -> Arc:
    aplus, aminus = cmath.exp(1j * phi), cmath.exp(-1j * phi)
    if _affine(phi, psi):
        return Arc.segment(aplus, aminus)
    if abs(q - aplus) > MIDPOINT_EPS and abs(q - aminus) > MIDPOINT_EPS:
        return Arc(aplus, q, aminus)
    x = arc_center_x(phi, psi)
    big_r = arc_radius_R(phi, psi)
    mid = min((x + big_r, x - big_r), key=lambda t: abs(t - 1))
    return Arc(aplus, complex(mid), aminus)


def make_canonical(phi: float, psi: float) -> CanonicalBryophyllum:
    _check_valid(phi, psi)
    r = radius_r(phi, psi)
    q = r * cmath.exp(1j * psi)
    a0, aplus, aminus = 1 + 0j, cmath.exp(1j * phi), cmath.exp(-1j * phi)
    try:
        tplus = generator_map(phi, psi, 1)
        tminus = generator_map(phi, psi, -1)
        s0 = _s0_arc(phi, psi, q)
    except DegenerateInput as exc:
        raise ExcludedLocus(f"degenerate bryophyllum at phi={phi}, psi={psi}: {exc}") from exc
    return CanonicalBryophyllum(
        phi=phi, psi=psi, r=r, q=q, a0=a0, aplus=aplus, aminus=aminus,
        splus=Arc.segment(aplus, a0), sminus=Arc.segment(aminus, a0), s0=s0,
        tplus=tplus, tminus=tminus,
    )


# -- the third edge -------------------------------------------------------------------

def arc_center_x(phi: float, psi: float) -> float:
    """Real centre of the circle carrying ``s0``; ``math.inf`` when ``s0`` is straight."""
    _check_valid(phi, psi)
    if _affine(phi, psi):
        return math.inf
    return math.sin(psi) / (2 * math.cos(phi / 2) * math.sin(psi - phi / 2))


def arc_center_x_from_r(phi: float, psi: float) -> float:
    """Same centre, from equal distances to ``e^{i phi}`` and ``r e^{i psi}``."""
    _check_valid(phi, psi)
    if _affine(phi, psi):
        return math.inf
    r = radius_r(phi, psi)
    return (1 - r * r) / (2 * (math.cos(phi) - r * math.cos(psi)))


def arc_radius_R(phi: float, psi: float) -> float:
    _check_valid(phi, psi)
    if _affine(phi, psi):
        raise StraightEdge("s0 is a straight segment when psi = phi/2")
    x = arc_center_x(phi, psi)
    return math.sqrt(1 - 2 * x * math.cos(phi) + x * x)


def is_affine(b: CanonicalBryophyllum) -> bool:
    return b.is_affine


# -- the Farey region ------------------------------------------------------------------

def farey_inequalities(phi: float, psi: float) -> tuple[float, float, float]:
    """Left-hand sides (g1, g2, g3); Farey needs g1 >= 0, g2 >= 0, g3 > 0."""
    cross = 2 * math.sin(psi - phi / 2) * math.cos(phi / 2)
    g1 = math.sin(psi) + cross
    g2 = math.sin(psi) * math.cos(phi) - cross
    g3 = math.pi - (phi + 2 * psi)
    return g1, g2, g3


def is_farey(phi: float, psi: float) -> bool:
    if not (math.isfinite(phi) and math.isfinite(psi)):
        raise InvalidParameters("phi and psi must be finite")
    if not (0 < phi < math.pi and 0 <= psi <= math.pi):
        raise InvalidParameters(f"(phi, psi)=({phi}, {psi}) out of range")
    g1, g2, g3 = farey_inequalities(phi, psi)
    return g1 >= -CONSTRUCTION_EPS and g2 >= -CONSTRUCTION_EPS and g3 > CONSTRUCTION_EPS


def in_farey_closure(phi: float, psi: float, eps: float = REGION_EPS) -> bool:
    """Farey region together with its boundary (where nested iteration still converges)."""
    if not (0 < phi < math.pi and 0 <= psi <= math.pi):
        return False
    g1, g2, g3 = farey_inequalities(phi, psi)
    return g1 >= -eps and g2 >= -eps and g3 >= -eps


def _check_phi(phi: float) -> None:
    if not (math.isfinite(phi) and 0 < phi < math.pi):
        raise InvalidParameters(f"phi={phi} outside (0, pi)")


def boundary_psi1(phi: float) -> float:
    """Root in psi of the first Farey inequality (edges bound a triangle for psi >= it)."""
    _check_phi(phi)
    return brentq(lambda s: farey_inequalities(phi, s)[0], 0.0, phi / 2,
                  xtol=1e-15)


def boundary_psi2(phi: float) -> float:
    """Root in psi of the second Farey inequality (images separate for psi <= it)."""
    _check_phi(phi)
    return brentq(lambda s: farey_inequalities(phi, s)[1], 0.0, math.pi / 2,
                  xtol=1e-15)


class RegionLabel(str, enum.Enum):
    FareyInterior = "FareyInterior"
    FareyBoundaryALB = "FareyBoundaryALB"
    FareyBoundaryAPB = "FareyBoundaryAPB"
    BoundaryPL = "BoundaryPL"
    AffineLine = "AffineLine"
    SelfIntersecting_APE = "SelfIntersecting_APE"
    NoDomain_AB_ALB = "NoDomain_AB_ALB"
    Overlap_BED = "Overlap_BED"
    RminusOne_BD = "RminusOne_BD"
    Rzero_BE = "Rzero_BE"
    Rone_AB_CD = "Rone_AB_CD"
    DegeneratePhi = "DegeneratePhi"
    RLessMinusOne_BCD = "RLessMinusOne_BCD"

    def __str__(self):
        return self.value


ITERABLE_LABELS = frozenset({
    RegionLabel.FareyInterior,
    RegionLabel.FareyBoundaryALB,
    RegionLabel.FareyBoundaryAPB,
    RegionLabel.BoundaryPL,
})


def classify_region(phi: float, psi: float, eps: float = REGION_EPS) -> RegionLabel:
    """Label a point of the (phi, psi) configuration square.

    Degenerate loci are tested first.  The line g3 = 0 is also the line r = 0,
    so its Farey-closure part PL is tested before the general r = 0 segment.
    """
    if not (math.isfinite(phi) and math.isfinite(psi)):
        raise InvalidParameters("phi and psi must be finite")
    if phi <= eps or phi >= math.pi - eps:
        return RegionLabel.DegeneratePhi
    if not 0 <= psi <= math.pi:
        psi = psi % math.pi
    r = radius_r(phi, psi)
    g1, g2, g3 = farey_inequalities(phi, psi)
    if abs(r - 1) <= eps:
        return RegionLabel.Rone_AB_CD
    if abs(phi + psi - math.pi) <= eps:
        return RegionLabel.RminusOne_BD
    if abs(g3) <= eps and g1 >= -eps and g2 >= -eps:
        return RegionLabel.BoundaryPL
    if abs(r) <= eps:
        return RegionLabel.Rzero_BE
    if r < -1:
        return RegionLabel.RLessMinusOne_BCD
    if abs(psi - phi / 2) <= eps:
        return RegionLabel.AffineLine
    if g1 > eps and g2 > eps and g3 > eps:
        return RegionLabel.FareyInterior
    if abs(g1) <= eps and g2 >= -eps and g3 > eps:
        return RegionLabel.FareyBoundaryALB
    if abs(g2) <= eps and g1 >= -eps and g3 > eps:
        return RegionLabel.FareyBoundaryAPB
    if g1 < -eps and g3 > eps:
        return RegionLabel.NoDomain_AB_ALB
    if g2 < -eps and g1 >= -eps and g3 > eps:
        return RegionLabel.SelfIntersecting_APE
    return RegionLabel.Overlap_BED


# -- conformal pose and canonical form ------------------------------------------------------

@dataclass(frozen=True)
class PosedBryophyllum:
    """A canonical bryophyllum moved by a Mobius map ``pose``."""

    base: CanonicalBryophyllum
    pose: Mobius

    @property
    def vertices(self) -> tuple[complex, complex, complex]:
        return tuple(self.pose(z) for z in self.base.vertices)

    @property
    def ell_plus(self) -> Circline:
        return circline_image(self.base.ell_plus, self.pose)

    @property
    def ell_minus(self) -> Circline:
        return circline_image(self.base.ell_minus, self.pose)

    @property
    def q(self) -> complex:
        return self.pose(self.base.q)

    @property
    def tplus(self) -> Mobius:
        return self.pose @ self.base.tplus @ self.pose.inverse()

    @property
    def tminus(self) -> Mobius:
        return self.pose @ self.base.tminus @ self.pose.inverse()

    def canonicalize(self) -> tuple[float, float, Mobius]:
        a0, aplus, aminus = self.vertices
        return canonicalize(a0, aplus, aminus, self.ell_plus, self.ell_minus, self.q)


def pose(b: CanonicalBryophyllum, m: Mobius) -> PosedBryophyllum:
    return PosedBryophyllum(b, m)


def canonicalize(a0: complex, aplus: complex, aminus: complex,
                 ell_plus: Circline, ell_minus: Circline, q: complex,
                 ) -> tuple[float, float, Mobius]:
    """Recover (phi, psi) and the pose ``m`` (canonical -> given) of a bryophyllum."""
    verts = [ProjectivePoint.of(z) for z in (a0, aplus, aminus)]
    for i in range(3):
        for j in range(i + 1, 3):
            if verts[i].chordal_distance(verts[j]) <= 1e-12:
                raise DegenerateConfiguration("vertices coincide")
    try:
        far = second_intersection(ell_plus, ell_minus, a0)
    except DegenerateInput as exc:
        raise DegenerateConfiguration(str(exc)) from exc
    # send the second crossing of ell+ and ell- to infinity
    to_lines = Mobius.identity() if far.is_infinite else Mobius(0, 1, 1, -far.to_complex())
    b0, bplus, bminus = (to_lines(z) for z in (a0, aplus, aminus))
    if not all(cmath.isfinite(z) for z in (b0, bplus, bminus)):
        raise DegenerateConfiguration("a vertex coincides with the second crossing of ell+ and ell-")
    circ = circline_through(b0, bplus, bminus)
    if not isinstance(circ, Circle):
        raise DegenerateConfiguration("vertices are collinear after straightening")
    m = Mobius.affine(1 / (b0 - circ.center), -circ.center / (b0 - circ.center)) @ to_lines
    ap = m(aplus)
    phi = cmath.phase(ap)
    if phi <= 0:
        raise DegenerateConfiguration("orientation-reversed configuration")
    if abs(m(aminus) - ap.conjugate()) > 1e-7:
        raise DegenerateConfiguration("A- is not the mirror image of A+ in canonical position")
    qc = m(q)
    if abs(qc) <= 1e-12:
        psi = math.pi / 2 - phi / 2
    else:
        psi = cmath.phase(qc)
        if psi < 0:
            psi += math.pi
    return phi, psi, m.inverse()
