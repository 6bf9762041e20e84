"""Configurations of round circles ("rings") in R^3.

Floating point predicates use one absolute tolerance ``EPS`` scaled by the
size of the circles involved.  Circles whose data are all ``Fraction`` or
``int`` can be tested exactly for linking and microcosm intersection
(``exact=True``), which avoids square roots altogether.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field, replace
from fractions import Fraction
from numbers import Rational
from typing import Iterable, Sequence

EPS = 1e-9
# microcosm of a circle: closed ball with the same center and this times the radius
MICROCOSM_FACTOR = 2

LINKED, UNLINKED, DEGENERATE = "linked", "unlinked", "degenerate"

Vec = tuple


def _sub(a, b):
    return (a[0] - b[0], a[1] - b[1], a[2] - b[2])


def _add(a, b):
    return (a[0] + b[0], a[1] + b[1], a[2] + b[2])


def _scale(k, a):
    return (k * a[0], k * a[1], k * a[2])


def _dot(a, b):
    return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]


def _cross(a, b):
    return (a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0])


def _norm(a) -> float:
    return math.sqrt(float(_dot(a, a)))


def _is_exact(x) -> bool:
    return isinstance(x, Rational)


class GeometryError(ValueError):
    pass


class PairLinked(GeometryError):
    def __init__(self, i: int, j: int):
        super().__init__(f"circles {i} and {j} are linked")
        self.pair = (i, j)


class PairDegenerate(GeometryError):
    def __init__(self, i: int, j: int):
        super().__init__(f"circles {i} and {j} intersect or are too close to decide")
        self.pair = (i, j)


class NotGeneric(GeometryError):
    def __init__(self, i: int, j: int):
        super().__init__(f"center of circle {i} lies on the disk of circle {j}; perturb the configuration")
        self.pair = (i, j)


@dataclass(frozen=True)
class Circle:
    center: Vec
    radius: float
    normal: Vec

    def __post_init__(self):
        object.__setattr__(self, "center", tuple(self.center))
        object.__setattr__(self, "normal", tuple(self.normal))
        if len(self.center) != 3 or len(self.normal) != 3:
            raise GeometryError("center and normal must be 3-vectors")
        if not self.radius > 0:
            raise GeometryError("radius must be positive")
        nn = _dot(self.normal, self.normal)
        if self.exact:
            if nn != 1:
                raise GeometryError("exact circles need an exactly unit normal")
        elif abs(nn - 1) > 1e-6:
            raise GeometryError("normal must be a unit vector")

    @classmethod
    def from_normal(cls, center, radius, normal) -> Circle:
        """Build a circle, normalizing ``normal`` to unit length."""
        k = _norm(normal)
        return cls(tuple(map(float, center)), float(radius), tuple(x / k for x in normal))

    @property
    def exact(self) -> bool:
        return all(map(_is_exact, (*self.center, self.radius, *self.normal)))

    def with_radius(self, r) -> Circle:
        return replace(self, radius=r)

    def basis(self) -> tuple[Vec, Vec]:
        """Orthonormal pair spanning the plane of the circle."""
        n = tuple(map(float, self.normal))
        ref = (1.0, 0.0, 0.0) if abs(n[0]) < 0.9 else (0.0, 1.0, 0.0)
        u = _cross(n, ref)
        u = _scale(1 / _norm(u), u)
        return u, _cross(n, u)

    def points(self, count: int) -> list[Vec]:
        u, v = self.basis()
        c, r = tuple(map(float, self.center)), float(self.radius)
        out = []
        for k in range(count):
            th = 2 * math.pi * k / count
            out.append(_add(c, _add(_scale(r * math.cos(th), u), _scale(r * math.sin(th), v))))
        return out


def wicket(x: float, y: float, radius: float, angle: float) -> Circle:
    """Vertical circle centered on the xy-plane; its upper half is a wicket."""
    return Circle((x, y, 0.0), radius, (math.cos(angle), math.sin(angle), 0.0))


def is_wicket(c: Circle, tol: float = EPS) -> bool:
    return abs(c.center[2]) <= tol and abs(c.normal[2]) <= tol


# ---------------------------------------------------------------- linking

def _tol(*circles: Circle) -> float:
    size = max(max(float(c.radius), _norm(c.center)) for c in circles)
    return EPS * (1 + size)


def _pierce_float(c1: Circle, c2: Circle) -> int | None:
    """Points of c1 on the plane of c2 strictly inside c2's disk, or None
    when c1 meets c2 or touches the plane of c2 near its disk."""
    tol = _tol(c1, c2)
    n2 = tuple(map(float, c2.normal))
    C1, C2 = tuple(map(float, c1.center)), tuple(map(float, c2.center))
    r1, r2 = float(c1.radius), float(c2.radius)
    u, v = c1.basis()
    A, B = r1 * _dot(u, n2), r1 * _dot(v, n2)
    D = _dot(_sub(C1, C2), n2)
    R = math.hypot(A, B)
    if R <= tol:
        if abs(D) > tol:
            return 0
        d = _norm(_sub(C1, C2))
        if abs(r1 - r2) - tol <= d <= r1 + r2 + tol:
            return None
        return 0
    if abs(D) > R + tol:
        return 0
    phi = math.atan2(B, A)
    ratio = max(-1.0, min(1.0, -D / R))
    delta = math.acos(ratio)
    if abs(abs(D) - R) <= tol:
        thetas = [phi + delta]
        tangent = True
    else:
        thetas = [phi + delta, phi - delta]
        tangent = False
    inside = 0
    for th in thetas:
        p = _add(C1, _add(_scale(r1 * math.cos(th), u), _scale(r1 * math.sin(th), v)))
        dist = _norm(_sub(p, C2))
        if abs(dist - r2) <= tol:
            return None
        if dist < r2:
            if tangent:
                return None
            inside += 1
    return inside


def _pierce_exact(c1: Circle, c2: Circle) -> int | None:
    """Exact parity version: returns 1 if exactly one intersection point of
    c1 with the plane of c2 is inside c2, 0 if none or two, None if some
    point lies on c2 or c1 is tangent to the plane inside the disk."""
    n1, n2 = c1.normal, c2.normal
    C1, C2 = c1.center, c2.center
    r1s, r2s = c1.radius ** 2, c2.radius ** 2
    d = _cross(n1, n2)
    a = _dot(d, d)
    if a == 0:
        if _dot(_sub(C1, C2), n2) != 0:
            return 0
        dd = _dot(_sub(C1, C2), _sub(C1, C2))
        if (c1.radius - c2.radius) ** 2 <= dd <= (c1.radius + c2.radius) ** 2:
            return None
        return 0
    h1, h2 = _dot(n1, C1), _dot(n2, C2)
    k12 = _dot(n1, n2)
    P0 = _scale(Fraction(1) / a, _add(_scale(h1 - h2 * k12, n1), _scale(h2 - h1 * k12, n2)))
    e1, e2 = _sub(P0, C1), _sub(P0, C2)
    b = 2 * _dot(d, e1)
    c = _dot(e1, e1) - r1s
    disc = b * b - 4 * a * c
    if disc < 0:
        return 0
    # q - p is linear since both quadratics have leading coefficient a
    m = 2 * _dot(d, _sub(C1, C2))
    l_ = _dot(e2, e2) - r2s - _dot(e1, e1) + r1s
    if disc == 0:
        t0 = Fraction(-b) / (2 * a)
        return None if m * t0 + l_ <= 0 else 0
    prod = m * m * Fraction(c) / a - m * l_ * Fraction(b) / a + l_ * l_
    if prod == 0:
        return None
    return 1 if prod < 0 else 0


def linked(c1: Circle, c2: Circle, exact: bool | None = None) -> str:
    """``"linked"``, ``"unlinked"`` or ``"degenerate"``.

    Linked means exactly one transverse point of c1 on the plane of c2 lies
    inside the disk of c2; both directions are computed and must agree.
    """
    if exact is None:
        exact = c1.exact and c2.exact
    pierce = _pierce_exact if exact else _pierce_float
    k12, k21 = pierce(c1, c2), pierce(c2, c1)
    if k12 is None or k21 is None:
        return DEGENERATE
    l12, l21 = k12 == 1, k21 == 1
    if l12 != l21:
        return DEGENERATE
    return LINKED if l12 else UNLINKED


def crossing_parity(c1: Circle, c2: Circle, samples: int = 10_000) -> int:
    """Number of segments of a ``samples``-gon on c1 crossing the open disk of
    c2.  Independent numeric check of :func:`linked`."""
    pts = c1.points(samples)
    n2 = tuple(map(float, c2.normal))
    C2, r2 = tuple(map(float, c2.center)), float(c2.radius)
    count = 0
    for k in range(samples):
        p, q = pts[k], pts[(k + 1) % samples]
        sp, sq = _dot(_sub(p, C2), n2), _dot(_sub(q, C2), n2)
        if (sp > 0) == (sq > 0):
            continue
        t = sp / (sp - sq)
        x = _add(p, _scale(t, _sub(q, p)))
        if _norm(_sub(x, C2)) < r2:
            count += 1
    return count


# ---------------------------------------------------------------- distances

def point_circle_distance(p: Vec, c: Circle) -> float:
    rel = _sub(tuple(map(float, p)), tuple(map(float, c.center)))
    n = tuple(map(float, c.normal))
    h = _dot(rel, n)
    rho = _norm(_sub(rel, _scale(h, n)))
    return math.hypot(h, rho - float(c.radius))


def point_disk_distance(p: Vec, c: Circle) -> float:
    """Distance to the closed flat disk bounded by ``c``; equals the minimum
    over all concentric slices of radius s in (0, r]."""
    rel = _sub(tuple(map(float, p)), tuple(map(float, c.center)))
    n = tuple(map(float, c.normal))
    h = _dot(rel, n)
    rho = _norm(_sub(rel, _scale(h, n)))
    if rho <= float(c.radius):
        return abs(h)
    return math.hypot(h, rho - float(c.radius))


def _disk_chord(c: Circle, p0: Vec, d: Vec) -> tuple[float, float] | None:
    """Parameter interval of the line p0 + t d (|d| = 1) inside the disk of c."""
    rel = _sub(tuple(map(float, c.center)), p0)
    t = _dot(rel, d)
    foot = _add(p0, _scale(t, d))
    h = _norm(_sub(tuple(map(float, c.center)), foot))
    r = float(c.radius)
    if h > r:
        return None
    half = math.sqrt(max(r * r - h * h, 0.0))
    return t - half, t + half


def disks_disjoint(c1: Circle, c2: Circle) -> bool:
    """True iff the closed flat disks bounded by c1 and c2 do not meet."""
    tol = _tol(c1, c2)
    n1, n2 = tuple(map(float, c1.normal)), tuple(map(float, c2.normal))
    C1, C2 = tuple(map(float, c1.center)), tuple(map(float, c2.center))
    d = _cross(n1, n2)
    dn = _norm(d)
    if dn <= 1e-12:
        if abs(_dot(_sub(C1, C2), n2)) > tol:
            return True
        return _norm(_sub(C1, C2)) > float(c1.radius) + float(c2.radius) + tol
    d = _scale(1 / dn, d)
    h1, h2 = _dot(n1, C1), _dot(n2, C2)
    k = _dot(n1, n2)
    a = dn * dn
    p0 = _scale(1 / a, _add(_scale(h1 - h2 * k, n1), _scale(h2 - h1 * k, n2)))
    s1, s2 = _disk_chord(c1, p0, d), _disk_chord(c2, p0, d)
    if s1 is None or s2 is None:
        return True
    return max(s1[0], s2[0]) > min(s1[1], s2[1]) + tol


# ---------------------------------------------------------------- configurations

@dataclass(frozen=True)
class RingConfig:
    circles: tuple[Circle, ...]
    validated: bool = False

    def __post_init__(self):
        object.__setattr__(self, "circles", tuple(self.circles))

    def __len__(self):
        return len(self.circles)

    def __iter__(self):
        return iter(self.circles)


def validate(cfg: RingConfig | Iterable[Circle], exact: bool | None = None) -> RingConfig:
    """Check all pairs are disjoint and unlinked (1-based indices in errors)."""
    circles = tuple(cfg.circles if isinstance(cfg, RingConfig) else cfg)
    for i in range(len(circles)):
        for j in range(i + 1, len(circles)):
            verdict = linked(circles[i], circles[j], exact)
            if verdict == LINKED:
                raise PairLinked(i + 1, j + 1)
            if verdict == DEGENERATE:
                raise PairDegenerate(i + 1, j + 1)
    return RingConfig(circles, True)


def microcosms_meet(c1: Circle, c2: Circle) -> bool:
    """Closed microcosm balls intersect: |c1 - c2| <= 2 (r1 + r2)."""
    diff = _sub(c1.center, c2.center)
    reach = MICROCOSM_FACTOR * (c1.radius + c2.radius)
    return _dot(diff, diff) <= reach * reach


def complexity(cfg: RingConfig):
    """Largest ratio r_small / r_large over pairs with meeting microcosms, or 0."""
    best = 0
    cs = cfg.circles
    for i in range(len(cs)):
        for j in range(i + 1, len(cs)):
            if microcosms_meet(cs[i], cs[j]):
                a, b = cs[i].radius, cs[j].radius
                ratio = min(a, b) / max(a, b)
                if ratio > best:
                    best = ratio
    return best


def canonical_shrink(cfg: RingConfig, u) -> RingConfig:
    """Slice of the orthogonal hemispheres at height ``u``.

    Circles with r <= u have died and are dropped; the rest keep center and
    normal with radius sqrt(r^2 - u^2).
    """
    if u < 0:
        raise GeometryError("shrink height must be non-negative")
    if u == 0:
        return cfg
    out = [c.with_radius(math.sqrt(c.radius ** 2 - u ** 2)) for c in cfg.circles if c.radius > u]
    return RingConfig(tuple(out), cfg.validated)


@dataclass
class UnlinkCertificate:
    trajectory: list[tuple[float, RingConfig]]
    final: RingConfig
    death_times: list[float]
    frozen_radii: list[float]
    # freeze_times[i]: height at which circle i stops shrinking
    freeze_times: list[float] = field(default_factory=list)

    def disks_disjoint(self) -> bool:
        cs = self.final.circles
        return all(disks_disjoint(cs[i], cs[j])
                   for i in range(len(cs)) for j in range(i + 1, len(cs)))


def check_generic(cfg: RingConfig, tol: float | None = None) -> None:
    cs = cfg.circles
    for i, ci in enumerate(cs):
        for j, cj in enumerate(cs):
            if i != j and point_disk_distance(ci.center, cj) <= (tol if tol is not None else _tol(ci, cj)):
                raise NotGeneric(i + 1, j + 1)


def _slice_radius(c: Circle, u: float, frozen: float) -> float:
    s = math.sqrt(max(c.radius ** 2 - u ** 2, 0.0))
    return max(s, frozen)


def generic_unlink_certificate(cfg: RingConfig, grid: Sequence[float] = (),
                               tol: float | None = None) -> UnlinkCertificate:
    """Shrink canonically, parking each circle at a small radius just before
    it would vanish, until all flat disks are disjoint.

    Circles are processed in order of death time r_i (ties by index).  The
    parked radius of circle i is half the distance from its center to the
    nearest slice of any other circle (slices of C_j sweep out its disk) or
    to an already parked circle.
    """
    if not cfg.validated:
        cfg = validate(cfg)
    check_generic(cfg, tol)
    cs = [replace(c, center=tuple(map(float, c.center)), normal=tuple(map(float, c.normal)),
                  radius=float(c.radius)) for c in cfg.circles]
    n = len(cs)
    order = sorted(range(n), key=lambda k: (cs[k].radius, k))
    frozen = [0.0] * n
    parked: list[int] = []
    for i in order:
        gaps = [point_disk_distance(cs[i].center, cs[j]) for j in range(n) if j != i]
        gaps += [point_circle_distance(cs[i].center, cs[j].with_radius(frozen[j])) for j in parked]
        delta = 0.5 * min(gaps) if gaps else cs[i].radius
        frozen[i] = min(delta, cs[i].radius)
        parked.append(i)
    deaths = [c.radius for c in cs]
    freeze = [math.sqrt(max(cs[k].radius ** 2 - frozen[k] ** 2, 0.0)) for k in range(n)]
    times = sorted({0.0, *deaths, *(float(g) for g in grid if g >= 0)})

    def at(u: float) -> RingConfig:
        return RingConfig(tuple(c.with_radius(_slice_radius(c, u, frozen[k]))
                                for k, c in enumerate(cs)), True)

    trajectory = [(u, at(u)) for u in times]
    final = at(max(deaths) if deaths else 0.0)
    return UnlinkCertificate(trajectory, final, deaths, frozen, freeze)


def reduce_complexity(cfg: RingConfig, target: float) -> RingConfig:
    """Shrink circles in place until the complexity is below ``target``.

    Each radius is capped at a quarter of (slightly less than) the distance
    to the nearest other center, which makes all microcosms disjoint.
    Shrinking in place keeps disjoint flat disks disjoint.
    """
    if complexity(cfg) < target:
        return cfg
    cs = cfg.circles
    out = []
    for i, c in enumerate(cs):
        near = min((_norm(_sub(c.center, o.center)) for j, o in enumerate(cs) if j != i),
                   default=math.inf)
        cap = 0.99 * near / (2 * MICROCOSM_FACTOR)
        out.append(c.with_radius(min(float(c.radius), cap)))
    return RingConfig(tuple(out), cfg.validated)


# ---------------------------------------------------------------- text format

def _num(text: str, exact: bool):
    if exact or "/" in text:
        return Fraction(text)
    return float(text)


def _fmt(x) -> str:
    if isinstance(x, Fraction):
        return str(x)
    if isinstance(x, int):
        return str(x)
    return repr(float(x))


def parse_config(text: str, exact: bool = False) -> RingConfig:
    """One circle per line: ``cx cy cz r nx ny nz``; ``#`` starts a comment."""
    circles = []
    for lineno, line in enumerate(text.splitlines(), 1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if len(parts) != 7:
            raise GeometryError(f"line {lineno}: expected 7 numbers, got {len(parts)}")
        try:
            vals = [_num(p, exact) for p in parts]
        except ValueError as exc:
            raise GeometryError(f"line {lineno}: {exc}") from None
        try:
            circles.append(Circle(tuple(vals[:3]), vals[3], tuple(vals[4:])))
        except GeometryError as exc:
            raise GeometryError(f"line {lineno}: {exc}") from None
    return RingConfig(tuple(circles))


def format_config(cfg: RingConfig) -> str:
    return "".join(" ".join(_fmt(x) for x in (*c.center, c.radius, *c.normal)) + "\n"
                   for c in cfg.circles)


def format_trajectory(traj: Iterable[tuple[float, RingConfig]]) -> str:
    return "".join(f"u={_fmt(u)}\n{format_config(cfg)}" for u, cfg in traj)
