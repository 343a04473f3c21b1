"""Constellation geometry: satellite placement and geometric queries.

A constellation snapshot is built at a single epoch in an Earth Centered
Inertial right-handed frame whose first axis passes through the prime
meridian and whose third axis points through the north pole.  Satellite
(1,1) sits on the first axis at radius r = equatorial radius + altitude;
every other satellite is obtained by rotating that vector by its in-plane
anomaly, tilting the plane to the inclination about the first axis, and
right-ascending the plane about the polar axis.

There is no time propagation and no earth rotation: ground terminals are
converted to ECI at the same epoch, on a spherical earth.
"""

from __future__ import annotations

import io
import math
from dataclasses import dataclass, field
from typing import Iterable, Mapping, NamedTuple

import numpy as np

from .errors import ConfigError


@dataclass(frozen=True)
class EarthModel:
    """Physical constants of the earth / signal model.

    Defaults are chosen so that a 780 km LEO sits at r = 7158 km and the
    GEO ring sits at exactly 42164 km.
    """

    equatorial_radius_km: float = 6378.0
    speed_of_light_km_per_s: float = 299792.458
    geo_altitude_km: float = 35786.0

    def __post_init__(self) -> None:
        if self.equatorial_radius_km <= 0:
            raise ConfigError("equatorial_radius_km must be positive")
        if self.speed_of_light_km_per_s <= 0:
            raise ConfigError("speed_of_light_km_per_s must be positive")

    @property
    def geo_radius_km(self) -> float:
        return self.equatorial_radius_km + self.geo_altitude_km


@dataclass(frozen=True)
class ConstellationConfig:
    """Shape of a circular, evenly spaced multi-plane constellation."""

    planes: int
    sats_per_plane: int
    altitude_km: float
    inclination_deg: float

    def __post_init__(self) -> None:
        if self.planes < 1:
            raise ConfigError("planes must be >= 1")
        if self.sats_per_plane < 1:
            raise ConfigError("sats_per_plane must be >= 1")
        if self.altitude_km <= 0:
            raise ConfigError("altitude_km must be positive")
        if not 0 < self.inclination_deg <= 90:
            raise ConfigError("inclination_deg must be in (0, 90]")

    @property
    def total_satellites(self) -> int:
        return self.planes * self.sats_per_plane


@dataclass(frozen=True)
class SpacingAngles:
    """Derived angular spacing of a constellation, all in degrees."""

    delta_anomaly_deg: float
    ra_correction_deg: float
    delta_right_ascension_deg: float
    inter_plane_phasing_deg: float


class EciVector(NamedTuple):
    """Position in the ECI frame, kilometers."""

    x_km: float
    y_km: float
    z_km: float


class SatelliteId(NamedTuple):
    """1-based (plane, in-plane slot) identifier."""

    plane: int
    index: int


@dataclass(frozen=True)
class GroundTerminal:
    """A named point on the (spherical) earth surface."""

    name: str
    latitude_deg: float
    longitude_deg: float

    def __post_init__(self) -> None:
        if not -90 <= self.latitude_deg <= 90:
            raise ConfigError(f"latitude out of range for {self.name!r}")
        if not -180 < self.longitude_deg <= 180:
            raise ConfigError(f"longitude out of range for {self.name!r}")


def compute_spacing(config: ConstellationConfig) -> SpacingAngles:
    """Derive the four spacing angles of an evenly spaced constellation.

    In-plane satellites are separated by 360/S degrees of anomaly.  Planes
    are spread over 180 degrees of right ascension plus a correction that
    closes the coverage hole left at the seam by inclinations below 90
    degrees.  Adjacent planes are staggered by half the in-plane spacing
    plus a tilt-dependent term.
    """
    delta_anomaly = 360.0 / config.sats_per_plane
    complement = 90.0 - config.inclination_deg
    ra_correction = 1.5 * complement / config.planes
    delta_ra = 180.0 / config.planes + ra_correction
    phasing = 0.5 * delta_anomaly + delta_ra * math.sin(math.radians(complement))
    return SpacingAngles(
        delta_anomaly_deg=delta_anomaly,
        ra_correction_deg=ra_correction,
        delta_right_ascension_deg=delta_ra,
        inter_plane_phasing_deg=phasing,
    )


def _place(r: float, anomaly_deg: float, inclination_deg: float, ra_deg: float) -> EciVector:
    """Rotate (r, 0, 0): anomaly in-plane, tilt about x, right-ascend about z.

    The anomaly advances clockwise when viewed from the north (satellite
    (1,2) starts south of the equator); right ascension advances eastward.
    The sign pair is fixed: it is what lines staggered planes up so that
    same-slot satellites in adjacent planes are natural crosslink partners.
    """
    a = math.radians(anomaly_deg)
    inc = math.radians(inclination_deg)
    ra = math.radians(ra_deg)
    x0, y0 = r * math.cos(a), -r * math.sin(a)
    # tilt the orbit plane out of the equatorial plane about the first axis
    x1, y1, z1 = x0, y0 * math.cos(inc), y0 * math.sin(inc)
    # rotate the plane's ascending node about the polar axis
    x2 = x1 * math.cos(ra) - y1 * math.sin(ra)
    y2 = x1 * math.sin(ra) + y1 * math.cos(ra)
    # + 0.0 normalizes IEEE negative zero so exports are sign-stable
    return EciVector(x2 + 0.0, y2 + 0.0, z1 + 0.0)


@dataclass(frozen=True)
class Constellation:
    """A full constellation snapshot: positions plus derived spacing."""

    config: ConstellationConfig
    orbital_radius_km: float
    spacing: SpacingAngles
    positions: Mapping[SatelliteId, EciVector]
    _ids: tuple[SatelliteId, ...] = field(init=False, repr=False, compare=False)
    _matrix: np.ndarray = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        ids = tuple(sorted(self.positions))
        object.__setattr__(self, "_ids", ids)
        object.__setattr__(
            self, "_matrix", np.array([self.positions[i] for i in ids], dtype=float)
        )

    def satellites(self) -> Iterable[SatelliteId]:
        return self._ids

    def position(self, sat: SatelliteId) -> EciVector:
        return self.positions[sat]

    def to_csv(self) -> str:
        """Export positions as ``plane,index,x_km,y_km,z_km`` (6 decimals)."""
        out = io.StringIO()
        out.write("plane,index,x_km,y_km,z_km\n")
        for sat in self._ids:
            p = self.positions[sat]
            out.write(
                f"{sat.plane},{sat.index},{p.x_km:.6f},{p.y_km:.6f},{p.z_km:.6f}\n"
            )
        return out.getvalue()


def build_constellation(config: ConstellationConfig, earth: EarthModel | None = None) -> Constellation:
    """Place every satellite of ``config`` at the common snapshot epoch.

    Satellite (p, s) carries an in-plane anomaly of (s-1) spacings plus
    (p-1) inter-plane phasings; its plane is tilted to the inclination and
    right-ascended by (p-1) plane spacings.  The function is pure:
    identical inputs produce bit-identical positions.
    """
    earth = earth or EarthModel()
    spacing = compute_spacing(config)
    r = earth.equatorial_radius_km + config.altitude_km
    positions: dict[SatelliteId, EciVector] = {}
    for p in range(1, config.planes + 1):
        ra = (p - 1) * spacing.delta_right_ascension_deg
        base = (p - 1) * spacing.inter_plane_phasing_deg
        for s in range(1, config.sats_per_plane + 1):
            anomaly = base + (s - 1) * spacing.delta_anomaly_deg
            positions[SatelliteId(p, s)] = _place(r, anomaly, config.inclination_deg, ra)
    return Constellation(
        config=config, orbital_radius_km=r, spacing=spacing, positions=positions
    )


def ground_to_eci(terminal: GroundTerminal, earth: EarthModel | None = None) -> EciVector:
    """Spherical-earth lat/lon to ECI at the constellation epoch."""
    earth = earth or EarthModel()
    lat = math.radians(terminal.latitude_deg)
    lon = math.radians(terminal.longitude_deg)
    r = earth.equatorial_radius_km
    return EciVector(
        r * math.cos(lat) * math.cos(lon),
        r * math.cos(lat) * math.sin(lon),
        r * math.sin(lat),
    )


def distance(a: EciVector, b: EciVector) -> float:
    """Straight-line distance in km."""
    return math.dist(a, b)


def nearest_satellite(constellation: Constellation, point: EciVector) -> SatelliteId:
    """Id of the satellite closest to ``point``.

    Ties break toward the lowest (plane, index) pair.
    """
    deltas = constellation._matrix - np.asarray(point, dtype=float)
    best = int(np.argmin(np.einsum("ij,ij->i", deltas, deltas)))
    return constellation._ids[best]


def crosslink_neighbors(constellation: Constellation, sat: SatelliteId) -> list[SatelliteId]:
    """The fore, aft, port and starboard crosslink partners of ``sat``.

    Fore/aft are the in-plane neighbors (indices wrap).  Port/starboard
    are the same-slot satellites in the previous/next plane (wrapping
    across the seam): with half-spacing staggered phasing the same-slot
    satellite is the stable nearest partner in an adjacent plane, and
    keeping the slot fixed reproduces the crosslink fabric the delay
    tables are built on.  Seam and polar link constraints are ignored;
    the links are always considered available.  Single-plane
    constellations yield fore/aft only; degenerate duplicates (tiny
    constellations) are removed while preserving order.
    """
    cfg = constellation.config
    if not (1 <= sat.plane <= cfg.planes and 1 <= sat.index <= cfg.sats_per_plane):
        raise ConfigError(f"satellite {sat} outside {cfg.planes}x{cfg.sats_per_plane}")
    s = cfg.sats_per_plane
    neighbors: list[SatelliteId] = [
        SatelliteId(sat.plane, sat.index % s + 1),
        SatelliteId(sat.plane, (sat.index - 2) % s + 1),
    ]
    if cfg.planes > 1:
        neighbors.append(SatelliteId((sat.plane - 2) % cfg.planes + 1, sat.index))
        neighbors.append(SatelliteId(sat.plane % cfg.planes + 1, sat.index))
    seen: set[SatelliteId] = {sat}
    unique: list[SatelliteId] = []
    for n in neighbors:
        if n not in seen:
            unique.append(n)
            seen.add(n)
    return unique
