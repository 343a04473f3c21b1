"""Greedy crosslink routing and city-to-city delay matrices.

A route enters the constellation at the satellite nearest the source
terminal and leaves at the satellite nearest the destination terminal.
Between the two, each step moves to the unvisited crosslink neighbor that
is closest (straight-line) to the destination's satellite; backtracking is
precluded by a visited set, and a dead end raises RoutingError rather than
looping.  Distances become delays by dividing by the speed of light.
"""

from __future__ import annotations

import csv
import io
from dataclasses import dataclass
from pathlib import Path

from .errors import ConfigError, RoutingError
from .geometry import (
    Constellation,
    EarthModel,
    GroundTerminal,
    SatelliteId,
    crosslink_neighbors,
    distance,
    ground_to_eci,
    nearest_satellite,
)

# Standard coordinates for the 10 largest-GDP cities used by the bundled
# delay matrices; callers can substitute any list via load_cities().
BUNDLED_CITIES: tuple[GroundTerminal, ...] = (
    GroundTerminal("New York", 40.71, -74.01),
    GroundTerminal("Tokyo", 35.68, 139.69),
    GroundTerminal("Paris", 48.86, 2.35),
    GroundTerminal("London", 51.51, -0.13),
    GroundTerminal("Seoul", 37.57, 126.98),
    GroundTerminal("Los Angeles", 34.05, -118.24),
    GroundTerminal("Toronto", 43.65, -79.38),
    GroundTerminal("Mexico City", 19.43, -99.13),
    GroundTerminal("Sydney", -33.87, 151.21),
    GroundTerminal("Chicago", 41.88, -87.63),
)


@dataclass(frozen=True)
class RoutePath:
    """One end-to-end path: uplink, zero or more crosslinks, downlink."""

    source: GroundTerminal
    destination: GroundTerminal
    hops: tuple[SatelliteId, ...]
    uplink_delay_ms: float
    downlink_delay_ms: float
    isl_delays_ms: tuple[float, ...]

    @property
    def satellites_in_path(self) -> int:
        return len(self.hops)

    @property
    def total_delay_ms(self) -> float:
        return self.uplink_delay_ms + self.downlink_delay_ms + sum(self.isl_delays_ms)


def _delay_ms(km: float, earth: EarthModel) -> float:
    return km / earth.speed_of_light_km_per_s * 1000.0


def compute_route(
    constellation: Constellation,
    src: GroundTerminal,
    dst: GroundTerminal,
    earth: EarthModel | None = None,
) -> RoutePath:
    """Greedy locally-optimal route from ``src`` to ``dst``.

    Raises:
        RoutingError: if every crosslink neighbor of the current satellite
            has already been visited before the destination's satellite is
            reached.
    """
    earth = earth or EarthModel()
    src_eci = ground_to_eci(src, earth)
    dst_eci = ground_to_eci(dst, earth)
    first = nearest_satellite(constellation, src_eci)
    last = nearest_satellite(constellation, dst_eci)
    target = constellation.positions[last]

    hops = [first]
    visited = {first}
    current = first
    while current != last:
        best: SatelliteId | None = None
        best_d = 0.0
        for cand in crosslink_neighbors(constellation, current):
            if cand in visited:
                continue
            d = distance(constellation.positions[cand], target)
            if best is None or d < best_d:
                best, best_d = cand, d
        if best is None:
            raise RoutingError(
                f"greedy route {src.name!r}->{dst.name!r} stuck at satellite "
                f"{current}: all crosslink neighbors visited",
                stuck_at=current,
            )
        hops.append(best)
        visited.add(best)
        current = best

    isl = tuple(
        _delay_ms(distance(constellation.positions[a], constellation.positions[b]), earth)
        for a, b in zip(hops, hops[1:])
    )
    return RoutePath(
        source=src,
        destination=dst,
        hops=tuple(hops),
        uplink_delay_ms=_delay_ms(distance(src_eci, constellation.positions[first]), earth),
        downlink_delay_ms=_delay_ms(distance(constellation.positions[last], dst_eci), earth),
        isl_delays_ms=isl,
    )


def city_matrix(
    constellation: Constellation,
    terminals: list[GroundTerminal] | tuple[GroundTerminal, ...] = BUNDLED_CITIES,
    earth: EarthModel | None = None,
) -> tuple[list[list[float]], list[list[int]]]:
    """Lower-triangular (diagonal included) delay and hop-count matrices.

    Row i holds entries for pairs (terminal_i, terminal_j) with j <= i;
    diagonal entries are the single-satellite up/down delay through the
    terminal's nearest satellite.
    """
    if not terminals:
        raise ConfigError("city_matrix needs at least one terminal")
    earth = earth or EarthModel()
    delays: list[list[float]] = []
    counts: list[list[int]] = []
    for i, a in enumerate(terminals):
        drow: list[float] = []
        crow: list[int] = []
        for b in terminals[: i + 1]:
            try:
                route = compute_route(constellation, a, b, earth)
            except RoutingError as exc:
                raise RoutingError(
                    f"matrix pair {a.name!r}->{b.name!r} failed: {exc}",
                    stuck_at=exc.stuck_at,
                ) from exc
            drow.append(route.total_delay_ms)
            crow.append(route.satellites_in_path)
        delays.append(drow)
        counts.append(crow)
    return delays, counts


def matrix_to_csv(
    terminals: list[GroundTerminal] | tuple[GroundTerminal, ...],
    rows: list[list[float]] | list[list[int]],
    decimals: int | None = 2,
) -> str:
    """Render a triangular matrix as CSV with city names on both axes.

    ``decimals=None`` formats entries as integers (hop counts).
    """
    out = io.StringIO()
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow([""] + [t.name for t in terminals])
    for term, row in zip(terminals, rows):
        if decimals is None:
            cells = [str(int(v)) for v in row]
        else:
            cells = [f"{v:.{decimals}f}" for v in row]
        writer.writerow([term.name] + cells + [""] * (len(terminals) - len(row)))
    return out.getvalue()


def load_cities(path: str | Path) -> list[GroundTerminal]:
    """Read a ``name,lat_deg,lon_deg`` CSV (header optional)."""
    cities: list[GroundTerminal] = []
    with open(path, newline="", encoding="utf-8") as fh:
        for row in csv.reader(fh):
            if not row or not row[0].strip():
                continue
            name = row[0].strip()
            if name.lower() == "name":
                continue
            if len(row) < 3:
                raise ConfigError(f"city row needs name,lat_deg,lon_deg: {row!r}")
            try:
                lat, lon = float(row[1]), float(row[2])
            except ValueError as exc:
                raise ConfigError(f"bad coordinates for city {name!r}") from exc
            cities.append(GroundTerminal(name, lat, lon))
    if not cities:
        raise ConfigError(f"no cities found in {path}")
    return cities


def find_city(name: str, cities: tuple[GroundTerminal, ...] | list[GroundTerminal] = BUNDLED_CITIES) -> GroundTerminal:
    """Case-insensitive lookup in a city list."""
    folded = name.strip().casefold()
    for city in cities:
        if city.name.casefold() == folded:
            return city
    known = ", ".join(c.name for c in cities)
    raise ConfigError(f"unknown city {name!r}; known cities: {known}")
