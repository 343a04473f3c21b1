"""Scratch: validate geometry/routing conventions against paper tables."""
from satdelay.geometry import *
from satdelay.routing import *

earth = EarthModel()
cfg = ConstellationConfig(planes=6, sats_per_plane=11, altitude_km=780, inclination_deg=86)
sp = compute_spacing(cfg)
print("spacing:", sp)
con = build_constellation(cfg, earth)
print("n sats:", len(con.positions), "r:", con.orbital_radius_km)
print("sat(1,1):", con.positions[SatelliteId(1, 1)])

# in-plane neighbor distance / delay
import math
d = distance(con.positions[SatelliteId(1, 1)], con.positions[SatelliteId(1, 2)])
print("in-plane dist:", d, "delay:", d / earth.speed_of_light_km_per_s * 1000)

cities = {c.name: c for c in BUNDLED_CITIES}
la, lon = cities["Los Angeles"], cities["London"]
r = compute_route(con, la, lon, earth)
print("\nLA->London: hops", r.satellites_in_path, "total", round(r.total_delay_ms, 2))
print("  uplink", round(r.uplink_delay_ms, 2), "downlink", round(r.downlink_delay_ms, 2))
print("  isl:", [round(x, 2) for x in r.isl_delays_ms])
print("  path:", r.hops)

for name in ("New York", "Chicago", "Toronto", "Sydney"):
    rt = compute_route(con, cities[name], cities[name], earth)
    print(f"diag {name}: {rt.total_delay_ms:.2f} ms (paper: NY 11, Chicago 6, Sydney 7)")

for a, b in (("New York", "Chicago"), ("New York", "Toronto")):
    rt = compute_route(con, cities[a], cities[b], earth)
    print(f"{a}->{b}: hops {rt.satellites_in_path} total {rt.total_delay_ms:.2f} (paper: 1 hop)")

# full matrix for the 6x11
delays, counts = city_matrix(con, BUNDLED_CITIES, earth)
print("\n6x11 delays (paper Table 4 below):")
for t, row in zip(BUNDLED_CITIES, delays):
    print(f"{t.name:12s}", " ".join(f"{v:5.1f}" for v in row))
print("\npaper Table4:")
paper4 = """11|58 13|60 60 13|39 47 26 13|62 37 83 68 11|24 71 69 83 71 12|10 57 54 38 63 23 9|26 73 51 61 79 39 25 14|62 37 91 71 36 49 61 77 7|8 56 53 36 61 22 7 23 59 6"""
for t, row in zip(BUNDLED_CITIES, paper4.split("|")):
    print(f"{t.name:12s}", row)
print("\ncounts:")
for t, row in zip(BUNDLED_CITIES, counts):
    print(f"{t.name:12s}", " ".join(f"{v:3d}" for v in row))
print("\npaper Table5:")
paper5 = """1|5 1|5 5 1|4 4 2 1|5 3 7 6 1|2 6 6 7 6 1|1 5 5 4 5 2 1|2 6 4 5 6 3 2 1|5 3 7 6 3 4 5 6 1|1 5 5 4 5 2 1 2 5 1"""
for t, row in zip(BUNDLED_CITIES, paper5.split("|")):
    print(f"{t.name:12s}", row)
