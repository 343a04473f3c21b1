"""Scratch: search placement sign conventions against acceptance windows."""
import itertools
import math

from satdelay.geometry import (
    ConstellationConfig, EarthModel, EciVector, SatelliteId, compute_spacing,
    GroundTerminal, ground_to_eci, distance,
)
from satdelay.routing import BUNDLED_CITIES

earth = EarthModel()
cfg = ConstellationConfig(6, 11, 780, 86)
sp = compute_spacing(cfg)
r = earth.equatorial_radius_km + cfg.altitude_km
cities = {c.name: c for c in BUNDLED_CITIES}


def build(sa, si, sr):
    pos = {}
    for p in range(1, 7):
        ra = math.radians(sr * (p - 1) * sp.delta_right_ascension_deg)
        for s in range(1, 12):
            a = math.radians(sa * ((s - 1) * sp.delta_anomaly_deg + (p - 1) * sp.inter_plane_phasing_deg))
            inc = math.radians(si * cfg.inclination_deg)
            x0, y0 = r * math.cos(a), r * math.sin(a)
            x1, y1, z1 = x0, y0 * math.cos(inc), y0 * math.sin(inc)
            x2 = x1 * math.cos(ra) - y1 * math.sin(ra)
            y2 = x1 * math.sin(ra) + y1 * math.cos(ra)
            pos[(p, s)] = (x2, y2, z1)
    return pos


def nearest(pos, pt):
    return min(pos, key=lambda k: (math.dist(pos[k], pt), k))


def neighbors(pos, sat):
    p, s = sat
    out = [(p, s % 11 + 1), (p, (s - 2) % 11 + 1)]
    for q in ((p - 2) % 6 + 1, p % 6 + 1):
        out.append(min(((q, t) for t in range(1, 12)), key=lambda k: (math.dist(pos[k], pos[sat]), k)))
    return [n for n in out if n != sat]


def route(pos, a, b):
    sa_, sb = ground_to_eci(a, earth), ground_to_eci(b, earth)
    first, last = nearest(pos, sa_), nearest(pos, sb)
    hops, visited, cur = [first], {first}, first
    while cur != last:
        cands = [n for n in neighbors(pos, cur) if n not in visited]
        if not cands:
            return None
        cur = min(cands, key=lambda n: math.dist(pos[n], pos[last]))
        hops.append(cur)
        visited.add(cur)
    c = earth.speed_of_light_km_per_s
    up = math.dist(sa_, pos[first]) / c * 1000
    down = math.dist(pos[last], sb) / c * 1000
    isl = sum(math.dist(pos[x], pos[y]) / c * 1000 for x, y in zip(hops, hops[1:]))
    return len(hops), up + down + isl, up, down


for sa, si, sr in itertools.product((1, -1), repeat=3):
    pos = build(sa, si, sr)
    ll = route(pos, cities["Los Angeles"], cities["London"])
    nyc = route(pos, cities["New York"], cities["Chicago"])
    nyt = route(pos, cities["New York"], cities["Toronto"])
    dny = route(pos, cities["New York"], cities["New York"])
    dch = route(pos, cities["Chicago"], cities["Chicago"])
    dsy = route(pos, cities["Sydney"], cities["Sydney"])
    ok_ll = ll and ll[0] in (6, 7, 8) and 75.105 <= ll[1] <= 91.795 and ll[2] < 9 and ll[3] < 9
    ok_cnt = nyc and nyc[0] == 1 and nyt and nyt[0] == 1
    ok_diag = (6.6 <= dny[1] <= 15.4) and (3.6 <= dch[1] <= 8.4) and (4.2 <= dsy[1] <= 9.8)
    print(f"sa={sa:+d} si={si:+d} sr={sr:+d} | LA-Lon {ll[0]} {ll[1]:6.2f} up{ll[2]:5.2f} dn{ll[3]:5.2f}"
          f" | NYC-CHI {nyc[0]} NYC-TOR {nyt[0]} | diag {dny[1]:5.2f}/{dch[1]:5.2f}/{dsy[1]:5.2f}"
          f" | {'LL-OK' if ok_ll else '     '} {'CNT-OK' if ok_cnt else '      '} {'DIAG-OK' if ok_diag else ''}")
