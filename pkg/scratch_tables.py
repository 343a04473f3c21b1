"""Scratch: full Tables 4-7 comparison for the winning convention."""
import math

from satdelay.geometry import ConstellationConfig, EarthModel, compute_spacing, ground_to_eci
from satdelay.routing import BUNDLED_CITIES

earth = EarthModel()
C = earth.speed_of_light_km_per_s
cities = {c.name: c for c in BUNDLED_CITIES}

PAPER4 = [[11], [58, 13], [60, 60, 13], [39, 47, 26, 13], [62, 37, 83, 68, 11],
          [24, 71, 69, 83, 71, 12], [10, 57, 54, 38, 63, 23, 9],
          [26, 73, 51, 61, 79, 39, 25, 14], [62, 37, 91, 71, 36, 49, 61, 77, 7],
          [8, 56, 53, 36, 61, 22, 7, 23, 59, 6]]
PAPER5 = [[1], [5, 1], [5, 5, 1], [4, 4, 2, 1], [5, 3, 7, 6, 1],
          [2, 6, 6, 7, 6, 1], [1, 5, 5, 4, 5, 2, 1], [2, 6, 4, 5, 6, 3, 2, 1],
          [5, 3, 7, 6, 3, 4, 5, 6, 1], [1, 5, 5, 4, 5, 2, 1, 2, 5, 1]]
PAPER6 = [[10], [57, 11], [77, 109, 10], [78, 110, 11, 12], [58, 24, 75, 76, 11],
          [41, 57, 99, 100, 59, 10], [10, 57, 73, 74, 58, 44, 11],
          [24, 67, 87, 88, 68, 30, 24, 10], [92, 52, 89, 89, 53, 115, 92, 113, 10],
          [22, 54, 83, 84, 57, 30, 23, 23, 101, 10]]
PAPER7 = [[1], [8, 1], [10, 15, 1], [10, 15, 1, 1], [8, 3, 12, 12, 1],
          [6, 9, 15, 15, 9, 1], [1, 8, 10, 10, 8, 6, 1], [3, 10, 12, 12, 10, 4, 3, 1],
          [14, 7, 12, 12, 7, 19, 14, 18, 1], [3, 8, 12, 12, 8, 4, 3, 3, 13, 1]]


def build(cfg):
    sp = compute_spacing(cfg)
    r = earth.equatorial_radius_km + cfg.altitude_km
    P, S = cfg.planes, cfg.sats_per_plane
    pos = {}
    for p in range(1, P + 1):
        ra = math.radians((p - 1) * sp.delta_right_ascension_deg)
        for s in range(1, S + 1):
            a = math.radians((s - 1) * sp.delta_anomaly_deg + (p - 1) * sp.inter_plane_phasing_deg)
            inc = math.radians(cfg.inclination_deg)
            # clockwise in-plane anomaly
            x0, y0 = r * math.cos(a), -r * math.sin(a)
            x1, y1, z1 = x0, y0 * math.cos(inc), y0 * math.sin(inc)
            pos[(p, s)] = (x1 * math.cos(ra) - y1 * math.sin(ra),
                           x1 * math.sin(ra) + y1 * math.cos(ra), z1)
    return pos, P, S


def route(pos, P, S, a, b):
    pa, pb = ground_to_eci(a, earth), ground_to_eci(b, earth)
    first = min(pos, key=lambda k: (math.dist(pos[k], pa), k))
    last = min(pos, key=lambda k: (math.dist(pos[k], pb), k))
    hops, visited, cur = [first], {first}, first
    while cur != last:
        p, s = cur
        cands = [(p, s % S + 1), (p, (s - 2) % S + 1),
                 ((p - 2) % P + 1, s), (p % P + 1, s)]
        cands = [n for n in cands if n != cur and n not in visited]
        if not cands:
            return None
        cur = min(cands, key=lambda n: (math.dist(pos[n], pos[last]), cands.index(n)))
        hops.append(cur)
        visited.add(cur)
    up = math.dist(pa, pos[first]) / C * 1000
    down = math.dist(pos[last], pb) / C * 1000
    isl = sum(math.dist(pos[x], pos[y]) / C * 1000 for x, y in zip(hops, hops[1:]))
    return len(hops), up + down + isl


for cfg, p_delay, p_count, label in (
    (ConstellationConfig(6, 11, 780, 86), PAPER4, PAPER5, "6x11"),
    (ConstellationConfig(12, 24, 1400, 82), PAPER6, PAPER7, "12x24"),
):
    pos, P, S = build(cfg)
    print(f"\n===== {label}: ours vs paper (delay ms | hops)")
    err_d = err_c = 0.0
    n_exact_c = 0
    for i, a in enumerate(BUNDLED_CITIES):
        cells = []
        for j, b in enumerate(BUNDLED_CITIES[: i + 1]):
            rt = route(pos, P, S, a, b)
            if rt is None:
                cells.append("FAIL")
                continue
            err_d += abs(rt[1] - p_delay[i][j])
            err_c += abs(rt[0] - p_count[i][j])
            n_exact_c += rt[0] == p_count[i][j]
            cells.append(f"{rt[1]:5.1f}/{p_delay[i][j]:3d} {rt[0]:2d}/{p_count[i][j]:2d}")
        print(f"{a.name:12s}", " | ".join(cells))
    print(f"{label}: delay MAD {err_d/55:.2f} ms, count MAE {err_c/55:.2f}, exact counts {n_exact_c}/55")
