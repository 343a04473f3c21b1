"""Scratch: structural variants (same-index crosslinks, metric target)."""
import itertools
import math

from satdelay.geometry import ConstellationConfig, EarthModel, compute_spacing, ground_to_eci
from satdelay.routing import BUNDLED_CITIES

earth = EarthModel()
cfg = ConstellationConfig(6, 11, 780, 86)
sp = compute_spacing(cfg)
r = earth.equatorial_radius_km + cfg.altitude_km
cities = {c.name: c for c in BUNDLED_CITIES}
C = earth.speed_of_light_km_per_s

PAPER4 = [[11], [58, 13], [60, 60, 13], [39, 47, 26, 13], [62, 37, 83, 68, 11],
          [24, 71, 69, 83, 71, 12], [10, 57, 54, 38, 63, 23, 9],
          [26, 73, 51, 61, 79, 39, 25, 14], [62, 37, 91, 71, 36, 49, 61, 77, 7],
          [8, 56, 53, 36, 61, 22, 7, 23, 59, 6]]
PAPER5 = [[1], [5, 1], [5, 5, 1], [4, 4, 2, 1], [5, 3, 7, 6, 1],
          [2, 6, 6, 7, 6, 1], [1, 5, 5, 4, 5, 2, 1], [2, 6, 4, 5, 6, 3, 2, 1],
          [5, 3, 7, 6, 3, 4, 5, 6, 1], [1, 5, 5, 4, 5, 2, 1, 2, 5, 1]]


def build(sa, si, sr, sph):
    pos = {}
    for p in range(1, 7):
        ra = math.radians(sr * (p - 1) * sp.delta_right_ascension_deg)
        for s in range(1, 12):
            a = math.radians(sa * (s - 1) * sp.delta_anomaly_deg + sph * (p - 1) * sp.inter_plane_phasing_deg)
            inc = math.radians(si * cfg.inclination_deg)
            x0, y0 = r * math.cos(a), r * math.sin(a)
            x1, y1, z1 = x0, y0 * math.cos(inc), y0 * math.sin(inc)
            pos[(p, s)] = (x1 * math.cos(ra) - y1 * math.sin(ra),
                           x1 * math.sin(ra) + y1 * math.cos(ra), z1)
    return pos


def nearest(pos, pt):
    return min(pos, key=lambda k: (math.dist(pos[k], pt), k))


def neighbors(pos, sat, same_index):
    p, s = sat
    out = [(p, s % 11 + 1), (p, (s - 2) % 11 + 1)]
    for q in ((p - 2) % 6 + 1, p % 6 + 1):
        if same_index:
            out.append((q, s))
        else:
            out.append(min(((q, t) for t in range(1, 12)),
                           key=lambda k: (math.dist(pos[k], pos[sat]), k)))
    return [n for n in out if n != sat]


def route(pos, a, b, same_index=False, to_terminal=False):
    sa_, sb = ground_to_eci(a, earth), ground_to_eci(b, earth)
    first, last = nearest(pos, sa_), nearest(pos, sb)
    goal = sb if to_terminal else pos[last]
    hops, visited, cur = [first], {first}, first
    while cur != last:
        cands = [n for n in neighbors(pos, cur, same_index) if n not in visited]
        if not cands:
            return None
        cur = min(cands, key=lambda n: math.dist(pos[n], goal))
        hops.append(cur)
        visited.add(cur)
    up = math.dist(sa_, pos[first]) / C * 1000
    down = math.dist(pos[last], sb) / C * 1000
    isl = [math.dist(pos[x], pos[y]) / C * 1000 for x, y in zip(hops, hops[1:])]
    return len(hops), up + down + sum(isl), up, down, isl, hops


for same_index, to_term in ((True, False), (False, True), (True, True)):
    print(f"\n==== same_index={same_index} to_terminal={to_term}")
    for sa, si, sr, sph in itertools.product((1, -1), repeat=4):
        pos = build(sa, si, sr, sph)
        ll = route(pos, cities["Los Angeles"], cities["London"], same_index, to_term)
        if ll is None:
            continue
        nyc = route(pos, cities["New York"], cities["Chicago"], same_index, to_term)
        nyt = route(pos, cities["New York"], cities["Toronto"], same_index, to_term)
        dny = route(pos, cities["New York"], cities["New York"], same_index, to_term)
        dch = route(pos, cities["Chicago"], cities["Chicago"], same_index, to_term)
        dsy = route(pos, cities["Sydney"], cities["Sydney"], same_index, to_term)
        ok_ll = ll[0] in (6, 7, 8) and 75.105 <= ll[1] <= 91.795 and ll[2] < 9 and ll[3] < 9
        ok_cnt = nyc and nyc[0] == 1 and nyt and nyt[0] == 1
        ok_diag = (6.6 <= dny[1] <= 15.4) and (3.6 <= dch[1] <= 8.4) and (4.2 <= dsy[1] <= 9.8)
        if ok_ll:
            err_d = err_c = 0.0
            bad = False
            for i, a in enumerate(BUNDLED_CITIES):
                for j, b in enumerate(BUNDLED_CITIES[: i + 1]):
                    rt = route(pos, a, b, same_index, to_term)
                    if rt is None:
                        bad = True
                        break
                    err_d += abs(rt[1] - PAPER4[i][j])
                    err_c += abs(rt[0] - PAPER5[i][j])
                if bad:
                    break
            print(f"sa={sa:+d} si={si:+d} sr={sr:+d} sph={sph:+d} | LA-Lon {ll[0]} {ll[1]:6.2f}"
                  f" | {'CNT' if ok_cnt else '---'} {'DIAG' if ok_diag else '----'}"
                  f" | MAD {err_d/55:5.2f} cnt-err {err_c}"
                  f" | isl {[round(x,2) for x in ll[4]]}")
