#!/usr/bin/env python3
"""Regenerates the synthetic 2010 World Cup fixtures under data/fixtures/.

Full passing matrices are not available, so each team gets a
plausible synthetic matrix: pass propensity decays with distance between
formation slots, lanes are randomly dropped, and counts are scaled so that
the per-game total equals the team's reference P exactly. Output is fully
deterministic (fixed seeds).
"""
import json
import math
import random
from pathlib import Path

ROOT = Path(__file__).resolve().parent.parent
OUT = ROOT / "data" / "fixtures" / "wc2010"

# team, P, games played, formation, dropout probability, player names
# (names listed in formation-slot order)
TEAMS = [
    ("Argentina", 227, 5, "4-4-2", 0.15, None),
    ("Brazil", 321, 5, "4-2-3-1", 0.08, None),
    ("Chile", 120, 4, "3-4-3", 0.35, None),
    ("England", 239, 4, "4-4-2", 0.15, None),
    ("Germany", 220, 7, "4-2-3-1", 0.2,
     ["Neuer", "Lahm", "Mertesacker", "Friedrich", "Boateng", "Khedira",
      "Schweinsteiger", "Trochowski", "Ozil", "Podolski", "Klose"]),
    ("Ghana", 184, 5, "4-5-1", 0.2, None),
    ("Japan", 180, 4, "4-5-1", 0.25, None),
    ("Korea Rep.", 227, 4, "4-4-2", 0.18, None),
    ("Mexico", 225, 4, "4-3-3", 0.3, None),
    ("Netherlands", 266, 7, "4-2-3-1", 0.08,
     ["Stekelenburg", "Van Der Wiel", "Heitinga", "Mathijsen", "V. Bronckhorst",
      "Van Bommel", "De Jong", "Robben", "Sneijder", "Kuyt", "Van Persie"]),
    ("Paraguay", 103, 5, "4-4-2", 0.4, None),
    ("Portugal", 175, 4, "4-3-3", 0.22, None),
    ("Slovakia", 166, 4, "4-5-1", 0.2, None),
    ("Spain", 417, 7, "4-3-3", 0.05,
     ["Casillas", "Ramos", "Pique", "Puyol", "Capdevila", "Alonso",
      "Busquets", "Xavi", "Pedro", "Villa", "Iniesta"]),
    ("USA", 160, 4, "4-4-2", 0.25, None),
    ("Uruguay", 117, 7, "4-3-3", 0.3,
     ["Muslera", "M. Pereira", "Godin", "Victorino", "Caceres", "Perez",
      "Gargano", "Arevalo", "Cavani", "Forlan", "A. Pereira"]),
]

# Normalized slots: x = own goal -> opponent goal, y = right -> left.
FORMATIONS = {
    "4-4-2": [("goalkeeper", .05, .5)] + [("defender", .25, y) for y in (.15, .38, .62, .85)]
             + [("midfielder", .5, y) for y in (.15, .38, .62, .85)]
             + [("forward", .78, y) for y in (.35, .65)],
    "4-3-3": [("goalkeeper", .05, .5)] + [("defender", .25, y) for y in (.15, .38, .62, .85)]
             + [("midfielder", .48, y) for y in (.25, .5, .75)]
             + [("forward", .78, y) for y in (.2, .5, .8)],
    "4-2-3-1": [("goalkeeper", .05, .5)] + [("defender", .25, y) for y in (.15, .38, .62, .85)]
               + [("midfielder", .42, y) for y in (.35, .65)]
               + [("midfielder", .62, y) for y in (.2, .5, .8)]
               + [("forward", .82, .5)],
    "4-5-1": [("goalkeeper", .05, .5)] + [("defender", .25, y) for y in (.15, .38, .62, .85)]
             + [("midfielder", .5, y) for y in (.1, .3, .5, .7, .9)]
             + [("forward", .8, .5)],
    "3-4-3": [("goalkeeper", .05, .5)] + [("defender", .25, y) for y in (.25, .5, .75)]
             + [("midfielder", .5, y) for y in (.15, .38, .62, .85)]
             + [("forward", .78, y) for y in (.2, .5, .8)],
}

ABBREV = {"goalkeeper": "GK", "defender": "D", "midfielder": "M", "forward": "F"}


def scaled_counts(raw, total):
    """Integer matrix proportional to raw with an exact sum (largest remainder)."""
    s = sum(sum(r) for r in raw)
    cells = [(i, j, raw[i][j] * total / s) for i in range(len(raw)) for j in range(len(raw)) if raw[i][j] > 0]
    out = [[0] * len(raw) for _ in raw]
    for i, j, v in cells:
        out[i][j] = math.floor(v)
    left = total - sum(sum(r) for r in out)
    cells.sort(key=lambda c: (-(c[2] - math.floor(c[2])), c[0], c[1]))
    for i, j, _ in cells[:left]:
        out[i][j] += 1
    return out


def make_team(seed, team, p, games, formation, dropout, names):
    rng = random.Random(seed)
    slots = FORMATIONS[formation]
    n = len(slots)
    if names is None:
        counters = {}
        names = []
        for role, _, _ in slots:
            counters[role] = counters.get(role, 0) + 1
            names.append(f"{team} {ABBREV[role]}{counters[role]}")
    raw = [[0.0] * n for _ in range(n)]
    for i, (ri, xi, yi) in enumerate(slots):
        for j, (rj, xj, yj) in enumerate(slots):
            if i == j:
                continue
            dist = math.hypot(xi - xj, yi - yj)
            weight = math.exp(-3.0 * dist) * rng.uniform(0.4, 1.6)
            if xj < xi - 0.3:  # long back passes are rare
                weight *= 0.3
            if rng.random() < dropout * (1 + dist):
                weight = 0.0
            raw[i][j] = weight
    passes = scaled_counts(raw, p * games)
    players = [{"id": i, "name": names[i], "role": slots[i][0], "x": slots[i][1], "y": slots[i][2]}
               for i in range(n)]
    return {"team": team, "games": games, "players": players, "passes": passes}


def main():
    OUT.mkdir(parents=True, exist_ok=True)
    for seed, (team, p, games, formation, dropout, names) in enumerate(TEAMS):
        doc = make_team(2010 + seed, team, p, games, formation, dropout, names)
        slug = team.lower().replace(" ", "_").replace(".", "")
        with open(OUT / f"{slug}.json", "w", encoding="utf-8") as f:
            json.dump(doc, f, indent=1)
            f.write("\n")


if __name__ == "__main__":
    main()
