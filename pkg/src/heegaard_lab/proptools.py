"""Seeded generators and the randomized property suite.

Used by the `proptest` command and by the test suite; everything is driven
by an explicit random.Random so runs are reproducible.
"""

from __future__ import annotations

import dataclasses
import math
import random
from dataclasses import dataclass
from typing import Optional

from . import arrangement
from .ghs import (
    GHS,
    InvalidGHS,
    InvalidMove,
    Move,
    apply_move,
    apply_move_report,
    compare_ghs,
    enumerate_moves,
    validate_ghs,
)
from .surface import Slope, canonical_triangulation, slope_intersection


def random_ghs(rng: random.Random, max_thick: int = 3,
               max_genus: int = 4, bounded: bool = True) -> GHS:
    """A random valid GHS; boundary collections may be nonempty."""
    while True:
        n_thick = rng.randint(1, max_thick)
        levels = []
        if bounded and rng.random() < 0.3:
            levels.append([rng.randint(0, 2)
                           for _ in range(rng.randint(1, 2))])
        else:
            levels.append([])
        for k in range(n_thick):
            levels.append([rng.randint(1, max_genus)
                           for _ in range(1 if rng.random() < 0.8 else 2)])
            if k < n_thick - 1:
                levels.append([rng.randint(1, max_genus - 1)])
        if bounded and rng.random() < 0.3:
            levels.append([rng.randint(0, 2)
                           for _ in range(rng.randint(1, 2))])
        else:
            levels.append([])
        try:
            return GHS.of(levels)
        except InvalidGHS:
            continue


def random_move(rng: random.Random, ghs: GHS) -> Optional[Move]:
    moves = enumerate_moves(ghs)
    return rng.choice(moves) if moves else None


def random_coprime_pair(rng: random.Random, bound: int) -> Slope:
    while True:
        p = rng.randint(-bound, bound)
        q = rng.randint(-bound, bound)
        if (p, q) != (0, 0) and math.gcd(abs(p), abs(q)) == 1:
            return Slope.of(p, q)


@dataclass
class PropertyReport:
    name: str
    iterations: int
    failures: list

    @property
    def passed(self) -> bool:
        return not self.failures


def check_torus_oracle(rng: random.Random, iterations: int,
                       engine_bound: int = 4) -> PropertyReport:
    """geometric_intersection equals |ps - qr|, both through the slope fast
    path and, for small slopes, through the arrangement engine."""
    failures = []
    tri = canonical_triangulation(1)
    for _ in range(iterations):
        a = random_coprime_pair(rng, 50)
        b = random_coprime_pair(rng, 50)
        want = slope_intersection(a, b)
        from .surface import CurveClass, geometric_intersection
        got = geometric_intersection(CurveClass(1, a.coords()),
                                     CurveClass(1, b.coords()))
        if got != want:
            failures.append(("fast-path", a, b, got, want))
        if max(abs(a.p), abs(a.q), abs(b.p), abs(b.q)) <= engine_bound \
                and a != b:
            raw = arrangement.intersection_number(tri, a.coords(), b.coords())
            if raw != want:
                failures.append(("engine", a, b, raw, want))
    return PropertyReport("torus-intersection-oracle", iterations, failures)


def check_move_monotonicity(rng: random.Random,
                            iterations: int) -> PropertyReport:
    """Every valid move yields a valid GHS that is strictly smaller."""
    failures = []
    done = 0
    while done < iterations:
        g = random_ghs(rng)
        move = random_move(rng, g)
        if move is None:
            continue
        done += 1
        try:
            out = apply_move(g, move)
        except InvalidMove as exc:
            failures.append(("rejected", g, move, str(exc)))
            continue
        if validate_ghs(out):
            failures.append(("invalid-output", g, move, out))
        if compare_ghs(out, g) != "less":
            failures.append(("not-smaller", g, move, out))
    return PropertyReport("move-monotonicity", iterations, failures)


def check_commutation(rng: random.Random, iterations: int) -> PropertyReport:
    """Moves at distinct thick indices commute whenever both orders stay
    valid as the same moves.

    A move's subcase is part of its identity: rewriting a shared thin level
    can flip the other move's neighbor-equality tests, after which it is a
    different surgery.  Pairs where either subcase flips, or where a merge
    reshapes the sequence around the other move, are skipped.
    """
    failures = []
    done = 0
    attempts = 0
    while done < iterations and attempts < iterations * 400:
        attempts += 1
        g = random_ghs(rng, max_thick=3)
        moves = enumerate_moves(g)
        if len(moves) < 2:
            continue
        m1, m2 = rng.sample(moves, 2)
        if m1.thick_index == m2.thick_index:
            continue
        if m1.thick_index > m2.thick_index:
            m1, m2 = m2, m1
        try:
            r1 = apply_move_report(g, m1)
            r2 = apply_move_report(g, m2)
            if r1.merged or r2.merged:
                continue
            m2_shift = dataclasses.replace(
                m2, thick_index=m2.thick_index + r1.level_delta)
            r12 = apply_move_report(r1.result, m2_shift)
            r21 = apply_move_report(r2.result, m1)
            if r12.merged or r21.merged:
                continue
            if r12.case != r2.case or r21.case != r1.case:
                continue
        except InvalidMove:
            continue
        done += 1
        if r12.result.levels != r21.result.levels:
            failures.append((g, m1, m2, r12.result, r21.result))
    if done < iterations:
        failures.append(("insufficient-samples", done, iterations))
    return PropertyReport("move-commutation", done, failures)


def property_suite(seed: int, iterations: int) -> list[PropertyReport]:
    """The randomized invariants behind the `proptest` command."""
    reports = []
    rng = random.Random(seed)
    reports.append(check_torus_oracle(
        random.Random(rng.randrange(2 ** 32)), iterations))
    reports.append(check_move_monotonicity(
        random.Random(rng.randrange(2 ** 32)), iterations))
    reports.append(check_commutation(
        random.Random(rng.randrange(2 ** 32)), iterations // 2))
    return reports
