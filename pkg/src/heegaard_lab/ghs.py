"""The symbolic generalized-Heegaard-splitting calculus.

Surfaces appear only through the multiset of genera of their closed
components; the complexity of a collection is sum (2g)^2 over components,
which every weak reduction and destabilization strictly decreases.  A GHS is
an alternating sequence of collections: even indices thin (first and last
being the boundary of the ambient manifold, empty for closed manifolds), odd
indices thick and nonempty.

Move normalization: genus-0 components produced by a move are deleted, and
an interior thin level left empty merges its two flanking thick levels into
one (a union of splittings of the now-joined submanifold).  Moves that would
rewrite a boundary collection are rejected.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Sequence


class InvalidGHS(ValueError):
    pass


class InvalidMove(ValueError):
    pass


Collection = tuple[int, ...]        # genera, sorted non-increasing


def collection(genera: Sequence[int]) -> Collection:
    out = tuple(sorted((int(g) for g in genera), reverse=True))
    if any(g < 0 for g in out):
        raise InvalidGHS("negative genus")
    return out


def complexity(sc: Sequence[int]) -> int:
    """c(F) = sum over components of (2 - chi)^2 = sum (2g)^2."""
    return sum((2 * g) ** 2 for g in sc)


def compare_collections(a: Sequence[int], b: Sequence[int]) -> str:
    ca, cb = complexity(a), complexity(b)
    return "less" if ca < cb else "greater" if ca > cb else "equal"


@dataclass(frozen=True)
class GHS:
    """Alternating thin/thick sequence F_0, ..., F_2n; F_0 and F_2n are the
    (possibly empty) boundary collections and are never touched by moves."""

    levels: tuple[Collection, ...]

    @staticmethod
    def of(levels: Sequence[Sequence[int]]) -> "GHS":
        g = GHS(tuple(collection(level) for level in levels))
        errors = validate_ghs(g)
        if errors:
            raise InvalidGHS("; ".join(errors))
        return g

    @staticmethod
    def closed_splitting(genus: int) -> "GHS":
        return GHS.of([[], [genus], []])

    @property
    def n_levels(self) -> int:
        return len(self.levels)

    def thick_indices(self) -> list[int]:
        return list(range(1, self.n_levels, 2))

    def boundary(self) -> tuple[Collection, Collection]:
        return (self.levels[0], self.levels[-1])

    def __repr__(self) -> str:
        parts = []
        for i, level in enumerate(self.levels):
            inner = ",".join(str(g) for g in level) if level else "-"
            parts.append(f"[{inner}]" if i % 2 else f"({inner})")
        return "GHS " + " ".join(parts)


def validate_ghs(ghs: GHS) -> list[str]:
    """Itemized violations; empty list means valid."""
    errors = []
    levels = ghs.levels
    if len(levels) % 2 == 0 or len(levels) < 3:
        errors.append(f"level count {len(levels)} is not an odd number >= 3")
    for i, level in enumerate(levels):
        if any(g < 0 for g in level):
            errors.append(f"level {i} has a negative genus")
        if tuple(sorted(level, reverse=True)) != level:
            errors.append(f"level {i} is not sorted non-increasing")
        if i % 2 == 1 and not level:
            errors.append(f"thick level {i} is empty")
        if i % 2 == 0 and 0 < i < len(levels) - 1 and not level:
            errors.append(
                f"interior thin level {i} is empty (unmerged thick levels)")
        if 0 < i < len(levels) - 1 and 0 in level:
            errors.append(f"interior level {i} has a 2-sphere component")
    return errors


def ghs_key(ghs: GHS) -> list[int]:
    """Thick-level complexities in non-increasing order."""
    return sorted((complexity(ghs.levels[i]) for i in ghs.thick_indices()),
                  reverse=True)


def compare_ghs(a: GHS, b: GHS) -> str:
    """Lexicographic on keys; a shorter list that is a prefix is smaller."""
    ka, kb = ghs_key(a), ghs_key(b)
    return "less" if ka < kb else "greater" if ka > kb else "equal"


# ---------------------------------------------------------------------------
# Compressions and moves
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class CompressionDescriptor:
    """A symbolic compressing disk: side "down" means the disk lives toward
    the lower-index thin level, "up" toward the higher one."""

    side: str
    target_genus: int
    kind: tuple          # ("nonsep",) or ("sep", g1, g2)

    def __post_init__(self):
        if self.side not in ("down", "up"):
            raise InvalidMove(f"descriptor side {self.side!r}")
        if self.kind[0] == "nonsep":
            if self.target_genus < 1:
                raise InvalidMove("non-separating compression needs genus >= 1")
        elif self.kind[0] == "sep":
            _, g1, g2 = self.kind
            if g1 < 0 or g2 < 0 or g1 + g2 != self.target_genus:
                raise InvalidMove(
                    f"separating split {g1}+{g2} != {self.target_genus}")
        else:
            raise InvalidMove(f"descriptor kind {self.kind!r}")

    def essential(self) -> bool:
        return self.kind[0] == "nonsep" or min(self.kind[1], self.kind[2]) >= 1


def compress(sc: Sequence[int], d: CompressionDescriptor) -> Collection:
    """Apply one compression to the collection; genus-0 components are kept
    (normalization happens at the move level)."""
    sc = collection(sc)
    if d.target_genus not in sc:
        raise InvalidMove(f"no component of genus {d.target_genus} in {sc}")
    rest = list(sc)
    rest.remove(d.target_genus)
    if d.kind[0] == "nonsep":
        rest.append(d.target_genus - 1)
    else:
        rest.extend([d.kind[1], d.kind[2]])
    return collection(rest)


@dataclass(frozen=True)
class WeakReduction:
    """Case 1: disjoint disks D (down) and E (up) on a thick level; the
    caller supplies the jointly compressed collection F_DE, which must be
    reachable from F_D and from F_E by a single essential compression."""

    thick_index: int
    d: CompressionDescriptor
    e: CompressionDescriptor
    f_de: Collection

    def __post_init__(self):
        if self.d.side != "down" or self.e.side != "up":
            raise InvalidMove("weak reduction needs D down and E up")


@dataclass(frozen=True)
class Destabilization:
    """Case 2: dual disks (|D cap E| = 1) on one component.  `remove` picks
    the side in case 2(d), defaulting to the right pair {F_2i-1, F_2i}."""

    thick_index: int
    target_genus: int
    remove: str = "right"

    def __post_init__(self):
        if self.remove not in ("left", "right"):
            raise InvalidMove(f"remove must be left or right, not {self.remove!r}")
        if self.target_genus < 1:
            raise InvalidMove("destabilization needs a genus >= 1 target")


Move = WeakReduction | Destabilization


@dataclass(frozen=True)
class MoveReport:
    result: GHS
    case: str            # "1a".."1d", "2a".."2d"
    merged: bool         # normalization merged across an emptied thin level
    level_delta: int


def _strip_and_merge(levels: list[Collection]) -> tuple[list[Collection], bool]:
    """Sphere rule, then collapse interior thin levels that became empty."""
    out = [tuple(g for g in level if g != 0) if 0 < i < len(levels) - 1
           else level for i, level in enumerate(levels)]
    merged = False
    while True:
        empty_thin = next((i for i in range(2, len(out) - 2, 2) if not out[i]),
                          None)
        if empty_thin is None:
            break
        joined = collection(out[empty_thin - 1] + out[empty_thin + 1])
        out = out[:empty_thin - 1] + [joined] + out[empty_thin + 2:]
        merged = True
    return out, merged


def _finish(old: GHS, levels: list[Collection], case: str,
            merged_already: bool) -> MoveReport:
    levels, merged = _strip_and_merge(levels)
    new = GHS(tuple(collection(level) for level in levels))
    errors = validate_ghs(new)
    if errors:
        raise InvalidMove(f"move yields an invalid GHS: {'; '.join(errors)}")
    if new.boundary() != old.boundary():
        raise InvalidMove("move would delete a boundary collection")
    if compare_ghs(new, old) != "less":
        # Happens only when the merge rule collapses the result back onto the
        # input (cross-component disks whose spheres empty a thin level);
        # such a pair is not a move of a connected manifold's GHS.
        raise InvalidMove(f"move does not shrink the GHS: {old} -> {new}")
    return MoveReport(new, case, merged or merged_already,
                      new.n_levels - old.n_levels)


def _thick(ghs: GHS, t: int) -> Collection:
    if t not in ghs.thick_indices():
        raise InvalidMove(f"{t} is not a thick index of {ghs}")
    return ghs.levels[t]


def _one_step_compressions(sc: Collection) -> set[Collection]:
    """Collections reachable from sc by one essential compression."""
    out = set()
    for g in set(sc):
        if g >= 1:
            out.add(compress(sc, CompressionDescriptor("down", g, ("nonsep",))))
        for g1 in range(1, g // 2 + 1):
            out.add(compress(
                sc, CompressionDescriptor("down", g, ("sep", g1, g - g1))))
    return out


def weak_reduce_report(ghs: GHS, m: WeakReduction) -> MoveReport:
    t = m.thick_index
    f_t = _thick(ghs, t)
    if not (m.d.essential() and m.e.essential()):
        raise InvalidMove("compressions along inessential disks are not moves")
    f_d = compress(f_t, m.d)
    f_e = compress(f_t, m.e)
    f_de = collection(m.f_de)
    if f_de not in _one_step_compressions(f_d) \
            or f_de not in _one_step_compressions(f_e):
        raise InvalidMove(
            f"F_DE={f_de} is not one compression away from both "
            f"F_D={f_d} and F_E={f_e}")
    below, above = ghs.levels[t - 1], ghs.levels[t + 1]
    eq_d, eq_e = (f_d == below), (f_e == above)
    levels = list(ghs.levels)
    if not eq_d and not eq_e:
        case = "1a"
        levels[t:t + 1] = [f_d, f_de, f_e]
    elif eq_d and not eq_e:
        case = "1b"
        if t - 1 == 0:
            raise InvalidMove("case 1b would rewrite the lower boundary")
        levels[t - 1:t + 1] = [f_de, f_e]
    elif not eq_d and eq_e:
        case = "1c"
        if t + 1 == len(levels) - 1:
            raise InvalidMove("case 1c would rewrite the upper boundary")
        levels[t:t + 2] = [f_d, f_de]
    else:
        case = "1d"
        if t - 1 == 0 or t + 1 == len(levels) - 1:
            raise InvalidMove("case 1d would rewrite a boundary collection")
        levels[t - 1:t + 2] = [f_de]
    return _finish(ghs, levels, case, False)


def destabilize_report(ghs: GHS, m: Destabilization) -> MoveReport:
    t = m.thick_index
    f_t = _thick(ghs, t)
    d = CompressionDescriptor("down", m.target_genus, ("nonsep",))
    f_d = compress(f_t, d)
    f_e = f_d
    below, above = ghs.levels[t - 1], ghs.levels[t + 1]
    eq_d, eq_e = (f_d == below), (f_e == above)
    levels = list(ghs.levels)
    if not eq_d and not eq_e:
        case = "2a"
        levels[t] = f_d
    elif eq_d and not eq_e:
        case = "2b"
        if t - 1 == 0:
            raise InvalidMove("case 2b would delete the lower boundary")
        del levels[t - 1:t + 1]
    elif not eq_d and eq_e:
        case = "2c"
        if t + 1 == len(levels) - 1:
            raise InvalidMove("case 2c would delete the upper boundary")
        del levels[t:t + 2]
    else:
        case = "2d"
        if m.remove == "right":
            if t + 1 == len(levels) - 1:
                raise InvalidMove("case 2d (right) would delete the upper boundary")
            del levels[t:t + 2]
        else:
            if t - 1 == 0:
                raise InvalidMove("case 2d (left) would delete the lower boundary")
            del levels[t - 1:t + 1]
    return _finish(ghs, levels, case, False)


def weak_reduce(ghs: GHS, m: WeakReduction) -> GHS:
    return weak_reduce_report(ghs, m).result


def destabilize(ghs: GHS, m: Destabilization) -> GHS:
    return destabilize_report(ghs, m).result


def apply_move(ghs: GHS, m: Move) -> GHS:
    if isinstance(m, WeakReduction):
        return weak_reduce(ghs, m)
    if isinstance(m, Destabilization):
        return destabilize(ghs, m)
    raise InvalidMove(f"unknown move {m!r}")


def apply_move_report(ghs: GHS, m: Move) -> MoveReport:
    if isinstance(m, WeakReduction):
        return weak_reduce_report(ghs, m)
    return destabilize_report(ghs, m)


def stabilize(ghs: GHS, thick_index: int, component_genus: int) -> GHS:
    """Connect-sum the standard genus-1 splitting into one thick component:
    its genus grows by one.  Inverse of a 2(a) destabilization there."""
    f_t = _thick(ghs, thick_index)
    if component_genus not in f_t:
        raise InvalidMove(
            f"no component of genus {component_genus} at level {thick_index}")
    rest = list(f_t)
    rest.remove(component_genus)
    rest.append(component_genus + 1)
    levels = list(ghs.levels)
    levels[thick_index] = collection(rest)
    return GHS(tuple(levels))


# ---------------------------------------------------------------------------
# Move enumeration (the symbolic oracle's ground truth)
# ---------------------------------------------------------------------------


def _descriptors(sc: Collection, side: str) -> Iterator[CompressionDescriptor]:
    for g in sorted(set(sc), reverse=True):
        if g >= 1:
            yield CompressionDescriptor(side, g, ("nonsep",))
        for g1 in range(1, g // 2 + 1):
            yield CompressionDescriptor(side, g, ("sep", g1, g - g1))


def enumerate_moves(ghs: GHS) -> list[Move]:
    """Every valid move from the GHS, deterministically ordered: all weak
    reductions (with every consistent F_DE) and all destabilizations
    (including both 2(d) removal choices when the case arises)."""
    out: list[Move] = []
    for t in ghs.thick_indices():
        f_t = ghs.levels[t]
        for d in _descriptors(f_t, "down"):
            f_d = compress(f_t, d)
            for e in _descriptors(f_t, "up"):
                f_e = compress(f_t, e)
                for f_de in sorted(_one_step_compressions(f_d)
                                   & _one_step_compressions(f_e)):
                    move = WeakReduction(t, d, e, f_de)
                    try:
                        weak_reduce(ghs, move)
                    except InvalidMove:
                        continue
                    out.append(move)
        for g in sorted({g for g in f_t if g >= 1}, reverse=True):
            for remove in ("right", "left"):
                move = Destabilization(t, g, remove)
                try:
                    report = destabilize_report(ghs, move)
                except InvalidMove:
                    continue
                out.append(move)
                if report.case != "2d":
                    break       # the removal choice only matters in case 2d
    return out
