"""Heegaard diagrams: cut systems, boundary words, and the disk test.

A side of a diagram is a handlebody with the given cut system as meridians.
A curve bounds a disk in that handlebody iff its cyclic word of signed
crossings with the meridians reduces (freely and cyclically) to the empty
word; the unreduced word is read from a minimal-position arrangement, so its
length equals the total geometric intersection with the system.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

from . import arrangement
from .surface import (
    BudgetExhausted,
    CurveClass,
    ModelSurface,
    SurfaceMismatch,
    canonical_triangulation,
    enumerate_essential_curves,
    geometric_intersection,
    same_class,
)


class InvalidCutSystem(ValueError):
    """The curves do not cut the surface into a single planar piece."""


@dataclass(frozen=True)
class SignedWord:
    """A cyclic word in the free group on g generators.

    Letters are (generator index 1..g, sign).  Words compare by their
    lexicographically minimal rotation; reduction cancels adjacent inverse
    pairs, including around the wrap.
    """

    letters: tuple[tuple[int, int], ...]

    @staticmethod
    def of(letters) -> "SignedWord":
        return SignedWord(tuple((int(g), int(s)) for g, s in letters))

    def __len__(self) -> int:
        return len(self.letters)

    def min_rotation(self) -> tuple[tuple[int, int], ...]:
        if not self.letters:
            return ()
        rots = [self.letters[i:] + self.letters[:i]
                for i in range(len(self.letters))]
        return min(rots)

    def reduced(self) -> "SignedWord":
        w = list(self.letters)
        changed = True
        while changed:
            changed = False
            out: list[tuple[int, int]] = []
            for letter in w:
                if out and out[-1][0] == letter[0] and out[-1][1] == -letter[1]:
                    out.pop()
                    changed = True
                else:
                    out.append(letter)
            while len(out) >= 2 and out[0][0] == out[-1][0] \
                    and out[0][1] == -out[-1][1]:
                out = out[1:-1]
                changed = True
            w = out
        return SignedWord(tuple(w))

    def is_trivial(self) -> bool:
        return not self.reduced().letters

    def __repr__(self) -> str:
        if not self.letters:
            return "SignedWord(1)"
        parts = [f"x{g}" + ("" if s == 1 else "^-1") for g, s in self.letters]
        return f"SignedWord({' '.join(parts)})"


@dataclass(frozen=True)
class CutSystem:
    """g disjoint curves cutting a genus-g surface into a planar piece."""

    surface: ModelSurface
    curves: tuple[CurveClass, ...]

    @property
    def genus(self) -> int:
        return self.surface.genus

    def union_vector(self) -> tuple[int, ...]:
        n = canonical_triangulation(self.genus).n_edges
        return tuple(sum(c.coords[e] for c in self.curves) for e in range(n))


def validate_cut_system(surface: ModelSurface | int,
                        curves: Sequence[CurveClass]) -> CutSystem:
    """Check the two cut-system invariants and return the system.

    Raises InvalidCutSystem on: wrong curve count, an intersecting or
    repeated pair, a system whose stored vectors cannot be realized
    disjointly, or a cut complement that is not a single planar piece.
    """
    genus = surface.genus if isinstance(surface, ModelSurface) else surface
    surface = ModelSurface(genus)
    curves = tuple(curves)
    if len(curves) != genus:
        raise InvalidCutSystem(
            f"need exactly {genus} curves for genus {genus}, got {len(curves)}")
    for c in curves:
        if c.genus != genus:
            raise SurfaceMismatch("cut curve lives on a different surface")
    for i in range(len(curves)):
        for j in range(i + 1, len(curves)):
            if same_class(curves[i], curves[j]):
                raise InvalidCutSystem(
                    f"curves {i} and {j} are parallel copies of one class")
            n = geometric_intersection(curves[i], curves[j])
            if n != 0:
                raise InvalidCutSystem(
                    f"curves {i} and {j} intersect in {n} points")
    tri = canonical_triangulation(genus)
    system = CutSystem(surface, curves)
    regions, comps = arrangement.complement_regions(tri, system.union_vector())
    if sorted(comps) != sorted(c.coords for c in curves):
        raise InvalidCutSystem(
            "the stored coordinate vectors do not overlay disjointly; "
            "re-supply representatives that are disjoint as drawn")
    if len(regions) != 1:
        raise InvalidCutSystem(
            f"cut complement has {len(regions)} pieces, expected 1")
    chi, circles, _ = regions[0]
    if chi != 2 - 2 * genus or circles != 2 * genus:
        raise InvalidCutSystem(
            f"cut complement is not planar: chi={chi}, boundaries={circles}")
    return system


@dataclass(frozen=True)
class HeegaardDiagram:
    """A closed surface with a red and a blue cut system."""

    surface: ModelSurface
    red: CutSystem
    blue: CutSystem

    def __post_init__(self):
        if self.red.surface != self.surface or self.blue.surface != self.surface:
            raise SurfaceMismatch("cut systems live on different surfaces")

    @property
    def genus(self) -> int:
        return self.surface.genus

    def side(self, name: str) -> CutSystem:
        if name == "red":
            return self.red
        if name == "blue":
            return self.blue
        raise ValueError(f"side must be 'red' or 'blue', not {name!r}")


def boundary_word(c: CurveClass, cut: CutSystem) -> SignedWord:
    """Cyclic signed crossing sequence of the curve with the cut system, read
    from a minimal-position representative.  Its length is the sum of the
    geometric intersection numbers with the cut curves."""
    if c.genus != cut.genus:
        raise SurfaceMismatch("curve and cut system on different surfaces")
    tri = canonical_triangulation(c.genus)
    letters, _counts = arrangement.crossing_word(
        tri, c.coords, [z.coords for z in cut.curves])
    return SignedWord.of((g + 1, s) for g, s in letters)


def bounds_disk(c: CurveClass, side: str, diagram: HeegaardDiagram) -> bool:
    """Does the curve bound a disk in the named handlebody?  True iff its
    boundary word freely and cyclically reduces to the empty word."""
    return boundary_word(c, diagram.side(side)).is_trivial()


def enumerate_disk_boundaries(
    diagram: HeegaardDiagram,
    side: str,
    cap: int,
    budget: Optional[int] = None,
) -> list[CurveClass]:
    """Every essential curve class with coordinate sum <= cap bounding a disk
    on the named side, in lexicographic order of canonical coordinates.

    Complete within the cap; a candidate budget overrun raises
    BudgetExhausted carrying the bounding curves found so far.
    """
    if cap < 1:
        raise ValueError("cap must be at least 1")
    cut = diagram.side(side)
    try:
        candidates = enumerate_essential_curves(diagram.genus, cap, budget)
        partial = False
    except BudgetExhausted as exc:
        candidates = exc.partial
        partial = True
    out = [c for c in candidates if bounds_disk(c, side, diagram)]
    # The side's own meridians bound by construction; keep them even when
    # their representatives weigh more than the cap.
    for z in cut.curves:
        if not any(same_class(z, c) for c in out):
            out.append(z)
    out.sort(key=lambda c: c.coords)
    if partial:
        raise BudgetExhausted("enumeration budget exhausted", out)
    return out


# ---------------------------------------------------------------------------
# Stock diagrams
# ---------------------------------------------------------------------------


def torus_diagram(red_slope: tuple[int, int],
                  blue_slope: tuple[int, int]) -> HeegaardDiagram:
    surface = ModelSurface(1)
    red = validate_cut_system(surface, [CurveClass.from_slope(*red_slope)])
    blue = validate_cut_system(surface, [CurveClass.from_slope(*blue_slope)])
    return HeegaardDiagram(surface, red, blue)


def s3_genus1() -> HeegaardDiagram:
    return torus_diagram((1, 0), (0, 1))


def lens_space(p: int, q: int) -> HeegaardDiagram:
    """L(p, q): red meridian (1, 0), blue meridian (q, p) up to convention."""
    return torus_diagram((1, 0), (q, p))


def s2_x_s1() -> HeegaardDiagram:
    return torus_diagram((1, 0), (1, 0))


def standard_diagram(genus: int) -> HeegaardDiagram:
    """The standard genus-g diagram of the 3-sphere: red meridians are the
    a-handle loops, blue meridians the b-handle loops, i(r_i, b_j) = delta."""
    if genus == 1:
        return s3_genus1()
    tri = canonical_triangulation(genus)
    surface = ModelSurface(genus)

    def small_pushoff(name: str) -> CurveClass:
        e = tri.edge_index(name)
        best = min((tri.edge_loop_pushoff(e, s) for s in (0, 1)),
                   key=lambda v: (sum(v), v))
        return CurveClass(genus, best)

    red = validate_cut_system(
        surface, [small_pushoff(f"a{i}") for i in range(1, genus + 1)])
    blue = validate_cut_system(
        surface, [small_pushoff(f"b{i}") for i in range(1, genus + 1)])
    return HeegaardDiagram(surface, red, blue)
