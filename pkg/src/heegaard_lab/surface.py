"""Model surfaces, canonical one-vertex triangulations, and normal-coordinate curves.

Conventions used throughout the package:

* The closed orientable genus-g surface (g >= 1) carries the fan triangulation
  of its standard 4g-gon: boundary word a1 b1 a1' b1' ... ag bg ag' bg', all
  polygon vertices identified to a single vertex, and diagonals from corner 0
  to corners 2..4g-2.  This gives 1 vertex, 6g-3 edges, 4g-2 triangles.
* A curve (or multicurve) is stored as a vector of non-negative integers, one
  per edge, satisfying the normal matching conditions in every triangle:
  weights x, y, z obey the triangle inequalities and x+y+z is even.
* Admissible vectors are in bijection with normal multicurves; a connected
  component is inessential exactly when it is the vertex link (weight 2 on
  every edge).  Equality of vectors decides isotopy on the torus outright;
  at genus >= 2 a vector pins the curve only up to slides across the vertex,
  and `same_class` performs the exact surface-level test.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterator, Optional, Sequence


class InvalidCoordinates(ValueError):
    """Raised when an edge-weight vector violates the matching conditions."""


class InessentialCurve(ValueError):
    """Raised when a traced connected curve is the vertex link."""


class SurfaceMismatch(ValueError):
    """Raised when an operation mixes curves from different surfaces."""


class BudgetExhausted(RuntimeError):
    """An enumeration exceeded its candidate budget.  Carries partial results."""

    def __init__(self, message: str, partial):
        super().__init__(message)
        self.partial = partial


@dataclass(frozen=True, order=True)
class ModelSurface:
    """A closed orientable surface, known to the engine only by its genus."""

    genus: int

    def __post_init__(self):
        if self.genus < 0:
            raise ValueError(f"genus must be non-negative, got {self.genus}")

    @property
    def euler_characteristic(self) -> int:
        return 2 - 2 * self.genus


# An occurrence of an edge on a triangle side: (edge index, +1/-1).  Sign +1
# means the side is traversed along the edge's fixed arrow when the triangle
# boundary is read counterclockwise.
Occurrence = tuple[int, int]


class Triangulation:
    """The canonical one-vertex triangulation of a genus-g surface (g >= 1).

    Attributes:
        surface: the underlying ModelSurface.
        n_edges: 6g - 3.
        triangles: list of (occ0, occ1, occ2); side m runs from corner m to
            corner m+1, all triangles counterclockwise.
        edge_names: generator edges "a1", "b1", ..., then diagonals "d2", ...
    """

    def __init__(self, surface: ModelSurface):
        if surface.genus < 1:
            raise ValueError("triangulations are only built for genus >= 1")
        self.surface = surface
        g = surface.genus
        self.n_edges = 6 * g - 3
        self.edge_names: list[str] = []
        for i in range(1, g + 1):
            self.edge_names += [f"a{i}", f"b{i}"]
        for k in range(2, 4 * g - 1):
            self.edge_names.append(f"d{k}")

        # Polygon side j carries generator gen(j) with sign sgn(j) per the
        # standard commutator word.
        def side_occ(j: int) -> Occurrence:
            handle, r = divmod(j, 4)
            gen = 2 * handle + (r % 2)
            sign = 1 if r < 2 else -1
            return (gen, sign)

        def diag_occ(k: int) -> Occurrence:
            # d_k is the path v0 -> vk; d_1 and d_{4g-1} alias polygon sides.
            if k == 1:
                return side_occ(0)
            if k == 4 * g - 1:
                e, s = side_occ(4 * g - 1)
                return (e, -s)
            return (2 * g + (k - 2), 1)

        self.triangles: list[tuple[Occurrence, Occurrence, Occurrence]] = []
        for k in range(1, 4 * g - 1):
            d0 = diag_occ(k)
            s = side_occ(k)
            d1 = diag_occ(k + 1)
            self.triangles.append((d0, s, (d1[0], -d1[1])))

        # Each edge appears exactly twice, once with each sign, and (in the
        # fan model) in two distinct triangles.
        self.edge_sides: list[list[tuple[int, int]]] = [[] for _ in range(self.n_edges)]
        for t, tri in enumerate(self.triangles):
            for m, (e, sign) in enumerate(tri):
                self.edge_sides[e].append((t, m))
        for e, occs in enumerate(self.edge_sides):
            if len(occs) != 2:
                raise AssertionError(f"edge {e} has {len(occs)} occurrences")
            signs = sorted(self.triangles[t][m][1] for t, m in occs)
            if signs != [-1, 1]:
                raise AssertionError(f"edge {e} occurs with signs {signs}")
            if occs[0][0] == occs[1][0]:
                raise AssertionError(f"edge {e} occurs twice in one triangle")

    @property
    def genus(self) -> int:
        return self.surface.genus

    def n_triangles(self) -> int:
        return len(self.triangles)

    def edge_index(self, name: str) -> int:
        return self.edge_names.index(name)

    def plus_triangle(self, e: int) -> int:
        t, m = next((t, m) for t, m in self.edge_sides[e]
                    if self.triangles[t][m][1] == 1)
        return t

    # -- matching conditions -------------------------------------------------

    def corner_counts(self, weights: Sequence[int], t: int) -> tuple[int, int, int]:
        """Corner arc counts (c0, c1, c2) of triangle t; corner m sits between
        side m-1 and side m.  Raises InvalidCoordinates when infeasible."""
        w = [weights[e] for e, _ in self.triangles[t]]
        if sum(w) % 2 != 0:
            raise InvalidCoordinates(f"odd weight sum {w} in triangle {t}")
        c = [0, 0, 0]
        for m in range(3):
            c[m] = (w[m] + w[m - 1] - w[(m + 1) % 3]) // 2
            if c[m] < 0:
                raise InvalidCoordinates(
                    f"triangle inequality fails in triangle {t}: {w}")
        return (c[0], c[1], c[2])

    def check_matching(self, weights: Sequence[int]) -> None:
        if len(weights) != self.n_edges:
            raise InvalidCoordinates(
                f"expected {self.n_edges} weights, got {len(weights)}")
        if any(w < 0 for w in weights):
            raise InvalidCoordinates("negative edge weight")
        for t in range(len(self.triangles)):
            self.corner_counts(weights, t)

    def is_admissible(self, weights: Sequence[int]) -> bool:
        try:
            self.check_matching(weights)
        except InvalidCoordinates:
            return False
        return True

    # -- tracing -------------------------------------------------------------

    def trace(self, weights: Sequence[int]) -> list["TracedCurve"]:
        """Split an admissible vector into its connected components.

        Returns one TracedCurve per component, carrying its own weight vector
        and its token cycle (edge crossings in order, with the triangle of
        each connecting arc), ordered deterministically.
        """
        self.check_matching(weights)
        # Token = (edge, position along the edge arrow), positions 0..w-1.
        # In each triangle, the k-th innermost arc at corner m joins side m-1
        # at occurrence position w_{m-1}-1-k to side m at occurrence position k.
        links: dict[tuple[int, int], list[tuple[tuple[int, int], int]]] = {}

        def phys(occ: Occurrence, opos: int) -> tuple[int, int]:
            e, sign = occ
            return (e, opos if sign == 1 else weights[e] - 1 - opos)

        for t, tri in enumerate(self.triangles):
            w = [weights[e] for e, _ in tri]
            c = self.corner_counts(weights, t)
            for m in range(3):
                for k in range(c[m]):
                    p = phys(tri[m - 1], w[m - 1] - 1 - k)
                    q = phys(tri[m], k)
                    links.setdefault(p, []).append((q, t))
                    links.setdefault(q, []).append((p, t))
        for tok, nb in links.items():
            if len(nb) != 2:
                raise AssertionError(f"token {tok} has {len(nb)} arcs")

        seen: set[tuple[int, int]] = set()
        components: list[TracedCurve] = []
        for start in sorted(links):
            if start in seen:
                continue
            cycle = [start]
            tris: list[int] = []
            cur = start
            prev_tri: Optional[int] = None
            while True:
                first, second = links[cur]
                # The arrival arc is identified by its triangle; the two arcs
                # at a token lie in the two distinct flanking triangles.
                if prev_tri is not None and first[1] == prev_tri:
                    nxt, tri_id = second
                else:
                    nxt, tri_id = first
                tris.append(tri_id)
                seen.add(cur)
                prev_tri = tri_id
                if nxt == start:
                    break
                cur = nxt
                cycle.append(cur)
            vec = [0] * self.n_edges
            for e, _ in cycle:
                vec[e] += 1
            components.append(TracedCurve(tuple(vec), cycle, tris))
        components.sort(key=lambda c: sorted(c.cycle))
        return components

    # -- vertex link / rotation ----------------------------------------------

    def vertex_link_vector(self) -> tuple[int, ...]:
        return tuple(2 for _ in range(self.n_edges))

    def vertex_rotation(self) -> list[tuple[int, str]]:
        """Edge-ends in cyclic order around the vertex.

        Ends are (edge, "tail"|"head"); tail is the arrow start.  Sector
        (t, m) lies between the end where side m-1 arrives and the end where
        side m departs; successive sectors share an end.
        """
        sectors = {}
        for t, tri in enumerate(self.triangles):
            for m in range(3):
                e_in, s_in = tri[m - 1]
                e_out, s_out = tri[m]
                end_in = (e_in, "head" if s_in == 1 else "tail")
                end_out = (e_out, "tail" if s_out == 1 else "head")
                sectors[(t, m)] = (end_in, end_out)
        start_by_end = {v[0]: k for k, v in sectors.items()}
        first = min(sectors)
        order = []
        cur = first
        while True:
            end_out = sectors[cur][1]
            order.append(end_out)
            cur = start_by_end[end_out]
            if cur == first:
                break
        if len(order) != 2 * self.n_edges:
            raise AssertionError("vertex link is not a single circle")
        return order

    def edge_loop_pushoff(self, edge: int, side: int = 0) -> tuple[int, ...]:
        """Weight vector of the loop formed by edge `edge`, pushed off the
        vertex to one of its two sides (0 or 1)."""
        rot = self.vertex_rotation()
        n = len(rot)
        i = rot.index((edge, "tail"))
        j = rot.index((edge, "head"))
        arc1 = [rot[k % n] for k in range(i + 1, j if j > i else j + n)]
        arc2 = [rot[k % n] for k in range(j + 1, i if i > j else i + n)]
        chosen = arc1 if side == 0 else arc2
        vec = [0] * self.n_edges
        for e, _ in chosen:
            vec[e] += 1
        if vec[edge]:
            raise AssertionError("pushoff arc contains its own edge end")
        return tuple(vec)


@dataclass
class TracedCurve:
    """One connected component of a traced normal multicurve."""

    vector: tuple[int, ...]
    cycle: list[tuple[int, int]]        # (edge, position) tokens in order
    triangles: list[int]                # triangle of the arc cycle[i] -> cycle[i+1]

    def __len__(self) -> int:
        return len(self.cycle)


_TRI_CACHE: dict[int, Triangulation] = {}


def canonical_triangulation(genus: int) -> Triangulation:
    """Deterministic triangulation for each genus >= 1 (cached)."""
    if genus < 1:
        raise ValueError("no curves live on a genus-0 surface; need genus >= 1")
    if genus not in _TRI_CACHE:
        _TRI_CACHE[genus] = Triangulation(ModelSurface(genus))
    return _TRI_CACHE[genus]


# ---------------------------------------------------------------------------
# Slopes (torus fast path)
# ---------------------------------------------------------------------------


@dataclass(frozen=True, order=True)
class Slope:
    """A torus curve class: coprime (p, q) with (p, q) ~ (-p, -q)."""

    p: int
    q: int

    def __post_init__(self):
        if math.gcd(abs(self.p), abs(self.q)) != 1:
            raise ValueError(f"slope ({self.p},{self.q}) is not coprime")
        if self.p < 0 or (self.p == 0 and self.q < 0):
            raise ValueError("slope not in canonical form; use Slope.of")

    @staticmethod
    def of(p: int, q: int) -> "Slope":
        if p < 0 or (p == 0 and q < 0):
            p, q = -p, -q
        return Slope(p, q)

    def coords(self) -> tuple[int, int, int]:
        """Edge weights on the 2-triangle torus, edge order (a, b, d)."""
        p, q = self.p, self.q
        return (abs(q), abs(p), abs(p - q))


def slope_intersection(s1: Slope, s2: Slope) -> int:
    return abs(s1.p * s2.q - s1.q * s2.p)


# ---------------------------------------------------------------------------
# Curve classes and normalization
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class CurveClass:
    """An essential simple closed curve on a model surface, as an admissible
    normal-coordinate vector on the canonical triangulation.

    On the torus the stored coords are the unique canonical form of the
    isotopy class.  At genus >= 2 the vector pins the class up to slides
    across the triangulation vertex; `same_class` decides surface isotopy
    exactly, and enumerations deduplicate with it.
    """

    genus: int
    coords: tuple[int, ...]

    def __post_init__(self):
        tri = canonical_triangulation(self.genus)
        tri.check_matching(self.coords)

    @property
    def surface(self) -> ModelSurface:
        return ModelSurface(self.genus)

    @property
    def weight(self) -> int:
        return sum(self.coords)

    def sort_key(self):
        return (self.weight, self.coords)

    @staticmethod
    def from_slope(p: int, q: int) -> "CurveClass":
        return CurveClass(1, Slope.of(p, q).coords())

    def slope(self) -> Slope:
        if self.genus != 1:
            raise ValueError("slopes only exist on the torus")
        return coords_to_slope(self.coords)

    def __repr__(self) -> str:
        if self.genus == 1:
            s = self.slope()
            return f"CurveClass(torus ({s.p},{s.q}))"
        return f"CurveClass(g={self.genus}, {self.coords})"


def signed_edge_crossings(genus: int, coords: Sequence[int]) -> list[int]:
    """Algebraic crossing number of a connected curve with each edge.

    The curve orientation comes from its trace; the sign is +1 when the curve
    passes from the -1 occurrence side of the edge to the +1 side.
    """
    tri = canonical_triangulation(genus)
    comps = tri.trace(coords)
    if len(comps) != 1:
        raise ValueError("signed crossings need a connected curve")
    comp = comps[0]
    totals = [0] * tri.n_edges
    n = len(comp.cycle)
    for i, (e, _pos) in enumerate(comp.cycle):
        t_prev = comp.triangles[(i - 1) % n]
        t_next = comp.triangles[i]
        pt = tri.plus_triangle(e)
        if t_next == pt and t_prev != pt:
            totals[e] += 1
        elif t_prev == pt and t_next != pt:
            totals[e] -= 1
        else:
            raise AssertionError("ambiguous edge occurrence while orienting")
    return totals


def homology_class(genus: int, coords: Sequence[int]) -> tuple[int, ...]:
    """Class of a connected curve in H_1, basis (a1, b1, ..., ag, bg).

    With x = sum(alpha_i a_i + beta_i b_i) and a_i . b_i = +1:
    alpha_i = x . b_i, beta_i = -(x . a_i).
    """
    n = signed_edge_crossings(genus, coords)
    cls = []
    for i in range(genus):
        cls += [n[2 * i + 1], -n[2 * i]]
    return tuple(cls)


_SLOPE_CACHE: dict[tuple[int, ...], Slope] = {}


def coords_to_slope(coords: Sequence[int]) -> Slope:
    """Slope of a connected essential torus vector (exact, via homology)."""
    key = tuple(coords)
    if key not in _SLOPE_CACHE:
        alpha, beta = homology_class(1, key)
        if alpha == 0 and beta == 0:
            raise InessentialCurve("null-homologous torus curve is inessential")
        _SLOPE_CACHE[key] = Slope.of(alpha, beta)
    return _SLOPE_CACHE[key]


@dataclass(frozen=True)
class MulticurveEntry:
    coords: tuple[int, ...]
    multiplicity: int
    essential: bool


@dataclass(frozen=True)
class MulticurveReport:
    """Decomposition of a disconnected normal vector into parallelism classes."""

    genus: int
    entries: tuple[MulticurveEntry, ...]

    def total_components(self) -> int:
        return sum(e.multiplicity for e in self.entries)


def normalize(surface: ModelSurface | int, coords: Sequence[int]):
    """Validate a raw edge-weight vector and classify what it carries.

    Returns a CurveClass when the trace is a single essential component, a
    MulticurveReport when there are several components, and raises on
    matching violations, the zero vector, or a single inessential component.
    """
    genus = surface.genus if isinstance(surface, ModelSurface) else surface
    tri = canonical_triangulation(genus)
    coords = tuple(int(c) for c in coords)
    if len(coords) == tri.n_edges and all(c == 0 for c in coords):
        raise InvalidCoordinates("the zero vector carries no curve")
    tri.check_matching(coords)
    comps = tri.trace(coords)
    link = tri.vertex_link_vector()
    if len(comps) == 1:
        vec = comps[0].vector
        if vec == link:
            raise InessentialCurve("the vertex link bounds a disk")
        if genus == 1:
            vec = coords_to_slope(vec).coords()
        return CurveClass(genus, vec)
    groups: dict[tuple[int, ...], int] = {}
    for comp in comps:
        vec = comp.vector
        if genus == 1 and vec != link:
            vec = coords_to_slope(vec).coords()
        groups[vec] = groups.get(vec, 0) + 1
    entries = tuple(
        MulticurveEntry(vec, mult, vec != link)
        for vec, mult in sorted(groups.items()))
    return MulticurveReport(genus, entries)


def is_essential(surface: ModelSurface | int, coords: Sequence[int]) -> bool:
    """True iff the (connected) traced curve is not null-homotopic.

    On a one-vertex triangulation the only inessential connected normal curve
    is the vertex link, so the test is exact.
    """
    genus = surface.genus if isinstance(surface, ModelSurface) else surface
    tri = canonical_triangulation(genus)
    comps = tri.trace(coords)
    if len(comps) != 1:
        raise ValueError("essentialness is defined for connected curves")
    return comps[0].vector != tri.vertex_link_vector()


# ---------------------------------------------------------------------------
# Exact intersection numbers and class identity
# ---------------------------------------------------------------------------


def geometric_intersection(a: CurveClass, b: CurveClass) -> int:
    """Minimal-position (bigon-free) intersection number, exact.

    Torus pairs use the determinant |ps - qr|; higher genus runs the traced
    arrangement with bigon elimination.
    """
    if a.genus != b.genus:
        raise SurfaceMismatch(f"genus {a.genus} vs {b.genus}")
    if a.coords == b.coords:
        return 0
    if a.genus == 1:
        return slope_intersection(coords_to_slope(a.coords),
                                  coords_to_slope(b.coords))
    from . import arrangement
    return arrangement.intersection_number(
        canonical_triangulation(a.genus), a.coords, b.coords)


def same_class(a: CurveClass, b: CurveClass) -> bool:
    """Exact surface-isotopy test for two essential curve classes."""
    if a.genus != b.genus:
        raise SurfaceMismatch(f"genus {a.genus} vs {b.genus}")
    if a.coords == b.coords:
        return True
    if a.genus == 1:
        return coords_to_slope(a.coords) == coords_to_slope(b.coords)
    from . import arrangement
    return arrangement.isotopic(
        canonical_triangulation(a.genus), a.coords, b.coords)


# ---------------------------------------------------------------------------
# Enumeration
# ---------------------------------------------------------------------------


def admissible_vectors(tri: Triangulation, cap: int) -> Iterator[tuple[int, ...]]:
    """All nonzero admissible vectors with coordinate sum <= cap, in
    lexicographic order.  DFS over edges, checking each triangle as soon as
    its three weights are fixed."""
    n = tri.n_edges
    by_last_edge: dict[int, list[int]] = {}
    for t, triple in enumerate(tri.triangles):
        last = max(e for e, _ in triple)
        by_last_edge.setdefault(last, []).append(t)

    vec = [0] * n

    def feasible(t: int) -> bool:
        w = sorted(vec[e] for e, _ in tri.triangles[t])
        return sum(w) % 2 == 0 and w[2] <= w[0] + w[1]

    def rec(e: int, remaining: int) -> Iterator[tuple[int, ...]]:
        if e == n:
            if any(vec):
                yield tuple(vec)
            return
        for w in range(remaining + 1):
            vec[e] = w
            if all(feasible(t) for t in by_last_edge.get(e, ())):
                yield from rec(e + 1, remaining - w)
        vec[e] = 0

    yield from rec(0, cap)


def enumerate_slopes(cap: int) -> list[Slope]:
    """Torus classes with coordinate sum |p| + |q| + |p-q| <= cap."""
    out = []
    for p in range(0, cap + 1):
        lo, hi = -cap, cap
        for q in range(lo, hi + 1):
            if p == 0 and q != 1:
                continue
            if math.gcd(p, abs(q)) != 1:
                continue
            if abs(q) + p + abs(p - q) <= cap:
                out.append(Slope(p, q))
    return sorted(out, key=lambda s: (sum(s.coords()), s.coords()))


def enumerate_essential_curves(
    genus: int,
    cap: int,
    budget: Optional[int] = None,
) -> list[CurveClass]:
    """Distinct essential curve classes having a representative of coordinate
    sum <= cap, sorted by (weight, coords) of the smallest representative.

    At genus >= 2 candidates are deduplicated by the exact isotopy test.  A
    `budget` bounds the number of admissible vectors visited; overruns raise
    BudgetExhausted carrying the classes found so far.
    """
    if genus == 1:
        return [CurveClass(1, s.coords()) for s in enumerate_slopes(cap)]

    tri = canonical_triangulation(genus)
    link = tri.vertex_link_vector()
    found: list[CurveClass] = []
    buckets: dict[tuple[int, ...], list[CurveClass]] = {}
    visited = 0
    for vec in admissible_vectors(tri, cap):
        visited += 1
        if budget is not None and visited > budget:
            found.sort(key=CurveClass.sort_key)
            raise BudgetExhausted(
                f"visited more than {budget} candidate vectors", found)
        comps = tri.trace(vec)
        if len(comps) != 1 or comps[0].vector == link:
            continue
        cand = CurveClass(genus, vec)
        key = _homology_bucket(cand)
        group = buckets.setdefault(key, [])
        duplicate = False
        for other in list(group):
            if same_class(cand, other):
                if cand.sort_key() < other.sort_key():
                    group.remove(other)
                    found.remove(other)
                else:
                    duplicate = True
                break
        if not duplicate:
            group.append(cand)
            found.append(cand)
    found.sort(key=CurveClass.sort_key)
    return found


def _homology_bucket(curve: CurveClass) -> tuple[int, ...]:
    cls = list(homology_class(curve.genus, curve.coords))
    neg = [-x for x in cls]
    return tuple(min(cls, neg))
