"""Sequences of GHSs: orderings, flattening, and splitting distance.

A SOG is a zigzag of GHSs in which each consecutive pair is related by one
recorded move; the engine replays every move to admit a sequence.  Flattening
minimizes, lexicographically, the non-increasing multiset of keys of the
locally maximal GHSs, over all zigzags through an oracle's move graph; the
search is an exact Dijkstra whose priority is that multiset (extended by
length and a serialized-path tiebreak, so results are schedule-independent).
"""

from __future__ import annotations

import heapq
import itertools
from dataclasses import dataclass
from typing import Optional, Sequence

from . import disk_complex
from .disk_complex import DistanceResult, build_gamma, build_lambda, components
from .ghs import (
    GHS,
    Destabilization,
    InvalidGHS,
    InvalidMove,
    Move,
    apply_move,
    collection,
    enumerate_moves,
    ghs_key,
    validate_ghs,
)
from .handlebody import HeegaardDiagram


class InvalidSOG(ValueError):
    pass


class FlattenBudgetExhausted(RuntimeError):
    """Flattening could not connect the endpoints within the budgeted space."""


@dataclass(frozen=True)
class SOGStep:
    """Annotation of one consecutive pair: ghss[src] is the source and the
    other member is obtained from it by `move`."""

    src: int
    move: Move


@dataclass(frozen=True)
class SOG:
    ghss: tuple[GHS, ...]
    steps: tuple[SOGStep, ...]
    labels: Optional[tuple[str, ...]] = None

    @staticmethod
    def of(ghss: Sequence[GHS], steps: Sequence[SOGStep],
           labels: Optional[Sequence[str]] = None) -> "SOG":
        sog = SOG(tuple(ghss), tuple(steps),
                  tuple(labels) if labels is not None else None)
        sog.validate()
        return sog

    def validate(self) -> None:
        """Replay soundness: every recorded move reproduces its target."""
        if not self.ghss:
            raise InvalidSOG("a SOG needs at least one GHS")
        if len(self.steps) != len(self.ghss) - 1:
            raise InvalidSOG("need exactly one step per consecutive pair")
        if self.labels is not None and len(self.labels) != len(self.ghss):
            raise InvalidSOG("labels must match the GHS list")
        for g in self.ghss:
            errors = validate_ghs(g)
            if errors:
                raise InvalidSOG(f"invalid GHS in sequence: {'; '.join(errors)}")
        for k, step in enumerate(self.steps):
            if step.src not in (k, k + 1):
                raise InvalidSOG(f"step {k} names source {step.src}")
            src, dst = self.ghss[step.src], self.ghss[2 * k + 1 - step.src]
            try:
                result = apply_move(src, step.move)
            except InvalidMove as exc:
                raise InvalidSOG(f"step {k} does not replay: {exc}") from exc
            if result.levels != dst.levels:
                raise InvalidSOG(
                    f"step {k} replays to {result}, recorded {dst}")

    def __len__(self) -> int:
        return len(self.ghss)


def maximal_positions(sog: SOG) -> list[int]:
    """Indices whose GHS is obtained-from by both neighbors.  An endpoint is
    maximal iff its single neighbor is obtained from it; a singleton SOG is
    both maximal and minimal."""
    n = len(sog.ghss)
    if n == 1:
        return [0]
    out = []
    for k in range(n):
        left_down = k > 0 and sog.steps[k - 1].src == k
        right_down = k < n - 1 and sog.steps[k].src == k
        left_ok = left_down if k > 0 else True
        right_ok = right_down if k < n - 1 else True
        if left_ok and right_ok:
            out.append(k)
    return out


def minimal_positions(sog: SOG) -> list[int]:
    n = len(sog.ghss)
    if n == 1:
        return [0]
    out = []
    for k in range(n):
        left_up = k > 0 and sog.steps[k - 1].src == k - 1
        right_up = k < n - 1 and sog.steps[k].src == k + 1
        left_ok = left_up if k > 0 else True
        right_ok = right_up if k < n - 1 else True
        if left_ok and right_ok:
            out.append(k)
    return out


MaxKey = tuple[tuple[int, ...], ...]


def max_key(sog: SOG) -> MaxKey:
    """Keys of the maximal GHSs, reordered non-increasingly."""
    keys = [tuple(ghs_key(sog.ghss[k])) for k in maximal_positions(sog)]
    return tuple(sorted(keys, reverse=True))


def compare_sogs(a: SOG, b: SOG) -> str:
    ka, kb = max_key(a), max_key(b)
    return "less" if ka < kb else "greater" if ka > kb else "equal"


def verify_single_maximal(sog: SOG) -> bool:
    return len(maximal_positions(sog)) == 1


# ---------------------------------------------------------------------------
# Move oracles
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class OracleEdge:
    parent: object
    child: object
    move: Move


class InventoryOracle:
    """A declared finite stock of splitting labels per genus with a
    stabilization map.  The map is a function: stabilization is unique, so
    each label has exactly one stabilization."""

    def __init__(self, splittings: dict[int, Sequence[str]],
                 stabilize_map: dict[str, str],
                 boundary: tuple = ((), ())):
        self.genus_of: dict[str, int] = {}
        for genus, labels in splittings.items():
            for label in labels:
                if label in self.genus_of:
                    raise ValueError(f"label {label!r} declared twice")
                self.genus_of[label] = int(genus)
        self.stab: dict[str, str] = dict(stabilize_map)
        for lo, hi in self.stab.items():
            if lo not in self.genus_of or hi not in self.genus_of:
                raise ValueError(f"stabilize map uses undeclared label {lo}->{hi}")
            if self.genus_of[hi] != self.genus_of[lo] + 1:
                raise ValueError(
                    f"stabilize({lo}) = {hi} does not raise genus by one")
        self.boundary = (collection(boundary[0]), collection(boundary[1]))

    @staticmethod
    def from_jsonable(data: dict) -> "InventoryOracle":
        return InventoryOracle(
            {int(g): list(labels) for g, labels in data["splittings"].items()},
            dict(data["stabilize"]),
            tuple(data.get("boundary", ((), ()))),
        )

    def nodes(self) -> list[str]:
        return sorted(self.genus_of)

    def ghs_of(self, label: str) -> GHS:
        b1, b2 = self.boundary
        return GHS.of([b1, [self.genus_of[label]], b2])

    def label_of(self, node: str) -> str:
        return node

    def resolve(self, x) -> str:
        if isinstance(x, str):
            if x not in self.genus_of:
                raise KeyError(f"unknown splitting label {x!r}")
            return x
        if isinstance(x, GHS):
            matches = [lab for lab in self.genus_of
                       if self.ghs_of(lab).levels == x.levels]
            if len(matches) != 1:
                raise KeyError(
                    f"{x} matches {len(matches)} inventory labels; "
                    "pass the label itself")
            return matches[0]
        raise TypeError(f"cannot resolve {x!r} to an inventory label")

    def edges_at(self, node: str) -> list[OracleEdge]:
        out = []
        if node in self.stab:
            parent = self.stab[node]
            move = Destabilization(1, self.genus_of[parent])
            out.append(OracleEdge(parent, node, move))
        for lo, hi in self.stab.items():
            if hi == node:
                move = Destabilization(1, self.genus_of[node])
                out.append(OracleEdge(node, lo, move))
        return sorted(out, key=lambda e: (str(e.parent), str(e.child)))


@dataclass(frozen=True)
class SymbolicBudget:
    """Bounds for the symbolic state space: total genus summed over all
    interior collections, and the number of levels in a sequence."""

    max_total_genus: int
    max_levels: int = 7


class SymbolicOracle:
    """The full move graph over every valid GHS within a budget, with the
    fixed boundary pair.  Exact within the budget: edges are all valid moves
    whose results stay inside the space; geometric realizability is not
    checked, so the graph over-approximates the SOG space."""

    def __init__(self, budget: SymbolicBudget, boundary: tuple = ((), ())):
        self.budget = budget
        self.boundary = (collection(boundary[0]), collection(boundary[1]))
        self._nodes = self._enumerate_states()
        nodeset = set(self._nodes)
        self._edges: dict[GHS, list[OracleEdge]] = {g: [] for g in self._nodes}
        for g in self._nodes:
            for move in enumerate_moves(g):
                try:
                    result = apply_move(g, move)
                except InvalidMove:
                    continue
                if result in nodeset:
                    edge = OracleEdge(g, result, move)
                    self._edges[g].append(edge)
                    self._edges[result].append(edge)

    @staticmethod
    def _nonempty_collections(total: int) -> list[tuple]:
        """Non-increasing tuples of genera >= 1 with sum <= total."""
        out: list[tuple] = []

        def rec(prefix: tuple, maxpart: int, remaining: int):
            for g in range(min(maxpart, remaining), 0, -1):
                cand = prefix + (g,)
                out.append(cand)
                rec(cand, g, remaining - g)

        rec((), total, total)
        return out

    def _enumerate_states(self) -> list[GHS]:
        budget = self.budget
        states = []
        max_thick = max(1, (budget.max_levels - 1) // 2)
        for n_thick in range(1, max_thick + 1):
            n_interior = 2 * n_thick - 1

            def rec(i, remaining, acc):
                if i == n_interior:
                    levels = [self.boundary[0]] + acc + [self.boundary[1]]
                    try:
                        states.append(GHS.of(levels))
                    except InvalidGHS:
                        pass
                    return
                for coll in self._nonempty_collections(remaining):
                    rec(i + 1, remaining - sum(coll), acc + [list(coll)])

            rec(0, budget.max_total_genus, [])
        return sorted(set(states), key=lambda g: (g.n_levels, ghs_key(g), g.levels))

    def nodes(self) -> list[GHS]:
        return list(self._nodes)

    def ghs_of(self, node: GHS) -> GHS:
        return node

    def label_of(self, node: GHS) -> str:
        return repr(node)

    def resolve(self, x) -> GHS:
        if not isinstance(x, GHS):
            raise TypeError("symbolic oracle nodes are GHS values")
        if x not in self._edges:
            raise KeyError(f"{x} lies outside the budgeted state space")
        return x

    def edges_at(self, node: GHS) -> list[OracleEdge]:
        return sorted(self._edges[node],
                      key=lambda e: (self.label_of(e.parent),
                                     self.label_of(e.child), repr(e.move)))


# ---------------------------------------------------------------------------
# Flattening
# ---------------------------------------------------------------------------


def flatten(start, end, oracle, budget: int = 100000) -> SOG:
    """A SOG from start to end whose MAX multiset is lexicographically
    minimal over all zigzags in the oracle's graph; MaxKey ties break by
    length, then by serialized form.  Exact within the oracle's space.

    Raises FlattenBudgetExhausted when the endpoints cannot be joined within
    the budgeted search.
    """
    s = oracle.resolve(start)
    t = oracle.resolve(end)
    if s == t:
        return SOG.of([oracle.ghs_of(s)], [], labels=[oracle.label_of(s)])

    def node_key(n) -> tuple:
        return tuple(ghs_key(oracle.ghs_of(n)))

    # State: (node, arrived_ascending).  The start counts as arrived
    # ascending, so leaving it downward records it as a peak; reaching the
    # end ascending records the end.  A terminal sentinel carries the end
    # node's own contribution so the heap order reflects final objectives.
    TERMINAL = ("#done", None)
    start_state = (s, True)
    counter = itertools.count()
    best_push: dict = {start_state: ((), 0, "")}
    parent: dict = {start_state: None}
    heap = [((), 0, "", next(counter), start_state)]
    done: set = set()
    pops = 0

    def relax(new_state, priority, origin):
        if new_state in done:
            return
        if new_state not in best_push or priority < best_push[new_state]:
            best_push[new_state] = priority
            parent[new_state] = origin
            heapq.heappush(heap, (*priority, next(counter), new_state))

    while heap:
        multiset, length, serial, _, state = heapq.heappop(heap)
        if state in done:
            continue
        done.add(state)
        pops += 1
        if pops > budget:
            raise FlattenBudgetExhausted(
                f"unknown: flattening budget of {budget} expansions exhausted")
        if state == TERMINAL:
            return _reconstruct(oracle, parent, multiset)
        node, arrived_asc = state
        if node == t:
            gained = (node_key(node),) if arrived_asc else ()
            final = tuple(sorted(multiset + gained, reverse=True))
            relax(TERMINAL, (final, length, serial), (state, None, None))
        for edge in oracle.edges_at(node):
            descending = edge.parent == node
            other = edge.child if descending else edge.parent
            gained = (node_key(node),) if descending and arrived_asc else ()
            new_multiset = tuple(sorted(multiset + gained, reverse=True))
            new_state = (other, not descending)
            new_serial = serial + "/" + oracle.label_of(other)
            relax(new_state, (new_multiset, length + 1, new_serial),
                  (state, edge, descending))
    raise FlattenBudgetExhausted(
        "unknown: the endpoints are not joined within the oracle's space")


def _reconstruct(oracle, parent, final_multiset) -> SOG:
    # Walk back from the terminal sentinel.
    state, _, _ = parent[("#done", None)]
    chain = [state]
    edges = []
    while parent[state] is not None:
        prev, edge, descending = parent[state]
        edges.append((edge, descending))
        state = prev
        chain.append(state)
    chain.reverse()
    edges.reverse()
    nodes = [c[0] for c in chain]
    ghss = [oracle.ghs_of(n) for n in nodes]
    steps = []
    for k, (edge, descending) in enumerate(edges):
        steps.append(SOGStep(k if descending else k + 1, edge.move))
    sog = SOG.of(ghss, steps, labels=[oracle.label_of(n) for n in nodes])
    if max_key(sog) != final_multiset:
        raise AssertionError(
            f"flatten bookkeeping mismatch: {max_key(sog)} != {final_multiset}")
    return sog


# ---------------------------------------------------------------------------
# Splitting distance (the metric pipeline)
# ---------------------------------------------------------------------------


def splitting_distance(diagram: HeegaardDiagram, e1, e2, cap: int,
                       budget: Optional[int] = None) -> DistanceResult:
    """Distance between the two splittings destabilized by the given edges
    of the diagram's disk complex.

    e1 and e2 must be recorded intersection-1 edges of the capped complex;
    the result is the distance between their components measured in the
    capped curve complex, and 0 when one component contains both (the cap
    does not distinguish the splittings).
    """
    gamma = build_gamma(diagram, cap, budget)
    e1 = tuple(sorted(tuple(map(tuple, e1))))
    e2 = tuple(sorted(tuple(map(tuple, e2))))
    for e in (e1, e2):
        if gamma.edges.get(e) != 1:
            raise KeyError(f"{e} is not an i=1 edge of the capped complex")
    comp_of = {}
    for idx, comp in enumerate(components(gamma)):
        for v in comp:
            comp_of[v] = idx
    c1, c2 = comp_of[e1[0]], comp_of[e2[0]]
    if c1 == c2:
        return DistanceResult(True, 0, cap)
    lam = build_lambda(diagram, cap, budget)
    edges1 = [e for e in gamma.edge_keys() if comp_of[e[0]] == c1]
    edges2 = [e for e in gamma.edge_keys() if comp_of[e[0]] == c2]
    return disk_complex.component_distance(lam, edges1, edges2)
