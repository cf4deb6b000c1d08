import random

import pytest

from heegaard_lab.disk_complex import DistanceResult
from heegaard_lab.ghs import GHS, Destabilization, ghs_key
from heegaard_lab.handlebody import s3_genus1, standard_diagram
from heegaard_lab.sog import (
    SOG,
    FlattenBudgetExhausted,
    InvalidSOG,
    InventoryOracle,
    SOGStep,
    SymbolicBudget,
    SymbolicOracle,
    compare_sogs,
    flatten,
    max_key,
    maximal_positions,
    minimal_positions,
    splitting_distance,
    verify_single_maximal,
)
from heegaard_lab.surface import CurveClass


def destab(g):
    return Destabilization(1, g)


def test_replay_soundness():
    P, R, Q = (GHS.closed_splitting(g) for g in (2, 3, 2))
    good = SOG.of([P, R, Q], [SOGStep(1, destab(3)), SOGStep(1, destab(3))])
    assert len(good) == 3
    with pytest.raises(InvalidSOG):
        SOG.of([P, R, Q], [SOGStep(1, destab(3)), SOGStep(1, destab(2))])
    with pytest.raises(InvalidSOG):
        SOG.of([P, R], [SOGStep(0, destab(2))])   # wrong direction source
    with pytest.raises(InvalidSOG):
        SOG.of([P, R, Q], [SOGStep(1, destab(3))])


def test_positions_shapes():
    P, R, Q = (GHS.closed_splitting(g) for g in (2, 3, 2))
    lam = SOG.of([P, R, Q], [SOGStep(1, destab(3)), SOGStep(1, destab(3))])
    assert maximal_positions(lam) == [1]
    assert minimal_positions(lam) == [0, 2]
    A, B, C = (GHS.closed_splitting(g) for g in (3, 2, 3))
    vee = SOG.of([A, B, C], [SOGStep(0, destab(3)), SOGStep(2, destab(3))])
    assert maximal_positions(vee) == [0, 2]
    assert minimal_positions(vee) == [1]
    single = SOG.of([A], [])
    assert maximal_positions(single) == [0]
    assert minimal_positions(single) == [0]


def test_w_shape_and_single_maximal():
    g4, g3 = GHS.closed_splitting(4), GHS.closed_splitting(3)
    w = SOG.of([g4, g3, g4, g3, g4],
               [SOGStep(0, destab(4)), SOGStep(2, destab(4)),
                SOGStep(2, destab(4)), SOGStep(4, destab(4))])
    assert maximal_positions(w) == [0, 2, 4]
    assert not verify_single_maximal(w)


def test_max_key_examples():
    P, R, Q = (GHS.closed_splitting(g) for g in (2, 3, 2))
    lam = SOG.of([P, R, Q], [SOGStep(1, destab(3)), SOGStep(1, destab(3))])
    assert max_key(lam) == ((36,),)
    # MaxKeys [[36]] vs [[16,16],[16,16]]: the second is smaller.
    assert ((16, 16), (16, 16)) < ((36,),)
    assert compare_sogs(lam, lam) == "equal"


def test_descending_run_keys_strictly_decrease():
    o = InventoryOracle({2: ["P", "Q"], 3: ["R"], 4: ["T"]},
                        {"P": "R", "Q": "R", "R": "T"})
    sog = flatten("T", "Q", o)
    for k, step in enumerate(sog.steps):
        hi, lo = (k, k + 1) if step.src == k else (k + 1, k)
        assert ghs_key(sog.ghss[hi]) > ghs_key(sog.ghss[lo])


def test_flatten_inventory_examples():
    o1 = InventoryOracle({2: ["P", "Q"], 3: ["R"]}, {"P": "R", "Q": "R"})
    sog = flatten("P", "Q", o1)
    assert sog.labels == ("P", "R", "Q")
    assert max_key(sog) == ((36,),)
    assert verify_single_maximal(sog)

    o2 = InventoryOracle({2: ["P", "Q"], 3: ["R", "S"], 4: ["T"]},
                         {"P": "R", "Q": "S", "R": "T", "S": "T"})
    sog2 = flatten("P", "Q", o2)
    assert max_key(sog2) == ((64,),)
    assert verify_single_maximal(sog2)
    assert sog2.labels == ("P", "R", "T", "S", "Q")


def test_flatten_identity():
    o1 = InventoryOracle({2: ["P", "Q"], 3: ["R"]}, {"P": "R", "Q": "R"})
    sog = flatten("P", "P", o1)
    assert sog.labels == ("P",)
    assert max_key(sog) == ((16,),)


def test_flatten_beats_naive_common_stabilization():
    # P and Q join both at genus 3 and, higher up, at genus 4; flattening
    # must come back with the genus-3 peak.
    o = InventoryOracle(
        {2: ["P", "Q"], 3: ["R"], 4: ["T"]},
        {"P": "R", "Q": "R", "R": "T"})
    sog = flatten("P", "Q", o)
    assert max_key(sog) == ((36,),)       # not ((64,),)
    naive = SOG.of(
        [o.ghs_of("P"), o.ghs_of("R"), o.ghs_of("T"),
         o.ghs_of("R"), o.ghs_of("Q")],
        [SOGStep(1, destab(3)), SOGStep(2, destab(4)),
         SOGStep(2, destab(4)), SOGStep(3, destab(3))])
    assert max_key(sog) <= max_key(naive)
    assert compare_sogs(sog, naive) == "less"


def test_flatten_unreachable():
    o = InventoryOracle({2: ["P", "Q"]}, {})
    with pytest.raises(FlattenBudgetExhausted):
        flatten("P", "Q", o)


def test_flatten_budget_exhaustion():
    o = InventoryOracle({2: ["P", "Q"], 3: ["R"]}, {"P": "R", "Q": "R"})
    with pytest.raises(FlattenBudgetExhausted):
        flatten("P", "Q", o, budget=1)


def test_flatten_on_random_stabilization_trees():
    rng = random.Random(23)
    for _ in range(20):
        labels = {2: ["A0", "B0"]}
        stab = {}
        prev = ["A0", "B0"]
        for level in range(3, 6):
            here = []
            for i, lo in enumerate(prev):
                hi = f"N{level}_{i // 2}" if rng.random() < 0.5 else f"N{level}_{i}"
                stab[lo] = hi
                if hi not in here:
                    here.append(hi)
            labels[level] = here
            prev = here
        if len(prev) > 1:
            top = f"T{rng.randint(0, 99)}"
            labels[6] = [top]
            for lo in prev:
                stab[lo] = top
        oracle = InventoryOracle(labels, stab)
        sog = flatten("A0", "B0", oracle)
        assert verify_single_maximal(sog)


def test_symbolic_oracle_flatten():
    oracle = SymbolicOracle(SymbolicBudget(4, 5))
    start = GHS.closed_splitting(2)
    end = GHS.closed_splitting(1)
    sog = flatten(start, end, oracle)
    assert sog.ghss[0].levels == start.levels
    assert sog.ghss[-1].levels == end.levels
    assert max_key(sog) == ((16,),)       # straight descent, peak at start


def test_symbolic_oracle_contains_weak_reductions():
    oracle = SymbolicOracle(SymbolicBudget(5, 5))
    g3 = GHS.closed_splitting(3)
    thin = GHS.of([[], [2], [1], [2], []])
    edges = oracle.edges_at(g3)
    assert any(e.child == thin for e in edges if e.parent == g3)


def test_splitting_distance_same_edge_and_component():
    d = s3_genus1()
    k10 = CurveClass.from_slope(1, 0).coords
    k01 = CurveClass.from_slope(0, 1).coords
    e = (k10, k01)
    r = splitting_distance(d, e, e, 12)
    assert r == DistanceResult(True, 0, 12)
    with pytest.raises(KeyError):
        splitting_distance(d, (k10, k10), e, 12)


def test_splitting_distance_genus2_dual_pairs():
    d = standard_diagram(2)
    g = None
    from heegaard_lab.disk_complex import build_gamma
    g = build_gamma(d, 4)
    ones = sorted(e for e, i in g.edges.items() if i == 1)
    assert len(ones) == 2
    r = splitting_distance(d, ones[0], ones[1], 4)
    # The two dual pairs sit in one component of the capped complex
    # (the meridian 4-cycle), so the cap does not separate them.
    assert r.value == 0 and r.connected


def test_splitting_distance_on_separated_components():
    import json

    from heegaard_lab.disk_complex import build_gamma, build_lambda, emit_graph
    from test_disk_complex import critical_witness_diagram

    d = critical_witness_diagram()
    g = build_gamma(d, 8)
    ones = sorted(e for e, i in g.edges.items() if i == 1)
    assert len(ones) == 2
    r = splitting_distance(d, ones[0], ones[1], 8)
    assert r.connected and r.value == 1

    # Independent BFS oracle over the emitted curve-complex JSON.
    data = json.loads(emit_graph(build_lambda(d, 8)))
    index = {tuple(v["coords"]): i for i, v in enumerate(data["vertices"])}
    adj = {}
    for e in data["edges"]:
        adj.setdefault(e["u"], set()).add(e["v"])
        adj.setdefault(e["v"], set()).add(e["u"])
    best = None
    for u in ones[0]:
        dist = {index[u]: 0}
        frontier = [index[u]]
        while frontier:
            nxt = []
            for a in frontier:
                for b in adj.get(a, ()):
                    if b not in dist:
                        dist[b] = dist[a] + 1
                        nxt.append(b)
            frontier = nxt
        for v in ones[1]:
            got = dist.get(index[v])
            if got is not None and (best is None or got < best):
                best = got
    assert best == r.value
