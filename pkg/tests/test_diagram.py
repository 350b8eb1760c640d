import random

import pytest
from hypothesis import given, settings, strategies as st

from tanglemoves.diagram import (DiagramError, TangleDiagram, default_budget, greedy_reduce,
                                 reidemeister3, simplify, triangles)
from tanglemoves.moves import ArcDecomposition, OrientedMatching, standard_move, st_partitions
from tanglemoves.ops import parse_word
from oracles import braid_connectivity

A = ArcDecomposition.of


def diagram(lam, word=""):
    d = TangleDiagram.from_matching(standard_move(lam).top)
    for op in parse_word(word):
        d = d.braid(op.index, op.sign)
    return d


def pair_linking(d):
    # sum of crossing signs between each pair of distinct strands
    owner = {}
    for j in sorted(d.initial):
        for p in d.strand_ports(j):
            owner.setdefault(p >> 2, []).append(j)
    out = {}
    for c, js in owner.items():
        if len(js) == 2 and js[0] != js[1]:
            key = tuple(sorted(js))
            out[key] = out.get(key, 0) + d.crossing_sign(c)
    return {k: v for k, v in out.items() if v}


def test_crossingless_diagram_is_valid_and_fixed_by_simplify():
    d = diagram(A(1, 2))
    d.validate()
    res = simplify(d)
    assert res.diagram == d and res.moves == 0 and not res.exhausted


def test_kink_over_a_cup_is_removed():
    d = diagram(A(3), "s1")
    assert d.crossing_count == 1
    assert simplify(d).diagram.crossing_count == 0


def test_braid_then_mirror_cancels_exactly():
    base = diagram(A(2, 2))
    for i in range(1, 9):
        d = base.braid(i, 1).braid(i, -1)
        assert d.crossing_count == 2
        assert simplify(d).diagram == TangleDiagram(base.n, base.adj, {}, base.initial)


def test_clasp_is_not_reduced():
    # two different arcs twisted twice where no cup sits between them
    m = OrientedMatching.build([(1, 2), (3, 4)], [1, 3])
    d = TangleDiagram.from_matching(m).braid(2, 1).braid(2, 1)
    d.validate()
    res = simplify(d)
    assert res.diagram.crossing_count == 2


def test_braid_relation_needs_third_move():
    # three nested arcs: no kink or bigon until a triangle is flipped
    m = OrientedMatching.build([(1, 6), (2, 5), (3, 4)], [1, 2, 3])
    d = TangleDiagram.from_matching(m)
    for op in parse_word("s1 s2 s1 S2 S1 S2"):
        d = d.braid(op.index, op.sign)
    assert greedy_reduce(d.copy()) == 0
    res = simplify(d)
    assert res.diagram.crossing_count == 0
    assert res.diagram.to_matching() == m


def test_braid_transposes_connectivity_and_polarity():
    d = diagram(A(2))
    e = d.braid(2, 1)
    assert e.partner()[1:] == (3, 4, 1, 2)
    assert e.initial == {1, 2}


def test_annular_letter_wraps_last_and_first():
    d = diagram(A(2)).braid(4, -1)
    d.validate()
    assert d.partner()[1:] == (3, 4, 1, 2)
    assert d.initial == {3, 4}


def test_connect_relabels_and_rejects_loops():
    d = diagram(A(1, 2))
    bottom = TangleDiagram.from_matching(standard_move(A(1, 2)).bottom)
    e = d.connect(2)
    assert e.n == 2
    e.validate()
    with pytest.raises(DiagramError) as exc:
        bottom.connect(1)
    assert exc.value.kind == "closed loop"
    with pytest.raises(DiagramError) as exc:
        TangleDiagram.from_matching(standard_move(A(3)).top).connect(1)
    assert exc.value.kind == "closed loop"


def test_connect_polarity_check():
    d = diagram(A(2)).braid(1, 1)
    assert {2, 3} <= d.initial
    with pytest.raises(DiagramError) as exc:
        d.connect(2)
    assert exc.value.kind == "polarity"


def test_connect_at_last_index_relabels_everything_down():
    top = TangleDiagram.from_matching(standard_move(A(3)).bottom)  # (1,6) arc
    d = TangleDiagram.from_matching(standard_move(A(3)).top)
    e = d.connect(6)
    assert e.partner()[1:] == (4, 3, 2, 1)
    assert e.initial == {2, 4}
    with pytest.raises(DiagramError):
        top.connect(6)


def test_validate_detects_broken_rotation():
    d = diagram(A(3), "s2 s3")
    d.validate()
    bad = d.copy()
    c = next(iter(bad.over))
    # swap two ports of one crossing: same connectivity data, non-planar rotation
    p, q = 4 * c, 4 * c + 1
    a, b = bad.adj[p], bad.adj[q]
    if a != q:
        bad.adj[p], bad.adj[q] = b, a
        bad.adj[a], bad.adj[b] = q, p
        with pytest.raises(DiagramError):
            bad.validate()


def test_default_budget():
    assert default_budget(0) == 100
    assert default_budget(7) == 170


words = st.lists(st.tuples(st.integers(1, 100), st.sampled_from((1, -1))), max_size=14)


@settings(max_examples=120, deadline=None)
@given(st.sampled_from([lam for n in range(2, 5) for lam in st_partitions(n)]), words,
       st.booleans())
def test_simplify_keeps_connectivity_polarity_and_linking(lam, raw, use_top):
    m = standard_move(lam)
    size = 2 * lam.n
    d = TangleDiagram.from_matching(m.top if use_top else m.bottom)
    for i, s in raw:
        d = d.braid((i - 1) % size + 1, s)
    d.validate()
    res = simplify(d)
    res.diagram.validate()
    assert res.diagram.crossing_count <= d.crossing_count
    assert res.diagram.partner() == d.partner()
    assert res.diagram.initial == d.initial
    assert pair_linking(res.diagram) == pair_linking(d)
    # connectivity agrees with composing transpositions directly
    pairs = (m.top if use_top else m.bottom).pairs
    expect, _ = braid_connectivity(pairs, pairs, [(i - 1) % size + 1 for i, _ in raw], size)
    got = {tuple(sorted((j, d.partner()[j]))) for j in range(1, size + 1)}
    assert got == expect


@settings(max_examples=80, deadline=None)
@given(st.sampled_from([lam for n in range(2, 5) for lam in st_partitions(n)]), words)
def test_third_moves_preserve_planarity_and_linking(lam, raw):
    size = 2 * lam.n
    d = TangleDiagram.from_matching(standard_move(lam).top)
    for i, s in raw:
        d = d.braid((i - 1) % size + 1, s)
    before = pair_linking(d)
    for tri in triangles(d):
        e = reidemeister3(d, tri)
        e.validate()
        assert e.crossing_count == d.crossing_count
        assert e.partner() == d.partner()
        assert pair_linking(e) == before


def test_triangles_found_on_braid_relation():
    d = diagram(A(3), "s1 s2 s1")
    assert triangles(d)


@settings(max_examples=120, deadline=None)
@given(st.integers(2, 5).flatmap(lambda n: st.tuples(
    st.just(n), st.integers(0, 10 ** 6), st.integers(1, 2 * n), st.integers(0, 2 * n - 2),
    st.sampled_from((1, -1)))))
def test_single_strand_passes_reduce_exactly_when_result_is_noncrossing(args):
    from tanglemoves.combinatorics import noncrossing_matchings
    from tanglemoves.diagram import _reroute
    n, seed, k, length, sign = args
    size = 2 * n
    ms = list(noncrossing_matchings(tuple(range(1, size + 1))))
    pairs = ms[seed % len(ms)]
    m = OrientedMatching.build(pairs, [min(p) for p in pairs])
    d = TangleDiagram.from_matching(m)
    for t in range(length):
        d = d.braid((k - 1 + t) % size + 1, sign)
    part = d.partner()
    chords = [(j, part[j]) for j in range(1, size + 1) if j < part[j]]
    flat = not any(a < c < b < e for (a, b) in chords for (c, e) in chords)
    res = simplify(d)
    assert (res.diagram.crossing_count == 0) == flat
    # the moved strand is the only one with crossings; redrawing it keeps everything else
    moved = (k - 1 + length) % size + 1
    r = _reroute(d, moved)
    if r is not None:
        r.validate()
        assert r.partner() == d.partner()
        assert r.crossing_count <= d.crossing_count
        if flat:
            assert r.crossing_count == 0
