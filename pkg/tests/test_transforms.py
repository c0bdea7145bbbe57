import itertools
import logging
import random

import pytest

from slee.errors import GraphError
from slee.graph import (
    attach_pendants,
    complete,
    disjoint_union,
    g_nr,
    identify,
    is_isomorphic,
    k_pqr,
    path,
)
from slee.search import enumerate_classes
from slee.spectral import slee
from slee.transforms import (
    ATTACH_VS_IDENTIFY,
    TransformPair,
    attach_vs_identify_pair,
    clique_core,
    gather_pendants,
    identification_pair,
    pendant_relocation,
    relocation_pair,
)
from slee.walks import Relation, dominance, pair_dominance

from conftest import classes_upto, random_graph

log = logging.getLogger(__name__)
REL = 1e-9


def strictly_larger(after: float, before: float) -> bool:
    return after > before * (1 + REL)


def test_pair_requires_matching_counts():
    with pytest.raises(GraphError):
        TransformPair(complete(3), path(3), "x")


def test_identification_pair_examples():
    pair = identification_pair(path(3), 1, 0, complete(2), 0)
    assert pair.before.n == pair.after.n == 4
    assert strictly_larger(slee(pair.after), slee(pair.before))
    with pytest.raises(GraphError):
        identification_pair(path(3), 1, 1, complete(2), 0)
    lone = identification_pair(path(3), 1, 0, complete(1), 0)
    assert lone.before == lone.after == path(3)


def test_identification_pairs_exhaustive():
    h2s = [complete(2), path(3), complete(3)]
    checked = skipped = 0
    for h1 in classes_upto(5):
        for u, v in itertools.permutations(range(h1.n), 2):
            if dominance(h1, v, h1, u, 20).relation is not Relation.STRICT:
                skipped += 1
                continue
            for h2 in h2s:
                for w in range(h2.n):
                    pair = identification_pair(h1, u, v, h2, w)
                    assert pair.before.m == pair.after.m
                    assert strictly_larger(slee(pair.after), slee(pair.before)), (h1, u, v, h2, w)
                    checked += 1
    log.info("identification: %d pairs checked, %d anchor pairs skipped", checked, skipped)
    assert checked > 500


def test_attach_vs_identify_examples():
    pair = attach_vs_identify_pair(complete(3), 0, complete(3), 0)
    assert pair.before.n == pair.after.n == 6
    assert pair.before.m == pair.after.m == 7
    assert is_isomorphic(pair.after, attach_pendants(identify(complete(3), 0, complete(3), 0), 0, 1))
    assert strictly_larger(slee(pair.after), slee(pair.before))
    with pytest.raises(GraphError):
        attach_vs_identify_pair(complete(1), 0, complete(3), 0)
    centred = attach_vs_identify_pair(path(3), 1, path(3), 1)
    assert strictly_larger(slee(centred.after), slee(centred.before))


def test_attach_vs_identify_exhaustive():
    connected = [g for n in range(2, 5) for g in enumerate_classes(n, connected_only=True)]
    checked = 0
    for g1, g2 in itertools.product(connected, repeat=2):
        for u in range(g1.n):
            for v in range(g2.n):
                pair = attach_vs_identify_pair(g1, u, g2, v)
                assert pair.kind == ATTACH_VS_IDENTIFY
                assert pair.before.m == pair.after.m
                assert strictly_larger(slee(pair.after), slee(pair.before))
                checked += 1
    assert checked > 300


def split_clique_config(p, q, r):
    """K_{(p,q)r} with the K_q edges at y1 removed; vertex ids x1=0, y1=p."""
    h = k_pqr(p, q, r)
    y1 = p
    ys = list(range(p + 1, p + q))
    for y in ys:
        h = h.remove_edge(y1, y)
    return h, 0, y1, ys


@pytest.mark.parametrize("p,q,r", [(2, 2, 1), (3, 2, 1), (3, 3, 2), (4, 2, 2)])
def test_relocation_in_split_clique_graphs(p, q, r):
    h, x1, y1, ys = split_clique_config(p, q, r)
    pair = relocation_pair(h, y1, x1, ys)
    assert pair.before == k_pqr(p, q, r)
    bigger = k_pqr(p + q - 1, 1, r)
    # after is a proper subgraph of the merged construction (same labels up to iso)
    assert pair.after.m < bigger.m
    assert strictly_larger(slee(pair.after), slee(pair.before))
    assert slee(pair.after) < slee(bigger)


def test_relocation_degenerate_and_errors():
    g = path(4)
    same = relocation_pair(g, 0, 0, [2])
    assert same.before == same.after
    with pytest.raises(GraphError):
        relocation_pair(g, 0, 3, [1])
    with pytest.raises(GraphError):
        relocation_pair(g, 0, 3, [])
    with pytest.raises(GraphError):
        relocation_pair(g, 0, 3, [0])


def test_relocation_hypothesis_sampling():
    rng = random.Random(2024)
    confirmed = 0
    for _ in range(4000):
        n = rng.randint(4, 8)
        g = random_graph(rng, n, rng.uniform(0.2, 0.7))
        v, u = rng.sample(range(n), 2)
        free = [w for w in range(n) if w not in (u, v) and not g.has_edge(v, w) and not g.has_edge(u, w)]
        if not free:
            continue
        ws = rng.sample(free, rng.randint(1, len(free)))
        if dominance(g, v, g, u, 20).relation is not Relation.STRICT:
            continue
        if not all(pair_dominance(g, w, v, u, 20).holds for w in ws):
            continue
        pair = relocation_pair(g, v, u, ws)
        assert strictly_larger(slee(pair.after), slee(pair.before)), (g, v, u, ws)
        confirmed += 1
    assert confirmed > 100


def pendant_family(a, b):
    """Every way of hanging b pendants on K_a, up to permuting clique vertices."""
    for loads in itertools.combinations_with_replacement(range(a), b):
        g = complete(a)
        for x in range(a):
            g = attach_pendants(g, x, loads.count(x))
        yield g


def test_pendant_relocation_example():
    g = attach_pendants(attach_pendants(complete(3), 0, 1), 1, 1)
    pair = pendant_relocation(g, 1, 0)
    assert pair.after == g_nr(5, 2)
    assert strictly_larger(slee(pair.after), slee(pair.before))
    degs_before, degs_after = list(pair.before.degrees), list(pair.after.degrees)
    for x in range(g.n):
        if x not in (0, 1):
            assert degs_before[x] == degs_after[x]


def test_pendant_relocation_errors():
    g = attach_pendants(attach_pendants(complete(3), 0, 2), 1, 1)
    with pytest.raises(GraphError):
        pendant_relocation(g, 0, 1)  # target has fewer pendants
    with pytest.raises(GraphError):
        pendant_relocation(g, 2, 0)  # nothing to move
    with pytest.raises(GraphError):
        pendant_relocation(path(5), 1, 2)  # not a clique with pendants
    assert clique_core(disjoint_union(complete(3), complete(2))) is None


@pytest.mark.parametrize("a", [3, 4, 5])
@pytest.mark.parametrize("b", [1, 2, 3])
def test_gathering_pendants_reaches_the_construction(a, b):
    target = g_nr(a + b, b)
    best = slee(target)
    for g in pendant_family(a, b):
        chain = gather_pendants(g)
        for pair in chain:
            assert pair.before.m == pair.after.m
            assert strictly_larger(slee(pair.after), slee(pair.before))
        final = chain[-1].after if chain else g
        assert is_isomorphic(final, target)
        if is_isomorphic(g, target):
            assert slee(g) == pytest.approx(best, rel=1e-12)
        else:
            assert strictly_larger(best, slee(g))
