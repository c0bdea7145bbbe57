import random

import networkx as nx
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from slee.errors import EdgeListError, Graph6Error
from slee.graph import Graph, complete, empty, g_nr, star
from slee.io import parse_edge_list, parse_graph6, write_edge_list, write_graph6

from conftest import random_graph, to_nx


def test_empty_five_vertices():
    # 10 bits -> two data bytes of zeros after the size byte 'D' (5 + 63)
    assert parse_graph6("D??") == empty(5)
    assert write_graph6(empty(5)) == b"D??"


def test_two_char_d_is_truncated():
    with pytest.raises(Graph6Error) as info:
        parse_graph6("D?")
    assert info.value.kind == Graph6Error.TRUNCATED


def test_empty_graph_encoding():
    assert write_graph6(empty(0)) == b"?"
    assert parse_graph6("?") == empty(0)
    assert write_graph6(empty(1)) == b"@"


def test_hand_encoded_examples():
    # K_2: one bit '1' padded to 100000 -> 32 + 63 = 95 '_'
    assert write_graph6(complete(2)) == b"A_"
    # K_3: bits 111 -> 111000 = 56 + 63 = 119 'w'
    assert write_graph6(complete(3)) == b"Bw"
    # star(4): x01 x02 x12 x03 x13 x23 = 1 1 0 1 0 0 -> 52 + 63 = 115 's'
    assert write_graph6(star(4)) == b"Cs"


def test_matches_networkx_writer():
    rng = random.Random(5)
    for _ in range(100):
        g = random_graph(rng, rng.randint(0, 20))
        ref = nx.to_graph6_bytes(to_nx(g), header=False).strip()
        assert write_graph6(g) == ref


def test_long_size_forms():
    g = g_nr(63, 5)
    data = write_graph6(g)
    assert data[:1] == b"~"
    assert parse_graph6(data) == g
    # long form for a small n is accepted on parse, short form is emitted
    long_k3 = b"~??B" + write_graph6(complete(3))[1:]
    assert parse_graph6(long_k3) == complete(3)
    very_long = b"~~" + b"?????B" + b"w"
    assert parse_graph6(very_long) == complete(3)


def test_header_and_newline_accepted():
    assert parse_graph6(b">>graph6<<Bw\n") == complete(3)


@settings(max_examples=200, deadline=None)
@given(st.integers(0, 20), st.data())
def test_parse_write_identity(n, data):
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    edges = data.draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    g = Graph.from_edges(n, edges)
    s = write_graph6(g)
    assert parse_graph6(s) == g
    assert write_graph6(parse_graph6(s)) == s


MALFORMED = [
    (b"", Graph6Error.EMPTY),
    (b"\n", Graph6Error.EMPTY),
    (b":Fa@x^", Graph6Error.FOREIGN),
    (b"&Bw", Graph6Error.FOREIGN),
    (b">>sparse6<<:Fa@x^", Graph6Error.HEADER_LINE),
    (b">>graph6Bw", Graph6Error.HEADER_LINE),
    (b"~?", Graph6Error.HEADER),
    (b"B w", Graph6Error.CHARACTER),
    (b"D\x7f?", Graph6Error.CHARACTER),
    (b"B\xc3\xa9", Graph6Error.NON_ASCII),
    ("B\u00e9w", Graph6Error.NON_ASCII),
    (b"D?", Graph6Error.TRUNCATED),
    (b"Bww", Graph6Error.TRAILING),
    (b"A`", Graph6Error.PADDING),
    (b"~?A?", Graph6Error.TOO_LARGE),
]


@pytest.mark.parametrize("data,kind", MALFORMED)
def test_malformed_inputs(data, kind):
    with pytest.raises(Graph6Error) as info:
        parse_graph6(data)
    assert info.value.kind == kind


def test_edge_list_round_trip():
    g = g_nr(6, 2)
    text = write_edge_list(g)
    assert text.splitlines()[0] == "6 8"  # K_4 plus two pendant edges
    assert parse_edge_list(text) == g
    assert parse_edge_list("3 0\n") == empty(3)


@pytest.mark.parametrize(
    "text",
    ["", "3\n", "3 2\n0 1\n", "3 1\n0 x\n", "3 2\n0 1\n1 0\n", "3 1\n0 1 2\n"],
)
def test_edge_list_errors(text):
    with pytest.raises(EdgeListError):
        parse_edge_list(text)
