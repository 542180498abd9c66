import random

import pytest

from pathcong import (
    CyclicQuiverError,
    Quiver,
    QuiverError,
    QuiverParseError,
    connected_components,
    enumerate_paths,
    is_acyclic,
    max_parallel_paths,
    parse_quiver,
    quiver_to_text,
    random_acyclic_quiver,
    underlying_graph_is_tree,
)

SINGLE_ARROW_TEXT = "vertices: 1 2\narrow alpha: 1 -> 2\n"


def test_parse_single_arrow():
    q = parse_quiver(SINGLE_ARROW_TEXT)
    assert q.vertices == ("1", "2")
    assert len(q.arrows) == 1
    assert q.arrows[0].name == "alpha"
    assert q.arrows[0].source == "1"
    assert q.arrows[0].target == "2"


def test_parse_minimal_quiver():
    q = parse_quiver("vertices: a\n")
    assert q.vertices == ("a",)
    assert q.arrows == ()


def test_parse_undeclared_vertex_reports_line():
    with pytest.raises(QuiverParseError) as err:
        parse_quiver("vertices: 1 2\narrow alpha: 1 -> 3\n")
    assert "3" in str(err.value)
    assert err.value.line == 2


def test_parse_ignores_comments_and_blanks():
    text = "# a comment\n\nvertices: 1 2\n\n# another\narrow alpha: 1 -> 2\n"
    q = parse_quiver(text)
    assert len(q.arrows) == 1


def test_parse_rejects_duplicate_vertices_line():
    with pytest.raises(QuiverParseError):
        parse_quiver("vertices: 1\nvertices: 2\n")


def test_parse_rejects_missing_vertices_line():
    with pytest.raises(QuiverParseError):
        parse_quiver("arrow a: 1 -> 2\n")


def test_parse_rejects_garbage_line():
    with pytest.raises(QuiverParseError) as err:
        parse_quiver("vertices: 1\nnot a declaration\n")
    assert err.value.line == 2


def test_parse_rejects_duplicate_arrow_name():
    with pytest.raises(QuiverParseError):
        parse_quiver("vertices: 1 2\narrow a: 1 -> 2\narrow a: 1 -> 2\n")


def test_parse_roundtrip(kronecker):
    assert parse_quiver(quiver_to_text(kronecker)) == kronecker


def test_constructor_validation():
    with pytest.raises(QuiverError):
        Quiver(["1", "1"])
    with pytest.raises(QuiverError):
        Quiver(["1", "2"], [("a", "1", "2"), ("a", "2", "1")])
    with pytest.raises(QuiverError):
        Quiver(["1", "2"], [("1", "1", "2")])
    with pytest.raises(QuiverError):
        Quiver(["1"], [("a", "1", "9")])


def test_is_acyclic(single_arrow):
    assert is_acyclic(single_arrow)
    loop = Quiver(["v"], [("a", "v", "v")])
    assert not is_acyclic(loop)
    triangle = Quiver(["1", "2", "3"], [("a", "1", "2"), ("b", "2", "3"), ("c", "3", "1")])
    assert not is_acyclic(triangle)


def test_enumerate_paths_single_arrow(single_arrow):
    assert [p.name for p in enumerate_paths(single_arrow)] == ["1", "2", "alpha"]


def test_enumerate_paths_triple_arrow(triple_arrow):
    names = [p.name for p in enumerate_paths(triple_arrow)]
    assert names == ["1", "2", "alpha", "beta", "gamma"]


def test_enumerate_paths_chain(chain3):
    # length is the primary sort key, so the two-arrow path comes last
    assert [p.name for p in enumerate_paths(chain3)] == ["1", "2", "3", "a", "b", "a.b"]


def test_enumerate_paths_rejects_cycles():
    loop = Quiver(["v"], [("a", "v", "v")])
    with pytest.raises(CyclicQuiverError):
        enumerate_paths(loop)


def test_enumerate_paths_matches_dfs_oracle(chain3, triple_arrow):
    rng = random.Random(7)
    quivers = [chain3, triple_arrow] + [random_acyclic_quiver(rng) for _ in range(10)]
    for q in quivers:
        got = sorted(p.arrows if not p.is_trivial else (p.base,) for p in enumerate_paths(q))
        want = sorted(t if t else (v,) for t, v in _tagged_dfs(q))
        assert got == want


def _tagged_dfs(q):
    out = {v: [] for v in q.vertices}
    for a in q.arrows:
        out[a.source].append(a)
    found = []

    def extend(names, at, base):
        found.append((tuple(names), base))
        for a in out[at]:
            extend(names + [a.name], a.target, base)

    for v in q.vertices:
        extend([], v, v)
    return found


def test_paths_closed_under_subpaths(chain3):
    rng = random.Random(11)
    for q in [chain3] + [random_acyclic_quiver(rng) for _ in range(10)]:
        arrows = {p.arrows for p in enumerate_paths(q)}
        for seq in arrows:
            for i in range(len(seq)):
                for j in range(i + 1, len(seq) + 1):
                    assert seq[i:j] in arrows


def test_path_count_matches_matrix_power_oracle():
    rng = random.Random(13)
    for _ in range(15):
        q = random_acyclic_quiver(rng)
        n = len(q.vertices)
        adj = [[0] * n for _ in range(n)]
        for a in q.arrows:
            adj[q.vertex_index(a.source)][q.vertex_index(a.target)] += 1
        total = [[int(i == j) for j in range(n)] for i in range(n)]
        power = [row[:] for row in total]
        for _ in range(n):
            power = [
                [sum(power[i][k] * adj[k][j] for k in range(n)) for j in range(n)]
                for i in range(n)
            ]
            total = [[total[i][j] + power[i][j] for j in range(n)] for i in range(n)]
        assert sum(map(sum, total)) == len(enumerate_paths(q))
        assert max(map(max, total), default=0) == max_parallel_paths(q)


def test_max_parallel_paths(single_arrow, kronecker, triple_arrow):
    assert max_parallel_paths(single_arrow) == 1
    assert max_parallel_paths(kronecker) == 2
    assert max_parallel_paths(triple_arrow) == 3


def test_underlying_graph_is_tree(chain3, kronecker):
    assert underlying_graph_is_tree(chain3)
    assert not underlying_graph_is_tree(kronecker)
    assert not underlying_graph_is_tree(Quiver(["1", "2"]))
    assert underlying_graph_is_tree(Quiver(["1"]))


def test_tree_implies_unique_parallel_path(chain3):
    star = Quiver(["c", "1", "2", "3"], [("a", "c", "1"), ("b", "c", "2"), ("d", "3", "c")])
    for q in (chain3, star):
        assert underlying_graph_is_tree(q)
        assert max_parallel_paths(q) == 1


def test_connected_components_connected_input(single_arrow):
    comps = connected_components(single_arrow)
    assert comps == [single_arrow]


def test_connected_components_with_isolated_vertex():
    q = Quiver(["1", "2", "x"], [("alpha", "1", "2")])
    comps = connected_components(q)
    assert len(comps) == 2
    assert comps[0].vertices == ("1", "2")
    assert comps[1].vertices == ("x",)


def test_connected_components_parallel_counts():
    q = Quiver(
        ["1", "2", "3", "4"],
        [("alpha", "1", "2"), ("beta", "1", "2"), ("c", "3", "4")],
    )
    comps = connected_components(q)
    assert [max_parallel_paths(c) for c in comps] == [2, 1]


def test_connected_components_partition_and_reassemble():
    rng = random.Random(17)
    for _ in range(10):
        q = random_acyclic_quiver(rng)
        comps = connected_components(q)
        vertices = [v for c in comps for v in c.vertices]
        arrows = [a for c in comps for a in c.arrows]
        assert sorted(vertices) == sorted(q.vertices)
        assert sorted(a.name for a in arrows) == sorted(a.name for a in q.arrows)
        for a in arrows:
            assert a in q.arrows
