import pytest

from csg_ldpc.codes import (
    EnumerationLimitExceeded,
    build_code,
    code_from_parity_check,
    extend_parity_check,
    hull_dimension,
    is_even_code,
    is_lcd,
    is_self_orthogonal,
    minimum_distance,
    tanner_graph,
)
from csg_ldpc.gf2 import BitMatrix
from csg_ldpc.graphs import (
    Graph,
    NotBipartiteError,
    NotConnectedError,
    NotCubicError,
    girth,
    load_edge_list,
    parse_lcf,
)
from csg_ldpc.constructions import generalized_petersen

from oracles import codeword_weights, min_distance_by_column_search


def test_heawood_code_parameters(heawood_code):
    code = heawood_code
    assert (code.n, code.k) == (7, 3)
    assert code.w_c == 3 and code.w_r == 3
    assert minimum_distance(code) == 4
    assert code.H.multiply(code.G.transpose()).is_zero()


def test_k33_code_parameters():
    code = build_code(parse_lcf("[3,-3]^3"))
    assert (code.n, code.k, minimum_distance(code)) == (3, 2, 2)


def test_cube_code_is_trivial():
    code = build_code(parse_lcf("[3,-3]^4"))
    assert code.k == 0
    assert code.G.nrows == 0
    # distance convention for the zero code
    assert minimum_distance(code) == 4


def test_build_code_error_types():
    two_squares = Graph.from_edges(
        8, [(0, 1), (1, 2), (2, 3), (3, 0), (4, 5), (5, 6), (6, 7), (7, 4)]
    )
    with pytest.raises(NotConnectedError):
        build_code(two_squares)
    hexagon = Graph.from_edges(6, [(i, (i + 1) % 6) for i in range(6)])
    with pytest.raises(NotCubicError):
        build_code(hexagon)
    with pytest.raises(NotBipartiteError):
        build_code(generalized_petersen(5, 2))


def test_parity_check_rows_are_left_class_in_vertex_order(heawood_code):
    g = parse_lcf("[5,-5]^7")
    sides_left = sorted(v for v in range(14) if v % 2 == 0)
    # vertex 0 starts the left class; row i of H lists the neighbours of the
    # i-th left vertex among the sorted right class
    from csg_ldpc.graphs import bipartition

    sides = bipartition(g)
    left = sorted(sides.left)
    right = sorted(sides.right)
    assert left[0] == 0
    col_of = {v: j for j, v in enumerate(right)}
    for i, u in enumerate(left):
        expect = 0
        for v in g.adjacency[u]:
            expect |= 1 << col_of[v]
        assert heawood_code.H.rows[i] == expect
    assert sides_left == left  # LCF graphs alternate colours along the cycle


def test_minimum_distance_matches_enumeration_oracle(heawood_code):
    assert min(codeword_weights(heawood_code.G.rows)) == 4
    pappus = build_code(parse_lcf("[5,7,-7,7,-7,-5]^3"))
    assert minimum_distance(pappus) == min(codeword_weights(pappus.G.rows)) == 6


def test_minimum_distance_matches_column_search(heawood_code):
    assert min_distance_by_column_search(heawood_code.H) == 4
    nauru = build_code(parse_lcf("[5,-9,7,-7,9,-5]^4"))
    assert minimum_distance(nauru) == min_distance_by_column_search(nauru.H) == 6


def test_minimum_distance_is_cached():
    code = build_code(parse_lcf("[5,-5]^7"))
    assert code._distance is None
    minimum_distance(code)
    assert code._distance == 4


def test_enumeration_ceiling():
    with pytest.raises(EnumerationLimitExceeded):
        minimum_distance(build_code(parse_lcf("[5,-5]^7")), ceiling=2)


def test_tanner_graph_is_source_graph(heawood_code):
    tg = tanner_graph(heawood_code.H)
    assert tg.vertex_count == 14
    assert girth(tg) == 6
    assert all(len(a) == 3 for a in tg.adjacency)


def test_duality_flags(heawood_code):
    assert is_self_orthogonal(heawood_code)
    assert not is_lcd(heawood_code)
    assert hull_dimension(heawood_code) == heawood_code.k
    pappus = build_code(parse_lcf("[5,7,-7,7,-7,-5]^3"))
    assert is_lcd(pappus)
    assert not is_self_orthogonal(pappus)
    assert hull_dimension(pappus) == 0
    nauru = build_code(parse_lcf("[5,-9,7,-7,9,-5]^4"))
    assert hull_dimension(nauru) == 2  # neither self-orthogonal nor LCD


def test_even_flag_matches_enumeration(catalog):
    for gid, (g, _) in catalog.items():
        code = build_code(g)
        if not 0 < code.k <= 12:
            continue
        all_even = all(w % 2 == 0 for w in codeword_weights(code.G.rows))
        assert is_even_code(code) == all_even, gid


def test_extend_parity_check_shapes(heawood_code):
    ext = extend_parity_check(heawood_code, 3)
    assert (ext.n, ext.k) == (10, 3)
    assert ext.w_c is None  # mixed column weights 3 and 1
    assert ext.H.rows[0] == heawood_code.H.rows[0] | (1 << 7)
    assert ext.H.rows[4] == heawood_code.H.rows[4]


def test_extend_parity_check_small_l():
    code = build_code(parse_lcf("[5,-5]^7"))
    ext = extend_parity_check(code, 2)
    assert (ext.n, ext.k, minimum_distance(ext)) == (9, 3, 4)


def test_extend_full_length_reaches_dimension_n():
    code = build_code(parse_lcf("[5,-5]^7"))
    ext = extend_parity_check(code, 7)
    assert (ext.n, ext.k) == (14, 7)
    assert ext.w_r == 4
    assert minimum_distance(ext) == 4
    assert min(codeword_weights(ext.G.rows)) == 4


def test_extend_rejects_bad_l(heawood_code):
    with pytest.raises(ValueError):
        extend_parity_check(heawood_code, 0)
    with pytest.raises(ValueError):
        extend_parity_check(heawood_code, 8)


def test_code_from_parity_check_irregular():
    h = BitMatrix.from_dense([[1, 1, 0], [0, 1, 1]])
    code = code_from_parity_check(h)
    assert code.n == 3 and code.k == 1
    assert code.w_c is None and code.w_r == 2
