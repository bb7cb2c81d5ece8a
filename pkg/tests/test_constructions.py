import pytest

from multab.bigraph import BipartiteMultigraph, induced_edge_count
from multab.certify.constructions import (
    common_type_entries,
    degree_multiples_entries,
    sparse_chain_entries,
    sparse_types_entries,
    trivial_entries,
    two_class_entries,
    warm_up_entries,
)
from multab.errors import InputError
from multab.generators import (
    complete_bipartite,
    cycle_graph,
    matching_graph,
    path_graph,
    star_graph,
    star_union,
)
from multab.profiles import ScaleProfile

PROFILE = ScaleProfile()


def entry_sizes(entries):
    return sorted(e.size for e in entries)


def check_witnesses(g, entries):
    assert len({e.size for e in entries}) == len(entries)
    for e in entries:
        assert induced_edge_count(g, e.xs, e.ys) == e.size


def test_trivial_star():
    g = star_graph(5)
    entries = trivial_entries(g)
    assert entry_sizes(entries) == [0, 1, 2, 3, 4, 5]
    check_witnesses(g, entries)


def test_trivial_matching():
    g = matching_graph(4)
    entries = trivial_entries(g)
    assert entry_sizes(entries) == [0, 1, 2, 3, 4]
    check_witnesses(g, entries)


def test_trivial_k33_takes_star():
    entries = trivial_entries(complete_bipartite(3, 3))
    assert entry_sizes(entries) == [0, 1, 2, 3]


def test_trivial_empty_graph():
    entries = trivial_entries(BipartiteMultigraph(2, 3, {}))
    assert entry_sizes(entries) == [0]


def test_trivial_multigraph_prefixes():
    g = BipartiteMultigraph(1, 3, {(0, 0): 2, (0, 1): 3, (0, 2): 1})
    entries = trivial_entries(g)
    assert entry_sizes(entries) == [0, 2, 5, 6]
    check_witnesses(g, entries)


def test_warm_up_k22():
    entries = warm_up_entries(complete_bipartite(2, 2))
    assert entry_sizes(entries) == [0, 1, 2]
    check_witnesses(complete_bipartite(2, 2), entries)


def test_warm_up_eight_cycle():
    g = cycle_graph(8)
    entries = warm_up_entries(g)
    assert entry_sizes(entries) == [0, 1, 2, 3, 4, 5, 6]
    check_witnesses(g, entries)


def test_warm_up_rejects_irregular():
    with pytest.raises(InputError):
        warm_up_entries(path_graph(4))
    with pytest.raises(InputError):
        warm_up_entries(BipartiteMultigraph(1, 1, {(0, 0): 2}))


def test_degree_multiples():
    g = complete_bipartite(4, 3)
    entries = degree_multiples_entries(g)
    assert entry_sizes(entries) == [0, 3, 6, 9, 12]
    check_witnesses(g, entries)


def test_two_class_main_example():
    # half-regular d=5; y0 has classes of multiplicity 1 and 2, two members each
    h = BipartiteMultigraph(
        4,
        5,
        {
            (0, 0): 1, (1, 0): 1, (2, 0): 2, (3, 0): 2,
            (0, 1): 4, (1, 2): 4, (2, 3): 3, (3, 4): 3,
        },
    )
    entries = two_class_entries(h, 0, 1, 2)
    assert entry_sizes(entries) == [0, 3, 4, 6, 7, 8, 10, 11, 14]
    check_witnesses(h, entries)


def test_two_class_with_zero_class():
    # d=3, a=0, b=1, one vertex in each class: sizes {0,2,3,5}
    h = BipartiteMultigraph(2, 3, {(0, 0): 1, (0, 1): 2, (1, 2): 3})
    entries = two_class_entries(h, 0, 0, 1)
    assert entry_sizes(entries) == [0, 2, 3, 5]
    check_witnesses(h, entries)


def test_two_class_preconditions():
    h = BipartiteMultigraph(2, 3, {(0, 0): 1, (0, 1): 2, (1, 2): 3})
    with pytest.raises(InputError):
        two_class_entries(h, 0, 0, 2)  # empty class
    flat = BipartiteMultigraph(2, 1, {(0, 0): 2, (1, 0): 2})
    with pytest.raises(InputError):
        two_class_entries(flat, 0, 0, 2)  # d <= b


def test_sparse_chain_matching():
    entries = sparse_chain_entries(matching_graph(4), 4, 1)
    assert entry_sizes(entries) == [1, 2, 3, 4]


def test_sparse_chain_star_branch():
    # leaves on the X side: one Y-hub with a huge neighborhood
    g = star_graph(6).transpose()
    entries = sparse_chain_entries(g, 6, 1)
    assert entry_sizes(entries) == [1, 2, 3, 4, 5, 6]


def test_sparse_chain_l_one():
    entries = sparse_chain_entries(matching_graph(3), 1, 1)
    assert entry_sizes(entries) == [1]


def test_sparse_chain_guarantee_on_multigraph():
    # two parallel classes: multiplicity cap 2, l = 4 -> at least one size
    g = BipartiteMultigraph(4, 4, {(i, i): 2 for i in range(4)})
    entries = sparse_chain_entries(g, 4, 2)
    sizes = entry_sizes(entries)
    assert len(sizes) >= -(-4 // 4)  # ceil(l / 2r)
    assert all(1 <= s <= 4 for s in sizes)


def test_sparse_chain_validation():
    with pytest.raises(InputError):
        sparse_chain_entries(BipartiteMultigraph(2, 1, {(0, 0): 1}), 1, 1)
    with pytest.raises(InputError):
        sparse_chain_entries(matching_graph(2), 5, 1)
    with pytest.raises(InputError):
        sparse_chain_entries(BipartiteMultigraph(1, 1, {(0, 0): 3}), 1, 2)


def test_type_zero_star_union():
    g = star_union(16, 4)
    entries, diag = sparse_types_entries(g, PROFILE)
    assert entries is not None, diag
    assert len(entries) == 41  # (k - s + 1) * chain + zero entry, one overlap
    check_witnesses(g, entries)
    assert diag["dropped_mod_d"] == 0


def test_type_zero_absent_when_typed_nonzero():
    h = complete_bipartite(8, 8)
    entries, diag = sparse_types_entries(h, PROFILE)
    assert entries is None
    assert "nonzero-type" in diag["reason"]


def test_type_zero_window_unreachable():
    # one type-0 vertex whose neighborhood overshoots half of X
    k = 12
    mult = {(x, 0): 1 for x in range(k)}          # y0 adjacent to everyone
    for x in range(k):
        mult[(x, 1 + x)] = 1                       # private leaves fix degrees
    g = BipartiteMultigraph(k, k + 1, mult)
    entries, diag = sparse_types_entries(g, PROFILE)
    assert entries is None
    assert diag["reason"].startswith("type-0 neighborhood union")


def test_common_type_product_grid():
    k, ny = 10, 8
    h = BipartiteMultigraph(k, ny, {(x, y): 2 for x in range(k) for y in range(ny)})
    tag, entries, diag = common_type_entries(h, PROFILE)
    assert tag == "product-grid"
    d, m = h.deg_x(0), h.m
    q = PROFILE.deletion_count(d, m)
    expected = {0} | {(d - 2 * i) * j for i in range(1, q + 1) for j in range(1, k + 1)}
    assert {e.size for e in entries} == expected
    check_witnesses(h, entries)


def _cumulative_split_instance():
    k = 30
    mult = {}
    ny = 0

    def add_col(col):
        nonlocal ny
        for x, w in col.items():
            mult[(x, ny)] = w
        ny += 1

    for _ in range(3):
        add_col({x: 1 for x in range(k)})
    for dev in (26, 27, 28, 29):
        col = {x: 1 for x in range(k)}
        col[dev] = 2
        add_col(col)
    for dev in range(9):
        col = {x: 1 for x in range(k)}
        col[dev] = 2
        add_col(col)
    deviators = set(range(9)) | {26, 27, 28, 29}
    add_col({x: (1 if x in deviators else 2) for x in range(k)})
    for _ in range(14):
        add_col({x: 38 for x in range(k)})
    return BipartiteMultigraph(k, ny, mult)


def test_common_type_gcd_shift():
    h = _cumulative_split_instance()
    assert h.is_half_regular() and h.deg_x(0) == 550
    tag, entries, diag = common_type_entries(h, PROFILE)
    assert tag == "gcd-shift", diag
    assert diag["split_at"] == 9
    check_witnesses(h, entries)
    # bucketed shift minimizes the pairwise gcd exactly (recheck in module)
    assert diag["bucket"] == 9 and diag["shift"] == 0
    assert len(entries) > 100


def test_common_type_absent_without_common_type():
    g = star_union(16, 4)  # all Y-vertices are type 0
    tag, entries, diag = common_type_entries(g, PROFILE)
    assert entries is None and tag is None
