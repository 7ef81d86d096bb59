import pytest
from hypothesis import given
from hypothesis import strategies as st

from treelabel import (
    RootedTree,
    TreeFormatError,
    oracle_is_ancestor,
    parse_parent_array,
    serialize_parent_array,
)


def random_parent_trees(max_size=40):
    """Trees with parent[i] < i, then relabeled by a random permutation so
    parent ids are not always smaller than child ids."""

    @st.composite
    def build(draw):
        n = draw(st.integers(1, max_size))
        parent = [-1] + [draw(st.integers(0, i - 1)) for i in range(1, n)]
        perm = draw(st.permutations(range(n)))
        relabeled = [0] * n
        for v, p in enumerate(parent):
            relabeled[perm[v]] = -1 if p == -1 else perm[p]
        return RootedTree.from_parents(relabeled)

    return build()


class TestParse:
    def test_e5(self, e5):
        assert e5.parent == (-1, 0, 0, 1, 1)
        assert e5.root == 0
        assert e5.children == ((1, 2), (3, 4), (), (), ())

    def test_single_node(self):
        t = parse_parent_array("1\n-1")
        assert t.node_count == 1
        assert t.root == 0

    def test_path_of_three(self):
        t = parse_parent_array("3\n-1 0 1")
        assert t.parent == (-1, 0, 1)

    def test_cycle_detected(self):
        with pytest.raises(TreeFormatError, match="cycle"):
            parse_parent_array("3\n-1 2 1")

    def test_malformed_integer(self):
        with pytest.raises(TreeFormatError, match="position 1"):
            parse_parent_array("3\n-1 x 1")

    def test_wrong_count(self):
        with pytest.raises(TreeFormatError, match="expected 4"):
            parse_parent_array("4\n-1 0 0")

    def test_no_root(self):
        with pytest.raises(TreeFormatError, match="no root"):
            parse_parent_array("2\n0 0")

    def test_multiple_roots(self):
        with pytest.raises(TreeFormatError, match="multiple roots"):
            parse_parent_array("2\n-1 -1")

    def test_parent_out_of_range(self):
        with pytest.raises(TreeFormatError, match="out of range at position 1"):
            parse_parent_array("2\n-1 5")


class TestSerialize:
    @pytest.mark.parametrize(
        "text", ["5\n-1 0 0 1 1", "1\n-1", "3\n-1 0 1"]
    )
    def test_round_trip(self, text):
        assert serialize_parent_array(parse_parent_array(text)) == text

    @given(random_parent_trees())
    def test_round_trip_random(self, tree):
        assert parse_parent_array(serialize_parent_array(tree)) == tree


class TestOracle:
    def test_root_is_ancestor(self, e5):
        assert oracle_is_ancestor(e5, 0, 3)

    def test_never_own_ancestor(self, e5):
        assert not oracle_is_ancestor(e5, 3, 3)

    def test_sibling_subtrees(self, e5):
        assert not oracle_is_ancestor(e5, 2, 4)

    @given(random_parent_trees())
    def test_antisymmetric(self, tree):
        n = tree.node_count
        for u in range(n):
            for v in range(n):
                assert not (
                    oracle_is_ancestor(tree, u, v) and oracle_is_ancestor(tree, v, u)
                )

    @given(random_parent_trees())
    def test_parent_array_degree_sum(self, tree):
        total = sum(1 + len(tree.children[v]) for v in range(tree.node_count))
        assert total == 2 * tree.node_count - 1
