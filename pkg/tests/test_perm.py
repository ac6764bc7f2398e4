import numpy as np
import pytest
from hypothesis import given, strategies as st

from permcheck.config import Limits
from permcheck.errors import CapExceeded, DegreeMismatch, InputError, NotNormal, NotASubgroup
from permcheck.lattice import all_subgroups, cyclic_subgroup
from permcheck.perm import (Permutation, closure, compose, element_index, parse_cycles, quotient,
                            read_group_file, subgroup_table)

from oracles import naive_closure

ident2 = Permutation.identity(2)
swap = Permutation((1, 0))
three_cycle = Permutation((1, 2, 0))


@st.composite
def perms(draw, degree=None):
    d = degree or draw(st.integers(1, 7))
    return Permutation(tuple(draw(st.permutations(range(d)))))


class TestPermutation:
    def test_compose_involution(self):
        assert compose(swap, swap) == ident2

    def test_compose_identity(self):
        p = Permutation((2, 0, 3, 1))
        assert compose(Permutation.identity(4), p) == p

    def test_compose_three_cycle_squared(self):
        # (0 1 2)^2: 0 -> 1 -> 2, 1 -> 2 -> 0, 2 -> 0 -> 1
        assert compose(three_cycle, three_cycle) == Permutation((2, 0, 1))
        assert compose(three_cycle, three_cycle).cycles() == [(0, 2, 1)]

    def test_compose_order_of_application(self):
        a = Permutation.from_cycles([[0, 1]], 3)
        b = Permutation.from_cycles([[1, 2]], 3)
        # a(b(1)) = a(2) = 2
        assert compose(a, b)(1) == 2

    def test_degree_mismatch(self):
        with pytest.raises(DegreeMismatch):
            compose(swap, three_cycle)

    @pytest.mark.parametrize("images", [(0, 0), (1, 2), ()])
    def test_rejects_non_bijection(self, images):
        with pytest.raises(ValueError):
            Permutation(images)

    @given(perms(5), perms(5), perms(5))
    def test_associative(self, a, b, c):
        assert compose(compose(a, b), c) == compose(a, compose(b, c))

    @given(perms())
    def test_inverse(self, p):
        assert compose(p, p.inverse()).is_identity()
        assert compose(p.inverse(), p).is_identity()

    @given(perms())
    def test_cycle_notation_round_trip(self, p):
        assert parse_cycles(p.cycle_notation(), p.degree) == p


class TestParseCycles:
    def test_one_based(self):
        assert parse_cycles("(1 2)(3 4)", 4).images == (1, 0, 3, 2)

    def test_comma_separated(self):
        assert parse_cycles("(1,2,3)", 3) == Permutation((1, 2, 0))

    def test_identity(self):
        assert parse_cycles("()", 3).is_identity()

    @pytest.mark.parametrize("bad", ["(1 1 2)", "(1 2)(2 3)", "(0 1)", "(1 5)", "1 2", "(a b)"])
    def test_rejects(self, bad):
        with pytest.raises(InputError):
            parse_cycles(bad, 4)


class TestClosure:
    def test_s3(self):
        g = closure([Permutation.from_cycles([[0, 1]], 3), Permutation.from_cycles([[0, 1, 2]], 3)])
        assert g.order == 6

    def test_trivial(self):
        assert closure([Permutation.identity(3)]).order == 1

    def test_d8(self):
        r = Permutation.from_cycles([[0, 1, 2, 3]], 4)
        s = Permutation.from_cycles([[1, 3]], 4)
        g = closure([r, s])
        assert g.order == 8
        assert {e.images for e in g.elements} == naive_closure([r, s], 4)

    def test_identity_first_and_bfs_order(self):
        a = Permutation.from_cycles([[0, 1]], 3)
        b = Permutation.from_cycles([[0, 1, 2]], 3)
        g = closure([a, b])
        assert g.elements[0].is_identity()
        assert g.elements[1] == a and g.elements[2] == b
        assert g.generator_indices == (1, 2)

    def test_mul_matches_compose(self, grp):
        g = grp("D12")
        for i in range(g.order):
            for j in range(g.order):
                assert g.elements[g.mul[i, j]] == compose(g.elements[i], g.elements[j])

    def test_order_cap(self):
        gens = [Permutation.from_cycles([[0, 1]], 6), Permutation.from_cycles([list(range(6))], 6)]
        with pytest.raises(CapExceeded):
            closure(gens, Limits(max_order=100))

    def test_degree_cap(self):
        with pytest.raises(CapExceeded):
            closure([Permutation.identity(40)])

    def test_degree_mismatch(self):
        with pytest.raises(DegreeMismatch):
            closure([swap, three_cycle])

    def test_deterministic(self):
        gens = [Permutation.from_cycles([[0, 1, 2, 3, 4]], 5), Permutation.from_cycles([[0, 1, 2]], 5)]
        a, b = closure(gens), closure(gens)
        assert a.elements == b.elements
        assert np.array_equal(a.mul, b.mul)

    @pytest.mark.parametrize("name", ["C1", "S3", "D8", "D12", "A4", "Q8", "S4", "A5", "C2xD8"])
    def test_invariants(self, grp, name):
        grp(name).check_invariants()

    def test_sampled_associativity_path(self):
        g = closure([Permutation.from_cycles([[0, 1]], 5), Permutation.from_cycles([list(range(5))], 5)])
        assert g.order == 120
        g.check_invariants()

    @given(st.lists(perms(5), min_size=1, max_size=3))
    def test_closure_idempotent(self, gens):
        g = closure(gens)
        again = closure(list(g.elements))
        assert set(again.elements) == set(g.elements)
        assert {e.images for e in g.elements} == naive_closure(gens, 5)

    @given(st.lists(perms(4), min_size=1, max_size=3))
    def test_latin_square_and_inverses(self, gens):
        g = closure(gens)
        full = np.arange(g.order)
        assert all(np.array_equal(np.sort(row), full) for row in g.mul)
        assert np.array_equal(g.inv[g.inv], full)


class TestElementIndex:
    def test_identity(self, grp):
        assert element_index(grp("S3"), Permutation.identity(3)) == 0

    def test_transposition(self, grp):
        g = grp("S3")
        i = element_index(g, Permutation.from_cycles([[0, 1]], 3))
        assert g.elements[i] == Permutation.from_cycles([[0, 1]], 3)

    def test_not_found(self, grp):
        assert element_index(grp("A4"), Permutation.from_cycles([[0, 1]], 4)) is None

    def test_degree_mismatch(self, grp):
        with pytest.raises(DegreeMismatch):
            element_index(grp("S3"), Permutation.identity(4))


class TestQuotient:
    def test_s3_by_a3(self, grp):
        g = grp("S3")
        a3 = [s for s in all_subgroups(g) if s.size == 3][0]
        qm = quotient(g, a3)
        assert qm.quotient.order == 2
        # brute-force coset partition
        for i in range(6):
            for j in range(6):
                same = int(g.mul[i, g.inv[j]]) in a3
                assert (qm.coset_of[i] == qm.coset_of[j]) == same

    def test_trivial_kernel(self, grp):
        g = grp("D8")
        qm = quotient(g, g.identity_set)
        q = qm.quotient
        assert q.order == g.order
        c = qm.coset_of
        for i in range(g.order):
            for j in range(g.order):
                assert q.mul[c[i], c[j]] == c[g.mul[i, j]]

    def test_d12_by_r2(self, grp):
        g = grp("D12")
        r = element_index(g, g.named_generators["r"])
        qm = quotient(g, cyclic_subgroup(g, g.power(r, 2)))
        assert qm.quotient.order == 4
        assert qm.quotient.is_abelian()

    def test_invariants(self, grp):
        g = grp("A4")
        lat = all_subgroups(g)
        for n, normal in zip(lat, lat.normal_flags):
            if not normal:
                continue
            qm = quotient(g, n)
            assert qm.coset_of[0] == 0
            assert qm.quotient.order * n.size == g.order
            qm.quotient.check_invariants()
            assert qm.preimage(qm.image(n)).members == n.members

    def test_not_normal(self, grp):
        g = grp("S3")
        with pytest.raises(NotNormal):
            quotient(g, cyclic_subgroup(g, 1))

    def test_not_subgroup(self, grp):
        from permcheck.sets import SubgroupSet
        g = grp("S3")
        with pytest.raises(NotASubgroup):
            quotient(g, SubgroupSet(g, 0b111))


def test_subgroup_table(grp):
    g = grp("A4")
    p = [s for s in all_subgroups(g) if s.size == 4][0]
    t = subgroup_table(g, p)
    assert t.order == 4
    t.check_invariants()
    assert [g.elements[i] for i in t.embedding] == list(t.elements)


class TestGroupFile:
    def test_parse(self, tmp_path):
        f = tmp_path / "a4.txt"
        f.write_text("# A4\ndegree 4\n\ngen (1 2)(3 4)\ngen (1 2 3)  # three-cycle\n")
        assert read_group_file(f).order == 12

    @pytest.mark.parametrize("text", ["gen (1 2)\n", "degree 3\ngen (1 1)\n", "degree 3\nfoo (1 2)\n",
                                      "degree x\n", "degree 3\ngen (1 2)(2 3)\n"])
    def test_rejects(self, tmp_path, text):
        f = tmp_path / "bad.txt"
        f.write_text(text)
        with pytest.raises(InputError):
            read_group_file(f)
