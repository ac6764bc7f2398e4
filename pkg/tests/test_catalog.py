import numpy as np
import pytest

from permcheck.catalog import (GroupSpec, alternating, build, build_named, cyclic, dihedral, direct_product,
                               parse_element, parse_generators, parse_group_name, quaternion8,
                               survey_corpus, symmetric)
from permcheck.config import Limits
from permcheck.errors import CapExceeded, InputError
from permcheck.perm import Permutation, compose, element_index

from oracles import naive_closure


class TestBuild:
    def test_d12_relation(self):
        g = build(dihedral(12))
        r, s = g.named_generators["r"], g.named_generators["s"]
        assert g.order == 12
        ri, si = element_index(g, r), element_index(g, s)
        assert g.element_order(ri) == 6 and g.element_order(si) == 2
        # r^s = s^-1 r s = r^5, read off the table
        assert g.mul[g.mul[g.inv[si], ri], si] == g.power(ri, 5)

    def test_reflection_fixes_point_one(self):
        s = build(dihedral(10)).named_generators["s"]
        assert s(0) == 0

    def test_trivial(self):
        g = build(cyclic(1))
        assert g.order == 1 and g.elements[0].is_identity()

    def test_a5_against_naive_closure(self):
        g = build(alternating(5))
        assert g.order == 60
        gens = [Permutation.from_cycles([[0, 1, 2]], 5), Permutation.from_cycles([[0, 1, 2, 3, 4]], 5)]
        assert len(naive_closure(gens, 5)) == 60
        assert {e.images for e in g.elements} == naive_closure(gens, 5)

    @pytest.mark.parametrize("spec,order", [(symmetric(4), 24), (alternating(4), 12), (quaternion8(), 8),
                                            (dihedral(4), 4), (cyclic(7), 7),
                                            (direct_product(dihedral(8), cyclic(3)), 24)])
    def test_orders(self, spec, order):
        g = build(spec)
        assert g.order == order == spec.order
        g.check_invariants()

    def test_q8_regular(self):
        g = build(quaternion8())
        assert g.degree == 8
        assert sum(g.element_order(x) == 4 for x in range(8)) == 6
        assert sum(g.element_order(x) == 2 for x in range(8)) == 1
        i, j = (element_index(g, g.named_generators[n]) for n in "ij")
        assert g.mul[i, j] != g.mul[j, i]

    def test_d4_is_klein(self):
        g = build(dihedral(4))
        assert g.is_abelian() and all(g.element_order(x) <= 2 for x in range(4))

    def test_cap(self):
        with pytest.raises(CapExceeded):
            build(symmetric(5), Limits(max_order=100))

    def test_deterministic(self):
        a, b = build(parse_group_name("D12xC2")), build(parse_group_name("D12xC2"))
        assert a.elements == b.elements and np.array_equal(a.mul, b.mul)

    def test_from_file(self, tmp_path):
        f = tmp_path / "s3.txt"
        f.write_text("degree 3\ngen (1 2)\ngen (1 2 3)\n")
        g = build_named(f"file:{f}")
        assert g.order == 6


class TestNames:
    @pytest.mark.parametrize("name,kind,order", [("S3", "symmetric", 6), ("A5", "alternating", 60),
                                                 ("D12", "dihedral", 12), ("C7", "cyclic", 7),
                                                 ("Q8", "quaternion8", 8), ("C2xC2", "direct_product", 4)])
    def test_grammar(self, name, kind, order):
        spec = parse_group_name(name)
        assert spec.kind == kind and spec.order == order and spec.name == name

    def test_file(self):
        spec = parse_group_name("file:/tmp/x.txt")
        assert spec.kind == "file" and spec.path == "/tmp/x.txt"

    @pytest.mark.parametrize("bad", ["Z5", "D7", "D2", "C0", "", "S3xx", "s3"])
    def test_rejects(self, bad):
        with pytest.raises(InputError):
            parse_group_name(bad)

    def test_product_flattens(self):
        p = direct_product(direct_product(cyclic(2), cyclic(2)), cyclic(3))
        assert p.name == "C2xC2xC3" and len(p.factors) == 3


class TestCorpus:
    def test_one(self):
        assert survey_corpus(1) == [cyclic(1)]

    def test_twelve(self):
        names = {s.name for s in survey_corpus(12)}
        expected = {f"C{n}" for n in range(1, 13)} | {f"D{n}" for n in range(4, 13, 2)} | {"A4", "S3", "Q8"}
        assert expected <= names
        assert "S4" not in names and "C2xC2xC2" in names and "C2xC6" in names

    def test_sixty(self):
        names = [s.name for s in survey_corpus(60)]
        assert "A5" in names and "C2xC2xC2xC2" in names
        assert len(names) == len(set(names))

    def test_products_within_bound(self):
        for s in survey_corpus(24):
            assert s.order <= 24

    def test_deterministic(self):
        assert survey_corpus(24) == survey_corpus(24)

    def test_builds(self):
        # up to the default degree cap every corpus group builds
        for s in survey_corpus(32):
            g = build(s)
            assert g.order == s.order
            g.check_invariants()

    def test_invalid(self):
        with pytest.raises(ValueError):
            survey_corpus(0)


class TestElements:
    def test_word(self):
        g = build_named("D12")
        r, s = g.named_generators["r"], g.named_generators["s"]
        assert g.elements[parse_element(g, "(s r)")] == compose(s, r)
        assert g.elements[parse_element(g, "r^2")] == compose(r, r)
        assert g.elements[parse_element(g, "r^-1")] == r.inverse()

    def test_cycles(self):
        g = build_named("S3")
        assert g.elements[parse_element(g, "(1 2)")].images == (1, 0, 2)

    def test_identity(self):
        assert parse_element(build_named("A4"), "()") == 0

    def test_product_suffixes(self):
        g = build_named("D8xC2")
        assert set(g.named_generators) == {"r1", "s1", "g2"}
        assert g.element_order(parse_element(g, "r1 g2")) == 4

    @pytest.mark.parametrize("bad", ["(1 2)", "q", "(1 5)"])
    def test_rejects(self, bad):
        with pytest.raises(InputError):
            parse_element(build_named("A4"), bad)

    def test_semicolons(self):
        g = build_named("S4")
        assert len(parse_generators(g, ["(1 2); (2 3)", "(3 4)"])) == 3
