import pytest

from tauclass.cat import (
    CapacityError,
    Cospan,
    FinCategory,
    FinFunctor,
    build_comma,
    categories_isomorphic,
    compose_functors,
    discrete_category,
    fiber_category,
    induced_fiber_functor,
    parse_cospan_text,
    s_over_category,
    verify_category,
    verify_functor,
)


def one_object_category():
    return discrete_category(["*"])


def walking_arrow():
    """Two objects, one non-identity arrow a -> b."""
    return FinCategory(
        ["a", "b"],
        [("id_a", 0, 0), ("id_b", 1, 1), ("f", 0, 1)],
        [0, 1],
        {
            (0, 0): 0,
            (1, 1): 1,
            (0, 2): 2,
            (2, 1): 2,
        },
    )


def identity_functor(c):
    return FinFunctor(c, c, range(c.n_objects), range(c.n_morphisms), name="id")


def constant_functor(dom, cod, obj):
    return FinFunctor(
        dom,
        cod,
        [obj] * dom.n_objects,
        [cod.identity[obj]] * dom.n_morphisms,
        name="const",
    )


def parallel_pair():
    """Two objects with two parallel non-identity arrows a -> b."""
    return FinCategory(
        ["a", "b"],
        [("id_a", 0, 0), ("id_b", 1, 1), ("u", 0, 1), ("v", 0, 1)],
        [0, 1],
        {
            (0, 0): 0,
            (1, 1): 1,
            (0, 2): 2,
            (2, 1): 2,
            (0, 3): 3,
            (3, 1): 3,
        },
    )


class TestVerify:
    def test_valid_categories(self):
        assert verify_category(one_object_category()) == []
        assert verify_category(walking_arrow()) == []
        assert verify_category(parallel_pair()) == []

    def test_broken_associativity_detected(self):
        # monoid on {e, s, t} with s.s = t and t absorbing, then corrupt
        # t.t so that (s.t).t != s.(t.t)
        table = {(0, 0): 0, (0, 1): 1, (1, 0): 1, (0, 2): 2, (2, 0): 2,
                 (1, 1): 2, (1, 2): 2, (2, 1): 2, (2, 2): 2}
        c = FinCategory(["*"], [("e", 0, 0), ("s", 0, 0), ("t", 0, 0)], [0], table)
        assert verify_category(c) == []
        c.composition[(2, 2)] = 1
        bad = verify_category(c)
        assert any("associativity" in msg and "(s, t, t)" in msg for msg in bad)

    def test_missing_composite_detected(self):
        c = walking_arrow()
        del c.composition[(0, 2)]
        bad = verify_category(c)
        assert any("missing composite" in msg or "identity" in msg for msg in bad)

    def test_functor_dropping_identity_detected(self):
        c = walking_arrow()
        fun = identity_functor(c)
        broken = FinFunctor(c, c, fun.object_map, [0, 0, 2])
        bad = verify_functor(broken)
        assert any("identity of b" in msg for msg in bad)

    def test_valid_functor(self):
        assert verify_functor(identity_functor(walking_arrow())) == []

    def test_capacity_cap(self):
        with pytest.raises(CapacityError):
            discrete_category([f"x{i}" for i in range(100)])


def discrete_cospan(n_source, n_target, base):
    cs = discrete_category([f"v{i}" for i in range(n_source)])
    ct = discrete_category([f"x{i}" for i in range(n_target)])
    s = constant_functor(cs, base, 0)
    t = constant_functor(ct, base, 0)
    return Cospan(cs, base, ct, s, t)


class TestComma:
    def test_one_object_one_morphism(self):
        base = one_object_category()
        cospan = discrete_cospan(1, 1, base)
        comma = build_comma(cospan)
        assert comma.cat.n_objects == 1
        assert comma.cat.n_morphisms == 1
        assert verify_category(comma.cat) == []

    def test_discrete_object_count_is_hom_sum(self):
        # base: one object with an extra idempotent endomap s (s.s = s)
        base = FinCategory(
            ["*"],
            [("e", 0, 0), ("s", 0, 0)],
            [0],
            {(0, 0): 0, (0, 1): 1, (1, 0): 1, (1, 1): 1},
        )
        assert verify_category(base) == []
        cospan = discrete_cospan(2, 3, base)
        comma = build_comma(cospan)
        expected = sum(
            len(base.hom(0, 0)) for _ in range(2) for _ in range(3)
        )
        assert comma.cat.n_objects == expected
        assert verify_category(comma.cat) == []
        assert verify_functor(comma.pi_s) == []
        assert verify_functor(comma.pi_t) == []

    def test_identity_cospan_gives_arrow_category(self):
        c = walking_arrow()
        cospan = Cospan(c, c, c, identity_functor(c), identity_functor(c))
        comma = build_comma(cospan)
        # objects of the arrow category = morphisms of the base
        assert comma.cat.n_objects == c.n_morphisms
        assert verify_category(comma.cat) == []
        assert verify_functor(comma.pi_s) == []
        assert verify_functor(comma.pi_t) == []

    def test_projections_are_functors_on_parallel_pair(self):
        c = parallel_pair()
        cospan = Cospan(c, c, c, identity_functor(c), identity_functor(c))
        comma = build_comma(cospan)
        assert verify_category(comma.cat) == []
        assert verify_functor(comma.pi_s) == []
        assert verify_functor(comma.pi_t) == []


class TestFiber:
    def test_identity_functor_fiber(self):
        c = walking_arrow()
        fib = fiber_category(identity_functor(c), 1)
        assert fib.cat.n_objects == 1
        assert fib.cat.n_morphisms == 1
        assert verify_category(fib.cat) == []

    def test_constant_functor_fiber_is_whole_domain(self):
        c = parallel_pair()
        target = one_object_category()
        fib = fiber_category(constant_functor(c, target, 0), 0)
        assert fib.cat.n_objects == c.n_objects
        assert fib.cat.n_morphisms == c.n_morphisms
        assert categories_isomorphic(fib.cat, c)

    def test_unknown_object_rejected(self):
        c = walking_arrow()
        with pytest.raises(ValueError):
            fiber_category(identity_functor(c), 5)

    @pytest.mark.parametrize("x", [0, 1])
    def test_fiber_of_pi_t_is_s_over_category(self, x):
        c = parallel_pair()
        cospan = Cospan(c, c, c, identity_functor(c), identity_functor(c))
        comma = build_comma(cospan)
        fib = fiber_category(comma.pi_t, x)
        direct = s_over_category(cospan, x)
        assert verify_category(direct) == []
        assert categories_isomorphic(fib.cat, direct)


class TestInducedFunctor:
    def make(self):
        c = walking_arrow()
        cospan = Cospan(c, c, c, identity_functor(c), identity_functor(c))
        return cospan, build_comma(cospan)

    def test_identity_morphism_induces_identity(self):
        cospan, comma = self.make()
        ct = cospan.target_cat
        fun = induced_fiber_functor(comma, ct.identity[0])
        assert fun.object_map == tuple(range(fun.dom.n_objects))
        assert fun.morphism_map == tuple(range(fun.dom.n_morphisms))
        assert verify_functor(fun) == []

    def test_induced_respects_composition(self):
        # chain category 0 -> 1 -> 2 with composite
        chain = FinCategory(
            ["0", "1", "2"],
            [
                ("id_0", 0, 0),
                ("id_1", 1, 1),
                ("id_2", 2, 2),
                ("f", 0, 1),
                ("g", 1, 2),
                ("gf", 0, 2),
            ],
            [0, 1, 2],
            {
                (0, 0): 0,
                (1, 1): 1,
                (2, 2): 2,
                (0, 3): 3,
                (3, 1): 3,
                (1, 4): 4,
                (4, 2): 4,
                (0, 5): 5,
                (5, 2): 5,
                (3, 4): 5,
            },
        )
        assert verify_category(chain) == []
        ident = identity_functor(chain)
        cospan = Cospan(chain, chain, chain, ident, ident)
        comma = build_comma(cospan)
        f, g, gf = 3, 4, 5
        first = induced_fiber_functor(comma, f)
        second = induced_fiber_functor(comma, g)
        both = induced_fiber_functor(comma, gf)
        composed = compose_functors(first, second)
        assert composed.object_map == both.object_map
        assert composed.morphism_map == both.morphism_map
        for fun in (first, second, both):
            assert verify_functor(fun) == []

    def test_collapse_to_unique_triple(self):
        # discrete source/target over the one-object base: each fiber has
        # exactly one triple per source object; the induced functor is a
        # bijection on those triples
        base = one_object_category()
        cospan = discrete_cospan(2, 2, base)
        comma = build_comma(cospan)
        fun = induced_fiber_functor(comma, cospan.target_cat.identity[0])
        assert fun.dom.n_objects == 2
        assert verify_functor(fun) == []


class TestIsomorphismCheck:
    def test_distinguishes_parallel_pair_from_chain(self):
        c1 = parallel_pair()
        c2 = FinCategory(
            ["a", "b"],
            [("id_a", 0, 0), ("id_b", 1, 1), ("u", 0, 1), ("w", 1, 1)],
            [0, 1],
            {
                (0, 0): 0,
                (1, 1): 1,
                (0, 2): 2,
                (2, 1): 2,
                (2, 3): 2,
                (1, 3): 3,
                (3, 1): 3,
                (3, 3): 1,
            },
        )
        assert not categories_isomorphic(c1, c2)

    def test_relabeled_category_is_isomorphic(self):
        c1 = walking_arrow()
        c2 = FinCategory(
            ["y", "x"],
            [("id_y", 0, 0), ("arrow", 1, 0), ("id_x", 1, 1)],
            [0, 2],
            {
                (0, 0): 0,
                (2, 2): 2,
                (2, 1): 1,
                (1, 0): 1,
            },
        )
        assert verify_category(c2) == []
        assert categories_isomorphic(c1, c2)


SAMPLE_COSPAN = """
# walking arrow mapped into itself, discrete target
category source
objects a b
arrow f : a -> b
compose id_b . f = f   # redundant but allowed
end
category base
objects a b
arrow f : a -> b
end
category target
objects x
end
functor S : source -> base
obj a = a
obj b = b
arrow f = f
end
functor T : target -> base
obj x = b
end
"""


class TestCospanParsing:
    def test_sample_parses_and_builds(self):
        cospan = parse_cospan_text(SAMPLE_COSPAN)
        assert verify_category(cospan.source_cat) == []
        assert verify_functor(cospan.s) == []
        comma = build_comma(cospan)
        # triples: (a, x, f: a->b) and (b, x, id_b)
        assert comma.cat.n_objects == 2
        assert verify_category(comma.cat) == []

    def test_error_lines(self):
        with pytest.raises(ValueError, match="line 2"):
            parse_cospan_text("category source\narrow oops\nend")

    def test_missing_pieces(self):
        with pytest.raises(ValueError, match="missing category"):
            parse_cospan_text("category source\nobjects a\nend")
