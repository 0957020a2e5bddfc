"""Additive invariants and the transformations they induce on relative
Grothendieck groups, with a machine-checkable diagram harness.

An invariant assigns to every space a value additive over disjoint union:
a characteristic homology class, the constant function 1, or the Euler
characteristic.  Its transformation sends a generator (V, X, h) to the
pushforward along h of the invariant of V, extended linearly.

The check operations compare both sides of the structural identities
(naturality, cross-product compatibility, smooth-pullback Riemann-Roch,
the comparison through constructible functions) with exact equality and
return reports instead of raising.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from itertools import combinations_with_replacement

from .constr import ConstrFn, const_transform, cross_constr, euler_integral
from .geom import (
    HClass,
    ToyMorphism,
    ToySpace,
    cap_fundamental,
    cross,
    enumerate_projections,
    euler_char,
    projective,
    pullback,
    pushforward,
    relative_tangent,
    tangent_chern,
    to_point,
)
from .relk import KElement, Triple, cross_k, distinguished, k_class, pullback_k, pushforward_k
from .series import (
    RATIONAL,
    ClassSpec,
    GradedPoly,
    VirtualBundle,
    YPoly,
    chern_spec,
    format_scalar,
    l_spec,
    multiplicative_class,
    todd_spec,
    ty_spec,
    virtual_class,
)

__all__ = [
    "Invariant",
    "fundamental_invariant",
    "class_invariant",
    "indicator_invariant",
    "euler_invariant",
    "eval_invariant",
    "tau",
    "CheckReport",
    "check_naturality",
    "check_multiplicativity",
    "check_verdier_rr",
    "check_const_diagram",
    "chi_y_genus",
    "virtual_in_ambient",
    "connected_dims",
    "corpus_spaces",
    "random_element",
    "random_morphism",
    "run_suite",
    "SUITE_NAMES",
]

KIND_FUNDAMENTAL = "fundamental"
KIND_CLASS = "class"
KIND_INDICATOR = "indicator"
KIND_EULER = "euler"

VALUE_HOMOLOGY = "homology"
VALUE_FUNCTION = "function"
VALUE_INTEGER = "integer"


@dataclass(frozen=True)
class Invariant:
    """Additive invariant of spaces.

    ``multiplicative`` records compatibility with cross products; all the
    built-in kinds have it, but a deliberately broken invariant can be
    constructed for testing the rejection path.
    """

    kind: str
    spec: ClassSpec | None = None
    multiplicative: bool = True

    def __post_init__(self):
        if self.kind == KIND_CLASS and self.spec is None:
            raise ValueError("class invariants need a ClassSpec")

    @property
    def name(self) -> str:
        if self.kind == KIND_CLASS:
            return f"class[{self.spec.name}]"
        return self.kind

    @property
    def value_kind(self) -> str:
        if self.kind in (KIND_FUNDAMENTAL, KIND_CLASS):
            return VALUE_HOMOLOGY
        if self.kind == KIND_INDICATOR:
            return VALUE_FUNCTION
        return VALUE_INTEGER

    @property
    def ring(self) -> str:
        return self.spec.ring if self.kind == KIND_CLASS else RATIONAL


def fundamental_invariant() -> Invariant:
    return Invariant(KIND_FUNDAMENTAL)


def class_invariant(spec: ClassSpec) -> Invariant:
    return Invariant(KIND_CLASS, spec)


def indicator_invariant() -> Invariant:
    return Invariant(KIND_INDICATOR)


def euler_invariant() -> Invariant:
    return Invariant(KIND_EULER)


@lru_cache(maxsize=None)
def _tangent(space: ToySpace):
    return tangent_chern(space)


@lru_cache(maxsize=None)
def _cached_class(spec: ClassSpec, poly: GradedPoly, rank: int) -> GradedPoly:
    return multiplicative_class(spec, poly, rank)


@lru_cache(maxsize=None)
def eval_invariant(inv: Invariant, space: ToySpace):
    """Value of the invariant on a space.

    Characteristic classes are evaluated on the tangent bundle and capped
    with the fundamental class (a re-grading here)."""
    if inv.kind == KIND_FUNDAMENTAL:
        return cap_fundamental(HClass.unit(space, RATIONAL))
    if inv.kind == KIND_CLASS:
        tangent = _tangent(space)
        polys = tuple(
            _cached_class(inv.spec, poly, rank)
            for poly, rank in zip(tangent.polys, tangent.ranks)
        )
        return cap_fundamental(HClass(space, inv.spec.ring, polys))
    if inv.kind == KIND_INDICATOR:
        return ConstrFn.ones(space)
    if inv.kind == KIND_EULER:
        return euler_char(space)
    raise ValueError(f"unknown invariant kind {inv.kind!r}")


def _zero_value(inv: Invariant, base: ToySpace):
    if inv.value_kind == VALUE_HOMOLOGY:
        return HClass.zero(base, inv.ring)
    if inv.value_kind == VALUE_FUNCTION:
        return ConstrFn.zero(base)
    return 0


def _push_value(f: ToyMorphism, value):
    if isinstance(value, HClass):
        return pushforward(f, value)
    if isinstance(value, ConstrFn):
        from .constr import push_constr

        return push_constr(f, value)
    return value  # integers: the target group is constant


def _cross_value(a, b):
    if isinstance(a, HClass):
        return cross(a, b)
    if isinstance(a, ConstrFn):
        return cross_constr(a, b)
    return a * b


def _scale_value(value, n: int):
    if isinstance(value, (HClass, ConstrFn)):
        return value.scale(n)
    return value * n


def render_value(value) -> str:
    if isinstance(value, (HClass, ConstrFn)):
        return value.render()
    if isinstance(value, (YPoly, Fraction, int)):
        return format_scalar(value)
    return str(value)


def render_morphism(f: ToyMorphism) -> str:
    legs = "; ".join(f"c{i}->c{j}{list(a)}" for i, (j, a) in enumerate(f.legs))
    return f"{f.source} -> {f.target} [{legs or 'empty'}]"


def tau(inv: Invariant, element: KElement):
    """The transformation: generators (V, X, h) map to h_*(invariant(V)),
    extended linearly."""
    acc = _zero_value(inv, element.base)
    for key, coeff in element.terms.items():
        triple = key.representative(element.base)
        value = eval_invariant(inv, triple.space)
        acc = _add_values(acc, _scale_value(_push_value(triple.arrow, value), coeff))
    return acc


def _add_values(a, b):
    if isinstance(a, (HClass, ConstrFn)):
        return a + b
    return a + b


@dataclass
class CheckReport:
    """Outcome of one exact identity check."""

    check: str
    inputs: dict = field(default_factory=dict)
    left: str = ""
    right: str = ""
    passed: bool = False
    difference: str | None = None

    def to_json_dict(self) -> dict:
        return {
            "check": self.check,
            "inputs": {k: str(v) for k, v in self.inputs.items()},
            "left": self.left,
            "right": self.right,
            "passed": self.passed,
            "difference": self.difference,
        }


def _report(check: str, inputs: dict, left, right) -> CheckReport:
    passed = left == right
    difference = None
    if not passed:
        try:
            difference = render_value(left - right)
        except (TypeError, ValueError):
            difference = f"left={render_value(left)} right={render_value(right)}"
    return CheckReport(
        check=check,
        inputs=inputs,
        left=render_value(left),
        right=render_value(right),
        passed=passed,
        difference=difference,
    )


def check_naturality(inv: Invariant, f: ToyMorphism, element: KElement) -> CheckReport:
    """tau after pushforward against pushforward after tau."""
    left = tau(inv, pushforward_k(f, element))
    right = _push_value(f, tau(inv, element))
    return _report(
        "naturality",
        {
            "invariant": inv.name,
            "morphism": render_morphism(f),
            "element": element.render(),
        },
        left,
        right,
    )


def check_multiplicativity(inv: Invariant, e1: KElement, e2: KElement) -> CheckReport:
    """tau of a cross product against the cross product of the values."""
    if not inv.multiplicative:
        raise ValueError(f"invariant {inv.name} is not cross-compatible")
    left = tau(inv, cross_k(e1, e2))
    right = _cross_value(tau(inv, e1), tau(inv, e2))
    return _report(
        "multiplicativity",
        {
            "invariant": inv.name,
            "left_element": e1.render(),
            "right_element": e2.render(),
        },
        left,
        right,
    )


def check_verdier_rr(spec: ClassSpec, f: ToyMorphism, element: KElement) -> CheckReport:
    """Riemann-Roch for smooth pullback: pulling back and then applying
    the transformation equals the relative-tangent class times the
    pullback of the transformed element."""
    inv = class_invariant(spec)
    left = tau(inv, pullback_k(f, element))
    rel = relative_tangent(f)
    rel_class = HClass(
        f.source,
        spec.ring,
        tuple(
            _cached_class(spec, poly, rank)
            for poly, rank in zip(rel.polys, rel.ranks)
        ),
    )
    right = rel_class * pullback(f, tau(inv, element))
    return _report(
        "verdier-rr",
        {
            "class": spec.name,
            "morphism": render_morphism(f),
            "element": element.render(),
        },
        left,
        right,
    )


def check_const_diagram(element: KElement, max_degree: int | None = None) -> CheckReport:
    """Unification through constructible functions.

    The Chern-class transformation of the element must match pushing the
    constant function forward and then taking classes on the (smooth)
    base; in degree zero both integrate to the same Euler characteristic.
    """
    if max_degree is None:
        needed = [sum(c) for c in element.base.components]
        for key, _ in element.terms.items():
            needed.append(sum(key.dims))
        max_degree = max(needed, default=0)
    spec = chern_spec(max_degree)
    inv = class_invariant(spec)
    left = tau(inv, element)
    beta = const_transform(element)
    tangent = _tangent(element.base)
    right = HClass(
        element.base,
        RATIONAL,
        tuple(
            poly.scale(value) for poly, value in zip(tangent.polys, beta.values)
        ),
    )
    classes_match = left == right
    left_integral = left.integral()
    right_integral = Fraction(euler_integral(beta))
    degree_zero_match = left_integral == right_integral
    passed = classes_match and degree_zero_match
    difference = None
    if not classes_match:
        difference = render_value(left - right)
    elif not degree_zero_match:
        difference = f"integrals {left_integral} != {right_integral}"
    return CheckReport(
        check="const-diagram",
        inputs={"element": element.render()},
        left=f"{left.render()} ; integral {format_scalar(left_integral)}",
        right=f"{right.render()} ; integral {format_scalar(right_integral)}",
        passed=passed,
        difference=difference,
    )


def chi_y_genus(space: ToySpace) -> YPoly:
    """Genus interpolating Euler characteristic (y=-1), arithmetic genus
    (y=0) and signature (y=1): the degree-zero part of the interpolating
    class transformation pushed to the point."""
    if space.is_empty():
        return YPoly()
    cap = max(sum(c) for c in space.components)
    inv = class_invariant(ty_spec(cap))
    element = pushforward_k(to_point(space), distinguished(space))
    value = tau(inv, element)
    out = value.polys[0].constant_term()
    return out if isinstance(out, YPoly) else YPoly.of(out)


def virtual_in_ambient(
    spec: ClassSpec, ambient: ToySpace, multidegrees
) -> HClass:
    """Class of an embedded complete intersection, computed upstairs.

    The intersection X of hypersurfaces with the given degree vectors in
    the connected ambient M has virtual tangent bundle TM - (+)O(d_j);
    its class capped with [X] and pushed into M is the virtual-bundle
    class times the product of the hyperplane sections.
    """
    if ambient.n_components != 1:
        raise ValueError("ambient space must be connected")
    dims = ambient.components[0]
    multidegrees = [tuple(int(x) for x in d) for d in multidegrees]
    for d in multidegrees:
        if len(d) != len(dims):
            raise ValueError("degree vector length must match the factor count")
        if any(x < 0 for x in d):
            raise ValueError("degrees must be >= 0")
    if len(multidegrees) > sum(dims):
        raise ValueError("codimension exceeds the ambient dimension")

    tangent = _tangent(ambient)
    one = GradedPoly.one(RATIONAL, dims)
    normal_total = one
    sections = one
    for d in multidegrees:
        section = GradedPoly.zero(RATIONAL, dims)
        for i, degree in enumerate(d):
            if degree:
                section = section + GradedPoly.variable(RATIONAL, dims, i).scale(degree)
        normal_total = normal_total * (one + section)
        sections = sections * section
    vb = VirtualBundle(tangent.polys[0], tangent.ranks[0], normal_total, len(multidegrees))
    cls = virtual_class(spec, vb)
    poly = cls * sections.with_ring(spec.ring)
    return cap_fundamental(HClass(ambient, spec.ring, (poly,)))


# --- bounded corpus and suites ----------------------------------------------


def _partitions(n: int, largest: int | None = None):
    if largest is None:
        largest = n
    if n == 0:
        yield ()
        return
    for first in range(min(n, largest), 0, -1):
        for rest in _partitions(n - first, first):
            yield (first,) + rest


def connected_dims(max_dim: int) -> list[tuple[int, ...]]:
    """Factor-dimension tuples of connected spaces up to the bound, the
    point included, in a fixed deterministic order."""
    out: list[tuple[int, ...]] = [()]
    for n in range(1, max_dim + 1):
        out.extend(_partitions(n))
    return out


def corpus_spaces(max_dim: int, max_components: int) -> list[ToySpace]:
    """All spaces with at most the given component count and total
    dimension, one representative per isomorphism class."""
    pool = connected_dims(max_dim)
    out = []
    for count in range(1, max_components + 1):
        for combo in combinations_with_replacement(pool, count):
            if sum(sum(c) for c in combo) <= max_dim:
                out.append(ToySpace(tuple(combo)))
    return out


def random_element(
    rng: random.Random,
    base: ToySpace,
    max_extra: int = 2,
    max_terms: int = 3,
) -> KElement:
    """Seeded random group element over the base: generators are sources
    built from a base component plus a few extra factors, shuffled."""
    if base.is_empty():
        return KElement.zero(base)
    acc = KElement.zero(base)
    for _ in range(rng.randint(1, max_terms)):
        j = rng.randrange(base.n_components)
        comp = base.components[j]
        extras = []
        budget = rng.randint(0, max_extra)
        while budget > 0:
            d = rng.randint(1, budget)
            extras.append(d)
            budget -= d
        items = [("base", t, d) for t, d in enumerate(comp)]
        items += [("extra", i, d) for i, d in enumerate(extras)]
        rng.shuffle(items)
        dims = tuple(d for _, _, d in items)
        assignment = tuple(
            items.index(("base", t, comp[t])) for t in range(len(comp))
        )
        source = projective(*dims)
        arrow = ToyMorphism(source, base, ((j, assignment),))
        coeff = rng.choice([-2, -1, 1, 2, 3])
        acc = acc + k_class(Triple(source, base, arrow)).scale(coeff)
    return acc


def random_morphism(rng: random.Random, spaces) -> ToyMorphism:
    """Seeded random projection-type morphism out of one of the spaces."""
    source = rng.choice(spaces)
    targets: list[tuple[int, ...]] = []
    legs = []
    for comp in source.components:
        size = rng.randint(0, len(comp))
        arrangement = tuple(rng.sample(range(len(comp)), size))
        kept = tuple(comp[s] for s in arrangement)
        shared = [t for t, dims in enumerate(targets) if dims == kept]
        if shared and rng.random() < 0.5:
            j = rng.choice(shared)
        else:
            j = len(targets)
            targets.append(kept)
        legs.append((j, arrangement))
    return ToyMorphism(source, ToySpace(tuple(targets)), tuple(legs))


def _invariant_pool(max_degree: int) -> list[Invariant]:
    return [
        fundamental_invariant(),
        class_invariant(chern_spec(max_degree)),
        class_invariant(todd_spec(max_degree)),
        class_invariant(l_spec(max_degree)),
        class_invariant(ty_spec(max_degree)),
        indicator_invariant(),
        euler_invariant(),
    ]


def suite_naturality(seed: int, count: int = 220, max_dim: int = 5,
                     max_components: int = 3) -> list[CheckReport]:
    rng = random.Random(f"naturality:{seed}")
    spaces = corpus_spaces(max_dim, max_components)
    pool = _invariant_pool(max_dim + 4)
    reports = []
    while len(reports) < count:
        f = random_morphism(rng, spaces)
        element = random_element(rng, f.source)
        inv = pool[len(reports) % len(pool)]
        reports.append(check_naturality(inv, f, element))
    return reports


def suite_multiplicativity(seed: int, count: int = 120, max_dim: int = 5,
                           max_components: int = 3) -> list[CheckReport]:
    rng = random.Random(f"multiplicativity:{seed}")
    # factors stay small so products stay within reach
    spaces = [s for s in corpus_spaces(min(max_dim, 3), min(max_components, 2))]
    pool = _invariant_pool(2 * min(max_dim, 3) + 3)
    reports = []
    while len(reports) < count:
        e1 = random_element(rng, rng.choice(spaces), max_extra=1, max_terms=2)
        e2 = random_element(rng, rng.choice(spaces), max_extra=1, max_terms=2)
        inv = pool[len(reports) % len(pool)]
        reports.append(check_multiplicativity(inv, e1, e2))
    return reports


def suite_verdier(seed: int, max_dim: int = 5, extra_cases: int = 40) -> list[CheckReport]:
    """Every projection out of every connected space within the bound,
    against the distinguished element, for all four classes; plus seeded
    random elements on smaller spaces."""
    cap = max_dim + 4
    specs = [chern_spec(cap), todd_spec(cap), l_spec(cap), ty_spec(cap)]
    reports = []
    for dims in connected_dims(max_dim):
        space = projective(*dims)
        for f in enumerate_projections(space):
            element = distinguished(f.target)
            for spec in specs:
                reports.append(check_verdier_rr(spec, f, element))
    rng = random.Random(f"verdier:{seed}")
    small = [projective(*dims) for dims in connected_dims(min(max_dim, 4))]
    for k in range(extra_cases):
        space = rng.choice(small)
        f = rng.choice(enumerate_projections(space))
        element = random_element(rng, f.target, max_extra=1, max_terms=2)
        reports.append(check_verdier_rr(specs[k % len(specs)], f, element))
    return reports


def suite_const_diagram(seed: int, max_dim: int = 5, max_components: int = 3) -> list[CheckReport]:
    """The comparison diagram over the whole bounded corpus: distinguished
    elements plus seeded random ones."""
    rng = random.Random(f"const:{seed}")
    reports = []
    for space in corpus_spaces(max_dim, max_components):
        reports.append(check_const_diagram(distinguished(space)))
        reports.append(check_const_diagram(random_element(rng, space)))
    return reports


SUITE_NAMES = ("naturality", "multiplicativity", "verdier-rr", "const-diagram", "all")


def run_suite(name: str, seed: int, max_dim: int = 5,
              max_components: int = 3) -> list[CheckReport]:
    if name == "naturality":
        return suite_naturality(seed, max_dim=max_dim, max_components=max_components)
    if name == "multiplicativity":
        return suite_multiplicativity(seed, max_dim=max_dim, max_components=max_components)
    if name == "verdier-rr":
        return suite_verdier(seed, max_dim=max_dim)
    if name == "const-diagram":
        return suite_const_diagram(seed, max_dim=max_dim, max_components=max_components)
    if name == "all":
        reports = []
        for sub in ("naturality", "multiplicativity", "verdier-rr", "const-diagram"):
            reports.extend(run_suite(sub, seed, max_dim=max_dim, max_components=max_components))
        return reports
    raise ValueError(f"unknown suite {name!r}")
