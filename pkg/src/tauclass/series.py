"""Exact truncated power series and multiplicative characteristic classes.

Coefficients live in Q or Q[y] (``RATIONAL`` / ``RATIONAL_Y``).  A
normalized univariate series f(t) with f(0) = 1 determines a
multiplicative class: applied to the Chern roots of a bundle it gives
cl(E) = prod_i f(a_i), recovered from the total Chern class through
Newton's identities, entirely inside a truncated polynomial ring.

The interpolating class ``ty_spec`` specializes to the Chern class at
y = -1, the Todd class at y = 0 and the L-class at y = 1.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import factorial

__all__ = [
    "RATIONAL",
    "RATIONAL_Y",
    "YPoly",
    "Series1",
    "ClassSpec",
    "GradedPoly",
    "VirtualBundle",
    "chern_spec",
    "todd_spec",
    "l_spec",
    "ty_spec",
    "multiplicative_class",
    "virtual_class",
    "specialize_y",
    "spec_to_text",
    "spec_from_text",
]

RATIONAL = "Q"
RATIONAL_Y = "Q[y]"


def _format_fraction(q: Fraction) -> str:
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


class YPoly:
    """Polynomial in y with exact rational coefficients."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        cs = [c if isinstance(c, Fraction) else Fraction(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs = tuple(cs)

    @classmethod
    def of(cls, value) -> "YPoly":
        if isinstance(value, YPoly):
            return value
        return cls((Fraction(value),))

    @classmethod
    def y(cls) -> "YPoly":
        return cls((Fraction(0), Fraction(1)))

    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def constant_value(self) -> Fraction:
        """The value as a rational; error if y actually occurs."""
        if len(self.coeffs) > 1:
            raise ValueError("polynomial in y is not a constant")
        return self.coeffs[0] if self.coeffs else Fraction(0)

    def evaluate(self, value) -> Fraction:
        v = Fraction(value)
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * v + c
        return acc

    def _coerced(self, other):
        if isinstance(other, YPoly):
            return other
        if isinstance(other, (int, Fraction)):
            return YPoly.of(other)
        return None

    def __add__(self, other):
        o = self._coerced(other)
        if o is None:
            return NotImplemented
        n = max(len(self.coeffs), len(o.coeffs))
        return YPoly(
            (self.coeffs[i] if i < len(self.coeffs) else 0)
            + (o.coeffs[i] if i < len(o.coeffs) else 0)
            for i in range(n)
        )

    __radd__ = __add__

    def __neg__(self):
        return YPoly(-c for c in self.coeffs)

    def __sub__(self, other):
        o = self._coerced(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerced(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        o = self._coerced(other)
        if o is None:
            return NotImplemented
        if not self.coeffs or not o.coeffs:
            return YPoly()
        out = [Fraction(0)] * (len(self.coeffs) + len(o.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            for j, b in enumerate(o.coeffs):
                out[i + j] += a * b
        return YPoly(out)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "YPoly":
        if n < 0:
            raise ValueError("negative power of a polynomial")
        acc = YPoly.of(1)
        for _ in range(n):
            acc = acc * self
        return acc

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            q = Fraction(other)
            return YPoly(c / q for c in self.coeffs)
        return NotImplemented

    def __bool__(self):
        return bool(self.coeffs)

    def __eq__(self, other):
        o = self._coerced(other)
        if o is None:
            return NotImplemented
        return self.coeffs == o.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return f"YPoly({list(self.coeffs)!r})"

    def __str__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for k, c in enumerate(self.coeffs):
            if c == 0:
                continue
            if k == 0:
                parts.append(_format_fraction(c))
            else:
                mono = "y" if k == 1 else f"y^{k}"
                if c == 1:
                    term = mono
                elif c == -1:
                    term = f"-{mono}"
                else:
                    term = f"{_format_fraction(c)}*{mono}"
                parts.append(term)
        text = parts[0]
        for p in parts[1:]:
            text += f" - {p[1:]}" if p.startswith("-") else f" + {p}"
        return text


def _coerce(ring: str, value):
    """Canonical coefficient of the given ring from an int/Fraction/YPoly."""
    if ring == RATIONAL:
        if isinstance(value, YPoly):
            return value.constant_value()
        return value if isinstance(value, Fraction) else Fraction(value)
    if ring == RATIONAL_Y:
        return YPoly.of(value)
    raise ValueError(f"unknown coefficient ring {ring!r}")


def _ring_zero(ring: str):
    return _coerce(ring, 0)


def _ring_one(ring: str):
    return _coerce(ring, 1)


def _same_ring(a: str, b: str):
    if a != b:
        raise ValueError(f"coefficient ring mismatch: {a!r} vs {b!r}")


def format_scalar(value) -> str:
    if isinstance(value, YPoly):
        return str(value)
    return _format_fraction(Fraction(value))


class Series1:
    """Univariate power series truncated at an explicit cap degree.

    The cap is part of the value.  Binary operations on series with
    different caps narrow to the smaller cap and mark the result as
    ``narrowed`` (metadata, excluded from equality).
    """

    __slots__ = ("ring", "cap", "coeffs", "narrowed")

    def __init__(self, ring, coeffs, cap=None, narrowed=False):
        coeffs = list(coeffs)
        if cap is None:
            cap = len(coeffs) - 1
        if cap < 0:
            raise ValueError("truncation degree must be >= 0")
        coeffs = coeffs[: cap + 1] + [0] * (cap + 1 - len(coeffs))
        self.ring = ring
        self.cap = cap
        self.coeffs = tuple(_coerce(ring, c) for c in coeffs)
        self.narrowed = narrowed

    @classmethod
    def zero(cls, ring, cap):
        return cls(ring, [], cap=cap)

    @classmethod
    def one(cls, ring, cap):
        return cls(ring, [1], cap=cap)

    @classmethod
    def t(cls, ring, cap):
        return cls(ring, [0, 1], cap=cap)

    def coefficient(self, d: int):
        if d < 0 or d > self.cap:
            raise ValueError(f"degree {d} outside truncation 0..{self.cap}")
        return self.coeffs[d]

    def __getitem__(self, d):
        return self.coefficient(d)

    def _align(self, other):
        if not isinstance(other, Series1):
            raise TypeError("expected a Series1")
        _same_ring(self.ring, other.ring)
        cap = min(self.cap, other.cap)
        narrowed = self.narrowed or other.narrowed or self.cap != other.cap
        return cap, narrowed

    def __add__(self, other):
        cap, narrowed = self._align(other)
        return Series1(
            self.ring,
            [self.coeffs[i] + other.coeffs[i] for i in range(cap + 1)],
            cap=cap,
            narrowed=narrowed,
        )

    def __sub__(self, other):
        cap, narrowed = self._align(other)
        return Series1(
            self.ring,
            [self.coeffs[i] - other.coeffs[i] for i in range(cap + 1)],
            cap=cap,
            narrowed=narrowed,
        )

    def __neg__(self):
        return Series1(self.ring, [-c for c in self.coeffs], cap=self.cap,
                       narrowed=self.narrowed)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, YPoly)):
            factor = _coerce(self.ring, other)
            return Series1(self.ring, [c * factor for c in self.coeffs],
                           cap=self.cap, narrowed=self.narrowed)
        cap, narrowed = self._align(other)
        out = [_ring_zero(self.ring) for _ in range(cap + 1)]
        for i in range(cap + 1):
            if not self.coeffs[i]:
                continue
            for j in range(cap + 1 - i):
                out[i + j] = out[i + j] + self.coeffs[i] * other.coeffs[j]
        return Series1(self.ring, out, cap=cap, narrowed=narrowed)

    __rmul__ = __mul__

    def truncate(self, cap: int) -> "Series1":
        """Explicitly truncate; intentional, so the result is not flagged."""
        if cap > self.cap:
            raise ValueError(f"cannot extend truncation {self.cap} to {cap}")
        return Series1(self.ring, self.coeffs[: cap + 1], cap=cap)

    def inverse(self) -> "Series1":
        c0 = self.coeffs[0]
        unit = c0.constant_value() if isinstance(c0, YPoly) else c0
        if unit == 0:
            raise ValueError("series has no inverse: constant term not a unit")
        inv0 = _coerce(self.ring, Fraction(1) / Fraction(unit))
        out = [inv0] + [_ring_zero(self.ring)] * self.cap
        for k in range(1, self.cap + 1):
            acc = _ring_zero(self.ring)
            for j in range(1, k + 1):
                acc = acc + self.coeffs[j] * out[k - j]
            out[k] = -(acc * inv0)
        return Series1(self.ring, out, cap=self.cap, narrowed=self.narrowed)

    def exp(self) -> "Series1":
        if self.coeffs[0]:
            raise ValueError("exp needs constant term 0")
        out = [_ring_one(self.ring)] + [_ring_zero(self.ring)] * self.cap
        # f' = a' f  =>  k f_k = sum_{j>=1} j a_j f_{k-j}
        for k in range(1, self.cap + 1):
            acc = _ring_zero(self.ring)
            for j in range(1, k + 1):
                acc = acc + (j * self.coeffs[j]) * out[k - j]
            out[k] = acc / k if isinstance(acc, YPoly) else acc / Fraction(k)
        return Series1(self.ring, out, cap=self.cap, narrowed=self.narrowed)

    def log(self) -> "Series1":
        if self.coeffs[0] != _ring_one(self.ring):
            raise ValueError("log needs constant term 1")
        out = [_ring_zero(self.ring)] * (self.cap + 1)
        # k a_k = k f_k - sum_{j=1}^{k-1} j a_j f_{k-j}
        for k in range(1, self.cap + 1):
            acc = k * self.coeffs[k]
            for j in range(1, k):
                acc = acc - (j * out[j]) * self.coeffs[k - j]
            out[k] = acc / k if isinstance(acc, YPoly) else acc / Fraction(k)
        return Series1(self.ring, out, cap=self.cap, narrowed=self.narrowed)

    def compose(self, inner: "Series1") -> "Series1":
        """self(inner(t)); inner must have constant term 0."""
        _same_ring(self.ring, inner.ring)
        if inner.coeffs[0]:
            raise ValueError("composition needs inner constant term 0")
        cap = min(self.cap, inner.cap)
        narrowed = self.narrowed or inner.narrowed or self.cap != inner.cap
        acc = Series1(self.ring, [self.coeffs[0]], cap=cap)
        power = Series1.one(self.ring, cap)
        inner_cut = Series1(self.ring, inner.coeffs[: cap + 1], cap=cap)
        for k in range(1, cap + 1):
            power = power * inner_cut
            acc = acc + power * self.coeffs[k]
        return Series1(self.ring, acc.coeffs, cap=cap, narrowed=narrowed)

    def specialize_y(self, value) -> "Series1":
        if self.ring != RATIONAL_Y:
            raise ValueError("specialize_y needs Q[y] coefficients")
        return Series1(
            RATIONAL,
            [c.evaluate(value) for c in self.coeffs],
            cap=self.cap,
            narrowed=self.narrowed,
        )

    def __eq__(self, other):
        if not isinstance(other, Series1):
            return NotImplemented
        return (
            self.ring == other.ring
            and self.cap == other.cap
            and self.coeffs == other.coeffs
        )

    def __hash__(self):
        return hash((self.ring, self.cap, self.coeffs))

    def __repr__(self):
        return f"Series1({self.ring!r}, {[format_scalar(c) for c in self.coeffs]})"


@dataclass(frozen=True)
class ClassSpec:
    """A normalized series f(t), f(0) = 1, defining a multiplicative class."""

    name: str
    series: Series1

    def __post_init__(self):
        if self.series.coeffs[0] != _ring_one(self.series.ring):
            raise ValueError("class series must be normalized: f(0) = 1")

    @property
    def ring(self) -> str:
        return self.series.ring

    @property
    def cap(self) -> int:
        return self.series.cap


def _todd_coefficients(cap: int) -> list[Fraction]:
    # t/(1 - e^{-t}) = 1 / sum_{k>=0} (-1)^k t^k / (k+1)!
    den = Series1(
        RATIONAL,
        [Fraction((-1) ** k, factorial(k + 1)) for k in range(cap + 1)],
        cap=cap,
    )
    return [Fraction(c) for c in den.inverse().coeffs]


def chern_spec(cap: int) -> ClassSpec:
    """f(t) = 1 + t: the total Chern class."""
    return ClassSpec("chern", Series1(RATIONAL, [1, 1], cap=cap))


def todd_spec(cap: int) -> ClassSpec:
    """f(t) = t/(1 - e^{-t}): the Todd class."""
    return ClassSpec("todd", Series1(RATIONAL, _todd_coefficients(cap), cap=cap))


def l_spec(cap: int) -> ClassSpec:
    """f(t) = t/tanh(t): the L-class."""
    sinh_over_t = Series1(
        RATIONAL,
        [Fraction(1, factorial(k + 1)) if k % 2 == 0 else Fraction(0) for k in range(cap + 1)],
        cap=cap,
    )
    cosh = Series1(
        RATIONAL,
        [Fraction(1, factorial(k)) if k % 2 == 0 else Fraction(0) for k in range(cap + 1)],
        cap=cap,
    )
    return ClassSpec("l", cosh * sinh_over_t.inverse())


def ty_spec(cap: int) -> ClassSpec:
    """f(t) = t(1+y)/(1 - e^{-t(1+y)}) - t*y over Q[y].

    Substituting u = t(1+y) into the Todd series keeps every coefficient a
    polynomial in y; the extra -t*y term adjusts degree one.
    """
    todd = _todd_coefficients(cap)
    one_plus_y = YPoly((Fraction(1), Fraction(1)))
    coeffs: list = [YPoly.of(todd[k]) * one_plus_y ** k for k in range(cap + 1)]
    if cap >= 1:
        coeffs[1] = coeffs[1] - YPoly.y()
    return ClassSpec("ty", Series1(RATIONAL_Y, coeffs, cap=cap))


class GradedPoly:
    """Element of R[h_1..h_k]/(h_i^{n_i+1}) with R = Q or Q[y].

    ``dims`` lists the nilpotency bound of each variable; exponents are
    componentwise bounded by it and zero coefficients are never stored.
    """

    __slots__ = ("ring", "dims", "terms")

    def __init__(self, ring, dims, terms=()):
        dims = tuple(int(n) for n in dims)
        if any(n < 0 for n in dims):
            raise ValueError("variable dims must be >= 0")
        data = {}
        items = terms.items() if isinstance(terms, dict) else terms
        for exp, coeff in items:
            exp = tuple(int(e) for e in exp)
            if len(exp) != len(dims):
                raise ValueError("exponent arity mismatch")
            if any(e < 0 or e > n for e, n in zip(exp, dims)):
                raise ValueError(f"exponent {exp} outside dims {dims}")
            c = data.get(exp, _ring_zero(ring)) + _coerce(ring, coeff)
            if c:
                data[exp] = c
            elif exp in data:
                del data[exp]
        self.ring = ring
        self.dims = dims
        self.terms = data

    @classmethod
    def zero(cls, ring, dims):
        return cls(ring, dims)

    @classmethod
    def constant(cls, ring, dims, value):
        return cls(ring, dims, {(0,) * len(dims): value})

    @classmethod
    def one(cls, ring, dims):
        return cls.constant(ring, dims, 1)

    @classmethod
    def variable(cls, ring, dims, i):
        if dims[i] == 0:
            # nilpotent of order 1: the variable is zero in the quotient
            return cls.zero(ring, dims)
        exp = [0] * len(dims)
        exp[i] = 1
        return cls(ring, dims, {tuple(exp): 1})

    def items(self):
        """Terms sorted by (total degree, exponent tuple)."""
        return sorted(self.terms.items(), key=lambda kv: (sum(kv[0]), kv[0]))

    def coefficient(self, exp):
        return self.terms.get(tuple(exp), _ring_zero(self.ring))

    def constant_term(self):
        return self.coefficient((0,) * len(self.dims))

    def top_coefficient(self):
        """Coefficient of the full top monomial (h_i^{n_i} for every i)."""
        return self.coefficient(self.dims)

    def total_degree_cap(self) -> int:
        return sum(self.dims)

    def graded_part(self, d: int) -> "GradedPoly":
        return GradedPoly(
            self.ring,
            self.dims,
            {e: c for e, c in self.terms.items() if sum(e) == d},
        )

    def is_zero(self) -> bool:
        return not self.terms

    def _check(self, other):
        if not isinstance(other, GradedPoly):
            raise TypeError("expected a GradedPoly")
        _same_ring(self.ring, other.ring)
        if self.dims != other.dims:
            raise ValueError(f"variable dims mismatch: {self.dims} vs {other.dims}")

    def __add__(self, other):
        self._check(other)
        data = dict(self.terms)
        for e, c in other.terms.items():
            s = data.get(e, _ring_zero(self.ring)) + c
            if s:
                data[e] = s
            elif e in data:
                del data[e]
        out = GradedPoly(self.ring, self.dims)
        out.terms = data
        return out

    def __neg__(self):
        out = GradedPoly(self.ring, self.dims)
        out.terms = {e: -c for e, c in self.terms.items()}
        return out

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, YPoly)):
            return self.scale(other)
        self._check(other)
        data = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                if any(x > n for x, n in zip(e, self.dims)):
                    continue
                s = data.get(e, _ring_zero(self.ring)) + c1 * c2
                if s:
                    data[e] = s
                elif e in data:
                    del data[e]
        out = GradedPoly(self.ring, self.dims)
        out.terms = data
        return out

    __rmul__ = __mul__

    def scale(self, value):
        factor = _coerce(self.ring, value)
        if not factor:
            return GradedPoly.zero(self.ring, self.dims)
        out = GradedPoly(self.ring, self.dims)
        out.terms = {e: c * factor for e, c in self.terms.items()}
        return out

    def __pow__(self, n: int) -> "GradedPoly":
        if n < 0:
            raise ValueError("negative power in a truncated ring")
        acc = GradedPoly.one(self.ring, self.dims)
        for _ in range(n):
            acc = acc * self
        return acc

    def inverse(self) -> "GradedPoly":
        c0 = self.constant_term()
        unit = c0.constant_value() if isinstance(c0, YPoly) else Fraction(c0)
        if unit == 0:
            raise ValueError("constant term is not a unit")
        # (c0 + x)^{-1} = c0^{-1} sum (-x/c0)^m, x nilpotent
        nil = self - GradedPoly.constant(self.ring, self.dims, c0)
        acc = GradedPoly.one(self.ring, self.dims)
        term = GradedPoly.one(self.ring, self.dims)
        for _ in range(self.total_degree_cap()):
            term = term * nil.scale(Fraction(-1) / unit)
            if term.is_zero():
                break
            acc = acc + term
        return acc.scale(Fraction(1) / unit)

    def with_ring(self, ring: str) -> "GradedPoly":
        """Lift Q coefficients into Q[y] (or re-tag an equal ring)."""
        if ring == self.ring:
            return self
        if self.ring == RATIONAL and ring == RATIONAL_Y:
            return GradedPoly(ring, self.dims, dict(self.terms))
        raise ValueError(f"cannot move coefficients from {self.ring!r} to {ring!r}")

    def specialize_y(self, value) -> "GradedPoly":
        if self.ring != RATIONAL_Y:
            raise ValueError("specialize_y needs Q[y] coefficients")
        return GradedPoly(
            RATIONAL,
            self.dims,
            {e: c.evaluate(value) for e, c in self.terms.items()},
        )

    def __eq__(self, other):
        if not isinstance(other, GradedPoly):
            return NotImplemented
        return (
            self.ring == other.ring
            and self.dims == other.dims
            and self.terms == other.terms
        )

    def __hash__(self):
        return hash((self.ring, self.dims, tuple(self.items())))

    def __repr__(self):
        return f"GradedPoly({self.ring!r}, {self.dims!r}, {self.render()!r})"

    def render(self, var_names=None) -> str:
        if not self.terms:
            return "0"
        if var_names is None:
            if len(self.dims) == 1:
                var_names = ("h",)
            else:
                var_names = tuple(f"h{i + 1}" for i in range(len(self.dims)))
        parts = []
        for e, c in self.items():
            factors = []
            for name, k in zip(var_names, e):
                if k == 1:
                    factors.append(name)
                elif k > 1:
                    factors.append(f"{name}^{k}")
            coeff = format_scalar(c)
            if isinstance(c, YPoly) and (len(c.coeffs) > 1 or "/" in coeff):
                coeff = f"({coeff})"
            if not factors:
                parts.append(coeff)
            elif coeff == "1":
                parts.append("*".join(factors))
            elif coeff == "-1":
                parts.append("-" + "*".join(factors))
            else:
                parts.append(coeff + "*" + "*".join(factors))
        text = parts[0]
        for p in parts[1:]:
            text += f" - {p[1:]}" if p.startswith("-") else f" + {p}"
        return text


@dataclass(frozen=True)
class VirtualBundle:
    """Formal difference of bundles, each given by total Chern class and rank."""

    plus_total_chern: GradedPoly
    plus_rank: int
    minus_total_chern: GradedPoly
    minus_rank: int

    def __post_init__(self):
        for poly in (self.plus_total_chern, self.minus_total_chern):
            if poly.constant_term() != _ring_one(poly.ring):
                raise ValueError("total Chern class must have constant term 1")


def _log_coefficients(spec: ClassSpec, upto: int):
    if spec.cap < upto:
        raise ValueError(
            f"class series truncated at {spec.cap} but degree {upto} is needed"
        )
    return spec.series.truncate(upto).log().coeffs if upto >= 0 else ()


def multiplicative_class(spec: ClassSpec, total_chern: GradedPoly, rank: int) -> GradedPoly:
    """cl(E) = prod_i f(a_i) for the Chern roots a_i of E.

    Power sums of the roots are recovered from the elementary symmetric
    parts of the total Chern class by Newton's identities, then
    cl(E) = exp(sum_j b_j p_j) with log f = sum_j b_j t^j.  Exact in the
    truncated ring the input lives in.
    """
    if rank < 0:
        raise ValueError("rank must be >= 0")
    chern = total_chern.with_ring(spec.ring) if spec.ring != total_chern.ring else total_chern
    dims = chern.dims
    if chern.constant_term() != _ring_one(spec.ring):
        raise ValueError("total Chern class must have constant term 1")
    top = chern.total_degree_cap()
    for d in range(rank + 1, top + 1):
        if not chern.graded_part(d).is_zero():
            raise ValueError(f"Chern part in degree {d} exceeds rank {rank}")
    b = _log_coefficients(spec, top)
    e = [chern.graded_part(d) for d in range(top + 1)]

    def e_part(j):
        return e[j] if j <= min(rank, top) else GradedPoly.zero(spec.ring, dims)

    p = [GradedPoly.zero(spec.ring, dims)]
    for k in range(1, top + 1):
        acc = e_part(k).scale(((-1) ** (k - 1)) * k)
        for i in range(1, k):
            acc = acc + (e_part(i) * p[k - i]).scale((-1) ** (i - 1))
        p.append(acc)

    arg = GradedPoly.zero(spec.ring, dims)
    for j in range(1, top + 1):
        arg = arg + p[j].scale(b[j])

    result = GradedPoly.one(spec.ring, dims)
    term = GradedPoly.one(spec.ring, dims)
    for m in range(1, top + 1):
        term = term * arg
        if term.is_zero():
            break
        result = result + term.scale(Fraction(1, factorial(m)))
    return result


def virtual_class(spec: ClassSpec, vb: VirtualBundle) -> GradedPoly:
    """cl of a virtual bundle: cl(plus) * cl(minus)^{-1}."""
    plus = multiplicative_class(spec, vb.plus_total_chern, vb.plus_rank)
    minus = multiplicative_class(spec, vb.minus_total_chern, vb.minus_rank)
    return plus * minus.inverse()


def specialize_y(value, at):
    """Substitute an exact rational for y in a Series1 or GradedPoly."""
    return value.specialize_y(at)


def spec_to_text(spec: ClassSpec) -> str:
    """Printable form: a ring header, then one coefficient per degree.

    Q[y] coefficients are written as space-separated rationals, constant
    term first.
    """
    lines = [f"ring: {spec.series.ring}"]
    for c in spec.series.coeffs:
        if isinstance(c, YPoly):
            cs = c.coeffs if c.coeffs else (Fraction(0),)
            lines.append(" ".join(_format_fraction(q) for q in cs))
        else:
            lines.append(_format_fraction(c))
    return "\n".join(lines) + "\n"


def spec_from_text(text: str, name: str = "custom") -> ClassSpec:
    ring = None
    rows = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if line.startswith("ring:"):
            tag = line[len("ring:"):].strip()
            if tag not in (RATIONAL, RATIONAL_Y):
                raise ValueError(f"line {lineno}: unknown ring {tag!r}")
            ring = tag
            continue
        if ring is None:
            raise ValueError(f"line {lineno}: coefficients before 'ring:' header")
        try:
            qs = [Fraction(tok) for tok in line.split()]
        except ValueError:
            raise ValueError(f"line {lineno}: malformed rational") from None
        if not qs:
            raise ValueError(f"line {lineno}: empty coefficient")
        if ring == RATIONAL:
            if len(qs) != 1:
                raise ValueError(f"line {lineno}: ring Q expects one rational per line")
            rows.append(qs[0])
        else:
            rows.append(YPoly(qs))
    if ring is None:
        raise ValueError("missing 'ring:' header")
    if not rows:
        raise ValueError("class series needs at least the constant term")
    return ClassSpec(name, Series1(ring, rows, cap=len(rows) - 1))
