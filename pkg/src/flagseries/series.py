"""Exact truncated power series, Lefschetz polynomials and rational forms.

Everything in this module is immutable after construction and all
coefficients are exact Python integers.  Series carry their truncation
explicitly; arithmetic between series with different truncations truncates
down to the componentwise minimum.
"""

from __future__ import annotations

import itertools

from . import kernels

VARIABLE_NAMES = ("q", "s", "v", "t", "q1", "q2")


class RationalityError(ValueError):
    """A series failed a rationality check against a claimed denominator."""


def _as_int(value):
    if isinstance(value, int):
        return value
    raise TypeError(f"expected an exact integer, got {type(value).__name__}")


class QSeries:
    """Truncated formal power series in 1-3 named variables over the integers.

    ``coefficients`` maps exponent tuples to nonzero integers; exponents are
    componentwise bounded by ``truncation`` (inclusive).
    """

    __slots__ = ("variables", "truncation", "coefficients")

    def __init__(self, variables, truncation, coefficients):
        variables = tuple(variables)
        if not 1 <= len(variables) <= 3:
            raise ValueError("a series has between one and three variables")
        for name in variables:
            if name not in VARIABLE_NAMES:
                raise ValueError(f"unknown variable name {name!r}")
        if len(set(variables)) != len(variables):
            raise ValueError("variable names must be distinct")
        truncation = tuple(int(t) for t in truncation)
        if len(truncation) != len(variables):
            raise ValueError("one truncation order per variable")
        if any(t < 0 for t in truncation):
            raise ValueError("truncation orders must be nonnegative")
        coeffs = {}
        for exps, c in coefficients.items():
            c = _as_int(c)
            if not c:
                continue
            exps = tuple(int(e) for e in exps)
            if len(exps) != len(variables):
                raise ValueError("exponent arity does not match variables")
            if any(e < 0 for e in exps):
                raise ValueError("exponents must be nonnegative")
            if all(e <= t for e, t in zip(exps, truncation)):
                coeffs[exps] = c
        object.__setattr__(self, "variables", variables)
        object.__setattr__(self, "truncation", truncation)
        object.__setattr__(self, "coefficients", coeffs)

    def __setattr__(self, name, value):
        raise AttributeError("QSeries is immutable")

    # -- constructors -------------------------------------------------

    @classmethod
    def zero(cls, variables, truncation):
        return cls(variables, truncation, {})

    @classmethod
    def one(cls, variables, truncation):
        zero_exp = (0,) * len(tuple(variables))
        return cls(variables, truncation, {zero_exp: 1})

    @classmethod
    def monomial(cls, variables, truncation, exponents, coefficient=1):
        return cls(variables, truncation, {tuple(exponents): coefficient})

    @classmethod
    def from_dense(cls, variable, coeffs, truncation=None):
        """Build a single-variable series from a dense coefficient list."""
        if truncation is None:
            truncation = len(coeffs) - 1
        data = {(i,): c for i, c in enumerate(coeffs) if c}
        return cls((variable,), (truncation,), data)

    # -- accessors ----------------------------------------------------

    def coefficient(self, *exponents):
        return self.coefficients.get(tuple(exponents), 0)

    def __getitem__(self, exponents):
        if not isinstance(exponents, tuple):
            exponents = (exponents,)
        return self.coefficients.get(exponents, 0)

    def dense(self):
        """Dense coefficient list; only valid for single-variable series."""
        if len(self.variables) != 1:
            raise ValueError("dense form requires a single variable")
        out = [0] * (self.truncation[0] + 1)
        for (e,), c in self.coefficients.items():
            out[e] = c
        return out

    def is_zero(self):
        return not self.coefficients

    def constant_term(self):
        return self.coefficients.get((0,) * len(self.variables), 0)

    def truncate(self, truncation):
        truncation = tuple(truncation)
        if truncation == self.truncation:
            return self
        return QSeries(self.variables, truncation, self.coefficients)

    # -- arithmetic ---------------------------------------------------

    def _check_compatible(self, other):
        if not isinstance(other, QSeries):
            raise TypeError("expected a QSeries")
        if self.variables != other.variables:
            raise ValueError(
                f"variable lists differ: {self.variables} vs {other.variables}"
            )
        return tuple(min(a, b) for a, b in zip(self.truncation, other.truncation))

    def __add__(self, other):
        return ps_add(self, other)

    def __sub__(self, other):
        return ps_add(self, other * -1)

    def __mul__(self, other):
        if isinstance(other, int):
            return QSeries(
                self.variables,
                self.truncation,
                {e: other * c for e, c in self.coefficients.items()},
            )
        return ps_mul(self, other)

    __rmul__ = __mul__

    def __pow__(self, exponent):
        return ps_pow(self, exponent)

    def __eq__(self, other):
        return (
            isinstance(other, QSeries)
            and self.variables == other.variables
            and self.truncation == other.truncation
            and self.coefficients == other.coefficients
        )

    def __repr__(self):
        head = sorted(self.coefficients.items())[:6]
        body = ", ".join(f"{e}: {c}" for e, c in head)
        more = ", ..." if len(self.coefficients) > 6 else ""
        return (
            f"QSeries({'/'.join(self.variables)} <= {self.truncation}; "
            f"{{{body}{more}}})"
        )

    # -- serialization ------------------------------------------------

    def to_json_dict(self):
        terms = [
            list(e) + [str(c)] for e, c in sorted(self.coefficients.items())
        ]
        return {
            "variables": list(self.variables),
            "truncation": list(self.truncation),
            "terms": terms,
        }

    @classmethod
    def from_json_dict(cls, data):
        coeffs = {}
        for term in data["terms"]:
            *exps, c = term
            coeffs[tuple(exps)] = int(c)
        return cls(data["variables"], data["truncation"], coeffs)


def ps_add(a: QSeries, b: QSeries) -> QSeries:
    """Coefficientwise sum, truncated to the minimum truncation."""
    trunc = a._check_compatible(b)
    coeffs = dict(a.coefficients)
    for e, c in b.coefficients.items():
        coeffs[e] = coeffs.get(e, 0) + c
    return QSeries(a.variables, trunc, coeffs)


def ps_mul(a: QSeries, b: QSeries) -> QSeries:
    """Cauchy product, truncated to the minimum truncation."""
    trunc = a._check_compatible(b)
    if len(a.variables) == 1:
        n = trunc[0]
        out = kernels.mul_trunc(a.dense(), b.dense(), n)
        return QSeries.from_dense(a.variables[0], out, n)
    out = {}
    small, large = (a, b) if len(a.coefficients) <= len(b.coefficients) else (b, a)
    for ea, ca in small.coefficients.items():
        for eb, cb in large.coefficients.items():
            e = tuple(x + y for x, y in zip(ea, eb))
            if all(x <= t for x, t in zip(e, trunc)):
                out[e] = out.get(e, 0) + ca * cb
    return QSeries(a.variables, trunc, out)


def ps_inv(a: QSeries) -> QSeries:
    """Multiplicative inverse up to truncation; constant term must be +-1."""
    c0 = a.constant_term()
    if c0 not in (1, -1):
        raise ValueError("constant term must be a unit (+1 or -1)")
    if len(a.variables) == 1:
        n = a.truncation[0]
        return QSeries.from_dense(a.variables[0], kernels.inv_trunc(a.dense(), n), n)
    # Graded back-substitution: exponents in increasing total degree only
    # ever reference previously solved coefficients.
    nonconst = [
        (e, c) for e, c in a.coefficients.items() if any(e)
    ]
    out = {(0,) * len(a.variables): c0}
    lattice = sorted(
        itertools.product(*(range(t + 1) for t in a.truncation)),
        key=lambda e: (sum(e), e),
    )
    for e in lattice:
        if not any(e):
            continue
        acc = 0
        for f, cf in nonconst:
            g = tuple(x - y for x, y in zip(e, f))
            if any(x < 0 for x in g):
                continue
            bg = out.get(g, 0)
            if bg:
                acc += cf * bg
        if acc:
            out[e] = -acc * c0
    return QSeries(a.variables, a.truncation, out)


def ps_pow(a: QSeries, exponent: int) -> QSeries:
    """Nonnegative integer power by binary exponentiation."""
    if exponent < 0:
        raise ValueError("exponent must be nonnegative")
    result = QSeries.one(a.variables, a.truncation)
    base = a
    e = exponent
    while e:
        if e & 1:
            result = ps_mul(result, base)
        base = ps_mul(base, base) if e > 1 else base
        e >>= 1
    return result


def denominator_dense(denominator, n):
    """Dense expansion of prod_j (1 - q^j)^{e_j} up to degree n."""
    out = [0] * (n + 1)
    out[0] = 1
    for j, e in sorted(dict(denominator).items()):
        if j <= 0 or e <= 0:
            raise ValueError("denominator exponents must be positive")
        factor = [0] * (n + 1)
        factor[0] = 1
        if j <= n:
            factor[j] = -1
        for _ in range(e):
            out = kernels.mul_trunc(out, factor, n)
    return out


def clear_denominator(series: QSeries, denominator, max_deg: int, guard: int = 10):
    """Extract the rational form numerator of ``series`` over a fixed
    product of cyclotomic-type factors prod_j (1 - q^j)^{e_j}.

    The series truncation must reach ``max_deg`` plus the denominator degree
    plus ``guard``; every coefficient of the cleared numerator in degrees
    (max_deg, truncation] must vanish, otherwise the series is not rational
    with the claimed denominator at this truncation.
    """
    if len(series.variables) != 1:
        raise ValueError("rational forms are extracted from one-variable series")
    denominator = {int(j): int(e) for j, e in dict(denominator).items()}
    den_deg = sum(j * e for j, e in denominator.items())
    n = series.truncation[0]
    if n < max_deg + den_deg + guard:
        raise ValueError(
            f"truncation {n} too small: need at least {max_deg + den_deg + guard}"
        )
    num = series.dense()
    for j, e in sorted(denominator.items()):
        for _ in range(e):
            # multiply in place by (1 - q^j), highest degree first
            for i in range(n, j - 1, -1):
                num[i] -= num[i - j]
    for i in range(max_deg + 1, n + 1):
        if num[i]:
            raise RationalityError(
                "series is not rational with the claimed denominator at this "
                f"truncation (degree {i} coefficient {num[i]})"
            )
    del num[max_deg + 1 :]
    while num and not num[-1]:
        num.pop()
    return RationalForm(num, denominator)


class RationalForm:
    """Integer polynomial numerator over prod_j (1 - q^j)^{e_j}."""

    __slots__ = ("numerator", "denominator")

    def __init__(self, numerator, denominator):
        numerator = tuple(_as_int(c) for c in numerator)
        while numerator and numerator[-1] == 0:
            numerator = numerator[:-1]
        denominator = {int(j): int(e) for j, e in dict(denominator).items() if e}
        if any(j <= 0 or e < 1 for j, e in denominator.items()):
            raise ValueError("denominator must map positive j to exponents >= 1")
        object.__setattr__(self, "numerator", numerator)
        object.__setattr__(self, "denominator", denominator)

    def __setattr__(self, name, value):
        raise AttributeError("RationalForm is immutable")

    @property
    def numerator_degree(self):
        return len(self.numerator) - 1 if self.numerator else -1

    def numerator_value(self, x):
        """Evaluate the numerator polynomial at an integer point."""
        acc = 0
        for c in reversed(self.numerator):
            acc = acc * x + c
        return acc

    def expand(self, truncation, variable="q"):
        """Re-expand numerator/denominator as a series up to ``truncation``."""
        n = truncation
        num = list(self.numerator[: n + 1]) + [0] * max(0, n + 1 - len(self.numerator))
        den = denominator_dense(self.denominator, n)
        out = kernels.mul_trunc(num, kernels.inv_trunc(den, n), n)
        return QSeries.from_dense(variable, out, n)

    def __eq__(self, other):
        return (
            isinstance(other, RationalForm)
            and self.numerator == other.numerator
            and self.denominator == other.denominator
        )

    def __repr__(self):
        den = " ".join(f"(1-q^{j})^{e}" for j, e in sorted(self.denominator.items()))
        return f"RationalForm({list(self.numerator)} / {den or '1'})"

    def to_json_dict(self):
        return {
            "numerator": list(self.numerator),
            "denominator": [[j, e] for j, e in sorted(self.denominator.items())],
        }

    @classmethod
    def from_json_dict(cls, data):
        return cls(data["numerator"], dict(map(tuple, data["denominator"])))


class LPoly:
    """Polynomial in the Lefschetz class with exact integer coefficients."""

    __slots__ = ("coefficients",)

    def __init__(self, coefficients=()):
        coeffs = [_as_int(c) for c in coefficients]
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        object.__setattr__(self, "coefficients", tuple(coeffs))

    def __setattr__(self, name, value):
        raise AttributeError("LPoly is immutable")

    @property
    def degree(self):
        return len(self.coefficients) - 1

    @property
    def leading_coefficient(self):
        return self.coefficients[-1] if self.coefficients else 0

    def is_zero(self):
        return not self.coefficients

    def __getitem__(self, i):
        return self.coefficients[i] if 0 <= i < len(self.coefficients) else 0

    def __add__(self, other):
        other = _coerce_lpoly(other)
        n = max(len(self.coefficients), len(other.coefficients))
        return LPoly([self[i] + other[i] for i in range(n)])

    __radd__ = __add__

    def __neg__(self):
        return LPoly([-c for c in self.coefficients])

    def __sub__(self, other):
        return self + (-_coerce_lpoly(other))

    def __rsub__(self, other):
        return _coerce_lpoly(other) - self

    def __mul__(self, other):
        other = _coerce_lpoly(other)
        if self.is_zero() or other.is_zero():
            return LPoly()
        out = [0] * (len(self.coefficients) + len(other.coefficients) - 1)
        for i, a in enumerate(self.coefficients):
            if not a:
                continue
            for j, b in enumerate(other.coefficients):
                out[i + j] += a * b
        return LPoly(out)

    __rmul__ = __mul__

    def __pow__(self, e):
        if e < 0:
            raise ValueError("exponent must be nonnegative")
        result = LPoly((1,))
        for _ in range(e):
            result = result * self
        return result

    def shift(self, k):
        """Multiply by L^k."""
        if self.is_zero():
            return self
        return LPoly((0,) * k + self.coefficients)

    def __call__(self, x):
        acc = 0
        for c in reversed(self.coefficients):
            acc = acc * x + c
        return acc

    def __eq__(self, other):
        if isinstance(other, int):
            other = LPoly((other,))
        return isinstance(other, LPoly) and self.coefficients == other.coefficients

    def __hash__(self):
        return hash(self.coefficients)

    def __repr__(self):
        if self.is_zero():
            return "LPoly(0)"
        parts = []
        for i in range(self.degree, -1, -1):
            c = self[i]
            if not c:
                continue
            if i == 0:
                parts.append(f"{c}")
            else:
                mono = "L" if i == 1 else f"L^{i}"
                parts.append(mono if c == 1 else f"{c}*{mono}")
        return "LPoly(" + " + ".join(parts) + ")"

    def to_json_list(self):
        return [str(c) for c in self.coefficients]

    @classmethod
    def from_json_list(cls, data):
        return cls([int(c) for c in data])


def _coerce_lpoly(value):
    if isinstance(value, LPoly):
        return value
    if isinstance(value, int):
        return LPoly((value,))
    raise TypeError(f"cannot combine LPoly with {type(value).__name__}")


#: The Lefschetz class itself.
LEFSCHETZ = LPoly((0, 1))


def projective_space(n: int) -> LPoly:
    """Class of n-dimensional projective space: 1 + L + ... + L^n."""
    if n < 0:
        raise ValueError("dimension must be nonnegative")
    return LPoly((1,) * (n + 1))


def lpoly_eval_at_one(p: LPoly) -> int:
    """Sum of coefficients: the Euler-characteristic specialization."""
    return sum(p.coefficients)
