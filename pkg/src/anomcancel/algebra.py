"""Exact scalar and sparse graded-polynomial arithmetic.

Scalars are Gaussian rationals (``a + b*i`` with ``a``, ``b`` exact
``fractions.Fraction``).  Polynomials live in a fixed table of weighted
generators and are truncated by total weight; they stand for characteristic
forms written in normalized Pontryagin-type generators.  Every operation is
exact: no floats anywhere.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Mapping, NamedTuple, Sequence, Union

ScalarLike = Union[int, Fraction, "GaussianRational"]


class AlgebraError(ValueError):
    """Structural misuse: table mismatch, bad weights, division by zero."""


def _frac(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    raise TypeError(f"expected int or Fraction, got {type(x).__name__}")


class GaussianRational:
    """Exact complex rational ``re + im*i``.

    >>> (GaussianRational(1, 1) / GaussianRational(1, -1)).to_text()
    '0+1*i'
    >>> GaussianRational(Fraction(1, 2)) + GaussianRational(Fraction(1, 3))
    GaussianRational(5/6)
    """

    __slots__ = ("re", "im")

    def __init__(self, re: int | Fraction = 0, im: int | Fraction = 0):
        object.__setattr__(self, "re", _frac(re))
        object.__setattr__(self, "im", _frac(im))

    def __setattr__(self, name, value):
        raise AttributeError("GaussianRational is immutable")

    @staticmethod
    def coerce(x: ScalarLike) -> "GaussianRational":
        if isinstance(x, GaussianRational):
            return x
        return GaussianRational(_frac(x))

    def __add__(self, other):
        o = GaussianRational.coerce(other)
        return GaussianRational(self.re + o.re, self.im + o.im)

    __radd__ = __add__

    def __sub__(self, other):
        o = GaussianRational.coerce(other)
        return GaussianRational(self.re - o.re, self.im - o.im)

    def __rsub__(self, other):
        return GaussianRational.coerce(other) - self

    def __neg__(self):
        return GaussianRational(-self.re, -self.im)

    def __mul__(self, other):
        o = GaussianRational.coerce(other)
        return GaussianRational(
            self.re * o.re - self.im * o.im,
            self.re * o.im + self.im * o.re,
        )

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = GaussianRational.coerce(other)
        n = o.re * o.re + o.im * o.im
        if n == 0:
            raise AlgebraError("division by zero")
        return GaussianRational(
            (self.re * o.re + self.im * o.im) / n,
            (self.im * o.re - self.re * o.im) / n,
        )

    def __rtruediv__(self, other):
        return GaussianRational.coerce(other) / self

    def inverse(self) -> "GaussianRational":
        return GaussianRational(1) / self

    def conjugate(self) -> "GaussianRational":
        return GaussianRational(self.re, -self.im)

    def __pow__(self, n: int):
        if n < 0:
            return self.inverse() ** (-n)
        out = GaussianRational(1)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def __bool__(self):
        return bool(self.re) or bool(self.im)

    def __eq__(self, other):
        if isinstance(other, (int, Fraction, GaussianRational)):
            o = GaussianRational.coerce(other)
            return self.re == o.re and self.im == o.im
        return NotImplemented

    def __hash__(self):
        return hash((self.re, self.im))

    @property
    def is_real(self) -> bool:
        return self.im == 0

    def real_fraction(self) -> Fraction:
        if self.im != 0:
            raise AlgebraError(f"{self.to_text()} is not real")
        return self.re

    def is_integer(self) -> bool:
        return self.im == 0 and self.re.denominator == 1

    def to_text(self) -> str:
        """Canonical form: ``a/b`` when real, else ``a/b+c/d*i`` (or ``-c/d*i``)."""
        if self.im == 0:
            return str(self.re)
        sign = "+" if self.im > 0 else "-"
        return f"{self.re}{sign}{abs(self.im)}*i"

    def __repr__(self):
        return f"GaussianRational({self.to_text()})"


QI_ZERO = GaussianRational(0)
QI_ONE = GaussianRational(1)
QI_I = GaussianRational(0, 1)


def gauss(re=0, im=0) -> GaussianRational:
    return GaussianRational(_frac(re), _frac(im))


class Generator(NamedTuple):
    """A weighted generator.

    ``std_name``/``std_factor`` describe the change to the standard basis:
    this generator equals ``std_factor * <std_name>``, e.g. a normalized
    first Pontryagin generator of weight 2 equals ``(-1/4) * p1``.
    """

    name: str
    weight: int
    family: str
    std_name: str
    std_factor: GaussianRational


class GeneratorTable:
    """Ordered, immutable list of generators; positions index exponent vectors."""

    __slots__ = ("gens", "_index")

    def __init__(self, gens: Sequence[Generator]):
        names = [g.name for g in gens]
        if len(set(names)) != len(names):
            raise AlgebraError("generator names must be unique")
        for g in gens:
            if g.weight <= 0:
                raise AlgebraError(f"generator {g.name} must have positive weight")
        object.__setattr__(self, "gens", tuple(gens))
        object.__setattr__(self, "_index", {g.name: i for i, g in enumerate(gens)})

    def __setattr__(self, name, value):
        raise AttributeError("GeneratorTable is immutable")

    def __len__(self):
        return len(self.gens)

    def index(self, name: str) -> int:
        try:
            return self._index[name]
        except KeyError:
            raise AlgebraError(f"unknown generator {name!r}") from None

    def names(self) -> tuple[str, ...]:
        return tuple(g.name for g in self.gens)

    def family(self, fam: str) -> tuple[Generator, ...]:
        return tuple(g for g in self.gens if g.family == fam)

    def monomial_weight(self, exponents: tuple[int, ...]) -> int:
        return sum(e * g.weight for e, g in zip(exponents, self.gens))

    def __eq__(self, other):
        if isinstance(other, GeneratorTable):
            return self.gens == other.gens
        return NotImplemented

    def __hash__(self):
        return hash(self.gens)

    def __repr__(self):
        return f"GeneratorTable({[g.name for g in self.gens]})"


def _zero_exps(n: int) -> tuple[int, ...]:
    return (0,) * n


class GradedPolynomial:
    """Sparse polynomial in weighted generators, truncated by total weight.

    Terms of weight above ``max_weight`` are discarded on every operation,
    so products agree with the exact product up to that weight.  Stored
    coefficients are never zero.
    """

    __slots__ = ("table", "terms", "max_weight")

    def __init__(self, table: GeneratorTable, terms: Mapping[tuple[int, ...], GaussianRational], max_weight: int):
        clean: dict[tuple[int, ...], GaussianRational] = {}
        n = len(table)
        for exps, coeff in terms.items():
            if len(exps) != n:
                raise AlgebraError("exponent vector length does not match table")
            if table.monomial_weight(exps) > max_weight:
                continue
            c = GaussianRational.coerce(coeff)
            if c:
                clean[exps] = c
        object.__setattr__(self, "table", table)
        object.__setattr__(self, "terms", clean)
        object.__setattr__(self, "max_weight", max_weight)

    def __setattr__(self, name, value):
        raise AttributeError("GradedPolynomial is immutable")

    # -- constructors ------------------------------------------------------

    @staticmethod
    def zero(table: GeneratorTable, max_weight: int) -> "GradedPolynomial":
        return GradedPolynomial(table, {}, max_weight)

    @staticmethod
    def scalar(value: ScalarLike, table: GeneratorTable, max_weight: int) -> "GradedPolynomial":
        return GradedPolynomial(table, {_zero_exps(len(table)): GaussianRational.coerce(value)}, max_weight)

    @staticmethod
    def one(table: GeneratorTable, max_weight: int) -> "GradedPolynomial":
        return GradedPolynomial.scalar(1, table, max_weight)

    @staticmethod
    def generator(name: str, table: GeneratorTable, max_weight: int, power: int = 1) -> "GradedPolynomial":
        i = table.index(name)
        exps = tuple(power if j == i else 0 for j in range(len(table)))
        return GradedPolynomial(table, {exps: QI_ONE}, max_weight)

    # -- ring operations ---------------------------------------------------

    def _check_compatible(self, other: "GradedPolynomial"):
        if self.table != other.table:
            raise AlgebraError("generator table mismatch")
        if self.max_weight != other.max_weight:
            raise AlgebraError("truncation weight mismatch")

    def __add__(self, other):
        if isinstance(other, (int, Fraction, GaussianRational)):
            other = GradedPolynomial.scalar(other, self.table, self.max_weight)
        self._check_compatible(other)
        terms = dict(self.terms)
        for exps, c in other.terms.items():
            s = terms.get(exps, QI_ZERO) + c
            if s:
                terms[exps] = s
            else:
                terms.pop(exps, None)
        return GradedPolynomial(self.table, terms, self.max_weight)

    __radd__ = __add__

    def __sub__(self, other):
        if isinstance(other, (int, Fraction, GaussianRational)):
            other = GradedPolynomial.scalar(other, self.table, self.max_weight)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __neg__(self):
        return GradedPolynomial(self.table, {e: -c for e, c in self.terms.items()}, self.max_weight)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, GaussianRational)):
            return self.scale(other)
        self._check_compatible(other)
        table = self.table
        cap = self.max_weight
        weights = tuple(g.weight for g in table.gens)
        out: dict[tuple[int, ...], GaussianRational] = {}
        for e1, c1 in self.terms.items():
            w1 = table.monomial_weight(e1)
            for e2, c2 in other.terms.items():
                w = w1 + table.monomial_weight(e2)
                if w > cap:
                    continue
                exps = tuple(a + b for a, b in zip(e1, e2))
                s = out.get(exps, QI_ZERO) + c1 * c2
                if s:
                    out[exps] = s
                else:
                    out.pop(exps, None)
        del weights
        return GradedPolynomial(table, out, cap)

    __rmul__ = __mul__

    def scale(self, value: ScalarLike) -> "GradedPolynomial":
        c = GaussianRational.coerce(value)
        if not c:
            return GradedPolynomial.zero(self.table, self.max_weight)
        return GradedPolynomial(self.table, {e: v * c for e, v in self.terms.items()}, self.max_weight)

    def __pow__(self, n: int):
        if n < 0:
            raise AlgebraError("negative polynomial powers are not supported")
        out = GradedPolynomial.one(self.table, self.max_weight)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if isinstance(other, GradedPolynomial):
            return (self.table == other.table and self.max_weight == other.max_weight
                    and self.terms == other.terms)
        if isinstance(other, (int, Fraction, GaussianRational)):
            return self == GradedPolynomial.scalar(other, self.table, self.max_weight)
        return NotImplemented

    # -- structure ---------------------------------------------------------

    def component(self, weight: int) -> "GradedPolynomial":
        """Homogeneous part of total weight exactly ``weight``."""
        if weight < 0 or weight > self.max_weight:
            raise AlgebraError(f"weight {weight} outside [0, {self.max_weight}]")
        terms = {e: c for e, c in self.terms.items() if self.table.monomial_weight(e) == weight}
        return GradedPolynomial(self.table, terms, self.max_weight)

    def constant_term(self) -> GaussianRational:
        return self.terms.get(_zero_exps(len(self.table)), QI_ZERO)

    def one_like(self) -> "GradedPolynomial":
        return GradedPolynomial.one(self.table, self.max_weight)

    def is_homogeneous(self, weight: int) -> bool:
        return all(self.table.monomial_weight(e) == weight for e in self.terms)

    def substitute(self, name: str, replacement: "GradedPolynomial") -> "GradedPolynomial":
        """Replace one generator by a homogeneous polynomial of equal weight."""
        self._check_compatible(replacement)
        i = self.table.index(name)
        w = self.table.gens[i].weight
        if not replacement.is_homogeneous(w):
            raise AlgebraError(f"replacement for {name} must be homogeneous of weight {w}")
        out = GradedPolynomial.zero(self.table, self.max_weight)
        powers: dict[int, GradedPolynomial] = {0: GradedPolynomial.one(self.table, self.max_weight)}
        for exps, coeff in sorted(self.terms.items()):
            e = exps[i]
            if e not in powers:
                powers[e] = replacement ** e
            rest = tuple(0 if j == i else v for j, v in enumerate(exps))
            out = out + GradedPolynomial(self.table, {rest: coeff}, self.max_weight) * powers[e]
        return out

    def inverse(self) -> "GradedPolynomial":
        """Inverse of ``c*(1 + nilpotent)``; the constant term must be nonzero."""
        c = self.constant_term()
        if not c:
            raise AlgebraError("polynomial with zero constant term is not invertible")
        u = self.scale(c.inverse()) - 1
        out = GradedPolynomial.one(self.table, self.max_weight)
        term = GradedPolynomial.one(self.table, self.max_weight)
        sign = 1
        for _ in range(self.max_weight):
            term = term * u
            if not term:
                break
            sign = -sign
            out = out + term.scale(sign)
        return out.scale(c.inverse())

    # -- basis change and rendering -----------------------------------------

    def to_standard_basis(self) -> "GradedPolynomial":
        """Rewrite in standard generators (Pontryagin classes, first Chern class).

        Each generator ``g`` satisfies ``g = std_factor * std_gen``; the result
        is expressed over a table of the standard names with the same weights.
        The map is a graded ring isomorphism and ``from_standard_basis``
        inverts it exactly.
        """
        std_table = standard_table_of(self.table)
        terms: dict[tuple[int, ...], GaussianRational] = {}
        for exps, coeff in self.terms.items():
            c = coeff
            for e, g in zip(exps, self.table.gens):
                if e:
                    c = c * g.std_factor ** e
            if c:
                terms[exps] = terms.get(exps, QI_ZERO) + c
        return GradedPolynomial(std_table, terms, self.max_weight)

    def from_standard_basis(self, normalized_table: GeneratorTable) -> "GradedPolynomial":
        """Inverse of :meth:`to_standard_basis` (self must be in standard names)."""
        terms: dict[tuple[int, ...], GaussianRational] = {}
        for exps, coeff in self.terms.items():
            c = coeff
            for e, g in zip(exps, normalized_table.gens):
                if e:
                    c = c / g.std_factor ** e
            terms[exps] = c
        return GradedPolynomial(normalized_table, terms, self.max_weight)

    def is_real(self) -> bool:
        return all(c.is_real for c in self.terms.values())

    def sorted_terms(self):
        """Terms in canonical order: by weight, then by exponent vector."""
        return sorted(self.terms.items(), key=lambda item: (self.table.monomial_weight(item[0]), item[0]))

    def to_text(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for exps, coeff in self.sorted_terms():
            mono = "*".join(
                g.name if e == 1 else f"{g.name}^{e}"
                for e, g in zip(exps, self.table.gens)
                if e
            )
            ct = coeff.to_text()
            if not mono:
                parts.append(ct)
            elif ct == "1":
                parts.append(mono)
            else:
                parts.append(f"{ct}*{mono}" if "+" not in ct[1:] and "-" not in ct[1:] else f"({ct})*{mono}")
        return " + ".join(parts)

    def to_json_obj(self):
        out = []
        for exps, coeff in self.sorted_terms():
            mono = {g.name: e for e, g in zip(exps, self.table.gens) if e}
            entry = {"mono": mono, "re": str(coeff.re)}
            if coeff.im:
                entry["im"] = str(coeff.im)
            out.append(entry)
        return out

    def __repr__(self):
        return f"GradedPolynomial({self.to_text()})"


_STD_TABLE_CACHE: dict[GeneratorTable, GeneratorTable] = {}


def standard_table_of(table: GeneratorTable) -> GeneratorTable:
    """Companion table whose generators carry the standard names."""
    cached = _STD_TABLE_CACHE.get(table)
    if cached is None:
        cached = GeneratorTable(tuple(
            Generator(g.std_name, g.weight, g.family, g.std_name, QI_ONE) for g in table.gens
        ))
        _STD_TABLE_CACHE[table] = cached
    return cached


# -- symmetric function bridge ----------------------------------------------


def newton_convert(coeffs: Sequence[ScalarLike], n_roots: int, direction: str) -> list[GaussianRational]:
    """Convert between power sums ``s_1..s_m`` and elementaries ``e_1..e_m``.

    Newton's identities with ``e_i = 0`` for ``i > n_roots``.  ``direction``
    is ``"powersum->elementary"`` or ``"elementary->powersum"``.

    >>> [c.to_text() for c in newton_convert([0, 2], 2, "elementary->powersum")]
    ['0', '-4']
    """
    if n_roots < 1:
        raise AlgebraError("n_roots must be >= 1")
    vals = [GaussianRational.coerce(c) for c in coeffs]
    m = len(vals)
    if direction == "powersum->elementary":
        s = [QI_ZERO] + vals
        e: list[GaussianRational] = [QI_ONE]
        for i in range(1, m + 1):
            acc = QI_ZERO
            for j in range(1, i + 1):
                acc = acc + (e[i - j] * s[j] if j % 2 == 1 else -(e[i - j] * s[j]))
            ei = acc / GaussianRational(i)
            e.append(ei if i <= n_roots else QI_ZERO)
        return e[1:]
    if direction == "elementary->powersum":
        e = [QI_ONE] + [v if i + 1 <= n_roots else QI_ZERO for i, v in enumerate(vals)]
        s = [QI_ZERO]
        for i in range(1, m + 1):
            acc = QI_ZERO
            for j in range(1, i):
                acc = acc + (e[j] * s[i - j] if j % 2 == 1 else -(e[j] * s[i - j]))
            term = GaussianRational(i) * e[i]
            s.append(acc + (term if i % 2 == 1 else -term))
        return s[1:]
    raise AlgebraError(f"unknown direction {direction!r}")


def scalar_arith(a: GaussianRational, b: GaussianRational, op: str) -> GaussianRational:
    """Dispatch helper kept for symmetry with the serialized report format."""
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "div":
        return a / b
    raise AlgebraError(f"unknown op {op!r}")
