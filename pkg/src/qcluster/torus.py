"""The based quantum torus and its q=1 commutative shadow.

Elements are finite Z[q^(1/2), q^(-1/2)]-linear combinations of
normalized basis monomials X^a, a in Z^m, relative to a skew-symmetric
integer matrix Lambda.  The basis monomials obey the single
multiplication rule

    X^a * X^b = v^{Lambda(a, b)} * X^{a+b},        v = q^(1/2),

which encodes the generator relations X_i X_j = q^{lambda_ij} X_j X_i.
The prefactor relating X^a to the ascending ordered product
X_1^{a_1} ... X_m^{a_m} appears only in the conversion helpers, never
in the stored representation, which makes bar-invariance of the basis
structural.

All values are immutable; all operations are pure.
"""

from __future__ import annotations

from typing import Iterable, Mapping, Sequence

from .errors import FrameMismatchError, NotDivisibleError
from .qlaurent import QLaurent


def _grlex(a: tuple[int, ...]) -> tuple[int, tuple[int, ...]]:
    """Graded-lexicographic sort key for exponent vectors."""
    return (sum(a), a)


def _vadd(a: tuple[int, ...], b: tuple[int, ...]) -> tuple[int, ...]:
    return tuple(x + y for x, y in zip(a, b))


def _vsub(a: tuple[int, ...], b: tuple[int, ...]) -> tuple[int, ...]:
    return tuple(x - y for x, y in zip(a, b))


def _support_box(exps: Iterable[tuple[int, ...]], m: int):
    """Componentwise (min, max) over a nonempty set of exponent vectors."""
    lo = [None] * m
    hi = [None] * m
    for a in exps:
        for i, x in enumerate(a):
            if lo[i] is None or x < lo[i]:
                lo[i] = x
            if hi[i] is None or x > hi[i]:
                hi[i] = x
    return lo, hi


class SkewMatrix:
    """A skew-symmetric m x m integer matrix, the frame of a torus."""

    __slots__ = ("_rows",)

    def __init__(self, rows: Sequence[Sequence[int]]):
        m = len(rows)
        tup = tuple(tuple(int(x) for x in row) for row in rows)
        for i, row in enumerate(tup):
            if len(row) != m:
                raise ValueError(f"row {i} has length {len(row)}, expected {m}")
        for i in range(m):
            for j in range(i, m):
                if tup[i][j] != -tup[j][i]:
                    raise ValueError(
                        f"not skew-symmetric at ({i}, {j}): "
                        f"{tup[i][j]} != -{tup[j][i]}"
                    )
        self._rows = tup

    @property
    def m(self) -> int:
        return len(self._rows)

    def entry(self, i: int, j: int) -> int:
        return self._rows[i][j]

    def rows(self) -> tuple[tuple[int, ...], ...]:
        return self._rows

    def form(self, a: Sequence[int], b: Sequence[int]) -> int:
        """The bilinear form Lambda(a, b) = sum_ij lambda_ij a_i b_j."""
        m = len(self._rows)
        if len(a) != m or len(b) != m:
            raise ValueError(f"expected vectors of length {m}")
        total = 0
        for i, ai in enumerate(a):
            if ai:
                row = self._rows[i]
                total += ai * sum(row[j] * bj for j, bj in enumerate(b) if bj)
        return total

    def transform(self, columns: Sequence[Sequence[int]]) -> "SkewMatrix":
        """The matrix C^T Lambda C for the basis change with the given columns."""
        vals = [[self.form(ci, cj) for cj in columns] for ci in columns]
        return SkewMatrix(vals)

    def __eq__(self, other) -> bool:
        if not isinstance(other, SkewMatrix):
            return NotImplemented
        return self._rows == other._rows

    def __hash__(self) -> int:
        return hash(self._rows)

    def __repr__(self) -> str:
        return f"SkewMatrix({[list(r) for r in self._rows]!r})"


def reorder_weight(lam: SkewMatrix, a: Sequence[int]) -> int:
    """v-exponent w with X^a = v^w * X_1^{a_1} ... X_m^{a_m}.

    w = sum over i > j of lambda_ij a_i a_j.
    """
    rows = lam.rows()
    total = 0
    for i, ai in enumerate(a):
        if ai:
            row = rows[i]
            total += ai * sum(row[j] * a[j] for j in range(i) if a[j])
    return total


def _coerce_scalar(value) -> QLaurent | None:
    if isinstance(value, QLaurent):
        return value
    if isinstance(value, int):
        return QLaurent.from_int(value)
    return None


class TorusElement:
    """A finite sum of normalized monomials coeff * X^a over one frame."""

    __slots__ = ("_lam", "_terms")

    def __init__(
        self,
        lam: SkewMatrix,
        terms: Mapping[tuple[int, ...], QLaurent | int]
        | Iterable[tuple[tuple[int, ...], QLaurent | int]] = (),
    ):
        self._lam = lam
        m = lam.m
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict[tuple[int, ...], QLaurent] = {}
        for exp, coeff in items:
            exp = tuple(int(x) for x in exp)
            if len(exp) != m:
                raise ValueError(f"exponent {exp} has length {len(exp)}, expected {m}")
            c = _coerce_scalar(coeff)
            if c is None:
                raise TypeError(f"bad coefficient type {type(coeff).__name__}")
            if c:
                prev = acc.get(exp)
                s = c if prev is None else prev + c
                if s:
                    acc[exp] = s
                elif exp in acc:
                    del acc[exp]
        self._terms = acc

    # -- constructors -------------------------------------------------

    @classmethod
    def zero(cls, lam: SkewMatrix) -> "TorusElement":
        return cls(lam)

    @classmethod
    def one(cls, lam: SkewMatrix) -> "TorusElement":
        return cls(lam, {(0,) * lam.m: 1})

    @classmethod
    def monomial(cls, lam: SkewMatrix, exp: Sequence[int], coeff=1) -> "TorusElement":
        """The single-term element coeff * X^exp."""
        return cls(lam, {tuple(exp): coeff})

    @classmethod
    def generator(cls, lam: SkewMatrix, i: int) -> "TorusElement":
        """The i-th generator X_i = X^{e_i} (0-based index)."""
        m = lam.m
        if not 0 <= i < m:
            raise ValueError(f"generator index {i} out of range for m={m}")
        e = [0] * m
        e[i] = 1
        return cls(lam, {tuple(e): 1})

    # -- inspection ---------------------------------------------------

    @property
    def lam(self) -> SkewMatrix:
        return self._lam

    @property
    def m(self) -> int:
        return self._lam.m

    def items(self):
        return self._terms.items()

    def support(self) -> list[tuple[int, ...]]:
        return sorted(self._terms, key=_grlex)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def coefficient(self, exp: Sequence[int]) -> QLaurent:
        return self._terms.get(tuple(exp), QLaurent.zero())

    def leading(self) -> tuple[tuple[int, ...], QLaurent]:
        """Graded-lex leading (exponent, coefficient) pair."""
        if not self._terms:
            raise ValueError("zero element has no leading term")
        exp = max(self._terms, key=_grlex)
        return exp, self._terms[exp]

    def min_exponents(self) -> tuple[int, ...]:
        """Componentwise minimum over the support (the denominator data)."""
        if not self._terms:
            raise ValueError("zero element has no support")
        lo, _ = _support_box(self._terms, self.m)
        return tuple(lo)

    def is_monomial(self) -> bool:
        return len(self._terms) == 1

    def _check_frame(self, other: "TorusElement") -> None:
        if self._lam != other._lam:
            raise FrameMismatchError(
                "torus elements live over different skew matrices"
            )

    # -- arithmetic ---------------------------------------------------

    def __add__(self, other) -> "TorusElement":
        if not isinstance(other, TorusElement):
            return NotImplemented
        self._check_frame(other)
        acc = dict(self._terms)
        for exp, coeff in other._terms.items():
            prev = acc.get(exp)
            s = coeff if prev is None else prev + coeff
            if s:
                acc[exp] = s
            elif exp in acc:
                del acc[exp]
        return self._raw(self._lam, acc)

    def __neg__(self) -> "TorusElement":
        return self._raw(self._lam, {e: -c for e, c in self._terms.items()})

    def __sub__(self, other) -> "TorusElement":
        if not isinstance(other, TorusElement):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other) -> "TorusElement":
        if isinstance(other, TorusElement):
            self._check_frame(other)
            return self._mul_torus(other)
        scalar = _coerce_scalar(other)
        if scalar is None:
            return NotImplemented
        return self.scalar_mul(scalar)

    def __rmul__(self, other) -> "TorusElement":
        # scalars are central, so left and right scalar action agree
        scalar = _coerce_scalar(other)
        if scalar is None:
            return NotImplemented
        return self.scalar_mul(scalar)

    def scalar_mul(self, scalar: QLaurent | int) -> "TorusElement":
        c = _coerce_scalar(scalar)
        if not c:
            return TorusElement.zero(self._lam)
        return self._raw(
            self._lam, {e: coeff * c for e, coeff in self._terms.items()}
        )

    def _mul_torus(self, other: "TorusElement") -> "TorusElement":
        rows = self._lam.rows()
        acc: dict[tuple[int, ...], QLaurent] = {}
        for b, cb in other._terms.items():
            # row-contracted form: Lambda(a, b) = sum_i a_i * lb[i]
            lb = [sum(row[j] * bj for j, bj in enumerate(b) if bj) for row in rows]
            for a, ca in self._terms.items():
                w = sum(ai * lb[i] for i, ai in enumerate(a) if ai)
                e = _vadd(a, b)
                contrib = ca.mul_shifted(cb, w)
                prev = acc.get(e)
                s = contrib if prev is None else prev + contrib
                if s:
                    acc[e] = s
                elif e in acc:
                    del acc[e]
        return self._raw(self._lam, acc)

    def __pow__(self, n: int) -> "TorusElement":
        if not isinstance(n, int) or n < 0:
            raise ValueError("only nonnegative integer powers are defined")
        result = TorusElement.one(self._lam)
        for _ in range(n):
            result = result * self
        return result

    @classmethod
    def _raw(cls, lam, terms: dict) -> "TorusElement":
        out = cls.__new__(cls)
        out._lam = lam
        out._terms = terms
        return out

    # -- division -----------------------------------------------------

    def exact_div_right(self, g: "TorusElement") -> "TorusElement":
        """Return h with h * g == self, or raise NotDivisibleError."""
        return self._exact_div(g, right=True)

    def exact_div_left(self, g: "TorusElement") -> "TorusElement":
        """Return h with g * h == self, or raise NotDivisibleError."""
        return self._exact_div(g, right=False)

    def _exact_div(self, g: "TorusElement", right: bool) -> "TorusElement":
        self._check_frame(g)
        if not g:
            raise ZeroDivisionError("torus division by zero")
        if not self._terms:
            return TorusElement.zero(self._lam)
        m = self.m
        f_lo, f_hi = _support_box(self._terms, m)
        g_lo, g_hi = _support_box(g._terms, m)
        lo = [fl - gl for fl, gl in zip(f_lo, g_lo)]
        hi = [fh - gh for fh, gh in zip(f_hi, g_hi)]
        if any(l > h for l, h in zip(lo, hi)):
            raise NotDivisibleError("divisor support exceeds dividend support")
        b, cg = g.leading()
        lam = self._lam
        rem = dict(self._terms)
        quot: dict[tuple[int, ...], QLaurent] = {}
        while rem:
            t = max(rem, key=_grlex)
            a = _vsub(t, b)
            if any(x < l or x > h for x, l, h in zip(a, lo, hi)):
                raise NotDivisibleError("leading term of remainder is not reducible")
            twist = lam.form(a, b) if right else lam.form(b, a)
            try:
                c = rem[t].shift(-twist).exact_div(cg)
            except NotDivisibleError:
                raise NotDivisibleError(
                    "leading coefficient not divisible in Z[q^(1/2), q^(-1/2)]"
                ) from None
            quot[a] = c
            # subtract (c X^a) * g  (resp. g * (c X^a)) from the remainder
            for e, ce in g._terms.items():
                w = lam.form(a, e) if right else lam.form(e, a)
                k = _vadd(a, e)
                delta = c.mul_shifted(ce, w)
                prev = rem.get(k)
                s = -delta if prev is None else prev - delta
                if s:
                    rem[k] = s
                elif k in rem:
                    del rem[k]
        return self._raw(self._lam, quot)

    # -- structure maps -----------------------------------------------

    def bar(self) -> "TorusElement":
        """Coefficientwise v -> v^(-1); basis monomials are fixed."""
        return self._raw(self._lam, {e: c.bar() for e, c in self._terms.items()})

    def specialize_q1(self) -> "CommLaurent":
        """The commutative shadow at q = 1."""
        terms = {}
        for e, c in self._terms.items():
            n = c.eval_at_one()
            if n:
                terms[e] = n
        return CommLaurent._raw(self.m, terms)

    def quasi_commutation(self, other: "TorusElement") -> int | None:
        """The integer t with self * other == q^t * other * self, or None.

        Raises ValueError on zero input (every exponent works there, so
        the question is ill-posed).
        """
        self._check_frame(other)
        if not self or not other:
            raise ValueError("quasi-commutation is undefined for zero elements")
        p1 = self._mul_torus(other)
        p2 = other._mul_torus(self)
        exp, c1 = p1.leading()
        c2 = p2._terms.get(exp)
        if c2 is None:
            return None
        try:
            ratio = c1.exact_div(c2)
        except NotDivisibleError:
            return None
        if len(ratio) != 1:
            return None
        ((e, c),) = ratio.items()
        if c != 1 or e % 2 != 0:
            return None
        if p1 != p2.scalar_mul(QLaurent.v_power(e)):
            return None
        return e // 2

    # -- ordered-product view ------------------------------------------

    def ordered_terms(self) -> list[tuple[tuple[int, ...], QLaurent]]:
        """Terms rewritten against ascending ordered products.

        Each (a, c) returned means c * X_1^{a_1} ... X_m^{a_m}; the
        coefficient absorbs the normalization prefactor of X^a.
        """
        out = []
        for a in self.support():
            w = reorder_weight(self._lam, a)
            out.append((a, self._terms[a].shift(w)))
        return out

    # -- comparison / serialization ------------------------------------

    def __eq__(self, other) -> bool:
        if not isinstance(other, TorusElement):
            return NotImplemented
        return self._lam == other._lam and self._terms == other._terms

    def __hash__(self) -> int:
        return hash((self._lam, frozenset(self._terms.items())))

    def to_json(self) -> list[dict]:
        return [
            {"exp": list(e), "coeff": self._terms[e].to_json()}
            for e in self.support()
        ]

    @classmethod
    def from_json(cls, lam: SkewMatrix, records: Iterable[Mapping]) -> "TorusElement":
        return cls(
            lam,
            [(tuple(r["exp"]), QLaurent.from_json(r["coeff"])) for r in records],
        )

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for e in self.support():
            c = self._terms[e]
            mono = "X^(" + ",".join(str(x) for x in e) + ")"
            if all(x == 0 for x in e):
                parts.append(str(c))
            elif c.is_one():
                parts.append(mono)
            elif len(c) == 1:
                parts.append(f"{c}*{mono}")
            else:
                parts.append(f"({c})*{mono}")
        return " + ".join(parts)

    def __repr__(self) -> str:
        return f"TorusElement({self})"


class CommLaurent:
    """A commutative Laurent polynomial in m variables over the integers."""

    __slots__ = ("_m", "_terms")

    def __init__(
        self,
        m: int,
        terms: Mapping[tuple[int, ...], int]
        | Iterable[tuple[tuple[int, ...], int]] = (),
    ):
        if m < 1:
            raise ValueError("need at least one variable")
        self._m = m
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict[tuple[int, ...], int] = {}
        for exp, coeff in items:
            exp = tuple(int(x) for x in exp)
            if len(exp) != m:
                raise ValueError(f"exponent {exp} has length {len(exp)}, expected {m}")
            if coeff:
                s = acc.get(exp, 0) + coeff
                if s:
                    acc[exp] = s
                elif exp in acc:
                    del acc[exp]
        self._terms = acc

    @classmethod
    def _raw(cls, m: int, terms: dict) -> "CommLaurent":
        out = cls.__new__(cls)
        out._m = m
        out._terms = terms
        return out

    @classmethod
    def zero(cls, m: int) -> "CommLaurent":
        return cls(m)

    @classmethod
    def one(cls, m: int) -> "CommLaurent":
        return cls(m, {(0,) * m: 1})

    @classmethod
    def constant(cls, m: int, n: int) -> "CommLaurent":
        return cls(m, {(0,) * m: n})

    @classmethod
    def monomial(cls, m: int, exp: Sequence[int], coeff: int = 1) -> "CommLaurent":
        return cls(m, {tuple(exp): coeff})

    @classmethod
    def generator(cls, m: int, i: int) -> "CommLaurent":
        if not 0 <= i < m:
            raise ValueError(f"generator index {i} out of range for m={m}")
        e = [0] * m
        e[i] = 1
        return cls(m, {tuple(e): 1})

    @property
    def m(self) -> int:
        return self._m

    def items(self):
        return self._terms.items()

    def support(self) -> list[tuple[int, ...]]:
        return sorted(self._terms, key=_grlex)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def coefficient(self, exp: Sequence[int]) -> int:
        return self._terms.get(tuple(exp), 0)

    def min_exponents(self) -> tuple[int, ...]:
        if not self._terms:
            raise ValueError("zero polynomial has no support")
        lo, _ = _support_box(self._terms, self._m)
        return tuple(lo)

    def _check_m(self, other: "CommLaurent") -> None:
        if self._m != other._m:
            raise ValueError("mixed variable counts")

    def __add__(self, other) -> "CommLaurent":
        if isinstance(other, int):
            other = CommLaurent.constant(self._m, other)
        if not isinstance(other, CommLaurent):
            return NotImplemented
        self._check_m(other)
        acc = dict(self._terms)
        for e, c in other._terms.items():
            s = acc.get(e, 0) + c
            if s:
                acc[e] = s
            elif e in acc:
                del acc[e]
        return self._raw(self._m, acc)

    __radd__ = __add__

    def __neg__(self) -> "CommLaurent":
        return self._raw(self._m, {e: -c for e, c in self._terms.items()})

    def __sub__(self, other) -> "CommLaurent":
        if isinstance(other, int):
            other = CommLaurent.constant(self._m, other)
        if not isinstance(other, CommLaurent):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other) -> "CommLaurent":
        if isinstance(other, int):
            if not other:
                return CommLaurent.zero(self._m)
            return self._raw(self._m, {e: c * other for e, c in self._terms.items()})
        if not isinstance(other, CommLaurent):
            return NotImplemented
        self._check_m(other)
        acc: dict[tuple[int, ...], int] = {}
        for a, ca in self._terms.items():
            for b, cb in other._terms.items():
                e = _vadd(a, b)
                s = acc.get(e, 0) + ca * cb
                if s:
                    acc[e] = s
                elif e in acc:
                    del acc[e]
        return self._raw(self._m, acc)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "CommLaurent":
        if not isinstance(n, int) or n < 0:
            raise ValueError("only nonnegative integer powers are defined")
        result = CommLaurent.one(self._m)
        base = self
        for _ in range(n):
            result = result * base
        return result

    def exact_div(self, g: "CommLaurent") -> "CommLaurent":
        """Return h with h * g == self, or raise NotDivisibleError."""
        if isinstance(g, int):
            g = CommLaurent.constant(self._m, g)
        self._check_m(g)
        if not g:
            raise ZeroDivisionError("Laurent division by zero")
        if not self._terms:
            return CommLaurent.zero(self._m)
        m = self._m
        f_lo, f_hi = _support_box(self._terms, m)
        g_lo, g_hi = _support_box(g._terms, m)
        lo = [fl - gl for fl, gl in zip(f_lo, g_lo)]
        hi = [fh - gh for fh, gh in zip(f_hi, g_hi)]
        if any(l > h for l, h in zip(lo, hi)):
            raise NotDivisibleError("divisor support exceeds dividend support")
        b = max(g._terms, key=_grlex)
        cg = g._terms[b]
        rem = dict(self._terms)
        quot: dict[tuple[int, ...], int] = {}
        while rem:
            t = max(rem, key=_grlex)
            a = _vsub(t, b)
            if any(x < l or x > h for x, l, h in zip(a, lo, hi)):
                raise NotDivisibleError("leading term of remainder is not reducible")
            c, leftover = divmod(rem[t], cg)
            if leftover:
                raise NotDivisibleError(
                    f"leading coefficient {rem[t]} not divisible by {cg}"
                )
            quot[a] = c
            for e, ce in g._terms.items():
                k = _vadd(a, e)
                s = rem.get(k, 0) - c * ce
                if s:
                    rem[k] = s
                elif k in rem:
                    del rem[k]
        return self._raw(self._m, quot)

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = CommLaurent.constant(self._m, other)
        if not isinstance(other, CommLaurent):
            return NotImplemented
        return self._m == other._m and self._terms == other._terms

    def __hash__(self) -> int:
        return hash((self._m, frozenset(self._terms.items())))

    def to_json(self) -> list[dict]:
        return [
            {"exp": list(e), "coeff": str(self._terms[e])} for e in self.support()
        ]

    @classmethod
    def from_json(cls, m: int, records: Iterable[Mapping]) -> "CommLaurent":
        return cls(m, [(tuple(r["exp"]), int(r["coeff"])) for r in records])

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for e in self.support():
            c = self._terms[e]
            factors = [
                f"x{i + 1}" if x == 1 else f"x{i + 1}^{x}"
                for i, x in enumerate(e)
                if x
            ]
            mono = "*".join(factors)
            if not mono:
                body = str(abs(c))
            elif abs(c) == 1:
                body = mono
            else:
                body = f"{abs(c)}*{mono}"
            if not parts:
                parts.append(body if c > 0 else f"-{body}")
            else:
                parts.append(f"+ {body}" if c > 0 else f"- {body}")
        return " ".join(parts)

    def __repr__(self) -> str:
        return f"CommLaurent({self})"
