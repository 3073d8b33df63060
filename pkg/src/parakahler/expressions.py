"""Exact arithmetic for multivariate rational expressions.

Every scalar in this package is a quotient of two polynomials with rational
coefficients in the fixed parameter list ``a, b, c, d, lam, alpha, beta``.
A polynomial is a sparse dictionary mapping exponent tuples (one entry per
parameter) to nonzero ``Fraction`` coefficients; the zero polynomial is the
empty dictionary.  This representation gives a decidable, exact zero test:
an expression is zero iff its numerator normalizes to the empty dictionary.

Quotients are kept reduced (multivariate GCD via a primitive polynomial
remainder sequence) with an integer-primitive, positive-leading denominator,
and collapse to denominator 1 whenever the division is exact.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd as _int_gcd
from typing import Iterable, Mapping, Union

PARAMS = ("a", "b", "c", "d", "lam", "alpha", "beta")

_NV = len(PARAMS)
_IDX = {name: i for i, name in enumerate(PARAMS)}
_ZEXP = (0,) * _NV

_term_limit = 100_000


class ExpressionBlowupError(RuntimeError):
    """An intermediate polynomial exceeded the configured term-count bound."""


class SymbolicZeroDivisionError(ZeroDivisionError):
    """Division by an expression that is identically zero."""


class DenominatorVanishesError(ArithmeticError):
    """Evaluation hit a vanishing denominator; carries the offending point."""

    def __init__(self, message: str, point: Mapping[str, Fraction]):
        super().__init__(message)
        self.point = dict(point)


class ExprSyntaxError(ValueError):
    """Malformed expression text."""


class UnknownParameterError(ExprSyntaxError):
    """Expression text uses an identifier outside the parameter list."""


class SingularMatrixError(ValueError):
    """Matrix inversion requested for a matrix with zero determinant."""


def set_term_limit(limit: int) -> None:
    """Set the global guard on polynomial term counts (default 100000)."""
    global _term_limit
    if limit < 1:
        raise ValueError("term limit must be positive")
    _term_limit = limit


def get_term_limit() -> int:
    return _term_limit


def _guard(terms: dict) -> dict:
    if len(terms) > _term_limit:
        raise ExpressionBlowupError(
            f"polynomial with {len(terms)} terms exceeds the guard "
            f"({_term_limit}); raise the limit if this is intentional"
        )
    return terms


def _grlex(exp: tuple) -> tuple:
    return (sum(exp), exp)


class Polynomial:
    """Sparse multivariate polynomial over the rationals.

    Instances are immutable by convention; no method mutates ``terms``.
    """

    __slots__ = ("terms",)

    def __init__(self, terms: dict):
        self.terms = terms

    # -- constructors ------------------------------------------------------

    @staticmethod
    def zero() -> "Polynomial":
        return _P_ZERO

    @staticmethod
    def const(value: Union[int, Fraction]) -> "Polynomial":
        q = Fraction(value)
        return Polynomial({} if q == 0 else {_ZEXP: q})

    @staticmethod
    def var(name: str) -> "Polynomial":
        if name not in _IDX:
            raise UnknownParameterError(
                f"unknown parameter {name!r}; known parameters: {', '.join(PARAMS)}"
            )
        exp = [0] * _NV
        exp[_IDX[name]] = 1
        return Polynomial({tuple(exp): Fraction(1)})

    # -- predicates --------------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return not self.terms

    @property
    def is_const(self) -> bool:
        return not self.terms or (len(self.terms) == 1 and _ZEXP in self.terms)

    def const_value(self) -> Fraction:
        if not self.terms:
            return Fraction(0)
        if not self.is_const:
            raise ValueError("polynomial is not constant")
        return self.terms[_ZEXP]

    def __eq__(self, other) -> bool:
        return isinstance(other, Polynomial) and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    # -- arithmetic --------------------------------------------------------

    def __add__(self, other: "Polynomial") -> "Polynomial":
        if not self.terms:
            return other
        if not other.terms:
            return self
        out = dict(self.terms)
        for exp, coeff in other.terms.items():
            s = out.get(exp)
            if s is None:
                out[exp] = coeff
            else:
                s = s + coeff
                if s:
                    out[exp] = s
                else:
                    del out[exp]
        return Polynomial(_guard(out))

    def __sub__(self, other: "Polynomial") -> "Polynomial":
        return self + (-other)

    def __neg__(self) -> "Polynomial":
        return Polynomial({e: -c for e, c in self.terms.items()})

    def __mul__(self, other: "Polynomial") -> "Polynomial":
        if not self.terms or not other.terms:
            return _P_ZERO
        out: dict = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                exp = tuple(x + y for x, y in zip(e1, e2))
                prod = c1 * c2
                s = out.get(exp)
                if s is None:
                    out[exp] = prod
                else:
                    s = s + prod
                    if s:
                        out[exp] = s
                    else:
                        del out[exp]
        return Polynomial(_guard(out))

    def scale(self, factor: Fraction) -> "Polynomial":
        if factor == 0:
            return _P_ZERO
        return Polynomial({e: c * factor for e, c in self.terms.items()})

    def __pow__(self, n: int) -> "Polynomial":
        if n < 0:
            raise ValueError("negative polynomial power")
        result = _P_ONE
        base = self
        while n:
            if n & 1:
                result = result * base
            base_needed = n >> 1
            if base_needed:
                base = base * base
            n = base_needed
        return result

    # -- structure ---------------------------------------------------------

    def degree(self) -> int:
        if not self.terms:
            return 0
        return max(sum(e) for e in self.terms)

    def degree_in(self, v: int) -> int:
        if not self.terms:
            return 0
        return max(e[v] for e in self.terms)

    def params(self) -> set:
        used = set()
        for e in self.terms:
            for i, k in enumerate(e):
                if k:
                    used.add(PARAMS[i])
        return used

    def leading(self) -> tuple:
        """Leading (exponent, coefficient) in graded-lexicographic order."""
        exp = max(self.terms, key=_grlex)
        return exp, self.terms[exp]

    def eval(self, point: Mapping[str, Fraction]) -> Fraction:
        total = Fraction(0)
        cache = {}
        for exp, coeff in self.terms.items():
            term = coeff
            for i, k in enumerate(exp):
                if k:
                    key = (i, k)
                    p = cache.get(key)
                    if p is None:
                        name = PARAMS[i]
                        if name not in point:
                            raise ValueError(f"no value assigned to parameter {name!r}")
                        p = Fraction(point[name]) ** k
                        cache[key] = p
                    term *= p
            total += term
        return total

    def __str__(self) -> str:
        return _poly_str(self)

    def __repr__(self) -> str:
        return f"Polynomial({_poly_str(self)})"


_P_ZERO = Polynomial({})
_P_ONE = Polynomial({_ZEXP: Fraction(1)})


# -- polynomial division and GCD ------------------------------------------


def exact_div(f: Polynomial, g: Polynomial):
    """Return f/g when g divides f exactly, else None."""
    if g.is_zero:
        raise ZeroDivisionError("polynomial division by zero")
    if f.is_zero:
        return _P_ZERO
    if g.is_const:
        return f.scale(1 / g.const_value())
    g_exp, g_coeff = g.leading()
    quotient: dict = {}
    rest = dict(f.terms)
    while rest:
        r_exp = max(rest, key=_grlex)
        d = tuple(x - y for x, y in zip(r_exp, g_exp))
        if any(x < 0 for x in d):
            return None
        qc = rest[r_exp] / g_coeff
        quotient[d] = qc
        for e2, c2 in g.terms.items():
            exp = tuple(x + y for x, y in zip(d, e2))
            s = rest.get(exp, Fraction(0)) - qc * c2
            if s:
                rest[exp] = s
            else:
                rest.pop(exp, None)
    return Polynomial(quotient)


def _coeff_of(f: Polynomial, v: int, k: int) -> Polynomial:
    out = {}
    for e, c in f.terms.items():
        if e[v] == k:
            reduced = list(e)
            reduced[v] = 0
            out[tuple(reduced)] = c
    return Polynomial(out)


def _shift_var(f: Polynomial, v: int, k: int) -> Polynomial:
    if k == 0:
        return f
    out = {}
    for e, c in f.terms.items():
        shifted = list(e)
        shifted[v] += k
        out[tuple(shifted)] = c
    return Polynomial(out)


def _int_content_signed(f: Polynomial) -> Fraction:
    """Rational c with f/c integer-coefficient, content 1, positive leading."""
    num_gcd = 0
    den_lcm = 1
    for coeff in f.terms.values():
        num_gcd = _int_gcd(num_gcd, abs(coeff.numerator))
        den_lcm = den_lcm * coeff.denominator // _int_gcd(den_lcm, coeff.denominator)
    content = Fraction(num_gcd, den_lcm)
    _, lead = f.leading()
    return -content if lead < 0 else content


def _pp_normalize(f: Polynomial) -> Polynomial:
    if f.is_zero:
        return f
    return f.scale(1 / _int_content_signed(f))


def _content_in(f: Polynomial, v: int) -> Polynomial:
    content = _P_ZERO
    for k in range(f.degree_in(v) + 1):
        coeff = _coeff_of(f, v, k)
        if not coeff.is_zero:
            content = poly_gcd(content, coeff)
            if content.is_const and not content.is_zero:
                return _P_ONE
    return content


def _pseudo_rem(f: Polynomial, g: Polynomial, v: int) -> Polynomial:
    dg = g.degree_in(v)
    lc_g = _coeff_of(g, v, dg)
    r = f
    while not r.is_zero:
        dr = r.degree_in(v)
        if dr < dg:
            break
        lc_r = _coeff_of(r, v, dr)
        r = lc_g * r - _shift_var(lc_r, v, dr - dg) * g
    return r


def poly_gcd(f: Polynomial, g: Polynomial) -> Polynomial:
    """GCD over the rationals, normalized integer-primitive positive-leading."""
    if f.is_zero:
        return _pp_normalize(g)
    if g.is_zero:
        return _pp_normalize(f)
    if f.is_const or g.is_const:
        return _P_ONE
    fp, gp = f.params(), g.params()
    if not (fp & gp):
        return _P_ONE
    v = min(_IDX[name] for name in fp | gp)
    df, dg = f.degree_in(v), g.degree_in(v)
    if df == 0:
        return poly_gcd(f, _content_in(g, v))
    if dg == 0:
        return poly_gcd(_content_in(f, v), g)
    cf, cg = _content_in(f, v), _content_in(g, v)
    c = poly_gcd(cf, cg)
    big, small = exact_div(f, cf), exact_div(g, cg)
    if df < dg:
        big, small = small, big
    while True:
        r = _pseudo_rem(big, small, v)
        if r.is_zero:
            break
        if r.degree_in(v) == 0:
            return _pp_normalize(c)
        big, small = small, _pp_normalize(exact_div(r, _content_in(r, v)))
    return _pp_normalize(c * exact_div(small, _content_in(small, v)))


# -- rational expressions ---------------------------------------------------

ExprLike = Union["RationalExpr", Polynomial, int, Fraction, str]


def _make(num: Polynomial, den: Polynomial) -> "RationalExpr":
    """Normalize a quotient of polynomials. Denominator must be nonzero."""
    if den.is_zero:
        raise SymbolicZeroDivisionError("division by symbolically zero expression")
    if num.is_zero:
        return EXPR_ZERO
    if not den.is_const:
        # cancel the common monomial content first; it is cheap and frequent.
        mins = [None] * _NV
        for terms in (num.terms, den.terms):
            for e in terms:
                for i, k in enumerate(e):
                    if mins[i] is None or k < mins[i]:
                        mins[i] = k
        if any(mins):
            shift = tuple(-m for m in mins)
            num = Polynomial(
                {tuple(x + s for x, s in zip(e, shift)): c for e, c in num.terms.items()}
            )
            den = Polynomial(
                {tuple(x + s for x, s in zip(e, shift)): c for e, c in den.terms.items()}
            )
    scale = _int_content_signed(den)
    if scale != 1:
        num = num.scale(1 / scale)
        den = den.scale(1 / scale)
    if den.is_const:
        return RationalExpr(num, _P_ONE)
    quotient = exact_div(num, den)
    if quotient is not None:
        return RationalExpr(quotient, _P_ONE)
    if len(den.terms) > 1 and (num.params() & den.params()):
        common = poly_gcd(num, den)
        if not (common.is_const and common.const_value() == 1):
            num = exact_div(num, common)
            den = exact_div(den, common)
            scale = _int_content_signed(den)
            if scale != 1:
                num = num.scale(1 / scale)
                den = den.scale(1 / scale)
            if den.is_const:
                return RationalExpr(num, _P_ONE)
    return RationalExpr(num, den)


class RationalExpr:
    """Quotient of two polynomials with an exact, decidable zero test."""

    __slots__ = ("num", "den")

    def __init__(self, num: Polynomial, den: Polynomial):
        self.num = num
        self.den = den

    # -- predicates --------------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return self.num.is_zero

    @property
    def is_const(self) -> bool:
        return self.num.is_const and self.den.is_const

    def const_value(self) -> Fraction:
        return self.num.const_value() / self.den.const_value()

    def params(self) -> set:
        return self.num.params() | self.den.params()

    def __eq__(self, other) -> bool:
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return (self.num * other.den - other.num * self.den).is_zero

    def __hash__(self):
        return hash((self.num, self.den))

    # -- arithmetic --------------------------------------------------------

    def __add__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if self.is_zero:
            return other
        if other.is_zero:
            return self
        if self.den == other.den:
            return _make(self.num + other.num, self.den)
        return _make(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __sub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other + (-self)

    def __neg__(self):
        return RationalExpr(-self.num, self.den)

    def __mul__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if self.is_zero or other.is_zero:
            return EXPR_ZERO
        return _make(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if other.is_zero:
            raise SymbolicZeroDivisionError("division by symbolically zero expression")
        return _make(self.num * other.den, self.den * other.num)

    def __rtruediv__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other / self

    def __pow__(self, n: int):
        if not isinstance(n, int):
            raise TypeError("exponent must be an integer")
        if n < 0:
            if self.is_zero:
                raise SymbolicZeroDivisionError("negative power of zero expression")
            return _make(self.den ** (-n), self.num ** (-n))
        return _make(self.num**n, self.den**n)

    # -- evaluation ---------------------------------------------------------

    def eval(self, point: Mapping[str, Fraction]) -> Fraction:
        den = self.den.eval(point)
        if den == 0:
            raise DenominatorVanishesError(
                f"denominator {_poly_str(self.den)} vanishes at "
                + ", ".join(f"{k}={point[k]}" for k in sorted(point)),
                point,
            )
        return self.num.eval(point) / den

    def __str__(self) -> str:
        return format_expr(self)

    def __repr__(self) -> str:
        return f"RationalExpr({format_expr(self)})"


EXPR_ZERO = RationalExpr(_P_ZERO, _P_ONE)
EXPR_ONE = RationalExpr(_P_ONE, _P_ONE)


def expr(value: ExprLike) -> RationalExpr:
    """Coerce an int, Fraction, Polynomial, or grammar string to an expression."""
    coerced = _coerce(value)
    if coerced is NotImplemented:
        raise TypeError(f"cannot interpret {value!r} as a rational expression")
    return coerced


def variable(name: str) -> RationalExpr:
    return RationalExpr(Polynomial.var(name), _P_ONE)


def _coerce(value):
    if isinstance(value, RationalExpr):
        return value
    if isinstance(value, Polynomial):
        return RationalExpr(value, _P_ONE)
    if isinstance(value, (int, Fraction)):
        return RationalExpr(Polynomial.const(value), _P_ONE)
    if isinstance(value, str):
        return parse_expr(value)
    return NotImplemented


# -- text grammar ------------------------------------------------------------
#
# expr   := term (('+' | '-') term)*
# term   := unary (('*' | '/') unary)*
# unary  := '-' unary | power
# power  := atom ('^' INT)?
# atom   := INT | IDENT | '(' expr ')'


def _tokenize(text: str):
    tokens = []
    i, n = 0, len(text)
    while i < n:
        ch = text[i]
        if ch.isspace():
            i += 1
            continue
        if ch.isdigit():
            j = i
            while j < n and text[j].isdigit():
                j += 1
            tokens.append(("int", text[i:j]))
            i = j
            continue
        if ch.isalpha() or ch == "_":
            j = i
            while j < n and (text[j].isalnum() or text[j] == "_"):
                j += 1
            tokens.append(("ident", text[i:j]))
            i = j
            continue
        if ch in "+-*/^()":
            tokens.append((ch, ch))
            i += 1
            continue
        raise ExprSyntaxError(f"unexpected character {ch!r} at position {i} in {text!r}")
    tokens.append(("end", ""))
    return tokens


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.tokens = _tokenize(text)
        self.pos = 0

    def peek(self):
        return self.tokens[self.pos][0]

    def take(self):
        tok = self.tokens[self.pos]
        self.pos += 1
        return tok

    def expect(self, kind):
        tok = self.take()
        if tok[0] != kind:
            raise ExprSyntaxError(
                f"expected {kind!r} but found {tok[1]!r} in {self.text!r}"
            )
        return tok

    def parse(self) -> RationalExpr:
        value = self.expr()
        if self.peek() != "end":
            raise ExprSyntaxError(
                f"trailing input {self.tokens[self.pos][1]!r} in {self.text!r}"
            )
        return value

    def expr(self) -> RationalExpr:
        value = self.term()
        while self.peek() in "+-":
            op = self.take()[0]
            rhs = self.term()
            value = value + rhs if op == "+" else value - rhs
        return value

    def term(self) -> RationalExpr:
        value = self.unary()
        while self.peek() in "*/":
            op = self.take()[0]
            rhs = self.unary()
            value = value * rhs if op == "*" else value / rhs
        return value

    def unary(self) -> RationalExpr:
        if self.peek() == "-":
            self.take()
            return -self.unary()
        return self.power()

    def power(self) -> RationalExpr:
        base = self.atom()
        if self.peek() == "^":
            self.take()
            tok = self.take()
            if tok[0] != "int":
                raise ExprSyntaxError(
                    f"exponent must be a nonnegative integer literal in {self.text!r}"
                )
            return base ** int(tok[1])
        return base

    def atom(self) -> RationalExpr:
        kind, value = self.take()
        if kind == "int":
            return RationalExpr(Polynomial.const(int(value)), _P_ONE)
        if kind == "ident":
            return variable(value)
        if kind == "(":
            inner = self.expr()
            self.expect(")")
            return inner
        raise ExprSyntaxError(f"unexpected token {value!r} in {self.text!r}")


def parse_expr(text: str) -> RationalExpr:
    """Parse expression text (integers, parameters, ``+ - * / ^``, parens)."""
    return _Parser(text).parse()


def _mono_str(exp: tuple) -> str:
    parts = []
    for i, k in enumerate(exp):
        if k == 1:
            parts.append(PARAMS[i])
        elif k > 1:
            parts.append(f"{PARAMS[i]}^{k}")
    return "*".join(parts)


def _poly_str(p: Polynomial) -> str:
    if p.is_zero:
        return "0"
    pieces = []
    for exp in sorted(p.terms, key=_grlex, reverse=True):
        coeff = p.terms[exp]
        mono = _mono_str(exp)
        if not mono:
            body = str(abs(coeff))
        elif abs(coeff) == 1:
            body = mono
        else:
            body = f"{abs(coeff)}*{mono}"
        if not pieces:
            pieces.append(body if coeff > 0 else f"-{body}")
        else:
            pieces.append(f"+ {body}" if coeff > 0 else f"- {body}")
    return " ".join(pieces)


def _den_needs_parens(den: Polynomial) -> bool:
    if len(den.terms) > 1:
        return True
    exp, coeff = den.leading()
    active = [k for k in exp if k]
    if not active:
        return False  # plain integer
    return coeff != 1 or len(active) > 1


def format_expr(e: RationalExpr) -> str:
    """Canonical printing: graded-lex term order, no redundant parentheses."""
    num = _poly_str(e.num)
    if e.den == _P_ONE:
        return num
    if len(e.num.terms) > 1:
        num = f"({num})"
    den = _poly_str(e.den)
    if _den_needs_parens(e.den):
        den = f"({den})"
    return f"{num}/{den}"


# -- matrices ----------------------------------------------------------------


class ExprMatrix:
    """Immutable rectangular matrix of rational expressions."""

    __slots__ = ("rows", "cols", "entries")

    def __init__(self, entries):
        self.entries = tuple(tuple(row) for row in entries)
        self.rows = len(self.entries)
        self.cols = len(self.entries[0]) if self.rows else 0
        for row in self.entries:
            if len(row) != self.cols:
                raise ValueError("ragged rows in matrix construction")

    @classmethod
    def from_rows(cls, rows: Iterable[Iterable[ExprLike]]) -> "ExprMatrix":
        return cls([[expr(v) for v in row] for row in rows])

    @classmethod
    def zero(cls, rows: int, cols: int) -> "ExprMatrix":
        return cls([[EXPR_ZERO] * cols for _ in range(rows)])

    @classmethod
    def identity(cls, n: int) -> "ExprMatrix":
        return cls(
            [[EXPR_ONE if i == j else EXPR_ZERO for j in range(n)] for i in range(n)]
        )

    def __getitem__(self, key):
        i, j = key
        return self.entries[i][j]

    @property
    def is_zero(self) -> bool:
        return all(e.is_zero for row in self.entries for e in row)

    def __eq__(self, other) -> bool:
        if not isinstance(other, ExprMatrix):
            return NotImplemented
        if (self.rows, self.cols) != (other.rows, other.cols):
            return False
        return all(
            self.entries[i][j] == other.entries[i][j]
            for i in range(self.rows)
            for j in range(self.cols)
        )

    def __hash__(self):
        return hash(self.entries)

    def __add__(self, other: "ExprMatrix") -> "ExprMatrix":
        self._same_shape(other)
        return ExprMatrix(
            [
                [x + y for x, y in zip(r1, r2)]
                for r1, r2 in zip(self.entries, other.entries)
            ]
        )

    def __sub__(self, other: "ExprMatrix") -> "ExprMatrix":
        self._same_shape(other)
        return ExprMatrix(
            [
                [x - y for x, y in zip(r1, r2)]
                for r1, r2 in zip(self.entries, other.entries)
            ]
        )

    def __neg__(self) -> "ExprMatrix":
        return ExprMatrix([[-x for x in row] for row in self.entries])

    def __matmul__(self, other: "ExprMatrix") -> "ExprMatrix":
        if self.cols != other.rows:
            raise ValueError(
                f"cannot multiply {self.rows}x{self.cols} by {other.rows}x{other.cols}"
            )
        out = []
        for i in range(self.rows):
            row = []
            for j in range(other.cols):
                acc = EXPR_ZERO
                for k in range(self.cols):
                    x = self.entries[i][k]
                    if x.is_zero:
                        continue
                    y = other.entries[k][j]
                    if y.is_zero:
                        continue
                    acc = acc + x * y
                row.append(acc)
            out.append(row)
        return ExprMatrix(out)

    def scale(self, factor: ExprLike) -> "ExprMatrix":
        f = expr(factor)
        return ExprMatrix([[f * x for x in row] for row in self.entries])

    def transpose(self) -> "ExprMatrix":
        return ExprMatrix(
            [[self.entries[i][j] for i in range(self.rows)] for j in range(self.cols)]
        )

    def trace(self) -> RationalExpr:
        self._square()
        acc = EXPR_ZERO
        for i in range(self.rows):
            acc = acc + self.entries[i][i]
        return acc

    def det(self) -> RationalExpr:
        self._square()
        n = self.rows
        if n == 0:
            return EXPR_ONE
        memo: dict = {}

        def minor(r: int, cols: tuple) -> RationalExpr:
            if r == n:
                return EXPR_ONE
            key = cols
            cached = memo.get(key)
            if cached is not None:
                return cached
            acc = EXPR_ZERO
            for pos, c in enumerate(cols):
                e = self.entries[r][c]
                if e.is_zero:
                    continue
                sub = minor(r + 1, cols[:pos] + cols[pos + 1 :])
                if sub.is_zero:
                    continue
                term = e * sub
                acc = acc + term if pos % 2 == 0 else acc - term
            memo[key] = acc
            return acc

        return minor(0, tuple(range(n)))

    def _minor_det(self, drop_row: int, drop_col: int) -> RationalExpr:
        sub = [
            [self.entries[i][j] for j in range(self.cols) if j != drop_col]
            for i in range(self.rows)
            if i != drop_row
        ]
        return ExprMatrix(sub).det()

    def adjugate(self) -> "ExprMatrix":
        self._square()
        n = self.rows
        out = [[EXPR_ZERO] * n for _ in range(n)]
        for i in range(n):
            for j in range(n):
                cof = self._minor_det(i, j)
                if (i + j) % 2:
                    cof = -cof
                out[j][i] = cof
        return ExprMatrix(out)

    def inverse(self) -> "ExprMatrix":
        d = self.det()
        if d.is_zero:
            raise SingularMatrixError("matrix determinant is identically zero")
        return self.adjugate().scale(EXPR_ONE / d)

    def map(self, fn) -> "ExprMatrix":
        return ExprMatrix([[fn(x) for x in row] for row in self.entries])

    def eval_at(self, point: Mapping[str, Fraction]):
        return [[x.eval(point) for x in row] for row in self.entries]

    def _square(self):
        if self.rows != self.cols:
            raise ValueError(f"matrix is {self.rows}x{self.cols}, not square")

    def _same_shape(self, other: "ExprMatrix"):
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise ValueError("matrix shape mismatch")

    def __str__(self) -> str:
        return "[" + "; ".join(
            ", ".join(format_expr(x) for x in row) for row in self.entries
        ) + "]"

    def __repr__(self) -> str:
        return f"ExprMatrix({self})"
