"""Lie algebras with symbolic structure constants.

Structure constants C^k_ij are stored densely (dimensions here are 4 or 5),
skew-symmetrized from a sparse bracket table.  The Chevalley-Eilenberg
differential on invariant forms uses the sign convention

    d(alpha)(X, Y)    = -alpha([X, Y])
    d(omega)(X, Y, Z) = -omega([X,Y], Z) - omega([Y,Z], X) - omega([Z,X], Y)

so that for a central extension d(eta) = -omega on the base.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional, Sequence, Tuple

from . import numeric
from .expressions import (
    EXPR_ONE,
    EXPR_ZERO,
    ExprLike,
    ExprMatrix,
    Polynomial,
    RationalExpr,
    expr,
    format_expr,
)
from .sampling import DeterministicRng, sample_point


class DimensionMismatchError(ValueError):
    pass


class OddDimensionError(ValueError):
    pass


@dataclass(frozen=True)
class ParamDomain:
    """Admissible values of one parameter.

    ``kind`` is one of ``free``, ``positive``, ``open-interval``; an interval
    may be half-open by leaving ``lo`` or ``hi`` unset.  ``excluded`` lists
    isolated forbidden values on top of the kind constraint.
    """

    kind: str = "free"
    lo: Optional[Fraction] = None
    hi: Optional[Fraction] = None
    excluded: Tuple[Fraction, ...] = ()

    def __post_init__(self):
        if self.kind not in ("free", "positive", "open-interval"):
            raise ValueError(f"unknown domain kind {self.kind!r}")
        if self.kind == "open-interval" and self.lo is None and self.hi is None:
            raise ValueError("open-interval domain needs at least one endpoint")
        if self.lo is not None and self.hi is not None and not self.lo < self.hi:
            raise ValueError("interval endpoints must satisfy lo < hi")

    def admits(self, value: Fraction) -> bool:
        if value in self.excluded:
            return False
        if self.kind == "positive":
            return value > 0
        if self.kind == "open-interval":
            if self.lo is not None and not value >= self.lo:
                return False
            if self.hi is not None and not value < self.hi:
                return False
        return True


FREE = ParamDomain()


class TwoForm:
    """Skew bilinear form on the basis, omega(e_i, e_j) = matrix entry (i, j)."""

    __slots__ = ("matrix",)

    def __init__(self, matrix: ExprMatrix):
        matrix._square()
        for i in range(matrix.rows):
            for j in range(i, matrix.cols):
                if not (matrix[i, j] + matrix[j, i]).is_zero:
                    raise ValueError(f"two-form is not skew at ({i + 1}, {j + 1})")
        self.matrix = matrix

    @classmethod
    def from_terms(cls, dim: int, terms: Iterable[Tuple[int, int, ExprLike]]) -> "TwoForm":
        """Build from 1-based coefficients of e^i ^ e^j with i < j."""
        grid = [[EXPR_ZERO] * dim for _ in range(dim)]
        for i, j, value in terms:
            if not (1 <= i < j <= dim):
                raise DimensionMismatchError(
                    f"two-form term indices ({i}, {j}) out of range for dim {dim}"
                )
            v = expr(value)
            grid[i - 1][j - 1] = grid[i - 1][j - 1] + v
            grid[j - 1][i - 1] = grid[j - 1][i - 1] - v
        return cls(ExprMatrix(grid))

    @property
    def dim(self) -> int:
        return self.matrix.rows

    def __call__(self, i: int, j: int) -> RationalExpr:
        return self.matrix[i, j]

    @property
    def is_zero(self) -> bool:
        return self.matrix.is_zero

    def __eq__(self, other) -> bool:
        return isinstance(other, TwoForm) and self.matrix == other.matrix

    def __hash__(self):
        return hash(self.matrix)

    def terms(self) -> Tuple[Tuple[int, int, RationalExpr], ...]:
        """Nonzero coefficients, 1-based, i < j."""
        out = []
        for i in range(self.dim):
            for j in range(i + 1, self.dim):
                if not self.matrix[i, j].is_zero:
                    out.append((i + 1, j + 1, self.matrix[i, j]))
        return tuple(out)

    def __repr__(self):
        body = " + ".join(f"({format_expr(v)})*e{i}^e{j}" for i, j, v in self.terms())
        return f"TwoForm({body or '0'})"


class ThreeForm:
    """Totally antisymmetric rank-3 array of expressions."""

    __slots__ = ("dim", "_comp")

    def __init__(self, dim: int, components: dict):
        # components keyed by strictly increasing (i, j, k), 0-based
        self.dim = dim
        self._comp = {k: v for k, v in components.items() if not v.is_zero}

    def component(self, i: int, j: int, k: int) -> RationalExpr:
        if len({i, j, k}) < 3:
            return EXPR_ZERO
        order = sorted((i, j, k))
        value = self._comp.get(tuple(order), EXPR_ZERO)
        # parity of the permutation taking sorted order to (i, j, k)
        perm = (order.index(i), order.index(j), order.index(k))
        inversions = sum(
            1 for x in range(3) for y in range(x + 1, 3) if perm[x] > perm[y]
        )
        return -value if inversions % 2 else value

    @property
    def is_zero(self) -> bool:
        return not self._comp

    def first_nonzero(self):
        if not self._comp:
            return None
        key = min(self._comp)
        return (key[0] + 1, key[1] + 1, key[2] + 1, self._comp[key])


class LieAlgebra:
    """Finite-dimensional Lie algebra given by structure constants."""

    __slots__ = ("name", "dim", "params", "_c", "_nonzero")

    def __init__(self, name: str, dim: int, structure, params=()):
        self.name = name
        self.dim = dim
        self.params = tuple(params)
        self._c = structure
        nz = []
        for i in range(dim):
            for j in range(dim):
                for k in range(dim):
                    if not structure[i][j][k].is_zero:
                        nz.append((i, j, k, structure[i][j][k]))
        self._nonzero = tuple(nz)

    @classmethod
    def from_brackets(
        cls,
        name: str,
        dim: int,
        brackets: Iterable[Tuple[int, int, int, ExprLike]],
        params: Iterable[Tuple[str, ParamDomain]] = (),
    ) -> "LieAlgebra":
        """Build from 1-based sparse entries (i, j, k, C^k_ij) with i < j."""
        c = [[[EXPR_ZERO] * dim for _ in range(dim)] for _ in range(dim)]
        for i, j, k, value in brackets:
            if not (1 <= i < j <= dim and 1 <= k <= dim):
                raise DimensionMismatchError(
                    f"bracket indices ({i}, {j}, {k}) out of range for dim {dim}"
                )
            v = expr(value)
            c[i - 1][j - 1][k - 1] = c[i - 1][j - 1][k - 1] + v
            c[j - 1][i - 1][k - 1] = c[j - 1][i - 1][k - 1] - v
        frozen = tuple(tuple(tuple(row) for row in plane) for plane in c)
        return cls(name, dim, frozen, params)

    def c(self, i: int, j: int, k: int) -> RationalExpr:
        """Structure constant C^k_ij, 0-based."""
        return self._c[i][j][k]

    def nonzero_constants(self) -> Tuple[Tuple[int, int, int, RationalExpr], ...]:
        """All nonzero (i, j, k, C^k_ij), both index orders, 0-based."""
        return self._nonzero

    def sparse_brackets(self) -> Tuple[Tuple[int, int, int, RationalExpr], ...]:
        """Nonzero entries with i < j only, 1-based (serialization order)."""
        return tuple(
            (i + 1, j + 1, k + 1, v) for (i, j, k, v) in self._nonzero if i < j
        )

    def bracket(self, x: Sequence[ExprLike], y: Sequence[ExprLike]):
        if len(x) != self.dim or len(y) != self.dim:
            raise DimensionMismatchError(
                f"bracket needs vectors of length {self.dim}"
            )
        xs = [expr(v) for v in x]
        ys = [expr(v) for v in y]
        out = [EXPR_ZERO] * self.dim
        for i, j, k, cexpr in self._nonzero:
            if xs[i].is_zero or ys[j].is_zero:
                continue
            out[k] = out[k] + cexpr * xs[i] * ys[j]
        return tuple(out)

    def bracket_basis(self, i: int, j: int) -> Tuple[RationalExpr, ...]:
        """[e_i, e_j] as a coefficient vector, 0-based indices."""
        return tuple(self._c[i][j][k] for k in range(self.dim))

    def structure_eval(self, point) -> list:
        """Structure constants as nested lists of Fractions at a sample."""
        n = self.dim
        return [
            [[self._c[i][j][k].eval(point) for k in range(n)] for j in range(n)]
            for i in range(n)
        ]

    def denominators(self) -> Tuple[Polynomial, ...]:
        dens = []
        for _, _, _, v in self._nonzero:
            if not v.den.is_const:
                dens.append(v.den)
        return tuple(dens)

    def __repr__(self):
        return f"LieAlgebra({self.name!r}, dim={self.dim})"


@dataclass(frozen=True)
class JacobiReport:
    ok: bool
    violation: Optional[Tuple[int, int, int, int, str]] = None  # (i, j, k, m, residual)


def jacobi_check(algebra: LieAlgebra) -> JacobiReport:
    """Check sum_cyclic [e_i, [e_j, e_k]] = 0 symbolically over basis triples."""
    n = algebra.dim
    basis = [
        tuple(EXPR_ONE if p == q else EXPR_ZERO for q in range(n)) for p in range(n)
    ]
    for i in range(n):
        for j in range(i + 1, n):
            for k in range(j + 1, n):
                total = [EXPR_ZERO] * n
                for x, y, z in ((i, j, k), (j, k, i), (k, i, j)):
                    inner = algebra.bracket(basis[y], basis[z])
                    outer = algebra.bracket(basis[x], inner)
                    total = [t + o for t, o in zip(total, outer)]
                for m in range(n):
                    if not total[m].is_zero:
                        return JacobiReport(
                            False, (i + 1, j + 1, k + 1, m + 1, format_expr(total[m]))
                        )
    return JacobiReport(True)


def ce_differential_1(algebra: LieAlgebra, alpha: Sequence[ExprLike]) -> TwoForm:
    """d(alpha)(e_i, e_j) = -alpha([e_i, e_j]) for a left-invariant one-form."""
    n = algebra.dim
    if len(alpha) != n:
        raise DimensionMismatchError(f"one-form needs {n} components")
    coeffs = [expr(v) for v in alpha]
    grid = [[EXPR_ZERO] * n for _ in range(n)]
    for i in range(n):
        for j in range(n):
            acc = EXPR_ZERO
            for p in range(n):
                cp = algebra.c(i, j, p)
                if not cp.is_zero and not coeffs[p].is_zero:
                    acc = acc + cp * coeffs[p]
            grid[i][j] = -acc
    return TwoForm(ExprMatrix(grid))


def ce_differential_2(algebra: LieAlgebra, omega: TwoForm) -> ThreeForm:
    """d(omega) on basis triples; vanishes iff omega is closed."""
    n = algebra.dim
    if omega.dim != n:
        raise DimensionMismatchError("two-form dimension does not match the algebra")
    comps = {}
    for i in range(n):
        for j in range(i + 1, n):
            for k in range(j + 1, n):
                acc = EXPR_ZERO
                for x, y, z in ((i, j, k), (j, k, i), (k, i, j)):
                    for p in range(n):
                        cp = algebra.c(x, y, p)
                        if cp.is_zero:
                            continue
                        w = omega(p, z)
                        if not w.is_zero:
                            acc = acc - cp * w
                comps[(i, j, k)] = acc
    return ThreeForm(n, comps)


@dataclass(frozen=True)
class SymplecticReport:
    ok: bool
    closed: bool
    det: RationalExpr
    first_nonclosed: Optional[Tuple[int, int, int, RationalExpr]] = None


def is_symplectic(algebra: LieAlgebra, omega: TwoForm) -> SymplecticReport:
    """Closedness (symbolic) plus nondegeneracy (det not identically zero)."""
    if algebra.dim % 2:
        raise OddDimensionError("symplectic forms need even dimension")
    d_omega = ce_differential_2(algebra, omega)
    closed = d_omega.is_zero
    det = omega.matrix.det()
    return SymplecticReport(
        ok=closed and not det.is_zero,
        closed=closed,
        det=det,
        first_nonclosed=None if closed else d_omega.first_nonzero(),
    )


def pfaffian4(omega: TwoForm) -> RationalExpr:
    """Pfaffian of a 4x4 skew form: w12*w34 - w13*w24 + w14*w23."""
    if omega.dim != 4:
        raise DimensionMismatchError("pfaffian4 needs a 4-dimensional form")
    m = omega.matrix
    return m[0, 1] * m[2, 3] - m[0, 2] * m[1, 3] + m[0, 3] * m[1, 2]


def center(algebra: LieAlgebra, seed: int = 12345) -> Tuple[Tuple[Fraction, ...], ...]:
    """Basis of the center, computed at a generic sample then certified.

    The nullspace of ad at any sample contains the center; each candidate
    vector is then verified symbolically, and an unlucky (non-generic) sample
    triggers a retry with the next deterministic point.
    """
    n = algebra.dim
    domains = dict(algebra.params)
    avoid = algebra.denominators()
    rng = DeterministicRng(seed)
    for _ in range(8):
        point = sample_point(rng, domains, avoid)
        c_num = algebra.structure_eval(point)
        rows = []
        for j in range(n):
            for k in range(n):
                rows.append([c_num[i][j][k] for i in range(n)])
        candidates = numeric.nullspace(rows)
        certified = []
        for v in candidates:
            vec = [expr(Fraction(x)) for x in v]
            ok = True
            for j in range(n):
                basis_j = tuple(EXPR_ONE if q == j else EXPR_ZERO for q in range(n))
                for comp in algebra.bracket(vec, basis_j):
                    if not comp.is_zero:
                        ok = False
                        break
                if not ok:
                    break
            if ok:
                certified.append(tuple(Fraction(x) for x in v))
            else:
                certified = None
                break
        if certified is not None:
            return tuple(certified)
    raise RuntimeError(f"center computation kept hitting non-generic samples for {algebra.name}")
