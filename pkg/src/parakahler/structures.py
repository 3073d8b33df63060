"""Para-complex structure axioms, compatibility, and derived metrics.

An endomorphism J (columns = images of basis vectors) is para-complex when
J^2 = Id with balanced eigenvalues (trace J = 0) and its Nijenhuis tensor
vanishes.  Compatibility with a two-form omega means omega(JX, Y) +
omega(X, JY) = 0; the associated metric is g(X, Y) = omega(X, JY), i.e.
g = omega . J as matrices.  All checks are symbolic and report structured
findings instead of raising, so that broken inputs can be diagnosed.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping, Optional, Tuple

from . import numeric
from .expressions import EXPR_ZERO, ExprMatrix, RationalExpr, format_expr
from .liealgebra import LieAlgebra, TwoForm


class MetricAsymmetryError(ValueError):
    """omega . J came out asymmetric: omega and J are not compatible."""


class SingularMetricError(ValueError):
    pass


class RankMismatchError(ValueError):
    """Eigenspace dimensions of J differ from dim/2."""


@dataclass(frozen=True)
class AxiomIssue:
    where: str
    residual: str


@dataclass(frozen=True)
class AxiomCheck:
    axiom: str
    ok: bool
    issues: Tuple[AxiomIssue, ...] = ()

    @property
    def first_issue(self) -> Optional[AxiomIssue]:
        return self.issues[0] if self.issues else None


_MAX_ISSUES = 8


def _collect_matrix_issues(label: str, residual: ExprMatrix):
    issues = []
    for i in range(residual.rows):
        for j in range(residual.cols):
            entry = residual[i, j]
            if not entry.is_zero:
                issues.append(AxiomIssue(f"{label}[{i + 1},{j + 1}]", format_expr(entry)))
                if len(issues) >= _MAX_ISSUES:
                    return issues
    return issues


def check_involution(j_matrix: ExprMatrix) -> AxiomCheck:
    """J^2 = Id entrywise and trace J = 0, both symbolically."""
    j_matrix._square()
    residual = j_matrix @ j_matrix - ExprMatrix.identity(j_matrix.rows)
    issues = _collect_matrix_issues("J^2-Id", residual)
    tr = j_matrix.trace()
    if not tr.is_zero:
        issues.append(AxiomIssue("trace(J)", format_expr(tr)))
    return AxiomCheck("involution", not issues, tuple(issues))


def check_omega_compat(omega: TwoForm, j_matrix: ExprMatrix) -> AxiomCheck:
    """omega(JX, Y) + omega(X, JY) = 0, cross-checked as omega(JX,JY) = -omega."""
    w = omega.matrix
    jt = j_matrix.transpose()
    primary = jt @ w + w @ j_matrix
    issues = _collect_matrix_issues("Jt*w+w*J", primary)
    crosscheck = jt @ w @ j_matrix + w
    issues.extend(_collect_matrix_issues("w(J.,J.)+w", crosscheck))
    return AxiomCheck("omega-compat", not issues, tuple(issues))


class NijenhuisTensor:
    """Components N^k_ij of the integrability obstruction."""

    __slots__ = ("dim", "comps")

    def __init__(self, dim: int, comps):
        self.dim = dim
        self.comps = comps  # comps[i][j][k] = N^k_ij

    def component(self, i: int, j: int, k: int) -> RationalExpr:
        return self.comps[i][j][k]

    @property
    def is_zero(self) -> bool:
        return all(
            self.comps[i][j][k].is_zero
            for i in range(self.dim)
            for j in range(self.dim)
            for k in range(self.dim)
        )

    def first_nonzero(self):
        for i in range(self.dim):
            for j in range(self.dim):
                for k in range(self.dim):
                    if not self.comps[i][j][k].is_zero:
                        return (i + 1, j + 1, k + 1, self.comps[i][j][k])
        return None

    def as_check(self) -> AxiomCheck:
        issues = []
        for i in range(self.dim):
            for j in range(self.dim):
                for k in range(self.dim):
                    entry = self.comps[i][j][k]
                    if not entry.is_zero:
                        issues.append(
                            AxiomIssue(f"N[{i + 1},{j + 1};{k + 1}]", format_expr(entry))
                        )
                        if len(issues) >= _MAX_ISSUES:
                            return AxiomCheck("nijenhuis", False, tuple(issues))
        return AxiomCheck("nijenhuis", not issues, tuple(issues))


def nijenhuis(algebra: LieAlgebra, j_matrix: ExprMatrix) -> NijenhuisTensor:
    """N^k_ij = C^k_ij + J^l_i J^m_j C^k_lm - J^l_i J^k_m C^m_lj - J^l_j J^k_m C^m_il."""
    n = algebra.dim
    if j_matrix.rows != n:
        raise ValueError("endomorphism dimension does not match the algebra")
    j = j_matrix.entries
    comps = [[[algebra.c(i, jj, k) for k in range(n)] for jj in range(n)] for i in range(n)]
    for (l, m, k, c) in algebra.nonzero_constants():
        # + J^l_i J^m_j C^k_lm
        for i in range(n):
            jli = j[l][i]
            if jli.is_zero:
                continue
            for jj in range(n):
                jmj = j[m][jj]
                if jmj.is_zero:
                    continue
                comps[i][jj][k] = comps[i][jj][k] + jli * jmj * c
    for (l, jj, m, c) in algebra.nonzero_constants():
        # - J^l_i J^k_m C^m_lj
        for i in range(n):
            jli = j[l][i]
            if jli.is_zero:
                continue
            for k in range(n):
                jkm = j[k][m]
                if jkm.is_zero:
                    continue
                comps[i][jj][k] = comps[i][jj][k] - jli * jkm * c
    for (i, l, m, c) in algebra.nonzero_constants():
        # - J^l_j J^k_m C^m_il
        for jj in range(n):
            jlj = j[l][jj]
            if jlj.is_zero:
                continue
            for k in range(n):
                jkm = j[k][m]
                if jkm.is_zero:
                    continue
                comps[i][jj][k] = comps[i][jj][k] - jlj * jkm * c
    frozen = tuple(tuple(tuple(row) for row in plane) for plane in comps)
    return NijenhuisTensor(n, frozen)


class Metric:
    """Symmetric bilinear form g_ij on the basis."""

    __slots__ = ("matrix",)

    def __init__(self, matrix: ExprMatrix):
        matrix._square()
        for i in range(matrix.rows):
            for j in range(i + 1, matrix.cols):
                if not (matrix[i, j] - matrix[j, i]).is_zero:
                    raise MetricAsymmetryError(
                        f"metric asymmetric at ({i + 1}, {j + 1}): "
                        f"{format_expr(matrix[i, j])} vs {format_expr(matrix[j, i])}"
                    )
        self.matrix = matrix

    @property
    def dim(self) -> int:
        return self.matrix.rows

    def __call__(self, i: int, j: int) -> RationalExpr:
        return self.matrix[i, j]

    def __eq__(self, other):
        return isinstance(other, Metric) and self.matrix == other.matrix

    def __hash__(self):
        return hash(self.matrix)

    def __repr__(self):
        return f"Metric({self.matrix})"


def metric_from(omega: TwoForm, j_matrix: ExprMatrix) -> Metric:
    """g = omega . J  (g_ij = omega_ik J^k_j); raises if the result is asymmetric."""
    return Metric(omega.matrix @ j_matrix)


def omega_from(g: Metric, j_matrix: ExprMatrix) -> TwoForm:
    """Recover omega(X, Y) = g(X, JY) = (g . J)_ij; closes the compatibility loop."""
    return TwoForm(g.matrix @ j_matrix)


def check_metric_compat(g: Metric, j_matrix: ExprMatrix) -> AxiomCheck:
    """g(JX, Y) + g(X, JY) = 0 entrywise, symbolically."""
    residual = j_matrix.transpose() @ g.matrix + g.matrix @ j_matrix
    issues = _collect_matrix_issues("Jt*g+g*J", residual)
    return AxiomCheck("metric-compat", not issues, tuple(issues))


def signature_at(g: Metric, point: Mapping[str, Fraction]) -> Tuple[int, int]:
    """Exact signature (p, q) of g at a sample, by symmetric Gaussian reduction."""
    m = [list(row) for row in g.matrix.eval_at(point)]
    n = len(m)
    active = list(range(n))
    plus = minus = 0
    while active:
        pivot = next((k for k in active if m[k][k] != 0), None)
        if pivot is None:
            pair = next(
                (
                    (i, j)
                    for i in active
                    for j in active
                    if i < j and m[i][j] != 0
                ),
                None,
            )
            if pair is None:
                raise SingularMetricError("metric is singular at this sample")
            i, j = pair
            for col in range(n):
                m[i][col] += m[j][col]
            for row in range(n):
                m[row][i] += m[row][j]
            pivot = i
        d = m[pivot][pivot]
        if d > 0:
            plus += 1
        else:
            minus += 1
        active.remove(pivot)
        for i in active:
            if m[i][pivot] != 0:
                factor = m[i][pivot] / d
                for col in range(n):
                    m[i][col] -= factor * m[pivot][col]
                for row in range(n):
                    m[row][i] -= factor * m[row][pivot]
    return plus, minus


@dataclass(frozen=True)
class EigenSplit:
    plus_basis: Tuple[Tuple[Fraction, ...], ...]
    minus_basis: Tuple[Tuple[Fraction, ...], ...]
    plus_closed: bool
    minus_closed: bool


def _span_closed_under_bracket(algebra: LieAlgebra, basis) -> bool:
    """Certify [span, span] within span using rational left-annihilators."""
    rows = [list(map(Fraction, v)) for v in basis]
    annihilators = numeric.nullspace(rows)
    for r, u in enumerate(basis):
        for v in basis[r + 1 :]:
            product = algebra.bracket([Fraction(x) for x in u], [Fraction(x) for x in v])
            for w in annihilators:
                acc = EXPR_ZERO
                for wk, pk in zip(w, product):
                    if wk and not pk.is_zero:
                        acc = acc + pk * wk
                if not acc.is_zero:
                    return False
    return True


def eigen_split(
    algebra: LieAlgebra, j_matrix: ExprMatrix, point: Mapping[str, Fraction]
) -> EigenSplit:
    """Plus/minus eigenbases of J at a sample, with symbolic closure checks."""
    n = algebra.dim
    jv = j_matrix.eval_at(point)
    eye = numeric.mat_identity(n)
    plus = numeric.nullspace(numeric.mat_sub(jv, eye))
    minus = numeric.nullspace([[v + e for v, e in zip(r1, r2)] for r1, r2 in zip(jv, eye)])
    if len(plus) != n // 2 or len(minus) != n // 2:
        raise RankMismatchError(
            f"eigenspace dimensions ({len(plus)}, {len(minus)}) differ from "
            f"({n // 2}, {n // 2})"
        )
    return EigenSplit(
        plus_basis=tuple(plus),
        minus_basis=tuple(minus),
        plus_closed=_span_closed_under_bracket(algebra, plus),
        minus_closed=_span_closed_under_bracket(algebra, minus),
    )
