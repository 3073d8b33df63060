"""Levi-Civita connection and curvature of left-invariant metrics.

In an anholonomic left-invariant frame with structure constants C^p_ij the
connection coefficients and curvature are

    Gamma^m_ij = (1/2) g^{km} (C^p_ij g_pk + C^p_ki g_pj + C^p_kj g_ip)
    R^s_ijk    = Gamma^s_ip Gamma^p_jk - Gamma^s_jp Gamma^p_ik - C^p_ij Gamma^s_pk
    Ric_jk     = R^i_ijk,   RIC = Ric . g^{-1},   S = trace(RIC)

(the torsion-free condition appears as Gamma^m_ij - Gamma^m_ji = C^m_ij).
Everything is exact; classification labels are decided by symbolic zero
tests, never by sampling.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .expressions import EXPR_ZERO, ExprMatrix, RationalExpr, expr
from .liealgebra import LieAlgebra
from .structures import Metric

HALF = expr("1/2")
QUARTER = expr("1/4")

LABELS = ("flat", "ricci_flat", "einstein", "hermitian_ricci", "generic")


@dataclass(frozen=True)
class Christoffel:
    dim: int
    gamma: tuple  # gamma[i][j][m] = Gamma^m_ij

    def component(self, i: int, j: int, m: int) -> RationalExpr:
        return self.gamma[i][j][m]


def christoffel(algebra: LieAlgebra, g: Metric, _ginv: ExprMatrix = None) -> Christoffel:
    n = algebra.dim
    if g.dim != n:
        raise ValueError("metric dimension does not match the algebra")
    ginv = g.matrix.inverse() if _ginv is None else _ginv
    gm = g.matrix
    # lowered brackets: low[x][y][z] = sum_p C^p_xy g_pz
    low = [[[EXPR_ZERO] * n for _ in range(n)] for _ in range(n)]
    for (x, y, p, c) in algebra.nonzero_constants():
        for z in range(n):
            gpz = gm[p, z]
            if not gpz.is_zero:
                low[x][y][z] = low[x][y][z] + c * gpz
    gamma = [[[EXPR_ZERO] * n for _ in range(n)] for _ in range(n)]
    for i in range(n):
        for j in range(n):
            inner = [low[i][j][k] + low[k][i][j] + low[k][j][i] for k in range(n)]
            for m in range(n):
                acc = EXPR_ZERO
                for k in range(n):
                    term = inner[k]
                    if term.is_zero:
                        continue
                    gkm = ginv[k, m]
                    if gkm.is_zero:
                        continue
                    acc = acc + term * gkm
                if not acc.is_zero:
                    gamma[i][j][m] = HALF * acc
    frozen = tuple(tuple(tuple(row) for row in plane) for plane in gamma)
    return Christoffel(n, frozen)


def torsion_residuals(algebra: LieAlgebra, gam: Christoffel):
    """Gamma^m_ij - Gamma^m_ji - C^m_ij for all components; empty iff torsion-free."""
    n = algebra.dim
    bad = []
    for i in range(n):
        for j in range(n):
            for m in range(n):
                res = gam.gamma[i][j][m] - gam.gamma[j][i][m] - algebra.c(i, j, m)
                if not res.is_zero:
                    bad.append((i + 1, j + 1, m + 1, res))
    return bad


def connection_metric_residuals(algebra: LieAlgebra, gam: Christoffel, g: Metric):
    """g(nabla_i e_j, e_k) + g(e_j, nabla_i e_k) must vanish for a metric connection."""
    n = algebra.dim
    bad = []
    for i in range(n):
        for j in range(n):
            for k in range(n):
                acc = EXPR_ZERO
                for m in range(n):
                    acc = acc + gam.gamma[i][j][m] * g(m, k)
                    acc = acc + gam.gamma[i][k][m] * g(j, m)
                if not acc.is_zero:
                    bad.append((i + 1, j + 1, k + 1, acc))
    return bad


@dataclass(frozen=True)
class CurvatureTensor:
    dim: int
    comps: tuple  # comps[i][j][k][s] = R^s_ijk

    def component(self, i: int, j: int, k: int, s: int) -> RationalExpr:
        return self.comps[i][j][k][s]

    @property
    def is_zero(self) -> bool:
        n = self.dim
        return all(
            self.comps[i][j][k][s].is_zero
            for i in range(n)
            for j in range(n)
            for k in range(n)
            for s in range(n)
        )

    def first_nonzero(self):
        n = self.dim
        for i in range(n):
            for j in range(n):
                for k in range(n):
                    for s in range(n):
                        if not self.comps[i][j][k][s].is_zero:
                            return (i + 1, j + 1, k + 1, s + 1, self.comps[i][j][k][s])
        return None


def curvature(algebra: LieAlgebra, gam: Christoffel) -> CurvatureTensor:
    n = algebra.dim
    g = gam.gamma
    comps = [[[[EXPR_ZERO] * n for _ in range(n)] for _ in range(n)] for _ in range(n)]
    for i in range(n):
        for j in range(n):
            cij = [algebra.c(i, j, p) for p in range(n)]
            for k in range(n):
                for s in range(n):
                    acc = EXPR_ZERO
                    for p in range(n):
                        a, b = g[i][p][s], g[j][k][p]
                        if not a.is_zero and not b.is_zero:
                            acc = acc + a * b
                        a, b = g[j][p][s], g[i][k][p]
                        if not a.is_zero and not b.is_zero:
                            acc = acc - a * b
                        c = cij[p]
                        if not c.is_zero:
                            b = g[p][k][s]
                            if not b.is_zero:
                                acc = acc - c * b
                    comps[i][j][k][s] = acc
    frozen = tuple(
        tuple(tuple(tuple(row) for row in plane) for plane in block) for block in comps
    )
    return CurvatureTensor(n, frozen)


@dataclass(frozen=True)
class RicciData:
    ricci: ExprMatrix
    operator: ExprMatrix
    scalar: RationalExpr


def ricci(
    algebra: LieAlgebra,
    riemann: CurvatureTensor,
    g: Metric,
    _ginv: ExprMatrix = None,
) -> RicciData:
    """Ric_jk = R^i_ijk, operator RIC = Ric . g^{-1}, scalar S = trace(RIC)."""
    n = algebra.dim
    ginv = g.matrix.inverse() if _ginv is None else _ginv
    ric_rows = []
    for j in range(n):
        row = []
        for k in range(n):
            acc = EXPR_ZERO
            for i in range(n):
                acc = acc + riemann.comps[i][j][k][i]
            row.append(acc)
        ric_rows.append(row)
    ric = ExprMatrix(ric_rows)
    operator = ric @ ginv
    return RicciData(ricci=ric, operator=operator, scalar=operator.trace())


def scalar_curvature(data: RicciData) -> RationalExpr:
    return data.scalar


@dataclass(frozen=True)
class CurvatureBundle:
    christoffel: Christoffel
    riemann: CurvatureTensor
    ricci: RicciData
    metric: Metric
    metric_inverse: ExprMatrix


def curvature_bundle(algebra: LieAlgebra, g: Metric) -> CurvatureBundle:
    """Run the whole pipeline sharing one metric inversion."""
    ginv = g.matrix.inverse()
    gam = christoffel(algebra, g, _ginv=ginv)
    riem = curvature(algebra, gam)
    ric = ricci(algebra, riem, g, _ginv=ginv)
    return CurvatureBundle(gam, riem, ric, g, ginv)


@dataclass(frozen=True)
class Classification:
    label: str
    einstein_factor: Optional[RationalExpr]
    hermitian: bool


def hermitian_residual(ric: ExprMatrix, j_matrix: ExprMatrix) -> ExprMatrix:
    """Ric(JX, JY) - Ric(X, Y) as a matrix: Jt . Ric . J - Ric."""
    return j_matrix.transpose() @ ric @ j_matrix - ric


def anti_invariance_residual(ric: ExprMatrix, j_matrix: ExprMatrix) -> ExprMatrix:
    """Ric(JX, JY) + Ric(X, Y); identically zero for any para-Kahler metric."""
    return j_matrix.transpose() @ ric @ j_matrix + ric


def classify(
    bundle: CurvatureBundle, j_matrix: ExprMatrix
) -> Classification:
    """Most specific label wins: flat > ricci_flat > einstein > hermitian > generic."""
    ric = bundle.ricci.ricci
    hermitian = hermitian_residual(ric, j_matrix).is_zero
    if bundle.riemann.is_zero:
        return Classification("flat", EXPR_ZERO, hermitian)
    if ric.is_zero:
        return Classification("ricci_flat", EXPR_ZERO, hermitian)
    factor = bundle.ricci.scalar / expr(bundle.metric.dim)
    if (ric - bundle.metric.matrix.scale(factor)).is_zero:
        return Classification("einstein", factor, hermitian)
    if hermitian:
        return Classification("hermitian_ricci", None, True)
    return Classification("generic", None, False)


def label_holds(
    label: str, bundle: CurvatureBundle, j_matrix: ExprMatrix,
    factor: Optional[RationalExpr] = None,
) -> bool:
    """Check the property named by a label directly (labels nest downward)."""
    if label == "flat":
        return bundle.riemann.is_zero
    if label == "ricci_flat":
        return bundle.ricci.ricci.is_zero
    if label == "einstein":
        s4 = bundle.ricci.scalar / expr(bundle.metric.dim)
        if not (bundle.ricci.ricci - bundle.metric.matrix.scale(s4)).is_zero:
            return False
        return factor is None or (s4 - factor).is_zero
    if label == "hermitian_ricci":
        return hermitian_residual(bundle.ricci.ricci, j_matrix).is_zero
    raise ValueError(f"unknown label {label!r}")


def compare_ric_operator(computed: ExprMatrix, expected: ExprMatrix):
    """Entrywise residuals (i, j, computed - expected), 1-based; empty iff equal."""
    if (computed.rows, computed.cols) != (expected.rows, expected.cols):
        raise ValueError("shape mismatch in Ricci-operator comparison")
    residuals = []
    for i in range(computed.rows):
        for j in range(computed.cols):
            diff = computed[i, j] - expected[i, j]
            if not diff.is_zero:
                residuals.append((i + 1, j + 1, diff))
    return residuals


def bianchi_residuals(riemann: CurvatureTensor):
    """First Bianchi identity: cyclic sum of R^s_ijk over (i, j, k)."""
    n = riemann.dim
    bad = []
    for i in range(n):
        for j in range(n):
            for k in range(n):
                for s in range(n):
                    acc = (
                        riemann.comps[i][j][k][s]
                        + riemann.comps[j][k][i][s]
                        + riemann.comps[k][i][j][s]
                    )
                    if not acc.is_zero:
                        bad.append((i + 1, j + 1, k + 1, s + 1, acc))
    return bad


def antisymmetry_residuals(riemann: CurvatureTensor):
    n = riemann.dim
    bad = []
    for i in range(n):
        for j in range(n):
            for k in range(n):
                for s in range(n):
                    acc = riemann.comps[i][j][k][s] + riemann.comps[j][i][k][s]
                    if not acc.is_zero:
                        bad.append((i + 1, j + 1, k + 1, s + 1, acc))
    return bad
