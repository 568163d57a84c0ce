"""Floating-point layer for the accretive minor inequality.

A real matrix is accretive when its symmetric part (A + A^T)/2 is positive
semidefinite, strictly accretive when that part is positive definite.  This
module provides the numeric machinery (cyclic Jacobi eigensolver, PSD checks
and square roots, the congruence factorization A = H^{1/2}(I + S)H^{1/2} with
S skew), the verifiers for determinant positivity, adjugate accretivity and
the contiguous-minor inequality

    sqrt(det A_{n-1}(1,1) det A_{n-1}(2,2))
        >= |(det A_{n-1}(1,2) + det A_{n-1}(2,1)) / 2|,

plus the complex diagnostic: over C with (A + A*)/2 >= 0 the transpose-based
analogue of the inequality fails, and both a hard-coded 4x4 witness and a
seeded randomized search for further violations are provided.

Everything works on plain Python floats; no external numeric dependency.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .detkit import adjugate, det_bareiss
from .identity import VERIFIED, CertificateReport, _jsonable, _status
from .matrix import Matrix, identity as identity_matrix, matrix_to_json, max_abs
from .rng import SplitMix64, substream

__all__ = [
    "AccretiveWitness",
    "ConvergenceError",
    "EigenResult",
    "accretive_factorize",
    "accretive_suite",
    "hermitian_eigenvalues",
    "psd_check",
    "random_accretive",
    "remark45_matrix",
    "remark45_repro",
    "search_complex_violation",
    "sqrt_psd",
    "sym_eig",
    "verify_accretive_inequality",
    "verify_adjugate_accretive",
    "verify_det_positive",
]


class ConvergenceError(RuntimeError):
    """An iterative numeric routine failed to converge."""


@dataclass(frozen=True)
class EigenResult:
    """Eigenvalues ascending plus the orthogonal matrix of column vectors."""

    values: tuple
    vectors: Matrix


@dataclass(frozen=True)
class AccretiveWitness:
    """One evaluation of the minor inequality: the four (n-1)-minors, the two
    sides, the margin lhs - rhs, and any clamp applied to a tiny negative
    product before its square root."""

    label: str
    matrix: Matrix
    minors: tuple  # (d11, d22, d12, d21)
    lhs: float
    rhs: float
    margin: float
    clamp: float = 0.0

    def to_json(self) -> dict:
        d11, d22, d12, d21 = self.minors
        return {
            "label": self.label,
            "matrix": matrix_to_json(self.matrix),
            "minors": {
                "d11": _jsonable(d11),
                "d22": _jsonable(d22),
                "d12": _jsonable(d12),
                "d21": _jsonable(d21),
            },
            "lhs": self.lhs,
            "rhs": self.rhs,
            "margin": self.margin,
            "clamp": self.clamp,
        }


# -- symmetric eigensolver ------------------------------------------------

def sym_eig(h: Matrix, max_sweeps: int = 100) -> EigenResult:
    """Cyclic Jacobi rotations for a real symmetric matrix.

    Sweeps until the off-diagonal Frobenius mass drops below 1e-14 times the
    Frobenius norm of the input; raises ConvergenceError after
    ``max_sweeps``.  Input asymmetry up to 1e-12 (relative, max-norm) is
    symmetrized away; worse asymmetry is a usage error.
    """
    if not h.is_square:
        raise ValueError("eigendecomposition needs a square matrix")
    n = h.rows
    if n == 0:
        raise ValueError("eigendecomposition needs order >= 1")
    amax = max_abs(h)
    asym = max(
        (abs(h[i, j] - h[j, i]) for i in range(n) for j in range(i, n)),
        default=0.0,
    )
    if asym > 1e-12 * max(amax, 1e-300):
        raise ValueError("matrix is not symmetric")
    w = [[(h[i, j] + h[j, i]) / 2.0 for j in range(n)] for i in range(n)]
    v = [[1.0 if i == j else 0.0 for j in range(n)] for i in range(n)]
    if n == 1:
        return EigenResult((w[0][0],), Matrix(1, 1, [1.0]))
    fro = math.sqrt(sum(x * x for row in w for x in row))
    thresh = 1e-14 * fro
    for _ in range(max_sweeps):
        off = math.sqrt(2.0 * sum(w[i][j] ** 2 for i in range(n) for j in range(i + 1, n)))
        if off <= thresh:
            break
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = w[p][q]
                if apq == 0.0:
                    continue
                app, aqq = w[p][p], w[q][q]
                theta = (aqq - app) / (2.0 * apq)
                if abs(theta) > 1e150:
                    t = 1.0 / (2.0 * theta)
                else:
                    t = math.copysign(1.0, theta) / (
                        abs(theta) + math.sqrt(theta * theta + 1.0)
                    )
                c = 1.0 / math.sqrt(t * t + 1.0)
                s = t * c
                for i in range(n):
                    if i == p or i == q:
                        continue
                    aip, aiq = w[i][p], w[i][q]
                    w[i][p] = w[p][i] = c * aip - s * aiq
                    w[i][q] = w[q][i] = s * aip + c * aiq
                w[p][p] = app - t * apq
                w[q][q] = aqq + t * apq
                w[p][q] = w[q][p] = 0.0
                for i in range(n):
                    vip, viq = v[i][p], v[i][q]
                    v[i][p] = c * vip - s * viq
                    v[i][q] = s * vip + c * viq
    else:
        raise ConvergenceError(
            f"Jacobi eigensolver did not converge in {max_sweeps} sweeps"
        )
    order = sorted(range(n), key=lambda j: w[j][j])
    values = tuple(w[j][j] for j in order)
    vectors = Matrix(n, n, [v[i][j] for i in range(n) for j in order])
    return EigenResult(values, vectors)


def psd_check(h: Matrix, tol: float = 1e-10) -> bool:
    """True iff lambda_min >= -tol * max(1, lambda_max)."""
    eig = sym_eig(h)
    lam_min, lam_max = eig.values[0], eig.values[-1]
    return lam_min >= -tol * max(1.0, lam_max)


def sqrt_psd(h: Matrix, tol: float = 1e-10) -> Matrix:
    """Symmetric PSD square root via the eigendecomposition; eigenvalues in
    the -tol noise band are clamped to zero."""
    if not psd_check(h, tol):
        raise ValueError("matrix is not positive semidefinite")
    eig = sym_eig(h)
    root = _assemble(eig, [math.sqrt(max(v, 0.0)) for v in eig.values])
    return _symmetrize(root)


def _assemble(eig: EigenResult, diag_values) -> Matrix:
    q = eig.vectors
    n = q.rows
    scaled = Matrix(
        n, n, [q[i, j] * diag_values[j] for i in range(n) for j in range(n)]
    )
    return scaled @ q.T


def _symmetrize(a: Matrix) -> Matrix:
    return (a + a.T) / 2.0


def _sym_part(a: Matrix) -> Matrix:
    return (a + a.T) / 2.0


def _skew_part(a: Matrix) -> Matrix:
    return (a - a.T) / 2.0


def inverse(a: Matrix) -> Matrix:
    """Gauss-Jordan inverse with partial pivoting (floating matrices)."""
    if not a.is_square:
        raise ValueError("inverse needs a square matrix")
    n = a.rows
    m = [row + [1.0 if i == j else 0.0 for j in range(n)] for i, row in enumerate(a.to_rows())]
    tiny = 1e-13 * max(1.0, max_abs(a))
    for k in range(n):
        piv = max(range(k, n), key=lambda r: abs(m[r][k]))
        if abs(m[piv][k]) <= tiny:
            raise ValueError("matrix is numerically singular")
        m[k], m[piv] = m[piv], m[k]
        d = m[k][k]
        m[k] = [x / d for x in m[k]]
        for i in range(n):
            if i == k:
                continue
            f = m[i][k]
            if f:
                m[i] = [x - f * y for x, y in zip(m[i], m[k])]
    return Matrix.from_rows([row[n:] for row in m])


# -- the accretive tool chain ----------------------------------------------

def accretive_factorize(a: Matrix, tol: float = 1e-10):
    """Congruence factorization A = H^{1/2}(I + S)H^{1/2} of a strictly
    accretive A, with H the symmetric part and S = H^{-1/2} N H^{-1/2} skew.

    Returns (H^{1/2}, S, report); the report certifies skewness of S, the
    reconstruction, and the symmetric-part identity
    Re((I + S)^{-1}) = (I - S^2)^{-1}.
    """
    if not a.is_square:
        raise ValueError("factorization needs a square matrix")
    n = a.rows
    h = _sym_part(a)
    skew = _skew_part(a)
    eig = sym_eig(h)
    lam_min, lam_max = eig.values[0], eig.values[-1]
    if lam_max <= 0 or lam_min <= tol * lam_max:
        raise ValueError("symmetric part is not strictly positive definite")
    h_sqrt = _symmetrize(_assemble(eig, [math.sqrt(v) for v in eig.values]))
    h_isqrt = _symmetrize(_assemble(eig, [1.0 / math.sqrt(v) for v in eig.values]))
    s = h_isqrt @ skew @ h_isqrt
    skew_res = max_abs(s + s.T)
    eye = identity_matrix(n).map(float)
    recon = h_sqrt @ (eye + s) @ h_sqrt
    recon_res = max_abs(recon - a) / max(1.0, max_abs(a))
    inv_plus = inverse(eye + s)
    inv_sym = _sym_part(inv_plus)
    inv_model = inverse(eye - s @ s)
    inv_res = max_abs(inv_sym - inv_model) / max(1.0, max_abs(inv_model))
    ok = skew_res <= 1e-9 and recon_res <= 1e-8 and inv_res <= 1e-8
    report = CertificateReport(
        claim=f"accretive_factorization_n{n}",
        status=_status(ok),
        residual=max(skew_res, recon_res, inv_res),
        instance={
            "n": n,
            "skew_residual": skew_res,
            "reconstruction_residual": recon_res,
            "inverse_identity_residual": inv_res,
        },
        tolerance=1e-8,
    )
    return h_sqrt, s, report


def verify_det_positive(a: Matrix, tol: float = 1e-9) -> CertificateReport:
    """Certifies det(A) >= -tol * scale for accretive A (scale is
    max(1, |A|_max)^n); for strictly accretive A additionally cross-checks
    det(A) = det(H) * prod_k (1 + mu_k^2), the mu_k^2 being the paired
    eigenvalues of -S^2 from the congruence factorization."""
    if not a.is_square:
        raise ValueError("needs a square matrix")
    n = a.rows
    h = _sym_part(a)
    eig = sym_eig(h)
    lam_min, lam_max = eig.values[0], eig.values[-1]
    if lam_min < -1e-10 * max(1.0, lam_max):
        raise ValueError("matrix is not accretive")
    d = det_bareiss(a)
    scale = max(1.0, max_abs(a)) ** n
    residual = max(0.0, -d / scale)
    ok = residual <= tol
    strict = lam_max > 0 and lam_min > 1e-10 * lam_max
    instance = {"n": n, "det": d, "strict": strict}
    if strict:
        _, s, _ = accretive_factorize(a)
        neg_s2 = -(s @ s)
        nu = sorted((max(v, 0.0) for v in sym_eig(_symmetrize(neg_s2)).values), reverse=True)
        prod = 1.0
        for i in range(0, n - 1, 2):
            prod *= 1.0 + (nu[i] + nu[i + 1]) / 2.0
        model = det_bareiss(h) * prod
        rel = abs(d - model) / max(abs(d), abs(model), 1e-300)
        instance["product_formula_relerr"] = rel
        ok = ok and d > 0 and rel <= 1e-6
    return CertificateReport(
        claim=f"det_positive_n{n}",
        status=_status(ok),
        residual=residual,
        instance=instance,
        tolerance=tol,
    )


def verify_adjugate_accretive(a: Matrix, tol: float = 1e-8) -> CertificateReport:
    """Certifies that the adjugate of an accretive matrix is accretive."""
    if not a.is_square:
        raise ValueError("needs a square matrix")
    if not psd_check(_sym_part(a)):
        raise ValueError("matrix is not accretive")
    adj = adjugate(a)
    eig = sym_eig(_sym_part(adj))
    lam_min, lam_max = eig.values[0], eig.values[-1]
    residual = max(0.0, -lam_min / max(1.0, lam_max))
    return CertificateReport(
        claim=f"adjugate_accretive_n{a.rows}",
        status=_status(residual <= tol),
        residual=residual,
        instance={"n": a.rows, "lambda_min": lam_min, "lambda_max": lam_max},
        tolerance=tol,
    )


def verify_accretive_inequality(a: Matrix, tol: float = 1e-8) -> AccretiveWitness:
    """Evaluates the minor inequality on an accretive instance and returns
    the witness.  A tiny negative product under the square root (roundoff on
    a true zero) is clamped to zero and the clamp magnitude recorded.  The
    cofactor identifications tying the four minors to the corner entries of
    the adjugate are asserted on the instance."""
    if not a.is_square or a.rows < 2:
        raise ValueError("needs a square matrix of order >= 2")
    if not psd_check(_sym_part(a)):
        raise ValueError("matrix is not accretive")
    n = a.rows
    m = n - 1
    d11 = det_bareiss(a.block(m, 1, 1))
    d22 = det_bareiss(a.block(m, 2, 2))
    d12 = det_bareiss(a.block(m, 1, 2))
    d21 = det_bareiss(a.block(m, 2, 1))
    product = d11 * d22
    clamp = 0.0
    if product < 0.0:
        clamp = -product
        product = 0.0
    lhs = math.sqrt(product)
    rhs = abs((d12 + d21) / 2.0)
    adj = adjugate(a)
    sign = -1.0 if n % 2 == 0 else 1.0  # (-1)^{1+n}
    for got, want in (
        (adj[n - 1, n - 1], d11),
        (adj[0, 0], d22),
        (adj[0, n - 1], sign * d12),
        (adj[n - 1, 0], sign * d21),
    ):
        if abs(got - want) > 1e-9 * max(1.0, abs(want)):
            raise ArithmeticError(
                "cofactor identification failed; determinant engines disagree"
            )
    return AccretiveWitness(
        label=f"accretive_inequality_n{n}",
        matrix=a,
        minors=(d11, d22, d12, d21),
        lhs=lhs,
        rhs=rhs,
        margin=lhs - rhs,
        clamp=clamp,
    )


def random_accretive(stream: SplitMix64, n: int, boundary: bool = False) -> Matrix:
    """Seeded random accretive matrix, normalized to max|entry| = 1.

    Strict instances use H = G^T G + I (G square standard normal); boundary
    instances use a rank-deficient H = G^T G so the symmetric part is
    genuinely singular.  A uniform skew part is added either way."""
    r = max(1, n - 1) if boundary else n
    g = Matrix(r, n, [stream.gauss() for _ in range(r * n)])
    h = g.T @ g
    if not boundary:
        h = h + identity_matrix(n).map(float)
    rows = [[0.0] * n for _ in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            v = stream.uniform(-1.0, 1.0)
            rows[i][j] = v
            rows[j][i] = -v
    a = h + Matrix.from_rows(rows)
    return a / max_abs(a)


def accretive_suite(
    dim: int, trials: int, seed: int, tol: float = 1e-8
) -> list[CertificateReport]:
    """Per trial: draw an accretive instance (order 2..dim, every fourth one
    on the PSD boundary) and check determinant nonnegativity, adjugate
    accretivity, the minor inequality margin, and (strict instances only)
    the factorization reconstruction."""
    if dim < 2:
        raise ValueError("dimension must be at least 2")
    reports = []
    for t in range(trials):
        stream = substream(seed, 3000 + t)
        n = stream.randint(2, dim)
        boundary = t % 4 == 3
        a = random_accretive(stream, n, boundary=boundary)
        det_rep = verify_det_positive(a, tol=1e-9)
        adj_rep = verify_adjugate_accretive(a, tol=tol)
        witness = verify_accretive_inequality(a, tol=tol)
        margin_scale = max(1.0, witness.lhs + witness.rhs)
        margin_ok = witness.margin >= -tol * margin_scale
        checks = {
            "n": n,
            "kind": "boundary" if boundary else "strict",
            "det": det_rep.residual,
            "adjugate": adj_rep.residual,
            "margin": witness.margin,
        }
        ok = det_rep.verified and adj_rep.verified and margin_ok
        if not boundary:
            _, _, fact_rep = accretive_factorize(a)
            checks["factorization"] = fact_rep.residual
            ok = ok and fact_rep.verified
        # each component normalized by its own tolerance, so that the report
        # invariant "verified iff residual <= tolerance" holds exactly
        worst = tol * max(
            float(det_rep.residual) / 1e-9,
            float(adj_rep.residual) / tol,
            max(0.0, -witness.margin / margin_scale) / tol,
            float(checks.get("factorization", 0.0)) / 1e-8,
        )
        reports.append(
            CertificateReport(
                claim=f"accretive_t{t:03d}",
                status=_status(ok),
                residual=worst,
                instance=checks,
                seed=seed,
                tolerance=tol,
            )
        )
    return reports


# -- complex diagnostic ------------------------------------------------------

_REMARK45_ROWS = (
    (9.94929343 + 1.33276616j, 0.97565055 + 0.87236575j,
     -2.50825051 + 5.42561737j, 1.56748356 - 7.27519505j),
    (2.97979149 - 0.40625902j, 3.79277890 - 0.31914688j,
     0.54972864 + 0.60571431j, 0.32023125 + 2.04703155j),
    (-1.05662545 - 10.34778593j, 1.98753540 - 2.33447293j,
     9.41578815 - 0.76975962j, -7.77317132 - 1.83670880j),
    (-0.08351591 + 4.49741713j, 1.36270989 - 0.46531832j,
     -8.74961119 + 1.90215917j, 16.31271805 - 0.21461055j),
)


def remark45_matrix() -> Matrix:
    """The hard-coded 4x4 complex matrix whose conjugate-symmetric part is
    PSD but which violates the transpose-based minor inequality."""
    return Matrix.from_rows([list(r) for r in _REMARK45_ROWS])


def hermitian_eigenvalues(a: Matrix) -> tuple:
    """Eigenvalues of a complex Hermitian matrix via the real symmetric
    embedding [[X, -Y], [Y, X]] (each eigenvalue appears twice)."""
    n = a.rows
    x = [[complex(a[i, j]).real for j in range(n)] for i in range(n)]
    y = [[complex(a[i, j]).imag for j in range(n)] for i in range(n)]
    big = [[0.0] * (2 * n) for _ in range(2 * n)]
    for i in range(n):
        for j in range(n):
            big[i][j] = x[i][j]
            big[i][n + j] = -y[i][j]
            big[n + i][j] = y[i][j]
            big[n + i][n + j] = x[i][j]
    return sym_eig(Matrix.from_rows(big)).values


def _hermitian_part(a: Matrix) -> Matrix:
    n = a.rows
    return Matrix(
        n,
        n,
        [
            (complex(a[i, j]) + complex(a[j, i]).conjugate()) / 2.0
            for i in range(n)
            for j in range(n)
        ],
    )


def _complex_margin_witness(a: Matrix, label: str) -> AccretiveWitness:
    n = a.rows
    m = n - 1
    d11 = det_bareiss(a.block(m, 1, 1))
    d22 = det_bareiss(a.block(m, 2, 2))
    d12 = det_bareiss(a.block(m, 1, 2))
    d21 = det_bareiss(a.block(m, 2, 1))
    lhs = math.sqrt(abs(d11 * d22))
    rhs = abs((d12 + d21) / 2.0)
    return AccretiveWitness(
        label=label,
        matrix=a,
        minors=(d11, d22, d12, d21),
        lhs=lhs,
        rhs=rhs,
        margin=lhs - rhs,
    )


def remark45_repro() -> AccretiveWitness:
    """Re-evaluates the hard-coded complex witness: confirms (A + A*)/2 is
    PSD (to 1e-6 relative) and reports lhs < rhs for the transpose-based
    minors."""
    a = remark45_matrix()
    vals = hermitian_eigenvalues(_hermitian_part(a))
    lam_min, lam_max = min(vals), max(vals)
    if lam_min < -1e-6 * max(lam_max, 1e-300):
        raise ArithmeticError("hard-coded witness lost positive semidefiniteness")
    return _complex_margin_witness(a, "remark45")


def _random_complex_accretive(stream: SplitMix64, n: int) -> Matrix:
    """Complex matrix with (A + A*)/2 = G* G PSD by construction, plus a
    random skew-Hermitian part (real skew + i * real symmetric)."""
    g = Matrix(
        n, n, [complex(stream.gauss(), stream.gauss()) for _ in range(n * n)]
    )
    gh = Matrix(n, n, [complex(g[j, i]).conjugate() for i in range(n) for j in range(n)])
    herm = gh @ g
    rows = [[0j] * n for _ in range(n)]
    for i in range(n):
        for j in range(i, n):
            im = stream.uniform(-2.0, 2.0)
            if i == j:
                rows[i][i] = complex(0.0, im)
                continue
            re = stream.uniform(-2.0, 2.0)
            rows[i][j] = complex(re, im)
            rows[j][i] = complex(-re, im)
    return herm + Matrix.from_rows(rows)


def _perturb_skew_hermitian(stream: SplitMix64, a: Matrix, sigma: float) -> Matrix:
    """Adds a small skew-Hermitian matrix: the conjugate-symmetric part (and
    hence its positive semidefiniteness) is preserved exactly."""
    n = a.rows
    rows = [[0j] * n for _ in range(n)]
    for i in range(n):
        for j in range(i, n):
            im = sigma * stream.gauss()
            if i == j:
                rows[i][i] = complex(0.0, im)
                continue
            re = sigma * stream.gauss()
            rows[i][j] = complex(re, im)
            rows[j][i] = complex(-re, im)
    return a + Matrix.from_rows(rows)


def search_complex_violation(
    dim: int,
    iters: int,
    seed: int,
    init: str = "random",
    tol: float = 1e-6,
    max_witnesses: int = 100,
) -> list[AccretiveWitness]:
    """Seeded random search (sampling plus skew-Hermitian hill climbing) for
    complex matrices with PSD conjugate-symmetric part that violate the
    transpose-based minor inequality.  Deterministic for a fixed
    (dim, iters, seed, init); an empty result is a valid outcome."""
    if dim < 2:
        raise ValueError("dimension must be at least 2")
    if init not in ("random", "remark45"):
        raise ValueError(f"unknown init {init!r}")
    if init == "remark45" and dim != 4:
        raise ValueError("the hard-coded witness has dimension 4")
    stream = substream(seed, 0)
    witnesses: list[AccretiveWitness] = []
    best: Matrix | None = None
    best_margin = math.inf
    for it in range(iters):
        if it == 0 and init == "remark45":
            cand = remark45_matrix()
        elif best is None or it % 50 == 0:
            cand = _random_complex_accretive(stream, dim)
        else:
            sigma = max(0.02, 0.5 * 0.995 ** it)
            cand = _perturb_skew_hermitian(stream, best, sigma)
        w = _complex_margin_witness(cand, f"search_d{dim}_i{it:06d}")
        scale = max(1.0, w.lhs + w.rhs)
        if w.margin < best_margin:
            best, best_margin = cand, w.margin
        if w.margin < -tol * scale and len(witnesses) < max_witnesses:
            witnesses.append(w)
    witnesses.sort(key=lambda w: w.margin)
    return witnesses
