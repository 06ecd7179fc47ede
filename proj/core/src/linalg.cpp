#include "smobs/linalg.hpp"

#include <algorithm>
#include <cmath>

#include "smobs/errors.hpp"

namespace smobs {

double spectral_abscissa(const Matrix& A) {
    Eigen::EigenSolver<Matrix> es(A, /*computeEigenvectors=*/false);
    return es.eigenvalues().real().maxCoeff();
}

bool is_hurwitz(const Matrix& A, double margin) {
    if (A.rows() == 0) return true;  // empty block is vacuously stable
    return spectral_abscissa(A) < -margin;
}

Matrix observability_matrix(const Matrix& A, const Matrix& C) {
    const auto n = A.rows();
    Matrix O(C.rows() * n, A.cols());
    Matrix block = C;
    for (Eigen::Index k = 0; k < n; ++k) {
        O.middleRows(k * C.rows(), C.rows()) = block;
        block = block * A;
    }
    return O;
}

int numeric_rank(const Matrix& M, double tol) {
    if (M.rows() == 0 || M.cols() == 0) return 0;
    Eigen::JacobiSVD<Matrix> svd(M);
    if (tol > 0) svd.setThreshold(tol);
    return static_cast<int>(svd.rank());
}

Matrix place_poles(const Matrix& A, const Matrix& B, const std::vector<double>& poles) {
    const Eigen::Index q = A.rows();
    if (A.cols() != q || B.rows() != q)
        throw DimensionMismatch("place_poles: A must be square and B conformal");
    if (static_cast<Eigen::Index>(poles.size()) != q)
        throw InvalidPoles("place_poles: need exactly one pole per state");
    const Eigen::Index nb = B.cols();
    if (nb == 0) throw InvalidPoles("place_poles: B has no columns");

    // Multiplicity above the input count cannot be assigned by this scheme.
    for (double lam : poles) {
        long mult = std::count(poles.begin(), poles.end(), lam);
        if (mult > nb)
            throw InvalidPoles("place_poles: pole multiplicity exceeds input count");
    }

    // Columns x_j solve (A - lambda_j I) x_j = B g_j; K = G X^{-1} yields
    // (A - B K) x_j = lambda_j x_j. Repeated poles get independent g_j.
    Matrix X(q, q), G(nb, q);
    for (int attempt = 0; attempt < static_cast<int>(nb); ++attempt) {
        std::vector<int> seen_count(poles.size(), 0);
        for (Eigen::Index j = 0; j < q; ++j) {
            int dup = 0;
            for (Eigen::Index i = 0; i < j; ++i)
                if (poles[i] == poles[j]) ++dup;
            Vector g = Vector::Zero(nb);
            g((j + dup + attempt) % nb) = 1.0;
            Matrix shifted = A - poles[j] * Matrix::Identity(q, q);
            Eigen::FullPivLU<Matrix> lu(shifted);
            if (!lu.isInvertible())
                throw InvalidPoles("place_poles: target coincides with an open-loop eigenvalue");
            X.col(j) = lu.solve(B * g);
            G.col(j) = g;
        }
        Eigen::FullPivLU<Matrix> lux(X);
        if (lux.isInvertible()) return G * lux.inverse();
    }
    throw UnobservablePair("place_poles: assignment basis singular for every input pattern");
}

Matrix solve_continuous_lyapunov(const Matrix& Ac, const Matrix& Q) {
    const Eigen::Index n = Ac.rows();
    if (Ac.cols() != n || Q.rows() != n || Q.cols() != n)
        throw DimensionMismatch("solve_continuous_lyapunov: square conformal matrices required");
    // vec(Ac' P + P Ac) = (I (x) Ac' + Ac' (x) I) vec(P)
    Matrix I = Matrix::Identity(n, n);
    Matrix K = Matrix::Zero(n * n, n * n);
    for (Eigen::Index i = 0; i < n; ++i)
        for (Eigen::Index j = 0; j < n; ++j)
            K.block(i * n, j * n, n, n) = I(i, j) * Ac.transpose();
    for (Eigen::Index i = 0; i < n; ++i)
        for (Eigen::Index j = 0; j < n; ++j)
            K.block(i * n, j * n, n, n) += Ac.transpose()(i, j) * I;
    Vector q(Eigen::Map<const Vector>(Q.data(), n * n));
    Vector pv = K.fullPivLu().solve(-q);
    Matrix P = Eigen::Map<Matrix>(pv.data(), n, n);
    return 0.5 * (P + P.transpose());
}

Matrix null_space_rows(const Matrix& C) {
    const Eigen::Index n = C.cols();
    Eigen::JacobiSVD<Matrix> svd(C, Eigen::ComputeFullV);
    const Eigen::Index r = svd.rank();
    Matrix N = svd.matrixV().rightCols(n - r).transpose();
    for (Eigen::Index i = 0; i < N.rows(); ++i) {
        for (Eigen::Index j = 0; j < n; ++j) {
            if (std::abs(N(i, j)) > 1e-12) {
                if (N(i, j) < 0) N.row(i) = -N.row(i);
                break;
            }
        }
    }
    return N;
}

std::vector<std::complex<double>> sorted_eigenvalues(const Matrix& A) {
    Eigen::EigenSolver<Matrix> es(A, false);
    std::vector<std::complex<double>> ev(A.rows());
    for (Eigen::Index i = 0; i < A.rows(); ++i) ev[i] = es.eigenvalues()(i);
    std::sort(ev.begin(), ev.end(), [](auto a, auto b) {
        if (a.real() != b.real()) return a.real() < b.real();
        return a.imag() < b.imag();
    });
    return ev;
}

double eigenvalue_pairing_error(const Matrix& A, const std::vector<std::complex<double>>& targets) {
    auto ev = sorted_eigenvalues(A);
    std::vector<bool> used(ev.size(), false);
    double worst = 0.0;
    for (const auto& t : targets) {
        double best = std::numeric_limits<double>::infinity();
        std::size_t best_i = 0;
        for (std::size_t i = 0; i < ev.size(); ++i) {
            if (used[i]) continue;
            double d = std::abs(ev[i] - t);
            if (d < best) { best = d; best_i = i; }
        }
        used[best_i] = true;
        worst = std::max(worst, best);
    }
    return worst;
}

}  // namespace smobs
