#pragma once

#include <vector>

#include "smobs/linalg.hpp"

namespace smobs {

/// Output-aligning change of coordinates: Tc = [N; C] with N an orthonormal
/// completion of C's row space, so the transformed output map is [0 I].
struct OutputTransform {
    Matrix N;       // (n-p) x n
    Matrix Tc;      // n x n
    Matrix Tc_inv;  // n x n
};

OutputTransform build_output_transform(const Matrix& C);

/// Gain L such that eig(A11 + L*A21) equals the requested poles.
/// Requires (A11, A21) observable and strictly-LHP targets.
Matrix design_observer_gain(const Matrix& A11, const Matrix& A21,
                            const std::vector<double>& poles);

/// Nonsingular scaling with Q*D = [0; D2], D2 square nonsingular.
/// The zero block is structural: `zero_block()` is exactly 0 by construction.
struct ScalingResult {
    Matrix Q;      // p x p
    Matrix Q_inv;  // p x p
    Matrix D2;     // m x m, nonsingular
    int zero_rows = 0;
    Matrix zero_block() const { return Matrix::Zero(zero_rows, D2.cols()); }
};

ScalingResult build_scaling(const Matrix& D);

/// Measurement transform M with M^{-1} D1 = [0; Dbar1], Dbar1 full rank.
struct MeasurementTransform {
    Matrix M;      // p x p
    Matrix M_inv;  // p x p
    Matrix Dbar1;  // square bottom block
    int zero_rows = 0;
};

MeasurementTransform build_measurement_transform(const Matrix& D1);

/// The fully partitioned coordinates: xbar = (xbar1, xbar21, xbar22) with
///   xbar1 = N x + L Q^{-1} xbar2 chain,  xbar2 = Q x2,
/// block structure recorded explicitly, structural selectors exact.
struct TransformChain {
    int n = 0, p = 0, m = 0;

    OutputTransform out;
    Matrix L;            // (n-p) x p
    ScalingResult scale;

    Matrix Abar;         // n x n in (xbar1, xbar21, xbar22) coordinates
    Matrix Bbar;         // n x m
    Vector bias_bar;     // n

    // Partition blocks of Abar / Bbar.
    Matrix A11b;                 // (n-p) x (n-p), Hurwitz
    Matrix A12a, A12b;           // (n-p) x (p-m), (n-p) x m
    Matrix A21a, A21b;           // (p-m) x (n-p), m x (n-p)
    Matrix A22a, A22b, A22c, A22d;
    Matrix B1b, B21, B22;
    Matrix D2;                   // m x m
    Matrix C1sel, C2sel;         // exact selector rows

    /// Map plant state to chain coordinates and back (round trip ~1e-12).
    Vector to_bar(const Vector& x) const;
    Vector from_bar(const Vector& xbar) const;
    /// Scale a raw measurement y into (ybar1, ybar2).
    Vector ybar(const Vector& y) const { return scale.Q * y; }
};

struct ChainOptions {
    std::vector<double> poles;      // targets for A11 + L A21 (default spread)
    double hurwitz_margin = 1e-6;
};

/// Build the full chain for x' = A x + B d + bias, y = C x + D d.
TransformChain assemble_partition(const Matrix& A, const Matrix& B, const Matrix& C,
                                  const Matrix& D, const Vector& bias = {},
                                  const ChainOptions& opt = {});

/// Per-output relative degrees and the augmented output matrix.
struct RelativeDegreeProfile {
    std::vector<int> r;        // per-output relative degree
    std::vector<int> r_alpha;  // chosen truncations, 1 <= r_alpha_i <= r_i
    Matrix Ca;                 // sum(r_alpha) x n, full row rank
    int total = 0;             // sum of r_alpha
};

/// Minimal r_i with C1_i A^j B == 0 for all j < r_i - 1, then the smallest
/// truncation (greedy, lowest output index first) with rank(Ca B) = rank(B).
RelativeDegreeProfile relative_degrees(const Matrix& A, const Matrix& B, const Matrix& C1,
                                       double tol = 1e-9);

}  // namespace smobs
