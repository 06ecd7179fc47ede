#pragma once

#include <Eigen/Dense>
#include <complex>
#include <vector>

namespace smobs {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;

/// Largest real part over the eigenvalues of a square matrix.
double spectral_abscissa(const Matrix& A);

/// True when every eigenvalue satisfies Re(lambda) < -margin.
bool is_hurwitz(const Matrix& A, double margin = 0.0);

/// Stacked observability matrix [C; CA; ...; CA^{n-1}].
Matrix observability_matrix(const Matrix& A, const Matrix& C);

/// Rank with an SVD threshold (Eigen default when tol < 0).
int numeric_rank(const Matrix& M, double tol = -1.0);

/// Gain K such that eig(A - B K) equals `poles` (distinct values with
/// multiplicity at most the input count; each strictly in the open left
/// half-plane is not required here, callers enforce their own pole policy).
/// Deterministic Sylvester-based assignment.
Matrix place_poles(const Matrix& A, const Matrix& B, const std::vector<double>& poles);

/// Solve Ac' P + P Ac = -Q for symmetric P (dense Kronecker solve; desk scale).
Matrix solve_continuous_lyapunov(const Matrix& Ac, const Matrix& Q);

/// Orthonormal rows spanning the null space of C (rows of the returned
/// (n - rank) x n matrix). Sign convention: first entry of each row with
/// magnitude above tolerance is positive.
Matrix null_space_rows(const Matrix& C);

/// Sorted (by real part, then imaginary) eigenvalues.
std::vector<std::complex<double>> sorted_eigenvalues(const Matrix& A);

/// Max pairing distance between the eigenvalues of A and the target list
/// (greedy nearest matching; adequate for well-separated desk-scale spectra).
double eigenvalue_pairing_error(const Matrix& A, const std::vector<std::complex<double>>& targets);

}  // namespace smobs
