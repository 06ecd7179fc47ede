#include "smobs/plant.hpp"

#include "smobs/errors.hpp"

namespace smobs {

LinearPlant LinearPlant::make(Matrix A, Matrix B1, Matrix C, Matrix D1,
                              Vector bias, int p1, bool marginal_ok) {
    LinearPlant pl;
    pl.n = static_cast<int>(A.rows());
    if (A.cols() != pl.n) throw DimensionMismatch("LinearPlant: A must be square");
    pl.p = static_cast<int>(C.rows());
    if (C.cols() != pl.n) throw DimensionMismatch("LinearPlant: C column count");
    pl.m1 = static_cast<int>(B1.cols());
    if (B1.rows() != pl.n && pl.m1 > 0) throw DimensionMismatch("LinearPlant: B1 row count");
    const int m_my = static_cast<int>(D1.cols());
    if (D1.rows() != pl.p && m_my > 0) throw DimensionMismatch("LinearPlant: D1 row count");
    pl.m = pl.m1 + m_my;
    if (bias.size() == 0) bias = Vector::Zero(pl.n);
    if (bias.size() != pl.n) throw DimensionMismatch("LinearPlant: bias length");
    if (p1 < 0 || p1 > pl.p) throw DimensionMismatch("LinearPlant: p1 out of range");
    pl.p1 = p1;

    if (pl.p < pl.m - pl.m1)
        throw DimensionMismatch("LinearPlant: need p >= m - m1 sensor channels");
    if (pl.m1 > 0 && numeric_rank(B1) < pl.m1)
        throw RankDeficientD("LinearPlant: B1 must have full column rank");
    // Full column rank of D1 is required only when the attacked-output block
    // can support it; the wide case is resolved by sparse recovery instead.
    const int attacked_rows = pl.p - pl.p1;
    if (m_my > 0 && m_my <= attacked_rows && numeric_rank(D1) < m_my)
        throw RankDeficientD("LinearPlant: D1 must have full column rank");
    if (m_my > attacked_rows && numeric_rank(D1) < attacked_rows)
        throw RankDeficientD("LinearPlant: wide D1 must have full row rank on attacked outputs");

    if (!marginal_ok && pl.n > 0 && !is_hurwitz(A))
        throw UnstablePlant("LinearPlant: A is not Hurwitz (set marginal_ok to attest)");

    pl.A = std::move(A);
    pl.B1 = std::move(B1);
    pl.C = std::move(C);
    pl.D1 = std::move(D1);
    pl.bias = std::move(bias);
    pl.marginal_ok = marginal_ok;
    return pl;
}

}  // namespace smobs
