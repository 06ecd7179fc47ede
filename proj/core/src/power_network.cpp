#include "smobs/power_network.hpp"

#include "smobs/errors.hpp"

namespace smobs {

DescriptorPowerNetwork DescriptorPowerNetwork::make(Matrix Mg, Matrix Eg,
                                                    Matrix Lgg, Matrix Lgl, Matrix Llg, Matrix Lll,
                                                    Matrix Bomega, Matrix Btheta,
                                                    Vector Pomega, Vector Ptheta) {
    const Eigen::Index ng = Mg.rows(), nb = Lll.rows();
    if (Mg.cols() != ng || Eg.rows() != ng || Eg.cols() != ng)
        throw DimensionMismatch("DescriptorPowerNetwork: Mg/Eg must be square and conformal");
    for (Eigen::Index i = 0; i < ng; ++i) {
        for (Eigen::Index j = 0; j < ng; ++j) {
            if (i != j && (Mg(i, j) != 0.0 || Eg(i, j) != 0.0))
                throw DimensionMismatch("DescriptorPowerNetwork: Mg/Eg must be diagonal");
        }
        if (Mg(i, i) <= 0.0 || Eg(i, i) <= 0.0)
            throw DimensionMismatch("DescriptorPowerNetwork: Mg/Eg diagonals must be positive");
    }
    if (Lgg.rows() != ng || Lgg.cols() != ng || Lgl.rows() != ng || Lgl.cols() != nb ||
        Llg.rows() != nb || Llg.cols() != ng || Lll.cols() != nb)
        throw DimensionMismatch("DescriptorPowerNetwork: susceptance block shapes");

    Matrix full(ng + nb, ng + nb);
    full << Lgg, Lgl, Llg, Lll;
    if (!full.isApprox(full.transpose(), 1e-12))
        throw DimensionMismatch("DescriptorPowerNetwork: susceptance matrix must be symmetric");

    Eigen::JacobiSVD<Matrix> svd(Lll);
    const double cond = svd.singularValues()(0) / svd.singularValues()(nb - 1);
    if (!(cond < 1e12))
        throw SingularAlgebraicBlock("DescriptorPowerNetwork: Lll condition number exceeds 1e12");

    if (Pomega.size() == 0) Pomega = Vector::Zero(ng);
    if (Ptheta.size() == 0) Ptheta = Vector::Zero(nb);
    if (Pomega.size() != ng || Ptheta.size() != nb)
        throw DimensionMismatch("DescriptorPowerNetwork: power input lengths");
    if (Bomega.rows() != ng || Btheta.rows() != nb || Bomega.cols() != Btheta.cols())
        throw DimensionMismatch("DescriptorPowerNetwork: attack distribution shapes");

    DescriptorPowerNetwork net;
    net.Mg = std::move(Mg); net.Eg = std::move(Eg);
    net.Lgg = std::move(Lgg); net.Lgl = std::move(Lgl);
    net.Llg = std::move(Llg); net.Lll = std::move(Lll);
    net.Bomega = std::move(Bomega); net.Btheta = std::move(Btheta);
    net.Pomega = std::move(Pomega); net.Ptheta = std::move(Ptheta);
    return net;
}

Vector DescriptorPowerNetwork::algebraic_residual(const Vector& delta, const Vector& theta,
                                                  const Vector& d) const {
    return Llg * delta + Lll * theta - Ptheta - Btheta * d;
}

DescriptorPowerNetwork DescriptorPowerNetwork::wecc() {
    Matrix Mg = Eigen::Vector3d(0.125, 0.034, 0.016).asDiagonal();
    Matrix Eg = Eigen::Vector3d(0.125, 0.068, 0.048).asDiagonal();
    Matrix L(9, 9);
    L << 0.058, 0, 0, -0.058, 0, 0, 0, 0, 0,
         0, 0.063, 0, 0, -0.063, 0, 0, 0, 0,
         0, 0, 0.059, 0, 0, -0.059, 0, 0, 0,
         -0.058, 0, 0, 0.265, 0, 0, -0.085, -0.092, 0,
         0, -0.063, 0, 0, 0.296, 0, -0.161, 0, -0.072,
         0, 0, -0.059, 0, 0, 0.330, 0, -0.170, -0.101,
         0, 0, 0, -0.085, -0.161, 0, 0.246, 0, 0,
         0, 0, 0, -0.092, 0, -0.170, 0, 0.262, 0,
         0, 0, 0, 0, -0.072, -0.101, 0, 0, 0.173;
    return make(Mg, Eg,
                L.topLeftCorner(3, 3), L.topRightCorner(3, 6),
                L.bottomLeftCorner(6, 3), L.bottomRightCorner(6, 6),
                Matrix::Identity(3, 3), Matrix::Zero(6, 3));
}

KronReduced kron_reduce(const DescriptorPowerNetwork& net, Matrix C, Matrix D1, int p1,
                        bool marginal_ok) {
    const int ng = net.generators();
    const int n = 2 * ng;

    Eigen::FullPivLU<Matrix> lu(net.Lll);
    {
        Eigen::JacobiSVD<Matrix> svd(net.Lll);
        const double cond = svd.singularValues()(0) / svd.singularValues()(net.buses() - 1);
        if (!(cond < 1e12))
            throw SingularAlgebraicBlock("kron_reduce: Lll condition number exceeds 1e12");
    }
    const Matrix Lll_inv_Llg = lu.solve(net.Llg);
    const Matrix Lll_inv_Btheta = lu.solve(net.Btheta);
    const Vector Lll_inv_Ptheta = lu.solve(net.Ptheta);

    const Matrix Minv = net.Mg.diagonal().cwiseInverse().asDiagonal();
    const Matrix coupling = -Minv * (net.Lgg - net.Lgl * Lll_inv_Llg);

    Matrix A = Matrix::Zero(n, n);
    A.topRightCorner(ng, ng) = Matrix::Identity(ng, ng);
    A.bottomLeftCorner(ng, ng) = coupling;
    A.bottomRightCorner(ng, ng) = -Minv * net.Eg;

    Matrix B1 = Matrix::Zero(n, net.Bomega.cols());
    B1.bottomRows(ng) = Minv * (net.Bomega - net.Lgl * Lll_inv_Btheta);
    Vector bias = Vector::Zero(n);
    bias.tail(ng) = Minv * (net.Pomega - net.Lgl * Lll_inv_Ptheta);

    if (C.size() == 0) C = Matrix::Identity(n, n);
    if (D1.size() == 0) D1 = Matrix(C.rows(), 0);
    if (p1 < 0) p1 = static_cast<int>(C.rows());

    KronReduced out;
    out.plant = LinearPlant::make(std::move(A), std::move(B1), std::move(C), std::move(D1),
                                  std::move(bias), p1, marginal_ok);
    out.theta.from_delta = -Lll_inv_Llg;
    out.theta.from_attack = Lll_inv_Btheta;
    out.theta.offset = Lll_inv_Ptheta;
    return out;
}

Matrix wecc_d_omega() {
    Matrix D(3, 6);
    D << 0, 1, 2, 0, 1, 1,
         1, 0, 0, 2, 1, 0,
         0, 0, 1, 0, 1, 0;
    return D;
}

LinearPlant build_wecc(const WeccOptions& opt) {
    DescriptorPowerNetwork net = DescriptorPowerNetwork::wecc();
    if (opt.Pomega.size()) net.Pomega = opt.Pomega;
    if (opt.Ptheta.size()) net.Ptheta = opt.Ptheta;

    Matrix C = Matrix::Identity(6, 6);
    Matrix D1;
    if (opt.sensor_map == WeccOptions::SensorMap::DOmegaWide) {
        D1 = Matrix::Zero(6, 6);
        D1.bottomRows(3) = wecc_d_omega();
    } else {
        D1 = Matrix::Zero(6, 3);
        D1.bottomRows(3) = Matrix::Identity(3, 3);
    }
    return kron_reduce(net, C, D1, /*p1=*/3).plant;
}

}  // namespace smobs
