#pragma once

#include "smobs/linalg.hpp"
#include "smobs/plant.hpp"

namespace smobs {

/// Structure-preserving small-signal power network in descriptor form:
/// generator swing dynamics coupled to algebraic bus equations through the
/// susceptance blocks of the network graph Laplacian.
struct DescriptorPowerNetwork {
    Matrix Mg;      // generator inertias (diagonal, > 0)
    Matrix Eg;      // damping coefficients (diagonal, > 0)
    Matrix Lgg, Lgl, Llg, Lll;  // susceptance blocks, [Lgg Lgl; Llg Lll] symmetric
    Matrix Bomega;  // attack distribution into the swing equations
    Matrix Btheta;  // attack distribution into the bus equations
    Vector Pomega;  // known mechanical power inputs
    Vector Ptheta;  // known load demands

    static DescriptorPowerNetwork make(Matrix Mg, Matrix Eg,
                                       Matrix Lgg, Matrix Lgl, Matrix Llg, Matrix Lll,
                                       Matrix Bomega, Matrix Btheta,
                                       Vector Pomega = {}, Vector Ptheta = {});

    /// The benchmark three-generator / six-bus network with its published
    /// per-unit susceptances, inertias and dampings; attacks enter the swing
    /// equations directly (Bomega = I, Btheta = 0).
    static DescriptorPowerNetwork wecc();

    int generators() const { return static_cast<int>(Mg.rows()); }
    int buses() const { return static_cast<int>(Lll.rows()); }

    /// Residual of the algebraic bus equation at (delta, theta, d):
    /// Llg*delta + Lll*theta - Ptheta - Btheta*d.
    Vector algebraic_residual(const Vector& delta, const Vector& theta, const Vector& d) const;
};

/// Affine map recovering the eliminated bus angles from (delta, d).
struct ThetaRecovery {
    Matrix from_delta;   // theta = from_delta * delta + from_attack * d + offset
    Matrix from_attack;
    Vector offset;
    Vector recover(const Vector& delta, const Vector& d) const {
        return from_delta * delta + from_attack * d + offset;
    }
};

struct KronReduced {
    LinearPlant plant;    // states (delta, omega), C = I by default
    ThetaRecovery theta;
};

/// Eliminate the algebraic bus variables by the Schur complement of Lll,
/// producing the reduced swing model over (delta, omega). The sensor-attack
/// distribution D1 and the protected-output count are supplied by the caller
/// (the reduction itself only shapes the state dynamics).
KronReduced kron_reduce(const DescriptorPowerNetwork& net,
                        Matrix C = {}, Matrix D1 = {}, int p1 = -1,
                        bool marginal_ok = false);

struct WeccOptions {
    /// Sensor-attack wiring: the six-source distribution on the speed
    /// sensors (wide, handled by sparse recovery) or a direct one-per-sensor
    /// injection (square, handled by the filtering observer).
    enum class SensorMap { DOmegaWide, OmegaDirect };
    SensorMap sensor_map = SensorMap::DOmegaWide;
    Vector Pomega = {};  // default zero
    Vector Ptheta = {};  // default zero
};

/// The reduced six-state benchmark plant: y1 = delta (protected),
/// y2 = omega + D_omega dy. Records p1 = 3.
LinearPlant build_wecc(const WeccOptions& opt = {});

/// The published 3x6 sensor-attack distribution on the speed measurements.
Matrix wecc_d_omega();

}  // namespace smobs
