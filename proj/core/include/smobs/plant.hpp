#pragma once

#include "smobs/linalg.hpp"

namespace smobs {

/// State-space plant with split attack distribution:
///   x' = A x + B1 dx + bias,   y = C x + D1 dy
/// The first p1 output rows are the protected measurements; the remaining
/// p - p1 rows carry the sensor-attack distribution.
struct LinearPlant {
    Matrix A;    // n x n
    Matrix B1;   // n x m1
    Matrix C;    // p x n
    Matrix D1;   // p x (m - m1)
    Vector bias; // n (known input term)

    int n = 0, p = 0, m = 0, m1 = 0;
    int p1 = 0;          // protected output rows (top of C)
    bool marginal_ok = false;  // caller attests a non-Hurwitz A is intended

    /// Validates ranks, dimensions and stability, then returns the plant.
    static LinearPlant make(Matrix A, Matrix B1, Matrix C, Matrix D1,
                            Vector bias, int p1, bool marginal_ok = false);

    Matrix C1() const { return C.topRows(p1); }
    Matrix C2() const { return C.bottomRows(p - p1); }
    /// Sensor-attack distribution on the attacked output rows.
    Matrix Dbar1() const { return D1.bottomRows(p - p1); }
    /// More attack sources than attacked measurements (sparse-recovery case).
    bool wide_sensor_dist() const { return m - m1 > p - p1; }
};

}  // namespace smobs
