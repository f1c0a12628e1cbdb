#ifndef IGEO_SMALL_MATRIX_HPP
#define IGEO_SMALL_MATRIX_HPP

#include <array>
#include <cmath>
#include <span>
#include <stdexcept>

#include "igeo/errors.hpp"

namespace igeo {

/// Dense square matrix of dimension 1..3 with closed-form determinant and
/// adjugate inverse. Covariances in this library never exceed 3x3, so no
/// general factorization is needed.
struct SmallMatrix {
    int n = 0;
    std::array<std::array<double, 3>, 3> a{};

    SmallMatrix() = default;
    explicit SmallMatrix(int dim) : n(dim) {
        if (dim < 1 || dim > 3) throw std::invalid_argument("SmallMatrix: dim must be 1..3");
    }

    double& operator()(int i, int j) { return a[i][j]; }
    double operator()(int i, int j) const { return a[i][j]; }

    static SmallMatrix identity(int dim) {
        SmallMatrix m(dim);
        for (int i = 0; i < dim; ++i) m(i, i) = 1.0;
        return m;
    }

    double det() const {
        switch (n) {
            case 1:
                return a[0][0];
            case 2:
                return a[0][0] * a[1][1] - a[0][1] * a[1][0];
            default:
                return a[0][0] * (a[1][1] * a[2][2] - a[1][2] * a[2][1]) -
                       a[0][1] * (a[1][0] * a[2][2] - a[1][2] * a[2][0]) +
                       a[0][2] * (a[1][0] * a[2][1] - a[1][1] * a[2][0]);
        }
    }

    /// Adjugate-over-determinant inverse. Throws DegenerateCovarianceError on
    /// a singular matrix.
    SmallMatrix inverse() const {
        const double d = det();
        if (d == 0.0 || !std::isfinite(d))
            throw DegenerateCovarianceError("SmallMatrix: singular matrix");
        SmallMatrix inv(n);
        if (n == 1) {
            inv(0, 0) = 1.0 / d;
        } else if (n == 2) {
            inv(0, 0) = a[1][1] / d;
            inv(0, 1) = -a[0][1] / d;
            inv(1, 0) = -a[1][0] / d;
            inv(1, 1) = a[0][0] / d;
        } else {
            // cofactor expansion, transposed
            inv(0, 0) = (a[1][1] * a[2][2] - a[1][2] * a[2][1]) / d;
            inv(0, 1) = (a[0][2] * a[2][1] - a[0][1] * a[2][2]) / d;
            inv(0, 2) = (a[0][1] * a[1][2] - a[0][2] * a[1][1]) / d;
            inv(1, 0) = (a[1][2] * a[2][0] - a[1][0] * a[2][2]) / d;
            inv(1, 1) = (a[0][0] * a[2][2] - a[0][2] * a[2][0]) / d;
            inv(1, 2) = (a[0][2] * a[1][0] - a[0][0] * a[1][2]) / d;
            inv(2, 0) = (a[1][0] * a[2][1] - a[1][1] * a[2][0]) / d;
            inv(2, 1) = (a[0][1] * a[2][0] - a[0][0] * a[2][1]) / d;
            inv(2, 2) = (a[0][0] * a[1][1] - a[0][1] * a[1][0]) / d;
        }
        return inv;
    }

    /// Positive definiteness via leading principal minors.
    bool positive_definite() const {
        if (a[0][0] <= 0.0) return false;
        if (n >= 2 && a[0][0] * a[1][1] - a[0][1] * a[1][0] <= 0.0) return false;
        if (n == 3 && det() <= 0.0) return false;
        return true;
    }

    double quadratic_form(std::span<const double> x) const {
        double q = 0.0;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) q += x[i] * a[i][j] * x[j];
        return q;
    }
};

}  // namespace igeo

#endif
