#ifndef IGEO_MOMENTS_HPP
#define IGEO_MOMENTS_HPP

#include <span>

#include "igeo/model.hpp"
#include "igeo/polynomial.hpp"

namespace igeo {

/// Exact Gaussian expectation of a polynomial, computed by the heat-operator
/// identity
///
///   E[f(X)] = exp( 1/2 sum_{hk} c_hk d/dx_h d/dx_k ) f  evaluated at x = mu,
///
/// where the exponential series truncates after floor(deg(f)/2) applications.
/// C must be symmetric positive semidefinite.
double gaussian_expectation(const Polynomial& f, std::span<const double> mu, const SmallMatrix& c);

/// Independent cross-check of gaussian_expectation: recenters f at mu and
/// evaluates every central-moment monomial by enumerating all pair
/// partitions (odd central moments vanish). Supports deg(f) <= 6, nvars <= 3.
double isserlis_oracle(const Polynomial& f, std::span<const double> mu, const SmallMatrix& c);

/// d log p(x|theta) / d theta^i as a polynomial in the micro-variables with
/// numeric, theta-dependent coefficients. Index i runs over the structure's
/// live macro-variables (mu before sigma); degree is at most 2.
Polynomial score_polynomial(const ModelSpec& spec, const ThetaPoint& theta, int i);

}  // namespace igeo

#endif
