#ifndef IGEO_ERRORS_HPP
#define IGEO_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace igeo {

/// Base class for all domain errors raised by this library.
struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Correlation coefficient lies strictly outside the open interval on which
/// the covariance template is positive definite.
struct InadmissibleRhoError : Error {
    explicit InadmissibleRhoError(const std::string& what) : Error(what) {}
};

/// Covariance template is singular (correlation exactly at an interval
/// endpoint, or a non positive definite matrix was encountered).
struct DegenerateCovarianceError : Error {
    explicit DegenerateCovarianceError(const std::string& what) : Error(what) {}
};

/// A trajectory reached the sigma -> 0 boundary of the parameter manifold.
struct ManifoldBoundaryError : Error {
    explicit ManifoldBoundaryError(const std::string& what) : Error(what) {}
};

/// A tail-convergence (plateau) diagnostic failed.
struct PlateauError : Error {
    explicit PlateauError(const std::string& what) : Error(what) {}
};

}  // namespace igeo

#endif
