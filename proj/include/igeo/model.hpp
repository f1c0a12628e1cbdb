#ifndef IGEO_MODEL_HPP
#define IGEO_MODEL_HPP

#include <span>
#include <string>
#include <vector>

#include "igeo/small_matrix.hpp"

namespace igeo {

/// The Gaussian statistical models under study. Each structure fixes the
/// number of micro-variables n, which macro-variables (mu, sigma) are live
/// coordinates on the parameter manifold, and the correlation template of
/// the covariance matrix.
///
///   Mono1               n=1, coordinate mu only (sigma pinned to 1)
///   Mono2               n=1, coordinate sigma only (mu pinned to 0)
///   Mono3               n=1, coordinates (mu, sigma)
///   BivariateStrong     n=2, both pairs correlated
///   TrivariateWeak      n=3, one correlated pair
///   TrivariateMildlyWeak n=3, two correlated pairs
///   TrivariateStrong    n=3, all three pairs correlated
enum class Structure {
    Mono1,
    Mono2,
    Mono3,
    BivariateStrong,
    TrivariateWeak,
    TrivariateMildlyWeak,
    TrivariateStrong,
};

/// All seven structures, in declaration order. Handy for sweeps.
std::span<const Structure> all_structures();

const char* structure_name(Structure s);
/// Parses the hyphenated CLI spelling ("bivariate-strong", ...). Throws
/// std::invalid_argument on an unknown name.
Structure structure_from_name(const std::string& name);

int micro_dim(Structure s);   // n, number of micro-variables
int macro_dim(Structure s);   // m, number of manifold coordinates (1 or 2)
bool mu_is_coordinate(Structure s);
bool sigma_is_coordinate(Structure s);

/// Open interval of correlation coefficients on which the covariance
/// template is positive definite. For the monovariate structures the
/// interval degenerates to {0} (rho is unused).
struct RhoInterval {
    double lo = 0.0;
    double hi = 0.0;
    bool contains(double rho) const { return rho > lo && rho < hi; }
};

RhoInterval admissible_rho_interval(Structure s);

/// Correlation template T with unit variances, so the covariance is
/// sigma^2 * T. Does not validate rho.
SmallMatrix correlation_template(Structure s, double rho);

/// A macro-state on the parameter manifold.
struct ThetaPoint {
    double mu = 0.0;
    double sigma = 1.0;

    ThetaPoint() = default;
    ThetaPoint(double mu_, double sigma_);
};

/// A fully specified Gaussian statistical model: a structure plus its
/// correlation coefficient. Admissibility of rho is enforced here, once,
/// because every downstream quantity divides by positivity-dependent
/// determinants.
class ModelSpec {
  public:
    explicit ModelSpec(Structure s, double rho = 0.0);

    Structure structure() const { return structure_; }
    double rho() const { return rho_; }
    int micro_dim() const { return igeo::micro_dim(structure_); }
    int macro_dim() const { return igeo::macro_dim(structure_); }

  private:
    Structure structure_;
    double rho_;
};

/// Macro-state with the structure's fixed (non-coordinate) components pinned
/// to their model values: sigma = 1 for Mono1, mu = 0 for Mono2. The pinned
/// point is what the densities and scores are evaluated at, which keeps the
/// metric well defined whatever the caller stored in the unused slot.
ThetaPoint effective_theta(const ModelSpec& spec, const ThetaPoint& theta);

/// sigma^2 times the correlation template; symmetric positive definite for
/// every admissible spec.
SmallMatrix covariance_matrix(const ModelSpec& spec, const ThetaPoint& theta);

/// Log of the multivariate normal density at micro-state x.
double log_density(const ModelSpec& spec, const ThetaPoint& theta, std::span<const double> x);

}  // namespace igeo

#endif
