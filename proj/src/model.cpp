#include "igeo/model.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

namespace igeo {

namespace {
constexpr Structure kAll[] = {
    Structure::Mono1,           Structure::Mono2,
    Structure::Mono3,           Structure::BivariateStrong,
    Structure::TrivariateWeak,  Structure::TrivariateMildlyWeak,
    Structure::TrivariateStrong,
};

bool is_mono(Structure s) {
    return s == Structure::Mono1 || s == Structure::Mono2 || s == Structure::Mono3;
}
}  // namespace

std::span<const Structure> all_structures() { return kAll; }

const char* structure_name(Structure s) {
    switch (s) {
        case Structure::Mono1: return "mono1";
        case Structure::Mono2: return "mono2";
        case Structure::Mono3: return "mono3";
        case Structure::BivariateStrong: return "bivariate-strong";
        case Structure::TrivariateWeak: return "trivariate-weak";
        case Structure::TrivariateMildlyWeak: return "trivariate-mildly-weak";
        case Structure::TrivariateStrong: return "trivariate-strong";
    }
    return "?";
}

Structure structure_from_name(const std::string& name) {
    for (Structure s : kAll)
        if (name == structure_name(s)) return s;
    throw std::invalid_argument("unknown structure name: " + name);
}

int micro_dim(Structure s) {
    switch (s) {
        case Structure::Mono1:
        case Structure::Mono2:
        case Structure::Mono3: return 1;
        case Structure::BivariateStrong: return 2;
        default: return 3;
    }
}

int macro_dim(Structure s) {
    return (s == Structure::Mono1 || s == Structure::Mono2) ? 1 : 2;
}

bool mu_is_coordinate(Structure s) { return s != Structure::Mono2; }

bool sigma_is_coordinate(Structure s) { return s != Structure::Mono1; }

RhoInterval admissible_rho_interval(Structure s) {
    const double r2 = std::numbers::sqrt2 / 2.0;
    switch (s) {
        case Structure::Mono1:
        case Structure::Mono2:
        case Structure::Mono3: return {0.0, 0.0};
        case Structure::BivariateStrong: return {-1.0, 1.0};
        case Structure::TrivariateWeak: return {-1.0, 1.0};
        case Structure::TrivariateMildlyWeak: return {-r2, r2};
        case Structure::TrivariateStrong: return {-0.5, 1.0};
    }
    return {0.0, 0.0};
}

SmallMatrix correlation_template(Structure s, double rho) {
    const int n = micro_dim(s);
    SmallMatrix t = SmallMatrix::identity(n);
    switch (s) {
        case Structure::BivariateStrong:
            t(0, 1) = t(1, 0) = rho;
            break;
        case Structure::TrivariateWeak:
            t(0, 1) = t(1, 0) = rho;
            break;
        case Structure::TrivariateMildlyWeak:
            t(0, 1) = t(1, 0) = rho;
            t(0, 2) = t(2, 0) = rho;
            break;
        case Structure::TrivariateStrong:
            t(0, 1) = t(1, 0) = rho;
            t(0, 2) = t(2, 0) = rho;
            t(1, 2) = t(2, 1) = rho;
            break;
        default:
            break;
    }
    return t;
}

ThetaPoint::ThetaPoint(double mu_, double sigma_) : mu(mu_), sigma(sigma_) {
    if (!(sigma > 0.0) || !std::isfinite(sigma) || !std::isfinite(mu))
        throw std::invalid_argument("ThetaPoint: sigma must be finite and > 0");
}

ModelSpec::ModelSpec(Structure s, double rho) : structure_(s), rho_(rho) {
    if (is_mono(s)) {
        if (rho != 0.0)
            throw std::invalid_argument("ModelSpec: rho is unused for monovariate structures and must be 0");
        return;
    }
    const RhoInterval iv = admissible_rho_interval(s);
    if (rho == iv.lo || rho == iv.hi) {
        std::ostringstream msg;
        msg << "ModelSpec: degenerate covariance, rho = " << rho << " sits on the boundary of ("
            << iv.lo << ", " << iv.hi << ") for " << structure_name(s);
        throw DegenerateCovarianceError(msg.str());
    }
    if (!iv.contains(rho)) {
        std::ostringstream msg;
        msg << "ModelSpec: rho = " << rho << " outside the admissible interval (" << iv.lo << ", "
            << iv.hi << ") for " << structure_name(s);
        throw InadmissibleRhoError(msg.str());
    }
}

ThetaPoint effective_theta(const ModelSpec& spec, const ThetaPoint& theta) {
    ThetaPoint t = theta;
    if (spec.structure() == Structure::Mono1) t.sigma = 1.0;
    if (spec.structure() == Structure::Mono2) t.mu = 0.0;
    return t;
}

SmallMatrix covariance_matrix(const ModelSpec& spec, const ThetaPoint& theta) {
    const ThetaPoint t = effective_theta(spec, theta);
    SmallMatrix c = correlation_template(spec.structure(), spec.rho());
    const double s2 = t.sigma * t.sigma;
    for (int i = 0; i < c.n; ++i)
        for (int j = 0; j < c.n; ++j) c(i, j) *= s2;
    if (!c.positive_definite())
        throw InadmissibleRhoError("covariance_matrix: template not positive definite");
    return c;
}

double log_density(const ModelSpec& spec, const ThetaPoint& theta, std::span<const double> x) {
    const int n = spec.micro_dim();
    if (static_cast<int>(x.size()) != n)
        throw std::invalid_argument("log_density: x has wrong dimension");
    const ThetaPoint t = effective_theta(spec, theta);
    const SmallMatrix c = covariance_matrix(spec, t);
    const double d = c.det();
    if (!(d > 0.0))
        throw DegenerateCovarianceError("log_density: covariance determinant not positive");
    std::array<double, 3> centered{};
    for (int i = 0; i < n; ++i) centered[i] = x[i] - t.mu;
    const SmallMatrix cinv = c.inverse();
    const double q = cinv.quadratic_form(std::span<const double>(centered.data(), n));
    return -0.5 * (n * std::log(2.0 * std::numbers::pi) + std::log(d) + q);
}

}  // namespace igeo
