#ifndef IGEO_POLYNOMIAL_HPP
#define IGEO_POLYNOMIAL_HPP

#include <array>
#include <map>
#include <span>

namespace igeo {

/// Multivariate polynomial in up to three variables, stored as a sparse map
/// from exponent multi-indices to real coefficients. Coefficients below
/// 1e-30 in magnitude are dropped after every arithmetic operation so that
/// cancellation residue cannot accumulate.
class Polynomial {
  public:
    using MultiIndex = std::array<int, 3>;

    explicit Polynomial(int nvars);

    static Polynomial constant(int nvars, double value);
    static Polynomial variable(int nvars, int i);  // the monomial x_i

    int nvars() const { return nvars_; }
    int total_degree() const;
    std::size_t term_count() const { return terms_.size(); }
    const std::map<MultiIndex, double>& terms() const { return terms_; }

    double coefficient(const MultiIndex& idx) const;
    void add_term(const MultiIndex& idx, double coeff);

    Polynomial operator+(const Polynomial& rhs) const;
    Polynomial operator-(const Polynomial& rhs) const;
    Polynomial operator*(const Polynomial& rhs) const;
    Polynomial scaled(double factor) const;

    /// Partial derivative with respect to x_i.
    Polynomial derivative(int var) const;

    /// Returns q with q(y) = p(y + shift), i.e. recenters the polynomial.
    Polynomial shifted(std::span<const double> shift) const;

    double evaluate(std::span<const double> x) const;

  private:
    void check_same_vars(const Polynomial& rhs) const;
    void prune();

    int nvars_;
    std::map<MultiIndex, double> terms_;
};

}  // namespace igeo

#endif
