#include "igeo/polynomial.hpp"

#include <cmath>
#include <stdexcept>

namespace igeo {

namespace {
constexpr double kPruneThreshold = 1e-30;

double int_pow(double base, int e) {
    double r = 1.0;
    for (int k = 0; k < e; ++k) r *= base;
    return r;
}

double binomial(int n, int k) {
    double r = 1.0;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}
}  // namespace

Polynomial::Polynomial(int nvars) : nvars_(nvars) {
    if (nvars < 1 || nvars > 3) throw std::invalid_argument("Polynomial: nvars must be 1..3");
}

Polynomial Polynomial::constant(int nvars, double value) {
    Polynomial p(nvars);
    p.add_term({0, 0, 0}, value);
    return p;
}

Polynomial Polynomial::variable(int nvars, int i) {
    if (i < 0 || i >= nvars) throw std::out_of_range("Polynomial::variable: index out of range");
    Polynomial p(nvars);
    MultiIndex idx{0, 0, 0};
    idx[i] = 1;
    p.add_term(idx, 1.0);
    return p;
}

int Polynomial::total_degree() const {
    int deg = 0;
    for (const auto& [idx, c] : terms_) deg = std::max(deg, idx[0] + idx[1] + idx[2]);
    return deg;
}

double Polynomial::coefficient(const MultiIndex& idx) const {
    auto it = terms_.find(idx);
    return it == terms_.end() ? 0.0 : it->second;
}

void Polynomial::add_term(const MultiIndex& idx, double coeff) {
    auto it = terms_.find(idx);
    if (it == terms_.end()) {
        if (std::abs(coeff) >= kPruneThreshold) terms_.emplace(idx, coeff);
        return;
    }
    it->second += coeff;
    if (std::abs(it->second) < kPruneThreshold) terms_.erase(it);
}

void Polynomial::check_same_vars(const Polynomial& rhs) const {
    if (nvars_ != rhs.nvars_)
        throw std::invalid_argument("Polynomial: operand variable counts differ");
}

void Polynomial::prune() {
    for (auto it = terms_.begin(); it != terms_.end();) {
        if (std::abs(it->second) < kPruneThreshold)
            it = terms_.erase(it);
        else
            ++it;
    }
}

Polynomial Polynomial::operator+(const Polynomial& rhs) const {
    check_same_vars(rhs);
    Polynomial out = *this;
    for (const auto& [idx, c] : rhs.terms_) out.add_term(idx, c);
    return out;
}

Polynomial Polynomial::operator-(const Polynomial& rhs) const {
    check_same_vars(rhs);
    Polynomial out = *this;
    for (const auto& [idx, c] : rhs.terms_) out.add_term(idx, -c);
    return out;
}

Polynomial Polynomial::operator*(const Polynomial& rhs) const {
    check_same_vars(rhs);
    Polynomial out(nvars_);
    for (const auto& [ia, ca] : terms_)
        for (const auto& [ib, cb] : rhs.terms_)
            out.add_term({ia[0] + ib[0], ia[1] + ib[1], ia[2] + ib[2]}, ca * cb);
    out.prune();
    return out;
}

Polynomial Polynomial::scaled(double factor) const {
    Polynomial out(nvars_);
    for (const auto& [idx, c] : terms_) out.add_term(idx, c * factor);
    return out;
}

Polynomial Polynomial::derivative(int var) const {
    if (var < 0 || var >= nvars_)
        throw std::out_of_range("Polynomial::derivative: index out of range");
    Polynomial out(nvars_);
    for (const auto& [idx, c] : terms_) {
        if (idx[var] == 0) continue;
        MultiIndex d = idx;
        d[var] -= 1;
        out.add_term(d, c * idx[var]);
    }
    return out;
}

Polynomial Polynomial::shifted(std::span<const double> shift) const {
    if (static_cast<int>(shift.size()) != nvars_)
        throw std::invalid_argument("Polynomial::shifted: shift has wrong dimension");
    Polynomial out(nvars_);
    for (const auto& [idx, c] : terms_) {
        // expand c * prod_i (y_i + shift_i)^{a_i} by binomials
        for (int b0 = 0; b0 <= idx[0]; ++b0)
            for (int b1 = 0; b1 <= idx[1]; ++b1)
                for (int b2 = 0; b2 <= idx[2]; ++b2) {
                    double coeff = c;
                    coeff *= binomial(idx[0], b0) * int_pow(shift[0], idx[0] - b0);
                    if (nvars_ > 1) coeff *= binomial(idx[1], b1) * int_pow(shift[1], idx[1] - b1);
                    if (nvars_ > 2) coeff *= binomial(idx[2], b2) * int_pow(shift[2], idx[2] - b2);
                    out.add_term({b0, b1, b2}, coeff);
                }
    }
    out.prune();
    return out;
}

double Polynomial::evaluate(std::span<const double> x) const {
    if (static_cast<int>(x.size()) != nvars_)
        throw std::invalid_argument("Polynomial::evaluate: x has wrong dimension");
    double sum = 0.0;
    for (const auto& [idx, c] : terms_) {
        double term = c;
        for (int v = 0; v < nvars_; ++v) term *= int_pow(x[v], idx[v]);
        sum += term;
    }
    return sum;
}

}  // namespace igeo
