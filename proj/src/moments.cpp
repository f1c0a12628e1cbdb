#include "igeo/moments.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

namespace igeo {

namespace {

/// One application of the operator sum_{h,k} c_hk d_h d_k.
Polynomial apply_diffusion(const Polynomial& p, const SmallMatrix& c) {
    Polynomial out(p.nvars());
    for (int h = 0; h < c.n; ++h) {
        const Polynomial dh = p.derivative(h);
        if (dh.term_count() == 0) continue;
        for (int k = 0; k < c.n; ++k) {
            if (c(h, k) == 0.0) continue;
            out = out + dh.derivative(k).scaled(c(h, k));
        }
    }
    return out;
}

/// Central moment E[prod y_i] for the multiset of variable indices `vars`,
/// by recursive pairing of the first element with each partner.
double pair_partition_sum(std::vector<int>& vars, const SmallMatrix& c) {
    if (vars.empty()) return 1.0;
    if (vars.size() % 2 != 0) return 0.0;
    const int first = vars.front();
    double total = 0.0;
    for (std::size_t j = 1; j < vars.size(); ++j) {
        std::vector<int> rest;
        rest.reserve(vars.size() - 2);
        for (std::size_t t = 1; t < vars.size(); ++t)
            if (t != j) rest.push_back(vars[t]);
        total += c(first, vars[j]) * pair_partition_sum(rest, c);
    }
    return total;
}

}  // namespace

double gaussian_expectation(const Polynomial& f, std::span<const double> mu, const SmallMatrix& c) {
    if (static_cast<int>(mu.size()) != f.nvars() || c.n != f.nvars())
        throw std::invalid_argument("gaussian_expectation: dimension mismatch");
    double result = 0.0;
    Polynomial g = f;
    double factor = 1.0;  // (1/2)^k / k!
    for (int k = 0;; ++k) {
        if (k > 0) {
            g = apply_diffusion(g, c);
            factor *= 0.5 / k;
        }
        if (g.term_count() == 0) break;
        result += factor * g.evaluate(mu);
        if (g.total_degree() < 2) break;
    }
    return result;
}

double isserlis_oracle(const Polynomial& f, std::span<const double> mu, const SmallMatrix& c) {
    if (static_cast<int>(mu.size()) != f.nvars() || c.n != f.nvars())
        throw std::invalid_argument("isserlis_oracle: dimension mismatch");
    if (f.total_degree() > 6)
        throw std::invalid_argument("isserlis_oracle: supports total degree <= 6");
    const Polynomial centered = f.shifted(mu);  // f(y + mu), y centered
    double result = 0.0;
    for (const auto& [idx, coeff] : centered.terms()) {
        std::vector<int> vars;
        for (int v = 0; v < f.nvars(); ++v)
            for (int r = 0; r < idx[v]; ++r) vars.push_back(v);
        result += coeff * pair_partition_sum(vars, c);
    }
    return result;
}

Polynomial score_polynomial(const ModelSpec& spec, const ThetaPoint& theta, int i) {
    const int m = spec.macro_dim();
    if (i < 0 || i >= m) throw std::out_of_range("score_polynomial: macro index out of range");
    const ThetaPoint t = effective_theta(spec, theta);
    const int n = spec.micro_dim();
    const SmallMatrix cinv = covariance_matrix(spec, t).inverse();

    const bool wants_mu = mu_is_coordinate(spec.structure()) && i == 0;
    if (wants_mu) {
        // d/dmu log p = 1^T C^{-1} (x - mu 1)
        Polynomial p(n);
        double colsum_total = 0.0;
        for (int j = 0; j < n; ++j) {
            double colsum = 0.0;
            for (int k = 0; k < n; ++k) colsum += cinv(k, j);
            Polynomial::MultiIndex idx{0, 0, 0};
            idx[j] = 1;
            p.add_term(idx, colsum);
            colsum_total += colsum;
        }
        p.add_term({0, 0, 0}, -t.mu * colsum_total);
        return p;
    }

    // d/dsigma log p = -n/sigma + (1/sigma) (x - mu 1)^T C^{-1} (x - mu 1)
    Polynomial quad(n);
    for (int j = 0; j < n; ++j)
        for (int k = 0; k < n; ++k) {
            if (cinv(j, k) == 0.0) continue;
            Polynomial::MultiIndex idx{0, 0, 0};
            idx[j] += 1;
            idx[k] += 1;
            quad.add_term(idx, cinv(j, k));
            idx[k] -= 1;
            quad.add_term(idx, -t.mu * cinv(j, k));
            idx[j] -= 1;
            idx[k] += 1;
            quad.add_term(idx, -t.mu * cinv(j, k));
            idx[k] -= 1;
            quad.add_term(idx, t.mu * t.mu * cinv(j, k));
        }
    Polynomial p = quad.scaled(1.0 / t.sigma);
    p.add_term({0, 0, 0}, -n / t.sigma);
    return p;
}

}  // namespace igeo
