#pragma once

#include <vector>

#include "plethysm/permutation.hpp"
#include "plethysm/power_sum.hpp"

namespace plethysm {

/// Schur-basis expansion with integer coefficients. For the elements this
/// library produces (plethysms, products of h's) all coefficients are
/// nonnegative integers; integrality is checked, never assumed.
struct SchurExpansion {
    std::map<Partition, Int> coeffs;

    Int coefficient(const Partition& pi) const {
        auto it = coeffs.find(pi);
        return it == coeffs.end() ? Int(0) : it->second;
    }

    bool operator==(const SchurExpansion& other) const = default;
};

/// <f, s_pi> = sum_rho c_rho chi_pi(rho) for f = sum c_rho p_rho.
/// Throws consistency_error if the pairing is not an integer.
inline Int schur_coefficient(const PowerSumElement& f, const Partition& pi) {
    if (!f.is_zero() && pi.size() != f.degree())
        throw invalid_input("schur_coefficient: degree mismatch");
    Rat acc = 0;
    for (const auto& [rho, coeff] : f.terms()) acc += coeff * character_value(pi, rho);
    return to_integer(acc);
}

/// Full Schur expansion of a homogeneous element; optionally only the
/// partitions with at most max_length rows (the rest are not computed).
inline SchurExpansion schur_expand(const PowerSumElement& f, int max_length = -1) {
    SchurExpansion out;
    if (f.is_zero()) return out;
    for (const Partition& pi : partitions_of(f.degree(), max_length)) {
        Int c = schur_coefficient(f, pi);
        if (c != 0) out.coeffs.emplace(pi, std::move(c));
    }
    return out;
}

/// Inner one-row flavor for the s_mu[...] fast path: h_k or e_k.
enum class InnerRow { complete, elementary };

namespace detail {

/**
 * Dense coefficient table of a product prod_j h_k(x^{r_j}) in n variables,
 * restricted to exponent vectors inside a box. Only coordinates 2..n are
 * stored; the exponent of x_1 is implied by the (fixed) total degree, which
 * keeps the table tiny even for large dilations.
 */
class CappedProductTable {
public:
    CappedProductTable(int n, int k, std::vector<int> caps)
        : n_(n), k_(k), caps_(std::move(caps)) {
        std::size_t cells = 1;
        strides_.assign(caps_.size(), 0);
        for (std::size_t i = 0; i < caps_.size(); ++i) {
            strides_[i] = cells;
            cells *= static_cast<std::size_t>(caps_[i] + 1);
        }
        data_.assign(cells, 0);
        data_[0] = 1; // empty product
    }

    /// Multiply by h_k(x^r): distribute k units among x_1..x_n, each unit
    /// worth r in the exponent. Bounded-knapsack recurrence per coordinate.
    void multiply_h_factor(int r) {
        const std::size_t cells = data_.size();
        // layer t = units of this factor already spent on tracked coords
        std::vector<std::vector<Int>> prev(static_cast<std::size_t>(k_) + 1,
                                           std::vector<Int>(cells));
        prev[0] = std::move(data_);
        for (std::size_t c = 0; c < caps_.size(); ++c) {
            std::vector<std::vector<Int>> next(static_cast<std::size_t>(k_) + 1,
                                               std::vector<Int>(cells));
            next[0] = prev[0];
            const std::size_t shift = strides_[c] * static_cast<std::size_t>(r);
            for (int t = 1; t <= k_; ++t) {
                auto& dst = next[static_cast<std::size_t>(t)];
                const auto& keep = prev[static_cast<std::size_t>(t)];
                const auto& take = next[static_cast<std::size_t>(t) - 1];
                for (std::size_t cell = 0; cell < cells; ++cell) {
                    dst[cell] = keep[cell];
                    if (coord_of(cell, c) >= r) dst[cell] += take[cell - shift];
                }
            }
            prev = std::move(next);
        }
        // leftover units go to x_1, which is untracked: sum all layers
        data_.assign(cells, 0);
        for (int t = 0; t <= k_; ++t)
            for (std::size_t cell = 0; cell < cells; ++cell)
                data_[cell] += prev[static_cast<std::size_t>(t)][cell];
    }

    /// Coefficient at tracked exponents (x_2..x_n); out-of-box means zero.
    Int at(const std::vector<int>& tail) const {
        std::size_t cell = 0;
        for (std::size_t i = 0; i < caps_.size(); ++i) {
            if (tail[i] < 0 || tail[i] > caps_[i]) return 0;
            cell += strides_[i] * static_cast<std::size_t>(tail[i]);
        }
        return data_[cell];
    }

private:
    int coord_of(std::size_t cell, std::size_t c) const {
        return static_cast<int>((cell / strides_[c]) % static_cast<std::size_t>(caps_[c] + 1));
    }

    int n_;
    int k_;
    std::vector<int> caps_;
    std::vector<std::size_t> strides_;
    std::vector<Int> data_;
};

/// sum_w sign(w) [x^{pi+delta-w(delta)}] table, the alternant extraction of
/// the s_pi coefficient from a symmetric polynomial in n = l(pi) variables.
inline Int alternant_coefficient(const CappedProductTable& table, const Partition& pi, int n) {
    Int acc = 0;
    std::vector<int> delta(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) delta[static_cast<std::size_t>(i)] = n - 1 - i;
    Permutation w = identity_permutation(n);
    do {
        bool feasible = true;
        std::vector<int> tail(static_cast<std::size_t>(n - 1));
        for (int i = 0; i < n && feasible; ++i) {
            const int gamma = pi.part(i) + delta[static_cast<std::size_t>(i)] -
                              delta[static_cast<std::size_t>(w[static_cast<std::size_t>(i)])];
            if (gamma < 0) feasible = false;
            if (i > 0) tail[static_cast<std::size_t>(i - 1)] = gamma;
        }
        if (!feasible) continue;
        if (sign(w) == 1)
            acc += table.at(tail);
        else
            acc -= table.at(tail);
    } while (std::next_permutation(w.begin(), w.end()));
    return acc;
}

inline std::vector<int> alternant_caps(const Partition& pi, int n) {
    std::vector<int> caps(static_cast<std::size_t>(n - 1));
    for (int i = 1; i < n; ++i)
        caps[static_cast<std::size_t>(i - 1)] = pi.part(i) + (n - 1 - i);
    return caps;
}

constexpr int kAlternantMaxVars = 9;       // 9! sign terms is the ceiling
constexpr int kSmallDegreeCutoff = 14;     // below this the p-basis route wins

} // namespace detail

/**
 * Coefficient of s_pi in s_mu[s_lambda] (mu outer, lambda inner), by full
 * power-sum expansion. Exact but exponential in the degree; the fast path
 * below covers one-row inner shapes at scale.
 */
inline Int plethysm_coefficient(const Partition& mu, const Partition& lambda, const Partition& pi) {
    if (pi.size() != mu.size() * lambda.size())
        throw invalid_input("plethysm_coefficient: |pi| != |mu|*|lambda|");
    if (lambda.empty() || mu.empty()) {
        // s_mu[1] = 1 for one-row mu, else 0; 1[g] = 1.
        const bool value = mu.length() <= 1;
        return pi.empty() && value ? 1 : 0;
    }
    const PowerSumElement outer = base_to_power(BaseKind::s, mu);
    const PowerSumElement inner = base_to_power(BaseKind::s, lambda);
    const Int a = schur_coefficient(plethysm_compose(outer, inner), pi);
    if (a < 0) throw consistency_error("negative plethysm coefficient");
    return a;
}

/**
 * Coefficient of s_pi in s_mu[h_k] (or s_mu[e_k]), |pi| = |mu|*k, without
 * expanding the plethysm: s_mu[h_k] = sum_rho z_rho^{-1} chi_mu(rho)
 * prod_j p_{rho_j}[h_k], and the s_pi coefficient of each product is read
 * off by an alternant over l(pi) variables on a capped coefficient box.
 * Cost grows with l(pi) and k, not with |pi|, so dilated instances stay cheap.
 */
inline Int plethysm_coefficient_fast(const Partition& mu, int k, const Partition& pi,
                                     InnerRow inner = InnerRow::complete) {
    const int p = mu.size();
    if (k < 0) throw invalid_input("plethysm_coefficient_fast: negative k");
    if (pi.size() != p * k) throw invalid_input("plethysm_coefficient_fast: |pi| != |mu|*k");
    if (mu.empty() || k == 0) return (pi.empty() && mu.length() <= 1) ? 1 : 0;

    if (pi.size() <= detail::kSmallDegreeCutoff) {
        const PowerSumElement row =
            base_to_power(inner == InnerRow::complete ? BaseKind::h : BaseKind::e, k);
        const Int a = schur_coefficient(plethysm_compose(base_to_power(BaseKind::s, mu), row), pi);
        if (a < 0) throw consistency_error("negative plethysm coefficient");
        return a;
    }

    if (inner == InnerRow::elementary) {
        // omega(s_mu[e_k]) = s_mu[h_k] for even k, s_{mu^T}[h_k] for odd k.
        const Partition outer = (k % 2 == 0) ? mu : mu.conjugate();
        return plethysm_coefficient_fast(outer, k, pi.conjugate(), InnerRow::complete);
    }

    const int n = std::max(pi.length(), 1);
    if (n > detail::kAlternantMaxVars)
        throw resource_error("plethysm_coefficient_fast: too many rows for the alternant path");

    Rat acc = 0;
    for (const Partition& rho : partitions_of(p)) {
        const Int chi = character_value(mu, rho);
        if (chi == 0) continue;
        detail::CappedProductTable table(n, k, detail::alternant_caps(pi, n));
        for (int r : rho.parts()) table.multiply_h_factor(r);
        acc += ratio(chi, centralizer_order(rho)) * detail::alternant_coefficient(table, pi, n);
    }
    const Int a = to_integer(acc);
    if (a < 0) throw consistency_error("negative plethysm coefficient");
    return a;
}

/**
 * c^lambda_{p,k}: the coefficient of s_lambda in h_k^p, i.e. the multiplicity
 * of S_lambda(V) in (S^k V)^{tensor p}. Same alternant trick with the plain
 * product h_k^p; the pieri module counts the same number combinatorially.
 */
inline Int tensor_multiplicity(const Partition& lambda, int p, int k) {
    if (p < 1 || k < 0) throw invalid_input("tensor_multiplicity: need p >= 1, k >= 0");
    if (lambda.size() != p * k) throw invalid_input("tensor_multiplicity: |lambda| != p*k");
    if (k == 0) return 1;

    if (lambda.size() <= detail::kSmallDegreeCutoff) {
        PowerSumElement power = PowerSumElement::one();
        const PowerSumElement h_k = base_to_power(BaseKind::h, k);
        for (int j = 0; j < p; ++j) power = power * h_k;
        return schur_coefficient(power, lambda);
    }

    const int n = std::max(lambda.length(), 1);
    if (n > detail::kAlternantMaxVars)
        throw resource_error("tensor_multiplicity: too many rows for the alternant path");
    detail::CappedProductTable table(n, k, detail::alternant_caps(lambda, n));
    for (int j = 0; j < p; ++j) table.multiply_h_factor(1);
    const Int c = detail::alternant_coefficient(table, lambda, n);
    if (c < 0) throw consistency_error("negative tensor multiplicity");
    return c;
}

/// Outcome of stripping the full last row: a^lambda_{mu,(k)} = a^{lambda'}_{mu',(k')}
/// and c^lambda_{p,k} = c^{lambda'}_{p,k'}.
struct StripReduction {
    Partition lambda;
    int k = 0;
    Partition mu;
    bool reduced = false;
};

/**
 * When l(lambda) = |mu| = p, subtract the last part from every row:
 * lambda' = (lambda_1 - lambda_p, ..., lambda_{p-1} - lambda_p), k' = k - lambda_p,
 * and mu' = mu for even lambda_p, mu^T for odd. Identity otherwise.
 */
inline StripReduction reduce_by_strip(const Partition& lambda, const Partition& mu, int k) {
    const int p = mu.size();
    if (lambda.length() != p || p == 0) return {lambda, k, mu, false};
    const int last = lambda.part(p - 1);
    std::vector<int> parts;
    parts.reserve(static_cast<std::size_t>(p - 1));
    for (int i = 0; i + 1 < p; ++i) parts.push_back(lambda.part(i) - last);
    return {Partition(std::move(parts)), k - last, last % 2 == 0 ? mu : mu.conjugate(), true};
}

} // namespace plethysm
