#pragma once

#include <future>
#include <utility>
#include <vector>

#include "plethysm/pieri.hpp"
#include "plethysm/schur.hpp"

namespace plethysm {

/// a^{d lambda}_{mu,(dk)}: strip reduction is applied to the scaled instance
/// first (it decides by the parity of d*lambda_p), then the fast path.
inline Int a_value(const Partition& lambda, int p, int k, const Partition& mu, int d) {
    if (mu.size() != p) throw invalid_input("a_value: |mu| != p");
    if (lambda.size() != p * k) throw invalid_input("a_value: |lambda| != p*k");
    const StripReduction red = reduce_by_strip(lambda.scaled(d), mu, d * k);
    return plethysm_coefficient_fast(red.mu, red.k, red.lambda);
}

/// c^{d lambda}_{p,dk} by the Pieri chain DP on the scaled shape.
inline Int c_value(const Partition& lambda, int p, int k, int d) {
    if (lambda.size() != p * k) throw invalid_input("c_value: |lambda| != p*k");
    return kostka_count(lambda.scaled(d), p, d * k, KostkaMode::chain_dp);
}

namespace detail {

template <typename F>
std::vector<std::pair<long, Rat>> d_sweep(int dmin, int dmax, F&& value_at) {
    std::vector<std::future<Int>> futures;
    for (int d = dmin; d <= dmax; ++d)
        futures.push_back(std::async(std::launch::async, value_at, d));
    std::vector<std::pair<long, Rat>> out;
    out.reserve(futures.size());
    for (int d = dmin; d <= dmax; ++d)
        out.emplace_back(d, Rat(futures[static_cast<std::size_t>(d - dmin)].get()));
    return out;
}

} // namespace detail

inline std::vector<std::pair<long, Rat>> a_sequence(const Partition& lambda, int p, int k,
                                                    const Partition& mu, int dmax, int dmin = 0) {
    return detail::d_sweep(dmin, dmax, [&](int d) { return a_value(lambda, p, k, mu, d); });
}

inline std::vector<std::pair<long, Rat>> c_sequence(const Partition& lambda, int p, int k,
                                                    int dmax, int dmin = 0) {
    return detail::d_sweep(dmin, dmax, [&](int d) { return c_value(lambda, p, k, d); });
}

} // namespace plethysm
