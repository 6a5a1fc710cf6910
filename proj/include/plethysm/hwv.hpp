#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "plethysm/character.hpp"
#include "plethysm/pieri.hpp"
#include "plethysm/schur.hpp"
#include "plethysm/tableau.hpp"
#include "plethysm/tensor_vector.hpp"

namespace plethysm {

/// h_T explodes as prod_b (column height)!; instances above this many
/// permutation tuples are refused so large-d work routes to symfunc/pieri.
inline constexpr unsigned long long kDefaultTermBudget = 10'000'000ULL;

/// The canonical monomial of T: factor i collects x_a over boxes (a,b) with
/// entry i. Its coefficient in h_T is 1, which pins T's leading term.
inline std::vector<int> canonical_key(const Tableau& T, int n, int p) {
    std::vector<int> key(static_cast<std::size_t>(p * n), 0);
    for (int a = 0; a < T.shape().length(); ++a)
        for (int b = 0; b < T.shape().part(a); ++b)
            ++key[static_cast<std::size_t>((T.entry(a, b) - 1) * n + a)];
    return key;
}

/**
 * The highest weight vector h_T: the signed sum over independent column
 * permutations (sigma_1, ..., sigma_{lambda_1}) in S_{mu_1} x ... x
 * S_{mu_{lambda_1}} (mu = shape^T) of the monomials obtained by replacing
 * each box entry's row index a with sigma_b(a).
 */
inline TensorVector build_hwv(const Tableau& T, int n, int p = -1,
                              unsigned long long term_budget = kDefaultTermBudget) {
    if (!T.is_semistandard()) throw invalid_input("build_hwv: tableau is not semistandard");
    const Partition& shape = T.shape();
    if (n < shape.length()) throw invalid_input("build_hwv: need n >= l(shape)");
    if (p < 0) p = T.max_entry();
    const std::vector<int> content = T.content(p);

    const Partition mu = shape.conjugate();
    unsigned long long tuples = 1;
    for (int b = 0; b < mu.length(); ++b) {
        Int f = factorial(mu.part(b));
        if (!f.fits_ulong_p() || tuples > term_budget / std::max(1UL, f.get_ui()))
            throw resource_error("build_hwv: column permutation count exceeds term budget");
        tuples *= f.get_ui();
    }
    if (tuples > term_budget)
        throw resource_error("build_hwv: column permutation count exceeds term budget");

    const int cols = mu.length();
    std::vector<std::vector<Permutation>> column_groups(static_cast<std::size_t>(cols));
    for (int b = 0; b < cols; ++b)
        column_groups[static_cast<std::size_t>(b)] = symmetric_group(mu.part(b));

    TensorVector v(n, content);
    std::vector<std::size_t> odometer(static_cast<std::size_t>(cols), 0);
    std::vector<int> key(static_cast<std::size_t>(p * n));
    for (;;) {
        int sgn = 1;
        std::fill(key.begin(), key.end(), 0);
        for (int b = 0; b < cols; ++b) {
            const Permutation& sigma = column_groups[static_cast<std::size_t>(b)][odometer[static_cast<std::size_t>(b)]];
            sgn *= sign(sigma);
            for (int a = 0; a < mu.part(b); ++a) {
                const int factor = T.entry(a, b) - 1;
                ++key[static_cast<std::size_t>(factor * n + sigma[static_cast<std::size_t>(a)])];
            }
        }
        v.add_term(key, sgn);

        int b = 0;
        while (b < cols) {
            if (++odometer[static_cast<std::size_t>(b)] < column_groups[static_cast<std::size_t>(b)].size()) break;
            odometer[static_cast<std::size_t>(b)] = 0;
            ++b;
        }
        if (b == cols) break;
    }
    return v;
}

inline Rat leading_coefficient(const Tableau& T, const TensorVector& v) {
    return v.coefficient(canonical_key(T, v.variables(), v.factors()));
}

namespace detail {

/// Dense exact Gaussian elimination. rows have lead_cols + rhs_cols entries;
/// returns the lead_cols x rhs_cols solution of the full-column-rank system,
/// throwing consistency_error on rank defect or nonzero residual.
inline std::vector<std::vector<Rat>> solve_exact(std::vector<std::vector<Rat>> rows, int lead_cols,
                                                 int rhs_cols) {
    const int total = lead_cols + rhs_cols;
    int pivot_row = 0;
    std::vector<int> pivot_of_col(static_cast<std::size_t>(lead_cols), -1);
    for (int col = 0; col < lead_cols && pivot_row < static_cast<int>(rows.size()); ++col) {
        int found = -1;
        for (int r = pivot_row; r < static_cast<int>(rows.size()); ++r)
            if (rows[static_cast<std::size_t>(r)][static_cast<std::size_t>(col)] != 0) {
                found = r;
                break;
            }
        if (found < 0) continue;
        std::swap(rows[static_cast<std::size_t>(pivot_row)], rows[static_cast<std::size_t>(found)]);
        const Rat inv = 1 / rows[static_cast<std::size_t>(pivot_row)][static_cast<std::size_t>(col)];
        for (int c = col; c < total; ++c)
            rows[static_cast<std::size_t>(pivot_row)][static_cast<std::size_t>(c)] *= inv;
        for (int r = 0; r < static_cast<int>(rows.size()); ++r) {
            if (r == pivot_row) continue;
            const Rat factor = rows[static_cast<std::size_t>(r)][static_cast<std::size_t>(col)];
            if (factor == 0) continue;
            for (int c = col; c < total; ++c)
                rows[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] -=
                    factor * rows[static_cast<std::size_t>(pivot_row)][static_cast<std::size_t>(c)];
        }
        pivot_of_col[static_cast<std::size_t>(col)] = pivot_row;
        ++pivot_row;
    }
    for (int col = 0; col < lead_cols; ++col)
        if (pivot_of_col[static_cast<std::size_t>(col)] < 0)
            throw consistency_error("solve_exact: rank defect");
    for (int r = pivot_row; r < static_cast<int>(rows.size()); ++r)
        for (int c = lead_cols; c < total; ++c)
            if (rows[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] != 0)
                throw consistency_error("solve_exact: nonzero residual");

    std::vector<std::vector<Rat>> solution(static_cast<std::size_t>(lead_cols),
                                           std::vector<Rat>(static_cast<std::size_t>(rhs_cols)));
    for (int col = 0; col < lead_cols; ++col) {
        const int r = pivot_of_col[static_cast<std::size_t>(col)];
        for (int c = 0; c < rhs_cols; ++c)
            solution[static_cast<std::size_t>(col)][static_cast<std::size_t>(c)] =
                rows[static_cast<std::size_t>(r)][static_cast<std::size_t>(lead_cols + c)];
    }
    return solution;
}

inline int exact_rank(const std::vector<const TensorVector*>& vectors) {
    std::map<std::vector<int>, std::size_t> key_index;
    for (const TensorVector* v : vectors)
        for (const auto& [key, coeff] : v->terms()) key_index.emplace(key, 0);
    std::size_t next = 0;
    for (auto& [key, idx] : key_index) idx = next++;

    std::vector<std::vector<Rat>> rows(key_index.size(),
                                       std::vector<Rat>(vectors.size(), Rat(0)));
    for (std::size_t c = 0; c < vectors.size(); ++c)
        for (const auto& [key, coeff] : vectors[c]->terms())
            rows[key_index[key]][c] = coeff;

    int rank = 0;
    const int cols = static_cast<int>(vectors.size());
    int current = 0;
    for (int col = 0; col < cols && current < static_cast<int>(rows.size()); ++col) {
        int found = -1;
        for (int r = current; r < static_cast<int>(rows.size()); ++r)
            if (rows[static_cast<std::size_t>(r)][static_cast<std::size_t>(col)] != 0) {
                found = r;
                break;
            }
        if (found < 0) continue;
        std::swap(rows[static_cast<std::size_t>(current)], rows[static_cast<std::size_t>(found)]);
        for (int r = current + 1; r < static_cast<int>(rows.size()); ++r) {
            const Rat factor = rows[static_cast<std::size_t>(r)][static_cast<std::size_t>(col)] /
                               rows[static_cast<std::size_t>(current)][static_cast<std::size_t>(col)];
            if (factor == 0) continue;
            for (int c = col; c < cols; ++c)
                rows[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] -=
                    factor * rows[static_cast<std::size_t>(current)][static_cast<std::size_t>(c)];
        }
        ++current;
        ++rank;
    }
    return rank;
}

} // namespace detail

/**
 * The concrete model of B_d: the h_T over all SSYTs of shape lambda with
 * content (k^p), together with the shape data. Construction verifies, by
 * exact rank computation, that the vectors are linearly independent, so
 * dim = c^lambda_{p,k}.
 */
struct HwvSpace {
    Partition lambda;
    int p = 0;
    int k = 0;
    int n = 0;
    std::vector<Tableau> tableaux;
    std::vector<TensorVector> basis;

    int dimension() const { return static_cast<int>(basis.size()); }
};

inline HwvSpace hwv_basis(const Partition& lambda, int p, int k, int n,
                          unsigned long long term_budget = kDefaultTermBudget) {
    if (lambda.size() != p * k) throw invalid_input("hwv_basis: |lambda| != p*k");
    if (n < lambda.length()) throw invalid_input("hwv_basis: need n >= l(lambda)");
    HwvSpace space{lambda, p, k, n, enumerate_ssyt(lambda, rectangular_content(p, k)), {}};
    space.basis.reserve(space.tableaux.size());
    for (const Tableau& T : space.tableaux) space.basis.push_back(build_hwv(T, n, p, term_budget));

    std::vector<const TensorVector*> ptrs;
    for (const TensorVector& v : space.basis) ptrs.push_back(&v);
    if (detail::exact_rank(ptrs) != space.dimension())
        throw consistency_error("hwv_basis: rank defect, h_T are not independent");
    return space;
}

namespace detail {

/// Matrix of the right sigma-action on the span of the basis, solved exactly
/// against the basis vectors (column T holds the coordinates of h_T.sigma).
inline std::vector<std::vector<Rat>> action_matrix(const HwvSpace& space, const Permutation& sigma) {
    const int c = space.dimension();
    std::vector<TensorVector> moved;
    moved.reserve(static_cast<std::size_t>(c));
    for (const TensorVector& v : space.basis) moved.push_back(v.acted_by(sigma));

    std::map<std::vector<int>, std::size_t> key_index;
    for (const TensorVector& v : space.basis)
        for (const auto& [key, coeff] : v.terms()) key_index.emplace(key, 0);
    for (const TensorVector& v : moved)
        for (const auto& [key, coeff] : v.terms()) key_index.emplace(key, 0);
    std::size_t next = 0;
    for (auto& [key, idx] : key_index) idx = next++;

    std::vector<std::vector<Rat>> rows(key_index.size(),
                                       std::vector<Rat>(static_cast<std::size_t>(2 * c), Rat(0)));
    for (int col = 0; col < c; ++col) {
        for (const auto& [key, coeff] : space.basis[static_cast<std::size_t>(col)].terms())
            rows[key_index[key]][static_cast<std::size_t>(col)] = coeff;
        for (const auto& [key, coeff] : moved[static_cast<std::size_t>(col)].terms())
            rows[key_index[key]][static_cast<std::size_t>(c + col)] = coeff;
    }
    return solve_exact(std::move(rows), c, c);
}

} // namespace detail

/**
 * Multiplicity of the Specht module V_mu in the S_p-representation spanned
 * by the h_T, via character projection (1/p!) sum_sigma tr(sigma) chi_mu(sigma)
 * evaluated on one representative per conjugacy class. Equals
 * a^lambda_{mu,(k)}; the symfunc fast path is the cross-oracle.
 */
inline Int multiplicity_by_character(const Partition& lambda, int p, int k, int n,
                                     const Partition& mu,
                                     unsigned long long term_budget = kDefaultTermBudget) {
    if (mu.size() != p) throw invalid_input("multiplicity_by_character: |mu| != p");
    const HwvSpace space = hwv_basis(lambda, p, k, n, term_budget);
    if (space.dimension() == 0) return 0;

    Rat acc = 0;
    for (const Partition& rho : partitions_of(p)) {
        const Int chi = character_value(mu, rho);
        if (chi == 0) continue;
        const auto action = detail::action_matrix(space, class_representative(rho));
        Rat trace = 0;
        for (int i = 0; i < space.dimension(); ++i)
            trace += action[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)];
        acc += ratio(chi, centralizer_order(rho)) * trace;
    }
    const Int mult = to_integer(acc);
    if (mult < 0) throw consistency_error("multiplicity_by_character: negative multiplicity");
    return mult;
}

enum class WitnessRestrict { even, klein };

/**
 * Search for (T, sigma) with h_T.sigma != h_T, sigma ranging over nontrivial
 * even permutations (3-cycles first, then double transpositions) or over the
 * Klein four group for p = 4. Exact vector comparison; nullopt if none.
 */
inline std::optional<std::pair<Tableau, Permutation>>
find_asymmetry_witness(const Partition& lambda, int p, int k, int n,
                       WitnessRestrict restrict = WitnessRestrict::even,
                       unsigned long long term_budget = kDefaultTermBudget) {
    if (restrict == WitnessRestrict::klein && p != 4)
        throw invalid_input("find_asymmetry_witness: klein restriction needs p = 4");

    std::vector<Permutation> candidates;
    if (restrict == WitnessRestrict::klein) {
        candidates = klein_four_nontrivial();
    } else {
        std::vector<Permutation> all = symmetric_group(p);
        auto type_rank = [](const Partition& rho) {
            // 3-cycles, then double transpositions, then remaining even types
            if (rho.part(0) == 3 && rho.part(1) <= 1) return 0;
            if (rho.part(0) == 2 && rho.part(1) == 2 && rho.part(2) <= 1) return 1;
            return 2;
        };
        std::vector<std::pair<int, Permutation>> ranked;
        for (const Permutation& sigma : all) {
            if (sigma == identity_permutation(p) || !is_even(sigma)) continue;
            ranked.emplace_back(type_rank(cycle_type(sigma)), sigma);
        }
        std::stable_sort(ranked.begin(), ranked.end(),
                         [](const auto& a, const auto& b) { return a.first < b.first; });
        for (auto& [rank, sigma] : ranked) candidates.push_back(std::move(sigma));
    }

    for (const Tableau& T : enumerate_ssyt(lambda, rectangular_content(p, k))) {
        const TensorVector v = build_hwv(T, n, p, term_budget);
        for (const Permutation& sigma : candidates)
            if (!(v.acted_by(sigma) == v)) return std::make_pair(T, sigma);
    }
    return std::nullopt;
}

} // namespace plethysm
