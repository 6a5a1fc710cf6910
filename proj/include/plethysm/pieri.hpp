#pragma once

#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "plethysm/tableau.hpp"

namespace plethysm {

/**
 * The Pieri polytope of (lambda, k, p) in the variables x_i^j, 1 <= j <= p-1,
 * 1 <= i <= j+1 (x_i^j = boxes added to row i in step j; step 0 contributes
 * k boxes to row 1):
 *
 *   (i)   x_i^j >= 0
 *   (ii)  sum_{l<=j} x_{i+1}^l <= sum_{l<=j-1} x_i^l   (+k on the right if i=1)
 *   (iii) sum_i x_i^j = k for every step j
 *   (iv)  sum_j x_i^j = lambda_i (minus k for row 1)
 *
 * All right-hand sides scale linearly in the dilation d, realizing
 * P^{d lambda}_{dk,p} = d P^{lambda}_{k,p}.
 */
struct ConstraintSystem {
    struct Row {
        std::vector<long long> coeffs;
        long long rhs = 0;
    };

    Partition lambda;
    int p = 0;
    int k = 0;
    int dilation = 1;
    int num_vars = 0;
    std::vector<Row> inequalities; // a.x <= rhs
    std::vector<Row> equalities;   // a.x  = rhs

    /// Index of x_i^j (both 1-indexed, j >= max(1, i-1)).
    int var_index(int j, int i) const {
        // steps 1..p-1 have sizes 2, 3, ..., p
        return (j - 1) * (j + 2) / 2 + (i - 1);
    }

    static ConstraintSystem build(const Partition& lambda, int p, int k) {
        if (p < 1 || k < 0) throw invalid_input("ConstraintSystem: need p >= 1, k >= 0");
        if (lambda.size() != p * k) throw invalid_input("ConstraintSystem: |lambda| != p*k");
        if (lambda.length() > p) throw invalid_input("ConstraintSystem: l(lambda) > p");

        ConstraintSystem cs;
        cs.lambda = lambda;
        cs.p = p;
        cs.k = k;
        cs.num_vars = (p * (p + 1)) / 2 - 1;

        auto zero_row = [&] { return Row{std::vector<long long>(static_cast<std::size_t>(cs.num_vars), 0), 0}; };

        for (int v = 0; v < cs.num_vars; ++v) {
            Row row = zero_row();
            row.coeffs[static_cast<std::size_t>(v)] = -1;
            cs.inequalities.push_back(std::move(row)); // (i)
        }
        for (int j = 1; j <= p - 1; ++j) {
            for (int i = 1; i <= j; ++i) { // (ii)
                Row row = zero_row();
                for (int l = i; l <= j; ++l)
                    row.coeffs[static_cast<std::size_t>(cs.var_index(l, i + 1))] += 1;
                for (int l = std::max(1, i - 1); l <= j - 1; ++l)
                    row.coeffs[static_cast<std::size_t>(cs.var_index(l, i))] -= 1;
                row.rhs = (i == 1) ? k : 0;
                cs.inequalities.push_back(std::move(row));
            }
            Row step = zero_row(); // (iii)
            for (int i = 1; i <= j + 1; ++i)
                step.coeffs[static_cast<std::size_t>(cs.var_index(j, i))] = 1;
            step.rhs = k;
            cs.equalities.push_back(std::move(step));
        }
        for (int i = 1; i <= p; ++i) { // (iv)
            Row row = zero_row();
            for (int j = std::max(1, i - 1); j <= p - 1; ++j)
                row.coeffs[static_cast<std::size_t>(cs.var_index(j, i))] = 1;
            row.rhs = lambda.part(i - 1) - (i == 1 ? k : 0);
            cs.equalities.push_back(std::move(row));
        }
        return cs;
    }

    ConstraintSystem dilated(int d) const {
        if (d < 0) throw invalid_input("dilation must be nonnegative");
        ConstraintSystem cs = *this;
        cs.dilation = dilation * d;
        for (auto& row : cs.inequalities) row.rhs *= d;
        for (auto& row : cs.equalities) row.rhs *= d;
        return cs;
    }

    bool satisfied_by(const std::vector<long long>& x) const {
        auto dot = [&](const Row& row) {
            long long acc = 0;
            for (std::size_t v = 0; v < row.coeffs.size(); ++v) acc += row.coeffs[v] * x[v];
            return acc;
        };
        for (const auto& row : inequalities)
            if (dot(row) > row.rhs) return false;
        for (const auto& row : equalities)
            if (dot(row) != row.rhs) return false;
        return true;
    }

    /// Plain-text H-representation ("ineq c1 .. cN <= rhs" / "eq c1 .. cN = rhs").
    std::string to_hrep() const {
        std::ostringstream out;
        out << "# Pieri polytope lambda=" << lambda.to_string() << " p=" << p << " k=" << k
            << " dilation=" << dilation << "\n";
        out << "vars " << num_vars << "\n";
        auto print = [&](const char* tag, const char* rel, const Row& row) {
            out << tag;
            for (long long c : row.coeffs) out << ' ' << c;
            out << ' ' << rel << ' ' << row.rhs << "\n";
        };
        for (const auto& row : inequalities) print("ineq", "<=", row);
        for (const auto& row : equalities) print("eq", "=", row);
        return out.str();
    }
};

namespace detail {

/**
 * Lattice points of the (dilated) Pieri system by bounded recursive
 * enumeration: variables grouped by step, each prefix pruned by the step
 * quota, the row totals, and the column inequality; every accepted point is
 * re-checked against the raw rows.
 */
class PieriPointCounter {
public:
    explicit PieriPointCounter(const ConstraintSystem& cs) : cs_(cs) {
        kd_ = static_cast<long long>(cs.k) * cs.dilation;
        targets_.resize(static_cast<std::size_t>(cs.p));
        for (int i = 0; i < cs_.p; ++i) {
            targets_[static_cast<std::size_t>(i)] =
                static_cast<long long>(cs_.lambda.part(i)) * cs_.dilation - (i == 0 ? kd_ : 0);
            if (targets_[static_cast<std::size_t>(i)] < 0) infeasible_ = true;
        }
    }

    Int count() {
        if (infeasible_) return 0;
        row_used_.assign(static_cast<std::size_t>(cs_.p), 0);
        prev_prefix_.assign(static_cast<std::size_t>(cs_.p), 0);
        prev_prefix_[0] = kd_; // step-0 boxes in row 1
        values_.assign(static_cast<std::size_t>(cs_.num_vars), 0);
        total_ = 0;
        recurse_step(1);
        return total_;
    }

private:
    void recurse_step(int j) {
        if (j > cs_.p - 1) {
            for (int i = 0; i < cs_.p; ++i)
                if (row_used_[static_cast<std::size_t>(i)] != targets_[static_cast<std::size_t>(i)]) return;
            if (!cs_.satisfied_by(values_))
                throw consistency_error("pieri enumerator produced an invalid point");
            ++total_;
            return;
        }
        // rows i = 1..j+1 of step j; prefix sums through step j-1 are frozen
        std::vector<long long> step_vals(static_cast<std::size_t>(j + 1), 0);
        recurse_var(j, 1, kd_, step_vals);
    }

    void recurse_var(int j, int i, long long quota, std::vector<long long>& step_vals) {
        if (i == j + 1) { // last row of this step is forced
            if (try_assign(j, i, quota, step_vals)) {
                descend(j, step_vals);
                unassign(j, i, quota, step_vals);
            }
            return;
        }
        const long long hi = upper_bound(j, i, quota);
        for (long long v = 0; v <= hi; ++v) {
            if (!try_assign(j, i, v, step_vals)) continue;
            recurse_var(j, i + 1, quota - v, step_vals);
            unassign(j, i, v, step_vals);
        }
    }

    long long upper_bound(int j, int i, long long quota) const {
        long long hi = std::min(quota, targets_[static_cast<std::size_t>(i - 1)] -
                                           row_used_[static_cast<std::size_t>(i - 1)]);
        if (i >= 2)
            hi = std::min(hi, prev_prefix_[static_cast<std::size_t>(i - 2)] -
                                  row_used_[static_cast<std::size_t>(i - 1)]);
        return hi;
    }

    bool try_assign(int j, int i, long long v, std::vector<long long>& step_vals) {
        if (v < 0 || v > upper_bound(j, i, v)) {
            // upper_bound with quota=v only checks the row/column caps
            return false;
        }
        row_used_[static_cast<std::size_t>(i - 1)] += v;
        step_vals[static_cast<std::size_t>(i - 1)] = v;
        values_[static_cast<std::size_t>(cs_.var_index(j, i))] = v;
        // row i can still be completed in later steps?
        const long long remaining = targets_[static_cast<std::size_t>(i - 1)] -
                                    row_used_[static_cast<std::size_t>(i - 1)];
        const long long future_steps = cs_.p - 1 - j;
        if (remaining > future_steps * kd_) {
            unassign(j, i, v, step_vals);
            return false;
        }
        return true;
    }

    void unassign(int j, int i, long long v, std::vector<long long>& step_vals) {
        row_used_[static_cast<std::size_t>(i - 1)] -= v;
        step_vals[static_cast<std::size_t>(i - 1)] = 0;
        values_[static_cast<std::size_t>(cs_.var_index(j, i))] = 0;
    }

    void descend(int j, const std::vector<long long>& step_vals) {
        std::vector<long long> saved = prev_prefix_;
        for (std::size_t i = 0; i < step_vals.size(); ++i) prev_prefix_[i] += step_vals[i];
        recurse_step(j + 1);
        prev_prefix_ = std::move(saved);
    }

    const ConstraintSystem& cs_;
    long long kd_ = 0;
    bool infeasible_ = false;
    std::vector<long long> targets_;     // remaining row totals (iv), row 1 net of step 0
    std::vector<long long> row_used_;
    std::vector<long long> prev_prefix_; // sum over steps <= current-1, incl. step 0
    std::vector<long long> values_;
    Int total_ = 0;
};

/// Chain DP over Pieri steps: state = shape after step j, transitions add a
/// horizontal strip of size k inside lambda. Dense table over the box
/// prod (lambda_i + 1).
inline Int kostka_chain_dp(const Partition& lambda, int p, int k) {
    const int len = std::max(lambda.length(), 1);
    std::vector<std::size_t> strides(static_cast<std::size_t>(len));
    std::size_t cells = 1;
    for (int i = len - 1; i >= 0; --i) { // row lengths, innermost stride last
        strides[static_cast<std::size_t>(i)] = cells;
        cells *= static_cast<std::size_t>(lambda.part(i) + 1);
    }

    std::vector<Int> current(cells, 0);
    current[0] = 1;
    std::vector<int> shape(static_cast<std::size_t>(len), 0);

    for (int step = 0; step < p; ++step) {
        std::vector<Int> next(cells, 0);
        // enumerate source shapes rather than cells: recursive sweep
        std::function<void(int, std::size_t)> sweep = [&](int row, std::size_t cell) {
            if (row == len) {
                if (current[cell] == 0) return;
                // add a horizontal strip of size k: row r gains a_r boxes,
                // new_r <= min(lambda_r, old length of row r-1)
                std::function<void(int, int, std::size_t)> place = [&](int r, int left, std::size_t target) {
                    if (r == len) {
                        if (left == 0) next[target] += current[cell];
                        return;
                    }
                    const int cap = std::min(lambda.part(r) - shape[static_cast<std::size_t>(r)],
                                             r == 0 ? left
                                                    : shape[static_cast<std::size_t>(r - 1)] -
                                                          shape[static_cast<std::size_t>(r)]);
                    for (int a = 0; a <= std::min(cap, left); ++a)
                        place(r + 1, left - a, target + strides[static_cast<std::size_t>(r)] *
                                                            static_cast<std::size_t>(a));
                };
                place(0, k, cell);
                return;
            }
            const int hi = std::min(lambda.part(row),
                                    row == 0 ? lambda.part(0) : shape[static_cast<std::size_t>(row - 1)]);
            for (int v = 0; v <= hi; ++v) {
                shape[static_cast<std::size_t>(row)] = v;
                sweep(row + 1, cell + strides[static_cast<std::size_t>(row)] * static_cast<std::size_t>(v));
            }
            shape[static_cast<std::size_t>(row)] = 0;
        };
        sweep(0, 0);
        current = std::move(next);
    }

    std::size_t goal = 0;
    for (int i = 0; i < len; ++i)
        goal += strides[static_cast<std::size_t>(i)] * static_cast<std::size_t>(lambda.part(i));
    return current[goal];
}

} // namespace detail

enum class KostkaMode { brute, chain_dp, polytope };

/// Lattice points of d * P^lambda_{k,p}, i.e. c^{d lambda}_{p, dk}.
inline Int polytope_count(const Partition& lambda, int p, int k, int d) {
    if (d < 0) throw invalid_input("polytope_count: negative dilation");
    const ConstraintSystem cs = ConstraintSystem::build(lambda, p, k).dilated(d);
    detail::PieriPointCounter counter(cs);
    return counter.count();
}

/// The Kostka number K_{lambda,(k^p)} by the requested route. All routes
/// agree; they are kept separate as cross-oracles.
inline Int kostka_count(const Partition& lambda, int p, int k, KostkaMode mode = KostkaMode::chain_dp) {
    if (p < 1 || k < 0) throw invalid_input("kostka_count: need p >= 1, k >= 0");
    if (lambda.size() != p * k) throw invalid_input("kostka_count: |lambda| != p*k");
    switch (mode) {
        case KostkaMode::brute:
            if (lambda.length() > p) return 0;
            return static_cast<long>(enumerate_ssyt(lambda, rectangular_content(p, k)).size());
        case KostkaMode::chain_dp:
            if (lambda.length() > p) return 0;
            return detail::kostka_chain_dp(lambda, p, k);
        case KostkaMode::polytope:
            if (lambda.length() > p) return 0;
            return polytope_count(lambda, p, k, 1);
    }
    throw invalid_input("kostka_count: unknown mode");
}

/// A lattice point of P^lambda_{k,p}: x[j-1][i-1] = boxes added to row i in
/// step j (entries j+1 of the corresponding SSYT).
struct PieriPoint {
    int p = 0;
    int k = 0;
    std::vector<std::vector<int>> x;
};

/// SSYT of content (k^p) -> lattice point. Rejects other contents.
inline PieriPoint ssyt_to_pieri_point(const Tableau& T, int p, int k) {
    if (!T.is_semistandard()) throw invalid_input("ssyt_to_pieri_point: not semistandard");
    if (T.content(p) != rectangular_content(p, k))
        throw invalid_input("ssyt_to_pieri_point: content is not (k^p)");
    PieriPoint pt;
    pt.p = p;
    pt.k = k;
    pt.x.resize(static_cast<std::size_t>(p - 1));
    for (int j = 1; j <= p - 1; ++j) pt.x[static_cast<std::size_t>(j - 1)].assign(static_cast<std::size_t>(j + 1), 0);
    for (int a = 0; a < T.shape().length(); ++a)
        for (int b = 0; b < T.shape().part(a); ++b) {
            const int step = T.entry(a, b) - 1;
            if (step == 0) continue; // the k 1's in row 1
            ++pt.x[static_cast<std::size_t>(step - 1)][static_cast<std::size_t>(a)];
        }
    return pt;
}

/// Lattice point -> SSYT (inverse of the above).
inline Tableau pieri_point_to_ssyt(const PieriPoint& pt) {
    const int p = pt.p;
    std::vector<std::vector<int>> rows(1);
    rows[0].assign(static_cast<std::size_t>(pt.k), 1);
    for (int j = 1; j <= p - 1; ++j)
        for (int i = 1; i <= j + 1; ++i) {
            const int boxes = pt.x[static_cast<std::size_t>(j - 1)][static_cast<std::size_t>(i - 1)];
            if (boxes == 0) continue;
            if (static_cast<int>(rows.size()) < i) rows.resize(static_cast<std::size_t>(i));
            rows[static_cast<std::size_t>(i - 1)].insert(rows[static_cast<std::size_t>(i - 1)].end(),
                                                         static_cast<std::size_t>(boxes), j + 1);
        }
    while (!rows.empty() && rows.back().empty()) rows.pop_back();
    Tableau T = Tableau::from_rows(std::move(rows));
    if (!T.is_semistandard()) throw invalid_input("pieri_point_to_ssyt: point is not in the polytope");
    return T;
}

} // namespace plethysm
