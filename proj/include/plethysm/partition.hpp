#pragma once

#include <algorithm>
#include <compare>
#include <initializer_list>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "plethysm/errors.hpp"
#include "plethysm/rational.hpp"

namespace plethysm {

/**
 * Integer partition: weakly decreasing positive parts, stored without
 * trailing zeros so that equal partitions compare equal. The empty
 * partition is the unique partition of 0.
 *
 * Parts fit in machine words; everything in this library that can grow
 * (hook products, centralizer orders, coefficients) is arbitrary precision.
 */
class Partition {
public:
    Partition() = default;

    Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

    explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
        while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            if (parts_[i] <= 0) throw invalid_input("partition parts must be positive");
            if (i + 1 < parts_.size() && parts_[i] < parts_[i + 1])
                throw invalid_input("partition parts must be weakly decreasing");
        }
    }

    /// Comma-separated parts; the empty string denotes the empty partition.
    static Partition parse(const std::string& text) {
        std::vector<int> parts;
        std::string token;
        std::istringstream in(text);
        while (std::getline(in, token, ',')) {
            if (token.empty()) throw invalid_input("bad partition literal: '" + text + "'");
            parts.push_back(std::stoi(token));
        }
        return Partition(std::move(parts));
    }

    int size() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }
    int length() const { return static_cast<int>(parts_.size()); }
    bool empty() const { return parts_.empty(); }

    /// 0-indexed part, 0 beyond the last row.
    int part(int i) const {
        return (i >= 0 && i < length()) ? parts_[static_cast<std::size_t>(i)] : 0;
    }

    const std::vector<int>& parts() const { return parts_; }

    Partition conjugate() const {
        std::vector<int> cols;
        if (!parts_.empty()) {
            cols.resize(static_cast<std::size_t>(parts_[0]));
            for (int j = 0; j < parts_[0]; ++j)
                cols[static_cast<std::size_t>(j)] =
                    static_cast<int>(std::count_if(parts_.begin(), parts_.end(),
                                                   [j](int part) { return part > j; }));
        }
        return Partition(std::move(cols));
    }

    Partition scaled(int d) const {
        if (d < 0) throw invalid_input("scale factor must be nonnegative");
        if (d == 0) return Partition();
        std::vector<int> parts = parts_;
        for (int& part : parts) part *= d;
        return Partition(std::move(parts));
    }

    std::string to_string() const {
        std::string out;
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            if (i) out += ',';
            out += std::to_string(parts_[i]);
        }
        return out;
    }

    auto operator<=>(const Partition&) const = default;

private:
    std::vector<int> parts_;
};

/// Number of standard Young tableaux of shape mu (= dim of the Specht
/// module V_mu), by the hook length formula. The empty shape counts 1.
inline Int hook_dimension(const Partition& mu) {
    if (mu.empty()) return 1;
    const Partition conj = mu.conjugate();
    Int hooks = 1;
    for (int a = 0; a < mu.length(); ++a)
        for (int b = 0; b < mu.part(a); ++b)
            hooks *= (mu.part(a) - b) + (conj.part(b) - a) - 1;
    return factorial(mu.size()) / hooks;
}

/// z_rho = prod_i i^{m_i} m_i!, the order of the centralizer of a
/// permutation of cycle type rho.
inline Int centralizer_order(const Partition& rho) {
    Int z = 1;
    int run_value = 0;
    long run_length = 0;
    for (int i = 0; i <= rho.length(); ++i) {
        const int value = rho.part(i);
        if (value == run_value) {
            ++run_length;
            continue;
        }
        if (run_value > 0) {
            Int power;
            mpz_ui_pow_ui(power.get_mpz_t(), static_cast<unsigned long>(run_value),
                          static_cast<unsigned long>(run_length));
            z *= power * factorial(run_length);
        }
        run_value = value;
        run_length = 1;
    }
    return z;
}

/// sign of any permutation of cycle type rho: (-1)^{|rho| - l(rho)}.
inline int sign_of_class(const Partition& rho) {
    return (rho.size() - rho.length()) % 2 == 0 ? 1 : -1;
}

namespace detail {
inline void emit_partitions(int remaining, int max_part, int max_length,
                            std::vector<int>& prefix, std::vector<Partition>& out) {
    if (remaining == 0) {
        out.push_back(Partition(prefix));
        return;
    }
    if (max_length == 0) return;
    for (int part = std::min(remaining, max_part); part >= 1; --part) {
        prefix.push_back(part);
        emit_partitions(remaining - part, part, max_length - 1, prefix, out);
        prefix.pop_back();
    }
}
} // namespace detail

/// All partitions of n in reverse-lexicographic order, (n) first and
/// (1^n) last. max_length < 0 means unbounded.
inline std::vector<Partition> partitions_of(int n, int max_length = -1) {
    if (n < 0) throw invalid_input("partitions_of: negative n");
    std::vector<Partition> out;
    std::vector<int> prefix;
    detail::emit_partitions(n, n, max_length < 0 ? n : max_length, prefix, out);
    return out;
}

enum class ExceptionalTag {
    FullRow,            // (pk)
    Rectangle,          // (k^p)
    NearRectangleEqual, // (a^{p-1})
    RowOverRectangle,   // (b, c^{p-1}), b > c
    RectangleOverRow,   // (b^{p-1}, c), b > c
    NonExceptional,
};

inline const char* to_string(ExceptionalTag tag) {
    switch (tag) {
        case ExceptionalTag::FullRow: return "FullRow";
        case ExceptionalTag::Rectangle: return "Rectangle";
        case ExceptionalTag::NearRectangleEqual: return "NearRectangleEqual";
        case ExceptionalTag::RowOverRectangle: return "RowOverRectangle";
        case ExceptionalTag::RectangleOverRow: return "RectangleOverRow";
        case ExceptionalTag::NonExceptional: return "NonExceptional";
    }
    return "?";
}

struct ExceptionalClass {
    ExceptionalTag tag = ExceptionalTag::NonExceptional;
    int a = 0; // NearRectangleEqual
    int b = 0; // the two mixed forms
    int c = 0;

    bool exceptional() const { return tag != ExceptionalTag::NonExceptional; }
};

/**
 * Tags lambda |- pk, l(lambda) <= p, as one of the five shapes admitting a
 * unique SSYT of content (k^p), or NonExceptional. Overlapping matches
 * resolve in the listed priority order; the mixed forms require b > c >= 1.
 */
inline ExceptionalClass classify_exceptional(const Partition& lambda, int p, int k) {
    if (p < 1 || k < 1) throw invalid_input("classify_exceptional: p, k must be positive");
    if (lambda.size() != p * k) throw invalid_input("classify_exceptional: |lambda| != p*k");
    if (lambda.length() > p) throw invalid_input("classify_exceptional: l(lambda) > p");

    const int len = lambda.length();
    const bool uniform = len > 0 && lambda.part(0) == lambda.part(len - 1);

    if (len == 1) return {ExceptionalTag::FullRow};
    if (len == p && uniform) return {ExceptionalTag::Rectangle};
    if (len == p - 1 && uniform) return {ExceptionalTag::NearRectangleEqual, lambda.part(0)};
    if (len == p && lambda.part(1) == lambda.part(len - 1) && lambda.part(0) > lambda.part(1))
        return {ExceptionalTag::RowOverRectangle, 0, lambda.part(0), lambda.part(1)};
    if (len == p && lambda.part(0) == lambda.part(len - 2) && lambda.part(len - 1) < lambda.part(0))
        return {ExceptionalTag::RectangleOverRow, 0, lambda.part(0), lambda.part(len - 1)};
    return {ExceptionalTag::NonExceptional};
}

} // namespace plethysm
