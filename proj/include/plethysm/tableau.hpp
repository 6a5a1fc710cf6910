#pragma once

#include <string>
#include <vector>

#include "plethysm/partition.hpp"

namespace plethysm {

/**
 * A filling of a Young diagram with entries in 1..p. Used both as a plain
 * filled tableau and, after the semistandard check, as an SSYT. Ordering
 * and enumeration are by the row-major reading word, so fixtures are stable.
 */
class Tableau {
public:
    Tableau() = default;

    Tableau(Partition shape, std::vector<std::vector<int>> rows)
        : shape_(std::move(shape)), rows_(std::move(rows)) {
        if (static_cast<int>(rows_.size()) != shape_.length())
            throw invalid_input("tableau rows do not match shape");
        for (int a = 0; a < shape_.length(); ++a) {
            if (static_cast<int>(rows_[static_cast<std::size_t>(a)].size()) != shape_.part(a))
                throw invalid_input("tableau row length does not match shape");
            for (int e : rows_[static_cast<std::size_t>(a)])
                if (e < 1) throw invalid_input("tableau entries must be >= 1");
        }
    }

    static Tableau from_rows(std::vector<std::vector<int>> rows) {
        std::vector<int> shape;
        shape.reserve(rows.size());
        for (const auto& row : rows) shape.push_back(static_cast<int>(row.size()));
        return Tableau(Partition(std::move(shape)), std::move(rows));
    }

    const Partition& shape() const { return shape_; }
    const std::vector<std::vector<int>>& rows() const { return rows_; }

    /// 0-indexed row a, column b.
    int entry(int a, int b) const {
        return rows_[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)];
    }

    int max_entry() const {
        int m = 0;
        for (const auto& row : rows_)
            for (int e : row) m = std::max(m, e);
        return m;
    }

    /// Counts of entries 1..p; p defaults to the largest entry present.
    std::vector<int> content(int p = -1) const {
        if (p < 0) p = max_entry();
        std::vector<int> counts(static_cast<std::size_t>(p), 0);
        for (const auto& row : rows_)
            for (int e : row) {
                if (e > p) throw invalid_input("tableau entry exceeds requested content length");
                ++counts[static_cast<std::size_t>(e - 1)];
            }
        return counts;
    }

    bool is_semistandard() const {
        for (int a = 0; a < shape_.length(); ++a)
            for (int b = 0; b < shape_.part(a); ++b) {
                if (b + 1 < shape_.part(a) && entry(a, b) > entry(a, b + 1)) return false;
                if (a + 1 < shape_.length() && b < shape_.part(a + 1) &&
                    entry(a, b) >= entry(a + 1, b))
                    return false;
            }
        return true;
    }

    /// Row-major concatenation of the rows; the enumeration/order key.
    std::vector<int> row_word() const {
        std::vector<int> word;
        for (const auto& row : rows_) word.insert(word.end(), row.begin(), row.end());
        return word;
    }

    /// "1123/23" style, rows separated by '/'.
    std::string to_string() const {
        std::string out;
        for (std::size_t a = 0; a < rows_.size(); ++a) {
            if (a) out += '/';
            for (std::size_t b = 0; b < rows_[a].size(); ++b) {
                if (b) out += ',';
                out += std::to_string(rows_[a][b]);
            }
        }
        return out;
    }

    bool operator==(const Tableau& other) const = default;

private:
    Partition shape_;
    std::vector<std::vector<int>> rows_;
};

/// SSYT is a Tableau whose semistandard invariant has been established.
using SSYT = Tableau;

namespace detail {

inline void fill_ssyt(const Partition& shape, std::vector<int>& remaining,
                      std::vector<std::vector<int>>& rows, int a, int b,
                      std::vector<Tableau>& out) {
    if (a == shape.length()) {
        out.push_back(Tableau(shape, rows));
        return;
    }
    const int next_a = (b + 1 < shape.part(a)) ? a : a + 1;
    const int next_b = (b + 1 < shape.part(a)) ? b + 1 : 0;
    const int min_left = (b > 0) ? rows[static_cast<std::size_t>(a)][static_cast<std::size_t>(b - 1)] : 1;
    const int min_above = (a > 0) ? rows[static_cast<std::size_t>(a - 1)][static_cast<std::size_t>(b)] + 1 : 1;
    for (int e = std::max(min_left, min_above); e <= static_cast<int>(remaining.size()); ++e) {
        if (remaining[static_cast<std::size_t>(e - 1)] == 0) continue;
        --remaining[static_cast<std::size_t>(e - 1)];
        rows[static_cast<std::size_t>(a)].push_back(e);
        fill_ssyt(shape, remaining, rows, next_a, next_b, out);
        rows[static_cast<std::size_t>(a)].pop_back();
        ++remaining[static_cast<std::size_t>(e - 1)];
    }
}

} // namespace detail

/// All SSYTs of the given shape and content, in row-word lexicographic order.
inline std::vector<Tableau> enumerate_ssyt(const Partition& shape, const std::vector<int>& content) {
    int total = 0;
    for (int c : content) {
        if (c < 0) throw invalid_input("enumerate_ssyt: negative content entry");
        total += c;
    }
    if (total != shape.size()) throw invalid_input("enumerate_ssyt: content does not fill the shape");
    std::vector<Tableau> out;
    std::vector<int> remaining = content;
    std::vector<std::vector<int>> rows(static_cast<std::size_t>(shape.length()));
    detail::fill_ssyt(shape, remaining, rows, 0, 0, out);
    return out;
}

inline std::vector<int> rectangular_content(int p, int k) {
    return std::vector<int>(static_cast<std::size_t>(p), k);
}

/**
 * A constructive SSYT of shape lambda |- pk (l(lambda) <= p) with content
 * (k^p): greedily cross out the rightmost lambda_j - lambda_{j+1} boxes of
 * every row below the last row of length >= k (plus the overhang of that
 * row), fill recursively with p-1 letters, and write p into the crossed
 * boxes. Polynomial time, no search.
 */
inline Tableau witness_ssyt(const Partition& lambda, int p, int k) {
    if (p < 0 || k < 0) throw invalid_input("witness_ssyt: p, k must be nonnegative");
    if (lambda.size() != p * k) throw invalid_input("witness_ssyt: |lambda| != p*k");
    if (lambda.length() > p) throw invalid_input("witness_ssyt: l(lambda) > p");
    if (lambda.empty()) return Tableau();
    if (p == 1) return Tableau(lambda, {std::vector<int>(static_cast<std::size_t>(k), 1)});

    const int len = lambda.length();
    int cut = 0; // 0-indexed last row with lambda_i >= k
    while (cut + 1 < len && lambda.part(cut + 1) >= k) ++cut;

    std::vector<int> reduced;
    for (int i = 0; i < cut; ++i) reduced.push_back(lambda.part(i));
    reduced.push_back(lambda.part(cut) + lambda.part(cut + 1) - k);
    for (int i = cut + 1; i + 1 < len; ++i) reduced.push_back(lambda.part(i + 1));

    const Tableau sub = witness_ssyt(Partition(std::move(reduced)), p - 1, k);

    std::vector<std::vector<int>> rows(static_cast<std::size_t>(len));
    for (int i = 0; i < len; ++i) {
        std::vector<int>& row = rows[static_cast<std::size_t>(i)];
        if (i < sub.shape().length()) row = sub.rows()[static_cast<std::size_t>(i)];
        row.resize(static_cast<std::size_t>(lambda.part(i)), p);
    }
    return Tableau(lambda, std::move(rows));
}

/// The reading word j_T: entries right to left, bottom to top.
inline std::vector<int> reading_word(const Tableau& T) {
    std::vector<int> word;
    for (int a = T.shape().length() - 1; a >= 0; --a)
        for (int b = T.shape().part(a) - 1; b >= 0; --b)
            word.push_back(T.entry(a, b));
    return word;
}

} // namespace plethysm
