#pragma once

#include <map>
#include <numeric>
#include <string>
#include <vector>

#include "plethysm/permutation.hpp"
#include "plethysm/rational.hpp"

namespace plethysm {

/**
 * A vector in S^{k_1}(V) (x) ... (x) S^{k_p}(V), dim V = n, stored as a
 * sparse map from flattened exponent keys (p blocks of n entries, block f
 * summing to k_f) to rational coefficients. Zero coefficients are never
 * stored. For the rectangular case all k_f equal k.
 */
class TensorVector {
public:
    TensorVector() = default;

    TensorVector(int n, std::vector<int> factor_degrees)
        : n_(n), degrees_(std::move(factor_degrees)) {}

    TensorVector(int n, int p, int k) : n_(n), degrees_(static_cast<std::size_t>(p), k) {}

    int variables() const { return n_; }
    int factors() const { return static_cast<int>(degrees_.size()); }
    const std::vector<int>& factor_degrees() const { return degrees_; }

    bool uniform_degree() const {
        return std::all_of(degrees_.begin(), degrees_.end(),
                           [&](int k) { return k == degrees_.front(); });
    }

    bool is_zero() const { return terms_.empty(); }
    const std::map<std::vector<int>, Rat>& terms() const { return terms_; }

    Rat coefficient(const std::vector<int>& key) const {
        auto it = terms_.find(key);
        return it == terms_.end() ? Rat(0) : it->second;
    }

    void add_term(const std::vector<int>& key, const Rat& coeff) {
        if (coeff == 0) return;
        validate_key(key);
        Rat& slot = terms_[key];
        slot += coeff;
        if (slot == 0) terms_.erase(key);
    }

    TensorVector& operator+=(const TensorVector& other) {
        check_compatible(other);
        for (const auto& [key, coeff] : other.terms_) add_term(key, coeff);
        return *this;
    }

    TensorVector operator-() const {
        TensorVector out = *this;
        for (auto& [key, coeff] : out.terms_) coeff = -coeff;
        return out;
    }

    TensorVector operator-(const TensorVector& other) const {
        TensorVector out = *this;
        out += -other;
        return out;
    }

    TensorVector operator*(const Rat& scalar) const {
        TensorVector out(n_, degrees_);
        if (scalar == 0) return out;
        out.terms_ = terms_;
        for (auto& [key, coeff] : out.terms_) coeff *= scalar;
        return out;
    }

    bool operator==(const TensorVector& other) const {
        return n_ == other.n_ && degrees_ == other.degrees_ && terms_ == other.terms_;
    }

    /// Right action: (x_{a_1} (x) ... (x) x_{a_p}) . sigma puts block
    /// sigma(i) of the source into slot i, so (v.sigma).tau = v.(sigma tau).
    TensorVector acted_by(const Permutation& sigma) const {
        const int p = factors();
        if (static_cast<int>(sigma.size()) != p)
            throw invalid_input("acted_by: permutation degree mismatch");
        std::vector<int> new_degrees(static_cast<std::size_t>(p));
        for (int i = 0; i < p; ++i)
            new_degrees[static_cast<std::size_t>(i)] =
                degrees_[static_cast<std::size_t>(sigma[static_cast<std::size_t>(i)])];
        TensorVector out(n_, std::move(new_degrees));
        std::vector<int> key(static_cast<std::size_t>(p * n_));
        for (const auto& [src, coeff] : terms_) {
            for (int i = 0; i < p; ++i)
                std::copy_n(src.begin() + sigma[static_cast<std::size_t>(i)] * n_, n_,
                            key.begin() + i * n_);
            out.add_term(key, coeff);
        }
        return out;
    }

    /// Raising operator E_{i,i+1} = sum over factors of x_i d/dx_{i+1}
    /// (1 <= i <= n-1); linear, Leibniz within each factor's monomial.
    TensorVector raised(int i) const {
        if (i < 1 || i >= n_) throw invalid_input("raised: row index out of range");
        TensorVector out(n_, degrees_);
        for (const auto& [key, coeff] : terms_) {
            for (int f = 0; f < factors(); ++f) {
                const int lower = key[static_cast<std::size_t>(f * n_ + i)];
                if (lower == 0) continue;
                std::vector<int> moved = key;
                --moved[static_cast<std::size_t>(f * n_ + i)];
                ++moved[static_cast<std::size_t>(f * n_ + i - 1)];
                out.add_term(moved, coeff * lower);
            }
        }
        return out;
    }

    /// Total exponent of each variable across factors; constant over keys
    /// exactly when the vector is weight-homogeneous.
    std::vector<int> weight() const {
        if (terms_.empty()) return std::vector<int>(static_cast<std::size_t>(n_), 0);
        return key_weight(terms_.begin()->first);
    }

    bool is_weight_homogeneous() const {
        if (terms_.empty()) return true;
        const std::vector<int> w = key_weight(terms_.begin()->first);
        for (const auto& [key, coeff] : terms_)
            if (key_weight(key) != w) return false;
        return true;
    }

    /// Golden-file format: one term per line, "+num/den : (a1 | a2 | ...)",
    /// exponent vectors comma-separated, lines sorted by key.
    std::string dump() const {
        std::string out;
        for (const auto& [key, coeff] : terms_) {
            out += (coeff > 0 ? "+" : "-") + rat_to_string(abs(coeff)) + " : (";
            for (int f = 0; f < factors(); ++f) {
                if (f) out += " | ";
                for (int v = 0; v < n_; ++v) {
                    if (v) out += ',';
                    out += std::to_string(key[static_cast<std::size_t>(f * n_ + v)]);
                }
            }
            out += ")\n";
        }
        return out;
    }

private:
    void validate_key(const std::vector<int>& key) const {
        if (static_cast<int>(key.size()) != factors() * n_)
            throw invalid_input("tensor key has wrong length");
        for (int f = 0; f < factors(); ++f) {
            int sum = 0;
            for (int v = 0; v < n_; ++v) {
                const int e = key[static_cast<std::size_t>(f * n_ + v)];
                if (e < 0) throw invalid_input("tensor key has negative exponent");
                sum += e;
            }
            if (sum != degrees_[static_cast<std::size_t>(f)])
                throw invalid_input("tensor key block has wrong degree");
        }
    }

    void check_compatible(const TensorVector& other) const {
        if (n_ != other.n_ || degrees_ != other.degrees_)
            throw invalid_input("tensor vectors live in different spaces");
    }

    std::vector<int> key_weight(const std::vector<int>& key) const {
        std::vector<int> w(static_cast<std::size_t>(n_), 0);
        for (int f = 0; f < factors(); ++f)
            for (int v = 0; v < n_; ++v)
                w[static_cast<std::size_t>(v)] += key[static_cast<std::size_t>(f * n_ + v)];
        return w;
    }

    int n_ = 0;
    std::vector<int> degrees_;
    std::map<std::vector<int>, Rat> terms_;
};

} // namespace plethysm
