#pragma once

#include <map>

#include "plethysm/character.hpp"
#include "plethysm/partition.hpp"

namespace plethysm {

/**
 * A homogeneous symmetric function written in the power-sum basis:
 * a sparse map from partitions rho (of the common degree) to rational
 * coefficients of p_rho. Multiplication is key concatenation, which is
 * why this is the internal basis. Zero coefficients are never stored.
 */
class PowerSumElement {
public:
    PowerSumElement() = default;
    explicit PowerSumElement(int degree) : degree_(degree) {}

    static PowerSumElement constant(const Rat& value) {
        PowerSumElement f(0);
        f.add_term(Partition(), value);
        return f;
    }

    static PowerSumElement one() { return constant(1); }

    /// p_rho with coefficient 1.
    static PowerSumElement power_sum(const Partition& rho) {
        PowerSumElement f(rho.size());
        f.add_term(rho, 1);
        return f;
    }

    int degree() const { return degree_; }
    bool is_zero() const { return terms_.empty(); }
    const std::map<Partition, Rat>& terms() const { return terms_; }

    Rat coefficient(const Partition& rho) const {
        auto it = terms_.find(rho);
        return it == terms_.end() ? Rat(0) : it->second;
    }

    void add_term(const Partition& rho, const Rat& coeff) {
        if (coeff == 0) return;
        if (rho.size() != degree_) throw invalid_input("power-sum term of wrong degree");
        Rat& slot = terms_[rho];
        slot += coeff;
        if (slot == 0) terms_.erase(rho);
    }

    PowerSumElement& operator+=(const PowerSumElement& other) {
        if (other.is_zero()) return *this;
        if (is_zero()) degree_ = other.degree_;
        if (degree_ != other.degree_) throw invalid_input("adding inhomogeneous elements");
        for (const auto& [rho, coeff] : other.terms_) add_term(rho, coeff);
        return *this;
    }

    PowerSumElement operator+(const PowerSumElement& other) const {
        PowerSumElement out = *this;
        out += other;
        return out;
    }

    PowerSumElement operator-() const {
        PowerSumElement out = *this;
        for (auto& [rho, coeff] : out.terms_) coeff = -coeff;
        return out;
    }

    PowerSumElement operator-(const PowerSumElement& other) const { return *this + (-other); }

    PowerSumElement operator*(const Rat& scalar) const {
        PowerSumElement out(degree_);
        if (scalar == 0) return out;
        out.terms_ = terms_;
        for (auto& [rho, coeff] : out.terms_) coeff *= scalar;
        return out;
    }

    PowerSumElement operator*(const PowerSumElement& other) const {
        PowerSumElement out(degree_ + other.degree_);
        for (const auto& [left, lc] : terms_) {
            for (const auto& [right, rc] : other.terms_) {
                std::vector<int> parts = left.parts();
                parts.insert(parts.end(), right.parts().begin(), right.parts().end());
                std::sort(parts.begin(), parts.end(), std::greater<>());
                out.add_term(Partition(std::move(parts)), lc * rc);
            }
        }
        return out;
    }

    /// Every key partition scaled by r (p_rho -> p_{r*rho}), coefficients kept.
    PowerSumElement keys_scaled(int r) const {
        PowerSumElement out(degree_ * r);
        for (const auto& [rho, coeff] : terms_) out.add_term(rho.scaled(r), coeff);
        return out;
    }

    bool operator==(const PowerSumElement& other) const {
        if (is_zero() && other.is_zero()) return true;
        return degree_ == other.degree_ && terms_ == other.terms_;
    }

private:
    std::map<Partition, Rat> terms_;
    int degree_ = 0;
};

inline PowerSumElement operator*(const Rat& scalar, const PowerSumElement& f) { return f * scalar; }

/// The involution omega: p_r -> (-1)^{r-1} p_r, extended multiplicatively;
/// sends h_r to e_r and s_lambda to s_{lambda^T}.
inline PowerSumElement omega(const PowerSumElement& f) {
    PowerSumElement out(f.degree());
    for (const auto& [rho, coeff] : f.terms())
        out.add_term(rho, sign_of_class(rho) == 1 ? coeff : -coeff);
    return out;
}

/**
 * Plethysm f[g], determined by p_r[g] = g(x_1^r, x_2^r, ...): each key of g
 * has its parts scaled by r, and monomials of f substitute multiplicatively.
 * g must be homogeneous; for deg f = m, deg g = n the result has degree mn.
 */
inline PowerSumElement plethysm_compose(const PowerSumElement& f, const PowerSumElement& g) {
    if (g.is_zero()) {
        // p_r[0] = 0, so only a constant f survives.
        return f.degree() == 0 ? f : PowerSumElement(0);
    }
    PowerSumElement out(f.degree() * g.degree());
    for (const auto& [rho, coeff] : f.terms()) {
        PowerSumElement product = PowerSumElement::constant(coeff);
        for (int part : rho.parts()) product = product * g.keys_scaled(part);
        out += product;
    }
    return out;
}

enum class BaseKind { h, e, s };

namespace detail {

inline PowerSumElement complete_or_elementary(BaseKind kind, int m) {
    // Newton: m h_m = sum_r p_r h_{m-r};  m e_m = sum_r (-1)^{r-1} p_r e_{m-r}.
    std::vector<PowerSumElement> table;
    table.push_back(PowerSumElement::one());
    for (int degree = 1; degree <= m; ++degree) {
        PowerSumElement acc(degree);
        for (int r = 1; r <= degree; ++r) {
            PowerSumElement term =
                PowerSumElement::power_sum(Partition{r}) * table[static_cast<std::size_t>(degree - r)];
            if (kind == BaseKind::e && r % 2 == 0) term = -term;
            acc += term;
        }
        table.push_back(acc * ratio(1, degree));
    }
    return table.back();
}

} // namespace detail

/// h_m, e_m, or s_{(m)} expanded in the power-sum basis.
inline PowerSumElement base_to_power(BaseKind kind, int m) {
    if (m < 0) throw invalid_input("base_to_power: negative index");
    if (m == 0) return PowerSumElement::one();
    if (kind == BaseKind::s) kind = BaseKind::h; // s_(m) = h_m
    return detail::complete_or_elementary(kind, m);
}

/// h_lambda / e_lambda as products; s_lambda via the character bridge
/// s_lambda = sum_rho chi_lambda(rho)/z_rho p_rho.
inline PowerSumElement base_to_power(BaseKind kind, const Partition& lambda) {
    if (kind == BaseKind::s) {
        if (lambda.empty()) return PowerSumElement::one();
        PowerSumElement out(lambda.size());
        for (const Partition& rho : partitions_of(lambda.size()))
            out.add_term(rho, ratio(character_value(lambda, rho), centralizer_order(rho)));
        return out;
    }
    PowerSumElement out = PowerSumElement::one();
    for (int part : lambda.parts()) out = out * base_to_power(kind, part);
    return out;
}

} // namespace plethysm
