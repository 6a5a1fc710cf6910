#pragma once

#include <utility>
#include <vector>

#include "json.hpp"

#include "plethysm/partition.hpp"

namespace plethysm {

/// Dense polynomial over Q, coeffs[i] multiplying d^i. The zero polynomial
/// is the empty vector and reports degree 0.
using Poly = std::vector<Rat>;

inline void poly_trim(Poly& poly) {
    while (!poly.empty() && poly.back() == 0) poly.pop_back();
}

inline int poly_degree(const Poly& poly) {
    for (int i = static_cast<int>(poly.size()) - 1; i >= 0; --i)
        if (poly[static_cast<std::size_t>(i)] != 0) return i;
    return 0;
}

inline Rat poly_leading(const Poly& poly) {
    for (int i = static_cast<int>(poly.size()) - 1; i >= 0; --i)
        if (poly[static_cast<std::size_t>(i)] != 0) return poly[static_cast<std::size_t>(i)];
    return 0;
}

inline Rat poly_eval(const Poly& poly, long d) {
    Rat acc = 0;
    for (std::size_t i = poly.size(); i-- > 0;) acc = acc * d + poly[i];
    return acc;
}

/// Exact Newton interpolation through (d_i, v_i) with distinct d_i.
inline Poly interpolate(const std::vector<std::pair<long, Rat>>& points) {
    const std::size_t n = points.size();
    std::vector<Rat> dd(n); // divided differences, updated in place
    for (std::size_t i = 0; i < n; ++i) dd[i] = points[i].second;
    for (std::size_t level = 1; level < n; ++level)
        for (std::size_t i = n - 1; i >= level; --i)
            dd[i] = (dd[i] - dd[i - 1]) / Rat(points[i].first - points[i - level].first);

    Poly result;
    Poly basis{1}; // prod_{j<i} (x - d_j)
    for (std::size_t i = 0; i < n; ++i) {
        if (result.size() < basis.size()) result.resize(basis.size(), 0);
        for (std::size_t j = 0; j < basis.size(); ++j) result[j] += dd[i] * basis[j];
        // basis *= (x - d_i)
        basis.insert(basis.begin(), 0);
        for (std::size_t j = 0; j + 1 < basis.size(); ++j)
            basis[j] -= Rat(points[i].first) * basis[j + 1];
    }
    poly_trim(result);
    return result;
}

/**
 * q(d) = residue_polys[d mod period](d). Fitted instances reproduce every
 * sample they were built from exactly; "degree" is the maximum over residues.
 */
struct QuasiPolynomial {
    int period = 1;
    std::vector<Poly> residue_polys;

    Rat evaluate(long d) const {
        if (d < 0) throw invalid_input("QuasiPolynomial::evaluate: negative argument");
        return poly_eval(residue_polys[static_cast<std::size_t>(d % period)], d);
    }

    int degree() const {
        int deg = 0;
        for (const Poly& poly : residue_polys) deg = std::max(deg, poly_degree(poly));
        return deg;
    }

    nlohmann::json to_json() const {
        nlohmann::json residues = nlohmann::json::array();
        for (const Poly& poly : residue_polys) {
            nlohmann::json coeffs = nlohmann::json::array();
            for (const Rat& c : poly) coeffs.push_back(rat_to_string(c));
            residues.push_back(std::move(coeffs));
        }
        return {{"period", period}, {"residues", std::move(residues)}};
    }

    static QuasiPolynomial from_json(const nlohmann::json& j) {
        QuasiPolynomial q;
        q.period = j.at("period").get<int>();
        for (const auto& coeffs : j.at("residues")) {
            Poly poly;
            for (const auto& c : coeffs) poly.push_back(rat_from_string(c.get<std::string>()));
            q.residue_polys.push_back(std::move(poly));
        }
        if (q.period < 1 || static_cast<int>(q.residue_polys.size()) != q.period)
            throw invalid_input("QuasiPolynomial: malformed JSON");
        return q;
    }

    bool operator==(const QuasiPolynomial&) const = default;
};

struct LeadingTermReport {
    int degree = 0;
    std::vector<Rat> per_residue_leading;
    bool constant_leading = false;
};

/// Shared-degree / shared-top-coefficient report across residue classes.
inline LeadingTermReport leading_term_report(const QuasiPolynomial& q) {
    LeadingTermReport report;
    report.degree = q.degree();
    report.constant_leading = true;
    for (const Poly& poly : q.residue_polys) {
        report.per_residue_leading.push_back(poly_leading(poly));
        if (poly_degree(poly) != report.degree || poly_leading(poly) != report.per_residue_leading.front())
            report.constant_leading = false;
    }
    return report;
}

class FitError : public std::runtime_error {
public:
    enum class Kind { insufficient_samples, no_fit_within_bounds };

    FitError(Kind kind, int max_period, int max_degree, const std::string& detail)
        : std::runtime_error(std::string(kind == Kind::insufficient_samples
                                             ? "insufficient samples"
                                             : "no fit within bounds") +
                             " (tried periods <= " + std::to_string(max_period) +
                             ", degrees <= " + std::to_string(max_degree) + "): " + detail),
          kind(kind) {}

    Kind kind;
};

/**
 * Smallest-period exact fit of a sequence sampled at consecutive d. For each
 * candidate period the last ~20% of every residue class is held out; a fit
 * is accepted only if the interpolant through the kept points has degree
 * <= max_degree and predicts every held-out point exactly. drop_prefix skips
 * leading samples for sequences with irregular small-d behavior.
 */
inline QuasiPolynomial fit_quasipolynomial(const std::vector<std::pair<long, Rat>>& all_samples,
                                           int max_degree, int max_period, int drop_prefix = 0) {
    if (max_degree < 0 || max_period < 1)
        throw invalid_input("fit_quasipolynomial: bad bounds");
    std::vector<std::pair<long, Rat>> samples(
        all_samples.begin() + std::min<std::ptrdiff_t>(drop_prefix,
                                                       static_cast<std::ptrdiff_t>(all_samples.size())),
        all_samples.end());
    for (std::size_t i = 1; i < samples.size(); ++i)
        if (samples[i].first != samples[i - 1].first + 1)
            throw invalid_input("fit_quasipolynomial: samples must be consecutive in d");

    bool saw_enough_samples = false;
    for (int period = 1; period <= max_period; ++period) {
        std::vector<Poly> polys(static_cast<std::size_t>(period));
        bool ok = true;
        bool enough = true;
        for (int r = 0; r < period && ok; ++r) {
            std::vector<std::pair<long, Rat>> cls;
            for (const auto& s : samples)
                if (s.first % period == r) cls.push_back(s);
            if (cls.size() < 2) {
                ok = false;
                enough = false;
                break;
            }
            const std::size_t hold = std::max<std::size_t>(1, (cls.size() + 4) / 5);
            const std::size_t kept = cls.size() - hold;
            if (kept == 0) {
                ok = false;
                enough = false;
                break;
            }
            Poly poly = interpolate({cls.begin(), cls.begin() + static_cast<std::ptrdiff_t>(kept)});
            if (poly_degree(poly) > max_degree) {
                ok = false;
                break;
            }
            for (std::size_t i = kept; i < cls.size(); ++i)
                if (poly_eval(poly, cls[i].first) != cls[i].second) {
                    ok = false;
                    break;
                }
            polys[static_cast<std::size_t>(r)] = std::move(poly);
        }
        if (enough) saw_enough_samples = true;
        if (!ok) continue;

        QuasiPolynomial q{period, std::move(polys)};
        bool exact = true;
        for (const auto& [d, v] : samples)
            if (q.evaluate(d) != v) {
                exact = false;
                break;
            }
        if (exact) return q;
    }

    throw FitError(saw_enough_samples ? FitError::Kind::no_fit_within_bounds
                                      : FitError::Kind::insufficient_samples,
                   max_period, max_degree,
                   std::to_string(samples.size()) + " samples after prefix drop");
}

/// Thm-style leading-term comparison: degrees equal and
/// lead(a) = dim(V_mu)/p! * lead(c), all exact.
inline bool check_leading_ratio(const QuasiPolynomial& a_fit, const QuasiPolynomial& c_fit,
                                const Partition& mu) {
    const LeadingTermReport a = leading_term_report(a_fit);
    const LeadingTermReport c = leading_term_report(c_fit);
    if (!a.constant_leading || !c.constant_leading)
        throw invalid_input("check_leading_ratio: fits must have constant leading terms");
    if (a.degree != c.degree) return false;
    const Rat expected =
        ratio(hook_dimension(mu), factorial(mu.size())) * c.per_residue_leading.front();
    return a.per_residue_leading.front() == expected;
}

} // namespace plethysm
