#pragma once

#include <gmpxx.h>

#include <string>

#include "plethysm/errors.hpp"

namespace plethysm {

using Int = mpz_class;
using Rat = mpq_class;

/// num/den with canonicalization (mpq_class constructors do not reduce).
inline Rat ratio(const Int& num, const Int& den) {
    if (den == 0) throw invalid_input("ratio: zero denominator");
    Rat q(num, den);
    q.canonicalize();
    return q;
}

inline Int factorial(long n) {
    if (n < 0) throw invalid_input("factorial: negative argument");
    Int r;
    mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
    return r;
}

inline Int binomial(long n, long k) {
    if (k < 0 || k > n) return 0;
    Int r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

inline bool is_integer(const Rat& q) { return q.get_den() == 1; }

/// Exact conversion; throws if q has a nontrivial denominator.
inline Int to_integer(const Rat& q) {
    if (!is_integer(q)) throw consistency_error("expected integer, got " + q.get_str());
    return q.get_num();
}

inline Int floor_div(const Int& a, const Int& b) {
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

/// "5", "-5" or "5/3" (canonical, no "/1").
inline std::string rat_to_string(const Rat& q) {
    if (is_integer(q)) return q.get_num().get_str();
    return q.get_str();
}

inline Rat rat_from_string(const std::string& s) {
    Rat q;
    if (q.set_str(s, 10) != 0) throw invalid_input("bad rational literal: '" + s + "'");
    q.canonicalize();
    return q;
}

} // namespace plethysm
