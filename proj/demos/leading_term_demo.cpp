// Computes the a- and c-sequences for lambda = (3,2,1), p = 3, k = 2, fits
// quasi-polynomials, and prints the leading-term ratios next to dim(V_mu)/p!.

#include <iostream>

#include "plethysm/plethysm.hpp"

int main() {
    using namespace plethysm;

    const Partition lambda{3, 2, 1};
    const int p = 3, k = 2, dmax = 14;

    const auto c_seq = c_sequence(lambda, p, k, dmax);
    const QuasiPolynomial c_fit = fit_quasipolynomial(c_seq, 6, 12);
    std::cout << "c^{d(3,2,1)}_{3,2d} fit: " << c_fit.to_json().dump() << "\n";

    for (const Partition& mu : partitions_of(p)) {
        const auto a_seq = a_sequence(lambda, p, k, mu, dmax);
        const QuasiPolynomial a_fit = fit_quasipolynomial(a_seq, 6, 12);
        const Rat expected = ratio(hook_dimension(mu), factorial(p));
        std::cout << "mu=(" << mu.to_string() << "): lead(a)/lead(c) should be "
                  << rat_to_string(expected) << " -> "
                  << (check_leading_ratio(a_fit, c_fit, mu) ? "matches" : "MISMATCH") << "\n";
    }
    return 0;
}
