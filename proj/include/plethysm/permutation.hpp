#pragma once

#include <algorithm>
#include <numeric>
#include <vector>

#include "plethysm/partition.hpp"

namespace plethysm {

/// One-line notation, 0-indexed: perm[i] is the image of i.
using Permutation = std::vector<int>;

inline Permutation identity_permutation(int p) {
    Permutation id(static_cast<std::size_t>(p));
    std::iota(id.begin(), id.end(), 0);
    return id;
}

/// (a*b)(i) = a(b(i)).
inline Permutation compose(const Permutation& a, const Permutation& b) {
    Permutation c(b.size());
    for (std::size_t i = 0; i < b.size(); ++i)
        c[i] = a[static_cast<std::size_t>(b[i])];
    return c;
}

/// All of S_p in lexicographic one-line order.
inline std::vector<Permutation> symmetric_group(int p) {
    std::vector<Permutation> out;
    Permutation perm = identity_permutation(p);
    do {
        out.push_back(perm);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
}

inline Partition cycle_type(const Permutation& perm) {
    std::vector<int> lengths;
    std::vector<bool> seen(perm.size(), false);
    for (std::size_t start = 0; start < perm.size(); ++start) {
        if (seen[start]) continue;
        int len = 0;
        for (std::size_t i = start; !seen[i]; i = static_cast<std::size_t>(perm[i])) {
            seen[i] = true;
            ++len;
        }
        lengths.push_back(len);
    }
    std::sort(lengths.begin(), lengths.end(), std::greater<>());
    return Partition(std::move(lengths));
}

inline int sign(const Permutation& perm) { return sign_of_class(cycle_type(perm)); }

inline bool is_even(const Permutation& perm) { return sign(perm) == 1; }

/// Canonical representative of the class with cycle type rho: consecutive
/// cycles (0 1 .. r1-1)(r1 ..)...
inline Permutation class_representative(const Partition& rho) {
    Permutation perm(static_cast<std::size_t>(rho.size()));
    int base = 0;
    for (int part : rho.parts()) {
        for (int i = 0; i < part; ++i)
            perm[static_cast<std::size_t>(base + i)] = base + (i + 1) % part;
        base += part;
    }
    return perm;
}

/// The three nontrivial elements of the Klein four subgroup of S_4.
inline std::vector<Permutation> klein_four_nontrivial() {
    return {
        {1, 0, 3, 2}, // (0 1)(2 3)
        {2, 3, 0, 1}, // (0 2)(1 3)
        {3, 2, 1, 0}, // (0 3)(1 2)
    };
}

} // namespace plethysm
