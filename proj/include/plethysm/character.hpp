#pragma once

#include <map>
#include <mutex>
#include <shared_mutex>
#include <utility>
#include <vector>

#include "plethysm/partition.hpp"

namespace plethysm {

namespace detail {

/// Memo for the Murnaghan-Nakayama recursion, keyed by (shape, remaining
/// cycle-type suffix). Shared process-wide; reads take a shared lock.
class CharacterMemo {
public:
    static CharacterMemo& instance() {
        static CharacterMemo memo;
        return memo;
    }

    bool lookup(const std::pair<std::vector<int>, std::vector<int>>& key, Int& out) const {
        std::shared_lock lock(mutex_);
        auto it = table_.find(key);
        if (it == table_.end()) return false;
        out = it->second;
        return true;
    }

    void store(std::pair<std::vector<int>, std::vector<int>> key, const Int& value) {
        std::unique_lock lock(mutex_);
        table_.emplace(std::move(key), value);
    }

    std::size_t size() const {
        std::shared_lock lock(mutex_);
        return table_.size();
    }

private:
    mutable std::shared_mutex mutex_;
    std::map<std::pair<std::vector<int>, std::vector<int>>, Int> table_;
};

/// One border-strip step on first-column hook lengths ("beta numbers"):
/// chi_shape(r, rest) = sum over removable strips of size r.
inline Int mn_recurse(std::vector<int> shape, const std::vector<int>& cycles, std::size_t from) {
    if (from == cycles.size()) return 1; // shape is empty iff sizes matched
    const auto key = std::make_pair(shape, std::vector<int>(cycles.begin() +
                                    static_cast<std::ptrdiff_t>(from), cycles.end()));
    auto& memo = CharacterMemo::instance();
    Int cached;
    if (memo.lookup(key, cached)) return cached;

    const int r = cycles[from];
    const int len = static_cast<int>(shape.size());
    std::vector<int> betas(shape.size());
    for (int i = 0; i < len; ++i)
        betas[static_cast<std::size_t>(i)] = shape[static_cast<std::size_t>(i)] + (len - 1 - i);

    Int total = 0;
    for (int i = 0; i < len; ++i) {
        const int target = betas[static_cast<std::size_t>(i)] - r;
        if (target < 0) continue;
        if (std::find(betas.begin(), betas.end(), target) != betas.end()) continue;
        int height = 0; // betas strictly between target and betas[i]
        for (int other : betas)
            if (other > target && other < betas[static_cast<std::size_t>(i)]) ++height;

        std::vector<int> next = betas;
        next[static_cast<std::size_t>(i)] = target;
        std::sort(next.begin(), next.end(), std::greater<>());
        std::vector<int> next_shape;
        next_shape.reserve(next.size());
        for (int j = 0; j < len; ++j) {
            const int part = next[static_cast<std::size_t>(j)] - (len - 1 - j);
            if (part > 0) next_shape.push_back(part);
        }
        const Int sub = mn_recurse(std::move(next_shape), cycles, from + 1);
        total += (height % 2 == 0) ? sub : -sub;
    }

    memo.store(key, total);
    return total;
}

} // namespace detail

/// Irreducible symmetric group character chi_mu(rho), |mu| = |rho|, by the
/// Murnaghan-Nakayama rule.
inline Int character_value(const Partition& mu, const Partition& rho) {
    if (mu.size() != rho.size()) throw invalid_input("character_value: |mu| != |rho|");
    return detail::mn_recurse(mu.parts(), rho.parts(), 0);
}

/// Full character table of S_p: values[mu][rho] with both indices the
/// partitions_of(p) order.
struct CharacterTable {
    int p = 0;
    std::vector<Partition> classes;
    std::map<Partition, std::vector<Int>> rows;

    static CharacterTable build(int p) {
        CharacterTable table;
        table.p = p;
        table.classes = partitions_of(p);
        for (const Partition& mu : table.classes) {
            std::vector<Int> row;
            row.reserve(table.classes.size());
            for (const Partition& rho : table.classes)
                row.push_back(character_value(mu, rho));
            table.rows.emplace(mu, std::move(row));
        }
        return table;
    }

    const Int& value(const Partition& mu, const Partition& rho) const {
        const auto row = rows.find(mu);
        const auto pos = std::find(classes.begin(), classes.end(), rho);
        if (row == rows.end() || pos == classes.end())
            throw invalid_input("CharacterTable: unknown partition");
        return row->second[static_cast<std::size_t>(pos - classes.begin())];
    }
};

} // namespace plethysm
