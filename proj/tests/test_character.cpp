#include <catch2/catch_amalgamated.hpp>

#include "plethysm/character.hpp"
#include "plethysm/permutation.hpp"

using namespace plethysm;

namespace {

// The standard representation of S_3 is the sum-zero subspace of the
// permutation representation; its character is (#fixed points) - 1.
Int standard_rep_trace_s3(const Partition& rho) {
    const Permutation sigma = class_representative(rho);
    int fixed = 0;
    for (int i = 0; i < 3; ++i)
        if (sigma[static_cast<std::size_t>(i)] == i) ++fixed;
    return fixed - 1;
}

} // namespace

TEST_CASE("small character values") {
    for (const Partition& rho : partitions_of(3)) {
        CHECK(character_value(Partition{3}, rho) == 1);
        CHECK(character_value(Partition{2, 1}, rho) == standard_rep_trace_s3(rho));
    }
    CHECK(character_value(Partition{1, 1, 1}, Partition{3}) == 1);
    CHECK(character_value(Partition{2, 1}, Partition{3}) == -1);
    CHECK(character_value(Partition(), Partition()) == 1);
    CHECK_THROWS_AS(character_value(Partition{2, 1}, Partition{2}), invalid_input);
}

TEST_CASE("dimension column") {
    for (int p = 1; p <= 7; ++p) {
        const Partition identity_class(std::vector<int>(static_cast<std::size_t>(p), 1));
        for (const Partition& mu : partitions_of(p))
            CHECK(character_value(mu, identity_class) == hook_dimension(mu));
    }
}

TEST_CASE("row orthogonality is exact up to S_8") {
    for (int p = 1; p <= 8; ++p) {
        const auto mus = partitions_of(p);
        const CharacterTable table = CharacterTable::build(p);
        for (const Partition& mu : mus)
            for (const Partition& nu : mus) {
                Int sum = 0;
                for (const Partition& rho : table.classes)
                    sum += (factorial(p) / centralizer_order(rho)) * table.value(mu, rho) *
                           table.value(nu, rho);
                CHECK(sum == (mu == nu ? factorial(p) : 0));
            }
    }
}

TEST_CASE("column orthogonality up to S_6") {
    for (int p = 1; p <= 6; ++p) {
        const auto classes = partitions_of(p);
        for (const Partition& rho : classes)
            for (const Partition& tau : classes) {
                Int sum = 0;
                for (const Partition& mu : classes)
                    sum += character_value(mu, rho) * character_value(mu, tau);
                CHECK(sum == (rho == tau ? centralizer_order(rho) : 0));
            }
    }
}

TEST_CASE("conjugate shape twists by the sign character") {
    for (int p = 1; p <= 7; ++p)
        for (const Partition& mu : partitions_of(p))
            for (const Partition& rho : partitions_of(p))
                CHECK(character_value(mu.conjugate(), rho) ==
                      sign_of_class(rho) * character_value(mu, rho));
}

TEST_CASE("character table lookups") {
    const CharacterTable table = CharacterTable::build(4);
    CHECK(table.value(Partition{2, 2}, Partition{2, 1, 1}) ==
          character_value(Partition{2, 2}, Partition{2, 1, 1}));
    CHECK_THROWS_AS(table.value(Partition{5}, Partition{4}), invalid_input);
}
