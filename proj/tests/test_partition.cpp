#include <catch2/catch_amalgamated.hpp>

#include "plethysm/partition.hpp"
#include "plethysm/permutation.hpp"
#include "plethysm/tableau.hpp"

using namespace plethysm;

namespace {

// Conjugate by literally counting column heights in the box grid.
Partition conjugate_by_grid(const Partition& lambda) {
    std::vector<int> cols;
    for (int j = 0; lambda.part(0) > j; ++j) {
        int height = 0;
        for (int i = 0; i < lambda.length(); ++i)
            if (lambda.part(i) > j) ++height;
        cols.push_back(height);
    }
    return Partition(cols);
}

// Standard Young tableaux by brute force: SSYT with content (1,...,1).
long count_syt(const Partition& shape) {
    return static_cast<long>(
        enumerate_ssyt(shape, std::vector<int>(static_cast<std::size_t>(shape.size()), 1)).size());
}

// Centralizer order by brute force in S_n.
long brute_centralizer(const Partition& rho) {
    const Permutation rep = class_representative(rho);
    long count = 0;
    for (const Permutation& sigma : symmetric_group(rho.size()))
        if (compose(sigma, rep) == compose(rep, sigma)) ++count;
    return count;
}

} // namespace

TEST_CASE("partition basics and text syntax") {
    CHECK(Partition{3, 2, 1}.size() == 6);
    CHECK(Partition{3, 2, 1}.length() == 3);
    CHECK(Partition().empty());
    CHECK(Partition().size() == 0);
    CHECK(Partition(std::vector<int>{3, 2, 0, 0}) == Partition{3, 2}); // trailing zeros stripped

    CHECK(Partition::parse("3,2,1") == Partition{3, 2, 1});
    CHECK(Partition::parse("") == Partition());
    CHECK(Partition{31, 3, 2, 2, 2}.to_string() == "31,3,2,2,2");
    CHECK_THROWS_AS((Partition{2, 3}), invalid_input);
    CHECK_THROWS_AS((Partition{2, 0, 1}), invalid_input);
    CHECK_THROWS_AS(Partition::parse("3,,1"), invalid_input);
}

TEST_CASE("conjugate") {
    CHECK(Partition{3, 2, 1}.conjugate() == Partition{3, 2, 1});
    CHECK(Partition{6}.conjugate() == Partition{1, 1, 1, 1, 1, 1});
    CHECK(Partition{4, 2}.conjugate() == conjugate_by_grid(Partition{4, 2}));
    CHECK(Partition{4, 2}.conjugate() == Partition{2, 2, 1, 1});

    for (int n = 0; n <= 12; ++n)
        for (const Partition& lambda : partitions_of(n)) {
            CHECK(lambda.conjugate().conjugate() == lambda);
            if (n <= 8) CHECK(lambda.conjugate() == conjugate_by_grid(lambda));
        }
}

TEST_CASE("scale") {
    CHECK(Partition{3, 1}.scaled(2) == Partition{6, 2});
    CHECK(Partition{2, 2}.scaled(0) == Partition());
    CHECK(Partition{31, 3, 2, 2, 2}.scaled(1) == Partition{31, 3, 2, 2, 2});
    CHECK_THROWS_AS(Partition{1}.scaled(-1), invalid_input);
}

TEST_CASE("hook dimension") {
    CHECK(hook_dimension(Partition{5}) == 1);
    CHECK(hook_dimension(Partition{1, 1, 1, 1}) == 1);
    CHECK(hook_dimension(Partition{2, 1}) == count_syt(Partition{2, 1}));
    CHECK(hook_dimension(Partition{2, 1}) == 2);
    CHECK(hook_dimension(Partition()) == 1);

    SECTION("equals the SYT count") {
        for (int n = 1; n <= 6; ++n)
            for (const Partition& mu : partitions_of(n))
                CHECK(hook_dimension(mu) == count_syt(mu));
    }
    SECTION("invariant under conjugation") {
        for (int n = 1; n <= 10; ++n)
            for (const Partition& mu : partitions_of(n))
                CHECK(hook_dimension(mu) == hook_dimension(mu.conjugate()));
    }
    SECTION("sum of squares is p!") {
        for (int p = 1; p <= 8; ++p) {
            Int sum = 0;
            for (const Partition& mu : partitions_of(p)) {
                const Int dim = hook_dimension(mu);
                sum += dim * dim;
            }
            CHECK(sum == factorial(p));
        }
    }
}

TEST_CASE("centralizer order") {
    CHECK(centralizer_order(Partition{1, 1, 1}) == 6);
    CHECK(centralizer_order(Partition{3}) == 3);
    CHECK(centralizer_order(Partition{3}) == brute_centralizer(Partition{3}));
    CHECK(centralizer_order(Partition{2, 1}) == brute_centralizer(Partition{2, 1}));
    CHECK(centralizer_order(Partition{2, 1}) == 2);
    CHECK(centralizer_order(Partition()) == 1);

    SECTION("class sizes partition n!") {
        for (int n = 1; n <= 7; ++n) {
            Int sum = 0;
            for (const Partition& rho : partitions_of(n)) sum += factorial(n) / centralizer_order(rho);
            CHECK(sum == factorial(n));
        }
    }
    SECTION("matches brute-force centralizers up to S_5") {
        for (int n = 1; n <= 5; ++n)
            for (const Partition& rho : partitions_of(n))
                CHECK(centralizer_order(rho) == brute_centralizer(rho));
    }
}

TEST_CASE("partitions_of") {
    CHECK(partitions_of(0) == std::vector<Partition>{Partition()});
    CHECK(partitions_of(4).size() == 5);
    CHECK(partitions_of(4, 2) == std::vector<Partition>{{4}, {3, 1}, {2, 2}});

    SECTION("reverse-lexicographic order, no duplicates") {
        const auto all = partitions_of(9);
        for (std::size_t i = 1; i < all.size(); ++i) CHECK(all[i - 1].parts() > all[i].parts());
        CHECK(all.size() == 30);
    }
    SECTION("length bound filters the full list") {
        for (int n = 0; n <= 9; ++n)
            for (int bound = 0; bound <= n; ++bound) {
                std::vector<Partition> expect;
                for (const Partition& lam : partitions_of(n))
                    if (lam.length() <= bound) expect.push_back(lam);
                CHECK(partitions_of(n, bound) == expect);
            }
    }
}

TEST_CASE("exceptional classification") {
    CHECK(classify_exceptional(Partition{6}, 3, 2).tag == ExceptionalTag::FullRow);
    CHECK(classify_exceptional(Partition{2, 2, 2}, 3, 2).tag == ExceptionalTag::Rectangle);
    CHECK(classify_exceptional(Partition{3, 2, 1}, 3, 2).tag == ExceptionalTag::NonExceptional);
    CHECK(enumerate_ssyt(Partition{3, 2, 1}, rectangular_content(3, 2)).size() == 2);

    CHECK(classify_exceptional(Partition{3, 3}, 3, 2).tag == ExceptionalTag::NearRectangleEqual);
    CHECK(classify_exceptional(Partition{3, 3}, 3, 2).a == 3);
    CHECK(classify_exceptional(Partition{4, 1, 1}, 3, 2).tag == ExceptionalTag::RowOverRectangle);
    CHECK(classify_exceptional(Partition{4, 4, 1}, 3, 3).tag == ExceptionalTag::RectangleOverRow);
    CHECK(classify_exceptional(Partition{4, 4, 1}, 3, 3).b == 4);
    CHECK(classify_exceptional(Partition{4, 4, 1}, 3, 3).c == 1);
    CHECK(classify_exceptional(Partition{3, 3, 2}, 4, 2).tag == ExceptionalTag::NonExceptional);
    CHECK(classify_exceptional(Partition{4}, 1, 4).tag == ExceptionalTag::FullRow);
    CHECK_THROWS_AS(classify_exceptional(Partition{3, 2, 1}, 3, 3), invalid_input);

    SECTION("tag != NonExceptional iff the SSYT count is 1") {
        for (int p = 1; p <= 4; ++p)
            for (int k = 1; k <= 2; ++k)
                for (const Partition& lambda : partitions_of(p * k, p)) {
                    const bool unique =
                        enumerate_ssyt(lambda, rectangular_content(p, k)).size() == 1;
                    CHECK(classify_exceptional(lambda, p, k).exceptional() == unique);
                }
    }
}
