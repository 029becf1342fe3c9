#include "mohpoly/semigroup.hpp"

#include <numeric>

#include "doctest.h"

using namespace mohpoly;

namespace {

// d-fold loop oracle for factorization counts
long count_factorizations_bruteforce(const std::vector<long>& gens, long r) {
    long count = 0;
    if (gens.size() == 3) {
        for (long a = 0; a * gens[0] <= r; ++a)
            for (long b = 0; a * gens[0] + b * gens[1] <= r; ++b) {
                long rest = r - a * gens[0] - b * gens[1];
                if (rest % gens[2] == 0) ++count;
            }
    }
    return count;
}

}  // namespace

TEST_CASE("construction") {
    NumericalSemigroup s({5, 3, 4, 3});
    CHECK(s.generators() == std::vector<long>{3, 4, 5});
    CHECK_THROWS_AS(NumericalSemigroup({4, 6}), Error);   // gcd 2
    CHECK_THROWS_AS(NumericalSemigroup({0, 3}), Error);
}

TEST_CASE("membership") {
    NumericalSemigroup s({3, 4, 5});
    CHECK(s.contains(7));
    CHECK(s.contains(0));
    CHECK(!s.contains(2));
    CHECK(!s.contains(1));
    CHECK(!s.contains(-3));
}

TEST_CASE("factorization tables") {
    NumericalSemigroup s({3, 4, 5});

    auto f8 = s.factorizations(8);
    REQUIRE(f8.size() == 2);
    CHECK(f8[0] == std::vector<unsigned>{0, 2, 0});
    CHECK(f8[1] == std::vector<unsigned>{1, 0, 1});

    auto f12 = s.factorizations(12);
    REQUIRE(f12.size() == 3);
    CHECK(f12[0] == std::vector<unsigned>{0, 3, 0});
    CHECK(f12[1] == std::vector<unsigned>{1, 1, 1});
    CHECK(f12[2] == std::vector<unsigned>{4, 0, 0});

    auto f15 = s.factorizations(15);
    CHECK(f15.size() == 4);
    CHECK(std::find(f15.begin(), f15.end(), std::vector<unsigned>{5, 0, 0}) != f15.end());

    auto f0 = s.factorizations(0);
    REQUIRE(f0.size() == 1);
    CHECK(f0[0] == std::vector<unsigned>{0, 0, 0});

    CHECK(s.factorizations(2).empty());
}

TEST_CASE("every factorization satisfies its defining equation") {
    for (auto gens : {std::vector<long>{3, 4, 5}, std::vector<long>{5, 6, 7}}) {
        NumericalSemigroup s(gens);
        for (long r = 0; r <= 60; ++r) {
            auto factorizations = s.factorizations(r);
            CHECK(static_cast<long>(factorizations.size()) ==
                  count_factorizations_bruteforce(gens, r));
            CHECK(factorizations.empty() == !s.contains(r));
            for (const auto& alpha : factorizations) {
                long total = 0;
                for (std::size_t i = 0; i < alpha.size(); ++i) total += alpha[i] * gens[i];
                CHECK(total == r);
            }
        }
    }
}

TEST_CASE("frobenius numbers") {
    CHECK(NumericalSemigroup({4, 5}).frobenius() == 11);
    CHECK(NumericalSemigroup({3, 4, 5}).frobenius() == 2);
    CHECK(NumericalSemigroup({2, 3}).frobenius() == 1);
    CHECK_THROWS_AS(NumericalSemigroup({1}).frobenius(), NoGaps);
}

TEST_CASE("frobenius matches the two-generator closed form") {
    for (long a = 2; a <= 30; ++a) {
        for (long b = a + 1; b <= 30; ++b) {
            if (std::gcd(a, b) != 1) continue;
            CHECK(NumericalSemigroup({a, b}).frobenius() == a * b - a - b);
        }
    }
}

TEST_CASE("doubling the <4,5> semigroup leaves 22 as the last even gap") {
    NumericalSemigroup s({4, 5});
    CHECK(2 * s.frobenius() == 22);
    for (long even = 24; even <= 200; even += 2) {
        CHECK(s.contains(even / 2));
    }
    CHECK(!s.contains(11));
}
