#include "mohpoly/poly.hpp"

#include <random>

#include "doctest.h"
#include "test_util.hpp"

using namespace mohpoly;

namespace {
const FieldSpec kQ = FieldSpec::rationals();
const RingSpec kRing{3, kQ};

Polynomial parse3(const std::string& text) { return parse_poly(text, 3, kQ); }
}  // namespace

TEST_CASE("parse examples") {
    Polynomial f = parse3("3y^3 - 4xyz + x^4");
    CHECK(f.term_count() == 3);
    CHECK(f.coefficient({0, 3, 0}) == Scalar::of_integer(3, kQ));
    CHECK(f.coefficient({1, 1, 1}) == Scalar::of_integer(-4, kQ));
    CHECK(f.coefficient({4, 0, 0}) == Scalar::of_integer(1, kQ));

    CHECK(parse3("0").is_zero());
    CHECK(parse3("x - x").is_zero());
    CHECK(parse3("-x + 2x") == parse3("x"));
    CHECK(parse3("1/2x*y^2") == parse3("1/2 x y^2"));
}

TEST_CASE("parse errors carry positions") {
    CHECK_THROWS_AS(parse3("3y3"), SyntaxError);  // exponent requires '^'
    CHECK_THROWS_AS(parse3("x + w"), UnknownVariable);
    CHECK_THROWS_AS(parse3("x^9999999999"), ExponentOverflow);
    CHECK_THROWS_AS(parse3("x + "), SyntaxError);
    CHECK_THROWS_AS(parse3("3 * * x"), SyntaxError);
    CHECK_THROWS_AS(parse3(""), SyntaxError);
}

TEST_CASE("local degree reverse lexicographic comparisons") {
    Exponents one{0, 0, 0}, x{1, 0, 0}, y{0, 1, 0}, z{0, 0, 1};
    CHECK(compare_ds(one, x) == Cmp::Greater);
    CHECK(compare_ds(Exponents{0, 2, 0}, Exponents{1, 0, 1}) == Cmp::Greater);  // y^2 > xz
    CHECK(compare_ds(Exponents{2, 0, 1}, Exponents{1, 1, 1}) == Cmp::Greater);  // x^2z > xyz
    CHECK(compare_ds(x, x) == Cmp::Equal);
    CHECK(compare_ds(y, x) == Cmp::Less);
    CHECK_THROWS_AS(compare_ds(x, Exponents{0, 0}), DimensionMismatch);
}

TEST_CASE("the printed order chain reproduces") {
    // all monomials of degree <= 3, biggest first
    std::vector<Exponents> all;
    for (unsigned a = 0; a <= 3; ++a)
        for (unsigned b = 0; b <= 3; ++b)
            for (unsigned c = 0; c <= 3; ++c)
                if (a + b + c <= 3) all.push_back({a, b, c});
    std::sort(all.begin(), all.end(), greater_ds);
    std::vector<std::string> got;
    for (const auto& e : all) got.push_back(monomial_to_string(e, 3));
    std::vector<std::string> expected = {
        "1",   "x",    "y",    "z",    "x^2", "x*y",   "y^2",   "x*z",   "y*z",   "z^2",
        "x^3", "x^2*y", "x*y^2", "y^3", "x^2*z", "x*y*z", "y^2*z", "x*z^2", "y*z^2", "z^3"};
    REQUIRE(got.size() == expected.size());
    for (std::size_t i = 0; i < expected.size(); ++i) CHECK(got[i] == expected[i]);
}

TEST_CASE("order and leading form") {
    Polynomial f = parse3("z^3-2xy^3+x^2yz-y^5z^4");
    CHECK(f.ord() == 3);
    CHECK(f.leading_form() == parse3("z^3"));

    Polynomial c = parse3("5");
    CHECK(c.ord() == 0);
    CHECK(c.leading_form() == c);

    Polynomial h = parse3("x+y");
    CHECK(h.ord() == 1);
    CHECK(h.leading_form() == h);

    CHECK_THROWS_AS(Polynomial::zero(kRing).ord(), ZeroPolynomial);
}

TEST_CASE("ecart") {
    CHECK(parse3("z^3-2xy^3").ecart() == 1);
    CHECK(parse3("x^2yz").ecart() == 0);
    Polynomial f1 = parse3("3y^3-4xyz+x^4-3y^3z^5-2xy^6z^2-x^2y^4z^3");
    CHECK(f1.leading_monomial() == Exponents{0, 3, 0});
    CHECK(f1.ecart() == 6);  // max degree 9 via x^2y^4z^3, leading monomial y^3
}

TEST_CASE("spoly basics") {
    Polynomial f = parse3("3y^3-4xyz+x^4");
    CHECK(spoly(f, f).is_zero());

    // leading monomials cancel: everything left sits strictly below the lcm
    Polynomial g = parse3("z^2+x^2y");
    Polynomial s = spoly(f, g);
    REQUIRE(!s.is_zero());
    Exponents m = exponent_lcm(f.leading_monomial(), g.leading_monomial());
    CHECK(compare_ds(s.leading_monomial(), m) == Cmp::Less);
}

TEST_CASE("printing is canonical and parse round-trips") {
    Polynomial f = parse3("x^4 - 4xyz + 3y^3");
    CHECK(f.to_string() == "3*y^3 - 4*x*y*z + x^4");  // descending under >_ds
    CHECK(Polynomial::zero(kRing).to_string() == "0");
    CHECK(parse3("-1/2x + y").to_string() == "-1/2*x + y");

    std::mt19937_64 rng(5);
    for (int iter = 0; iter < 200; ++iter) {
        FieldSpec field = testutil::random_field(rng);
        RingSpec ring{3, field};
        Polynomial p = testutil::random_poly(rng, ring, 6, 5);
        CHECK(parse_poly(p.to_string(), 3, field) == p);
    }
}

TEST_CASE("ordering axioms on randomized monomials") {
    std::mt19937_64 rng(99);
    Exponents unit{0, 0, 0, 0};
    for (int iter = 0; iter < 300; ++iter) {
        Exponents a = testutil::random_exponents(rng, 4, 6);
        Exponents b = testutil::random_exponents(rng, 4, 6);
        Exponents c = testutil::random_exponents(rng, 4, 6);
        // strict total order
        if (a != b) CHECK(compare_ds(a, b) != Cmp::Equal);
        if (compare_ds(a, b) == Cmp::Greater && compare_ds(b, c) == Cmp::Greater) {
            CHECK(compare_ds(a, c) == Cmp::Greater);
        }
        // multiplicative
        Cmp ab = compare_ds(a, b);
        CHECK(compare_ds(exponent_sum(a, c), exponent_sum(b, c)) == ab);
        // local: x^a < 1 for a != 0
        if (a != unit) CHECK(compare_ds(a, unit) == Cmp::Less);
    }
}

TEST_CASE("ring axioms on randomized polynomials") {
    std::mt19937_64 rng(7);
    for (int iter = 0; iter < 200; ++iter) {
        FieldSpec field = testutil::random_field(rng);
        RingSpec ring{3, field};
        Polynomial f = testutil::random_poly(rng, ring, 4, 4);
        Polynomial g = testutil::random_poly(rng, ring, 4, 4);
        Polynomial h = testutil::random_poly(rng, ring, 4, 4);
        CHECK(f + g == g + f);
        CHECK((f + g) + h == f + (g + h));
        CHECK(f * g == g * f);
        CHECK((f * g) * h == f * (g * h));
        CHECK(f * (g + h) == f * g + f * h);
        CHECK(f - f == Polynomial::zero(ring));
    }
}

TEST_CASE("homogeneous parts add homogeneously") {
    std::mt19937_64 rng(13);
    for (int iter = 0; iter < 200; ++iter) {
        FieldSpec field = testutil::random_field(rng);
        RingSpec ring{3, field};
        Polynomial f = testutil::random_nonzero_poly(rng, ring, 5, 4).leading_form();
        Polynomial g = testutil::random_nonzero_poly(rng, ring, 5, 4).leading_form();
        if (f.ord() != g.ord()) continue;
        Polynomial sum = f + g;
        if (!sum.is_zero()) {
            CHECK(sum.leading_form() == sum);
            CHECK(sum.ord() == f.ord());
        }
    }
}

TEST_CASE("spoly drops below the lcm on randomized pairs") {
    std::mt19937_64 rng(21);
    for (int iter = 0; iter < 200; ++iter) {
        FieldSpec field = testutil::random_field(rng);
        RingSpec ring{3, field};
        Polynomial f = testutil::random_nonzero_poly(rng, ring, 4, 4);
        Polynomial g = testutil::random_nonzero_poly(rng, ring, 4, 4);
        Polynomial s = spoly(f, g);
        if (s.is_zero()) continue;
        Exponents m = exponent_lcm(f.leading_monomial(), g.leading_monomial());
        CHECK(compare_ds(s.leading_monomial(), m) == Cmp::Less);
    }
}
