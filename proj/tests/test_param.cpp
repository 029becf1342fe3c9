#include "mohpoly/param.hpp"

#include <random>

#include "doctest.h"
#include "test_util.hpp"

using namespace mohpoly;

namespace {

const FieldSpec kQ = FieldSpec::rationals();

Polynomial parse3(const std::string& text, const FieldSpec& field = kQ) {
    return parse_poly(text, 3, field);
}

Polynomial parse_t(const std::string& text, const FieldSpec& field = kQ) {
    return parse_poly(text, 1, field);
}

}  // namespace

TEST_CASE("moh parameters") {
    MohParams mp = MohParams::classic(kQ);
    CHECK(mp.m == 2);
    CHECK(mp.weights() == std::vector<long>{3, 4, 5});
    CHECK(!mp.lambda_below_moh_bound());  // 25 > 24
    CHECK(MohParams(3, 23, kQ).lambda_below_moh_bound());
    CHECK_THROWS_AS(MohParams(4, 25, kQ), Error);   // n even
    CHECK_THROWS_AS(MohParams(3, 24, kQ), Error);   // m | lambda
    CHECK_THROWS_AS(MohParams(7, 26, kQ), Error);   // gcd(26, 4) = 2
}

TEST_CASE("evaluate reproduces the printed images") {
    MohParams mp = MohParams::classic(kQ);
    Parametrization rho = mp.map();
    CHECK(rho.scale() == 2);

    CHECK(rho.evaluate(parse3("x")) == parse_t("t^6+t^31"));
    CHECK(rho.evaluate(parse3("y")) == parse_t("t^8"));
    CHECK(rho.evaluate(parse3("z")) == parse_t("t^10"));
    CHECK(rho.evaluate(parse3("3y^3-4xyz+x^4")) == parse_t("6t^74+4t^99+t^124"));

    FieldSpec f2 = FieldSpec::prime_field(2);
    Parametrization rho2 = MohParams::classic(f2).map();
    CHECK(rho2.evaluate(parse3("z^2+x^2y", f2)) == parse_t("t^70", f2));

    FieldSpec f3 = FieldSpec::prime_field(3);
    Parametrization rho3 = MohParams::classic(f3).map();
    CHECK(rho3.evaluate(parse3("yz-x^3", f3)) == parse_t("-t^93", f3));

    Polynomial f1 = parse3("3y^3-4xyz+x^4-3y^3z^5-2xy^6z^2-x^2y^4z^3");
    CHECK(rho.evaluate(f1).is_zero());

    CHECK_THROWS_AS(rho.evaluate(parse_t("t")), RingMismatch);
}

TEST_CASE("evaluate is a ring morphism") {
    std::mt19937_64 rng(404);
    for (int iter = 0; iter < 200; ++iter) {
        FieldSpec field = testutil::random_field(rng);
        Parametrization rho = MohParams::classic(field).map();
        RingSpec ring{3, field};
        Polynomial f = testutil::random_poly(rng, ring, 3, 3);
        Polynomial g = testutil::random_poly(rng, ring, 3, 3);
        CHECK(rho.evaluate(f + g) == rho.evaluate(f) + rho.evaluate(g));
        CHECK(rho.evaluate(f * g) == rho.evaluate(f) * rho.evaluate(g));
    }
}

TEST_CASE("monomial images: order transport and support structure") {
    std::mt19937_64 rng(808);
    MohParams mp = MohParams::classic(kQ);
    Parametrization rho = mp.map();
    SigmaContext ctx = mp.context();
    for (int iter = 0; iter < 250; ++iter) {
        Exponents e = testutil::random_exponents(rng, 3, 5);
        Polynomial m = Polynomial::monomial(mp.ring(), e, Scalar::one(kQ));
        Polynomial image = rho.evaluate(m);
        long r = ctx.weight_of(e);
        CHECK(static_cast<long>(image.ord()) == 2 * r);
        for (const auto& [te, c] : image.terms()) {
            long exponent = te[0];
            long k = (exponent - 2 * r) / 25;
            CHECK(exponent == 2 * r + 25 * k);
            CHECK(k >= 0);
            CHECK(k <= static_cast<long>(e[0]));
        }
    }
}

TEST_CASE("constraint spans match the worked cases") {
    SUBCASE("characteristic zero") {
        MohParams mp = MohParams::classic(kQ);
        for (long r : {8L, 9L, 10L, 11L}) CHECK(vr_upper_bound(mp, r).empty());
        auto span = vr_upper_bound(mp, 12);
        REQUIRE(span.size() == 1);
        CHECK(span[0][0] == Scalar::of_integer(3, kQ));
        CHECK(span[0][1] == Scalar::of_integer(-4, kQ));
        CHECK(span[0][2] == Scalar::of_integer(1, kQ));
        CHECK_THROWS_AS(vr_upper_bound(mp, 2), NotInSemigroup);
    }

    SUBCASE("characteristic two") {
        MohParams mp = MohParams::classic(FieldSpec::prime_field(2));
        auto span10 = vr_upper_bound(mp, 10);
        REQUIRE(span10.size() == 1);
        Polynomial g = combine(mp.ring(), w_basis(mp.context(), 10), span10[0]);
        CHECK(g == parse3("z^2+x^2y", mp.field));
        CHECK(vr_upper_bound(mp, 11).empty());
    }

    SUBCASE("characteristic three") {
        MohParams mp = MohParams::classic(FieldSpec::prime_field(3));
        CHECK(vr_upper_bound(mp, 10).empty());
        CHECK(vr_upper_bound(mp, 11).empty());
        auto span9 = vr_upper_bound(mp, 9);
        REQUIRE(span9.size() == 1);
        Polynomial g = combine(mp.ring(), w_basis(mp.context(), 9), span9[0]);
        CHECK(g == parse3("yz-x^3", mp.field));
    }
}

TEST_CASE("constraint vectors sum to zero in coordinates") {
    for (long characteristic : {0L, 2L, 3L, 5L, 7L}) {
        FieldSpec field = FieldSpec::of_characteristic(characteristic);
        MohParams mp = MohParams::classic(field);
        for (long r = 3; r <= 20; ++r) {
            if (!mp.context().semigroup().contains(r)) continue;
            for (const auto& vec : vr_upper_bound(mp, r)) {
                Scalar sum = Scalar::zero(field);
                for (const auto& c : vec) sum += c;
                CHECK(sum.is_zero());
            }
        }
    }
}

TEST_CASE("tail completion") {
    SUBCASE("the characteristic-zero witness at r = 12") {
        MohParams mp = MohParams::classic(kQ);
        Polynomial g = parse3("3y^3-4xyz+x^4");
        auto tail = complete_tail(mp, g, 40);
        REQUIRE(tail.has_value());
        Polynomial f = g + *tail;
        CHECK(mp.map().evaluate(f).is_zero());
        CHECK(sigma_order(mp.context(), *tail) > 12);
        // the printed witness is one valid tail
        Polynomial printed = parse3("-3y^3z^5-2xy^6z^2-x^2y^4z^3");
        CHECK(mp.map().evaluate(g + printed).is_zero());
    }

    SUBCASE("the characteristic-two witness at r = 10") {
        MohParams mp = MohParams::classic(FieldSpec::prime_field(2));
        Polynomial g = parse3("z^2+x^2y", mp.field);
        auto tail = complete_tail(mp, g, 35);
        REQUIRE(tail.has_value());
        CHECK(mp.map().evaluate(g + *tail).is_zero());
        Polynomial printed = parse3("y^5z^3", mp.field);
        CHECK(mp.map().evaluate(g + printed).is_zero());
    }

    SUBCASE("no tail can cancel the image of x") {
        MohParams mp = MohParams::classic(kQ);
        CHECK(!complete_tail(mp, parse3("x"), 60).has_value());
    }

    SUBCASE("input validation") {
        MohParams mp = MohParams::classic(kQ);
        CHECK_THROWS_AS(complete_tail(mp, parse3("x + y^2"), 40), NotSigmaHomogeneous);
        CHECK_THROWS_AS(complete_tail(mp, parse3("0"), 40), ZeroPolynomial);
    }
}

TEST_CASE("minimal sigma-order per characteristic") {
    auto run = [](long characteristic) {
        MohParams mp = MohParams::classic(FieldSpec::of_characteristic(characteristic));
        MinSigmaOrder result = find_min_sigma_order(mp, 20);
        CHECK(mp.map().evaluate(result.witness.element).is_zero());
        CHECK(result.witness.image.is_zero());
        CHECK(result.below_proven_zero);
        CHECK(sigma_order(mp.context(), result.witness.element) == result.s);
        return result.s;
    };
    CHECK(run(0) == 12);
    CHECK(run(5) == 12);
    CHECK(run(7) == 12);
    CHECK(run(2) == 10);
    CHECK(run(3) == 9);
}

TEST_CASE("kernel certificates respect the constraint span") {
    // soundness: the sigma-form coordinates of any certificate lie in the span
    for (long characteristic : {0L, 2L, 3L}) {
        FieldSpec field = FieldSpec::of_characteristic(characteristic);
        MohParams mp = MohParams::classic(field);
        MinSigmaOrder found = find_min_sigma_order(mp, 20);
        SigmaSplit split = sigma_order_and_split(mp.context(), found.witness.element);
        std::vector<Exponents> basis = w_basis(mp.context(), split.sord);
        auto span = vr_upper_bound(mp, split.sord);
        REQUIRE(!span.empty());
        // stack the span and the certificate coordinates: the rank must not grow
        Matrix with(span.size() + 1, basis.size(), field);
        Matrix without(span.size(), basis.size(), field);
        for (std::size_t i = 0; i < span.size(); ++i) {
            for (std::size_t j = 0; j < basis.size(); ++j) {
                with.at(i, j) = span[i][j];
                without.at(i, j) = span[i][j];
            }
        }
        for (std::size_t j = 0; j < basis.size(); ++j) {
            with.at(span.size(), j) = split.sigma_part.coefficient(basis[j]);
        }
        CHECK(with.rank() == without.rank());
    }
}
