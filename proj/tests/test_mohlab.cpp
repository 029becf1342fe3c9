#include "mohpoly/mohlab.hpp"

#include "doctest.h"

using namespace mohpoly;

namespace {
const FieldSpec kQ = FieldSpec::rationals();
}

TEST_CASE("fixtures parse and sit in the kernel") {
    MohFixture f0 = moh_generators(0);
    REQUIRE(f0.generators.size() == 4);
    CHECK(f0.names == std::vector<std::string>{"f1", "f2", "f3", "f4"});
    CHECK(f0.generators[0] ==
          parse_poly("3y^3-4xyz+x^4-3y^3z^5-2xy^6z^2-x^2y^4z^3", 3, kQ));

    MohFixture f2 = moh_generators(2);
    REQUIRE(f2.generators.size() == 2);
    CHECK(f2.generators[0] == parse_poly("z^2+x^2y+y^5z^3", 3, f2.params.field));
    CHECK(f2.generators[1] == parse_poly("y^3+x^4+y^3z^5+x^2y^4z^3", 3, f2.params.field));

    MohFixture f3 = moh_generators(3);
    REQUIRE(f3.generators.size() == 3);
    CHECK(f3.generators[0] == parse_poly("yz-x^3-y^6z^2+xy^4z^3", 3, f3.params.field));

    for (long c : {0L, 2L, 3L, 5L, 7L}) {
        MohFixture fixture = moh_generators(c);
        Parametrization rho = fixture.params.map();
        for (const auto& g : fixture.generators) CHECK(rho.evaluate(g).is_zero());
    }

    CHECK_THROWS_AS(moh_generators(4), Error);  // not a prime
}

TEST_CASE("lower bounds per characteristic") {
    auto dims = [](const LowerBoundResult& lb) {
        std::vector<long> out;
        for (const auto& est : lb.per_r) out.push_back(est.dim_certified);
        return out;
    };

    SUBCASE("characteristic zero") {
        LowerBoundResult lb = lower_bound(MohParams::classic(kQ));
        CHECK(lb.s == 12);
        CHECK(lb.xi == 3);
        CHECK(lb.bound == 3);
        CHECK(dims(lb) == std::vector<long>{1, 1, 1});
        for (const auto& est : lb.per_r) CHECK(est.dim_upper == est.dim_certified);
        CHECK(lb.s_certified);
    }

    SUBCASE("characteristic two") {
        LowerBoundResult lb = lower_bound(MohParams::classic(FieldSpec::prime_field(2)));
        CHECK(lb.s == 10);
        CHECK(lb.bound == 2);
        CHECK(dims(lb) == std::vector<long>{1, 0, 1});
    }

    SUBCASE("characteristic three") {
        LowerBoundResult lb = lower_bound(MohParams::classic(FieldSpec::prime_field(3)));
        CHECK(lb.s == 9);
        CHECK(lb.bound == 1);
        CHECK(dims(lb) == std::vector<long>{1, 0, 0});
    }

    SUBCASE("witnesses are genuine certificates") {
        LowerBoundResult lb = lower_bound(MohParams::classic(kQ));
        Parametrization rho = MohParams::classic(kQ).map();
        for (const auto& est : lb.per_r) {
            for (const auto& witness : est.witnesses) {
                CHECK(witness.image.is_zero());
                CHECK(rho.evaluate(witness.element).is_zero());
            }
        }
    }
}

TEST_CASE("full verification per characteristic") {
    auto verify = [](long c) { return verify_minimal_generation(moh_generators(c)); };

    SUBCASE("characteristic zero") {
        MinimalityCertificate cert = verify(0);
        CHECK(cert.pass);
        CHECK(cert.mu == 4);
        CHECK(cert.length_ideal_side == 8);
        CHECK(cert.length_valuation_side == 8);
        REQUIRE(cert.obstructions.size() == 1);
        CHECK(cert.obstructions[0].candidate == "f4");
        CHECK(cert.obstructions[0].pure_monomial == "z^3");
        CHECK(cert.obstructions[0].prime_variables == std::vector<std::string>{"x", "y"});
    }

    SUBCASE("p = 5 and p = 7 behave like characteristic zero") {
        for (long p : {5L, 7L}) {
            MinimalityCertificate cert = verify(p);
            CHECK(cert.pass);
            CHECK(cert.mu == 4);
        }
    }

    SUBCASE("characteristic two") {
        MinimalityCertificate cert = verify(2);
        CHECK(cert.pass);
        CHECK(cert.mu == 2);
        CHECK(cert.obstructions.empty());
        CHECK(cert.length_ideal_side == 8);
    }

    SUBCASE("characteristic three") {
        MinimalityCertificate cert = verify(3);
        CHECK(cert.pass);
        CHECK(cert.mu == 3);
        CHECK(cert.length_ideal_side == 8);
        REQUIRE(cert.obstructions.size() == 2);
        CHECK(cert.obstructions[0].candidate == "h2");
        CHECK(cert.obstructions[1].candidate == "h3");
    }

    SUBCASE("dropping f4 breaks the length check") {
        MohFixture fixture = moh_generators(0);
        fixture.names.pop_back();
        fixture.generators.pop_back();
        MinimalityCertificate cert = verify_minimal_generation(fixture);
        CHECK(!cert.pass);
        CHECK(!cert.lengths_ok);
        CHECK(cert.mu == -1);
        CHECK(!cert.reasons.empty());
    }
}

TEST_CASE("certificate JSON carries the stable schema") {
    MinimalityCertificate cert = verify_minimal_generation(moh_generators(2));
    nlohmann::json j = certificate_json(cert);
    CHECK(j["characteristic"] == 2);
    CHECK(j["generators"].size() == 2);
    CHECK(j["kernel_ok"] == true);
    CHECK(j["lengths"]["ideal_side"] == 8);
    CHECK(j["lengths"]["valuation_side"] == 8);
    CHECK(j["lower_bound"] == 2);
    CHECK(j["per_r"]["10"]["dim_upper"] == 1);
    CHECK(j["per_r"]["10"]["dim_certified"] == 1);
    CHECK(j["per_r"]["11"]["dim_upper"] == 0);
    CHECK(j["mu"] == 2);
    CHECK(j["verdict"] == "pass");
    CHECK(j["obstructions"].is_array());
}

TEST_CASE("sally reduction identities") {
    SUBCASE("p = 2") {
        auto identities = sally_reduction_check(2);
        REQUIRE(identities.size() == 5);
        CHECK(identities[0].description == "f1 mod 2 = g2");
        CHECK(identities[4].description == "V_10 over QQ = 0");
    }

    SUBCASE("p = 3") {
        auto identities = sally_reduction_check(3);
        REQUIRE(identities.size() == 4);
        CHECK(identities[0].description == "f1 mod 3 = -x*h1");
        CHECK(identities[3].description == "f4 mod 3 = h2");
    }

    CHECK_THROWS_AS(sally_reduction_check(5), UnsupportedCharacteristic);
}

TEST_CASE("fixture sigma-forms lie inside the constraint spans") {
    for (long characteristic : {0L, 2L, 3L, 5L, 7L}) {
        MohFixture fixture = moh_generators(characteristic);
        SigmaContext ctx = fixture.params.context();
        for (const auto& g : fixture.generators) {
            SigmaSplit split = sigma_order_and_split(ctx, g);
            auto span = vr_upper_bound(fixture.params, split.sord);
            REQUIRE(!span.empty());
            std::vector<Exponents> basis = w_basis(ctx, split.sord);
            Matrix with(span.size() + 1, basis.size(), fixture.params.field);
            Matrix without(span.size(), basis.size(), fixture.params.field);
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
}

TEST_CASE("reduced characteristic-zero generators lie in the modular fixtures' ideals") {
    for (long p : {2L, 3L}) {
        FieldSpec field = FieldSpec::prime_field(p);
        MohFixture fixture = moh_generators(p);
        StandardBasis sb = standard_basis(fixture.generators);
        for (const auto& [name, text] : fixture_sources()) {
            if (name[0] != 'f') continue;
            Polynomial reduced = parse_poly(text, 3, field);
            CHECK(mora_normal_form(reduced, sb.elements).remainder.is_zero());
        }
    }
}

TEST_CASE("the three modular mu values undercut the characteristic-zero count") {
    long mu0 = verify_minimal_generation(moh_generators(0)).mu;
    long mu2 = verify_minimal_generation(moh_generators(2)).mu;
    long mu3 = verify_minimal_generation(moh_generators(3)).mu;
    CHECK(mu0 == 4);
    CHECK(mu3 == 3);
    CHECK(mu2 == 2);
    CHECK(mu2 < mu0);
    CHECK(mu3 < mu0);
}
