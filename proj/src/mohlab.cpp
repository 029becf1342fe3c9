#include "mohpoly/mohlab.hpp"

#include <algorithm>
#include <optional>

namespace mohpoly {

namespace {

const char* kF1 = "3y^3-4xyz+x^4-3y^3z^5-2xy^6z^2-x^2y^4z^3";
const char* kF2 = "2y^2z-3xz^2+x^3y-2y^7z^2-xy^5z^3";
const char* kF3 = "yz^2-3x^2y^2+2x^3z-y^6z^3-2xy^4z^4";
const char* kF4 = "z^3-2xy^3+x^2yz-y^5z^4";
const char* kG1 = "z^2+x^2y+y^5z^3";
const char* kG2 = "y^3+x^4+y^3z^5+x^2y^4z^3";
const char* kH1 = "yz-x^3-y^6z^2+xy^4z^3";
const char* kH2 = "z^3+xy^3+x^2yz-y^5z^4";
const char* kH3 = "y^4+xy^2z+x^2z^2-y^4z^5";

constexpr long kMinOrderScanBound = 20;

}  // namespace

const std::vector<std::pair<std::string, std::string>>& fixture_sources() {
    static const std::vector<std::pair<std::string, std::string>> sources = {
        {"f1", kF1}, {"f2", kF2}, {"f3", kF3}, {"f4", kF4},
        {"g1", kG1}, {"g2", kG2},
        {"h1", kH1}, {"h2", kH2}, {"h3", kH3},
    };
    return sources;
}

MohFixture moh_generators(long characteristic) {
    FieldSpec field = FieldSpec::of_characteristic(characteristic);
    MohParams params = MohParams::classic(field);
    std::vector<std::pair<std::string, std::string>> sources;
    if (characteristic == 2) {
        sources = {{"g1", kG1}, {"g2", kG2}};
    } else if (characteristic == 3) {
        sources = {{"h1", kH1}, {"h2", kH2}, {"h3", kH3}};
    } else {
        sources = {{"f1", kF1}, {"f2", kF2}, {"f3", kF3}, {"f4", kF4}};
    }
    MohFixture fixture{characteristic, {}, {}, params};
    Parametrization rho = params.map();
    for (const auto& [name, text] : sources) {
        Polynomial p = parse_poly(text, 3, field);
        if (!rho.evaluate(p).is_zero()) {
            throw UnsupportedCharacteristic("generator " + name + " is not in the kernel over " +
                                            field.to_string());
        }
        fixture.names.push_back(name);
        fixture.generators.push_back(std::move(p));
    }
    return fixture;
}

LowerBoundResult lower_bound(const MohParams& mp) {
    MinSigmaOrder found = find_min_sigma_order(mp, kMinOrderScanBound);
    SigmaContext ctx = mp.context();
    Parametrization rho = mp.map();
    long xi = *std::min_element(ctx.weights().begin(), ctx.weights().end());
    LowerBoundResult out{found.s, found.below_proven_zero, xi, 0, {}};
    for (long i = 0; i < xi; ++i) {
        long r = found.s + i;
        DimEstimate est{r, 0, 0, {}};
        if (ctx.semigroup().contains(r)) {
            std::vector<std::vector<Scalar>> span = vr_upper_bound(mp, r);
            est.dim_upper = static_cast<long>(span.size());
            std::vector<Exponents> basis = w_basis(ctx, r);
            for (const auto& coords : span) {
                Polynomial g = combine(mp.ring(), basis, coords);
                std::optional<Polynomial> tail = complete_tail(mp, g, default_tail_bound(r));
                if (tail) {
                    Polynomial element = g + *tail;
                    Polynomial image = rho.evaluate(element);
                    est.witnesses.push_back(KernelCertificate{std::move(element), std::move(image), r});
                    ++est.dim_certified;
                }
            }
        }
        out.bound += est.dim_certified;
        out.per_r.push_back(std::move(est));
    }
    return out;
}

namespace {

bool monomial_in_variable_ideal(const Exponents& e, const std::vector<int>& vars) {
    for (int v : vars) {
        if (e[v] > 0) return true;
    }
    return false;
}

bool poly_in_variable_ideal(const Polynomial& p, const std::vector<int>& vars) {
    for (const auto& [e, c] : p.terms()) {
        if (!monomial_in_variable_ideal(e, vars)) return false;
    }
    return true;
}

// >_ds-greatest monomial of the candidate avoiding every listed variable
std::optional<Exponents> witness_monomial(const Polynomial& p, const std::vector<int>& vars) {
    std::optional<Exponents> best;
    for (const auto& [e, c] : p.terms()) {
        if (monomial_in_variable_ideal(e, vars)) continue;
        if (!best || greater_ds(e, *best)) best = e;
    }
    return best;
}

std::optional<Obstruction> find_obstruction(const MohFixture& fixture, std::size_t candidate,
                                            const std::vector<std::size_t>& others) {
    static const std::vector<std::vector<int>> kSubsets = {
        {0, 1}, {0, 2}, {1, 2}, {0}, {1}, {2}};
    std::vector<std::string> names = variable_names(3);
    for (const auto& vars : kSubsets) {
        bool contained = true;
        for (std::size_t idx : others) {
            if (!poly_in_variable_ideal(fixture.generators[idx], vars)) {
                contained = false;
                break;
            }
        }
        if (!contained) continue;
        std::optional<Exponents> witness = witness_monomial(fixture.generators[candidate], vars);
        if (!witness) continue;
        Obstruction obs;
        obs.candidate = fixture.names[candidate];
        obs.pure_monomial = monomial_to_string(*witness, 3);
        for (int v : vars) obs.prime_variables.push_back(names[v]);
        for (std::size_t idx : others) obs.against.push_back(fixture.names[idx]);
        return obs;
    }
    return std::nullopt;
}

// Rank of the sigma-leading forms of the given generators inside W_r.
bool level_independent(const SigmaContext& ctx, const MohFixture& fixture,
                       const std::vector<std::size_t>& level, long r) {
    std::vector<Exponents> basis = w_basis(ctx, r);
    Matrix coords(level.size(), basis.size(), fixture.params.field);
    for (std::size_t i = 0; i < level.size(); ++i) {
        Polynomial form = sigma_order_and_split(ctx, fixture.generators[level[i]]).sigma_part;
        for (std::size_t j = 0; j < basis.size(); ++j) {
            coords.at(i, j) = form.coefficient(basis[j]);
        }
    }
    return coords.rank() == level.size();
}

}  // namespace

MinimalityCertificate verify_minimal_generation(const MohFixture& fixture) {
    const MohParams& mp = fixture.params;
    Parametrization rho = mp.map();
    SigmaContext ctx = mp.context();
    Scalar one = Scalar::one(mp.field);

    MinimalityCertificate cert;
    cert.characteristic = fixture.characteristic;
    cert.generator_names = fixture.names;
    for (const auto& g : fixture.generators) cert.generator_texts.push_back(g.to_string());

    if (fixture.generators.empty()) {
        cert.reasons.push_back("no generators");
        return cert;
    }

    // (a) kernel membership
    cert.kernel_ok = true;
    for (std::size_t i = 0; i < fixture.generators.size(); ++i) {
        if (!rho.evaluate(fixture.generators[i]).is_zero()) {
            cert.kernel_ok = false;
            cert.reasons.push_back("generator " + fixture.names[i] + " is not in the kernel");
        }
    }

    Polynomial y = Polynomial::monomial(mp.ring(), Exponents{0, 1, 0}, one);

    // (c) valuation side: t-order of the image of the slice variable
    cert.length_valuation_side = static_cast<long>(rho.evaluate(y).ord());

    // (b) ideal side: length of the quotient by the ideal plus the slice
    // variable, read off the leading ideal of a standard basis restricted to
    // the x,z slice ring
    try {
        std::vector<Polynomial> with_slice = fixture.generators;
        with_slice.push_back(y);
        StandardBasis sb = standard_basis(with_slice);
        std::vector<Exponents> slice;
        for (const auto& e : leading_ideal(sb.elements)) {
            if (e[1] == 0) slice.push_back(Exponents{e[0], e[2]});
        }
        cert.length_ideal_side = artinian_length(slice, 2);
    } catch (const NotArtinian& err) {
        cert.reasons.push_back(std::string("ideal-side length: ") + err.what());
    }
    cert.lengths_ok = cert.length_ideal_side >= 0 &&
                      cert.length_ideal_side == cert.length_valuation_side;
    if (cert.length_ideal_side >= 0 && !cert.lengths_ok) {
        cert.reasons.push_back("length mismatch: ideal side " +
                               std::to_string(cert.length_ideal_side) + ", valuation side " +
                               std::to_string(cert.length_valuation_side));
    }

    // (d) lower bound over the window [s, s+xi)
    bool lower_ok = false;
    try {
        cert.lower = lower_bound(mp);
        lower_ok = true;
    } catch (const NotFoundWithinBound& err) {
        cert.reasons.push_back(std::string("lower bound: ") + err.what());
    }
    if (lower_ok && !cert.lower.s_certified) {
        cert.reasons.push_back("minimal sigma-order not certified: some r < s has an unresolved span");
    }

    // (e) close the gap between the lower bound and the generator count.
    // Generators whose sigma-order lies in the window are part of a minimal
    // generating set once their sigma-forms are independent levelwise; the
    // remaining generators need monomial-prime obstructions.
    std::size_t eta = fixture.generators.size();
    std::vector<std::size_t> window;   // generator indices inside the window
    std::vector<std::size_t> outside;
    bool window_independent = true;
    if (lower_ok) {
        std::vector<std::vector<std::size_t>> levels(cert.lower.xi);
        for (std::size_t i = 0; i < eta; ++i) {
            long sord = sigma_order(ctx, fixture.generators[i]);
            if (sord >= cert.lower.s && sord < cert.lower.s + cert.lower.xi) {
                levels[sord - cert.lower.s].push_back(i);
                window.push_back(i);
            } else {
                outside.push_back(i);
            }
        }
        for (long i = 0; i < cert.lower.xi; ++i) {
            if (levels[i].empty()) continue;
            if (!level_independent(ctx, fixture, levels[i], cert.lower.s + i)) {
                window_independent = false;
            }
        }
    }
    if (!window_independent) {
        cert.reasons.push_back("sigma-forms of the window generators are not independent");
    }

    long certified_mu = -1;
    if (cert.kernel_ok && cert.lengths_ok && lower_ok && cert.lower.s_certified) {
        long direct = cert.lower.bound;
        long via_fixture = window_independent ? static_cast<long>(window.size()) : 0;
        if (std::max(direct, via_fixture) >= static_cast<long>(eta)) {
            certified_mu = static_cast<long>(eta);
        } else if (window_independent && outside.size() == 1) {
            std::optional<Obstruction> obs = find_obstruction(fixture, outside[0], window);
            if (obs) {
                cert.obstructions.push_back(*obs);
                certified_mu = static_cast<long>(eta);
            } else {
                cert.reasons.push_back("no monomial-prime obstruction found for " +
                                       fixture.names[outside[0]]);
            }
        } else if (window_independent && outside.size() == 2) {
            std::vector<std::size_t> with_second = window;
            with_second.push_back(outside[1]);
            std::vector<std::size_t> with_first = window;
            with_first.push_back(outside[0]);
            std::optional<Obstruction> first = find_obstruction(fixture, outside[0], with_second);
            std::optional<Obstruction> second = find_obstruction(fixture, outside[1], with_first);
            if (first && second) {
                cert.obstructions.push_back(*first);
                cert.obstructions.push_back(*second);
                certified_mu = static_cast<long>(eta);
            } else {
                cert.reasons.push_back("crossed monomial-prime obstructions not found");
            }
        } else {
            cert.reasons.push_back("generator-count gap too wide for the implemented obstructions");
        }
    }

    cert.mu = certified_mu;
    cert.pass = cert.kernel_ok && cert.lengths_ok && certified_mu == static_cast<long>(eta);
    return cert;
}

nlohmann::json certificate_json(const MinimalityCertificate& cert) {
    nlohmann::json j;
    j["characteristic"] = cert.characteristic;
    j["generators"] = cert.generator_texts;
    j["kernel_ok"] = cert.kernel_ok;
    j["lengths"]["ideal_side"] =
        cert.length_ideal_side >= 0 ? nlohmann::json(cert.length_ideal_side) : nlohmann::json();
    j["lengths"]["valuation_side"] = cert.length_valuation_side;
    j["lower_bound"] = cert.lower.bound;
    nlohmann::json per_r = nlohmann::json::object();
    for (const auto& est : cert.lower.per_r) {
        per_r[std::to_string(est.r)] = {{"dim_upper", est.dim_upper},
                                        {"dim_certified", est.dim_certified}};
    }
    j["per_r"] = per_r;
    nlohmann::json obstructions = nlohmann::json::array();
    for (const auto& obs : cert.obstructions) {
        obstructions.push_back({{"generator", obs.candidate},
                                {"pure_monomial", obs.pure_monomial},
                                {"prime", obs.prime_variables},
                                {"against", obs.against}});
    }
    j["obstructions"] = obstructions;
    j["mu"] = cert.mu >= 0 ? nlohmann::json(cert.mu) : nlohmann::json();
    j["verdict"] = cert.pass ? "pass" : "fail";
    j["reasons"] = cert.reasons;
    return j;
}

std::vector<SallyIdentity> sally_reduction_check(long p) {
    if (p != 2 && p != 3) throw UnsupportedCharacteristic("reduction identities exist for p in {2, 3}");
    FieldSpec field = FieldSpec::prime_field(p);
    RingSpec ring{3, field};
    Scalar one = Scalar::one(field);
    Polynomial x = Polynomial::monomial(ring, Exponents{1, 0, 0}, one);
    Polynomial y = Polynomial::monomial(ring, Exponents{0, 1, 0}, one);
    Polynomial z = Polynomial::monomial(ring, Exponents{0, 0, 1}, one);

    std::vector<Polynomial> fbar;
    for (const char* text : {kF1, kF2, kF3, kF4}) fbar.push_back(parse_poly(text, 3, field));

    MohFixture fixture = moh_generators(p);
    std::vector<std::pair<std::string, std::pair<Polynomial, Polynomial>>> identities;
    if (p == 2) {
        const Polynomial& g1 = fixture.generators[0];
        const Polynomial& g2 = fixture.generators[1];
        identities = {
            {"f1 mod 2 = g2", {fbar[0], g2}},
            {"f2 mod 2 = x*g1", {fbar[1], x * g1}},
            {"f3 mod 2 = y*g1", {fbar[2], y * g1}},
            {"f4 mod 2 = z*g1", {fbar[3], z * g1}},
        };
    } else {
        const Polynomial& h1 = fixture.generators[0];
        const Polynomial& h2 = fixture.generators[1];
        identities = {
            {"f1 mod 3 = -x*h1", {fbar[0], -(x * h1)}},
            {"f2 mod 3 = -y*h1", {fbar[1], -(y * h1)}},
            {"f3 mod 3 = z*h1", {fbar[2], z * h1}},
            {"f4 mod 3 = h2", {fbar[3], h2}},
        };
    }

    std::vector<SallyIdentity> verified;
    for (const auto& [description, sides] : identities) {
        if (sides.first != sides.second) throw IdentityFailed(description);
        verified.push_back(SallyIdentity{description});
    }
    if (p == 2) {
        // the sigma-form of g1 solves no characteristic-zero constraint system
        MohParams rational_params = MohParams::classic(FieldSpec::rationals());
        if (!vr_upper_bound(rational_params, 10).empty()) {
            throw IdentityFailed("V_10 over QQ = 0");
        }
        verified.push_back(SallyIdentity{"V_10 over QQ = 0"});
    }
    return verified;
}

}  // namespace mohpoly
