#include <algorithm>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "mohpoly/mohlab.hpp"

using namespace mohpoly;
using nlohmann::json;

namespace {

constexpr int kExitPass = 0;
constexpr int kExitVerificationFailure = 1;
constexpr int kExitUsage = 2;

struct Options {
    long characteristic = 0;
    long n = 3;
    long lambda = 25;
    long value = -1;
    long max_sord = -1;
    std::vector<long> gens = {3, 4, 5};
    std::string poly;
    std::vector<std::string> against;
    std::string vars = "x,z";
    std::string format = "text";
    bool all = false;
};

FieldSpec field_of(const Options& opt) { return FieldSpec::of_characteristic(opt.characteristic); }

MohParams params_of(const Options& opt) {
    MohParams mp(opt.n, opt.lambda, field_of(opt));
    if (mp.lambda_below_moh_bound()) {
        std::cerr << "warning: lambda = " << mp.lambda << " does not exceed n(n+1)m = "
                  << mp.n * (mp.n + 1) * mp.m << "; the classical bound on the family is violated\n";
    }
    return mp;
}

std::string trimmed(const std::string& s) {
    std::size_t a = s.find_first_not_of(" \t");
    std::size_t b = s.find_last_not_of(" \t");
    return a == std::string::npos ? "" : s.substr(a, b - a + 1);
}

/// Fixture names (f1..f4, g1, g2, h1..h3) resolve in any polynomial slot.
Polynomial resolve_poly(const std::string& text, const FieldSpec& field) {
    std::string t = trimmed(text);
    for (const auto& [name, source] : fixture_sources()) {
        if (t == name) return parse_poly(source, 3, field);
    }
    return parse_poly(t, 3, field);
}

std::vector<Polynomial> resolve_list(const std::vector<std::string>& items, const FieldSpec& field) {
    std::vector<Polynomial> out;
    for (const auto& item : items) out.push_back(resolve_poly(item, field));
    return out;
}

void emit(const Options& opt, const json& j, const std::string& text) {
    if (opt.format == "json") {
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << text;
    }
}

std::string alpha_to_string(const std::vector<unsigned>& alpha) {
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < alpha.size(); ++i) {
        if (i) os << ", ";
        os << alpha[i];
    }
    os << ")";
    return os.str();
}

int run_factor(const Options& opt) {
    NumericalSemigroup s(opt.gens);
    auto factorizations = s.factorizations(opt.value);
    json j{{"command", "factor"}, {"gens", opt.gens}, {"value", opt.value}};
    j["factorizations"] = factorizations;
    std::ostringstream os;
    for (const auto& alpha : factorizations) os << alpha_to_string(alpha) << "\n";
    if (factorizations.empty()) os << "none: " << opt.value << " is not in the semigroup\n";
    emit(opt, j, os.str());
    return kExitPass;
}

int run_wbasis(const Options& opt) {
    SigmaContext ctx(opt.gens);
    auto basis = w_basis(ctx, opt.value);
    json names = json::array();
    std::ostringstream os;
    for (const auto& e : basis) {
        names.push_back(monomial_to_string(e, ctx.dim()));
        os << monomial_to_string(e, ctx.dim()) << "\n";
    }
    if (basis.empty()) os << "empty\n";
    json j{{"command", "wbasis"}, {"weights", opt.gens}, {"value", opt.value}, {"monomials", names}};
    emit(opt, j, os.str());
    return kExitPass;
}

int run_vr(const Options& opt) {
    MohParams mp = params_of(opt);
    auto span = vr_upper_bound(mp, opt.value);
    auto basis = w_basis(mp.context(), opt.value);
    json vectors = json::array();
    json polys = json::array();
    std::ostringstream os;
    os << "dim upper bound: " << span.size() << "\n";
    for (const auto& vec : span) {
        json coords = json::array();
        for (const auto& c : vec) coords.push_back(c.to_string());
        vectors.push_back(coords);
        Polynomial p = combine(mp.ring(), basis, vec);
        polys.push_back(p.to_string());
        os << "  " << p.to_string() << "\n";
    }
    json j{{"command", "vr"},
           {"characteristic", opt.characteristic},
           {"r", opt.value},
           {"dim_upper", span.size()},
           {"vectors", vectors},
           {"span", polys}};
    emit(opt, j, os.str());
    return kExitPass;
}

int run_tail(const Options& opt) {
    MohParams mp = params_of(opt);
    Polynomial g = resolve_poly(opt.poly, mp.field);
    long sord = sigma_order(mp.context(), g);
    long bound = opt.max_sord > 0 ? opt.max_sord : default_tail_bound(sord);
    std::optional<Polynomial> tail = complete_tail(mp, g, bound);
    json j{{"command", "tail"},
           {"characteristic", opt.characteristic},
           {"poly", g.to_string()},
           {"sigma_order", sord},
           {"max_sord", bound}};
    if (!tail) {
        j["tail"] = nullptr;
        emit(opt, j, "no tail within sigma-order bound " + std::to_string(bound) + "\n");
        return kExitVerificationFailure;
    }
    Polynomial element = g + *tail;
    Polynomial image = mp.map().evaluate(element);
    j["tail"] = tail->to_string();
    j["element"] = element.to_string();
    j["image"] = image.to_string();
    std::ostringstream os;
    os << "tail: " << tail->to_string() << "\n";
    os << "element: " << element.to_string() << "\n";
    os << "image: " << image.to_string() << "\n";
    emit(opt, j, os.str());
    return kExitPass;
}

int run_eval(const Options& opt) {
    MohParams mp = params_of(opt);
    Polynomial f = resolve_poly(opt.poly, mp.field);
    Polynomial image = mp.map().evaluate(f);
    json j{{"command", "eval"},
           {"characteristic", opt.characteristic},
           {"poly", f.to_string()},
           {"image", image.to_string()}};
    emit(opt, j, image.to_string() + "\n");
    return kExitPass;
}

int run_nf(const Options& opt) {
    FieldSpec field = field_of(opt);
    Polynomial f = resolve_poly(opt.poly, field);
    std::vector<Polynomial> gens = resolve_list(opt.against, field);
    MoraTrace trace = mora_normal_form(f, gens);
    json quotients = json::array();
    for (const auto& q : trace.quotients) quotients.push_back(q.to_string());
    json j{{"command", "nf"},
           {"characteristic", opt.characteristic},
           {"poly", f.to_string()},
           {"remainder", trace.remainder.to_string()},
           {"u", trace.u.to_string()},
           {"quotients", quotients},
           {"extended", trace.extended_set.size()},
           {"steps", trace.steps}};
    std::ostringstream os;
    os << "remainder: " << trace.remainder.to_string() << "\n";
    os << "u: " << trace.u.to_string() << "\n";
    for (std::size_t i = 0; i < trace.quotients.size(); ++i) {
        os << "a" << (i + 1) << ": " << trace.quotients[i].to_string() << "\n";
    }
    os << "steps: " << trace.steps << ", intermediates added: " << trace.extended_set.size()
       << "\n";
    emit(opt, j, os.str());
    return kExitPass;
}

int run_spoly(const Options& opt) {
    FieldSpec field = field_of(opt);
    if (opt.against.size() != 1) throw Error("spoly needs exactly one --against polynomial");
    Polynomial f = resolve_poly(opt.poly, field);
    Polynomial g = resolve_poly(opt.against[0], field);
    Polynomial s = spoly(f, g);
    json j{{"command", "spoly"},
           {"characteristic", opt.characteristic},
           {"spoly", s.to_string()}};
    emit(opt, j, s.to_string() + "\n");
    return kExitPass;
}

int run_std(const Options& opt) {
    FieldSpec field = field_of(opt);
    std::vector<Polynomial> gens = resolve_list(opt.against, field);
    StandardBasis sb = standard_basis(gens);
    json elements = json::array();
    json lead = json::array();
    std::ostringstream os;
    os << "standard basis (" << sb.elements.size() << " elements):\n";
    for (const auto& p : sb.elements) {
        elements.push_back(p.to_string());
        os << "  " << p.to_string() << "\n";
    }
    os << "leading ideal:";
    for (const auto& m : leading_ideal(sb.elements)) {
        lead.push_back(monomial_to_string(m, 3));
        os << " " << monomial_to_string(m, 3);
    }
    os << "\n";
    json j{{"command", "std"},
           {"characteristic", opt.characteristic},
           {"elements", elements},
           {"leading_ideal", lead}};
    emit(opt, j, os.str());
    return kExitPass;
}

int run_stdcheck(const Options& opt) {
    FieldSpec field = field_of(opt);
    std::vector<Polynomial> gens = resolve_list(opt.against, field);
    BasisCheck check = is_standard_basis(gens);
    json pairs = json::array();
    std::ostringstream os;
    for (const auto& report : check.pairs) {
        pairs.push_back({{"i", report.i + 1},
                         {"j", report.j + 1},
                         {"remainder", report.remainder.to_string()}});
        os << "pair (" << report.i + 1 << ", " << report.j + 1 << "): remainder "
           << report.remainder.to_string() << "\n";
    }
    os << (check.is_basis ? "standard basis: yes\n" : "standard basis: no\n");
    json j{{"command", "stdcheck"},
           {"characteristic", opt.characteristic},
           {"is_standard_basis", check.is_basis},
           {"pairs", pairs}};
    emit(opt, j, os.str());
    return check.is_basis ? kExitPass : kExitVerificationFailure;
}

int run_length(const Options& opt) {
    int dim = 1 + static_cast<int>(std::count(opt.vars.begin(), opt.vars.end(), ','));
    std::string expected;
    for (const auto& name : variable_names(dim)) {
        if (!expected.empty()) expected += ",";
        expected += name;
    }
    if (opt.vars != expected) {
        throw Error("--vars must be \"" + expected + "\" for " + std::to_string(dim) +
                    " variables");
    }
    FieldSpec q = FieldSpec::rationals();
    std::vector<Exponents> gens;
    for (const auto& item : opt.against) {
        Polynomial p = parse_poly(item, dim, q);
        if (p.term_count() != 1) throw Error("length expects monomial generators");
        gens.push_back(p.terms().begin()->first);
    }
    long length = artinian_length(gens, dim);
    json j{{"command", "length"}, {"vars", opt.vars}, {"length", length}};
    emit(opt, j, std::to_string(length) + "\n");
    return kExitPass;
}

int run_lowerbound(const Options& opt) {
    MohParams mp = params_of(opt);
    LowerBoundResult lb = lower_bound(mp);
    json per_r = json::object();
    std::ostringstream os;
    os << "s = " << lb.s << " (window width " << lb.xi << ")\n";
    for (const auto& est : lb.per_r) {
        per_r[std::to_string(est.r)] = {{"dim_upper", est.dim_upper},
                                        {"dim_certified", est.dim_certified}};
        os << "  r = " << est.r << ": dim upper " << est.dim_upper << ", certified "
           << est.dim_certified;
        for (const auto& w : est.witnesses) os << "  [" << w.element.to_string() << "]";
        os << "\n";
    }
    os << "lower bound: mu >= " << lb.bound << "\n";
    json j{{"command", "lowerbound"},
           {"characteristic", opt.characteristic},
           {"s", lb.s},
           {"s_certified", lb.s_certified},
           {"xi", lb.xi},
           {"bound", lb.bound},
           {"per_r", per_r}};
    emit(opt, j, os.str());
    return kExitPass;
}

std::string certificate_text(const MinimalityCertificate& cert) {
    std::ostringstream os;
    os << "characteristic " << cert.characteristic << ": " << (cert.pass ? "PASS" : "FAIL")
       << "\n";
    os << "  generators:";
    for (const auto& name : cert.generator_names) os << " " << name;
    os << "\n";
    os << "  kernel: " << (cert.kernel_ok ? "all map to 0" : "FAILED") << "\n";
    os << "  lengths: ideal side ";
    if (cert.length_ideal_side >= 0) {
        os << cert.length_ideal_side;
    } else {
        os << "n/a";
    }
    os << ", valuation side " << cert.length_valuation_side << "\n";
    os << "  lower bound: " << cert.lower.bound << " (s = " << cert.lower.s << ";";
    for (const auto& est : cert.lower.per_r) {
        os << " r=" << est.r << ":" << est.dim_certified;
    }
    os << ")\n";
    for (const auto& obs : cert.obstructions) {
        os << "  obstruction: " << obs.candidate << " has " << obs.pure_monomial << " outside (";
        for (std::size_t i = 0; i < obs.prime_variables.size(); ++i) {
            if (i) os << ", ";
            os << obs.prime_variables[i];
        }
        os << ") containing";
        for (const auto& name : obs.against) os << " " << name;
        os << "\n";
    }
    if (cert.mu >= 0) os << "  mu = " << cert.mu << "\n";
    for (const auto& reason : cert.reasons) os << "  reason: " << reason << "\n";
    return os.str();
}

int run_verify(const Options& opt) {
    std::vector<long> characteristics =
        opt.all ? std::vector<long>{0, 2, 3, 5, 7} : std::vector<long>{opt.characteristic};
    bool all_pass = true;
    json certs = json::array();
    std::ostringstream os;
    for (long c : characteristics) {
        MinimalityCertificate cert = verify_minimal_generation(moh_generators(c));
        all_pass = all_pass && cert.pass;
        certs.push_back(certificate_json(cert));
        os << certificate_text(cert);
    }
    if (opt.all) {
        emit(opt, json{{"command", "verify"}, {"all_pass", all_pass}, {"certificates", certs}},
             os.str());
    } else {
        emit(opt, certs[0], os.str());
    }
    return all_pass ? kExitPass : kExitVerificationFailure;
}

int run_sally(const Options& opt) {
    auto identities = sally_reduction_check(opt.characteristic);
    json list = json::array();
    std::ostringstream os;
    for (const auto& identity : identities) {
        list.push_back(identity.description);
        os << "verified: " << identity.description << "\n";
    }
    json j{{"command", "sally"}, {"characteristic", opt.characteristic}, {"identities", list}};
    emit(opt, j, os.str());
    return kExitPass;
}

void add_common(CLI::App* cmd, Options& opt, bool with_char = true) {
    if (with_char) {
        cmd->add_option("--char", opt.characteristic, "field characteristic (0 or a prime)")
            ->default_val(0);
    }
    cmd->add_option("--format", opt.format, "output format")
        ->check(CLI::IsMember({"text", "json"}))
        ->default_val("text");
}

void add_moh(CLI::App* cmd, Options& opt) {
    cmd->add_option("--n", opt.n, "odd parameter n of the map")->default_val(3);
    cmd->add_option("--lambda", opt.lambda, "exponent shift lambda")->default_val(25);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "mohpoly: exact verification of minimal generating sets and standard bases for\n"
        "the kernels of monomial-curve maps in a local power series ring.\n"
        "Polynomials are written like \"3y^3 - 4xyz + x^4\" (exponents need '^',\n"
        "'*' optional); fixture names f1..f4, g1, g2, h1..h3 resolve anywhere."};
    app.require_subcommand(1);
    Options opt;

    CLI::App* factor = app.add_subcommand("factor", "factorizations of a value in a semigroup");
    factor->add_option("--gens", opt.gens, "semigroup generators")->delimiter(',');
    factor->add_option("--value", opt.value, "value to factor")->required();
    add_common(factor, opt, false);

    CLI::App* wbasis = app.add_subcommand("wbasis", "monomials of a given sigma-weight");
    wbasis->add_option("--gens", opt.gens, "weights")->delimiter(',');
    wbasis->add_option("--value", opt.value, "weight r")->required();
    add_common(wbasis, opt, false);

    CLI::App* vr = app.add_subcommand("vr", "constraint-system span containing V_r");
    vr->add_option("--value", opt.value, "weight r")->required();
    add_moh(vr, opt);
    add_common(vr, opt);

    CLI::App* tail = app.add_subcommand("tail", "complete a sigma-form to a kernel element");
    tail->add_option("--poly", opt.poly, "sigma-homogeneous polynomial")->required();
    tail->add_option("--max-sord", opt.max_sord, "tail sigma-order bound");
    add_moh(tail, opt);
    add_common(tail, opt);

    CLI::App* eval = app.add_subcommand("eval", "image under the parametrization");
    eval->add_option("--poly", opt.poly, "polynomial or fixture name")->required();
    add_moh(eval, opt);
    add_common(eval, opt);

    CLI::App* nf = app.add_subcommand("nf", "Mora normal form with standard representation");
    nf->add_option("--poly", opt.poly, "polynomial to reduce")->required();
    nf->add_option("--against", opt.against, "generator list")->delimiter(',')->required();
    add_common(nf, opt);

    CLI::App* spoly_cmd = app.add_subcommand("spoly", "S-polynomial of two polynomials");
    spoly_cmd->add_option("--poly", opt.poly, "first polynomial")->required();
    spoly_cmd->add_option("--against", opt.against, "second polynomial")
        ->delimiter(',')
        ->required();
    add_common(spoly_cmd, opt);

    CLI::App* std_cmd = app.add_subcommand("std", "Mora-Buchberger standard basis");
    std_cmd->add_option("--against", opt.against, "generator list")->delimiter(',')->required();
    add_common(std_cmd, opt);

    CLI::App* stdcheck = app.add_subcommand("stdcheck", "Buchberger criterion with pair report");
    stdcheck->add_option("--against", opt.against, "generator list")->delimiter(',')->required();
    add_common(stdcheck, opt);

    CLI::App* length = app.add_subcommand("length", "standard-monomial count of a monomial ideal");
    length->add_option("--against", opt.against, "monomial generators")->delimiter(',')->required();
    length->add_option("--vars", opt.vars, "variable list")->default_val("x,z");
    add_common(length, opt, false);

    CLI::App* lowerbound =
        app.add_subcommand("lowerbound", "certified minimal-generator lower bound");
    add_moh(lowerbound, opt);
    add_common(lowerbound, opt);

    CLI::App* verify = app.add_subcommand("verify", "full minimal-generation verification");
    verify->add_flag("--all", opt.all, "run characteristics 0, 2, 3, 5, 7");
    add_common(verify, opt);

    CLI::App* sally = app.add_subcommand("sally", "reduction identities mod p against the fixtures");
    add_common(sally, opt);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitPass : kExitUsage;
    }

    try {
        if (factor->parsed()) return run_factor(opt);
        if (wbasis->parsed()) return run_wbasis(opt);
        if (vr->parsed()) return run_vr(opt);
        if (tail->parsed()) return run_tail(opt);
        if (eval->parsed()) return run_eval(opt);
        if (nf->parsed()) return run_nf(opt);
        if (spoly_cmd->parsed()) return run_spoly(opt);
        if (std_cmd->parsed()) return run_std(opt);
        if (stdcheck->parsed()) return run_stdcheck(opt);
        if (length->parsed()) return run_length(opt);
        if (lowerbound->parsed()) return run_lowerbound(opt);
        if (verify->parsed()) return run_verify(opt);
        if (sally->parsed()) return run_sally(opt);
    } catch (const NotArtinian& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitVerificationFailure;
    } catch (const NotFoundWithinBound& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitVerificationFailure;
    } catch (const IdentityFailed& e) {
        std::cerr << "identity failed: " << e.what() << "\n";
        return kExitVerificationFailure;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
