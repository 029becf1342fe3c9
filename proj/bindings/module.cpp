#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "mohpoly/mohlab.hpp"

namespace py = pybind11;
using namespace mohpoly;

namespace {

FieldSpec field_of(long characteristic) { return FieldSpec::of_characteristic(characteristic); }

MohParams params_of(long characteristic, long n, long lambda) {
    return MohParams(n, lambda, field_of(characteristic));
}

Polynomial resolve(const std::string& text, const FieldSpec& field) {
    for (const auto& [name, source] : fixture_sources()) {
        if (text == name) return parse_poly(source, 3, field);
    }
    return parse_poly(text, 3, field);
}

std::vector<Polynomial> resolve_all(const std::vector<std::string>& texts, const FieldSpec& field) {
    std::vector<Polynomial> out;
    for (const auto& t : texts) out.push_back(resolve(t, field));
    return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Exact local computer algebra for the kernels of monomial-curve maps: "
              "semigroup factorizations, sigma-leading forms, kernel certificates, "
              "Mora normal forms, standard bases and Artinian lengths.";

    py::register_exception<Error>(m, "MohpolyError");

    m.def(
        "factorizations",
        [](std::vector<long> gens, long r) { return NumericalSemigroup(std::move(gens)).factorizations(r); },
        py::arg("gens"), py::arg("r"),
        "All exponent vectors alpha with sum(alpha_i * gens_i) = r, lexicographic.");

    m.def(
        "frobenius",
        [](std::vector<long> gens) { return NumericalSemigroup(std::move(gens)).frobenius(); },
        py::arg("gens"), "Largest integer not in the semigroup.");

    m.def(
        "w_basis",
        [](std::vector<long> weights, long r) {
            SigmaContext ctx(std::move(weights));
            std::vector<std::string> out;
            for (const auto& e : w_basis(ctx, r)) out.push_back(monomial_to_string(e, ctx.dim()));
            return out;
        },
        py::arg("weights"), py::arg("r"),
        "Monomials of sigma-weight r, descending under the local order.");

    m.def(
        "sigma_split",
        [](const std::string& poly, long characteristic, std::vector<long> weights) {
            FieldSpec field = field_of(characteristic);
            SigmaContext ctx(std::move(weights));
            SigmaSplit split = sigma_order_and_split(ctx, resolve(poly, field));
            return py::make_tuple(split.sord, split.sigma_part.to_string(), split.tail.to_string());
        },
        py::arg("poly"), py::arg("characteristic") = 0,
        py::arg("weights") = std::vector<long>{3, 4, 5},
        "(sigma-order, sigma-leading form, tail) of a polynomial.");

    m.def(
        "evaluate",
        [](const std::string& poly, long characteristic, long n, long lambda) {
            MohParams mp = params_of(characteristic, n, lambda);
            return mp.map().evaluate(resolve(poly, mp.field)).to_string();
        },
        py::arg("poly"), py::arg("characteristic") = 0, py::arg("n") = 3, py::arg("lam") = 25,
        "Image of a polynomial under the map, as a t-polynomial string.");

    m.def(
        "vr_upper_bound",
        [](long r, long characteristic, long n, long lambda) {
            MohParams mp = params_of(characteristic, n, lambda);
            std::vector<std::string> out;
            std::vector<Exponents> basis = w_basis(mp.context(), r);
            for (const auto& vec : vr_upper_bound(mp, r)) {
                out.push_back(combine(mp.ring(), basis, vec).to_string());
            }
            return out;
        },
        py::arg("r"), py::arg("characteristic") = 0, py::arg("n") = 3, py::arg("lam") = 25,
        "Generators of the span containing V_r, as polynomial strings.");

    m.def(
        "complete_tail",
        [](const std::string& poly, long max_sord, long characteristic, long n,
           long lambda) -> py::object {
            MohParams mp = params_of(characteristic, n, lambda);
            auto tail = complete_tail(mp, resolve(poly, mp.field), max_sord);
            if (!tail) return py::none();
            return py::str(tail->to_string());
        },
        py::arg("poly"), py::arg("max_sord"), py::arg("characteristic") = 0, py::arg("n") = 3,
        py::arg("lam") = 25,
        "A tail completing the sigma-form to a kernel element, or None.");

    m.def(
        "find_min_sigma_order",
        [](long characteristic, long r_max, long n, long lambda) {
            MohParams mp = params_of(characteristic, n, lambda);
            MinSigmaOrder result = find_min_sigma_order(mp, r_max);
            return py::make_tuple(result.s, result.witness.element.to_string());
        },
        py::arg("characteristic") = 0, py::arg("r_max") = 20, py::arg("n") = 3,
        py::arg("lam") = 25,
        "(s, witness) for the smallest sigma-order of a kernel element.");

    m.def(
        "mora_nf",
        [](const std::string& poly, const std::vector<std::string>& against, long characteristic) {
            FieldSpec field = field_of(characteristic);
            MoraTrace trace = mora_normal_form(resolve(poly, field), resolve_all(against, field));
            py::dict out;
            out["remainder"] = trace.remainder.to_string();
            out["u"] = trace.u.to_string();
            std::vector<std::string> quotients;
            for (const auto& q : trace.quotients) quotients.push_back(q.to_string());
            out["quotients"] = quotients;
            out["steps"] = trace.steps;
            return out;
        },
        py::arg("poly"), py::arg("against"), py::arg("characteristic") = 0,
        "Mora normal form with the recovered weak standard representation.");

    m.def(
        "spoly",
        [](const std::string& f, const std::string& g, long characteristic) {
            FieldSpec field = field_of(characteristic);
            return spoly(resolve(f, field), resolve(g, field)).to_string();
        },
        py::arg("f"), py::arg("g"), py::arg("characteristic") = 0, "S-polynomial.");

    m.def(
        "standard_basis",
        [](const std::vector<std::string>& gens, long characteristic) {
            FieldSpec field = field_of(characteristic);
            StandardBasis sb = standard_basis(resolve_all(gens, field));
            std::vector<std::string> out;
            for (const auto& p : sb.elements) out.push_back(p.to_string());
            return out;
        },
        py::arg("gens"), py::arg("characteristic") = 0, "Mora-Buchberger completion.");

    m.def(
        "is_standard_basis",
        [](const std::vector<std::string>& gens, long characteristic) {
            FieldSpec field = field_of(characteristic);
            return is_standard_basis(resolve_all(gens, field)).is_basis;
        },
        py::arg("gens"), py::arg("characteristic") = 0,
        "Buchberger's criterion: every S-pair has Mora remainder zero.");

    m.def(
        "artinian_length",
        [](const std::vector<std::string>& monomials, long dim) {
            FieldSpec q = FieldSpec::rationals();
            std::vector<Exponents> gens;
            for (const auto& text : monomials) {
                Polynomial p = parse_poly(text, static_cast<int>(dim), q);
                if (p.term_count() != 1) throw Error("monomial generators expected");
                gens.push_back(p.terms().begin()->first);
            }
            return artinian_length(gens, static_cast<int>(dim));
        },
        py::arg("monomials"), py::arg("dim") = 2,
        "Standard-monomial count of an Artinian monomial ideal.");

    m.def(
        "lucas_binomial",
        [](unsigned long m_, unsigned long n_, long characteristic) {
            return lucas_binomial(m_, n_, field_of(characteristic)).to_string();
        },
        py::arg("m"), py::arg("n"), py::arg("characteristic") = 0,
        "Image of binom(m, n) in the field, as a string.");

    m.def(
        "moh_generators",
        [](long characteristic) {
            MohFixture fixture = moh_generators(characteristic);
            py::dict out;
            for (std::size_t i = 0; i < fixture.names.size(); ++i) {
                out[py::str(fixture.names[i])] = fixture.generators[i].to_string();
            }
            return out;
        },
        py::arg("characteristic"), "The built-in generator fixture for a characteristic.");

    m.def(
        "verify",
        [](long characteristic) {
            MinimalityCertificate cert = verify_minimal_generation(moh_generators(characteristic));
            return certificate_json(cert).dump();
        },
        py::arg("characteristic"),
        "Full minimal-generation verification; returns the certificate as a JSON string.");

    m.def(
        "sally_check",
        [](long p) {
            std::vector<std::string> out;
            for (const auto& identity : sally_reduction_check(p)) out.push_back(identity.description);
            return out;
        },
        py::arg("p"), "Verified reduction identities for p in {2, 3}.");

    m.def(
        "lower_bound",
        [](long characteristic, long n, long lambda) {
            MohParams mp = params_of(characteristic, n, lambda);
            LowerBoundResult lb = lower_bound(mp);
            py::dict out;
            out["s"] = lb.s;
            out["bound"] = lb.bound;
            py::dict per_r;
            for (const auto& est : lb.per_r) {
                py::dict entry;
                entry["dim_upper"] = est.dim_upper;
                entry["dim_certified"] = est.dim_certified;
                per_r[py::str(std::to_string(est.r))] = entry;
            }
            out["per_r"] = per_r;
            return out;
        },
        py::arg("characteristic") = 0, py::arg("n") = 3, py::arg("lam") = 25,
        "Certified minimal-generator lower bound with per-weight dimensions.");
}
