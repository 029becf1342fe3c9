#include "mohpoly/mora.hpp"

#include <algorithm>
#include <deque>
#include <optional>

namespace mohpoly {

namespace {

constexpr long kStepCeiling = 1'000'000;

struct WorkEntry {
    Polynomial poly;
    Exponents lm;
    Scalar lc;
    unsigned ecart;
    // expansion of the entry in terms of f and the original generators:
    // poly = f_coeff * f - sum(gen_coeffs[i] * gens[i]); originals carry
    // f_coeff = 0 and a unit vector instead.
    bool is_original;
    std::size_t original_index;
    Polynomial f_coeff;
    std::vector<Polynomial> gen_coeffs;
};

}  // namespace

MoraTrace mora_normal_form(const Polynomial& f, const std::vector<Polynomial>& gens) {
    if (gens.empty()) throw EmptyGeneratorList("empty generator list");
    const RingSpec& ring = f.ring();
    for (const auto& g : gens) {
        if (g.is_zero()) throw ZeroPolynomial("zero generator");
        if (g.ring() != ring) throw RingMismatch("generators from a different ring");
    }

    Scalar one = Scalar::one(ring.field);
    Polynomial unit_poly = Polynomial::constant(ring, one);
    std::vector<Polynomial> no_quotients(gens.size(), Polynomial::zero(ring));
    if (f.is_zero()) {
        return MoraTrace{unit_poly, std::move(no_quotients), f, {}, 0};
    }

    std::vector<WorkEntry> work;
    work.reserve(gens.size());
    for (std::size_t i = 0; i < gens.size(); ++i) {
        auto [lm, lc] = gens[i].leading_term();
        work.push_back(WorkEntry{gens[i], lm, lc, gens[i].ecart(), true, i, Polynomial::zero(ring), {}});
    }
    std::vector<Polynomial> extended;

    Polynomial h = f;
    // current expansion: h = u_cur * f - sum(a_cur[i] * gens[i])
    Polynomial u_cur = unit_poly;
    std::vector<Polynomial> a_cur(gens.size(), Polynomial::zero(ring));

    long steps = 0;
    while (!h.is_zero()) {
        auto [lm_h, lc_h] = h.leading_term();
        std::optional<std::size_t> chosen;
        for (std::size_t i = 0; i < work.size(); ++i) {
            if (!divides(work[i].lm, lm_h)) continue;
            if (!chosen || work[i].ecart < work[*chosen].ecart) chosen = i;
        }
        if (!chosen) break;

        if (++steps > kStepCeiling) throw InternalError("division step ceiling exceeded");

        std::size_t chosen_idx = *chosen;
        if (work[chosen_idx].ecart > h.ecart()) {
            WorkEntry added{h, lm_h, lc_h, h.ecart(), false, 0, u_cur, a_cur};
            extended.push_back(h);
            work.push_back(std::move(added));
        }
        const WorkEntry& d = work[chosen_idx];

        Exponents q_mono = exponent_diff(lm_h, d.lm);
        Scalar q_coeff = lc_h / d.lc;
        h -= d.poly.term_multiple(q_mono, q_coeff);
        if (d.is_original) {
            a_cur[d.original_index].add_term(q_mono, q_coeff);
        } else {
            u_cur -= d.f_coeff.term_multiple(q_mono, q_coeff);
            for (std::size_t i = 0; i < gens.size(); ++i) {
                a_cur[i] -= d.gen_coeffs[i].term_multiple(q_mono, q_coeff);
            }
        }
    }

    if (u_cur.is_zero() || total_degree(u_cur.leading_monomial()) != 0) {
        throw InternalError("division lost its unit multiplier");
    }
    return MoraTrace{std::move(u_cur), std::move(a_cur), std::move(h), std::move(extended), steps};
}

namespace {

void validate_generators(const std::vector<Polynomial>& gens) {
    if (gens.empty()) throw EmptyGeneratorList("empty generator list");
    for (const auto& g : gens) {
        if (g.is_zero()) throw ZeroPolynomial("zero generator");
    }
}

}  // namespace

StandardBasis standard_basis(const std::vector<Polynomial>& gens) {
    validate_generators(gens);
    std::vector<Polynomial> basis = gens;
    std::deque<std::pair<std::size_t, std::size_t>> queue;
    for (std::size_t i = 0; i < basis.size(); ++i) {
        for (std::size_t j = i + 1; j < basis.size(); ++j) queue.emplace_back(i, j);
    }
    while (!queue.empty()) {
        auto [i, j] = queue.front();
        queue.pop_front();
        Polynomial sp = spoly(basis[i], basis[j]);
        if (sp.is_zero()) continue;
        Polynomial rem = mora_normal_form(sp, basis).remainder;
        if (rem.is_zero()) continue;
        std::size_t k = basis.size();
        basis.push_back(std::move(rem));
        for (std::size_t l = 0; l < k; ++l) queue.emplace_back(l, k);
    }
    return StandardBasis{std::move(basis), gens};
}

BasisCheck is_standard_basis(const std::vector<Polynomial>& gens) {
    validate_generators(gens);
    BasisCheck check{true, {}};
    for (std::size_t i = 0; i < gens.size(); ++i) {
        for (std::size_t j = i + 1; j < gens.size(); ++j) {
            Polynomial sp = spoly(gens[i], gens[j]);
            Polynomial rem = sp.is_zero() ? sp : mora_normal_form(sp, gens).remainder;
            if (!rem.is_zero()) check.is_basis = false;
            check.pairs.push_back(PairReport{i, j, std::move(rem)});
        }
    }
    return check;
}

std::vector<Exponents> leading_ideal(const std::vector<Polynomial>& polys) {
    std::vector<Exponents> lms;
    for (const auto& p : polys) {
        if (!p.is_zero()) lms.push_back(p.leading_monomial());
    }
    std::sort(lms.begin(), lms.end());
    lms.erase(std::unique(lms.begin(), lms.end()), lms.end());
    std::vector<Exponents> minimal;
    for (const auto& m : lms) {
        bool redundant = false;
        for (const auto& other : lms) {
            if (other != m && divides(other, m)) {
                redundant = true;
                break;
            }
        }
        if (!redundant) minimal.push_back(m);
    }
    std::sort(minimal.begin(), minimal.end(), greater_ds);
    return minimal;
}

long artinian_length(const std::vector<Exponents>& ideal_gens, int dim) {
    for (const auto& g : ideal_gens) {
        if (static_cast<int>(g.size()) != dim) throw DimensionMismatch("generator dimension mismatch");
        if (total_degree(g) == 0) return 0;  // the unit ideal
    }
    std::vector<unsigned> bound(dim, 0);
    std::vector<bool> have_pure(dim, false);
    for (const auto& g : ideal_gens) {
        int support_var = -1;
        bool pure = true;
        for (int v = 0; v < dim; ++v) {
            if (g[v] == 0) continue;
            if (support_var >= 0) {
                pure = false;
                break;
            }
            support_var = v;
        }
        if (pure && support_var >= 0) {
            if (!have_pure[support_var] || g[support_var] < bound[support_var]) {
                bound[support_var] = g[support_var];
            }
            have_pure[support_var] = true;
        }
    }
    for (int v = 0; v < dim; ++v) {
        if (!have_pure[v]) {
            throw NotArtinian("no pure power of " + variable_names(dim)[v] + " in the ideal");
        }
    }
    long count = 0;
    Exponents e(dim, 0);
    for (;;) {
        bool standard = true;
        for (const auto& g : ideal_gens) {
            if (divides(g, e)) {
                standard = false;
                break;
            }
        }
        if (standard) ++count;
        int v = 0;
        while (v < dim) {
            if (++e[v] < bound[v]) break;
            e[v] = 0;
            ++v;
        }
        if (v == dim) break;
    }
    return count;
}

}  // namespace mohpoly
