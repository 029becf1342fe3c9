#include "mohpoly/param.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace mohpoly {

Parametrization::Parametrization(std::vector<Polynomial> images, SigmaContext ctx)
    : images_(std::move(images)),
      ctx_(std::move(ctx)),
      scale_(0),
      target_ring_{1, images_.empty() ? FieldSpec::rationals() : images_.front().ring().field} {
    if (images_.size() != static_cast<std::size_t>(ctx_.dim())) {
        throw DimensionMismatch("one image per variable required");
    }
    for (const auto& img : images_) {
        if (img.is_zero()) throw Error("parametrization images must be nonzero");
        if (img.ring() != target_ring_) throw RingMismatch("images must be univariate over one field");
    }
    long n0 = ctx_.weights().front();
    long o0 = images_.front().ord();
    if (o0 % n0 != 0 || o0 == 0) throw Error("image orders are not a common multiple of the weights");
    scale_ = o0 / n0;
    for (std::size_t i = 0; i < images_.size(); ++i) {
        if (static_cast<long>(images_[i].ord()) != scale_ * ctx_.weights()[i]) {
            throw Error("image orders are not a common multiple of the weights");
        }
    }
}

Polynomial Parametrization::evaluate(const Polynomial& f) const {
    if (f.ring().dim != ctx_.dim() || f.ring().field != target_ring_.field) {
        throw RingMismatch("polynomial does not match the parametrization's source ring");
    }
    // per-call power cache keeps evaluate a pure function
    std::vector<std::vector<Polynomial>> powers(images_.size());
    auto power = [&](std::size_t i, unsigned e) -> const Polynomial& {
        auto& row = powers[i];
        if (row.empty()) row.push_back(Polynomial::constant(target_ring_, Scalar::one(target_ring_.field)));
        while (row.size() <= e) row.push_back(row.back() * images_[i]);
        return row[e];
    };
    Polynomial out(target_ring_);
    for (const auto& [e, c] : f.terms()) {
        Polynomial term = Polynomial::constant(target_ring_, c);
        for (std::size_t i = 0; i < images_.size(); ++i) {
            if (e[i] > 0) term = term * power(i, e[i]);
        }
        out += term;
    }
    return out;
}

MohParams::MohParams(long n_, long lambda_, FieldSpec field_)
    : n(n_), m((n_ + 1) / 2), lambda(lambda_), field(field_) {
    if (n < 3 || n % 2 == 0) throw Error("n must be an odd integer >= 3");
    if (lambda < 1) throw Error("lambda must be positive");
    if (std::gcd(lambda, m) != 1 || lambda % m == 0) {
        throw Error("lambda must be coprime to m and not a multiple of m");
    }
}

Parametrization MohParams::map() const {
    RingSpec t_ring{1, field};
    Scalar one = Scalar::one(field);
    Polynomial x_img(t_ring);
    x_img.add_term({static_cast<unsigned>(n * m)}, one);
    x_img.add_term({static_cast<unsigned>(n * m + lambda)}, one);
    Polynomial y_img = Polynomial::monomial(t_ring, {static_cast<unsigned>((n + 1) * m)}, one);
    Polynomial z_img = Polynomial::monomial(t_ring, {static_cast<unsigned>((n + 2) * m)}, one);
    return Parametrization({x_img, y_img, z_img}, context());
}

// Only the k = 0 and k = 1 coefficient rows enter the constraint system:
// a tail of strictly larger weight never reaches the exponents m*r and
// m*r + lambda (m does not divide lambda), so those two coefficients of the
// image of g must vanish on the nose. Rows k >= 2 can be cancelled by tails
// and would cut the span incorrectly.
constexpr std::size_t kVrConstraintRows = 2;

std::vector<std::vector<Scalar>> vr_upper_bound(const MohParams& mp, long r) {
    if (r < 1) throw NotInSemigroup("r must be a positive element of the semigroup");
    SigmaContext ctx = mp.context();
    std::vector<Exponents> basis = w_basis(ctx, r);
    if (basis.empty()) {
        throw NotInSemigroup(std::to_string(r) + " is not in the semigroup");
    }
    Matrix system(kVrConstraintRows, basis.size(), mp.field);
    for (std::size_t j = 0; j < basis.size(); ++j) {
        unsigned long x_exp = basis[j][0];
        system.at(0, j) = lucas_binomial(x_exp, 0, mp.field);  // all ones
        system.at(1, j) = lucas_binomial(x_exp, 1, mp.field);
    }
    return system.nullspace();
}

namespace {

using SparseVec = std::map<long, Scalar>;          // t-exponent -> coefficient
using Combo = std::map<std::size_t, Scalar>;       // candidate class -> coefficient

void axpy(SparseVec& target, const Scalar& c, const SparseVec& source) {
    for (const auto& [k, v] : source) {
        auto it = target.find(k);
        if (it == target.end()) {
            Scalar nv = c * v;
            if (!nv.is_zero()) target.emplace(k, nv);
        } else {
            it->second += c * v;
            if (it->second.is_zero()) target.erase(it);
        }
    }
}

void axpy(Combo& target, const Scalar& c, const Combo& source) {
    for (const auto& [k, v] : source) {
        auto it = target.find(k);
        if (it == target.end()) {
            Scalar nv = c * v;
            if (!nv.is_zero()) target.emplace(k, nv);
        } else {
            it->second += c * v;
            if (it->second.is_zero()) target.erase(it);
        }
    }
}

struct EchelonEntry {
    SparseVec column;  // lead coefficient normalized to 1
    Combo combo;       // expression of the column in the original candidates
};

}  // namespace

std::optional<Polynomial> complete_tail(const MohParams& mp, const Polynomial& g, long max_sord) {
    if (g.is_zero()) throw ZeroPolynomial("tail completion of the zero polynomial");
    SigmaContext ctx = mp.context();
    SigmaSplit split = sigma_order_and_split(ctx, g);
    if (!split.tail.is_zero()) throw NotSigmaHomogeneous("g must equal its sigma-leading form");
    long r = split.sord;
    if (r >= max_sord) throw Error("max_sord must exceed the sigma-order of g");

    Parametrization rho = mp.map();
    const FieldSpec& field = mp.field;

    // Candidate monomials grouped by (weight s, x-exponent a): the image of
    // x^a y^b z^c is t^{m s} (1 + t^lambda)^a, so all members of a class share
    // one column. One representative per class (the >_ds-greatest) suffices.
    // Column order: ascending s, then ascending a, which prefers x-free tails.
    std::vector<Exponents> representative;
    std::vector<SparseVec> columns;
    for (long s = r + 1; s <= max_sord; ++s) {
        std::vector<Exponents> basis = w_basis(ctx, s);
        std::map<unsigned, Exponents> by_x_exp;  // a -> representative
        for (const auto& e : basis) {            // basis is >_ds-descending
            by_x_exp.try_emplace(e[0], e);
        }
        for (const auto& [a, rep] : by_x_exp) {
            SparseVec col;
            for (unsigned k = 0; k <= a; ++k) {
                Scalar c = lucas_binomial(a, k, field);
                if (!c.is_zero()) col.emplace(mp.m * s + mp.lambda * k, c);
            }
            representative.push_back(rep);
            columns.push_back(std::move(col));
        }
    }

    SparseVec target;  // -rho(g)
    Polynomial g_image = rho.evaluate(g);
    for (const auto& [e, c] : g_image.terms()) {
        target.emplace(static_cast<long>(e[0]), -c);
    }

    // Column echelon over the sparse columns, tracking combinations.
    std::map<long, EchelonEntry> echelon;
    auto reduce = [&](SparseVec& v, Combo& combo) {
        while (!v.empty()) {
            long lead = v.begin()->first;
            auto it = echelon.find(lead);
            if (it == echelon.end()) break;
            Scalar c = v.begin()->second;
            axpy(v, -c, it->second.column);
            axpy(combo, c, it->second.combo);
        }
    };

    for (std::size_t j = 0; j < columns.size(); ++j) {
        SparseVec v = columns[j];
        Combo combo{{j, Scalar::one(field)}};  // v = sum(combo * original columns)
        while (!v.empty()) {
            long lead = v.begin()->first;
            auto it = echelon.find(lead);
            if (it == echelon.end()) break;
            Scalar c = v.begin()->second;
            axpy(v, -c, it->second.column);
            axpy(combo, -c, it->second.combo);
        }
        if (v.empty()) continue;
        Scalar lead_inv = v.begin()->second.inverse();
        SparseVec norm;
        for (const auto& [k, val] : v) norm.emplace(k, val * lead_inv);
        Combo norm_combo;
        for (const auto& [k, val] : combo) norm_combo.emplace(k, val * lead_inv);
        long pivot = norm.begin()->first;
        echelon.emplace(pivot, EchelonEntry{std::move(norm), std::move(norm_combo)});
    }

    SparseVec residual = target;
    Combo solution;
    reduce(residual, solution);
#ifdef MOHPOLY_DEBUG_TAIL
    std::fprintf(stderr, "[tail] r=%ld bound=%ld columns=%zu pivots=%zu residual=%zu", r,
                 max_sord, columns.size(), echelon.size(), residual.size());
    if (!residual.empty()) std::fprintf(stderr, " stuck_at=%ld", residual.begin()->first);
    std::fprintf(stderr, "\n");
#endif
    if (!residual.empty()) return std::nullopt;

    Polynomial tail(g.ring());
    for (const auto& [j, c] : solution) {
        tail.add_term(representative[j], c);
    }
    return tail;
}

MinSigmaOrder find_min_sigma_order(const MohParams& mp, long r_max) {
    SigmaContext ctx = mp.context();
    bool below_proven_zero = true;
    for (long r = 1; r <= r_max; ++r) {
        if (!ctx.semigroup().contains(r)) continue;
        std::vector<std::vector<Scalar>> span = vr_upper_bound(mp, r);
        if (span.empty()) continue;
        std::vector<Exponents> basis = w_basis(ctx, r);
        for (const auto& coords : span) {
            Polynomial g = combine(mp.ring(), basis, coords);
            std::optional<Polynomial> tail = complete_tail(mp, g, default_tail_bound(r));
            if (tail) {
                Polynomial element = g + *tail;
                Polynomial image = mp.map().evaluate(element);
                return MinSigmaOrder{r, KernelCertificate{element, image, r}, below_proven_zero};
            }
        }
        below_proven_zero = false;  // nonzero span but no certificate at this r
    }
    throw NotFoundWithinBound("no kernel certificate with sigma-order <= " + std::to_string(r_max));
}

}  // namespace mohpoly
