#include "mohpoly/sigma.hpp"

#include <algorithm>
#include <limits>

namespace mohpoly {

SigmaContext::SigmaContext(std::vector<long> weights)
    : weights_(std::move(weights)), semigroup_(weights_) {}

long SigmaContext::weight_of(const Exponents& e) const {
    if (e.size() != weights_.size()) throw DimensionMismatch("monomial dimension mismatch");
    long w = 0;
    for (std::size_t i = 0; i < e.size(); ++i) w += static_cast<long>(e[i]) * weights_[i];
    return w;
}

long sigma_order(const SigmaContext& ctx, const Polynomial& f) {
    if (f.is_zero()) throw ZeroPolynomial("sigma-order of the zero polynomial");
    long best = std::numeric_limits<long>::max();
    for (const auto& [e, c] : f.terms()) best = std::min(best, ctx.weight_of(e));
    return best;
}

SigmaSplit sigma_order_and_split(const SigmaContext& ctx, const Polynomial& f) {
    long sord = sigma_order(ctx, f);
    Polynomial sigma_part(f.ring());
    Polynomial tail(f.ring());
    for (const auto& [e, c] : f.terms()) {
        if (ctx.weight_of(e) == sord) {
            sigma_part.add_term(e, c);
        } else {
            tail.add_term(e, c);
        }
    }
    return SigmaSplit{sord, std::move(sigma_part), std::move(tail)};
}

std::vector<Exponents> w_basis(const SigmaContext& ctx, long r) {
    if (r < 0) return {};
    // factorizations taken against the weights tuple in variable order
    std::vector<Exponents> out = weighted_factorizations(ctx.weights(), r);
    std::sort(out.begin(), out.end(), greater_ds);
    return out;
}

Polynomial combine(const RingSpec& ring, const std::vector<Exponents>& basis,
                   const std::vector<Scalar>& coords) {
    if (basis.size() != coords.size()) throw DimensionMismatch("basis/coordinate size mismatch");
    Polynomial out(ring);
    for (std::size_t i = 0; i < basis.size(); ++i) out.add_term(basis[i], coords[i]);
    return out;
}

}  // namespace mohpoly
