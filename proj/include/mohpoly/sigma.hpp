#ifndef MOHPOLY_SIGMA_HPP
#define MOHPOLY_SIGMA_HPP

#include <vector>

#include "mohpoly/poly.hpp"
#include "mohpoly/semigroup.hpp"

namespace mohpoly {

/// Weights (n_1,...,n_d) of the morphism x_i -> x_i^{n_i} together with the
/// numerical semigroup they generate. The weighted order of a monomial is
/// computed directly from exponent dot products; the substitution itself is
/// never materialized.
class SigmaContext {
   public:
    explicit SigmaContext(std::vector<long> weights);

    int dim() const { return static_cast<int>(weights_.size()); }
    const std::vector<long>& weights() const { return weights_; }
    const NumericalSemigroup& semigroup() const { return semigroup_; }

    long weight_of(const Exponents& e) const;

   private:
    std::vector<long> weights_;
    NumericalSemigroup semigroup_;
};

struct SigmaSplit {
    long sord;             // weighted order, an element of S
    Polynomial sigma_part; // the sigma-leading form f^sigma, nonzero
    Polynomial tail;       // f - f^sigma; zero or of strictly larger sigma-order
};

/// Weighted order of f (f != 0): min of weight_of over the support.
long sigma_order(const SigmaContext& ctx, const Polynomial& f);

/// Splits f into its sigma-leading form and tail.
SigmaSplit sigma_order_and_split(const SigmaContext& ctx, const Polynomial& f);

/// Monomials of sigma-weight r, sorted descending under >_ds. Empty when r
/// is not in S; the single monomial 1 when r = 0.
std::vector<Exponents> w_basis(const SigmaContext& ctx, long r);

/// Linear combination of the W_r basis with the given coordinates.
Polynomial combine(const RingSpec& ring, const std::vector<Exponents>& basis,
                   const std::vector<Scalar>& coords);

}  // namespace mohpoly

#endif
