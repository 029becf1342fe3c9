#ifndef MOHPOLY_PARAM_HPP
#define MOHPOLY_PARAM_HPP

#include <optional>
#include <vector>

#include "mohpoly/sigma.hpp"

namespace mohpoly {

/// Substitution map into univariate t-polynomials. The order of the i-th
/// image must be scale * n_i for one common scale >= 1, so that weighted
/// orders transport to t-orders.
class Parametrization {
   public:
    Parametrization(std::vector<Polynomial> images, SigmaContext ctx);

    const SigmaContext& context() const { return ctx_; }
    const std::vector<Polynomial>& images() const { return images_; }
    long scale() const { return scale_; }
    const RingSpec& target_ring() const { return target_ring_; }

    /// Exact substitution of the images into f.
    Polynomial evaluate(const Polynomial& f) const;

   private:
    std::vector<Polynomial> images_;
    SigmaContext ctx_;
    long scale_;
    RingSpec target_ring_;
};

/// Parameters of the Moh map x -> t^{nm} + t^{nm+lambda}, y -> t^{(n+1)m},
/// z -> t^{(n+2)m} with m = (n+1)/2. Construction enforces what the V_r
/// constraint derivation needs: gcd(lambda, m) = 1 and m does not divide
/// lambda. The stronger textbook bound lambda > n(n+1)m is only reported.
struct MohParams {
    long n;
    long m;
    long lambda;
    FieldSpec field;

    MohParams(long n_, long lambda_, FieldSpec field_);

    static MohParams classic(const FieldSpec& field) { return MohParams(3, 25, field); }

    bool lambda_below_moh_bound() const { return lambda <= n * (n + 1) * m; }

    std::vector<long> weights() const { return {n, n + 1, n + 2}; }
    RingSpec ring() const { return RingSpec{3, field}; }
    SigmaContext context() const { return SigmaContext(weights()); }
    Parametrization map() const;
};

/// A polynomial in the kernel of the map, with its (verified) zero image.
struct KernelCertificate {
    Polynomial element;  // nonzero
    Polynomial image;    // identically zero, kept as evidence
    long sord;           // sigma-order of the element
};

/// Necessary linear conditions on V_r: the coefficients of t^{mr} and
/// t^{mr+lambda} of the image of an element of W_r vanish. Returns a basis
/// of the nullspace of the corresponding 2 x |F(r,S)| system, coordinates
/// ordered as w_basis(r). The span contains V_r. Throws NotInSemigroup.
std::vector<std::vector<Scalar>> vr_upper_bound(const MohParams& mp, long r);

/// Searches a tail h supported on the W_s with sord(g) < s <= max_sord such
/// that g + h lies in the kernel, by solving one exact linear system over
/// all candidate coefficients. Returns nullopt when no tail exists within
/// the bound. Requires g nonzero and sigma-homogeneous.
std::optional<Polynomial> complete_tail(const MohParams& mp, const Polynomial& g, long max_sord);

/// Tail bound used by the minimal sigma-order scan: covers every witness of
/// the n = 3 family (tails of weight 34..40 at r in {9,10,12}).
inline long default_tail_bound(long r) { return 4 * r + 10; }

struct MinSigmaOrder {
    long s;
    KernelCertificate witness;
    /// True when vr_upper_bound was empty for every r < s, which proves that
    /// no kernel element of smaller sigma-order exists.
    bool below_proven_zero;
};

/// Smallest r <= r_max admitting a kernel certificate, found by scanning
/// the V_r constraint spans and completing tails. Throws
/// NotFoundWithinBound when the scan exhausts r_max.
MinSigmaOrder find_min_sigma_order(const MohParams& mp, long r_max);

}  // namespace mohpoly

#endif
