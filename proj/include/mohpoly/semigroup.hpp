#ifndef MOHPOLY_SEMIGROUP_HPP
#define MOHPOLY_SEMIGROUP_HPP

#include <vector>

#include "mohpoly/errors.hpp"

namespace mohpoly {

/// All alpha in N^d with sum(alpha_i * weights_i) = r, for an arbitrary
/// tuple of positive weights, sorted lexicographically. Requires r >= 0.
std::vector<std::vector<unsigned>> weighted_factorizations(const std::vector<long>& weights, long r);

/// Numerical semigroup <n_1,...,n_d> with gcd(n_1,...,n_d) = 1.
class NumericalSemigroup {
   public:
    explicit NumericalSemigroup(std::vector<long> generators);

    const std::vector<long>& generators() const { return generators_; }

    /// True iff r has at least one factorization; negative r is never in S.
    bool contains(long r) const;

    /// All alpha with sum(alpha_i * n_i) = r, sorted lexicographically.
    /// Empty iff r is not in S; {(0,...,0)} for r = 0. Requires r >= 0.
    std::vector<std::vector<unsigned>> factorizations(long r) const;

    /// Largest integer not in S, via the Apery set modulo the smallest
    /// generator. Throws NoGaps when 1 is a generator.
    long frobenius() const;

   private:
    std::vector<long> generators_;
};

}  // namespace mohpoly

#endif
