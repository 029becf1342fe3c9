#ifndef MOHPOLY_MORA_HPP
#define MOHPOLY_MORA_HPP

#include <vector>

#include "mohpoly/poly.hpp"

namespace mohpoly {

/// Transcript of one Mora division: u*f = sum(quotients[i]*gens[i]) + remainder
/// with LM(u) = 1. The intermediate polynomials appended to the working set
/// during the run are kept so the weak standard representation can be printed
/// and replayed.
struct MoraTrace {
    Polynomial u;
    std::vector<Polynomial> quotients;  // one per input generator
    Polynomial remainder;
    std::vector<Polynomial> extended_set;
    long steps = 0;
};

/// Mora normal form with minimal-ecart divisor selection (ties broken by
/// list position). While some member of the working set divides LM(h), reduce
/// by the divisor of minimal ecart, first appending h itself to the working
/// set whenever the chosen divisor's ecart exceeds ecart(h). Back-substitution
/// over the transcript recovers the weak standard representation indexed by
/// the original generators only.
MoraTrace mora_normal_form(const Polynomial& f, const std::vector<Polynomial>& gens);

struct StandardBasis {
    std::vector<Polynomial> elements;           // includes the source generators
    std::vector<Polynomial> source_generators;
};

/// Mora-Buchberger completion: append nonzero normal forms of S-pairs until
/// every pair reduces to zero. Pair processing order is deterministic.
StandardBasis standard_basis(const std::vector<Polynomial>& gens);

struct PairReport {
    std::size_t i;
    std::size_t j;
    Polynomial remainder;
};

struct BasisCheck {
    bool is_basis;
    std::vector<PairReport> pairs;
};

/// Buchberger's criterion test with a per-pair remainder report.
BasisCheck is_standard_basis(const std::vector<Polynomial>& gens);

/// Minimal generating monomials of the leading ideal, descending under >_ds.
std::vector<Exponents> leading_ideal(const std::vector<Polynomial>& polys);

/// Number of standard monomials of a monomial ideal containing a pure power
/// of every variable. Throws NotArtinian otherwise.
long artinian_length(const std::vector<Exponents>& ideal_gens, int dim);

}  // namespace mohpoly

#endif
