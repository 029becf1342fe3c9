#ifndef MOHPOLY_MOHLAB_HPP
#define MOHPOLY_MOHLAB_HPP

#include <string>
#include <vector>

#include "json.hpp"
#include "mohpoly/mora.hpp"
#include "mohpoly/param.hpp"

namespace mohpoly {

/// Built-in generator family for the n = 3 map (lambda = 25), one fixture
/// per characteristic. Characteristics p >= 5 reuse the integer generators
/// of the characteristic-zero fixture reduced mod p.
struct MohFixture {
    long characteristic;
    std::vector<std::string> names;       // f1..f4 / g1,g2 / h1..h3
    std::vector<Polynomial> generators;
    MohParams params;
};

MohFixture moh_generators(long characteristic);

/// Fixture generators by name over an arbitrary valid characteristic; used
/// by the CLI to resolve names like "f1" in polynomial arguments.
const std::vector<std::pair<std::string, std::string>>& fixture_sources();

struct DimEstimate {
    long r = 0;
    long dim_upper = 0;      // size of the constraint-system nullspace
    long dim_certified = 0;  // basis vectors admitting a kernel completion
    std::vector<KernelCertificate> witnesses;
};

struct LowerBoundResult {
    long s = 0;                // minimal sigma-order of a kernel element
    bool s_certified = false;  // V_r = 0 proven (empty constraint span) for all r < s
    long xi = 0;               // window width: the smallest weight
    long bound = 0;            // sum of certified dimensions over r in [s, s+xi)
    std::vector<DimEstimate> per_r;
};

/// The minimal-generator lower bound mu >= sum(dim V_{s+i}, i < xi), with
/// every dimension certified from below by explicit kernel completions.
LowerBoundResult lower_bound(const MohParams& mp);

/// Non-membership witness: every listed polynomial lies in the monomial
/// prime generated by prime_variables while the candidate has a monomial
/// outside it.
struct Obstruction {
    std::string candidate;
    std::string pure_monomial;
    std::vector<std::string> prime_variables;
    std::vector<std::string> against;
};

struct MinimalityCertificate {
    long characteristic = 0;
    std::vector<std::string> generator_names;
    std::vector<std::string> generator_texts;
    bool kernel_ok = false;
    long length_ideal_side = -1;      // -1 when not computable
    long length_valuation_side = -1;
    bool lengths_ok = false;
    LowerBoundResult lower;
    std::vector<Obstruction> obstructions;
    long mu = -1;                     // -1 when not certified
    bool pass = false;
    std::vector<std::string> reasons; // failure notes, empty on pass
};

/// Runs the full verification pipeline: kernel membership of every
/// generator, the Artinian length of the ideal plus the slice variable
/// against the t-order of the image of y, the lower bound, and the
/// monomial-prime obstructions closing the gap to the generator count.
/// Component failures are collected into the certificate, not thrown.
MinimalityCertificate verify_minimal_generation(const MohFixture& fixture);

nlohmann::json certificate_json(const MinimalityCertificate& cert);

struct SallyIdentity {
    std::string description;
};

/// Reduces the characteristic-zero generators mod p (p in {2, 3}) and checks
/// the factorization identities against that characteristic's fixture by
/// exact arithmetic; for p = 2 additionally re-checks that the r = 10
/// constraint span over Q is zero. Throws IdentityFailed on any mismatch.
std::vector<SallyIdentity> sally_reduction_check(long p);

}  // namespace mohpoly

#endif
