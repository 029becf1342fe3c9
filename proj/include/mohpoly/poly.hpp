#ifndef MOHPOLY_POLY_HPP
#define MOHPOLY_POLY_HPP

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "mohpoly/field.hpp"

namespace mohpoly {

/// Exponent vector of a monomial; length d is fixed by the ambient ring.
using Exponents = std::vector<unsigned>;

unsigned total_degree(const Exponents& e);

enum class Cmp { Less, Equal, Greater };

/// Negative degree reverse lexicographic comparison (local order):
/// smaller total degree wins; on ties the last nonzero entry of a-b
/// negative means a is the bigger monomial. 1 > x > y > z > x^2 > ...
Cmp compare_ds(const Exponents& a, const Exponents& b);

bool greater_ds(const Exponents& a, const Exponents& b);

bool divides(const Exponents& divisor, const Exponents& multiple);
Exponents exponent_sum(const Exponents& a, const Exponents& b);
Exponents exponent_diff(const Exponents& a, const Exponents& b);  // requires divides(b, a)
Exponents exponent_lcm(const Exponents& a, const Exponents& b);

struct RingSpec {
    int dim;
    FieldSpec field;

    bool operator==(const RingSpec& other) const {
        return dim == other.dim && field == other.field;
    }
    bool operator!=(const RingSpec& other) const { return !(*this == other); }
};

/// Multivariate polynomial with exact coefficients. A value type: all
/// operations are pure and never lose exactness. Zero coefficients are
/// never stored; the zero polynomial has an empty term map.
class Polynomial {
   public:
    explicit Polynomial(const RingSpec& ring) : ring_(ring) {}

    static Polynomial zero(const RingSpec& ring) { return Polynomial(ring); }
    static Polynomial constant(const RingSpec& ring, const Scalar& c);
    static Polynomial monomial(const RingSpec& ring, const Exponents& e, const Scalar& c);

    const RingSpec& ring() const { return ring_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    const std::map<Exponents, Scalar>& terms() const { return terms_; }

    /// Coefficient of a monomial (zero if absent).
    Scalar coefficient(const Exponents& e) const;

    void add_term(const Exponents& e, const Scalar& c);

    Polynomial operator-() const;
    Polynomial& operator+=(const Polynomial& rhs);
    Polynomial& operator-=(const Polynomial& rhs);
    friend Polynomial operator+(Polynomial lhs, const Polynomial& rhs) { return lhs += rhs; }
    friend Polynomial operator-(Polynomial lhs, const Polynomial& rhs) { return lhs -= rhs; }
    friend Polynomial operator*(const Polynomial& lhs, const Polynomial& rhs);

    Polynomial scaled(const Scalar& c) const;
    /// Product with the single term c*x^e.
    Polynomial term_multiple(const Exponents& e, const Scalar& c) const;

    bool operator==(const Polynomial& rhs) const;
    bool operator!=(const Polynomial& rhs) const { return !(*this == rhs); }

    /// Minimum total degree over the support (f != 0).
    unsigned ord() const;
    /// Maximum total degree over the support (f != 0).
    unsigned degree() const;
    /// Sum of the terms of minimal total degree (f != 0).
    Polynomial leading_form() const;

    /// Leading monomial/term under >_ds (f != 0).
    const Exponents& leading_monomial() const;
    std::pair<Exponents, Scalar> leading_term() const;

    /// deg(f) - deg(LM(f)) (f != 0).
    unsigned ecart() const;

    /// Terms sorted strictly descending under >_ds.
    std::vector<std::pair<Exponents, Scalar>> ordered_terms() const;

    /// Canonical text form: terms descending under >_ds, '*' between
    /// factors, '^' for exponents above 1.
    std::string to_string() const;

   private:
    void check_ring(const Polynomial& rhs) const;

    RingSpec ring_;
    std::map<Exponents, Scalar> terms_;
};

/// S-polynomial (m/LT(f))*f - (m/LT(g))*g with m = lcm(LM(f), LM(g)).
Polynomial spoly(const Polynomial& f, const Polynomial& g);

/// Variable names of the ambient ring: x,y,z for d=3; t for d=1;
/// x,z for d=2 (the y=0 slice ring); x1..xd otherwise.
std::vector<std::string> variable_names(int dim);

/// Parse the textual polynomial grammar:
///   poly   := term (("+"|"-") term)* | "0"      (leading sign allowed)
///   term   := coef? factor* | coef
///   coef   := integer | integer "/" integer
///   factor := var ("^" integer)?                ("*" between factors accepted)
/// Exponents always need "^": "3y^3" parses, "3y3" does not.
Polynomial parse_poly(const std::string& text, int dim, const FieldSpec& field);

std::string monomial_to_string(const Exponents& e, int dim);

}  // namespace mohpoly

#endif
