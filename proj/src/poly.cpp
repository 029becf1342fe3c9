#include "mohpoly/poly.hpp"

#include <algorithm>
#include <limits>
#include <sstream>

namespace mohpoly {

namespace {
constexpr unsigned kMaxExponent = std::numeric_limits<int>::max();
}

unsigned total_degree(const Exponents& e) {
    unsigned d = 0;
    for (unsigned v : e) d += v;
    return d;
}

Cmp compare_ds(const Exponents& a, const Exponents& b) {
    if (a.size() != b.size()) throw DimensionMismatch("monomials from different rings");
    unsigned da = total_degree(a);
    unsigned db = total_degree(b);
    if (da != db) return da < db ? Cmp::Greater : Cmp::Less;
    for (std::size_t i = a.size(); i-- > 0;) {
        if (a[i] != b[i]) return a[i] < b[i] ? Cmp::Greater : Cmp::Less;
    }
    return Cmp::Equal;
}

bool greater_ds(const Exponents& a, const Exponents& b) {
    return compare_ds(a, b) == Cmp::Greater;
}

bool divides(const Exponents& divisor, const Exponents& multiple) {
    if (divisor.size() != multiple.size()) throw DimensionMismatch("monomials from different rings");
    for (std::size_t i = 0; i < divisor.size(); ++i) {
        if (divisor[i] > multiple[i]) return false;
    }
    return true;
}

Exponents exponent_sum(const Exponents& a, const Exponents& b) {
    if (a.size() != b.size()) throw DimensionMismatch("monomials from different rings");
    Exponents out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] > kMaxExponent - b[i]) throw ExponentOverflow("exponent overflow", 0);
        out[i] = a[i] + b[i];
    }
    return out;
}

Exponents exponent_diff(const Exponents& a, const Exponents& b) {
    if (!divides(b, a)) throw Error("monomial does not divide");
    Exponents out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
    return out;
}

Exponents exponent_lcm(const Exponents& a, const Exponents& b) {
    if (a.size() != b.size()) throw DimensionMismatch("monomials from different rings");
    Exponents out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = std::max(a[i], b[i]);
    return out;
}

Polynomial Polynomial::constant(const RingSpec& ring, const Scalar& c) {
    return monomial(ring, Exponents(ring.dim, 0), c);
}

Polynomial Polynomial::monomial(const RingSpec& ring, const Exponents& e, const Scalar& c) {
    Polynomial p(ring);
    p.add_term(e, c);
    return p;
}

Scalar Polynomial::coefficient(const Exponents& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Scalar::zero(ring_.field) : it->second;
}

void Polynomial::add_term(const Exponents& e, const Scalar& c) {
    if (static_cast<int>(e.size()) != ring_.dim) throw DimensionMismatch("monomial dimension mismatch");
    if (c.field() != ring_.field) throw RingMismatch("coefficient field mismatch");
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

void Polynomial::check_ring(const Polynomial& rhs) const {
    if (ring_ != rhs.ring_) throw RingMismatch("polynomials from different rings");
}

Polynomial Polynomial::operator-() const {
    Polynomial out(ring_);
    for (const auto& [e, c] : terms_) out.terms_.emplace(e, -c);
    return out;
}

Polynomial& Polynomial::operator+=(const Polynomial& rhs) {
    check_ring(rhs);
    for (const auto& [e, c] : rhs.terms_) add_term(e, c);
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& rhs) {
    check_ring(rhs);
    for (const auto& [e, c] : rhs.terms_) add_term(e, -c);
    return *this;
}

Polynomial operator*(const Polynomial& lhs, const Polynomial& rhs) {
    lhs.check_ring(rhs);
    Polynomial out(lhs.ring_);
    for (const auto& [ea, ca] : lhs.terms_) {
        for (const auto& [eb, cb] : rhs.terms_) {
            out.add_term(exponent_sum(ea, eb), ca * cb);
        }
    }
    return out;
}

Polynomial Polynomial::scaled(const Scalar& c) const {
    Polynomial out(ring_);
    if (c.is_zero()) return out;
    for (const auto& [e, coeff] : terms_) out.terms_.emplace(e, coeff * c);
    return out;
}

Polynomial Polynomial::term_multiple(const Exponents& e, const Scalar& c) const {
    Polynomial out(ring_);
    if (c.is_zero()) return out;
    for (const auto& [ef, cf] : terms_) out.terms_.emplace(exponent_sum(ef, e), cf * c);
    return out;
}

bool Polynomial::operator==(const Polynomial& rhs) const {
    return ring_ == rhs.ring_ && terms_ == rhs.terms_;
}

unsigned Polynomial::ord() const {
    if (is_zero()) throw ZeroPolynomial("ord of the zero polynomial");
    unsigned best = std::numeric_limits<unsigned>::max();
    for (const auto& [e, c] : terms_) best = std::min(best, total_degree(e));
    return best;
}

unsigned Polynomial::degree() const {
    if (is_zero()) throw ZeroPolynomial("degree of the zero polynomial");
    unsigned best = 0;
    for (const auto& [e, c] : terms_) best = std::max(best, total_degree(e));
    return best;
}

Polynomial Polynomial::leading_form() const {
    unsigned o = ord();
    Polynomial out(ring_);
    for (const auto& [e, c] : terms_) {
        if (total_degree(e) == o) out.terms_.emplace(e, c);
    }
    return out;
}

const Exponents& Polynomial::leading_monomial() const {
    if (is_zero()) throw ZeroPolynomial("leading monomial of the zero polynomial");
    const Exponents* best = nullptr;
    for (const auto& [e, c] : terms_) {
        if (best == nullptr || greater_ds(e, *best)) best = &e;
    }
    return *best;
}

std::pair<Exponents, Scalar> Polynomial::leading_term() const {
    const Exponents& lm = leading_monomial();
    return {lm, terms_.at(lm)};
}

unsigned Polynomial::ecart() const {
    return degree() - total_degree(leading_monomial());
}

std::vector<std::pair<Exponents, Scalar>> Polynomial::ordered_terms() const {
    std::vector<std::pair<Exponents, Scalar>> out(terms_.begin(), terms_.end());
    std::sort(out.begin(), out.end(),
              [](const auto& a, const auto& b) { return greater_ds(a.first, b.first); });
    return out;
}

Polynomial spoly(const Polynomial& f, const Polynomial& g) {
    if (f.is_zero() || g.is_zero()) throw ZeroPolynomial("spoly of a zero polynomial");
    auto [lmf, lcf] = f.leading_term();
    auto [lmg, lcg] = g.leading_term();
    Exponents m = exponent_lcm(lmf, lmg);
    Polynomial left = f.term_multiple(exponent_diff(m, lmf), lcf.inverse());
    Polynomial right = g.term_multiple(exponent_diff(m, lmg), lcg.inverse());
    return left - right;
}

std::vector<std::string> variable_names(int dim) {
    if (dim == 1) return {"t"};
    if (dim == 2) return {"x", "z"};
    if (dim == 3) return {"x", "y", "z"};
    std::vector<std::string> names;
    names.reserve(dim);
    for (int i = 1; i <= dim; ++i) names.push_back("x" + std::to_string(i));
    return names;
}

std::string monomial_to_string(const Exponents& e, int dim) {
    std::vector<std::string> names = variable_names(dim);
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < e.size(); ++i) {
        if (e[i] == 0) continue;
        if (!first) os << "*";
        os << names[i];
        if (e[i] > 1) os << "^" << e[i];
        first = false;
    }
    if (first) os << "1";
    return os.str();
}

std::string Polynomial::to_string() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : ordered_terms()) {
        Scalar coeff = c;
        if (first) {
            if (coeff.is_negative_display()) {
                os << "-";
                coeff = -coeff;
            }
        } else {
            if (coeff.is_negative_display()) {
                os << " - ";
                coeff = -coeff;
            } else {
                os << " + ";
            }
        }
        bool constant_term = total_degree(e) == 0;
        if (coeff.is_one() && !constant_term) {
            os << monomial_to_string(e, ring_.dim);
        } else {
            os << coeff.to_string();
            if (!constant_term) os << "*" << monomial_to_string(e, ring_.dim);
        }
        first = false;
    }
    return os.str();
}

}  // namespace mohpoly
