#include <cctype>
#include <limits>

#include "mohpoly/poly.hpp"

namespace mohpoly {

namespace {

constexpr unsigned kMaxExponent = std::numeric_limits<int>::max();

class Parser {
   public:
    Parser(const std::string& text, int dim, const FieldSpec& field)
        : text_(text), ring_{dim, field}, names_(variable_names(dim)) {}

    Polynomial parse() {
        Polynomial out(ring_);
        skip_ws();
        if (at_end()) throw SyntaxError("empty polynomial", pos_);
        bool negative = consume_sign();
        for (;;) {
            out += parse_term(negative);
            skip_ws();
            if (at_end()) break;
            char c = text_[pos_];
            if (c == '+') {
                ++pos_;
                negative = false;
            } else if (c == '-') {
                ++pos_;
                negative = true;
            } else {
                throw SyntaxError(std::string("unexpected character '") + c + "'", pos_);
            }
        }
        return out;
    }

   private:
    bool at_end() const { return pos_ >= text_.size(); }

    void skip_ws() {
        while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool consume_sign() {
        if (!at_end() && (text_[pos_] == '+' || text_[pos_] == '-')) {
            bool neg = text_[pos_] == '-';
            ++pos_;
            skip_ws();
            return neg;
        }
        return false;
    }

    mpz_class read_integer() {
        skip_ws();
        std::size_t start = pos_;
        while (!at_end() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (pos_ == start) throw SyntaxError("expected an integer", pos_);
        return mpz_class(text_.substr(start, pos_ - start));
    }

    unsigned read_exponent() {
        std::size_t at = pos_;
        mpz_class v = read_integer();
        if (v > kMaxExponent) throw ExponentOverflow("exponent too large", at);
        return static_cast<unsigned>(v.get_ui());
    }

    // matches the longest variable name at the current position, or -1
    int match_variable() {
        int best = -1;
        std::size_t best_len = 0;
        for (std::size_t i = 0; i < names_.size(); ++i) {
            const std::string& name = names_[i];
            if (name.size() > best_len && text_.compare(pos_, name.size(), name) == 0) {
                best = static_cast<int>(i);
                best_len = name.size();
            }
        }
        if (best >= 0) pos_ += best_len;
        return best;
    }

    Polynomial parse_term(bool negative) {
        skip_ws();
        bool has_content = false;
        Scalar coeff = Scalar::one(ring_.field);
        if (!at_end() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            mpz_class num = read_integer();
            std::size_t save = pos_;
            skip_ws();
            if (!at_end() && text_[pos_] == '/') {
                ++pos_;
                std::size_t den_at = pos_;
                mpz_class den = read_integer();
                if (den == 0) throw SyntaxError("zero denominator", den_at);
                coeff = Scalar::of_fraction(num, den, ring_.field);
            } else {
                pos_ = save;
                coeff = Scalar::of_integer(num, ring_.field);
            }
            has_content = true;
        }
        Exponents e(ring_.dim, 0);
        for (;;) {
            std::size_t save = pos_;
            skip_ws();
            bool explicit_star = false;
            if (!at_end() && text_[pos_] == '*') {
                ++pos_;
                skip_ws();
                explicit_star = true;
            }
            if (at_end() || !std::isalpha(static_cast<unsigned char>(text_[pos_]))) {
                if (explicit_star) throw SyntaxError("expected a variable after '*'", pos_);
                pos_ = save;
                break;
            }
            std::size_t var_at = pos_;
            int var = match_variable();
            if (var < 0) throw UnknownVariable("unknown variable", var_at);
            unsigned exp = 1;
            if (!at_end() && text_[pos_] == '^') {
                ++pos_;
                exp = read_exponent();
            }
            if (e[var] > kMaxExponent - exp) throw ExponentOverflow("exponent too large", var_at);
            e[var] += exp;
            has_content = true;
        }
        if (!has_content) throw SyntaxError("expected a term", pos_);
        return Polynomial::monomial(ring_, e, negative ? -coeff : coeff);
    }

    const std::string& text_;
    RingSpec ring_;
    std::vector<std::string> names_;
    std::size_t pos_ = 0;
};

}  // namespace

Polynomial parse_poly(const std::string& text, int dim, const FieldSpec& field) {
    return Parser(text, dim, field).parse();
}

}  // namespace mohpoly
