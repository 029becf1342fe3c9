#ifndef MOHPOLY_FIELD_HPP
#define MOHPOLY_FIELD_HPP

#include <cstdint>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "mohpoly/errors.hpp"

namespace mohpoly {

enum class FieldKind { Rationals, PrimeField };

/// Coefficient field: the rationals or a prime field F_p.
class FieldSpec {
   public:
    static FieldSpec rationals() { return FieldSpec(FieldKind::Rationals, 0); }
    static FieldSpec prime_field(long p);

    /// Rationals for 0, F_p for a prime p.
    static FieldSpec of_characteristic(long p);

    FieldKind kind() const { return kind_; }
    long characteristic() const { return p_; }

    bool operator==(const FieldSpec& other) const { return kind_ == other.kind_ && p_ == other.p_; }
    bool operator!=(const FieldSpec& other) const { return !(*this == other); }

    std::string to_string() const;

   private:
    FieldSpec(FieldKind kind, long p) : kind_(kind), p_(p) {}

    FieldKind kind_;
    long p_;  // 0 over the rationals
};

/// Exact field element: a reduced fraction over Q, a canonical residue in [0,p) over F_p.
class Scalar {
   public:
    explicit Scalar(const FieldSpec& spec) : spec_(spec), residue_(0) {}  // zero

    static Scalar zero(const FieldSpec& spec) { return Scalar(spec); }
    static Scalar one(const FieldSpec& spec) { return of_integer(1, spec); }
    static Scalar of_integer(long value, const FieldSpec& spec);
    static Scalar of_integer(const mpz_class& value, const FieldSpec& spec);
    static Scalar of_fraction(const mpz_class& num, const mpz_class& den, const FieldSpec& spec);

    const FieldSpec& field() const { return spec_; }
    bool is_zero() const;
    bool is_one() const;

    Scalar operator-() const;
    Scalar inverse() const;

    Scalar& operator+=(const Scalar& rhs);
    Scalar& operator-=(const Scalar& rhs);
    Scalar& operator*=(const Scalar& rhs);
    Scalar& operator/=(const Scalar& rhs);

    friend Scalar operator+(Scalar lhs, const Scalar& rhs) { return lhs += rhs; }
    friend Scalar operator-(Scalar lhs, const Scalar& rhs) { return lhs -= rhs; }
    friend Scalar operator*(Scalar lhs, const Scalar& rhs) { return lhs *= rhs; }
    friend Scalar operator/(Scalar lhs, const Scalar& rhs) { return lhs /= rhs; }

    bool operator==(const Scalar& rhs) const;
    bool operator!=(const Scalar& rhs) const { return !(*this == rhs); }

    /// Rational value (Q only).
    const mpq_class& rational() const;
    /// Canonical residue (F_p only).
    long residue() const;

    /// "-7/3" over Q, "2" over F_p. Unique per value.
    std::string to_string() const;

    /// True when the value prints with a leading '-'.
    bool is_negative_display() const;

   private:
    void check_same_field(const Scalar& rhs) const;

    FieldSpec spec_;
    mpq_class rational_;  // used over Q
    long residue_;        // used over F_p
};

/// Image of binom(m,n) in the field; digit-product of Lucas over F_p, exact integer over Q.
/// binom(m,n) = 0 when n > m.
Scalar lucas_binomial(unsigned long m, unsigned long n, const FieldSpec& field);

/// Dense matrix over one field, used for the exact linear algebra of the
/// constraint systems.
class Matrix {
   public:
    Matrix(std::size_t rows, std::size_t cols, const FieldSpec& field);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    const FieldSpec& field() const { return field_; }

    Scalar& at(std::size_t i, std::size_t j);
    const Scalar& at(std::size_t i, std::size_t j) const;

    /// In-place reduced row echelon form with leading ones.
    /// Returns the pivot column of each nonzero row, in order.
    std::vector<std::size_t> rref();

    std::size_t rank() const;

    /// Basis of the right nullspace. Deterministic: computed from the RREF
    /// with free variables taken in ascending column order, then each vector
    /// rescaled to a canonical representative (primitive integer vector with
    /// positive leading entry over Q, leading entry 1 over F_p).
    std::vector<std::vector<Scalar>> nullspace() const;

    /// Matrix-vector product.
    std::vector<Scalar> apply(const std::vector<Scalar>& v) const;

   private:
    std::size_t rows_;
    std::size_t cols_;
    FieldSpec field_;
    std::vector<Scalar> entries_;
};

/// Canonical rescaling used for nullspace output; exposed for tests.
void normalize_vector(std::vector<Scalar>& v);

}  // namespace mohpoly

#endif
