#include "mohpoly/field.hpp"

#include <algorithm>

namespace mohpoly {

namespace {

bool is_prime(long p) {
    if (p < 2) return false;
    for (long d = 2; d * d <= p; ++d) {
        if (p % d == 0) return false;
    }
    return true;
}

long mod_inverse(long a, long p) {
    // extended Euclid; a in [1, p)
    long t = 0, new_t = 1;
    long r = p, new_r = a;
    while (new_r != 0) {
        long q = r / new_r;
        long tmp = t - q * new_t;
        t = new_t;
        new_t = tmp;
        tmp = r - q * new_r;
        r = new_r;
        new_r = tmp;
    }
    if (r != 1) throw Error("element has no inverse modulo " + std::to_string(p));
    return ((t % p) + p) % p;
}

}  // namespace

FieldSpec FieldSpec::prime_field(long p) {
    if (!is_prime(p)) throw Error("not a prime: " + std::to_string(p));
    return FieldSpec(FieldKind::PrimeField, p);
}

FieldSpec FieldSpec::of_characteristic(long p) {
    return p == 0 ? rationals() : prime_field(p);
}

std::string FieldSpec::to_string() const {
    return kind_ == FieldKind::Rationals ? "QQ" : "GF(" + std::to_string(p_) + ")";
}

Scalar Scalar::of_integer(long value, const FieldSpec& spec) {
    Scalar s(spec);
    if (spec.kind() == FieldKind::Rationals) {
        s.rational_ = value;
    } else {
        long p = spec.characteristic();
        s.residue_ = ((value % p) + p) % p;
    }
    return s;
}

Scalar Scalar::of_integer(const mpz_class& value, const FieldSpec& spec) {
    Scalar s(spec);
    if (spec.kind() == FieldKind::Rationals) {
        s.rational_ = value;
    } else {
        mpz_class r = value % spec.characteristic();
        if (r < 0) r += spec.characteristic();
        s.residue_ = r.get_si();
    }
    return s;
}

Scalar Scalar::of_fraction(const mpz_class& num, const mpz_class& den, const FieldSpec& spec) {
    if (den == 0) throw Error("zero denominator");
    if (spec.kind() == FieldKind::Rationals) {
        Scalar s(spec);
        s.rational_ = mpq_class(num, den);
        s.rational_.canonicalize();
        return s;
    }
    Scalar n = of_integer(num, spec);
    Scalar d = of_integer(den, spec);
    return n / d;
}

bool Scalar::is_zero() const {
    return spec_.kind() == FieldKind::Rationals ? rational_ == 0 : residue_ == 0;
}

bool Scalar::is_one() const {
    return spec_.kind() == FieldKind::Rationals ? rational_ == 1 : residue_ == 1;
}

void Scalar::check_same_field(const Scalar& rhs) const {
    if (spec_ != rhs.spec_) throw FieldMismatch("scalars from different fields");
}

Scalar Scalar::operator-() const {
    Scalar s(*this);
    if (spec_.kind() == FieldKind::Rationals) {
        s.rational_ = -s.rational_;
    } else if (s.residue_ != 0) {
        s.residue_ = spec_.characteristic() - s.residue_;
    }
    return s;
}

Scalar Scalar::inverse() const {
    if (is_zero()) throw Error("inverse of zero");
    Scalar s(spec_);
    if (spec_.kind() == FieldKind::Rationals) {
        s.rational_ = 1 / rational_;
    } else {
        s.residue_ = mod_inverse(residue_, spec_.characteristic());
    }
    return s;
}

Scalar& Scalar::operator+=(const Scalar& rhs) {
    check_same_field(rhs);
    if (spec_.kind() == FieldKind::Rationals) {
        rational_ += rhs.rational_;
    } else {
        residue_ = (residue_ + rhs.residue_) % spec_.characteristic();
    }
    return *this;
}

Scalar& Scalar::operator-=(const Scalar& rhs) {
    check_same_field(rhs);
    if (spec_.kind() == FieldKind::Rationals) {
        rational_ -= rhs.rational_;
    } else {
        long p = spec_.characteristic();
        residue_ = ((residue_ - rhs.residue_) % p + p) % p;
    }
    return *this;
}

Scalar& Scalar::operator*=(const Scalar& rhs) {
    check_same_field(rhs);
    if (spec_.kind() == FieldKind::Rationals) {
        rational_ *= rhs.rational_;
    } else {
        residue_ = (residue_ * rhs.residue_) % spec_.characteristic();
    }
    return *this;
}

Scalar& Scalar::operator/=(const Scalar& rhs) {
    check_same_field(rhs);
    if (rhs.is_zero()) throw Error("division by zero");
    if (spec_.kind() == FieldKind::Rationals) {
        rational_ /= rhs.rational_;
    } else {
        residue_ = (residue_ * mod_inverse(rhs.residue_, spec_.characteristic())) %
                   spec_.characteristic();
    }
    return *this;
}

bool Scalar::operator==(const Scalar& rhs) const {
    if (spec_ != rhs.spec_) return false;
    return spec_.kind() == FieldKind::Rationals ? rational_ == rhs.rational_
                                                : residue_ == rhs.residue_;
}

const mpq_class& Scalar::rational() const {
    if (spec_.kind() != FieldKind::Rationals) throw FieldMismatch("not a rational scalar");
    return rational_;
}

long Scalar::residue() const {
    if (spec_.kind() != FieldKind::PrimeField) throw FieldMismatch("not a prime-field scalar");
    return residue_;
}

std::string Scalar::to_string() const {
    return spec_.kind() == FieldKind::Rationals ? rational_.get_str()
                                                : std::to_string(residue_);
}

bool Scalar::is_negative_display() const {
    return spec_.kind() == FieldKind::Rationals && rational_ < 0;
}

Scalar lucas_binomial(unsigned long m, unsigned long n, const FieldSpec& field) {
    if (n > m) return Scalar::zero(field);
    if (field.kind() == FieldKind::Rationals) {
        mpz_class b;
        mpz_bin_uiui(b.get_mpz_t(), m, n);
        return Scalar::of_integer(b, field);
    }
    // product of base-p digit binomials
    unsigned long p = static_cast<unsigned long>(field.characteristic());
    Scalar acc = Scalar::one(field);
    while (m > 0 || n > 0) {
        unsigned long mi = m % p;
        unsigned long ni = n % p;
        if (ni > mi) return Scalar::zero(field);
        mpz_class b;
        mpz_bin_uiui(b.get_mpz_t(), mi, ni);
        acc *= Scalar::of_integer(b, field);
        m /= p;
        n /= p;
    }
    return acc;
}

Matrix::Matrix(std::size_t rows, std::size_t cols, const FieldSpec& field)
    : rows_(rows), cols_(cols), field_(field), entries_(rows * cols, Scalar::zero(field)) {}

Scalar& Matrix::at(std::size_t i, std::size_t j) {
    if (i >= rows_ || j >= cols_) throw Error("matrix index out of range");
    return entries_[i * cols_ + j];
}

const Scalar& Matrix::at(std::size_t i, std::size_t j) const {
    if (i >= rows_ || j >= cols_) throw Error("matrix index out of range");
    return entries_[i * cols_ + j];
}

std::vector<std::size_t> Matrix::rref() {
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < cols_ && row < rows_; ++col) {
        std::size_t pivot_row = rows_;
        for (std::size_t i = row; i < rows_; ++i) {
            if (!at(i, col).is_zero()) {
                pivot_row = i;
                break;
            }
        }
        if (pivot_row == rows_) continue;
        if (pivot_row != row) {
            for (std::size_t j = 0; j < cols_; ++j) std::swap(at(row, j), at(pivot_row, j));
        }
        Scalar inv = at(row, col).inverse();
        for (std::size_t j = col; j < cols_; ++j) at(row, j) *= inv;
        for (std::size_t i = 0; i < rows_; ++i) {
            if (i == row || at(i, col).is_zero()) continue;
            Scalar factor = at(i, col);
            for (std::size_t j = col; j < cols_; ++j) at(i, j) -= factor * at(row, j);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

std::size_t Matrix::rank() const {
    Matrix copy(*this);
    return copy.rref().size();
}

void normalize_vector(std::vector<Scalar>& v) {
    if (v.empty()) return;
    const FieldSpec& field = v.front().field();
    std::size_t lead = v.size();
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (!v[i].is_zero()) {
            lead = i;
            break;
        }
    }
    if (lead == v.size()) return;
    if (field.kind() == FieldKind::PrimeField) {
        Scalar inv = v[lead].inverse();
        for (auto& e : v) e *= inv;
        return;
    }
    // clear denominators and divide by the content, sign from the leading entry
    mpz_class den_lcm = 1;
    for (const auto& e : v) {
        if (!e.is_zero()) mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), e.rational().get_den().get_mpz_t());
    }
    mpz_class content = 0;
    for (const auto& e : v) {
        if (e.is_zero()) continue;
        mpz_class num = e.rational().get_num() * (den_lcm / e.rational().get_den());
        mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), num.get_mpz_t());
    }
    mpq_class factor(den_lcm, content);
    factor.canonicalize();
    Scalar scale = Scalar::of_fraction(factor.get_num(), factor.get_den(), field);
    if (v[lead].rational() < 0) scale = -scale;
    for (auto& e : v) e *= scale;
}

std::vector<std::vector<Scalar>> Matrix::nullspace() const {
    Matrix r(*this);
    std::vector<std::size_t> pivots = r.rref();
    std::vector<bool> is_pivot(cols_, false);
    for (std::size_t c : pivots) is_pivot[c] = true;

    std::vector<std::vector<Scalar>> basis;
    for (std::size_t free_col = 0; free_col < cols_; ++free_col) {
        if (is_pivot[free_col]) continue;
        std::vector<Scalar> v(cols_, Scalar::zero(field_));
        v[free_col] = Scalar::one(field_);
        for (std::size_t k = 0; k < pivots.size(); ++k) {
            v[pivots[k]] = -r.at(k, free_col);
        }
        normalize_vector(v);
        basis.push_back(std::move(v));
    }
    return basis;
}

std::vector<Scalar> Matrix::apply(const std::vector<Scalar>& v) const {
    if (v.size() != cols_) throw DimensionMismatch("matrix-vector size mismatch");
    std::vector<Scalar> out(rows_, Scalar::zero(field_));
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j) {
            if (!at(i, j).is_zero() && !v[j].is_zero()) out[i] += at(i, j) * v[j];
        }
    }
    return out;
}

}  // namespace mohpoly
