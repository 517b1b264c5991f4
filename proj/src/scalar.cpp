#include "hsc/scalar.hpp"

namespace hsc {

namespace {

bool is_prime(std::int64_t n) {
    if (n < 2) return false;
    for (std::int64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

}  // namespace

Field Field::prime(std::int64_t p) {
    if (p < 2 || p >= (std::int64_t(1) << 31) || !is_prime(p))
        throw SemanticError("field", "not a prime < 2^31: " + std::to_string(p));
    return Field(Kind::Prime, p);
}

std::string Field::name() const {
    return kind_ == Kind::Rationals ? "Q" : "F" + std::to_string(p_);
}

Scalar Scalar::parse(const Field& field, const std::string& text) {
    std::string s = text;
    if (s.empty()) throw SemanticError("scalar", "empty scalar");
    for (size_t i = 0; i < s.size(); ++i) {
        char c = s[i];
        bool ok = (c >= '0' && c <= '9') || c == '/' || (c == '-' && (i == 0 || s[i - 1] == '/'));
        if (!ok) throw SemanticError("scalar", "bad scalar literal: " + text);
    }
    auto slash = s.find('/');
    if (slash == 0 || slash == s.size() - 1) throw SemanticError("scalar", "bad scalar literal: " + text);
    try {
        if (slash == std::string::npos) return Scalar(field, mpq_class(mpz_class(s)));
        mpz_class num(s.substr(0, slash));
        mpz_class den(s.substr(slash + 1));
        if (den == 0) throw SemanticError("scalar", "zero denominator: " + text);
        if (field.kind() == Field::Kind::Prime) {
            // a/b in F_p is a * b^{-1}; mpq_class would reduce over Z first,
            // which agrees, but den may not be invertible.
            Scalar a(field, mpq_class(num));
            Scalar b(field, mpq_class(den));
            return a / b;
        }
        mpq_class q(num, den);
        q.canonicalize();
        return Scalar(field, q);
    } catch (const std::invalid_argument&) {
        throw SemanticError("scalar", "bad scalar literal: " + text);
    }
}

void Scalar::normalize() {
    if (field_.kind() == Field::Kind::Rationals) {
        v_.canonicalize();
        return;
    }
    mpz_class p(static_cast<long>(field_.p()));
    mpz_class num = v_.get_num() % p;
    if (num < 0) num += p;
    if (v_.get_den() != 1) {
        mpz_class den = v_.get_den() % p;
        if (den < 0) den += p;
        mpz_class inv;
        if (mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), p.get_mpz_t()) == 0)
            throw SemanticError("scalar", "denominator not invertible mod " + std::to_string(field_.p()));
        num = (num * inv) % p;
    }
    v_ = mpq_class(num);
}

void Scalar::check_field(const Scalar& rhs) const {
    if (field_ != rhs.field_)
        throw FieldMismatch("scalar fields differ: " + field_.name() + " vs " + rhs.field_.name());
}

Scalar Scalar::operator-() const { return Scalar(field_, mpq_class(-v_)); }

Scalar Scalar::operator+(const Scalar& rhs) const {
    check_field(rhs);
    return Scalar(field_, mpq_class(v_ + rhs.v_));
}

Scalar Scalar::operator-(const Scalar& rhs) const {
    check_field(rhs);
    return Scalar(field_, mpq_class(v_ - rhs.v_));
}

Scalar Scalar::operator*(const Scalar& rhs) const {
    check_field(rhs);
    return Scalar(field_, mpq_class(v_ * rhs.v_));
}

Scalar Scalar::operator/(const Scalar& rhs) const { return *this * rhs.inverse(); }

Scalar Scalar::inverse() const {
    if (is_zero()) throw InternalError("division by zero");
    if (field_.kind() == Field::Kind::Rationals) return Scalar(field_, mpq_class(1 / v_));
    mpz_class p(static_cast<long>(field_.p()));
    mpz_class inv;
    mpz_class num = v_.get_num();
    mpz_invert(inv.get_mpz_t(), num.get_mpz_t(), p.get_mpz_t());
    return Scalar(field_, mpq_class(inv));
}

bool Scalar::operator==(const Scalar& rhs) const {
    check_field(rhs);
    return v_ == rhs.v_;
}

std::string Scalar::str() const {
    if (v_.get_den() == 1) return v_.get_num().get_str();
    return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

}  // namespace hsc
