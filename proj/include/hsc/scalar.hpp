#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

#include "hsc/errors.hpp"

namespace hsc {

// Coefficient field: the rationals or a prime field F_p with 2 <= p < 2^31.
class Field {
  public:
    enum class Kind { Rationals, Prime };

    static Field rationals() { return Field(Kind::Rationals, 0); }
    static Field prime(std::int64_t p);

    Kind kind() const { return kind_; }
    std::int64_t p() const { return p_; }

    bool operator==(const Field& other) const { return kind_ == other.kind_ && p_ == other.p_; }
    bool operator!=(const Field& other) const { return !(*this == other); }

    // "Q" or "F<p>".
    std::string name() const;

  private:
    Field(Kind kind, std::int64_t p) : kind_(kind), p_(p) {}
    Kind kind_;
    std::int64_t p_;
};

// An element of Q (always-reduced fraction with positive denominator) or of
// F_p (integer residue in [0, p)). All arithmetic is exact.
class Scalar {
  public:
    Scalar() : field_(Field::rationals()), v_(0) {}
    Scalar(const Field& field, long value) : field_(field), v_(value) { normalize(); }
    Scalar(const Field& field, mpq_class value) : field_(field), v_(std::move(value)) { normalize(); }

    static Scalar zero(const Field& field) { return Scalar(field, 0); }
    static Scalar one(const Field& field) { return Scalar(field, 1); }

    // Accepts "a", "-a" or "a/b" with decimal integers.
    static Scalar parse(const Field& field, const std::string& text);

    const Field& field() const { return field_; }
    const mpq_class& value() const { return v_; }
    bool is_zero() const { return v_ == 0; }
    bool is_one() const { return v_ == 1; }

    Scalar operator-() const;
    Scalar operator+(const Scalar& rhs) const;
    Scalar operator-(const Scalar& rhs) const;
    Scalar operator*(const Scalar& rhs) const;
    Scalar operator/(const Scalar& rhs) const;
    Scalar inverse() const;

    Scalar& operator+=(const Scalar& rhs) { return *this = *this + rhs; }
    Scalar& operator-=(const Scalar& rhs) { return *this = *this - rhs; }
    Scalar& operator*=(const Scalar& rhs) { return *this = *this * rhs; }

    bool operator==(const Scalar& rhs) const;
    bool operator!=(const Scalar& rhs) const { return !(*this == rhs); }

    // Canonical text form: "a" or "a/b".
    std::string str() const;

  private:
    void normalize();
    void check_field(const Scalar& rhs) const;

    Field field_;
    mpq_class v_;
};

}  // namespace hsc
