#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace bggwb {

/// Base field tag: the rationals, or F_p for a prime p < 2^31.
class Field {
public:
    constexpr Field() = default;

    static constexpr Field rationals() { return Field(); }
    /// Throws PreconditionError unless p is a prime below 2^31.
    static Field prime(std::uint64_t p);
    /// Accepts "QQ" / "Q" / "rationals" or "fp:<p>".
    static Field parse(std::string_view text);

    constexpr bool is_rational() const noexcept { return p_ == 0; }
    constexpr bool is_prime() const noexcept { return p_ != 0; }
    constexpr std::uint32_t characteristic() const noexcept { return p_; }

    std::string to_string() const;

    friend constexpr bool operator==(Field, Field) = default;

private:
    explicit constexpr Field(std::uint32_t p) : p_(p) {}
    std::uint32_t p_ = 0;
};

void require_same_field(Field a, Field b, const char* context);

/// Brings a rational into canonical form in the given field: lowest terms
/// over QQ, the representative in [0, p) over F_p.
mpq_class normalize(const mpq_class& v, Field f);

/// Exact field element tagged with its field.
class Scalar {
public:
    Scalar() = default;
    Scalar(Field f, const mpq_class& v) : field_(f), value_(normalize(v, f)) {}
    Scalar(Field f, long v) : Scalar(f, mpq_class(v)) {}

    /// "a", "-a", "a/b" in decimal.
    static Scalar parse(Field f, std::string_view text);

    Field field() const noexcept { return field_; }
    const mpq_class& value() const noexcept { return value_; }
    bool is_zero() const { return sgn(value_) == 0; }

    std::string to_string() const { return value_.get_str(); }

    Scalar operator-() const;
    Scalar inverse() const;

    friend Scalar operator+(const Scalar& a, const Scalar& b);
    friend Scalar operator-(const Scalar& a, const Scalar& b);
    friend Scalar operator*(const Scalar& a, const Scalar& b);
    friend Scalar operator/(const Scalar& a, const Scalar& b);
    friend bool operator==(const Scalar& a, const Scalar& b) {
        return a.field_ == b.field_ && a.value_ == b.value_;
    }

private:
    Field field_;
    mpq_class value_;
};

/// Field operations on raw mpq values (already normalized for f).
mpq_class field_add(const mpq_class& a, const mpq_class& b, Field f);
mpq_class field_sub(const mpq_class& a, const mpq_class& b, Field f);
mpq_class field_mul(const mpq_class& a, const mpq_class& b, Field f);
mpq_class field_inv(const mpq_class& a, Field f);

/// Parses "a" or "a/b"; throws ParseError.
mpq_class parse_rational(std::string_view text);

}  // namespace bggwb
