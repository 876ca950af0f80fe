#include "bggwb/scalar.hpp"

#include <cctype>

#include "bggwb/errors.hpp"

namespace bggwb {

namespace {

bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

std::uint64_t mod_pow(std::uint64_t b, std::uint64_t e, std::uint64_t p) {
    std::uint64_t r = 1;
    b %= p;
    while (e) {
        if (e & 1) r = r * b % p;
        b = b * b % p;
        e >>= 1;
    }
    return r;
}

std::uint64_t residue(const mpz_class& z, std::uint32_t p) {
    mpz_class r = z % p;
    if (r < 0) r += p;
    return r.get_ui();
}

}  // namespace

Field Field::prime(std::uint64_t p) {
    if (p >= (1ULL << 31) || !is_prime_u64(p))
        throw PreconditionError("field characteristic must be a prime below 2^31, got " +
                                std::to_string(p));
    return Field(static_cast<std::uint32_t>(p));
}

Field Field::parse(std::string_view text) {
    if (text == "QQ" || text == "Q" || text == "rationals") return rationals();
    if (text.substr(0, 3) == "fp:") {
        auto digits = text.substr(3);
        if (digits.empty() || digits.size() > 12)
            throw ParseError("bad prime field tag '" + std::string(text) + "'");
        std::uint64_t p = 0;
        for (char c : digits) {
            if (!std::isdigit(static_cast<unsigned char>(c)))
                throw ParseError("bad prime field tag '" + std::string(text) + "'");
            p = p * 10 + static_cast<std::uint64_t>(c - '0');
        }
        try {
            return prime(p);
        } catch (const PreconditionError& e) {
            throw ParseError(e.what());
        }
    }
    throw ParseError("unknown field tag '" + std::string(text) + "' (expected QQ or fp:<p>)");
}

std::string Field::to_string() const {
    return is_rational() ? std::string("QQ") : "fp:" + std::to_string(p_);
}

void require_same_field(Field a, Field b, const char* context) {
    if (a != b)
        throw FieldMismatch(std::string(context) + ": field mismatch (" + a.to_string() + " vs " +
                            b.to_string() + ")");
}

mpq_class normalize(const mpq_class& v, Field f) {
    if (f.is_rational()) {
        mpq_class r = v;
        r.canonicalize();
        return r;
    }
    const std::uint32_t p = f.characteristic();
    const std::uint64_t num = residue(v.get_num(), p);
    const std::uint64_t den = residue(v.get_den(), p);
    if (den == 0) throw PreconditionError("denominator divisible by the field characteristic");
    return mpq_class(static_cast<unsigned long>(num * mod_pow(den, p - 2, p) % p));
}

mpq_class field_add(const mpq_class& a, const mpq_class& b, Field f) {
    if (f.is_rational()) return a + b;
    std::uint64_t s = a.get_num().get_ui() + b.get_num().get_ui();
    if (s >= f.characteristic()) s -= f.characteristic();
    return mpq_class(static_cast<unsigned long>(s));
}

mpq_class field_sub(const mpq_class& a, const mpq_class& b, Field f) {
    if (f.is_rational()) return a - b;
    const std::uint64_t p = f.characteristic();
    return mpq_class(static_cast<unsigned long>((a.get_num().get_ui() + p - b.get_num().get_ui()) % p));
}

mpq_class field_mul(const mpq_class& a, const mpq_class& b, Field f) {
    if (f.is_rational()) return a * b;
    return mpq_class(static_cast<unsigned long>(a.get_num().get_ui() * b.get_num().get_ui() %
                                                f.characteristic()));
}

mpq_class field_inv(const mpq_class& a, Field f) {
    if (sgn(a) == 0) throw PreconditionError("division by zero");
    if (f.is_rational()) return 1 / a;
    const std::uint64_t p = f.characteristic();
    return mpq_class(static_cast<unsigned long>(mod_pow(a.get_num().get_ui(), p - 2, p)));
}

mpq_class parse_rational(std::string_view text) {
    auto bad = [&] { return ParseError("malformed rational '" + std::string(text) + "'"); };
    if (text.empty()) throw bad();
    std::size_t i = 0;
    if (text[0] == '-' || text[0] == '+') i = 1;
    std::size_t slash = text.find('/');
    auto digits_ok = [&](std::size_t from, std::size_t to) {
        if (from >= to) return false;
        for (std::size_t k = from; k < to; ++k)
            if (!std::isdigit(static_cast<unsigned char>(text[k]))) return false;
        return true;
    };
    const std::size_t num_end = slash == std::string_view::npos ? text.size() : slash;
    if (!digits_ok(i, num_end)) throw bad();
    mpz_class num(std::string(text.substr(i, num_end - i)));
    if (text[0] == '-') num = -num;
    mpz_class den = 1;
    if (slash != std::string_view::npos) {
        if (!digits_ok(slash + 1, text.size())) throw bad();
        den = mpz_class(std::string(text.substr(slash + 1)));
        if (den == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
    }
    mpq_class q(num, den);
    q.canonicalize();
    return q;
}

Scalar Scalar::parse(Field f, std::string_view text) { return Scalar(f, parse_rational(text)); }

Scalar Scalar::operator-() const { return Scalar(field_, -value_); }

Scalar Scalar::inverse() const { return Scalar(field_, field_inv(value_, field_)); }

Scalar operator+(const Scalar& a, const Scalar& b) {
    require_same_field(a.field_, b.field_, "scalar addition");
    return Scalar(a.field_, field_add(a.value_, b.value_, a.field_));
}

Scalar operator-(const Scalar& a, const Scalar& b) {
    require_same_field(a.field_, b.field_, "scalar subtraction");
    return Scalar(a.field_, field_sub(a.value_, b.value_, a.field_));
}

Scalar operator*(const Scalar& a, const Scalar& b) {
    require_same_field(a.field_, b.field_, "scalar multiplication");
    return Scalar(a.field_, field_mul(a.value_, b.value_, a.field_));
}

Scalar operator/(const Scalar& a, const Scalar& b) {
    require_same_field(a.field_, b.field_, "scalar division");
    return Scalar(a.field_, field_mul(a.value_, field_inv(b.value_, a.field_), a.field_));
}

}  // namespace bggwb
