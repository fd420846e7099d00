#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace lpa {

/// Exact rational with 64-bit numerator/denominator, always reduced, den > 0.
/// Intermediate products run through 128-bit arithmetic; a result that does
/// not fit 64 bits throws std::overflow_error.
class Rational {
public:
    Rational() = default;
    Rational(std::int64_t n) : num_(n) {}
    Rational(std::int64_t n, std::int64_t d);

    std::int64_t num() const { return num_; }
    std::int64_t den() const { return den_; }
    bool is_zero() const { return num_ == 0; }
    bool is_integer() const { return den_ == 1; }

    friend Rational operator+(const Rational& a, const Rational& b);
    friend Rational operator-(const Rational& a, const Rational& b);
    friend Rational operator*(const Rational& a, const Rational& b);
    friend Rational operator/(const Rational& a, const Rational& b);
    Rational operator-() const;

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
    friend bool operator<(const Rational& a, const Rational& b);

    std::string str() const;

private:
    static Rational make(__int128 n, __int128 d);
    std::int64_t num_ = 0;
    std::int64_t den_ = 1;
};

/// Coefficient field: Q (modulus 0) or F_p for a prime p < 2^31.
/// F_p elements are carried as Rationals with denominator 1 and value in [0, p).
struct FieldSpec {
    std::uint32_t modulus = 0;

    static FieldSpec rationals() { return {}; }
    static FieldSpec prime(std::uint32_t p);
    static FieldSpec parse(std::string_view s);  // "Q" | "F<p>"

    bool is_rational() const { return modulus == 0; }
    bool operator==(const FieldSpec&) const = default;
    std::string name() const;

    Rational canon(const Rational& a) const;
    Rational add(const Rational& a, const Rational& b) const { return canon(a + b); }
    Rational sub(const Rational& a, const Rational& b) const { return canon(a - b); }
    Rational mul(const Rational& a, const Rational& b) const { return canon(a * b); }
    Rational neg(const Rational& a) const { return canon(-a); }
    Rational inv(const Rational& a) const;
    Rational div(const Rational& a, const Rational& b) const { return mul(a, inv(b)); }
};

bool is_prime_u32(std::uint32_t n);

}  // namespace lpa
