#include "lpa/field.hpp"

#include <charconv>
#include <limits>

namespace lpa {

namespace {

__int128 gcd128(__int128 a, __int128 b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
        __int128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

std::int64_t narrow(__int128 v) {
    if (v > std::numeric_limits<std::int64_t>::max() ||
        v < std::numeric_limits<std::int64_t>::min()) {
        throw std::overflow_error("rational arithmetic overflow");
    }
    return static_cast<std::int64_t>(v);
}

std::uint64_t mulmod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}

std::uint64_t powmod_u64(std::uint64_t b, std::uint64_t e, std::uint64_t m) {
    std::uint64_t r = 1 % m;
    b %= m;
    while (e) {
        if (e & 1) r = mulmod_u64(r, b, m);
        b = mulmod_u64(b, b, m);
        e >>= 1;
    }
    return r;
}

}  // namespace

Rational Rational::make(__int128 n, __int128 d) {
    if (d == 0) throw std::invalid_argument("rational with zero denominator");
    if (n == 0) return Rational();
    if (d < 0) {
        n = -n;
        d = -d;
    }
    __int128 g = gcd128(n, d);
    Rational r;
    r.num_ = narrow(n / g);
    r.den_ = narrow(d / g);
    return r;
}

Rational::Rational(std::int64_t n, std::int64_t d) { *this = make(n, d); }

Rational operator+(const Rational& a, const Rational& b) {
    return Rational::make(static_cast<__int128>(a.num_) * b.den_ +
                              static_cast<__int128>(b.num_) * a.den_,
                          static_cast<__int128>(a.den_) * b.den_);
}

Rational operator-(const Rational& a, const Rational& b) {
    return Rational::make(static_cast<__int128>(a.num_) * b.den_ -
                              static_cast<__int128>(b.num_) * a.den_,
                          static_cast<__int128>(a.den_) * b.den_);
}

Rational operator*(const Rational& a, const Rational& b) {
    return Rational::make(static_cast<__int128>(a.num_) * b.num_,
                          static_cast<__int128>(a.den_) * b.den_);
}

Rational operator/(const Rational& a, const Rational& b) {
    if (b.is_zero()) throw std::invalid_argument("division by zero");
    return Rational::make(static_cast<__int128>(a.num_) * b.den_,
                          static_cast<__int128>(a.den_) * b.num_);
}

Rational Rational::operator-() const { return make(-static_cast<__int128>(num_), den_); }

bool operator<(const Rational& a, const Rational& b) {
    return static_cast<__int128>(a.num_) * b.den_ < static_cast<__int128>(b.num_) * a.den_;
}

std::string Rational::str() const {
    if (den_ == 1) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
}

bool is_prime_u32(std::uint32_t n) {
    if (n < 2) return false;
    for (std::uint32_t p : {2u, 3u, 5u, 7u}) {
        if (n % p == 0) return n == p;
    }
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    // Bases 2, 3, 5, 7 are a deterministic Miller-Rabin set below 3.2e9.
    for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull}) {
        std::uint64_t x = powmod_u64(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool witness = true;
        for (int i = 1; i < s; ++i) {
            x = mulmod_u64(x, x, n);
            if (x == n - 1) {
                witness = false;
                break;
            }
        }
        if (witness) return false;
    }
    return true;
}

FieldSpec FieldSpec::prime(std::uint32_t p) {
    if (p >= (1u << 31) || !is_prime_u32(p)) {
        throw std::invalid_argument("field modulus must be a prime below 2^31");
    }
    return FieldSpec{p};
}

FieldSpec FieldSpec::parse(std::string_view s) {
    if (s == "Q" || s == "q") return rationals();
    if (!s.empty() && (s[0] == 'F' || s[0] == 'f')) {
        std::uint32_t p = 0;
        auto body = s.substr(1);
        auto [ptr, ec] = std::from_chars(body.data(), body.data() + body.size(), p);
        if (ec == std::errc() && ptr == body.data() + body.size()) return prime(p);
    }
    throw std::invalid_argument("unknown field \"" + std::string(s) + "\" (expected Q or F<p>)");
}

std::string FieldSpec::name() const {
    return is_rational() ? "Q" : "F" + std::to_string(modulus);
}

Rational FieldSpec::canon(const Rational& a) const {
    if (is_rational()) return a;
    // num * den^{-1} mod p
    std::int64_t p = modulus;
    std::int64_t n = a.num() % p;
    if (n < 0) n += p;
    if (a.den() == 1) return Rational(n);
    Rational d = inv(Rational(a.den() % p));
    return Rational((static_cast<__int128>(n) * d.num()) % p);
}

Rational FieldSpec::inv(const Rational& a) const {
    if (a.is_zero()) throw std::invalid_argument("inverse of zero");
    if (is_rational()) return Rational(1) / a;
    std::int64_t p = modulus;
    std::int64_t v = a.num() % p;
    if (v < 0) v += p;
    if (v == 0) throw std::invalid_argument("inverse of zero");
    // extended Euclid
    std::int64_t t = 0, new_t = 1, r = p, new_r = v;
    while (new_r != 0) {
        std::int64_t q = r / new_r;
        std::int64_t tmp = t - q * new_t;
        t = new_t;
        new_t = tmp;
        tmp = r - q * new_r;
        r = new_r;
        new_r = tmp;
    }
    if (t < 0) t += p;
    return Rational(t);
}

}  // namespace lpa
