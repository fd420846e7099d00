#include "lpa/poly.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <limits>
#include <map>
#include <numeric>
#include <optional>
#include <random>
#include <set>

namespace lpa {

namespace {

using Coeffs = std::vector<Rational>;

void trim(Coeffs& c) {
    while (!c.empty() && c.back().is_zero()) c.pop_back();
}

int deg(const Coeffs& c) { return static_cast<int>(c.size()) - 1; }

Coeffs r_add(const FieldSpec& k, const Coeffs& a, const Coeffs& b) {
    Coeffs r(std::max(a.size(), b.size()));
    for (size_t i = 0; i < r.size(); ++i) {
        Rational x = i < a.size() ? a[i] : Rational();
        Rational y = i < b.size() ? b[i] : Rational();
        r[i] = k.add(x, y);
    }
    trim(r);
    return r;
}

Coeffs r_sub(const FieldSpec& k, const Coeffs& a, const Coeffs& b) {
    Coeffs r(std::max(a.size(), b.size()));
    for (size_t i = 0; i < r.size(); ++i) {
        Rational x = i < a.size() ? a[i] : Rational();
        Rational y = i < b.size() ? b[i] : Rational();
        r[i] = k.sub(x, y);
    }
    trim(r);
    return r;
}

Coeffs r_mul(const FieldSpec& k, const Coeffs& a, const Coeffs& b) {
    if (a.empty() || b.empty()) return {};
    Coeffs r(a.size() + b.size() - 1);
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i].is_zero()) continue;
        for (size_t j = 0; j < b.size(); ++j) {
            r[i + j] = k.add(r[i + j], k.mul(a[i], b[j]));
        }
    }
    trim(r);
    return r;
}

void r_divmod(const FieldSpec& k, Coeffs a, const Coeffs& b, Coeffs& q, Coeffs& r) {
    if (b.empty()) throw std::invalid_argument("polynomial division by zero");
    q.assign(a.size() > b.size() ? a.size() - b.size() + 1 : 1, Rational());
    Rational lead_inv = k.inv(b.back());
    while (deg(a) >= deg(b)) {
        int shift = deg(a) - deg(b);
        Rational c = k.mul(a.back(), lead_inv);
        q[shift] = c;
        for (size_t i = 0; i < b.size(); ++i) {
            a[shift + i] = k.sub(a[shift + i], k.mul(c, b[i]));
        }
        trim(a);
        if (a.empty()) break;
    }
    trim(q);
    r = std::move(a);
}

Coeffs r_mod(const FieldSpec& k, const Coeffs& a, const Coeffs& b) {
    Coeffs q, r;
    r_divmod(k, a, b, q, r);
    return r;
}

bool r_divides(const FieldSpec& k, const Coeffs& d, const Coeffs& f) {
    return r_mod(k, f, d).empty();
}

Coeffs r_make_monic(const FieldSpec& k, Coeffs a) {
    if (a.empty()) return a;
    Rational inv = k.inv(a.back());
    for (auto& c : a) c = k.mul(c, inv);
    return a;
}

// Fraction-free gcd over Q: primitive pseudo-remainder sequence in 128-bit
// integers, content removed each step.
using I128 = __int128;

I128 iabs128(I128 v) { return v < 0 ? -v : v; }

I128 gcd128i(I128 a, I128 b) {
    a = iabs128(a);
    b = iabs128(b);
    while (b) {
        I128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

I128 checked_mul(I128 a, I128 b) {
    if (a != 0 && iabs128(b) > (~(I128(1) << 127)) / iabs128(a)) {
        throw std::overflow_error("polynomial gcd overflow");
    }
    return a * b;
}

std::vector<I128> prim128(std::vector<I128> a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
    I128 content = 0;
    for (const auto& c : a) content = gcd128i(content, c);
    if (content > 1) {
        for (auto& c : a) c /= content;
    }
    return a;
}

std::vector<I128> prem128(std::vector<I128> f, const std::vector<I128>& g) {
    I128 lc = g.back();
    while (f.size() >= g.size() && !f.empty()) {
        size_t shift = f.size() - g.size();
        I128 top = f.back();
        for (auto& c : f) c = checked_mul(c, lc);
        for (size_t i = 0; i < g.size(); ++i) {
            f[shift + i] -= checked_mul(top, g[i]);
        }
        while (!f.empty() && f.back() == 0) f.pop_back();
    }
    return prim128(std::move(f));
}

std::vector<I128> to_primitive128(const Coeffs& a) {
    std::int64_t den = 1;
    for (const auto& c : a) den = std::lcm(den, c.den());
    std::vector<I128> out(a.size());
    for (size_t i = 0; i < a.size(); ++i) {
        out[i] = checked_mul(a[i].num(), den / a[i].den());
    }
    return prim128(std::move(out));
}

Coeffs gcd_q(const Coeffs& a, const Coeffs& b) {
    std::vector<I128> pa = to_primitive128(a);
    std::vector<I128> pb = to_primitive128(b);
    if (pa.empty()) std::swap(pa, pb);
    while (!pb.empty()) {
        std::vector<I128> r = prem128(pa, pb);
        pa = std::move(pb);
        pb = std::move(r);
    }
    // monic rational form
    Coeffs out(pa.size());
    I128 lc = pa.empty() ? 1 : pa.back();
    for (size_t i = 0; i < pa.size(); ++i) {
        I128 n = pa[i], d = lc;
        I128 g = gcd128i(n, d);
        if (g > 1) {
            n /= g;
            d /= g;
        }
        if (d < 0) {
            n = -n;
            d = -d;
        }
        if (iabs128(n) > std::numeric_limits<std::int64_t>::max() ||
            d > std::numeric_limits<std::int64_t>::max()) {
            throw std::overflow_error("polynomial gcd overflow");
        }
        out[i] = Rational(static_cast<std::int64_t>(n), static_cast<std::int64_t>(d));
    }
    return out;
}

Coeffs r_gcd(const FieldSpec& k, Coeffs a, Coeffs b) {
    if (k.is_rational()) return gcd_q(a, b);
    while (!b.empty()) {
        Coeffs r = r_mod(k, a, b);
        a = std::move(b);
        b = std::move(r);
    }
    return r_make_monic(k, std::move(a));
}

Coeffs r_derivative(const FieldSpec& k, const Coeffs& a) {
    Coeffs r;
    for (size_t i = 1; i < a.size(); ++i) {
        r.push_back(k.mul(a[i], k.canon(Rational(static_cast<std::int64_t>(i)))));
    }
    trim(r);
    return r;
}

Rational r_eval(const FieldSpec& k, const Coeffs& a, const Rational& x) {
    Rational acc;
    for (size_t i = a.size(); i-- > 0;) acc = k.add(k.mul(acc, x), a[i]);
    return acc;
}

Coeffs r_powmod(const FieldSpec& k, Coeffs base, std::uint64_t e, const Coeffs& m) {
    Coeffs r{Rational(1)};
    base = r_mod(k, base, m);
    while (e) {
        if (e & 1) r = r_mod(k, r_mul(k, r, base), m);
        e >>= 1;
        if (e) base = r_mod(k, r_mul(k, base, base), m);
    }
    return r;
}

// ---- factorization over F_p --------------------------------------------

Coeffs pth_root_fp(const FieldSpec& k, const Coeffs& f) {
    // f(x) = g(x^p); in a prime field coefficients are Frobenius-fixed.
    std::uint32_t p = k.modulus;
    Coeffs g;
    for (size_t i = 0; i < f.size(); i += p) g.push_back(f[i]);
    trim(g);
    return g;
}

std::vector<std::pair<Coeffs, int>> sqf_decomp_fp(const FieldSpec& k, const Coeffs& f) {
    std::vector<std::pair<Coeffs, int>> out;
    std::uint32_t p = k.modulus;
    Coeffs df = r_derivative(k, f);
    if (df.empty()) {
        for (auto& [s, e] : sqf_decomp_fp(k, r_make_monic(k, pth_root_fp(k, f)))) {
            out.emplace_back(s, e * static_cast<int>(p));
        }
        return out;
    }
    Coeffs c = r_gcd(k, f, df);
    Coeffs w, q;
    r_divmod(k, f, c, w, q);
    int i = 1;
    while (deg(w) > 0) {
        Coeffs y = r_gcd(k, w, c);
        Coeffs z, rem;
        r_divmod(k, w, y, z, rem);
        if (deg(z) > 0) out.emplace_back(r_make_monic(k, z), i);
        Coeffs c2;
        r_divmod(k, c, y, c2, rem);
        c = std::move(c2);
        w = std::move(y);
        ++i;
    }
    if (deg(c) > 0) {
        for (auto& [s, e] : sqf_decomp_fp(k, r_make_monic(k, pth_root_fp(k, c)))) {
            out.emplace_back(s, e * static_cast<int>(p));
        }
    }
    return out;
}

Coeffs random_poly_fp(const FieldSpec& k, int max_deg, std::mt19937& rng) {
    std::uniform_int_distribution<std::int64_t> dist(0, k.modulus - 1);
    Coeffs r(max_deg);
    for (auto& c : r) c = Rational(dist(rng));
    trim(r);
    return r;
}

void edf_fp(const FieldSpec& k, const Coeffs& f, int d, std::vector<Coeffs>& out,
            std::mt19937& rng) {
    if (deg(f) == d) {
        out.push_back(f);
        return;
    }
    if (deg(f) <= 0) return;
    std::uint32_t p = k.modulus;
    while (true) {
        Coeffs r = random_poly_fp(k, deg(f), rng);
        if (deg(r) < 1) continue;
        Coeffs g;
        if (p == 2) {
            // trace map over F_2
            g = r_mod(k, r, f);
            Coeffs t = g;
            for (int i = 1; i < d; ++i) {
                t = r_mod(k, r_mul(k, t, t), f);
                g = r_add(k, g, t);
            }
            g = r_gcd(k, g, f);
        } else {
            // r^((p^d-1)/2) = norm(r)^((p-1)/2) with norm via Frobenius powers
            Coeffs t = r_mod(k, r, f);
            Coeffs norm = t;
            for (int j = 1; j < d; ++j) {
                t = r_powmod(k, t, p, f);
                norm = r_mod(k, r_mul(k, norm, t), f);
            }
            Coeffs pw = r_powmod(k, norm, (p - 1) / 2, f);
            pw = r_sub(k, pw, Coeffs{Rational(1)});
            g = r_gcd(k, pw, f);
        }
        if (deg(g) > 0 && deg(g) < deg(f)) {
            Coeffs h, rem;
            r_divmod(k, f, g, h, rem);
            edf_fp(k, r_make_monic(k, g), d, out, rng);
            edf_fp(k, r_make_monic(k, h), d, out, rng);
            return;
        }
    }
}

std::vector<Coeffs> factor_sqf_fp(const FieldSpec& k, Coeffs f) {
    // distinct-degree split, then equal-degree split
    std::vector<Coeffs> out;
    std::uint32_t p = k.modulus;
    std::mt19937 rng(0x5eed);
    Coeffs h{Rational(0), Rational(1)};  // x
    Coeffs f_star = f;
    for (int d = 1; 2 * d <= deg(f_star); ++d) {
        h = r_powmod(k, h, p, f_star);
        Coeffs h_minus_x = r_sub(k, h, Coeffs{Rational(0), Rational(1)});
        Coeffs gd = r_gcd(k, h_minus_x, f_star);
        if (deg(gd) > 0) {
            edf_fp(k, gd, d, out, rng);
            Coeffs q, rem;
            r_divmod(k, f_star, gd, q, rem);
            f_star = r_make_monic(k, std::move(q));
            h = r_mod(k, h, f_star);
        }
    }
    if (deg(f_star) > 0) out.push_back(f_star);
    return out;
}

std::vector<Coeffs> irreducibles_fp(const FieldSpec& k, const Coeffs& f) {
    std::vector<Coeffs> out;
    for (auto& [s, e] : sqf_decomp_fp(k, f)) {
        for (auto& q : factor_sqf_fp(k, s)) out.push_back(q);
    }
    return out;
}

// ---- factorization over Q ----------------------------------------------

std::vector<std::int64_t> divisors_signed(std::int64_t n) {
    n = std::llabs(n);
    std::vector<std::int64_t> d;
    for (std::int64_t i = 1; i * i <= n; ++i) {
        if (n % i == 0) {
            d.push_back(i);
            if (i != n / i) d.push_back(n / i);
        }
    }
    std::vector<std::int64_t> out;
    out.reserve(2 * d.size());
    for (auto v : d) {
        out.push_back(v);
        out.push_back(-v);
    }
    std::sort(out.begin(), out.end(), [](auto a, auto b) { return std::llabs(a) < std::llabs(b) || (std::llabs(a) == std::llabs(b) && a > b); });
    return out;
}

// Subset sums of the multiset of F_p factor degrees: the possible degrees of
// rational factors.
std::set<int> degree_sums(const std::vector<int>& degs) {
    std::set<int> sums{0};
    for (int d : degs) {
        std::set<int> next = sums;
        for (int s : sums) next.insert(s + d);
        sums = std::move(next);
    }
    return sums;
}

std::optional<std::set<int>> modular_degree_filter(const Coeffs& f) {
    std::optional<std::set<int>> allowed;
    int good = 0;
    for (std::uint32_t p : {3u, 5u, 7u, 11u, 13u, 17u, 19u, 23u}) {
        FieldSpec k = FieldSpec::prime(p);
        Coeffs fp(f.size());
        for (size_t i = 0; i < f.size(); ++i) fp[i] = k.canon(f[i]);
        trim(fp);
        if (deg(fp) != deg(f)) continue;  // leading coefficient vanished
        if (deg(r_gcd(k, fp, r_derivative(k, fp))) != 0) continue;  // not squarefree mod p
        std::vector<int> degs;
        for (auto& q : factor_sqf_fp(k, r_make_monic(k, fp))) degs.push_back(deg(q));
        std::set<int> sums = degree_sums(degs);
        if (!allowed) {
            allowed = sums;
        } else {
            std::set<int> inter;
            std::set_intersection(allowed->begin(), allowed->end(), sums.begin(), sums.end(),
                                  std::inserter(inter, inter.begin()));
            allowed = std::move(inter);
        }
        if (++good == 3) break;
    }
    return allowed;
}

// Lagrange basis over the sample points, lowest degree first.
std::vector<Coeffs> lagrange_basis(const std::vector<std::int64_t>& xs) {
    FieldSpec q = FieldSpec::rationals();
    std::vector<Coeffs> basis;
    for (size_t i = 0; i < xs.size(); ++i) {
        Coeffs num{Rational(1)};
        Rational denom(1);
        for (size_t j = 0; j < xs.size(); ++j) {
            if (i == j) continue;
            num = r_mul(q, num, Coeffs{Rational(-xs[j]), Rational(1)});
            denom = denom * Rational(xs[i] - xs[j]);
        }
        Rational inv = Rational(1) / denom;
        for (auto& c : num) c = c * inv;
        basis.push_back(std::move(num));
    }
    return basis;
}

// One irreducible monic integer factor of degree <= deg(f)/2, if any.
// f: monic integer, squarefree, nonzero constant term, no integer roots.
std::optional<Coeffs> kronecker_factor(const Coeffs& f) {
    FieldSpec q = FieldSpec::rationals();
    int n = deg(f);
    auto allowed = modular_degree_filter(f);
    for (int d = 2; d <= n / 2; ++d) {
        if (allowed && !allowed->count(d)) continue;
        std::vector<std::int64_t> xs;
        for (std::int64_t x = 0; static_cast<int>(xs.size()) < d + 1; x = x > 0 ? -x : -x + 1) {
            xs.push_back(x);
        }
        std::vector<std::vector<std::int64_t>> divs;
        for (auto x : xs) {
            Rational v = r_eval(q, f, Rational(x));
            divs.push_back(divisors_signed(v.num()));
        }
        auto basis = lagrange_basis(xs);
        std::vector<Rational> lead(basis.size());
        for (size_t i = 0; i < basis.size(); ++i) {
            lead[i] = basis[i].size() == static_cast<size_t>(d + 1) ? basis[i][d] : Rational();
        }
        std::vector<size_t> idx(xs.size(), 0);
        while (true) {
            // monic check first; it rejects almost every tuple cheaply
            Rational top;
            for (size_t i = 0; i < idx.size(); ++i) {
                top = top + Rational(divs[i][idx[i]]) * lead[i];
            }
            if (top == Rational(1)) {
                Coeffs cand(d + 1);
                for (size_t i = 0; i < idx.size(); ++i) {
                    Rational y(divs[i][idx[i]]);
                    for (size_t c = 0; c < basis[i].size(); ++c) {
                        cand[c] = cand[c] + y * basis[i][c];
                    }
                }
                trim(cand);
                bool ok = deg(cand) == d && !cand[0].is_zero();
                for (auto& c : cand) ok = ok && c.is_integer();
                if (ok && r_divides(q, cand, f)) return cand;
            }
            size_t pos = 0;
            while (pos < idx.size() && ++idx[pos] == divs[pos].size()) {
                idx[pos] = 0;
                ++pos;
            }
            if (pos == idx.size()) break;
        }
    }
    return std::nullopt;
}

// Full split of a monic integer squarefree polynomial with f(0) != 0.
void factor_monic_int(Coeffs f, std::vector<Coeffs>& out) {
    FieldSpec q = FieldSpec::rationals();
    // integer roots
    bool again = true;
    while (again && deg(f) >= 1) {
        again = false;
        for (auto r : divisors_signed(f[0].num())) {
            if (r_eval(q, f, Rational(r)).is_zero()) {
                Coeffs lin{Rational(-r), Rational(1)};
                out.push_back(lin);
                Coeffs quo, rem;
                r_divmod(q, f, lin, quo, rem);
                f = std::move(quo);
                again = true;
                break;
            }
        }
    }
    if (deg(f) == 0) return;
    if (deg(f) <= 3) {  // no roots left, so degree 2 or 3 is irreducible
        out.push_back(std::move(f));
        return;
    }
    if (auto g = kronecker_factor(f)) {
        Coeffs quo, rem;
        r_divmod(q, f, *g, quo, rem);
        factor_monic_int(std::move(*g), out);
        factor_monic_int(std::move(quo), out);
        return;
    }
    out.push_back(std::move(f));
}

std::vector<Coeffs> irreducibles_q(const Coeffs& f) {
    FieldSpec q = FieldSpec::rationals();
    if (deg(f) > 10) {
        throw std::domain_error("rational factorization is capped at degree 10");
    }
    // radical = f / gcd(f, f')
    Coeffs rad, rem;
    r_divmod(q, f, r_gcd(q, f, r_derivative(q, f)), rad, rem);
    rad = r_make_monic(q, std::move(rad));
    // scale x -> x/m to reach a monic integer polynomial
    std::int64_t m = 1;
    for (auto& c : rad) m = std::lcm(m, c.den());
    Coeffs scaled(rad.size());
    Rational pw(1);
    for (size_t i = rad.size(); i-- > 0;) {
        scaled[i] = rad[i] * pw;
        pw = pw * Rational(m);
    }
    std::vector<Coeffs> ints;
    factor_monic_int(std::move(scaled), ints);
    // map back through x -> m x
    std::vector<Coeffs> out;
    for (auto& g : ints) {
        // h(x) = g(m x) / m^{deg g}
        Coeffs h(g.size());
        Rational scale(1);
        for (int i = 0; i < deg(g); ++i) scale = scale * Rational(1, m);
        Rational mp(1);
        for (size_t i = 0; i < g.size(); ++i) {
            h[i] = g[i] * mp * scale;
            mp = mp * Rational(m);
        }
        out.push_back(std::move(h));
    }
    return out;
}

std::vector<Coeffs> irreducibles(const FieldSpec& k, const Coeffs& f) {
    return k.is_rational() ? irreducibles_q(f) : irreducibles_fp(k, f);
}

}  // namespace

// ---- Poly ----------------------------------------------------------------

Poly::Poly(FieldSpec field, std::vector<Rational> raw) : field_(field) {
    for (auto& c : raw) c = field_.canon(c);
    trim(raw);
    if (raw.empty()) throw std::invalid_argument("zero polynomial has no canonical form");
    size_t shift = 0;
    while (raw[shift].is_zero()) ++shift;
    raw.erase(raw.begin(), raw.begin() + shift);
    Rational inv = field_.inv(raw.back());
    for (auto& c : raw) c = field_.mul(c, inv);
    if (raw.size() == 1) raw[0] = Rational(1);
    coeffs_ = std::move(raw);
}

Poly Poly::unit(FieldSpec field) { return Poly(field, {Rational(1)}); }

bool operator<(const Poly& a, const Poly& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    for (size_t i = a.coeffs_.size(); i-- > 0;) {
        if (a.coeffs_[i] != b.coeffs_[i]) return a.coeffs_[i] < b.coeffs_[i];
    }
    return false;
}

std::string Poly::str() const {
    if (is_unit()) return "1";
    std::string out;
    for (int i = degree(); i >= 0; --i) {
        Rational c = coeffs_[i];
        if (c.is_zero()) continue;
        bool neg = c < Rational(0);
        Rational a = neg ? -c : c;
        if (out.empty()) {
            if (neg) out += "-";
        } else {
            out += neg ? " - " : " + ";
        }
        std::string xpart = i == 0 ? "" : i == 1 ? "x" : "x^" + std::to_string(i);
        if (i == 0 || a != Rational(1)) {
            out += a.str();
            if (i > 0) out += "*";
        }
        out += xpart;
    }
    return out;
}

Poly Poly::parse(FieldSpec field, std::string_view text) {
    std::vector<Rational> coeffs;
    size_t i = 0;
    auto skip = [&] { while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i; };
    auto read_int = [&]() -> std::int64_t {
        size_t start = i;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
        if (i == start) throw std::invalid_argument("bad polynomial: digit expected in \"" + std::string(text) + "\"");
        return std::stoll(std::string(text.substr(start, i - start)));
    };
    skip();
    bool first = true;
    while (i < text.size()) {
        int sign = 1;
        if (!first || text[i] == '+' || text[i] == '-') {
            if (i >= text.size() || (text[i] != '+' && text[i] != '-')) {
                throw std::invalid_argument("bad polynomial: operator expected in \"" + std::string(text) + "\"");
            }
            sign = text[i] == '-' ? -1 : 1;
            ++i;
            skip();
        }
        first = false;
        Rational coef(1);
        bool have_coef = false;
        if (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
            std::int64_t num = read_int();
            std::int64_t den = 1;
            if (i < text.size() && text[i] == '/') {
                ++i;
                den = read_int();
            }
            coef = Rational(num, den);
            have_coef = true;
            skip();
            if (i < text.size() && text[i] == '*') {
                ++i;
                skip();
            }
        }
        int power = 0;
        if (i < text.size() && text[i] == 'x') {
            ++i;
            power = 1;
            if (i < text.size() && text[i] == '^') {
                ++i;
                power = static_cast<int>(read_int());
            }
        } else if (!have_coef) {
            throw std::invalid_argument("bad polynomial: term expected in \"" + std::string(text) + "\"");
        }
        if (static_cast<size_t>(power) >= coeffs.size()) coeffs.resize(power + 1);
        coeffs[power] = coeffs[power] + (sign < 0 ? -coef : coef);
        skip();
    }
    if (coeffs.empty()) throw std::invalid_argument("bad polynomial: empty input");
    return Poly(field, std::move(coeffs));
}

Poly mul(const Poly& f, const Poly& g) {
    if (f.field() != g.field()) throw std::invalid_argument("field mismatch");
    Coeffs r = r_mul(f.field(), Coeffs(f.coeffs().begin(), f.coeffs().end()),
                     Coeffs(g.coeffs().begin(), g.coeffs().end()));
    return Poly(f.field(), std::move(r));
}

Poly poly_pow(const Poly& f, unsigned n) {
    Poly acc = Poly::unit(f.field());
    for (unsigned i = 0; i < n; ++i) acc = mul(acc, f);
    return acc;
}

Poly poly_gcd(const Poly& f, const Poly& g) {
    if (f.field() != g.field()) throw std::invalid_argument("field mismatch");
    if (f.is_unit() || g.is_unit()) return Poly::unit(f.field());
    Coeffs r = r_gcd(f.field(), Coeffs(f.coeffs().begin(), f.coeffs().end()),
                     Coeffs(g.coeffs().begin(), g.coeffs().end()));
    return Poly(f.field(), std::move(r));
}

Poly poly_lcm(const Poly& f, const Poly& g) {
    Poly p = mul(f, g);
    Poly d = poly_gcd(f, g);
    Coeffs q, rem;
    r_divmod(f.field(), Coeffs(p.coeffs().begin(), p.coeffs().end()),
             Coeffs(d.coeffs().begin(), d.coeffs().end()), q, rem);
    return Poly(f.field(), std::move(q));
}

bool divides(const Poly& g, const Poly& f) {
    if (f.field() != g.field()) throw std::invalid_argument("field mismatch");
    if (g.is_unit()) return true;
    if (f.is_unit()) return false;
    return r_divides(f.field(), Coeffs(g.coeffs().begin(), g.coeffs().end()),
                     Coeffs(f.coeffs().begin(), f.coeffs().end()));
}

std::vector<std::pair<Poly, int>> factor(const Poly& f) {
    std::vector<std::pair<Poly, int>> out;
    if (f.is_unit()) return out;
    const FieldSpec& k = f.field();
    Coeffs c(f.coeffs().begin(), f.coeffs().end());
    std::vector<Coeffs> irr = irreducibles(k, c);
    std::map<Poly, int> seen;
    for (auto& g : irr) {
        Poly p(k, g);
        if (seen.count(p)) continue;
        int e = 0;
        Coeffs rest = c;
        while (true) {
            Coeffs q, rem;
            r_divmod(k, rest, Coeffs(p.coeffs().begin(), p.coeffs().end()), q, rem);
            if (!rem.empty()) break;
            rest = std::move(q);
            ++e;
        }
        seen.emplace(std::move(p), e);
    }
    // sanity: degrees must add up
    int total = 0;
    for (auto& [p, e] : seen) total += p.degree() * e;
    if (total != f.degree()) throw std::logic_error("factor: degree bookkeeping failed");
    out.assign(seen.begin(), seen.end());
    return out;
}

bool is_irreducible(const Poly& f) {
    if (f.is_unit()) return false;
    auto fs = factor(f);
    return fs.size() == 1 && fs[0].second == 1;
}

}  // namespace lpa
