#pragma once

#include <span>
#include <string>
#include <utility>
#include <vector>

#include "lpa/field.hpp"

namespace lpa {

/// Canonical generator of an ideal of K[x,x^-1], up to units x^k and scalars:
/// monic with nonzero constant term and degree >= 1, or the unit marker 1.
/// Coefficients are stored lowest degree first.
class Poly {
public:
    /// Canonicalize a raw coefficient list: strip the largest power of x
    /// dividing it, divide by the leading coefficient. Throws on the zero
    /// polynomial.
    Poly(FieldSpec field, std::vector<Rational> raw);

    static Poly unit(FieldSpec field);
    static Poly parse(FieldSpec field, std::string_view text);

    const FieldSpec& field() const { return field_; }
    std::span<const Rational> coeffs() const { return coeffs_; }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_unit() const { return coeffs_.size() == 1; }

    std::string str() const;

    friend bool operator==(const Poly& a, const Poly& b) {
        return a.field_ == b.field_ && a.coeffs_ == b.coeffs_;
    }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }
    /// Canonical order: degree, then coefficients from the top down.
    friend bool operator<(const Poly& a, const Poly& b);

private:
    FieldSpec field_;
    std::vector<Rational> coeffs_;
};

Poly mul(const Poly& f, const Poly& g);
Poly poly_pow(const Poly& f, unsigned n);
Poly poly_gcd(const Poly& f, const Poly& g);
Poly poly_lcm(const Poly& f, const Poly& g);
/// g | f in K[x,x^-1], i.e. on canonical forms.
bool divides(const Poly& g, const Poly& f);

/// Irreducible factorization f = prod p_i^{n_i}, p_i monic irreducible with
/// nonzero constant term, sorted canonically. Unit input yields {}.
/// Over F_p: squarefree split + distinct-degree + equal-degree (Cantor-
/// Zassenhaus). Over Q: rational roots + modular degree filters + Kronecker
/// interpolation, capped at degree 10.
std::vector<std::pair<Poly, int>> factor(const Poly& f);

bool is_irreducible(const Poly& f);

}  // namespace lpa
