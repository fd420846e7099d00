#pragma once

#include <optional>
#include <span>
#include <vector>

#include "lpa/classify.hpp"

namespace lpa {

enum class FactorKind { strongly_irreducible, strongly_prime, insulated_prime };
enum class FactorForm { product, intersection };

struct Factorization {
    std::vector<std::pair<CanonicalIdeal, int>> factors;  // exponents > 1 only on non-graded primes
    FactorForm form = FactorForm::intersection;
    FactorKind kind = FactorKind::strongly_irreducible;
    bool irredundant = true;
};

/// The unique irredundant intersection of graded primes equal to gr(I):
/// the minimal graded primes over gr(I), meet-verified. Absent only if the
/// meet fails to reach gr(I) (cannot happen over a finite vertex set).
std::optional<std::vector<CanonicalIdeal>> gr_prime_decomposition(const Graph& g,
                                                                  const CanonicalIdeal& ideal);

/// Factor into prime powers: decompose gr(I), match each cycle entry to the
/// unique graded prime not containing its base, split the polynomial into
/// irreducible powers. The result is assemble-verified.
std::optional<Factorization> factor_strongly_irreducible(
    const Graph& g, const CanonicalIdeal& ideal, FactorForm form = FactorForm::intersection);

/// Graded ideals only; every minimal prime must itself be strongly prime.
std::optional<Factorization> factor_strongly_prime(
    const Graph& g, const CanonicalIdeal& ideal, FactorForm form = FactorForm::intersection);

/// Every minimal prime over gr(I) must be maximal graded; matched cycle
/// polynomials split into non-graded maximal factors, unmatched factors must
/// be insulated prime.
std::optional<Factorization> factor_insulated(
    const Graph& g, const CanonicalIdeal& ideal, FactorForm form = FactorForm::intersection);

/// Recombine factors: graded part is the iterated meet; each cycle's
/// polynomials combine by product or lcm according to the form. Requires the
/// matching configuration (all factors carrying a cycle share one pair; every
/// other factor absorbs the cycle's vertices); throws otherwise.
CanonicalIdeal assemble(const Graph& g,
                        std::span<const std::pair<CanonicalIdeal, int>> factors,
                        FactorForm form);

/// Drop factors whose removal leaves assemble unchanged, attempting smaller
/// ideals first (canonical order); the result is irredundant.
std::vector<std::pair<CanonicalIdeal, int>> irredundant_reduce(
    const Graph& g, std::vector<std::pair<CanonicalIdeal, int>> factors, FactorForm form);

/// Multiset equality of (factor, exponent) pairs.
bool same_up_to_permutation(const Graph& g, const Factorization& a, const Factorization& b);

const char* to_string(FactorKind k);
const char* to_string(FactorForm f);

}  // namespace lpa
