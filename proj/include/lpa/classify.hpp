#pragma once

#include <optional>

#include "lpa/ideal.hpp"

namespace lpa {

/// Which clause of the prime-ideal characterization an ideal satisfies.
struct PrimeCase {
    enum class Tag { graded_full, graded_breaking, nongraded };
    Tag tag = Tag::graded_full;
    int breaking_vertex = -1;  // the u of the graded_breaking case
};

/// Prime test on a proper normalized ideal:
///  graded_full:     S = B_H and the quotient is downward directed;
///  graded_breaking: S = B_H \ {u} and every vertex outside H reaches u
///                   (the primed u' is a sink by construction);
///  nongraded:       a single entry (c, p) with p irreducible, S = B_H, the
///                   quotient downward directed (every vertex then reaches c).
std::optional<PrimeCase> classify_prime(const Graph& g, const CanonicalIdeal& ideal);

/// I = P^n for a prime P; equivalently irreducible, equivalently primary.
bool is_strongly_irreducible(const Graph& g, const CanonicalIdeal& ideal);
bool is_primary(const Graph& g, const CanonicalIdeal& ideal);

/// Graded with the quotient downward directed, exit-free on cycles, and
/// carrying the strong countable separation property.
bool is_strongly_prime(const Graph& g, const CanonicalIdeal& ideal);

bool is_primitive(const Graph& g, const CanonicalIdeal& ideal);
bool is_strongly_primitive(const Graph& g, const CanonicalIdeal& ideal);

/// Graded: quotient simple (Condition (L), trivial hereditary saturated
/// lattice). Non-graded: single (c, p) irreducible over a graded-simple
/// quotient (row-finite, downward directed, with a no-exit cycle).
bool is_maximal(const Graph& g, const CanonicalIdeal& ideal);
bool is_maximal_graded(const Graph& g, const CanonicalIdeal& ideal);

/// Maximal, or maximal graded with a finite-comet quotient (so the quotient
/// ring is M_n(K[x,x^-1])).
bool is_insulated_prime(const Graph& g, const CanonicalIdeal& ideal);

struct IdealReport {
    std::optional<PrimeCase> prime;
    bool strongly_irreducible = false;
    bool primary = false;
    bool strongly_prime = false;
    bool primitive = false;
    bool strongly_primitive = false;
    bool maximal = false;
    bool maximal_graded = false;
    bool insulated_prime = false;
};

IdealReport classify_ideal(const Graph& g, const CanonicalIdeal& ideal);

}  // namespace lpa
