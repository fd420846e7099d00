#pragma once

#include <optional>
#include <string>

#include "lpa/graph.hpp"

namespace lpa {

/// Whole-algebra classification, one flag per "every ideal of L is X"
/// criterion, each computed from its own graph-level condition.
struct RingReport {
    bool simple = false;
    bool graded_simple = false;
    bool insulated_prime_ring = false;
    bool generalized_zpi = false;
    bool laskerian = false;  // identical to generalized_zpi
    bool all_ideals_strongly_irreducible = false;
    bool all_ideals_strongly_prime = false;
    bool strongly_zero_dimensional = false;
    bool all_ideals_product_of_insulated = false;
    bool unique_nonzero_ideal_insulated = false;

    // Witness data for the falsified flags, when available.
    std::optional<std::string> chain_witness;        // incomparable pair of pairs
    std::optional<std::string> no_exit_cycle_witness;
    std::optional<std::string> strong_csp_witness;   // pair whose quotient fails
};

/// All admissible pairs (H,S) pairwise comparable under the pair order.
bool admissible_pair_chain(const Graph& g, int bound = 20);

RingReport ring_report(const Graph& g, int bound = 20);

}  // namespace lpa
