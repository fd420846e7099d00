#pragma once

#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "lpa/graph.hpp"
#include "lpa/poly.hpp"

namespace lpa {

/// product/intersect input outside the representable rule table.
struct rule_table_error : std::domain_error {
    using std::domain_error::domain_error;
};

/// An internal cross-check failed; always a bug.
struct verification_error : std::logic_error {
    using std::logic_error::logic_error;
};

/// (H, S): H hereditary saturated, S a subset of the breaking vertices of H.
/// Coordinates of a graded ideal. Ordered by H ⊆ H', S ⊆ H' ∪ S'.
struct AdmissiblePair {
    VertexSet H, S;
    friend bool operator==(const AdmissiblePair&, const AdmissiblePair&) = default;
};

bool pair_leq(const AdmissiblePair& a, const AdmissiblePair& b);
/// Validates H hereditary saturated and S ⊆ B_H; throws otherwise.
void check_admissible(const Graph& g, const AdmissiblePair& p);
std::vector<AdmissiblePair> all_admissible_pairs(const Graph& g, int bound = 20);

/// Canonical form of a two-sided ideal: admissible pair plus a finite map
/// {cycle without exits in the quotient -> canonical polynomial}. The improper
/// ideal is representable as (E^0, {}).
class CanonicalIdeal {
public:
    using Entry = std::pair<CycleId, Poly>;

    const AdmissiblePair& pair() const { return pair_; }
    const std::vector<Entry>& cycles() const { return cycles_; }
    const FieldSpec& field() const { return field_; }

    bool is_graded() const { return cycles_.empty(); }
    bool is_zero() const { return is_graded() && pair_.H.empty() && pair_.S.empty(); }
    bool is_improper(const Graph& g) const { return pair_.H == g.all_vertices(); }

    friend bool operator==(const CanonicalIdeal& a, const CanonicalIdeal& b) {
        return a.pair_ == b.pair_ && a.field_ == b.field_ && a.cycles_ == b.cycles_;
    }
    friend bool operator!=(const CanonicalIdeal& a, const CanonicalIdeal& b) {
        return !(a == b);
    }

    /// Deterministic order for reports and factor lists: |H| asc, then H, S,
    /// then cycle entries.
    static bool canonical_less(const Graph& g, const CanonicalIdeal& a, const CanonicalIdeal& b);

private:
    CanonicalIdeal(AdmissiblePair p, std::vector<Entry> c, FieldSpec f)
        : pair_(p), cycles_(std::move(c)), field_(f) {}

    friend CanonicalIdeal normalize(const Graph&, AdmissiblePair, std::vector<Entry>, FieldSpec);
    friend CanonicalIdeal graded_ideal(const Graph&, VertexSet, VertexSet, FieldSpec);
    friend CanonicalIdeal graded_part(const CanonicalIdeal&);
    friend CanonicalIdeal with_entries_unchecked(AdmissiblePair, std::vector<Entry>, FieldSpec);

    AdmissiblePair pair_;
    std::vector<Entry> cycles_;  // sorted by cycle
    FieldSpec field_;
};

/// Canonicalize: reduce polynomials, absorb unit entries (their cycle
/// vertices join H; H is re-closed, members of S with no edge left outside H
/// join H too; S refiltered; remaining cycles revalidated), combine duplicate
/// cycles by gcd. Throws if the pair is not admissible or a listed cycle is
/// not a cycle without exits of the quotient.
CanonicalIdeal normalize(const Graph& g, AdmissiblePair raw,
                         std::vector<CanonicalIdeal::Entry> entries, FieldSpec field);

CanonicalIdeal graded_ideal(const Graph& g, VertexSet h, VertexSet s, FieldSpec field);
CanonicalIdeal zero_ideal(const Graph& g, FieldSpec field);
CanonicalIdeal improper_ideal(const Graph& g, FieldSpec field);

/// gr(I): same pair, no cycle entries.
CanonicalIdeal graded_part(const CanonicalIdeal& ideal);

/// Containment I ⊆ J on normalized forms: pair order plus per-cycle coverage
/// (each entry of I is absorbed by H_J or divided by J's entry on the same
/// cycle).
bool leq(const Graph& g, const CanonicalIdeal& i, const CanonicalIdeal& j);

/// Meet of graded ideals: (H_A ∩ H_B, (S_A ∪ H_A) ∩ (S_B ∪ H_B) ∩ B_meet).
CanonicalIdeal meet_graded(const Graph& g, const CanonicalIdeal& a, const CanonicalIdeal& b);
/// Join of graded ideals, by search over the admissible-pair lattice.
CanonicalIdeal join_graded(const Graph& g, const CanonicalIdeal& a, const CanonicalIdeal& b);

/// Rule table: (a) either factor graded -> meet with entry absorption,
/// (b) identical pairs -> per-cycle polynomial product, (c) both factor into
/// prime powers -> assemble route. Outside the table: rule_table_error.
CanonicalIdeal product(const Graph& g, const CanonicalIdeal& i, const CanonicalIdeal& j);
/// Same rule table; per-cycle lcm in case (b), max exponents in case (c).
CanonicalIdeal intersect(const Graph& g, const CanonicalIdeal& i, const CanonicalIdeal& j);

/// P^n for a prime P: graded P is idempotent; a non-graded (c,p) becomes
/// (c, p^n). Throws if P is not prime.
CanonicalIdeal prime_power(const Graph& g, const CanonicalIdeal& p, unsigned n);

}  // namespace lpa
