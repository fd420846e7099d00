#include "lpa/factorize.hpp"

#include <algorithm>
#include <map>

namespace lpa {

const char* to_string(FactorKind k) {
    switch (k) {
        case FactorKind::strongly_irreducible: return "strongly-irreducible";
        case FactorKind::strongly_prime: return "strongly-prime";
        case FactorKind::insulated_prime: return "insulated-prime";
    }
    return "?";
}

const char* to_string(FactorForm f) {
    return f == FactorForm::product ? "product" : "intersection";
}

namespace {

std::vector<CanonicalIdeal> graded_primes_over(const Graph& g, const CanonicalIdeal& ideal) {
    std::vector<CanonicalIdeal> out;
    for (const auto& p : all_admissible_pairs(g)) {
        if (p.H == g.all_vertices()) continue;
        if (!pair_leq(ideal.pair(), p)) continue;
        CanonicalIdeal candidate = graded_ideal(g, p.H, p.S, ideal.field());
        auto pc = classify_prime(g, candidate);
        if (pc && pc->tag != PrimeCase::Tag::nongraded) out.push_back(candidate);
    }
    return out;
}

void sort_factors(const Graph& g, std::vector<std::pair<CanonicalIdeal, int>>& factors) {
    std::sort(factors.begin(), factors.end(), [&](const auto& a, const auto& b) {
        if (CanonicalIdeal::canonical_less(g, a.first, b.first)) return true;
        if (CanonicalIdeal::canonical_less(g, b.first, a.first)) return false;
        return a.second < b.second;
    });
}

}  // namespace

std::optional<std::vector<CanonicalIdeal>> gr_prime_decomposition(const Graph& g,
                                                                  const CanonicalIdeal& ideal) {
    CanonicalIdeal gr = graded_part(ideal);
    if (gr.is_improper(g)) return std::nullopt;
    std::vector<CanonicalIdeal> primes = graded_primes_over(g, gr);
    std::vector<CanonicalIdeal> minimal;
    for (const auto& p : primes) {
        bool is_min = true;
        for (const auto& q : primes) {
            if (!(q == p) && pair_leq(q.pair(), p.pair())) {
                is_min = false;
                break;
            }
        }
        if (is_min) minimal.push_back(p);
    }
    if (minimal.empty()) return std::nullopt;
    CanonicalIdeal meet = minimal[0];
    for (size_t i = 1; i < minimal.size(); ++i) meet = meet_graded(g, meet, minimal[i]);
    if (!(meet == gr)) return std::nullopt;
    std::sort(minimal.begin(), minimal.end(), [&](const auto& a, const auto& b) {
        return CanonicalIdeal::canonical_less(g, a, b);
    });
    return minimal;
}

namespace {

// Index of the unique decomposition member not containing the cycle's
// vertices (all others must absorb them).
size_t match_cycle(const Graph& g, const std::vector<CanonicalIdeal>& primes, const CycleId& c) {
    (void)g;
    size_t found = primes.size();
    for (size_t j = 0; j < primes.size(); ++j) {
        if (!c.support().subset_of(primes[j].pair().H)) {
            if (found != primes.size()) {
                throw verification_error("cycle lies outside two graded primes");
            }
            found = j;
        }
    }
    if (found == primes.size()) {
        throw verification_error("cycle absorbed by every graded prime");
    }
    return found;
}

std::optional<Factorization> build_prime_power_factorization(const Graph& g,
                                                             const CanonicalIdeal& ideal,
                                                             FactorForm form, FactorKind kind) {
    auto primes = gr_prime_decomposition(g, ideal);
    if (!primes) return std::nullopt;
    std::vector<bool> matched(primes->size(), false);
    std::vector<std::pair<CanonicalIdeal, int>> factors;
    for (const auto& [c, f] : ideal.cycles()) {
        size_t t = match_cycle(g, *primes, c);
        matched[t] = true;
        const CanonicalIdeal& base = (*primes)[t];
        for (const auto& [p, e] : factor(f)) {
            CanonicalIdeal prime_factor =
                normalize(g, base.pair(), {{c, p}}, ideal.field());
            factors.emplace_back(std::move(prime_factor), e);
        }
    }
    for (size_t j = 0; j < primes->size(); ++j) {
        if (!matched[j]) factors.emplace_back((*primes)[j], 1);
    }
    sort_factors(g, factors);
    Factorization out{std::move(factors), form, kind, true};
    if (!(assemble(g, out.factors, form) == ideal)) {
        throw verification_error("factorization does not assemble back to its ideal");
    }
    return out;
}

}  // namespace

std::optional<Factorization> factor_strongly_irreducible(const Graph& g,
                                                         const CanonicalIdeal& ideal,
                                                         FactorForm form) {
    if (ideal.is_improper(g)) throw std::invalid_argument("factorization needs a proper ideal");
    return build_prime_power_factorization(g, ideal, form, FactorKind::strongly_irreducible);
}

std::optional<Factorization> factor_strongly_prime(const Graph& g, const CanonicalIdeal& ideal,
                                                   FactorForm form) {
    if (ideal.is_improper(g)) throw std::invalid_argument("factorization needs a proper ideal");
    if (!ideal.is_graded()) return std::nullopt;
    auto primes = gr_prime_decomposition(g, ideal);
    if (!primes) return std::nullopt;
    std::vector<std::pair<CanonicalIdeal, int>> factors;
    for (const auto& p : *primes) {
        if (!is_strongly_prime(g, p)) return std::nullopt;
        factors.emplace_back(p, 1);
    }
    sort_factors(g, factors);
    Factorization out{std::move(factors), form, FactorKind::strongly_prime, true};
    if (!(assemble(g, out.factors, form) == ideal)) {
        throw verification_error("factorization does not assemble back to its ideal");
    }
    return out;
}

std::optional<Factorization> factor_insulated(const Graph& g, const CanonicalIdeal& ideal,
                                              FactorForm form) {
    if (ideal.is_improper(g)) throw std::invalid_argument("factorization needs a proper ideal");
    auto primes = gr_prime_decomposition(g, ideal);
    if (!primes) return std::nullopt;
    for (const auto& p : *primes) {
        if (!is_maximal_graded(g, p)) return std::nullopt;
    }
    auto result = build_prime_power_factorization(g, ideal, form, FactorKind::insulated_prime);
    if (!result) return std::nullopt;
    for (const auto& [q, e] : result->factors) {
        if (!is_insulated_prime(g, q)) return std::nullopt;
        if (!q.is_graded() && !is_maximal(g, q)) return std::nullopt;
    }
    return result;
}

CanonicalIdeal assemble(const Graph& g,
                        std::span<const std::pair<CanonicalIdeal, int>> factors,
                        FactorForm form) {
    if (factors.empty()) throw std::invalid_argument("assemble needs at least one factor");
    FieldSpec field = factors[0].first.field();
    // expand exponents; graded factors are idempotent
    std::vector<CanonicalIdeal> expanded;
    for (const auto& [q, e] : factors) {
        if (e < 1) throw std::invalid_argument("factor exponents must be positive");
        if (q.is_graded()) {
            expanded.push_back(q);
        } else if (e == 1) {
            expanded.push_back(q);
        } else {
            expanded.push_back(prime_power(g, q, static_cast<unsigned>(e)));
        }
    }
    CanonicalIdeal meet = graded_part(expanded[0]);
    for (size_t i = 1; i < expanded.size(); ++i) {
        meet = meet_graded(g, meet, graded_part(expanded[i]));
    }
    // group cycle entries; all carriers of one cycle must share a pair and
    // every non-carrier must absorb the cycle
    std::map<CycleId, std::pair<AdmissiblePair, std::vector<Poly>>> per_cycle;
    for (const auto& q : expanded) {
        for (const auto& [c, f] : q.cycles()) {
            auto it = per_cycle.find(c);
            if (it == per_cycle.end()) {
                per_cycle.emplace(c, std::make_pair(q.pair(), std::vector<Poly>{f}));
            } else {
                if (!(it->second.first == q.pair())) {
                    throw std::invalid_argument(
                        "assemble: factors carrying one cycle must share their graded part");
                }
                it->second.second.push_back(f);
            }
        }
    }
    std::vector<CanonicalIdeal::Entry> entries;
    for (auto& [c, data] : per_cycle) {
        for (const auto& q : expanded) {
            bool carries = false;
            for (const auto& [d, f] : q.cycles()) carries = carries || d == c;
            if (!carries && !c.support().subset_of(q.pair().H)) {
                throw std::invalid_argument(
                    "assemble: a factor neither carries nor absorbs the cycle " +
                    g.name(c.base()));
            }
        }
        Poly combined = data.second[0];
        for (size_t i = 1; i < data.second.size(); ++i) {
            combined = form == FactorForm::product ? mul(combined, data.second[i])
                                                   : poly_lcm(combined, data.second[i]);
        }
        entries.emplace_back(c, std::move(combined));
    }
    return normalize(g, meet.pair(), std::move(entries), field);
}

std::vector<std::pair<CanonicalIdeal, int>> irredundant_reduce(
    const Graph& g, std::vector<std::pair<CanonicalIdeal, int>> factors, FactorForm form) {
    CanonicalIdeal target = assemble(g, factors, form);
    sort_factors(g, factors);
    size_t i = 0;
    while (i < factors.size() && factors.size() > 1) {
        std::vector<std::pair<CanonicalIdeal, int>> rest;
        for (size_t j = 0; j < factors.size(); ++j) {
            if (j != i) rest.push_back(factors[j]);
        }
        bool droppable = false;
        try {
            droppable = assemble(g, rest, form) == target;
        } catch (const std::invalid_argument&) {
            droppable = false;  // removal breaks the matching configuration
        }
        if (droppable) {
            factors = std::move(rest);
            i = 0;
        } else {
            ++i;
        }
    }
    return factors;
}

bool same_up_to_permutation(const Graph& g, const Factorization& a, const Factorization& b) {
    if (a.factors.size() != b.factors.size()) return false;
    auto fa = a.factors;
    auto fb = b.factors;
    sort_factors(g, fa);
    sort_factors(g, fb);
    for (size_t i = 0; i < fa.size(); ++i) {
        if (!(fa[i].first == fb[i].first) || fa[i].second != fb[i].second) return false;
    }
    return true;
}

}  // namespace lpa
