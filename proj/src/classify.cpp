#include "lpa/classify.hpp"

namespace lpa {

namespace {

void require_proper(const Graph& g, const CanonicalIdeal& ideal) {
    if (ideal.is_improper(g)) throw std::invalid_argument("classification needs a proper ideal");
}

bool quotient_downward_directed(const Graph& g, const AdmissiblePair& p) {
    return is_downward_directed(quotient(g, p.H, p.S).graph);
}

}  // namespace

std::optional<PrimeCase> classify_prime(const Graph& g, const CanonicalIdeal& ideal) {
    require_proper(g, ideal);
    VertexSet b = breaking_vertices(g, ideal.pair().H);
    const VertexSet& s = ideal.pair().S;
    if (ideal.is_graded()) {
        if (s == b) {
            if (quotient_downward_directed(g, ideal.pair())) {
                return PrimeCase{PrimeCase::Tag::graded_full, -1};
            }
            return std::nullopt;
        }
        VertexSet missing = b.minus(s);
        if (missing.count() == 1) {
            int u = missing.to_vector()[0];
            auto reach = reach_closure(g);
            for (int v : g.all_vertices().minus(ideal.pair().H).to_vector()) {
                if (!reach[v].contains(u)) return std::nullopt;
            }
            return PrimeCase{PrimeCase::Tag::graded_breaking, u};
        }
        return std::nullopt;
    }
    if (ideal.cycles().size() != 1 || s != b) return std::nullopt;
    const auto& [c, p] = ideal.cycles()[0];
    if (!is_irreducible(p)) return std::nullopt;
    if (!quotient_downward_directed(g, ideal.pair())) return std::nullopt;
    auto reach = reach_closure(g);
    for (int v : g.all_vertices().minus(ideal.pair().H).to_vector()) {
        if (!reach[v].contains(c.base())) return std::nullopt;
    }
    return PrimeCase{PrimeCase::Tag::nongraded, -1};
}

bool is_strongly_irreducible(const Graph& g, const CanonicalIdeal& ideal) {
    require_proper(g, ideal);
    if (classify_prime(g, ideal)) return true;
    if (ideal.is_graded()) return false;  // a graded prime power is the prime itself
    if (ideal.cycles().size() != 1) return false;
    if (ideal.pair().S != breaking_vertices(g, ideal.pair().H)) return false;
    if (!quotient_downward_directed(g, ideal.pair())) return false;
    auto fs = factor(ideal.cycles()[0].second);
    return fs.size() == 1;
}

bool is_primary(const Graph& g, const CanonicalIdeal& ideal) {
    return is_strongly_irreducible(g, ideal);
}

bool is_strongly_prime(const Graph& g, const CanonicalIdeal& ideal) {
    require_proper(g, ideal);
    if (!ideal.is_graded()) return false;
    const Graph& q = quotient(g, ideal.pair().H, ideal.pair().S).graph;
    return is_downward_directed(q) && condition_L(q) && strong_csp(q).has_value();
}

bool is_primitive(const Graph& g, const CanonicalIdeal& ideal) {
    require_proper(g, ideal);
    auto pc = classify_prime(g, ideal);
    if (pc && pc->tag == PrimeCase::Tag::nongraded) return true;
    if (pc && pc->tag == PrimeCase::Tag::graded_breaking) return true;
    if (!ideal.is_graded()) return false;
    if (ideal.pair().S != breaking_vertices(g, ideal.pair().H)) return false;
    const Graph& q = quotient(g, ideal.pair().H, ideal.pair().S).graph;
    // the countable separation property is automatic over a finite vertex set
    return is_downward_directed(q) && condition_L(q);
}

bool is_strongly_primitive(const Graph& g, const CanonicalIdeal& ideal) {
    if (!is_primitive(g, ideal)) return false;
    const Graph& q = quotient(g, ideal.pair().H, ideal.pair().S).graph;
    return strong_csp(q).has_value();
}

bool is_maximal_graded(const Graph& g, const CanonicalIdeal& ideal) {
    require_proper(g, ideal);
    if (!ideal.is_graded()) return false;
    const Graph& q = quotient(g, ideal.pair().H, ideal.pair().S).graph;
    return all_hs_subsets(q).size() == 2;  // only the trivial pair lattice above
}

bool is_maximal(const Graph& g, const CanonicalIdeal& ideal) {
    require_proper(g, ideal);
    const Graph& q = quotient(g, ideal.pair().H, ideal.pair().S).graph;
    if (ideal.is_graded()) {
        // simple quotient
        return condition_L(q) && all_hs_subsets(q).size() == 2;
    }
    if (ideal.cycles().size() != 1) return false;
    const auto& [c, p] = ideal.cycles()[0];
    if (!is_irreducible(p)) return false;
    // graded-simple quotient: row-finite, downward directed, no-exit cycle
    for (const auto& e : q.edges()) {
        if (e.mult.is_omega()) return false;
    }
    return is_downward_directed(q) && !cycles_without_exits(q).empty();
}

bool is_insulated_prime(const Graph& g, const CanonicalIdeal& ideal) {
    if (is_maximal(g, ideal)) return true;
    if (!ideal.is_graded()) return false;
    const Graph& q = quotient(g, ideal.pair().H, ideal.pair().S).graph;
    return is_maximal_graded(g, ideal) && is_comet(q).has_value();
}

IdealReport classify_ideal(const Graph& g, const CanonicalIdeal& ideal) {
    IdealReport r;
    r.prime = classify_prime(g, ideal);
    r.strongly_irreducible = is_strongly_irreducible(g, ideal);
    r.primary = r.strongly_irreducible;
    r.strongly_prime = is_strongly_prime(g, ideal);
    r.primitive = is_primitive(g, ideal);
    r.strongly_primitive = is_strongly_primitive(g, ideal);
    r.maximal = is_maximal(g, ideal);
    r.maximal_graded = is_maximal_graded(g, ideal);
    r.insulated_prime = is_insulated_prime(g, ideal);
    return r;
}

}  // namespace lpa
