#include "lpa/ring.hpp"

#include "lpa/factorize.hpp"

namespace lpa {

namespace {

std::string pair_str(const Graph& g, const AdmissiblePair& p) {
    auto join = [&](const VertexSet& s) {
        std::string out = "{";
        bool first = true;
        for (const auto& n : g.names_of(s)) {
            if (!first) out += ",";
            out += n;
            first = false;
        }
        return out + "}";
    };
    return "(" + join(p.H) + "," + join(p.S) + ")";
}

}  // namespace

bool admissible_pair_chain(const Graph& g, int bound) {
    auto pairs = all_admissible_pairs(g, bound);
    for (size_t i = 0; i < pairs.size(); ++i) {
        for (size_t j = i + 1; j < pairs.size(); ++j) {
            if (!pair_leq(pairs[i], pairs[j]) && !pair_leq(pairs[j], pairs[i])) return false;
        }
    }
    return true;
}

RingReport ring_report(const Graph& g, int bound) {
    if (g.size() > bound) throw std::invalid_argument("vertex count exceeds enumeration bound");
    RingReport r;
    auto hs = all_hs_subsets(g, bound);
    bool trivial_lattice = hs.size() <= 2;
    bool cond_l = condition_L(g);
    bool cond_k = condition_K(g);
    bool row_finite = true;
    for (const auto& e : g.edges()) row_finite = row_finite && !e.mult.is_omega();

    r.simple = cond_l && trivial_lattice && g.size() > 0;
    r.graded_simple =
        r.simple || (row_finite && is_downward_directed(g) && !cycles_without_exits(g).empty());
    r.insulated_prime_ring = r.simple || is_comet(g).has_value();

    auto pairs = all_admissible_pairs(g, bound);
    bool zpi = true;
    for (const auto& p : pairs) {
        if (!maximal_tail_cover(quotient(g, p.H, p.S).graph)) {
            zpi = false;
            break;
        }
    }
    r.generalized_zpi = zpi;
    r.laskerian = zpi;

    bool chain = admissible_pair_chain(g, bound);
    r.all_ideals_strongly_irreducible = cond_k && chain;
    if (!chain) {
        for (size_t i = 0; i < pairs.size() && !r.chain_witness; ++i) {
            for (size_t j = i + 1; j < pairs.size(); ++j) {
                if (!pair_leq(pairs[i], pairs[j]) && !pair_leq(pairs[j], pairs[i])) {
                    r.chain_witness = pair_str(g, pairs[i]) + " vs " + pair_str(g, pairs[j]);
                    break;
                }
            }
        }
    }
    if (!cond_l) {
        auto cs = cycles_without_exits(g);
        std::string w = "cycle";
        for (int v : cs[0].vertices) w += " " + g.name(v);
        r.no_exit_cycle_witness = w;
    }

    bool every_quotient_sp = true;
    bool every_dd_quotient_csp = true;
    for (const auto& p : pairs) {
        if (p.H == g.all_vertices()) continue;
        const Graph& q = quotient(g, p.H, p.S).graph;
        bool dd = is_downward_directed(q);
        bool csp = strong_csp(q).has_value();
        if (!(dd && csp)) {
            every_quotient_sp = false;
            if (dd && !csp && !r.strong_csp_witness) r.strong_csp_witness = pair_str(g, p);
        }
        if (dd && !csp) every_dd_quotient_csp = false;
    }
    r.all_ideals_strongly_prime = cond_k && chain && every_quotient_sp;
    r.strongly_zero_dimensional = cond_k && every_dd_quotient_csp;

    if (g.size() > 0) {
        r.all_ideals_product_of_insulated =
            factor_insulated(g, zero_ideal(g, FieldSpec::rationals())).has_value();
    }

    int proper_nonzero = 0;
    std::optional<AdmissiblePair> only;
    for (const auto& p : pairs) {
        if (p.H == g.all_vertices() || (p.H.empty() && p.S.empty())) continue;
        ++proper_nonzero;
        only = p;
    }
    r.unique_nonzero_ideal_insulated =
        proper_nonzero == 1 && is_comet(quotient(g, only->H, only->S).graph).has_value();

    return r;
}

}  // namespace lpa
