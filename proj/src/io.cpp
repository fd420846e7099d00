#include "lpa/io.hpp"

#include <algorithm>

namespace lpa {

using nlohmann::json;

namespace {

json names_json(const Graph& g, const VertexSet& s) { return json(g.names_of(s)); }

json cycle_json(const Graph& g, const CycleId& c) {
    json out = json::array();
    for (int v : c.vertices) out.push_back(g.name(v));
    return out;
}

json cycles_json(const Graph& g, const std::vector<CycleId>& cs) {
    json out = json::array();
    for (const auto& c : cs) out.push_back(cycle_json(g, c));
    return out;
}

json sets_json(const Graph& g, const std::vector<VertexSet>& sets) {
    json out = json::array();
    for (const auto& s : sets) out.push_back(names_json(g, s));
    return out;
}

EdgeMult parse_mult(const json& m) {
    if (m.is_string()) {
        if (m.get<std::string>() == "inf") return EdgeMult::omega();
        throw std::invalid_argument("edge \"mult\" must be a positive integer or \"inf\"");
    }
    if (m.is_number_unsigned() || (m.is_number_integer() && m.get<std::int64_t>() > 0)) {
        return EdgeMult(m.get<std::uint64_t>());
    }
    throw std::invalid_argument("edge \"mult\" must be a positive integer or \"inf\"");
}

}  // namespace

Graph parse_graph(const json& j) {
    if (!j.is_object() || !j.contains("vertices") || !j["vertices"].is_array()) {
        throw std::invalid_argument("graph file needs a \"vertices\" array");
    }
    std::vector<std::string> vertices = j["vertices"].get<std::vector<std::string>>();
    std::vector<Graph::NamedEdge> edges;
    for (const auto& e : j.value("edges", json::array())) {
        if (!e.contains("src") || !e.contains("dst")) {
            throw std::invalid_argument("each edge needs \"src\" and \"dst\"");
        }
        edges.push_back({e["src"].get<std::string>(), e["dst"].get<std::string>(),
                         e.contains("mult") ? parse_mult(e["mult"]) : EdgeMult(1)});
    }
    return Graph(std::move(vertices), edges);
}

Graph parse_graph_text(const std::string& text) {
    json j = json::parse(text, nullptr, true, true);
    return parse_graph(j);
}

json graph_to_json(const Graph& g) {
    json vertices = json::array();
    for (int v = 0; v < g.size(); ++v) vertices.push_back(g.name(v));
    json edges = json::array();
    for (const auto& e : g.edges()) {
        json je{{"src", g.name(e.src)}, {"dst", g.name(e.dst)}};
        if (e.mult.is_omega()) {
            je["mult"] = "inf";
        } else {
            je["mult"] = e.mult.count();
        }
        edges.push_back(je);
    }
    return json{{"vertices", vertices}, {"edges", edges}};
}

CanonicalIdeal parse_ideal(const Graph& g, const json& j) {
    FieldSpec field = FieldSpec::parse(j.value("field", "Q"));
    VertexSet h, s;
    for (const auto& n : j.value("H", json::array())) h.add(g.index_checked(n.get<std::string>()));
    for (const auto& n : j.value("S", json::array())) s.add(g.index_checked(n.get<std::string>()));
    std::vector<CanonicalIdeal::Entry> entries;
    for (const auto& e : j.value("cycles", json::array())) {
        if (!e.contains("cycle") || !e.contains("poly")) {
            throw std::invalid_argument("each cycle entry needs \"cycle\" and \"poly\"");
        }
        std::vector<int> verts;
        for (const auto& n : e["cycle"]) verts.push_back(g.index_checked(n.get<std::string>()));
        entries.emplace_back(CycleId::from_path(std::move(verts)),
                             Poly::parse(field, e["poly"].get<std::string>()));
    }
    return normalize(g, {h, s}, std::move(entries), field);
}

CanonicalIdeal parse_ideal_text(const Graph& g, const std::string& text) {
    return parse_ideal(g, json::parse(text, nullptr, true, true));
}

json ideal_to_json(const Graph& g, const CanonicalIdeal& ideal) {
    json cycles = json::array();
    for (const auto& [c, f] : ideal.cycles()) {
        cycles.push_back(json{{"cycle", cycle_json(g, c)}, {"poly", f.str()}});
    }
    return json{{"H", names_json(g, ideal.pair().H)},
                {"S", names_json(g, ideal.pair().S)},
                {"cycles", cycles},
                {"field", ideal.field().name()},
                {"improper", ideal.is_improper(g)}};
}

json ideal_report_to_json(const Graph& g, const CanonicalIdeal& ideal, const IdealReport& r) {
    json prime;
    if (r.prime) {
        switch (r.prime->tag) {
            case PrimeCase::Tag::graded_full:
                prime = json{{"case", "graded_full"}};
                break;
            case PrimeCase::Tag::graded_breaking:
                prime = json{{"case", "graded_breaking"},
                             {"breaking_vertex", g.name(r.prime->breaking_vertex)}};
                break;
            case PrimeCase::Tag::nongraded:
                prime = json{{"case", "nongraded"},
                             {"cycle", cycle_json(g, ideal.cycles()[0].first)},
                             {"poly", ideal.cycles()[0].second.str()}};
                break;
        }
    }
    return json{{"schema", kSchema},
                {"ideal", ideal_to_json(g, ideal)},
                {"prime", prime},
                {"strongly_irreducible", r.strongly_irreducible},
                {"primary", r.primary},
                {"strongly_prime", r.strongly_prime},
                {"primitive", r.primitive},
                {"strongly_primitive", r.strongly_primitive},
                {"maximal", r.maximal},
                {"maximal_graded", r.maximal_graded},
                {"insulated_prime", r.insulated_prime}};
}

json factorization_to_json(const Graph& g, const Factorization& f) {
    json factors = json::array();
    for (const auto& [ideal, exp] : f.factors) {
        factors.push_back(json{{"ideal", ideal_to_json(g, ideal)}, {"exponent", exp}});
    }
    return json{{"schema", kSchema},
                {"kind", to_string(f.kind)},
                {"form", to_string(f.form)},
                {"irredundant", f.irredundant},
                {"factors", factors},
                {"verified", true}};
}

json ring_report_to_json(const Graph& g, const RingReport& r) {
    (void)g;
    json witnesses = json::object();
    if (r.chain_witness) witnesses["incomparable_pairs"] = *r.chain_witness;
    if (r.no_exit_cycle_witness) witnesses["cycle_without_exits"] = *r.no_exit_cycle_witness;
    if (r.strong_csp_witness) witnesses["quotient_without_strong_csp"] = *r.strong_csp_witness;
    return json{{"schema", kSchema},
                {"simple", r.simple},
                {"graded_simple", r.graded_simple},
                {"insulated_prime_ring", r.insulated_prime_ring},
                {"generalized_zpi", r.generalized_zpi},
                {"laskerian", r.laskerian},
                {"all_ideals_strongly_irreducible", r.all_ideals_strongly_irreducible},
                {"all_ideals_strongly_prime", r.all_ideals_strongly_prime},
                {"strongly_zero_dimensional", r.strongly_zero_dimensional},
                {"all_ideals_product_of_insulated", r.all_ideals_product_of_insulated},
                {"unique_nonzero_ideal_insulated", r.unique_nonzero_ideal_insulated},
                {"witnesses", witnesses}};
}

json graph_check_to_json(const Graph& g, int bound) {
    json kinds = json::object();
    for (int v = 0; v < g.size(); ++v) {
        switch (vertex_kind(g, v)) {
            case VertexKind::sink: kinds[g.name(v)] = "sink"; break;
            case VertexKind::regular: kinds[g.name(v)] = "regular"; break;
            case VertexKind::infinite_emitter: kinds[g.name(v)] = "infinite_emitter"; break;
        }
    }
    json csp;
    if (auto x = strong_csp(g)) csp = names_json(g, *x);
    json comet;
    if (auto c = is_comet(g)) {
        comet = json{{"cycle", cycle_json(g, *c)},
                     {"path_count", comet_path_count(g, *c)}};
    }
    json tail_cover, comets;
    if (auto tc = maximal_tail_cover(g)) tail_cover = sets_json(g, *tc);
    if (auto cc = comet_cover(g)) comets = sets_json(g, *cc);
    return json{{"schema", kSchema},
                {"vertices", json(g.names_of(g.all_vertices()))},
                {"vertex_kinds", kinds},
                {"hereditary_saturated_subsets", sets_json(g, all_hs_subsets(g, bound))},
                {"condition_K", condition_K(g)},
                {"condition_L", condition_L(g)},
                {"downward_directed", is_downward_directed(g)},
                {"maximal_tails", sets_json(g, maximal_tails(g))},
                {"maximal_tail_cover", tail_cover},
                {"cycles_without_exits", cycles_json(g, cycles_without_exits(g))},
                {"extreme_cycles", cycles_json(g, extreme_cycles(g))},
                {"strong_csp", csp},
                {"comet", comet},
                {"comet_cover", comets}};
}

json quotient_to_json(const Graph& g, const QuotientGraph& q) {
    (void)g;
    json out = graph_to_json(q.graph);
    json primed = json::array();
    for (int v = 0; v < q.graph.size(); ++v) {
        if (q.primed[v]) primed.push_back(q.graph.name(v));
    }
    out["primed"] = primed;
    out["schema"] = kSchema;
    return out;
}

namespace {

std::string dot_impl(const Graph& g, const std::vector<bool>* primed) {
    std::string out = "digraph G {\n";
    for (int v = 0; v < g.size(); ++v) {
        out += "  \"" + g.name(v) + "\"";
        if (primed && (*primed)[v]) out += " [style=dashed]";
        out += ";\n";
    }
    for (const auto& e : g.edges()) {
        out += "  \"" + g.name(e.src) + "\" -> \"" + g.name(e.dst) + "\"";
        if (e.mult.is_omega()) {
            out += " [label=\"∞\"]";
        } else if (e.mult.count() > 1) {
            out += " [label=\"×" + std::to_string(e.mult.count()) + "\"]";
        }
        out += ";\n";
    }
    out += "}\n";
    return out;
}

}  // namespace

std::string export_dot(const Graph& g) { return dot_impl(g, nullptr); }

std::string export_dot(const QuotientGraph& q) { return dot_impl(q.graph, &q.primed); }

}  // namespace lpa
