#pragma once

#include <string>

#include <json.hpp>

#include "lpa/factorize.hpp"
#include "lpa/ring.hpp"

namespace lpa {

inline constexpr const char* kSchema = "lpa-ideal-lab/1";

/// Graph file: {"vertices":["v1",...],
///              "edges":[{"src":"v1","dst":"v1","mult":2},
///                       {"src":"v3","dst":"v2","mult":"inf"}]}
Graph parse_graph(const nlohmann::json& j);
Graph parse_graph_text(const std::string& text);
nlohmann::json graph_to_json(const Graph& g);

/// Ideal file: {"H":["v1"],"S":[],"cycles":[{"cycle":["v3"],"poly":"x-1"}],
///              "field":"Q"}. The result is normalized.
CanonicalIdeal parse_ideal(const Graph& g, const nlohmann::json& j);
CanonicalIdeal parse_ideal_text(const Graph& g, const std::string& text);
nlohmann::json ideal_to_json(const Graph& g, const CanonicalIdeal& ideal);

nlohmann::json ideal_report_to_json(const Graph& g, const CanonicalIdeal& ideal,
                                    const IdealReport& report);
nlohmann::json factorization_to_json(const Graph& g, const Factorization& f);
nlohmann::json ring_report_to_json(const Graph& g, const RingReport& r);
nlohmann::json graph_check_to_json(const Graph& g, int bound = 20);
nlohmann::json quotient_to_json(const Graph& g, const QuotientGraph& q);

/// DOT digraph; omega multiplicity labeled "∞", multiplicity k>1 labeled
/// "×k", primed vertices dashed.
std::string export_dot(const Graph& g);
std::string export_dot(const QuotientGraph& q);

}  // namespace lpa
