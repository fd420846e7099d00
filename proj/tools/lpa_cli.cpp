// Command-line front end: graph analysis, ideal classification and
// factorization, ring-level reports, DOT export.

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "lpa/fixtures.hpp"
#include "lpa/io.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitBadInput = 1;
constexpr int kExitAbsent = 2;
constexpr int kExitInternal = 3;

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open \"" + path + "\"");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void emit(const nlohmann::json& j, bool pretty) {
    std::cout << (pretty ? j.dump(2) : j.dump()) << "\n";
}

void write_text(const std::string& path, const std::string& text) {
    if (path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(path);
    if (!out) throw std::invalid_argument("cannot write \"" + path + "\"");
    out << text;
}

lpa::VertexSet parse_list(const lpa::Graph& g, const std::string& csv) {
    lpa::VertexSet s;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (!item.empty()) s.add(g.index_checked(item));
    }
    return s;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Ideal structure of Leavitt path algebras over finite graphs"};
    app.require_subcommand(1);
    app.fallthrough();
    bool pretty = false;
    app.add_flag("--pretty", pretty, "indent JSON output");

    std::string graph_file, ideal_file, h_list, s_list, kind = "strongly-irreducible",
                            form = "intersection", out_file;
    int bound = 20;

    auto* check = app.add_subcommand("graph-check", "graph predicates and invariants");
    check->add_option("graph", graph_file, "graph JSON file")->required();
    check->add_option("--bound", bound, "vertex bound for subset enumeration");

    auto* quot = app.add_subcommand("quotient", "quotient graph by an admissible pair");
    quot->add_option("graph", graph_file)->required();
    quot->add_option("-H,--hereditary", h_list, "comma-separated vertices of H")->required();
    quot->add_option("-S,--breaking", s_list, "comma-separated vertices of S");
    quot->add_option("--dot", out_file, "also write the quotient as DOT to this file");

    auto* cls = app.add_subcommand("ideal-classify", "classify an ideal");
    cls->add_option("graph", graph_file)->required();
    cls->add_option("ideal", ideal_file)->required();

    auto* fac = app.add_subcommand("ideal-factor", "factor an ideal");
    fac->add_option("graph", graph_file)->required();
    fac->add_option("ideal", ideal_file)->required();
    fac->add_option("--kind", kind, "strongly-irreducible | strongly-prime | insulated");
    fac->add_option("--form", form, "product | intersection");

    auto* ring = app.add_subcommand("ring-report", "whole-algebra classification");
    ring->add_option("graph", graph_file)->required();
    ring->add_option("--bound", bound, "vertex bound for subset enumeration");

    auto* dot = app.add_subcommand("export-dot", "emit the graph in DOT format");
    dot->add_option("graph", graph_file)->required();
    dot->add_option("--out", out_file, "output file (stdout if omitted)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (check->parsed()) {
            lpa::Graph g = lpa::parse_graph_text(slurp(graph_file));
            emit(lpa::graph_check_to_json(g, bound), pretty);
            return kExitOk;
        }
        if (quot->parsed()) {
            lpa::Graph g = lpa::parse_graph_text(slurp(graph_file));
            lpa::QuotientGraph q = lpa::quotient(g, parse_list(g, h_list), parse_list(g, s_list));
            emit(lpa::quotient_to_json(g, q), pretty);
            if (!out_file.empty()) write_text(out_file, lpa::export_dot(q));
            return kExitOk;
        }
        if (cls->parsed()) {
            lpa::Graph g = lpa::parse_graph_text(slurp(graph_file));
            lpa::CanonicalIdeal ideal = lpa::parse_ideal_text(g, slurp(ideal_file));
            emit(lpa::ideal_report_to_json(g, ideal, lpa::classify_ideal(g, ideal)), pretty);
            return kExitOk;
        }
        if (fac->parsed()) {
            lpa::Graph g = lpa::parse_graph_text(slurp(graph_file));
            lpa::CanonicalIdeal ideal = lpa::parse_ideal_text(g, slurp(ideal_file));
            lpa::FactorForm ff = form == "product" ? lpa::FactorForm::product
                                                   : lpa::FactorForm::intersection;
            if (form != "product" && form != "intersection") {
                throw std::invalid_argument("unknown form \"" + form + "\"");
            }
            std::optional<lpa::Factorization> f;
            if (kind == "strongly-irreducible") {
                f = lpa::factor_strongly_irreducible(g, ideal, ff);
            } else if (kind == "strongly-prime") {
                f = lpa::factor_strongly_prime(g, ideal, ff);
            } else if (kind == "insulated" || kind == "insulated-prime") {
                f = lpa::factor_insulated(g, ideal, ff);
            } else {
                throw std::invalid_argument("unknown kind \"" + kind + "\"");
            }
            if (!f) {
                emit(nlohmann::json{{"schema", lpa::kSchema},
                                    {"kind", kind},
                                    {"factorization", nullptr}},
                     pretty);
                return kExitAbsent;
            }
            emit(lpa::factorization_to_json(g, *f), pretty);
            return kExitOk;
        }
        if (ring->parsed()) {
            lpa::Graph g = lpa::parse_graph_text(slurp(graph_file));
            emit(lpa::ring_report_to_json(g, lpa::ring_report(g, bound)), pretty);
            return kExitOk;
        }
        if (dot->parsed()) {
            lpa::Graph g = lpa::parse_graph_text(slurp(graph_file));
            write_text(out_file, lpa::export_dot(g));
            return kExitOk;
        }
    } catch (const lpa::verification_error& e) {
        std::cerr << "internal verification failure: " << e.what() << "\n";
        return kExitInternal;
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "malformed input: " << e.what() << "\n";
        return kExitBadInput;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBadInput;
    }
    return kExitBadInput;
}
