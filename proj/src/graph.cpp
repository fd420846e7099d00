#include "lpa/graph.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace lpa {

std::vector<int> VertexSet::to_vector() const {
    std::vector<int> out;
    std::uint64_t b = bits_;
    while (b) {
        out.push_back(__builtin_ctzll(b));
        b &= b - 1;
    }
    return out;
}

EdgeMult::EdgeMult(std::uint64_t n) : value_(n) {
    if (n == 0 || n == kOmega) throw std::invalid_argument("edge multiplicity must be positive");
}

std::uint64_t EdgeMult::count() const {
    if (is_omega()) throw std::logic_error("omega multiplicity has no finite count");
    return value_;
}

CycleId CycleId::from_path(std::vector<int> verts) {
    if (verts.empty()) throw std::invalid_argument("empty cycle");
    auto min_it = std::min_element(verts.begin(), verts.end());
    std::rotate(verts.begin(), min_it, verts.end());
    return CycleId{std::move(verts)};
}

VertexSet CycleId::support() const {
    VertexSet s;
    for (int v : vertices) s.add(v);
    return s;
}

Graph::Graph(std::vector<std::string> vertices, const std::vector<NamedEdge>& edges) {
    std::sort(vertices.begin(), vertices.end());
    if (std::adjacent_find(vertices.begin(), vertices.end()) != vertices.end()) {
        throw std::invalid_argument("duplicate vertex name");
    }
    if (vertices.size() > 64) throw std::invalid_argument("graphs are limited to 64 vertices");
    names_ = std::move(vertices);
    std::map<std::pair<int, int>, EdgeMult> classes;
    for (const auto& e : edges) {
        int s = index_checked(e.src);
        int d = index_checked(e.dst);
        auto [it, fresh] = classes.emplace(std::make_pair(s, d), e.mult);
        if (!fresh) throw std::invalid_argument("duplicate edge class " + e.src + " -> " + e.dst);
    }
    for (auto& [key, mult] : classes) edges_.push_back({key.first, key.second, mult});
    out_.assign(names_.size(), {0, 0});
    size_t i = 0;
    for (int v = 0; v < size(); ++v) {
        int begin = static_cast<int>(i);
        while (i < edges_.size() && edges_[i].src == v) ++i;
        out_[v] = {begin, static_cast<int>(i)};
    }
}

std::optional<int> Graph::index(std::string_view name) const {
    auto it = std::lower_bound(names_.begin(), names_.end(), name);
    if (it == names_.end() || *it != name) return std::nullopt;
    return static_cast<int>(it - names_.begin());
}

int Graph::index_checked(std::string_view name) const {
    auto idx = index(name);
    if (!idx) throw std::invalid_argument("unknown vertex \"" + std::string(name) + "\"");
    return *idx;
}

std::span<const EdgeClass> Graph::out_edges(int v) const {
    auto [b, e] = out_.at(v);
    return {edges_.data() + b, static_cast<size_t>(e - b)};
}

VertexSet Graph::out_targets(int v) const {
    VertexSet s;
    for (const auto& e : out_edges(v)) s.add(e.dst);
    return s;
}

VertexSet Graph::all_vertices() const {
    return size() == 64 ? VertexSet(~std::uint64_t{0})
                        : VertexSet((std::uint64_t{1} << size()) - 1);
}

std::vector<std::string> Graph::names_of(const VertexSet& s) const {
    std::vector<std::string> out;
    for (int v : s.to_vector()) out.push_back(name(v));
    return out;
}

// ---- quotient -------------------------------------------------------------

VertexSet QuotientGraph::real_vertices() const {
    VertexSet s;
    for (int v = 0; v < graph.size(); ++v) {
        if (!primed[v]) s.add(v);
    }
    return s;
}

VertexSet QuotientGraph::primed_vertices() const {
    return graph.all_vertices().minus(real_vertices());
}

CycleId QuotientGraph::to_original(const CycleId& c) const {
    std::vector<int> verts;
    for (int v : c.vertices) {
        if (primed[v]) throw std::logic_error("primed vertex on a cycle");
        verts.push_back(origin[v]);
    }
    return CycleId::from_path(std::move(verts));
}

// ---- vertex predicates ----------------------------------------------------

VertexKind vertex_kind(const Graph& g, int v) {
    if (v < 0 || v >= g.size()) throw std::invalid_argument("unknown vertex index");
    auto out = g.out_edges(v);
    if (out.empty()) return VertexKind::sink;
    for (const auto& e : out) {
        if (e.mult.is_omega()) return VertexKind::infinite_emitter;
    }
    return VertexKind::regular;
}

std::vector<VertexSet> reach_closure(const Graph& g) {
    std::vector<VertexSet> r(g.size());
    for (int v = 0; v < g.size(); ++v) r[v] = VertexSet::single(v);
    bool changed = true;
    while (changed) {
        changed = false;
        for (int v = 0; v < g.size(); ++v) {
            VertexSet next = r[v];
            for (const auto& e : g.out_edges(v)) next = next | r[e.dst];
            if (next != r[v]) {
                r[v] = next;
                changed = true;
            }
        }
    }
    return r;
}

bool reaches(const Graph& g, int u, int v) {
    if (u < 0 || u >= g.size() || v < 0 || v >= g.size()) {
        throw std::invalid_argument("unknown vertex index");
    }
    return reach_closure(g)[u].contains(v);
}

// ---- hereditary saturated machinery ----------------------------------------

bool is_hereditary(const Graph& g, VertexSet s) {
    for (int v : s.to_vector()) {
        if (!g.out_targets(v).subset_of(s)) return false;
    }
    return true;
}

bool is_saturated(const Graph& g, VertexSet s) {
    for (int v = 0; v < g.size(); ++v) {
        if (s.contains(v) || vertex_kind(g, v) != VertexKind::regular) continue;
        if (g.out_targets(v).subset_of(s)) return false;
    }
    return true;
}

VertexSet hs_closure(const Graph& g, VertexSet seed) {
    VertexSet h = seed;
    bool changed = true;
    while (changed) {
        changed = false;
        for (int v : h.to_vector()) {
            VertexSet t = g.out_targets(v);
            if (!t.subset_of(h)) {
                h = h | t;
                changed = true;
            }
        }
        for (int v = 0; v < g.size(); ++v) {
            if (h.contains(v) || vertex_kind(g, v) != VertexKind::regular) continue;
            if (g.out_targets(v).subset_of(h)) {
                h.add(v);
                changed = true;
            }
        }
    }
    return h;
}

namespace {

bool set_names_less(VertexSet a, VertexSet b) {
    if (a.count() != b.count()) return a.count() < b.count();
    return a.to_vector() < b.to_vector();
}

}  // namespace

std::vector<VertexSet> all_hs_subsets(const Graph& g, int bound) {
    if (g.size() > bound) throw std::invalid_argument("vertex count exceeds enumeration bound");
    int n = g.size();
    std::vector<std::uint64_t> out_mask(n);
    std::vector<bool> regular(n);
    for (int v = 0; v < n; ++v) {
        out_mask[v] = g.out_targets(v).bits();
        regular[v] = vertex_kind(g, v) == VertexKind::regular;
    }
    std::vector<VertexSet> out;
    for (std::uint64_t m = 0;; ++m) {
        bool ok = true;
        for (int v = 0; v < n && ok; ++v) {
            bool inside = (m >> v) & 1;
            if (inside) {
                ok = (out_mask[v] & ~m) == 0;  // hereditary
            } else if (regular[v]) {
                ok = (out_mask[v] & ~m) != 0;  // saturated
            }
        }
        if (ok) out.push_back(VertexSet(m));
        if (m == g.all_vertices().bits()) break;
    }
    std::sort(out.begin(), out.end(),
              [](VertexSet a, VertexSet b) { return set_names_less(a, b); });
    return out;
}

VertexSet breaking_vertices(const Graph& g, VertexSet h) {
    if (!is_hereditary(g, h) || !is_saturated(g, h)) {
        throw std::invalid_argument("H is not hereditary saturated");
    }
    VertexSet out;
    for (int w = 0; w < g.size(); ++w) {
        if (h.contains(w) || vertex_kind(g, w) != VertexKind::infinite_emitter) continue;
        bool omega_into_h = true;
        bool some_out = false;
        for (const auto& e : g.out_edges(w)) {
            if (!h.contains(e.dst)) {
                some_out = true;
                if (e.mult.is_omega()) omega_into_h = false;
            }
        }
        if (omega_into_h && some_out) out.add(w);
    }
    return out;
}

QuotientGraph quotient(const Graph& g, VertexSet h, VertexSet s) {
    VertexSet breaking = breaking_vertices(g, h);
    if (!s.subset_of(breaking)) throw std::invalid_argument("S is not a set of breaking vertices");
    VertexSet primed_orig = breaking.minus(s);

    std::vector<std::string> names;
    std::vector<std::pair<int, bool>> sources;  // (original, primed)
    for (int v = 0; v < g.size(); ++v) {
        if (!h.contains(v)) {
            names.push_back(g.name(v));
            sources.emplace_back(v, false);
        }
    }
    for (int v : primed_orig.to_vector()) {
        names.push_back(g.name(v) + "'");
        sources.emplace_back(v, true);
    }
    std::vector<Graph::NamedEdge> edges;
    for (const auto& e : g.edges()) {
        if (h.contains(e.dst)) continue;
        edges.push_back({g.name(e.src), g.name(e.dst), e.mult});
        if (primed_orig.contains(e.dst)) {
            edges.push_back({g.name(e.src), g.name(e.dst) + "'", e.mult});
        }
    }
    QuotientGraph q;
    q.graph = Graph(names, edges);
    q.origin.assign(q.graph.size(), -1);
    q.primed.assign(q.graph.size(), false);
    for (const auto& [orig, prim] : sources) {
        int idx = q.graph.index_checked(g.name(orig) + (prim ? "'" : ""));
        q.origin[idx] = orig;
        q.primed[idx] = prim;
    }
    return q;
}

// ---- directedness, tails ----------------------------------------------------

bool is_downward_directed(const Graph& g) {
    auto r = reach_closure(g);
    for (int u = 0; u < g.size(); ++u) {
        for (int v = u + 1; v < g.size(); ++v) {
            if (!(r[u] & r[v]).bits()) return false;
        }
    }
    return true;
}

namespace {

bool is_maximal_tail_set(const Graph& g, const std::vector<VertexSet>& reach, VertexSet m) {
    if (m.empty()) return false;
    // (1) downward directed inside m (upward closure keeps witnesses in m)
    auto verts = m.to_vector();
    for (size_t i = 0; i < verts.size(); ++i) {
        for (size_t j = i; j < verts.size(); ++j) {
            if ((reach[verts[i]] & reach[verts[j]] & m).empty()) return false;
        }
    }
    // (3) emission property, beyond what saturation gives: infinite emitters
    for (int v : verts) {
        if (vertex_kind(g, v) == VertexKind::infinite_emitter &&
            !g.out_targets(v).intersects(m)) {
            return false;
        }
    }
    return true;
}

}  // namespace

std::vector<VertexSet> maximal_tails(const Graph& g) {
    auto reach = reach_closure(g);
    std::vector<VertexSet> out;
    for (const auto& h : all_hs_subsets(g)) {
        VertexSet m = g.all_vertices().minus(h);
        if (is_maximal_tail_set(g, reach, m)) out.push_back(m);
    }
    std::sort(out.begin(), out.end(),
              [](VertexSet a, VertexSet b) { return set_names_less(a, b); });
    return out;
}

// ---- cycles -----------------------------------------------------------------

namespace {

void cycle_dfs(const Graph& g, int start, int v, VertexSet on_path, std::vector<int>& path,
               std::vector<CycleId>& out) {
    for (const auto& e : g.out_edges(v)) {
        if (e.dst == start) {
            out.push_back(CycleId::from_path(path));
        } else if (e.dst > start && !on_path.contains(e.dst)) {
            path.push_back(e.dst);
            VertexSet next = on_path;
            next.add(e.dst);
            cycle_dfs(g, start, e.dst, next, path, out);
            path.pop_back();
        }
    }
}

}  // namespace

std::vector<CycleId> simple_cycles(const Graph& g) {
    std::vector<CycleId> out;
    for (int start = 0; start < g.size(); ++start) {
        std::vector<int> path{start};
        cycle_dfs(g, start, start, VertexSet::single(start), path, out);
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<CycleId> cycles_without_exits(const Graph& g) {
    // every vertex of such a cycle has the cycle class as its only out-class,
    // with multiplicity one, so follow unique successors
    int n = g.size();
    std::vector<int> succ(n, -1);
    for (int v = 0; v < n; ++v) {
        auto out = g.out_edges(v);
        if (out.size() == 1 && !out[0].mult.is_omega() && out[0].mult.count() == 1) {
            succ[v] = out[0].dst;
        }
    }
    std::vector<CycleId> out;
    VertexSet done;
    for (int v = 0; v < n; ++v) {
        if (done.contains(v)) continue;
        VertexSet seen;
        int cur = v;
        while (cur != -1 && !seen.contains(cur) && !done.contains(cur)) {
            seen.add(cur);
            cur = succ[cur];
        }
        if (cur != -1 && seen.contains(cur)) {
            std::vector<int> verts{cur};
            for (int w = succ[cur]; w != cur; w = succ[w]) verts.push_back(w);
            out.push_back(CycleId::from_path(std::move(verts)));
        }
        done = done | seen;
    }
    std::sort(out.begin(), out.end());
    return out;
}

bool condition_L(const Graph& g) { return cycles_without_exits(g).empty(); }

namespace {

void scc_dfs1(const Graph& g, int v, std::vector<bool>& seen, std::vector<int>& order) {
    seen[v] = true;
    for (const auto& e : g.out_edges(v)) {
        if (!seen[e.dst]) scc_dfs1(g, e.dst, seen, order);
    }
    order.push_back(v);
}

std::vector<int> scc_components(const Graph& g) {
    int n = g.size();
    std::vector<bool> seen(n, false);
    std::vector<int> order;
    for (int v = 0; v < n; ++v) {
        if (!seen[v]) scc_dfs1(g, v, seen, order);
    }
    std::vector<std::vector<int>> rev(n);
    for (const auto& e : g.edges()) rev[e.dst].push_back(e.src);
    std::vector<int> comp(n, -1);
    int c = 0;
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
        if (comp[*it] != -1) continue;
        std::vector<int> stack{*it};
        comp[*it] = c;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int u : rev[v]) {
                if (comp[u] == -1) {
                    comp[u] = c;
                    stack.push_back(u);
                }
            }
        }
        ++c;
    }
    return comp;
}

}  // namespace

bool condition_K(const Graph& g) {
    auto comp = scc_components(g);
    int n = g.size();
    int num = n == 0 ? 0 : *std::max_element(comp.begin(), comp.end()) + 1;
    for (int c = 0; c < num; ++c) {
        bool has_internal = false;
        bool bare_cycle = true;
        for (int v = 0; v < n; ++v) {
            if (comp[v] != c) continue;
            int internal = 0;
            bool unit_mult = true;
            for (const auto& e : g.out_edges(v)) {
                if (comp[e.dst] == c) {
                    ++internal;
                    if (e.mult.is_omega() || e.mult.count() != 1) unit_mult = false;
                }
            }
            if (internal > 0) has_internal = true;
            if (internal != 1 || !unit_mult) bare_cycle = false;
        }
        if (has_internal && bare_cycle) return false;
    }
    return true;
}

std::optional<VertexSet> strong_csp(const Graph& g) {
    if (g.size() == 0) return std::nullopt;
    VertexSet x = g.all_vertices();
    for (int v = 0; v < g.size(); ++v) x = x & hs_closure(g, VertexSet::single(v));
    if (x.empty()) return std::nullopt;
    auto reach = reach_closure(g);
    for (int v = 0; v < g.size(); ++v) {
        if (!(reach[v] & x).bits()) return std::nullopt;
    }
    return x;
}

std::optional<CycleId> is_comet(const Graph& g) {
    for (const auto& e : g.edges()) {
        if (e.mult.is_omega()) return std::nullopt;  // must be row-finite
    }
    auto cycles = simple_cycles(g);
    if (cycles.size() != 1) return std::nullopt;
    auto no_exit = cycles_without_exits(g);
    if (no_exit.size() != 1 || !(no_exit[0] == cycles[0])) return std::nullopt;
    auto reach = reach_closure(g);
    VertexSet support = cycles[0].support();
    for (int v = 0; v < g.size(); ++v) {
        if (!(reach[v] & support).bits()) return std::nullopt;
    }
    return cycles[0];
}

std::uint64_t comet_path_count(const Graph& g, const CycleId& c) {
    auto check = is_comet(g);
    if (!check || !(*check == c)) throw std::invalid_argument("graph is not a comet on this cycle");
    int base = c.base();
    // removing the base's out-edge breaks the only cycle, leaving a DAG; count
    // paths into the base by multiplicity
    std::vector<std::int64_t> paths(g.size(), -1);
    auto count = [&](auto&& self, int v) -> std::uint64_t {
        if (paths[v] >= 0) return static_cast<std::uint64_t>(paths[v]);
        std::uint64_t total = v == base ? 1 : 0;
        if (v != base) {
            for (const auto& e : g.out_edges(v)) {
                total += e.mult.count() * self(self, e.dst);
            }
        }
        paths[v] = static_cast<std::int64_t>(total);
        return total;
    };
    std::uint64_t total = 0;
    for (int v = 0; v < g.size(); ++v) total += count(count, v);
    return total;
}

namespace {

std::optional<std::vector<VertexSet>> irredundant_cover(const Graph& g,
                                                        std::vector<VertexSet> candidates) {
    VertexSet all = g.all_vertices();
    VertexSet covered;
    for (const auto& c : candidates) covered = covered | c;
    if (covered != all) return std::nullopt;
    // larger first, then vertex order
    std::sort(candidates.begin(), candidates.end(), [&](VertexSet a, VertexSet b) {
        if (a.count() != b.count()) return a.count() > b.count();
        return a.to_vector() < b.to_vector();
    });
    std::vector<VertexSet> cover;
    VertexSet got;
    for (const auto& c : candidates) {
        if (!c.minus(got).empty()) {
            cover.push_back(c);
            got = got | c;
        }
    }
    // prune any member still contained in the union of the others
    bool changed = true;
    while (changed) {
        changed = false;
        for (size_t i = cover.size(); i-- > 0;) {
            VertexSet rest;
            for (size_t j = 0; j < cover.size(); ++j) {
                if (j != i) rest = rest | cover[j];
            }
            if (cover[i].subset_of(rest)) {
                cover.erase(cover.begin() + i);
                changed = true;
            }
        }
    }
    return cover;
}

}  // namespace

std::optional<std::vector<VertexSet>> maximal_tail_cover(const Graph& g) {
    if (g.size() == 0) return std::vector<VertexSet>{};
    return irredundant_cover(g, maximal_tails(g));
}

std::optional<std::vector<VertexSet>> comet_cover(const Graph& g) {
    if (g.size() == 0) return std::vector<VertexSet>{};
    std::vector<VertexSet> candidates;
    for (const auto& h : all_hs_subsets(g)) {
        VertexSet m = g.all_vertices().minus(h);
        if (m.empty()) continue;
        if (is_comet(induced_subgraph(g, m))) candidates.push_back(m);
    }
    return irredundant_cover(g, std::move(candidates));
}

std::vector<CycleId> extreme_cycles(const Graph& g) {
    auto reach = reach_closure(g);
    std::vector<CycleId> out;
    for (const auto& c : simple_cycles(g)) {
        VertexSet support = c.support();
        bool has_exit = false;
        for (size_t i = 0; i < c.vertices.size(); ++i) {
            int v = c.vertices[i];
            int next = c.vertices[(i + 1) % c.vertices.size()];
            for (const auto& e : g.out_edges(v)) {
                if (e.dst != next || e.mult.is_omega() || e.mult.count() != 1) has_exit = true;
            }
            if (g.out_edges(v).size() != 1) has_exit = true;
        }
        if (!has_exit) continue;
        VertexSet reachable;
        for (int v : c.vertices) reachable = reachable | reach[v];
        bool returns = true;
        for (int v : reachable.to_vector()) {
            if (!(reach[v] & support).bits()) returns = false;
        }
        if (returns) out.push_back(c);
    }
    std::sort(out.begin(), out.end());
    return out;
}

Graph induced_subgraph(const Graph& g, VertexSet keep) {
    std::vector<std::string> names;
    for (int v : keep.to_vector()) names.push_back(g.name(v));
    std::vector<Graph::NamedEdge> edges;
    for (const auto& e : g.edges()) {
        if (keep.contains(e.src) && keep.contains(e.dst)) {
            edges.push_back({g.name(e.src), g.name(e.dst), e.mult});
        }
    }
    return Graph(names, edges);
}

}  // namespace lpa
