#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace lpa {

/// Subset of the vertices of a fixed graph, as a 64-bit mask.
class VertexSet {
public:
    VertexSet() = default;
    explicit VertexSet(std::uint64_t bits) : bits_(bits) {}

    static VertexSet single(int v) { return VertexSet(std::uint64_t{1} << v); }

    bool contains(int v) const { return (bits_ >> v) & 1; }
    bool empty() const { return bits_ == 0; }
    int count() const { return __builtin_popcountll(bits_); }
    std::uint64_t bits() const { return bits_; }

    void add(int v) { bits_ |= std::uint64_t{1} << v; }

    bool subset_of(const VertexSet& o) const { return (bits_ & ~o.bits_) == 0; }
    bool intersects(const VertexSet& o) const { return (bits_ & o.bits_) != 0; }

    friend VertexSet operator&(VertexSet a, VertexSet b) { return VertexSet(a.bits_ & b.bits_); }
    friend VertexSet operator|(VertexSet a, VertexSet b) { return VertexSet(a.bits_ | b.bits_); }
    VertexSet minus(VertexSet o) const { return VertexSet(bits_ & ~o.bits_); }

    friend bool operator==(VertexSet a, VertexSet b) { return a.bits_ == b.bits_; }
    friend bool operator!=(VertexSet a, VertexSet b) { return a.bits_ != b.bits_; }

    std::vector<int> to_vector() const;

private:
    std::uint64_t bits_ = 0;
};

/// Edge-class multiplicity: a positive integer or omega (infinitely many
/// parallel edges, i.e. an infinite emitter along this class).
class EdgeMult {
public:
    EdgeMult() = default;
    explicit EdgeMult(std::uint64_t n);
    static EdgeMult omega() { EdgeMult m; m.value_ = kOmega; return m; }

    bool is_omega() const { return value_ == kOmega; }
    std::uint64_t count() const;  // throws on omega

    friend bool operator==(EdgeMult a, EdgeMult b) { return a.value_ == b.value_; }

private:
    static constexpr std::uint64_t kOmega = ~std::uint64_t{0};
    std::uint64_t value_ = 1;
};

struct EdgeClass {
    int src = 0;
    int dst = 0;
    EdgeMult mult;
};

enum class VertexKind { sink, regular, infinite_emitter };

/// Simple cycle identified by its vertex list, rotated so the smallest
/// vertex comes first. Edge choice is by (src,dst) class, so the list is a
/// complete identification.
struct CycleId {
    std::vector<int> vertices;

    static CycleId from_path(std::vector<int> verts);  // canonical rotation
    int base() const { return vertices.front(); }
    VertexSet support() const;

    friend bool operator==(const CycleId& a, const CycleId& b) {
        return a.vertices == b.vertices;
    }
    friend bool operator<(const CycleId& a, const CycleId& b) {
        return a.vertices < b.vertices;
    }
};

/// Directed graph with finitely many vertices (at most 64) and at most one
/// edge class per (src,dst); parallel edges are expressed by multiplicity.
class Graph {
public:
    struct NamedEdge {
        std::string src, dst;
        EdgeMult mult;
    };

    Graph() = default;
    Graph(std::vector<std::string> vertices, const std::vector<NamedEdge>& edges);

    int size() const { return static_cast<int>(names_.size()); }
    const std::string& name(int v) const { return names_[v]; }
    std::optional<int> index(std::string_view name) const;
    int index_checked(std::string_view name) const;  // throws on unknown vertex

    std::span<const EdgeClass> edges() const { return edges_; }
    std::span<const EdgeClass> out_edges(int v) const;
    VertexSet out_targets(int v) const;
    VertexSet all_vertices() const;

    std::vector<std::string> names_of(const VertexSet& s) const;

private:
    std::vector<std::string> names_;          // sorted, unique
    std::vector<EdgeClass> edges_;            // sorted by (src,dst), unique
    std::vector<std::pair<int, int>> out_;    // per-vertex [begin,end) into edges_
};

/// Quotient graph E \ (H,S): real vertices E^0\H keep their names, breaking
/// vertices in B_H \ S get a primed sink copy named with a trailing '.
struct QuotientGraph {
    Graph graph;
    std::vector<int> origin;    // quotient index -> original index
    std::vector<bool> primed;   // parallel to graph vertices

    VertexSet real_vertices() const;
    VertexSet primed_vertices() const;
    /// Map a cycle of the quotient (necessarily through real vertices) back
    /// to original vertex indices.
    CycleId to_original(const CycleId& c) const;
};

VertexKind vertex_kind(const Graph& g, int v);
bool reaches(const Graph& g, int u, int v);
/// reach[v] = set of vertices reachable from v (including v).
std::vector<VertexSet> reach_closure(const Graph& g);

bool is_hereditary(const Graph& g, VertexSet s);
bool is_saturated(const Graph& g, VertexSet s);
VertexSet hs_closure(const Graph& g, VertexSet seed);
/// All hereditary saturated subsets, sorted by size then vertex order.
/// Enumerates 2^n subsets; refuses graphs above the bound.
std::vector<VertexSet> all_hs_subsets(const Graph& g, int bound = 20);

/// Breaking vertices of a hereditary saturated H: infinite emitters outside
/// H whose omega classes all land in H and that keep at least one edge out.
VertexSet breaking_vertices(const Graph& g, VertexSet h);

QuotientGraph quotient(const Graph& g, VertexSet h, VertexSet s);

bool is_downward_directed(const Graph& g);
/// All maximal tails: complements of hereditary saturated sets that are
/// downward directed and emission-closed (the emission property is checked
/// explicitly for infinite emitters, where saturation does not cover it).
std::vector<VertexSet> maximal_tails(const Graph& g);

std::vector<CycleId> simple_cycles(const Graph& g);
/// Cycles whose every vertex emits exactly the single cycle class with
/// multiplicity 1. Condition (L) is this list being empty.
std::vector<CycleId> cycles_without_exits(const Graph& g);
bool condition_L(const Graph& g);
/// Condition (K) via strongly connected components: fails exactly when some
/// SCC containing a cycle is a bare simple cycle (all internal out-degrees 1,
/// multiplicity 1).
bool condition_K(const Graph& g);

/// X = intersection of hs_closure({v}) over all v; X witnesses the strong
/// countable separation property iff it is nonempty and met by every vertex.
std::optional<VertexSet> strong_csp(const Graph& g);

/// A comet: row-finite, a unique cycle, without exits, reached from every
/// vertex. Returns that cycle.
std::optional<CycleId> is_comet(const Graph& g);
/// Number of paths ending at the comet cycle's base that do not traverse the
/// entire cycle (multiplicity choices counted). This is the matrix size n of
/// the M_n(K[x,x^-1]) presentation.
std::uint64_t comet_path_count(const Graph& g, const CycleId& c);

/// Irredundant cover of the vertex set by maximal tails (largest first, then
/// vertex order; redundant members pruned), or absent when no cover exists.
std::optional<std::vector<VertexSet>> maximal_tail_cover(const Graph& g);
/// Irredundant cover by complements of hereditary saturated sets inducing
/// finite comets, or absent.
std::optional<std::vector<VertexSet>> comet_cover(const Graph& g);

/// Cycles with exits such that every path leaving the cycle can return.
std::vector<CycleId> extreme_cycles(const Graph& g);

Graph induced_subgraph(const Graph& g, VertexSet keep);

}  // namespace lpa
