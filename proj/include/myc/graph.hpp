#pragma once

#include <memory>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace myc {

/// Hierarchical vertex name recording where a vertex came from.
///
/// Base(tag) names a seed-graph vertex, Level(parent, i) is the copy (parent, i)
/// created by one generalised Mycielski step, Apex(depth) is the apex z added by
/// the depth-th step. Text form: base tags verbatim, levels as "p.i" with the
/// parent parenthesised when it is itself a level ("(u.0).2"), apexes as "z"
/// (depth 1) or "z<depth>".
class VertexName {
public:
    struct Base {
        std::string tag;
    };
    struct Level {
        std::shared_ptr<const VertexName> parent;
        int index;
    };
    struct Apex {
        int depth;
    };

    static VertexName base(std::string tag);
    static VertexName level(VertexName parent, int index);
    static VertexName apex(int depth);

    /// Inverse of to_string(). Throws DomainError on malformed text.
    static VertexName parse(const std::string& text);

    bool is_base() const { return std::holds_alternative<Base>(value_); }
    bool is_level() const { return std::holds_alternative<Level>(value_); }
    bool is_apex() const { return std::holds_alternative<Apex>(value_); }
    const Base& as_base() const { return std::get<Base>(value_); }
    const Level& as_level() const { return std::get<Level>(value_); }
    const Apex& as_apex() const { return std::get<Apex>(value_); }

    /// Number of Mycielski iterations this name has passed through.
    int iterations() const;

    std::string to_string() const;

    friend bool operator==(const VertexName& a, const VertexName& b);

private:
    explicit VertexName(std::variant<Base, Level, Apex> v) : value_(std::move(v)) {}
    std::variant<Base, Level, Apex> value_;
};

/// Wraps a name string as the parent part of a level name: "x" -> "x", "x.1" -> "(x.1)".
std::string level_text(const std::string& parent, int index);

using Edge = std::pair<int, int>;

/// Finite simple graph. Edges are stored as sorted pairs in lexicographic order,
/// so equal graphs compare and serialize identically.
class Graph {
public:
    Graph() = default;

    /// Validates and canonicalizes. Names default to Base("0"), Base("1"), ...
    /// Throws ContractError on self-loops, duplicate edges or bad endpoints.
    Graph(int order, std::vector<Edge> edges, std::vector<VertexName> names = {});

    int order() const { return order_; }
    std::size_t size() const { return edges_.size(); }
    std::span<const Edge> edges() const { return edges_; }
    std::span<const int> neighbours(int v) const { return adjacency_[v]; }
    int degree(int v) const { return static_cast<int>(adjacency_[v].size()); }
    const VertexName& name(int v) const { return names_[v]; }
    std::span<const VertexName> names() const { return names_; }
    bool has_edge(int u, int v) const;

    friend bool operator==(const Graph& a, const Graph& b);

private:
    int order_ = 0;
    std::vector<Edge> edges_;
    std::vector<VertexName> names_;
    std::vector<std::vector<int>> adjacency_;
};

// ---------------------------------------------------------------------------
// Basic graphs

Graph cycle(int n);
Graph complete(int n);
/// Simple complement on the same vertex set, names preserved.
Graph complement_of(const Graph& g);
Graph petersen();

// ---------------------------------------------------------------------------
// Generalised Mycielski construction

/// Ordered list r_1, ..., r_{k-2} describing a member of M_k. Empty means K2.
struct MycielskiSpec {
    std::vector<int> rs;

    int k() const { return static_cast<int>(rs.size()) + 2; }
    /// Parses "2,3" (or "" for K2). Throws DomainError.
    static MycielskiSpec parse(const std::string& text);
    std::string to_string() const;
    friend bool operator==(const MycielskiSpec&, const MycielskiSpec&) = default;
};

/// M_r(G): vertices V x {0..r-1} plus apex z, laid out as (u, i) -> i * |V| + u
/// and z -> r * |V|. Throws ContractError if r < 1.
Graph mycielski(const Graph& g, int r);

/// Folds mycielski over spec.rs starting from K2.
Graph build_family(const MycielskiSpec& spec);

/// Bipartite double cover: (v,+) -> v, (v,-) -> v + |V|.
Graph double_cover(const Graph& g);

/// Two-colours the graph if bipartite (0/1 per vertex).
std::optional<std::vector<int>> bipartition(const Graph& g);

// ---------------------------------------------------------------------------
// Isomorphism

inline constexpr int kDefaultIsoCap = 200;

/// Returns a mapping phi with {u,v} in E(g) iff {phi(u),phi(v)} in E(h), or
/// nullopt. Backtracking over individualization with joint colour refinement.
/// Throws SizeError if either graph exceeds cap vertices.
std::optional<std::vector<int>> find_isomorphism(const Graph& g, const Graph& h,
                                                 int cap = kDefaultIsoCap);

inline bool is_isomorphic(const Graph& g, const Graph& h, int cap = kDefaultIsoCap)
{
    return find_isomorphism(g, h, cap).has_value();
}

/// O(|E|) check that phi is an isomorphism g -> h.
bool verify_isomorphism(const Graph& g, const Graph& h, std::span<const int> phi);

} // namespace myc
