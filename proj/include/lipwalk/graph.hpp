// Rooted connected graphs: representation, constructors for the special
// classes handled by the closed forms, structural predicates, and the
// generalized KC-transformation.
#pragma once

#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace lipwalk {

// A class constructor was asked for a graph below its minimum order.
struct InvalidOrder : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// The KC-transformation precondition min(|V_ab|, |V_ba|) > 1 failed.
struct TransformNotApplicable : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// cycle_length() was asked on an acyclic graph.
struct NoCycle : std::runtime_error {
    using std::runtime_error::runtime_error;
};

using Edge = std::pair<int, int>;

// Connected undirected simple graph on vertices 0..n-1 with a distinguished
// root. Immutable after construction; connectivity, simplicity and index
// bounds are validated eagerly.
class RootedGraph {
public:
    RootedGraph(int n, std::vector<Edge> edges, int root = 0);

    int order() const { return n_; }
    int size() const { return static_cast<int>(edges_.size()); }
    int root() const { return root_; }

    // Edges in canonical form: each pair (u,v) with u < v, list sorted.
    const std::vector<Edge>& edges() const { return edges_; }

    std::span<const int> neighbors(int v) const {
        return {adj_flat_.data() + adj_off_[v],
                adj_flat_.data() + adj_off_[v + 1]};
    }
    int degree(int v) const { return adj_off_[v + 1] - adj_off_[v]; }

    bool has_edge(int u, int v) const;

    // Same graph, different root.
    RootedGraph with_root(int root) const { return {n_, edges_, root}; }

    bool operator==(const RootedGraph& o) const {
        return n_ == o.n_ && root_ == o.root_ && edges_ == o.edges_;
    }

private:
    int n_ = 0;
    int root_ = 0;
    std::vector<Edge> edges_;
    std::vector<int> adj_off_;
    std::vector<int> adj_flat_;
};

// Class constructors. Roots: vertex 0 throughout; for stars that is the
// center and for complete bipartite graphs a vertex of the first part.
RootedGraph make_path(int n);               // n >= 1
RootedGraph make_cycle(int n);              // n >= 3
RootedGraph make_complete(int n);           // n >= 1
RootedGraph make_complete_bipartite(int p, int q);  // p, q >= 1
RootedGraph make_star(int n);               // n >= 2

// Cycle of length cycle_len with a pendant path of path_lengths[i] extra
// vertices attached at cycle vertex i (0 = nothing attached).
RootedGraph make_corolla(int cycle_len, const std::vector<int>& path_lengths);

// Connectivity test on a raw edge list (spanning: all n vertices reachable).
bool edges_connected(int n, const std::vector<Edge>& edges);

bool is_bipartite(const RootedGraph& g);
bool is_tree(const RootedGraph& g);
bool is_unicyclic(const RootedGraph& g);   // exactly one cycle
bool is_pseudotree(const RootedGraph& g);  // at most one cycle
bool is_corolla(const RootedGraph& g);

// Length of the unique cycle of a unicyclic graph; throws NoCycle on trees.
int cycle_length(const RootedGraph& g);

// Sorted list of the vertices of the unique cycle (empty for trees).
std::vector<int> cycle_vertices(const RootedGraph& g);

int diameter(const RootedGraph& g);

// Single-source shortest path distances (unweighted).
std::vector<int> bfs_distances(const RootedGraph& g, int source);

bool is_cut_vertex(const RootedGraph& g, int v);

// V_{a;b}(g): vertices that cannot reach b without passing through a,
// i.e. {a} plus everything unreachable from b once a is deleted. Sorted.
std::vector<int> side_vertices(const RootedGraph& g, int a, int b);

// Generalized KC-transformation G_{a->b}: every edge from b to one of its
// neighbors inside V_{b;a} is replaced by an edge from a to that neighbor.
// Requires min(|V_{a;b}|, |V_{b;a}|) > 1; throws TransformNotApplicable
// otherwise. The root index is kept as is.
RootedGraph kc_transform(const RootedGraph& g, int a, int b);

// Induced subgraph on the given (sorted, deduplicated) vertex set, with
// vertices relabeled by their position in the set. Connectivity is not
// required here, so the result is a raw edge list plus order.
struct InducedSubgraph {
    int n = 0;
    std::vector<Edge> edges;
    std::vector<int> original;  // original[i] = vertex of g at new index i
};
InducedSubgraph induced_subgraph(const RootedGraph& g, std::vector<int> vertices);

// True iff the subgraph induced on V(G;a,b) := (V - V_ab - V_ba) + {a,b}
// admits an automorphism exchanging a and b. Brute-force search, intended
// for small graphs. Requires a, b to be distinct cut vertices.
bool swap_automorphism_exists(const RootedGraph& g, int a, int b);

// Exposed for testing: swap-automorphism search on a raw graph.
bool has_swap_automorphism(int n, const std::vector<Edge>& edges, int a, int b);

enum class GraphClass {
    Path,
    Cycle,
    Complete,
    CompleteBipartite,
    Star,
    Corolla,
    Unicyclic,
    Tree,
    Generic,
};

struct GraphClassification {
    GraphClass cls = GraphClass::Generic;
    int p = 0, q = 0;    // parts, for CompleteBipartite
    int cycle_len = 0;   // for Cycle / Unicyclic / Corolla
    std::string name() const;
};

// Recognizes the most specific class with a closed form, preferring
// Complete > Cycle > Star > Path > CompleteBipartite > Corolla > Unicyclic
// > Tree > Generic. Recognition is by structure, not labeling.
GraphClassification classify(const RootedGraph& g);

}  // namespace lipwalk
