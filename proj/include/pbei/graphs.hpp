#ifndef PBEI_GRAPHS_HPP
#define PBEI_GRAPHS_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace pbei {

/// Labeled simple graph on vertices 1..n.
/// Adjacency is kept as per-vertex bitmasks (bit v-1 set iff v adjacent),
/// which keeps the subset brute-force routines cheap.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n) : n_(n), adj_(static_cast<size_t>(n), 0u) {}

    int n() const { return n_; }
    int edge_count() const;

    bool has_edge(int u, int v) const;
    void add_edge(int u, int v);
    void remove_edge(int u, int v);

    /// Neighbors of v as a bitmask over vertices 1..n (bit u-1).
    std::uint32_t neighbor_mask(int v) const { return adj_[static_cast<size_t>(v - 1)]; }
    std::vector<int> neighbors(int v) const;
    int degree(int v) const;

    /// Edges as pairs {i,j} with i<j, sorted.
    std::vector<std::pair<int, int>> edges() const;

    bool operator==(const Graph& o) const { return n_ == o.n_ && adj_ == o.adj_; }

private:
    void check_vertex(int v) const;

    int n_ = 0;
    std::vector<std::uint32_t> adj_;
};

struct Bipartition {
    std::vector<int> side1;  // contains the smallest vertex of each component
    std::vector<int> side2;
};

struct Classification {
    bool is_connected = false;
    std::vector<std::vector<int>> components;
    bool is_bipartite = false;
    std::optional<Bipartition> bipartition;
    bool is_complete = false;
    bool is_complete_bipartite = false;
    bool is_path = false;
    bool is_cycle = false;
    bool is_tree = false;
    bool is_unicyclic = false;
    int girth = 0;  // 0 if acyclic
    bool is_claw = false;
    bool is_diamond = false;
    bool is_chordal = false;
    bool is_block_graph = false;
    std::vector<int> cut_vertices;
    std::vector<int> free_vertices;
    int max_degree = 0;
};

/// Result of taking an induced subgraph: vertices renamed to 1..|A|,
/// vertex_map[k-1] is the original label of new vertex k.
struct InducedSubgraph {
    Graph graph;
    std::vector<int> vertex_map;
};

Graph graph_from_edges(int n, const std::vector<std::pair<int, int>>& pairs);

InducedSubgraph induced_subgraph(const Graph& g, const std::vector<int>& a);

Graph delete_edge(const Graph& g, std::pair<int, int> e);
InducedSubgraph delete_vertex(const Graph& g, int v);

/// G_v: add all edges among N(v).
Graph neighborhood_completion(const Graph& g, int v);
/// G_e for a non-edge e={u,v}: add all edges among N(u) and all among N(v).
Graph neighborhood_completion(const Graph& g, std::pair<int, int> e);

std::optional<Bipartition> bipartition(const Graph& g);

/// ell(G): edge count of a longest induced path (0 for edgeless graphs).
int longest_induced_path_length(const Graph& g);
/// oc(G): vertex count of a longest induced odd cycle (0 if none).
int longest_induced_odd_cycle_length(const Graph& g);

Classification classify(const Graph& g);

bool is_connected(const Graph& g);
std::vector<std::vector<int>> components(const Graph& g);

/// Canonical relabeling key: identical for isomorphic graphs.
/// Iterative color refinement followed by permutation search within
/// refinement classes; intended for n <= 8.
std::uint64_t canonical_form(const Graph& g);

void enumerate_graphs(int n, bool connected_only, bool up_to_iso,
                      const std::function<void(const Graph&)>& fn);
std::vector<Graph> enumerate_graphs(int n, bool connected_only, bool up_to_iso);

// Named families used by the CLI and tests.
Graph path_graph(int n);
Graph cycle_graph(int n);
Graph complete_graph(int n);
Graph complete_bipartite_graph(int a, int b);
Graph claw_graph();     // K_{1,3} centered at 1
Graph diamond_graph();  // 4 vertices, 5 edges (K_4 minus {1,4})
Graph disjoint_union(const Graph& a, const Graph& b);

// graph6 and edge-list text formats.
std::string to_graph6(const Graph& g);
Graph from_graph6(const std::string& s);
std::string to_edge_list(const Graph& g);
Graph parse_edge_list(const std::string& text);

}  // namespace pbei

#endif
