#include "pbei/graphs.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <queue>
#include <sstream>
#include <stdexcept>

namespace pbei {

void Graph::check_vertex(int v) const {
    if (v < 1 || v > n_)
        throw std::invalid_argument("vertex " + std::to_string(v) + " out of range 1.." +
                                    std::to_string(n_));
}

int Graph::edge_count() const {
    int twice = 0;
    for (auto m : adj_) twice += std::popcount(m);
    return twice / 2;
}

bool Graph::has_edge(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    return (adj_[static_cast<size_t>(u - 1)] >> (v - 1)) & 1u;
}

void Graph::add_edge(int u, int v) {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw std::invalid_argument("loop at vertex " + std::to_string(u));
    adj_[static_cast<size_t>(u - 1)] |= 1u << (v - 1);
    adj_[static_cast<size_t>(v - 1)] |= 1u << (u - 1);
}

void Graph::remove_edge(int u, int v) {
    check_vertex(u);
    check_vertex(v);
    adj_[static_cast<size_t>(u - 1)] &= ~(1u << (v - 1));
    adj_[static_cast<size_t>(v - 1)] &= ~(1u << (u - 1));
}

std::vector<int> Graph::neighbors(int v) const {
    check_vertex(v);
    std::vector<int> out;
    std::uint32_t m = adj_[static_cast<size_t>(v - 1)];
    while (m) {
        int b = std::countr_zero(m);
        out.push_back(b + 1);
        m &= m - 1;
    }
    return out;
}

int Graph::degree(int v) const {
    check_vertex(v);
    return std::popcount(adj_[static_cast<size_t>(v - 1)]);
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    for (int i = 1; i <= n_; ++i)
        for (int j = i + 1; j <= n_; ++j)
            if ((adj_[static_cast<size_t>(i - 1)] >> (j - 1)) & 1u) out.emplace_back(i, j);
    return out;
}

Graph graph_from_edges(int n, const std::vector<std::pair<int, int>>& pairs) {
    if (n < 0) throw std::invalid_argument("negative vertex count");
    Graph g(n);
    for (auto [i, j] : pairs) {
        if (i == j)
            throw std::invalid_argument("loop (" + std::to_string(i) + "," + std::to_string(j) +
                                        ")");
        g.add_edge(i, j);
    }
    return g;
}

InducedSubgraph induced_subgraph(const Graph& g, const std::vector<int>& a) {
    std::vector<int> verts = a;
    std::sort(verts.begin(), verts.end());
    verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
    for (int v : verts)
        if (v < 1 || v > g.n())
            throw std::invalid_argument("vertex " + std::to_string(v) + " outside 1.." +
                                        std::to_string(g.n()));
    Graph h(static_cast<int>(verts.size()));
    for (size_t p = 0; p < verts.size(); ++p)
        for (size_t q = p + 1; q < verts.size(); ++q)
            if (g.has_edge(verts[p], verts[q]))
                h.add_edge(static_cast<int>(p) + 1, static_cast<int>(q) + 1);
    return {std::move(h), std::move(verts)};
}

Graph delete_edge(const Graph& g, std::pair<int, int> e) {
    if (!g.has_edge(e.first, e.second))
        throw std::invalid_argument("edge (" + std::to_string(e.first) + "," +
                                    std::to_string(e.second) + ") not in graph");
    Graph h = g;
    h.remove_edge(e.first, e.second);
    return h;
}

InducedSubgraph delete_vertex(const Graph& g, int v) {
    if (v < 1 || v > g.n()) throw std::invalid_argument("vertex out of range");
    std::vector<int> keep;
    for (int u = 1; u <= g.n(); ++u)
        if (u != v) keep.push_back(u);
    return induced_subgraph(g, keep);
}

Graph neighborhood_completion(const Graph& g, int v) {
    auto nb = g.neighbors(v);
    Graph h = g;
    for (size_t p = 0; p < nb.size(); ++p)
        for (size_t q = p + 1; q < nb.size(); ++q) h.add_edge(nb[p], nb[q]);
    return h;
}

Graph neighborhood_completion(const Graph& g, std::pair<int, int> e) {
    auto [u, v] = e;
    if (g.has_edge(u, v))
        throw std::invalid_argument("G_e requires a non-edge; {" + std::to_string(u) + "," +
                                    std::to_string(v) + "} is an edge");
    Graph h = neighborhood_completion(g, u);
    return neighborhood_completion(h, v);
}

std::optional<Bipartition> bipartition(const Graph& g) {
    std::vector<int> color(static_cast<size_t>(g.n()) + 1, 0);  // 0 unvisited, 1 or 2
    Bipartition bp;
    for (int s = 1; s <= g.n(); ++s) {
        if (color[static_cast<size_t>(s)] != 0) continue;
        color[static_cast<size_t>(s)] = 1;
        std::queue<int> q;
        q.push(s);
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            for (int u : g.neighbors(v)) {
                if (color[static_cast<size_t>(u)] == 0) {
                    color[static_cast<size_t>(u)] = 3 - color[static_cast<size_t>(v)];
                    q.push(u);
                } else if (color[static_cast<size_t>(u)] == color[static_cast<size_t>(v)]) {
                    return std::nullopt;
                }
            }
        }
    }
    for (int v = 1; v <= g.n(); ++v)
        (color[static_cast<size_t>(v)] == 1 ? bp.side1 : bp.side2).push_back(v);
    return bp;
}

namespace {

// Degrees within a vertex subset, from adjacency masks.
bool subset_is_induced_path(const Graph& g, std::uint32_t mask) {
    int k = std::popcount(mask);
    if (k == 1) return true;
    int deg1 = 0, edges = 0;
    std::uint32_t m = mask;
    std::uint32_t seen = 0;
    int start = -1;
    while (m) {
        int v = std::countr_zero(m) + 1;
        m &= m - 1;
        int d = std::popcount(g.neighbor_mask(v) & mask);
        if (d == 0 || d > 2) return false;
        if (d == 1) {
            ++deg1;
            start = v;
        }
        edges += d;
    }
    edges /= 2;
    if (deg1 != 2 || edges != k - 1) return false;
    // connectivity
    std::uint32_t frontier = 1u << (start - 1);
    seen = frontier;
    while (frontier) {
        std::uint32_t next = 0;
        std::uint32_t f = frontier;
        while (f) {
            int v = std::countr_zero(f) + 1;
            f &= f - 1;
            next |= g.neighbor_mask(v) & mask & ~seen;
        }
        seen |= next;
        frontier = next;
    }
    return seen == mask;
}

bool subset_is_induced_cycle(const Graph& g, std::uint32_t mask) {
    int k = std::popcount(mask);
    if (k < 3) return false;
    std::uint32_t m = mask;
    while (m) {
        int v = std::countr_zero(m) + 1;
        m &= m - 1;
        if (std::popcount(g.neighbor_mask(v) & mask) != 2) return false;
    }
    // connected 2-regular induced subgraph = single cycle
    int first = std::countr_zero(mask) + 1;
    std::uint32_t seen = 1u << (first - 1);
    std::uint32_t frontier = seen;
    while (frontier) {
        std::uint32_t next = 0;
        std::uint32_t f = frontier;
        while (f) {
            int v = std::countr_zero(f) + 1;
            f &= f - 1;
            next |= g.neighbor_mask(v) & mask & ~seen;
        }
        seen |= next;
        frontier = next;
    }
    return seen == mask;
}

}  // namespace

int longest_induced_path_length(const Graph& g) {
    int best = 0;
    std::uint32_t total = g.n() >= 32 ? 0xffffffffu : ((1u << g.n()) - 1);
    for (std::uint32_t mask = 1; mask <= total; ++mask) {
        int k = std::popcount(mask);
        if (k - 1 <= best) continue;
        if (subset_is_induced_path(g, mask)) best = k - 1;
    }
    return best;
}

int longest_induced_odd_cycle_length(const Graph& g) {
    int best = 0;
    std::uint32_t total = g.n() >= 32 ? 0xffffffffu : ((1u << g.n()) - 1);
    for (std::uint32_t mask = 1; mask <= total; ++mask) {
        int k = std::popcount(mask);
        if (k % 2 == 0 || k <= best || k < 3) continue;
        if (subset_is_induced_cycle(g, mask)) best = k;
    }
    return best;
}

bool is_connected(const Graph& g) {
    if (g.n() == 0) return true;
    return components(g).size() == 1;
}

std::vector<std::vector<int>> components(const Graph& g) {
    std::vector<std::vector<int>> comps;
    std::vector<bool> seen(static_cast<size_t>(g.n()) + 1, false);
    for (int s = 1; s <= g.n(); ++s) {
        if (seen[static_cast<size_t>(s)]) continue;
        std::vector<int> comp;
        std::queue<int> q;
        q.push(s);
        seen[static_cast<size_t>(s)] = true;
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            comp.push_back(v);
            for (int u : g.neighbors(v))
                if (!seen[static_cast<size_t>(u)]) {
                    seen[static_cast<size_t>(u)] = true;
                    q.push(u);
                }
        }
        std::sort(comp.begin(), comp.end());
        comps.push_back(std::move(comp));
    }
    return comps;
}

namespace {

int compute_girth(const Graph& g) {
    // shortest cycle via BFS from every vertex
    int best = 0;
    for (int s = 1; s <= g.n(); ++s) {
        std::vector<int> dist(static_cast<size_t>(g.n()) + 1, -1);
        std::vector<int> parent(static_cast<size_t>(g.n()) + 1, 0);
        std::queue<int> q;
        dist[static_cast<size_t>(s)] = 0;
        q.push(s);
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            for (int u : g.neighbors(v)) {
                if (dist[static_cast<size_t>(u)] < 0) {
                    dist[static_cast<size_t>(u)] = dist[static_cast<size_t>(v)] + 1;
                    parent[static_cast<size_t>(u)] = v;
                    q.push(u);
                } else if (u != parent[static_cast<size_t>(v)]) {
                    int len = dist[static_cast<size_t>(v)] + dist[static_cast<size_t>(u)] + 1;
                    if (best == 0 || len < best) best = len;
                }
            }
        }
    }
    return best;
}

bool compute_chordal(const Graph& g) {
    // repeatedly strip simplicial vertices
    std::vector<int> alive;
    for (int v = 1; v <= g.n(); ++v) alive.push_back(v);
    std::uint32_t mask = g.n() >= 32 ? 0xffffffffu : ((1u << g.n()) - 1);
    for (int round = 0; round < g.n(); ++round) {
        bool found = false;
        std::uint32_t m = mask;
        while (m) {
            int v = std::countr_zero(m) + 1;
            m &= m - 1;
            std::uint32_t nb = g.neighbor_mask(v) & mask;
            bool simplicial = true;
            std::uint32_t nb1 = nb;
            while (nb1 && simplicial) {
                int a = std::countr_zero(nb1) + 1;
                nb1 &= nb1 - 1;
                if ((g.neighbor_mask(a) & nb & ~(1u << (a - 1))) != (nb & ~(1u << (a - 1))))
                    simplicial = false;
            }
            if (simplicial) {
                mask &= ~(1u << (v - 1));
                found = true;
                break;
            }
        }
        if (!found) return false;
        if (mask == 0) return true;
    }
    return mask == 0;
}

struct BlockFinder {
    const Graph& g;
    std::vector<int> num, low;
    std::vector<std::pair<int, int>> stack;
    std::vector<std::vector<std::pair<int, int>>> blocks;
    std::vector<int> cut;
    int counter = 0;

    explicit BlockFinder(const Graph& gr)
        : g(gr),
          num(static_cast<size_t>(gr.n()) + 1, 0),
          low(static_cast<size_t>(gr.n()) + 1, 0) {}

    void dfs(int v, int parent) {
        num[static_cast<size_t>(v)] = low[static_cast<size_t>(v)] = ++counter;
        int children = 0;
        for (int u : g.neighbors(v)) {
            if (u == parent) continue;
            if (num[static_cast<size_t>(u)] == 0) {
                ++children;
                stack.emplace_back(v, u);
                dfs(u, v);
                low[static_cast<size_t>(v)] =
                    std::min(low[static_cast<size_t>(v)], low[static_cast<size_t>(u)]);
                if (low[static_cast<size_t>(u)] >= num[static_cast<size_t>(v)]) {
                    if (parent != 0 || children > 1) cut.push_back(v);
                    std::vector<std::pair<int, int>> block;
                    while (true) {
                        auto e = stack.back();
                        stack.pop_back();
                        block.push_back(e);
                        if (e == std::make_pair(v, u)) break;
                    }
                    blocks.push_back(std::move(block));
                }
            } else if (num[static_cast<size_t>(u)] < num[static_cast<size_t>(v)]) {
                stack.emplace_back(v, u);
                low[static_cast<size_t>(v)] =
                    std::min(low[static_cast<size_t>(v)], num[static_cast<size_t>(u)]);
            }
        }
    }

    void run() {
        for (int v = 1; v <= g.n(); ++v)
            if (num[static_cast<size_t>(v)] == 0) dfs(v, 0);
        std::sort(cut.begin(), cut.end());
        cut.erase(std::unique(cut.begin(), cut.end()), cut.end());
    }
};

}  // namespace

Classification classify(const Graph& g) {
    Classification c;
    c.components = components(g);
    c.is_connected = c.components.size() <= 1;
    auto bp = bipartition(g);
    c.is_bipartite = bp.has_value();
    c.bipartition = bp;
    int n = g.n(), m = g.edge_count();
    c.is_complete = (m == n * (n - 1) / 2);
    c.girth = compute_girth(g);
    c.is_tree = c.is_connected && c.girth == 0;
    c.is_unicyclic = c.is_connected && m == n && n >= 3;
    c.max_degree = 0;
    int deg1 = 0, deg2 = 0;
    for (int v = 1; v <= n; ++v) {
        int d = g.degree(v);
        c.max_degree = std::max(c.max_degree, d);
        if (d == 1) ++deg1;
        if (d == 2) ++deg2;
    }
    c.is_path = c.is_connected && (n == 1 || (deg1 == 2 && deg2 == n - 2 && m == n - 1));
    c.is_cycle = c.is_connected && n >= 3 && deg2 == n;
    c.is_complete_bipartite = false;
    if (c.is_connected && c.is_bipartite && n >= 2) {
        bool all = true;
        for (int u : bp->side1)
            for (int v : bp->side2)
                if (!g.has_edge(u, v)) all = false;
        c.is_complete_bipartite = all && !bp->side2.empty();
    }
    c.is_claw = (n == 4 && m == 3 && c.max_degree == 3);
    c.is_diamond = (n == 4 && m == 5);
    c.is_chordal = compute_chordal(g);
    BlockFinder bf(g);
    bf.run();
    c.cut_vertices = bf.cut;
    c.is_block_graph = true;
    for (const auto& block : bf.blocks) {
        std::uint32_t verts = 0;
        for (auto [u, v] : block) verts |= (1u << (u - 1)) | (1u << (v - 1));
        std::vector<int> vs;
        std::uint32_t w = verts;
        while (w) {
            vs.push_back(std::countr_zero(w) + 1);
            w &= w - 1;
        }
        for (size_t p = 0; p < vs.size() && c.is_block_graph; ++p)
            for (size_t q = p + 1; q < vs.size(); ++q)
                if (!g.has_edge(vs[p], vs[q])) {
                    c.is_block_graph = false;
                    break;
                }
    }
    for (int v = 1; v <= n; ++v) {
        // free vertex <=> closed neighborhood is a clique
        auto nb = g.neighbors(v);
        bool clique = true;
        for (size_t p = 0; p < nb.size() && clique; ++p)
            for (size_t q = p + 1; q < nb.size(); ++q)
                if (!g.has_edge(nb[p], nb[q])) {
                    clique = false;
                    break;
                }
        if (clique) c.free_vertices.push_back(v);
    }
    return c;
}

namespace {

std::uint64_t edge_mask_under_perm(const Graph& g, const std::vector<int>& perm) {
    // bit index of pair (i<j) in 1..n: sequential over (1,2),(1,3),(2,3),(1,4)...
    int n = g.n();
    std::uint64_t mask = 0;
    int bit = 0;
    for (int j = 2; j <= n; ++j)
        for (int i = 1; i < j; ++i, ++bit)
            if (g.has_edge(perm[static_cast<size_t>(i - 1)], perm[static_cast<size_t>(j - 1)]))
                mask |= (1ull << bit);
    return mask;
}

std::vector<int> refined_colors(const Graph& g) {
    int n = g.n();
    std::vector<int> color(static_cast<size_t>(n));
    for (int v = 1; v <= n; ++v) color[static_cast<size_t>(v - 1)] = g.degree(v);
    for (int round = 0; round < n; ++round) {
        std::vector<std::pair<int, std::vector<int>>> sig(static_cast<size_t>(n));
        for (int v = 1; v <= n; ++v) {
            std::vector<int> nb;
            for (int u : g.neighbors(v)) nb.push_back(color[static_cast<size_t>(u - 1)]);
            std::sort(nb.begin(), nb.end());
            sig[static_cast<size_t>(v - 1)] = {color[static_cast<size_t>(v - 1)], std::move(nb)};
        }
        auto sorted = sig;
        std::sort(sorted.begin(), sorted.end());
        sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
        std::vector<int> next(static_cast<size_t>(n));
        for (int v = 0; v < n; ++v)
            next[static_cast<size_t>(v)] = static_cast<int>(
                std::lower_bound(sorted.begin(), sorted.end(), sig[static_cast<size_t>(v)]) -
                sorted.begin());
        if (next == color) break;
        color = next;
    }
    return color;
}

}  // namespace

std::uint64_t canonical_form(const Graph& g) {
    int n = g.n();
    if (n > 8) throw std::invalid_argument("canonical_form supports n <= 8");
    auto color = refined_colors(g);
    // order vertices by color, permute within color classes
    std::vector<int> verts(static_cast<size_t>(n));
    std::iota(verts.begin(), verts.end(), 1);
    std::stable_sort(verts.begin(), verts.end(), [&](int a, int b) {
        return color[static_cast<size_t>(a - 1)] < color[static_cast<size_t>(b - 1)];
    });
    std::uint64_t best = ~0ull;
    std::vector<int> perm = verts;
    // iterate over permutations preserving color classes
    std::vector<std::pair<size_t, size_t>> classes;
    size_t start = 0;
    for (size_t i = 1; i <= verts.size(); ++i) {
        if (i == verts.size() || color[static_cast<size_t>(verts[i] - 1)] !=
                                     color[static_cast<size_t>(verts[start] - 1)]) {
            classes.emplace_back(start, i);
            start = i;
        }
    }
    std::function<void(size_t)> rec = [&](size_t ci) {
        if (ci == classes.size()) {
            best = std::min(best, edge_mask_under_perm(g, perm));
            return;
        }
        auto [s, e] = classes[ci];
        std::sort(perm.begin() + static_cast<long>(s), perm.begin() + static_cast<long>(e));
        do {
            rec(ci + 1);
        } while (std::next_permutation(perm.begin() + static_cast<long>(s),
                                       perm.begin() + static_cast<long>(e)));
    };
    rec(0);
    return best;
}

void enumerate_graphs(int n, bool connected_only, bool up_to_iso,
                      const std::function<void(const Graph&)>& fn) {
    if (n < 1) throw std::invalid_argument("n must be >= 1");
    if (n > 8) throw std::invalid_argument("enumeration ceiling is n = 8");
    int nbits = n * (n - 1) / 2;
    std::vector<std::pair<int, int>> pairs;
    for (int j = 2; j <= n; ++j)
        for (int i = 1; i < j; ++i) pairs.emplace_back(i, j);
    for (std::uint64_t mask = 0; mask < (1ull << nbits); ++mask) {
        Graph g(n);
        for (int b = 0; b < nbits; ++b)
            if ((mask >> b) & 1ull)
                g.add_edge(pairs[static_cast<size_t>(b)].first, pairs[static_cast<size_t>(b)].second);
        if (connected_only && !is_connected(g)) continue;
        if (up_to_iso && canonical_form(g) != mask) continue;
        fn(g);
    }
}

std::vector<Graph> enumerate_graphs(int n, bool connected_only, bool up_to_iso) {
    std::vector<Graph> out;
    enumerate_graphs(n, connected_only, up_to_iso,
                     [&](const Graph& g) { out.push_back(g); });
    return out;
}

Graph path_graph(int n) {
    Graph g(n);
    for (int i = 1; i < n; ++i) g.add_edge(i, i + 1);
    return g;
}

Graph cycle_graph(int n) {
    if (n < 3) throw std::invalid_argument("cycle needs n >= 3");
    Graph g = path_graph(n);
    g.add_edge(n, 1);
    return g;
}

Graph complete_graph(int n) {
    Graph g(n);
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) g.add_edge(i, j);
    return g;
}

Graph complete_bipartite_graph(int a, int b) {
    Graph g(a + b);
    for (int i = 1; i <= a; ++i)
        for (int j = a + 1; j <= a + b; ++j) g.add_edge(i, j);
    return g;
}

Graph claw_graph() { return complete_bipartite_graph(1, 3); }

Graph diamond_graph() {
    return graph_from_edges(4, {{1, 2}, {1, 3}, {2, 3}, {2, 4}, {3, 4}});
}

Graph disjoint_union(const Graph& a, const Graph& b) {
    Graph g(a.n() + b.n());
    for (auto [i, j] : a.edges()) g.add_edge(i, j);
    for (auto [i, j] : b.edges()) g.add_edge(i + a.n(), j + a.n());
    return g;
}

std::string to_graph6(const Graph& g) {
    int n = g.n();
    if (n > 62) throw std::invalid_argument("graph6 writer supports n <= 62");
    std::string out;
    out.push_back(static_cast<char>(n + 63));
    std::vector<int> bits;
    for (int j = 2; j <= n; ++j)
        for (int i = 1; i < j; ++i) bits.push_back(g.has_edge(i, j) ? 1 : 0);
    while (bits.size() % 6 != 0) bits.push_back(0);
    for (size_t k = 0; k < bits.size(); k += 6) {
        int v = 0;
        for (int b = 0; b < 6; ++b) v = (v << 1) | bits[k + static_cast<size_t>(b)];
        out.push_back(static_cast<char>(v + 63));
    }
    return out;
}

Graph from_graph6(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("empty graph6 string");
    size_t pos = 0;
    int n;
    if (s[0] == 126) throw std::invalid_argument("graph6 reader supports n <= 62");
    n = s[pos++] - 63;
    if (n < 0) throw std::invalid_argument("bad graph6 header");
    Graph g(n);
    int nbits = n * (n - 1) / 2;
    int bit = 0;
    std::vector<std::pair<int, int>> pairs;
    for (int j = 2; j <= n; ++j)
        for (int i = 1; i < j; ++i) pairs.emplace_back(i, j);
    while (bit < nbits) {
        if (pos >= s.size()) throw std::invalid_argument("graph6 string too short");
        int v = s[pos++] - 63;
        if (v < 0 || v > 63) throw std::invalid_argument("bad graph6 byte");
        for (int b = 5; b >= 0 && bit < nbits; --b, ++bit)
            if ((v >> b) & 1)
                g.add_edge(pairs[static_cast<size_t>(bit)].first,
                           pairs[static_cast<size_t>(bit)].second);
    }
    return g;
}

std::string to_edge_list(const Graph& g) {
    std::ostringstream os;
    os << g.n() << "\n";
    for (auto [i, j] : g.edges()) os << i << " " << j << "\n";
    return os.str();
}

Graph parse_edge_list(const std::string& text) {
    std::istringstream is(text);
    std::string line;
    int n = -1;
    std::vector<std::pair<int, int>> pairs;
    while (std::getline(is, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        std::istringstream ls(line);
        if (n < 0) {
            if (ls >> n) continue;
            continue;  // skip leading blank/comment lines
        }
        int i, j;
        if (ls >> i >> j) pairs.emplace_back(i, j);
    }
    if (n < 0) throw std::invalid_argument("edge list: missing vertex count line");
    return graph_from_edges(n, pairs);
}

}  // namespace pbei
