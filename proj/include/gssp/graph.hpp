#ifndef GSSP_GRAPH_HPP
#define GSSP_GRAPH_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace gssp {

// Simple undirected graph on vertices 0..n-1, dense adjacency.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n);

    int n() const { return n_; }
    bool has_edge(int i, int j) const;
    void add_edge(int i, int j);
    int edge_count() const;
    int degree(int v) const;
    std::vector<std::pair<int, int>> edges() const;
    std::vector<int> neighbors(int v) const;
    // N_G[v]
    std::vector<int> closed_neighborhood(int v) const;
    bool is_complete() const;

    bool operator==(const Graph& o) const { return n_ == o.n_ && adj_ == o.adj_; }
    bool operator!=(const Graph& o) const { return !(*this == o); }

    // true when every edge of this graph is an edge of s (same order)
    bool subgraph_of(const Graph& s) const;

private:
    void check_vertex(int v) const;
    int n_ = 0;
    std::vector<char> adj_;  // n*n symmetric, zero diagonal
};

// --- parsers / encoders ---------------------------------------------------

// Short-form graph6, no header, n <= 62.
Graph parse_graph6(const std::string& line);
std::string encode_graph6(const Graph& g);

// "n  i j  i j ..." whitespace separated; duplicate edges collapse.
Graph parse_edge_list(const std::string& text);
std::string format_edge_list(const Graph& g);

// --- operations -----------------------------------------------------------

Graph complement(const Graph& g);
Graph join(const Graph& g, const Graph& h);
Graph tensor(const Graph& g, const Graph& h);
Graph corona_empty(const Graph& g, int k);
Graph disjoint_union(const Graph& g, const Graph& h);
Graph add_edges(const Graph& g, const std::vector<std::pair<int, int>>& pairs);
Graph induced(const Graph& g, const std::vector<int>& verts);

// BFS distances from src; nullopt = unreachable.
std::vector<std::optional<int>> bfs_distances(const Graph& g, int src);
// unordered pairs {i<j} at distance exactly r
std::vector<std::pair<int, int>> distance_layer(const Graph& g, int r);

// --- builders (labelings documented in graph.cpp) -------------------------

Graph path(int n);
Graph cycle(int n);
Graph complete(int n);
Graph complete_bipartite(int m, int n);
Graph empty_graph(int n);
// path 0..n-1 (0 the pendant tip), clique n..n+m-1, bridge {n-1,n}
Graph lollipop(int m, int n);
// center 0, legs 1..h1, h1+1..h1+h2, h1+h2+1..h1+h2+h3, each center-outward
Graph spider(int h1, int h2, int h3);
// path order 0,..,m-1,n-1,m,..,n-2 plus chord {m-1,m} (1-based spec labeling shifted down)
Graph path_with_chord(int n, int m);
Graph petersen();

// --- structure queries ----------------------------------------------------

std::vector<std::vector<int>> components(const Graph& g);
std::vector<int> degrees(const Graph& g);
bool is_connected(const Graph& g);
bool is_tree(const Graph& g);
bool is_regular(const Graph& g);
// connected and |E| = |V|: the cycle vertices in traversal order
std::vector<int> unique_cycle(const Graph& g);
bool is_unicyclic(const Graph& g);

// brute-force isomorphism with degree pruning, |G| <= 8; mapping G -> H
std::optional<std::vector<int>> isomorphism_small(const Graph& g, const Graph& h);
bool isomorphic_small(const Graph& g, const Graph& h);

}  // namespace gssp

#endif
