#include "gssp/graph.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <sstream>
#include <stdexcept>

namespace gssp {

Graph::Graph(int n) : n_(n), adj_(static_cast<size_t>(n) * n, 0) {
    if (n < 0) throw std::invalid_argument("negative vertex count");
}

void Graph::check_vertex(int v) const {
    if (v < 0 || v >= n_) throw std::invalid_argument("vertex out of range");
}

bool Graph::has_edge(int i, int j) const {
    check_vertex(i);
    check_vertex(j);
    return adj_[static_cast<size_t>(i) * n_ + j] != 0;
}

void Graph::add_edge(int i, int j) {
    check_vertex(i);
    check_vertex(j);
    if (i == j) throw std::invalid_argument("loop edge");
    adj_[static_cast<size_t>(i) * n_ + j] = 1;
    adj_[static_cast<size_t>(j) * n_ + i] = 1;
}

int Graph::edge_count() const {
    int c = 0;
    for (int i = 0; i < n_; ++i)
        for (int j = i + 1; j < n_; ++j)
            if (adj_[static_cast<size_t>(i) * n_ + j]) ++c;
    return c;
}

int Graph::degree(int v) const {
    check_vertex(v);
    int d = 0;
    for (int j = 0; j < n_; ++j)
        if (adj_[static_cast<size_t>(v) * n_ + j]) ++d;
    return d;
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < n_; ++i)
        for (int j = i + 1; j < n_; ++j)
            if (adj_[static_cast<size_t>(i) * n_ + j]) e.emplace_back(i, j);
    return e;
}

std::vector<int> Graph::neighbors(int v) const {
    check_vertex(v);
    std::vector<int> nb;
    for (int j = 0; j < n_; ++j)
        if (adj_[static_cast<size_t>(v) * n_ + j]) nb.push_back(j);
    return nb;
}

std::vector<int> Graph::closed_neighborhood(int v) const {
    std::vector<int> nb = neighbors(v);
    nb.push_back(v);
    std::sort(nb.begin(), nb.end());
    return nb;
}

bool Graph::is_complete() const {
    return edge_count() == n_ * (n_ - 1) / 2;
}

bool Graph::subgraph_of(const Graph& s) const {
    if (n_ != s.n_) return false;
    for (int i = 0; i < n_; ++i)
        for (int j = i + 1; j < n_; ++j)
            if (has_edge(i, j) && !s.has_edge(i, j)) return false;
    return true;
}

// --- graph6 ---------------------------------------------------------------

Graph parse_graph6(const std::string& line) {
    if (line.empty()) throw std::invalid_argument("graph6: empty line");
    for (char c : line)
        if (c < 63 || c > 126)
            throw std::invalid_argument("graph6: character out of range");
    int n = line[0] - 63;
    if (n > 62) throw std::invalid_argument("graph6: long form not supported");
    int nbits = n * (n - 1) / 2;
    int nbytes = (nbits + 5) / 6;
    if (static_cast<int>(line.size()) != 1 + nbytes)
        throw std::invalid_argument("graph6: malformed length");
    Graph g(n);
    int bit = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i) {
            int byte = bit / 6, off = 5 - bit % 6;
            if ((line[1 + byte] - 63) >> off & 1) g.add_edge(i, j);
            ++bit;
        }
    }
    // padding bits must be zero
    for (; bit < 6 * nbytes; ++bit) {
        int byte = bit / 6, off = 5 - bit % 6;
        if ((line[1 + byte] - 63) >> off & 1)
            throw std::invalid_argument("graph6: nonzero padding");
    }
    return g;
}

std::string encode_graph6(const Graph& g) {
    int n = g.n();
    if (n > 62) throw std::invalid_argument("graph6: n > 62");
    int nbits = n * (n - 1) / 2;
    int nbytes = (nbits + 5) / 6;
    std::string out(1 + nbytes, char(63));
    out[0] = static_cast<char>(63 + n);
    int bit = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i) {
            if (g.has_edge(i, j)) out[1 + bit / 6] += char(1 << (5 - bit % 6));
            ++bit;
        }
    }
    return out;
}

Graph parse_edge_list(const std::string& text) {
    std::istringstream in(text);
    long n;
    if (!(in >> n)) throw std::invalid_argument("edge list: missing vertex count");
    if (n < 0) throw std::invalid_argument("edge list: negative vertex count");
    Graph g(static_cast<int>(n));
    long i, j;
    while (in >> i) {
        if (!(in >> j)) throw std::invalid_argument("edge list: dangling endpoint");
        if (i < 0 || i >= n || j < 0 || j >= n)
            throw std::invalid_argument("edge list: vertex out of range");
        if (i == j) throw std::invalid_argument("edge list: loop edge");
        g.add_edge(static_cast<int>(i), static_cast<int>(j));
    }
    if (!in.eof()) throw std::invalid_argument("edge list: unparsable token");
    return g;
}

std::string format_edge_list(const Graph& g) {
    std::ostringstream out;
    out << g.n();
    for (auto [i, j] : g.edges()) out << "\n" << i << " " << j;
    return out.str();
}

// --- operations -----------------------------------------------------------

Graph complement(const Graph& g) {
    Graph c(g.n());
    for (int i = 0; i < g.n(); ++i)
        for (int j = i + 1; j < g.n(); ++j)
            if (!g.has_edge(i, j)) c.add_edge(i, j);
    return c;
}

Graph join(const Graph& g, const Graph& h) {
    Graph r = disjoint_union(g, h);
    for (int i = 0; i < g.n(); ++i)
        for (int j = 0; j < h.n(); ++j) r.add_edge(i, g.n() + j);
    return r;
}

Graph tensor(const Graph& g, const Graph& h) {
    // vertex (u,u') -> u*|H| + u'
    Graph r(g.n() * h.n());
    for (auto [u, v] : g.edges())
        for (auto [up, vp] : h.edges()) {
            r.add_edge(u * h.n() + up, v * h.n() + vp);
            r.add_edge(u * h.n() + vp, v * h.n() + up);
        }
    return r;
}

Graph corona_empty(const Graph& g, int k) {
    if (k < 0) throw std::invalid_argument("corona: negative pendant count");
    // pendant t of vertex v sits at (t+1)*g.n() + v, block layout
    Graph r(g.n() + g.n() * k);
    for (auto [i, j] : g.edges()) r.add_edge(i, j);
    for (int v = 0; v < g.n(); ++v)
        for (int t = 0; t < k; ++t) r.add_edge(v, (t + 1) * g.n() + v);
    return r;
}

Graph disjoint_union(const Graph& g, const Graph& h) {
    Graph r(g.n() + h.n());
    for (auto [i, j] : g.edges()) r.add_edge(i, j);
    for (auto [i, j] : h.edges()) r.add_edge(g.n() + i, g.n() + j);
    return r;
}

Graph add_edges(const Graph& g, const std::vector<std::pair<int, int>>& pairs) {
    Graph r = g;
    for (auto [i, j] : pairs) r.add_edge(i, j);
    return r;
}

Graph induced(const Graph& g, const std::vector<int>& verts) {
    Graph r(static_cast<int>(verts.size()));
    for (size_t a = 0; a < verts.size(); ++a)
        for (size_t b = a + 1; b < verts.size(); ++b)
            if (g.has_edge(verts[a], verts[b]))
                r.add_edge(static_cast<int>(a), static_cast<int>(b));
    return r;
}

std::vector<std::optional<int>> bfs_distances(const Graph& g, int src) {
    std::vector<std::optional<int>> dist(g.n());
    std::queue<int> q;
    dist[src] = 0;
    q.push(src);
    while (!q.empty()) {
        int v = q.front();
        q.pop();
        for (int w : g.neighbors(v))
            if (!dist[w]) {
                dist[w] = *dist[v] + 1;
                q.push(w);
            }
    }
    return dist;
}

std::vector<std::pair<int, int>> distance_layer(const Graph& g, int r) {
    if (r < 1) throw std::invalid_argument("distance_layer: r < 1");
    std::vector<std::pair<int, int>> out;
    for (int i = 0; i < g.n(); ++i) {
        auto dist = bfs_distances(g, i);
        for (int j = i + 1; j < g.n(); ++j)
            if (dist[j] && *dist[j] == r) out.emplace_back(i, j);
    }
    return out;
}

// --- builders -------------------------------------------------------------

Graph path(int n) {
    if (n < 1) throw std::invalid_argument("path: n < 1");
    Graph g(n);
    for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
    return g;
}

Graph cycle(int n) {
    if (n < 3) throw std::invalid_argument("cycle: n < 3");
    Graph g = path(n);
    g.add_edge(0, n - 1);
    return g;
}

Graph complete(int n) {
    if (n < 1) throw std::invalid_argument("complete: n < 1");
    Graph g(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) g.add_edge(i, j);
    return g;
}

Graph complete_bipartite(int m, int n) {
    if (m < 1 || n < 1) throw std::invalid_argument("complete_bipartite: part < 1");
    Graph g(m + n);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < n; ++j) g.add_edge(i, m + j);
    return g;
}

Graph empty_graph(int n) { return Graph(n); }

Graph lollipop(int m, int n) {
    if (m < 3) throw std::invalid_argument("lollipop: clique size < 3");
    if (n < 1) throw std::invalid_argument("lollipop: path length < 1");
    Graph g(m + n);
    for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
    for (int i = n; i < n + m; ++i)
        for (int j = i + 1; j < n + m; ++j) g.add_edge(i, j);
    g.add_edge(n - 1, n);
    return g;
}

Graph spider(int h1, int h2, int h3) {
    if (h1 < 1 || h2 < 1 || h3 < 1) throw std::invalid_argument("spider: leg < 1");
    Graph g(1 + h1 + h2 + h3);
    int v = 1;
    for (int h : {h1, h2, h3}) {
        g.add_edge(0, v);
        for (int t = 1; t < h; ++t) g.add_edge(v + t - 1, v + t);
        v += h;
    }
    return g;
}

Graph path_with_chord(int n, int m) {
    if (n < 3 || m < 1 || m > n - 2)
        throw std::invalid_argument("path_with_chord: need 1 <= m <= n-2, n >= 3");
    Graph g(n);
    // path order 0,..,m-1, n-1, m,..,n-2; chord {m-1, m}
    std::vector<int> order;
    for (int i = 0; i < m; ++i) order.push_back(i);
    order.push_back(n - 1);
    for (int i = m; i < n - 1; ++i) order.push_back(i);
    for (size_t i = 0; i + 1 < order.size(); ++i) g.add_edge(order[i], order[i + 1]);
    g.add_edge(m - 1, m);
    return g;
}

Graph petersen() {
    Graph g(10);
    for (int i = 0; i < 5; ++i) {
        g.add_edge(i, (i + 1) % 5);
        g.add_edge(i, 5 + i);
        g.add_edge(5 + i, 5 + (i + 2) % 5);
    }
    return g;
}

// --- structure queries ----------------------------------------------------

std::vector<std::vector<int>> components(const Graph& g) {
    std::vector<std::vector<int>> comps;
    std::vector<char> seen(g.n(), 0);
    for (int s = 0; s < g.n(); ++s) {
        if (seen[s]) continue;
        std::vector<int> comp;
        std::queue<int> q;
        q.push(s);
        seen[s] = 1;
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            comp.push_back(v);
            for (int w : g.neighbors(v))
                if (!seen[w]) {
                    seen[w] = 1;
                    q.push(w);
                }
        }
        std::sort(comp.begin(), comp.end());
        comps.push_back(std::move(comp));
    }
    return comps;
}

std::vector<int> degrees(const Graph& g) {
    std::vector<int> d(g.n());
    for (int v = 0; v < g.n(); ++v) d[v] = g.degree(v);
    return d;
}

bool is_connected(const Graph& g) { return g.n() == 0 || components(g).size() == 1; }

bool is_tree(const Graph& g) {
    return is_connected(g) && g.edge_count() == g.n() - 1;
}

bool is_regular(const Graph& g) {
    if (g.n() == 0) return true;
    auto d = degrees(g);
    return std::all_of(d.begin(), d.end(), [&](int x) { return x == d[0]; });
}

bool is_unicyclic(const Graph& g) {
    return is_connected(g) && g.edge_count() == g.n();
}

std::vector<int> unique_cycle(const Graph& g) {
    if (!is_unicyclic(g)) throw std::invalid_argument("unique_cycle: graph not unicyclic");
    // peel leaves; what remains is the cycle
    std::vector<int> deg = degrees(g);
    std::vector<char> removed(g.n(), 0);
    bool changed = true;
    while (changed) {
        changed = false;
        for (int v = 0; v < g.n(); ++v)
            if (!removed[v] && deg[v] == 1) {
                removed[v] = 1;
                for (int w : g.neighbors(v))
                    if (!removed[w]) --deg[w];
                changed = true;
            }
    }
    int start = -1;
    for (int v = 0; v < g.n(); ++v)
        if (!removed[v]) {
            start = v;
            break;
        }
    std::vector<int> cyc{start};
    int prev = -1, cur = start;
    while (true) {
        int next = -1;
        for (int w : g.neighbors(cur))
            if (!removed[w] && w != prev) {
                next = w;
                break;
            }
        if (next == start) break;
        cyc.push_back(next);
        prev = cur;
        cur = next;
    }
    return cyc;
}

std::optional<std::vector<int>> isomorphism_small(const Graph& g, const Graph& h) {
    if (g.n() > 8 || h.n() > 8)
        throw std::invalid_argument("isomorphism_small: capped at 8 vertices");
    if (g.n() != h.n() || g.edge_count() != h.edge_count()) return std::nullopt;
    auto dg = degrees(g), dh = degrees(h);
    {
        auto sg = dg, sh = dh;
        std::sort(sg.begin(), sg.end());
        std::sort(sh.begin(), sh.end());
        if (sg != sh) return std::nullopt;
    }
    int n = g.n();
    std::vector<int> map(n, -1);
    std::vector<char> used(n, 0);
    // backtracking over images of vertex v
    auto rec = [&](auto&& self, int v) -> bool {
        if (v == n) return true;
        for (int w = 0; w < n; ++w) {
            if (used[w] || dg[v] != dh[w]) continue;
            bool ok = true;
            for (int u = 0; u < v && ok; ++u)
                if (g.has_edge(u, v) != h.has_edge(map[u], w)) ok = false;
            if (!ok) continue;
            map[v] = w;
            used[w] = 1;
            if (self(self, v + 1)) return true;
            used[w] = 0;
            map[v] = -1;
        }
        return false;
    };
    if (rec(rec, 0)) return map;
    return std::nullopt;
}

bool isomorphic_small(const Graph& g, const Graph& h) {
    return isomorphism_small(g, h).has_value();
}

}  // namespace gssp
