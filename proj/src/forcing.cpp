#include "gssp/forcing.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace gssp {

namespace {

void require_subgraph(const Graph& g, const Graph& gl) {
    if (!g.subgraph_of(gl))
        throw std::invalid_argument("forcing: G_l is not a supergraph of G");
}

// N_G[i] \ N_Gl[j]
std::vector<int> focus_set(const Graph& g, const Graph& gl, int i, int j) {
    std::vector<int> out;
    for (int k : g.closed_neighborhood(i))
        if (k != j && !gl.has_edge(j, k)) out.push_back(k);
    return out;
}

bool subset_of(const std::vector<int>& s, const std::vector<char>& in_u) {
    return std::all_of(s.begin(), s.end(), [&](int v) { return in_u[v]; });
}

// {i,j} focused on U with respect to (G, G_l)
bool focused_on(const Graph& g, const Graph& gl, int i, int j, const std::vector<char>& in_u) {
    return subset_of(focus_set(g, gl, i, j), in_u) && subset_of(focus_set(g, gl, j, i), in_u);
}

std::vector<std::pair<int, int>> cycle_edges(const std::vector<int>& cyc) {
    std::vector<std::pair<int, int>> e;
    for (size_t t = 0; t < cyc.size(); ++t) {
        int a = cyc[t], b = cyc[(t + 1) % cyc.size()];
        e.emplace_back(std::min(a, b), std::max(a, b));
    }
    return e;
}

std::set<std::pair<int, int>> pair_set(const std::vector<std::pair<int, int>>& v) {
    std::set<std::pair<int, int>> s;
    for (auto [a, b] : v) s.emplace(std::min(a, b), std::max(a, b));
    return s;
}

// --- spider geometry ------------------------------------------------------

std::vector<int> spider_vertices(int center, const std::array<std::vector<int>, 3>& legs) {
    std::vector<int> v{center};
    for (const auto& leg : legs) v.insert(v.end(), leg.begin(), leg.end());
    return v;
}

// pairs of the spider at spider-distance exactly d (legs all of length h)
std::vector<std::pair<int, int>> spider_distance_pairs(int center,
                                                       const std::array<std::vector<int>, 3>& legs,
                                                       int d) {
    std::vector<std::pair<int, int>> out;
    const int h = static_cast<int>(legs[0].size());
    auto emit = [&](int a, int b) { out.emplace_back(std::min(a, b), std::max(a, b)); };
    for (int q = 0; q < 3; ++q) {
        if (d - 1 < h) emit(center, legs[q][d - 1]);
        for (int s = 0; s + d < h; ++s) emit(legs[q][s], legs[q][s + d]);
    }
    for (int q = 0; q < 3; ++q)
        for (int r = q + 1; r < 3; ++r)
            for (int s = 0; s < h; ++s) {
                int t = d - 2 - s;
                if (t >= 0 && t < h) emit(legs[q][s], legs[r][t]);
            }
    std::sort(out.begin(), out.end());
    return out;
}

// the induced subgraph of G on {center} + legs is exactly the spider
bool spider_induced_in(const Graph& g, int center, const std::array<std::vector<int>, 3>& legs) {
    std::vector<int> verts = spider_vertices(center, legs);
    std::set<int> uniq(verts.begin(), verts.end());
    if (uniq.size() != verts.size()) return false;
    std::set<std::pair<int, int>> own;
    for (const auto& leg : legs) {
        if (leg.empty()) return false;
        own.emplace(std::min(center, leg[0]), std::max(center, leg[0]));
        for (size_t t = 0; t + 1 < leg.size(); ++t)
            own.emplace(std::min(leg[t], leg[t + 1]), std::max(leg[t], leg[t + 1]));
    }
    for (size_t a = 0; a < verts.size(); ++a)
        for (size_t b = a + 1; b < verts.size(); ++b) {
            int u = std::min(verts[a], verts[b]), v = std::max(verts[a], verts[b]);
            if (g.has_edge(u, v) != (own.count({u, v}) > 0)) return false;
        }
    return true;
}

// conditions of the spider rule against (G, G_l)
bool spider_conditions_hold(const Graph& g, const Graph& gl, int center,
                            const std::array<std::vector<int>, 3>& legs, int h) {
    auto at_h = spider_distance_pairs(center, legs, h);
    auto at_h1 = spider_distance_pairs(center, legs, h + 1);
    for (auto [u, v] : at_h)
        if (!gl.has_edge(u, v)) return false;
    for (auto [u, v] : at_h1)
        if (gl.has_edge(u, v)) return false;
    std::vector<char> in_y(g.n(), 0);
    for (int v : spider_vertices(center, legs)) in_y[v] = 1;
    for (auto [u, v] : at_h)
        if (!focused_on(g, gl, u, v, in_y)) return false;
    return true;
}

}  // namespace

std::vector<std::pair<int, int>> step_added_pairs(const ForcingStep& s) {
    if (const auto* e = std::get_if<EdgeForce>(&s)) return {e->added};
    if (const auto* o = std::get_if<OddCycleForce>(&s)) return o->added;
    return std::get<SpiderForce>(s).added;
}

std::optional<ForcingStep> find_rule1(const Graph& g, const Graph& gl) {
    require_subgraph(g, gl);
    const int n = g.n();
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (i == j) continue;
            auto s1 = focus_set(g, gl, i, j);
            auto s2 = focus_set(g, gl, j, i);
            if (s1.size() == 1 && s2.empty()) {
                int k = s1[0];
                if (k != i && k != j)
                    return EdgeForce{{i, j}, k, {std::min(j, k), std::max(j, k)}};
            } else if (s2.size() == 1 && s1.empty()) {
                int k = s2[0];
                if (k != i && k != j)
                    return EdgeForce{{i, j}, k, {std::min(i, k), std::max(i, k)}};
            }
        }
    return std::nullopt;
}

std::optional<ForcingStep> find_rule2(const Graph& g, const Graph& gl) {
    require_subgraph(g, gl);
    for (int i = 0; i < g.n(); ++i) {
        std::vector<int> nb = g.neighbors(i);
        if (nb.size() < 3) continue;
        Graph h = induced(complement(gl), nb);  // local labels index nb
        for (const auto& comp : components(h)) {
            if (comp.size() < 3 || comp.size() % 2 == 0) continue;
            bool two_regular = true;
            for (int v : comp)
                if (h.degree(v) != 2) {
                    two_regular = false;
                    break;
                }
            if (!two_regular) continue;
            // walk the cycle in local labels
            std::vector<int> cyc{comp[0]};
            int prev = -1, cur = comp[0];
            while (true) {
                int next = -1;
                for (int w : h.neighbors(cur))
                    if (w != prev) {
                        next = w;
                        break;
                    }
                if (next == comp[0]) break;
                cyc.push_back(next);
                prev = cur;
                cur = next;
            }
            if (cyc.size() != comp.size()) continue;  // component not a single cycle
            std::vector<int> cycle;
            for (int v : cyc) cycle.push_back(nb[v]);
            std::vector<char> in_c(g.n(), 0);
            for (int v : cycle) in_c[v] = 1;
            bool all_focused = true;
            for (int j : cycle)
                if (!focused_on(g, gl, i, j, in_c)) {
                    all_focused = false;
                    break;
                }
            if (!all_focused) continue;
            return OddCycleForce{i, cycle, cycle_edges(cycle)};
        }
    }
    return std::nullopt;
}

std::optional<ForcingStep> find_rule3(const Graph& g, const Graph& gl) {
    require_subgraph(g, gl);
    const int n = g.n();
    // Legs of length 1 are covered by the odd-cycle rule (the triangle on the
    // three tips), so the search starts at h = 2.
    for (int center = 0; center < n; ++center) {
        std::vector<int> nb = g.neighbors(center);
        if (nb.size() < 3) continue;
        for (int h = 2; h <= n; ++h) {
            if (1 + 3 * h > n) break;
            for (size_t a = 0; a < nb.size(); ++a)
                for (size_t b = a + 1; b < nb.size(); ++b)
                    for (size_t c = b + 1; c < nb.size(); ++c) {
                        std::array<std::vector<int>, 3> legs{
                            std::vector<int>{nb[a]}, std::vector<int>{nb[b]}, std::vector<int>{nb[c]}};
                        std::vector<char> used(n, 0);
                        used[center] = 1;
                        used[nb[a]] = used[nb[b]] = used[nb[c]] = 1;
                        // tips may not touch the rest of the spider
                        if (g.has_edge(nb[a], nb[b]) || g.has_edge(nb[a], nb[c]) ||
                            g.has_edge(nb[b], nb[c]))
                            continue;
                        // grow legs one at a time to length h, first full
                        // assignment wins (one spider per triple per scan)
                        auto grow = [&](auto&& self, int leg, int pos) -> bool {
                            if (pos == h) return leg == 2 ? true : self(self, leg + 1, 1);
                            int tail = legs[leg][pos - 1];
                            for (int w : g.neighbors(tail)) {
                                if (used[w]) continue;
                                bool induced_ok = !g.has_edge(w, center);
                                for (int q = 0; q <= leg && induced_ok; ++q)
                                    for (size_t t = 0; t < legs[q].size() && induced_ok; ++t)
                                        if (legs[q][t] != tail && g.has_edge(w, legs[q][t]))
                                            induced_ok = false;
                                if (!induced_ok) continue;
                                legs[leg].push_back(w);
                                used[w] = 1;
                                if (self(self, leg, pos + 1)) return true;
                                used[w] = 0;
                                legs[leg].pop_back();
                            }
                            return false;
                        };
                        if (!grow(grow, 0, 1)) continue;
                        if (spider_conditions_hold(g, gl, center, legs, h))
                            return SpiderForce{center, legs, h,
                                               spider_distance_pairs(center, legs, h + 1)};
                    }
        }
    }
    return std::nullopt;
}

ForcingCertificate close(const Graph& g) {
    ForcingCertificate cert{g, {}, g};
    Graph gl = g;
    while (!gl.is_complete()) {
        std::optional<ForcingStep> step = find_rule1(g, gl);
        if (!step) step = find_rule2(g, gl);
        if (!step) step = find_rule3(g, gl);
        if (!step) break;
        for (auto [u, v] : step_added_pairs(*step)) gl.add_edge(u, v);
        cert.steps.push_back(std::move(*step));
    }
    cert.final = gl;
    return cert;
}

bool replay(const ForcingCertificate& cert) {
    try {
        const Graph& g = cert.base;
        Graph gl = g;
        for (const ForcingStep& step : cert.steps) {
            if (const auto* e = std::get_if<EdgeForce>(&step)) {
                auto [i, j] = e->via;
                int k = e->pivot;
                if (i < 0 || j < 0 || k < 0 || i >= g.n() || j >= g.n() || k >= g.n()) return false;
                if (i == j || k == i || k == j) return false;
                auto s1 = focus_set(g, gl, i, j);
                auto s2 = focus_set(g, gl, j, i);
                std::pair<int, int> expect;
                if (s1 == std::vector<int>{k} && s2.empty())
                    expect = {std::min(j, k), std::max(j, k)};
                else if (s2 == std::vector<int>{k} && s1.empty())
                    expect = {std::min(i, k), std::max(i, k)};
                else
                    return false;
                if (pair_set({e->added}) != pair_set({expect})) return false;
                if (gl.has_edge(e->added.first, e->added.second)) return false;
                gl.add_edge(e->added.first, e->added.second);
            } else if (const auto* o = std::get_if<OddCycleForce>(&step)) {
                int i = o->vertex;
                if (i < 0 || i >= g.n()) return false;
                const auto& cyc = o->cycle;
                if (cyc.size() < 3 || cyc.size() % 2 == 0) return false;
                std::set<int> uniq(cyc.begin(), cyc.end());
                if (uniq.size() != cyc.size()) return false;
                for (int j : cyc)
                    if (j < 0 || j >= g.n() || !g.has_edge(i, j)) return false;
                // the cycle must be a full component of complement(gl) on
                // N_G(i): consecutive pairs are its only complement edges
                for (size_t s = 0; s < cyc.size(); ++s)
                    for (size_t t = s + 1; t < cyc.size(); ++t) {
                        bool consec = (t == s + 1) || (s == 0 && t == cyc.size() - 1);
                        if (gl.has_edge(cyc[s], cyc[t]) == consec) return false;
                    }
                for (int w : g.neighbors(i)) {
                    if (uniq.count(w)) continue;
                    for (int j : cyc)
                        if (!gl.has_edge(w, j)) return false;  // complement edge leaves the cycle
                }
                std::vector<char> in_c(g.n(), 0);
                for (int v : cyc) in_c[v] = 1;
                for (int j : cyc)
                    if (!focused_on(g, gl, i, j, in_c)) return false;
                if (pair_set(o->added) != pair_set(cycle_edges(cyc))) return false;
                for (auto [u, v] : o->added) gl.add_edge(u, v);
            } else {
                const auto& sp = std::get<SpiderForce>(step);
                if (sp.h < 1) return false;
                for (const auto& leg : sp.legs)
                    if (static_cast<int>(leg.size()) != sp.h) return false;
                for (int v : spider_vertices(sp.center, sp.legs))
                    if (v < 0 || v >= g.n()) return false;
                if (!spider_induced_in(g, sp.center, sp.legs)) return false;
                if (!spider_conditions_hold(g, gl, sp.center, sp.legs, sp.h)) return false;
                if (pair_set(sp.added) !=
                    pair_set(spider_distance_pairs(sp.center, sp.legs, sp.h + 1)))
                    return false;
                for (auto [u, v] : sp.added) gl.add_edge(u, v);
            }
        }
        return gl == cert.final;
    } catch (const std::exception&) {
        return false;
    }
}

}  // namespace gssp
