#include "gssp/refute.hpp"

#include <algorithm>
#include <array>
#include <random>
#include <stdexcept>

#include "gssp/linalg.hpp"
#include "gssp/strong.hpp"

namespace gssp {

namespace {

// uniform integer in [lo, hi] by explicit modular draw, stable across
// standard library implementations
long draw(std::mt19937_64& rng, long lo, long hi) {
    return lo + static_cast<long>(rng() % static_cast<unsigned long>(hi - lo + 1));
}

long draw_nonzero(std::mt19937_64& rng, long bound) {
    long v = draw(rng, 1, 2 * bound);
    return v > bound ? bound - v : v;
}

Witness make_verified(Graph g, RatMatrix a, RatMatrix x, std::string tag) {
    Witness w{std::move(g), std::move(a), std::move(x), std::move(tag)};
    if (!verify_witness(w))
        throw std::logic_error("refute: construction '" + w.provenance + "' failed verification");
    return w;
}

}  // namespace

bool verify_witness(const Witness& w) {
    const int n = w.graph.n();
    if (w.A.rows() != n || w.A.cols() != n || w.X.rows() != n || w.X.cols() != n) return false;
    if (!in_S(w.A, w.graph)) return false;
    if (!w.X.is_symmetric() || w.X.is_zero()) return false;
    if (!hadamard(w.A, w.X).is_zero()) return false;
    if (!hadamard(RatMatrix::identity(n), w.X).is_zero()) return false;
    return commutator(w.A, w.X).is_zero();
}

bool barbell_valid(const Graph& g, const BarbellPartition& p) {
    const int n = g.n();
    std::vector<int> part(n, -1);  // 0 = R, 1 = W1, 2 = W2
    auto mark = [&](const std::vector<int>& vs, int tag) {
        for (int v : vs) {
            if (v < 0 || v >= n || part[v] != -1) return false;
            part[v] = tag;
        }
        return true;
    };
    if (!mark(p.R, 0) || !mark(p.W1, 1) || !mark(p.W2, 2)) return false;
    if (p.W1.empty() || p.W2.empty()) return false;
    if (std::count(part.begin(), part.end(), -1) != 0) return false;
    for (int u : p.W1)
        for (int v : p.W2)
            if (g.has_edge(u, v)) return false;
    for (int v : p.R) {
        int k1 = 0, k2 = 0;
        for (int w : g.neighbors(v)) {
            if (part[w] == 1) ++k1;
            if (part[w] == 2) ++k2;
        }
        if (k1 == 1 || k2 == 1) return false;
    }
    return true;
}

std::optional<BarbellPartition> barbell_search(const Graph& g, int cap) {
    const int n = g.n();
    if (n > cap) throw std::invalid_argument("barbell_search: graph exceeds size cap");
    if (n < 2) return std::nullopt;
    for (int rsize = 0; rsize <= n - 2; ++rsize) {
        // subsets of size rsize in lexicographic order
        std::vector<int> r(rsize);
        for (int i = 0; i < rsize; ++i) r[i] = i;
        while (true) {
            std::vector<char> in_r(n, 0);
            for (int v : r) in_r[v] = 1;
            std::vector<int> rest;
            for (int v = 0; v < n; ++v)
                if (!in_r[v]) rest.push_back(v);
            Graph sub = induced(g, rest);
            auto comps = components(sub);
            const int nc = static_cast<int>(comps.size());
            if (nc >= 2) {  // both classes must be nonempty
                for (unsigned mask = 0; mask < (1u << nc); ++mask) {
                    BarbellPartition p;
                    p.R = r;
                    for (int c = 0; c < nc; ++c)
                        for (int v : comps[c])
                            (mask >> c & 1 ? p.W2 : p.W1).push_back(rest[v]);
                    if (p.W1.empty() || p.W2.empty()) continue;
                    if (barbell_valid(g, p)) return p;
                }
            }
            // next subset
            int i = rsize - 1;
            while (i >= 0 && r[i] == n - rsize + i) --i;
            if (i < 0) break;
            ++r[i];
            for (int j = i + 1; j < rsize; ++j) r[j] = r[j - 1] + 1;
        }
    }
    return std::nullopt;
}

Witness barbell_witness(const Graph& g, const BarbellPartition& p) {
    if (!barbell_valid(g, p)) throw std::invalid_argument("barbell_witness: invalid partition");
    const int n = g.n();
    std::vector<int> part(n, 0), w1pos(n, -1);
    for (int v : p.W1) part[v] = 1;
    for (int v : p.W2) part[v] = 2;

    RatMatrix m = RatMatrix::zero(n, n);
    // R block: adjacency of G[R]
    for (int u : p.R)
        for (int v : p.R)
            if (g.has_edge(u, v)) m.at(u, v) = 1;
    // W blocks: Laplacians of G[W_i]
    for (int side = 1; side <= 2; ++side) {
        const auto& w = side == 1 ? p.W1 : p.W2;
        for (int u : w)
            for (int v : w)
                if (g.has_edge(u, v)) {
                    m.at(u, v) = -1;
                    m.at(u, u) += 1;
                }
    }
    // R x W blocks: 1,...,1,-(k-1) down each vertex's neighbor list, the
    // negative entry on the largest-index neighbor, so the sums vanish
    for (int v : p.R)
        for (int side = 1; side <= 2; ++side) {
            std::vector<int> nb;
            for (int w : g.neighbors(v))
                if (part[w] == side) nb.push_back(w);
            if (nb.empty()) continue;
            const int k = static_cast<int>(nb.size());
            for (int t = 0; t < k; ++t) {
                Rat val = (t == k - 1) ? Rat(-(k - 1)) : Rat(1);
                m.at(v, nb[t]) = val;
                m.at(nb[t], v) = val;
            }
        }
    RatMatrix x = RatMatrix::zero(n, n);
    for (int u : p.W1)
        for (int v : p.W2) {
            x.at(u, v) = 1;
            x.at(v, u) = 1;
        }
    if (!(m * x).is_zero()) throw std::logic_error("barbell_witness: M*X != 0");
    return make_verified(g, std::move(m), std::move(x), "barbell");
}

std::optional<Witness> regular_witness(const Graph& g) {
    if (!is_regular(g) || g.is_complete() || g.n() == 0) return std::nullopt;
    const int n = g.n();
    RatMatrix a = adjacency_matrix(g);
    RatMatrix x = RatMatrix::ones(n, n) - a - RatMatrix::identity(n);
    return make_verified(g, std::move(a), std::move(x), "regular");
}

Witness kron_lift(const std::vector<RatMatrix>& s_list, const RatMatrix& t,
                  const Witness& base) {
    if (!verify_witness(base)) throw std::invalid_argument("kron_lift: base witness invalid");
    if (t.rows() != t.cols() || t.rows() == 0)
        throw std::invalid_argument("kron_lift: T must be square and nonempty");
    const int m = t.rows();
    for (size_t j = 0; j < s_list.size(); ++j) {
        const RatMatrix& s = s_list[j];
        if (s.rows() != m || s.cols() != m)
            throw std::invalid_argument("kron_lift: S_j shape mismatch");
        if (!commutator(s, t).is_zero())
            throw std::invalid_argument("kron_lift: [S_j, T] != 0");
        if (j >= 2 && !hadamard(s, t).is_zero())
            throw std::invalid_argument("kron_lift: S_j o T != 0 for j >= 2");
    }
    const int n = base.graph.n();
    RatMatrix a_hat = RatMatrix::zero(m * n, m * n);
    RatMatrix apow = RatMatrix::identity(n);
    for (size_t j = 0; j < s_list.size(); ++j) {
        if (j > 0) apow = apow * base.A;
        a_hat = a_hat + kron(s_list[j], apow);
    }
    if (a_hat.is_zero()) throw std::invalid_argument("kron_lift: A_hat is zero");
    RatMatrix x_hat = kron(t, base.X);
    Graph target = support_graph(a_hat);
    return make_verified(std::move(target), std::move(a_hat), std::move(x_hat), "kron_lift");
}

Witness tensor_lift(const Witness& base, const Graph& h) {
    const int m = h.n();
    std::vector<RatMatrix> s{RatMatrix::zero(m, m), adjacency_matrix(h)};
    Witness w = kron_lift(s, RatMatrix::identity(m), base);
    w.provenance = "tensor_lift";
    return w;
}

Witness corona_lift(const Witness& base, int m) {
    if (m < 2) throw std::invalid_argument("corona_lift: need m >= 2");
    RatMatrix s0 = RatMatrix::zero(m, m);
    for (int j = 1; j < m; ++j) {
        s0.at(0, j) = 1;
        s0.at(j, 0) = 1;
    }
    Witness w = kron_lift({s0, RatMatrix::unit(m, 0, 0)}, RatMatrix::identity(m), base);
    w.provenance = "corona_lift";
    return w;
}

Witness complement_path_witness(int m, std::uint64_t seed) {
    if (m < 2) throw std::invalid_argument("complement_path_witness: need m >= 2");
    // primitive Pythagorean (sin, cos) pairs, pairwise distinct |sin|
    static const std::vector<std::pair<Rat, Rat>> angles = {
        {Rat(3, 5), Rat(4, 5)},    {Rat(5, 13), Rat(12, 13)}, {Rat(8, 17), Rat(15, 17)},
        {Rat(7, 25), Rat(24, 25)}, {Rat(20, 29), Rat(21, 29)}, {Rat(9, 41), Rat(40, 41)},
        {Rat(12, 37), Rat(35, 37)}, {Rat(11, 61), Rat(60, 61)}};
    if (m > static_cast<int>(angles.size()))
        throw std::invalid_argument("complement_path_witness: m exceeds the fixed angle list");

    const int n = 3 * m;
    const Graph target = complement(path(n));
    std::vector<std::uint64_t> tried;
    for (int attempt = 0; attempt < 32; ++attempt) {
        std::uint64_t s = seed + static_cast<std::uint64_t>(attempt);
        tried.push_back(s);
        std::mt19937_64 rng(s);

        // symmetric integer coefficient matrices with b_kk = c_kk; the
        // coefficients a_{k,k+1} are solved for below, everything else is
        // a free nonzero draw
        RatMatrix ca(m, m), cb(m, m), cc(m, m);
        for (int k = 0; k < m; ++k)
            for (int l = k; l < m; ++l) {
                Rat av = draw_nonzero(rng, 10);
                Rat bv = draw_nonzero(rng, 10);
                Rat cv = (l == k) ? bv : Rat(draw_nonzero(rng, 10));
                ca.at(k, l) = av; ca.at(l, k) = av;
                cb.at(k, l) = bv; cb.at(l, k) = bv;
                cc.at(k, l) = cv; cc.at(l, k) = cv;
            }
        // kill the single constrained entry of each consecutive block:
        // a_{k,k+1} * (-sin_k cos_{k+1}) + (b+c)/2 * cos_k sin_{k+1} = 0
        for (int k = 0; k + 1 < m; ++k) {
            const auto& [sk, ck] = angles[k];
            const auto& [sk1, ck1] = angles[k + 1];
            Rat val = (cb.at(k, k + 1) + cc.at(k, k + 1)) / 2 * ck * sk1 / (sk * ck1);
            ca.at(k, k + 1) = val;
            ca.at(k + 1, k) = val;
        }

        RatMatrix mm = RatMatrix::zero(n, n), x = RatMatrix::zero(n, n);
        for (int k = 0; k < m; ++k) {
            const auto& [sn, cs] = angles[k];
            x.at(3 * k + 0, 3 * k + 1) = sn;
            x.at(3 * k + 1, 3 * k + 0) = sn;
            x.at(3 * k + 1, 3 * k + 2) = cs;
            x.at(3 * k + 2, 3 * k + 1) = cs;
        }
        auto xv = [&](int k) {
            const auto& [sn, cs] = angles[k];
            return std::array<Rat, 3>{cs, Rat(0), -sn};
        };
        auto yv = [&](int k) {
            const auto& [sn, cs] = angles[k];
            return std::array<Rat, 3>{sn, Rat(1), cs};
        };
        auto zv = [&](int k) {
            const auto& [sn, cs] = angles[k];
            return std::array<Rat, 3>{sn, Rat(-1), cs};
        };
        for (int k = 0; k < m; ++k)
            for (int l = 0; l < m; ++l) {
                auto xk = xv(k), xl = xv(l), yk = yv(k), yl = yv(l), zk = zv(k), zl = zv(l);
                for (int p = 0; p < 3; ++p)
                    for (int q = 0; q < 3; ++q)
                        mm.at(3 * k + p, 3 * l + q) = ca.at(k, l) * xk[p] * xl[q] +
                                                      cb.at(k, l) / 2 * yk[p] * yl[q] +
                                                      cc.at(k, l) / 2 * zk[p] * zl[q];
            }
        if (!in_S(mm, target)) continue;  // an accidental zero, resample
        return make_verified(target, std::move(mm), std::move(x), "complement_path");
    }
    std::string msg = "complement_path_witness: retry budget exhausted, seeds tried:";
    for (auto s : tried) msg += " " + std::to_string(s);
    throw std::runtime_error(msg);
}

Witness kn_minus_c4_witness(int n, std::uint64_t seed) {
    (void)seed;
    if (n < 4) throw std::invalid_argument("kn_minus_c4_witness: need n >= 4");
    RatMatrix m = RatMatrix::zero(n, n), x = RatMatrix::zero(n, n);
    // top-left 4x4 block and its commuting partner
    static const int a4[4][4] = {{1, 0, 1, 0}, {0, 1, 0, 1}, {1, 0, 1, 0}, {0, 1, 0, 1}};
    static const int x4[4][4] = {{0, 1, 0, 1}, {1, 0, 1, 0}, {0, 1, 0, 1}, {1, 0, 1, 0}};
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            m.at(i, j) = a4[i][j];
            x.at(i, j) = x4[i][j];
        }
    // F = [J; -J] against the remaining clique, which carries all-ones
    for (int i = 0; i < 4; ++i)
        for (int j = 4; j < n; ++j) {
            m.at(i, j) = i < 2 ? 1 : -1;
            m.at(j, i) = m.at(i, j);
        }
    for (int i = 4; i < n; ++i)
        for (int j = 4; j < n; ++j) m.at(i, j) = 1;
    Graph target = complete(n);
    // the removed C_4 in these coordinates: 0-1-2-3-0
    Graph g(n);
    for (auto [u, v] : target.edges())
        if (!((u == 0 && v == 1) || (u == 1 && v == 2) || (u == 2 && v == 3) ||
              (u == 0 && v == 3)))
            g.add_edge(u, v);
    return make_verified(std::move(g), std::move(m), std::move(x), "kn_minus_c4");
}

Witness cocktail_witness(int n, std::uint64_t seed) {
    if (n < 2) throw std::invalid_argument("cocktail_witness: need n >= 2");
    std::mt19937_64 rng(seed);
    const int nn = 2 * n;
    Graph g(nn);
    for (int u = 0; u < nn; ++u)
        for (int v = u + 1; v < nn; ++v)
            if (!(u / 2 == v / 2)) g.add_edge(u, v);
    // blocks a_ij I + b_ij swap stay inside the commutative algebra
    // generated by the swap matrix, so [A, (+) swap] = 0 for free
    RatMatrix a = RatMatrix::zero(nn, nn), x = RatMatrix::zero(nn, nn);
    for (int i = 0; i < n; ++i) {
        Rat d = draw_nonzero(rng, 10);
        a.at(2 * i, 2 * i) = d;
        a.at(2 * i + 1, 2 * i + 1) = d;
        x.at(2 * i, 2 * i + 1) = 1;
        x.at(2 * i + 1, 2 * i) = 1;
    }
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            Rat av = draw_nonzero(rng, 10), bv = draw_nonzero(rng, 10);
            a.at(2 * i, 2 * j) = av;     a.at(2 * j, 2 * i) = av;
            a.at(2 * i + 1, 2 * j + 1) = av; a.at(2 * j + 1, 2 * i + 1) = av;
            a.at(2 * i, 2 * j + 1) = bv; a.at(2 * j + 1, 2 * i) = bv;
            a.at(2 * i + 1, 2 * j) = bv; a.at(2 * j, 2 * i + 1) = bv;
        }
    return make_verified(std::move(g), std::move(a), std::move(x), "cocktail");
}

std::optional<Witness> sample_refute(const Graph& g, int trials, std::uint64_t seed) {
    if (trials < 1) throw std::invalid_argument("sample_refute: need trials >= 1");
    for (int t = 0; t < trials; ++t) {
        RatMatrix a = sample_in_S(g, seed + static_cast<std::uint64_t>(t));
        auto x = property_witness(a, PropertyKind::SSP);
        if (x) return make_verified(g, std::move(a), std::move(*x), "sample");
    }
    return std::nullopt;
}

}  // namespace gssp
