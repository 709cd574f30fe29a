#include "gssp/linalg.hpp"

#include <random>
#include <stdexcept>

namespace gssp {

namespace {

// clear denominators row by row; rank is unchanged
std::vector<std::vector<Int>> integerize(const RatMatrix& m) {
    std::vector<std::vector<Int>> a(m.rows(), std::vector<Int>(m.cols()));
    for (int i = 0; i < m.rows(); ++i) {
        Int l = 1;
        for (int j = 0; j < m.cols(); ++j)
            mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m.at(i, j).get_den_mpz_t());
        for (int j = 0; j < m.cols(); ++j) {
            Rat v = m.at(i, j) * Rat(l);
            a[i][j] = v.get_num();  // denominator is now 1
        }
    }
    return a;
}

// Fraction-free elimination; pivot row swaps only, division by the previous
// pivot is exact. parallel=true distributes the row updates across threads.
int bareiss_rank(std::vector<std::vector<Int>> a, bool parallel) {
    const int rows = static_cast<int>(a.size());
    const int cols = rows ? static_cast<int>(a[0].size()) : 0;
    Int prev = 1;
    int rank = 0;
    for (int col = 0; col < cols && rank < rows; ++col) {
        int piv = -1;
        for (int i = rank; i < rows; ++i)
            if (a[i][col] != 0) {
                piv = i;
                break;
            }
        if (piv < 0) continue;
        std::swap(a[rank], a[piv]);
        const std::vector<Int>& prow = a[rank];
#pragma omp parallel for schedule(dynamic) if (parallel)
        for (int i = rank + 1; i < rows; ++i) {
            for (int j = col + 1; j < cols; ++j) {
                Int t = prow[col] * a[i][j] - a[i][col] * prow[j];
                mpz_divexact(a[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
            a[i][col] = 0;
        }
        prev = prow[col];
        ++rank;
    }
    return rank;
}

}  // namespace

int rank_exact(const RatMatrix& m) { return bareiss_rank(integerize(m), true); }

int rank_exact_serial(const RatMatrix& m) { return bareiss_rank(integerize(m), false); }

int rank_exact_transposed(const RatMatrix& m) {
    return bareiss_rank(integerize(m.transpose()), false);
}

std::vector<RatMatrix> nullspace_basis(const RatMatrix& m) {
    // plain rational Gauss-Jordan; system sizes here are tiny
    const int rows = m.rows(), cols = m.cols();
    RatMatrix r = m;
    std::vector<int> pivot_col;
    int lead = 0;
    for (int col = 0; col < cols && lead < rows; ++col) {
        int piv = -1;
        for (int i = lead; i < rows; ++i)
            if (r.at(i, col) != 0) {
                piv = i;
                break;
            }
        if (piv < 0) continue;
        for (int j = 0; j < cols; ++j) std::swap(r.at(lead, j), r.at(piv, j));
        Rat inv = 1 / r.at(lead, col);
        for (int j = 0; j < cols; ++j) r.at(lead, j) *= inv;
        for (int i = 0; i < rows; ++i) {
            if (i == lead || r.at(i, col) == 0) continue;
            Rat f = r.at(i, col);
            for (int j = 0; j < cols; ++j) r.at(i, j) -= f * r.at(lead, j);
        }
        pivot_col.push_back(col);
        ++lead;
    }
    std::vector<char> is_pivot(cols, 0);
    for (int c : pivot_col) is_pivot[c] = 1;
    std::vector<RatMatrix> basis;
    for (int free = 0; free < cols; ++free) {
        if (is_pivot[free]) continue;
        RatMatrix v(cols, 1);
        v.at(free, 0) = 1;
        for (size_t p = 0; p < pivot_col.size(); ++p)
            v.at(pivot_col[p], 0) = -r.at(static_cast<int>(p), free);
        basis.push_back(std::move(v));
    }
    for (const RatMatrix& v : basis)
        if (!(m * v).is_zero()) throw std::logic_error("nullspace vector fails M*v = 0");
    return basis;
}

// --- polynomials ----------------------------------------------------------

int RatPoly::degree() const {
    for (int i = static_cast<int>(coeff.size()) - 1; i >= 0; --i)
        if (coeff[i] != 0) return i;
    return -1;
}

void RatPoly::normalize() {
    while (!coeff.empty() && coeff.back() == 0) coeff.pop_back();
}

RatPoly RatPoly::derivative() const {
    RatPoly d;
    for (size_t i = 1; i < coeff.size(); ++i) d.coeff.push_back(coeff[i] * Rat(static_cast<long>(i)));
    d.normalize();
    return d;
}

RatPoly RatPoly::monic() const {
    RatPoly p = *this;
    p.normalize();
    int d = p.degree();
    if (d < 0) return p;
    Rat lead = p.coeff[d];
    for (Rat& c : p.coeff) c /= lead;
    return p;
}

Rat RatPoly::eval(const Rat& x) const {
    Rat v = 0;
    for (int i = static_cast<int>(coeff.size()) - 1; i >= 0; --i) v = v * x + coeff[i];
    return v;
}

RatMatrix RatPoly::eval(const RatMatrix& a) const {
    RatMatrix v(a.rows(), a.cols());
    RatMatrix id = RatMatrix::identity(a.rows());
    for (int i = static_cast<int>(coeff.size()) - 1; i >= 0; --i)
        v = v * a + id * coeff[i];
    return v;
}

RatPoly poly_gcd(RatPoly a, RatPoly b) {
    a.normalize();
    b.normalize();
    while (b.degree() >= 0) {
        // a mod b
        RatPoly r = a;
        int db = b.degree();
        while (r.degree() >= db) {
            int dr = r.degree();
            Rat f = r.coeff[dr] / b.coeff[db];
            for (int i = 0; i <= db; ++i) r.coeff[dr - db + i] -= f * b.coeff[i];
            r.normalize();
        }
        a = b;
        b = r;
    }
    return a.monic();
}

RatPoly char_poly(const RatMatrix& a) {
    if (a.rows() != a.cols()) throw std::invalid_argument("char_poly: non-square matrix");
    const int n = a.rows();
    RatPoly p;
    p.coeff.assign(n + 1, Rat(0));
    p.coeff[n] = 1;
    RatMatrix m = a;
    RatMatrix id = RatMatrix::identity(n);
    for (int k = 1; k <= n; ++k) {
        Rat c = -m.trace() / Rat(k);
        p.coeff[n - k] = c;
        if (k < n) m = a * (m + id * c);
    }
    return p;
}

int q_of(const RatMatrix& a) {
    if (!a.is_symmetric()) throw std::invalid_argument("q_of: matrix not symmetric");
    RatPoly p = char_poly(a);
    RatPoly g = poly_gcd(p, p.derivative());
    return p.degree() - g.degree();
}

// --- sampling & pattern predicates ----------------------------------------

RatMatrix sample_in_S(const Graph& g, std::uint64_t seed, long bound) {
    if (bound < 1) throw std::invalid_argument("sample_in_S: bound < 1");
    std::mt19937_64 rng(seed);
    // explicit modular draws so the sequence does not depend on library
    // distribution internals
    auto draw = [&](long lo, long hi) {
        return lo + static_cast<long>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
    };
    RatMatrix a(g.n(), g.n());
    for (int i = 0; i < g.n(); ++i) a.at(i, i) = draw(-bound, bound);
    for (auto [i, j] : g.edges()) {
        long v = draw(1, 2 * bound);
        if (v > bound) v = bound - v;  // fold upper half to negatives
        a.at(i, j) = v;
        a.at(j, i) = v;
    }
    return a;
}

bool in_S(const RatMatrix& a, const Graph& g) {
    if (a.rows() != g.n() || !a.is_symmetric()) return false;
    for (int i = 0; i < g.n(); ++i)
        for (int j = i + 1; j < g.n(); ++j)
            if ((a.at(i, j) != 0) != g.has_edge(i, j)) return false;
    return true;
}

bool in_Sbar0(const RatMatrix& x, const Graph& h) {
    if (x.rows() != h.n() || !x.is_symmetric()) return false;
    for (int i = 0; i < h.n(); ++i)
        if (x.at(i, i) != 0) return false;
    for (int i = 0; i < h.n(); ++i)
        for (int j = i + 1; j < h.n(); ++j)
            if (x.at(i, j) != 0 && !h.has_edge(i, j)) return false;
    return true;
}

}  // namespace gssp
