#include "gssp/matrix.hpp"

#include <sstream>
#include <stdexcept>

namespace gssp {

RatMatrix::RatMatrix(int rows, int cols)
    : rows_(rows), cols_(cols), e_(static_cast<size_t>(rows) * cols) {
    if (rows < 0 || cols < 0) throw std::invalid_argument("negative matrix shape");
}

RatMatrix RatMatrix::identity(int n) {
    RatMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

RatMatrix RatMatrix::zero(int rows, int cols) { return RatMatrix(rows, cols); }

RatMatrix RatMatrix::ones(int rows, int cols) {
    RatMatrix m(rows, cols);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) m.at(i, j) = 1;
    return m;
}

RatMatrix RatMatrix::unit(int n, int i, int j) {
    RatMatrix m(n, n);
    m.at(i, j) = 1;
    return m;
}

RatMatrix RatMatrix::transpose() const {
    RatMatrix t(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
    return t;
}

Rat RatMatrix::trace() const {
    if (rows_ != cols_) throw std::invalid_argument("trace of non-square matrix");
    Rat t = 0;
    for (int i = 0; i < rows_; ++i) t += at(i, i);
    return t;
}

bool RatMatrix::is_symmetric() const {
    if (rows_ != cols_) return false;
    for (int i = 0; i < rows_; ++i)
        for (int j = i + 1; j < cols_; ++j)
            if (at(i, j) != at(j, i)) return false;
    return true;
}

bool RatMatrix::is_zero() const {
    for (const Rat& x : e_)
        if (x != 0) return false;
    return true;
}

RatMatrix RatMatrix::operator+(const RatMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("shape mismatch");
    RatMatrix r(rows_, cols_);
    for (size_t k = 0; k < e_.size(); ++k) r.e_[k] = e_[k] + o.e_[k];
    return r;
}

RatMatrix RatMatrix::operator-(const RatMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("shape mismatch");
    RatMatrix r(rows_, cols_);
    for (size_t k = 0; k < e_.size(); ++k) r.e_[k] = e_[k] - o.e_[k];
    return r;
}

RatMatrix RatMatrix::operator*(const RatMatrix& o) const {
    if (cols_ != o.rows_) throw std::invalid_argument("shape mismatch");
    RatMatrix r(rows_, o.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            const Rat& a = at(i, k);
            if (a == 0) continue;
            for (int j = 0; j < o.cols_; ++j) r.at(i, j) += a * o.at(k, j);
        }
    return r;
}

RatMatrix RatMatrix::operator*(const Rat& c) const {
    RatMatrix r(rows_, cols_);
    for (size_t k = 0; k < e_.size(); ++k) r.e_[k] = e_[k] * c;
    return r;
}

bool RatMatrix::operator==(const RatMatrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && e_ == o.e_;
}

RatMatrix kron(const RatMatrix& a, const RatMatrix& b) {
    RatMatrix r(a.rows() * b.rows(), a.cols() * b.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) {
            if (a.at(i, j) == 0) continue;
            for (int p = 0; p < b.rows(); ++p)
                for (int q = 0; q < b.cols(); ++q)
                    r.at(i * b.rows() + p, j * b.cols() + q) = a.at(i, j) * b.at(p, q);
        }
    return r;
}

RatMatrix hadamard(const RatMatrix& a, const RatMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw std::invalid_argument("hadamard: shape mismatch");
    RatMatrix r(a.rows(), a.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) r.at(i, j) = a.at(i, j) * b.at(i, j);
    return r;
}

RatMatrix commutator(const RatMatrix& a, const RatMatrix& b) {
    if (a.rows() != a.cols() || b.rows() != b.cols() || a.rows() != b.rows())
        throw std::invalid_argument("commutator: need square matrices of equal order");
    return a * b - b * a;
}

RatMatrix matrix_power(const RatMatrix& a, int k) {
    if (a.rows() != a.cols()) throw std::invalid_argument("power of non-square matrix");
    if (k < 0) throw std::invalid_argument("negative power");
    RatMatrix r = RatMatrix::identity(a.rows());
    for (int t = 0; t < k; ++t) r = r * a;
    return r;
}

RatMatrix adjacency_matrix(const Graph& g) {
    RatMatrix a(g.n(), g.n());
    for (auto [i, j] : g.edges()) {
        a.at(i, j) = 1;
        a.at(j, i) = 1;
    }
    return a;
}

Graph support_graph(const RatMatrix& a) {
    if (a.rows() != a.cols()) throw std::invalid_argument("support of non-square matrix");
    Graph g(a.rows());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = i + 1; j < a.cols(); ++j)
            if (a.at(i, j) != 0 || a.at(j, i) != 0) g.add_edge(i, j);
    return g;
}

RatMatrix parse_matrix(const std::string& text) {
    std::istringstream in(text);
    long rows, cols;
    if (!(in >> rows >> cols)) throw std::invalid_argument("matrix: missing shape");
    if (rows < 0 || cols < 0) throw std::invalid_argument("matrix: negative shape");
    RatMatrix m(static_cast<int>(rows), static_cast<int>(cols));
    std::string tok;
    for (long i = 0; i < rows; ++i)
        for (long j = 0; j < cols; ++j) {
            if (!(in >> tok)) throw std::invalid_argument("matrix: too few entries");
            m.at(static_cast<int>(i), static_cast<int>(j)) = parse_rat(tok);
        }
    if (in >> tok) throw std::invalid_argument("matrix: trailing tokens");
    return m;
}

std::string format_matrix(const RatMatrix& m) {
    std::ostringstream out;
    out << m.rows() << " " << m.cols();
    for (int i = 0; i < m.rows(); ++i) {
        out << "\n";
        for (int j = 0; j < m.cols(); ++j) {
            if (j) out << " ";
            out << rat_str(m.at(i, j));
        }
    }
    return out.str();
}

}  // namespace gssp
