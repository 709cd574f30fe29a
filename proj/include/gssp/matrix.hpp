#ifndef GSSP_MATRIX_HPP
#define GSSP_MATRIX_HPP

#include <string>
#include <vector>

#include "gssp/graph.hpp"
#include "gssp/rational.hpp"

namespace gssp {

// Dense matrix of exact rationals, row-major.
class RatMatrix {
public:
    RatMatrix() = default;
    RatMatrix(int rows, int cols);

    static RatMatrix identity(int n);
    static RatMatrix zero(int rows, int cols);
    static RatMatrix ones(int rows, int cols);
    // E_ij, single 1 at (i,j)
    static RatMatrix unit(int n, int i, int j);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    const Rat& at(int i, int j) const { return e_[static_cast<size_t>(i) * cols_ + j]; }
    Rat& at(int i, int j) { return e_[static_cast<size_t>(i) * cols_ + j]; }

    RatMatrix transpose() const;
    Rat trace() const;
    bool is_symmetric() const;
    bool is_zero() const;

    RatMatrix operator+(const RatMatrix& o) const;
    RatMatrix operator-(const RatMatrix& o) const;
    RatMatrix operator*(const RatMatrix& o) const;
    RatMatrix operator*(const Rat& c) const;
    bool operator==(const RatMatrix& o) const;
    bool operator!=(const RatMatrix& o) const { return !(*this == o); }

private:
    int rows_ = 0, cols_ = 0;
    std::vector<Rat> e_;
};

RatMatrix kron(const RatMatrix& a, const RatMatrix& b);
RatMatrix hadamard(const RatMatrix& a, const RatMatrix& b);
RatMatrix commutator(const RatMatrix& a, const RatMatrix& b);
RatMatrix matrix_power(const RatMatrix& a, int k);

RatMatrix adjacency_matrix(const Graph& g);
// graph whose edges are the off-diagonal nonzero positions of a
Graph support_graph(const RatMatrix& a);

// Text format: first line "rows cols", then row-major "p/q" or integer tokens.
RatMatrix parse_matrix(const std::string& text);
std::string format_matrix(const RatMatrix& m);

}  // namespace gssp

#endif
