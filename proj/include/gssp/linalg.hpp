#ifndef GSSP_LINALG_HPP
#define GSSP_LINALG_HPP

#include <cstdint>
#include <vector>

#include "gssp/matrix.hpp"

namespace gssp {

// Rank over Q by fraction-free (Bareiss) elimination after clearing row
// denominators. rank_exact runs the OpenMP kernel; rank_exact_serial is the
// reference implementation the tests compare against.
int rank_exact(const RatMatrix& m);
int rank_exact_serial(const RatMatrix& m);
// independent elimination order (eliminates the transpose) for cross-checks
int rank_exact_transposed(const RatMatrix& m);

// basis of {x : Mx = 0}, each vector verified by multiplication
std::vector<RatMatrix> nullspace_basis(const RatMatrix& m);

// Polynomial with rational coefficients, lowest degree first.
struct RatPoly {
    std::vector<Rat> coeff;

    int degree() const;  // -1 for the zero polynomial
    RatPoly derivative() const;
    void normalize();    // strip leading zeros
    RatPoly monic() const;
    Rat eval(const Rat& x) const;
    RatMatrix eval(const RatMatrix& a) const;  // Horner
    bool operator==(const RatPoly& o) const { return coeff == o.coeff; }
};

RatPoly poly_gcd(RatPoly a, RatPoly b);  // monic gcd

// det(xI - A) by the Faddeev-LeVerrier recurrence
RatPoly char_poly(const RatMatrix& a);

// number of distinct eigenvalues of symmetric A:
// degree of char_poly / gcd(char_poly, char_poly')
int q_of(const RatMatrix& a);

// Seeded random matrix in S(G): edge entries uniform nonzero in
// [-bound,bound], diagonal uniform in [-bound,bound].
RatMatrix sample_in_S(const Graph& g, std::uint64_t seed, long bound = 10);

// off-diagonal support of a equals E(g) exactly
bool in_S(const RatMatrix& a, const Graph& g);
// zero diagonal and off-diagonal support contained in E(h)
bool in_Sbar0(const RatMatrix& x, const Graph& h);

}  // namespace gssp

#endif
