#ifndef GSSP_STRONG_HPP
#define GSSP_STRONG_HPP

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gssp/linalg.hpp"

namespace gssp {

enum class PropertyKind { SSP, SMP, SAP };

std::string property_name(PropertyKind k);
std::optional<PropertyKind> property_from_name(const std::string& s);

// Linear system in the free entries x_{ij}, {i,j} in E(G^c); columns in
// lexicographic order of the non-edge pairs.
struct ConstraintSystem {
    RatMatrix matrix;
    std::vector<std::pair<int, int>> columns;
    std::map<std::pair<int, int>, int> column_index;
};

// Rows: SSP takes [A,X]_{ij} = 0 over unordered pairs i<j; SMP adds
// tr(A^i X) = 0 for i = 2..q(A); SAP takes all n^2 entries of AX = 0.
ConstraintSystem build_system(const RatMatrix& a, const Graph& g, PropertyKind kind);

// property holds iff the constraint system has a trivial kernel; the graph
// is inferred as the off-diagonal support of a
bool has_property(const RatMatrix& a, PropertyKind kind);

// nonzero symmetric X violating the property, verified before return
std::optional<RatMatrix> property_witness(const RatMatrix& a, PropertyKind kind);

// checks that x satisfies every defining constraint of the kind for a
bool satisfies_constraints(const RatMatrix& a, const RatMatrix& x, PropertyKind kind);

// Sufficient conditions for [[A, C], [C^T, B]] to have the SSP:
// (1) B has the SSP, (2) every component of the complement of B's pattern is
// a tree or a unicyclic graph with an odd cycle, (3) rank C = m <= n.
bool block_ssp_sufficient(const RatMatrix& a, const RatMatrix& b, const RatMatrix& c);

// complement-side predicate used by condition (2) and the join corollary
bool complement_components_forest_or_odd_unicyclic(const Graph& h);

RatMatrix assemble_block(const RatMatrix& a, const RatMatrix& b, const RatMatrix& c);

}  // namespace gssp

#endif
