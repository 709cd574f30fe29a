#include "gssp/strong.hpp"

#include <stdexcept>

namespace gssp {

std::string property_name(PropertyKind k) {
    switch (k) {
        case PropertyKind::SSP: return "ssp";
        case PropertyKind::SMP: return "smp";
        case PropertyKind::SAP: return "sap";
    }
    return "?";
}

std::optional<PropertyKind> property_from_name(const std::string& s) {
    if (s == "ssp") return PropertyKind::SSP;
    if (s == "smp") return PropertyKind::SMP;
    if (s == "sap") return PropertyKind::SAP;
    return std::nullopt;
}

ConstraintSystem build_system(const RatMatrix& a, const Graph& g, PropertyKind kind) {
    const int n = g.n();
    if (!in_S(a, g)) throw std::invalid_argument("build_system: pattern of A is not G");
    ConstraintSystem sys;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (!g.has_edge(i, j)) {
                sys.column_index[{i, j}] = static_cast<int>(sys.columns.size());
                sys.columns.emplace_back(i, j);
            }
    const int ncols = static_cast<int>(sys.columns.size());
    auto col_of = [&](int p, int q) -> int {
        if (p > q) std::swap(p, q);
        auto it = sys.column_index.find({p, q});
        return it == sys.column_index.end() ? -1 : it->second;
    };

    std::vector<std::vector<Rat>> rows;
    auto add_row = [&]() -> std::vector<Rat>& {
        rows.emplace_back(ncols, Rat(0));
        return rows.back();
    };

    if (kind == PropertyKind::SSP || kind == PropertyKind::SMP) {
        // [A,X]_{ij} = sum_k a_ik x_kj - sum_k x_ik a_kj, unordered i<j
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) {
                auto& row = add_row();
                for (int k = 0; k < n; ++k) {
                    if (k != j)
                        if (int c = col_of(k, j); c >= 0) row[c] += a.at(i, k);
                    if (k != i)
                        if (int c = col_of(i, k); c >= 0) row[c] -= a.at(k, j);
                }
            }
        if (kind == PropertyKind::SMP) {
            // tr(A^p X) = 2 sum over non-edge pairs (A^p)_{ij} x_{ij}
            int q = q_of(a);
            RatMatrix ap = a * a;
            for (int p = 2; p <= q; ++p) {
                auto& row = add_row();
                for (int c = 0; c < ncols; ++c) {
                    auto [i, j] = sys.columns[c];
                    row[c] = Rat(2) * ap.at(i, j);
                }
                if (p < q) ap = ap * a;
            }
        }
    } else {
        // (AX)_{ij} = sum_k a_ik x_kj, all ordered pairs plus the diagonal
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                auto& row = add_row();
                for (int k = 0; k < n; ++k)
                    if (k != j)
                        if (int c = col_of(k, j); c >= 0) row[c] += a.at(i, k);
            }
    }

    sys.matrix = RatMatrix(static_cast<int>(rows.size()), ncols);
    for (size_t r = 0; r < rows.size(); ++r)
        for (int c = 0; c < ncols; ++c) sys.matrix.at(static_cast<int>(r), c) = rows[r][c];
    return sys;
}

bool satisfies_constraints(const RatMatrix& a, const RatMatrix& x, PropertyKind kind) {
    if (!x.is_symmetric()) return false;
    if (!hadamard(a, x).is_zero()) return false;
    if (!hadamard(RatMatrix::identity(a.rows()), x).is_zero()) return false;
    switch (kind) {
        case PropertyKind::SAP:
            return (a * x).is_zero();
        case PropertyKind::SMP: {
            if (!commutator(a, x).is_zero()) return false;
            int q = q_of(a);
            RatMatrix ap = a;
            for (int p = 2; p <= q; ++p) {
                ap = ap * a;
                if ((ap * x).trace() != 0) return false;
            }
            return true;
        }
        case PropertyKind::SSP:
            return commutator(a, x).is_zero();
    }
    return false;
}

bool has_property(const RatMatrix& a, PropertyKind kind) {
    if (!a.is_symmetric()) throw std::invalid_argument("has_property: matrix not symmetric");
    Graph g = support_graph(a);
    ConstraintSystem sys = build_system(a, g, kind);
    if (sys.matrix.cols() == 0) return true;
    return rank_exact(sys.matrix) == sys.matrix.cols();
}

std::optional<RatMatrix> property_witness(const RatMatrix& a, PropertyKind kind) {
    if (!a.is_symmetric()) throw std::invalid_argument("property_witness: matrix not symmetric");
    Graph g = support_graph(a);
    ConstraintSystem sys = build_system(a, g, kind);
    auto basis = nullspace_basis(sys.matrix);
    if (basis.empty()) return std::nullopt;
    RatMatrix x(a.rows(), a.rows());
    for (size_t c = 0; c < sys.columns.size(); ++c) {
        auto [i, j] = sys.columns[c];
        x.at(i, j) = basis[0].at(static_cast<int>(c), 0);
        x.at(j, i) = x.at(i, j);
    }
    if (x.is_zero() || !satisfies_constraints(a, x, kind))
        throw std::logic_error("property_witness: kernel vector fails verification");
    return x;
}

bool complement_components_forest_or_odd_unicyclic(const Graph& h) {
    Graph hc = complement(h);
    for (const auto& comp : components(hc)) {
        Graph c = induced(hc, comp);
        if (is_tree(c)) continue;
        if (is_unicyclic(c) && unique_cycle(c).size() % 2 == 1) continue;
        return false;
    }
    return true;
}

RatMatrix assemble_block(const RatMatrix& a, const RatMatrix& b, const RatMatrix& c) {
    const int n = a.rows(), m = b.rows();
    if (!a.is_symmetric() || !b.is_symmetric() || c.rows() != n || c.cols() != m)
        throw std::invalid_argument("assemble_block: shape mismatch");
    RatMatrix mtx(n + m, n + m);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) mtx.at(i, j) = a.at(i, j);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) mtx.at(n + i, n + j) = b.at(i, j);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < m; ++j) {
            mtx.at(i, n + j) = c.at(i, j);
            mtx.at(n + j, i) = c.at(i, j);
        }
    return mtx;
}

bool block_ssp_sufficient(const RatMatrix& a, const RatMatrix& b, const RatMatrix& c) {
    const int n = a.rows(), m = b.rows();
    if (!a.is_symmetric() || !b.is_symmetric() || c.rows() != n || c.cols() != m)
        throw std::invalid_argument("block_ssp_sufficient: shape mismatch");
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < m; ++j)
            if (c.at(i, j) == 0) throw std::invalid_argument("block_ssp_sufficient: C has a zero entry");
    if (!has_property(a, PropertyKind::SSP))
        throw std::invalid_argument("block_ssp_sufficient: A lacks the SSP");
    if (has_property(b, PropertyKind::SSP)) return true;
    if (complement_components_forest_or_odd_unicyclic(support_graph(b))) return true;
    if (m <= n && rank_exact(c) == m) return true;
    return false;
}

}  // namespace gssp
