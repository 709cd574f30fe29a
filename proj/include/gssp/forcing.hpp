#ifndef GSSP_FORCING_HPP
#define GSSP_FORCING_HPP

#include <array>
#include <optional>
#include <utility>
#include <variant>
#include <vector>

#include "gssp/graph.hpp"

namespace gssp {

// {via} focused on {pivot}; adds {added} (= {via.second, pivot} or
// {via.first, pivot})
struct EdgeForce {
    std::pair<int, int> via;
    int pivot;
    std::pair<int, int> added;
};

// vertex forces an odd cycle found as a component of complement(G_l)
// restricted to N_G(vertex); adds every cycle edge
struct OddCycleForce {
    int vertex;
    std::vector<int> cycle;  // traversal order, odd length >= 3
    std::vector<std::pair<int, int>> added;
};

// induced spider with legs of h vertices; adds every pair of the spider at
// spider-distance exactly h+1
struct SpiderForce {
    int center;
    std::array<std::vector<int>, 3> legs;  // center-outward, each of length h
    int h;
    std::vector<std::pair<int, int>> added;
};

using ForcingStep = std::variant<EdgeForce, OddCycleForce, SpiderForce>;

std::vector<std::pair<int, int>> step_added_pairs(const ForcingStep& s);

struct ForcingCertificate {
    Graph base;
    std::vector<ForcingStep> steps;
    Graph final;

    bool conclusive() const { return final.is_complete(); }
};

// Scan orders are deterministic and documented in forcing.cpp.
std::optional<ForcingStep> find_rule1(const Graph& g, const Graph& gl);
std::optional<ForcingStep> find_rule2(const Graph& g, const Graph& gl);
std::optional<ForcingStep> find_rule3(const Graph& g, const Graph& gl);

// rule 1 exhaustively, then 2, then 3, restart after any success; stops at
// K_n or when no rule applies (a stalled closure is non-conclusive, not an
// error)
ForcingCertificate close(const Graph& g);

// re-validates every step's preconditions and the edge bookkeeping
bool replay(const ForcingCertificate& cert);

}  // namespace gssp

#endif
