#ifndef GSSP_REFUTE_HPP
#define GSSP_REFUTE_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gssp/graph.hpp"
#include "gssp/matrix.hpp"

namespace gssp {

// A pair (A, X) proving that not every matrix with pattern `graph` has the
// strong spectral property. Constructors verify before returning; a Witness
// in the wild is re-checked with verify_witness.
struct Witness {
    Graph graph;
    RatMatrix A;
    RatMatrix X;
    std::string provenance;
};

bool verify_witness(const Witness& w);

// Vertex partition (R, W1, W2) with no edges between W1 and W2, both
// nonempty, and every vertex of R having 0 or >= 2 neighbors in each class.
struct BarbellPartition {
    std::vector<int> R;
    std::vector<int> W1;
    std::vector<int> W2;
};

bool barbell_valid(const Graph& g, const BarbellPartition& p);

// First partition found, enumerating R by increasing size and assigning the
// components of G - R to the two classes. Throws when |G| exceeds the cap.
std::optional<BarbellPartition> barbell_search(const Graph& g, int cap = 14);

Witness barbell_witness(const Graph& g, const BarbellPartition& p);

std::optional<Witness> regular_witness(const Graph& g);

// A_hat = sum S_j (x) A^j, X_hat = T (x) X. The returned witness is for the
// off-diagonal support of A_hat, whatever that turns out to be.
Witness kron_lift(const std::vector<RatMatrix>& s_list, const RatMatrix& t,
                  const Witness& base);

// Convenience wrappers of kron_lift.
Witness tensor_lift(const Witness& base, const Graph& h);
Witness corona_lift(const Witness& base, int m);

Witness complement_path_witness(int m, std::uint64_t seed = 1);

Witness kn_minus_c4_witness(int n, std::uint64_t seed = 1);
Witness cocktail_witness(int n, std::uint64_t seed = 1);

std::optional<Witness> sample_refute(const Graph& g, int trials, std::uint64_t seed);

}  // namespace gssp

#endif
