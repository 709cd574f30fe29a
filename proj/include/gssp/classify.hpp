#ifndef GSSP_CLASSIFY_HPP
#define GSSP_CLASSIFY_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gssp/forcing.hpp"
#include "gssp/graph.hpp"
#include "gssp/refute.hpp"

namespace gssp {

enum class VerdictKind { In, Out, Unknown };

// Result of the pipeline. In verdicts carry a forcing certificate when one
// exists and otherwise cite a theorem or table tag; Out verdicts always
// carry a verified witness; Unknown records how many samples passed.
struct Verdict {
    VerdictKind kind = VerdictKind::Unknown;
    int stage = 0;  // pipeline stage that decided (0 = outside the pipeline)
    std::string tag;
    std::optional<ForcingCertificate> certificate;
    std::optional<Witness> witness;
    int samples_passed = 0;
};

// Tree dichotomy: In iff max degree <= 3 and at most one degree-3 vertex.
// Throws on non-tree input.
Verdict classify_tree(const Graph& t);

Verdict classify(const Graph& g, std::uint64_t seed = 1, int trials = 50);

struct CensusRecord {
    std::string line;
    std::optional<Verdict> verdict;
    std::string error;  // nonempty when the line failed to parse
};

struct CensusResult {
    std::vector<CensusRecord> records;
    int in_count = 0;
    int out_count = 0;
    int unknown_count = 0;
    int error_count = 0;
};

// Classifies each line independently (seed offset by line index); record
// order matches input order.
CensusResult census(const std::vector<std::string>& lines, std::uint64_t seed = 1,
                    int trials = 50);

}  // namespace gssp

#endif
