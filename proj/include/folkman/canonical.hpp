#pragma once

#include <vector>

#include "folkman/graph.hpp"

namespace folkman {

// Canonizer capacity. Refinement plus permutation backtracking stays fast
// well past the sizes this project needs (extremal-uniqueness checks stop
// at 16 vertices).
inline constexpr int kCanonMaxVertices = 32;

struct CanonResult {
    Graph canonical;                   // relabeled canonical representative
    std::vector<int> labeling;         // labeling[v] = canonical position of v
    std::vector<std::vector<int>> generators;  // automorphism generators
    std::vector<int> orbit;            // orbit[v] = least vertex in v's orbit
};

CanonResult canonical_labeling(const Graph& g);
Graph canonical_form(const Graph& g);
bool is_isomorphic(const Graph& a, const Graph& b);

}  // namespace folkman
