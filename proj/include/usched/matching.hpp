#pragma once

#include <vector>

namespace usched {

struct Matching {
    int size = 0;
    std::vector<int> left_mate;   // right vertex matched to each left vertex, or -1
    std::vector<int> right_mate;  // left vertex matched to each right vertex, or -1
};

// Maximum-cardinality bipartite matching by Hopcroft-Karp phases. adjacency[u] lists
// the right neighbours of left vertex u; results depend only on that order.
Matching max_bipartite_matching(int left, int right, const std::vector<std::vector<int>>& adjacency);

}  // namespace usched
