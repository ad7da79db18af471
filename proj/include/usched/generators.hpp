#pragma once

#include <cstdint>
#include <iosfwd>
#include <utility>
#include <vector>

#include "usched/instance.hpp"

namespace usched {

inline constexpr uint64_t kDefaultSeed = 20240601;

// Jobs spread over `layers` layers at random; each pair in increasing layers gets
// an arc with probability `density`. Closed on return. Same seed, same instance.
Instance gen_random(int n, int m, double density, int layers, uint64_t seed);

// A Densest-k-Subgraph question: is there a set of `kappa` vertices inducing at
// least `ell` edges in a graph of maximum degree `delta`?
struct DksInstance {
    int vertices = 0;
    std::vector<std::pair<int, int>> edges;  // 0-based endpoints
    int delta = 0;
    int kappa = 0;
    int ell = 0;
};

// Rejects isolated vertices, loops, repeated edges and degrees above delta.
void check_dks(const DksInstance& dks);

// Vertex jobs, then edge jobs after both endpoints, then filler layers
// L1 < L2 < L3 of sizes m - kappa, m + kappa - ell - N and m + ell - M with
// m = 2 * delta * N + 1. Deadline 3. Throws InstanceError when a layer size is negative.
Instance reduce_dks(const DksInstance& dks);

// Most edges induced by any `kappa` vertices, by enumeration.
int densest_subgraph_edges(const DksInstance& dks);

// A random graph without isolated vertices and degrees at most delta.
DksInstance gen_random_dks(int vertices, int delta, int kappa, int ell, uint64_t seed);

// "p dks <N> <delta> <kappa> <ell>" then "e <u> <v>" lines, vertices from 1.
DksInstance parse_dks(std::istream& in);
void emit_dks(const DksInstance& dks, std::ostream& out);

}  // namespace usched
