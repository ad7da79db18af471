#pragma once

// Test-side reference implementations. They work from the arc list only and share no
// code with the solvers.

#include <cstdint>
#include <random>
#include <vector>

#include "usched/instance.hpp"

namespace usched::testing {

// Random closed instance: n in [n_min, n_max], m drawn from {1, 2, 3, ceil(n/2), n}.
Instance random_instance(std::mt19937_64& rng, int n_min, int n_max);

// Random instance with exactly this n and m.
Instance random_instance_with(std::mt19937_64& rng, int n, int m);

// comparable[u] bit v set iff u and v are related in either direction.
std::vector<uint32_t> comparable_masks(const Instance& inst);

bool brute_is_antichain(const Instance& inst, uint32_t set);
uint64_t brute_antichain_count(const Instance& inst);
int brute_min_cover(const Instance& inst);

// Longest chain (in arcs) inside x + {v} ending at v, by trying all chains.
int brute_depth(const Instance& inst, uint32_t x, int v);

// Every constraint checked arc by arc.
bool naive_valid(const Instance& inst, const Schedule& s, bool tight = false);

// Size of a maximum matching by trying every left-to-right assignment.
int brute_matching(int left, int right, const std::vector<std::pair<int, int>>& edges);

// (f * g)(S) = sum over T subset of S of f(T) g(S - T), over all 3^n pairs.
std::vector<uint64_t> naive_convolve(const std::vector<uint64_t>& f, const std::vector<uint64_t>& g, int n);

// Chain a_1 < ... < a_k.
Instance chain(int k, int m);
// k chains, each of `length` jobs.
Instance disjoint_chains(int k, int length, int m);
// a < {b, c} < d.
Instance diamond(int m);

}  // namespace usched::testing
