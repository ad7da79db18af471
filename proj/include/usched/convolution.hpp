#pragma once

#include <cstdint>
#include <vector>

#include "usched/instance.hpp"
#include "usched/subset_transform.hpp"

namespace usched {

// Values indexed by subset bitmask over a ground set of n jobs.
struct SubsetTable {
    int n = 0;
    std::vector<uint64_t> values;

    SubsetTable() = default;
    explicit SubsetTable(int bits) : n(bits), values(std::size_t{1} << bits, 0) {}
    uint64_t& operator[](uint64_t s) { return values[s]; }
    uint64_t operator[](uint64_t s) const { return values[s]; }
    bool operator==(const SubsetTable&) const = default;
};

// Throws CapacityError when n exceeds kMaxSubsetBits or zeta sums could exceed 64 bits.
SubsetTable zeta(const SubsetTable& f);
SubsetTable moebius(const SubsetTable& f);
// Exact subset convolution; throws CapacityError unless max(f)*max(g)*2^n fits 64 bits.
SubsetTable subset_convolve(const SubsetTable& f, const SubsetTable& g);

// One bit per subset.
class SubsetBits {
public:
    SubsetBits() = default;
    explicit SubsetBits(int n) : n_(n), words_(((std::size_t{1} << n) + 63) / 64, 0) {}
    int n() const { return n_; }
    bool test(uint64_t s) const { return (words_[s >> 6] >> (s & 63)) & 1u; }
    void set(uint64_t s) { words_[s >> 6] |= uint64_t{1} << (s & 63); }
    std::size_t bytes() const { return words_.size() * sizeof(uint64_t); }

private:
    int n_ = 0;
    std::vector<uint64_t> words_;
};

// The precedence relation of an instance with at most kMaxSubsetBits jobs as masks.
struct MaskPoset {
    int n = 0;
    int m = 1;
    std::vector<uint32_t> pred;
    std::vector<uint32_t> succ;

    explicit MaskPoset(const Instance& inst);
    uint32_t sinks(uint32_t x) const;
    uint32_t full() const { return n == 32 ? ~uint32_t{0} : (uint32_t{1} << n) - 1; }
};

// f_t for t = 0..rounds and the fixed slot table g.
struct FeasibilityTables {
    int n = 0;
    int m = 1;
    std::vector<SubsetBits> f;  // f[t].test(X): pred[X] = X fits in the first t slots
    SubsetBits g;               // |Y| <= m and Y an antichain
    SubsetBits downward_closed;

    int rounds() const { return static_cast<int>(f.size()) - 1; }
    std::size_t bytes() const;
};

// Incrementally builds f_1, f_2, ... by h_t = f_{t-1} (*) g and thresholding.
class FeasibilityBuilder {
public:
    explicit FeasibilityBuilder(const Instance& inst);

    // Computes f_{rounds()+1}.
    void extend();
    void extend_to(int t) {
        while (tables_.rounds() < t) extend();
    }
    const FeasibilityTables& tables() const { return tables_; }
    FeasibilityTables release() { return std::move(tables_); }
    const MaskPoset& poset() const { return poset_; }

private:
    MaskPoset poset_;
    FeasibilityTables tables_;
    std::vector<std::vector<uint32_t>> g_hat_;
};

struct Solve2nResult {
    bool feasible = false;
    FeasibilityTables tables;
};

// Decides whether all jobs fit in `deadline` slots; tables cover t = 0..deadline.
Solve2nResult solve_2n(const Instance& inst, int deadline);

// Backtracks through the tables: slots 1..t holding exactly the jobs of X.
// Requires tables.f[t].test(x).
Schedule reconstruct_schedule(const FeasibilityTables& tables, const MaskPoset& poset, uint32_t x, int t);

struct SolveResult {
    int makespan = 0;
    Schedule witness;
    std::size_t table_bytes = 0;  // largest table footprint held at once
};

// max(ceil(n/m), height + 1), or 0 without jobs.
int makespan_lower_bound(const Instance& inst);

SolveResult min_makespan_2n(const Instance& inst);

}  // namespace usched
