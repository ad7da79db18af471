#pragma once

#include <cstdint>
#include <type_traits>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "usched/instance.hpp"

namespace usched {

using BigInt = boost::multiprecision::cpp_int;

// Jobs of X with no successor inside X.
JobSet sinks(const Instance& inst, const JobSet& x);
// Jobs of X with no predecessor inside X.
JobSet sources(const Instance& inst, const JobSet& x);
JobSet sinks(const Instance& inst);
JobSet sources(const Instance& inst);

// pred[X]: X together with all predecessors of its members.
JobSet pred_closure(const Instance& inst, const JobSet& x);
// pred(X), succ(X): strict predecessors / successors of members of X.
JobSet pred_of(const Instance& inst, const JobSet& x);
JobSet succ_of(const Instance& inst, const JobSet& x);

bool is_antichain(const Instance& inst, const JobSet& x);
bool is_downward_closed(const Instance& inst, const JobSet& x);

// Length in arcs of the longest chain starting at each job.
std::vector<int> heights(const Instance& inst);
int height(const Instance& inst);

// Length of the longest chain inside X + {v} that ends in v.
int depth_wrt(const Instance& inst, const JobSet& x, int v);

struct ChainDecomposition {
    std::vector<std::vector<int>> chains;  // each in precedence order
};

struct VertexCoverCertificate {
    JobSet cover;              // minimum vertex cover of the comparability graph
    JobSet witness_antichain;  // its complement, a maximum antichain
    ChainDecomposition chains; // as many chains as the antichain has jobs
};

// Minimum chain cover from a maximum matching of the split graph, maximum antichain
// from alternating reachability, cover as its complement.
VertexCoverCertificate min_vertex_cover(const Instance& inst);

// Product of (chain length + 1) over the decomposition; never below the number of
// antichains.
BigInt antichain_bound(const Instance& inst);
BigInt antichain_bound(const ChainDecomposition& chains);

// Calls visitor once per antichain (including the empty one), extending only with
// larger indices. A visitor returning bool stops the enumeration by returning false.
// Returns the number of antichains visited.
template <class Visitor>
uint64_t enumerate_antichains(const Instance& inst, Visitor&& visitor);

uint64_t count_antichains(const Instance& inst);

namespace detail {

template <class Visitor>
bool antichain_recurse(const Instance& inst, JobSet& current, const JobSet& candidates,
                       uint64_t& count, Visitor& visitor) {
    ++count;
    if constexpr (std::is_same_v<std::invoke_result_t<Visitor&, const JobSet&>, bool>) {
        if (!visitor(static_cast<const JobSet&>(current))) return false;
    } else {
        visitor(static_cast<const JobSet&>(current));
    }
    JobSet rest = candidates;
    for (int v = rest.first(); v >= 0; v = rest.first()) {
        rest.reset(v);
        JobSet next = rest - inst.pred(v) - inst.succ(v);
        current.set(v);
        bool keep_going = antichain_recurse(inst, current, next, count, visitor);
        current.reset(v);
        if (!keep_going) return false;
    }
    return true;
}

}  // namespace detail

template <class Visitor>
uint64_t enumerate_antichains(const Instance& inst, Visitor&& visitor) {
    uint64_t count = 0;
    JobSet current = inst.empty_set();
    detail::antichain_recurse(inst, current, inst.all_jobs(), count, visitor);
    return count;
}

}  // namespace usched
