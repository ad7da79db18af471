#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "usched/instance.hpp"

namespace usched::vc {

enum class Side : uint8_t { left, middle, right };

// For a cover job on one side: at a sink moment without being a sink, a sink of its
// side, or neither.
enum class CoverClass : uint8_t { moment, sink, other };

struct CoverState {
    Side side = Side::middle;
    CoverClass cls = CoverClass::other;
    bool early = false;

    bool operator==(const CoverState&) const = default;
};

inline constexpr int kFingerprintStates = 13;

// Code 0 is the middle slot; 1..6 the left side and 7..12 the right side, as
// 2 * class + (late ? 1 : 0) within a side.
uint8_t encode(const CoverState& s);
CoverState decode(uint8_t code);

// One state per cover job, cover jobs in increasing index order.
struct Fingerprint {
    std::vector<int> jobs;
    std::vector<uint8_t> codes;

    CoverState state(std::size_t i) const { return decode(codes[i]); }
    // Jobs of the given side (and class, when given) as a set over `universe`.
    JobSet side_jobs(int universe, Side side) const;
    JobSet class_jobs(int universe, Side side, CoverClass cls) const;
    JobSet early_jobs(int universe, Side side) const;
};

// Visits all 13^|cover| fingerprints through a mixed-radix counter, first job least
// significant. Stops early when the visitor returns false; returns the number visited.
uint64_t enumerate_fingerprints(const JobSet& cover, const std::function<bool(const Fingerprint&)>& visitor);

// Pads the instance with isolated jobs up to m * deadline jobs. Throws InstanceError
// when it already has more.
Instance make_tight(const Instance& inst, int deadline);

}  // namespace usched::vc
