#include "usched/vc/fingerprint.hpp"

#include <string>

#include "usched/errors.hpp"

namespace usched::vc {

uint8_t encode(const CoverState& s) {
    if (s.side == Side::middle) return 0;
    int code = 1 + 2 * static_cast<int>(s.cls) + (s.early ? 0 : 1);
    return static_cast<uint8_t>(s.side == Side::left ? code : code + 6);
}

CoverState decode(uint8_t code) {
    CoverState s;
    if (code == 0) return s;
    int local = code - 1;
    s.side = local < 6 ? Side::left : Side::right;
    local %= 6;
    s.cls = static_cast<CoverClass>(local / 2);
    s.early = local % 2 == 0;
    return s;
}

JobSet Fingerprint::side_jobs(int universe, Side side) const {
    JobSet out(universe);
    for (std::size_t i = 0; i < jobs.size(); ++i)
        if (state(i).side == side) out.set(jobs[i]);
    return out;
}

JobSet Fingerprint::class_jobs(int universe, Side side, CoverClass cls) const {
    JobSet out(universe);
    for (std::size_t i = 0; i < jobs.size(); ++i) {
        CoverState s = state(i);
        if (s.side == side && s.cls == cls) out.set(jobs[i]);
    }
    return out;
}

JobSet Fingerprint::early_jobs(int universe, Side side) const {
    JobSet out(universe);
    for (std::size_t i = 0; i < jobs.size(); ++i) {
        CoverState s = state(i);
        if (s.side == side && s.early) out.set(jobs[i]);
    }
    return out;
}

uint64_t enumerate_fingerprints(const JobSet& cover, const std::function<bool(const Fingerprint&)>& visitor) {
    Fingerprint f;
    f.jobs = cover.to_vector();
    f.codes.assign(f.jobs.size(), 0);
    uint64_t visited = 0;
    while (true) {
        ++visited;
        if (!visitor(f)) return visited;
        std::size_t i = 0;
        while (i < f.codes.size() && f.codes[i] == kFingerprintStates - 1) f.codes[i++] = 0;
        if (i == f.codes.size()) return visited;
        ++f.codes[i];
    }
}

Instance make_tight(const Instance& inst, int deadline) {
    const int64_t capacity = int64_t{inst.machine_count()} * deadline;
    if (deadline < 0 || inst.job_count() > capacity)
        throw InstanceError("make_tight: " + std::to_string(inst.job_count()) + " jobs exceed " +
                            std::to_string(capacity) + " positions");
    return inst.with_isolated_jobs(static_cast<int>(capacity - inst.job_count()));
}

}  // namespace usched::vc
