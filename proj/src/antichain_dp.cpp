#include "usched/antichain_dp.hpp"

#include <bit>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <unordered_set>

#include "usched/errors.hpp"

namespace usched {

namespace {

struct StateKey {
    uint64_t set;
    int slots;
    bool operator==(const StateKey&) const = default;
};

struct StateKeyHash {
    std::size_t operator()(const StateKey& k) const {
        return std::hash<uint64_t>{}(k.set * 0x9E3779B97F4A7C15ull + static_cast<uint64_t>(k.slots));
    }
};

struct Entry {
    bool feasible = false;
    uint64_t last_slot = 0;  // the X achieving the maximum
};

class AntichainDp {
public:
    explicit AntichainDp(const Instance& inst) : n_(inst.job_count()), m_(inst.machine_count()) {
        if (n_ > kAntichainDpMaxJobs)
            throw CapacityError("antichain DP supports at most 64 jobs, got " + std::to_string(n_));
        pred_.resize(n_);
        succ_.resize(n_);
        for (int v = 0; v < n_; ++v) {
            pred_[v] = inst.pred(v).to_mask();
            succ_[v] = inst.succ(v).to_mask();
        }
    }

    uint64_t all() const { return n_ == 64 ? ~uint64_t{0} : (uint64_t{1} << n_) - 1; }

    uint64_t sinks(uint64_t x) const {
        uint64_t out = 0;
        for (uint64_t r = x; r; r &= r - 1) {
            int v = std::countr_zero(r);
            if (!(succ_[v] & x)) out |= uint64_t{1} << v;
        }
        return out;
    }

    uint64_t closure(uint64_t b) const {
        uint64_t out = b;
        for (uint64_t r = b; r; r &= r - 1) out |= pred_[std::countr_zero(r)];
        return out;
    }

    bool antichain(uint64_t b) const {
        for (uint64_t r = b; r; r &= r - 1)
            if (succ_[std::countr_zero(r)] & b) return false;
        return true;
    }

    bool eval(uint64_t b, int t) {
        if (b == 0) return true;
        if (t == 0) return false;
        auto it = memo_.find({b, t});
        if (it != memo_.end()) return it->second.feasible;
        seen_.insert(b);

        const uint64_t down = closure(b);
        Entry entry;
        if (std::popcount(down) <= int64_t{m_} * t) {
            // decreasing submasks, the empty set (an idle slot) last
            for (uint64_t x = b;; x = (x - 1) & b) {
                if (std::popcount(x) <= m_) {
                    const uint64_t rest = down & ~x;
                    const uint64_t next = sinks(rest);
                    if (!antichain(next) || closure(next) != rest)
                        throw std::logic_error("antichain DP: successor state is not an antichain basis");
                    if (eval(next, t - 1)) {
                        entry.feasible = true;
                        entry.last_slot = x;
                        break;
                    }
                }
                if (x == 0) break;
            }
        }
        memo_.emplace(StateKey{b, t}, entry);
        return entry.feasible;
    }

    Schedule witness(uint64_t b, int t) const {
        Schedule sched;
        sched.slots.resize(t);
        for (; t > 0 && b != 0; --t) {
            uint64_t x = memo_.at({b, t}).last_slot;
            for (uint64_t r = x; r; r &= r - 1) sched.slots[t - 1].push_back(std::countr_zero(r));
            b = sinks(closure(b) & ~x);
        }
        return sched;
    }

    uint64_t states() const { return seen_.size(); }

private:
    int n_;
    int m_;
    std::vector<uint64_t> pred_;
    std::vector<uint64_t> succ_;
    std::unordered_map<StateKey, Entry, StateKeyHash> memo_;
    std::unordered_set<uint64_t> seen_;
};

}  // namespace

AntichainDpResult solve_antichain_dp(const Instance& inst, int deadline) {
    if (deadline < 0) throw std::invalid_argument("deadline must be nonnegative");
    AntichainDp dp(inst);
    const uint64_t top = dp.sinks(dp.all());
    AntichainDpResult result;
    result.feasible = dp.eval(top, deadline);
    if (result.feasible) result.witness = dp.witness(top, deadline);
    result.states = dp.states();
    return result;
}

SolveResult min_makespan_antichain_dp(const Instance& inst) {
    AntichainDp dp(inst);
    const uint64_t top = dp.sinks(dp.all());
    int t = makespan_lower_bound(inst);
    while (!dp.eval(top, t)) ++t;
    return {t, dp.witness(top, t)};
}

}  // namespace usched
