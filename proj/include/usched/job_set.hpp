#pragma once

#include <bit>
#include <cassert>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

namespace usched {

// Dense set of job indices [0, universe) backed by 64-bit words.
class JobSet {
public:
    JobSet() = default;
    explicit JobSet(int universe) : universe_(universe), words_((universe + 63) / 64, 0) {}

    static JobSet full(int universe) {
        JobSet s(universe);
        for (int w = 0; w < static_cast<int>(s.words_.size()); ++w) s.words_[w] = ~uint64_t{0};
        s.trim();
        return s;
    }

    static JobSet from_mask(int universe, uint64_t mask) {
        assert(universe <= 64);
        JobSet s(universe);
        if (!s.words_.empty()) s.words_[0] = mask;
        s.trim();
        return s;
    }

    int universe() const { return universe_; }

    bool test(int j) const { return (words_[j >> 6] >> (j & 63)) & 1u; }
    void set(int j) { words_[j >> 6] |= uint64_t{1} << (j & 63); }
    void reset(int j) { words_[j >> 6] &= ~(uint64_t{1} << (j & 63)); }
    void clear() { std::fill(words_.begin(), words_.end(), 0); }

    int count() const {
        int c = 0;
        for (uint64_t w : words_) c += std::popcount(w);
        return c;
    }
    bool empty() const {
        for (uint64_t w : words_)
            if (w) return false;
        return true;
    }
    bool any() const { return !empty(); }

    // Lowest member, or -1.
    int first() const {
        for (std::size_t w = 0; w < words_.size(); ++w)
            if (words_[w]) return static_cast<int>(w * 64) + std::countr_zero(words_[w]);
        return -1;
    }

    bool intersects(const JobSet& o) const {
        for (std::size_t w = 0; w < words_.size(); ++w)
            if (words_[w] & o.words_[w]) return true;
        return false;
    }
    bool is_subset_of(const JobSet& o) const {
        for (std::size_t w = 0; w < words_.size(); ++w)
            if (words_[w] & ~o.words_[w]) return false;
        return true;
    }

    JobSet& operator|=(const JobSet& o) {
        for (std::size_t w = 0; w < words_.size(); ++w) words_[w] |= o.words_[w];
        return *this;
    }
    JobSet& operator&=(const JobSet& o) {
        for (std::size_t w = 0; w < words_.size(); ++w) words_[w] &= o.words_[w];
        return *this;
    }
    JobSet& operator-=(const JobSet& o) {
        for (std::size_t w = 0; w < words_.size(); ++w) words_[w] &= ~o.words_[w];
        return *this;
    }
    friend JobSet operator|(JobSet a, const JobSet& b) { return a |= b; }
    friend JobSet operator&(JobSet a, const JobSet& b) { return a &= b; }
    friend JobSet operator-(JobSet a, const JobSet& b) { return a -= b; }
    JobSet complement() const {
        JobSet s(universe_);
        for (std::size_t w = 0; w < words_.size(); ++w) s.words_[w] = ~words_[w];
        s.trim();
        return s;
    }

    bool operator==(const JobSet& o) const = default;

    // Only valid for universes of at most 64 jobs.
    uint64_t to_mask() const {
        assert(universe_ <= 64);
        return words_.empty() ? 0 : words_[0];
    }

    std::vector<int> to_vector() const {
        std::vector<int> out;
        out.reserve(count());
        for_each([&](int j) { out.push_back(j); });
        return out;
    }

    template <class F>
    void for_each(F&& f) const {
        for (std::size_t w = 0; w < words_.size(); ++w) {
            uint64_t bits = words_[w];
            while (bits) {
                f(static_cast<int>(w * 64) + std::countr_zero(bits));
                bits &= bits - 1;
            }
        }
    }

    const std::vector<uint64_t>& words() const { return words_; }

    std::size_t hash() const {
        std::size_t h = static_cast<std::size_t>(universe_) * 0x9E3779B97F4A7C15ull;
        for (uint64_t w : words_) h = (h ^ w) * 0x100000001B3ull + (h >> 29);
        return h;
    }

private:
    void trim() {
        if (universe_ % 64 != 0 && !words_.empty())
            words_.back() &= (uint64_t{1} << (universe_ % 64)) - 1;
    }

    int universe_ = 0;
    std::vector<uint64_t> words_;
};

struct JobSetHash {
    std::size_t operator()(const JobSet& s) const { return s.hash(); }
};

}  // namespace usched
