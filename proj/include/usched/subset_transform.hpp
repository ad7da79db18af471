#pragma once

// Zeta/Moebius transforms and ranked subset convolution over 2^n tables indexed by
// bitmask. Arithmetic is in the unsigned ring of T; results are exact whenever the
// true values fit in T, which callers check against their own bounds.

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace usched {

inline constexpr int kMaxSubsetBits = 26;

namespace detail {

// Butterflies for `bits` consecutive dimensions starting at `low` in one sweep.
// Sign +1 is the zeta transform, -1 the Moebius transform.
template <class T, int Sign>
void transform_dims(T* a, std::size_t size, int low, int bits) {
    const std::size_t h = std::size_t{1} << low;
    const std::size_t span = h << bits;
    const std::size_t lanes = std::size_t{1} << bits;
    const std::size_t tile = std::min<std::size_t>(h, 512);
    for (std::size_t base = 0; base < size; base += span) {
        // tiles of the 2^bits lanes stay in L1 while all processed dimensions run
        for (std::size_t j0 = 0; j0 < h; j0 += tile) {
            for (int b = 0; b < bits; ++b) {
                const std::size_t step = std::size_t{1} << b;
                for (std::size_t k = 0; k < lanes; ++k) {
                    if (!(k & step)) continue;
                    T* dst = a + base + k * h + j0;
                    const T* src = a + base + (k ^ step) * h + j0;
                    for (std::size_t j = 0; j < tile; ++j) {
                        if constexpr (Sign > 0)
                            dst[j] += src[j];
                        else
                            dst[j] -= src[j];
                    }
                }
            }
        }
    }
}

template <class T, int Sign>
void transform_low_block(T* a, std::size_t size, int block_bits) {
    const std::size_t block = std::size_t{1} << block_bits;
    for (std::size_t base = 0; base < size; base += block) {
        T* blk = a + base;
        for (int b = 0; b < block_bits; ++b) {
            const std::size_t h = std::size_t{1} << b;
            for (std::size_t i = 0; i < block; i += 2 * h)
                for (std::size_t j = i; j < i + h; ++j) {
                    if constexpr (Sign > 0)
                        blk[j + h] += blk[j];
                    else
                        blk[j + h] -= blk[j];
                }
        }
    }
}

template <class T, int Sign>
void subset_transform(std::span<T> a, int n) {
    constexpr int kBlockBits = 12;  // 2^12 entries stay cache resident
    const int low = std::min(n, kBlockBits);
    transform_low_block<T, Sign>(a.data(), a.size(), low);
    for (int b = low; b < n; b += 3) transform_dims<T, Sign>(a.data(), a.size(), b, std::min(3, n - b));
}

}  // namespace detail

// a[S] <- sum over T subset of S of a[T].
template <class T>
void zeta_in_place(std::span<T> a, int n) {
    detail::subset_transform<T, +1>(a, n);
}

// Exact inverse of zeta_in_place.
template <class T>
void moebius_in_place(std::span<T> a, int n) {
    detail::subset_transform<T, -1>(a, n);
}

// Ranked zeta transforms of a table, one table per popcount rank 0..max_rank.
template <class T>
std::vector<std::vector<T>> ranked_zeta(std::span<const T> f, int n, int max_rank) {
    const std::size_t size = std::size_t{1} << n;
    std::vector<std::vector<T>> ranks(max_rank + 1);
    for (int k = 0; k <= max_rank; ++k) {
        auto& r = ranks[k];
        r.assign(size, T{0});
        for (std::size_t s = 0; s < size; ++s)
            if (std::popcount(s) == k) r[s] = f[s];
        zeta_in_place<T>(r, n);
    }
    return ranks;
}

// (f * g)(S) = sum over T subset of S of f(T) g(S \ T), by ranked zeta transforms,
// pointwise polynomial products truncated at out_max_rank, and ranked Moebius.
// f_hat / g_hat are ranked_zeta images of f and g; f_hat is consumed.
template <class T>
std::vector<T> ranked_convolve(std::vector<std::vector<T>> f_hat, const std::vector<std::vector<T>>& g_hat,
                               int n, int out_max_rank) {
    const std::size_t size = std::size_t{1} << n;
    const int f_ranks = static_cast<int>(f_hat.size());
    const int g_ranks = static_cast<int>(g_hat.size());
    out_max_rank = std::min(out_max_rank, f_ranks - 1 + g_ranks - 1);
    out_max_rank = std::min(out_max_rank, n);
    while (static_cast<int>(f_hat.size()) <= out_max_rank) f_hat.emplace_back(size, T{0});

    // Pointwise product, written in place from the highest rank down so that the
    // lower f ranks it still needs are untouched.
    constexpr std::size_t kChunk = 2048;
    T acc[kChunk];
    for (std::size_t base = 0; base < size; base += kChunk) {
        const std::size_t len = std::min(kChunk, size - base);
        for (int k = out_max_rank; k >= 0; --k) {
            std::fill(acc, acc + len, T{0});
            const int j_lo = std::max(0, k - (f_ranks - 1));
            const int j_hi = std::min(k, g_ranks - 1);
            for (int j = j_lo; j <= j_hi; ++j) {
                const T* fr = f_hat[k - j].data() + base;
                const T* gr = g_hat[j].data() + base;
                for (std::size_t i = 0; i < len; ++i) acc[i] += fr[i] * gr[i];
            }
            std::copy(acc, acc + len, f_hat[k].data() + base);
        }
    }

    std::vector<T> out(size, T{0});
    for (int k = 0; k <= out_max_rank; ++k) {
        moebius_in_place<T>(f_hat[k], n);
        for (std::size_t s = 0; s < size; ++s)
            if (std::popcount(s) == k) out[s] = f_hat[k][s];
        std::vector<T>().swap(f_hat[k]);
    }
    return out;
}

}  // namespace usched
