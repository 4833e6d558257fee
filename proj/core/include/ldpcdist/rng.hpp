#pragma once

#include <cstdint>
#include <numeric>
#include <vector>

namespace ldpcdist {

/// SplitMix64 stream. Fully specified so that sampled matrices and covering
/// schedules are bit-identical across platforms and thread counts.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    /// Child stream rule: child(seed, i) seeds a new stream with
    /// mix(seed + (i+1) * golden). Used for per-trial and per-block streams.
    static Rng child(std::uint64_t master, std::uint64_t stream) {
        return Rng(mix(master + (stream + 1) * 0x9e3779b97f4a7c15ull));
    }

    std::uint64_t next() {
        state_ += 0x9e3779b97f4a7c15ull;
        return mix(state_);
    }

    /// Uniform in [0, n); rejection sampling, no modulo bias.
    std::uint64_t below(std::uint64_t n) {
        std::uint64_t limit = ~std::uint64_t(0) - (~std::uint64_t(0) % n);
        std::uint64_t x;
        do { x = next(); } while (x >= limit);
        return x % n;
    }

    /// Fisher-Yates.
    template <typename T>
    void shuffle(std::vector<T>& v) {
        for (std::size_t i = v.size(); i > 1; --i)
            std::swap(v[i - 1], v[below(i)]);
    }

    /// Uniform s-subset of {0..n-1} via partial Fisher-Yates; unsorted.
    std::vector<std::size_t> subset(std::size_t n, std::size_t s) {
        std::vector<std::size_t> idx(n);
        std::iota(idx.begin(), idx.end(), 0);
        for (std::size_t i = 0; i < s; ++i)
            std::swap(idx[i], idx[i + below(n - i)]);
        idx.resize(s);
        return idx;
    }

private:
    static std::uint64_t mix(std::uint64_t z) {
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    std::uint64_t state_;
};

} // namespace ldpcdist
