#pragma once

#include <cstdint>
#include <vector>

namespace minconn {

// SplitMix64 generator. The exact output sequence for a given seed is part
// of the artifact contract: identical seeds reproduce identical hypergraphs,
// processes, and colorings on every platform. Do not swap in std::
// distributions here; their outputs are implementation-defined.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    // Uniform-ish value in [0, bound). Modulo bias is irrelevant at the
    // bounds used here; determinism is what matters.
    std::uint64_t below(std::uint64_t bound) { return next() % bound; }

    std::size_t index(std::size_t size) {
        return static_cast<std::size_t>(below(static_cast<std::uint64_t>(size)));
    }

    bool coin() { return (next() & 1ULL) != 0; }

    template <class T>
    void shuffle(std::vector<T>& items) {
        for (std::size_t i = items.size(); i > 1; --i) {
            std::size_t j = index(i);
            std::swap(items[i - 1], items[j]);
        }
    }

private:
    std::uint64_t state_;
};

} // namespace minconn
