#pragma once

#include <cstdint>
#include <random>
#include <utility>
#include <vector>

namespace fae {

// Seeded RNG with hand-rolled draws. mt19937_64 output is pinned by the
// standard; std:: distributions and std::shuffle are not, and every output
// of this project must be reproducible byte-for-byte across platforms.
class Rng {
public:
    explicit Rng(uint64_t seed) : gen_(seed) {}

    uint64_t next() { return gen_(); }

    uint64_t bounded(uint64_t n) { return n == 0 ? 0 : next() % n; }

    // Uniform in [0,1) with 53 bits of precision.
    double uniform01() { return static_cast<double>(next() >> 11) * (1.0 / 9007199254740992.0); }

    // Uniform integer in [lo, hi], inclusive.
    int64_t range(int64_t lo, int64_t hi) {
        return lo + static_cast<int64_t>(bounded(static_cast<uint64_t>(hi - lo + 1)));
    }

    // Fisher-Yates.
    template <typename T>
    void shuffle(std::vector<T>& v) {
        for (size_t i = v.size(); i > 1; --i) {
            size_t j = static_cast<size_t>(bounded(i));
            std::swap(v[i - 1], v[j]);
        }
    }

private:
    std::mt19937_64 gen_;
};

} // namespace fae
