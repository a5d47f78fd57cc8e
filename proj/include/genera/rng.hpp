#pragma once

#include <cstdint>

namespace genera {

// splitmix64; fixed algorithm so seeded runs are reproducible everywhere
// (std::uniform_int_distribution is implementation-defined, so not used).
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // uniform in [0, n), n > 0; modulo bias is irrelevant for test generation
    std::uint64_t below(std::uint64_t n) { return next() % n; }

    // uniform in [lo, hi]
    long range(long lo, long hi) {
        return lo + static_cast<long>(below(static_cast<std::uint64_t>(hi - lo + 1)));
    }

private:
    std::uint64_t state_;
};

}  // namespace genera
