#pragma once

#include <cstdint>

namespace wedgelab {

// splitmix64: tiny deterministic generator with identical streams on every
// platform, so seeded runs are byte-reproducible.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    // uniform in [0, n), n > 0; rejection sampling avoids modulo bias
    std::uint64_t below(std::uint64_t n) {
        const std::uint64_t cutoff = (0ull - n) % n;  // 2^64 mod n
        std::uint64_t v = next();
        while (v < cutoff) v = next();
        return v % n;
    }

    // uniform in [lo, hi] inclusive
    long range(long lo, long hi) {
        return lo + static_cast<long>(below(static_cast<std::uint64_t>(hi - lo + 1)));
    }

    // derive an independent stream deterministically
    static std::uint64_t mix(std::uint64_t a, std::uint64_t b) {
        Rng r(a ^ (b * 0x9e3779b97f4a7c15ull + 0x632be59bd9b4e019ull));
        return r.next();
    }

  private:
    std::uint64_t state_;
};

}  // namespace wedgelab
