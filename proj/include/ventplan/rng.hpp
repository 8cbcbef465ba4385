#pragma once

#include <cmath>
#include <cstdint>
#include <random>

namespace ventplan {

// Deterministic RNG wrapper. The engine (mt19937_64) is fully specified by
// the standard; the distribution transforms are hand-rolled here because the
// std:: distributions are implementation-defined, which would break the
// byte-identical-output contract across toolchains.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : eng_(mix(seed)) {}

    // Independent stream derived from (seed, a, b). Used to pre-split RNG per
    // individual so serial and parallel runs see identical streams.
    static Rng fork(std::uint64_t seed, std::uint64_t a, std::uint64_t b = 0) {
        std::uint64_t s = mix(seed ^ mix(a + 0x9e3779b97f4a7c15ULL));
        return Rng(s ^ mix(b + 0x7f4a7c159e3779b9ULL));
    }

    // Uniform in [0, 1).
    double uniform() {
        return static_cast<double>(eng_() >> 11) * 0x1.0p-53;
    }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    // Uniform integer in [lo, hi] inclusive.
    int uniform_int(int lo, int hi) {
        auto span = static_cast<std::uint64_t>(hi - lo) + 1;
        return lo + static_cast<int>(eng_() % span);
    }

    std::size_t index(std::size_t n) { return static_cast<std::size_t>(eng_() % n); }

    bool bernoulli(double p) { return uniform() < p; }

    // Standard normal via Marsaglia polar; one spare value is cached.
    double normal() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        double u, v, s;
        do {
            u = 2.0 * uniform() - 1.0;
            v = 2.0 * uniform() - 1.0;
            s = u * u + v * v;
        } while (s >= 1.0 || s == 0.0);
        double m = std::sqrt(-2.0 * std::log(s) / s);
        spare_ = v * m;
        have_spare_ = true;
        return u * m;
    }

    std::uint64_t bits() { return eng_(); }

  private:
    // splitmix64 finalizer; spreads low-entropy seeds over the full state.
    static std::uint64_t mix(std::uint64_t x) {
        x += 0x9e3779b97f4a7c15ULL;
        x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
        x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
        return x ^ (x >> 31);
    }

    std::mt19937_64 eng_;
    double spare_ = 0.0;
    bool have_spare_ = false;
};

}  // namespace ventplan
