#pragma once

#include <cstdint>
#include <random>

namespace ctrx {

// mt19937_64 with an explicit bits-to-double map, so sampled values are
// identical across standard library implementations.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}

    double uniform(double lo, double hi) {
        const double u = static_cast<double>(gen_() >> 11) * 0x1.0p-53;
        return lo + (hi - lo) * u;
    }

    bool coin() { return (gen_() & 1ull) != 0; }

  private:
    std::mt19937_64 gen_;
};

}  // namespace ctrx
