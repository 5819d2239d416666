#pragma once

#include <cmath>
#include <cstdint>
#include <random>
#include <string_view>

namespace photonbox {

/// Deterministic random source with a pinned bit stream.
///
/// Uniform doubles are built from the top 53 bits of each mt19937_64 word and
/// normals come from the trigonometric Box-Muller transform, so identical
/// seeds reproduce identical draw sequences on every platform. The standard
/// library distributions are deliberately avoided: their output is not
/// specified and differs between implementations.
class SeededGenerator {
public:
    static constexpr std::string_view algorithm = "mt19937_64-u53-boxmuller";

    explicit SeededGenerator(std::uint64_t seed) : engine_(seed), seed_(seed) {}

    std::uint64_t seed() const { return seed_; }

    std::uint64_t next_u64() { return engine_(); }

    /// Uniform in [0, 1) with 53-bit resolution.
    double uniform() {
        return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    }

    /// Standard normal deviate; draws two uniforms on every other call.
    double normal() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        // 1 - u keeps the log argument in (0, 1].
        const double r = std::sqrt(-2.0 * std::log(1.0 - uniform()));
        const double theta = 6.283185307179586476925286766559 * uniform();
        spare_ = r * std::sin(theta);
        have_spare_ = true;
        return r * std::cos(theta);
    }

    /// Independent stream for a numbered trial: seed offset by the index.
    SeededGenerator derived(std::uint64_t trial_index) const {
        return SeededGenerator(seed_ + trial_index);
    }

private:
    std::mt19937_64 engine_;
    std::uint64_t seed_;
    double spare_ = 0.0;
    bool have_spare_ = false;
};

}  // namespace photonbox
