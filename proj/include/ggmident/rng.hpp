#ifndef GGMIDENT_RNG_HPP
#define GGMIDENT_RNG_HPP

#include <cstdint>
#include <random>

namespace ggmident {

/// Seedable random source with portable output: the mt19937_64 engine has
/// a standard-specified sequence, and the uniform / normal mappings below
/// are fixed here rather than delegated to implementation-defined
/// std distributions. Streams with equal seeds match across platforms.
class Rng {
public:
    /// Identity string recorded in generated-model metadata.
    static constexpr const char* kIdentity = "mt19937_64/box-muller";

    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    /// Uniform on [0, 1) with 53 random mantissa bits.
    double uniform01();

    /// Uniform on [lo, hi).
    double uniform(double lo, double hi);

    /// Uniform integer on [lo, hi], inclusive, by rejection sampling.
    int uniform_int(int lo, int hi);

    /// Standard normal via Box-Muller; the paired draw is cached.
    double normal();

    std::uint64_t next_u64() { return engine_(); }

private:
    std::mt19937_64 engine_;
    bool have_spare_ = false;
    double spare_ = 0.0;
};

}  // namespace ggmident

#endif  // GGMIDENT_RNG_HPP
