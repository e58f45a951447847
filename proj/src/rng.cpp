#include "ggmident/rng.hpp"

#include <cmath>
#include <numbers>

#include "ggmident/errors.hpp"

namespace ggmident {

double Rng::uniform01() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

double Rng::uniform(double lo, double hi) {
    if (!(lo <= hi)) throw InvalidSpec("uniform range is empty");
    return lo + (hi - lo) * uniform01();
}

int Rng::uniform_int(int lo, int hi) {
    if (lo > hi) throw InvalidSpec("uniform_int range is empty");
    const std::uint64_t span = static_cast<std::uint64_t>(hi) - static_cast<std::uint64_t>(lo) + 1;
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                                std::numeric_limits<std::uint64_t>::max() % span;
    std::uint64_t draw;
    do {
        draw = engine_();
    } while (draw >= limit);
    return lo + static_cast<int>(draw % span);
}

double Rng::normal() {
    if (have_spare_) {
        have_spare_ = false;
        return spare_;
    }
    // Box-Muller; u is kept away from 0 so the log stays finite.
    double u;
    do {
        u = uniform01();
    } while (u <= 0.0);
    const double v = uniform01();
    const double radius = std::sqrt(-2.0 * std::log(u));
    const double angle = 2.0 * std::numbers::pi * v;
    spare_ = radius * std::sin(angle);
    have_spare_ = true;
    return radius * std::cos(angle);
}

}  // namespace ggmident
