#pragma once

#include <cmath>
#include <limits>

#include "pulsetrain/errors.hpp"

namespace pulsetrain::detail {

/// Throws ResonancePole if |denominator| <= guard. Denominators are
/// differences of optical frequencies of size `scale`, so anything within a
/// few ulp of `scale` is indistinguishable from the pole itself.
inline double checked_denominator(Pole pole, double denominator, double guard, double scale) {
    const double floor = 4.0 * std::numeric_limits<double>::epsilon() * scale;
    if (!(std::abs(denominator) > guard) || !(std::abs(denominator) > floor)) {
        throw ResonancePole(pole, denominator, guard);
    }
    return denominator;
}

inline void check_guard(double guard) {
    if (!std::isfinite(guard) || guard < 0.0) throw InvalidArgument("guard band must be finite and >= 0");
}

}  // namespace pulsetrain::detail
