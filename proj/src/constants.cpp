#include "ngso/constants.hpp"

#include <cmath>

namespace ngso::constants {

double norm_deg(double deg) {
    double d = std::fmod(deg, 360.0);
    if (d < 0.0) {
        d += 360.0;
    }
    return d;
}

double wrap_pi(double rad) {
    double r = std::fmod(rad + kPi, 2.0 * kPi);
    if (r < 0.0) {
        r += 2.0 * kPi;
    }
    return r - kPi;
}

}  // namespace ngso::constants
