#pragma once

#include <cmath>
#include <complex>

namespace feuler::detail {

// cos(pi r) and sin(pi r) with the argument reduced exactly in units of half
// turns (fmod on doubles is exact), so quarter-turn points come out as exact
// 0 / +-1. Oscillatory phases e^{i pi y} built from these cancel bitwise in
// conjugate pairs.
inline void cos_sin_pi(double r, double& c, double& s) {
    r = std::fmod(r, 2.0);  // (-2, 2)
    if (r < 0) r += 2.0;    // [0, 2)
    int quadrant = 0;       // quarter-turn rotations to apply afterwards
    while (r >= 0.5) {
        r -= 0.5;
        ++quadrant;
    }
    double cb, sb;
    if (r == 0.0) {
        cb = 1.0;
        sb = 0.0;
    } else if (r == 0.25) {
        cb = sb = 0.70710678118654752440;
    } else {
        cb = std::cos(M_PI * r);
        sb = std::sin(M_PI * r);
    }
    switch (quadrant & 3) {
        case 0: c = cb;  s = sb;  break;
        case 1: c = -sb; s = cb;  break;
        case 2: c = -cb; s = -sb; break;
        default: c = sb; s = -cb; break;
    }
}

// e^{i pi half_turns}
inline std::complex<double> unit_phase(double half_turns) {
    double c, s;
    cos_sin_pi(half_turns, c, s);
    return {c, s};
}

// (pi i)^k = pi^k i^k with the i^k cycle handled exactly.
inline std::complex<double> pi_i_pow(int k) {
    const double p = std::pow(M_PI, k);
    switch (((k % 4) + 4) % 4) {
        case 0: return {p, 0.0};
        case 1: return {0.0, p};
        case 2: return {-p, 0.0};
        default: return {0.0, -p};
    }
}

}  // namespace feuler::detail
