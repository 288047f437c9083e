#pragma once

// Shared generators and comparison helpers for the unit tests.  All
// randomness is seeded explicitly so failures reproduce.

#include <algorithm>
#include <array>
#include <complex>
#include <random>

#include "fractoda/types.hpp"

namespace testutil {

using fractoda::EigenSet;
using fractoda::Equilibrium;
using fractoda::ParamSet;
using fractoda::State5;

inline double draw_uniform(std::mt19937_64& rng, double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(rng);
}

/// Magnitude in [0.05, limit] with a random sign: stays clear of the
/// nonzero-parameter constraint.
inline double draw_nonzero(std::mt19937_64& rng, double limit = 2.0) {
    const double mag = draw_uniform(rng, 0.05, limit);
    return (rng() & 1u) ? mag : -mag;
}

inline ParamSet draw_params(std::mt19937_64& rng) {
    ParamSet p;
    p.a = draw_nonzero(rng);
    p.b = draw_nonzero(rng);
    p.c1 = draw_nonzero(rng);
    p.c2 = draw_nonzero(rng);
    p.c3 = draw_nonzero(rng);
    p.q = draw_uniform(rng, 0.05, 0.95);
    return p;
}

inline State5 draw_state(std::mt19937_64& rng, double box) {
    return {draw_uniform(rng, -box, box), draw_uniform(rng, -box, box),
            draw_uniform(rng, -box, box), draw_uniform(rng, -box, box),
            draw_uniform(rng, -box, box)};
}

inline std::array<std::complex<double>, 5> sorted_values(const EigenSet& e) {
    auto s = e.lambdas;
    std::sort(s.begin(), s.end(), [](const auto& a, const auto& b) {
        if (a.real() != b.real()) return a.real() < b.real();
        return a.imag() < b.imag();
    });
    return s;
}

/// Max pairing distance between two spectra after sorting by (re, im).
inline double spectrum_gap(const EigenSet& lhs, const EigenSet& rhs) {
    const auto a = sorted_values(lhs);
    const auto b = sorted_values(rhs);
    double gap = 0.0;
    for (std::size_t i = 0; i < 5; ++i) gap = std::max(gap, std::abs(a[i] - b[i]));
    return gap;
}

}  // namespace testutil
