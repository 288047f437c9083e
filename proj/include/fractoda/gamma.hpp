#pragma once

namespace fractoda {

/// Gamma function for real x > 0, accurate to at least 10 significant
/// digits (Lanczos approximation, g = 7; reflection below 0.5; exact
/// factorial values at small integer arguments).
/// Throws std::domain_error for x <= 0 or non-finite x.
double gamma_fn(double x);

}  // namespace fractoda
