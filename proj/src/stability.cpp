#include "fractoda/stability.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace fractoda {

namespace {

using Complex = std::complex<double>;
using CMat5 = std::array<std::array<Complex, 5>, 5>;

constexpr int kMatrixOrder = 5;
constexpr int kSweepBudget = 100 * kMatrixOrder;
constexpr double kTriangularTol = 1e-14;
// A handful of ulps above machine epsilon: a near-perfect shift can park a
// subdiagonal entry at ~20 eps of the local scale, where a bare-eps test
// never fires and the sweep keeps stirring it.
constexpr double kDeflationEps = 8.0 * 2.220446049250313e-16;

bool is_triangular(const Mat5& m, double tol, bool upper) {
    for (int r = 0; r < kMatrixOrder; ++r) {
        for (int c = 0; c < kMatrixOrder; ++c) {
            const bool below = r > c;
            if ((upper && below && std::fabs(m[r][c]) > tol) ||
                (!upper && !below && r != c && std::fabs(m[r][c]) > tol)) {
                return false;
            }
        }
    }
    return true;
}

double frobenius(const Mat5& m) {
    double s = 0.0;
    for (const auto& row : m)
        for (double v : row) s += v * v;
    return std::sqrt(s);
}

// Real Householder reduction to upper Hessenberg form (in place).
void hessenberg_reduce(Mat5& h) {
    for (int k = 0; k + 2 < kMatrixOrder; ++k) {
        double col_norm = 0.0;
        for (int i = k + 1; i < kMatrixOrder; ++i) col_norm += h[i][k] * h[i][k];
        col_norm = std::sqrt(col_norm);
        if (col_norm == 0.0) continue;

        const double alpha = (h[k + 1][k] >= 0.0) ? -col_norm : col_norm;
        std::array<double, 5> v{};
        double vnorm2 = 0.0;
        for (int i = k + 1; i < kMatrixOrder; ++i) {
            v[i] = h[i][k];
            if (i == k + 1) v[i] -= alpha;
            vnorm2 += v[i] * v[i];
        }
        if (vnorm2 <= 0.0) continue;

        // H <- P H P with P = I - 2 v v^T / (v^T v)
        for (int c = 0; c < kMatrixOrder; ++c) {
            double dot = 0.0;
            for (int i = k + 1; i < kMatrixOrder; ++i) dot += v[i] * h[i][c];
            const double f = 2.0 * dot / vnorm2;
            for (int i = k + 1; i < kMatrixOrder; ++i) h[i][c] -= f * v[i];
        }
        for (int r = 0; r < kMatrixOrder; ++r) {
            double dot = 0.0;
            for (int i = k + 1; i < kMatrixOrder; ++i) dot += h[r][i] * v[i];
            const double f = 2.0 * dot / vnorm2;
            for (int i = k + 1; i < kMatrixOrder; ++i) h[r][i] -= f * v[i];
        }
    }
}

struct Givens {
    Complex cf, cg;  // conj(f)/r, conj(g)/r
    Complex fn, gn;  // f/r, g/r
};

// Unitary 2x2 G with G * (f, g)^T = (r, 0)^T.
Givens make_givens(Complex f, Complex g) {
    const double r = std::hypot(std::abs(f), std::abs(g));
    if (r == 0.0) return {1.0, 0.0, 1.0, 0.0};
    return {std::conj(f) / r, std::conj(g) / r, f / r, g / r};
}

void apply_left(CMat5& h, const Givens& g, int row) {
    for (int j = 0; j < kMatrixOrder; ++j) {
        const Complex a = h[row][j];
        const Complex b = h[row + 1][j];
        h[row][j] = g.cf * a + g.cg * b;
        h[row + 1][j] = -g.gn * a + g.fn * b;
    }
}

void apply_right(CMat5& h, const Givens& g, int col) {
    for (int i = 0; i < kMatrixOrder; ++i) {
        const Complex a = h[i][col];
        const Complex b = h[i][col + 1];
        h[i][col] = a * g.fn + b * g.gn;
        h[i][col + 1] = -a * g.cg + b * g.cf;
    }
}

// Eigenvalue of the trailing 2x2 block closer to its (1,1) entry.
Complex wilkinson_shift(const CMat5& h, int hi) {
    const Complex a = h[hi - 1][hi - 1];
    const Complex b = h[hi - 1][hi];
    const Complex c = h[hi][hi - 1];
    const Complex d = h[hi][hi];
    const Complex half = 0.5 * (a - d);
    const Complex disc = std::sqrt(half * half + b * c);
    const Complex l1 = d + half + disc;
    const Complex l2 = d + half - disc;
    return (std::abs(l1 - d) < std::abs(l2 - d)) ? l1 : l2;
}

std::array<Complex, 5> diagonal(const CMat5& h) {
    std::array<Complex, 5> d{};
    for (int i = 0; i < kMatrixOrder; ++i) d[i] = h[i][i];
    return d;
}

}  // namespace

EigenSet eigvals_equilibrium(const Equilibrium& xe, const ParamSet& p, bool controlled) {
    require_valid(p);
    if (controlled) {
        return EigenSet::from({Complex(p.a), Complex(p.c1), Complex(p.c2),
                               Complex(p.c3 + xe.k), Complex(p.b - xe.k + xe.m)});
    }
    return EigenSet::from({Complex(p.a), Complex(0.0), Complex(0.0), Complex(xe.k),
                           Complex(xe.m - xe.k + p.b)});
}

EigenSet eigvals_general(const Mat5& m) {
    for (const auto& row : m) {
        for (double v : row) {
            if (!std::isfinite(v)) throw NonFiniteState("eigvals_general: non-finite entry");
        }
    }

    if (is_triangular(m, kTriangularTol, true) || is_triangular(m, kTriangularTol, false)) {
        std::array<Complex, 5> d{};
        for (int i = 0; i < kMatrixOrder; ++i) d[i] = Complex(m[i][i]);
        return EigenSet::from(d);
    }

    Mat5 real_h = m;
    hessenberg_reduce(real_h);
    const double scale = std::max(frobenius(real_h), 1e-300);

    CMat5 h{};
    for (int r = 0; r < kMatrixOrder; ++r)
        for (int c = 0; c < kMatrixOrder; ++c) h[r][c] = Complex(real_h[r][c]);

    int hi = kMatrixOrder - 1;
    int sweeps = 0;
    int stall = 0;
    while (hi > 0) {
        // Deflate negligible subdiagonal entries.  Under a prolonged stall
        // the threshold escalates: an entry the iteration cannot shrink any
        // further is already below meaningful precision (a near-perfect
        // shift leaves it at roundoff level, and a near-zero interior entry
        // degrades every later sweep).  The escalation is capped at
        // 1e-11 * scale, two orders inside the 1e-9 accuracy contract.
        double boost = 1.0;
        if (stall > 8) boost = std::pow(2.0, std::min(stall - 8, 40));
        for (int k = hi; k >= 1; --k) {
            double tol = kDeflationEps * (std::abs(h[k - 1][k - 1]) + std::abs(h[k][k]));
            if (tol == 0.0) tol = kDeflationEps * scale;
            tol = std::min(tol * boost, std::max(tol, 1e-11 * scale));
            if (std::abs(h[k][k - 1]) <= tol) h[k][k - 1] = 0.0;
        }
        if (h[hi][hi - 1] == 0.0) {
            --hi;
            stall = 0;
            continue;
        }
        int lo = hi;
        while (lo > 0 && h[lo][lo - 1] != 0.0) --lo;

        if (++sweeps > kSweepBudget) {
            throw NoConvergence("eigvals_general: QR iteration budget of " +
                                    std::to_string(kSweepBudget) + " sweeps exhausted",
                                diagonal(h));
        }
        ++stall;
        Complex mu = wilkinson_shift(h, hi);
        if (stall % 16 == 0) {
            // Exceptional shift to break rare symmetric stalls.
            mu = h[hi][hi] + Complex(0.75 * std::abs(h[hi][hi - 1]), 0.0);
        }

        // Implicit single-shift sweep over the active block [lo, hi].
        Complex x = h[lo][lo] - mu;
        Complex y = h[lo + 1][lo];
        for (int k = lo; k < hi; ++k) {
            const Givens g = make_givens(x, y);
            apply_left(h, g, k);
            apply_right(h, g, k);
            if (k + 2 <= hi) {
                x = h[k + 1][k];
                y = h[k + 2][k];
            }
        }
    }
    return EigenSet::from(diagonal(h));
}

StabilityVerdict matignon(const EigenSet& e, double q) {
    if (!(q > 0.0) || q > 1.0) {
        throw OrderOutOfRange("matignon: order q must lie in (0, 1], got " + std::to_string(q));
    }
    for (const auto& lam : e.lambdas) {
        if (std::abs(lam) <= kZeroEigenTol) {
            return {Stability::UnstableZeroEigenvalue, lam};
        }
    }
    Complex binding = e.lambdas[0];
    double min_arg = std::fabs(std::arg(binding));
    for (const auto& lam : e.lambdas) {
        const double a = std::fabs(std::arg(lam));
        if (a < min_arg) {
            min_arg = a;
            binding = lam;
        }
    }
    const double threshold = q * (kPi / 2.0);
    if (min_arg < threshold - kCriticalArgTol) {
        return {Stability::Unstable, binding};
    }
    if (std::fabs(min_arg - threshold) <= kCriticalArgTol) {
        // Critical band: stable only while the critical eigenvalue is simple.
        int repeats = 0;
        for (const auto& lam : e.lambdas) {
            if (std::abs(lam - binding) <= kZeroEigenTol * (1.0 + std::abs(binding))) ++repeats;
        }
        if (repeats > 1) return {Stability::Unstable, binding};
        return {Stability::CriticallyStable, binding};
    }
    return {Stability::AsymptoticallyStable, binding};
}

std::optional<double> critical_order(const EigenSet& e) { return e.q_tilde; }

const char* to_string(RegionRule r) {
    switch (r) {
        case RegionRule::P31: return "P31";
        case RegionRule::P32: return "P32";
        case RegionRule::C31: return "C31";
        case RegionRule::C32: return "C32";
        case RegionRule::C33: return "C33";
    }
    return "?";
}

RegionRule rule_for(const Equilibrium& xe) {
    if (xe.k == 0.0 && xe.m == 0.0) return RegionRule::P31;
    if (xe.m == 0.0) return RegionRule::C31;
    if (xe.k == 0.0) return RegionRule::C32;
    if (xe.k == xe.m) return RegionRule::C33;
    return RegionRule::P32;
}

namespace {

StabilityVerdict stable_with(double binding) {
    return {Stability::AsymptoticallyStable, Complex(binding)};
}
StabilityVerdict unstable_with(double witness) {
    return {Stability::Unstable, Complex(witness)};
}
StabilityVerdict undetermined() { return {Stability::Undetermined, Complex(0.0)}; }

// Largest of the five closed-form eigenvalues: the binding one for a
// stable verdict.
double max5(double a, double b, double c, double d, double e) {
    return std::max({a, b, c, d, e});
}

void require_family(bool ok, RegionRule rule, const Equilibrium& xe) {
    if (!ok) {
        throw RuleFamilyMismatch(std::string("classify_closed_form: rule ") + to_string(rule) +
                                 " does not cover equilibrium (k=" + std::to_string(xe.k) +
                                 ", m=" + std::to_string(xe.m) + ")");
    }
}

}  // namespace

StabilityVerdict classify_closed_form(RegionRule rule, const Equilibrium& xe, const ParamSet& p) {
    require_valid(p);
    const double k = xe.k;
    const double m = xe.m;

    switch (rule) {
        case RegionRule::P31: {
            require_family(k == 0.0 && m == 0.0, rule, xe);
            if (p.a > 0.0) return unstable_with(p.a);
            if (p.b < 0.0 && p.c1 < 0.0 && p.c2 < 0.0 && p.c3 < 0.0) {
                return stable_with(max5(p.a, p.b, p.c1, p.c2, p.c3));
            }
            for (double v : {p.b, p.c1, p.c2, p.c3}) {
                if (v > 0.0) return unstable_with(v);
            }
            return undetermined();
        }
        case RegionRule::P32: {
            require_family(!(k == 0.0 && m == 0.0), rule, xe);
            if (p.a > 0.0) return unstable_with(p.a);
            if (p.c1 > 0.0) return unstable_with(p.c1);
            if (p.c2 > 0.0) return unstable_with(p.c2);
            // a < 0, c1 < 0, c2 < 0 from here on
            if (k < -p.c3 && m < k - p.b) {
                return stable_with(max5(p.a, p.c1, p.c2, p.c3 + k, p.b - k + m));
            }
            if (k > -p.c3) return unstable_with(p.c3 + k);
            if (m > k - p.b) return unstable_with(p.b - k + m);
            return undetermined();  // boundary k = -c3 or m = k - b
        }
        case RegionRule::C31: {
            require_family(m == 0.0 && k != 0.0, rule, xe);
            if (p.a > 0.0) return unstable_with(p.a);
            if (p.c1 > 0.0) return unstable_with(p.c1);
            if (p.c2 > 0.0) return unstable_with(p.c2);
            if (p.b < -p.c3 && k > p.b && k < -p.c3) {
                return stable_with(max5(p.a, p.c1, p.c2, p.c3 + k, p.b - k));
            }
            if (p.b > -p.c3 && (k > -p.c3 || k < p.b)) {
                return unstable_with(k > -p.c3 ? p.c3 + k : p.b - k);
            }
            return undetermined();
        }
        case RegionRule::C32: {
            require_family(k == 0.0 && m != 0.0, rule, xe);
            if (p.a > 0.0) return unstable_with(p.a);
            if (p.c1 > 0.0) return unstable_with(p.c1);
            if (p.c2 > 0.0) return unstable_with(p.c2);
            if (p.c3 < 0.0 && m < -p.b) {
                return stable_with(max5(p.a, p.c1, p.c2, p.c3, p.b + m));
            }
            if (p.c3 > 0.0) return unstable_with(p.c3);
            if (m > -p.b) return unstable_with(p.b + m);
            return undetermined();  // boundary m = -b
        }
        case RegionRule::C33: {
            require_family(k == m && m != 0.0, rule, xe);
            if (p.a > 0.0) return unstable_with(p.a);
            if (p.c1 > 0.0) return unstable_with(p.c1);
            if (p.c2 > 0.0) return unstable_with(p.c2);
            if (p.b < 0.0 && m < -p.c3) {
                return stable_with(max5(p.a, p.c1, p.c2, p.c3 + m, p.b));
            }
            if (p.b > 0.0) return unstable_with(p.b);
            if (m > -p.c3) return unstable_with(p.c3 + m);
            return undetermined();  // boundary m = -c3
        }
    }
    return undetermined();
}

CrossCheck cross_check(const Equilibrium& xe, const ParamSet& p, double q) {
    CrossCheck out{};
    out.rule = rule_for(xe);
    out.closed_form = classify_closed_form(out.rule, xe, p);
    out.eigs = eigvals_equilibrium(xe, p, true);
    out.eigen_route = matignon(out.eigs, q);
    if (out.closed_form.kind == Stability::Undetermined) {
        out.agreement = Agreement::ClosedFormUndetermined;
    } else if (out.closed_form.kind == out.eigen_route.kind) {
        out.agreement = Agreement::Agree;
    } else {
        out.agreement = Agreement::Disagree;
    }
    return out;
}

}  // namespace fractoda
