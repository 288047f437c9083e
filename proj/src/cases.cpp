#include "fractoda/app.hpp"

// Reference-case fixture table for the reproduce command.  Parameter
// values are copied verbatim from the published numbered examples; where
// a claim quantifies over a range, the sampled point is recorded in the
// claim text.  All verdicts are evaluated at q = 0.8 (the claims hold for
// every q in (0,1) since the spectra at these equilibria are real).

namespace fractoda::app {

namespace {

constexpr Stability kStable = Stability::AsymptoticallyStable;
constexpr Stability kUnstable = Stability::Unstable;

std::vector<ReferenceCase> build_cases() {
    std::vector<ReferenceCase> cases;

    // 3.1: origin, all gains negative -> stable; flipping b positive -> unstable.
    cases.push_back({"3.1.1",
                     {-0.8, -0.2, -0.03, -0.02, -0.001, 0.8},
                     {0.0, 0.0},
                     kStable,
                     "asymptotically stable",
                     false,
                     {}});
    cases.push_back({"3.1.2",
                     {-0.8, 0.2, -0.03, -0.02, -0.001, 0.8},
                     {0.0, 0.0},
                     kUnstable,
                     "unstable",
                     false,
                     {}});

    // 3.2: k = 1 with c3 = 1.01 puts the eigenvalue c3 + k = 2.01 in the
    // right half plane, so the published stability claim cannot hold; the
    // computed verdict is expected to contradict it.
    cases.push_back({"3.2.1",
                     {-0.45, 1.0, -0.2, -0.15, 1.01, 0.8},
                     {1.0, 0.6},
                     kStable,
                     "asymptotically stable for all m in (0, inf); sampled m = 0.6",
                     false,
                     {}});
    cases.push_back({"3.2.2",
                     {-0.45, 1.0, -0.2, -0.15, 1.01, 0.8},
                     {-1.0, 0.6},
                     kUnstable,
                     "unstable for all nonzero m; sampled m = 0.6",
                     false,
                     {}});

    // 3.3: family (0, k, 0, 0, 0).
    cases.push_back({"3.3.1",
                     {-1.0, 0.32, -0.25, -0.12, -1.05, 0.8},
                     {0.5, 0.0},
                     kStable,
                     "asymptotically stable for all k in (0.32, 1.05); sampled k = 0.5",
                     false,
                     {}});
    cases.push_back({"3.3.2",
                     {-1.0, 1.2, -0.25, -0.12, -1.05, 0.8},
                     {0.5, 0.0},
                     kUnstable,
                     "unstable for all nonzero k; sampled k = 0.5",
                     false,
                     {}});

    // 3.4: family (0, 0, m, 0, 0).
    cases.push_back({"3.4.1",
                     {-0.9, 0.08, -0.4, -0.22, -0.06, 0.8},
                     {0.0, -1.0},
                     kStable,
                     "asymptotically stable for all m in (-inf, -0.08); sampled m = -1",
                     false,
                     {}});
    cases.push_back({"3.4.2",
                     {-0.9, 1.0, -0.4, -0.22, -0.06, 0.8},
                     {0.0, 0.5},
                     kUnstable,
                     "unstable for all m in (-1, inf) excluding 0; sampled m = 0.5",
                     false,
                     {}});

    // 3.5: family (0, m, m, 0, 0).
    cases.push_back({"3.5.1",
                     {-0.75, -0.81, -0.36, -0.01, 0.48, 0.8},
                     {-1.0, -1.0},
                     kStable,
                     "asymptotically stable for all m in (-inf, -0.48); sampled m = -1",
                     false,
                     {}});
    cases.push_back({"3.5.2",
                     {-0.75, -0.81, -0.36, -0.01, 0.48, 0.8},
                     {1.0, 1.0},
                     kUnstable,
                     "unstable for all m in (-0.48, inf) excluding 0; sampled m = 1",
                     false,
                     {}});

    // 4.1: integration showcase at (0, 1, 0.6, 0, 0).  Same parameter set
    // as 3.2.1, so the published "asymptotically stable at q = 0.8" claim
    // again contradicts the eigenvalue 2.01; the run executes regardless.
    cases.push_back({"4.1",
                     {-0.45, 1.0, -0.2, -0.15, 1.01, 0.8},
                     {1.0, 0.6},
                     kStable,
                     "asymptotically stable at q = 0.8 (integration reference)",
                     true,
                     {0.01, 100, 0.01}});

    return cases;
}

}  // namespace

const std::vector<ReferenceCase>& reference_cases() {
    static const std::vector<ReferenceCase> kCases = build_cases();
    return kCases;
}

}  // namespace fractoda::app
