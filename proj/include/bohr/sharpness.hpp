#pragma once
#include <optional>

#include "bohr/functionals.hpp"
#include "bohr/radii.hpp"

namespace bohr {

// Sign-analysis helpers behind the sharp radii. a in [0, 1], r in [0, 1);
// aux_q and aux_g additionally need a < 1.

// -(1 - a r^k) + (1 + a) r^k; positive iff the majorant of f_a at r^k exceeds 1.
double aux_m(double a, double r, int k);

// 1 - ((r^{m0} + a)/(1 + a r^{m0}))^p - (1 - a^2) r^{kN} / (1 - r^k); zero at a = 1.
double aux_phi(double p, int m0, int k, int N, double a, double r);

// -1 + a r^k + (1 - a^2) r^{2k} / (1 - r^k); the zero-constant refinement margin.
// Quadratic in a with vertex a = (1 - r^k)/(2 r^k) and maximum
// (1 + r^k)(5 r^k - 3) / (4 (1 - r^k)).
double aux_f(double a, double r, int k);

// Diagnostic whose a -> 1 limit is (1 + r^{m0})^{p-1} Y(r).
double aux_q(double p, int k, int N, int m0, double a, double r);

// Diagnostic whose a -> 1 limit is
// (1 - r^k)(1 + r^{m0})^p (2 r^{kN}/(1 - r^k) - p (1 - r^{m0})/(1 + r^{m0})).
double aux_g(double p, int k, int N, int m0, int t, double a, double r);

struct SharpnessReport {
    double radius;
    double probe_r;
    double witness_a;
    double functional_value;  // certified lower bound (partial sums, exact first term)
    bool exceeded;
};

// The radius problem whose root bounds the given functional; k and m0 are the
// orders of the maps the functional is applied with.
RadiusProblem canonical_problem(const FunctionalKind& kind, int k, int m0);

// Scan a downward from 1 - a_grid_step over the matching extremal family at
// probe_r = radius + probe_offset; report the first a pushing the functional
// above 1 + eps. nullopt when the whole grid stays at or below 1.
std::optional<SharpnessReport> find_witness(const FunctionalKind& kind, const RadiusProblem& prob,
                                            double probe_offset, double a_grid_step,
                                            int truncation = 64);

// find_witness, but a missing witness raises NoWitness.
SharpnessReport witness_search(const FunctionalKind& kind, const RadiusProblem& prob,
                               double probe_offset, double a_grid_step, int truncation = 64);

}  // namespace bohr
