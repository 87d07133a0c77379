#pragma once
#include <map>
#include <vector>

#include "bohr/verify.hpp"

namespace bohr {

// Finite piece of f = sum_n P_n, P_n(z) = sum_{|alpha|=n} A_alpha z^alpha.
// complete = true asserts the map holds the entire function (a polynomial), so
// sectioned functionals charge no truncation tail.
struct HomogeneousExpansion {
    int dims;
    int max_degree;
    bool complete;
    std::map<std::vector<int>, Complex> terms;

    HomogeneousExpansion(int dims, int max_degree, bool complete,
                         std::map<std::vector<int>, Complex> terms);

    Complex constant_term() const;
};

// Direction b of the complex line {bh : |h| < 1}, normalized so the line fills
// the target domain: polydisk scales to max_j |b_j| = 1, half_space scales to
// |<functional, b>| = 1 for the half-space {z : |sum_j c_j z_j| < 1}. raw keeps
// the vector as given (coefficient role, e.g. compose_line weights).
struct LineDirection {
    std::vector<Complex> b;

    static LineDirection polydisk(std::vector<Complex> d);
    static LineDirection half_space(std::vector<Complex> d, const std::vector<Complex>& functional);
    static LineDirection raw(std::vector<Complex> d);

    int dims() const { return static_cast<int>(b.size()); }
};

// Coefficient m of the result is P_m(b); the restriction of e to the line.
PowerSeries section(const HomogeneousExpansion& e, const LineDirection& b);

// Expansion of F(z) = f(b_1 z_1^k + ... + b_n z_n^k), truncated at max_degree
// (degrees are multiples of k). |F| stays below 1 wherever |sum_j b_j z_j^k| < 1;
// on the polydisk that is certified by sum_j |b_j| <= 1. The result is marked
// incomplete: sections carry the unit-ball truncation tail.
HomogeneousExpansion compose_line(const BoundedFunction& f, const LineDirection& b, int k,
                                  int max_degree = 32);

// Which homothety statement a line-sampling run checks. The first two and the
// last use the homothety radii 3^(-1/k), 2^(-1/(2k)), (3/5)^(1/k); the
// bohr_rogosinski pair uses the root of the YEquation for (p, k, N, m0).
struct TheoremCheck {
    enum class Kind {
        majorant,                 // sum |P_n(b)| |h|^{kn} <= 1
        zero_omitted,             // same with P_0 = 0 required
        bohr_rogosinski,          // |g(-h^{m0})|^p + tail sums on the section g
        refined_bohr_rogosinski,  // adds the squared-coefficient groups
        refined_zero_coeff,       // zero-constant refinement along sections
    };
    Kind kind;
    double p = 1.0;
    int N = 1;
    int m0 = 1;
};

const char* theorem_name(TheoremCheck::Kind kind);

// Samples `lines` directions on the polydisk (line 0 is always the aligned
// probe d = (1,...,1) with h real positive; the rest are seeded random with a
// random phase for h) and applies the one-variable functional to each section
// at |h| = homothety radius - margin; a negative margin probes above the
// radius. e must be caller-certified to have sup modulus < 1 on the polydisk.
// Violations are judged on total_upper.
VerificationReport verify_theorem(const HomogeneousExpansion& e, const TheoremCheck& thm, int k,
                                  long lines, std::uint64_t seed, double margin = 1e-3);

}  // namespace bohr
