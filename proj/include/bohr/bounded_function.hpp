#pragma once
#include <variant>
#include <vector>

#include "bohr/power_series.hpp"

namespace bohr {

// Analytic self-map data of the unit disk with sup norm <= 1, in representations
// where the bound is certified by construction:
//   extremal_fa(a)        (a - z) / (1 - a z), a in [0, 1)
//   extremal_fa_star(a)   z (a - z) / (1 - a z), a in (0, 1)
//   finite_blaschke       rotation * prod (w_j - z) / (1 - conj(w_j) z), |w_j| < 1
//   schur_sequence        backward Schur recursion from parameters with |g_j| <= 1
//   monomial(d)           z^d (d = 0 is the constant 1)
// Every representation supports exact pointwise evaluation and Taylor expansion.
class BoundedFunction {
public:
    static BoundedFunction extremal_fa(double a);
    static BoundedFunction extremal_fa_star(double a);
    static BoundedFunction finite_blaschke(std::vector<Complex> zeros, Complex rotation);
    static BoundedFunction schur_sequence(std::vector<Complex> params);
    static BoundedFunction monomial(int degree);

    // Exact value (no truncation). Requires |z| < 1.
    Complex operator()(Complex z) const;

    // Coefficients c_0..c_T.
    PowerSeries taylor(int truncation) const;

    // c_0, exact per representation.
    Complex constant_term() const;

    // Short label for report descriptors.
    const char* family_name() const;

private:
    struct ExtremalFa { double a; };
    struct ExtremalFaStar { double a; };
    struct FiniteBlaschke { std::vector<Complex> zeros; Complex rotation; };
    struct SchurSequence { std::vector<Complex> params; };
    struct Monomial { int degree; };
    using Rep = std::variant<ExtremalFa, ExtremalFaStar, FiniteBlaschke, SchurSequence, Monomial>;

    explicit BoundedFunction(Rep rep) : rep_(std::move(rep)) {}
    Rep rep_;
};

inline PowerSeries taylor(const BoundedFunction& f, int truncation) { return f.taylor(truncation); }

}  // namespace bohr
