#pragma once
#include <vector>

#include "bohr/common.hpp"

namespace bohr {

// Truncated one-variable power series c_0 + c_1 z + ... + c_T z^T.
// Pure coefficient data; no unit-bound assumption is attached here.
class PowerSeries {
public:
    explicit PowerSeries(std::vector<Complex> coeffs);

    int truncation_order() const { return static_cast<int>(coeffs_.size()) - 1; }
    const std::vector<Complex>& coeffs() const { return coeffs_; }

    // Zero beyond the truncation order; n must be nonnegative.
    Complex coeff(int n) const;

private:
    std::vector<Complex> coeffs_;
};

// Horner evaluation of the truncated polynomial. Requires |z| < 1.
Complex eval(const PowerSeries& s, Complex z);

// (1 - a0_mod^2) * r^N / (1 - r).
// Upper bound for sum_{n>=N} |a_n| r^n whenever f lies in the unit ball and
// |f(0)| = a0_mod (coefficient bound |a_n| <= 1 - |a_0|^2, N >= 1).
double tail_bound(double a0_mod, double r, int N);

namespace series_detail {
// Truncated product and reciprocal, kept to order T. reciprocal needs d[0] != 0.
std::vector<Complex> mul(const std::vector<Complex>& a, const std::vector<Complex>& b, int T);
std::vector<Complex> reciprocal(const std::vector<Complex>& d, int T);
}  // namespace series_detail

}  // namespace bohr
