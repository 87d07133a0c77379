#include "bohr/power_series.hpp"

#include <cmath>

namespace bohr {

PowerSeries::PowerSeries(std::vector<Complex> coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.empty()) throw std::invalid_argument("PowerSeries: needs at least the constant term");
    for (const Complex& c : coeffs_) {
        if (!std::isfinite(c.real()) || !std::isfinite(c.imag()))
            throw std::invalid_argument("PowerSeries: non-finite coefficient");
    }
}

Complex PowerSeries::coeff(int n) const {
    if (n < 0) throw std::invalid_argument("PowerSeries::coeff: negative index");
    if (n > truncation_order()) return {0.0, 0.0};
    return coeffs_[static_cast<std::size_t>(n)];
}

Complex eval(const PowerSeries& s, Complex z) {
    if (std::abs(z) >= 1.0) throw std::invalid_argument("eval: requires |z| < 1");
    Complex acc{0.0, 0.0};
    const auto& c = s.coeffs();
    for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * z + *it;
    return acc;
}

double tail_bound(double a0_mod, double r, int N) {
    if (a0_mod < 0.0 || a0_mod > 1.0) throw std::invalid_argument("tail_bound: a0_mod outside [0, 1]");
    if (r < 0.0 || r >= 1.0) throw std::invalid_argument("tail_bound: requires 0 <= r < 1");
    if (N < 1) throw std::invalid_argument("tail_bound: requires N >= 1");
    return (1.0 - a0_mod * a0_mod) * powi(r, N) / (1.0 - r);
}

namespace series_detail {

std::vector<Complex> mul(const std::vector<Complex>& a, const std::vector<Complex>& b, int T) {
    std::vector<Complex> out(static_cast<std::size_t>(T) + 1, Complex{0.0, 0.0});
    for (std::size_t i = 0; i < a.size() && i <= static_cast<std::size_t>(T); ++i) {
        if (a[i] == Complex{0.0, 0.0}) continue;
        const std::size_t jmax = std::min(b.size(), static_cast<std::size_t>(T) + 1 - i);
        for (std::size_t j = 0; j < jmax; ++j) out[i + j] += a[i] * b[j];
    }
    return out;
}

std::vector<Complex> reciprocal(const std::vector<Complex>& d, int T) {
    if (d.empty() || d[0] == Complex{0.0, 0.0})
        throw std::invalid_argument("reciprocal: constant term must be nonzero");
    std::vector<Complex> out(static_cast<std::size_t>(T) + 1, Complex{0.0, 0.0});
    out[0] = 1.0 / d[0];
    for (std::size_t n = 1; n <= static_cast<std::size_t>(T); ++n) {
        Complex acc{0.0, 0.0};
        const std::size_t kmax = std::min(n, d.size() - 1);
        for (std::size_t k = 1; k <= kmax; ++k) acc += d[k] * out[n - k];
        out[n] = -acc / d[0];
    }
    return out;
}

}  // namespace series_detail
}  // namespace bohr
