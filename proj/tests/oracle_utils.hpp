#pragma once
// Independent reference implementations for cross-checking, kept deliberately
// separate from the library: long-double equation evaluation, a dense-scan root
// finder, and contour-integral Taylor coefficients from pointwise values only.

#include <cmath>
#include <complex>
#include <functional>
#include <optional>
#include <vector>

namespace oracle {

inline long double ipow(long double x, int n) {
    long double acc = 1.0L;
    for (int i = 0; i < n; ++i) acc *= x;
    return acc;
}

inline long double y_equation(long double p, int k, int N, int m0, long double r) {
    return 2.0L * ipow(r, k * N) * (1.0L + ipow(r, m0)) -
           p * (1.0L - ipow(r, m0)) * (1.0L - ipow(r, k));
}

inline long double rn_equation(int N, long double r) {
    return 2.0L * (1.0L + r) * ipow(r, N) - (1.0L - r) * (1.0L - r);
}

inline long double rnprime_equation(int N, long double r) {
    return (1.0L + r) * ipow(r, N) - (1.0L - r) * (1.0L - r);
}

inline long double rap_equation(long double a, long double p, long double r) {
    return (1.0L - (2.0L - a * a) * r) * std::pow(1.0L + a * r, p) -
           (1.0L - r) * std::pow(r + a, p);
}

// Smallest root in (0, 1): dense scan to the first sign change (or exact zero),
// then fixed-count bisection in long double.
inline std::optional<long double> first_root(const std::function<long double(long double)>& f,
                                             int grid = 1000000, int steps = 200) {
    long double prev = f(1e-12L);
    for (int i = 1; i < grid; ++i) {
        const long double x = static_cast<long double>(i) / grid;
        const long double v = f(x);
        if (v == 0.0L) return x;
        if ((prev < 0.0L) != (v < 0.0L)) {
            long double lo = static_cast<long double>(i - 1) / grid;
            long double hi = x;
            long double flo = prev;
            for (int s = 0; s < steps; ++s) {
                const long double mid = 0.5L * (lo + hi);
                const long double fm = f(mid);
                if (fm == 0.0L) return mid;
                if ((flo < 0.0L) != (fm < 0.0L)) {
                    hi = mid;
                } else {
                    lo = mid;
                    flo = fm;
                }
            }
            return 0.5L * (lo + hi);
        }
        prev = v;
    }
    return std::nullopt;
}

// c_0..c_{count-1} of an analytic f from samples on |z| = rho via the discrete
// contour integral c_n = rho^{-n} (1/M) sum_j f(rho e^{i t_j}) e^{-i n t_j}.
// Aliasing error is O(rho^M), negligible for rho = 1/2, M = 512, count <= 64.
inline std::vector<std::complex<double>> contour_coeffs(
    const std::function<std::complex<double>(std::complex<double>)>& f, int count,
    double rho = 0.5, int M = 512) {
    constexpr double tau = 6.283185307179586476925286766559;
    std::vector<std::complex<double>> samples(static_cast<size_t>(M));
    for (int j = 0; j < M; ++j) {
        const double t = tau * j / M;
        samples[static_cast<size_t>(j)] = f({rho * std::cos(t), rho * std::sin(t)});
    }
    std::vector<std::complex<double>> out(static_cast<size_t>(count));
    for (int n = 0; n < count; ++n) {
        std::complex<double> acc{0.0, 0.0};
        for (int j = 0; j < M; ++j) {
            const double t = tau * j * n / M;
            acc += samples[static_cast<size_t>(j)] * std::complex<double>{std::cos(t), std::sin(-t)};
        }
        out[static_cast<size_t>(n)] = acc / (static_cast<double>(M) * std::pow(rho, n));
    }
    return out;
}

}  // namespace oracle
