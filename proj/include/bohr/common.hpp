#pragma once
#include <cmath>
#include <complex>
#include <stdexcept>
#include <string>

namespace bohr {

using Complex = std::complex<double>;

// Absolute slack used everywhere a strict inequality is tested in floating point.
inline constexpr double kEpsFloat = 1e-9;

// Raised when a sign-change scan finds no root in (0, 1).
struct NoRootFound : std::runtime_error {
    explicit NoRootFound(const std::string& what) : std::runtime_error(what) {}
};

// Raised when no scanned parameter pushes a functional above 1.
struct NoWitness : std::runtime_error {
    explicit NoWitness(const std::string& what) : std::runtime_error(what) {}
};

// x^n by binary exponentiation; n >= 0. Deterministic, no libm dispatch.
inline double powi(double x, long n) {
    double acc = 1.0, base = x;
    for (; n > 0; n >>= 1) {
        if (n & 1) acc *= base;
        base *= base;
    }
    return acc;
}

inline Complex powi(Complex x, long n) {
    Complex acc = 1.0, base = x;
    for (; n > 0; n >>= 1) {
        if (n & 1) acc *= base;
        base *= base;
    }
    return acc;
}

}  // namespace bohr
