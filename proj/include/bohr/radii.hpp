#pragma once
#include <string>
#include <variant>
#include <vector>

#include "bohr/common.hpp"

namespace bohr {

// Left-hand sides whose smallest root in (0, 1) is a sharp radius.

// Y(r) = 2 r^{kN} (1 + r^{m0}) - p (1 - r^{m0}) (1 - r^k)
struct YEquation {
    double p;
    int k = 1;
    int N = 1;
    int m0 = 1;
};

// 2 (1 + r) r^N - (1 - r)^2
struct RNEquation {
    int N = 1;
};

// (1 + r) r^N - (1 - r)^2
struct RNPrimeEquation {
    int N = 1;
};

// (1 - (2 - a^2) r) (1 + a r)^p - (1 - r) (r + a)^p
struct RapEquation {
    double a;
    double p;
};

// Radii with exact expressions.
struct ClosedForm {
    enum class Kind {
        bohr_third,          // 3^{-1/k}
        bombieri,            // 2^{-1/(2k)}
        refined_three_fifths,// (3/5)^{1/k}
        rogosinski,          // 1/2 (partial sums)
        power_p,             // p / (p + 2)
    };
    Kind kind;
    int k = 1;
    double p = 1.0;
};

using RadiusProblem = std::variant<YEquation, RNEquation, RNPrimeEquation, RapEquation, ClosedForm>;

struct RootResult {
    double root;
    double residual;       // equation value at the reported root
    double bracket_width;  // final bisection bracket (0 for closed forms)
    bool unique_on_grid;   // exactly one sign change seen on the scan grid
};

// Equation value at r; requires 0 <= r < 1. Closed forms have no equation to evaluate.
double eval_equation(const RadiusProblem& prob, double r);

// Scan (0, 1) on a uniform 4096-cell grid, take the smallest sign change, and
// bisect it to the requested bracket width. Closed forms return exactly.
RootResult solve_radius(const RadiusProblem& prob, double tol = 1e-10);

std::string problem_label(const RadiusProblem& prob);

struct Table1Row {
    int k;
    int m0;
    int N;
    double p;
    double root;
};

// The bundled reference parameter sets and their radii.
std::vector<RadiusProblem> table1_problems();
std::vector<Table1Row> table1(double tol = 1e-10);

struct CurvePoint {
    std::string label;
    double r;
    double y;
};

// Equation values sampled on a uniform r-grid over (0, 1), one curve per problem.
std::vector<CurvePoint> figure1_data(const std::vector<RadiusProblem>& probs, int grid);

}  // namespace bohr
