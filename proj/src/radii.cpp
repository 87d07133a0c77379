#include "bohr/radii.hpp"

#include <cmath>
#include <cstdio>

namespace bohr {
namespace {

constexpr int kGridCells = 4096;

void validate(const YEquation& e) {
    if (!(e.p >= 1e-6 && e.p <= 2.0)) throw std::invalid_argument("y equation: p must lie in [1e-6, 2]");
    if (e.k < 1 || e.N < 1 || e.m0 < 1) throw std::invalid_argument("y equation: k, N, m0 must be >= 1");
    if (e.k > 1000 || e.N > 1000 || e.m0 > 1000) throw std::invalid_argument("y equation: order out of range");
}

void validate(const RNEquation& e) {
    if (e.N < 1 || e.N > 1000) throw std::invalid_argument("rn equation: N out of range");
}

void validate(const RNPrimeEquation& e) {
    if (e.N < 1 || e.N > 1000) throw std::invalid_argument("rn-prime equation: N out of range");
}

void validate(const RapEquation& e) {
    if (!(e.a >= 0.0 && e.a <= 1.0)) throw std::invalid_argument("rap equation: a must lie in [0, 1]");
    if (!(e.p >= 1e-6)) throw std::invalid_argument("rap equation: p must be >= 1e-6");
}

void validate(const ClosedForm& c) {
    if (c.k < 1 || c.k > 1000) throw std::invalid_argument("closed form: k out of range");
    if (c.kind == ClosedForm::Kind::power_p && !(c.p >= 1e-6))
        throw std::invalid_argument("closed form: p must be >= 1e-6");
}

double eval_validated(const RadiusProblem& prob, double r) {
    struct Visitor {
        double r;
        double operator()(const YEquation& e) const {
            const double rk = powi(r, e.k);
            const double rm = powi(r, e.m0);
            return 2.0 * powi(r, static_cast<long>(e.k) * e.N) * (1.0 + rm) -
                   e.p * (1.0 - rm) * (1.0 - rk);
        }
        double operator()(const RNEquation& e) const {
            return 2.0 * (1.0 + r) * powi(r, e.N) - (1.0 - r) * (1.0 - r);
        }
        double operator()(const RNPrimeEquation& e) const {
            return (1.0 + r) * powi(r, e.N) - (1.0 - r) * (1.0 - r);
        }
        double operator()(const RapEquation& e) const {
            return (1.0 - (2.0 - e.a * e.a) * r) * std::pow(1.0 + e.a * r, e.p) -
                   (1.0 - r) * std::pow(r + e.a, e.p);
        }
        double operator()(const ClosedForm&) const {
            throw std::invalid_argument("eval_equation: closed forms have no equation");
        }
    };
    return std::visit(Visitor{r}, prob);
}

double closed_form_value(const ClosedForm& c) {
    switch (c.kind) {
        case ClosedForm::Kind::bohr_third: return std::pow(3.0, -1.0 / c.k);
        case ClosedForm::Kind::bombieri: return std::pow(2.0, -1.0 / (2.0 * c.k));
        case ClosedForm::Kind::refined_three_fifths: return std::pow(0.6, 1.0 / c.k);
        case ClosedForm::Kind::rogosinski: return 0.5;
        case ClosedForm::Kind::power_p: return c.p / (c.p + 2.0);
    }
    throw std::logic_error("closed_form_value: unreachable");
}

}  // namespace

double eval_equation(const RadiusProblem& prob, double r) {
    if (!(r >= 0.0 && r < 1.0)) throw std::invalid_argument("eval_equation: requires 0 <= r < 1");
    std::visit([](const auto& e) { validate(e); }, prob);
    return eval_validated(prob, r);
}

RootResult solve_radius(const RadiusProblem& prob, double tol) {
    if (!(tol > 0.0)) throw std::invalid_argument("solve_radius: tol must be positive");
    std::visit([](const auto& e) { validate(e); }, prob);

    if (const auto* c = std::get_if<ClosedForm>(&prob))
        return {closed_form_value(*c), 0.0, 0.0, true};

    // Grid points 0, 1/G, ..., (G-1)/G plus a probe just inside r = 1.
    std::vector<double> xs(kGridCells + 1);
    for (int i = 0; i < kGridCells; ++i) xs[static_cast<std::size_t>(i)] = static_cast<double>(i) / kGridCells;
    xs[kGridCells] = 1.0 - 1e-12;
    std::vector<double> fs(xs.size());
    int zeros = 0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        fs[i] = eval_validated(prob, xs[i]);
        if (fs[i] == 0.0) ++zeros;
    }
    if (zeros > kGridCells / 2) throw NoRootFound("solve_radius: equation vanishes on the grid");

    int changes = 0;
    double lo = 0.0, hi = 0.0, flo = 0.0;
    bool found = false;
    for (std::size_t i = 0; i + 1 < xs.size(); ++i) {
        const bool exact_zero = fs[i] == 0.0 && xs[i] > 0.0;
        const bool crossing = fs[i] * fs[i + 1] < 0.0;
        if (!exact_zero && !crossing) continue;
        ++changes;
        if (found) continue;
        found = true;
        if (exact_zero) {
            lo = hi = xs[i];
            flo = 0.0;
        } else {
            lo = xs[i];
            hi = xs[i + 1];
            flo = fs[i];
        }
    }
    if (!found) throw NoRootFound("solve_radius: no sign change in (0, 1)");

    while (hi - lo > tol) {
        const double mid = 0.5 * (lo + hi);
        const double fm = eval_validated(prob, mid);
        if (fm == 0.0) {
            lo = hi = mid;
            break;
        }
        if (flo * fm < 0.0) {
            hi = mid;
        } else {
            lo = mid;
            flo = fm;
        }
    }
    const double root = 0.5 * (lo + hi);
    return {root, eval_validated(prob, root), hi - lo, changes == 1};
}

std::string problem_label(const RadiusProblem& prob) {
    char buf[128];
    struct Visitor {
        char* buf;
        void operator()(const YEquation& e) const {
            std::snprintf(buf, 128, "y p=%.9g k=%d N=%d m0=%d", e.p, e.k, e.N, e.m0);
        }
        void operator()(const RNEquation& e) const { std::snprintf(buf, 128, "rn N=%d", e.N); }
        void operator()(const RNPrimeEquation& e) const { std::snprintf(buf, 128, "rnprime N=%d", e.N); }
        void operator()(const RapEquation& e) const {
            std::snprintf(buf, 128, "rap a=%.9g p=%.9g", e.a, e.p);
        }
        void operator()(const ClosedForm& c) const {
            switch (c.kind) {
                case ClosedForm::Kind::bohr_third: std::snprintf(buf, 128, "bohr-third k=%d", c.k); return;
                case ClosedForm::Kind::bombieri: std::snprintf(buf, 128, "bombieri k=%d", c.k); return;
                case ClosedForm::Kind::refined_three_fifths:
                    std::snprintf(buf, 128, "refined-three-fifths k=%d", c.k);
                    return;
                case ClosedForm::Kind::rogosinski: std::snprintf(buf, 128, "rogosinski"); return;
                case ClosedForm::Kind::power_p: std::snprintf(buf, 128, "power-p p=%.9g", c.p); return;
            }
        }
    };
    std::visit(Visitor{buf}, prob);
    return buf;
}

std::vector<RadiusProblem> table1_problems() {
    return {
        YEquation{0.12, 2, 2, 2}, YEquation{0.6, 2, 1, 4},  YEquation{0.1, 2, 3, 3},
        YEquation{1.2, 3, 1, 4},  YEquation{1.6, 3, 2, 5},  YEquation{2.0, 7, 1, 3},
        YEquation{0.19, 4, 7, 5}, YEquation{1.7, 5, 10, 7},
    };
}

std::vector<Table1Row> table1(double tol) {
    std::vector<Table1Row> rows;
    for (const RadiusProblem& prob : table1_problems()) {
        const auto& e = std::get<YEquation>(prob);
        rows.push_back({e.k, e.m0, e.N, e.p, solve_radius(prob, tol).root});
    }
    return rows;
}

std::vector<CurvePoint> figure1_data(const std::vector<RadiusProblem>& probs, int grid) {
    if (grid < 2) throw std::invalid_argument("figure1_data: grid must be >= 2");
    std::vector<CurvePoint> pts;
    pts.reserve(probs.size() * static_cast<std::size_t>(grid - 1));
    for (const RadiusProblem& prob : probs) {
        const std::string label = problem_label(prob);
        for (int j = 1; j < grid; ++j) {
            const double r = static_cast<double>(j) / grid;
            pts.push_back({label, r, eval_equation(prob, r)});
        }
    }
    return pts;
}

}  // namespace bohr
