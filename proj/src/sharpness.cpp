#include "bohr/sharpness.hpp"

#include <cmath>
#include <functional>

namespace bohr {
namespace {

void require_ar(double a, double r) {
    if (!(a >= 0.0 && a <= 1.0)) throw std::invalid_argument("aux: a must lie in [0, 1]");
    if (!(r >= 0.0 && r < 1.0)) throw std::invalid_argument("aux: r must lie in [0, 1)");
}

void require_orders(int k, int N, int m0) {
    if (k < 1 || N < 1 || m0 < 1) throw std::invalid_argument("aux: k, N, m0 must be >= 1");
}

}  // namespace

double aux_m(double a, double r, int k) {
    require_ar(a, r);
    if (k < 1) throw std::invalid_argument("aux_m: k must be >= 1");
    const double rk = powi(r, k);
    return -(1.0 - a * rk) + (1.0 + a) * rk;
}

double aux_phi(double p, int m0, int k, int N, double a, double r) {
    require_ar(a, r);
    require_orders(k, N, m0);
    const double rm = powi(r, m0);
    const double rk = powi(r, k);
    return 1.0 - std::pow((rm + a) / (1.0 + a * rm), p) -
           (1.0 - a * a) * powi(r, static_cast<long>(k) * N) / (1.0 - rk);
}

double aux_f(double a, double r, int k) {
    require_ar(a, r);
    if (k < 1) throw std::invalid_argument("aux_f: k must be >= 1");
    const double rk = powi(r, k);
    return -1.0 + a * rk + (1.0 - a * a) * rk * rk / (1.0 - rk);
}

double aux_q(double p, int k, int N, int m0, double a, double r) {
    require_ar(a, r);
    require_orders(k, N, m0);
    if (a >= 1.0) throw std::invalid_argument("aux_q: requires a < 1");
    const double rk = powi(r, k);
    const double rm = powi(r, m0);
    const double mob = (rm + a) / (1.0 + a * rm);
    return (1.0 - a * rk) * std::pow(1.0 + a * rm, p) *
           ((1.0 + a) / (1.0 - a * rk) * powi(a, N - 1) * powi(r, static_cast<long>(k) * N) -
            (1.0 - std::pow(mob, p)) / (1.0 - a));
}

double aux_g(double p, int k, int N, int m0, int t, double a, double r) {
    require_ar(a, r);
    require_orders(k, N, m0);
    if (t < 0) throw std::invalid_argument("aux_g: t must be >= 0");
    if (a >= 1.0) throw std::invalid_argument("aux_g: requires a < 1");
    const double rk = powi(r, k);
    const double rm = powi(r, m0);
    const double mob = (a + rm) / (1.0 + a * rm);
    const double scale = (1.0 - a * rk) * std::pow(1.0 + a * rm, p);
    const double sgn_t = t >= 1 ? 1.0 : 0.0;
    const double q_part = (1.0 + a) / (1.0 - a * rk) * powi(a, N - 1) * powi(r, static_cast<long>(k) * N) -
                          (1.0 - std::pow(mob, p)) / (1.0 - a);
    const double extra = (1.0 + a) * (1.0 - powi(a, 2 * t)) * sgn_t +
                         (1.0 - a * a) * powi(a, 2 * t) * powi(r, 2L * k * (t + 1)) /
                             ((1.0 - a * rk) * (1.0 - rk));
    return scale * (q_part + extra);
}

RadiusProblem canonical_problem(const FunctionalKind& kind, int k, int m0) {
    if (k < 1 || m0 < 1) throw std::invalid_argument("canonical_problem: k, m0 must be >= 1");
    switch (kind.tag) {
        case FunctionalKind::Tag::majorant:
            return ClosedForm{ClosedForm::Kind::bohr_third, k};
        case FunctionalKind::Tag::zero_omitted_sum:
            return ClosedForm{ClosedForm::Kind::bombieri, k};
        case FunctionalKind::Tag::rogosinski_sum:
            return RNEquation{kind.N};
        case FunctionalKind::Tag::bohr_rogosinski_i:
        case FunctionalKind::Tag::refined_j:
            return YEquation{kind.p, k, kind.N, m0};
        case FunctionalKind::Tag::refined_l:
            return ClosedForm{ClosedForm::Kind::refined_three_fifths, k};
        case FunctionalKind::Tag::refined_a:
            if (kind.p == 1.0) return RNEquation{kind.N};
            if (kind.p == 2.0) return RNPrimeEquation{kind.N};
            throw std::invalid_argument("canonical_problem: refined_a radius needs p in {1, 2}");
    }
    throw std::logic_error("canonical_problem: unreachable");
}

namespace {

// Extremal-family value of the functional at parameter a and probe radius r.
// Partial sums with exact first terms, so every returned value is a certified
// lower bound: value > 1 proves the inequality fails at r.
using Device = std::function<double(double a, double r)>;

Device device_for(const FunctionalKind& kind, const RadiusProblem& prob, int T) {
    using Tag = FunctionalKind::Tag;
    const auto mismatch = [&]() -> std::invalid_argument {
        return std::invalid_argument("witness_search: functional does not match the radius problem");
    };

    switch (kind.tag) {
        case Tag::majorant: {
            const auto* c = std::get_if<ClosedForm>(&prob);
            if (!c || c->kind != ClosedForm::Kind::bohr_third) throw mismatch();
            const int k = c->k;
            return [k, T](double a, double r) {
                return majorant(BoundedFunction::extremal_fa(a), SchwarzMap::monomial(k), r, T).value;
            };
        }
        case Tag::zero_omitted_sum: {
            const auto* c = std::get_if<ClosedForm>(&prob);
            if (!c || c->kind != ClosedForm::Kind::bombieri) throw mismatch();
            const int k = c->k;
            return [k, T](double a, double r) {
                return zero_omitted_sum(BoundedFunction::extremal_fa_star(a), SchwarzMap::monomial(k), r, T)
                    .value;
            };
        }
        case Tag::rogosinski_sum: {
            if (const auto* c = std::get_if<ClosedForm>(&prob)) {
                // The 1/2 radius belongs to partial sums: probe |S_N(-r)| on the
                // extremal family (no tail; the partial sum is the whole quantity).
                if (c->kind != ClosedForm::Kind::rogosinski) throw mismatch();
                const int N = kind.N;
                return [N](double a, double r) {
                    const PowerSeries s = BoundedFunction::extremal_fa(a).taylor(N - 1);
                    Complex acc{0.0, 0.0};
                    for (int n = N - 1; n >= 0; --n) acc = acc * Complex{-r, 0.0} + s.coeff(n);
                    return std::abs(acc);
                };
            }
            const auto* e = std::get_if<RNEquation>(&prob);
            if (!e || e->N != kind.N) throw mismatch();
            const int N = kind.N;
            return [N, T](double a, double r) {
                return rogosinski_sum(BoundedFunction::extremal_fa(a), Complex{-r, 0.0}, N, T).value;
            };
        }
        case Tag::bohr_rogosinski_i: {
            if (const auto* c = std::get_if<ClosedForm>(&prob)) {
                // p/(p+2): first term taken at the center image |a_0|^p.
                if (c->kind != ClosedForm::Kind::power_p || c->p != kind.p) throw mismatch();
                const double p = kind.p;
                return [p, T](double a, double r) {
                    return std::pow(a, p) +
                           zero_omitted_sum(BoundedFunction::extremal_fa(a), SchwarzMap::monomial(1), r, T)
                               .value;
                };
            }
            const auto* y = std::get_if<YEquation>(&prob);
            if (!y || y->p != kind.p || y->N != kind.N) throw mismatch();
            const YEquation eq = *y;
            return [eq, T](double a, double r) {
                return bohr_rogosinski_i(BoundedFunction::extremal_fa(a),
                                         SchwarzMap::negated_monomial(eq.m0), SchwarzMap::monomial(eq.k),
                                         r, eq.p, eq.N, T, EvalMode::pointwise)
                    .value;
            };
        }
        case Tag::refined_j: {
            const auto* y = std::get_if<YEquation>(&prob);
            if (!y || y->p != kind.p || y->N != kind.N) throw mismatch();
            const YEquation eq = *y;
            return [eq, T](double a, double r) {
                return refined_j(BoundedFunction::extremal_fa(a), SchwarzMap::negated_monomial(eq.m0),
                                 SchwarzMap::monomial(eq.k), r, eq.p, eq.N, T, EvalMode::pointwise)
                    .value;
            };
        }
        case Tag::refined_l: {
            const auto* c = std::get_if<ClosedForm>(&prob);
            if (!c || c->kind != ClosedForm::Kind::refined_three_fifths) throw mismatch();
            const int k = c->k;
            return [k, T](double a, double r) {
                return refined_l(BoundedFunction::extremal_fa_star(a), SchwarzMap::monomial(k), r, T).value;
            };
        }
        case Tag::refined_a: {
            const bool rn = std::holds_alternative<RNEquation>(prob) && kind.p == 1.0;
            const bool rnp = std::holds_alternative<RNPrimeEquation>(prob) && kind.p == 2.0;
            const int N = rn    ? std::get<RNEquation>(prob).N
                          : rnp ? std::get<RNPrimeEquation>(prob).N
                                : -1;
            if (N != kind.N) throw mismatch();
            const double p = kind.p;
            return [p, N, T](double a, double r) {
                return refined_a(BoundedFunction::extremal_fa(a), Complex{-r, 0.0}, p, N, T).value;
            };
        }
    }
    throw std::logic_error("device_for: unreachable");
}

}  // namespace

std::optional<SharpnessReport> find_witness(const FunctionalKind& kind, const RadiusProblem& prob,
                                            double probe_offset, double a_grid_step, int truncation) {
    if (!(a_grid_step > 0.0 && a_grid_step <= 0.01))
        throw std::invalid_argument("find_witness: a_grid_step must lie in (0, 0.01]");
    const double radius = solve_radius(prob).root;
    const double probe_r = radius + probe_offset;
    if (!(probe_r > 0.0 && probe_r < 1.0))
        throw std::invalid_argument("find_witness: probe radius must lie in (0, 1)");

    const Device device = device_for(kind, prob, truncation);
    for (double a = 1.0 - a_grid_step; a > 0.0; a -= a_grid_step) {
        const double v = device(a, probe_r);
        if (v > 1.0 + kEpsFloat) return SharpnessReport{radius, probe_r, a, v, true};
    }
    return std::nullopt;
}

SharpnessReport witness_search(const FunctionalKind& kind, const RadiusProblem& prob,
                               double probe_offset, double a_grid_step, int truncation) {
    auto report = find_witness(kind, prob, probe_offset, a_grid_step, truncation);
    if (!report) throw NoWitness("witness_search: no extremal parameter exceeds 1 at the probe radius");
    return *report;
}

}  // namespace bohr
