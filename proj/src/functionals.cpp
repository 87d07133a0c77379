#include "bohr/functionals.hpp"

#include <algorithm>
#include <cmath>

namespace bohr {
namespace {

void require_probe(double u) {
    if (!(u >= 0.0 && u < 1.0)) throw std::invalid_argument("functional: probe modulus outside [0, 1)");
}

void require_pn(double p, int N) {
    if (!(p > 0.0 && p <= 2.0)) throw std::invalid_argument("functional: p must lie in (0, 2]");
    if (N < 1) throw std::invalid_argument("functional: N must be >= 1");
}

std::vector<double> moduli(const PowerSeries& s) {
    std::vector<double> m(s.coeffs().size());
    for (std::size_t i = 0; i < m.size(); ++i) m[i] = std::abs(s.coeffs()[i]);
    return m;
}

double clamp01(double x) { return std::min(std::max(x, 0.0), 1.0); }

// |w_k(z)| never exceeds |z|^k; trim rounding overshoot so tail formulas stay valid.
double probe_modulus(const SchwarzMap& w, Complex z) {
    return std::min(std::abs(w(z)), powi(std::abs(z), w.order()));
}

double weighted_sum(const std::vector<double>& m, double u, int from) {
    double acc = 0.0;
    for (std::size_t n = m.size(); n-- > static_cast<std::size_t>(std::max(from, 0));)
        acc = acc * u + m[n];
    return acc * powi(u, std::max(from, 0));
}

double weighted_sq_sum(const std::vector<double>& m, double u2, int from) {
    double acc = 0.0;
    for (std::size_t n = m.size(); n-- > static_cast<std::size_t>(std::max(from, 0));)
        acc = acc * u2 + m[n] * m[n];
    return acc * powi(u2, std::max(from, 0));
}

struct Groups {
    double value;
    double tail;
};

// sum_{n>=N} |a_n| u^n + sgn(t) sum_{n=1}^{t} |a_n|^2 u^N/(1-u)
//   + (1/(1+a0) + u/(1-u)) sum_{n>=t+1} |a_n|^2 u^{2n},  t = floor((N-1)/2).
// coeff_bound is the certified bound on |a_n| over the summed range (1 - a0^2).
Groups refined_groups(const std::vector<double>& m, double a0, double u, int N, bool complete) {
    const int T = static_cast<int>(m.size()) - 1;
    const int t = (N - 1) / 2;
    if (t > T) throw std::invalid_argument("functional: truncation too small for the group split");

    const double coeff_bound = 1.0 - a0 * a0;
    double value = weighted_sum(m, u, N);
    if (t >= 1) {
        double sq = 0.0;
        for (int n = 1; n <= t; ++n) sq += m[static_cast<std::size_t>(n)] * m[static_cast<std::size_t>(n)];
        value += sq * powi(u, N) / (1.0 - u);
    }
    const double factor = 1.0 / (1.0 + a0) + u / (1.0 - u);
    value += factor * weighted_sq_sum(m, u * u, t + 1);

    double tail = 0.0;
    if (!complete) {
        tail = tail_bound(a0, u, std::max(N, T + 1)) +
               factor * coeff_bound * coeff_bound * powi(u, 2 * (T + 1)) / (1.0 - u * u);
    }
    return {value, tail};
}

}  // namespace

FunctionalKind make_kind(FunctionalKind::Tag tag, double p, int N) {
    require_pn(p, N);
    return FunctionalKind{tag, p, N};
}

const char* kind_name(FunctionalKind::Tag tag) {
    switch (tag) {
        case FunctionalKind::Tag::majorant: return "majorant";
        case FunctionalKind::Tag::zero_omitted_sum: return "zero_omitted_sum";
        case FunctionalKind::Tag::rogosinski_sum: return "rogosinski_sum";
        case FunctionalKind::Tag::bohr_rogosinski_i: return "bohr_rogosinski_i";
        case FunctionalKind::Tag::refined_j: return "refined_j";
        case FunctionalKind::Tag::refined_l: return "refined_l";
        case FunctionalKind::Tag::refined_a: return "refined_a";
    }
    return "unknown";
}

double schwarz_pick_envelope(double a0_mod, double rho, double p) {
    if (a0_mod < 0.0 || a0_mod > 1.0) throw std::invalid_argument("schwarz_pick_envelope: a0 outside [0, 1]");
    require_probe(rho);
    return std::pow((rho + a0_mod) / (1.0 + a0_mod * rho), p);
}

FunctionalValue majorant(const BoundedFunction& f, const SchwarzMap& w, Complex z, int T) {
    if (T < 0) throw std::invalid_argument("majorant: T must be >= 0");
    const double u = probe_modulus(w, z);
    const auto m = moduli(f.taylor(T));
    const double a0 = clamp01(m[0]);
    return {weighted_sum(m, u, 0), tail_bound(a0, u, T + 1)};
}

FunctionalValue zero_omitted_sum(const BoundedFunction& f, const SchwarzMap& w, Complex z, int T) {
    if (T < 1) throw std::invalid_argument("zero_omitted_sum: T must be >= 1");
    const double u = probe_modulus(w, z);
    const auto m = moduli(f.taylor(T));
    const double a0 = clamp01(m[0]);
    return {weighted_sum(m, u, 1), tail_bound(a0, u, T + 1)};
}

FunctionalValue rogosinski_sum(const BoundedFunction& f, Complex z, int N, int T) {
    if (N < 1 || T < 0) throw std::invalid_argument("rogosinski_sum: needs N >= 1, T >= 0");
    const double r = std::abs(z);
    require_probe(r);
    const auto m = moduli(f.taylor(T));
    const double a0 = clamp01(m[0]);
    const double first = std::abs(f(z));
    return {first + weighted_sum(m, r, N), tail_bound(a0, r, std::max(N, T + 1))};
}

FunctionalValue bohr_rogosinski_i(const BoundedFunction& f, const SchwarzMap& w_m0,
                                  const SchwarzMap& w_k, Complex z, double p, int N, int T,
                                  EvalMode mode) {
    require_pn(p, N);
    if (T < 0) throw std::invalid_argument("bohr_rogosinski_i: T must be >= 0");
    const auto m = moduli(f.taylor(T));
    const double a0 = clamp01(m[0]);

    double first, u;
    if (mode == EvalMode::pointwise) {
        first = std::pow(std::abs(f(w_m0(z))), p);
        u = probe_modulus(w_k, z);
    } else {
        const double r = std::abs(z);
        require_probe(r);
        first = schwarz_pick_envelope(a0, powi(r, w_m0.order()), p);
        u = powi(r, w_k.order());
    }
    return {first + weighted_sum(m, u, N), tail_bound(a0, u, std::max(N, T + 1))};
}

FunctionalValue refined_j(const BoundedFunction& f, const SchwarzMap& w_m0, const SchwarzMap& w_k,
                          Complex z, double p, int N, int T, EvalMode mode) {
    require_pn(p, N);
    if (T < 1) throw std::invalid_argument("refined_j: T must be >= 1");
    const auto m = moduli(f.taylor(T));
    const double a0 = clamp01(m[0]);

    double first, u;
    if (mode == EvalMode::pointwise) {
        first = std::pow(std::abs(f(w_m0(z))), p);
        u = probe_modulus(w_k, z);
    } else {
        const double r = std::abs(z);
        require_probe(r);
        first = schwarz_pick_envelope(a0, powi(r, w_m0.order()), p);
        u = powi(r, w_k.order());
    }
    const Groups g = refined_groups(m, a0, u, N, false);
    return {first + g.value, g.tail};
}

FunctionalValue refined_l(const BoundedFunction& f, const SchwarzMap& w_k, Complex z, int T) {
    if (T < 1) throw std::invalid_argument("refined_l: T must be >= 1");
    if (f.constant_term() != Complex{0.0, 0.0})
        throw std::invalid_argument("refined_l: requires f(0) = 0");
    const double u = probe_modulus(w_k, z);
    const auto m = moduli(f.taylor(T));
    const double a1 = clamp01(m[1]);
    const double bound = 1.0 - a1 * a1;  // |a_n| <= 1 - |a_1|^2 for n >= 2 (f = z g)

    const double factor = 1.0 / (1.0 + a1) + u / (1.0 - u);
    double sq = 0.0;
    for (std::size_t n = m.size(); n-- > 2;) sq = sq * u * u + m[n] * m[n];
    sq *= powi(u, 3);  // aligns the recurrence to u^{2n-1} starting at n = 2

    const double value = weighted_sum(m, u, 1) + factor * sq;
    const double tail = bound * powi(u, T + 1) / (1.0 - u) +
                        factor * bound * bound * powi(u, 2 * T + 1) / (1.0 - u * u);
    return {value, tail};
}

FunctionalValue refined_a(const BoundedFunction& f, Complex z, double p, int N, int T) {
    require_pn(p, N);
    if (T < 1) throw std::invalid_argument("refined_a: T must be >= 1");
    const double r = std::abs(z);
    require_probe(r);
    const auto m = moduli(f.taylor(T));
    const double a0 = clamp01(m[0]);
    const Groups g = refined_groups(m, a0, r, N, false);
    return {std::pow(std::abs(f(z)), p) + g.value, g.tail};
}

FunctionalValue refined_remainder(const BoundedFunction& f, Complex z, int N, int T) {
    if (N < 1 || T < 1) throw std::invalid_argument("refined_remainder: needs N >= 1, T >= 1");
    const double r = std::abs(z);
    require_probe(r);
    const auto m = moduli(f.taylor(T));
    const double a0 = clamp01(m[0]);
    const Groups g = refined_groups(m, a0, r, N, false);
    return {g.value, g.tail};
}

FunctionalValue majorant_series(const PowerSeries& s, double omega_abs, bool complete) {
    require_probe(omega_abs);
    const auto m = moduli(s);
    const double a0 = clamp01(m[0]);
    const double tail = complete ? 0.0 : tail_bound(a0, omega_abs, s.truncation_order() + 1);
    return {weighted_sum(m, omega_abs, 0), tail};
}

FunctionalValue zero_omitted_series(const PowerSeries& s, double omega_abs, bool complete) {
    require_probe(omega_abs);
    if (s.truncation_order() < 1) throw std::invalid_argument("zero_omitted_series: series too short");
    const auto m = moduli(s);
    const double a0 = clamp01(m[0]);
    const double tail = complete ? 0.0 : tail_bound(a0, omega_abs, s.truncation_order() + 1);
    return {weighted_sum(m, omega_abs, 1), tail};
}

FunctionalValue bohr_rogosinski_i_series(const PowerSeries& s, Complex w_m0_at, double omega_abs,
                                         double p, int N, bool complete) {
    require_pn(p, N);
    require_probe(omega_abs);
    const int T = s.truncation_order();
    const auto m = moduli(s);
    const double a0 = clamp01(m[0]);

    const double fm = std::abs(eval(s, w_m0_at));
    const double tail_f = complete ? 0.0 : tail_bound(a0, std::abs(w_m0_at), T + 1);
    const double first = std::pow(fm, p);
    double tail = std::pow(fm + tail_f, p) - first;
    if (!complete) tail += tail_bound(a0, omega_abs, std::max(N, T + 1));
    return {first + weighted_sum(m, omega_abs, N), tail};
}

FunctionalValue refined_j_series(const PowerSeries& s, Complex w_m0_at, double omega_abs, double p,
                                 int N, bool complete) {
    require_pn(p, N);
    require_probe(omega_abs);
    const int T = s.truncation_order();
    const auto m = moduli(s);
    const double a0 = clamp01(m[0]);

    const double fm = std::abs(eval(s, w_m0_at));
    const double tail_f = complete ? 0.0 : tail_bound(a0, std::abs(w_m0_at), T + 1);
    const double first = std::pow(fm, p);
    const Groups g = refined_groups(m, a0, omega_abs, N, complete);
    return {first + g.value, (std::pow(fm + tail_f, p) - first) + g.tail};
}

FunctionalValue refined_l_series(const PowerSeries& s, double omega_abs, bool complete) {
    require_probe(omega_abs);
    if (s.truncation_order() < 1) throw std::invalid_argument("refined_l_series: series too short");
    if (std::abs(s.coeff(0)) > 1e-15)
        throw std::invalid_argument("refined_l_series: requires zero constant term");
    const int T = s.truncation_order();
    const auto m = moduli(s);
    const double a1 = clamp01(m[1]);
    const double bound = 1.0 - a1 * a1;
    const double u = omega_abs;

    const double factor = 1.0 / (1.0 + a1) + u / (1.0 - u);
    double sq = 0.0;
    for (std::size_t n = m.size(); n-- > 2;) sq = sq * u * u + m[n] * m[n];
    sq *= powi(u, 3);

    const double value = weighted_sum(m, u, 1) + factor * sq;
    const double tail = complete ? 0.0
                                 : bound * powi(u, T + 1) / (1.0 - u) +
                                       factor * bound * bound * powi(u, 2 * T + 1) / (1.0 - u * u);
    return {value, tail};
}

}  // namespace bohr
