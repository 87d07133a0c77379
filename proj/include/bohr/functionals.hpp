#pragma once
#include "bohr/schwarz.hpp"

namespace bohr {

// Partial-sum evaluation plus a certified bound on everything the truncation
// dropped. The exact quantity lies in [value - first_term_slack, total_upper];
// for pure positive-sum functionals value itself is a certified lower bound.
struct FunctionalValue {
    double value = 0.0;
    double tail = 0.0;
    double total_upper() const { return value + tail; }
};

// Pointwise uses |w(z)| and f(w(z)) as sampled; envelope replaces them by their
// sharp uniform bounds r^k and (r^{m0}+a)/(1+a r^{m0}) with a = |f(0)|, r = |z|.
enum class EvalMode { pointwise, envelope };

// Tag identifying which inequality a verification or witness run targets.
struct FunctionalKind {
    enum class Tag {
        majorant,           // sum_{n>=0} |a_n| |w(z)|^n
        zero_omitted_sum,   // sum_{n>=1} |a_n| |w(z)|^n
        rogosinski_sum,     // |f(z)| + sum_{n>=N} |a_n| |z|^n
        bohr_rogosinski_i,  // |f(w_{m0}(z))|^p + sum_{n>=N} |a_n| |w_k(z)|^n
        refined_j,          // bohr_rogosinski_i plus the squared-coefficient groups
        refined_l,          // zero-constant-term refinement with the |w|^{2n-1} group
        refined_a,          // refined_j with both maps the identity
    };
    Tag tag;
    double p = 1.0;
    int N = 1;
};

FunctionalKind make_kind(FunctionalKind::Tag tag, double p = 1.0, int N = 1);
const char* kind_name(FunctionalKind::Tag tag);

// ((rho + a) / (1 + a rho))^p: sharp bound for |f(w)|^p when |f(0)| = a, |w| <= rho.
double schwarz_pick_envelope(double a0_mod, double rho, double p);

// --- unit-ball function interface -------------------------------------------
// T is the truncation order of the expansion used for the sums; the dropped
// remainder is certified into .tail. Requires |z| < 1 throughout.

FunctionalValue majorant(const BoundedFunction& f, const SchwarzMap& w, Complex z, int T = 64);

FunctionalValue zero_omitted_sum(const BoundedFunction& f, const SchwarzMap& w, Complex z, int T = 64);

FunctionalValue rogosinski_sum(const BoundedFunction& f, Complex z, int N, int T = 64);

FunctionalValue bohr_rogosinski_i(const BoundedFunction& f, const SchwarzMap& w_m0,
                                  const SchwarzMap& w_k, Complex z, double p, int N, int T = 64,
                                  EvalMode mode = EvalMode::pointwise);

// Adds sgn(t) sum_{n=1}^{t} |a_n|^2 u^N/(1-u) and
// (1/(1+|a_0|) + u/(1-u)) sum_{n>=t+1} |a_n|^2 u^{2n}, t = floor((N-1)/2), u = |w_k(z)|.
FunctionalValue refined_j(const BoundedFunction& f, const SchwarzMap& w_m0, const SchwarzMap& w_k,
                          Complex z, double p, int N, int T = 64,
                          EvalMode mode = EvalMode::pointwise);

// Requires f(0) = 0 exactly. Uses
// sum_{n>=1} |a_n| u^n + (1/(1+|a_1|) + u/(1-u)) sum_{n>=2} |a_n|^2 u^{2n-1}.
FunctionalValue refined_l(const BoundedFunction& f, const SchwarzMap& w_k, Complex z, int T = 64);

// refined_j with both maps the identity: first term |f(z)|^p, sums in r = |z|.
FunctionalValue refined_a(const BoundedFunction& f, Complex z, double p, int N, int T = 64);

// The three grouped sums of refined_a without the |f|^p term; bounded above by
// tail_bound(|a_0|, r, N) for any unit-ball f.
FunctionalValue refined_remainder(const BoundedFunction& f, Complex z, int N, int T = 64);

// --- sectioned-series interface ----------------------------------------------
// s must expand a certified unit-ball function (e.g. a complex-line section of a
// bounded function of several variables). complete = true means s is the entire
// expansion, so no truncation tail is charged. omega_abs is |w_k| at the probe.

FunctionalValue majorant_series(const PowerSeries& s, double omega_abs, bool complete);

FunctionalValue zero_omitted_series(const PowerSeries& s, double omega_abs, bool complete);

// w_m0_at is the (complex) value w_{m0}(h) fed to the sectioned function; its
// modulus enters the first-term tail charge when the expansion is truncated.
FunctionalValue bohr_rogosinski_i_series(const PowerSeries& s, Complex w_m0_at, double omega_abs,
                                         double p, int N, bool complete);

FunctionalValue refined_j_series(const PowerSeries& s, Complex w_m0_at, double omega_abs, double p,
                                 int N, bool complete);

FunctionalValue refined_l_series(const PowerSeries& s, double omega_abs, bool complete);

}  // namespace bohr
