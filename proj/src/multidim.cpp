#include "bohr/multidim.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

#include "bohr/rng.hpp"

namespace bohr {
namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;

bool finite(Complex z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

int degree_of(const std::vector<int>& alpha) {
    int d = 0;
    for (int a : alpha) {
        if (a < 0) throw std::invalid_argument("HomogeneousExpansion: negative multi-index entry");
        d += a;
    }
    return d;
}

}  // namespace

HomogeneousExpansion::HomogeneousExpansion(int dims_, int max_degree_, bool complete_,
                                           std::map<std::vector<int>, Complex> terms_)
    : dims(dims_), max_degree(max_degree_), complete(complete_), terms(std::move(terms_)) {
    if (dims < 1) throw std::invalid_argument("HomogeneousExpansion: dims must be >= 1");
    if (max_degree < 0) throw std::invalid_argument("HomogeneousExpansion: max_degree must be >= 0");
    for (const auto& [alpha, coeff] : terms) {
        if (static_cast<int>(alpha.size()) != dims)
            throw std::invalid_argument("HomogeneousExpansion: multi-index length != dims");
        if (degree_of(alpha) > max_degree)
            throw std::invalid_argument("HomogeneousExpansion: multi-index degree exceeds max_degree");
        if (!finite(coeff)) throw std::invalid_argument("HomogeneousExpansion: non-finite coefficient");
    }
}

Complex HomogeneousExpansion::constant_term() const {
    const auto it = terms.find(std::vector<int>(static_cast<size_t>(dims), 0));
    return it == terms.end() ? Complex{0.0, 0.0} : it->second;
}

LineDirection LineDirection::polydisk(std::vector<Complex> d) {
    double biggest = 0.0;
    for (Complex c : d) {
        if (!finite(c)) throw std::invalid_argument("LineDirection: non-finite entry");
        biggest = std::max(biggest, std::abs(c));
    }
    if (biggest == 0.0) throw std::invalid_argument("LineDirection: zero direction");
    for (Complex& c : d) c /= biggest;
    return LineDirection{std::move(d)};
}

LineDirection LineDirection::half_space(std::vector<Complex> d,
                                        const std::vector<Complex>& functional) {
    if (d.size() != functional.size())
        throw std::invalid_argument("LineDirection: functional length != direction length");
    Complex pairing{0.0, 0.0};
    for (size_t j = 0; j < d.size(); ++j) {
        if (!finite(d[j]) || !finite(functional[j]))
            throw std::invalid_argument("LineDirection: non-finite entry");
        pairing += functional[j] * d[j];
    }
    const double scale = std::abs(pairing);
    if (scale == 0.0)
        throw std::invalid_argument("LineDirection: direction annihilated by the functional");
    for (Complex& c : d) c /= scale;
    return LineDirection{std::move(d)};
}

LineDirection LineDirection::raw(std::vector<Complex> d) {
    if (d.empty()) throw std::invalid_argument("LineDirection: empty direction");
    for (Complex c : d)
        if (!finite(c)) throw std::invalid_argument("LineDirection: non-finite entry");
    return LineDirection{std::move(d)};
}

PowerSeries section(const HomogeneousExpansion& e, const LineDirection& b) {
    if (b.dims() != e.dims) throw std::invalid_argument("section: direction dims != expansion dims");
    std::vector<Complex> coeffs(static_cast<size_t>(e.max_degree) + 1, Complex{0.0, 0.0});
    for (const auto& [alpha, coeff] : e.terms) {
        Complex monomial = coeff;
        for (int j = 0; j < e.dims; ++j) monomial *= powi(b.b[static_cast<size_t>(j)], alpha[static_cast<size_t>(j)]);
        coeffs[static_cast<size_t>(degree_of(alpha))] += monomial;
    }
    return PowerSeries(std::move(coeffs));
}

HomogeneousExpansion compose_line(const BoundedFunction& f, const LineDirection& b, int k,
                                  int max_degree) {
    if (k < 1) throw std::invalid_argument("compose_line: k must be >= 1");
    if (max_degree < 0) throw std::invalid_argument("compose_line: max_degree must be >= 0");
    const int n = b.dims();
    if (n < 1) throw std::invalid_argument("compose_line: empty direction");

    const int m_max = max_degree / k;
    const PowerSeries c = taylor(f, m_max);

    // Accumulate sum_m c_m g^m with g = sum_j b_j x_j by repeated sparse
    // multiplication, then stretch every index by k (x_j stands for z_j^k).
    using Poly = std::map<std::vector<int>, Complex>;
    Poly total;
    total[std::vector<int>(static_cast<size_t>(n), 0)] = c.coeff(0);

    Poly power;  // g^m for the current m
    power[std::vector<int>(static_cast<size_t>(n), 0)] = Complex{1.0, 0.0};
    for (int m = 1; m <= m_max; ++m) {
        Poly next;
        for (const auto& [beta, val] : power) {
            for (int j = 0; j < n; ++j) {
                std::vector<int> up = beta;
                ++up[static_cast<size_t>(j)];
                next[up] += val * b.b[static_cast<size_t>(j)];
            }
        }
        power = std::move(next);
        const Complex cm = c.coeff(m);
        if (cm == Complex{0.0, 0.0}) continue;
        for (const auto& [beta, val] : power) total[beta] += cm * val;
    }

    Poly stretched;
    for (const auto& [beta, val] : total) {
        if (val == Complex{0.0, 0.0}) continue;
        std::vector<int> alpha(beta.size());
        for (size_t j = 0; j < beta.size(); ++j) alpha[j] = k * beta[j];
        stretched[std::move(alpha)] = val;
    }
    return HomogeneousExpansion(n, m_max * k, false, std::move(stretched));
}

const char* theorem_name(TheoremCheck::Kind kind) {
    switch (kind) {
        case TheoremCheck::Kind::majorant: return "majorant";
        case TheoremCheck::Kind::zero_omitted: return "zero_omitted";
        case TheoremCheck::Kind::bohr_rogosinski: return "bohr_rogosinski";
        case TheoremCheck::Kind::refined_bohr_rogosinski: return "refined_bohr_rogosinski";
        case TheoremCheck::Kind::refined_zero_coeff: return "refined_zero_coeff";
    }
    throw std::logic_error("theorem_name: unreachable");
}

namespace {

RadiusProblem homothety_problem(const TheoremCheck& thm, int k) {
    switch (thm.kind) {
        case TheoremCheck::Kind::majorant:
            return ClosedForm{ClosedForm::Kind::bohr_third, k};
        case TheoremCheck::Kind::zero_omitted:
            return ClosedForm{ClosedForm::Kind::bombieri, k};
        case TheoremCheck::Kind::bohr_rogosinski:
        case TheoremCheck::Kind::refined_bohr_rogosinski:
            return YEquation{thm.p, k, thm.N, thm.m0};
        case TheoremCheck::Kind::refined_zero_coeff:
            return ClosedForm{ClosedForm::Kind::refined_three_fifths, k};
    }
    throw std::logic_error("homothety_problem: unreachable");
}

std::string describe_line(long index, const LineDirection& d, double phase) {
    std::string out = "line=" + std::to_string(index) + " d=[";
    char buf[96];
    for (size_t j = 0; j < d.b.size(); ++j) {
        std::snprintf(buf, sizeof(buf), "%s%.17g%+.17gi", j ? "," : "", d.b[j].real(), d.b[j].imag());
        out += buf;
    }
    std::snprintf(buf, sizeof(buf), "] phase=%.17g", phase);
    out += buf;
    return out;
}

}  // namespace

VerificationReport verify_theorem(const HomogeneousExpansion& e, const TheoremCheck& thm, int k,
                                  long lines, std::uint64_t seed, double margin) {
    if (k < 1) throw std::invalid_argument("verify_theorem: k must be >= 1");
    if (lines < 1) throw std::invalid_argument("verify_theorem: lines must be >= 1");
    const bool needs_zero = thm.kind == TheoremCheck::Kind::zero_omitted ||
                            thm.kind == TheoremCheck::Kind::refined_zero_coeff;
    if (needs_zero && std::abs(e.constant_term()) > 1e-15)
        throw std::invalid_argument("verify_theorem: this statement needs a zero constant term");

    const double radius = solve_radius(homothety_problem(thm, k)).root;
    const double rho = radius - margin;
    if (!(rho > 0.0 && rho < 1.0))
        throw std::invalid_argument("verify_theorem: probe radius must lie in (0, 1)");
    const double u = powi(rho, k);

    VerificationReport report;
    report.trials_run = lines;
    report.seed = seed;
    report.radius = radius;
    report.probe_radius = rho;
    report.max_value = -1.0;

    for (long i = 0; i < lines; ++i) {
        LineDirection d = LineDirection::polydisk(std::vector<Complex>(static_cast<size_t>(e.dims), Complex{1.0, 0.0}));
        double phase = 0.0;
        if (i > 0) {
            SplitMix64 rng(derive_seed(seed, static_cast<std::uint64_t>(i)));
            std::vector<Complex> raw(static_cast<size_t>(e.dims));
            bool all_zero = true;
            for (auto& c : raw) {
                c = rng.next_in_disk();
                if (c != Complex{0.0, 0.0}) all_zero = false;
            }
            if (all_zero) raw[0] = Complex{1.0, 0.0};
            d = LineDirection::polydisk(std::move(raw));
            phase = 2.0 * kPi * rng.next_double();
        }

        const PowerSeries s = section(e, d);
        const Complex h{rho * std::cos(phase), rho * std::sin(phase)};
        const Complex w_m0_at = -powi(h, thm.m0);

        FunctionalValue v;
        switch (thm.kind) {
            case TheoremCheck::Kind::majorant:
                v = majorant_series(s, u, e.complete);
                break;
            case TheoremCheck::Kind::zero_omitted:
                v = zero_omitted_series(s, u, e.complete);
                break;
            case TheoremCheck::Kind::bohr_rogosinski:
                v = bohr_rogosinski_i_series(s, w_m0_at, u, thm.p, thm.N, e.complete);
                break;
            case TheoremCheck::Kind::refined_bohr_rogosinski:
                v = refined_j_series(s, w_m0_at, u, thm.p, thm.N, e.complete);
                break;
            case TheoremCheck::Kind::refined_zero_coeff:
                v = refined_l_series(s, u, e.complete);
                break;
        }

        const double value = v.total_upper();
        if (value > report.max_value) {
            report.max_value = value;
            report.argmax_index = i;
            report.argmax_descriptor = describe_line(i, d, phase);
        }
        if (value > 1.0 + kEpsFloat)
            report.violations.push_back({i, value, describe_line(i, d, phase)});
    }
    return report;
}

}  // namespace bohr
