#include "bohr/bounded_function.hpp"

#include <cmath>

namespace bohr {
namespace {

bool finite(Complex c) { return std::isfinite(c.real()) && std::isfinite(c.imag()); }

void require_in_disk(Complex z) {
    if (std::abs(z) >= 1.0) throw std::invalid_argument("BoundedFunction: requires |z| < 1");
}

}  // namespace

BoundedFunction BoundedFunction::extremal_fa(double a) {
    if (!(a >= 0.0 && a < 1.0)) throw std::invalid_argument("extremal_fa: a must lie in [0, 1)");
    return BoundedFunction(Rep{ExtremalFa{a}});
}

BoundedFunction BoundedFunction::extremal_fa_star(double a) {
    if (!(a > 0.0 && a < 1.0)) throw std::invalid_argument("extremal_fa_star: a must lie in (0, 1)");
    return BoundedFunction(Rep{ExtremalFaStar{a}});
}

BoundedFunction BoundedFunction::finite_blaschke(std::vector<Complex> zeros, Complex rotation) {
    for (Complex w : zeros) {
        if (!finite(w) || std::abs(w) >= 1.0)
            throw std::invalid_argument("finite_blaschke: zeros must lie in the open disk");
    }
    if (!finite(rotation) || std::abs(std::abs(rotation) - 1.0) > 1e-9)
        throw std::invalid_argument("finite_blaschke: rotation must be unimodular");
    return BoundedFunction(Rep{FiniteBlaschke{std::move(zeros), rotation}});
}

BoundedFunction BoundedFunction::schur_sequence(std::vector<Complex> params) {
    if (params.empty()) throw std::invalid_argument("schur_sequence: needs at least one parameter");
    for (Complex g : params) {
        if (!finite(g) || std::abs(g) > 1.0 + 1e-12)
            throw std::invalid_argument("schur_sequence: parameters must have modulus <= 1");
    }
    return BoundedFunction(Rep{SchurSequence{std::move(params)}});
}

BoundedFunction BoundedFunction::monomial(int degree) {
    if (degree < 0) throw std::invalid_argument("monomial: degree must be >= 0");
    return BoundedFunction(Rep{Monomial{degree}});
}

Complex BoundedFunction::operator()(Complex z) const {
    require_in_disk(z);
    struct Visitor {
        Complex z;
        Complex operator()(const ExtremalFa& r) const { return (r.a - z) / (1.0 - r.a * z); }
        Complex operator()(const ExtremalFaStar& r) const { return z * (r.a - z) / (1.0 - r.a * z); }
        Complex operator()(const FiniteBlaschke& r) const {
            Complex acc = r.rotation;
            for (Complex w : r.zeros) acc *= (w - z) / (1.0 - std::conj(w) * z);
            return acc;
        }
        Complex operator()(const SchurSequence& r) const {
            // f_j = (g_j + z f_{j+1}) / (1 + conj(g_j) z f_{j+1}), innermost f = g_last.
            Complex f = r.params.back();
            for (auto it = std::next(r.params.rbegin()); it != r.params.rend(); ++it)
                f = (*it + z * f) / (1.0 + std::conj(*it) * z * f);
            return f;
        }
        Complex operator()(const Monomial& r) const { return powi(z, r.degree); }
    };
    return std::visit(Visitor{z}, rep_);
}

PowerSeries BoundedFunction::taylor(int truncation) const {
    if (truncation < 0) throw std::invalid_argument("taylor: truncation must be >= 0");
    const std::size_t len = static_cast<std::size_t>(truncation) + 1;
    struct Visitor {
        int T;
        std::size_t len;
        std::vector<Complex> operator()(const ExtremalFa& r) const {
            std::vector<Complex> c(len, Complex{0.0, 0.0});
            c[0] = r.a;
            const double s = 1.0 - r.a * r.a;
            for (int n = 1; n <= T; ++n) c[static_cast<std::size_t>(n)] = -s * powi(r.a, n - 1);
            return c;
        }
        std::vector<Complex> operator()(const ExtremalFaStar& r) const {
            std::vector<Complex> c(len, Complex{0.0, 0.0});
            if (T >= 1) c[1] = r.a;
            const double s = 1.0 - r.a * r.a;
            for (int n = 2; n <= T; ++n) c[static_cast<std::size_t>(n)] = -s * powi(r.a, n - 2);
            return c;
        }
        std::vector<Complex> operator()(const FiniteBlaschke& r) const {
            std::vector<Complex> acc{r.rotation};
            for (Complex w : r.zeros) {
                // (w - z) / (1 - conj(w) z) = w + sum_{n>=1} conj(w)^{n-1} (|w|^2 - 1) z^n
                std::vector<Complex> factor(len, Complex{0.0, 0.0});
                factor[0] = w;
                const double d = std::norm(w) - 1.0;
                for (int n = 1; n <= T; ++n)
                    factor[static_cast<std::size_t>(n)] = powi(std::conj(w), n - 1) * d;
                acc = series_detail::mul(acc, factor, T);
            }
            acc.resize(len, Complex{0.0, 0.0});
            return acc;
        }
        std::vector<Complex> operator()(const SchurSequence& r) const {
            std::vector<Complex> f{r.params.back()};
            for (auto it = std::next(r.params.rbegin()); it != r.params.rend(); ++it) {
                // w = z * f, then f <- (g + w) / (1 + conj(g) w).
                std::vector<Complex> w(f.size() + 1, Complex{0.0, 0.0});
                for (std::size_t i = 0; i < f.size() && i + 1 <= static_cast<std::size_t>(T); ++i)
                    w[i + 1] = f[i];
                w.resize(std::min<std::size_t>(w.size(), len));
                std::vector<Complex> num = w;
                num[0] += *it;
                std::vector<Complex> den(w.size());
                for (std::size_t i = 0; i < w.size(); ++i) den[i] = std::conj(*it) * w[i];
                den[0] += 1.0;
                f = series_detail::mul(num, series_detail::reciprocal(den, T), T);
            }
            f.resize(len, Complex{0.0, 0.0});
            return f;
        }
        std::vector<Complex> operator()(const Monomial& r) const {
            std::vector<Complex> c(len, Complex{0.0, 0.0});
            if (r.degree <= T) c[static_cast<std::size_t>(r.degree)] = 1.0;
            return c;
        }
    };
    return PowerSeries(std::visit(Visitor{truncation, len}, rep_));
}

Complex BoundedFunction::constant_term() const {
    struct Visitor {
        Complex operator()(const ExtremalFa& r) const { return {r.a, 0.0}; }
        Complex operator()(const ExtremalFaStar&) const { return {0.0, 0.0}; }
        Complex operator()(const FiniteBlaschke& r) const {
            Complex acc = r.rotation;
            for (Complex w : r.zeros) acc *= w;
            return acc;
        }
        Complex operator()(const SchurSequence& r) const { return r.params.front(); }
        Complex operator()(const Monomial& r) const { return r.degree == 0 ? Complex{1.0, 0.0} : Complex{0.0, 0.0}; }
    };
    return std::visit(Visitor{}, rep_);
}

const char* BoundedFunction::family_name() const {
    struct Visitor {
        const char* operator()(const ExtremalFa&) const { return "extremal_fa"; }
        const char* operator()(const ExtremalFaStar&) const { return "extremal_fa_star"; }
        const char* operator()(const FiniteBlaschke&) const { return "finite_blaschke"; }
        const char* operator()(const SchurSequence&) const { return "schur_sequence"; }
        const char* operator()(const Monomial&) const { return "monomial"; }
    };
    return std::visit(Visitor{}, rep_);
}

}  // namespace bohr
