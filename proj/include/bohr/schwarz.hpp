#pragma once
#include <cstdint>

#include "bohr/bounded_function.hpp"

namespace bohr {

// w(z) = z^k g(z) with g in the unit ball, so |w(z)| <= |z|^k by construction.
class SchwarzMap {
public:
    // General constructor: order k >= 1 and an inner factor from the unit ball.
    SchwarzMap(int order, BoundedFunction inner);

    // w(z) = z^k.
    static SchwarzMap monomial(int k);

    // w(z) = -z^{m0}; attains the envelope |f(w(r))| = (r^{m0}+a)/(1+a r^{m0}) on extremal_fa.
    static SchwarzMap negated_monomial(int m0);

    // Deterministic function of seed: inner factor is a Schur sequence with
    // inner_degree + 1 parameters sampled area-uniformly from the closed disk.
    static SchwarzMap random(int k, int inner_degree, std::uint64_t seed);

    int order() const { return order_; }
    const BoundedFunction& inner() const { return inner_; }

    // Exact value z^k g(z). Requires |z| < 1.
    Complex operator()(Complex z) const;

private:
    int order_;
    BoundedFunction inner_;
};

inline Complex eval_schwarz(const SchwarzMap& w, Complex z) { return w(z); }

}  // namespace bohr
