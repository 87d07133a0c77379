#include "bohr/schwarz.hpp"

#include <cmath>

#include "bohr/rng.hpp"

namespace bohr {

SchwarzMap::SchwarzMap(int order, BoundedFunction inner) : order_(order), inner_(std::move(inner)) {
    if (order < 1) throw std::invalid_argument("SchwarzMap: order must be >= 1");
}

SchwarzMap SchwarzMap::monomial(int k) { return SchwarzMap(k, BoundedFunction::monomial(0)); }

SchwarzMap SchwarzMap::negated_monomial(int m0) {
    return SchwarzMap(m0, BoundedFunction::schur_sequence({Complex{-1.0, 0.0}}));
}

SchwarzMap SchwarzMap::random(int k, int inner_degree, std::uint64_t seed) {
    if (inner_degree < 0) throw std::invalid_argument("SchwarzMap::random: inner_degree must be >= 0");
    SplitMix64 rng(seed);
    std::vector<Complex> params(static_cast<std::size_t>(inner_degree) + 1);
    for (Complex& g : params) g = rng.next_in_disk();
    return SchwarzMap(k, BoundedFunction::schur_sequence(std::move(params)));
}

Complex SchwarzMap::operator()(Complex z) const {
    if (std::abs(z) >= 1.0) throw std::invalid_argument("SchwarzMap: requires |z| < 1");
    return powi(z, order_) * inner_(z);
}

}  // namespace bohr
