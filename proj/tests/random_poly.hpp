// Small generators for the property-style sweeps.
#ifndef BALLKRALL_TESTS_RANDOM_POLY_HPP
#define BALLKRALL_TESTS_RANDOM_POLY_HPP

#include <random>
#include <vector>

#include <ballkrall/multipoly.hpp>
#include <ballkrall/unipoly.hpp>

namespace ballkrall::testing {

inline Rational random_rational(std::mt19937& rng, int span = 5, int max_den = 4) {
    std::uniform_int_distribution<int> num(-span, span);
    std::uniform_int_distribution<int> den(1, max_den);
    return rat(num(rng), den(rng));
}

inline MultiPoly random_multipoly(std::mt19937& rng, std::size_t dim,
                                  unsigned max_degree, int max_terms = 6) {
    std::uniform_int_distribution<int> nterms(0, max_terms);
    std::uniform_int_distribution<unsigned> deg(0, max_degree);
    MultiPoly p(dim);
    const int count = nterms(rng);
    for (int t = 0; t < count; ++t) {
        const unsigned total = deg(rng);
        const auto monos = monomials_of_degree(dim, total);
        std::uniform_int_distribution<std::size_t> pick(0, monos.size() - 1);
        p.add_term(monos[pick(rng)], random_rational(rng));
    }
    return p;
}

inline UniPoly random_unipoly(std::mt19937& rng, int max_degree) {
    std::uniform_int_distribution<int> deg(0, max_degree);
    std::vector<Rational> c(static_cast<std::size_t>(deg(rng)) + 1);
    for (auto& x : c) x = random_rational(rng);
    return UniPoly(std::move(c));
}

inline std::vector<Rational> random_point(std::mt19937& rng, std::size_t dim) {
    std::vector<Rational> x(dim);
    for (auto& v : x) v = random_rational(rng, 7, 6);
    return x;
}

}  // namespace ballkrall::testing

#endif
