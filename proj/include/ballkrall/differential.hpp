#ifndef BALLKRALL_DIFFERENTIAL_HPP
#define BALLKRALL_DIFFERENTIAL_HPP

#include <cstddef>

#include "multipoly.hpp"

namespace ballkrall {

/// Sum of pure second partials.
inline MultiPoly laplacian(const MultiPoly& p) {
    MultiPoly out(p.dim());
    for (std::size_t i = 0; i < p.dim(); ++i)
        out += p.partial_derivative(i).partial_derivative(i);
    return out;
}

/// <x, grad> p = sum_i x_i dp/dx_i.
inline MultiPoly euler_op(const MultiPoly& p) {
    MultiPoly out(p.dim());
    for (std::size_t i = 0; i < p.dim(); ++i)
        out += p.partial_derivative(i).times_variable(i);
    return out;
}

/// Rotation generator x_i d/dx_j - x_j d/dx_i.
inline MultiPoly angular_generator(const MultiPoly& p, std::size_t i, std::size_t j) {
    return p.partial_derivative(j).times_variable(i) - p.partial_derivative(i).times_variable(j);
}

/// Laplace-Beltrami operator extended to polynomials, realized as the sum of
/// squared rotation generators sum_{i<j} L_ij^2. It acts on the angular
/// variables only and does not go through the Laplacian.
inline MultiPoly laplace_beltrami(const MultiPoly& p) {
    MultiPoly out(p.dim());
    for (std::size_t i = 0; i < p.dim(); ++i)
        for (std::size_t j = i + 1; j < p.dim(); ++j)
            out += angular_generator(angular_generator(p, i, j), i, j);
    return out;
}

}  // namespace ballkrall

#endif  // BALLKRALL_DIFFERENTIAL_HPP
