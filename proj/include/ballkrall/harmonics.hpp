#ifndef BALLKRALL_HARMONICS_HPP
#define BALLKRALL_HARMONICS_HPP

#include <cstddef>
#include <map>
#include <utility>
#include <vector>

#include "differential.hpp"
#include "measures.hpp"
#include "multipoly.hpp"
#include "rational.hpp"

namespace ballkrall {

/// Ordinary binomial coefficient; zero outside 0 <= k <= n.
inline long binom(long n, long k) {
    if (n < 0 || k < 0 || k > n) return 0;
    long out = 1;
    for (long j = 1; j <= k; ++j) out = out * (n - k + j) / j;
    return out;
}

/// a_m^d = binom(m+d-1, d-1) - binom(m+d-3, d-1).
inline long harmonic_dimension(long dim, long m) {
    return binom(m + dim - 1, dim - 1) - binom(m + dim - 3, dim - 1);
}

struct HarmonicBasis {
    std::size_t dim = 0;
    unsigned degree = 0;
    /// Mutually orthogonal on the sphere, each homogeneous and harmonic.
    std::vector<MultiPoly> elements;
    /// <Y, Y>_{S^{d-1}} for each element, in the same order.
    std::vector<Rational> gram_norms;
};

namespace detail {

using IntMatrix = std::vector<std::vector<Integer>>;

/// Nullspace of an integer matrix. Fraction-free (Bareiss) forward
/// elimination, pivots chosen as the first remaining row with a nonzero entry
/// in the leftmost available column; one basis vector per free column in
/// increasing column order, with that free variable set to 1.
inline std::vector<std::vector<Rational>> integer_nullspace(IntMatrix a, std::size_t cols) {
    const std::size_t rows = a.size();
    std::vector<std::size_t> pivot_cols;
    Integer prev_pivot = 1;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t pick = r;
        while (pick < rows && a[pick][c] == 0) ++pick;
        if (pick == rows) continue;
        std::swap(a[r], a[pick]);
        for (std::size_t i = r + 1; i < rows; ++i) {
            for (std::size_t j = c + 1; j < cols; ++j)
                a[i][j] = (a[r][c] * a[i][j] - a[i][c] * a[r][j]) / prev_pivot;
            a[i][c] = 0;
        }
        prev_pivot = a[r][c];
        pivot_cols.push_back(c);
        ++r;
    }

    std::vector<bool> is_pivot(cols, false);
    for (auto c : pivot_cols) is_pivot[c] = true;

    std::vector<std::vector<Rational>> basis;
    for (std::size_t free = 0; free < cols; ++free) {
        if (is_pivot[free]) continue;
        std::vector<Rational> v(cols);
        v[free] = 1;
        for (std::size_t k = pivot_cols.size(); k-- > 0;) {
            const std::size_t pc = pivot_cols[k];
            Rational s = 0;
            for (std::size_t j = pc + 1; j < cols; ++j)
                if (a[k][j] != 0 && v[j] != 0) s += Rational(a[k][j]) * v[j];
            v[pc] = -s / Rational(a[k][pc]);
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

}  // namespace detail

/// Harmonic homogeneous polynomials of degree m in d variables: the exact
/// nullspace of the Laplacian on degree-m monomials, made mutually orthogonal
/// on the sphere by Gram-Schmidt without normalization.
inline HarmonicBasis harmonic_basis(std::size_t dim, unsigned m) {
    if (dim < 2) throw ParameterError("harmonic_basis needs d >= 2");
    const auto cols = monomials_of_degree(dim, m);

    std::vector<MultiPoly> raw;
    if (m < 2) {
        for (const auto& mono : cols) raw.push_back(MultiPoly::term(mono, 1));
    } else {
        const auto rows = monomials_of_degree(dim, m - 2);
        std::map<Monomial, std::size_t, GradedLex> row_of;
        for (std::size_t i = 0; i < rows.size(); ++i) row_of.emplace(rows[i], i);
        detail::IntMatrix lap(rows.size(), std::vector<Integer>(cols.size()));
        for (std::size_t j = 0; j < cols.size(); ++j)
            for (std::size_t i = 0; i < dim; ++i) {
                const unsigned e = cols[j][i];
                if (e < 2) continue;
                Monomial target = cols[j];
                target[i] -= 2;
                lap[row_of.at(target)][j] += static_cast<long>(e) * (e - 1);
            }
        for (const auto& v : detail::integer_nullspace(std::move(lap), cols.size())) {
            MultiPoly p(dim);
            for (std::size_t j = 0; j < cols.size(); ++j) p.add_term(cols[j], v[j]);
            raw.push_back(std::move(p));
        }
    }

    HarmonicBasis out{dim, m, {}, {}};
    MomentTable sphere(MeasureParams{dim, Rational(1, 2), 0});
    for (auto& v : raw) {
        for (std::size_t j = 0; j < out.elements.size(); ++j) {
            const Rational proj = sphere.inner_sphere(v, out.elements[j]);
            if (proj != 0) v -= out.elements[j] * (proj / out.gram_norms[j]);
        }
        out.gram_norms.push_back(sphere.inner_sphere(v, v));
        out.elements.push_back(std::move(v));
    }
    return out;
}

namespace detail {
inline void require_homogeneous(const MultiPoly& y, unsigned m) {
    if (!y.is_homogeneous(m))
        throw ParameterError("polynomial is not homogeneous of degree " + std::to_string(m));
}
}  // namespace detail

/// <x, grad> Y - m Y for Y homogeneous of degree m.
inline MultiPoly euler_residual(const MultiPoly& y, unsigned m) {
    detail::require_homogeneous(y, m);
    return euler_op(y) - y * Rational(m);
}

/// Delta_0 Y + m(m+d-2) Y for Y homogeneous of degree m; zero when Y is harmonic.
inline MultiPoly laplace_beltrami_residual(const MultiPoly& y, unsigned m) {
    detail::require_homogeneous(y, m);
    const long d = static_cast<long>(y.dim());
    return laplace_beltrami(y) + y * Rational(static_cast<long>(m) * (m + d - 2));
}

/// |x|^2 Delta f - Delta_0 f - m(m+d-2) f for f homogeneous of degree m:
/// the polar split of the Laplacian, with Delta_0 from the rotation generators.
inline MultiPoly polar_decomposition_residual(const MultiPoly& f, unsigned m) {
    detail::require_homogeneous(f, m);
    const long d = static_cast<long>(f.dim());
    return MultiPoly::norm_squared(f.dim()) * laplacian(f) - laplace_beltrami(f) -
           f * Rational(static_cast<long>(m) * (m + d - 2));
}

}  // namespace ballkrall

#endif  // BALLKRALL_HARMONICS_HPP
