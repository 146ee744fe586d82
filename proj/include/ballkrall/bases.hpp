#ifndef BALLKRALL_BASES_HPP
#define BALLKRALL_BASES_HPP

#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "harmonics.hpp"
#include "jacobi.hpp"
#include "measures.hpp"
#include "multipoly.hpp"

namespace ballkrall {

/// (n, k, nu) with beta_k = n - 2k + (d-2)/2; nu counts from 1.
struct BasisIndex {
    unsigned n = 0;
    unsigned k = 0;
    unsigned nu = 1;
    Rational beta_k;

    unsigned harmonic_degree() const { return n - 2 * k; }
};

inline Rational beta_k(unsigned n, unsigned k, std::size_t dim) {
    return Rational(static_cast<long>(n) - 2 * static_cast<long>(k)) +
           Rational(static_cast<long>(dim) - 2, 2);
}

enum class BasisKind { classical, lambda_modified };
enum class ProductKind { classical, lambda };

inline const char* to_string(BasisKind k) {
    return k == BasisKind::classical ? "classical" : "lambda";
}

struct BallBasisElement {
    BasisIndex index;
    BasisKind kind = BasisKind::classical;
    MultiPoly poly;
    Rational sq_norm;
    /// Radial factor u with poly = u(2|x|^2 - 1) * harmonic.
    UniPoly radial;
    MultiPoly harmonic;
    /// <harmonic, harmonic>_{S^{d-1}}.
    Rational harmonic_sq_norm;
};

/// Memo of harmonic bases by (d, m); the ball bases of consecutive degrees
/// reuse the same harmonic spaces. Not synchronized.
class HarmonicCache {
  public:
    const HarmonicBasis& get(std::size_t dim, unsigned m) {
        auto key = std::make_pair(dim, m);
        auto it = cache_.find(key);
        if (it == cache_.end()) it = cache_.emplace(key, harmonic_basis(dim, m)).first;
        return it->second;
    }

  private:
    std::map<std::pair<std::size_t, unsigned>, HarmonicBasis> cache_;
};

namespace detail {

template <typename RadialFactor>
std::vector<BallBasisElement> assemble_basis(unsigned n, const MeasureParams& params,
                                             BasisKind kind, HarmonicCache& harmonics,
                                             RadialFactor radial_for) {
    params.validate();
    MomentTable moments(params);
    std::vector<BallBasisElement> out;
    for (unsigned k = 0; 2 * k <= n; ++k) {
        const Rational bk = beta_k(n, k, params.dim);
        const UniPoly radial = radial_for(k, bk);
        const MultiPoly lifted = substitute_radial(radial, params.dim);
        const HarmonicBasis& hb = harmonics.get(params.dim, n - 2 * k);
        for (std::size_t v = 0; v < hb.elements.size(); ++v) {
            BallBasisElement e;
            e.index = {n, k, static_cast<unsigned>(v + 1), bk};
            e.kind = kind;
            e.poly = lifted * hb.elements[v];
            e.radial = radial;
            e.harmonic = hb.elements[v];
            e.harmonic_sq_norm = hb.gram_norms[v];
            e.sq_norm = kind == BasisKind::classical ? moments.inner_ball(e.poly, e.poly)
                                                     : moments.inner_lambda(e.poly, e.poly);
            out.push_back(std::move(e));
        }
    }
    return out;
}

}  // namespace detail

/// P^n_{k,nu}(x) = P_k^{(mu-1/2, beta_k)}(2|x|^2 - 1) Y_nu^{n-2k}(x), all (k, nu)
/// with k ascending then nu ascending.
inline std::vector<BallBasisElement> classical_basis(unsigned n, const MeasureParams& params,
                                                     HarmonicCache& harmonics) {
    const Rational alpha = params.mu - Rational(1, 2);
    return detail::assemble_basis(n, params, BasisKind::classical, harmonics,
                                  [&](unsigned k, const Rational& bk) {
                                      return jacobi_poly(k, {alpha, bk});
                                  });
}

inline std::vector<BallBasisElement> classical_basis(unsigned n, const MeasureParams& params) {
    HarmonicCache cache;
    return classical_basis(n, params, cache);
}

/// Radial factor of Q^n_{k,nu}. For mu = 1/2 this is q_k^{beta_k, M} with
/// M = d/(2 lambda); otherwise q_k^{(mu-1/2, beta_k, lambda)}.
inline UniPoly lambda_radial(unsigned k, const Rational& bk, const MeasureParams& params) {
    if (params.lambda <= 0)
        throw ParameterError("lambda-modified basis needs lambda > 0");
    const long d = static_cast<long>(params.dim);
    if (params.mu == Rational(1, 2)) return krall_q_M(k, bk, Rational(d) / (2 * params.lambda));
    return krall_q(k, KrallParams::from_lambda(params.mu - Rational(1, 2), bk, params.lambda, d));
}

/// Q^n_{k,nu}(x) = q_k(2|x|^2 - 1) Y_nu^{n-2k}(x), orthogonal for <.,.>_mu^lambda.
/// The index range includes k = 0.
inline std::vector<BallBasisElement> lambda_basis(unsigned n, const MeasureParams& params,
                                                  HarmonicCache& harmonics) {
    return detail::assemble_basis(n, params, BasisKind::lambda_modified, harmonics,
                                  [&](unsigned k, const Rational& bk) {
                                      return lambda_radial(k, bk, params);
                                  });
}

inline std::vector<BallBasisElement> lambda_basis(unsigned n, const MeasureParams& params) {
    HarmonicCache cache;
    return lambda_basis(n, params, cache);
}

using RationalMatrix = std::vector<std::vector<Rational>>;

/// Exact Gram matrix of the elements under <.,.>_mu or <.,.>_mu^lambda.
inline RationalMatrix gram_matrix(const std::vector<BallBasisElement>& elements,
                                  const MeasureParams& params, ProductKind product) {
    MomentTable moments(params);
    const std::size_t size = elements.size();
    RationalMatrix g(size, std::vector<Rational>(size));
    for (std::size_t i = 0; i < size; ++i)
        for (std::size_t j = i; j < size; ++j) {
            const auto& a = elements[i].poly;
            const auto& b = elements[j].poly;
            g[i][j] = product == ProductKind::classical ? moments.inner_ball(a, b)
                                                        : moments.inner_lambda(a, b);
            g[j][i] = g[i][j];
        }
    return g;
}

inline bool is_diagonal_positive(const RationalMatrix& g) {
    for (std::size_t i = 0; i < g.size(); ++i)
        for (std::size_t j = 0; j < g.size(); ++j) {
            if (i == j && g[i][j] <= 0) return false;
            if (i != j && g[i][j] != 0) return false;
        }
    return true;
}

/// dim V_n^d = dim Pi_n^d - dim Pi_{n-1}^d = binom(n+d-1, n).
inline long orthogonal_space_dimension(long dim, long n) { return binom(n + dim - 1, n); }

}  // namespace ballkrall

#endif  // BALLKRALL_BASES_HPP
