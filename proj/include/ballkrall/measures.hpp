#ifndef BALLKRALL_MEASURES_HPP
#define BALLKRALL_MEASURES_HPP

#include <cstddef>
#include <map>
#include <string>
#include <utility>

#include "gamma_ratio.hpp"
#include "multipoly.hpp"
#include "rational.hpp"

namespace ballkrall {

/// Ball weight (1-|x|^2)^{mu-1/2} plus lambda times normalized surface measure.
struct MeasureParams {
    std::size_t dim = 2;
    Rational mu = Rational(1, 2);
    Rational lambda = 0;

    void validate() const {
        if (dim < 2) throw ParameterError("dimension must be at least 2");
        if (mu <= Rational(-1, 2))
            throw ParameterError("mu must exceed -1/2, got " + to_string(mu));
        if (lambda < 0)
            throw ParameterError("lambda must be non-negative, got " + to_string(lambda));
    }
};

/// (1/sigma_{d-1}) int_{S^{d-1}} xi^nu d sigma.
///
/// Zero unless every exponent is even; for nu = 2p it equals
/// prod_i (1/2)_{p_i} / (d/2)_{|p|}, which is the closed form
/// Gamma(d/2) prod Gamma((nu_i+1)/2) / (Gamma((|nu|+d)/2) Gamma(1/2)^d)
/// with every sqrt(pi) cancelled.
inline Rational sphere_moment(const Monomial& nu) {
    if (!nu.all_even()) return 0;
    Rational num = 1;
    long half_total = 0;
    for (std::size_t i = 0; i < nu.dim(); ++i) {
        num *= pochhammer(Rational(1, 2), nu[i] / 2);
        half_total += nu[i] / 2;
    }
    return num / pochhammer(Rational(static_cast<long>(nu.dim()), 2), half_total);
}

/// Radial factor B(|nu|/2 + d/2, mu+1/2) / B(d/2, mu+1/2) for even |nu|.
inline Rational ball_radial_factor(unsigned total_degree, std::size_t dim,
                                   const Rational& mu) {
    const long p = total_degree / 2;
    const Rational half_d(static_cast<long>(dim), 2);
    return pochhammer(half_d, p) / pochhammer(half_d + mu + Rational(1, 2), p);
}

/// <x^nu, 1>_mu, normalized so <1,1>_mu = 1.
inline Rational ball_moment(const Monomial& nu, const MeasureParams& params) {
    params.validate();
    if (nu.dim() != params.dim)
        throw DimensionMismatch("monomial dimension does not match measure");
    if (!nu.all_even()) return 0;
    return sphere_moment(nu) * ball_radial_factor(nu.degree(), params.dim, params.mu);
}

/// sigma_{d-1} / omega_mu = 2 Gamma(mu+(d+1)/2) / (Gamma(d/2) Gamma(mu+1/2)).
/// Rational when d is even or mu + 1/2 is an integer; UnsupportedExact otherwise.
inline Rational sigma_over_omega(const MeasureParams& params) {
    params.validate();
    const Rational a = params.mu + Rational(1, 2);
    const Rational half_d(static_cast<long>(params.dim), 2);
    return 2 * gamma_quotient({a + half_d, Rational(1)}, {a, half_d});
}

/// Memoized moments for one measure. Not synchronized: use one instance
/// per thread.
class MomentTable {
  public:
    explicit MomentTable(MeasureParams params) : params_(std::move(params)) {
        params_.validate();
    }

    const MeasureParams& params() const { return params_; }

    const Rational& sphere(const Monomial& nu) {
        auto it = sphere_.find(nu);
        if (it == sphere_.end()) it = sphere_.emplace(nu, sphere_moment(nu)).first;
        return it->second;
    }

    const Rational& ball(const Monomial& nu) {
        auto it = ball_.find(nu);
        if (it == ball_.end()) it = ball_.emplace(nu, ball_moment(nu, params_)).first;
        return it->second;
    }

    Rational inner_ball(const MultiPoly& f, const MultiPoly& g) {
        return pair_sum(f, g, [this](const Monomial& m) -> const Rational& { return ball(m); });
    }

    Rational inner_sphere(const MultiPoly& f, const MultiPoly& g) {
        return pair_sum(f, g, [this](const Monomial& m) -> const Rational& { return sphere(m); });
    }

    Rational inner_lambda(const MultiPoly& f, const MultiPoly& g) {
        Rational out = inner_ball(f, g);
        if (params_.lambda != 0) out += params_.lambda * inner_sphere(f, g);
        return out;
    }

  private:
    template <typename Moment>
    Rational pair_sum(const MultiPoly& f, const MultiPoly& g, Moment moment) {
        if (f.dim() != params_.dim || g.dim() != params_.dim)
            throw DimensionMismatch("inner product: polynomial dimension " +
                                    std::to_string(f.dim()) + "/" + std::to_string(g.dim()) +
                                    " vs measure dimension " + std::to_string(params_.dim));
        Rational acc = 0;
        for (const auto& [ma, ca] : f.terms())
            for (const auto& [mb, cb] : g.terms()) {
                const Monomial m = ma * mb;
                if (!m.all_even()) continue;
                acc += ca * cb * moment(m);
            }
        return acc;
    }

    MeasureParams params_;
    std::map<Monomial, Rational, GradedLex> sphere_;
    std::map<Monomial, Rational, GradedLex> ball_;
};

/// <f,g>_mu = (1/omega_mu) int_B f g W_mu dx.
inline Rational inner_ball(const MultiPoly& f, const MultiPoly& g,
                           const MeasureParams& params) {
    return MomentTable(params).inner_ball(f, g);
}

/// <f,g>_{S^{d-1}} = (1/sigma_{d-1}) int_S f g d sigma.
inline Rational inner_sphere(const MultiPoly& f, const MultiPoly& g, std::size_t dim) {
    return MomentTable(MeasureParams{dim, Rational(1, 2), 0}).inner_sphere(f, g);
}

/// <f,g>_mu^lambda = <f,g>_mu + lambda <f,g>_{S^{d-1}}.
inline Rational inner_lambda(const MultiPoly& f, const MultiPoly& g,
                             const MeasureParams& params) {
    return MomentTable(params).inner_lambda(f, g);
}

}  // namespace ballkrall

#endif  // BALLKRALL_MEASURES_HPP
