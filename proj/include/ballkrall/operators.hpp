#ifndef BALLKRALL_OPERATORS_HPP
#define BALLKRALL_OPERATORS_HPP

#include <cstddef>
#include <map>
#include <string>
#include <utility>

#include "bases.hpp"
#include "differential.hpp"
#include "jacobi.hpp"
#include "multipoly.hpp"

namespace ballkrall {

struct OperatorParams {
    std::size_t dim = 2;
    Rational mu = Rational(1, 2);
    Rational M = 1;

    /// M = d / (2 lambda).
    static OperatorParams for_lambda(std::size_t dim, const Rational& lambda,
                                     Rational mu = Rational(1, 2)) {
        if (lambda <= 0) throw ParameterError("lambda must be positive");
        return {dim, std::move(mu), Rational(static_cast<long>(dim)) / (2 * lambda)};
    }
    Rational lambda() const { return Rational(static_cast<long>(dim)) / (2 * M); }
};

enum class EigenOrigin { d_mu, l2_connection, fourth_order };

struct Eigenvalue {
    Rational value;
    EigenOrigin origin = EigenOrigin::fourth_order;
};

/// D_mu p = Delta p - sum_j d/dx_j ( x_j [ (2mu-1) p + <x,grad> p ] ),
/// with each d/dx_j (x_j h) taken literally by the product rule.
inline MultiPoly apply_D_mu(const MultiPoly& p, const OperatorParams& params) {
    const MultiPoly h = p * (2 * params.mu - 1) + euler_op(p);
    MultiPoly out = laplacian(p);
    for (std::size_t j = 0; j < p.dim(); ++j) {
        // d/dx_j (x_j h) = h + x_j dh/dx_j
        out -= h;
        out -= h.partial_derivative(j).times_variable(j);
    }
    return out;
}

/// -(n+d)(n+2mu-1), the D_mu eigenvalue on V_n^d(W_mu).
inline Eigenvalue d_mu_eigenvalue(unsigned n, const OperatorParams& params) {
    const long d = static_cast<long>(params.dim);
    return {-Rational(static_cast<long>(n) + d) * (static_cast<long>(n) + 2 * params.mu - 1),
            EigenOrigin::d_mu};
}

namespace detail {
/// (1/4)(1 - |x|^2) Delta p.
inline MultiPoly quarter_boundary_laplacian(const MultiPoly& p) {
    const std::size_t d = p.dim();
    return (MultiPoly::constant(d, 1) - MultiPoly::norm_squared(d)) * laplacian(p) *
           Rational(1, 4);
}
}  // namespace detail

/// [M - (1/4)(1-|x|^2) Delta] p.  Maps P^n_{k,nu} to Q^n_{k,nu} at mu = 1/2.
inline MultiPoly apply_A1(const MultiPoly& p, const OperatorParams& params) {
    return p * params.M - detail::quarter_boundary_laplacian(p);
}

/// [M + d/2 - (1/4)(1-|x|^2) Delta + <x,grad>] p.
inline MultiPoly apply_A2(const MultiPoly& p, const OperatorParams& params) {
    const Rational shift = params.M + Rational(static_cast<long>(p.dim()), 2);
    return p * shift - detail::quarter_boundary_laplacian(p) + euler_op(p);
}

/// A1 A2 applied in that order.
inline MultiPoly apply_fourth_order(const MultiPoly& p, const OperatorParams& params) {
    return apply_A1(apply_A2(p, params), params);
}

/// Lambda_{n,k} = (M + k(n-k+(d-2)/2)) (M + (k+1)(n-k+d/2)).
inline Eigenvalue lambda_eigenvalue(unsigned n, unsigned k, const OperatorParams& params) {
    if (2 * k > n)
        throw std::out_of_range("lambda_eigenvalue: need 0 <= k <= n/2, got n=" +
                                std::to_string(n) + " k=" + std::to_string(k));
    const Rational d(static_cast<long>(params.dim));
    const long nn = n, kk = k;
    return {(params.M + kk * (nn - kk + (d - 2) / 2)) *
                (params.M + (kk + 1) * (nn - kk + d / 2)),
            EigenOrigin::fourth_order};
}

/// The same eigenvalue written through beta_k: (M + k(k+beta_k))(M + (k+1)(k+beta_k+1)).
inline Eigenvalue lambda_eigenvalue_beta_form(unsigned n, unsigned k,
                                              const OperatorParams& params) {
    if (2 * k > n) throw std::out_of_range("lambda_eigenvalue_beta_form: k > n/2");
    return {krall_eigenvalue(k, beta_k(n, k, params.dim), params.M),
            EigenOrigin::l2_connection};
}

/// A1 A2 Q - Lambda Q for a given polynomial and eigenvalue.
inline MultiPoly fourth_order_residual(const MultiPoly& q, const Rational& eigenvalue,
                                       const OperatorParams& params) {
    return apply_fourth_order(q, params) - q * eigenvalue;
}

/// A1 A2 Q^n_{k,nu} - Lambda_{n,k} Q^n_{k,nu}; the fourth-order equation only
/// holds for mu = 1/2.
inline MultiPoly fourth_order_residual(const BasisIndex& index, const OperatorParams& params,
                                       const MeasureParams& measure) {
    if (measure.mu != Rational(1, 2) || params.mu != Rational(1, 2))
        throw UnsupportedExact("the fourth-order equation is established only for mu = 1/2");
    if (measure.lambda <= 0 || measure.dim != params.dim ||
        params.M != Rational(static_cast<long>(measure.dim)) / (2 * measure.lambda))
        throw ParameterError("operator M must equal d/(2 lambda) of the measure");
    for (const auto& e : lambda_basis(index.n, measure))
        if (e.index.k == index.k && e.index.nu == index.nu)
            return fourth_order_residual(e.poly, lambda_eigenvalue(index.n, index.k, params).value,
                                         params);
    throw std::out_of_range("no basis element with index (n=" + std::to_string(index.n) +
                            ", k=" + std::to_string(index.k) +
                            ", nu=" + std::to_string(index.nu) + ")");
}

/// Polynomial in r with possibly negative powers; used to realize the radial
/// operators where 1/r and 1/r^2 appear.
class LaurentPoly {
  public:
    LaurentPoly() = default;

    /// r^shift * u(2 r^2 - 1).
    static LaurentPoly radial_lift(const UniPoly& u, long shift) {
        const UniPoly in_r = u.compose(UniPoly({-1, 0, 2}));
        LaurentPoly out;
        for (std::size_t i = 0; i < in_r.coeffs().size(); ++i)
            out.add(static_cast<long>(i) + shift, in_r.coeffs()[i]);
        return out;
    }

    void add(long power, const Rational& c) {
        if (c == 0) return;
        auto& slot = terms_[power];
        slot += c;
        if (slot == 0) terms_.erase(power);
    }

    bool is_zero() const { return terms_.empty(); }
    const std::map<long, Rational>& terms() const { return terms_; }

    LaurentPoly derivative() const {
        LaurentPoly out;
        for (const auto& [p, c] : terms_) out.add(p - 1, c * p);
        return out;
    }
    LaurentPoly shifted(long by) const {
        LaurentPoly out;
        for (const auto& [p, c] : terms_) out.add(p + by, c);
        return out;
    }
    LaurentPoly operator*(const Rational& s) const {
        LaurentPoly out;
        for (const auto& [p, c] : terms_) out.add(p, c * s);
        return out;
    }
    LaurentPoly operator+(const LaurentPoly& o) const {
        LaurentPoly out = *this;
        for (const auto& [p, c] : o.terms_) out.add(p, c);
        return out;
    }
    LaurentPoly operator-(const LaurentPoly& o) const { return *this + o * Rational(-1); }

    std::string str() const {
        if (terms_.empty()) return "0";
        std::string out;
        for (const auto& [p, c] : terms_) {
            if (!out.empty()) out += " + ";
            out += to_string(c) + " * r^" + std::to_string(p);
        }
        return out;
    }

  private:
    std::map<long, Rational> terms_;
};

namespace detail {
/// (1/4)(1 - r^2)(f'' + (d-1)/r f' - c/r^2 f), c = (m+d-2) m.
inline LaurentPoly radial_quarter_part(const LaurentPoly& f, long dim, long m) {
    const LaurentPoly f1 = f.derivative();
    const LaurentPoly inner = f1.derivative() + f1.shifted(-1) * Rational(dim - 1) -
                              f.shifted(-2) * Rational((m + dim - 2) * m);
    return (inner - inner.shifted(2)) * Rational(1, 4);
}
}  // namespace detail

/// M_1 f = M f - (1-r^2)/4 (f'' + (d-1)/r f' - (m+d-2)m/r^2 f), m = n - 2k.
inline LaurentPoly apply_radial_M1(const LaurentPoly& f, unsigned n, unsigned k, long dim,
                                   const Rational& M) {
    return f * M - detail::radial_quarter_part(f, dim, static_cast<long>(n) - 2 * k);
}

/// M_2 f = M_1 f + (d/2) f + r f'.
inline LaurentPoly apply_radial_M2(const LaurentPoly& f, unsigned n, unsigned k, long dim,
                                   const Rational& M) {
    return apply_radial_M1(f, n, k, dim, M) + f * Rational(dim, 2) +
           f.derivative().shifted(1);
}

struct RadialResiduals {
    LaurentPoly m1;
    LaurentPoly m2;
};

/// M_1(r^{n-2k} P_k(2r^2-1)) - r^{n-2k} q_k(2r^2-1) and
/// M_2(r^{n-2k} q_k(2r^2-1)) - Lambda_{n,k} r^{n-2k} P_k(2r^2-1), at mu = 1/2.
inline RadialResiduals radial_operator_residuals(unsigned n, unsigned k, long dim,
                                                 const Rational& M) {
    if (2 * k > n) throw std::out_of_range("radial_operator_residuals: k > n/2");
    const Rational bk = beta_k(n, k, static_cast<std::size_t>(dim));
    const long m = static_cast<long>(n) - 2 * static_cast<long>(k);
    const LaurentPoly P = LaurentPoly::radial_lift(jacobi_poly(k, {0, bk}), m);
    const LaurentPoly q = LaurentPoly::radial_lift(krall_q_M(k, bk, M), m);
    const Rational Lambda =
        lambda_eigenvalue(n, k, {static_cast<std::size_t>(dim), Rational(1, 2), M}).value;
    return {apply_radial_M1(P, n, k, dim, M) - q,
            apply_radial_M2(q, n, k, dim, M) - P * Lambda};
}

}  // namespace ballkrall

#endif  // BALLKRALL_OPERATORS_HPP
