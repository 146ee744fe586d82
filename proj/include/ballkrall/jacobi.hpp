#ifndef BALLKRALL_JACOBI_HPP
#define BALLKRALL_JACOBI_HPP

#include <cstddef>
#include <utility>
#include <vector>

#include "gamma_ratio.hpp"
#include "rational.hpp"
#include "unipoly.hpp"

namespace ballkrall {

struct JacobiParams {
    Rational alpha;
    Rational beta;

    void validate() const {
        if (alpha <= -1 || beta <= -1)
            throw ParameterError("Jacobi parameters need alpha, beta > -1; got (" +
                                 to_string(alpha) + ", " + to_string(beta) + ")");
    }
};

/// P_n^{(alpha,beta)} normalized by P_n(1) = (alpha+1)_n / n!, built by the
/// three-term recurrence.
inline UniPoly jacobi_poly(long n, const JacobiParams& p) {
    p.validate();
    if (n < 0) throw ParameterError("jacobi_poly: negative degree");
    const Rational& a = p.alpha;
    const Rational& b = p.beta;
    UniPoly prev = UniPoly::constant(1);
    if (n == 0) return prev;
    // P_1 = (alpha+1) + (alpha+beta+2)(t-1)/2
    UniPoly cur({(a + 1) - (a + b + 2) / 2, (a + b + 2) / 2});
    const UniPoly t = UniPoly::t();
    for (long k = 2; k <= n; ++k) {
        const Rational s = 2 * k + a + b;
        const Rational lead = 2 * k * (k + a + b) * (s - 2);
        const UniPoly linear({(s - 1) * (a * a - b * b), (s - 1) * s * (s - 2)});
        const Rational back = 2 * (k + a - 1) * (k + b - 1) * s;
        UniPoly next = (linear * cur - prev * back) * (1 / lead);
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

/// d/dt P_n - (n+alpha+beta+1)/2 P_{n-1}^{(alpha+1,beta+1)}; zero for n >= 1.
inline UniPoly jacobi_derivative_identity_check(long n, const JacobiParams& p) {
    if (n < 1) throw ParameterError("derivative identity needs n >= 1");
    const UniPoly lhs = jacobi_poly(n, p).derivative();
    const UniPoly rhs = jacobi_poly(n - 1, {p.alpha + 1, p.beta + 1}) *
                        ((n + p.alpha + p.beta + 1) / 2);
    return lhs - rhs;
}

/// (1-t^2) y'' + [beta - alpha - (alpha+beta+2) t] y' + n(n+alpha+beta+1) y.
inline UniPoly jacobi_ode_residual(long n, const JacobiParams& p) {
    const UniPoly y = jacobi_poly(n, p);
    const UniPoly y1 = y.derivative();
    const UniPoly y2 = y1.derivative();
    const UniPoly one_minus_t2({1, 0, -1});
    const UniPoly drift({p.beta - p.alpha, -(p.alpha + p.beta + 2)});
    return one_minus_t2 * y2 + drift * y1 + y * (n * (n + p.alpha + p.beta + 1));
}

/// Re-expands f(t) in powers of s = 1 + t.
inline UniPoly in_powers_of_one_plus_t(const UniPoly& f) {
    return f.compose(UniPoly({-1, 1}));
}

/// Normalized Jacobi expectation of f: the ratio
///   int f (1-t)^alpha (1+t)^beta dt / int (1-t)^alpha (1+t)^beta dt,
/// rational for every rational alpha, beta > -1.
inline Rational jacobi_expectation(const UniPoly& f, const JacobiParams& p) {
    p.validate();
    const UniPoly s = in_powers_of_one_plus_t(f);
    Rational acc = 0;
    Rational moment = 1;  // 2^m (beta+1)_m / (alpha+beta+2)_m
    for (std::size_t m = 0; m < s.coeffs().size(); ++m) {
        if (m > 0) {
            const long j = static_cast<long>(m) - 1;
            moment *= 2 * (p.beta + 1 + j) / (p.alpha + p.beta + 2 + j);
        }
        acc += s.coeffs()[m] * moment;
    }
    return acc;
}

/// Jacobi inner product normalized so that (1,1) = 1.
inline Rational jacobi_inner_normalized(const UniPoly& f, const UniPoly& g,
                                        const JacobiParams& p) {
    return jacobi_expectation(f * g, p);
}

/// Parameters of the Jacobi-plus-point-mass family. M is tied to lambda by
/// M = d / (2 lambda).
struct KrallParams {
    Rational alpha;
    Rational beta;
    Rational lambda;
    long dim = 2;
    Rational M;

    static KrallParams from_lambda(Rational alpha, Rational beta, Rational lambda,
                                   long dim) {
        if (lambda <= 0) throw ParameterError("lambda must be positive");
        Rational M = Rational(dim) / (2 * lambda);
        return {std::move(alpha), std::move(beta), std::move(lambda), dim,
                std::move(M)};
    }
    static KrallParams from_M(Rational alpha, Rational beta, Rational M, long dim) {
        if (M <= 0) throw ParameterError("M must be positive");
        Rational lambda = Rational(dim) / (2 * M);
        return {std::move(alpha), std::move(beta), std::move(lambda), dim,
                std::move(M)};
    }

    void validate() const {
        JacobiParams{alpha, beta}.validate();
        if (lambda <= 0) throw ParameterError("lambda must be positive");
        if (dim < 1) throw ParameterError("dimension must be positive");
        if (M != Rational(dim) / (2 * lambda))
            throw ParameterError("M must equal d/(2 lambda)");
    }
};

/// Gamma(alpha+d/2+1) Gamma(beta+k+1) / (Gamma(d/2) Gamma(alpha+beta+k+1)).
inline Rational krall_gamma_factor(const KrallParams& p, long k) {
    const Rational half_d = Rational(p.dim) / 2;
    return gamma_quotient({p.alpha + half_d + 1, p.beta + k + 1},
                          {half_d, p.alpha + p.beta + k + 1});
}

/// The constant a_k of the connection q_k = [a_k - (1+t) d/dt] P_k.
inline Rational krall_a(long k, const KrallParams& p) {
    p.validate();
    return krall_gamma_factor(p, k) / p.lambda * factorial(k) /
               pochhammer(p.alpha + 1, k) +
           k * (k + p.alpha + p.beta + 1) / (p.alpha + 1);
}

/// q_k^{(alpha,beta,lambda)} = [a_k - (1+t) d/dt] P_k^{(alpha,beta)}.
/// Throws UnsupportedExact when a_k is not rational for these parameters.
inline UniPoly krall_q(long k, const KrallParams& p) {
    const Rational a = krall_a(k, p);
    const UniPoly P = jacobi_poly(k, {p.alpha, p.beta});
    return P * a - UniPoly({1, 1}) * P.derivative();
}

/// Closed form of q_k(1).
inline Rational krall_q_at_one(long k, const KrallParams& p) {
    p.validate();
    return krall_gamma_factor(p, k) / p.lambda;
}

/// q_k^{beta,M} = [M - (1+t) d/dt + k(k+beta+1)] P_k^{(0,beta)}.
inline UniPoly krall_q_M(long k, const Rational& beta, const Rational& M) {
    if (M <= 0) throw ParameterError("M must be positive");
    const UniPoly P = jacobi_poly(k, {0, beta});
    return P * (M + k * (k + beta + 1)) - UniPoly({1, 1}) * P.derivative();
}

/// Weight of the Jacobi part of (f,g)^lambda_{alpha,beta}:
/// Gamma(alpha+d/2+1)/(Gamma(d/2) Gamma(alpha+1)) 2^{-alpha-beta-1} int (1-t)^alpha (1+t)^beta dt.
inline Rational krall_jacobi_mass(const KrallParams& p) {
    const Rational half_d = Rational(p.dim) / 2;
    return gamma_quotient({p.alpha + half_d + 1, p.beta + 1},
                          {half_d, p.alpha + p.beta + 2});
}

/// (f,g)^lambda_{alpha,beta}: scaled Jacobi integral plus lambda f(1) g(1).
inline Rational uni_inner_jacobi_mass(const UniPoly& f, const UniPoly& g,
                                      const KrallParams& p) {
    p.validate();
    return krall_jacobi_mass(p) * jacobi_inner_normalized(f, g, {p.alpha, p.beta}) +
           p.lambda * f(1) * g(1);
}

/// 2^{-beta-1} int f (1+t)^beta dt, exact for every rational beta > -1.
inline Rational half_jacobi_integral(const UniPoly& f, const Rational& beta) {
    if (beta <= -1) throw ParameterError("beta must exceed -1");
    const UniPoly s = in_powers_of_one_plus_t(f);
    Rational acc = 0;
    Rational two_m = 1;
    for (std::size_t m = 0; m < s.coeffs().size(); ++m, two_m *= 2)
        acc += s.coeffs()[m] * two_m / (beta + static_cast<long>(m) + 1);
    return acc;
}

/// (f,g)^M_beta = 2^{-beta-1} int f g (1+t)^beta dt + (1/M) f(1) g(1).
inline Rational uni_inner_krall_M(const UniPoly& f, const UniPoly& g,
                                  const Rational& beta, const Rational& M) {
    if (M <= 0) throw ParameterError("M must be positive");
    return half_jacobi_integral(f * g, beta) + f(1) * g(1) / M;
}

/// (L f)(t) = c2 f'' + c1 f' + c0 f.
struct UniDiffOp {
    UniPoly c2;
    UniPoly c1;
    UniPoly c0;

    UniPoly operator()(const UniPoly& f) const {
        const UniPoly f1 = f.derivative();
        return c2 * f1.derivative() + c1 * f1 + c0 * f;
    }
};

/// M - (1-t^2) d^2/dt^2 - (beta+1)(1-t) d/dt.
inline UniDiffOp krall_L1(const Rational& beta, const Rational& M) {
    return {UniPoly({-1, 0, 1}), UniPoly({-(beta + 1), beta + 1}),
            UniPoly::constant(M)};
}

/// M + beta + 1 - (1-t^2) d^2/dt^2 - (beta - 1 - (beta+3) t) d/dt.
inline UniDiffOp krall_L2(const Rational& beta, const Rational& M) {
    return {UniPoly({-1, 0, 1}), UniPoly({1 - beta, beta + 3}),
            UniPoly::constant(M + beta + 1)};
}

inline UniPoly apply_L1(const UniPoly& f, const Rational& beta, const Rational& M) {
    return krall_L1(beta, M)(f);
}

inline UniPoly apply_L2(const UniPoly& f, const Rational& beta, const Rational& M) {
    return krall_L2(beta, M)(f);
}

/// (M + k(k+beta)) (M + (k+1)(k+beta+1)).
inline Rational krall_eigenvalue(long k, const Rational& beta, const Rational& M) {
    return (M + k * (k + beta)) * (M + (k + 1) * (k + beta + 1));
}

/// int g [L1 f] d mu_beta  -  2^{-beta-1} int f [L2 g] (1+t)^beta dt,
/// where d mu_beta carries the point mass 1/M at t = 1. Zero for all f, g.
inline Rational ibp_identity_residual(const UniPoly& f, const UniPoly& g,
                                      const Rational& beta, const Rational& M) {
    const Rational lhs = uni_inner_krall_M(g, apply_L1(f, beta, M), beta, M);
    const Rational rhs = half_jacobi_integral(f * apply_L2(g, beta, M), beta);
    return lhs - rhs;
}

}  // namespace ballkrall

#endif  // BALLKRALL_JACOBI_HPP
