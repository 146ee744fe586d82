#ifndef BALLKRALL_MULTIPOLY_HPP
#define BALLKRALL_MULTIPOLY_HPP

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <map>
#include <numeric>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "rational.hpp"
#include "unipoly.hpp"

namespace ballkrall {

/// Exponent vector of x1^e1 * ... * xd^ed.
class Monomial {
  public:
    Monomial() = default;
    explicit Monomial(std::size_t dim) : exps_(dim, 0) {}
    Monomial(std::initializer_list<unsigned> e) : exps_(e) {}
    explicit Monomial(std::vector<unsigned> e) : exps_(std::move(e)) {}

    static Monomial unit(std::size_t dim, std::size_t axis, unsigned power = 1) {
        Monomial m(dim);
        m.exps_[axis] = power;
        return m;
    }

    std::size_t dim() const { return exps_.size(); }
    unsigned operator[](std::size_t i) const { return exps_[i]; }
    unsigned& operator[](std::size_t i) { return exps_[i]; }
    const std::vector<unsigned>& exponents() const { return exps_; }

    unsigned degree() const {
        return std::accumulate(exps_.begin(), exps_.end(), 0u);
    }
    bool all_even() const {
        return std::all_of(exps_.begin(), exps_.end(),
                           [](unsigned e) { return e % 2 == 0; });
    }

    friend Monomial operator*(const Monomial& a, const Monomial& b) {
        Monomial out(a.dim());
        for (std::size_t i = 0; i < a.dim(); ++i)
            out.exps_[i] = a.exps_[i] + b.exps_[i];
        return out;
    }
    friend bool operator==(const Monomial&, const Monomial&) = default;

  private:
    std::vector<unsigned> exps_;
};

/// Graded lexicographic order: lower total degree first; within a degree,
/// x1 dominates x2 dominates ... (so x1^2 < x1*x2 < x2^2 in iteration order).
struct GradedLex {
    bool operator()(const Monomial& a, const Monomial& b) const {
        const auto da = a.degree(), db = b.degree();
        if (da != db) return da < db;
        return std::lexicographical_compare(
            b.exponents().begin(), b.exponents().end(),
            a.exponents().begin(), a.exponents().end());
    }
};

/// All monomials in d variables of total degree exactly m, graded-lex order.
inline std::vector<Monomial> monomials_of_degree(std::size_t dim, unsigned m) {
    std::vector<Monomial> out;
    Monomial cur(dim);
    // Recursive fill with the first variable taking the largest power first.
    auto rec = [&](auto&& self, std::size_t axis, unsigned left) -> void {
        if (axis + 1 == dim) {
            cur[axis] = left;
            out.push_back(cur);
            return;
        }
        for (unsigned e = left + 1; e-- > 0;) {
            cur[axis] = e;
            self(self, axis + 1, left - e);
        }
    };
    if (dim == 0) return out;
    rec(rec, 0, m);
    return out;
}

/// Sparse polynomial in d variables with exact coefficients.
class MultiPoly {
  public:
    using Terms = std::map<Monomial, Rational, GradedLex>;

    MultiPoly() = default;
    explicit MultiPoly(std::size_t dim) : dim_(dim) {}

    static MultiPoly constant(std::size_t dim, const Rational& c) {
        MultiPoly p(dim);
        p.add_term(Monomial(dim), c);
        return p;
    }
    /// x_{axis+1}; axes are zero-based.
    static MultiPoly variable(std::size_t dim, std::size_t axis) {
        check_axis(dim, axis);
        MultiPoly p(dim);
        p.add_term(Monomial::unit(dim, axis), 1);
        return p;
    }
    static MultiPoly term(const Monomial& m, const Rational& c) {
        MultiPoly p(m.dim());
        p.add_term(m, c);
        return p;
    }
    /// x1^2 + ... + xd^2.
    static MultiPoly norm_squared(std::size_t dim) {
        MultiPoly p(dim);
        for (std::size_t i = 0; i < dim; ++i)
            p.add_term(Monomial::unit(dim, i, 2), 1);
        return p;
    }

    std::size_t dim() const { return dim_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }

    Rational coeff(const Monomial& m) const {
        auto it = terms_.find(m);
        return it == terms_.end() ? Rational(0) : it->second;
    }

    /// Total degree; -1 for the zero polynomial.
    long degree() const {
        return terms_.empty() ? -1 : static_cast<long>(terms_.rbegin()->first.degree());
    }

    bool is_homogeneous(unsigned m) const {
        return std::all_of(terms_.begin(), terms_.end(), [m](const auto& kv) {
            return kv.first.degree() == m;
        });
    }

    /// Accumulates c * m, dropping the entry if it cancels.
    void add_term(const Monomial& m, const Rational& c) {
        if (m.dim() != dim_)
            throw DimensionMismatch("monomial dimension " +
                                    std::to_string(m.dim()) +
                                    " != polynomial dimension " +
                                    std::to_string(dim_));
        if (c == 0) return;
        auto [it, inserted] = terms_.try_emplace(m, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    MultiPoly& operator+=(const MultiPoly& o) {
        check_same_dim(*this, o);
        for (const auto& [m, c] : o.terms_) add_term(m, c);
        return *this;
    }
    MultiPoly& operator-=(const MultiPoly& o) {
        check_same_dim(*this, o);
        for (const auto& [m, c] : o.terms_) add_term(m, -c);
        return *this;
    }
    MultiPoly& operator*=(const Rational& s) {
        if (s == 0) {
            terms_.clear();
            return *this;
        }
        for (auto& kv : terms_) kv.second *= s;
        return *this;
    }

    friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
    friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
    friend MultiPoly operator-(MultiPoly a) { return a *= Rational(-1); }
    friend MultiPoly operator*(MultiPoly a, const Rational& s) { return a *= s; }
    friend MultiPoly operator*(const Rational& s, MultiPoly a) { return a *= s; }
    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
        check_same_dim(a, b);
        MultiPoly out(a.dim_);
        for (const auto& [ma, ca] : a.terms_)
            for (const auto& [mb, cb] : b.terms_) out.add_term(ma * mb, ca * cb);
        return out;
    }
    friend bool operator==(const MultiPoly& a, const MultiPoly& b) {
        return a.dim_ == b.dim_ && a.terms_ == b.terms_;
    }

    /// x_{axis+1} * this.
    MultiPoly times_variable(std::size_t axis) const {
        check_axis(dim_, axis);
        MultiPoly out(dim_);
        for (const auto& [m, c] : terms_) {
            Monomial shifted = m;
            ++shifted[axis];
            out.terms_.emplace_hint(out.terms_.end(), std::move(shifted), c);
        }
        return out;
    }

    /// Exact partial derivative with respect to x_{axis+1}.
    MultiPoly partial_derivative(std::size_t axis) const {
        check_axis(dim_, axis);
        MultiPoly out(dim_);
        for (const auto& [m, c] : terms_) {
            if (m[axis] == 0) continue;
            Monomial lowered = m;
            --lowered[axis];
            out.add_term(lowered, c * static_cast<long>(m[axis]));
        }
        return out;
    }

    Rational operator()(std::span<const Rational> x) const {
        if (x.size() != dim_)
            throw DimensionMismatch("evaluation point has " +
                                    std::to_string(x.size()) +
                                    " coordinates, polynomial has dimension " +
                                    std::to_string(dim_));
        Rational acc = 0;
        for (const auto& [m, c] : terms_) {
            Rational v = c;
            for (std::size_t i = 0; i < dim_; ++i) v *= pow(x[i], m[i]);
            acc += v;
        }
        return acc;
    }

    /// Canonical text: graded-lex terms joined by " + ", each written
    /// "num/den * x1^e1*...*xd^ed" with every variable listed.
    std::string str() const {
        if (terms_.empty()) return "0";
        std::string out;
        for (const auto& [m, c] : terms_) {
            if (!out.empty()) out += " + ";
            out += to_string(c) + " *";
            for (std::size_t i = 0; i < dim_; ++i) {
                out += i == 0 ? " " : "*";
                out += "x" + std::to_string(i + 1) + "^" + std::to_string(m[i]);
            }
        }
        return out;
    }

  private:
    static void check_axis(std::size_t dim, std::size_t axis) {
        if (axis >= dim)
            throw std::out_of_range("axis " + std::to_string(axis) +
                                    " out of range for dimension " +
                                    std::to_string(dim));
    }
    static void check_same_dim(const MultiPoly& a, const MultiPoly& b) {
        if (a.dim_ != b.dim_)
            throw DimensionMismatch("polynomial dimensions differ: " +
                                    std::to_string(a.dim_) + " vs " +
                                    std::to_string(b.dim_));
    }

    std::size_t dim_ = 0;
    Terms terms_;
};

/// q(2(x1^2 + ... + xd^2) - 1), the radial lift used by every ball basis.
inline MultiPoly substitute_radial(const UniPoly& q, std::size_t dim) {
    const MultiPoly t =
        MultiPoly::norm_squared(dim) * Rational(2) - MultiPoly::constant(dim, 1);
    MultiPoly acc(dim);
    const auto& c = q.coeffs();
    for (auto it = c.rbegin(); it != c.rend(); ++it)
        acc = acc * t + MultiPoly::constant(dim, *it);
    return acc;
}

}  // namespace ballkrall

#endif  // BALLKRALL_MULTIPOLY_HPP
