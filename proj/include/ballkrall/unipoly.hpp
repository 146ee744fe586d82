#ifndef BALLKRALL_UNIPOLY_HPP
#define BALLKRALL_UNIPOLY_HPP

#include <cstddef>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "rational.hpp"

namespace ballkrall {

/// Dense univariate polynomial in t; coeffs[i] multiplies t^i.
/// Trailing zeros are trimmed, so the zero polynomial has no coefficients.
class UniPoly {
  public:
    UniPoly() = default;
    UniPoly(std::initializer_list<Rational> c) : coeffs_(c) { trim(); }
    explicit UniPoly(std::vector<Rational> c) : coeffs_(std::move(c)) {
        trim();
    }

    static UniPoly constant(const Rational& c) { return UniPoly({c}); }
    static UniPoly monomial(std::size_t power, const Rational& c = 1) {
        std::vector<Rational> v(power + 1);
        v[power] = c;
        return UniPoly(std::move(v));
    }
    /// The polynomial t.
    static UniPoly t() { return monomial(1); }

    bool is_zero() const { return coeffs_.empty(); }
    /// Degree; -1 for the zero polynomial.
    long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
    const std::vector<Rational>& coeffs() const { return coeffs_; }

    Rational coeff(std::size_t i) const {
        return i < coeffs_.size() ? coeffs_[i] : Rational(0);
    }
    Rational leading() const {
        return coeffs_.empty() ? Rational(0) : coeffs_.back();
    }

    Rational operator()(const Rational& t) const {
        Rational acc = 0;
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
            acc = acc * t + *it;
        return acc;
    }

    UniPoly derivative() const {
        if (coeffs_.size() <= 1) return {};
        std::vector<Rational> out(coeffs_.size() - 1);
        for (std::size_t i = 1; i < coeffs_.size(); ++i)
            out[i - 1] = coeffs_[i] * static_cast<long>(i);
        return UniPoly(std::move(out));
    }

    /// Antiderivative with zero constant term.
    UniPoly integral() const {
        std::vector<Rational> out(coeffs_.size() + 1);
        for (std::size_t i = 0; i < coeffs_.size(); ++i)
            out[i + 1] = coeffs_[i] / static_cast<long>(i + 1);
        return UniPoly(std::move(out));
    }

    /// this(inner(t)).
    UniPoly compose(const UniPoly& inner) const {
        UniPoly acc;
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
            acc = acc * inner + UniPoly::constant(*it);
        return acc;
    }

    UniPoly& operator+=(const UniPoly& o) {
        if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
        for (std::size_t i = 0; i < o.coeffs_.size(); ++i)
            coeffs_[i] += o.coeffs_[i];
        trim();
        return *this;
    }
    UniPoly& operator-=(const UniPoly& o) { return *this += -o; }
    UniPoly& operator*=(const Rational& s) {
        if (s == 0) {
            coeffs_.clear();
            return *this;
        }
        for (auto& c : coeffs_) c *= s;
        return *this;
    }

    friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
    friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }
    friend UniPoly operator-(UniPoly a) {
        for (auto& c : a.coeffs_) c = -c;
        return a;
    }
    friend UniPoly operator*(UniPoly a, const Rational& s) { return a *= s; }
    friend UniPoly operator*(const Rational& s, UniPoly a) { return a *= s; }
    friend UniPoly operator*(const UniPoly& a, const UniPoly& b) {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1);
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
            if (a.coeffs_[i] == 0) continue;
            for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
                out[i + j] += a.coeffs_[i] * b.coeffs_[j];
        }
        return UniPoly(std::move(out));
    }
    friend bool operator==(const UniPoly& a, const UniPoly& b) {
        return a.coeffs_ == b.coeffs_;
    }

    /// Terms in ascending powers, each as "num/den * t^e".
    std::string str() const {
        if (is_zero()) return "0";
        std::string out;
        for (std::size_t i = 0; i < coeffs_.size(); ++i) {
            if (coeffs_[i] == 0) continue;
            if (!out.empty()) out += " + ";
            out += to_string(coeffs_[i]) + " * t^" + std::to_string(i);
        }
        return out;
    }

  private:
    void trim() {
        while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
    }

    std::vector<Rational> coeffs_;
};

}  // namespace ballkrall

#endif  // BALLKRALL_UNIPOLY_HPP
