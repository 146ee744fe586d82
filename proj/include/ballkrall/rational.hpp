#ifndef BALLKRALL_RATIONAL_HPP
#define BALLKRALL_RATIONAL_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

#include <boost/multiprecision/gmp.hpp>

namespace ballkrall {

/// Exact rational scalar. GMP keeps every value in lowest terms with a
/// positive denominator.
using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                              boost::multiprecision::et_off>;
using Integer = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                             boost::multiprecision::et_off>;

/// Raised for parameters outside the domain of an operation.
class ParameterError : public std::domain_error {
  public:
    using std::domain_error::domain_error;
};

/// Raised when a quantity would leave the rationals (a stray power of pi or
/// sqrt(2)) under the requested parameters.
class UnsupportedExact : public std::domain_error {
  public:
    using std::domain_error::domain_error;
};

class DimensionMismatch : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

inline Rational rat(std::int64_t num, std::int64_t den = 1) {
    if (den == 0) throw std::invalid_argument("rat: zero denominator");
    return Rational(Integer(num), Integer(den));
}

inline Integer numerator_of(const Rational& r) {
    return boost::multiprecision::numerator(r);
}

inline Integer denominator_of(const Rational& r) {
    return boost::multiprecision::denominator(r);
}

inline bool is_integer(const Rational& r) { return denominator_of(r) == 1; }

inline bool is_half_integer(const Rational& r) {
    return denominator_of(r) == 2;
}

/// Non-negative integer value of r, or nullopt-like failure via exception.
inline long as_nonnegative_int(const Rational& r) {
    if (!is_integer(r) || r < 0)
        throw ParameterError("expected a non-negative integer, got " +
                             r.str());
    return numerator_of(r).convert_to<long>();
}

/// Canonical "num/den" text; the denominator is always written.
inline std::string to_string(const Rational& r) {
    return numerator_of(r).str() + "/" + denominator_of(r).str();
}

/// Parses "p", "p/q" or "-p/q".
inline Rational parse_rational(std::string_view text) {
    auto digits_only = [](std::string_view s) {
        if (!s.empty() && (s.front() == '-' || s.front() == '+'))
            s.remove_prefix(1);
        if (s.empty()) return false;
        for (char c : s)
            if (c < '0' || c > '9') return false;
        return true;
    };
    const auto slash = text.find('/');
    const auto num = text.substr(0, slash);
    const auto den =
        slash == std::string_view::npos ? std::string_view("1")
                                        : text.substr(slash + 1);
    if (!digits_only(num) || !digits_only(den) || den.front() == '-' ||
        den.front() == '+')
        throw std::invalid_argument("malformed rational: '" +
                                    std::string(text) + "'");
    const Integer n{std::string(num.front() == '+' ? num.substr(1) : num)};
    const Integer d{std::string(den)};
    if (d == 0)
        throw std::invalid_argument("malformed rational: '" +
                                    std::string(text) + "' (zero denominator)");
    return Rational(n, d);
}

/// Rising factorial (z)_m = z (z+1) ... (z+m-1), i.e. Gamma(z+m)/Gamma(z).
inline Rational pochhammer(const Rational& z, long m) {
    if (m < 0) throw ParameterError("pochhammer: negative length");
    Rational out = 1;
    for (long j = 0; j < m; ++j) out *= z + j;
    return out;
}

inline Rational factorial(long m) { return pochhammer(Rational(1), m); }

inline Rational pow(const Rational& base, long e) {
    if (e < 0) return 1 / pow(base, -e);
    Rational out = 1;
    for (long i = 0; i < e; ++i) out *= base;
    return out;
}

/// Generalized binomial coefficient binom(z, m) for rational z and integer m.
inline Rational binomial(const Rational& z, long m) {
    if (m < 0) return 0;
    Rational out = 1;
    for (long j = 0; j < m; ++j) out *= (z - j) / (j + 1);
    return out;
}

}  // namespace ballkrall

#endif  // BALLKRALL_RATIONAL_HPP
