#ifndef BALLKRALL_GAMMA_RATIO_HPP
#define BALLKRALL_GAMMA_RATIO_HPP

#include <array>
#include <string>

#include "rational.hpp"

namespace ballkrall {

/// Gamma(a)/Gamma(b) for a - b an integer, by telescoping. Both arguments
/// must be positive.
inline Rational gamma_ratio(const Rational& a, const Rational& b) {
    if (a <= 0 || b <= 0)
        throw ParameterError("gamma_ratio: non-positive argument (" +
                             to_string(a) + ", " + to_string(b) + ")");
    const Rational offset = a - b;
    if (!is_integer(offset))
        throw UnsupportedExact("Gamma(" + to_string(a) + ")/Gamma(" +
                               to_string(b) + ") has non-integer offset");
    const long m = numerator_of(offset).convert_to<long>();
    return m >= 0 ? pochhammer(b, m) : 1 / pochhammer(a, -m);
}

inline bool integer_offset(const Rational& a, const Rational& b) {
    return is_integer(a - b);
}

/// Gamma(n0) Gamma(n1) / (Gamma(d0) Gamma(d1)), paired so that each factor
/// telescopes. Throws UnsupportedExact when neither pairing has integer
/// offsets (the quotient then carries a transcendental factor in general).
inline Rational gamma_quotient(const std::array<Rational, 2>& num,
                               const std::array<Rational, 2>& den) {
    if (integer_offset(num[0], den[0]) && integer_offset(num[1], den[1]))
        return gamma_ratio(num[0], den[0]) * gamma_ratio(num[1], den[1]);
    if (integer_offset(num[0], den[1]) && integer_offset(num[1], den[0]))
        return gamma_ratio(num[0], den[1]) * gamma_ratio(num[1], den[0]);
    throw UnsupportedExact(
        "Gamma(" + to_string(num[0]) + ")Gamma(" + to_string(num[1]) +
        ")/(Gamma(" + to_string(den[0]) + ")Gamma(" + to_string(den[1]) +
        ")) is not rational by telescoping");
}

}  // namespace ballkrall

#endif  // BALLKRALL_GAMMA_RATIO_HPP
