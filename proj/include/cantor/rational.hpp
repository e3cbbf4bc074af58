#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <string_view>

namespace cantor {

/// Exact arbitrary-precision rational. All engine arithmetic is exact;
/// there is no rounding mode anywhere in the core.
using Rational = mpq_class;

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Malformed textual input (files, CLI arguments).
struct ParseError : Error {
    using Error::Error;
};

/// Structurally valid input that violates an operation's preconditions.
struct DomainError : Error {
    using Error::Error;
};

/// Builds p/q in canonical lowest terms. Throws DomainError if q == 0.
Rational make_rational(long num, long den = 1);

/// Parses "p/q" or "p" (decimal, optional leading '-'). Canonical result.
Rational parse_rational(std::string_view text);

/// Canonical lowest-terms serialization: "p/q", or "p" when q == 1.
std::string rational_str(const Rational& q);

/// base^exp over rationals, exact. 0^0 = 1.
Rational rational_pow(const Rational& base, unsigned long exp);

/// A nonnegative rational extended with +infinity. Addition and scaling by
/// positive rationals treat infinity as absorbing; scaling by zero gives zero.
class ExtValue {
public:
    ExtValue() : value_(0) {}
    ExtValue(Rational v) : value_(std::move(v)) {}
    ExtValue(long v) : value_(v) {}

    static ExtValue infinity() {
        ExtValue e;
        e.infinite_ = true;
        return e;
    }

    bool is_infinite() const { return infinite_; }

    /// The finite value; throws DomainError when infinite.
    const Rational& finite_value() const;

    ExtValue& operator+=(const ExtValue& o);
    friend ExtValue operator+(ExtValue a, const ExtValue& b) { return a += b; }

    /// c * v for c >= 0; 0 * infinity = 0 (measure-theory convention).
    friend ExtValue scale(const Rational& c, const ExtValue& v);

    friend bool operator==(const ExtValue& a, const ExtValue& b);
    friend bool operator!=(const ExtValue& a, const ExtValue& b) { return !(a == b); }
    friend bool operator<(const ExtValue& a, const ExtValue& b);
    friend bool operator<=(const ExtValue& a, const ExtValue& b);
    friend bool operator>=(const ExtValue& a, const ExtValue& b) { return b <= a; }
    friend bool operator>(const ExtValue& a, const ExtValue& b) { return b < a; }

    /// "p/q" or "inf".
    std::string str() const;

private:
    bool infinite_ = false;
    Rational value_;
};

}  // namespace cantor
