#include "cantor/rational.hpp"

#include <cctype>

namespace cantor {

Rational make_rational(long num, long den) {
    if (den == 0) throw DomainError("rational with zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

Rational parse_rational(std::string_view text) {
    if (text.empty()) throw ParseError("empty rational literal");
    // Strict shape check before handing to GMP: -?digits(/digits)?
    auto all_digits = [](std::string_view s) {
        if (s.empty()) return false;
        for (char c : s)
            if (!std::isdigit(static_cast<unsigned char>(c))) return false;
        return true;
    };
    std::string_view body = text;
    if (body.front() == '-') body.remove_prefix(1);
    auto slash = body.find('/');
    bool ok = slash == std::string_view::npos
                  ? all_digits(body)
                  : all_digits(body.substr(0, slash)) && all_digits(body.substr(slash + 1));
    if (!ok) throw ParseError("malformed rational literal '" + std::string(text) + "'");

    Rational q;
    if (q.set_str(std::string(text), 10) != 0)
        throw ParseError("malformed rational literal '" + std::string(text) + "'");
    if (q.get_den() == 0)
        throw ParseError("rational literal with zero denominator '" + std::string(text) + "'");
    q.canonicalize();
    return q;
}

std::string rational_str(const Rational& q) {
    return q.get_str();
}

Rational rational_pow(const Rational& base, unsigned long exp) {
    Rational out;
    mpz_pow_ui(out.get_num_mpz_t(), base.get_num_mpz_t(), exp);
    mpz_pow_ui(out.get_den_mpz_t(), base.get_den_mpz_t(), exp);
    // base is canonical, so num^e / den^e already is.
    return out;
}

const Rational& ExtValue::finite_value() const {
    if (infinite_) throw DomainError("infinite value where a finite one is required");
    return value_;
}

ExtValue& ExtValue::operator+=(const ExtValue& o) {
    if (o.infinite_) infinite_ = true;
    if (!infinite_) value_ += o.value_;
    return *this;
}

ExtValue scale(const Rational& c, const ExtValue& v) {
    if (sgn(c) < 0) throw DomainError("negative scalar for extended value");
    if (sgn(c) == 0) return ExtValue();
    if (v.infinite_) return ExtValue::infinity();
    return ExtValue(Rational(c * v.value_));
}

bool operator==(const ExtValue& a, const ExtValue& b) {
    if (a.infinite_ || b.infinite_) return a.infinite_ && b.infinite_;
    return a.value_ == b.value_;
}

bool operator<(const ExtValue& a, const ExtValue& b) {
    if (a.infinite_) return false;
    if (b.infinite_) return true;
    return a.value_ < b.value_;
}

bool operator<=(const ExtValue& a, const ExtValue& b) {
    return a < b || a == b;
}

std::string ExtValue::str() const {
    return infinite_ ? "inf" : rational_str(value_);
}

}  // namespace cantor
