#include "cantor/kernel.hpp"

#include <fstream>
#include <sstream>

namespace cantor {

namespace {

// sum_{n>=0} n^i x^n = p_i(x) / (1-x)^(i+1) with integer-coefficient
// numerators built by the derivative recursion p_{i+1} = x (p_i' (1-x) + (i+1) p_i),
// p_0 = 1. (These are the Eulerian polynomials times x for i >= 1.)
Rational power_series_moment(long i, const Rational& x) {
    std::vector<mpz_class> p{1};
    for (long t = 0; t < i; ++t) {
        std::vector<mpz_class> dp(p.size() > 1 ? p.size() - 1 : 1, 0);
        for (std::size_t d = 1; d < p.size(); ++d) dp[d - 1] = p[d] * static_cast<long>(d);
        // q = dp * (1 - x) + (t+1) * p
        std::vector<mpz_class> q(std::max(p.size(), dp.size() + 1), 0);
        for (std::size_t d = 0; d < dp.size(); ++d) {
            q[d] += dp[d];
            q[d + 1] -= dp[d];
        }
        for (std::size_t d = 0; d < p.size(); ++d) q[d] += p[d] * (t + 1);
        // p_{t+1} = x * q
        std::vector<mpz_class> next(q.size() + 1, 0);
        for (std::size_t d = 0; d < q.size(); ++d) next[d + 1] = q[d];
        while (next.size() > 1 && next.back() == 0) next.pop_back();
        p = std::move(next);
    }
    Rational num = 0;
    Rational xpow = 1;
    for (const auto& coeff : p) {
        num += Rational(coeff) * xpow;
        xpow *= x;
    }
    Rational one_minus = 1 - x;
    return num / rational_pow(one_minus, static_cast<unsigned long>(i + 1));
}

Rational integer_power(long base, long exp) {
    Rational out;
    mpz_ui_pow_ui(out.get_num_mpz_t(), static_cast<unsigned long>(base),
                  static_cast<unsigned long>(exp));
    return out;
}

mpz_class binomial(long n, long k) {
    mpz_class out;
    mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return out;
}

Rational json_rational(const nlohmann::json& j, const char* what) {
    if (j.is_string()) return parse_rational(j.get<std::string>());
    if (j.is_number_integer()) return Rational(j.get<long>());
    throw ParseError(std::string(what) + " must be a rational string like \"3/2\" or an integer");
}

long json_integer(const nlohmann::json& j, const char* what) {
    if (!j.is_number_integer())
        throw ParseError(std::string(what) + " must be an integer");
    return j.get<long>();
}

}  // namespace

Kernel Kernel::geometric(const Rational& ratio, Alphabet ab) {
    if (sgn(ratio) <= 0 || ratio >= ab.size())
        throw DomainError("geometric ratio must satisfy 0 < r < " + std::to_string(ab.size()) +
                          ", got " + rational_str(ratio));
    return Kernel(Geometric{ratio}, ab);
}

Kernel Kernel::polynomial(long degree, Alphabet ab) {
    if (degree < 0) throw DomainError("polynomial degree must be nonnegative");
    return Kernel(Polynomial{degree}, ab);
}

Kernel Kernel::table(std::vector<Rational> values, Alphabet ab) {
    if (values.empty()) throw DomainError("table kernel needs at least one value");
    for (const auto& v : values)
        if (sgn(v) < 0) throw DomainError("table kernel values must be nonnegative");
    return Kernel(Table{std::move(values)}, ab);
}

Kernel Kernel::shift(Kernel base, long offset) {
    if (offset < 0) throw DomainError("shift offset must be nonnegative");
    Alphabet ab = base.alphabet();
    return Kernel(Shifted{std::make_shared<const Kernel>(std::move(base)), offset}, ab);
}

Kernel Kernel::from_s_energy(const Rational& r) {
    if (r <= 1 || r >= 2)
        throw DomainError("s-energy parameter must satisfy 1 < r < 2, got " + rational_str(r));
    return geometric(r, Alphabet(2));
}

Kernel Kernel::from_log_energy(long k) {
    if (k < 1) throw DomainError("logarithmic energy order must be at least 1");
    return polynomial(k - 1, Alphabet(2));
}

Rational Kernel::eval(long n) const {
    if (n < 0) throw DomainError("weight index must be nonnegative");
    if (const auto* g = std::get_if<Geometric>(&rep_))
        return rational_pow(g->ratio, static_cast<unsigned long>(n));
    if (const auto* p = std::get_if<Polynomial>(&rep_))
        return integer_power(n, p->degree);  // 0^0 = 1
    if (const auto* t = std::get_if<Table>(&rep_))
        return static_cast<std::size_t>(n) < t->values.size() ? t->values[n] : Rational(0);
    const auto& s = std::get<Shifted>(rep_);
    return s.base->eval(n + s.offset);
}

Rational Kernel::tail_weight(long k) const {
    if (k < 0) throw DomainError("tail weight index must be nonnegative");
    long b = alphabet_.size();
    if (const auto* g = std::get_if<Geometric>(&rep_)) {
        // sum_n r^(n+k) b^-n = r^k / (1 - r/b)
        Rational geom_sum = Rational(b) / (b - g->ratio);
        return rational_pow(g->ratio, static_cast<unsigned long>(k)) * geom_sum;
    }
    if (const auto* p = std::get_if<Polynomial>(&rep_)) {
        // sum_n (n+k)^j b^-n expanded by the binomial theorem over the
        // exact power-series moments at x = 1/b.
        Rational x = make_rational(1, b);
        Rational total = 0;
        for (long i = 0; i <= p->degree; ++i) {
            Rational term = Rational(binomial(p->degree, i)) * integer_power(k, p->degree - i) *
                            power_series_moment(i, x);
            total += term;
        }
        return total;
    }
    if (const auto* t = std::get_if<Table>(&rep_)) {
        Rational total = 0;
        Rational scale = 1;
        Rational inv_b = make_rational(1, b);
        for (std::size_t m = static_cast<std::size_t>(k); m < t->values.size(); ++m) {
            total += t->values[m] * scale;
            scale *= inv_b;
        }
        return total;
    }
    const auto& s = std::get<Shifted>(rep_);
    return s.base->tail_weight(k + s.offset);
}

bool Kernel::has_finite_support() const {
    if (std::holds_alternative<Table>(rep_)) return true;
    if (const auto* s = std::get_if<Shifted>(&rep_)) return s->base->has_finite_support();
    return false;
}

ExtValue Kernel::weight_sum(long k) const {
    if (k < 0) throw DomainError("weight index must be nonnegative");
    if (const auto* g = std::get_if<Geometric>(&rep_)) {
        if (g->ratio >= 1) return ExtValue::infinity();
        return ExtValue(
            Rational(rational_pow(g->ratio, static_cast<unsigned long>(k)) / (1 - g->ratio)));
    }
    if (std::holds_alternative<Polynomial>(rep_)) return ExtValue::infinity();
    if (const auto* t = std::get_if<Table>(&rep_)) {
        Rational total = 0;
        for (std::size_t m = static_cast<std::size_t>(k); m < t->values.size(); ++m)
            total += t->values[m];
        return ExtValue(std::move(total));
    }
    const auto& s = std::get<Shifted>(rep_);
    return s.base->weight_sum(k + s.offset);
}

bool Kernel::is_amicable() const {
    if (std::holds_alternative<Geometric>(rep_)) return true;   // f(k)/tw(k+1) = (b-r)/(rb)
    if (std::holds_alternative<Polynomial>(rep_)) return true;  // nondecreasing weights
    if (const auto* s = std::get_if<Shifted>(&rep_)) return s->base->is_amicable();
    return false;  // finite support: the ratio blows up at the support's edge
}

Rational Kernel::norm_bound() const {
    long b = alphabet_.size();
    if (const auto* g = std::get_if<Geometric>(&rep_)) {
        // f(k)/tw(k+1) = r^k / (r^(k+1) b/(b-r)) = (b-r)/(rb), independent of k.
        return (b - g->ratio) / (g->ratio * b);
    }
    if (std::holds_alternative<Polynomial>(rep_)) {
        // f(k)/tw(k+1) = k^j / sum_n (n+k+1)^j b^-n <= k^j / (k^j b/(b-1)),
        // since the weights are nondecreasing; the bound (b-1)/b is also the
        // k -> infinity limit, hence tight.
        return make_rational(b - 1, b);
    }
    if (const auto* s = std::get_if<Shifted>(&rep_)) return s->base->norm_bound();
    throw DomainError("norm bound undefined: kernel with finite support is not amicable");
}

nlohmann::json Kernel::to_json() const {
    nlohmann::json j;
    if (const auto* g = std::get_if<Geometric>(&rep_)) {
        j["kind"] = "geometric";
        j["ratio"] = rational_str(g->ratio);
        j["alphabet"] = alphabet_.size();
    } else if (const auto* p = std::get_if<Polynomial>(&rep_)) {
        j["kind"] = "polynomial";
        j["degree"] = p->degree;
        j["alphabet"] = alphabet_.size();
    } else if (const auto* t = std::get_if<Table>(&rep_)) {
        j["kind"] = "table";
        auto arr = nlohmann::json::array();
        for (const auto& v : t->values) arr.push_back(rational_str(v));
        j["values"] = std::move(arr);
        j["alphabet"] = alphabet_.size();
    } else {
        const auto& s = std::get<Shifted>(rep_);
        j["kind"] = "shift";
        j["offset"] = s.offset;
        j["base"] = s.base->to_json();
    }
    return j;
}

Kernel Kernel::from_json(const nlohmann::json& j) {
    try {
        if (!j.is_object()) throw ParseError("kernel must be a JSON object");
        if (!j.contains("kind") || !j.at("kind").is_string())
            throw ParseError("kernel needs a string \"kind\"");
        std::string kind = j.at("kind").get<std::string>();

        auto read_alphabet = [&](int fallback) {
            if (!j.contains("alphabet")) return Alphabet(fallback);
            long b = json_integer(j.at("alphabet"), "\"alphabet\"");
            if (b < 2 || b > 10) throw ParseError("\"alphabet\" must be between 2 and 10");
            return Alphabet(static_cast<int>(b));
        };

        if (kind == "geometric") {
            if (!j.contains("ratio")) throw ParseError("geometric kernel needs \"ratio\"");
            return geometric(json_rational(j.at("ratio"), "\"ratio\""), read_alphabet(2));
        }
        if (kind == "polynomial") {
            if (!j.contains("degree")) throw ParseError("polynomial kernel needs \"degree\"");
            return polynomial(json_integer(j.at("degree"), "\"degree\""), read_alphabet(2));
        }
        if (kind == "table") {
            if (!j.contains("values") || !j.at("values").is_array())
                throw ParseError("table kernel needs a \"values\" array");
            std::vector<Rational> values;
            for (const auto& v : j.at("values")) values.push_back(json_rational(v, "table value"));
            return table(std::move(values), read_alphabet(2));
        }
        if (kind == "shift") {
            if (!j.contains("base")) throw ParseError("shift kernel needs \"base\"");
            if (!j.contains("offset")) throw ParseError("shift kernel needs \"offset\"");
            Kernel base = from_json(j.at("base"));
            if (j.contains("alphabet") &&
                json_integer(j.at("alphabet"), "\"alphabet\"") != base.alphabet().size())
                throw ParseError("shift kernel \"alphabet\" disagrees with its base");
            return shift(std::move(base), json_integer(j.at("offset"), "\"offset\""));
        }
        throw ParseError("unknown kernel kind '" + kind + "'");
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("malformed kernel JSON: ") + e.what());
    } catch (const DomainError& e) {
        throw ParseError(std::string("invalid kernel: ") + e.what());
    }
}

Kernel Kernel::load_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open kernel file '" + path + "'");
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw ParseError("kernel file '" + path + "' is not valid JSON: " + e.what());
    }
    return from_json(j);
}

std::string Kernel::describe() const {
    std::ostringstream out;
    if (const auto* g = std::get_if<Geometric>(&rep_))
        out << "geometric(" << rational_str(g->ratio) << ")";
    else if (const auto* p = std::get_if<Polynomial>(&rep_))
        out << "polynomial(" << p->degree << ")";
    else if (const auto* t = std::get_if<Table>(&rep_))
        out << "table[" << t->values.size() << "]";
    else {
        const auto& s = std::get<Shifted>(rep_);
        // The base's description already names the alphabet.
        out << s.base->describe() << " shifted by " << s.offset;
        return out.str();
    }
    out << " over " << alphabet_.size() << " symbols";
    return out.str();
}

}  // namespace cantor
