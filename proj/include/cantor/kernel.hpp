#pragma once

#include <memory>
#include <string>
#include <variant>
#include <vector>

#include <nlohmann/json.hpp>

#include "cantor/rational.hpp"
#include "cantor/word.hpp"

namespace cantor {

/// A weight function f : N -> Q>=0 over an alphabet of size b, from the
/// closed families the engine supports exactly:
///
///   geometric(r):   f(n) = r^n, 0 < r < b
///   polynomial(j):  f(n) = n^j (with 0^0 = 1), j >= 0
///   table(v):       f(n) = v[n] for n < len, else 0   (finite support)
///   shift(g, k):    f(n) = g(n + k), k >= 0
///
/// Tail weights  tw(k) = sum_n f(n+k) b^-n  are evaluated in closed form, so
/// every downstream quantity stays exact.
class Kernel {
public:
    static Kernel geometric(const Rational& ratio, Alphabet ab);
    static Kernel polynomial(long degree, Alphabet ab);
    static Kernel table(std::vector<Rational> values, Alphabet ab);
    static Kernel shift(Kernel base, long offset);

    /// Weight function of the s-energy with 2^s = r on a binary alphabet:
    /// geometric(r). Requires 1 < r < 2.
    static Kernel from_s_energy(const Rational& r);

    /// Weight function whose energy is the order-k logarithmic energy on a
    /// binary alphabet: f(n) = n^(k-1) (k = 1 gives f = 1). Requires k >= 1.
    static Kernel from_log_energy(long k);

    Alphabet alphabet() const { return alphabet_; }

    /// f(n), n >= 0.
    Rational eval(long n) const;

    /// tw(k) = sum_{n>=0} f(n+k) b^-n, exact closed form. Positive for
    /// geometric/polynomial; may be 0 for table kernels past their support.
    Rational tail_weight(long k) const;

    /// True when the weights vanish from some index on (table kernels and
    /// shifts of them).
    bool has_finite_support() const;

    /// sum_{n>=k} f(n) as an extended value: finite for summable kernels
    /// (tables, geometric with r < 1), +inf otherwise. This is the potential
    /// a unit atom exerts on itself.
    ExtValue weight_sum(long k) const;

    /// A kernel is amicable when sup_k f(k)/tw(k+1) is finite, i.e. the
    /// weight at one level never dwarfs everything below it. Geometric and
    /// polynomial kernels are; finite-support kernels are not (the sup
    /// diverges at the support's edge).
    bool is_amicable() const;

    /// A certified finite upper bound for sup_k f(k)/tw(k+1):
    ///   geometric(r): exactly (b - r) / (r b)
    ///   polynomial:   (b - 1) / b  (the supremum's limit; an upper bound
    ///                 because n^j is nondecreasing)
    ///   shift:        the base kernel's bound (the sup over fewer k)
    /// DomainError for non-amicable kernels.
    Rational norm_bound() const;

    nlohmann::json to_json() const;
    static Kernel from_json(const nlohmann::json& j);
    static Kernel load_file(const std::string& path);

    /// Short human-readable description, e.g. "geometric(3/2) over 2 symbols".
    std::string describe() const;

private:
    struct Geometric {
        Rational ratio;
    };
    struct Polynomial {
        long degree;
    };
    struct Table {
        std::vector<Rational> values;
    };
    struct Shifted {
        std::shared_ptr<const Kernel> base;
        long offset;
    };
    using Rep = std::variant<Geometric, Polynomial, Table, Shifted>;

    Kernel(Rep rep, Alphabet ab) : rep_(std::move(rep)), alphabet_(ab) {}

    Rep rep_;
    Alphabet alphabet_;
};

}  // namespace cantor
