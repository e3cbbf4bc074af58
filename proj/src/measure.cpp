#include "cantor/measure.hpp"

#include <algorithm>
#include <fstream>
#include <optional>

namespace cantor {

namespace {

using Node = TrieMeasure::Node;
using NodePtr = TrieMeasure::NodePtr;

// Trie nodes that explicitly separate two atoms are only materialized down to
// this depth; beyond it the representations are considered pathological.
constexpr std::size_t kPointSeparationCutoff = 64;

// A measure restricted below one cylinder. Leaves and zero-mass subtrees are
// normalized into tail views, so `node` is set only for internal nodes with
// positive mass.
struct View {
    enum class Kind { zero, uniform, point, internal };
    Kind kind = Kind::zero;
    Rational mass;
    NodePtr node;
    std::optional<EventuallyPeriodicSequence> atom;
};

View view_of(const NodePtr& n) {
    View v;
    if (!n || sgn(n->mass) == 0) return v;
    v.mass = n->mass;
    if (std::holds_alternative<TrieMeasure::UniformTail>(n->below)) {
        v.kind = View::Kind::uniform;
    } else if (const auto* p = std::get_if<TrieMeasure::PointTail>(&n->below)) {
        v.kind = View::Kind::point;
        v.atom = p->atom;
    } else {
        v.kind = View::Kind::internal;
        v.node = n;
    }
    return v;
}

View child_view(const View& v, int symbol, int b) {
    switch (v.kind) {
        case View::Kind::zero:
            return View{};
        case View::Kind::internal:
            return view_of(std::get<std::vector<NodePtr>>(v.node->below)[symbol]);
        case View::Kind::uniform: {
            View c;
            c.kind = View::Kind::uniform;
            c.mass = v.mass / b;
            return c;
        }
        case View::Kind::point: {
            if (v.atom->at(0) != symbol) return View{};
            View c;
            c.kind = View::Kind::point;
            c.mass = v.mass;
            c.atom = v.atom->drop(1);
            return c;
        }
    }
    return View{};
}

NodePtr leaf_uniform(Rational mass) {
    return std::make_shared<const Node>(Node{std::move(mass), TrieMeasure::UniformTail{}});
}

NodePtr leaf_point(EventuallyPeriodicSequence atom, Rational mass) {
    return std::make_shared<const Node>(
        Node{std::move(mass), TrieMeasure::PointTail{std::move(atom)}});
}

NodePtr materialize(const View& v) {
    switch (v.kind) {
        case View::Kind::zero:
            return nullptr;
        case View::Kind::uniform:
            return leaf_uniform(v.mass);
        case View::Kind::point:
            return leaf_point(*v.atom, v.mass);
        case View::Kind::internal:
            return v.node;
    }
    return nullptr;
}

NodePtr merge_views(const View& a, const View& b, int bsz, std::size_t depth) {
    if (a.kind == View::Kind::zero) return materialize(b);
    if (b.kind == View::Kind::zero) return materialize(a);

    bool a_tail = a.kind != View::Kind::internal;
    bool b_tail = b.kind != View::Kind::internal;
    if (a_tail && b_tail) {
        if (a.kind == View::Kind::uniform && b.kind == View::Kind::uniform)
            return leaf_uniform(a.mass + b.mass);
        if (a.kind == View::Kind::point && b.kind == View::Kind::point) {
            if (!EventuallyPeriodicSequence::first_disagreement(*a.atom, *b.atom))
                return leaf_point(*a.atom, a.mass + b.mass);
            // Distinct atoms: fall through and materialize the level where
            // their paths part ways.
            if (depth >= kPointSeparationCutoff)
                throw DomainError(
                    "adding measures whose atoms stay together beyond depth " +
                    std::to_string(kPointSeparationCutoff) + " without being equal");
        } else {
            throw DomainError(
                "sum of a uniform tail and an atom below one cylinder is not representable "
                "as a trie measure");
        }
    }

    std::vector<NodePtr> children(bsz);
    Rational mass = a.mass + b.mass;
    for (int i = 0; i < bsz; ++i)
        children[i] = merge_views(child_view(a, i, bsz), child_view(b, i, bsz), bsz, depth + 1);
    return std::make_shared<const Node>(Node{std::move(mass), std::move(children)});
}

NodePtr scale_node(const NodePtr& n, const Rational& c) {
    if (!n) return nullptr;
    if (const auto* children = std::get_if<std::vector<NodePtr>>(&n->below)) {
        std::vector<NodePtr> scaled(children->size());
        for (std::size_t i = 0; i < children->size(); ++i) scaled[i] = scale_node((*children)[i], c);
        return std::make_shared<const Node>(Node{Rational(n->mass * c), std::move(scaled)});
    }
    if (const auto* p = std::get_if<TrieMeasure::PointTail>(&n->below))
        return leaf_point(p->atom, n->mass * c);
    return leaf_uniform(n->mass * c);
}

void check_word_symbols(const Word& w, int b, const char* what) {
    for (std::size_t i = 0; i < w.size(); ++i)
        if (w.at(i) < 0 || w.at(i) >= b)
            throw DomainError(std::string(what) + " uses a symbol outside the alphabet");
}

void validate_node(const NodePtr& n, int b) {
    if (!n) return;
    if (sgn(n->mass) < 0) throw DomainError("trie node with negative mass");
    if (const auto* children = std::get_if<std::vector<NodePtr>>(&n->below)) {
        if (children->size() != static_cast<std::size_t>(b))
            throw DomainError("trie node child count disagrees with the alphabet");
        Rational sum = 0;
        for (const auto& c : *children) {
            if (c) sum += c->mass;
            validate_node(c, b);
        }
        if (sum != n->mass)
            throw DomainError("trie node mass " + rational_str(n->mass) +
                              " differs from its children's sum " + rational_str(sum));
    } else if (const auto* p = std::get_if<TrieMeasure::PointTail>(&n->below)) {
        check_word_symbols(p->atom.head(), b, "point tail");
        check_word_symbols(p->atom.period(), b, "point tail");
    }
}

Rational json_mass(const nlohmann::json& j, const std::string& path) {
    if (j.is_string()) {
        Rational m = parse_rational(j.get<std::string>());
        if (sgn(m) < 0) throw ParseError(path + ": negative mass");
        return m;
    }
    if (j.is_number_integer()) {
        long v = j.get<long>();
        if (v < 0) throw ParseError(path + ": negative mass");
        return Rational(v);
    }
    throw ParseError(path + ": mass must be a rational string or an integer");
}

NodePtr parse_node(const nlohmann::json& j, Alphabet ab, const std::string& path) {
    if (!j.is_object()) throw ParseError(path + ": measure node must be a JSON object");
    if (!j.contains("mass")) throw ParseError(path + ": measure node needs \"mass\"");
    Rational mass = json_mass(j.at("mass"), path);

    bool has_children = j.contains("children");
    bool has_tail = j.contains("tail");
    if (has_children == has_tail)
        throw ParseError(path + ": measure node needs exactly one of \"children\" or \"tail\"");

    if (has_children) {
        const auto& cj = j.at("children");
        if (!cj.is_object() || cj.empty())
            throw ParseError(path + ": \"children\" must be a non-empty object");
        std::vector<NodePtr> children(ab.size());
        Rational sum = 0;
        for (const auto& [key, val] : cj.items()) {
            if (key.size() != 1 || key[0] < '0' || key[0] > '9')
                throw ParseError(path + ": child key '" + key + "' is not a digit");
            int sym = key[0] - '0';
            if (sym >= ab.size())
                throw ParseError(path + ": child key '" + key + "' is outside the alphabet of size " +
                                 std::to_string(ab.size()));
            children[sym] = parse_node(val, ab, path + "/" + key);
            sum += children[sym]->mass;
        }
        if (sum != mass)
            throw ParseError(path + ": node mass " + rational_str(mass) +
                             " differs from its children's sum " + rational_str(sum));
        return std::make_shared<const Node>(Node{std::move(mass), std::move(children)});
    }

    const auto& tj = j.at("tail");
    if (tj.is_string()) {
        if (tj.get<std::string>() != "uniform")
            throw ParseError(path + ": unknown tail '" + tj.get<std::string>() + "'");
        return leaf_uniform(std::move(mass));
    }
    if (tj.is_object() && tj.contains("point")) {
        const auto& pj = tj.at("point");
        if (!pj.is_object() || !pj.contains("head") || !pj.contains("period") ||
            !pj.at("head").is_string() || !pj.at("period").is_string())
            throw ParseError(path + ": point tail needs string \"head\" and \"period\"");
        Word head = Word::parse(pj.at("head").get<std::string>(), ab);
        Word period = Word::parse(pj.at("period").get<std::string>(), ab);
        if (period.empty()) throw ParseError(path + ": point tail period must be nonempty");
        return leaf_point(EventuallyPeriodicSequence(std::move(head), std::move(period)),
                          std::move(mass));
    }
    throw ParseError(path + ": tail must be \"uniform\" or {\"point\": {...}}");
}

nlohmann::json node_json(const NodePtr& n) {
    nlohmann::json j;
    j["mass"] = rational_str(n->mass);
    if (std::holds_alternative<TrieMeasure::UniformTail>(n->below)) {
        j["tail"] = "uniform";
    } else if (const auto* p = std::get_if<TrieMeasure::PointTail>(&n->below)) {
        j["tail"] = {{"point", {{"head", p->atom.head().str()}, {"period", p->atom.period().str()}}}};
    } else {
        nlohmann::json children = nlohmann::json::object();
        for (std::size_t i = 0; i < std::get<std::vector<NodePtr>>(n->below).size(); ++i) {
            const auto& c = std::get<std::vector<NodePtr>>(n->below)[i];
            if (c) children[std::string(1, static_cast<char>('0' + i))] = node_json(c);
        }
        if (children.empty())
            j["tail"] = "uniform";  // internal node with no explicit children has mass 0
        else
            j["children"] = std::move(children);
    }
    return j;
}

bool node_has_atoms(const NodePtr& n) {
    if (!n) return false;
    if (std::holds_alternative<TrieMeasure::PointTail>(n->below)) return sgn(n->mass) > 0;
    if (const auto* children = std::get_if<std::vector<NodePtr>>(&n->below))
        return std::any_of(children->begin(), children->end(), node_has_atoms);
    return false;
}

std::size_t node_depth(const NodePtr& n) {
    if (!n) return 0;
    std::size_t d = 0;
    if (const auto* children = std::get_if<std::vector<NodePtr>>(&n->below))
        for (const auto& c : *children) d = std::max(d, c ? 1 + node_depth(c) : std::size_t{0});
    return d;
}

void require_same_alphabet(Alphabet a, Alphabet b, const char* what) {
    if (!(a == b))
        throw DomainError(std::string(what) + ": alphabets of size " + std::to_string(a.size()) +
                          " and " + std::to_string(b.size()) + " do not match");
}

}  // namespace

TrieMeasure TrieMeasure::zero(Alphabet ab) {
    return TrieMeasure(leaf_uniform(0), ab);
}

TrieMeasure TrieMeasure::uniform(const Rational& total, Alphabet ab) {
    if (sgn(total) < 0) throw DomainError("measure mass must be nonnegative");
    return TrieMeasure(leaf_uniform(total), ab);
}

TrieMeasure TrieMeasure::uniform_on(const Word& word, const Rational& total, Alphabet ab) {
    if (sgn(total) < 0) throw DomainError("measure mass must be nonnegative");
    check_word_symbols(word, ab.size(), "cylinder word");
    NodePtr node = leaf_uniform(total);
    for (std::size_t i = word.size(); i-- > 0;) {
        std::vector<NodePtr> children(ab.size());
        children[word.at(i)] = std::move(node);
        node = std::make_shared<const Node>(Node{total, std::move(children)});
    }
    return TrieMeasure(std::move(node), ab);
}

TrieMeasure TrieMeasure::point_mass(const EventuallyPeriodicSequence& atom, const Rational& mass,
                                    Alphabet ab) {
    if (sgn(mass) < 0) throw DomainError("measure mass must be nonnegative");
    check_word_symbols(atom.head(), ab.size(), "atom");
    check_word_symbols(atom.period(), ab.size(), "atom");
    return TrieMeasure(leaf_point(atom, mass), ab);
}

TrieMeasure TrieMeasure::from_root(NodePtr root, Alphabet ab) {
    if (!root) root = leaf_uniform(0);
    TrieMeasure mu(std::move(root), ab);
    mu.validate();
    return mu;
}

const Rational& TrieMeasure::total_mass() const {
    return root_->mass;
}

Rational TrieMeasure::cylinder_mass(const Word& word) const {
    check_word_symbols(word, alphabet_.size(), "cylinder word");
    View v = view_of(root_);
    for (std::size_t i = 0; i < word.size(); ++i) {
        switch (v.kind) {
            case View::Kind::zero:
                return 0;
            case View::Kind::uniform:
                return v.mass * rational_pow(make_rational(1, alphabet_.size()), word.size() - i);
            case View::Kind::point: {
                for (std::size_t j = 0; i + j < word.size(); ++j)
                    if (v.atom->at(j) != word.at(i + j)) return 0;
                return v.mass;
            }
            case View::Kind::internal:
                v = child_view(v, word.at(i), alphabet_.size());
                break;
        }
    }
    return v.kind == View::Kind::zero ? Rational(0) : v.mass;
}

bool TrieMeasure::has_atoms() const {
    return node_has_atoms(root_);
}

std::size_t TrieMeasure::depth() const {
    return node_depth(root_);
}

TrieMeasure TrieMeasure::scaled(const Rational& c) const {
    if (sgn(c) <= 0) throw DomainError("scale factor must be a positive rational");
    return TrieMeasure(scale_node(root_, c), alphabet_);
}

void TrieMeasure::validate() const {
    validate_node(root_, alphabet_.size());
}

nlohmann::json TrieMeasure::to_json() const {
    return node_json(root_);
}

TrieMeasure TrieMeasure::from_json(const nlohmann::json& j, Alphabet ab) {
    try {
        return TrieMeasure(parse_node(j, ab, "root"), ab);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("malformed measure JSON: ") + e.what());
    }
}

TrieMeasure TrieMeasure::load_file(const std::string& path, Alphabet ab) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open measure file '" + path + "'");
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw ParseError("measure file '" + path + "' is not valid JSON: " + e.what());
    }
    return from_json(j, ab);
}

TrieMeasure add(const TrieMeasure& a, const TrieMeasure& b) {
    require_same_alphabet(a.alphabet(), b.alphabet(), "add");
    NodePtr merged = merge_views(view_of(a.root_), view_of(b.root_), a.alphabet().size(), 0);
    if (!merged) merged = leaf_uniform(0);
    return TrieMeasure(std::move(merged), a.alphabet());
}

ExtValue potential(const Kernel& kernel, const TrieMeasure& mu,
                   const EventuallyPeriodicSequence& x, long shift) {
    require_same_alphabet(kernel.alphabet(), mu.alphabet(), "potential");
    if (shift < 0) throw DomainError("kernel shift must be nonnegative");
    int b = mu.alphabet().size();
    Rational acc = 0;
    View v = view_of(mu.root());
    std::size_t depth = 0;
    for (;;) {
        switch (v.kind) {
            case View::Kind::zero:
                return acc;
            case View::Kind::uniform:
                acc += v.mass * kernel.tail_weight(shift + static_cast<long>(depth));
                return acc;
            case View::Kind::point: {
                auto dis =
                    EventuallyPeriodicSequence::first_disagreement(x.drop(depth), *v.atom);
                if (!dis) {
                    // x is this atom: every deeper cylinder carries the full
                    // atom mass, so the remainder is mass * sum of weights.
                    return ExtValue(std::move(acc)) +
                           scale(v.mass, kernel.weight_sum(shift + static_cast<long>(depth)));
                }
                for (std::size_t j = 0; j <= *dis; ++j)
                    acc += v.mass * kernel.eval(shift + static_cast<long>(depth + j));
                return acc;
            }
            case View::Kind::internal: {
                acc += v.mass * kernel.eval(shift + static_cast<long>(depth));
                int sym = x.at(depth);
                if (sym < 0 || sym >= b)
                    throw DomainError("potential: point uses a symbol outside the alphabet");
                v = child_view(v, sym, b);
                ++depth;
                break;
            }
        }
    }
}

namespace {

ExtValue energy_view(const Kernel& kernel, const View& v, long n, int b) {
    switch (v.kind) {
        case View::Kind::zero:
            return ExtValue();
        case View::Kind::uniform:
            // sum over depths j: f(n+j) * (count b^j) * (mass b^-j)^2
            return ExtValue(Rational(v.mass * v.mass * kernel.tail_weight(n)));
        case View::Kind::point:
            return scale(Rational(v.mass * v.mass), kernel.weight_sum(n));
        case View::Kind::internal: {
            ExtValue acc(Rational(v.mass * v.mass * kernel.eval(n)));
            for (int i = 0; i < b; ++i) acc += energy_view(kernel, child_view(v, i, b), n + 1, b);
            return acc;
        }
    }
    return ExtValue();
}

ExtValue mutual_view(const Kernel& kernel, const View& a, const View& b_, long n, int b) {
    if (a.kind == View::Kind::zero || b_.kind == View::Kind::zero) return ExtValue();
    bool a_tail = a.kind != View::Kind::internal;
    bool b_tail = b_.kind != View::Kind::internal;
    if (a_tail && b_tail) {
        if (a.kind == View::Kind::uniform || b_.kind == View::Kind::uniform) {
            // uniform x uniform: sum_j f(n+j) b^j (a b^-j)(c b^-j) = a c tw(n);
            // uniform x point: one cylinder per depth on the atom's path,
            // the uniform side contributes a b^-j there, so the same sum.
            return ExtValue(Rational(a.mass * b_.mass * kernel.tail_weight(n)));
        }
        auto dis = EventuallyPeriodicSequence::first_disagreement(*a.atom, *b_.atom);
        if (!dis) return scale(Rational(a.mass * b_.mass), kernel.weight_sum(n));
        Rational acc = 0;
        for (std::size_t j = 0; j <= *dis; ++j)
            acc += a.mass * b_.mass * kernel.eval(n + static_cast<long>(j));
        return ExtValue(std::move(acc));
    }
    ExtValue acc(Rational(a.mass * b_.mass * kernel.eval(n)));
    for (int i = 0; i < b; ++i)
        acc += mutual_view(kernel, child_view(a, i, b), child_view(b_, i, b), n + 1, b);
    return acc;
}

Rational riesz_checked_ratio(const Rational& r) {
    if (r <= 1 || r >= 2)
        throw DomainError("distance exponent must satisfy 1 < r < 2, got " + rational_str(r));
    return r;
}

}  // namespace

ExtValue energy(const Kernel& kernel, const TrieMeasure& mu, long shift) {
    require_same_alphabet(kernel.alphabet(), mu.alphabet(), "energy");
    if (shift < 0) throw DomainError("kernel shift must be nonnegative");
    return energy_view(kernel, view_of(mu.root()), shift, mu.alphabet().size());
}

ExtValue mutual_energy(const Kernel& kernel, const TrieMeasure& mu, const TrieMeasure& nu,
                       long shift) {
    require_same_alphabet(kernel.alphabet(), mu.alphabet(), "mutual energy");
    require_same_alphabet(mu.alphabet(), nu.alphabet(), "mutual energy");
    if (shift < 0) throw DomainError("kernel shift must be nonnegative");
    return mutual_view(kernel, view_of(mu.root()), view_of(nu.root()), shift,
                       mu.alphabet().size());
}

ExtValue riesz_energy(const TrieMeasure& mu, const Rational& r) {
    if (mu.alphabet().size() != 2)
        throw DomainError("distance-based energy is defined over a binary alphabet");
    riesz_checked_ratio(r);
    ExtValue e = energy(Kernel::geometric(r, mu.alphabet()), mu);
    Rational head = mu.total_mass() * mu.total_mass() / r;
    return ExtValue(std::move(head)) + scale(1 - 1 / r, e);
}

ExtValue riesz_potential(const TrieMeasure& mu, const EventuallyPeriodicSequence& x,
                         const Rational& r) {
    if (mu.alphabet().size() != 2)
        throw DomainError("distance-based potential is defined over a binary alphabet");
    riesz_checked_ratio(r);
    ExtValue p = potential(Kernel::geometric(r, mu.alphabet()), mu, x);
    Rational head = mu.total_mass() / r;
    return ExtValue(std::move(head)) + scale(1 - 1 / r, p);
}

}  // namespace cantor
