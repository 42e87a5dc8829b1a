#ifndef NCM_ALGEBRA_HPP
#define NCM_ALGEBRA_HPP

#include "ncm/bubbletree.hpp"
#include "ncm/freeop.hpp"

#include <functional>
#include <map>
#include <random>
#include <string>
#include <vector>

namespace ncm {

using Word = std::vector<Label>;

// Finite formal sum of words with rational coefficients.
class WordPolynomial {
public:
    WordPolynomial() = default;
    static WordPolynomial word(Word w, Rational c = 1) {
        WordPolynomial f;
        f.add(std::move(w), c);
        return f;
    }
    static WordPolynomial one() { return word({}); }

    void add(Word w, const Rational& c) {
        if (c == 0) return;
        auto [it, inserted] = terms_.emplace(std::move(w), c);
        if (inserted) return;
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }

    const std::map<Word, Rational>& terms() const { return terms_; }
    bool empty() const { return terms_.empty(); }
    Rational constant_term() const {
        auto it = terms_.find(Word{});
        return it == terms_.end() ? Rational(0) : it->second;
    }

    friend WordPolynomial operator+(WordPolynomial a, const WordPolynomial& b) {
        for (const auto& [w, c] : b.terms_) a.add(w, c);
        return a;
    }
    friend WordPolynomial operator-(WordPolynomial a, const WordPolynomial& b) {
        for (const auto& [w, c] : b.terms_) a.add(w, -c);
        return a;
    }
    friend WordPolynomial operator*(const Rational& s, const WordPolynomial& a) {
        WordPolynomial r;
        for (const auto& [w, c] : a.terms_) r.add(w, s * c);
        return r;
    }
    // Concatenation product.
    friend WordPolynomial operator*(const WordPolynomial& a, const WordPolynomial& b) {
        WordPolynomial r;
        for (const auto& [u, c] : a.terms_)
            for (const auto& [v, d] : b.terms_) {
                Word w = u;
                w.insert(w.end(), v.begin(), v.end());
                r.add(std::move(w), c * d);
            }
        return r;
    }
    bool operator==(const WordPolynomial& o) const { return terms_ == o.terms_; }

private:
    std::map<Word, Rational> terms_;
};

inline std::string to_string(const WordPolynomial& f, const std::function<std::string(Label)>& letter) {
    if (f.empty()) return "0";
    std::string s;
    for (const auto& [w, c] : f.terms()) {
        std::string coef = to_string(c);
        if (!s.empty()) s += c < 0 ? " - " : " + ";
        else if (c < 0) s += "-";
        if (c < 0) coef = to_string(Rational(-c));
        std::string body;
        for (Label x : w) body += letter(x);
        if (body.empty()) s += coef;
        else s += (coef == "1" ? "" : coef + "*") + body;
    }
    return s;
}

// x * w = (x w_1) ... (x w_|w|)
inline Word shift_action(const Magma& m, Label x, const Word& w) {
    Word r;
    r.reserve(w.size());
    for (Label y : w) r.push_back(m.op(x, y));
    return r;
}

inline WordPolynomial shift_action(const Magma& m, Label x, const WordPolynomial& f) {
    WordPolynomial r;
    for (const auto& [w, c] : f.terms()) r.add(shift_action(m, x, w), c);
    return r;
}

// p0 * ((p1 * f1) (p2 * f2))
inline WordPolynomial triangle_op_words(const Magma& m, const Triple& p, const WordPolynomial& f1,
                                        const WordPolynomial& f2) {
    return shift_action(m, p[0], shift_action(m, p[1], f1) * shift_action(m, p[2], f2));
}

// An associative algebra with maps omega_x indexed by the magma.
template <class A>
struct OmegaFamily {
    std::string name;
    MagmaPtr magma;
    std::function<A(const A&, const A&)> product;
    std::function<A(Label, const A&)> omega;
};

using WordOmega = OmegaFamily<WordPolynomial>;

// Words over the monoid itself, omega_x = letterwise left action.
inline WordOmega monoid_words(const MagmaPtr& m) {
    if (!is_associative(*m)) throw std::invalid_argument("monoid_words: magma is not associative");
    return {"monoid words over " + m->name(), m, [](const WordPolynomial& a, const WordPolynomial& b) { return a * b; },
            [m](Label x, const WordPolynomial& f) { return shift_action(*m, x, f); }};
}

// Words over {a_1..a_l}, letter j stored as j; omega_S keeps the words containing every a_j, j in S.
inline WordOmega selected_concatenation(const MagmaPtr& s_magma) {
    return {"selected concatenation over " + s_magma->name(), s_magma,
            [](const WordPolynomial& a, const WordPolynomial& b) { return a * b; },
            [](Label set, const WordPolynomial& f) {
                WordPolynomial r;
                for (const auto& [w, c] : f.terms()) {
                    Label seen = 0;
                    for (Label x : w) seen |= Label(1) << (x - 1);
                    if ((seen & set) == set) r.add(w, c);
                }
                return r;
            }};
}

// Polynomials with omega_1 = identity and omega_0(f) = f(0), over D0.
inline WordOmega constant_term(const MagmaPtr& d0_magma) {
    const Label zero = d0_magma->parse_label("0");
    return {"constant term over " + d0_magma->name(), d0_magma,
            [](const WordPolynomial& a, const WordPolynomial& b) { return a * b; },
            [zero](Label x, const WordPolynomial& f) {
                if (x != zero) return f;
                return WordPolynomial::word({}, f.constant_term());
            }};
}

template <class A>
A triangle_op(const OmegaFamily<A>& om, const Triple& p, const A& a1, const A& a2) {
    return om.omega(p[0], om.product(om.omega(p[1], a1), om.omega(p[2], a2)));
}

namespace detail {
template <class A>
A act_bubble_tree(const SyntaxTree& t, const OmegaFamily<A>& om, const std::vector<A>& args, std::size_t& next) {
    if (t.is_leaf()) return args[next++];
    const Clique& b = t.label();
    A acc;
    for (int k = 1; k <= b.arity(); ++k) {
        A v = om.omega(b.edge(k), act_bubble_tree(t.child(k), om, args, next));
        acc = k == 1 ? v : om.product(acc, v);
    }
    return om.omega(b.base(), acc);
}
} // namespace detail

// Bubbles act by omega_{b0}(prod omega_{bi}(a_i)); general cliques through bt.
template <class A>
A clique_action(const Clique& p, const std::vector<A>& args, const OmegaFamily<A>& om) {
    if (static_cast<int>(args.size()) != p.arity()) throw std::invalid_argument("clique_action: arity mismatch");
    if (p.arity() == 1) return args[0];
    std::size_t next = 0;
    return detail::act_bubble_tree(bt(p), om, args, next);
}

struct RelationReport {
    std::size_t instances = 0;
    std::size_t samples = 0;
    std::size_t evaluations = 0;
    bool exhaustive = true;
    std::vector<std::string> violations;
    bool passed() const { return violations.empty(); }
};

struct RelationInstance {
    int relation;       // 1, 2 or 3
    Triple p, q, r, s;  // left side uses (p, q); right side uses (r, s)
};

// Every instance of the three algebra relations: relations 1 and 2 compare
// (a1 q a2) p a3 shapes; relation 3 compares a1 p (a2 q a3) shapes.
inline std::vector<RelationInstance> relation_instances(const Magma& m) {
    const auto els = m.elements();
    std::vector<std::vector<std::pair<Label, Label>>> fibre(els.size());
    for (Label a : els)
        for (Label b : els) fibre[static_cast<std::size_t>(m.op(a, b))].push_back({a, b});
    std::vector<RelationInstance> out;
    for (Label a : els)
        for (Label b : els)
            for (Label c : els)
                for (Label d : els) {
                    for (Label delta : m.non_unit_elements()) {
                        const auto& f = fibre[static_cast<std::size_t>(delta)];
                        for (std::size_t i = 0; i < f.size(); ++i)
                            for (std::size_t j = i + 1; j < f.size(); ++j) {
                                auto [p1, q0] = f[i];
                                auto [r1, r0] = f[j];
                                out.push_back({1, {a, p1, b}, {q0, c, d}, {a, r1, b}, {r0, c, d}});
                                out.push_back({3, {a, b, p1}, {q0, c, d}, {a, b, r1}, {r0, c, d}});
                            }
                    }
                    const auto& f = fibre[static_cast<std::size_t>(m.unit())];
                    for (auto [p1, q0] : f)
                        for (auto [r2, r0] : f)
                            out.push_back({2, {a, p1, b}, {q0, c, d}, {a, c, r2}, {r0, d, b}});
                }
    return out;
}

// Checks relations 1-3 on every sample triple. When the magma has more than
// `max_instances` relation instances, a seeded random subset of that size is used.
template <class A>
RelationReport relations_check(const OmegaFamily<A>& om, const std::vector<std::array<A, 3>>& samples,
                               std::size_t max_instances = 50'000, std::uint64_t seed = 1,
                               const std::function<std::string(const A&)>& show = nullptr) {
    const Magma& m = *om.magma;
    auto instances = relation_instances(m);
    RelationReport rep;
    if (instances.size() > max_instances) {
        std::mt19937_64 rng(seed);
        std::shuffle(instances.begin(), instances.end(), rng);
        instances.resize(max_instances);
        rep.exhaustive = false;
    }
    rep.instances = instances.size();
    rep.samples = samples.size();
    const std::size_t m3 = m.size() * m.size() * m.size();
    auto idx = [&](const Triple& t) {
        return (static_cast<std::size_t>(t[0]) * m.size() + static_cast<std::size_t>(t[1])) * m.size() +
               static_cast<std::size_t>(t[2]);
    };
    for (const auto& smp : samples) {
        const auto& [a1, a2, a3] = smp;
        std::map<std::size_t, A> left, right; // (a1 q a2) p a3 and a1 p (a2 q a3), keyed by p * m3 + q
        std::map<std::size_t, A> inner_left, inner_right;
        auto left_of = [&](const Triple& p, const Triple& q) -> const A& {
            const std::size_t key = idx(p) * m3 + idx(q);
            if (auto it = left.find(key); it != left.end()) return it->second;
            auto in = inner_left.find(idx(q));
            if (in == inner_left.end()) in = inner_left.emplace(idx(q), triangle_op(om, q, a1, a2)).first;
            ++rep.evaluations;
            return left.emplace(key, triangle_op(om, p, in->second, a3)).first->second;
        };
        auto right_of = [&](const Triple& p, const Triple& q) -> const A& {
            const std::size_t key = idx(p) * m3 + idx(q);
            if (auto it = right.find(key); it != right.end()) return it->second;
            auto in = inner_right.find(idx(q));
            if (in == inner_right.end()) in = inner_right.emplace(idx(q), triangle_op(om, q, a2, a3)).first;
            ++rep.evaluations;
            return right.emplace(key, triangle_op(om, p, a1, in->second)).first->second;
        };
        for (const auto& in : instances) {
            const A& lhs = in.relation == 3 ? right_of(in.p, in.q) : left_of(in.p, in.q);
            const A& rhs = in.relation == 1 ? left_of(in.r, in.s) : right_of(in.r, in.s);
            if (lhs == rhs) continue;
            if (rep.violations.size() >= 20) continue;
            auto tri = [&](const Triple& t) {
                return "(" + m.label_name(t[0]) + "," + m.label_name(t[1]) + "," + m.label_name(t[2]) + ")";
            };
            std::string msg = "relation " + std::to_string(in.relation) + " p=" + tri(in.p) + " q=" + tri(in.q) +
                              " r=" + tri(in.r) + " s=" + tri(in.s);
            if (show) msg += " args: " + show(a1) + " | " + show(a2) + " | " + show(a3);
            rep.violations.push_back(msg);
        }
    }
    return rep;
}

// Random polynomial with 1..max_terms terms, words of length <= max_len over letters in [lo, hi].
inline WordPolynomial random_polynomial(std::mt19937_64& rng, Label lo, Label hi, int max_terms = 3,
                                        int max_len = 3) {
    std::uniform_int_distribution<int> terms(1, max_terms), len(0, max_len), coef(-3, 3);
    std::uniform_int_distribution<Label> letter(lo, hi);
    WordPolynomial f;
    const int k = terms(rng);
    for (int t = 0; t < k; ++t) {
        Word w(static_cast<std::size_t>(len(rng)));
        for (auto& x : w) x = letter(rng);
        int c = coef(rng);
        f.add(std::move(w), c == 0 ? 1 : c);
    }
    return f;
}

// q p r := (p o_2 r) o_1 q, built on Schroder trees: q and r hang below a
// binary corolla with stem p0 and edges p1*q0, p2*r0, contracted when 1.
inline SchroderTree free_algebra_product(const Triple& p, const SchroderTree& q, const SchroderTree& r,
                                         const Magma& m) {
    SchroderTree top{p[0], {}};
    auto attach = [&](Label edge, const SchroderTree& sub) {
        const Label c = m.op(edge, sub.label);
        if (sub.is_leaf()) {
            top.children.push_back({c, {}});
        } else if (!m.is_unit(c)) {
            SchroderTree s = sub;
            s.label = c;
            top.children.push_back(std::move(s));
        } else {
            top.children.insert(top.children.end(), sub.children.begin(), sub.children.end());
        }
    };
    attach(p[1], q);
    attach(p[2], r);
    return top;
}

} // namespace ncm

#endif // NCM_ALGEBRA_HPP
