#pragma once

#include <algorithm>
#include <map>
#include <memory>
#include <numeric>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "ghost/affine_form.hpp"
#include "ghost/root_system.hpp"

namespace ghost {

// --- Atoms ------------------------------------------------------------------
//
// An atom asserts  lhs <rel> 0  for an affine form in the weight coordinates
// (never in c).  The factory normalizes: variable coefficients are divided by
// their gcd, and since the coordinates are integers the strict relations are
// tightened away, so stored atoms only ever carry Eq/Le/Ge with an integer
// constant term.

enum class Rel { Eq, Le, Ge, Lt, Gt };

struct Atom {
    AffineForm lhs;
    Rel rel = Rel::Eq;

    friend bool operator==(const Atom& a, const Atom& b) {
        return a.rel == b.rel && a.lhs == b.lhs;
    }
};

inline std::string rel_text(Rel r) {
    switch (r) {
        case Rel::Eq: return "=";
        case Rel::Le: return "<=";
        case Rel::Ge: return ">=";
        case Rel::Lt: return "<";
        case Rel::Gt: return ">";
    }
    return "?";
}

// Atoms render solved for their lowest-index variable: "a2 <= 0",
// "a1 = a2", "a2 = -a3", "a3 >= -1".
inline std::string atom_text(const Atom& at) {
    AffineForm lhs = at.lhs;
    Rel rel = at.rel;
    std::size_t pivot = lhs.nvars();
    for (std::size_t i = 0; i < lhs.nvars(); ++i)
        if (lhs.coeff(i) != 0) {
            pivot = i;
            break;
        }
    if (pivot == lhs.nvars()) return lhs.constant_term().str() + " " + rel_text(rel) + " 0";
    if (lhs.coeff(pivot) < 0) {
        lhs = -lhs;
        if (rel == Rel::Le) rel = Rel::Ge;
        else if (rel == Rel::Ge) rel = Rel::Le;
        else if (rel == Rel::Lt) rel = Rel::Gt;
        else if (rel == Rel::Gt) rel = Rel::Lt;
    }
    long long pc = lhs.coeff(pivot);
    AffineForm rhs = Rational(pc) * AffineForm::variable(lhs.nvars(), pivot) - lhs;
    std::string head = (pc == 1 ? "" : std::to_string(pc)) + "a" + std::to_string(pivot + 1);
    return head + " " + rel_text(rel) + " " + rhs.render(RenderStyle::VariableFirst);
}

inline bool eval_atom(const Atom& at, const std::vector<long long>& a) {
    Rational v = at.lhs.evaluate(a, 0);
    switch (at.rel) {
        case Rel::Eq: return v == Rational(0);
        case Rel::Le: return v <= Rational(0);
        case Rel::Ge: return v >= Rational(0);
        case Rel::Lt: return v < Rational(0);
        case Rel::Gt: return v > Rational(0);
    }
    return false;
}

// --- Condition trees ----------------------------------------------------------
//
// Constants, atoms, and n-ary and/or.  Negation is applied structurally (De
// Morgan plus atom flipping), so no Not node is ever stored and every tree is
// already in negation normal form.

class Condition {
public:
    enum class Kind { True, False, Leaf, And, Or };

    Condition() : Condition(make_shared_node(Kind::True)) {}

    static Condition boolean(bool b) {
        return Condition(make_shared_node(b ? Kind::True : Kind::False));
    }

    static Condition leaf(Atom at) {
        auto n = make_shared_node(Kind::Leaf);
        n->atom = std::move(at);
        return Condition(n);
    }

    static Condition junction(Kind kind, std::vector<Condition> children) {
        auto n = make_shared_node(kind);
        n->children = std::move(children);
        return Condition(n);
    }

    Kind kind() const { return node_->kind; }
    const Atom& atom() const { return node_->atom; }
    const std::vector<Condition>& children() const { return node_->children; }

    bool is_constant() const { return kind() == Kind::True || kind() == Kind::False; }

private:
    struct Node {
        Kind kind = Kind::True;
        Atom atom;
        std::vector<Condition> children;
    };

    static std::shared_ptr<Node> make_shared_node(Kind k) {
        auto n = std::make_shared<Node>();
        n->kind = k;
        return n;
    }

    explicit Condition(std::shared_ptr<const Node> n) : node_(std::move(n)) {}

    std::shared_ptr<const Node> node_;
};

inline Condition cond_true() { return Condition::boolean(true); }

inline Condition cond_false() { return Condition::boolean(false); }

inline Condition cond_and(std::vector<Condition> parts) {
    std::vector<Condition> kept;
    for (const Condition& p : parts) {
        switch (p.kind()) {
            case Condition::Kind::True: break;
            case Condition::Kind::False: return Condition::boolean(false);
            case Condition::Kind::And:
                for (const Condition& q : p.children()) kept.push_back(q);
                break;
            default: kept.push_back(p);
        }
    }
    if (kept.empty()) return Condition::boolean(true);
    if (kept.size() == 1) return kept.front();
    return Condition::junction(Condition::Kind::And, std::move(kept));
}

inline Condition cond_or(std::vector<Condition> parts) {
    std::vector<Condition> kept;
    for (const Condition& p : parts) {
        switch (p.kind()) {
            case Condition::Kind::False: break;
            case Condition::Kind::True: return Condition::boolean(true);
            case Condition::Kind::Or:
                for (const Condition& q : p.children()) kept.push_back(q);
                break;
            default: kept.push_back(p);
        }
    }
    if (kept.empty()) return Condition::boolean(false);
    if (kept.size() == 1) return kept.front();
    return Condition::junction(Condition::Kind::Or, std::move(kept));
}

// Normalizing factory.  Folds constant forms, divides out the gcd of the
// variable coefficients, and tightens to a non-strict integer relation.
inline Condition make_atom(AffineForm lhs, Rel rel) {
    if (lhs.c_coeff() != 0) throw std::logic_error("conditions may not involve c");
    if (lhs.is_constant()) {
        Rational v = lhs.constant_term();
        bool truth = false;
        switch (rel) {
            case Rel::Eq: truth = v == Rational(0); break;
            case Rel::Le: truth = v <= Rational(0); break;
            case Rel::Ge: truth = v >= Rational(0); break;
            case Rel::Lt: truth = v < Rational(0); break;
            case Rel::Gt: truth = v > Rational(0); break;
        }
        return Condition::boolean(truth);
    }
    long long g = 0;
    for (std::size_t i = 0; i < lhs.nvars(); ++i) {
        long long c = lhs.coeff(i);
        g = std::gcd(g, c < 0 ? -c : c);
    }
    if (g > 1) lhs = Rational(1, g) * lhs;

    Rational r = lhs.constant_term();
    Rational tightened = r;
    switch (rel) {
        case Rel::Ge: tightened = Rational(r.floor()); break;
        case Rel::Gt: tightened = Rational(r.ceil() - 1); rel = Rel::Ge; break;
        case Rel::Le: tightened = Rational(r.ceil()); break;
        case Rel::Lt: tightened = Rational(r.floor() + 1); rel = Rel::Le; break;
        case Rel::Eq:
            if (!r.is_integer()) return Condition::boolean(false);
            break;
    }
    if (tightened != r)
        lhs += AffineForm::constant(lhs.nvars(), tightened - r);
    return Condition::leaf(Atom{lhs, rel});
}

inline Condition negate_atom(const Atom& at) {
    switch (at.rel) {
        case Rel::Le: return make_atom(at.lhs, Rel::Gt);
        case Rel::Lt: return make_atom(at.lhs, Rel::Ge);
        case Rel::Ge: return make_atom(at.lhs, Rel::Lt);
        case Rel::Gt: return make_atom(at.lhs, Rel::Le);
        case Rel::Eq:
            return cond_or({make_atom(at.lhs, Rel::Lt), make_atom(at.lhs, Rel::Gt)});
    }
    return Condition::boolean(false);
}

inline Condition negate_condition(const Condition& c) {
    switch (c.kind()) {
        case Condition::Kind::True: return Condition::boolean(false);
        case Condition::Kind::False: return Condition::boolean(true);
        case Condition::Kind::Leaf: return negate_atom(c.atom());
        case Condition::Kind::And: {
            std::vector<Condition> parts;
            for (const Condition& q : c.children()) parts.push_back(negate_condition(q));
            return cond_or(std::move(parts));
        }
        case Condition::Kind::Or: {
            std::vector<Condition> parts;
            for (const Condition& q : c.children()) parts.push_back(negate_condition(q));
            return cond_and(std::move(parts));
        }
    }
    return Condition::boolean(false);
}

inline bool eval_condition(const Condition& c, const std::vector<long long>& a) {
    switch (c.kind()) {
        case Condition::Kind::True: return true;
        case Condition::Kind::False: return false;
        case Condition::Kind::Leaf: return eval_atom(c.atom(), a);
        case Condition::Kind::And:
            for (const Condition& q : c.children())
                if (!eval_condition(q, a)) return false;
            return true;
        case Condition::Kind::Or:
            for (const Condition& q : c.children())
                if (eval_condition(q, a)) return true;
            return false;
    }
    return false;
}

inline std::string condition_text(const Condition& c) {
    switch (c.kind()) {
        case Condition::Kind::True: return "true";
        case Condition::Kind::False: return "false";
        case Condition::Kind::Leaf: return atom_text(c.atom());
        case Condition::Kind::And: {
            std::string out;
            for (const Condition& q : c.children()) {
                if (!out.empty()) out += " and ";
                out += condition_text(q);
            }
            return out;
        }
        case Condition::Kind::Or: {
            std::string out;
            for (const Condition& q : c.children()) {
                if (!out.empty()) out += " or ";
                std::string part = condition_text(q);
                if (q.kind() == Condition::Kind::And) part = "(" + part + ")";
                out += part;
            }
            return out;
        }
    }
    return "?";
}

// --- Octagon domain -----------------------------------------------------------
//
// Difference-bound reasoning over +-a_i, sufficient to decide every condition
// produced by the filters, because each of their atoms involves at most two
// coordinates with unit coefficients.  Node 2i carries +a_i, node 2i+1 carries
// -a_i; m[u][v] bounds val(u) - val(v).  Even-tightening of the unary
// diagonals makes the closure exact over the integers.

class Octagon {
public:
    static constexpr long long INF = 1LL << 60;

    explicit Octagon(int nvars)
        : l_(nvars), m_(2 * nvars, std::vector<long long>(2 * nvars, INF)) {
        for (int u = 0; u < 2 * l_; ++u) m_[u][u] = 0;
    }

    // val(u) - val(v) <= k, mirrored onto the negated nodes.
    void add_edge(int u, int v, long long k) {
        m_[u][v] = std::min(m_[u][v], k);
        m_[v ^ 1][u ^ 1] = std::min(m_[v ^ 1][u ^ 1], k);
    }

    void add_unary_upper(int i, long long k) { add_edge(2 * i, 2 * i + 1, 2 * k); }
    void add_unary_lower(int i, long long k) { add_edge(2 * i + 1, 2 * i, -2 * k); }

    // Accepts atoms with at most two unit-coefficient variables; returns
    // false (without touching the state) for anything else.
    bool try_add_atom(const Atom& at) {
        std::vector<std::pair<int, long long>> terms;
        for (std::size_t i = 0; i < at.lhs.nvars(); ++i)
            if (at.lhs.coeff(i) != 0) terms.push_back({static_cast<int>(i), at.lhs.coeff(i)});
        if (terms.empty() || terms.size() > 2) return false;
        for (auto& [i, c] : terms)
            if (c != 1 && c != -1) return false;
        if (!at.lhs.constant_term().is_integer()) return false;
        long long r = at.lhs.constant_term().as_integer();

        auto add_le = [&](long long flip, long long rhs) {
            // flip * (variable part) <= rhs
            if (terms.size() == 1) {
                auto [i, c] = terms[0];
                if (flip * c == 1)
                    add_unary_upper(i, rhs);
                else
                    add_unary_lower(i, -rhs);
                return;
            }
            auto [i, ci] = terms[0];
            auto [j, cj] = terms[1];
            long long fi = flip * ci, fj = flip * cj;
            if (fi == 1 && fj == -1) add_edge(2 * i, 2 * j, rhs);
            else if (fi == 1 && fj == 1) add_edge(2 * i, 2 * j + 1, rhs);
            else if (fi == -1 && fj == 1) add_edge(2 * j, 2 * i, rhs);
            else add_edge(2 * i + 1, 2 * j, rhs);
        };

        switch (at.rel) {
            case Rel::Le: add_le(+1, -r); break;
            case Rel::Lt: add_le(+1, -r - 1); break;
            case Rel::Ge: add_le(-1, r); break;
            case Rel::Gt: add_le(-1, r - 1); break;
            case Rel::Eq:
                add_le(+1, -r);
                add_le(-1, r);
                break;
        }
        return true;
    }

    void close() {
        bool changed = true;
        int guard = 0;
        while (changed && guard++ < 64) {
            changed = false;
            for (int k = 0; k < 2 * l_; ++k)
                for (int u = 0; u < 2 * l_; ++u) {
                    if (m_[u][k] == INF) continue;
                    for (int v = 0; v < 2 * l_; ++v) {
                        if (m_[k][v] == INF) continue;
                        long long cand = m_[u][k] + m_[k][v];
                        if (cand < m_[u][v]) {
                            m_[u][v] = cand;
                            changed = true;
                        }
                    }
                }
            if (detect_negative_cycle()) return;
            for (int u = 0; u < 2 * l_; ++u) {
                long long d = m_[u][u ^ 1];
                if (d == INF) continue;
                long long even = d - (((d % 2) + 2) % 2);
                if (even < d) {
                    m_[u][u ^ 1] = even;
                    changed = true;
                }
            }
            for (int u = 0; u < 2 * l_; ++u)
                for (int v = 0; v < 2 * l_; ++v) {
                    if (u == v || m_[u][u ^ 1] == INF || m_[v ^ 1][v] == INF) continue;
                    long long cand = (m_[u][u ^ 1] + m_[v ^ 1][v]) / 2;
                    if (cand < m_[u][v]) {
                        m_[u][v] = cand;
                        changed = true;
                    }
                }
            if (detect_negative_cycle()) return;
        }
    }

    bool infeasible() const { return infeasible_; }

    long long bound(int u, int v) const { return m_[u][v]; }

    std::optional<long long> upper(int i) const {
        long long d = m_[2 * i][2 * i + 1];
        if (d == INF) return std::nullopt;
        return d / 2;
    }

    std::optional<long long> lower(int i) const {
        long long d = m_[2 * i + 1][2 * i];
        if (d == INF) return std::nullopt;
        return -(d / 2);
    }

    std::optional<long long> pinned(int i) const {
        auto u = upper(i), lo = lower(i);
        if (u && lo && *u == *lo) return u;
        return std::nullopt;
    }

private:
    bool detect_negative_cycle() {
        for (int u = 0; u < 2 * l_; ++u)
            if (m_[u][u] < 0) {
                infeasible_ = true;
                return true;
            }
        return false;
    }

    int l_;
    std::vector<std::vector<long long>> m_;
    bool infeasible_ = false;
};

// Dominance cone of valid highest weights: type B demands a descending
// nonnegative chain; type D lets the last coordinate go negative, bounded by
// a_{l-1} in absolute value.
inline Octagon dominance_octagon(const RootSystem& rs) {
    const int l = rs.rank;
    Octagon o(l);
    if (rs.type == LieType::B) {
        for (int i = 0; i + 1 < l; ++i) o.add_edge(2 * (i + 1), 2 * i, 0);  // a_{i+1} <= a_i
        o.add_unary_lower(l - 1, 0);
    } else {
        for (int i = 0; i + 2 < l; ++i) o.add_edge(2 * (i + 1), 2 * i, 0);
        o.add_edge(2 * (l - 1), 2 * (l - 2), 0);      // a_l - a_{l-1} <= 0
        o.add_edge(2 * (l - 1) + 1, 2 * (l - 2), 0);  // -a_l - a_{l-1} <= 0
    }
    return o;
}

inline bool atoms_feasible_under_dominance(const RootSystem& rs, const std::vector<Atom>& atoms) {
    Octagon o = dominance_octagon(rs);
    for (const Atom& at : atoms)
        if (!o.try_add_atom(at)) return true;  // cannot refute, stay sound
    o.close();
    return !o.infeasible();
}

inline bool condition_feasible_under_dominance(const RootSystem& rs, const Condition& c) {
    switch (c.kind()) {
        case Condition::Kind::True: return true;
        case Condition::Kind::False: return false;
        case Condition::Kind::Leaf: return atoms_feasible_under_dominance(rs, {c.atom()});
        case Condition::Kind::Or: {
            for (const Condition& q : c.children())
                if (condition_feasible_under_dominance(rs, q)) return true;
            return false;
        }
        case Condition::Kind::And: {
            std::vector<Atom> atoms;
            for (const Condition& q : c.children()) {
                if (q.kind() != Condition::Kind::Leaf) return true;  // give up, stay sound
                atoms.push_back(q.atom());
            }
            return atoms_feasible_under_dominance(rs, atoms);
        }
    }
    return true;
}

// Fold an atomic claim to a constant when the dominance cone already decides
// it: unsatisfiable within the cone -> false, complement unsatisfiable within
// the cone -> true, otherwise the atom stands.
inline Condition fold_under_dominance(const RootSystem& rs, const AffineForm& lhs, Rel rel) {
    Condition c = make_atom(lhs, rel);
    if (c.kind() != Condition::Kind::Leaf) return c;
    if (!atoms_feasible_under_dominance(rs, {c.atom()})) return Condition::boolean(false);
    if (!condition_feasible_under_dominance(rs, negate_atom(c.atom())))
        return Condition::boolean(true);
    return c;
}

// --- Canonical simplification under dominance -----------------------------------

struct SimplifyResult {
    Condition cond;
    std::map<std::size_t, long long> pins;  // coordinates with one possible value
};

namespace detail {

inline bool dnf_of(const Condition& c, std::vector<std::vector<Atom>>& out) {
    constexpr std::size_t kMaxConjuncts = 256;
    switch (c.kind()) {
        case Condition::Kind::True:
            out.assign(1, {});
            return true;
        case Condition::Kind::False:
            out.clear();
            return true;
        case Condition::Kind::Leaf:
            out.assign(1, {c.atom()});
            return true;
        case Condition::Kind::Or: {
            out.clear();
            for (const Condition& q : c.children()) {
                std::vector<std::vector<Atom>> sub;
                if (!dnf_of(q, sub)) return false;
                for (auto& s : sub) out.push_back(std::move(s));
                if (out.size() > kMaxConjuncts) return false;
            }
            return true;
        }
        case Condition::Kind::And: {
            out.assign(1, {});
            for (const Condition& q : c.children()) {
                std::vector<std::vector<Atom>> sub;
                if (!dnf_of(q, sub)) return false;
                std::vector<std::vector<Atom>> next;
                for (const auto& left : out)
                    for (const auto& right : sub) {
                        std::vector<Atom> merged = left;
                        merged.insert(merged.end(), right.begin(), right.end());
                        next.push_back(std::move(merged));
                        if (next.size() > kMaxConjuncts) return false;
                    }
                out = std::move(next);
            }
            return true;
        }
    }
    return false;
}

struct Dsu {
    std::vector<int> parent;

    explicit Dsu(int n) : parent(n) {
        for (int i = 0; i < n; ++i) parent[i] = i;
    }

    int find(int i) {
        while (parent[i] != i) {
            parent[i] = parent[parent[i]];
            i = parent[i];
        }
        return i;
    }

    // Attach the larger root below the smaller one so that every class is
    // represented by its lowest index.
    void unite(int i, int j) {
        int ri = find(i), rj = find(j);
        if (ri == rj) return;
        if (ri < rj)
            parent[rj] = ri;
        else
            parent[ri] = rj;
    }
};

}  // namespace detail

// Rewrite a condition as a canonical disjunction of facts that, together with
// dominance, cut out the same set of valid weights: pinned coordinates first,
// then two-coordinate equalities, then bounds strictly tighter than dominance.
// Sound fallback: anything the octagon fragment cannot express is returned
// unchanged.
inline SimplifyResult simplify_under_dominance(const RootSystem& rs, const Condition& c) {
    SimplifyResult passthrough{c, {}};
    if (c.is_constant()) return passthrough;

    std::vector<std::vector<Atom>> dnf;
    if (!detail::dnf_of(c, dnf)) return passthrough;

    Octagon dom = dominance_octagon(rs);
    dom.close();
    const int l = rs.rank;
    const std::size_t nv = static_cast<std::size_t>(l);

    struct Conj {
        std::vector<Condition> facts;
        std::map<std::size_t, long long> pins;
        std::set<std::string> keys;
    };
    std::vector<Conj> kept;

    for (const auto& conjunct : dnf) {
        Octagon all = dominance_octagon(rs);
        for (const Atom& at : conjunct)
            if (!all.try_add_atom(at)) return passthrough;
        all.close();
        if (all.infeasible()) continue;

        Conj conj;
        auto emit = [&](Condition fact) {
            conj.keys.insert(condition_text(fact));
            conj.facts.push_back(std::move(fact));
        };

        std::vector<bool> is_pinned(l, false);
        for (int i = 0; i < l; ++i)
            if (auto p = all.pinned(i)) {
                is_pinned[i] = true;
                conj.pins[static_cast<std::size_t>(i)] = *p;
                emit(make_atom(AffineForm::variable(nv, i) -
                                   AffineForm::constant(nv, Rational(*p)),
                               Rel::Eq));
            }

        detail::Dsu dsu(l);
        for (int i = 0; i < l; ++i) {
            if (is_pinned[i]) continue;
            for (int j = i + 1; j < l; ++j) {
                if (is_pinned[j]) continue;
                long long du = all.bound(2 * i, 2 * j), dl = all.bound(2 * j, 2 * i);
                long long su = all.bound(2 * i, 2 * j + 1), sl = all.bound(2 * j + 1, 2 * i);
                AffineForm lhs(nv);
                bool found = false;
                if (du != Octagon::INF && dl != Octagon::INF && du == -dl) {
                    lhs = AffineForm::variable(nv, i) - AffineForm::variable(nv, j) -
                          AffineForm::constant(nv, Rational(du));
                    found = true;
                } else if (su != Octagon::INF && sl != Octagon::INF && su == -sl) {
                    lhs = AffineForm::variable(nv, i) + AffineForm::variable(nv, j) -
                          AffineForm::constant(nv, Rational(su));
                    found = true;
                }
                if (!found || dsu.find(i) == dsu.find(j)) continue;
                dsu.unite(i, j);
                emit(make_atom(lhs, Rel::Eq));
            }
        }

        for (int i = 0; i < l; ++i) {
            if (is_pinned[i] || dsu.find(i) != i) continue;
            auto u_all = all.upper(i), u_dom = dom.upper(i);
            if (u_all && (!u_dom || *u_all < *u_dom))
                emit(make_atom(AffineForm::variable(nv, i) -
                                   AffineForm::constant(nv, Rational(*u_all)),
                               Rel::Le));
            auto l_all = all.lower(i), l_dom = dom.lower(i);
            if (l_all && (!l_dom || *l_all > *l_dom))
                emit(make_atom(AffineForm::variable(nv, i) -
                                   AffineForm::constant(nv, Rational(*l_all)),
                               Rel::Ge));
        }

        kept.push_back(std::move(conj));
    }

    if (kept.empty()) return {cond_false(), {}};

    // Drop conjuncts subsumed by a syntactically weaker sibling.
    std::vector<bool> dropped(kept.size(), false);
    for (std::size_t i = 0; i < kept.size(); ++i) {
        if (dropped[i]) continue;
        for (std::size_t j = 0; j < kept.size(); ++j) {
            if (i == j || dropped[j]) continue;
            const auto &ki = kept[i].keys, &kj = kept[j].keys;
            bool i_subset_j = std::includes(kj.begin(), kj.end(), ki.begin(), ki.end());
            if (i_subset_j && (ki.size() < kj.size() || i < j)) dropped[j] = true;
        }
    }

    std::vector<Condition> branches;
    std::map<std::size_t, long long> pins;
    bool first = true;
    for (std::size_t i = 0; i < kept.size(); ++i) {
        if (dropped[i]) continue;
        branches.push_back(cond_and(kept[i].facts));
        if (first) {
            pins = kept[i].pins;
            first = false;
        } else {
            for (auto it = pins.begin(); it != pins.end();) {
                auto hit = kept[i].pins.find(it->first);
                if (hit == kept[i].pins.end() || hit->second != it->second)
                    it = pins.erase(it);
                else
                    ++it;
            }
        }
    }
    return {cond_or(std::move(branches)), std::move(pins)};
}

}  // namespace ghost
