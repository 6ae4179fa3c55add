#pragma once

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "ghost/affine_form.hpp"
#include "ghost/rational.hpp"

namespace ghost {

// The orthogonal similitude group of signature (2, n) has compact-dual type
// B_l (n odd, l = (n+1)/2) or D_l (n even, l = (n+2)/2).  Everything in this
// library works in the epsilon coordinates of that root system.
enum class LieType { B, D };

// Root in epsilon coordinates; entries are in {-1, 0, 1} throughout.
struct Root {
    std::vector<int> coords;

    friend bool operator==(const Root& a, const Root& b) { return a.coords == b.coords; }
    friend bool operator!=(const Root& a, const Root& b) { return !(a == b); }
    friend bool operator<(const Root& a, const Root& b) { return a.coords < b.coords; }
};

// "e1-e2", "e2+e3", "e1".
inline std::string root_text(const Root& r) {
    std::ostringstream os;
    bool wrote = false;
    for (std::size_t i = 0; i < r.coords.size(); ++i) {
        int v = r.coords[i];
        if (v == 0) continue;
        if (wrote)
            os << (v > 0 ? '+' : '-');
        else if (v < 0)
            os << '-';
        os << 'e' << (i + 1);
        wrote = true;
    }
    return wrote ? os.str() : "0";
}

// Weight with affine-form epsilon coordinates plus a similitude component
// kappa.  The Weyl group permutes/flips the epsilon part and fixes kappa.
struct SymbolicWeight {
    std::vector<AffineForm> eps;
    AffineForm kappa;
};

struct RootSystem {
    int n = 0;  // anisotropic dimension parameter of the quadratic space
    LieType type = LieType::B;
    int rank = 0;  // l
    std::vector<Root> positive_roots;
    std::vector<Root> simple_roots;
    std::vector<Rational> rho;  // half-sum of positive roots
};

inline int rank_for(int n) {
    if (n < 3) throw std::invalid_argument("n must be at least 3");
    return n % 2 == 1 ? (n + 1) / 2 : (n + 2) / 2;
}

inline LieType type_for(int n) {
    if (n < 3) throw std::invalid_argument("n must be at least 3");
    return n % 2 == 1 ? LieType::B : LieType::D;
}

// Positive roots in the fixed enumeration order used everywhere downstream:
// for each i ascending, e_i - e_j then e_i + e_j (j ascending), and for type
// B the short root e_i last.  Subset selections (parabolic radicals,
// inversion sets) inherit this order by filtering.
inline RootSystem build_root_system(int n) {
    RootSystem rs;
    rs.n = n;
    rs.type = type_for(n);
    rs.rank = rank_for(n);
    const int l = rs.rank;

    auto root = [&](int i, int j, int sj) {
        Root r;
        r.coords.assign(l, 0);
        r.coords[i] = 1;
        if (j >= 0) r.coords[j] = sj;
        return r;
    };

    for (int i = 0; i < l; ++i) {
        for (int j = i + 1; j < l; ++j) rs.positive_roots.push_back(root(i, j, -1));
        for (int j = i + 1; j < l; ++j) rs.positive_roots.push_back(root(i, j, +1));
        if (rs.type == LieType::B) rs.positive_roots.push_back(root(i, -1, 0));
    }

    for (int i = 0; i + 1 < l; ++i) rs.simple_roots.push_back(root(i, i + 1, -1));
    if (rs.type == LieType::B)
        rs.simple_roots.push_back(root(l - 1, -1, 0));
    else
        rs.simple_roots.push_back(root(l - 2, l - 1, +1));

    rs.rho.assign(l, Rational(0));
    for (const Root& r : rs.positive_roots)
        for (int i = 0; i < l; ++i) rs.rho[i] += Rational(r.coords[i], 2);

    return rs;
}

// --- Parabolic subgroups -------------------------------------------------
//
// Three standard parabolics enter the boundary analysis: P0 (stabilizer of
// an isotropic plane flag, the "big" one), P1 (isotropic line), P2 (the
// Siegel/Klingen companion with e1-e2 moved into the Levi).  Their unipotent
// radicals are cut out of Phi+ by the first support index.

enum class ParabolicId { P0 = 0, P1 = 1, P2 = 2 };

struct ParabolicData {
    ParabolicId id;
    std::vector<Root> delta;             // roots of the unipotent radical
    std::vector<Root> levi_simple_roots; // simple roots lying in the Levi
};

inline int first_support(const Root& r) {
    for (std::size_t i = 0; i < r.coords.size(); ++i)
        if (r.coords[i] != 0) return static_cast<int>(i) + 1;
    return 0;
}

inline std::vector<Root> unipotent_radical_roots(const RootSystem& rs, ParabolicId id) {
    Root e1_minus_e2;
    e1_minus_e2.coords.assign(rs.rank, 0);
    e1_minus_e2.coords[0] = 1;
    if (rs.rank > 1) e1_minus_e2.coords[1] = -1;

    std::vector<Root> out;
    for (const Root& r : rs.positive_roots) {
        int fs = first_support(r);
        bool keep = false;
        switch (id) {
            case ParabolicId::P0: keep = fs <= 2; break;
            case ParabolicId::P1: keep = fs == 1; break;
            case ParabolicId::P2: keep = fs <= 2 && r != e1_minus_e2; break;
        }
        if (keep) out.push_back(r);
    }
    return out;
}

inline ParabolicData parabolic_datum(const RootSystem& rs, ParabolicId id) {
    ParabolicData pd;
    pd.id = id;
    pd.delta = unipotent_radical_roots(rs, id);
    for (const Root& s : rs.simple_roots)
        if (std::find(pd.delta.begin(), pd.delta.end(), s) == pd.delta.end())
            pd.levi_simple_roots.push_back(s);
    return pd;
}

// --- Highest weights -----------------------------------------------------

// 2(mu, alpha) / (alpha, alpha) for concrete epsilon coordinates.
inline Rational coroot_pairing(const std::vector<Rational>& mu, const Root& alpha) {
    Rational dot(0), norm(0);
    for (std::size_t i = 0; i < alpha.coords.size(); ++i) {
        dot += mu.at(i) * Rational(alpha.coords[i]);
        norm += Rational(alpha.coords[i] * alpha.coords[i]);
    }
    return Rational(2) * dot / norm;
}

struct WeightVerdict {
    bool valid = true;
    std::vector<std::string> problems;
};

// Dominance and the parity constraint tying the similitude character c to
// the epsilon coordinates.  Type B: a1 >= ... >= al >= 0.  Type D: the last
// coordinate may be negative, a_{l-1} >= |a_l|.  Both: c == sum(a) mod 2.
inline WeightVerdict validate_highest_weight(const RootSystem& rs,
                                             const std::vector<long long>& a,
                                             long long c) {
    WeightVerdict v;
    auto fail = [&](const std::string& msg) {
        v.valid = false;
        v.problems.push_back(msg);
    };
    if (static_cast<int>(a.size()) != rs.rank) {
        fail("expected " + std::to_string(rs.rank) + " weight coordinates for n=" +
             std::to_string(rs.n) + ", got " + std::to_string(a.size()));
        return v;
    }
    const int l = rs.rank;
    for (int i = 0; i + 1 < l - 1; ++i)
        if (a[i] < a[i + 1])
            fail("a" + std::to_string(i + 1) + " < a" + std::to_string(i + 2));
    if (l >= 2) {
        if (rs.type == LieType::B) {
            if (a[l - 2] < a[l - 1])
                fail("a" + std::to_string(l - 1) + " < a" + std::to_string(l));
        } else {
            long long last = a[l - 1] >= 0 ? a[l - 1] : -a[l - 1];
            if (a[l - 2] < last)
                fail("a" + std::to_string(l - 1) + " < |a" + std::to_string(l) + "|");
        }
    }
    if (rs.type == LieType::B && a[l - 1] < 0)
        fail("a" + std::to_string(l) + " < 0");
    long long sum = 0;
    for (long long x : a) sum += x;
    if (((sum - c) % 2 + 2) % 2 != 0)
        fail("parity: c must be congruent to a1+...+a" + std::to_string(l) + " mod 2");
    return v;
}

// lambda with indeterminate coordinates a_1..a_l and similitude character c.
inline SymbolicWeight generic_highest_weight(const RootSystem& rs) {
    SymbolicWeight w;
    const std::size_t l = static_cast<std::size_t>(rs.rank);
    for (std::size_t i = 0; i < l; ++i) w.eps.push_back(AffineForm::variable(l, i));
    w.kappa = AffineForm::central(l);
    return w;
}

inline SymbolicWeight concrete_highest_weight(const RootSystem& rs,
                                              const std::vector<long long>& a, long long c) {
    SymbolicWeight w;
    const std::size_t l = static_cast<std::size_t>(rs.rank);
    for (std::size_t i = 0; i < l; ++i)
        w.eps.push_back(AffineForm::constant(l, Rational(a.at(i))));
    w.kappa = AffineForm::constant(l, Rational(c));
    return w;
}

}  // namespace ghost
