#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "ghost/root_system.hpp"
#include "ghost/weyl.hpp"

namespace ghost {

// Shifted (dot) action  w * lambda = w(lambda + rho) - rho.
inline SymbolicWeight dot_action(const RootSystem& rs, const WeylElement& w,
                                 const SymbolicWeight& lambda) {
    const std::size_t l = lambda.eps.size();
    SymbolicWeight shifted = lambda;
    for (std::size_t i = 0; i < l; ++i)
        shifted.eps[i] += AffineForm::constant(l, rs.rho[i]);
    SymbolicWeight out = act_on_weight(w, shifted);
    for (std::size_t i = 0; i < l; ++i)
        out.eps[i] -= AffineForm::constant(l, rs.rho[i]);
    return out;
}

inline bool roots_subset(const std::vector<Root>& sub, const std::vector<Root>& super) {
    for (const Root& r : sub) {
        bool found = false;
        for (const Root& s : super)
            if (r == s) {
                found = true;
                break;
            }
        if (!found) return false;
    }
    return true;
}

// Minimal-length coset representatives of W_{Levi} \ W are exactly the
// elements whose inversion set lies in the unipotent radical.  This is the
// authoritative membership test; the closed forms below only cross-check it.
inline bool is_minimal_rep(const RootSystem& rs, const ParabolicData& pd, const WeylElement& w) {
    return roots_subset(inversion_set(rs, w), pd.delta);
}

inline std::vector<WeylElement> kostant_representatives(const RootSystem& rs,
                                                        const ParabolicData& pd,
                                                        const OrderingProfile& profile) {
    std::vector<WeylElement> out;
    for (const WeylElement& w : enumerate_weyl(rs, profile))
        if (is_minimal_rep(rs, pd, w)) out.push_back(w);
    return out;
}

// Closed-form membership descriptions of the three representative sets.
// Conventions: sigma/f queried with 1-based labels; "pos" is sigma^{-1}.
inline bool closed_form_membership(const RootSystem& rs, ParabolicId id, const WeylElement& w) {
    const int l = rs.rank;
    std::vector<int> pos = inverse_permutation(w.sigma);
    auto f = [&](int label) { return w.signs[label - 1]; };
    auto position = [&](int label) { return pos[label - 1]; };

    bool base = true;
    // Big-cell condition: all signs past the first two are +1 (type B; type D
    // leaves the last one free), and sigma^{-1} is increasing past label 2.
    int sign_bound = rs.type == LieType::B ? l : l - 1;
    for (int m = 3; m <= sign_bound; ++m)
        if (f(m) != 1) base = false;
    // sigma^{-1} increasing on labels 3..l; adjacent pairs suffice.
    for (int m = 3; m < l; ++m)
        if (position(m) > position(m + 1)) base = false;

    switch (id) {
        case ParabolicId::P0:
            return base;
        case ParabolicId::P1:
            if (!base || f(2) != 1) return false;
            if (l >= 3 && position(2) > position(3)) return false;
            return true;
        case ParabolicId::P2: {
            if (!base) return false;
            if (f(1) == 1 && f(2) == -1) return true;
            if (f(1) == 1 && f(2) == 1) return position(1) < position(2);
            if (f(1) == -1 && f(2) == -1) return position(1) > position(2);
            return false;
        }
    }
    return false;
}

// W_i^0: the Levi-side factor in W^{P_0} = W_i^0 . W^{P_i}.  Brute force is
// by inversion sets inside Delta_0 \ Delta_i.
inline std::vector<WeylElement> coset_complement(const RootSystem& rs, const ParabolicData& pd0,
                                                 const ParabolicData& pdi,
                                                 const OrderingProfile& profile) {
    std::vector<Root> window;
    for (const Root& r : pd0.delta)
        if (std::find(pdi.delta.begin(), pdi.delta.end(), r) == pdi.delta.end())
            window.push_back(r);
    std::vector<WeylElement> out;
    for (const WeylElement& w : enumerate_weyl(rs, profile))
        if (roots_subset(inversion_set(rs, w), window)) out.push_back(w);
    return out;
}

inline bool coset_complement_closed_form(const RootSystem& rs, ParabolicId id,
                                         const WeylElement& w) {
    const int l = rs.rank;
    std::vector<int> pos = inverse_permutation(w.sigma);
    auto f = [&](int label) { return w.signs[label - 1]; };
    auto position = [&](int label) { return pos[label - 1]; };

    if (id == ParabolicId::P2) {
        for (int m = 1; m <= l; ++m)
            if (f(m) != 1) return false;
        WeylElement id_elt = weyl_identity(l);
        std::vector<int> swap12 = permutation_from_cycles(l, {{1, 2}});
        return w.sigma == id_elt.sigma || w.sigma == swap12;
    }
    if (id == ParabolicId::P1) {
        if (rs.type == LieType::B) {
            for (int m = 1; m <= l; ++m)
                if (m != 2 && f(m) != 1) return false;
            if (w.sigma[0] != 0) return false;
            for (int m = 3; m < l; ++m)
                if (position(m) > position(m + 1)) return false;
            return true;
        }
        return closed_form_membership(rs, ParabolicId::P0, w) && w.sigma[0] == 0 && f(1) == 1;
    }
    throw std::invalid_argument("coset complement is defined for P1 and P2 only");
}

struct CosetFactorization {
    WeylElement tilde;  // in W_i^0
    WeylElement rep;    // in W^{P_i}
};

// Unique factorization w = tilde . rep with length additivity.  Throws
// invalid_argument for w outside W^{P_0} and logic_error if uniqueness or
// additivity ever fails (they cannot, for correct inputs).
inline CosetFactorization coset_factorize(const RootSystem& rs, const ParabolicData& pd0,
                                          const ParabolicData& pdi,
                                          const std::vector<WeylElement>& complement,
                                          const WeylElement& w) {
    if (!is_minimal_rep(rs, pd0, w))
        throw std::invalid_argument("element is not a minimal representative for the big parabolic");
    CosetFactorization result;
    int hits = 0;
    for (const WeylElement& tilde : complement) {
        WeylElement rep = compose(inverse(tilde), w);
        if (!is_minimal_rep(rs, pdi, rep)) continue;
        ++hits;
        result.tilde = tilde;
        result.rep = rep;
    }
    if (hits != 1)
        throw std::logic_error("coset factorization is not unique");
    if (length(rs, w) != length(rs, result.tilde) + length(rs, result.rep))
        throw std::logic_error("coset factorization violates length additivity");
    return result;
}

// --- Labels ----------------------------------------------------------------
//
// w1..wK name the elements of W^{P_0} in enumeration order; for n = 4 and
// n = 5 this reproduces the tables' labels.  Elements outside W^{P_0} fall
// back to the (sigma, f) rendering.

inline std::map<WeylElement, std::string> table_labels(const RootSystem&,
                                                       const std::vector<WeylElement>& wp0) {
    std::map<WeylElement, std::string> labels;
    for (std::size_t i = 0; i < wp0.size(); ++i)
        labels[wp0[i]] = "w" + std::to_string(i + 1);
    return labels;
}

inline std::string element_label(const std::map<WeylElement, std::string>& labels,
                                 const OrderingProfile& profile, const WeylElement& w) {
    auto it = labels.find(w);
    if (it != labels.end()) return it->second;
    return sigma_text(w, profile) + " " + f_text(w);
}

}  // namespace ghost
