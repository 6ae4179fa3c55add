#pragma once

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "ghost/root_system.hpp"

namespace ghost {

// Signed permutation (sigma, f) acting on epsilon coordinates by
//   (w v)_j = f(j) * v_{sigma^{-1}(j)},
// i.e. the sign vector is indexed by the TARGET coordinate.  sigma is stored
// one-line and 0-based (sigma[i] is the image of i); signs[j] in {+1,-1}.
// Type D restricts to an even number of -1 entries.
struct WeylElement {
    std::vector<int> sigma;
    std::vector<int> signs;

    friend bool operator==(const WeylElement& a, const WeylElement& b) {
        return a.sigma == b.sigma && a.signs == b.signs;
    }
    friend bool operator!=(const WeylElement& a, const WeylElement& b) { return !(a == b); }
    friend bool operator<(const WeylElement& a, const WeylElement& b) {
        if (a.sigma != b.sigma) return a.sigma < b.sigma;
        return a.signs < b.signs;
    }
};

inline WeylElement weyl_identity(int rank) {
    WeylElement w;
    w.sigma.resize(rank);
    std::iota(w.sigma.begin(), w.sigma.end(), 0);
    w.signs.assign(rank, 1);
    return w;
}

inline std::vector<int> inverse_permutation(const std::vector<int>& sigma) {
    std::vector<int> inv(sigma.size());
    for (std::size_t i = 0; i < sigma.size(); ++i) inv[sigma[i]] = static_cast<int>(i);
    return inv;
}

// compose(w1, w2) applies w2 first:  (w1 w2) v = w1 (w2 v).
inline WeylElement compose(const WeylElement& w1, const WeylElement& w2) {
    const std::size_t l = w1.sigma.size();
    if (w2.sigma.size() != l) throw std::logic_error("rank mismatch in composition");
    WeylElement w;
    w.sigma.resize(l);
    w.signs.resize(l);
    for (std::size_t i = 0; i < l; ++i) w.sigma[i] = w1.sigma[w2.sigma[i]];
    std::vector<int> inv1 = inverse_permutation(w1.sigma);
    for (std::size_t j = 0; j < l; ++j) w.signs[j] = w1.signs[j] * w2.signs[inv1[j]];
    return w;
}

inline WeylElement inverse(const WeylElement& w) {
    WeylElement out;
    out.sigma = inverse_permutation(w.sigma);
    out.signs.resize(w.signs.size());
    for (std::size_t j = 0; j < w.signs.size(); ++j) out.signs[j] = w.signs[w.sigma[j]];
    return out;
}

inline Root act_on_root(const WeylElement& w, const Root& r) {
    Root out;
    out.coords.assign(r.coords.size(), 0);
    for (std::size_t i = 0; i < r.coords.size(); ++i)
        out.coords[w.sigma[i]] = w.signs[w.sigma[i]] * r.coords[i];
    return out;
}

inline SymbolicWeight act_on_weight(const WeylElement& w, const SymbolicWeight& mu) {
    SymbolicWeight out;
    out.eps.resize(mu.eps.size());
    for (std::size_t i = 0; i < mu.eps.size(); ++i) {
        out.eps[w.sigma[i]] = w.signs[w.sigma[i]] == 1 ? mu.eps[i] : -mu.eps[i];
    }
    out.kappa = mu.kappa;
    return out;
}

inline bool is_positive_root(const Root& r) {
    for (int v : r.coords)
        if (v != 0) return v > 0;
    return false;
}

// I(w) = { alpha in Phi+ : w^{-1} alpha in Phi- }, in canonical root order.
inline std::vector<Root> inversion_set(const RootSystem& rs, const WeylElement& w) {
    WeylElement winv = inverse(w);
    std::vector<Root> out;
    for (const Root& alpha : rs.positive_roots)
        if (!is_positive_root(act_on_root(winv, alpha))) out.push_back(alpha);
    return out;
}

inline int length(const RootSystem& rs, const WeylElement& w) {
    return static_cast<int>(inversion_set(rs, w).size());
}

// --- Construction helpers (1-based cycle / flip notation) -----------------

inline std::vector<int> permutation_from_cycles(int rank,
                                                const std::vector<std::vector<int>>& cycles) {
    std::vector<int> sigma(rank);
    std::iota(sigma.begin(), sigma.end(), 0);
    for (const auto& cyc : cycles) {
        for (std::size_t k = 0; k < cyc.size(); ++k) {
            int from = cyc[k] - 1;
            int to = cyc[(k + 1) % cyc.size()] - 1;
            sigma[from] = to;
        }
    }
    return sigma;
}

inline WeylElement element_from(int rank, const std::vector<std::vector<int>>& cycles,
                                const std::vector<int>& flips) {
    WeylElement w;
    w.sigma = permutation_from_cycles(rank, cycles);
    w.signs.assign(rank, 1);
    for (int label : flips) w.signs.at(label - 1) = -1;
    return w;
}

// --- Enumeration ----------------------------------------------------------
//
// The tables fix a specific listing of the Weyl group: sign vectors in an
// outer loop, permutations in an inner loop, each in a definite order.  That
// listing (not any abstract normal form) is what the labels w1, w2, ...
// refer to, so it is pinned here as data.

struct OrderingProfile {
    std::vector<std::vector<int>> sigma_order;         // one-line, 0-based
    std::vector<int> f_order;                          // bit j-1 set <=> f(j) = -1
    std::map<std::vector<int>, std::string> sigma_display;
};

// Cycles of sigma, each rotated to start at its smallest label, listed by
// first label, fixed points dropped.  0-based labels.
inline std::vector<std::vector<int>> canonical_cycles(const std::vector<int>& sigma) {
    std::vector<std::vector<int>> cycles;
    std::vector<bool> seen(sigma.size(), false);
    for (std::size_t start = 0; start < sigma.size(); ++start) {
        if (seen[start]) continue;
        std::vector<int> cyc;
        std::size_t cur = start;
        while (!seen[cur]) {
            seen[cur] = true;
            cyc.push_back(static_cast<int>(cur));
            cur = static_cast<std::size_t>(sigma[cur]);
        }
        if (cyc.size() > 1) cycles.push_back(cyc);
    }
    return cycles;
}

inline OrderingProfile table_profile(const RootSystem& rs) {
    OrderingProfile p;
    const int l = rs.rank;

    // Permutations ordered by number of moved points, then by cycle lists.
    std::vector<int> idperm(l);
    std::iota(idperm.begin(), idperm.end(), 0);
    std::vector<std::vector<int>> perms;
    std::vector<int> cur = idperm;
    do {
        perms.push_back(cur);
    } while (std::next_permutation(cur.begin(), cur.end()));
    std::sort(perms.begin(), perms.end(),
              [](const std::vector<int>& a, const std::vector<int>& b) {
                  auto moved = [](const std::vector<int>& s) {
                      int m = 0;
                      for (std::size_t i = 0; i < s.size(); ++i)
                          if (s[i] != static_cast<int>(i)) ++m;
                      return m;
                  };
                  int ma = moved(a), mb = moved(b);
                  if (ma != mb) return ma < mb;
                  return canonical_cycles(a) < canonical_cycles(b);
              });
    p.sigma_order = std::move(perms);

    if (rs.type == LieType::B) {
        for (int mask = 0; mask < (1 << l); ++mask) p.f_order.push_back(mask);
    } else if (l == 3) {
        // The rank-3 tables walk the even sign vectors as {}, {1,2}, {2,3},
        // {1,3}; binary counting would give {}, {1,2}, {1,3}, {2,3}.
        p.f_order = {0b000, 0b011, 0b110, 0b101};
    } else {
        for (int mask = 0; mask < (1 << l); ++mask)
            if (__builtin_popcount(static_cast<unsigned>(mask)) % 2 == 0)
                p.f_order.push_back(mask);
    }

    if (l == 3) {
        // The tables print the 3-cycle 3->2->1->3 as (3 2 1).
        p.sigma_display[{2, 0, 1}] = "(3 2 1)";
    }
    return p;
}

inline std::vector<WeylElement> enumerate_weyl(const RootSystem& rs,
                                               const OrderingProfile& profile) {
    std::vector<WeylElement> out;
    const int l = rs.rank;
    for (int mask : profile.f_order) {
        std::vector<int> signs(l, 1);
        for (int j = 0; j < l; ++j)
            if (mask & (1 << j)) signs[j] = -1;
        for (const auto& sigma : profile.sigma_order) {
            WeylElement w;
            w.sigma = sigma;
            w.signs = signs;
            out.push_back(w);
        }
    }
    return out;
}

// --- Text -----------------------------------------------------------------

inline std::string sigma_text(const WeylElement& w, const OrderingProfile& profile) {
    auto it = profile.sigma_display.find(w.sigma);
    if (it != profile.sigma_display.end()) return it->second;
    auto cycles = canonical_cycles(w.sigma);
    if (cycles.empty()) return "e";
    std::ostringstream os;
    for (const auto& cyc : cycles) {
        os << '(';
        for (std::size_t k = 0; k < cyc.size(); ++k) {
            if (k) os << ' ';
            os << cyc[k] + 1;
        }
        os << ')';
    }
    return os.str();
}

inline std::string f_text(const WeylElement& w) {
    std::ostringstream os;
    os << '{';
    bool wrote = false;
    for (std::size_t j = 0; j < w.signs.size(); ++j) {
        if (w.signs[j] != -1) continue;
        if (wrote) os << ',';
        os << j + 1;
        wrote = true;
    }
    os << '}';
    return os.str();
}

inline bool element_fits_type(const RootSystem& rs, const WeylElement& w) {
    if (static_cast<int>(w.sigma.size()) != rs.rank) return false;
    int minus = 0;
    for (int s : w.signs)
        if (s == -1) ++minus;
    return rs.type == LieType::B || minus % 2 == 0;
}

}  // namespace ghost
