#pragma once

#include <fstream>
#include <functional>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "ghost/form_conjugation.hpp"
#include "ghost/table.hpp"

namespace ghost {

// Self-contained invariant families, runnable from the CLI (`check`) and from
// the test suites.  Each family covers every n in [3, max_n] unless the
// property is tied to the tabulated cases n = 4, 5.

struct InvariantResult {
    std::string name;
    bool pass = true;
    std::string detail;
};

namespace detail {

inline std::optional<std::string> read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) return std::nullopt;
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

// Reports the first difference between two blobs of line-oriented text.
inline std::string first_difference(const std::string& expected, const std::string& actual) {
    std::istringstream ea(expected), aa(actual);
    std::string el, al;
    int line = 0;
    while (true) {
        ++line;
        const bool more_e = static_cast<bool>(std::getline(ea, el));
        const bool more_a = static_cast<bool>(std::getline(aa, al));
        if (!more_e && !more_a) return "identical";
        if (!more_e) return "line " + std::to_string(line) + ": extra \"" + al + "\"";
        if (!more_a) return "line " + std::to_string(line) + ": missing \"" + el + "\"";
        if (el != al)
            return "line " + std::to_string(line) + ": expected \"" + el + "\" got \"" + al +
                   "\"";
    }
}

struct InvariantHarness {
    std::vector<InvariantResult> results;

    void family(const std::string& name, const std::function<void(std::string&)>& body) {
        InvariantResult r{name, true, ""};
        try {
            std::string problem;
            body(problem);
            if (!problem.empty()) {
                r.pass = false;
                r.detail = problem;
            }
        } catch (const std::exception& e) {
            r.pass = false;
            r.detail = std::string("exception: ") + e.what();
        }
        results.push_back(std::move(r));
    }
};

inline std::set<std::string> label_set(const ClassifyContext& ctx,
                                       const std::vector<WeylElement>& ws) {
    std::set<std::string> out;
    for (const WeylElement& w : ws) out.insert(element_label(ctx.labels, ctx.profile, w));
    return out;
}

inline std::string join_labels(const std::set<std::string>& s) {
    std::string out;
    for (const std::string& x : s) {
        if (!out.empty()) out += ',';
        out += x;
    }
    return out;
}

}  // namespace detail

inline std::vector<InvariantResult> run_invariants(int max_n, const std::string& fixtures_dir) {
    detail::InvariantHarness h;
    if (max_n < 3) {
        h.results.push_back({"bounds", false, "max_n must be at least 3"});
        return h.results;
    }

    std::vector<ClassifyContext> ctxs;  // index 0 -> n = 3
    for (int n = 3; n <= max_n; ++n) ctxs.push_back(make_context(n));
    auto each = [&](const std::function<void(const ClassifyContext&, std::string&)>& body,
                    std::string& problem) {
        for (const ClassifyContext& ctx : ctxs) {
            body(ctx, problem);
            if (!problem.empty()) {
                problem = "n=" + std::to_string(ctx.rs.n) + ": " + problem;
                return;
            }
        }
    };

    h.family("root census", [&](std::string& problem) {
        each(
            [&](const ClassifyContext& ctx, std::string& p) {
                const RootSystem& rs = ctx.rs;
                const int l = rs.rank;
                const std::size_t expect_pos = rs.type == LieType::B
                                                   ? static_cast<std::size_t>(l) * l
                                                   : static_cast<std::size_t>(l) * (l - 1);
                if (rs.positive_roots.size() != expect_pos) {
                    p = "positive root count " + std::to_string(rs.positive_roots.size()) +
                        " != " + std::to_string(expect_pos);
                    return;
                }
                if (rs.simple_roots.size() != static_cast<std::size_t>(l)) {
                    p = "simple root count";
                    return;
                }
                std::set<Root> positives(rs.positive_roots.begin(), rs.positive_roots.end());
                if (positives.size() != rs.positive_roots.size()) {
                    p = "duplicate positive roots";
                    return;
                }
                std::vector<Rational> half(l, Rational(0));
                for (const Root& r : rs.positive_roots)
                    for (int i = 0; i < l; ++i) half[i] += Rational(r.coords[i], 2);
                if (half != rs.rho) {
                    p = "rho is not the half-sum of the positive roots";
                    return;
                }
                for (const Root& s : rs.simple_roots) {
                    if (!positives.count(s)) {
                        p = "simple root " + root_text(s) + " not positive";
                        return;
                    }
                    if (coroot_pairing(rs.rho, s) != Rational(1)) {
                        p = "<rho, coroot> != 1 at " + root_text(s);
                        return;
                    }
                }
                const auto d0 = unipotent_radical_roots(rs, ParabolicId::P0);
                const auto d1 = unipotent_radical_roots(rs, ParabolicId::P1);
                const auto d2 = unipotent_radical_roots(rs, ParabolicId::P2);
                const std::size_t expect_d0 = rs.type == LieType::B
                                                  ? static_cast<std::size_t>(4 * l - 4)
                                                  : static_cast<std::size_t>(4 * l - 6);
                const std::size_t expect_d1 = rs.type == LieType::B
                                                  ? static_cast<std::size_t>(2 * l - 1)
                                                  : static_cast<std::size_t>(2 * (l - 1));
                if (d0.size() != expect_d0 || d1.size() != expect_d1 ||
                    d2.size() != expect_d0 - 1) {
                    p = "radical sizes " + std::to_string(d0.size()) + "/" +
                        std::to_string(d1.size()) + "/" + std::to_string(d2.size());
                    return;
                }
                std::set<Root> s0(d0.begin(), d0.end()), s1(d1.begin(), d1.end()),
                    s2(d2.begin(), d2.end());
                std::set<Root> s12 = s1;
                s12.insert(s2.begin(), s2.end());
                if (s12 != s0) {
                    p = "narrow radicals do not cover the big radical";
                    return;
                }
                Root e1_minus_e2;
                e1_minus_e2.coords.assign(l, 0);
                e1_minus_e2.coords[0] = 1;
                e1_minus_e2.coords[1] = -1;
                std::set<Root> s0_minus = s0;
                s0_minus.erase(e1_minus_e2);
                if (s2 != s0_minus) {
                    p = "rank-two radical is not the big radical minus e1-e2";
                    return;
                }
                for (const Root& r : d0)
                    if (!positives.count(r)) {
                        p = "radical root " + root_text(r) + " not positive";
                        return;
                    }
            },
            problem);
    });

    h.family("weyl census", [&](std::string& problem) {
        each(
            [&](const ClassifyContext& ctx, std::string& p) {
                const RootSystem& rs = ctx.rs;
                const int l = rs.rank;
                const auto all = enumerate_weyl(rs, ctx.profile);
                std::size_t expect = 1;
                for (int i = 2; i <= l; ++i) expect *= static_cast<std::size_t>(i);
                expect <<= rs.type == LieType::B ? l : l - 1;
                if (all.size() != expect) {
                    p = "group size " + std::to_string(all.size()) +
                        " != " + std::to_string(expect);
                    return;
                }
                std::set<WeylElement> seen(all.begin(), all.end());
                if (seen.size() != all.size()) {
                    p = "enumeration repeats elements";
                    return;
                }
                for (const WeylElement& w : all)
                    if (!element_fits_type(rs, w)) {
                        p = "element outside the group (sign parity)";
                        return;
                    }
            },
            problem);
    });

    h.family("group laws", [&](std::string& problem) {
        each(
            [&](const ClassifyContext& ctx, std::string& p) {
                const RootSystem& rs = ctx.rs;
                const auto all = enumerate_weyl(rs, ctx.profile);
                const WeylElement id = weyl_identity(rs.rank);
                if (length(rs, id) != 0) {
                    p = "identity has nonzero length";
                    return;
                }
                for (const WeylElement& w : all) {
                    if (compose(w, inverse(w)) != id || compose(inverse(w), w) != id) {
                        p = "inverse law fails";
                        return;
                    }
                    if (compose(w, id) != w || compose(id, w) != w) {
                        p = "identity law fails";
                        return;
                    }
                    if (length(rs, w) != length(rs, inverse(w))) {
                        p = "length(w) != length(w^-1)";
                        return;
                    }
                }
                // Action homomorphism on roots; all pairs when the group is
                // small, a fixed window otherwise.
                const std::size_t cap = all.size() <= 48 ? all.size() : 60;
                for (std::size_t i = 0; i < cap; ++i)
                    for (std::size_t j = 0; j < cap; ++j) {
                        const WeylElement prod = compose(all[i], all[j]);
                        for (const Root& s : rs.simple_roots)
                            if (act_on_root(prod, s) !=
                                act_on_root(all[i], act_on_root(all[j], s))) {
                                p = "(w1 w2) alpha != w1 (w2 alpha)";
                                return;
                            }
                    }
            },
            problem);
    });

    h.family("minimal representative closed forms", [&](std::string& problem) {
        each(
            [&](const ClassifyContext& ctx, std::string& p) {
                const RootSystem& rs = ctx.rs;
                const auto all = enumerate_weyl(rs, ctx.profile);
                for (const WeylElement& w : all)
                    for (ParabolicId id : {ParabolicId::P0, ParabolicId::P1, ParabolicId::P2}) {
                        const ParabolicData& pd = id == ParabolicId::P0   ? ctx.p0
                                                  : id == ParabolicId::P1 ? ctx.p1
                                                                          : ctx.p2;
                        if (closed_form_membership(rs, id, w) != is_minimal_rep(rs, pd, w)) {
                            p = "closed form disagrees with the inversion-set test (parabolic " +
                                std::to_string(static_cast<int>(id)) + ")";
                            return;
                        }
                    }
            },
            problem);
    });

    h.family("complement closed forms", [&](std::string& problem) {
        each(
            [&](const ClassifyContext& ctx, std::string& p) {
                const RootSystem& rs = ctx.rs;
                const auto all = enumerate_weyl(rs, ctx.profile);
                for (ParabolicId id : {ParabolicId::P1, ParabolicId::P2}) {
                    const auto& comp = id == ParabolicId::P1 ? ctx.w1_0 : ctx.w2_0;
                    std::set<WeylElement> comp_set(comp.begin(), comp.end());
                    for (const WeylElement& w : all)
                        if (coset_complement_closed_form(rs, id, w) !=
                            static_cast<bool>(comp_set.count(w))) {
                            p = "complement closed form disagrees (parabolic " +
                                std::to_string(static_cast<int>(id)) + ")";
                            return;
                        }
                }
            },
            problem);
    });

    h.family("coset factorization bijection", [&](std::string& problem) {
        each(
            [&](const ClassifyContext& ctx, std::string& p) {
                const RootSystem& rs = ctx.rs;
                const int l = rs.rank;
                if (ctx.wp0.size() != static_cast<std::size_t>(4 * l * (l - 1))) {
                    p = "big-cell representative count " + std::to_string(ctx.wp0.size()) +
                        " != " + std::to_string(4 * l * (l - 1));
                    return;
                }
                std::set<WeylElement> wp0_set(ctx.wp0.begin(), ctx.wp0.end());
                for (ParabolicId id : {ParabolicId::P1, ParabolicId::P2}) {
                    const ParabolicData& pd = id == ParabolicId::P1 ? ctx.p1 : ctx.p2;
                    const auto& comp = id == ParabolicId::P1 ? ctx.w1_0 : ctx.w2_0;
                    const auto reps = kostant_representatives(rs, pd, ctx.profile);
                    if (comp.size() * reps.size() != ctx.wp0.size()) {
                        p = "|complement| * |representatives| != |big cell|";
                        return;
                    }
                    std::set<WeylElement> products;
                    for (const WeylElement& t : comp)
                        for (const WeylElement& r : reps) {
                            const WeylElement prod = compose(t, r);
                            if (!wp0_set.count(prod)) {
                                p = "product leaves the big cell";
                                return;
                            }
                            if (length(rs, prod) != length(rs, t) + length(rs, r)) {
                                p = "product length is not additive";
                                return;
                            }
                            products.insert(prod);
                            const CosetFactorization back =
                                coset_factorize(rs, ctx.p0, pd, comp, prod);
                            if (back.tilde != t || back.rep != r) {
                                p = "factorization does not invert the product";
                                return;
                            }
                        }
                    if (products.size() != ctx.wp0.size()) {
                        p = "products do not exhaust the big cell";
                        return;
                    }
                }
            },
            problem);
    });

    h.family("shifted action composition", [&](std::string& problem) {
        each(
            [&](const ClassifyContext& ctx, std::string& p) {
                const RootSystem& rs = ctx.rs;
                const SymbolicWeight lambda = generic_highest_weight(rs);
                const WeylElement id = weyl_identity(rs.rank);
                SymbolicWeight fixed = dot_action(rs, id, lambda);
                if (fixed.eps != lambda.eps || fixed.kappa != lambda.kappa) {
                    p = "identity does not fix weights under the shifted action";
                    return;
                }
                // Exhaustive over the full group for the tabulated ranks,
                // over the big cell beyond them.
                const auto pool =
                    rs.n == 4 || rs.n == 5 ? enumerate_weyl(rs, ctx.profile) : ctx.wp0;
                for (const WeylElement& w1 : pool)
                    for (const WeylElement& w2 : pool) {
                        const SymbolicWeight lhs = dot_action(rs, w1, dot_action(rs, w2, lambda));
                        const SymbolicWeight rhs = dot_action(rs, compose(w1, w2), lambda);
                        if (lhs.eps != rhs.eps || lhs.kappa != rhs.kappa) {
                            p = "w1 * (w2 * lambda) != (w1 w2) * lambda";
                            return;
                        }
                    }
            },
            problem);
    });

    h.family("length generating function", [&](std::string& problem) {
        each(
            [&](const ClassifyContext& ctx, std::string& p) {
                const RootSystem& rs = ctx.rs;
                const std::size_t top = ctx.p0.delta.size();
                std::vector<long long> counts(top + 1, 0);
                for (const WeylElement& w : ctx.wp0) {
                    const int len = length(rs, w);
                    if (len < 0 || static_cast<std::size_t>(len) > top) {
                        p = "representative length outside [0, |radical|]";
                        return;
                    }
                    ++counts[static_cast<std::size_t>(len)];
                }
                if (counts[0] != 1 || counts[top] != 1) {
                    p = "length extremes are not unique";
                    return;
                }
                for (std::size_t k = 0; k <= top; ++k)
                    if (counts[k] != counts[top - k]) {
                        p = "length distribution is not palindromic";
                        return;
                    }
            },
            problem);
    });

    h.family("eisenstein thresholds", [&](std::string& problem) {
        each(
            [&](const ClassifyContext& ctx, std::string& p) {
                const int l = ctx.rs.rank;
                const Rational expect =
                    ctx.rs.type == LieType::B ? Rational(2 * l - 3) : Rational(2 * l - 4);
                if (ctx.threshold != expect) {
                    p = "threshold " + ctx.threshold.str() + " != " + expect.str();
                    return;
                }
            },
            problem);
        if (!problem.empty()) return;
        const Rational t3 = ctxs[0].threshold;
        if (t3 != Rational(1)) problem = "n=3 threshold is not 1";
        if (max_n >= 4 && ctxs[1].threshold != Rational(2)) problem = "n=4 threshold is not 2";
        if (max_n >= 5 && ctxs[2].threshold != Rational(3)) problem = "n=5 threshold is not 3";
    });

    h.family("representative label sets", [&](std::string& problem) {
        struct Expect {
            int n;
            std::set<std::string> p1, p2, c1, c2;
        };
        const std::vector<Expect> cases = {
            {5,
             {"w1", "w2", "w5", "w7", "w8", "w11"},
             {"w1", "w4", "w6", "w13", "w14", "w15", "w16", "w17", "w18", "w20", "w21", "w23"},
             {"w1", "w4", "w13", "w16"},
             {"w1", "w2"}},
            {4,
             {"w1", "w2", "w5", "w19", "w20", "w23"},
             {"w1", "w4", "w6", "w8", "w9", "w11", "w13", "w14", "w15", "w16", "w17", "w18"},
             {"w1", "w4", "w13", "w16"},
             {"w1", "w2"}},
        };
        for (const Expect& e : cases) {
            if (e.n > max_n) continue;
            const ClassifyContext& ctx = ctxs[static_cast<std::size_t>(e.n - 3)];
            const auto reps1 = kostant_representatives(ctx.rs, ctx.p1, ctx.profile);
            const auto reps2 = kostant_representatives(ctx.rs, ctx.p2, ctx.profile);
            const struct {
                const char* what;
                std::set<std::string> got, want;
            } checks[] = {
                {"rank-one representatives", detail::label_set(ctx, reps1), e.p1},
                {"rank-two representatives", detail::label_set(ctx, reps2), e.p2},
                {"rank-one complement", detail::label_set(ctx, ctx.w1_0), e.c1},
                {"rank-two complement", detail::label_set(ctx, ctx.w2_0), e.c2},
            };
            for (const auto& c : checks)
                if (c.got != c.want) {
                    problem = "n=" + std::to_string(e.n) + " " + c.what + " {" +
                              detail::join_labels(c.got) + "} != {" + detail::join_labels(c.want) +
                              "}";
                    return;
                }
        }
    });

    h.family("table fixtures", [&](std::string& problem) {
        for (int n : {4, 5}) {
            if (n > max_n) continue;
            const ClassifyContext& ctx = ctxs[static_cast<std::size_t>(n - 3)];
            const std::string path = fixtures_dir + "/table_n" + std::to_string(n) + ".md";
            const auto expected = detail::read_file(path);
            if (!expected) {
                problem = "cannot read fixture " + path;
                return;
            }
            const std::string actual =
                render_table(ctx, classify_symbolic(ctx), OutputFormat::Markdown);
            if (actual != *expected) {
                problem = path + ": " + detail::first_difference(*expected, actual);
                return;
            }
        }
    });

    h.family("survivor fixtures", [&](std::string& problem) {
        for (int n : {4, 5}) {
            if (n > max_n) continue;
            const ClassifyContext& ctx = ctxs[static_cast<std::size_t>(n - 3)];
            const std::string path = fixtures_dir + "/survivors_n" + std::to_string(n) + ".txt";
            const auto expected = detail::read_file(path);
            if (!expected) {
                problem = "cannot read fixture " + path;
                return;
            }
            std::string actual;
            for (const GhostRecord& rec : classify_symbolic(ctx)) {
                if (!record_survives(rec)) continue;
                actual += rec.label + "|" + std::to_string(rec.degree) + "|" +
                          rec.reduced_offset.render(RenderStyle::ConstantFirst) + "|" +
                          condition_text(rec.survival) + "\n";
            }
            if (actual != *expected) {
                problem = path + ": " + detail::first_difference(*expected, actual);
                return;
            }
        }
    });

    h.family("symbolic concrete agreement", [&](std::string& problem) {
        constexpr long long kRange = 6;
        for (int n : {4, 5}) {
            if (n > max_n) continue;
            const ClassifyContext& ctx = ctxs[static_cast<std::size_t>(n - 3)];
            const auto symbolic = classify_symbolic(ctx);
            for (long long a1 = -kRange; a1 <= kRange; ++a1)
                for (long long a2 = -kRange; a2 <= kRange; ++a2)
                    for (long long a3 = -kRange; a3 <= kRange; ++a3) {
                        const std::vector<long long> a = {a1, a2, a3};
                        const long long c0 = ((a1 + a2 + a3) % 2 + 2) % 2;
                        if (!validate_highest_weight(ctx.rs, a, c0).valid) continue;
                        for (long long c : {c0, c0 - 2}) {
                            const auto concrete = classify_concrete(ctx, a, c);
                            for (std::size_t k = 0; k < symbolic.size(); ++k) {
                                const bool sym = eval_condition(symbolic[k].survival, a);
                                const bool con =
                                    concrete[k].survival.kind() == Condition::Kind::True;
                                if (sym != con) {
                                    problem = "n=" + std::to_string(n) + " " +
                                              symbolic[k].label + " disagrees at a=(" +
                                              std::to_string(a1) + "," + std::to_string(a2) +
                                              "," + std::to_string(a3) + ")";
                                    return;
                                }
                                if (symbolic[k].offset.evaluate(a, c) !=
                                        concrete[k].offset.constant_term() ||
                                    symbolic[k].weight.evaluate(a, c) !=
                                        concrete[k].weight.constant_term()) {
                                    problem = "offset/weight evaluation mismatch at " +
                                              symbolic[k].label;
                                    return;
                                }
                            }
                        }
                    }
        }
    });

    h.family("weight identities", [&](std::string& problem) {
        each(
            [&](const ClassifyContext& ctx, std::string& p) {
                const SymbolicWeight lambda = generic_highest_weight(ctx.rs);
                for (const WeylElement& w : ctx.wp0) {
                    const GhostRecord rec = classify_one(ctx, w, lambda);
                    if (rec.degree != rec.length + 1) {
                        p = "degree != length + 1 at " + rec.label;
                        return;
                    }
                    const AffineForm middle = middle_weight(lambda, rec.degree);
                    if (rec.weight != middle + rec.offset) {
                        p = "weight != middle + offset at " + rec.label;
                        return;
                    }
                    const SymbolicWeight wdot = dot_action(ctx.rs, w, lambda);
                    if (levi_weight_bound(ParabolicId::P1, rec.degree, wdot) !=
                        middle - Rational(2) * rec.n1) {
                        p = "rank-one bound identity fails at " + rec.label;
                        return;
                    }
                    if (levi_weight_bound(ParabolicId::P2, rec.degree, wdot) !=
                        middle - (rec.n1 + rec.n2)) {
                        p = "rank-two bound identity fails at " + rec.label;
                        return;
                    }
                }
            },
            problem);
    });

    h.family("form conjugation", [&](std::string& problem) {
        for (int n = 3; n <= max_n; ++n) {
            const auto scalar = form_conjugation_scalar(n);
            if (!scalar) {
                problem = "n=" + std::to_string(n) + ": conjugated form is not proportional";
                return;
            }
            if (*scalar != Rational(-2)) {
                problem = "n=" + std::to_string(n) + ": scalar " + scalar->str() + " != -2";
                return;
            }
        }
    });

    h.family("weight validation", [&](std::string& problem) {
        struct Case {
            int n;
            std::vector<long long> a;
            long long c;
            bool valid;
        };
        const std::vector<Case> cases = {
            {5, {2, 1, 0}, 1, true},   {5, {2, 1, 0}, 0, false}, {5, {0, 1, 0}, 1, false},
            {5, {1, 1, -1}, 1, false}, {5, {1, 1}, 0, false},    {4, {2, 1, -1}, 0, true},
            {4, {2, 1, 1}, 0, true},   {4, {1, 1, -2}, 0, false}, {4, {1, -1, 0}, 0, false},
            {3, {1, 0}, 1, true},      {3, {0, 1}, 1, false},
        };
        for (const Case& cs : cases) {
            if (cs.n > max_n) continue;
            const ClassifyContext& ctx = ctxs[static_cast<std::size_t>(cs.n - 3)];
            const WeightVerdict v = validate_highest_weight(ctx.rs, cs.a, cs.c);
            if (v.valid != cs.valid) {
                problem = "n=" + std::to_string(cs.n) + " verdict flipped";
                return;
            }
            if (!v.valid && v.problems.empty()) {
                problem = "invalid weight reported without a reason";
                return;
            }
        }
    });

    h.family("render determinism", [&](std::string& problem) {
        for (int n : {4, 5}) {
            if (n > max_n) continue;
            auto render_all = [&]() {
                const ClassifyContext ctx = make_context(n);
                const auto recs = classify_symbolic(ctx);
                std::string out;
                for (OutputFormat fmt :
                     {OutputFormat::Markdown, OutputFormat::Csv, OutputFormat::JsonLines}) {
                    out += render_table(ctx, recs, fmt);
                    out += render_classify(ctx, recs, fmt);
                }
                SweepAccumulator acc;
                for (long long a1 = 0; a1 <= 1; ++a1) {
                    const std::vector<long long> a = {a1, 0, 0};
                    acc.add(classify_concrete(ctx, a, (a1 % 2 + 2) % 2));
                }
                out += render_sweep(ctx, acc, OutputFormat::Markdown);
                out += render_sweep(ctx, acc, OutputFormat::JsonLines);
                return out;
            };
            if (render_all() != render_all()) {
                problem = "n=" + std::to_string(n) + ": repeated renders differ";
                return;
            }
        }
    });

    h.family("enumeration profile", [&](std::string& problem) {
        each(
            [&](const ClassifyContext& ctx, std::string& p) {
                if (ctx.wp0.empty() ||
                    ctx.wp0.front() != weyl_identity(ctx.rs.rank)) {
                    p = "enumeration does not start at the identity";
                    return;
                }
                if (element_label(ctx.labels, ctx.profile, ctx.wp0.front()) != "w1") {
                    p = "first label is not w1";
                    return;
                }
            },
            problem);
        if (!problem.empty()) return;
        for (int n : {4, 5}) {
            if (n > max_n) continue;
            const ClassifyContext& ctx = ctxs[static_cast<std::size_t>(n - 3)];
            const std::vector<std::string> sigmas = {"e",       "(1 2)",   "(1 3)",
                                                     "(2 3)",   "(1 2 3)", "(3 2 1)"};
            for (std::size_t k = 0; k < sigmas.size(); ++k)
                if (sigma_text(ctx.wp0[k], ctx.profile) != sigmas[k]) {
                    problem = "n=" + std::to_string(n) + ": row " + std::to_string(k + 1) +
                              " permutation is " + sigma_text(ctx.wp0[k], ctx.profile);
                    return;
                }
            const std::vector<std::string> fs =
                n == 5 ? std::vector<std::string>{"{}", "{1}", "{2}", "{1,2}"}
                       : std::vector<std::string>{"{}", "{1,2}", "{2,3}", "{1,3}"};
            for (std::size_t blk = 0; blk < fs.size(); ++blk)
                if (f_text(ctx.wp0[blk * 6]) != fs[blk]) {
                    problem = "n=" + std::to_string(n) + ": sign block " +
                              std::to_string(blk + 1) + " is " + f_text(ctx.wp0[blk * 6]);
                    return;
                }
        }
    });

    return h.results;
}

}  // namespace ghost
