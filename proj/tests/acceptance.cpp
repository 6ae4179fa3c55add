// Acceptance gate: one PASS/FAIL line per criterion, nonzero exit when any
// criterion fails.  Criteria are numbered 1..13 and phrased by what they
// verify; the fixture directory can be overridden as argv[1].

#include <functional>
#include <iostream>
#include <set>
#include <string>
#include <vector>

#include "ghost/checks.hpp"
#include "ghost/cli_app.hpp"

namespace {

struct Criterion {
    int id;
    std::string title;
    std::function<bool(std::string&)> body;
};

std::string fixtures = GHOST_FIXTURE_DIR;

bool table_matches(int n, std::string& why) {
    const ghost::ClassifyContext ctx = ghost::make_context(n);
    const auto expected =
        ghost::detail::read_file(fixtures + "/table_n" + std::to_string(n) + ".md");
    if (!expected) {
        why = "missing fixture";
        return false;
    }
    const std::string actual =
        ghost::render_table(ctx, ghost::classify_symbolic(ctx), ghost::OutputFormat::Markdown);
    if (actual != *expected) {
        why = ghost::detail::first_difference(*expected, actual);
        return false;
    }
    return true;
}

bool survivors_match(int n, std::string& why) {
    const ghost::ClassifyContext ctx = ghost::make_context(n);
    const auto expected =
        ghost::detail::read_file(fixtures + "/survivors_n" + std::to_string(n) + ".txt");
    if (!expected) {
        why = "missing fixture";
        return false;
    }
    std::string actual;
    for (const ghost::GhostRecord& rec : ghost::classify_symbolic(ctx)) {
        if (!ghost::record_survives(rec)) continue;
        actual += rec.label + "|" + std::to_string(rec.degree) + "|" +
                  rec.reduced_offset.render(ghost::RenderStyle::ConstantFirst) + "|" +
                  ghost::condition_text(rec.survival) + "\n";
    }
    if (actual != *expected) {
        why = ghost::detail::first_difference(*expected, actual);
        return false;
    }
    return true;
}

std::set<std::string> labels_of(const ghost::ClassifyContext& ctx,
                                const std::vector<ghost::WeylElement>& ws) {
    std::set<std::string> out;
    for (const auto& w : ws) out.insert(ghost::element_label(ctx.labels, ctx.profile, w));
    return out;
}

// Exactly one survivor with the given label, degree, and constant offset.
bool sole_survivor(const std::vector<ghost::GhostRecord>& recs, const std::string& label,
                   long long degree, long long offset, std::string& why) {
    std::vector<const ghost::GhostRecord*> alive;
    for (const auto& rec : recs)
        if (rec.survival.kind() == ghost::Condition::Kind::True) alive.push_back(&rec);
    if (alive.size() != 1) {
        why = "expected one survivor, got " + std::to_string(alive.size());
        return false;
    }
    const ghost::GhostRecord& rec = *alive.front();
    if (rec.label != label || rec.degree != degree ||
        rec.offset.constant_term() != ghost::Rational(offset)) {
        why = "survivor is " + rec.label + " at degree " + std::to_string(rec.degree) +
              " offset " + rec.offset.render(ghost::RenderStyle::ConstantFirst);
        return false;
    }
    return true;
}

}  // namespace

int main(int argc, char** argv) {
    if (argc > 1) fixtures = argv[1];

    std::vector<Criterion> criteria;

    criteria.push_back({1, "n=5 table matches the golden fixture",
                        [](std::string& why) { return table_matches(5, why); }});

    criteria.push_back({2, "n=4 table matches the golden fixture",
                        [](std::string& why) { return table_matches(4, why); }});

    criteria.push_back({3, "group and big-cell census for n=4,5", [](std::string& why) {
                            const auto c5 = ghost::make_context(5);
                            const auto c4 = ghost::make_context(4);
                            const auto w5 = ghost::enumerate_weyl(c5.rs, c5.profile);
                            const auto w4 = ghost::enumerate_weyl(c4.rs, c4.profile);
                            if (w5.size() != 48 || w4.size() != 24) {
                                why = "group sizes " + std::to_string(w5.size()) + "/" +
                                      std::to_string(w4.size());
                                return false;
                            }
                            const int l = c5.rs.rank;
                            if (c5.wp0.size() != 24 ||
                                static_cast<int>(c5.wp0.size()) != 4 * l * (l - 1)) {
                                why = "n=5 big cell has " + std::to_string(c5.wp0.size());
                                return false;
                            }
                            if (c4.wp0.size() != 24 ||
                                std::set<ghost::WeylElement>(c4.wp0.begin(), c4.wp0.end()) !=
                                    std::set<ghost::WeylElement>(w4.begin(), w4.end())) {
                                why = "n=4 big cell is not the whole group";
                                return false;
                            }
                            return true;
                        }});

    criteria.push_back(
        {4, "representative and complement label sets", [](std::string& why) {
             const auto c5 = ghost::make_context(5);
             const auto c4 = ghost::make_context(4);
             using Set = std::set<std::string>;
             struct Row {
                 Set got, want;
                 const char* what;
             };
             const std::vector<Row> rows = {
                 {labels_of(c4, ghost::kostant_representatives(c4.rs, c4.p1, c4.profile)),
                  Set{"w1", "w2", "w5", "w19", "w20", "w23"}, "n=4 rank-one representatives"},
                 {labels_of(c4, ghost::kostant_representatives(c4.rs, c4.p2, c4.profile)),
                  Set{"w1", "w4", "w6", "w8", "w9", "w11", "w13", "w14", "w15", "w16", "w17",
                      "w18"},
                  "n=4 rank-two representatives"},
                 {labels_of(c4, c4.w1_0), Set{"w1", "w4", "w13", "w16"}, "n=4 rank-one complement"},
                 {labels_of(c4, c4.w2_0), Set{"w1", "w2"}, "n=4 rank-two complement"},
                 {labels_of(c5, c5.w1_0), Set{"w1", "w4", "w13", "w16"}, "n=5 rank-one complement"},
                 {labels_of(c5, c5.w2_0), Set{"w1", "w2"}, "n=5 rank-two complement"},
             };
             for (const Row& r : rows)
                 if (r.got != r.want) {
                     why = r.what;
                     return false;
                 }
             return true;
         }});

    criteria.push_back({5, "eisenstein thresholds for n=4,5", [](std::string& why) {
                            const auto c5 = ghost::make_context(5);
                            const auto c4 = ghost::make_context(4);
                            if (c5.threshold != ghost::Rational(3)) {
                                why = "n=5 threshold " + c5.threshold.str();
                                return false;
                            }
                            if (c4.threshold != ghost::Rational(2)) {
                                why = "n=4 threshold " + c4.threshold.str();
                                return false;
                            }
                            return true;
                        }});

    criteria.push_back({6, "n=5 survivor families match the golden fixture",
                        [](std::string& why) { return survivors_match(5, why); }});

    criteria.push_back({7, "n=4 survivor families match the golden fixture",
                        [](std::string& why) { return survivors_match(4, why); }});

    criteria.push_back(
        {8, "spot checks at concrete weights", [](std::string& why) {
             const auto c5 = ghost::make_context(5);
             const auto c4 = ghost::make_context(4);
             for (const auto& rec : ghost::classify_concrete(c5, {3, 2, 1}, 0))
                 if (rec.survival.kind() == ghost::Condition::Kind::True) {
                     why = "(3,2,1) c=0 keeps " + rec.label;
                     return false;
                 }
             if (!sole_survivor(ghost::classify_concrete(c5, {1, 1, 1}, 1), "w24", 7, 3, why)) {
                 why = "n=5 (1,1,1) c=1: " + why;
                 return false;
             }
             if (!sole_survivor(ghost::classify_concrete(c4, {1, 1, -1}, 1), "w24", 5, 3, why)) {
                 why = "n=4 (1,1,-1) c=1: " + why;
                 return false;
             }
             return true;
         }});

    criteria.push_back(
        {9, "closed membership forms equal the inversion-set test for 3<=n<=8",
         [](std::string& why) {
             for (int n = 3; n <= 8; ++n) {
                 const auto ctx = ghost::make_context(n);
                 const auto all = ghost::enumerate_weyl(ctx.rs, ctx.profile);
                 for (const auto& w : all)
                     for (ghost::ParabolicId id : {ghost::ParabolicId::P0, ghost::ParabolicId::P1,
                                                   ghost::ParabolicId::P2}) {
                         const ghost::ParabolicData& pd = id == ghost::ParabolicId::P0 ? ctx.p0
                                                          : id == ghost::ParabolicId::P1
                                                              ? ctx.p1
                                                              : ctx.p2;
                         if (ghost::closed_form_membership(ctx.rs, id, w) !=
                             ghost::is_minimal_rep(ctx.rs, pd, w)) {
                             why = "n=" + std::to_string(n) + " parabolic " +
                                   std::to_string(static_cast<int>(id));
                             return false;
                         }
                     }
             }
             return true;
         }});

    criteria.push_back(
        {10, "coset factorization is bijective with additive lengths for 3<=n<=8",
         [](std::string& why) {
             for (int n = 3; n <= 8; ++n) {
                 const auto ctx = ghost::make_context(n);
                 const std::set<ghost::WeylElement> cell(ctx.wp0.begin(), ctx.wp0.end());
                 for (ghost::ParabolicId id : {ghost::ParabolicId::P1, ghost::ParabolicId::P2}) {
                     const ghost::ParabolicData& pd =
                         id == ghost::ParabolicId::P1 ? ctx.p1 : ctx.p2;
                     const auto& comp = id == ghost::ParabolicId::P1 ? ctx.w1_0 : ctx.w2_0;
                     const auto reps = ghost::kostant_representatives(ctx.rs, pd, ctx.profile);
                     std::set<ghost::WeylElement> products;
                     for (const auto& t : comp)
                         for (const auto& r : reps) {
                             const auto prod = ghost::compose(t, r);
                             if (!cell.count(prod) ||
                                 ghost::length(ctx.rs, prod) !=
                                     ghost::length(ctx.rs, t) + ghost::length(ctx.rs, r)) {
                                 why = "n=" + std::to_string(n) + ": bad product";
                                 return false;
                             }
                             products.insert(prod);
                             const auto back =
                                 ghost::coset_factorize(ctx.rs, ctx.p0, pd, comp, prod);
                             if (back.tilde != t || back.rep != r) {
                                 why = "n=" + std::to_string(n) + ": refactorization differs";
                                 return false;
                             }
                         }
                     if (products.size() != ctx.wp0.size()) {
                         why = "n=" + std::to_string(n) + ": not onto the big cell";
                         return false;
                     }
                 }
             }
             return true;
         }});

    criteria.push_back(
        {11, "shifted action is a group action (exhaustive for n=4,5)", [](std::string& why) {
             for (int n : {4, 5}) {
                 const auto ctx = ghost::make_context(n);
                 const auto all = ghost::enumerate_weyl(ctx.rs, ctx.profile);
                 const auto lambda = ghost::generic_highest_weight(ctx.rs);
                 for (const auto& w1 : all)
                     for (const auto& w2 : all) {
                         const auto lhs =
                             ghost::dot_action(ctx.rs, w1, ghost::dot_action(ctx.rs, w2, lambda));
                         const auto rhs =
                             ghost::dot_action(ctx.rs, ghost::compose(w1, w2), lambda);
                         if (lhs.eps != rhs.eps || lhs.kappa != rhs.kappa) {
                             why = "n=" + std::to_string(n);
                             return false;
                         }
                     }
             }
             return true;
         }});

    criteria.push_back(
        {12, "symbolic and concrete runs agree on weights with coordinates in [-6,6]",
         [](std::string& why) {
             for (int n : {4, 5}) {
                 const auto ctx = ghost::make_context(n);
                 const auto symbolic = ghost::classify_symbolic(ctx);
                 for (long long a1 = -6; a1 <= 6; ++a1)
                     for (long long a2 = -6; a2 <= 6; ++a2)
                         for (long long a3 = -6; a3 <= 6; ++a3) {
                             const std::vector<long long> a = {a1, a2, a3};
                             for (long long c = -6; c <= 6; ++c) {
                                 if (!ghost::validate_highest_weight(ctx.rs, a, c).valid)
                                     continue;
                                 const auto concrete = ghost::classify_concrete(ctx, a, c);
                                 for (std::size_t k = 0; k < symbolic.size(); ++k) {
                                     const bool sym =
                                         ghost::eval_condition(symbolic[k].survival, a);
                                     const bool con = concrete[k].survival.kind() ==
                                                      ghost::Condition::Kind::True;
                                     if (sym != con ||
                                         symbolic[k].offset.evaluate(a, c) !=
                                             concrete[k].offset.constant_term()) {
                                         why = "n=" + std::to_string(n) + " " +
                                               symbolic[k].label + " at (" +
                                               std::to_string(a1) + "," + std::to_string(a2) +
                                               "," + std::to_string(a3) + ") c=" +
                                               std::to_string(c);
                                         return false;
                                     }
                                 }
                             }
                         }
             }
             return true;
         }});

    criteria.push_back({13, "form conjugation scalar is -2 for 3<=n<=8", [](std::string& why) {
                            for (int n = 3; n <= 8; ++n) {
                                const auto scalar = ghost::form_conjugation_scalar(n);
                                if (!scalar || *scalar != ghost::Rational(-2)) {
                                    why = "n=" + std::to_string(n);
                                    return false;
                                }
                            }
                            return true;
                        }});

    int failures = 0;
    for (const Criterion& c : criteria) {
        std::string why;
        bool ok = false;
        try {
            ok = c.body(why);
        } catch (const std::exception& e) {
            why = std::string("exception: ") + e.what();
        }
        if (ok) {
            std::cout << "PASS " << (c.id < 10 ? " " : "") << c.id << ": " << c.title << "\n";
        } else {
            ++failures;
            std::cout << "FAIL " << (c.id < 10 ? " " : "") << c.id << ": " << c.title
                      << (why.empty() ? "" : " — " + why) << "\n";
        }
    }
    if (failures) std::cout << failures << " acceptance criteria failed\n";
    return failures;
}
