#pragma once

#include <map>
#include <string>
#include <vector>

#include "ghost/condition.hpp"
#include "ghost/hodge.hpp"
#include "ghost/kostant.hpp"
#include "ghost/root_system.hpp"
#include "ghost/weyl.hpp"

namespace ghost {

// Weight of the second coordinate against which the rank-one Eisenstein
// bound is tested: rho_2 plus the second coordinate of the half-sum over the
// big radical.  Comes out to 3 for n=5, 2 for n=4, 1 for n=3.
inline Rational eisenstein_threshold(const RootSystem& rs, const ParabolicData& p0) {
    Rational half_sum_2(0);
    for (const Root& r : p0.delta) half_sum_2 += Rational(r.coords.at(1), 2);
    return rs.rho.at(1) + half_sum_2;
}

// Everything fixed by the choice of n: the root system, the tabulated
// enumeration order, the three parabolics, the representative sets, and the
// factorization complements.
struct ClassifyContext {
    RootSystem rs;
    OrderingProfile profile;
    ParabolicData p0, p1, p2;
    std::vector<WeylElement> wp0;   // minimal representatives for P0, table order
    std::vector<WeylElement> w1_0;  // complement factors for P1
    std::vector<WeylElement> w2_0;  // complement factors for P2
    std::map<WeylElement, std::string> labels;
    Rational threshold;
};

inline ClassifyContext make_context(int n) {
    ClassifyContext ctx;
    ctx.rs = build_root_system(n);
    ctx.profile = table_profile(ctx.rs);
    ctx.p0 = parabolic_datum(ctx.rs, ParabolicId::P0);
    ctx.p1 = parabolic_datum(ctx.rs, ParabolicId::P1);
    ctx.p2 = parabolic_datum(ctx.rs, ParabolicId::P2);
    ctx.wp0 = kostant_representatives(ctx.rs, ctx.p0, ctx.profile);
    ctx.w1_0 = coset_complement(ctx.rs, ctx.p0, ctx.p1, ctx.profile);
    ctx.w2_0 = coset_complement(ctx.rs, ctx.p0, ctx.p2, ctx.profile);
    ctx.labels = table_labels(ctx.rs, ctx.wp0);
    ctx.threshold = eisenstein_threshold(ctx.rs, ctx.p0);
    return ctx;
}

// Fold every atomic leaf against the dominance cone, keeping the shape.
inline Condition fold_tree(const RootSystem& rs, const Condition& c) {
    switch (c.kind()) {
        case Condition::Kind::Leaf:
            return fold_under_dominance(rs, c.atom().lhs, c.atom().rel);
        case Condition::Kind::And: {
            std::vector<Condition> parts;
            for (const Condition& q : c.children()) parts.push_back(fold_tree(rs, q));
            return cond_and(std::move(parts));
        }
        case Condition::Kind::Or: {
            std::vector<Condition> parts;
            for (const Condition& q : c.children()) parts.push_back(fold_tree(rs, q));
            return cond_or(std::move(parts));
        }
        default:
            return c;
    }
}

// Necessary condition 1: the contribution may not sit strictly below the
// middle weight of its own degree, i.e. -2 n1(w * lambda) - (len + 1) >= 0.
inline Condition filter_middle_weight(const ClassifyContext& ctx, const WeylElement& w,
                                      const SymbolicWeight& lambda) {
    SymbolicWeight wdot = dot_action(ctx.rs, w, lambda);
    AffineForm offset = weight_offset_from_middle(wdot, length(ctx.rs, w));
    return fold_under_dominance(ctx.rs, offset, Rel::Ge);
}

// Necessary condition 2, from the rank-two face: factor w through the P2
// representatives.  A trivial complement factor decides nothing; otherwise
// the contribution requires n1 = n2 on the companion's shifted weight.
inline Condition filter_r2(const ClassifyContext& ctx, const WeylElement& w,
                           const SymbolicWeight& lambda) {
    CosetFactorization fact = coset_factorize(ctx.rs, ctx.p0, ctx.p2, ctx.w2_0, w);
    if (fact.tilde == weyl_identity(ctx.rs.rank)) return cond_true();
    SymbolicWeight mu = dot_action(ctx.rs, fact.rep, lambda);
    return fold_under_dominance(ctx.rs, mu.eps.at(0) - mu.eps.at(1), Rel::Eq);
}

// Necessary condition 3, from the rank-one face: factor w through the P1
// representatives.  With a nontrivial complement factor the contribution
// survives only if the second coordinate stays below the Eisenstein
// threshold or the companion already passes the rank-two comparison.
inline Condition filter_r1(const ClassifyContext& ctx, const WeylElement& w,
                           const SymbolicWeight& lambda) {
    CosetFactorization fact = coset_factorize(ctx.rs, ctx.p0, ctx.p1, ctx.w1_0, w);
    if (fact.tilde == weyl_identity(ctx.rs.rank)) return cond_true();
    SymbolicWeight wdot = dot_action(ctx.rs, w, lambda);
    AffineForm high = -wdot.eps.at(1) -
                      AffineForm::constant(wdot.eps.at(1).nvars(), ctx.threshold);
    Condition above = fold_under_dominance(ctx.rs, high, Rel::Gt);
    Condition not_above = fold_tree(ctx.rs, negate_condition(above));
    return cond_or({not_above, filter_r2(ctx, fact.rep, lambda)});
}

// One row of the analysis: the element, its degree and weight data, the
// three filter verdicts, and the simplified survival condition.
struct GhostRecord {
    std::string label;
    WeylElement element;
    int length = 0;
    long long degree = 0;
    AffineForm weight;          // includes the -2c similitude part
    AffineForm n1, n2;          // first two coordinates of w * lambda
    WeylElement tilde2, rep2;   // factorization through P2 (table column)
    AffineForm offset;          // weight minus middle weight in its degree
    AffineForm reduced_offset;  // offset with survival-pinned coordinates substituted
    Condition f1, f2, f3;
    Condition survival;
    bool extrapolated = false;
};

inline GhostRecord classify_one(const ClassifyContext& ctx, const WeylElement& w,
                                const SymbolicWeight& lambda) {
    GhostRecord rec;
    rec.element = w;
    rec.label = element_label(ctx.labels, ctx.profile, w);
    rec.length = length(ctx.rs, w);
    rec.degree = cohomological_degree(rec.length);
    SymbolicWeight wdot = dot_action(ctx.rs, w, lambda);
    rec.n1 = wdot.eps.at(0);
    rec.n2 = wdot.eps.at(1);
    rec.weight = boundary_face_weight(wdot);
    rec.offset = weight_offset_from_middle(wdot, rec.length);
    CosetFactorization fact2 = coset_factorize(ctx.rs, ctx.p0, ctx.p2, ctx.w2_0, w);
    rec.tilde2 = fact2.tilde;
    rec.rep2 = fact2.rep;
    rec.f1 = filter_middle_weight(ctx, w, lambda);
    rec.f2 = filter_r2(ctx, w, lambda);
    rec.f3 = filter_r1(ctx, w, lambda);
    SimplifyResult sr =
        simplify_under_dominance(ctx.rs, cond_and({rec.f1, rec.f2, rec.f3}));
    rec.survival = sr.cond;
    rec.reduced_offset = rec.offset.substitute(sr.pins);
    rec.extrapolated = ctx.rs.n != 4 && ctx.rs.n != 5;
    return rec;
}

// Symbolic run over the generic weight: conditions in the a-coordinates.
inline std::vector<GhostRecord> classify_symbolic(const ClassifyContext& ctx) {
    std::vector<GhostRecord> out;
    SymbolicWeight lambda = generic_highest_weight(ctx.rs);
    for (const WeylElement& w : ctx.wp0) out.push_back(classify_one(ctx, w, lambda));
    return out;
}

// Concrete run: same pipeline at a fixed weight, so every condition folds to
// a constant by plain rational comparison before any cone reasoning starts.
inline std::vector<GhostRecord> classify_concrete(const ClassifyContext& ctx,
                                                  const std::vector<long long>& a, long long c) {
    std::vector<GhostRecord> out;
    SymbolicWeight lambda = concrete_highest_weight(ctx.rs, a, c);
    for (const WeylElement& w : ctx.wp0) out.push_back(classify_one(ctx, w, lambda));
    return out;
}

}  // namespace ghost
