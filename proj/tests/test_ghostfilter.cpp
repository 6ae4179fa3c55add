#include <catch2/catch_amalgamated.hpp>

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "ghost/ghostfilter.hpp"
#include "ghost/table.hpp"

using namespace ghost;

namespace {

std::string fixture_path(const std::string& name) {
    return std::string(GHOST_FIXTURE_DIR) + "/" + name;
}

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    REQUIRE(in.good());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

const GhostRecord& by_label(const std::vector<GhostRecord>& recs, const std::string& label) {
    for (const GhostRecord& r : recs)
        if (r.label == label) return r;
    FAIL("no record labelled " + label);
    return recs.front();
}

std::string survivor_lines(const std::vector<GhostRecord>& recs) {
    std::string out;
    for (const GhostRecord& rec : recs) {
        if (!record_survives(rec)) continue;
        out += rec.label + "|" + std::to_string(rec.degree) + "|" +
               rec.reduced_offset.render(RenderStyle::ConstantFirst) + "|" +
               condition_text(rec.survival) + "\n";
    }
    return out;
}

}  // namespace

TEST_CASE("eisenstein threshold per rank") {
    CHECK(make_context(5).threshold == Rational(3));
    CHECK(make_context(4).threshold == Rational(2));
    CHECK(make_context(3).threshold == Rational(1));
}

TEST_CASE("context census") {
    CHECK(make_context(3).wp0.size() == 8);
    CHECK(make_context(4).wp0.size() == 24);
    CHECK(make_context(5).wp0.size() == 24);
}

TEST_CASE("symbolic survivors match the recorded tables") {
    for (int n : {4, 5}) {
        const ClassifyContext ctx = make_context(n);
        const std::string expected =
            slurp(fixture_path("survivors_n" + std::to_string(n) + ".txt"));
        CHECK(survivor_lines(classify_symbolic(ctx)) == expected);
    }
}

TEST_CASE("record fields for a short survivor") {
    const ClassifyContext ctx = make_context(5);
    const auto recs = classify_symbolic(ctx);
    const GhostRecord& w2 = by_label(recs, "w2");
    CHECK(w2.length == 1);
    CHECK(w2.degree == 2);
    CHECK(w2.weight.render(RenderStyle::ConstantFirst) == "2-2a2-2c");
    CHECK(w2.n1.render(RenderStyle::VariableFirst) == "a2-1");
    CHECK(w2.n2.render(RenderStyle::VariableFirst) == "a1+1");
    CHECK(w2.offset.render(RenderStyle::ConstantFirst) == "-2a2");
    CHECK(w2.reduced_offset.render(RenderStyle::ConstantFirst) == "0");
    CHECK(condition_text(w2.survival) == "a1 = 0 and a2 = 0 and a3 = 0");
}

TEST_CASE("reduced offsets substitute only pinned coordinates") {
    const auto recs = classify_symbolic(make_context(5));
    CHECK(by_label(recs, "w19").reduced_offset.render(RenderStyle::ConstantFirst) == "1");
    CHECK(by_label(recs, "w24").reduced_offset.render(RenderStyle::ConstantFirst) ==
          "1+2a2");
}

TEST_CASE("filter verdicts for the long survivor") {
    const auto r5 = classify_symbolic(make_context(5));
    const GhostRecord& w24 = by_label(r5, "w24");
    CHECK(w24.f1.kind() == Condition::Kind::True);
    CHECK(condition_text(w24.f2) == "a2 = a3");
    CHECK(condition_text(w24.f3) == "a3 <= 1");
    CHECK(condition_text(w24.survival) == "a2 = a3 and a2 <= 1");

    const auto r4 = classify_symbolic(make_context(4));
    const GhostRecord& w24d = by_label(r4, "w24");
    CHECK(condition_text(w24d.f2) == "a2 = -a3");
    CHECK(condition_text(w24d.f3) == "a3 >= -1");
    CHECK(condition_text(w24d.survival) == "a2 = -a3 and a2 <= 1");
}

TEST_CASE("identity row fails the middle-weight cut") {
    const auto recs = classify_symbolic(make_context(5));
    const GhostRecord& w1 = by_label(recs, "w1");
    CHECK(w1.f1.kind() == Condition::Kind::False);
    CHECK(w1.survival.kind() == Condition::Kind::False);
}

TEST_CASE("concrete classification yields constant verdicts") {
    const ClassifyContext ctx = make_context(5);
    const auto recs = classify_concrete(ctx, {3, 2, 1}, 0);
    for (const GhostRecord& rec : recs) {
        CHECK(rec.survival.is_constant());
        CHECK(rec.f1.is_constant());
        CHECK(rec.f2.is_constant());
        CHECK(rec.f3.is_constant());
    }
    // A regular enough weight kills everything.
    for (const GhostRecord& rec : recs) CHECK_FALSE(record_survives(rec));
}

TEST_CASE("concrete spot checks") {
    {
        const ClassifyContext ctx = make_context(5);
        const auto recs = classify_concrete(ctx, {1, 1, 1}, 1);
        std::vector<std::string> alive;
        for (const GhostRecord& rec : recs)
            if (record_survives(rec)) alive.push_back(rec.label);
        REQUIRE(alive == std::vector<std::string>{"w24"});
        const GhostRecord& w24 = by_label(recs, "w24");
        CHECK(w24.degree == 7);
        CHECK(w24.reduced_offset.evaluate({1, 1, 1}, 1) == Rational(3));
    }
    {
        const ClassifyContext ctx = make_context(4);
        const auto recs = classify_concrete(ctx, {1, 1, -1}, 1);
        std::vector<std::string> alive;
        for (const GhostRecord& rec : recs)
            if (record_survives(rec)) alive.push_back(rec.label);
        REQUIRE(alive == std::vector<std::string>{"w24"});
        CHECK(by_label(recs, "w24").degree == 5);
        CHECK(by_label(recs, "w24").reduced_offset.evaluate({1, 1, -1}, 1) == Rational(3));
    }
}

TEST_CASE("symbolic and concrete verdicts agree on a sample") {
    const ClassifyContext ctx = make_context(4);
    const auto sym = classify_symbolic(ctx);
    const std::vector<long long> a = {2, 1, -1};
    const auto conc = classify_concrete(ctx, a, 0);
    REQUIRE(sym.size() == conc.size());
    for (std::size_t i = 0; i < sym.size(); ++i) {
        CHECK(eval_condition(sym[i].survival, a) ==
              (conc[i].survival.kind() == Condition::Kind::True));
    }
}

TEST_CASE("rows outside the tabulated ranks are flagged as extrapolations") {
    for (const GhostRecord& rec : classify_symbolic(make_context(6)))
        CHECK(rec.extrapolated);
    for (const GhostRecord& rec : classify_symbolic(make_context(5)))
        CHECK_FALSE(rec.extrapolated);
    for (const GhostRecord& rec : classify_symbolic(make_context(3)))
        CHECK(rec.extrapolated);
}
