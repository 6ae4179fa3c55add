#pragma once

#include <algorithm>
#include <functional>
#include <ostream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "ghost/checks.hpp"
#include "ghost/table.hpp"

namespace ghost {

inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitInternal = 3;

// Enumeration cost grows like 2^l l!, so cap the rank parameter where a
// single run still finishes in seconds.
inline constexpr int kMinN = 3;
inline constexpr int kMaxN = 13;

struct BoxRange {
    long long lo = 0;
    long long hi = 0;
};

namespace detail {

inline bool parse_integer(const std::string& text, long long& out) {
    if (text.empty()) return false;
    std::size_t used = 0;
    try {
        out = std::stoll(text, &used);
    } catch (const std::exception&) {
        return false;
    }
    return used == text.size();
}

}  // namespace detail

// "a1,a2,...".  Arity is checked later against the rank.
inline bool parse_csv_integers(const std::string& text, std::vector<long long>& out,
                               std::string& error) {
    out.clear();
    std::size_t start = 0;
    while (true) {
        const std::size_t comma = text.find(',', start);
        const std::string piece = text.substr(start, comma - start);
        long long value = 0;
        if (!detail::parse_integer(piece, value)) {
            error = "'" + piece + "' is not an integer";
            return false;
        }
        out.push_back(value);
        if (comma == std::string::npos) return true;
        start = comma + 1;
    }
}

// "a1=lo..hi,a2=lo..hi,...": every coordinate a1..a<rank> must get exactly one
// inclusive range.
inline bool parse_box(const std::string& text, int rank, std::vector<BoxRange>& out,
                      std::string& error) {
    out.assign(static_cast<std::size_t>(rank), BoxRange{});
    std::vector<bool> seen(static_cast<std::size_t>(rank), false);
    std::size_t start = 0;
    if (text.empty()) {
        error = "box is empty";
        return false;
    }
    while (start <= text.size()) {
        const std::size_t comma = text.find(',', start);
        const std::string piece = text.substr(start, comma - start);
        const std::size_t eq = piece.find('=');
        const std::size_t dots = piece.find("..");
        if (eq == std::string::npos || dots == std::string::npos || dots < eq) {
            error = "'" + piece + "' is not of the form a<k>=lo..hi";
            return false;
        }
        const std::string name = piece.substr(0, eq);
        long long index = 0;
        if (name.size() < 2 || name[0] != 'a' ||
            !detail::parse_integer(name.substr(1), index) || index < 1 || index > rank) {
            error = "'" + name + "' is not a weight coordinate (expected a1..a" +
                    std::to_string(rank) + ")";
            return false;
        }
        if (seen[static_cast<std::size_t>(index - 1)]) {
            error = "'" + name + "' appears twice";
            return false;
        }
        long long lo = 0, hi = 0;
        if (!detail::parse_integer(piece.substr(eq + 1, dots - eq - 1), lo) ||
            !detail::parse_integer(piece.substr(dots + 2), hi)) {
            error = "'" + piece + "' has a malformed bound";
            return false;
        }
        if (lo > hi) {
            error = "'" + piece + "' is an empty range (lo > hi)";
            return false;
        }
        seen[static_cast<std::size_t>(index - 1)] = true;
        out[static_cast<std::size_t>(index - 1)] = BoxRange{lo, hi};
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    for (int i = 0; i < rank; ++i)
        if (!seen[static_cast<std::size_t>(i)]) {
            error = "missing range for a" + std::to_string(i + 1);
            return false;
        }
    return true;
}

namespace detail {

inline int cmd_check(int max_n, const std::string& fixtures_dir, std::ostream& out) {
    const std::vector<InvariantResult> results = run_invariants(max_n, fixtures_dir);
    int passed = 0;
    for (const InvariantResult& r : results) {
        if (r.pass) {
            ++passed;
            out << "PASS " << r.name << "\n";
        } else {
            out << "FAIL " << r.name << ": " << r.detail << "\n";
        }
    }
    out << passed << "/" << results.size() << " invariant families passed\n";
    return passed == static_cast<int>(results.size()) ? kExitOk : kExitCheckFailed;
}

}  // namespace detail

inline int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"ghost-class explorer for rank-two orthogonal boundary cohomology"};
    app.require_subcommand(1);

    int n = 0;
    std::string lambda_text, box_text, format_text = "md", fixtures_dir = "fixtures";
    long long c_value = 0;
    int max_n = 8;
    bool extrapolate = false;

    CLI::App* table_cmd =
        app.add_subcommand("table", "print the minimal-representative table for one n");
    CLI::App* classify_cmd =
        app.add_subcommand("classify", "run the survival filters for one n");
    CLI::App* sweep_cmd =
        app.add_subcommand("sweep", "tally survivors over a box of highest weights");
    CLI::App* check_cmd = app.add_subcommand("check", "run the internal invariant families");

    for (CLI::App* sub : {table_cmd, classify_cmd, sweep_cmd}) {
        sub->add_option("--n", n, "rank parameter (3 <= n <= " + std::to_string(kMaxN) + ")")
            ->required();
        sub->add_option("--format", format_text, "output format")
            ->check(CLI::IsMember({"md", "csv", "json-lines"}));
        sub->add_flag("--extrapolate", extrapolate,
                      "silence the warning for n outside the tabulated cases 4 and 5");
    }
    for (CLI::App* sub : {table_cmd, classify_cmd}) {
        CLI::Option* lam = sub->add_option(
            "--lambda", lambda_text, "weight coordinates a1,...,al (symbolic when absent)");
        CLI::Option* cc = sub->add_option("--c", c_value, "similitude character");
        lam->needs(cc);
        cc->needs(lam);
    }
    sweep_cmd
        ->add_option("--box", box_text,
                     "inclusive coordinate ranges a1=lo..hi,...,al=lo..hi (all coordinates)")
        ->required();
    check_cmd->add_option("--max-n", max_n, "largest n to check")->check(CLI::Range(3, 10));
    check_cmd->add_option("--fixtures", fixtures_dir, "directory with the golden files");

    try {
        std::reverse(args.begin(), args.end());
        app.parse(args);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            out << app.help();
            return kExitOk;
        }
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }

    try {
        if (*check_cmd) return detail::cmd_check(max_n, fixtures_dir, out);

        if (n < kMinN || n > kMaxN) {
            err << "error: --n must lie in [" << kMinN << ", " << kMaxN << "]\n";
            return kExitUsage;
        }
        const OutputFormat fmt = *parse_format(format_text);
        const ClassifyContext ctx = make_context(n);
        if (n != 4 && n != 5 && !extrapolate)
            err << "warning: n=" << n
                << " is outside the tabulated cases 4 and 5; treating the output as an "
                   "extrapolation (pass --extrapolate to silence)\n";

        if (*sweep_cmd) {
            std::vector<BoxRange> box;
            std::string error;
            if (!parse_box(box_text, ctx.rs.rank, box, error)) {
                err << "error: invalid box: " << error << "\n";
                return kExitUsage;
            }
            SweepAccumulator acc;
            std::vector<long long> a(static_cast<std::size_t>(ctx.rs.rank), 0);
            // Odd lattice walker over the box; c is pinned to the parity
            // representative since no filter depends on it.
            const std::function<void(std::size_t)> walk = [&](std::size_t i) {
                if (i == a.size()) {
                    long long sum = 0;
                    for (long long x : a) sum += x;
                    const long long c = ((sum % 2) + 2) % 2;
                    if (!validate_highest_weight(ctx.rs, a, c).valid) return;
                    acc.add(classify_concrete(ctx, a, c));
                    return;
                }
                for (long long v = box[i].lo; v <= box[i].hi; ++v) {
                    a[i] = v;
                    walk(i + 1);
                }
            };
            walk(0);
            out << render_sweep(ctx, acc, fmt);
            return kExitOk;
        }

        std::vector<GhostRecord> records;
        if (lambda_text.empty()) {
            records = classify_symbolic(ctx);
        } else {
            std::vector<long long> a;
            std::string error;
            if (!parse_csv_integers(lambda_text, a, error)) {
                err << "error: invalid --lambda: " << error << "\n";
                return kExitUsage;
            }
            const WeightVerdict verdict = validate_highest_weight(ctx.rs, a, c_value);
            if (!verdict.valid) {
                err << "error: not a valid highest weight:\n";
                for (const std::string& p : verdict.problems) err << "  " << p << "\n";
                return kExitUsage;
            }
            records = classify_concrete(ctx, a, c_value);
        }

        if (*table_cmd) out << render_table(ctx, records, fmt);
        if (*classify_cmd) out << render_classify(ctx, records, fmt);
        return kExitOk;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return kExitInternal;
    }
}

}  // namespace ghost
