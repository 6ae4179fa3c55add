#pragma once

#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "json.hpp"

#include "ghost/ghostfilter.hpp"

namespace ghost {

// Output layer.  Three renderers (markdown, CSV, JSON lines) over the same
// row data; all deterministic, so repeated runs are byte-identical.

inline constexpr int kSchemaVersion = 1;

enum class OutputFormat { Markdown, Csv, JsonLines };

inline std::optional<OutputFormat> parse_format(const std::string& s) {
    if (s == "md") return OutputFormat::Markdown;
    if (s == "csv") return OutputFormat::Csv;
    if (s == "json-lines") return OutputFormat::JsonLines;
    return std::nullopt;
}

// RFC 4180 quoting; only applied when the field needs it, so plain fields
// stay byte-identical to the markdown cells.
inline std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out;
    out.push_back('"');
    for (char ch : s) {
        if (ch == '"') out.push_back('"');
        out.push_back(ch);
    }
    out.push_back('"');
    return out;
}

inline std::string md_row(const std::vector<std::string>& cells) {
    std::string out = "|";
    for (const std::string& c : cells) {
        out += ' ';
        out += c;
        out += " |";
    }
    out += '\n';
    return out;
}

inline std::string md_header(const std::vector<std::string>& cols) {
    std::string out = md_row(cols);
    out += '|';
    for (std::size_t i = 0; i < cols.size(); ++i) out += "---|";
    out += '\n';
    return out;
}

inline std::string csv_row(const std::vector<std::string>& cells) {
    std::string out;
    for (std::size_t i = 0; i < cells.size(); ++i) {
        if (i) out += ',';
        out += csv_field(cells[i]);
    }
    out += '\n';
    return out;
}

// Keys shared by every JSON-lines record, regardless of subcommand.
inline nlohmann::json record_json_base(const ClassifyContext& ctx, const GhostRecord& rec) {
    nlohmann::json j;
    j["schema_version"] = kSchemaVersion;
    j["n"] = ctx.rs.n;
    j["label"] = rec.label;
    j["sigma"] = sigma_text(rec.element, ctx.profile);
    j["f"] = f_text(rec.element);
    j["length"] = rec.length;
    j["degree"] = rec.degree;
    j["weight"] = rec.weight.render(RenderStyle::ConstantFirst);
    j["offset"] = rec.reduced_offset.render(RenderStyle::ConstantFirst);
    j["survival"] = condition_text(rec.survival);
    j["extrapolated"] = rec.extrapolated;
    return j;
}

// --- table ------------------------------------------------------------------

inline const std::vector<std::string>& table_columns() {
    static const std::vector<std::string> cols = {"w",  "sigma",         "f",  "length",
                                                  "weight+2c", "factorization", "n1", "n2"};
    return cols;
}

inline std::string factorization_text(const ClassifyContext& ctx, const GhostRecord& rec) {
    return element_label(ctx.labels, ctx.profile, rec.tilde2) + " " +
           element_label(ctx.labels, ctx.profile, rec.rep2);
}

inline std::vector<std::string> table_cells(const ClassifyContext& ctx, const GhostRecord& rec) {
    // The printed weight column drops the similitude part.  weight + 2*kappa
    // equals -2 n1 whether kappa is still symbolic or already a number.
    AffineForm weight_plus_2c = Rational(-2) * rec.n1;
    return {rec.label,
            sigma_text(rec.element, ctx.profile),
            f_text(rec.element),
            std::to_string(rec.length),
            weight_plus_2c.render(RenderStyle::ConstantFirst),
            factorization_text(ctx, rec),
            rec.n1.render(RenderStyle::VariableFirst),
            rec.n2.render(RenderStyle::VariableFirst)};
}

inline std::string render_table(const ClassifyContext& ctx, const std::vector<GhostRecord>& recs,
                                OutputFormat fmt) {
    std::string out;
    if (fmt == OutputFormat::Markdown) out += md_header(table_columns());
    if (fmt == OutputFormat::Csv) out += csv_row(table_columns());
    for (const GhostRecord& rec : recs) {
        if (fmt == OutputFormat::JsonLines) {
            nlohmann::json j = record_json_base(ctx, rec);
            j["factorization"] = factorization_text(ctx, rec);
            j["n1"] = rec.n1.render(RenderStyle::VariableFirst);
            j["n2"] = rec.n2.render(RenderStyle::VariableFirst);
            out += j.dump();
            out += '\n';
        } else {
            const auto cells = table_cells(ctx, rec);
            out += fmt == OutputFormat::Markdown ? md_row(cells) : csv_row(cells);
        }
    }
    return out;
}

// --- classify ----------------------------------------------------------------

inline bool record_survives(const GhostRecord& rec) {
    return rec.survival.kind() != Condition::Kind::False;
}

// Survivors first (in enumeration order), then the eliminated rows.
inline std::vector<const GhostRecord*> survivors_first(const std::vector<GhostRecord>& recs) {
    std::vector<const GhostRecord*> order;
    for (const GhostRecord& r : recs)
        if (record_survives(r)) order.push_back(&r);
    for (const GhostRecord& r : recs)
        if (!record_survives(r)) order.push_back(&r);
    return order;
}

inline const std::vector<std::string>& classify_columns() {
    static const std::vector<std::string> cols = {"w",  "degree", "weight", "offset",
                                                  "f1", "f2",     "f3",     "survival"};
    return cols;
}

inline std::vector<std::string> classify_cells(const GhostRecord& rec) {
    return {rec.label,
            std::to_string(rec.degree),
            rec.weight.render(RenderStyle::ConstantFirst),
            rec.reduced_offset.render(RenderStyle::ConstantFirst),
            condition_text(rec.f1),
            condition_text(rec.f2),
            condition_text(rec.f3),
            condition_text(rec.survival)};
}

inline std::string render_classify(const ClassifyContext& ctx,
                                   const std::vector<GhostRecord>& recs, OutputFormat fmt) {
    std::string out;
    if (fmt == OutputFormat::Markdown) out += md_header(classify_columns());
    if (fmt == OutputFormat::Csv) out += csv_row(classify_columns());
    for (const GhostRecord* rec : survivors_first(recs)) {
        if (fmt == OutputFormat::JsonLines) {
            nlohmann::json j = record_json_base(ctx, *rec);
            j["f1"] = condition_text(rec->f1);
            j["f2"] = condition_text(rec->f2);
            j["f3"] = condition_text(rec->f3);
            out += j.dump();
            out += '\n';
        } else {
            const auto cells = classify_cells(*rec);
            out += fmt == OutputFormat::Markdown ? md_row(cells) : csv_row(cells);
        }
    }
    return out;
}

// --- sweep --------------------------------------------------------------------

// Survivor tallies keyed by (position in the enumeration, degree, offset).
// Keying by position rather than label keeps the report in table order.
class SweepAccumulator {
public:
    using Key = std::tuple<std::size_t, long long, long long>;

    void add(const std::vector<GhostRecord>& recs) {
        for (std::size_t pos = 0; pos < recs.size(); ++pos) {
            const GhostRecord& rec = recs[pos];
            if (rec.survival.kind() != Condition::Kind::True) continue;
            long long offset = rec.reduced_offset.constant_term().as_integer();
            ++counts_[Key{pos, rec.degree, offset}];
        }
    }

    const std::map<Key, long long>& counts() const { return counts_; }

private:
    std::map<Key, long long> counts_;
};

inline const std::vector<std::string>& sweep_columns() {
    static const std::vector<std::string> cols = {"w", "sigma", "f", "degree", "offset", "count"};
    return cols;
}

inline std::string render_sweep(const ClassifyContext& ctx, const SweepAccumulator& acc,
                                OutputFormat fmt) {
    std::string out;
    if (fmt == OutputFormat::Markdown) out += md_header(sweep_columns());
    if (fmt == OutputFormat::Csv) out += csv_row(sweep_columns());
    for (const auto& [key, count] : acc.counts()) {
        const auto& [pos, degree, offset] = key;
        const WeylElement& w = ctx.wp0.at(pos);
        const std::string label = element_label(ctx.labels, ctx.profile, w);
        if (fmt == OutputFormat::JsonLines) {
            nlohmann::json j;
            j["schema_version"] = kSchemaVersion;
            j["n"] = ctx.rs.n;
            j["label"] = label;
            j["sigma"] = sigma_text(w, ctx.profile);
            j["f"] = f_text(w);
            j["length"] = length(ctx.rs, w);
            j["degree"] = degree;
            j["weight"] = nullptr;  // aggregated over many weights
            j["offset"] = std::to_string(offset);
            j["survival"] = "true";
            j["extrapolated"] = ctx.rs.n != 4 && ctx.rs.n != 5;
            j["count"] = count;
            out += j.dump();
            out += '\n';
        } else {
            const std::vector<std::string> cells = {label,
                                                    sigma_text(w, ctx.profile),
                                                    f_text(w),
                                                    std::to_string(degree),
                                                    std::to_string(offset),
                                                    std::to_string(count)};
            out += fmt == OutputFormat::Markdown ? md_row(cells) : csv_row(cells);
        }
    }
    return out;
}

}  // namespace ghost
