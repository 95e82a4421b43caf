// commands.hpp
// Command implementations behind the collatzbits CLI. Each command writes
// to the given streams and returns the process exit code:
//   0 success, 1 property violation or truncation, 2 usage/config error.

#pragma once

#include <collatzbits/collatzbits.hpp>

#include <nlohmann/json.hpp>

#include <chrono>
#include <cstddef>
#include <iomanip>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

namespace collatzbits::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitViolation = 1;
inline constexpr int kExitUsage = 2;

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Decimal, or binary with a "0b" prefix.
inline BitNum parse_value(std::string_view text)
{
    try {
        if (text.starts_with("0b")) {
            return parse_binary(text.substr(2));
        }
        return from_decimal(text);
    } catch (const ParseError& e) {
        throw UsageError("invalid value '" + std::string(text) + "': " + e.what());
    }
}

inline OddNum parse_odd(std::string_view text)
{
    BitNum v = parse_value(text);
    if (!v.is_odd()) {
        throw UsageError("value '" + std::string(text) + "' must be odd");
    }
    return OddNum(std::move(v));
}

struct OddRange {
    OddNum lo;
    OddNum hi;
};

/// "lo..hi"; lo must be odd, an even hi is lowered to the odd below it.
inline OddRange parse_range(std::string_view text)
{
    const auto dots = text.find("..");
    if (dots == std::string_view::npos) {
        throw UsageError("range '" + std::string(text) + "' must look like lo..hi");
    }
    OddNum lo = parse_odd(text.substr(0, dots));
    BitNum hi = parse_value(text.substr(dots + 2));
    if (hi < lo.value()) {
        throw UsageError("range '" + std::string(text) + "' has lo > hi");
    }
    if (!hi.is_odd()) {
        hi = decrement(hi);
    }
    return {std::move(lo), OddNum(std::move(hi))};
}

inline OutputFormat parse_format(std::string_view text)
{
    if (text == "table") return OutputFormat::Table;
    if (text == "csv") return OutputFormat::Csv;
    if (text == "jsonl") return OutputFormat::Jsonl;
    throw UsageError("unknown format '" + std::string(text) + "'");
}

// ---------------------------------------------------------------------------

inline int cmd_step(const std::string& value, bool trace, std::ostream& out)
{
    const OddNum d = parse_odd(value);
    if (trace) {
        const Algorithm1Result a1 = algorithm1_raw(d);
        out << "Number row: 00" << render_binary(d) << '\n';
        for (const auto& line : format_trace(a1.trace)) {
            out << line << '\n';
        }
    }
    const SyracuseStep s = syracuse_step(d);
    out << "d = " << to_decimal(d) << " (" << render_binary(d) << ")\n";
    out << "n = " << to_decimal(s.next) << " (" << render_binary(s.next) << "), w = " << s.w << '\n';
    return kExitOk;
}

struct TrajOptions {
    std::string start;
    bool accel = false;
    bool matrix = false;
    std::size_t max_steps = 100000;
    std::string format = "table";
};

inline int cmd_traj(const TrajOptions& o, std::ostream& out, std::ostream& err)
{
    const OddNum start = parse_odd(o.start);
    const OutputFormat format = parse_format(o.format);
    if (o.matrix && format != OutputFormat::Table) {
        throw UsageError("--matrix only applies to --format table");
    }
    if (o.max_steps == 0) {
        throw UsageError("--max-steps must be >= 1");
    }
    const Trajectory t = o.accel ? accel_trajectory(start, o.max_steps) : syracuse_trajectory(start, o.max_steps);
    out << (o.matrix ? render_bit_matrix(t.rows) : render_trajectory(t.rows, format));
    if (!t.complete) {
        err << "trajectory truncated: 1 not reached within " << o.max_steps << " steps\n";
        return kExitViolation;
    }
    return kExitOk;
}

// ---------------------------------------------------------------------------

inline void write_prediction(const PredictorRow& r, OutputFormat format, std::ostream& out)
{
    const std::string hew = r.hew_shortening ? std::to_string(*r.hew_shortening) : "impossible";
    switch (format) {
    case OutputFormat::Table:
        out << to_decimal(r.x) << " | " << render_binary(r.x) << " | " << int{r.method1.flag} << " | "
            << r.method1.num << " | " << r.method1.delta << " | " << r.hew.u << " | " << r.hew.n << " | "
            << to_string(r.hew.s_hat) << " | " << hew << " | " << r.actual_delta << " | "
            << (r.agrees() ? "yes" : "NO") << '\n';
        break;
    case OutputFormat::Csv:
        out << to_decimal(r.x) << ',' << render_binary(r.x) << ',' << int{r.method1.flag} << ',' << r.method1.num
            << ',' << r.method1.delta << ',' << r.hew.u << ',' << r.hew.n << ',' << to_string(r.hew.s_hat) << ','
            << hew << ',' << r.actual_delta << ',' << (r.agrees() ? "yes" : "no") << '\n';
        break;
    case OutputFormat::Jsonl: {
        nlohmann::ordered_json j;
        j["decimal"] = to_decimal(r.x);
        j["binary"] = render_binary(r.x);
        j["flag"] = r.method1.flag;
        j["num"] = r.method1.num;
        j["method1_delta"] = r.method1.delta;
        j["hew_u"] = r.hew.u;
        j["hew_n"] = r.hew.n;
        j["s_hat"] = to_string(r.hew.s_hat);
        j["hew_shortening"] = r.hew_shortening ? nlohmann::ordered_json(*r.hew_shortening) : nlohmann::ordered_json(nullptr);
        j["actual_delta"] = r.actual_delta;
        j["agree"] = r.agrees();
        out << j.dump() << '\n';
        break;
    }
    }
}

inline constexpr const char* kPredictionColumns[] = {
    "decimal", "binary", "flag", "num", "method1_delta", "hew_u", "hew_n", "s_hat", "hew_shortening",
    "actual_delta", "agree"};

inline void write_prediction_header(OutputFormat format, std::ostream& out)
{
    if (format == OutputFormat::Jsonl) {
        return;
    }
    const char* sep = format == OutputFormat::Table ? " | " : ",";
    bool first = true;
    for (const char* c : kPredictionColumns) {
        out << (first ? "" : sep) << c;
        first = false;
    }
    out << '\n';
}

struct PredictOptions {
    std::optional<std::string> value;
    std::optional<std::string> range;
    bool all = false; // with --range, print every row instead of only disagreements
    unsigned workers = 1;
    std::string format = "table";
};

inline int cmd_predict(const PredictOptions& o, std::ostream& out, std::ostream& err)
{
    const OutputFormat format = parse_format(o.format);
    if (o.value.has_value() == o.range.has_value()) {
        throw UsageError("predict takes exactly one of VALUE or --range");
    }
    if (o.value) {
        const PredictorRow row = predict(parse_odd(*o.value));
        write_prediction_header(format, out);
        write_prediction(row, format, out);
        return row.agrees() ? kExitOk : kExitViolation;
    }

    const OddRange r = parse_range(*o.range);
    std::uint64_t checked = 0;
    std::size_t disagreements = 0;
    if (o.all) {
        write_prediction_header(format, out);
        for (BitNum x = r.lo; x <= r.hi.value(); x = add(x, BitNum::from_u64(2))) {
            const PredictorRow row = predict(OddNum(x));
            write_prediction(row, format, out);
            ++checked;
            disagreements += row.agrees() ? 0 : 1;
        }
    } else {
        const auto report = compare_predictors(r.lo, r.hi, o.workers);
        if (format == OutputFormat::Jsonl) {
            for (const auto& row : report) write_prediction(row, format, out);
        } else {
            out << kDisagreementCsvHeader << '\n';
            for (const auto& row : report) out << disagreement_csv(row) << '\n';
        }
        disagreements = report.size();
        for (BitNum x = r.lo; x <= r.hi.value(); x = add(x, BitNum::from_u64(2))) ++checked;
    }
    (format == OutputFormat::Table ? out : err)
        << "checked " << checked << " odd values, " << disagreements << " disagreements\n";
    return disagreements == 0 ? kExitOk : kExitViolation;
}

// ---------------------------------------------------------------------------

struct VerifyCliOptions {
    std::string range;
    std::optional<std::string> checkpoint;
    unsigned workers = 1;
    std::size_t batch = 4096;
    std::optional<std::size_t> max_batches;
};

inline int cmd_verify(const VerifyCliOptions& o, std::ostream& out, std::ostream& err)
{
    const OddRange r = parse_range(o.range);
    VerifyOptions opts;
    opts.lo = r.lo;
    opts.hi = r.hi;
    opts.batch = o.batch;
    opts.workers = o.workers;
    if (o.checkpoint) opts.checkpoint = *o.checkpoint;
    opts.max_batches = o.max_batches;

    VerifyOutcome outcome;
    try {
        outcome = run_verify(opts);
    } catch (const CheckpointError& e) {
        throw UsageError(e.what());
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }

    for (const auto& v : outcome.violations) {
        err << "violation " << v.check << " at " << to_decimal(v.value) << " (" << render_binary(v.value) << ")\n";
    }
    if (!outcome.complete) {
        out << "verify " << to_decimal(r.lo) << ".." << to_decimal(r.hi) << ": incomplete, checked "
            << outcome.checked << ", violations " << outcome.violation_count << '\n';
        return kExitViolation;
    }
    out << "verify " << to_decimal(r.lo) << ".." << to_decimal(r.hi) << ": checked " << outcome.checked
        << ", violations " << outcome.violation_count << '\n';
    return outcome.violation_count == 0 ? kExitOk : kExitViolation;
}

// ---------------------------------------------------------------------------

struct SieveOptions {
    std::string limit;
    bool certify = false;
    bool explain = false;
    std::size_t step_cap = 10000;
};

inline int cmd_sieve(const SieveOptions& o, std::ostream& out)
{
    const BitNum limit = parse_value(o.limit);
    if (o.explain) {
        for (BitNum n; n <= limit; n = increment(n)) {
            const CandidateCheck c = is_candidate(n);
            if (c.candidate) {
                out << to_decimal(n) << '\n';
                continue;
            }
            out << "# " << to_decimal(n) << " rejected:";
            for (std::size_t i = 0; i < c.violated.size(); ++i) {
                out << (i == 0 ? " " : ", ") << c.violated[i].label << " (" << c.violated[i].residue << " mod "
                    << c.violated[i].modulus << ')';
            }
            out << '\n';
        }
    }
    const auto candidates = candidates_up_to(limit);
    if (!o.explain) {
        for (const auto& c : candidates) out << to_decimal(c) << '\n';
    }
    if (!o.certify) {
        return kExitOk;
    }
    std::size_t failures = 0;
    for (const auto& c : candidates) {
        const DropResult d = drops_below_self(c, o.step_cap);
        if (!d.dropped) {
            ++failures;
            out << "# not certified: " << to_decimal(c) << " stayed >= itself for " << d.steps_taken << " steps\n";
        }
    }
    out << "# certified " << candidates.size() - failures << " of " << candidates.size()
        << " candidates (dropped below themselves within " << o.step_cap << " steps)\n";
    return failures == 0 ? kExitOk : kExitViolation;
}

// ---------------------------------------------------------------------------

struct BenchOptions {
    std::string range;
    std::size_t reps = 1;
    std::size_t max_steps = 100000;
};

struct BenchTotals {
    std::uint64_t values = 0;
    std::uint64_t plain_rows = 0;
    std::uint64_t accel_rows = 0;
    std::uint64_t truncated = 0;
};

inline int cmd_bench(const BenchOptions& o, std::ostream& out)
{
    const OddRange r = parse_range(o.range);
    if (o.reps == 0) {
        throw UsageError("--reps must be >= 1");
    }
    using clock = std::chrono::steady_clock;
    BenchTotals totals;
    double best_plain = 0;
    double best_accel = 0;
    for (std::size_t rep = 0; rep < o.reps; ++rep) {
        BenchTotals t;
        double plain_ms = 0;
        double accel_ms = 0;
        for (BitNum x = r.lo; x <= r.hi.value(); x = add(x, BitNum::from_u64(2))) {
            const OddNum start(x);
            auto t0 = clock::now();
            const Trajectory plain = syracuse_trajectory(start, o.max_steps);
            auto t1 = clock::now();
            const Trajectory accel = accel_trajectory(start, o.max_steps);
            auto t2 = clock::now();
            plain_ms += std::chrono::duration<double, std::milli>(t1 - t0).count();
            accel_ms += std::chrono::duration<double, std::milli>(t2 - t1).count();
            ++t.values;
            t.plain_rows += plain.rows.size();
            t.accel_rows += accel.rows.size();
            t.truncated += (plain.complete && accel.complete) ? 0 : 1;
        }
        totals = t;
        best_plain = rep == 0 ? plain_ms : std::min(best_plain, plain_ms);
        best_accel = rep == 0 ? accel_ms : std::min(best_accel, accel_ms);
    }
    const std::uint64_t plain_steps = totals.plain_rows - totals.values;
    const std::uint64_t accel_steps = totals.accel_rows - totals.values;
    out << "range: " << to_decimal(r.lo) << ".." << to_decimal(r.hi) << '\n';
    out << "values: " << totals.values << '\n';
    out << "plain rows: " << totals.plain_rows << '\n';
    out << "accel rows: " << totals.accel_rows << '\n';
    out << "plain steps: " << plain_steps << '\n';
    out << "accel steps: " << accel_steps << '\n';
    out << std::fixed << std::setprecision(3);
    if (accel_steps > 0) {
        out << "step ratio: " << static_cast<double>(plain_steps) / static_cast<double>(accel_steps) << '\n';
    }
    out << "plain time ms (best of " << o.reps << "): " << best_plain << '\n';
    out << "accel time ms (best of " << o.reps << "): " << best_accel << '\n';
    if (totals.truncated != 0) {
        out << "truncated trajectories: " << totals.truncated << '\n';
        return kExitViolation;
    }
    return kExitOk;
}

inline int cmd_examples(std::ostream& out)
{
    out << render_examples();
    return kExitOk;
}

} // namespace collatzbits::cli
