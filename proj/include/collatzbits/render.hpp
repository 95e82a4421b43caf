// render.hpp
// Text, CSV and JSONL renderings of trajectories, the fixed-column bit
// matrix, and the four worked example tables.

#pragma once

#include "accel.hpp"
#include "bitnum.hpp"
#include "stepper.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <cstddef>
#include <iomanip>
#include <sstream>
#include <string>
#include <vector>

namespace collatzbits {

enum class OutputFormat { Table, Csv, Jsonl };

inline constexpr const char* kTrajectoryCsvHeader = "index,decimal,binary,bit_length,delta,k,w";

inline std::string render_trajectory(const std::vector<TrajectoryRow>& rows, OutputFormat format)
{
    std::ostringstream out;
    switch (format) {
    case OutputFormat::Table:
        out << "index | decimal | binary | bit_length | delta | k | w\n";
        for (const auto& r : rows) {
            out << r.index << " | " << to_decimal(r.value) << " | " << render_binary(r.value) << " | "
                << r.bit_length << " | ";
            if (r.delta) out << *r.delta;
            out << " | " << r.k << " | ";
            if (r.w) out << *r.w;
            out << '\n';
        }
        break;
    case OutputFormat::Csv:
        out << kTrajectoryCsvHeader << '\n';
        for (const auto& r : rows) {
            out << r.index << ',' << to_decimal(r.value) << ',' << render_binary(r.value) << ',' << r.bit_length
                << ',';
            if (r.delta) out << *r.delta;
            out << ',' << r.k << ',';
            if (r.w) out << *r.w;
            out << '\n';
        }
        break;
    case OutputFormat::Jsonl:
        for (const auto& r : rows) {
            nlohmann::ordered_json j;
            j["index"] = r.index;
            j["decimal"] = to_decimal(r.value); // string: values may exceed 64 bits
            j["binary"] = render_binary(r.value);
            j["bit_length"] = r.bit_length;
            j["delta"] = r.delta ? nlohmann::ordered_json(*r.delta) : nlohmann::ordered_json(nullptr);
            j["k"] = r.k;
            j["w"] = r.w ? nlohmann::ordered_json(*r.w) : nlohmann::ordered_json(nullptr);
            out << j.dump() << '\n';
        }
        break;
    }
    return out.str();
}

/// Bits laid out in fixed columns numbered from the right, the lowest zero
/// bit of each row marked "*0". Columns default to the widest row.
inline std::string render_bit_matrix(const std::vector<TrajectoryRow>& rows, std::size_t columns = 0)
{
    std::size_t dec_width = 7; // "Base 10"
    std::size_t bin_width = 6; // "Binary"
    for (const auto& r : rows) {
        columns = std::max(columns, r.bit_length);
        dec_width = std::max(dec_width, to_decimal(r.value).size());
        bin_width = std::max(bin_width, r.bit_length);
    }

    std::ostringstream out;
    out << std::left << std::setw(static_cast<int>(dec_width)) << "Base 10" << " | "
        << std::setw(static_cast<int>(bin_width)) << "Binary" << " |" << std::right;
    for (std::size_t c = columns; c >= 1; --c) {
        out << std::setw(3) << c;
    }
    out << '\n';

    for (const auto& r : rows) {
        out << std::right << std::setw(static_cast<int>(dec_width)) << to_decimal(r.value) << " | " << std::left
            << std::setw(static_cast<int>(bin_width)) << render_binary(r.value) << " |" << std::right;
        for (std::size_t p = columns; p-- > 0;) {
            if (p >= r.bit_length) {
                out << "   ";
            } else if (p == r.k) {
                out << " *0";
            } else {
                out << "  " << int{r.value.bit(p)};
            }
        }
        out << '\n';
    }
    return out.str();
}

// ---------------------------------------------------------------------------
// Worked examples
// ---------------------------------------------------------------------------

inline std::string render_example_a()
{
    const OddNum d(from_decimal("467"));
    const Algorithm1Result a1 = algorithm1_raw(d);
    const SyracuseStep step = syracuse_step(d);

    std::ostringstream out;
    out << "Example A\n";
    out << "467 = " << render_binary(d) << '\n';
    out << "Number row: 00" << render_binary(d) << '\n';
    for (const auto& line : format_trace(a1.trace)) {
        out << line << '\n';
    }
    out << "Next number: " << render_binary(step.next) << '\n';
    out << "This is " << to_decimal(step.next) << " in base 10\n";
    return out.str();
}

inline std::string render_example_b()
{
    const Trajectory t = syracuse_trajectory(OddNum(from_decimal("31")), 1000);
    std::ostringstream out;
    out << "Example B\n";
    out << "decimal | binary | bit_length | delta\n";
    for (const auto& r : t.rows) {
        out << to_decimal(r.value) << " | " << render_binary(r.value) << " | " << r.bit_length << " |";
        if (r.delta) out << ' ' << *r.delta;
        out << '\n';
    }
    return out.str();
}

inline std::string render_example_c()
{
    const Trajectory t = syracuse_trajectory(OddNum(from_decimal("63")), 1000);
    return "Example C\n" + render_bit_matrix(t.rows, 12);
}

inline std::string render_example_d()
{
    const OddNum start(from_decimal("63"));
    const Trajectory accel = accel_trajectory(start, 1000);
    const Trajectory plain = syracuse_trajectory(start, 1000);
    std::ostringstream out;
    out << "Example D\n" << render_bit_matrix(accel.rows, 12);
    out << "rows: " << accel.rows.size() << " accelerated, " << plain.rows.size() << " plain\n";
    return out.str();
}

inline std::string render_examples()
{
    return render_example_a() + '\n' + render_example_b() + '\n' + render_example_c() + '\n' + render_example_d();
}

} // namespace collatzbits
