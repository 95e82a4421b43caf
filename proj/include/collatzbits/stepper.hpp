// stepper.hpp
// The two-bit-window carry automaton for the reduced (odd-to-odd) Collatz
// map, plus trajectories and the per-step bit-pattern observations.
//
// The automaton reads d with two zeros prepended on the significant side,
// right to left, one overlapping pair (bit i+1, bit i) per written bit. It
// is the binary adder for 2d + d + 1: the pair is the two operand bits of
// column i+1, the flag is the carry, and the initial "write 0, Flag = 1"
// is column 0 (1 + 0 + carry-in 1). The table below is the literal branch
// list; a static_assert checks it against that reading at compile
// time.

#pragma once

#include "bitnum.hpp"

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace collatzbits {

struct Transition {
    Bit write;
    Bit next_flag;
};

/// Indexed [flag][pair], pair = 2*high + low.
inline constexpr std::array<std::array<Transition, 4>, 2> kTransitions{{
    {{{0, 0}, {1, 0}, {1, 0}, {0, 1}}}, // flag 0: 00, 01, 10, 11
    {{{1, 0}, {0, 1}, {0, 1}, {1, 1}}}, // flag 1: 00, 01, 10, 11
}};

constexpr Transition transition(Bit flag, Bit high, Bit low) noexcept
{
    return kTransitions[flag][2U * high + low];
}

namespace detail {
constexpr bool transitions_match_adder()
{
    for (unsigned f = 0; f < 2; ++f) {
        for (unsigned p = 0; p < 4; ++p) {
            const unsigned sum = (p >> 1) + (p & 1U) + f;
            const Transition t = kTransitions[f][p];
            if (t.write != sum % 2 || t.next_flag != sum / 2) {
                return false;
            }
        }
    }
    return true;
}
} // namespace detail

static_assert(detail::transitions_match_adder(), "transition table is not the 2d + d + 1 adder");

struct StepRecord {
    std::size_t position = 0;            // index of the bit written
    std::optional<std::array<Bit, 2>> pair; // {high, low}; empty for the initial write
    std::optional<Bit> flag_before;      // empty for the initial write
    Bit written = 0;
    Bit flag_after = 0;
};

struct StepTrace {
    std::vector<StepRecord> records;
    std::vector<Bit> written; // LSB-first, untrimmed (length bit_length(d) + 2)
};

/// Runs the automaton over d and hands each StepRecord to sink. Returns the
/// written bits, LSB-first, untrimmed.
template <typename Sink>
std::vector<Bit> run_automaton(const OddNum& d, Sink&& sink)
{
    const std::size_t len = d.bit_length();
    std::vector<Bit> written;
    written.reserve(len + 2);

    Bit flag = 1;
    written.push_back(0);
    sink(StepRecord{0, std::nullopt, std::nullopt, 0, flag});

    // Number row is d followed by two zeros; d.bit() already reads 0 past
    // the top, so pairs i = 0 .. len run over the padded row.
    for (std::size_t i = 0; i <= len; ++i) {
        const Bit high = d.bit(i + 1);
        const Bit low = d.bit(i);
        const Transition t = transition(flag, high, low);
        written.push_back(t.write);
        sink(StepRecord{i + 1, std::array<Bit, 2>{high, low}, flag, t.write, t.next_flag});
        flag = t.next_flag;
    }
    return written;
}

struct Algorithm1Result {
    BitNum value; // 3d + 1, leading zero dropped
    StepTrace trace;
};

inline Algorithm1Result algorithm1_raw(const OddNum& d)
{
    StepTrace trace;
    trace.records.reserve(d.bit_length() + 2);
    trace.written = run_automaton(d, [&](const StepRecord& r) { trace.records.push_back(r); });
    BitNum value = BitNum::from_bits(trace.written);
    return {std::move(value), std::move(trace)};
}

struct SyracuseStep {
    OddNum next;
    std::size_t w = 0;
};

/// Reduced map: d -> (3d + 1) / 2^w.
inline SyracuseStep syracuse_step(const OddNum& d)
{
    auto written = run_automaton(d, [](const StepRecord&) {});
    auto [odd, w] = strip_trailing_zeros(BitNum::from_bits(std::move(written)));
    return {std::move(odd), w};
}

/// f(n) = n/2 for even n, (3n + 1)/2 for odd n.
inline BitNum forward_step(const BitNum& n)
{
    if (!n.is_odd()) {
        std::vector<Bit> rest(n.bits().begin() + 1, n.bits().end());
        return BitNum::from_bits(std::move(rest));
    }
    const BitNum triple = shift_add_triple(OddNum(n));
    std::vector<Bit> rest(triple.bits().begin() + 1, triple.bits().end());
    return BitNum::from_bits(std::move(rest));
}

// ---------------------------------------------------------------------------
// Trajectories
// ---------------------------------------------------------------------------

struct TrajectoryRow {
    std::size_t index = 0;
    OddNum value;
    std::size_t bit_length = 0;
    std::optional<long> delta;     // bit length change from the previous row
    std::size_t k = 0;             // trailing ones of value
    std::optional<std::size_t> w;  // powers of two removed to reach value (accelerated rows only)
};

struct Trajectory {
    std::vector<TrajectoryRow> rows;
    bool complete = false; // reached 1; false means max_steps ran out first
};

namespace detail {
inline TrajectoryRow make_row(std::size_t index, OddNum value, const TrajectoryRow* previous)
{
    TrajectoryRow row;
    row.index = index;
    row.bit_length = value.bit_length();
    row.k = trailing_ones(value);
    if (previous != nullptr) {
        row.delta = static_cast<long>(row.bit_length) - static_cast<long>(previous->bit_length);
    }
    row.value = std::move(value);
    return row;
}
} // namespace detail

inline Trajectory syracuse_trajectory(const OddNum& start, std::size_t max_steps)
{
    Trajectory t;
    t.rows.push_back(detail::make_row(0, start, nullptr));
    for (std::size_t step = 0; step < max_steps && !t.rows.back().value.is_one(); ++step) {
        OddNum next = syracuse_step(t.rows.back().value).next;
        t.rows.push_back(detail::make_row(t.rows.size(), std::move(next), &t.rows.back()));
    }
    t.complete = t.rows.back().value.is_one();
    return t;
}

// ---------------------------------------------------------------------------
// Observations
// ---------------------------------------------------------------------------

enum class Observation {
    LeadingBitMovesAtMostOne, // delta <= +1
    EndsZeroOneNoGrowth,      // value = 1 mod 4 => next delta <= 0
    LowestZeroShiftsRight,    // k >= 2 => next k = k - 1
};

inline const char* observation_name(Observation o) noexcept
{
    switch (o) {
    case Observation::LeadingBitMovesAtMostOne: return "1a";
    case Observation::EndsZeroOneNoGrowth: return "1c";
    case Observation::LowestZeroShiftsRight: return "2a";
    }
    return "?";
}

struct ObservationViolation {
    std::size_t index; // row where the offending transition lands
    Observation which;
};

/// Checks one transition from `from` to `to` against all three observations.
template <typename Out>
void check_transition(const TrajectoryRow& from, const TrajectoryRow& to, Out&& out)
{
    const long delta = static_cast<long>(to.bit_length) - static_cast<long>(from.bit_length);
    if (delta > 1) {
        out(ObservationViolation{to.index, Observation::LeadingBitMovesAtMostOne});
    }
    if (from.value.bit(1) == 0 && delta > 0) {
        out(ObservationViolation{to.index, Observation::EndsZeroOneNoGrowth});
    }
    if (from.k >= 2 && to.k != from.k - 1) {
        out(ObservationViolation{to.index, Observation::LowestZeroShiftsRight});
    }
}

inline std::vector<ObservationViolation> check_observations(const std::vector<TrajectoryRow>& rows)
{
    std::vector<ObservationViolation> report;
    for (std::size_t i = 1; i < rows.size(); ++i) {
        check_transition(rows[i - 1], rows[i], [&](ObservationViolation v) { report.push_back(v); });
    }
    return report;
}

// ---------------------------------------------------------------------------
// Trace rendering
// ---------------------------------------------------------------------------

/// One line per automaton step:
///   written-bits-so-far | Flag=f | pair=xy | action
/// Flag is the value the step was taken under (the set value for the
/// initial write, which consumes no pair).
inline std::vector<std::string> format_trace(const StepTrace& trace)
{
    std::vector<std::string> lines;
    std::string so_far;
    for (const StepRecord& r : trace.records) {
        so_far.insert(so_far.begin(), static_cast<char>('0' + r.written));
        std::ostringstream line;
        line << so_far << " | Flag=";
        if (!r.pair) {
            line << int{r.flag_after} << " | pair=-- | write " << int{r.written} << ", set Flag=" << int{r.flag_after};
        } else {
            line << int{*r.flag_before} << " | pair=" << int{(*r.pair)[0]} << int{(*r.pair)[1]} << " | write "
                 << int{r.written};
            if (r.flag_after != *r.flag_before) {
                line << ", set Flag=" << int{r.flag_after};
            }
        }
        lines.push_back(line.str());
    }
    return lines;
}

} // namespace collatzbits
