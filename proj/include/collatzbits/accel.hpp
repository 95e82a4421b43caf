// accel.hpp
// Accelerated stepping over a whole ascending run.
//
// Write odd n as g*2^k - 1 (k = trailing ones). Applying f k times climbs
// strictly to the even peak g*3^k - 1; stripping all factors of two from
// the peak gives the same odd number as k reduced steps. Everything stays
// integral: the peak is built by k triplings of g, and the (3/2)^k ratio is
// checked in cross-multiplied form.

#pragma once

#include "bitnum.hpp"
#include "stepper.hpp"

#include <cstddef>
#include <vector>

namespace collatzbits {

struct AccelStep {
    OddNum start;
    OddNum g;
    std::size_t k = 0;
    BitNum peak;
    std::size_t w = 0;
    OddNum next;
};

inline BitNum peak_value(const OddNum& n)
{
    const auto [g, k] = decompose_g_k(n);
    return decrement(times_power_of_three(g, k));
}

inline AccelStep accel_step(const OddNum& n)
{
    auto [g, k] = decompose_g_k(n);
    BitNum peak = decrement(times_power_of_three(g, k));
    auto [next, w] = strip_trailing_zeros(peak);
    return {n, std::move(g), k, std::move(peak), w, std::move(next)};
}

/// 2^k * (2^w * next + 1) == 3^k * (start + 1)
inline bool ratio_identity_holds(const AccelStep& s)
{
    const BitNum lhs = shift_left(increment(shift_left(s.next, s.w)), s.k);
    const BitNum rhs = times_power_of_three(increment(s.start), s.k);
    return lhs == rhs;
}

/// Rows carry k of their own value and w, the powers of two stripped from
/// the peak that produced them (empty on row 0).
inline Trajectory accel_trajectory(const OddNum& start, std::size_t max_steps)
{
    Trajectory t;
    t.rows.push_back(detail::make_row(0, start, nullptr));
    for (std::size_t step = 0; step < max_steps && !t.rows.back().value.is_one(); ++step) {
        AccelStep s = accel_step(t.rows.back().value);
        TrajectoryRow row = detail::make_row(t.rows.size(), std::move(s.next), &t.rows.back());
        row.w = s.w;
        t.rows.push_back(std::move(row));
    }
    t.complete = t.rows.back().value.is_one();
    return t;
}

} // namespace collatzbits
