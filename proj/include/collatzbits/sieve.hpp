// sieve.hpp
// Residue restrictions on a smallest Collatz counterexample, and the
// trajectory check that retires surviving candidates at desk scale.
//
// A smallest counterexample n cannot be even, cannot be 2 mod 3 (its odd
// predecessor (2n-1)/3 would be smaller), cannot be 1 mod 4 ((3n+1)/2 would
// be even and the next value drops below n) and cannot be 3 mod 16
// ((9n+5)/4 would be divisible by 4). The survivors are 7, 15, 27, 31, 39
// and 43 mod 48.

#pragma once

#include "bitnum.hpp"
#include "stepper.hpp"

#include <array>
#include <cstddef>
#include <string_view>
#include <vector>

namespace collatzbits {

struct ResidueRule {
    unsigned modulus;
    unsigned residue;
    std::string_view label;

    bool matches(const BitNum& n) const { return mod_small(n, modulus) == residue; }

    friend bool operator==(const ResidueRule&, const ResidueRule&) = default;
};

inline constexpr std::array<ResidueRule, 4> kResidueRules{{
    {2, 0, "Restriction 1"},
    {4, 1, "Restriction 3"},
    {3, 2, "Restriction 2"},
    {16, 3, "Restriction 4"},
}};

/// Period of the combined rules, lcm(2, 4, 3, 16).
inline constexpr unsigned kSievePeriod = 48;

struct CandidateCheck {
    bool candidate = false;
    std::vector<ResidueRule> violated;
};

inline CandidateCheck is_candidate(const BitNum& n)
{
    CandidateCheck c;
    for (const ResidueRule& rule : kResidueRules) {
        if (rule.matches(n)) {
            c.violated.push_back(rule);
        }
    }
    c.candidate = c.violated.empty();
    return c;
}

inline std::vector<OddNum> candidates_up_to(const BitNum& limit)
{
    std::vector<OddNum> out;
    for (BitNum n; n <= limit; n = increment(n)) {
        if (is_candidate(n).candidate) {
            out.emplace_back(n);
        }
    }
    return out;
}

struct DropResult {
    bool dropped = false;
    std::size_t steps_taken = 0;
    OddNum min_odd_seen;
};

/// Iterates the reduced map from n until a value below n appears or
/// step_cap steps have been taken.
inline DropResult drops_below_self(const OddNum& n, std::size_t step_cap)
{
    DropResult r;
    r.min_odd_seen = n;
    OddNum current = n;
    while (r.steps_taken < step_cap) {
        current = syracuse_step(current).next;
        ++r.steps_taken;
        if (current < r.min_odd_seen) {
            r.min_odd_seen = current;
        }
        if (current < n) {
            r.dropped = true;
            break;
        }
    }
    return r;
}

} // namespace collatzbits
