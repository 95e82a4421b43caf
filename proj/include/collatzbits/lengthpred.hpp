// lengthpred.hpp
// Two predictors for the bit-length change of the reduced Collatz map, and
// a harness that checks both against the actual step.
//
// method1_delta works on d with a single zero prepended. Its Flag is the
// carry out of the 2d + d + 1 addition (so it says whether 3d + 1 reaches
// bit_length(d) + 2 bits), and Num, the alternating run from bit 0, is the
// number of trailing zeros of 3d + 1. Num is counted on the zero-extended
// sequence; counting on d alone gets d = 5, 21, 85, ... wrong by one.
//
// hew_shortening is the u[01]^n table. The s-hat vs 2/3 comparison is done
// exactly as 3x + 1 vs 2^(L+1).

#pragma once

#include "bitnum.hpp"
#include "stepper.hpp"

#include <algorithm>
#include <cstddef>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

namespace collatzbits {

struct Method1Result {
    Bit flag = 1;
    std::size_t num = 1;
    long delta = 0; // 1 + flag - num

    friend bool operator==(const Method1Result&, const Method1Result&) = default;
};

inline Method1Result method1_delta(const OddNum& d)
{
    const std::size_t len = d.bit_length();

    Bit flag = 1;
    for (std::size_t i = 0; i < len; ++i) {
        const Bit high = d.bit(i + 1); // bit len is the prepended zero
        const Bit low = d.bit(i);
        if (flag == 1 && high == 0 && low == 0) {
            flag = 0;
        } else if (flag == 0 && high == 1 && low == 1) {
            flag = 1;
        }
    }

    std::size_t num = 1;
    while (num < len + 1 && d.bit(num) != d.bit(num - 1)) {
        ++num;
    }

    return {flag, num, 1 + static_cast<long>(flag) - static_cast<long>(num)};
}

enum class SHatComparison { Below, Equal, Above };

inline const char* to_string(SHatComparison c) noexcept
{
    switch (c) {
    case SHatComparison::Below: return "below";
    case SHatComparison::Equal: return "equal";
    case SHatComparison::Above: return "above";
    }
    return "?";
}

struct HewDecomposition {
    std::string u;     // MSB-first prefix
    std::size_t n = 0; // trailing "01" blocks
    SHatComparison s_hat = SHatComparison::Below;

    friend bool operator==(const HewDecomposition&, const HewDecomposition&) = default;
};

inline HewDecomposition hew_decompose(const OddNum& x)
{
    std::string u = render_binary(x);
    std::size_t n = 0;
    while (u.size() > 2 && u.compare(u.size() - 2, 2, "01") == 0) {
        u.resize(u.size() - 2);
        ++n;
    }

    const BitNum lhs = shift_add_triple(x);
    const BitNum rhs = power_of_two(x.bit_length() + 1);
    const auto order = lhs <=> rhs;
    const SHatComparison cmp = order < 0 ? SHatComparison::Below
        : order == 0                     ? SHatComparison::Equal
                                         : SHatComparison::Above;
    return {std::move(u), n, cmp};
}

/// Raised for the table's empty cell (u ends in 0 with s-hat exactly 2/3).
class ImpossibleHewCase : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// Bits by which the next odd number is shorter than x; negative when longer.
inline long hew_shortening(const HewDecomposition& h)
{
    const long n = static_cast<long>(h.n);
    if (h.u.back() == '0') {
        switch (h.s_hat) {
        case SHatComparison::Below: return 2 * n - 1;
        case SHatComparison::Above: return 2 * n - 2;
        case SHatComparison::Equal: throw ImpossibleHewCase("u ends in 0 with s-hat = 2/3");
        }
    }
    switch (h.s_hat) {
    case SHatComparison::Below: return 2 * n;
    case SHatComparison::Equal: return 2 * n;
    case SHatComparison::Above: return 2 * n - 1;
    }
    return 0;
}

inline long hew_shortening(const OddNum& x) { return hew_shortening(hew_decompose(x)); }

// ---------------------------------------------------------------------------
// Differential comparison
// ---------------------------------------------------------------------------

struct PredictorRow {
    OddNum x;
    Method1Result method1;
    HewDecomposition hew;
    std::optional<long> hew_shortening; // empty if the impossible cell was hit
    long actual_delta = 0;

    bool agrees() const noexcept
    {
        return hew_shortening.has_value() && method1.delta == actual_delta && -*hew_shortening == actual_delta;
    }
};

inline PredictorRow predict(const OddNum& x)
{
    PredictorRow row;
    row.x = x;
    row.method1 = method1_delta(x);
    row.hew = hew_decompose(x);
    try {
        row.hew_shortening = hew_shortening(row.hew);
    } catch (const ImpossibleHewCase&) {
        row.hew_shortening.reset();
    }
    row.actual_delta =
        static_cast<long>(syracuse_step(x).next.bit_length()) - static_cast<long>(x.bit_length());
    return row;
}

/// CSV header and row for disagreement reports.
inline constexpr const char* kDisagreementCsvHeader = "decimal,binary,method1_delta,hew_shortening,actual_delta";

inline std::string disagreement_csv(const PredictorRow& r)
{
    std::ostringstream out;
    out << to_decimal(r.x) << ',' << render_binary(r.x) << ',' << r.method1.delta << ',';
    if (r.hew_shortening) {
        out << *r.hew_shortening;
    } else {
        out << "impossible";
    }
    out << ',' << r.actual_delta;
    return out.str();
}

/// Every odd x in [lo, hi] whose predictions disagree with each other or
/// with the actual step. Work is split into contiguous shards, one per
/// worker; the merged report is in ascending x regardless of worker count.
inline std::vector<PredictorRow> compare_predictors(const OddNum& lo, const OddNum& hi, unsigned workers = 1)
{
    if (hi < lo) {
        throw std::invalid_argument("compare_predictors: lo > hi");
    }
    std::vector<OddNum> values;
    for (BitNum x = lo; x <= hi.value(); x = add(x, BitNum::from_u64(2))) {
        values.emplace_back(x);
    }

    workers = std::max(1U, workers);
    std::vector<std::vector<PredictorRow>> shards(workers);
    const std::size_t per = (values.size() + workers - 1) / workers;
    auto run = [&](unsigned s) {
        const std::size_t begin = std::min(values.size(), s * per);
        const std::size_t end = std::min(values.size(), begin + per);
        for (std::size_t i = begin; i < end; ++i) {
            PredictorRow row = predict(values[i]);
            if (!row.agrees()) {
                shards[s].push_back(std::move(row));
            }
        }
    };
    if (workers == 1) {
        run(0);
    } else {
        std::vector<std::jthread> pool;
        for (unsigned s = 0; s < workers; ++s) {
            pool.emplace_back(run, s);
        }
    }

    std::vector<PredictorRow> report;
    for (auto& shard : shards) {
        std::move(shard.begin(), shard.end(), std::back_inserter(report));
    }
    return report;
}

} // namespace collatzbits
