// bitnum.hpp
// Arbitrary-precision positive integers stored as LSB-first bit sequences.
//
// Storage: one byte per bit, index 0 = least significant bit. The most
// significant stored bit is always 1, so the representation of every value
// is unique and bit_length() is just the sequence length. Zero is not a
// BitNum; every value is >= 1.
//
// Only the arithmetic the Collatz machinery needs lives here: ripple-carry
// addition, shifts, +/-1, multiplication by 3, small-modulus residues and
// decimal conversion. shift_add_triple() is the reference 3d+1 that the
// carry automaton in stepper.hpp is checked against, so it must never be
// written in terms of that automaton.

#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace collatzbits {

using Bit = std::uint8_t;

class ParseError : public std::invalid_argument {
public:
    ParseError(const std::string& what, std::size_t position)
        : std::invalid_argument(what + " (at position " + std::to_string(position) + ")")
        , position_(position)
    {}

    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

class BitNum {
public:
    /// The value 1.
    BitNum() : bits_{1} {}

    /// Builds from LSB-first bits; leading (high) zeros are dropped.
    /// Throws std::invalid_argument if no bit is set.
    static BitNum from_bits(std::vector<Bit> lsb_first)
    {
        while (!lsb_first.empty() && lsb_first.back() == 0) {
            lsb_first.pop_back();
        }
        if (lsb_first.empty()) {
            throw std::invalid_argument("BitNum: value must be >= 1");
        }
        for (Bit& b : lsb_first) {
            if (b > 1) {
                throw std::invalid_argument("BitNum: bits must be 0 or 1");
            }
        }
        BitNum n;
        n.bits_ = std::move(lsb_first);
        return n;
    }

    static BitNum from_u64(std::uint64_t value)
    {
        if (value == 0) {
            throw std::invalid_argument("BitNum: value must be >= 1");
        }
        std::vector<Bit> bits;
        for (; value != 0; value >>= 1) {
            bits.push_back(static_cast<Bit>(value & 1U));
        }
        BitNum n;
        n.bits_ = std::move(bits);
        return n;
    }

    std::size_t bit_length() const noexcept { return bits_.size(); }

    /// Bit i, or 0 past the most significant bit.
    Bit bit(std::size_t i) const noexcept { return i < bits_.size() ? bits_[i] : Bit{0}; }

    std::span<const Bit> bits() const noexcept { return bits_; }

    bool is_odd() const noexcept { return bits_[0] == 1; }
    bool is_one() const noexcept { return bits_.size() == 1; }

    /// Value as a machine integer when it fits in 64 bits.
    std::optional<std::uint64_t> to_u64() const noexcept
    {
        if (bits_.size() > 64) {
            return std::nullopt;
        }
        std::uint64_t v = 0;
        for (std::size_t i = bits_.size(); i-- > 0;) {
            v = (v << 1) | bits_[i];
        }
        return v;
    }

    friend bool operator==(const BitNum&, const BitNum&) = default;

    friend std::strong_ordering operator<=>(const BitNum& a, const BitNum& b) noexcept
    {
        if (a.bits_.size() != b.bits_.size()) {
            return a.bits_.size() <=> b.bits_.size();
        }
        for (std::size_t i = a.bits_.size(); i-- > 0;) {
            if (a.bits_[i] != b.bits_[i]) {
                return a.bits_[i] <=> b.bits_[i];
            }
        }
        return std::strong_ordering::equal;
    }

private:
    std::vector<Bit> bits_;
};

/// A BitNum whose bit 0 is 1.
class OddNum {
public:
    OddNum() = default;

    explicit OddNum(BitNum value) : value_(std::move(value))
    {
        if (!value_.is_odd()) {
            throw std::invalid_argument("OddNum: value is even");
        }
    }

    static OddNum from_u64(std::uint64_t value) { return OddNum(BitNum::from_u64(value)); }

    const BitNum& value() const noexcept { return value_; }
    operator const BitNum&() const noexcept { return value_; }

    std::size_t bit_length() const noexcept { return value_.bit_length(); }
    Bit bit(std::size_t i) const noexcept { return value_.bit(i); }
    bool is_one() const noexcept { return value_.is_one(); }
    std::optional<std::uint64_t> to_u64() const noexcept { return value_.to_u64(); }

    friend bool operator==(const OddNum&, const OddNum&) = default;
    friend std::strong_ordering operator<=>(const OddNum& a, const OddNum& b) noexcept
    {
        return a.value_ <=> b.value_;
    }

private:
    BitNum value_;
};

// ---------------------------------------------------------------------------
// Text forms
// ---------------------------------------------------------------------------

/// MSB-first '0'/'1' text, first character '1'.
inline BitNum parse_binary(std::string_view text)
{
    if (text.empty()) {
        throw ParseError("binary text is empty", 0);
    }
    for (std::size_t i = 0; i < text.size(); ++i) {
        if (text[i] != '0' && text[i] != '1') {
            throw ParseError(std::string("non-binary character '") + text[i] + "'", i);
        }
    }
    if (text[0] != '1') {
        throw ParseError("binary text has a leading zero", 0);
    }
    std::vector<Bit> bits(text.size());
    for (std::size_t i = 0; i < text.size(); ++i) {
        bits[text.size() - 1 - i] = static_cast<Bit>(text[i] - '0');
    }
    return BitNum::from_bits(std::move(bits));
}

inline std::string render_binary(const BitNum& n)
{
    std::string out;
    out.reserve(n.bit_length());
    for (std::size_t i = n.bit_length(); i-- > 0;) {
        out.push_back(static_cast<char>('0' + n.bit(i)));
    }
    return out;
}

namespace detail {

// In-place x = x*10 + digit on an LSB-first vector; may hold leading zeros.
inline void mul10_add(std::vector<Bit>& x, unsigned digit)
{
    // x*10 = (x << 3) + (x << 1)
    const std::size_t n = x.size();
    std::vector<Bit> out(n + 4, 0);
    unsigned carry = digit;
    for (std::size_t i = 0; i < out.size(); ++i) {
        unsigned s = carry;
        if (i >= 1 && i - 1 < n) s += x[i - 1];
        if (i >= 3 && i - 3 < n) s += x[i - 3];
        out[i] = static_cast<Bit>(s & 1U);
        carry = s >> 1;
    }
    while (out.size() > 1 && out.back() == 0) {
        out.pop_back();
    }
    x = std::move(out);
}

// Long division by a small divisor, MSB first; returns the remainder.
inline unsigned divmod_small(std::vector<Bit>& x, unsigned divisor)
{
    unsigned rem = 0;
    for (std::size_t i = x.size(); i-- > 0;) {
        rem = (rem << 1) | x[i];
        x[i] = static_cast<Bit>(rem >= divisor ? 1 : 0);
        if (rem >= divisor) rem -= divisor;
    }
    while (!x.empty() && x.back() == 0) {
        x.pop_back();
    }
    return rem;
}

} // namespace detail

inline BitNum from_decimal(std::string_view text)
{
    if (text.empty()) {
        throw ParseError("decimal text is empty", 0);
    }
    std::vector<Bit> acc{0};
    for (std::size_t i = 0; i < text.size(); ++i) {
        const char c = text[i];
        if (c < '0' || c > '9') {
            throw ParseError(std::string("non-decimal character '") + c + "'", i);
        }
        detail::mul10_add(acc, static_cast<unsigned>(c - '0'));
    }
    if (acc.size() == 1 && acc[0] == 0) {
        throw ParseError("value must be >= 1", 0);
    }
    return BitNum::from_bits(std::move(acc));
}

inline std::string to_decimal(const BitNum& n)
{
    std::vector<Bit> work(n.bits().begin(), n.bits().end());
    std::string digits;
    while (!work.empty()) {
        digits.push_back(static_cast<char>('0' + detail::divmod_small(work, 10)));
    }
    std::reverse(digits.begin(), digits.end());
    return digits;
}

// ---------------------------------------------------------------------------
// Arithmetic
// ---------------------------------------------------------------------------

inline std::size_t bit_length(const BitNum& n) noexcept { return n.bit_length(); }

/// Schoolbook ripple-carry a + b + carry_in.
inline BitNum add(const BitNum& a, const BitNum& b, unsigned carry_in = 0)
{
    const std::size_t len = std::max(a.bit_length(), b.bit_length());
    std::vector<Bit> out;
    out.reserve(len + 1);
    unsigned carry = carry_in;
    for (std::size_t i = 0; i < len; ++i) {
        const unsigned sum = a.bit(i) + b.bit(i) + carry;
        out.push_back(static_cast<Bit>(sum & 1U));
        carry = sum >> 1;
    }
    if (carry != 0) {
        out.push_back(1);
    }
    return BitNum::from_bits(std::move(out));
}

inline BitNum shift_left(const BitNum& n, std::size_t count)
{
    std::vector<Bit> out(count, 0);
    out.insert(out.end(), n.bits().begin(), n.bits().end());
    return BitNum::from_bits(std::move(out));
}

/// 2^exponent.
inline BitNum power_of_two(std::size_t exponent) { return shift_left(BitNum{}, exponent); }

inline BitNum increment(const BitNum& n) { return add(n, BitNum{}); }

/// n - 1; throws std::domain_error when n == 1.
inline BitNum decrement(const BitNum& n)
{
    if (n.is_one()) {
        throw std::domain_error("decrement: result would be zero");
    }
    std::vector<Bit> out(n.bits().begin(), n.bits().end());
    std::size_t i = 0;
    while (out[i] == 0) {
        out[i++] = 1;
    }
    out[i] = 0;
    return BitNum::from_bits(std::move(out));
}

/// 3n as (n << 1) + n.
inline BitNum times3(const BitNum& n) { return add(shift_left(n, 1), n); }

/// 3^exponent * n by repeated tripling.
inline BitNum times_power_of_three(BitNum n, std::size_t exponent)
{
    for (std::size_t i = 0; i < exponent; ++i) {
        n = times3(n);
    }
    return n;
}

/// n mod 3 from the bits alone: 2^i is 1 mod 3 for even i and 2 mod 3 for odd i.
inline unsigned mod3(const BitNum& n) noexcept
{
    std::size_t even = 0;
    std::size_t odd = 0;
    for (std::size_t i = 0; i < n.bit_length(); ++i) {
        (i % 2 == 0 ? even : odd) += n.bit(i);
    }
    return static_cast<unsigned>((even + 2 * odd) % 3);
}

/// n mod m for 1 <= m < 2^31. Powers of two read the low bits, 3 uses the
/// alternating sum, anything else falls back to Horner evaluation.
inline unsigned mod_small(const BitNum& n, unsigned m)
{
    if (m == 0) {
        throw std::invalid_argument("mod_small: modulus is zero");
    }
    if ((m & (m - 1)) == 0) {
        unsigned r = 0;
        for (std::size_t i = 0; (1U << i) < m; ++i) {
            r |= static_cast<unsigned>(n.bit(i)) << i;
        }
        return r;
    }
    if (m == 3) {
        return mod3(n);
    }
    std::uint64_t r = 0;
    for (std::size_t i = n.bit_length(); i-- > 0;) {
        r = ((r << 1) | n.bit(i)) % m;
    }
    return static_cast<unsigned>(r);
}

// ---------------------------------------------------------------------------
// Odd-number structure
// ---------------------------------------------------------------------------

/// Count of consecutive 1 bits from the least significant end.
inline std::size_t trailing_ones(const OddNum& n) noexcept
{
    std::size_t k = 0;
    while (k < n.bit_length() && n.bit(k) == 1) {
        ++k;
    }
    return k;
}

struct GkDecomposition {
    OddNum g;
    std::size_t k = 0;
};

/// n = g*2^k - 1 with g odd and k = trailing_ones(n).
inline GkDecomposition decompose_g_k(const OddNum& n)
{
    const std::size_t k = trailing_ones(n);
    // (n + 1) is n with the low k ones cleared and bit k set; dividing by 2^k
    // leaves bit k as the new bit 0.
    std::vector<Bit> g(n.value().bits().begin() + static_cast<std::ptrdiff_t>(k), n.value().bits().end());
    if (g.empty()) {
        g.push_back(1);
    } else {
        g[0] = 1;
    }
    return {OddNum(BitNum::from_bits(std::move(g))), k};
}

struct Stripped {
    OddNum odd;
    std::size_t w = 0;
};

/// n = odd * 2^w, w the 2-adic valuation of n.
inline Stripped strip_trailing_zeros(const BitNum& n)
{
    std::size_t w = 0;
    while (n.bit(w) == 0) {
        ++w;
    }
    std::vector<Bit> rest(n.bits().begin() + static_cast<std::ptrdiff_t>(w), n.bits().end());
    return {OddNum(BitNum::from_bits(std::move(rest))), w};
}

/// 3d + 1 computed as (d << 1) + d with a carry-in of 1, digit by digit.
inline BitNum shift_add_triple(const OddNum& d)
{
    const BitNum doubled = shift_left(d, 1);
    const BitNum& single = d;
    std::vector<Bit> sum;
    sum.reserve(doubled.bit_length() + 1);
    unsigned carry = 1;
    for (std::size_t i = 0; i < doubled.bit_length(); ++i) {
        const unsigned column = doubled.bit(i) + single.bit(i) + carry;
        sum.push_back(static_cast<Bit>(column % 2));
        carry = column / 2;
    }
    if (carry != 0) {
        sum.push_back(1);
    }
    return BitNum::from_bits(std::move(sum));
}

} // namespace collatzbits
