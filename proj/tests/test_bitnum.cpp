#include <collatzbits/bitnum.hpp>

#include "oracle.hpp"

#include <gtest/gtest.h>

#include <string>

using namespace collatzbits;

namespace {

OddNum odd(std::uint64_t v) { return OddNum::from_u64(v); }
BitNum num(std::uint64_t v) { return BitNum::from_u64(v); }

} // namespace

TEST(BitNum, ParseBinary)
{
    EXPECT_EQ(parse_binary("111010011").to_u64(), 467U);
    EXPECT_EQ(parse_binary("1").to_u64(), 1U);
    EXPECT_EQ(parse_binary("1010111101").to_u64(), 701U);
}

TEST(BitNum, ParseBinaryErrorsNamePosition)
{
    try {
        parse_binary("1102");
        FAIL() << "expected ParseError";
    } catch (const ParseError& e) {
        EXPECT_EQ(e.position(), 3U);
    }
    EXPECT_THROW(parse_binary(""), ParseError);
    try {
        parse_binary("0101");
        FAIL() << "expected ParseError";
    } catch (const ParseError& e) {
        EXPECT_EQ(e.position(), 0U);
    }
}

TEST(BitNum, RenderBinary)
{
    EXPECT_EQ(render_binary(num(701)), "1010111101");
    EXPECT_EQ(render_binary(num(1)), "1");
    EXPECT_EQ(render_binary(num(2429)), "100101111101");
}

TEST(BitNum, Decimal)
{
    EXPECT_EQ(from_decimal("467"), num(467));
    EXPECT_EQ(from_decimal("1"), num(1));
    EXPECT_EQ(render_binary(from_decimal("3077")), "110000000101");
    EXPECT_EQ(to_decimal(num(3077)), "3077");
}

TEST(BitNum, DecimalBeyondMachineWidth)
{
    // 2^100 + 1
    const std::string text = "1267650600228229401496703205377";
    const BitNum n = from_decimal(text);
    EXPECT_EQ(n.bit_length(), 101U);
    EXPECT_EQ(n.bit(0), 1);
    EXPECT_EQ(n.bit(100), 1);
    for (std::size_t i = 1; i < 100; ++i) {
        ASSERT_EQ(n.bit(i), 0) << i;
    }
    EXPECT_EQ(to_decimal(n), text);
    EXPECT_FALSE(n.to_u64().has_value());
}

TEST(BitNum, DecimalErrors)
{
    EXPECT_THROW(from_decimal(""), ParseError);
    EXPECT_THROW(from_decimal("0"), ParseError);
    EXPECT_THROW(from_decimal("000"), ParseError);
    try {
        from_decimal("12a4");
        FAIL();
    } catch (const ParseError& e) {
        EXPECT_EQ(e.position(), 2U);
    }
    EXPECT_EQ(from_decimal("007"), num(7));
}

TEST(BitNum, ConstructionRejectsZeroAndEven)
{
    EXPECT_THROW(BitNum::from_u64(0), std::invalid_argument);
    EXPECT_THROW(BitNum::from_bits({0, 0}), std::invalid_argument);
    EXPECT_THROW(OddNum(num(4)), std::invalid_argument);
    EXPECT_EQ(BitNum::from_bits({1, 0, 1, 0, 0}).bit_length(), 3U);
}

TEST(BitNum, BitLength)
{
    EXPECT_EQ(bit_length(num(31)), 5U);
    EXPECT_EQ(bit_length(num(1)), 1U);
    EXPECT_EQ(bit_length(num(593)), 10U);
}

TEST(BitNum, TrailingOnes)
{
    EXPECT_EQ(trailing_ones(odd(79)), 4U);
    EXPECT_EQ(trailing_ones(odd(127)), 7U);
    EXPECT_EQ(trailing_ones(odd(1)), 1U);
}

TEST(BitNum, DecomposeGk)
{
    auto [g79, k79] = decompose_g_k(odd(79));
    EXPECT_EQ(g79, odd(5));
    EXPECT_EQ(k79, 4U);
    auto [g127, k127] = decompose_g_k(odd(127));
    EXPECT_EQ(g127, odd(1));
    EXPECT_EQ(k127, 7U);
    auto [g63, k63] = decompose_g_k(odd(63));
    EXPECT_EQ(g63, odd(1));
    EXPECT_EQ(k63, 6U);
}

TEST(BitNum, StripTrailingZeros)
{
    auto a = strip_trailing_zeros(num(1402));
    EXPECT_EQ(a.odd, odd(701));
    EXPECT_EQ(a.w, 1U);
    auto b = strip_trailing_zeros(num(728));
    EXPECT_EQ(b.odd, odd(91));
    EXPECT_EQ(b.w, 3U);
    auto c = strip_trailing_zeros(num(7));
    EXPECT_EQ(c.odd, odd(7));
    EXPECT_EQ(c.w, 0U);
}

TEST(BitNum, ShiftAddTriple)
{
    EXPECT_EQ(shift_add_triple(odd(467)), num(1402));
    EXPECT_EQ(shift_add_triple(odd(1)), num(4));
    EXPECT_EQ(shift_add_triple(odd(31)), num(94));
}

TEST(BitNum, ArithmeticHelpers)
{
    EXPECT_EQ(add(num(255), num(1)), num(256));
    EXPECT_EQ(decrement(num(256)), num(255));
    EXPECT_THROW(decrement(num(1)), std::domain_error);
    EXPECT_EQ(times_power_of_three(num(5), 4), num(405));
    EXPECT_EQ(power_of_two(10), num(1024));
    EXPECT_LT(num(1023), num(1024));
    EXPECT_GT(num(6), num(5));
}

TEST(BitNum, ModSmallMatchesMachineModulo)
{
    for (std::uint64_t n = 1; n < 5000; ++n) {
        for (unsigned m : {2U, 3U, 4U, 5U, 7U, 16U, 48U}) {
            ASSERT_EQ(mod_small(num(n), m), n % m) << n << " mod " << m;
        }
    }
}

// Exhaustive properties over the 20-bit range.

TEST(BitNumProperty, RoundTripsBelow2To20)
{
    for (std::uint64_t n = 1; n < (1U << 20); ++n) {
        const BitNum b = num(n);
        const std::string dec = std::to_string(n);
        ASSERT_EQ(to_decimal(from_decimal(dec)), dec);
        ASSERT_EQ(parse_binary(render_binary(b)), b);
        ASSERT_EQ(static_cast<int>(b.bit_length()), oracle::bit_length(n));
    }
}

TEST(BitNumProperty, DecomposeRecomposeBelow2To20)
{
    for (std::uint64_t n = 1; n < (1U << 20); n += 2) {
        auto [g, k] = decompose_g_k(odd(n));
        const std::uint64_t gv = *g.to_u64();
        ASSERT_EQ(gv % 2, 1U);
        ASSERT_GE(k, 1U);
        ASSERT_EQ((gv << k) - 1, n);
        ASSERT_EQ(static_cast<int>(k), oracle::trailing_ones(n));
    }
}

TEST(BitNumProperty, TripleIsEvenAndGrowsOneOrTwoBits)
{
    for (std::uint64_t d = 1; d < (1U << 20); d += 2) {
        const BitNum t = shift_add_triple(odd(d));
        ASSERT_EQ(t.to_u64(), 3 * d + 1);
        ASSERT_EQ(t.bit(0), 0);
        const auto s = strip_trailing_zeros(t);
        ASSERT_EQ(s.odd.bit(0), 1);
        const std::size_t grow = t.bit_length() - bit_length(num(d));
        ASSERT_TRUE(grow == 1 || grow == 2) << d;
    }
}
