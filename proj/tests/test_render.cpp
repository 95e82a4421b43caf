#include <collatzbits/render.hpp>

#include <gtest/gtest.h>
#include <nlohmann/json.hpp>

#include <fstream>
#include <sstream>

using namespace collatzbits;

namespace {

std::string golden(const std::string& name)
{
    std::ifstream in(std::string(COLLATZBITS_GOLDEN_DIR) + "/" + name);
    EXPECT_TRUE(in.good()) << name;
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

std::vector<std::string> split(const std::string& s, const std::string& sep)
{
    std::vector<std::string> out;
    std::size_t start = 0;
    for (std::size_t pos; (pos = s.find(sep, start)) != std::string::npos; start = pos + sep.size()) {
        out.push_back(s.substr(start, pos - start));
    }
    out.push_back(s.substr(start));
    return out;
}

std::vector<std::string> lines(const std::string& s)
{
    auto v = split(s, "\n");
    if (!v.empty() && v.back().empty()) v.pop_back();
    return v;
}

} // namespace

TEST(Golden, ExampleA) { EXPECT_EQ(render_example_a(), golden("example_a.txt")); }
TEST(Golden, ExampleB) { EXPECT_EQ(render_example_b(), golden("example_b.txt")); }
TEST(Golden, ExampleC) { EXPECT_EQ(render_example_c(), golden("example_c.txt")); }
TEST(Golden, ExampleD) { EXPECT_EQ(render_example_d(), golden("example_d.txt")); }

TEST(Golden, AllSections)
{
    EXPECT_EQ(render_examples(), golden("example_a.txt") + "\n" + golden("example_b.txt") + "\n" +
                                     golden("example_c.txt") + "\n" + golden("example_d.txt"));
}

TEST(BitMatrix, MarksLowestZeroOnly)
{
    const auto rows = syracuse_trajectory(OddNum::from_u64(95), 1).rows; // 95, 143
    const auto out = lines(render_bit_matrix(rows));
    ASSERT_EQ(out.size(), 3U);
    EXPECT_EQ(out[0], "Base 10 | Binary   |  8  7  6  5  4  3  2  1");
    EXPECT_EQ(out[1], "     95 | 1011111  |     1 *0  1  1  1  1  1");
    EXPECT_EQ(out[2], "    143 | 10001111 |  1  0  0 *0  1  1  1  1");
}

TEST(Formats, TableCsvJsonlCarrySameData)
{
    const auto rows = accel_trajectory(OddNum::from_u64(63), 1000).rows;
    const auto table = lines(render_trajectory(rows, OutputFormat::Table));
    const auto csv = lines(render_trajectory(rows, OutputFormat::Csv));
    const auto jsonl = lines(render_trajectory(rows, OutputFormat::Jsonl));

    ASSERT_EQ(csv[0], kTrajectoryCsvHeader);
    ASSERT_EQ(table.size(), rows.size() + 1);
    ASSERT_EQ(csv.size(), rows.size() + 1);
    ASSERT_EQ(jsonl.size(), rows.size());

    const auto header = split(csv[0], ",");
    for (std::size_t i = 0; i < rows.size(); ++i) {
        const auto t = split(table[i + 1], " | ");
        const auto c = split(csv[i + 1], ",");
        const auto j = nlohmann::json::parse(jsonl[i]);
        ASSERT_EQ(t, c) << i;
        ASSERT_EQ(c.size(), header.size());
        for (std::size_t col = 0; col < header.size(); ++col) {
            const auto& field = j.at(header[col]);
            std::string as_text = field.is_null() ? "" : field.is_string() ? field.get<std::string>() : field.dump();
            EXPECT_EQ(as_text, c[col]) << header[col] << " row " << i;
        }
    }
}

TEST(Formats, PlainTrajectoryLeavesWBlank)
{
    const auto rows = syracuse_trajectory(OddNum::from_u64(31), 1000).rows;
    const auto csv = lines(render_trajectory(rows, OutputFormat::Csv));
    EXPECT_EQ(csv[1], "0,31,11111,5,,5,");
    EXPECT_EQ(csv[2], "1,47,101111,6,1,4,");
    EXPECT_EQ(csv.back(), "39,1,1,1,-2,1,");
}
