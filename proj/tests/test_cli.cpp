// End-to-end tests against the built collatzbits binary.

#include <gtest/gtest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>

namespace {

struct CliResult {
    int code = -1;
    std::string out;
};

CliResult run(const std::string& args)
{
    const std::string cmd = std::string(COLLATZBITS_CLI) + " " + args + " 2>/dev/null";
    CliResult r;
    FILE* pipe = popen(cmd.c_str(), "r");
    if (pipe == nullptr) return r;
    char buf[4096];
    std::size_t n;
    while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, n);
    const int status = pclose(pipe);
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

std::vector<std::string> lines(const std::string& s)
{
    std::vector<std::string> out;
    std::istringstream in(s);
    for (std::string l; std::getline(in, l);) out.push_back(l);
    return out;
}

std::string golden(const std::string& name)
{
    std::ifstream in(std::string(COLLATZBITS_GOLDEN_DIR) + "/" + name);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

std::filesystem::path temp_file(const std::string& name)
{
    return std::filesystem::temp_directory_path() / ("collatzbits-cli-" + name);
}

} // namespace

TEST(CliStep, TraceOf467)
{
    const CliResult r = run("step 467 --trace");
    EXPECT_EQ(r.code, 0);
    const auto l = lines(r.out);
    ASSERT_FALSE(l.empty());
    EXPECT_NE(l.back().find("701"), std::string::npos);
    EXPECT_NE(l.back().find("1010111101"), std::string::npos);
    int writes = 0;
    for (const auto& line : l) writes += line.find("| write ") != std::string::npos ? 1 : 0;
    EXPECT_EQ(writes, 11);
}

TEST(CliStep, OneAndBinaryInput)
{
    const CliResult one = run("step 1");
    EXPECT_EQ(one.code, 0);
    EXPECT_NE(lines(one.out).back().find("n = 1 "), std::string::npos);

    const CliResult bin = run("step 0b11111");
    EXPECT_EQ(bin.code, 0);
    EXPECT_NE(lines(bin.out).back().find("n = 47 "), std::string::npos);
}

TEST(CliStep, UsageErrors)
{
    EXPECT_EQ(run("step 4").code, 2);
    EXPECT_EQ(run("step 0").code, 2);
    EXPECT_EQ(run("step -3").code, 2);
    EXPECT_EQ(run("step 0b012").code, 2);
    EXPECT_EQ(run("").code, 2);
    EXPECT_EQ(run("frobnicate").code, 2);
}

TEST(CliTraj, ExampleB)
{
    const CliResult r = run("traj 31 --format csv");
    EXPECT_EQ(r.code, 0);
    const auto l = lines(r.out);
    ASSERT_EQ(l.size(), 41U);
    EXPECT_EQ(l[0], "index,decimal,binary,bit_length,delta,k,w");
    // Delta column against the worked table.
    const std::vector<std::string> deltas = {"",  "1",  "1", "0",  "1",  "-1", "0",  "1", "-1", "1",
                                             "0", "0",  "1", "0",  "1",  "-1", "-1", "0", "1",  "0",
                                             "0", "0",  "0", "1",  "1",  "0",  "1",  "-2", "1", "1",
                                             "0", "-2", "-1", "0", "-3", "-1", "1",  "0", "-3", "-2"};
    for (std::size_t i = 0; i < deltas.size(); ++i) {
        std::vector<std::string> f;
        std::istringstream in(l[i + 1]);
        for (std::string x; std::getline(in, x, ',');) f.push_back(x);
        ASSERT_GE(f.size(), 5U);
        EXPECT_EQ(f[4], deltas[i]) << "row " << i;
    }
}

TEST(CliTraj, AccelAndOne)
{
    const CliResult accel = run("traj 63 --accel");
    EXPECT_EQ(accel.code, 0);
    EXPECT_EQ(lines(accel.out).size(), 17U); // header + 16 rows

    const CliResult one = run("traj 1");
    EXPECT_EQ(one.code, 0);
    EXPECT_EQ(lines(one.out).size(), 2U);
}

TEST(CliTraj, MatrixAndTruncation)
{
    const CliResult m = run("traj 63 --matrix");
    EXPECT_EQ(m.code, 0);
    EXPECT_EQ(lines(m.out).size(), 41U);

    const CliResult t = run("traj 27 --max-steps 5");
    EXPECT_EQ(t.code, 1);
    EXPECT_EQ(run("traj 27 --matrix --format csv").code, 2);
    EXPECT_EQ(run("traj 28").code, 2);
}

TEST(CliTraj, JsonlRows)
{
    const CliResult r = run("traj 63 --accel --format jsonl");
    EXPECT_EQ(r.code, 0);
    const auto l = lines(r.out);
    ASSERT_EQ(l.size(), 16U);
    EXPECT_EQ(l[1], R"({"index":1,"decimal":"91","binary":"1011011","bit_length":7,"delta":1,"k":2,"w":3})");
}

TEST(CliPredict, SingleValues)
{
    const CliResult a = run("predict 467");
    EXPECT_EQ(a.code, 0);
    EXPECT_EQ(lines(a.out).at(1), "467 | 111010011 | 1 | 1 | 1 | 111010011 | 0 | above | -1 | 1 | yes");

    const CliResult b = run("predict 5 --format csv");
    EXPECT_EQ(b.code, 0);
    EXPECT_EQ(lines(b.out).at(1), "5,101,1,4,-2,1,1,equal,2,-2,yes");
}

TEST(CliPredict, RangeSweep)
{
    const CliResult r = run("predict --range 3..99999");
    EXPECT_EQ(r.code, 0);
    const auto l = lines(r.out);
    ASSERT_EQ(l.size(), 2U);
    EXPECT_EQ(l[0], "decimal,binary,method1_delta,hew_shortening,actual_delta");
    EXPECT_EQ(l[1], "checked 49999 odd values, 0 disagreements");
}

TEST(CliPredict, UsageErrors)
{
    EXPECT_EQ(run("predict").code, 2);
    EXPECT_EQ(run("predict 5 --range 3..9").code, 2);
    EXPECT_EQ(run("predict --range 9..3").code, 2);
    EXPECT_EQ(run("predict --range 4..9").code, 2);
    EXPECT_EQ(run("predict 5 --format xml").code, 2);
}

TEST(CliVerify, SmallRanges)
{
    const CliResult single = run("verify --range 3..3");
    EXPECT_EQ(single.code, 0);
    EXPECT_EQ(lines(single.out).back(), "verify 3..3: checked 1, violations 0");

    const CliResult wider = run("verify --range 3..20001 --workers 2");
    EXPECT_EQ(wider.code, 0);
    EXPECT_EQ(lines(wider.out).back(), "verify 3..20001: checked 10000, violations 0");
}

TEST(CliVerify, InterruptedRunResumes)
{
    const auto ckpt = temp_file("resume.ckpt");
    std::filesystem::remove(ckpt);
    const std::string base = "verify --range 3..40001 --batch 1000 --checkpoint " + ckpt.string();

    const CliResult straight = run("verify --range 3..40001 --batch 1000");
    const CliResult partial = run(base + " --max-batches 7");
    EXPECT_EQ(partial.code, 1);
    const CliResult resumed = run(base);
    EXPECT_EQ(resumed.code, 0);
    EXPECT_EQ(resumed.out, straight.out);

    // Same checkpoint with different options is refused.
    EXPECT_EQ(run("verify --range 3..40003 --batch 1000 --checkpoint " + ckpt.string()).code, 2);
    std::filesystem::remove(ckpt);
}

TEST(CliSieve, Listing)
{
    const CliResult r = run("sieve 48");
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, "7\n15\n27\n31\n39\n43\n");

    const CliResult empty = run("sieve 6");
    EXPECT_EQ(empty.code, 0);
    EXPECT_EQ(empty.out, "");
}

TEST(CliSieve, CertifyAndExplain)
{
    const CliResult c = run("sieve 100 --certify");
    EXPECT_EQ(c.code, 0);
    const auto l = lines(c.out);
    ASSERT_EQ(l.size(), 13U);
    EXPECT_EQ(l.back(), "# certified 12 of 12 candidates (dropped below themselves within 10000 steps)");

    const CliResult e = run("sieve 6 --explain");
    EXPECT_EQ(e.code, 0);
    const auto el = lines(e.out);
    ASSERT_EQ(el.size(), 6U);
    EXPECT_EQ(el[1], "# 2 rejected: Restriction 1 (0 mod 2), Restriction 2 (2 mod 3)");
    EXPECT_EQ(el[2], "# 3 rejected: Restriction 4 (3 mod 16)");
}

TEST(CliBench, RowCounts)
{
    const CliResult a = run("bench --range 63..63");
    EXPECT_EQ(a.code, 0);
    EXPECT_NE(a.out.find("plain rows: 40\n"), std::string::npos);
    EXPECT_NE(a.out.find("accel rows: 16\n"), std::string::npos);

    const CliResult b = run("bench --range 31..31");
    EXPECT_NE(b.out.find("plain rows: 40\n"), std::string::npos);

    const CliResult c = run("bench --range 3..9999");
    EXPECT_EQ(c.code, 0);
    long plain = -1, accel = -1;
    for (const auto& line : lines(c.out)) {
        if (line.rfind("plain steps: ", 0) == 0) plain = std::stol(line.substr(13));
        if (line.rfind("accel steps: ", 0) == 0) accel = std::stol(line.substr(13));
    }
    EXPECT_GT(plain, 0);
    EXPECT_LT(accel, plain);
}

TEST(CliExamples, MatchesGoldenFiles)
{
    const CliResult r = run("examples");
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, golden("example_a.txt") + "\n" + golden("example_b.txt") + "\n" + golden("example_c.txt") +
                         "\n" + golden("example_d.txt"));
}
