#include <gtest/gtest.h>

#include <unistd.h>

#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include <nakayama/io/notation.hpp>
#include <nakayama/io/report.hpp>
#include <nakayama/io/reproduce.hpp>
#include <nakayama/io/sweep.hpp>

#include "support.hpp"

using namespace nakayama;
namespace fs = std::filesystem;

namespace
{

const kupisch_series ex_cyclic = kupisch_series::validate({3, 3, 4}, true);
const kupisch_series ex_linear = kupisch_series::validate({3, 3, 3, 3, 2, 1}, false);

std::string read_file(const fs::path &p)
{
    std::ifstream in(p);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

fs::path temp_file(const std::string &name)
{
    return fs::temp_directory_path() / ("nakayama_io_test_" + std::to_string(::getpid()) + "_" + name);
}

} // namespace

TEST(Notation, ParseSeries)
{
    EXPECT_EQ(io::parse_lengths("3,3,4"), (std::vector<int>{3, 3, 4}));
    EXPECT_EQ(io::parse_lengths(" 3, 3 ,4 "), (std::vector<int>{3, 3, 4}));
    EXPECT_THROW(io::parse_lengths(""), parse_error);
    EXPECT_THROW(io::parse_lengths("3,,4"), parse_error);
    EXPECT_THROW(io::parse_lengths("3;4"), parse_error);
    EXPECT_THROW(io::parse_kupisch("3,1,4", true), not_admissible);
}

TEST(Notation, ParseModules)
{
    EXPECT_EQ(io::parse_module(ex_cyclic, "M(1,2)"), module_sum(interval_module{1, 2}));
    EXPECT_EQ(io::parse_module(ex_cyclic, "S(2) + P(3)"),
              (module_sum{interval_module{2, 1}, interval_module{3, 4}}));
    EXPECT_EQ(io::parse_module(ex_cyclic, "I(2)"), module_sum(interval_module{3, 3}));
    EXPECT_EQ(io::parse_module(ex_cyclic, "0"), module_sum());
    EXPECT_EQ(io::parse_module(ex_cyclic, "M(4,2)"), module_sum(interval_module{1, 2}));
    EXPECT_THROW(io::parse_module(ex_cyclic, "M(1,4)"), invalid_module);
    EXPECT_THROW(io::parse_module(ex_cyclic, "Q(1)"), parse_error);
    EXPECT_THROW(io::parse_module(ex_cyclic, "M(1,2"), parse_error);
    EXPECT_THROW(io::parse_module(ex_cyclic, "M(1,2)+"), parse_error);
    EXPECT_THROW(io::parse_module(ex_linear, "S(7)"), invalid_module);
}

TEST(Notation, FormatRoundTrips)
{
    EXPECT_EQ(io::format_module(module_sum(interval_module{4, 1})), "S(4)");
    EXPECT_EQ(io::format_module(module_sum{interval_module{1, 2}, interval_module{2, 1}}), "M(1,2) + S(2)");
    EXPECT_EQ(io::format_module(module_sum()), "0");
    std::mt19937_64 rng(37);
    for (int t = 0; t < 30; ++t) {
        const auto alg = test_support::random_series(rng);
        const auto inds = indecomposables(alg);
        std::uniform_int_distribution<std::size_t> pick(0, inds.size() - 1);
        const module_sum m{inds[pick(rng)], inds[pick(rng)], inds[pick(rng)]};
        EXPECT_EQ(io::parse_module(alg, io::format_module(m)), m);
    }
}

TEST(Report, KeysInFixedOrder)
{
    const auto j = io::to_json(classify(ex_cyclic));
    std::vector<std::string> keys;
    for (const auto &[k, v] : j.items()) {
        keys.push_back(k);
    }
    EXPECT_EQ(keys, (std::vector<std::string>{"kupisch", "cyclic", "regular_id", "regular_id_left", "domdim", "gldim",
                                              "gorenstein_degree", "self_injective", "minimal_ag_n", "n_auslander_n",
                                              "prinj", "simple_gpd", "theorem_verdicts"}));
    EXPECT_EQ(j["gldim"], "infinity");
    EXPECT_EQ(j["minimal_ag_n"], 1);
    EXPECT_TRUE(j["n_auslander_n"].is_null());
    EXPECT_EQ(io::to_json(classify(ex_linear))["n_auslander_n"], 2);
}

TEST(Report, ExtendedNatRoundTrip)
{
    for (const extended_nat x : {extended_nat(0), extended_nat(7), extended_nat::infinity()}) {
        EXPECT_EQ(io::extended_nat_from_json(io::to_json(x)), x);
    }
    EXPECT_THROW(io::extended_nat_from_json(io::json(-1)), parse_error);
    EXPECT_THROW(io::extended_nat_from_json(io::json("inf")), parse_error);
}

TEST(Sweep, EnumerationMatchesBruteForce)
{
    io::sweep_spec s;
    s.max_vertices = 5;
    s.max_length = 6;
    const auto got = io::enumerate_algebras(s);
    auto expect = test_support::brute_force_algebras(5, 6);
    ASSERT_EQ(got.size(), expect.size());
    std::set<std::string> a, b;
    for (const auto &x : got) {
        a.insert(x.to_string());
        EXPECT_EQ(x.canonical().lengths(), x.lengths());
    }
    for (const auto &x : expect) {
        b.insert(x.to_string());
    }
    EXPECT_EQ(a, b);
}

TEST(Sweep, ShapesAndTrivialBound)
{
    io::sweep_spec s;
    s.max_vertices = 6;
    s.max_length = 1;
    const auto only = io::enumerate_algebras(s);
    ASSERT_EQ(only.size(), 1u);
    EXPECT_EQ(only.front().to_string(), "[1]l");

    s.max_length = 4;
    s.max_vertices = 3;
    s.shape = io::sweep_shape::cyclic;
    bool found = false;
    for (const auto &a : io::enumerate_algebras(s)) {
        EXPECT_TRUE(a.cyclic());
        found = found || a == ex_cyclic;
    }
    EXPECT_TRUE(found);
    EXPECT_THROW(io::parse_shape("round"), parse_error);
    s.max_vertices = 0;
    EXPECT_THROW(io::run_sweep(s), precondition_failed);
}

TEST(Sweep, RediscoversReferenceAlgebras)
{
    io::sweep_spec s;
    s.max_vertices = 6;
    s.max_length = 3;
    s.shape = io::sweep_shape::linear;
    s.output = temp_file("linear.jsonl").string();
    const auto summary = io::run_sweep(s);
    EXPECT_TRUE(summary.failures.empty());
    bool found = false;
    std::ifstream in(s.output);
    std::string line;
    while (std::getline(in, line)) {
        const auto j = io::json::parse(line);
        if (j["kupisch"] == io::json({3, 3, 3, 3, 2, 1})) {
            found = true;
            EXPECT_EQ(j["n_auslander_n"], 2);
        }
    }
    EXPECT_TRUE(found);
    fs::remove(s.output);
}

TEST(Sweep, DeterministicAcrossJobsAndResumable)
{
    io::sweep_spec s;
    s.max_vertices = 4;
    s.max_length = 5;
    s.chunk = 7;
    s.output = temp_file("one.jsonl").string();
    s.jobs = 1;
    const auto one = io::run_sweep(s);
    const std::string a = read_file(s.output);

    s.output = temp_file("four.jsonl").string();
    s.jobs = 4;
    io::run_sweep(s);
    const std::string b = read_file(s.output);
    EXPECT_EQ(a, b);

    // Keep the first 10 lines plus a torn one, then resume.
    std::istringstream lines(a);
    std::string text, partial;
    for (int i = 0; i < 10 && std::getline(lines, text); ++i) {
        partial += text + "\n";
    }
    partial += "{\"kupisch\":[2,";
    {
        std::ofstream out(s.output, std::ios::trunc);
        out << partial;
    }
    s.resume = true;
    const auto resumed = io::run_sweep(s);
    EXPECT_EQ(resumed.skipped, 10u);
    EXPECT_EQ(resumed.processed + resumed.skipped, one.processed);
    EXPECT_EQ(read_file(s.output), a);
    EXPECT_EQ(resumed.to_json(), [&] {
        auto j = one.to_json();
        j["processed"] = resumed.processed;
        j["skipped"] = resumed.skipped;
        return j;
    }());

    fs::remove(temp_file("one.jsonl"));
    fs::remove(temp_file("four.jsonl"));
}

TEST(Reproduce, AllRowsMatch)
{
    std::ostringstream a, b;
    EXPECT_TRUE(io::print_reproduce_table(a, io::reproduce_rows()));
    io::print_reproduce_table(b, io::reproduce_rows());
    EXPECT_EQ(a.str(), b.str());
    std::ostringstream c;
    EXPECT_FALSE(io::print_reproduce_table(c, io::reproduce_rows(true)));
    EXPECT_NE(c.str().find("first mismatch"), std::string::npos);
}
