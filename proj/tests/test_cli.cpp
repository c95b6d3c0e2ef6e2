#include "cli.hpp"

#include "cfc/hypergraph.hpp"

#include <doctest.h>
#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>

namespace {

struct Run {
    int code = 0;
    std::string out;
    std::string err;
};

Run run(const std::vector<std::string>& args, const std::string& input = "")
{
    std::istringstream in(input);
    std::ostringstream out;
    std::ostringstream err;
    Run r;
    r.code = cfc::cli::run(args, in, out, err);
    r.out = out.str();
    r.err = err.str();
    return r;
}

const std::string h10_text = "10 6\n1 5\n5 10\n2 3\n4 5\n6 7\n8 9\n";
const std::string chain_text = "4 3\n1 2\n2 3\n3 4\n";
const std::string claw_text = "4 3\n1 2\n1 3\n1 4\n";
const std::string star4_text = "5 4\n1 2\n1 3\n1 4\n1 5\n";
const std::string c4_text = "4 4\n1 2\n2 3\n3 4\n4 1\n";

std::string temp_file(const std::string& name, const std::string& text)
{
    auto path = std::filesystem::temp_directory_path() / ("cfc_cli_test_" + name);
    std::ofstream(path) << text;
    return path.string();
}

} // namespace

using nlohmann::json;

TEST_CASE("cli solve")
{
    auto r = run({"solve", "-"}, h10_text);
    CHECK(r.code == cfc::cli::ok);
    REQUIRE(r.out.rfind("k=2\n", 0) == 0);
    auto colouring = cfc::parse_colouring(r.out.substr(4), 10);
    CHECK(cfc::verify_cf_colouring(cfc::parse_hypergraph(h10_text), colouring));

    CHECK(run({"solve", "-"}, chain_text).out.rfind("k=1\n", 0) == 0);
    CHECK(run({"solve", "-"}, "3 0\n").out == "k=0\n0 0 0\n");

    auto file = temp_file("h10.txt", h10_text);
    CHECK(run({"solve", file}).out == r.out);
}

TEST_CASE("cli solve json and determinism")
{
    auto a = run({"--json", "solve", "-"}, h10_text);
    auto b = run({"--json", "solve", "-"}, h10_text);
    CHECK(a.out == b.out);
    auto j = json::parse(a.out);
    CHECK(j["k"] == 2);
    CHECK(j["colouring"].size() == 10);
}

TEST_CASE("cli input errors")
{
    auto r = run({"solve", "-"}, "3 1\n2 4\n");
    CHECK(r.code == cfc::cli::input_error);
    CHECK(r.err.find("line 2") != std::string::npos);
    CHECK(run({"solve", "/nonexistent/file"}).code == cfc::cli::input_error);
    CHECK(run({"frobnicate"}).code == cfc::cli::input_error);
    CHECK(run({}).code == cfc::cli::input_error);
    CHECK(run({"maxcfc", "-", "--colors", "0"}, h10_text).code == cfc::cli::input_error);
    CHECK(run({"maxcfc", "-"}, h10_text).code == cfc::cli::input_error);
}

TEST_CASE("cli help exits cleanly")
{
    auto r = run({"--help"});
    CHECK(r.code == cfc::cli::ok);
    CHECK(r.out.find("solve") != std::string::npos);
}

TEST_CASE("cli isehs")
{
    auto no = run({"isehs", "-"}, h10_text);
    CHECK(no.code == cfc::cli::verdict_false);
    CHECK(no.out == "none\n");
    auto yes = run({"isehs", "-"}, chain_text);
    CHECK(yes.code == cfc::cli::ok);
    CHECK(yes.out == "2 4\n");
    auto nested = run({"isehs", "-"}, "3 2\n1 3\n2 2\n");
    CHECK(nested.code == cfc::cli::ok);
    CHECK(nested.out == "2\n");
    auto j = json::parse(run({"--json", "isehs", "-"}, h10_text).out);
    CHECK(j["exactly_hittable"] == false);
    CHECK(j["hitting_set"].is_null());
}

TEST_CASE("cli ehig")
{
    auto claw = run({"ehig", "-"}, claw_text);
    CHECK(claw.code == cfc::cli::ok);
    CHECK(claw.out.find("hitting ") != std::string::npos);

    auto star = run({"ehig", "-"}, star4_text);
    CHECK(star.code == cfc::cli::verdict_false);
    CHECK(star.out == "P: 1\nX: 2 3 4 5\n");
    auto js = json::parse(run({"--json", "ehig", "-"}, star4_text).out);
    CHECK(js["witness"]["path"] == json::array({1}));

    auto c4 = run({"ehig", "-"}, c4_text);
    CHECK(c4.code == cfc::cli::input_error);
    CHECK(c4.err.find("not an interval graph") != std::string::npos);
}

TEST_CASE("cli maxcfc")
{
    auto r = run({"maxcfc", "-", "--colors", "1"}, h10_text);
    CHECK(r.code == cfc::cli::ok);
    REQUIRE(r.out.rfind("count=4\n", 0) == 0);
    std::istringstream reps(r.out.substr(8));
    int accepted = 0;
    for (int p; reps >> p;)
        accepted += p != 0;
    CHECK(accepted == 4);
    auto j = json::parse(run({"--json", "maxcfc", "-", "--colors", "2"}, h10_text).out);
    CHECK(j["count"] == 6);
}

TEST_CASE("cli partition")
{
    auto hyper = temp_file("h10_part.txt", h10_text);
    auto colours = temp_file("h10_colours.txt", "0 0 1 0 2 0 2 0 1 0\n");
    auto r = run({"partition", hyper, colours});
    CHECK(r.code == cfc::cli::ok);
    CHECK(r.out == "part 1: intervals 0 1 2 5 hitting 3 9\npart 2: intervals 3 4 hitting 5 7\n");
    auto bad = temp_file("h10_bad.txt", "0 0 0 0 0 0 0 0 0 0\n");
    CHECK(run({"partition", hyper, bad}).code == cfc::cli::input_error);
    auto j = json::parse(run({"--json", "partition", hyper, colours}).out);
    CHECK(j["parts"].size() == 2);
}

TEST_CASE("cli canonical")
{
    auto fig5 = "6 9\n2 1\n2 5\n1 3\n1 4\n1 6\n1 5\n3 5\n3 6\n6 4\n";
    auto r = run({"canonical", "-"}, fig5);
    CHECK(r.code == cfc::cli::ok);
    CHECK(r.out.rfind("11 6\n", 0) == 0);
    CHECK(r.out.find("# z 1 = 3") != std::string::npos);
    auto j = json::parse(run({"--json", "canonical", "-"}, fig5).out);
    CHECK(j["anchors"] == json::array({3, 5, 7, 9}));
}

TEST_CASE("cli oracle")
{
    CHECK(run({"oracle", "cfc-number", "-"}, h10_text).out == "2\n");
    CHECK(run({"oracle", "exact-hitting-set", "-"}, h10_text).out == "none\n");
    CHECK(run({"oracle", "max-cfc", "-", "--colors", "1"}, h10_text).out == "4\n");
    CHECK(run({"oracle", "min-over-cooccurrence", "-"}, h10_text).out == "2\n");
    CHECK(run({"oracle", "min-eh-partition", "-"}, h10_text).out == "2\n");
    CHECK(run({"oracle", "nope", "-"}, h10_text).code == cfc::cli::input_error);
    auto big = run({"oracle", "min-eh-partition", "-"}, "20 20\n" + std::string(20 * 4, ' ') + "\n");
    CHECK(big.code == cfc::cli::input_error);

    std::string many = "6 21\n";
    for (int l = 1; l <= 6; ++l)
        for (int r = l; r <= 6; ++r)
            many += std::to_string(l) + " " + std::to_string(r) + "\n";
    auto scale = run({"oracle", "min-eh-partition", "-"}, many);
    CHECK(scale.code == cfc::cli::scale_exceeded);
    CHECK(scale.err.find("oracle scale exceeded") != std::string::npos);
}

TEST_CASE("cli gen")
{
    auto d = run({"gen", "discrete", "--n", "3"});
    CHECK(d.out == "3 6\n1 1\n1 2\n1 3\n2 2\n2 3\n3 3\n");
    auto a = run({"gen", "random", "--n", "8", "--m", "5", "--seed", "42"});
    auto b = run({"gen", "random", "--n", "8", "--m", "5", "--seed", "42"});
    CHECK(a.out == b.out);
    CHECK(cfc::parse_hypergraph(a.out).num_intervals() == 5);
    auto def1 = run({"gen", "random", "--n", "8", "--m", "5"});
    auto def2 = run({"gen", "random", "--n", "8", "--m", "5"});
    CHECK(def1.out == def2.out);
    CHECK(run({"gen", "other", "--n", "3"}).code == cfc::cli::input_error);
    auto j = json::parse(run({"--json", "gen", "discrete", "--n", "2"}).out);
    CHECK(j["intervals"] == json::array({json::array({1, 1}), json::array({1, 2}), json::array({2, 2})}));
}
