#include "cli.hpp"

#include "plesken/json_io.hpp"

#include <doctest.h>

#include <fstream>
#include <sstream>

using namespace plesken;

namespace {

struct Run
{
	int code;
	std::string out;
	std::string err;
	Json json() const { return Json::parse(out); }
};

Run run(std::vector<std::string> args)
{
	std::ostringstream out, err;
	int code = cli::run(args, out, err);
	return {code, out.str(), err.str()};
}

std::string read_file(const std::string &path)
{
	std::ifstream in(path);
	REQUIRE(in.good());
	std::stringstream s;
	s << in.rdbuf();
	return s.str();
}

} // namespace

TEST_CASE("group command")
{
	auto k4 = run({"group", "K4"});
	CHECK(k4.code == 0);
	auto j = k4.json();
	CHECK(j["schema_version"] == "1");
	CHECK(j["exit_code"] == 0);
	CHECK(j["command"]["verb"] == "group");
	CHECK(j["payload"]["order"] == 4);
	CHECK(j["payload"]["involution_count"] == 4);

	auto s3 = run({"group", "s3"}).json()["payload"];
	CHECK(s3["order"] == 6);
	CHECK(s3["involution_count"] == 4);

	auto h3 = run({"group", "H3"}).json()["payload"];
	CHECK(h3["order"] == 27);
	CHECK(h3["involution_count"] == 1);

	auto text = run({"--format", "text", "group", "S3"});
	CHECK(text.code == 0);
	CHECK(text.out.find("order 6") != std::string::npos);
}

TEST_CASE("plesken command")
{
	CHECK(run({"plesken", "S3", "dim"}).json()["payload"]["dim"] == 1);
	CHECK(run({"plesken", "K4", "dim"}).json()["payload"]["dim"] == 0);
	CHECK(run({"plesken", "H3", "dim"}).json()["payload"]["dim"] == 13);
	CHECK(run({"plesken", "S3", "basis"}).json()["payload"]["basis"] == Json::array({"(123)"}));

	auto sc = run({"plesken", "S4", "sc"}).json()["payload"];
	CHECK(sc["group"] == "S4");
	CHECK(sc["dim"] == 7);
	CHECK(sc["basis"].size() == 7);
	for (const auto &e : sc["sc"])
		CHECK(e["k"].get<int>() < e["l"].get<int>());

	auto laws = run({"--seed", "9", "plesken", "S4", "laws", "--samples", "30"});
	CHECK(laws.code == 0);
	CHECK(laws.json()["payload"]["all_hold"] == true);
	CHECK(laws.json()["payload"]["jacobi"] == 30);

	CHECK(run({"plesken", "S3", "volume"}).code == cli::usage_error);
}

TEST_CASE("bracket command matches the golden report")
{
	auto r = run({"bracket", "S3", "(12)", "(123)"});
	CHECK(r.code == 0);
	CHECK(r.out == read_file(std::string(GOLDEN_DIR) + "/bracket_s3.json"));
	auto terms = r.json()["payload"]["bracket"]["terms"];
	REQUIRE(terms.size() == 2);

	auto abelian = run({"bracket", "C3", "e+a", "e+a^2"}).json()["payload"];
	CHECK(abelian["bracket"]["terms"].empty());
	CHECK(abelian["bracket_text"] == "0");
	CHECK(run({"bracket", "S3", "(123)", "(123)"}).json()["payload"]["bracket_text"] == "0");

	auto bad = run({"bracket", "S3", "(12", "(123)"});
	CHECK(bad.code == cli::usage_error);
	CHECK(bad.json()["exit_code"] == cli::usage_error);
	CHECK(bad.json()["payload"].contains("error"));
}

TEST_CASE("homs command")
{
	auto r = run({"homs", "C2", "K4"}).json()["payload"];
	CHECK(r["count"] == 4);
	CHECK(r["homs"].size() == 4);
	CHECK(run({"homs", "S4", "C2500"}).code == cli::guard_tripped);
}

TEST_CASE("functor command")
{
	auto k4 = run({"functor", "counterexample", "--ambient", "K4"});
	CHECK(k4.code == 0);
	CHECK(k4.json()["payload"]["faithful"] == false);
	CHECK(k4.json()["payload"]["count"].get<int>() > 0);

	auto s3 = run({"functor", "check", "--ambient", "S3"});
	CHECK(s3.code == 0);
	CHECK(s3.json()["payload"]["all_hold"] == true);

	auto c6 = run({"functor", "full", "--ambient", "C6"});
	CHECK(c6.code == 0);
	CHECK(c6.json()["payload"]["full"] == true);

	auto c3 = run({"functor", "counterexample", "--ambient", "C3"});
	CHECK(c3.code == 0);
	CHECK(c3.json()["payload"]["witnesses"].empty());

	auto obj = run({"functor", "object", "--ambient", "C3", "--element", "a"}).json()["payload"];
	CHECK(obj["image_text"] == "2*a - 2*a^2");
	auto pair = run({"--convention", "pairwise", "functor", "object", "--ambient", "C3",
	                 "--element", "a"})
	                .json()["payload"];
	CHECK(pair["image_text"] == "a - a^2");
	CHECK(pair["convention"] == "pairwise");

	CHECK(run({"functor", "check", "--ambient", "S5"}).code == cli::guard_tripped);
	CHECK(run({"functor", "object", "--ambient", "C3"}).code == cli::usage_error);
}

TEST_CASE("usage errors")
{
	CHECK(run({}).code == cli::usage_error);
	CHECK(run({"group"}).code == cli::usage_error);
	CHECK(run({"group", "H2"}).code == cli::usage_error);
	CHECK(run({"--bogus", "group", "S3"}).code == cli::usage_error);
	CHECK(run({"group", "S3", "--bogus"}).code == cli::usage_error);
	CHECK(run({"--format", "yaml", "group", "S3"}).code == cli::usage_error);
	CHECK(run({"frobnicate"}).code == cli::usage_error);
	CHECK(run({"--help"}).code == 0);
}

TEST_CASE("reports are deterministic and round-trip through JSON")
{
	const std::vector<std::vector<std::string>> commands{
	    {"group", "H3"},
	    {"plesken", "S4", "sc"},
	    {"bracket", "S3", "(12)", "2*(123) - i*(13)"},
	    {"homs", "S3", "C6"},
	    {"--seed", "5", "plesken", "D4", "laws"},
	    {"functor", "check", "--ambient", "K4"},
	    {"functor", "full", "--ambient", "S3"},
	    {"functor", "counterexample", "--ambient", "C6"},
	};
	for (const auto &args : commands)
	{
		auto a = run(args), b = run(args);
		CHECK(a.out == b.out);
		CHECK(a.code == b.code);
		Json j = a.json();
		CHECK(j.dump(2) + "\n" == a.out);
	}
}
