#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qschur/report.hpp"

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <string>

using namespace qschur;

namespace {

struct RunResult {
	int exit_code = -1;
	std::string output;
};

/* run the CLI binary named by QSCHUR_BIN with the given arguments */
RunResult run_cli(const std::string& args)
{
	const char* bin = std::getenv("QSCHUR_BIN");
	REQUIRE(bin != nullptr);
	std::string cmd = std::string(bin) + " " + args + " 2>&1";
	FILE* pipe = popen(cmd.c_str(), "r");
	REQUIRE(pipe != nullptr);
	RunResult res;
	std::array<char, 4096> buf;
	while (std::size_t got = fread(buf.data(), 1, buf.size(), pipe))
		res.output.append(buf.data(), got);
	int status = pclose(pipe);
	res.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
	return res;
}

} // namespace

TEST_CASE("report json round trip")
{
	VerificationReport rep;
	rep.check = "example-check";
	rep.param("r", "2");
	rep.param("sigma", "2,1");
	rep.box = "q<=12";
	rep.sound_region = "q<=12";
	rep.notes.push_back("a note");
	CHECK(report_from_json_text(to_json_text(rep)) == rep);

	rep.fail("(l=1,0; k=0; n=3)", "2", "3");
	CHECK(report_from_json_text(to_json_text(rep)) == rep);

	std::string text = to_json_text(rep);
	CHECK(text.find("\"schema\": 1") != std::string::npos);
	CHECK(text.find("\"status\": \"fail\"") != std::string::npos);
}

TEST_CASE("text rendering")
{
	VerificationReport rep;
	rep.check = "some-check";
	rep.param("r", "1");
	CHECK(render_text(rep).rfind("[PASS] some-check", 0) == 0);
	rep.fail("key", "1", "2");
	CHECK(render_text(rep).rfind("[FAIL]", 0) == 0);
	CHECK(render_text(rep).find("lhs=1") != std::string::npos);
}

TEST_CASE("cli exit code contract")
{
	CHECK(run_cli("verify weighted --r 1 --umax 2 --dmax 2 --qmax 8").exit_code == 0);
	CHECK(run_cli("verify weighted --r 0").exit_code == 2);
	CHECK(run_cli("verify dilated --N 2 --a 1,2").exit_code == 2);
	CHECK(run_cli("verify qdiff --r 2 --umax 3 --xmax 4").exit_code == 2);
	CHECK(run_cli("expand poch --monomial bogus").exit_code == 2);
	CHECK(run_cli("nonsense").exit_code == 2);
	CHECK(run_cli("--help").exit_code == 0);
	CHECK(run_cli("expand --help").exit_code == 0);
}

TEST_CASE("cli corrupt hooks exit one with a located mismatch")
{
	for (const std::string& cmd :
	     {std::string("verify weighted --r 1 --umax 2 --dmax 2 --qmax 6 --corrupt"),
	      std::string("verify dilated --N 3 --a 1,2 --qmax 9 --umax 2 --dmax 2 --corrupt"),
	      std::string("verify qdiff --r 1 --umax 2 --dmax 2 --qmax 8 --xmax 2 --corrupt")}) {
		RunResult res = run_cli(cmd);
		CHECK(res.exit_code == 1);
		CHECK(res.output.find("mismatch") != std::string::npos);
	}
}

TEST_CASE("cli json reports")
{
	RunResult res = run_cli("verify weighted --r 1 --umax 2 --dmax 2 --qmax 6 --json");
	CHECK(res.exit_code == 0);
	CHECK(res.output.find("\"schema\": 1") != std::string::npos);
	CHECK(res.output.find("\"status\": \"pass\"") != std::string::npos);
}

TEST_CASE("cli expansions and listings")
{
	RunResult over = run_cli("expand overpartitions --qmax 4");
	CHECK(over.exit_code == 0);
	CHECK(over.output.find("4 14") != std::string::npos);

	RunResult listing =
	    run_cli("enumerate --family dilated-d --N 1 --a 1 --qmax 4 --umax 4 --dmax 4 "
	            "--n 4 --list");
	CHECK(listing.exit_code == 0);
	int lines = 0;
	for (char ch : listing.output) lines += ch == '\n';
	CHECK(lines == 14);

	RunResult guard = run_cli("verify weighted --r 3 --qmax 60 --umax 20 --dmax 20 "
	                          "--max-cost 1000");
	CHECK(guard.exit_code == 2);
	CHECK(guard.output.find("ceiling") != std::string::npos);

	/* distinct parts avoiding multiples of three: 5 = 5 = 1+4 and
	 * 7 = 7 = 2+5 = 1+2+4, 8 = 8 = 1+7 = 1+2+5 */
	RunResult schur = run_cli("expand schur --qmax 8");
	CHECK(schur.exit_code == 0);
	CHECK(schur.output.find("5 2") != std::string::npos);
	CHECK(schur.output.find("7 3") != std::string::npos);
	CHECK(schur.output.find("8 3") != std::string::npos);
}

TEST_CASE("cli matrix rendering")
{
	RunResult plus = run_cli("matrix --N 3 --a 1,2 --side plus --sigma 2,1");
	CHECK(plus.exit_code == 0);
	CHECK(plus.output.find("1 mod 3") != std::string::npos);

	RunResult minus = run_cli("matrix --N 3 --a 1,2 --side minus --sigma id");
	CHECK(minus.exit_code == 0);
	CHECK(minus.output.find("-3 mod 3") != std::string::npos);
}
