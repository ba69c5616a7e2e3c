#include <doctest.h>

#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>

#include "igusa/errors.hpp"
#include "igusa/report.hpp"

using namespace igusa;
namespace fs = std::filesystem;

namespace {

struct Run {
    int code;
    std::string out;
};

Run run(const std::string& args) {
    const std::string cmd = std::string(IGUSA_CLI) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe);
    std::string out;
    char buf[4096];
    while (auto got = fread(buf, 1, sizeof buf, pipe)) out.append(buf, got);
    const int status = pclose(pipe);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::string problem(const char* name) { return std::string(PROBLEMS_DIR) + "/" + name; }

std::string temp_problem(const std::string& name, const std::string& text) {
    auto path = fs::temp_directory_path() / ("igusa-test-" + name);
    std::ofstream(path) << text;
    return path.string();
}

} // namespace

TEST_SUITE("cli-frontend") {

TEST_CASE("problem files") {
    auto spec = parse_problem("# comment\nmode=mapping\nn=3\np=5\nf=x + y\nf=y + z\ng=trivial\n");
    CHECK(spec.mode == Mode::mapping);
    CHECK(spec.f_text == std::vector<std::string>{"x + y", "y + z"});
    CHECK_FALSE(spec.measure());
    CHECK(spec.fside().t_count() == 2);

    auto ideal = parse_problem("mode=ideal\nn=2\np=13\ngenerators=x^5*y, x^3*y^2\ng=x*y\nlevel=4\n");
    CHECK(ideal.fside().ideal_spec().generators.size() == 2);
    CHECK(ideal.level == 4u);

    CHECK_THROWS_WITH_AS(parse_problem("mode=single\nn=2\np=4\nf=x\n"), doctest::Contains("line 3"), ParseError);
    CHECK_THROWS_WITH_AS(parse_problem("mode=single\nn=2\np=5\nf=x +* y\n"), doctest::Contains("line 4"), ParseError);
    CHECK_THROWS_AS(parse_problem("mode=single\nn=2\np=5\nf=x\nf=y\n"), ParseError);
    CHECK_THROWS_AS(parse_problem("mode=ideal\nn=2\np=5\nf=x\n"), ParseError);
    CHECK_THROWS_AS(parse_problem("mode=single\nn=2\np=5\nf=x+1\n"), ParseError);
    CHECK_THROWS_AS(parse_problem("mode=single\nn=2\nn=3\np=5\nf=x\n"), ParseError);
    CHECK_THROWS_AS(parse_problem("mode=single\nn=2\np=5\nf=x\ncolour=red\n"), ParseError);
    CHECK_THROWS_AS(parse_problem("mode=ideal\nn=2\np=5\ngenerators=2*x\n"), ParseError);
}

TEST_CASE("JSON reports re-render to the same text") {
    auto spec = load_problem(problem("worked_example.txt"));
    auto z = assemble(spec.fside(), spec.measure(), spec.p);
    auto j = report::compute_json(spec, z);
    auto again = report::json::parse(j.dump());
    CHECK(again == j);
    CHECK(report::render(again) == report::render(j));
    CHECK(j["rays"].size() == 5);
    CHECK(j["cones"].size() == 10);
    CHECK(j["cones"][4]["mult"] == report::json::array({2}));

    for (const char* cmd : {"compute", "poles", "check"}) {
        auto r = run(std::string(cmd) + " --json " + problem("mapping_t2.txt"));
        CHECK(r.code == 0);
        auto parsed = report::json::parse(r.out);
        CHECK(parsed["command"] == cmd);
        CHECK(report::render(report::json::parse(parsed.dump())) == report::render(parsed));
    }
}

TEST_CASE("text output matches rendering of the JSON output") {
    for (const char* cmd : {"compute", "poles", "check", "oracle"}) {
        auto text = run(std::string(cmd) + " " + problem("single_linear.txt"));
        auto json = run(std::string(cmd) + " --json " + problem("single_linear.txt"));
        CHECK(text.code == 0);
        CHECK(text.out == report::render(report::json::parse(json.out)));
    }
}

TEST_CASE("exit codes") {
    CHECK(run("compute " + problem("worked_example.txt")).code == 0);
    CHECK(run("compute " + problem("malformed.txt")).code == 1);
    CHECK(run("compute /nonexistent/problem.txt").code == 1);
    CHECK(run("frobnicate").code == 1);
    CHECK(run("compute " + problem("worked_example_p3.txt")).code == 2);
    CHECK(run("compute --override-degenerate " + problem("worked_example_p3.txt")).code == 0);
    CHECK(run("check " + problem("worked_example_p3.txt")).code == 2);
    CHECK(run("check --sweep 2,5,7,11,13 " + problem("worked_example.txt")).code == 0);
    CHECK(run("check --sweep 2,3 " + problem("worked_example.txt")).code == 2);
    CHECK(run("oracle --level 5 " + problem("single_linear.txt")).code == 0);
    CHECK(run("oracle --level 5 --corrupt-for-testing " + problem("single_linear.txt")).code == 4);
    auto big = temp_problem("big.txt", "mode=single\nn=2\np=10007\nf=x + y\n");
    CHECK(run("oracle " + big).code == 3);
    auto degenerate_output = run("compute " + problem("worked_example_p3.txt"));
    CHECK(degenerate_output.out.empty());
}

TEST_CASE("example at p = 2 through the command line") {
    auto path = temp_problem("p2.txt", "mode=ideal\nn=2\np=2\ngenerators=x^5*y, x^3*y^2, x^2*y^5\ng=x^4*y^2 + x*y^5\n");
    auto o = run("oracle --level 8 --s0 2 --json " + path);
    CHECK(o.code == 0);
    CHECK(report::json::parse(o.out)["contained"] == true);
}

}
