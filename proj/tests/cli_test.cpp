// End-to-end checks of the installed command surface: spawns the real binary.
#include <doctest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>
#include <vector>

#ifndef SIXCUBE_CLI_PATH
#error "SIXCUBE_CLI_PATH must point at the sixcube binary"
#endif

namespace {

struct RunResult {
    int exit_code;
    std::string output;  // stdout + stderr
};

RunResult run(const std::string& args) {
    const std::string cmd = std::string(SIXCUBE_CLI_PATH) + " " + args + " 2>&1";
    std::array<char, 4096> buffer{};
    std::string out;
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    while (fgets(buffer.data(), buffer.size(), pipe) != nullptr) out += buffer.data();
    const int status = pclose(pipe);
    return {WEXITSTATUS(status), out};
}

std::string write_temp(const std::string& name, const std::string& contents) {
    const std::string path = std::string("cli_test_") + name + ".json";
    std::ofstream f(path);
    f << contents;
    return path;
}

std::vector<std::string> lines_of(const std::string& text) {
    std::vector<std::string> lines;
    std::string current;
    for (char c : text) {
        if (c == '\n') {
            lines.push_back(current);
            current.clear();
        } else {
            current += c;
        }
    }
    if (!current.empty()) lines.push_back(current);
    return lines;
}

const char* kExample1 = R"({
  "n": 1, "m": 1, "a": [1], "b": [1], "sign": "plus",
  "B": [1], "C": [1], "D": [1], "h": 2,
  "generators": [["-48", "80"]], "nmax": 4
})";

}  // namespace

TEST_CASE("build prints the quartic") {
    const auto path = write_temp("ex1", kExample1);
    const auto r = run("build --input " + path);
    CHECK(r.exit_code == 0);
    CHECK(r.output == "A4=4\nA3=0\nA2=53\nA1=0\nconstant=64\nq=8\n");
}

TEST_CASE("build reports a non-square constant with its value and exit 3") {
    const auto path = write_temp("nonsquare", R"({
      "n":1,"m":1,"a":[1],"b":[1],"sign":"plus","B":[1],"C":[1],"D":[1],"h":1})");
    const auto r = run("build --input " + path);
    CHECK(r.exit_code == 3);
    CHECK(r.output == "NotASquare L=2\n");
}

TEST_CASE("transform prints the curve and discriminant") {
    const auto path = write_temp("ex1t", kExample1);
    const auto r = run("transform --input " + path);
    CHECK(r.exit_code == 0);
    CHECK(r.output ==
          "a1=0\na2=53\na3=0\na4=-1024\na6=-54272\ndiscriminant=208812441600\n");
}

TEST_CASE("transform exits 3 on a singular curve") {
    const auto path = write_temp("singular", R"({
      "n":2,"m":1,"a":[1,-32],"b":[-15],"sign":"plus",
      "B":[1],"C":[1],"D":[2,1],"h":1})");
    const auto r = run("transform --input " + path);
    CHECK(r.exit_code == 3);
}

TEST_CASE("solve streams the four worked identities") {
    const auto path = write_temp("ex1s", kExample1);
    const auto r = run("solve --input " + path);
    CHECK(r.exit_code == 0);
    const auto lines = lines_of(r.output);
    REQUIRE(lines.size() == 5);
    CHECK(lines[0] == "# generators: user-supplied, 1");
    CHECK(lines[1] ==
          "k=1  P=(-48,80)  t=1  sol=1;-10;3;-12  1*1^6 + 1*12^3 = 1*3^6 + 1*10^3");
    CHECK(lines[2] ==
          "k=2  P=(68,-660)  t=15  sol=74;5768;-14;7088  1*74^6 + 1*5768^3 = 1*14^6 + 1*7088^3");
    CHECK(lines[3].find("1*1503^6 + 1*6175210^3 = 1*1919^6 + 1*5819322^3") != std::string::npos);
    CHECK(lines[4].find("1*693358^6 + 1*2867762572208^3 = 1*1427882^6 + 1*2478237149768^3") !=
          std::string::npos);
}

TEST_CASE("solve lines re-verify through the verify command") {
    const auto path = write_temp("ex1v", kExample1);
    const auto r = run("solve --input " + path);
    REQUIRE(r.exit_code == 0);
    for (const auto& line : lines_of(r.output)) {
        const auto pos = line.find("sol=");
        if (pos == std::string::npos) continue;
        const auto end = line.find("  ", pos);
        REQUIRE(end != std::string::npos);
        const std::string sol = line.substr(pos + 4, end - pos - 4);
        const auto v = run("verify --input " + path + " --solution \"" + sol + "\"");
        CHECK(v.exit_code == 0);
        CHECK(v.output == "OK residual=0\n");
    }
}

TEST_CASE("verify distinguishes solutions from near misses") {
    const auto path = write_temp("ex1w", kExample1);
    auto r = run("verify --input " + path + " --solution \"1;12;3;10\"");
    CHECK(r.exit_code == 0);
    CHECK(r.output == "OK residual=0\n");
    r = run("verify --input " + path + " --solution \"1;12;3;11\"");
    CHECK(r.exit_code == 1);
    CHECK(r.output == "FAIL residual=-331\n");
}

TEST_CASE("malformed input exits 2") {
    const auto path = write_temp("bad", R"({"n":1,"m":1,"a":[0],"b":[1],"sign":"plus",
      "B":[1],"C":[1],"D":[1],"h":2})");
    CHECK(run("build --input " + path).exit_code == 2);
    const auto noparse = write_temp("nojson", "{");
    CHECK(run("build --input " + noparse).exit_code == 2);
    CHECK(run("build --input does_not_exist.json").exit_code == 2);
}

TEST_CASE("search-h lists qualifying h values") {
    const auto path = write_temp("ex3", R"({
      "n":1,"m":1,"a":[1],"b":[7],"sign":"plus","B":[1],"C":[1],"D":[1],"h":1})");
    const auto r = run("search-h --input " + path + " --bound 8");
    CHECK(r.exit_code == 0);
    const auto lines = lines_of(r.output);
    REQUIRE(lines.size() == 4);
    CHECK(lines[0] == "h=2/7 q=8/343");
    CHECK(lines[1] == "h=7/2 q=49/4");
}

TEST_CASE("points lists point_search hits") {
    const auto path = write_temp("ex1p", kExample1);
    const auto r = run("points --input " + path + " --bound 2");
    CHECK(r.exit_code == 0);
    CHECK(r.output == "(-48,-80)\n(-48,80)\n");
}

TEST_CASE("oracle streams box results with identities") {
    const auto path = write_temp("ex1o", kExample1);
    const auto r = run("oracle --input " + path + " --sextic-bound 4 --cubic-bound 13");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("sol=1;12;3;10  1*1^6 + 1*12^3 = 1*3^6 + 1*10^3") != std::string::npos);
}

TEST_CASE("solve passes combine and primitive through to the pipeline") {
    const auto path = write_temp("ex2", R"({
      "n":1,"m":1,"a":[2],"b":[1],"sign":"plus","B":[3],"C":[1],"D":[1],"h":"4/3",
      "generators":[["-1792/243","3328/2187"],["-2411/324","7007/5832"]]})");
    const auto r = run("solve --input " + path + " --nmax 2 --primitive --combine");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("k=2,0  P=(16708/729,-2392940/19683)  t=36135/4  "
                        "sol=22773;72216552;1317;653700972  "
                        "2*22773^6 + 1*72216552^3 = 2*1317^6 + 1*653700972^3") !=
          std::string::npos);
    CHECK(r.output.find("k=0,1") != std::string::npos);
    CHECK(r.output.find("k=1,-1") != std::string::npos);
    CHECK(r.output.find("k=1,1") != std::string::npos);
}

TEST_CASE("solve without generators falls back to point_search") {
    const auto path = write_temp("nogen", R"({
      "n":1,"m":1,"a":[1],"b":[1],"sign":"plus",
      "B":[1],"C":[1],"D":[1],"h":2,"nmax":1})");
    const auto r = run("solve --input " + path + " --search-bound 2");
    CHECK(r.exit_code == 0);
    const auto lines = lines_of(r.output);
    REQUIRE(lines.size() >= 2);
    CHECK(lines[0] == "# generators: point_search(bound=2), found 2");
    // (-48,-80) leads to the same 1729 identity, side-swapped by the sign of u
    CHECK(lines[1].find("1*3^6 + 1*10^3 = 1*1^6 + 1*12^3") != std::string::npos);
}
