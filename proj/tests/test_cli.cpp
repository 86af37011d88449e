#include <doctest.h>

#include <array>
#include <cstdio>
#include <string>
#include <sys/wait.h>

namespace {

struct Run {
    int status;
    std::string out;
};

Run run(const std::string& args)
{
    const std::string cmd = std::string(SHIMIN_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    std::array<char, 4096> buf{};
    std::size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), n);
    const int raw = pclose(pipe);
    return {WIFEXITED(raw) ? WEXITSTATUS(raw) : -1, out};
}

std::size_t count_lines(const std::string& s)
{
    std::size_t n = 0;
    for (char c : s) n += c == '\n';
    return n;
}

} // namespace

TEST_CASE("min")
{
    CHECK(run("min A 2 --sign 0,0,0").out == "0,0,0\n");
    CHECK(run("min A 2 --sign +,+,+").out == "1,2,1\n");
    CHECK(run("min --family A --rank 2 --sign=-,0,+").out == "-1,0,1\n");
    CHECK(run("min A 2 --pyramid '+/+,-'").out == "1,1,-1\n");
    CHECK(run("min C 2 --pf '{\"w\":[1,2],\"P\":[[2,0]]}'").out == "0,0,1,0\n");
    CHECK(run("min A 2 --sign +,+,+ --format json").out ==
          "{\"family\":\"A\",\"rank\":2,\"sign\":[\"+\",\"+\",\"+\"],\"w\":[1,2,3],\"P\":[[1,-1,0],[0,1,-1]],\"min\":[1,2,1]}\n");
}

TEST_CASE("exit codes")
{
    CHECK(run("min A 2 --sign 0,0,+").status == 2);
    CHECK(run("min A 2 --sign 0,0").status == 1);
    CHECK(run("min A 2 --sign 0,0,x").status == 1);
    CHECK(run("min Q 2 --sign 0,0,0").status == 1);
    CHECK(run("min A 9 --sign 0").status == 1);
    CHECK(run("min A 2").status == 1);
    CHECK(run("min A 2 --pf 'not json'").status == 1);
    CHECK(run("min A 2 --pf '{\"w\":[2,1,3],\"P\":[[1,-1,0]]}'").status == 1);
    CHECK(run("frobnicate").status == 1);
    CHECK(run("--help").status == 0);
    CHECK(run("verify A 3 --max-alcoves 100").status == 4);
    CHECK(run("regions A 8 --max-rows 1000").status == 4);
    CHECK(run("verify B 6").status == 1);
}

TEST_CASE("regions")
{
    const auto a2 = run("regions A 2");
    CHECK(a2.status == 0);
    CHECK(a2.out.find("(+,+,+)  1 2 3  {e1-e2,e2-e3}  1,2,1\n") != std::string::npos);
    CHECK(a2.out.substr(a2.out.size() - 8) == "16 rows\n");
    CHECK(count_lines(run("regions A 1 --format json").out) == 3);
    CHECK(count_lines(run("regions B 2 --format json").out) == 25);
    CHECK(run("regions D 3").out == run("regions D 3").out);
}

TEST_CASE("regions piped back through min")
{
    for (const char* kind : {"A 3", "B 2", "C 3", "D 3"}) {
        CAPTURE(kind);
        const std::string k = kind;
        const auto rows = run("regions " + k + " --format json");
        const auto again = run("regions " + k + " --format json | " + SHIMIN_CLI_PATH + " min " + k + " --pf - --format json");
        CHECK(again.status == 0);
        CHECK(again.out == rows.out);
    }
}

TEST_CASE("verify")
{
    CHECK(run("verify A 2").out.rfind("A2: PASS, 16/16 regions", 0) == 0);
    CHECK(run("verify C 2").out.rfind("C2: PASS, 25/25 regions", 0) == 0);
    const auto d3 = run("verify D 3 --threads 2 --format json");
    CHECK(d3.status == 0);
    CHECK(d3.out.find("\"status\":\"PASS\",\"regions\":125,\"matched\":125") != std::string::npos);
}

TEST_CASE("diagram")
{
    CHECK(run("diagram A 3 --pf '{\"w\":[1,2,3,4],\"P\":[]}'").out == " 1   2   3   4\n");
    CHECK(run("diagram A 3 --pf '{\"w\":[1,2,3,4],\"P\":[[1,-1,0,0],[0,0,1,-1]]}'").out ==
          " +---+   +---+\n |   |   |   |\n 1   2   3   4\n");
    const auto fork = run("diagram D 3 --pf '{\"w\":[1,2,3],\"P\":[[0,1,-1],[0,1,1]]}'");
    CHECK(fork.status == 0);
    CHECK(fork.out.find("-3") != std::string::npos);
    const auto svg = run("diagram B 2 --pf '{\"w\":[1,2],\"P\":[[0,1]]}' --format svg");
    CHECK(svg.out.rfind("<?xml", 0) == 0);
    CHECK(svg.out.find("</svg>") != std::string::npos);
}

TEST_CASE("alcoves")
{
    CHECK(count_lines(run("alcoves A 1 --radius 3").out) == 7);
    CHECK(count_lines(run("alcoves A 2 --radius 6 --regions").out) == 16);
}
