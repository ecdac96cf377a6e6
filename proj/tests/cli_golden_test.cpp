// Runs the command-line tool against the fixture corpus and compares stdout
// byte-for-byte with the files under fixtures/golden/, plus exit codes.
//
// Usage: cli_golden_test <path-to-cli> <fixtures-dir>
#define DOCTEST_CONFIG_IMPLEMENT
#include <doctest.h>

#include <cstdio>
#include <climits>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <vector>

namespace {

std::string gCli;
std::string gFixtures;

struct GoldenCase {
    std::string name;
    int expectedExit = 0;
    std::string args;
};

std::vector<GoldenCase> loadCases(const std::string& path) {
    std::ifstream in(path);
    REQUIRE_MESSAGE(in.good(), "cannot open " << path);
    std::vector<GoldenCase> cases;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        auto p1 = line.find('|');
        auto p2 = line.find('|', p1 + 1);
        REQUIRE(p1 != std::string::npos);
        REQUIRE(p2 != std::string::npos);
        GoldenCase c;
        c.name = line.substr(0, p1);
        c.expectedExit = std::stoi(line.substr(p1 + 1, p2 - p1 - 1));
        c.args = line.substr(p2 + 1);
        cases.push_back(std::move(c));
    }
    return cases;
}

std::string readFile(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    REQUIRE_MESSAGE(in.good(), "cannot open " << path);
    std::ostringstream out;
    out << in.rdbuf();
    return out.str();
}

// Runs one case with the fixtures directory as cwd, stderr suppressed.
// Returns {stdout bytes, exit code}.
std::pair<std::string, int> runCase(const GoldenCase& c) {
    std::string cmd = "cd '" + gFixtures + "' && '" + gCli + "' " + c.args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    char buf[4096];
    size_t n;
    while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, n);
    int status = pclose(pipe);
    REQUIRE(WIFEXITED(status));
    return {out, WEXITSTATUS(status)};
}

} // namespace

TEST_CASE("cli output matches the golden corpus") {
    auto cases = loadCases(gFixtures + "/golden/cases.txt");
    REQUIRE(cases.size() > 30);
    for (const auto& c : cases) {
        CAPTURE(c.name);
        auto [out, code] = runCase(c);
        CHECK(code == c.expectedExit);
        CHECK(out == readFile(gFixtures + "/golden/" + c.name + ".out"));
    }
}

int main(int argc, char** argv) {
    if (argc < 3) {
        std::fprintf(stderr, "usage: %s <path-to-cli> <fixtures-dir>\n", argv[0]);
        return 2;
    }
    // the case runner changes directory, so pin both paths down first
    char buf[PATH_MAX];
    gCli = realpath(argv[1], buf) ? buf : argv[1];
    gFixtures = realpath(argv[2], buf) ? buf : argv[2];
    doctest::Context ctx;
    ctx.applyCommandLine(1, argv);
    return ctx.run();
}
