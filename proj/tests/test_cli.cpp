#include "doctest.h"

#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

namespace {

struct Result {
    int code;
    std::string out;
};

std::string temp_path(const std::string& name) { return "quatla_cli_test_" + name; }

Result run(const std::string& args, const std::string& input = "") {
    const std::string in = temp_path("in.json"), out = temp_path("out.txt");
    std::ofstream(in) << input;
    const std::string cmd = std::string(QUATLA_BIN) + " " + args + " < " + in + " > " + out + " 2>/dev/null";
    const int status = std::system(cmd.c_str());
    std::ifstream f(out);
    std::stringstream ss;
    ss << f.rdbuf();
    std::remove(in.c_str());
    std::remove(out.c_str());
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, ss.str()};
}

const char* kIdentity = R"({"rows":2,"cols":2,"data":[[1,0,0,0],[0,0,0,0],[0,0,0,0],[1,0,0,0]]})";

} // namespace

TEST_CASE("det") {
    const Result a = run("det", kIdentity);
    CHECK(a.code == 0);
    CHECK(a.out == "1.00000000000000e0\n");
    const Result b = run("det", R"({"rows":2,"cols":2,"data":[[2,0,0,0],[0,1,1,0],[0,-1,-1,0],[2,0,0,0]]})");
    CHECK(b.code == 0);
    CHECK(std::abs(std::stod(b.out) - 2.0) < 1e-12);
    CHECK(run("det", "{not json").code == 2);
    CHECK(run("det", R"({"rows":1,"cols":1,"data":[[0,1,0,0]]})").code == 3);
}

TEST_CASE("normalize") {
    const Result a = run("normalize", R"({"n":2,"grade":2,"terms":[{"idx":[0,2],"re":2},{"idx":[1,3],"re":2}]})");
    CHECK(a.code == 0);
    CHECK(a.out.find("\"nu\":[1.0") != std::string::npos);
    CHECK(run("normalize", R"({"n":1,"grade":2,"terms":[{"idx":[0,1],"re":0,"im":1}]})").code == 3);
    const Result b = run("normalize", R"({"n":2,"grade":2,"terms":[{"idx":[0,2],"re":6},{"idx":[1,3],"re":-2}]})");
    CHECK(b.code == 0);
    CHECK(b.out.find("\"nu\":[3.0") != std::string::npos);
}

TEST_CASE("ma") {
    const std::string r2 =
        R"({"add":[{"add":[{"mul":[{"coord":0},{"coord":0}]},{"mul":[{"coord":1},{"coord":1}]}]},)"
        R"({"add":[{"mul":[{"coord":2},{"coord":2}]},{"mul":[{"coord":3},{"coord":3}]}]}]})";
    const Result a = run("ma", R"({"fields":[)" + r2 + R"(],"point":[0.1,0.2,0.3,0.4]})");
    CHECK(a.code == 0);
    CHECK(a.out == "8.00000000000000e0\n");
    CHECK(run("ma", R"({"fields":[{"coord":0}],"point":[0,0,0,0]})").out == "0.00000000000000e0\n");
    CHECK(run("ma", R"({"fields":[{"coord":0},{"coord":1}],"point":[0,0,0,0]})").code == 3);
    CHECK(run("ma", R"({"fields":[{"coord":5}],"point":[0,0,0,0]})").code == 3);
}

TEST_CASE("verify") {
    const Result a = run("verify thm12 --seed 7 --cases 50");
    CHECK(a.code == 0);
    CHECK(a.out.find("\"pass\": true") != std::string::npos);
    CHECK(run("verify bogus").code == 4);
    const Result b = run("verify tau --seed 3 --cases 5");
    const Result c = run("verify tau --seed 3 --cases 5");
    CHECK(b.out == c.out);
    CHECK(run("").code == 4);
}

TEST_CASE("fundsol") {
    const Result a = run("fundsol --n 1 --eps 1");
    CHECK(a.code == 0);
    CHECK(a.out.find("rhs 8.00000000000000e0") != std::string::npos);
    CHECK(run("fundsol --n 2 --point 1 2 3").code == 3);
}
