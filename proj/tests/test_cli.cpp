#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "algame/cli.hpp"

using namespace algame;

namespace {

struct RunResult {
    int code;
    std::string out;
    std::string err;
};

RunResult run(const std::vector<std::string>& args, const std::string& input = "") {
    std::istringstream in(input);
    std::ostringstream out, err;
    int code = run_cli(args, in, out, err);
    return {code, out.str(), err.str()};
}

} // namespace

TEST_CASE("outcome command") {
    auto r = run({"outcome", "--abelian", "Z/4 + Z/8", "--rule", "normal"});
    CHECK(r.code == 0);
    CHECK(r.out == "N\n");

    r = run({"outcome", "--abelian", "Z/4 + Z/4", "--rule", "normal"});
    CHECK(r.out == "P\n");

    r = run({"outcome", "--ring", "GF(3)", "--rule", "misere"});
    CHECK(r.out == "P\n");

    r = run({"outcome", "--group", "D4", "--rule", "normal"});
    CHECK(r.out == "N\n");

    r = run({"outcome", "--group", "D5", "--game", "subgroup"});
    CHECK(r.out == "P\n");

    r = run({"outcome", "--abelian", "Z + Z"});
    CHECK(r.out == "P\n");

    r = run({"outcome", "--compound", "nim:*1 | nim:*1"});
    CHECK(r.out == "N\n");
}

TEST_CASE("nimber command") {
    auto r = run({"nimber", "--abelian", "Z/4 + Z"});
    CHECK(r.code == 0);
    CHECK(r.out == "w+2\n");

    r = run({"nimber", "--abelian", "Z/12"});
    CHECK(r.out == "3\n");

    r = run({"nimber", "--nim", "*4"});
    CHECK(r.out == "4\n");

    r = run({"nimber", "--ring", "SqZero(2,2)xGF(2)"});
    CHECK(r.out == "4\n");
}

TEST_CASE("json output matches text output") {
    auto text = run({"outcome", "--abelian", "Z/4 + Z/8"});
    auto json = run({"outcome", "--abelian", "Z/4 + Z/8", "--json"});
    auto j = nlohmann::json::parse(json.out);
    CHECK(j["outcome"].get<std::string>() + "\n" == text.out);
    CHECK(j["input"] == "Z/4 + Z/8");
    CHECK(j["rule"] == "normal");

    auto njson = run({"nimber", "--abelian", "Z/4 + Z", "--json"});
    auto nj = nlohmann::json::parse(njson.out);
    CHECK(nj["nimber"] == "w+2");
}

TEST_CASE("move command") {
    auto r = run({"move", "--abelian", "Z/4 + Z/8", "--rule", "normal"});
    CHECK(r.code == 0);
    CHECK(r.out == "0,4\n");

    r = run({"move", "--abelian", "Z/4 + Z/4", "--rule", "normal"});
    CHECK(r.code == 3); // P-position

    r = run({"move", "--ring", "Z/4", "--rule", "misere"});
    CHECK(r.code == 0);
    CHECK(r.out == "2\n");
}

TEST_CASE("options command") {
    auto r = run({"options", "--abelian", "Z/4 + Z/4"});
    CHECK(r.code == 0);
    CHECK(r.out == "Z/2 + Z/4\nZ/4\n");

    r = run({"options", "--nim", "*2"});
    CHECK(r.out == "*0\n*1\n");
}

TEST_CASE("table command") {
    auto r = run({"table", "--max-n", "2", "--max-m", "4"});
    CHECK(r.code == 0);
    std::istringstream lines(r.out);
    std::string header, row0, row1, row2;
    std::getline(lines, header);
    std::getline(lines, row0);
    std::getline(lines, row1);
    std::getline(lines, row2);
    CHECK(header == "n\\m\t0\t1\t2\t3\t4");
    CHECK(row0 == "0\t0\t1\t2\t3\t4");
    CHECK(row1 == "1\t\t0\t3\t4\t5");
    CHECK(row2 == "2\t\t\t0\t1\t6");
}

TEST_CASE("verify command") {
    auto r = run({"verify", "figure1"});
    CHECK(r.code == 0);
    CHECK(r.out.find("PASS figure1.table") != std::string::npos);

    r = run({"verify", "no-such-suite"});
    CHECK(r.code == 2);
}

TEST_CASE("exit codes") {
    CHECK(run({"outcome", "--abelian", "Z/oops"}).code == 2);
    CHECK(run({"outcome"}).code == 2);                          // missing structure
    CHECK(run({"bogus-subcommand"}).code == 2);
    CHECK(run({"nimber", "--abelian", "Z + Z"}).code == 3);     // no formula family
    CHECK(run({"nimber", "--abelian", "Z/256", "--max-positions", "3"}).code == 4);
    CHECK(run({"outcome", "--group", "S6"}).code == 4);          // beyond the quotient-game cap
}

TEST_CASE("identical inputs give byte-identical output") {
    std::vector<std::vector<std::string>> cmds{
        {"table", "--max-n", "3", "--max-m", "5"},
        {"options", "--ring", "Z/12"},
        {"options", "--group", "D4"},
        {"nimber", "--compound", "abelian:Z/4 | nim:*2", "--json"},
    };
    for (const auto& cmd : cmds) CHECK(run(cmd).out == run(cmd).out);
}

TEST_CASE("cache file round trip") {
    std::string path = "test_cli_cache.tmp";
    std::remove(path.c_str());
    auto r1 = run({"nimber", "--abelian", "Z/12", "--cache", path});
    CHECK(r1.code == 0);
    std::ifstream in(path);
    REQUIRE(in.good());
    std::stringstream content;
    content << in.rdbuf();
    CHECK(content.str().find("ab:12\tN\tN\t3") != std::string::npos);

    auto r2 = run({"nimber", "--abelian", "Z/12", "--cache", path});
    CHECK(r2.out == "3\n");
    std::remove(path.c_str());
}

TEST_CASE("play a short game") {
    // Z/2 under normal play: the human quotients by 1 and wins.
    auto r = run({"play", "--abelian", "Z/2", "--rule", "normal"}, "1\n");
    CHECK(r.code == 0);
    CHECK(r.out.find("you win") != std::string::npos);

    // Trivial group: the human cannot move; result depends on the rule.
    r = run({"play", "--abelian", "Z/1", "--rule", "normal"});
    CHECK(r.out.find("engine wins") != std::string::npos);
    r = run({"play", "--abelian", "Z/1", "--rule", "misere"});
    CHECK(r.out.find("you win") != std::string::npos);

    // Invalid input is re-prompted, EOF aborts.
    r = run({"play", "--abelian", "Z/2", "--rule", "normal"}, "garbage\n");
    CHECK(r.out.find("invalid move") != std::string::npos);
    CHECK(r.out.find("session aborted") != std::string::npos);

    // Z/4 + Z/8 normal: play 0,4 and the engine faces a P-position; finish
    // the square game and the human should win with correct play.
    r = run({"play", "--abelian", "Z/4 + Z/8", "--rule", "normal"}, "0,4\n0,1\n1\n");
    CHECK(r.out.find("you win") != std::string::npos);
}

TEST_CASE("play group and ring games") {
    // D4 quotient game is N; after any human move the engine should win.
    auto r = run({"play", "--group", "D4", "--rule", "normal"}, "r\ns\n");
    CHECK(r.code == 0);
    CHECK(r.out.find("engine wins") != std::string::npos);

    // Subgroup game on D5 is P: moves r then s fill the group, human last.
    r = run({"play", "--group", "D5", "--game", "subgroup", "--rule", "normal"}, "r\ns\n");
    CHECK(r.code == 0);
    CHECK(r.out.find("game over") != std::string::npos);

    // GF(3) misere: every move ends the game, so the human moves last and
    // loses.
    r = run({"play", "--ring", "GF(3)", "--rule", "misere"}, "1\n");
    CHECK(r.code == 0);
    CHECK(r.out.find("engine wins") != std::string::npos);
}
