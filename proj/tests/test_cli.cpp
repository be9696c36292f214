#include <doctest.h>

#include "cli.hpp"

#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

namespace {

struct RunResult {
    int code = 0;
    std::string out;
    std::string err;
};

RunResult run_cli(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    int code = setsys::cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::vector<std::string> lines_of(const std::string& text) {
    std::vector<std::string> lines;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) lines.push_back(line);
    return lines;
}

}  // namespace

TEST_CASE("count: csv is the default away from a terminal") {
    RunResult r = run_cli({"count", "--family", "h-prime", "--to", "4"});
    CHECK(r.code == 0);
    CHECK(r.err.empty());
    const auto lines = lines_of(r.out);
    REQUIRE(lines.size() == 5);
    CHECK(lines[0] == "family,param,n,value");
    CHECK(lines[1] == "h-prime,,1,1");
    CHECK(lines[2] == "h-prime,,2,2");
    CHECK(lines[3] == "h-prime,,3,7");
    CHECK(lines[4] == "h-prime,,4,28");
}

TEST_CASE("count: exact and brute methods agree") {
    RunResult exact = run_cli({"count", "--family", "h-double-prime", "--to", "6"});
    RunResult brute =
        run_cli({"count", "--family", "h-double-prime", "--to", "6", "--method", "brute"});
    CHECK(exact.code == 0);
    CHECK(brute.code == 0);
    CHECK(exact.out == brute.out);

    RunResult jobs =
        run_cli({"count", "--family", "h-prime", "--to", "6", "--method", "brute", "--jobs", "3"});
    RunResult serial = run_cli({"count", "--family", "h-prime", "--to", "6"});
    CHECK(jobs.out == serial.out);
}

TEST_CASE("count: degree-bounded families carry their parameter") {
    RunResult r = run_cli({"count", "--family", "h-double-prime-k", "--k", "1", "--to", "5"});
    CHECK(r.code == 0);
    const auto lines = lines_of(r.out);
    REQUIRE(lines.size() == 6);
    // degree <= 1 collapses to the bell numbers
    CHECK(lines[1] == "h-double-prime-k,k=1,1,1");
    CHECK(lines[2] == "h-double-prime-k,k=1,2,2");
    CHECK(lines[3] == "h-double-prime-k,k=1,3,5");
    CHECK(lines[4] == "h-double-prime-k,k=1,4,15");
    CHECK(lines[5] == "h-double-prime-k,k=1,5,52");

    // no exact route exists for the bounded families
    RunResult bad = run_cli({"count", "--family", "h-prime-k", "--k", "2", "--to", "4",
                             "--method", "exact"});
    CHECK(bad.code == 2);
    CHECK(bad.err.find("generated, not counted in closed form") != std::string::npos);

    // --k is required
    CHECK(run_cli({"count", "--family", "h-prime-k", "--to", "4"}).code == 2);
}

TEST_CASE("count: other families") {
    RunResult bell = run_cli({"count", "--family", "bell", "--to", "3"});
    CHECK(lines_of(bell.out) ==
          std::vector<std::string>{"family,param,n,value", "bell,,1,1", "bell,,2,2", "bell,,3,5"});

    // --from 0 exposes the n = 0 row
    RunResult bell0 = run_cli({"count", "--family", "bell", "--from", "0", "--to", "1"});
    CHECK(lines_of(bell0.out) ==
          std::vector<std::string>{"family,param,n,value", "bell,,0,1", "bell,,1,1"});

    RunResult ic = run_cli({"count", "--family", "interval-coeff", "--to", "3"});
    const auto ic_lines = lines_of(ic.out);
    REQUIRE(ic_lines.size() == 4);
    CHECK(ic_lines[2] == "interval-coeff,,2,3/2");
    CHECK(ic_lines[3] == "interval-coeff,,3,13/6");

    RunResult words = run_cli({"count", "--family", "sparse-words", "--r", "3", "--k", "2",
                               "--to", "4"});
    const auto word_lines = lines_of(words.out);
    REQUIRE(word_lines.size() == 5);
    CHECK(word_lines[1] == "sparse-words,r=3;k=2,1,3");
    CHECK(word_lines[2] == "sparse-words,r=3;k=2,2,6");
    CHECK(word_lines[3] == "sparse-words,r=3;k=2,3,12");
    CHECK(word_lines[4] == "sparse-words,r=3;k=2,4,24");

    RunResult mat = run_cli({"count", "--family", "matrices-F", "--flags", "0111", "--to", "4"});
    const auto mat_lines = lines_of(mat.out);
    CHECK(mat_lines[4] == "matrices-F,flags=0111,4,41");
}

TEST_CASE("count: usage errors exit 2 with a message") {
    RunResult unknown = run_cli({"count", "--family", "nope", "--to", "3"});
    CHECK(unknown.code == 2);
    CHECK_FALSE(unknown.err.empty());
    CHECK(run_cli({"count", "--family", "h-prime"}).code == 2);            // missing --to
    CHECK(run_cli({"count", "--family", "h-prime", "--to", "0"}).code == 2);
    CHECK(run_cli({"count", "--family", "h-prime", "--from", "5", "--to", "3"}).code == 2);
    CHECK(run_cli({"count", "--family", "matrices-F", "--flags", "31", "--to", "3"}).code == 2);
    CHECK(run_cli({"nonsense"}).code == 2);
    CHECK(run_cli({}).code == 2);
}

TEST_CASE("json and markdown renderings") {
    RunResult js = run_cli({"count", "--family", "h-prime", "--to", "3", "--format", "json"});
    CHECK(js.code == 0);
    auto doc = nlohmann::json::parse(js.out);
    REQUIRE(doc.is_object());
    REQUIRE(doc["rows"].is_array());
    REQUIRE(doc["rows"].size() == 3);
    CHECK(doc["rows"][2]["family"] == "h-prime");
    CHECK(doc["rows"][2]["n"] == "3");
    CHECK(doc["rows"][2]["value"] == "7");

    RunResult md = run_cli({"count", "--family", "h-prime", "--to", "3", "--format", "md"});
    CHECK(md.code == 0);
    CHECK(md.out.find("### h-prime") == 0);
    CHECK(md.out.find("| family ") != std::string::npos);
    CHECK(md.out.find("|---") != std::string::npos);
    CHECK(md.out.find("| 3 | 7 ") != std::string::npos);

    CHECK(run_cli({"count", "--family", "bell", "--to", "2", "--format", "yaml"}).code == 2);
}

TEST_CASE("output redirects to a file") {
    const auto path = std::filesystem::temp_directory_path() / "setsys-cli-test.csv";
    std::filesystem::remove(path);
    RunResult r = run_cli({"count", "--family", "bell", "--to", "2", "--output", path.string()});
    CHECK(r.code == 0);
    CHECK(r.out.empty());
    std::ifstream in(path);
    std::stringstream buf;
    buf << in.rdbuf();
    CHECK(lines_of(buf.str()).size() == 3);  // header + n = 1, 2
    std::filesystem::remove(path);
}

TEST_CASE("enumerate: canonical stream as JSON lines") {
    RunResult r = run_cli({"enumerate", "--weight", "3"});
    CHECK(r.code == 0);
    const auto lines = lines_of(r.out);
    REQUIRE(lines.size() == 10);
    CHECK(lines[0] == R"({"edges":[[1],[1],[1]]})");
    CHECK(lines[2] == R"({"edges":[[1],[1,2]]})");
    CHECK(lines[9] == R"({"edges":[[1,3],[2]]})");

    RunResult simple = run_cli({"enumerate", "--weight", "3", "--simple"});
    CHECK(lines_of(simple.out).size() == 7);

    RunResult capped = run_cli({"enumerate", "--weight", "3", "--limit", "4"});
    const auto capped_lines = lines_of(capped.out);
    REQUIRE(capped_lines.size() == 4);
    CHECK(capped_lines[3] == R"({"edges":[[1],[2],[2]]})");

    RunResult deg = run_cli({"enumerate", "--weight", "4", "--max-degree", "1"});
    CHECK(lines_of(deg.out).size() == 15);  // bell(4)

    CHECK(run_cli({"enumerate", "--weight", "0"}).code == 2);
    CHECK(run_cli({"enumerate", "--weight", "25"}).code == 2);
}

TEST_CASE("verify: suites report and exit clean") {
    RunResult r = run_cli({"verify", "--suite", "sparse", "--max-weight", "5"});
    CHECK(r.code == 0);
    CHECK(r.out.find("[ok]") != std::string::npos);
    CHECK(r.out.find("[FAIL]") == std::string::npos);
    CHECK(r.out.find("0 failures") != std::string::npos);
    CHECK(run_cli({"verify", "--suite", "bogus"}).code == 2);
}

TEST_CASE("bounds: single row and table") {
    RunResult one = run_cli({"bounds", "--n", "6", "--k", "2"});
    CHECK(one.code == 0);
    const auto lines = lines_of(one.out);
    REQUIRE(lines.size() == 2);
    CHECK(lines[0] == "n,k,lower,middle,upper,holds");
    CHECK(lines[1] == "6,2,533/2,844,8323/4,yes");

    RunResult table = run_cli({"bounds", "--max-n", "4"});
    CHECK(table.code == 0);
    // k = 1..4 plus the unbounded row, for each n
    CHECK(lines_of(table.out).size() == 1 + 4 * 5);
    CHECK(table.out.find(",-,") != std::string::npos);
    CHECK(table.out.find("4,4,25/8,41,375/4,yes") != std::string::npos);
}

TEST_CASE("asymptotics subcommand") {
    RunResult a = run_cli({"asymptotics", "--op", "alpha", "--from", "1", "--to", "2"});
    CHECK(a.code == 0);
    const auto lines = lines_of(a.out);
    REQUIRE(lines.size() == 3);
    CHECK(lines[1] == "1,1,0,0");  // k, value, residual, iterations
    CHECK(lines[2].find("2,0.732050807") == 0);

    RunResult c = run_cli({"asymptotics", "--op", "constants"});
    CHECK(c.code == 0);
    CHECK(c.out.find("log2") != std::string::npos);
    CHECK(c.out.find("0.693147") != std::string::npos);

    RunResult b = run_cli({"asymptotics", "--op", "bell-estimate", "--n", "50"});
    CHECK(b.code == 0);
    CHECK(b.out.find("1.168") != std::string::npos);

    RunResult f = run_cli({"asymptotics", "--op", "fubini", "--n", "20"});
    CHECK(f.code == 0);
    CHECK(lines_of(f.out).size() == 2);

    // without --n the estimate ops fall back to a default range
    RunResult dflt = run_cli({"asymptotics", "--op", "bell-estimate"});
    CHECK(dflt.code == 0);
    CHECK(lines_of(dflt.out).size() == 21);

    CHECK(run_cli({"asymptotics", "--op", "nope"}).code == 2);
    CHECK(run_cli({"asymptotics", "--op", "bell-ratio"}).code == 2);  // missing --n
    CHECK(run_cli({"asymptotics", "--op", "alpha", "--from", "5", "--to", "2"}).code == 2);
}

TEST_CASE("experiment: exact share table") {
    RunResult r = run_cli({"experiment", "--max-n", "4"});
    CHECK(r.code == 0);
    const auto lines = lines_of(r.out);
    REQUIRE(lines.size() == 5);
    CHECK(lines[0] == "n,simple,all,share,share-decimal");
    CHECK(lines[3].find("3,7,10,7/10,0.7") == 0);
    CHECK(lines[4].find("4,28,41,28/41,") == 0);
}

TEST_CASE("help succeeds") {
    RunResult top = run_cli({"--help"});
    CHECK(top.code == 0);
    CHECK(top.out.find("count") != std::string::npos);
    CHECK(top.out.find("enumerate") != std::string::npos);
    RunResult sub = run_cli({"count", "--help"});
    CHECK(sub.code == 0);
    CHECK(sub.out.find("--family") != std::string::npos);
}
