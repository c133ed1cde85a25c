#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cstdio>
#include <string>

#include <json.hpp>

#include "turanlab/canonical.hpp"
#include "turanlab/graph.hpp"

using json = nlohmann::json;
using namespace turanlab;

namespace {

struct RunResult {
    int exit_code = -1;
    std::string out;
    std::string err;
};

std::string shell_quote(const std::string& s) {
    std::string q = "'";
    for (char c : s) {
        if (c == '\'')
            q += "'\\''";
        else
            q.push_back(c);
    }
    q += "'";
    return q;
}

RunResult run_cli(const std::vector<std::string>& args) {
    std::string cmd = TURANLAB_CLI_PATH;
    for (const auto& a : args) cmd += " " + shell_quote(a);
    std::string err_file = "./tmp_cli_stderr.txt";
    cmd += " 2>" + err_file;
    RunResult res;
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::array<char, 4096> buf{};
    size_t got;
    while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) res.out.append(buf.data(), got);
    int status = pclose(pipe);
    res.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    if (FILE* ef = fopen(err_file.c_str(), "r")) {
        while ((got = fread(buf.data(), 1, buf.size(), ef)) > 0) res.err.append(buf.data(), got);
        fclose(ef);
        std::remove(err_file.c_str());
    }
    return res;
}

}  // namespace

TEST_CASE("cliques subcommand counts triangles in a turan graph") {
    std::string t35 = graph_to_graph6(turan_graph(5, 3));
    RunResult res = run_cli({"cliques", "--r", "3", "--host", t35});
    CHECK(res.exit_code == 0);
    json doc = json::parse(res.out);
    CHECK(doc["status"] == "ok");
    CHECK(doc["payload"]["count"] == 4);
    CHECK(doc.contains("elapsed_ms"));
}

TEST_CASE("distance subcommand on the bipartite turan graph") {
    std::string t = graph_to_graph6(turan_graph(10, 2));
    RunResult res = run_cli({"distance", "--graph", t, "--parts", "2"});
    CHECK(res.exit_code == 0);
    json doc = json::parse(res.out);
    CHECK(doc["payload"]["distance"] == 0);
}

TEST_CASE("malformed graph input exits 1 with a machine-readable name") {
    RunResult res = run_cli({"count", "--pattern", "*bad*", "--host", "A_"});
    CHECK(res.exit_code == 1);
    CHECK(res.out.empty());
    json doc = json::parse(res.err);
    CHECK(doc["status"] == "error");
    CHECK(doc["error"] == "MalformedGraph6");
}

TEST_CASE("usage errors exit 2") {
    CHECK(run_cli({"cliques", "--r", "3"}).exit_code == 2);       // missing --host
    CHECK(run_cli({"no-such-command"}).exit_code == 2);
    CHECK(run_cli({"census", "--host", "C~", "--pattern", "A_", "--m", "2", "--threshold",
                   "zzz"})
              .exit_code == 2);  // malformed rational
}

TEST_CASE("enumerate streams raw graph6 lines") {
    RunResult res = run_cli({"enumerate", "--n", "4", "--forbid", graph_to_graph6(complete_graph(3))});
    CHECK(res.exit_code == 0);
    std::vector<std::string> lines;
    std::string cur;
    for (char c : res.out) {
        if (c == '\n') {
            lines.push_back(cur);
            cur.clear();
        } else {
            cur.push_back(c);
        }
    }
    CHECK(lines.size() == 7);
    for (const auto& line : lines) CHECK(graph_from_graph6(line).order() == 4);
}

TEST_CASE("extremal and density compose through a catalog file") {
    std::string cat = "./tmp_cli_catalog.tsv";
    std::remove(cat.c_str());
    std::string k2 = graph_to_graph6(complete_graph(2));
    std::string k3 = graph_to_graph6(complete_graph(3));
    for (int n = 2; n <= 7; ++n) {
        RunResult res = run_cli({"extremal", "--n", std::to_string(n), "--pattern", k2,
                                 "--forbid", k3, "--catalog", cat});
        REQUIRE(res.exit_code == 0);
        json doc = json::parse(res.out);
        CHECK(doc["payload"]["value"] == n * n / 4);
        CHECK(doc["payload"]["exhaustive"] == true);
    }
    RunResult density = run_cli({"density", "--pattern", k2, "--forbid", k3, "--max-n", "7",
                                 "--catalog", cat});
    REQUIRE(density.exit_code == 0);
    json doc = json::parse(density.out);
    CHECK(doc["payload"]["upper"] == "4/7");
    CHECK(doc["payload"]["lower"] == "1/2");

    RunResult monotone = run_cli({"monotone", "--catalog", cat, "--pattern", k2, "--forbid", k3});
    REQUIRE(monotone.exit_code == 0);
    CHECK(json::parse(monotone.out)["payload"]["violations"].empty());
    std::remove(cat.c_str());
}

TEST_CASE("domain errors carry stable machine-readable names") {
    // 15 vertices exceeds the edit-distance sweep cap.
    Graph big(15);
    RunResult res = run_cli({"distance", "--graph", graph_to_graph6(big), "--parts", "2"});
    CHECK(res.exit_code == 1);
    CHECK(json::parse(res.err)["error"] == "TooLarge");

    RunResult kk = run_cli({"degree-check", "--graph", graph_to_graph6(complete_graph(4)),
                            "--x", "0", "--k", "4", "--r", "3", "--alpha", "0"});
    CHECK(kk.exit_code == 1);
    CHECK(json::parse(kk.err)["error"] == "NotKkFree");
}

TEST_CASE("extremal accepts an external graph6 stream") {
    std::string stream_file = "./tmp_cli_stream.g6";
    {
        RunResult gen = run_cli({"enumerate", "--n", "5", "--forbid",
                                 graph_to_graph6(complete_graph(4))});
        REQUIRE(gen.exit_code == 0);
        FILE* f = fopen(stream_file.c_str(), "w");
        REQUIRE(f != nullptr);
        fwrite(gen.out.data(), 1, gen.out.size(), f);
        fclose(f);
    }
    RunResult res = run_cli({"extremal", "--n", "5", "--pattern",
                             graph_to_graph6(complete_graph(3)), "--forbid",
                             graph_to_graph6(complete_graph(4)), "--stream", stream_file});
    REQUIRE(res.exit_code == 0);
    json doc = json::parse(res.out);
    CHECK(doc["payload"]["value"] == 4);
    CHECK(doc["payload"]["exhaustive"] == false);
    std::remove(stream_file.c_str());
}

TEST_CASE("payloads are byte-for-byte reproducible") {
    std::string pet = "IheA@GUAo";  // Petersen
    auto payload_of = [&](const RunResult& r) {
        return json::parse(r.out)["payload"].dump();
    };
    RunResult a = run_cli({"symmetrize", "--graph", pet, "--r", "2"});
    RunResult b = run_cli({"symmetrize", "--graph", pet, "--r", "2"});
    REQUIRE(a.exit_code == 0);
    CHECK(payload_of(a) == payload_of(b));

    RunResult c = run_cli({"count", "--pattern", "DUW", "--host", pet, "--threads", "3"});
    RunResult d = run_cli({"count", "--pattern", "DUW", "--host", pet});
    CHECK(payload_of(c) == payload_of(d));
    CHECK(json::parse(c.out)["payload"]["count"] == 12);
}

TEST_CASE("stdin hosts are read as one graph6 line") {
    std::string cmd = std::string(TURANLAB_CLI_PATH) + " chromatic --graph - 2>/dev/null";
    FILE* pipe = popen(("echo 'DUW' | " + cmd).c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::array<char, 4096> buf{};
    std::string out;
    size_t got;
    while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), got);
    int status = pclose(pipe);
    CHECK(WEXITSTATUS(status) == 0);
    CHECK(json::parse(out)["payload"]["chi"] == 3);
}
