#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "oracles.hpp"
#include "turanlab/canonical.hpp"
#include "turanlab/enumeration.hpp"
#include "turanlab/extremal.hpp"

using namespace turanlab;

namespace {

struct TempFile {
    std::string path;
    explicit TempFile(const std::string& name) : path("./tmp_" + name) { std::remove(path.c_str()); }
    ~TempFile() { std::remove(path.c_str()); }
};

}  // namespace

TEST_CASE("generalized turan values on hand-checked instances") {
    ExtremalRecord rec = generalized_turan(5, complete_graph(3), complete_graph(4));
    CHECK(rec.value == 4);
    CHECK(rec.exhaustive);
    REQUIRE(rec.witnesses.size() == 1);
    CHECK(rec.witnesses[0] == canonical_graph6(turan_graph(5, 3)));
    CHECK_FALSE(rec.witnesses_truncated);

    CHECK(generalized_turan(4, complete_graph(3), complete_graph(3)).value == 0);
    CHECK(generalized_turan(6, complete_graph(2), complete_graph(3)).value == 9);
}

TEST_CASE("generalized turan agrees with labeled brute force") {
    std::vector<std::pair<Graph, Graph>> pairs = {
        {complete_graph(2), complete_graph(3)},
        {complete_graph(3), complete_graph(4)},
        {path_graph(3), complete_graph(3)},
        {complete_graph(2), cycle_graph(4)},
    };
    for (const auto& [h, f] : pairs)
        for (int n = 3; n <= 5; ++n)
            CHECK(generalized_turan(n, h, f).value == oracle::extremal_value(n, h, f));
}

TEST_CASE("every witness attains the value and is F-free") {
    ExtremalRecord rec = generalized_turan(6, path_graph(3), complete_graph(3));
    CHECK(rec.value > 0);
    for (const std::string& w : rec.witnesses) {
        Graph g = graph_from_graph6(w);
        CHECK(g.order() == 6);
        CHECK_FALSE(oracle::contains(g, complete_graph(3)));
        CHECK(oracle::count_copies(path_graph(3), g) == rec.value);
    }
}

TEST_CASE("records dominate the multipartite lower bound") {
    std::vector<std::pair<Graph, Graph>> pairs = {
        {complete_graph(2), complete_graph(3)},
        {complete_graph(3), complete_graph(4)},
        {path_graph(3), complete_graph(3)},
        {cycle_graph(4), complete_graph(3)},
    };
    for (const auto& [h, f] : pairs) {
        int parts = chromatic_number(f) - 1;
        for (int n = h.order(); n <= 6; ++n) {
            ExtremalRecord rec = generalized_turan(n, h, f);
            CHECK(rec.value >=
                  count_copies_in_multipartite(h, PartSizes::balanced(n, parts)));
        }
    }
}

TEST_CASE("non-degenerate pairs below the chromatic threshold have positive values") {
    std::vector<std::pair<Graph, Graph>> pairs = {
        {complete_graph(2), complete_graph(3)},
        {complete_graph(3), complete_graph(4)},
        {cycle_graph(5), complete_graph(4)},
        {path_graph(4), complete_graph(3)},
    };
    for (const auto& [h, f] : pairs) {
        REQUIRE_FALSE(is_degenerate_pair(h, f));
        REQUIRE(chromatic_number(h) < chromatic_number(f));
        for (int n = h.order(); n <= 6; ++n)
            CHECK(generalized_turan(n, h, f).value > 0);
    }
}

TEST_CASE("degenerate pair test") {
    CHECK(is_degenerate_pair(cycle_graph(5), cycle_graph(5)));
    CHECK_FALSE(is_degenerate_pair(cycle_graph(5), complete_graph(3)));
    CHECK(is_degenerate_pair(complete_graph(3), cycle_graph(5)));
    CHECK(is_degenerate_pair(complete_graph(2), cycle_graph(6)));
}

TEST_CASE("stream-backed extremal records are not marked exhaustive") {
    std::ostringstream lines;
    enumerate_free_graphs(5, complete_graph(4),
                          [&](const Graph& g) { lines << graph_to_graph6(g) << "\n"; });
    std::istringstream in(lines.str());
    ExtremalRecord rec = generalized_turan_over_stream(in, 5, complete_graph(3), complete_graph(4));
    CHECK(rec.value == 4);
    CHECK_FALSE(rec.exhaustive);
    CHECK(rec.witnesses == std::vector<std::string>{canonical_graph6(turan_graph(5, 3))});
}

TEST_CASE("witness lists cap at 100 with the truncation flag set") {
    // Counting K_1 against a never-present forbidden graph makes every class
    // on 7 vertices a witness; there are 1044 of them.
    ExtremalRecord rec = generalized_turan(7, complete_graph(1), complete_graph(8));
    CHECK(rec.value == 7);
    CHECK(rec.witnesses.size() == kWitnessCap);
    CHECK(rec.witnesses_truncated);
    CHECK(std::is_sorted(rec.witnesses.begin(), rec.witnesses.end()));
}

TEST_CASE("catalog put/get round trip") {
    TempFile file("catalog_roundtrip.tsv");
    Graph h = complete_graph(2), f = complete_graph(3);
    {
        Catalog cat(file.path);
        CHECK_FALSE(cat.get(5, h, f).has_value());
        cat.put(generalized_turan(5, h, f));
        cat.put(generalized_turan(6, h, f));
        auto rec = cat.get(5, h, f);
        REQUIRE(rec.has_value());
        CHECK(rec->value == 6);
    }
    // Re-reading the file reproduces the index.
    Catalog reloaded(file.path);
    CHECK(reloaded.size() == 2);
    auto rec = reloaded.get(6, h, f);
    REQUIRE(rec.has_value());
    CHECK(rec->value == 9);
    CHECK(rec->exhaustive);
    CHECK(rec->witnesses == generalized_turan(6, h, f).witnesses);

    auto series = reloaded.entries_for(h, f);
    REQUIRE(series.size() == 2);
    CHECK(series[0].n == 5);
    CHECK(series[1].n == 6);
}

TEST_CASE("catalog last-writer-wins on duplicate keys") {
    TempFile file("catalog_lastwins.tsv");
    Catalog cat(file.path);
    ExtremalRecord rec = generalized_turan(4, complete_graph(2), complete_graph(3));
    cat.put(rec);
    rec.value = 999;  // simulate a corrected record
    rec.witnesses.clear();
    cat.put(rec);
    CHECK(cat.get(4, complete_graph(2), complete_graph(3))->value == 999);
    Catalog reloaded(file.path);
    CHECK(reloaded.get(4, complete_graph(2), complete_graph(3))->value == 999);
    CHECK(reloaded.size() == 1);

    std::ifstream in(file.path);
    int lines = 0;
    std::string line;
    while (std::getline(in, line)) ++lines;
    CHECK(lines == 2);  // append-only: both writes are on disk
}

TEST_CASE("catalog file format is six tab-separated fields") {
    ExtremalRecord rec = generalized_turan(5, complete_graph(3), complete_graph(4));
    std::string line = Catalog::format_line(rec);
    CHECK(line == "5\t" + canonical_graph6(complete_graph(3)) + "\t" +
                      canonical_graph6(complete_graph(4)) + "\t4\t1\t" +
                      canonical_graph6(turan_graph(5, 3)));
    ExtremalRecord back = Catalog::parse_line(line, 1);
    CHECK(back.n == rec.n);
    CHECK(back.value == rec.value);
    CHECK(back.exhaustive == rec.exhaustive);
    CHECK(back.witnesses == rec.witnesses);

    CHECK_THROWS_AS(Catalog::parse_line("5\tA_\tA_", 3), IoFailure);
    CHECK_THROWS_AS(Catalog::parse_line("x\tA_\tA_\t1\t1\t", 4), IoFailure);
}

TEST_CASE("catalog io failure on unwritable path") {
    Catalog cat("/nonexistent-dir/catalog.tsv");
    CHECK_THROWS_AS(cat.put(generalized_turan(3, complete_graph(2), complete_graph(3))), IoFailure);
}

TEST_CASE("keys are canonical: relabeled queries hit the same record") {
    TempFile file("catalog_canonical.tsv");
    Catalog cat(file.path);
    cat.put(generalized_turan(5, path_graph(3), complete_graph(4)));
    Graph relabeled_p3 = Graph::from_edges(3, {{1, 0}, {1, 2}});
    Graph relabeled_p3b = Graph::from_edges(3, {{0, 2}, {2, 1}});
    CHECK(cat.get(5, relabeled_p3, complete_graph(4)).has_value());
    CHECK(cat.get(5, relabeled_p3b, complete_graph(4)).has_value());
}
