#include <doctest.h>

#include <string>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "tifs/graph_io.hpp"
#include "tifs/ray_io.hpp"

using namespace tifs;

namespace {

// Reference graph6 encoder written straight off the published format rules,
// independent of the library path: build the bit string, then 6-bit chunks.
std::string reference_graph6(const Graph& g) {
    std::string out;
    int n = g.size();
    if (n <= 62) {
        out.push_back(static_cast<char>(63 + n));
    } else {
        out.push_back('~');
        out.push_back(static_cast<char>(63 + ((n >> 12) & 63)));
        out.push_back(static_cast<char>(63 + ((n >> 6) & 63)));
        out.push_back(static_cast<char>(63 + (n & 63)));
    }
    std::string bits;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i) bits.push_back(g.has_edge(i, j) ? '1' : '0');
    while (bits.size() % 6 != 0) bits.push_back('0');
    for (std::size_t k = 0; k < bits.size(); k += 6) {
        int value = 0;
        for (int b = 0; b < 6; ++b) value = value * 2 + (bits[k + static_cast<std::size_t>(b)] - '0');
        out.push_back(static_cast<char>(63 + value));
    }
    return out;
}

}  // namespace

TEST_CASE("graph6 known strings") {
    CHECK(to_graph6(fixtures::complete(3)) == "Bw");
    CHECK(to_graph6(fixtures::complete(4)) == "C~");
    CHECK(to_graph6(fixtures::cycle(5)) == "Dhc");
    CHECK(to_graph6(Graph(1)) == "@");
}

TEST_CASE("graph6 matches the reference encoder") {
    std::mt19937_64 rng(8);
    for (int trial = 0; trial < 300; ++trial) {
        int n = 1 + static_cast<int>(rng() % 14);
        Graph g = oracle::random_graph(rng, n, 0.5);
        CHECK(to_graph6(g) == reference_graph6(g));
    }
    CHECK(to_graph6(fixtures::bug_graph()) == reference_graph6(fixtures::bug_graph()));
    // 63- and 64-vertex graphs use the long size form.
    std::mt19937_64 rng2(9);
    for (int n : {63, 64}) {
        Graph g = oracle::random_graph(rng2, n, 0.05);
        CHECK(to_graph6(g) == reference_graph6(g));
        CHECK(from_graph6(to_graph6(g)) == g);
    }
}

TEST_CASE("graph6 round trip") {
    std::mt19937_64 rng(123);
    for (int trial = 0; trial < 300; ++trial) {
        int n = 1 + static_cast<int>(rng() % 16);
        Graph g = oracle::random_graph(rng, n, 0.4);
        Graph back = from_graph6(to_graph6(g));
        CHECK(back == g);
    }
}

TEST_CASE("graph6 parse errors carry positions") {
    CHECK_THROWS_AS(from_graph6(""), parse_error);
    CHECK_THROWS_AS(from_graph6("C"), parse_error);          // truncated
    CHECK_THROWS_AS(from_graph6("C~~"), parse_error);        // trailing bytes
    CHECK_THROWS_AS(from_graph6("B\x07w"), parse_error);     // invalid character
    try {
        from_graph6(std::string("B") + '\x07');
        FAIL("expected parse_error");
    } catch (const parse_error& e) {
        CHECK(e.position() == 1);
    }
}

TEST_CASE("json round trip keeps labels") {
    Graph bug = fixtures::bug_graph();
    Graph back = from_json(to_json(bug));
    CHECK(back == bug);
    CHECK(back.label(0) == "A");
    CHECK_THROWS_AS(from_json("{"), parse_error);
    CHECK_THROWS_AS(from_json("{\"n\": 0}"), parse_error);
    CHECK_THROWS_AS(from_json("{\"n\": 2, \"edges\": [[0, 2]]}"), parse_error);
}

TEST_CASE("dot output styles contexts and round trips") {
    Graph bug = fixtures::bug_graph();
    std::string dot = to_dot(bug, 3);
    CHECK(dot.find("label=\"A\"") != std::string::npos);
    CHECK(dot.find("#1b9e77") != std::string::npos);  // first context colour
    CHECK(dot.find("gray50") != std::string::npos);   // non-context edge
    Graph back = from_dot(dot);
    CHECK(back == bug);
    CHECK(back.label(7) == "B");
    CHECK_THROWS_AS(from_dot("not dot"), parse_error);
}

TEST_CASE("ray text and realization json round trips") {
    auto rays = kochen_specker_ten_rays();
    auto back = parse_rays(format_rays(rays));
    REQUIRE(back.size() == rays.size());
    for (std::size_t i = 0; i < rays.size(); ++i) CHECK((back[i] - rays[i]).norm() < 1e-15);

    CHECK(parse_rays("# comment\n\n1 0 0\n0 1 0\n").size() == 2);
    CHECK_THROWS_AS(parse_rays("1 0 zero\n"), parse_error);
    CHECK_THROWS_AS(parse_rays("1 0 0\n0 1\n"), parse_error);  // inconsistent dimensions
    CHECK_THROWS_AS(parse_rays(""), parse_error);

    Realization r;
    r.d = 3;
    r.vectors = rays;
    r.epsilon = 0.25;
    r.tolerance = 1e-10;
    Realization parsed = realization_from_json(realization_to_json(r));
    CHECK(parsed.d == 3);
    CHECK(parsed.epsilon == 0.25);
    CHECK(parsed.tolerance == 1e-10);
    REQUIRE(parsed.vectors.size() == rays.size());
    for (std::size_t i = 0; i < rays.size(); ++i) CHECK((parsed.vectors[i] - rays[i]).norm() < 1e-15);
    CHECK_THROWS_AS(realization_from_json("{\"d\": 3}"), parse_error);
}

TEST_CASE("serialize/parse dispatch on format names") {
    Graph g = fixtures::cycle(6);
    for (auto format : {GraphFormat::Graph6, GraphFormat::Json, GraphFormat::Dot})
        CHECK(parse(serialize(g, format, 2), format) == g);
    CHECK_THROWS_AS(format_from_name("yaml"), std::invalid_argument);
}
