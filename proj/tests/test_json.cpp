#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <string>
#include <string_view>

#include "corpus.hpp"
#include "ychg/errors.hpp"
#include "ychg/hypergraph.hpp"
#include "ychg/runscan.hpp"
#include "ychg/synth.hpp"

using namespace ychg;
using namespace ychg::tests;

namespace {

// from_json must refuse `text` and name `needle` (a JSON path or reason).
void expect_rejected(std::string_view text, std::string_view needle) {
    try {
        from_json(text);
        FAIL_CHECK("accepted: " << text);
    } catch (const ValidationError& e) {
        const std::string what = e.what();
        CHECK_MESSAGE(what.find(needle) != std::string::npos,
                      "message \"" << what << "\" lacks \"" << needle << "\"");
    }
}

} // namespace

TEST_CASE("to_json emits the documented schema, compact and key-ordered") {
    const Hypergraph hg =
        decompose(build_profile(synth(SynthSpec::frame(5, 5)), ScanStrategy::serial()));
    CHECK(to_json(hg) ==
          "{\"width\":5,\"height\":5,\"hyperedges\":["
          "{\"id\":0,\"col_start\":0,\"runs\":[[0,4]]},"
          "{\"id\":1,\"col_start\":1,\"runs\":[[0,0],[0,0],[0,0]]},"
          "{\"id\":2,\"col_start\":1,\"runs\":[[4,4],[4,4],[4,4]]},"
          "{\"id\":3,\"col_start\":4,\"runs\":[[0,4]]}]}");

    const Hypergraph none =
        decompose(build_profile(synth(SynthSpec::empty(3, 3)), ScanStrategy::serial()));
    CHECK(to_json(none) == "{\"width\":3,\"height\":3,\"hyperedges\":[]}");
}

TEST_CASE("from_json accepts its own output") {
    const std::string text = "{\"width\":3,\"height\":3,\"hyperedges\":[]}";
    const Hypergraph hg = from_json(text);
    CHECK(hg.width() == 3);
    CHECK(hg.height() == 3);
    CHECK(hyperedge_count(hg) == 0);
    CHECK(to_json(hg) == text);

    // Whitespace and key order are the serializer's choice, not the parser's.
    const Hypergraph shuffled = from_json(
        "{ \"hyperedges\": [ {\"runs\": [[0,1]], \"id\": 0, \"col_start\": 2} ],"
        " \"height\": 4, \"width\": 3 }");
    CHECK(hyperedge_count(shuffled) == 1);
    CHECK(shuffled.edge(0).col_start == 2);
    CHECK(shuffled.edge(0).runs[0] == Run{2, 0, 1});
}

TEST_CASE("decompose to_json from_json round-trips structurally") {
    const auto check_roundtrip = [](const BinaryImage& img, const std::string& name) {
        const Hypergraph hg = decompose(build_profile(img, ScanStrategy::serial()));
        const std::string text = to_json(hg);
        const Hypergraph back = from_json(text);
        CHECK_MESSAGE(back == hg, name);
        CHECK_MESSAGE(to_json(back) == text, name);
        CHECK_MESSAGE(reconstruct(back) == img, name);
    };
    check_roundtrip(branch_example(), "branch");
    for (const auto& c : pattern_corpus()) check_roundtrip(synth(c.spec), c.name);
    for (const auto& c : random_corpus(100)) check_roundtrip(synth(c.spec), c.name);
}

TEST_CASE("from_json reports malformed syntax as a parse error with an offset") {
    CHECK_THROWS_AS(from_json("{"), ParseError);
    CHECK_THROWS_AS(from_json(""), ParseError);
    CHECK_THROWS_AS(from_json("{\"width\":3,}"), ParseError);
    try {
        from_json("{\"width\":3,\"height\":3,\"hyperedges\":[}");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.offset() > 0);
        CHECK(std::string(e.what()).find("byte offset") != std::string::npos);
    }
}

TEST_CASE("from_json rejects structural violations, naming the JSON path") {
    expect_rejected("[]", "expected an object");
    expect_rejected("{\"width\":3,\"hyperedges\":[]}", "missing key \"height\"");
    expect_rejected("{\"width\":3,\"height\":3,\"hyperedges\":[],\"extra\":1}", "/extra");
    expect_rejected("{\"width\":\"3\",\"height\":3,\"hyperedges\":[]}", "/width");
    expect_rejected("{\"width\":-1,\"height\":3,\"hyperedges\":[]}", "/width");
    expect_rejected("{\"width\":3,\"height\":3,\"hyperedges\":0}", "/hyperedges");
    expect_rejected(
        "{\"width\":3,\"height\":3,\"hyperedges\":[{\"id\":0,\"col_start\":0}]}",
        "missing key \"runs\"");
    expect_rejected("{\"width\":3,\"height\":3,\"hyperedges\":"
                    "[{\"id\":0,\"col_start\":0,\"runs\":[[0,0]],\"area\":1}]}",
                    "/hyperedges/0/area");
}

TEST_CASE("from_json rejects invalid hyperedge data, naming the JSON path") {
    // y_top > y_bot.
    expect_rejected("{\"width\":3,\"height\":3,\"hyperedges\":"
                    "[{\"id\":0,\"col_start\":0,\"runs\":[[2,1]]}]}",
                    "/hyperedges/0/runs/0");
    // id not dense.
    expect_rejected("{\"width\":3,\"height\":3,\"hyperedges\":"
                    "[{\"id\":1,\"col_start\":0,\"runs\":[[0,0]]}]}",
                    "/hyperedges/0/id");
    // col_start out of range.
    expect_rejected("{\"width\":3,\"height\":3,\"hyperedges\":"
                    "[{\"id\":0,\"col_start\":3,\"runs\":[[0,0]]}]}",
                    "/hyperedges/0/col_start");
    // column span exceeding the width.
    expect_rejected("{\"width\":3,\"height\":3,\"hyperedges\":"
                    "[{\"id\":0,\"col_start\":2,\"runs\":[[0,0],[0,0]]}]}",
                    "/hyperedges/0/runs");
    // empty runs array.
    expect_rejected("{\"width\":3,\"height\":3,\"hyperedges\":"
                    "[{\"id\":0,\"col_start\":0,\"runs\":[]}]}",
                    "/hyperedges/0/runs");
    // run that is not a [y_top, y_bot] pair.
    expect_rejected("{\"width\":3,\"height\":3,\"hyperedges\":"
                    "[{\"id\":0,\"col_start\":0,\"runs\":[[0]]}]}",
                    "/hyperedges/0/runs/0");
    // y beyond the height (also covers 64-bit overflow attempts).
    expect_rejected("{\"width\":3,\"height\":3,\"hyperedges\":"
                    "[{\"id\":0,\"col_start\":0,\"runs\":[[0,3]]}]}",
                    "/hyperedges/0/runs/0");
    expect_rejected("{\"width\":3,\"height\":3,\"hyperedges\":"
                    "[{\"id\":0,\"col_start\":0,\"runs\":[[0,1099511627776]]}]}",
                    "/hyperedges/0/runs/0");
    // consecutive runs of one edge failing to overlap.
    expect_rejected("{\"width\":3,\"height\":3,\"hyperedges\":"
                    "[{\"id\":0,\"col_start\":0,\"runs\":[[0,0],[2,2]]}]}",
                    "/hyperedges/0/runs/1");
}

TEST_CASE("from_json rejects violations of the partition invariants") {
    // Non-canonical edge order.
    expect_rejected("{\"width\":3,\"height\":3,\"hyperedges\":["
                    "{\"id\":0,\"col_start\":1,\"runs\":[[0,0]]},"
                    "{\"id\":1,\"col_start\":0,\"runs\":[[0,0]]}]}",
                    "canonical");
    expect_rejected("{\"width\":3,\"height\":3,\"hyperedges\":["
                    "{\"id\":0,\"col_start\":0,\"runs\":[[2,2]]},"
                    "{\"id\":1,\"col_start\":0,\"runs\":[[0,0]]}]}",
                    "canonical");
    // Overlapping runs in one column across edges.
    expect_rejected("{\"width\":3,\"height\":3,\"hyperedges\":["
                    "{\"id\":0,\"col_start\":0,\"runs\":[[0,1]]},"
                    "{\"id\":1,\"col_start\":0,\"runs\":[[1,2]]}]}",
                    "overlaps");
    // Touching runs in one column; they would have been one maximal run.
    expect_rejected("{\"width\":4,\"height\":4,\"hyperedges\":["
                    "{\"id\":0,\"col_start\":0,\"runs\":[[0,1]]},"
                    "{\"id\":1,\"col_start\":0,\"runs\":[[2,3]]}]}",
                    "touches");
    // Duplicate runs.
    expect_rejected("{\"width\":3,\"height\":3,\"hyperedges\":["
                    "{\"id\":0,\"col_start\":0,\"runs\":[[0,1]]},"
                    "{\"id\":1,\"col_start\":0,\"runs\":[[0,1]]}]}",
                    "canonical");
}
