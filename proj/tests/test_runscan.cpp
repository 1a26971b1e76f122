#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <utility>
#include <vector>

#include "corpus.hpp"
#include "ychg/errors.hpp"
#include "ychg/runscan.hpp"
#include "ychg/synth.hpp"

using namespace ychg;
using namespace ychg::tests;

TEST_CASE("column_runs lists maximal segments top to bottom") {
    const BinaryImage full = synth(SynthSpec::full(4, 4));
    CHECK(column_runs(full, 2) == std::vector<Run>{{2, 0, 3}});

    const BinaryImage frame = synth(SynthSpec::frame(5, 5));
    CHECK(column_runs(frame, 0) == std::vector<Run>{{0, 0, 4}});
    CHECK(column_runs(frame, 1) == std::vector<Run>{{1, 0, 0}, {1, 4, 4}});
    CHECK(column_runs(frame, 4) == std::vector<Run>{{4, 0, 4}});

    const BinaryImage empty = synth(SynthSpec::empty(3, 3));
    CHECK(column_runs(empty, 0).empty());

    const BinaryImage branch = branch_example();
    CHECK(column_runs(branch, 0) == std::vector<Run>{{0, 0, 1}, {0, 3, 6}});
    CHECK(column_runs(branch, 1) == std::vector<Run>{{1, 0, 4}, {1, 6, 6}});

    CHECK_THROWS_AS(column_runs(full, 4), ValidationError);
    CHECK_THROWS_AS(column_runs(full, -1), ValidationError);
}

TEST_CASE("cut_vertex_counts equals the number of runs per column") {
    const auto serial = ScanStrategy::serial();
    CHECK(cut_vertex_counts(synth(SynthSpec::full(4, 4)), serial) ==
          std::vector<int>{1, 1, 1, 1});
    CHECK(cut_vertex_counts(synth(SynthSpec::frame(5, 5)), serial) ==
          std::vector<int>{1, 2, 2, 2, 1});
    CHECK(cut_vertex_counts(synth(SynthSpec::empty(3, 3)), serial) ==
          std::vector<int>{0, 0, 0});
    CHECK(cut_vertex_counts(branch_example(), serial) == std::vector<int>{2, 2});
    CHECK(cut_vertex_counts(BinaryImage(0, 0), serial).empty());

    // 8x11 with three bands: every column counts 3.
    CHECK(cut_vertex_counts(synth(SynthSpec::hbands(8, 11, 3)), serial) ==
          std::vector<int>(8, 3));
}

TEST_CASE("cut_vertex_counts agrees with per-pixel transition counting") {
    // Widths straddling byte boundaries matter: the kernel works on packed
    // bytes, the reference on individual pixels.
    for (int w : {1, 7, 8, 9, 16, 17, 63, 64, 65, 70})
        for (std::uint64_t seed : {5u, 6u}) {
            const BinaryImage img = synth(SynthSpec::random(w, 33, 0.5, seed));
            CHECK(cut_vertex_counts(img, ScanStrategy::serial()) == naive_counts(img));
        }
    for (const auto& c : random_corpus(60)) {
        const BinaryImage img = synth(c.spec);
        CHECK_MESSAGE(cut_vertex_counts(img, ScanStrategy::serial()) == naive_counts(img),
                      c.name);
    }
}

TEST_CASE("every strategy produces identical counts and profiles") {
    for (const auto& c : random_corpus(50)) {
        const BinaryImage img = synth(c.spec);
        const auto counts = cut_vertex_counts(img, ScanStrategy::serial());
        const auto profile = build_profile(img, ScanStrategy::serial());
        for (int threads : {1, 2, 4, 8}) {
            const auto strategy = ScanStrategy::parallel(threads);
            CHECK_MESSAGE(cut_vertex_counts(img, strategy) == counts, c.name);
            CHECK_MESSAGE(build_profile(img, strategy) == profile, c.name);
        }
    }

    // More workers than columns.
    const BinaryImage narrow = synth(SynthSpec::random(3, 50, 0.5, 8));
    CHECK(build_profile(narrow, ScanStrategy::parallel(16)) ==
          build_profile(narrow, ScanStrategy::serial()));

    CHECK_THROWS_AS(cut_vertex_counts(narrow, ScanStrategy::parallel(0)), ValidationError);
    CHECK_THROWS_AS(build_profile(narrow, ScanStrategy::parallel(-2)), ValidationError);
}

TEST_CASE("build_profile satisfies the profile invariants") {
    for (const auto& c : random_corpus(40)) {
        const BinaryImage img = synth(c.spec);
        const ColumnProfile profile = build_profile(img, ScanStrategy::serial());
        REQUIRE(profile.width == img.width());
        REQUIRE(profile.height == img.height());
        REQUIRE(profile.runs.size() == static_cast<std::size_t>(img.width()));
        REQUIRE(profile.counts.size() == static_cast<std::size_t>(img.width()));

        std::int64_t painted = 0;
        for (int col = 0; col < profile.width; ++col) {
            const auto& runs = profile.runs[col];
            CHECK(profile.counts[col] == static_cast<int>(runs.size()));
            CHECK(runs == column_runs(img, col));
            for (std::size_t i = 0; i < runs.size(); ++i) {
                CHECK(runs[i].col == col);
                CHECK(runs[i].y_top >= 0);
                CHECK(runs[i].y_top <= runs[i].y_bot);
                CHECK(runs[i].y_bot < profile.height);
                if (i > 0) CHECK(runs[i].y_top >= runs[i - 1].y_bot + 2);
                painted += runs[i].length();
            }
        }
        // Conservation: run lengths partition the foreground.
        CHECK(painted == foreground_count(img));
    }
}

TEST_CASE("build_profile reproduces the worked examples") {
    const ColumnProfile frame = build_profile(synth(SynthSpec::frame(5, 5)),
                                              ScanStrategy::serial());
    CHECK(frame.counts == std::vector<int>{1, 2, 2, 2, 1});
    CHECK(frame.runs[0] == std::vector<Run>{{0, 0, 4}});
    CHECK(frame.runs[2] == std::vector<Run>{{2, 0, 0}, {2, 4, 4}});
    CHECK(frame.total_runs() == 8);

    const ColumnProfile branch = build_profile(branch_example(), ScanStrategy::serial());
    CHECK(branch.counts == std::vector<int>{2, 2});
    CHECK(branch.runs[0] == std::vector<Run>{{0, 0, 1}, {0, 3, 6}});
    CHECK(branch.runs[1] == std::vector<Run>{{1, 0, 4}, {1, 6, 6}});
}

TEST_CASE("detect_boundary_columns flags count changes, leading zero implied") {
    CHECK(detect_boundary_columns(std::vector<int>{1, 2, 2, 2, 1}) ==
          std::vector<int>{0, 1, 4});
    CHECK(detect_boundary_columns(std::vector<int>{0, 0, 0}).empty());
    CHECK(detect_boundary_columns(std::vector<int>{}).empty());
    CHECK(detect_boundary_columns(std::vector<int>{0, 1}) == std::vector<int>{1});
    CHECK(detect_boundary_columns(std::vector<int>{3}) == std::vector<int>{0});

    // Equal counts hide a change: the branch example's run sets differ
    // between its two columns, yet only column 0 is flagged.
    CHECK(detect_boundary_columns(std::vector<int>{2, 2}) == std::vector<int>{0});
    CHECK(detect_boundary_columns(cut_vertex_counts(branch_example(),
                                                    ScanStrategy::serial())) ==
          std::vector<int>{0});
}

TEST_CASE("detected boundaries always carry a real run-set change") {
    // Compare columns by their y-intervals; Run carries its column index.
    const auto intervals = [](const std::vector<Run>& runs) {
        std::vector<std::pair<int, int>> out;
        for (const Run& r : runs) out.emplace_back(r.y_top, r.y_bot);
        return out;
    };
    for (const auto& c : random_corpus(40)) {
        const BinaryImage img = synth(c.spec);
        const ColumnProfile profile = build_profile(img, ScanStrategy::serial());
        const auto boundaries = detect_boundary_columns(profile.counts);
        for (int col : boundaries) {
            REQUIRE(col >= 0);
            REQUIRE(col < profile.width);
            if (col == 0)
                CHECK_MESSAGE(!profile.runs[0].empty(), c.name);
            else
                CHECK_MESSAGE(intervals(profile.runs[col]) != intervals(profile.runs[col - 1]),
                              c.name);
        }
        // Monotonic, duplicate-free output.
        for (std::size_t i = 1; i < boundaries.size(); ++i)
            CHECK(boundaries[i] > boundaries[i - 1]);
    }
}
