// Shared test corpus: deterministic image collections and comparison helpers
// used by both the unit tests and the acceptance suite.
#ifndef YCHG_TESTS_CORPUS_HPP
#define YCHG_TESTS_CORPUS_HPP

#include <algorithm>
#include <string>
#include <vector>

#include "ychg/hypergraph.hpp"
#include "ychg/image.hpp"
#include "ychg/synth.hpp"

namespace ychg::tests {

struct CorpusCase {
    std::string name;
    SynthSpec spec;
};

// Seeded random images up to 64x64, densities cycling {.1,.3,.5,.7,.9}.
inline std::vector<CorpusCase> random_corpus(int count) {
    static const double densities[] = {0.1, 0.3, 0.5, 0.7, 0.9};
    std::vector<CorpusCase> cases;
    cases.reserve(static_cast<std::size_t>(count));
    for (int i = 0; i < count; ++i) {
        Splitmix64 rng(9000 + static_cast<std::uint64_t>(i));
        const int w = 1 + static_cast<int>(rng.next() % 64);
        const int h = 1 + static_cast<int>(rng.next() % 64);
        const double density = densities[i % 5];
        cases.push_back({"random#" + std::to_string(i),
                         SynthSpec::random(w, h, density, 40000 + static_cast<std::uint64_t>(i))});
    }
    return cases;
}

// Every synthetic pattern at a spread of geometries up to 32x32.
inline std::vector<CorpusCase> pattern_corpus() {
    std::vector<CorpusCase> cases;
    const std::pair<int, int> geometries[] = {{1, 1},  {2, 2},  {3, 3},  {4, 4},  {5, 5},
                                              {6, 6},  {7, 7},  {8, 8},  {12, 12}, {16, 16},
                                              {24, 24}, {31, 31}, {32, 32}, {8, 3},  {3, 8},
                                              {32, 5},  {5, 32},  {1, 7},  {7, 1}};
    for (auto [w, h] : geometries) {
        const std::string dims = std::to_string(w) + "x" + std::to_string(h);
        cases.push_back({"full " + dims, SynthSpec::full(w, h)});
        cases.push_back({"empty " + dims, SynthSpec::empty(w, h)});
        cases.push_back({"frame " + dims, SynthSpec::frame(w, h)});
        for (int k = 1; k <= 5; ++k)
            if (k <= h / 2)
                cases.push_back({"hbands(" + std::to_string(k) + ") " + dims,
                                 SynthSpec::hbands(w, h, k)});
        for (int cell = 1; cell <= 3; ++cell)
            cases.push_back({"checker(" + std::to_string(cell) + ") " + dims,
                             SynthSpec::checker(w, h, cell)});
    }
    return cases;
}

// The acceptance corpus: 1000 random images plus all patterns.
inline std::vector<CorpusCase> full_corpus() {
    auto cases = random_corpus(1000);
    auto patterns = pattern_corpus();
    cases.insert(cases.end(), patterns.begin(), patterns.end());
    return cases;
}

// The 7x2 image where the cut-vertex count stays constant while the
// hyperedge set changes: col 0 has runs [0,1],[3,6], col 1 has [0,4],[6,6].
inline BinaryImage branch_example() {
    BinaryImage img(2, 7);
    for (int y : {0, 1, 3, 4, 5, 6}) img.set(0, y, true);
    for (int y : {0, 1, 2, 3, 4, 6}) img.set(1, y, true);
    return img;
}

// A hypergraph's partition of runs, ignoring edge ids: sorted list of sorted
// run lists.
inline std::vector<std::vector<Run>> partition_signature(const Hypergraph& hg) {
    std::vector<std::vector<Run>> parts;
    parts.reserve(hg.edge_count());
    for (std::size_t e = 0; e < hg.edge_count(); ++e) {
        const auto runs = hg.edge(e).runs;
        parts.emplace_back(runs.begin(), runs.end());
    }
    std::sort(parts.begin(), parts.end());
    return parts;
}

// Per-pixel run counter, independent of the runscan kernels.
inline std::vector<int> naive_counts(const BinaryImage& img) {
    std::vector<int> counts(static_cast<std::size_t>(img.width()), 0);
    for (int c = 0; c < img.width(); ++c) {
        bool prev = false;
        for (int y = 0; y < img.height(); ++y) {
            const bool cur = img.get(c, y);
            if (cur && !prev) ++counts[static_cast<std::size_t>(c)];
            prev = cur;
        }
    }
    return counts;
}

} // namespace ychg::tests

#endif
