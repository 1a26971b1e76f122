#include "ychg/runscan.hpp"

#include <algorithm>
#include <string>
#include <thread>
#include <vector>

#include "ychg/errors.hpp"

namespace ychg {

namespace {

// Runs `kernel(col_begin, col_end)` over disjoint contiguous column chunks of
// size ceil(width/threads), one worker per chunk. Workers only read the
// shared image and write to their own columns' slots, so no synchronization
// beyond join is needed.
template <typename Kernel>
void for_column_chunks(int width, ScanStrategy strategy, Kernel&& kernel) {
    if (strategy.kind == ScanStrategy::Kind::serial) {
        kernel(0, width);
        return;
    }
    if (strategy.threads < 1)
        throw ValidationError("scan: parallel strategy needs threads >= 1, got " +
                              std::to_string(strategy.threads));
    if (width == 0) return;
    const int chunk = (width + strategy.threads - 1) / strategy.threads;
    std::vector<std::jthread> workers;
    for (int begin = 0; begin < width; begin += chunk) {
        const int end = std::min(width, begin + chunk);
        workers.emplace_back([&kernel, begin, end] { kernel(begin, end); });
    }
}

// Counting kernel for columns [c0, c1), scanning row-major with one byte of
// previous-row state per image byte. A run is counted at its background to
// foreground transition (virtual row -1 is background). The per-byte work is
// fixed and branchless on the pixel data, so wall time depends on the
// resolution only, not on how many runs the image contains.
void count_runs_in_columns(const BinaryImage& image, int c0, int c1, int* counts) {
    const int height = image.height();
    const int b0 = c0 / 8;
    const int b1 = (c1 + 7) / 8;
    std::vector<std::uint8_t> prev(static_cast<std::size_t>(b1 - b0), 0);

    for (int y = 0; y < height; ++y) {
        const std::uint8_t* row = image.row(y);
        for (int b = b0; b < b1; ++b) {
            std::uint8_t cur = row[b];
            const int base = b * 8;
            // Columns of this byte that belong to [c0, c1); only the two edge
            // bytes of the chunk are partial.
            const int j_lo = base < c0 ? c0 - base : 0;
            const int j_hi = std::min(8, c1 - base);
            std::uint8_t& pv = prev[static_cast<std::size_t>(b - b0)];
            const std::uint8_t rises = static_cast<std::uint8_t>(cur & ~pv);
            pv = cur;
            int* slot = counts + base;
            if (j_lo == 0 && j_hi == 8) {
                slot[0] += (rises >> 7) & 1;
                slot[1] += (rises >> 6) & 1;
                slot[2] += (rises >> 5) & 1;
                slot[3] += (rises >> 4) & 1;
                slot[4] += (rises >> 3) & 1;
                slot[5] += (rises >> 2) & 1;
                slot[6] += (rises >> 1) & 1;
                slot[7] += rises & 1;
            } else {
                for (int j = j_lo; j < j_hi; ++j) slot[j] += (rises >> (7 - j)) & 1;
            }
        }
    }
}

// Run-materializing kernel for columns [c0, c1): row-major scan keeping the
// start row of the open run of every column.
void collect_runs_in_columns(const BinaryImage& image, int c0, int c1,
                             std::vector<std::vector<Run>>& runs) {
    const int height = image.height();
    std::vector<int> open(static_cast<std::size_t>(c1 - c0), -1);

    for (int y = 0; y < height; ++y) {
        const std::uint8_t* row = image.row(y);
        for (int c = c0; c < c1; ++c) {
            const bool bit = (row[c >> 3] >> (7 - (c & 7))) & 1;
            int& start = open[static_cast<std::size_t>(c - c0)];
            if (bit) {
                if (start < 0) start = y;
            } else if (start >= 0) {
                runs[static_cast<std::size_t>(c)].push_back({c, start, y - 1});
                start = -1;
            }
        }
    }
    for (int c = c0; c < c1; ++c) {
        const int start = open[static_cast<std::size_t>(c - c0)];
        if (start >= 0) runs[static_cast<std::size_t>(c)].push_back({c, start, height - 1});
    }
}

} // namespace

std::vector<Run> column_runs(const BinaryImage& image, int col) {
    if (col < 0 || col >= image.width())
        throw ValidationError("column_runs: column " + std::to_string(col) +
                              " out of range [0, " + std::to_string(image.width()) + ")");
    std::vector<Run> runs;
    int start = -1;
    for (int y = 0; y < image.height(); ++y) {
        if (image.get(col, y)) {
            if (start < 0) start = y;
        } else if (start >= 0) {
            runs.push_back({col, start, y - 1});
            start = -1;
        }
    }
    if (start >= 0) runs.push_back({col, start, image.height() - 1});
    return runs;
}

std::vector<int> cut_vertex_counts(const BinaryImage& image, ScanStrategy strategy) {
    std::vector<int> counts(static_cast<std::size_t>(image.width()), 0);
    for_column_chunks(image.width(), strategy, [&](int c0, int c1) {
        count_runs_in_columns(image, c0, c1, counts.data());
    });
    return counts;
}

ColumnProfile build_profile(const BinaryImage& image, ScanStrategy strategy) {
    ColumnProfile profile;
    profile.width = image.width();
    profile.height = image.height();
    profile.runs.resize(static_cast<std::size_t>(image.width()));
    for_column_chunks(image.width(), strategy, [&](int c0, int c1) {
        collect_runs_in_columns(image, c0, c1, profile.runs);
    });
    profile.counts.resize(static_cast<std::size_t>(image.width()));
    for (int c = 0; c < image.width(); ++c)
        profile.counts[static_cast<std::size_t>(c)] =
            static_cast<int>(profile.runs[static_cast<std::size_t>(c)].size());
    return profile;
}

std::vector<int> detect_boundary_columns(std::span<const int> counts) {
    std::vector<int> boundaries;
    int previous = 0; // counts[-1] := 0
    for (std::size_t c = 0; c < counts.size(); ++c) {
        if (counts[c] != previous) boundaries.push_back(static_cast<int>(c));
        previous = counts[c];
    }
    return boundaries;
}

} // namespace ychg
