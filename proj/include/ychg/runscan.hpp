#ifndef YCHG_RUNSCAN_HPP
#define YCHG_RUNSCAN_HPP

#include <compare>
#include <span>
#include <vector>

#include "ychg/image.hpp"

namespace ychg {

/// One maximal vertical foreground segment in a single column;
/// rows y_top..y_bot inclusive.
struct Run {
    int col;
    int y_top;
    int y_bot;

    int length() const { return y_bot - y_top + 1; }

    auto operator<=>(const Run&) const = default;
};

/// How the per-column scan is mapped onto workers. Any strategy yields
/// identical results; it only affects wall time.
struct ScanStrategy {
    enum class Kind { serial, parallel };

    Kind kind = Kind::serial;
    int threads = 1;

    static ScanStrategy serial() { return {Kind::serial, 1}; }
    static ScanStrategy parallel(int threads) { return {Kind::parallel, threads}; }

    bool operator==(const ScanStrategy&) const = default;
};

/// Per-column run lists plus cut-vertex counts (the number of runs in each
/// column). Output of the first scan step.
struct ColumnProfile {
    int width = 0;
    int height = 0;
    std::vector<std::vector<Run>> runs; // runs[c] sorted by y_top
    std::vector<int> counts;            // counts[c] == runs[c].size()

    std::int64_t total_runs() const {
        std::int64_t n = 0;
        for (int c : counts) n += c;
        return n;
    }

    bool operator==(const ColumnProfile&) const = default;
};

/// Maximal vertical foreground segments of one column, top to bottom.
/// Throws ValidationError if col is out of range.
std::vector<Run> column_runs(const BinaryImage& image, int col);

/// Cut-vertex count of every column. Fixed O(width x height) work whatever
/// the image contents: runs are counted by background-to-foreground
/// transitions, never materialized.
std::vector<int> cut_vertex_counts(const BinaryImage& image, ScanStrategy strategy);

/// Materialize the runs of every column (plus their counts). Workers write
/// only to their own columns' slots.
ColumnProfile build_profile(const BinaryImage& image, ScanStrategy strategy);

/// Columns whose cut-vertex count differs from their predecessor's, with the
/// convention counts[-1] == 0 (column 0 is a boundary iff it has any run).
/// A count change proves the run set changed; the converse does not hold.
std::vector<int> detect_boundary_columns(std::span<const int> counts);

} // namespace ychg

#endif
