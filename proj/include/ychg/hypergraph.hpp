#ifndef YCHG_HYPERGRAPH_HPP
#define YCHG_HYPERGRAPH_HPP

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "ychg/image.hpp"
#include "ychg/runscan.hpp"

namespace ychg {

/// One y-convex hyperedge: a contiguous column span with exactly one run per
/// column, consecutive runs overlapping vertically. `runs` views into the
/// owning Hypergraph.
struct HyperedgeView {
    int id;
    int col_start;
    std::span<const Run> runs;

    int col_end() const { return col_start + static_cast<int>(runs.size()) - 1; }
};

/// The y-convex hypergraph of an image: a partition of all runs into
/// hyperedges, in canonical (col_start, first y_top) order with dense ids.
/// Immutable once built.
class Hypergraph {
public:
    Hypergraph() = default;

    /// Assemble from per-edge run lists. The caller supplies edges whose runs
    /// are already per-consecutive-column and in canonical edge order; this
    /// constructor flattens them and derives the run -> edge mapping.
    /// Throws ValidationError if any run lies outside the geometry. Edge
    /// structure beyond that is asserted, not validated; callers that accept
    /// untrusted data (from_json) validate first.
    Hypergraph(int width, int height, std::vector<Run> runs, std::vector<std::uint32_t> edge_offsets);

    int width() const { return width_; }
    int height() const { return height_; }

    std::size_t edge_count() const { return edge_offsets_.empty() ? 0 : edge_offsets_.size() - 1; }

    HyperedgeView edge(std::size_t id) const {
        const std::size_t begin = edge_offsets_[id];
        const std::size_t end = edge_offsets_[id + 1];
        return {static_cast<int>(id), runs_[begin].col,
                std::span<const Run>(runs_.data() + begin, end - begin)};
    }

    /// All runs, grouped by hyperedge.
    std::span<const Run> all_runs() const { return runs_; }

    /// Hyperedge id of each run in profile order (column-major, runs sorted
    /// by y_top within their column).
    std::span<const std::uint32_t> run_to_edge() const { return run_to_edge_; }

    /// Hyperedge id of the k-th run (by y_top) of column `col`.
    std::uint32_t edge_of(int col, int run_index) const {
        return run_to_edge_[col_run_offsets_[col] + run_index];
    }

    bool operator==(const Hypergraph& other) const {
        return width_ == other.width_ && height_ == other.height_ && runs_ == other.runs_ &&
               edge_offsets_ == other.edge_offsets_;
    }

private:
    int width_ = 0;
    int height_ = 0;
    std::vector<Run> runs_;                     // grouped by edge, columns ascending
    std::vector<std::uint32_t> edge_offsets_;   // edge i owns runs_[offsets[i]..offsets[i+1])
    std::vector<std::uint32_t> run_to_edge_;    // indexed in profile order
    std::vector<std::uint32_t> col_run_offsets_; // first profile index of each column
};

/// Canonical decomposition of a column profile. Runs in adjacent columns are
/// linked iff they overlap vertically and each is the other's only overlap;
/// hyperedges are the chains those links form.
/// Throws ValidationError if the profile violates its invariants.
Hypergraph decompose(const ColumnProfile& profile);

/// Paint every run of every hyperedge back onto a fresh image.
BinaryImage reconstruct(const Hypergraph& hypergraph);

struct AreaReport {
    std::int64_t total = 0;
    std::vector<std::int64_t> per_edge;
};

/// Pixel areas per hyperedge and their sum (== foreground count of the
/// source image).
AreaReport areas(const Hypergraph& hypergraph);

std::size_t hyperedge_count(const Hypergraph& hypergraph);

/// Serialize as UTF-8 JSON:
/// {"width":W,"height":H,"hyperedges":[{"id":0,"col_start":C,"runs":[[y_top,y_bot],...]},...]}
std::string to_json(const Hypergraph& hypergraph);

/// Parse and fully validate the schema above. Errors name the JSON path of
/// the offending element.
Hypergraph from_json(std::string_view text);

} // namespace ychg

#endif
