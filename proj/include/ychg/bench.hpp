#ifndef YCHG_BENCH_HPP
#define YCHG_BENCH_HPP

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "ychg/image.hpp"
#include "ychg/runscan.hpp"
#include "ychg/synth.hpp"

namespace ychg {

enum class BenchOp {
    counts,    // cut_vertex_counts
    profile,   // build_profile
    decompose, // build_profile + decompose
};

const char* bench_op_name(BenchOp op);

/// One timed measurement: an operation on one image under one strategy.
struct BenchRecord {
    BenchOp op;
    ScanStrategy strategy;
    int width;
    int height;
    std::int64_t hyperedge_count; // from a one-time decomposition of the image
    int reps;
    std::vector<std::int64_t> wall_ns; // one entry per rep
    std::int64_t median_ns;            // lower-middle median of wall_ns
};

/// Lower-middle median (index (n-1)/2 of the sorted values).
std::int64_t median_of(std::span<const std::int64_t> values);

/// Run `op` on `image` warmup times untimed, then `reps` times timed with a
/// monotonic clock. Outputs must be identical across reps (they are checked,
/// then discarded). Throws ValidationError for reps < 1 or warmup < 0.
BenchRecord time_op(BenchOp op, const BinaryImage& image, ScanStrategy strategy, int reps,
                    int warmup);

/// One point of a hyperedge-count sweep: either k horizontal bands (exactly k
/// hyperedges) or the checker(1) maximum (one hyperedge per foreground
/// pixel).
struct EdgeTarget {
    enum class Kind { bands, checker_max };
    Kind kind = Kind::bands;
    std::int64_t bands = 0;

    static EdgeTarget k(std::int64_t bands) { return {Kind::bands, bands}; }
    static EdgeTarget max() { return {Kind::checker_max, 0}; }
};

struct SweepConfig {
    enum class Axis { resolution, hyperedges };

    Axis axis = Axis::resolution;
    BenchOp op = BenchOp::counts;

    // resolution axis: strictly increasing square sizes, pattern template
    // whose width/height get overridden per size
    std::vector<int> sizes;
    SynthSpec pattern;

    // hyperedges axis: fixed geometry plus the target list
    int width = 0;
    int height = 0;
    std::vector<EdgeTarget> targets;

    std::vector<ScanStrategy> strategies;
    int reps = 5;
    int warmup = 1;
};

/// Time `cfg.op` at every size in cfg.sizes (as S x S synthesized from the
/// pattern template), for every strategy. Records ordered by (size,
/// strategy).
std::vector<BenchRecord> resolution_sweep(const SweepConfig& cfg);

/// Time `cfg.op` at fixed geometry over images realizing each hyperedge
/// target. Bands targets with k > height/2 are unreachable and raise
/// ValidationError. Records ordered by (target, strategy).
std::vector<BenchRecord> hyperedge_sweep(const SweepConfig& cfg);

/// CSV with header op,strategy,threads,width,height,hyperedges,reps,median_ns
/// and LF line endings; integers only.
std::string emit_csv(std::span<const BenchRecord> records);

/// Standalone SVG line chart: one polyline per strategy, x = pixel count or
/// hyperedge count per `axis`, y = median_ns. Deterministic bytes, integer
/// coordinates. Throws ValidationError for empty input or mixed ops.
std::string emit_svg(std::span<const BenchRecord> records, SweepConfig::Axis axis);

} // namespace ychg

#endif
