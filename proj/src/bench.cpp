#include "ychg/bench.hpp"

#include <algorithm>
#include <chrono>
#include <string>

#include "ychg/errors.hpp"
#include "ychg/hypergraph.hpp"

namespace ychg {

const char* bench_op_name(BenchOp op) {
    switch (op) {
    case BenchOp::counts: return "counts";
    case BenchOp::profile: return "profile";
    case BenchOp::decompose: return "decompose";
    }
    return "?";
}

std::int64_t median_of(std::span<const std::int64_t> values) {
    std::vector<std::int64_t> sorted(values.begin(), values.end());
    std::sort(sorted.begin(), sorted.end());
    return sorted[(sorted.size() - 1) / 2];
}

namespace {

using Clock = std::chrono::steady_clock;

std::int64_t elapsed_ns(Clock::time_point t0, Clock::time_point t1) {
    return std::chrono::duration_cast<std::chrono::nanoseconds>(t1 - t0).count();
}

// Warmup runs untimed, then `reps` timed runs whose outputs must all compare
// equal. The comparison happens outside the timed window.
template <typename Op>
std::vector<std::int64_t> measure(Op&& op, int reps, int warmup) {
    for (int i = 0; i < warmup; ++i) (void)op();

    std::vector<std::int64_t> wall;
    wall.reserve(static_cast<std::size_t>(reps));
    const auto t0 = Clock::now();
    const auto reference = op();
    const auto t1 = Clock::now();
    wall.push_back(elapsed_ns(t0, t1));
    for (int i = 1; i < reps; ++i) {
        const auto t2 = Clock::now();
        const auto result = op();
        const auto t3 = Clock::now();
        if (!(result == reference))
            throw ValidationError("time_op: outputs differ across reps (operation must be "
                                  "deterministic)");
        wall.push_back(elapsed_ns(t2, t3));
    }
    return wall;
}

} // namespace

BenchRecord time_op(BenchOp op, const BinaryImage& image, ScanStrategy strategy, int reps,
                    int warmup) {
    if (reps < 1) throw ValidationError("time_op: reps must be >= 1, got " + std::to_string(reps));
    if (warmup < 0)
        throw ValidationError("time_op: warmup must be >= 0, got " + std::to_string(warmup));

    const std::int64_t edges = static_cast<std::int64_t>(
        hyperedge_count(decompose(build_profile(image, ScanStrategy::serial()))));

    std::vector<std::int64_t> wall;
    switch (op) {
    case BenchOp::counts:
        wall = measure([&] { return cut_vertex_counts(image, strategy); }, reps, warmup);
        break;
    case BenchOp::profile:
        wall = measure([&] { return build_profile(image, strategy); }, reps, warmup);
        break;
    case BenchOp::decompose:
        wall = measure([&] { return decompose(build_profile(image, strategy)); }, reps, warmup);
        break;
    default: throw ValidationError("time_op: unknown operation");
    }

    BenchRecord record{op,    strategy, image.width(),   image.height(),
                       edges, reps,     std::move(wall), 0};
    record.median_ns = median_of(record.wall_ns);
    return record;
}

namespace {

void validate_common(const SweepConfig& cfg) {
    if (cfg.strategies.empty()) throw ValidationError("sweep: strategies must be non-empty");
    if (cfg.reps < 1) throw ValidationError("sweep: reps must be >= 1");
    if (cfg.warmup < 0) throw ValidationError("sweep: warmup must be >= 0");
}

} // namespace

std::vector<BenchRecord> resolution_sweep(const SweepConfig& cfg) {
    if (cfg.axis != SweepConfig::Axis::resolution)
        throw ValidationError("resolution_sweep: config axis is not resolution");
    validate_common(cfg);
    if (cfg.sizes.empty()) throw ValidationError("resolution_sweep: sizes must be non-empty");
    for (std::size_t i = 1; i < cfg.sizes.size(); ++i)
        if (cfg.sizes[i] <= cfg.sizes[i - 1])
            throw ValidationError("resolution_sweep: sizes must be strictly increasing");

    std::vector<BenchRecord> records;
    records.reserve(cfg.sizes.size() * cfg.strategies.size());
    for (int size : cfg.sizes) {
        SynthSpec spec = cfg.pattern;
        spec.width = size;
        spec.height = size;
        const BinaryImage image = synth(spec);
        for (ScanStrategy strategy : cfg.strategies)
            records.push_back(time_op(cfg.op, image, strategy, cfg.reps, cfg.warmup));
    }
    return records;
}

std::vector<BenchRecord> hyperedge_sweep(const SweepConfig& cfg) {
    if (cfg.axis != SweepConfig::Axis::hyperedges)
        throw ValidationError("hyperedge_sweep: config axis is not hyperedges");
    validate_common(cfg);
    if (cfg.targets.empty()) throw ValidationError("hyperedge_sweep: targets must be non-empty");

    std::vector<BenchRecord> records;
    records.reserve(cfg.targets.size() * cfg.strategies.size());
    for (const EdgeTarget& target : cfg.targets) {
        BinaryImage image;
        if (target.kind == EdgeTarget::Kind::checker_max) {
            image = synth(SynthSpec::checker(cfg.width, cfg.height, 1));
        } else {
            if (target.bands < 1 || target.bands > cfg.height / 2)
                throw ValidationError("hyperedge_sweep: target " + std::to_string(target.bands) +
                                      " unreachable at height " + std::to_string(cfg.height) +
                                      " (needs 1 <= k <= height/2)");
            image = synth(SynthSpec::hbands(cfg.width, cfg.height, static_cast<int>(target.bands)));
        }
        for (ScanStrategy strategy : cfg.strategies)
            records.push_back(time_op(cfg.op, image, strategy, cfg.reps, cfg.warmup));
    }
    return records;
}

std::string emit_csv(std::span<const BenchRecord> records) {
    std::string out = "op,strategy,threads,width,height,hyperedges,reps,median_ns\n";
    for (const BenchRecord& r : records) {
        const bool serial = r.strategy.kind == ScanStrategy::Kind::serial;
        out += bench_op_name(r.op);
        out += serial ? ",serial," : ",parallel,";
        out += std::to_string(serial ? 1 : r.strategy.threads);
        out += ',';
        out += std::to_string(r.width);
        out += ',';
        out += std::to_string(r.height);
        out += ',';
        out += std::to_string(r.hyperedge_count);
        out += ',';
        out += std::to_string(r.reps);
        out += ',';
        out += std::to_string(r.median_ns);
        out += '\n';
    }
    return out;
}

namespace {

std::string legend_label(ScanStrategy s) {
    if (s.kind == ScanStrategy::Kind::serial) return "serial";
    return "parallel:" + std::to_string(s.threads);
}

// Chart geometry; everything is integer pixels.
constexpr int kWidth = 800;
constexpr int kHeight = 520;
constexpr int kPlotLeft = 90;
constexpr int kPlotRight = 770;
constexpr int kPlotTop = 30;
constexpr int kPlotBottom = 480;

int map_linear(std::int64_t v, std::int64_t lo, std::int64_t hi, int p0, int p1) {
    if (hi == lo) return (p0 + p1) / 2;
    const __int128 num = static_cast<__int128>(v - lo) * (p1 - p0);
    return p0 + static_cast<int>(num / (hi - lo));
}

void append_text(std::string& svg, int x, int y, const std::string& anchor,
                 const std::string& text) {
    svg += "<text x=\"" + std::to_string(x) + "\" y=\"" + std::to_string(y) +
           "\" font-family=\"monospace\" font-size=\"12\" text-anchor=\"" + anchor + "\">" + text +
           "</text>\n";
}

} // namespace

std::string emit_svg(std::span<const BenchRecord> records, SweepConfig::Axis axis) {
    if (records.empty()) throw ValidationError("emit_svg: no records");
    for (const BenchRecord& r : records)
        if (r.op != records.front().op)
            throw ValidationError("emit_svg: records mix operations (" +
                                  std::string(bench_op_name(r.op)) + " vs " +
                                  bench_op_name(records.front().op) + ")");

    const auto x_of = [axis](const BenchRecord& r) {
        return axis == SweepConfig::Axis::resolution
                   ? static_cast<std::int64_t>(r.width) * r.height
                   : r.hyperedge_count;
    };

    std::int64_t xmin = x_of(records.front()), xmax = xmin;
    std::int64_t ymin = records.front().median_ns, ymax = ymin;
    for (const BenchRecord& r : records) {
        xmin = std::min(xmin, x_of(r));
        xmax = std::max(xmax, x_of(r));
        ymin = std::min(ymin, r.median_ns);
        ymax = std::max(ymax, r.median_ns);
    }

    // Strategies in first-appearance order, one polyline each.
    std::vector<ScanStrategy> strategies;
    for (const BenchRecord& r : records)
        if (std::find(strategies.begin(), strategies.end(), r.strategy) == strategies.end())
            strategies.push_back(r.strategy);

    static const char* kPalette[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd",
                                     "#ff7f0e", "#8c564b"};
    constexpr int kPaletteSize = 6;

    std::string svg = "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
                      "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" +
                      std::to_string(kWidth) + "\" height=\"" + std::to_string(kHeight) +
                      "\" viewBox=\"0 0 " + std::to_string(kWidth) + " " +
                      std::to_string(kHeight) + "\">\n";
    svg += "<rect width=\"" + std::to_string(kWidth) + "\" height=\"" + std::to_string(kHeight) +
           "\" fill=\"#ffffff\"/>\n";

    // Axes with min/max tick labels.
    svg += "<line x1=\"" + std::to_string(kPlotLeft) + "\" y1=\"" + std::to_string(kPlotBottom) +
           "\" x2=\"" + std::to_string(kPlotRight) + "\" y2=\"" + std::to_string(kPlotBottom) +
           "\" stroke=\"#000000\"/>\n";
    svg += "<line x1=\"" + std::to_string(kPlotLeft) + "\" y1=\"" + std::to_string(kPlotTop) +
           "\" x2=\"" + std::to_string(kPlotLeft) + "\" y2=\"" + std::to_string(kPlotBottom) +
           "\" stroke=\"#000000\"/>\n";
    append_text(svg, kPlotLeft, kPlotBottom + 16, "start", std::to_string(xmin));
    append_text(svg, kPlotRight, kPlotBottom + 16, "end", std::to_string(xmax));
    append_text(svg, kPlotLeft - 6, kPlotBottom, "end", std::to_string(ymin));
    append_text(svg, kPlotLeft - 6, kPlotTop + 10, "end", std::to_string(ymax));
    append_text(svg, (kPlotLeft + kPlotRight) / 2, kPlotBottom + 32, "middle",
                axis == SweepConfig::Axis::resolution ? "pixels" : "hyperedges");
    append_text(svg, kPlotLeft - 6, kPlotTop - 8, "end", "median_ns");

    for (std::size_t s = 0; s < strategies.size(); ++s) {
        const char* color = kPalette[s % kPaletteSize];
        std::string points;
        for (const BenchRecord& r : records) {
            if (!(r.strategy == strategies[s])) continue;
            const int px = map_linear(x_of(r), xmin, xmax, kPlotLeft, kPlotRight);
            const int py = map_linear(r.median_ns, ymin, ymax, kPlotBottom, kPlotTop);
            if (!points.empty()) points += ' ';
            points += std::to_string(px) + "," + std::to_string(py);
        }
        svg += "<polyline fill=\"none\" stroke=\"" + std::string(color) +
               "\" stroke-width=\"2\" points=\"" + points + "\"/>\n";
        svg += "<text x=\"" + std::to_string(kPlotRight - 120) + "\" y=\"" +
               std::to_string(kPlotTop + 16 * static_cast<int>(s)) +
               "\" font-family=\"monospace\" font-size=\"12\" fill=\"" + color + "\">" +
               legend_label(strategies[s]) + "</text>\n";
    }

    svg += "</svg>\n";
    return svg;
}

} // namespace ychg
