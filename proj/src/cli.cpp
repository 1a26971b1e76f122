#include "ychg/cli.hpp"

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"

#include "ychg/bench.hpp"
#include "ychg/errors.hpp"
#include "ychg/hypergraph.hpp"
#include "ychg/oracle.hpp"
#include "ychg/pnm.hpp"
#include "ychg/runscan.hpp"
#include "ychg/synth.hpp"

namespace ychg {

namespace {

std::vector<std::uint8_t> read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open " + path + " for reading");
    std::vector<std::uint8_t> bytes{std::istreambuf_iterator<char>(in),
                                    std::istreambuf_iterator<char>()};
    if (in.bad()) throw IoError("read failed on " + path);
    return bytes;
}

// Empty path means standard output.
void write_output(const std::string& path, const void* data, std::size_t size) {
    if (path.empty()) {
        if (size != 0 && std::fwrite(data, 1, size, stdout) != size)
            throw IoError("write to standard output failed");
        std::fflush(stdout);
        return;
    }
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot open " + path + " for writing");
    out.write(static_cast<const char*>(data), static_cast<std::streamsize>(size));
    if (!out) throw IoError("write failed on " + path);
}

void write_output(const std::string& path, const std::string& text) {
    write_output(path, text.data(), text.size());
}

std::vector<std::string> split(const std::string& text, char sep) {
    std::vector<std::string> parts;
    std::string token;
    std::istringstream stream(text);
    while (std::getline(stream, token, sep)) parts.push_back(token);
    return parts;
}

int default_threads() {
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw);
}

ScanStrategy strategy_for_threads(int threads) {
    if (threads < 1)
        throw ValidationError("--threads must be >= 1, got " + std::to_string(threads));
    return threads == 1 ? ScanStrategy::serial() : ScanStrategy::parallel(threads);
}

std::vector<ScanStrategy> parse_strategies(const std::string& text) {
    std::vector<ScanStrategy> strategies;
    for (const std::string& part : split(text, ',')) {
        if (part == "serial") {
            strategies.push_back(ScanStrategy::serial());
        } else if (part.rfind("parallel:", 0) == 0) {
            try {
                strategies.push_back(ScanStrategy::parallel(std::stoi(part.substr(9))));
            } catch (const std::exception&) {
                throw ValidationError("bad strategy \"" + part + "\" (want parallel:N)");
            }
        } else {
            throw ValidationError("bad strategy \"" + part + "\" (want serial or parallel:N)");
        }
    }
    if (strategies.empty()) throw ValidationError("no strategies given");
    return strategies;
}

// Compact pattern syntax for bench: full | empty | frame | hbands:K |
// checker:C | random:D[:SEED]. Width/height are filled in by the sweep.
SynthSpec parse_pattern(const std::string& text) {
    const auto parts = split(text, ':');
    const std::string& name = parts.front();
    SynthSpec spec;
    try {
        if (name == "full" && parts.size() == 1) {
            spec.pattern = Pattern::full;
        } else if (name == "empty" && parts.size() == 1) {
            spec.pattern = Pattern::empty;
        } else if (name == "frame" && parts.size() == 1) {
            spec.pattern = Pattern::frame;
        } else if (name == "hbands" && parts.size() == 2) {
            spec.pattern = Pattern::hbands;
            spec.bands = std::stoi(parts[1]);
        } else if (name == "checker" && parts.size() == 2) {
            spec.pattern = Pattern::checker;
            spec.cell = std::stoi(parts[1]);
        } else if (name == "random" && (parts.size() == 2 || parts.size() == 3)) {
            spec.pattern = Pattern::random;
            spec.density = std::stod(parts[1]);
            if (parts.size() == 3) spec.seed = std::stoull(parts[2]);
        } else {
            throw ValidationError("");
        }
    } catch (const std::exception&) {
        throw ValidationError("bad pattern \"" + text +
                              "\" (want full|empty|frame|hbands:K|checker:C|random:D[:SEED])");
    }
    return spec;
}

std::vector<int> parse_sizes(const std::string& text) {
    std::vector<int> sizes;
    for (const std::string& part : split(text, ',')) {
        try {
            sizes.push_back(std::stoi(part));
        } catch (const std::exception&) {
            throw ValidationError("bad size \"" + part + "\"");
        }
    }
    return sizes;
}

std::vector<EdgeTarget> parse_targets(const std::string& text) {
    std::vector<EdgeTarget> targets;
    for (const std::string& part : split(text, ',')) {
        if (part == "max") {
            targets.push_back(EdgeTarget::max());
            continue;
        }
        try {
            targets.push_back(EdgeTarget::k(std::stoll(part)));
        } catch (const std::exception&) {
            throw ValidationError("bad target \"" + part + "\" (want an integer or max)");
        }
    }
    return targets;
}

BenchOp parse_op(const std::string& text) {
    if (text == "counts") return BenchOp::counts;
    if (text == "profile") return BenchOp::profile;
    if (text == "decompose") return BenchOp::decompose;
    throw ValidationError("bad op \"" + text + "\" (want counts|profile|decompose)");
}

BinaryImage load_input(const std::string& path, int threshold) {
    const auto bytes = read_file(path);
    return load_pnm(bytes, threshold);
}

// ---- subcommand actions ----

struct SynthArgs {
    std::string pattern;
    int width = 0;
    int height = 0;
    std::uint64_t seed = 0;
    int bands = 0;
    int cell = 0;
    double density = 0.0;
    std::string out;
};

void run_synth(const SynthArgs& a) {
    SynthSpec spec;
    if (a.pattern == "full") spec.pattern = Pattern::full;
    else if (a.pattern == "empty") spec.pattern = Pattern::empty;
    else if (a.pattern == "frame") spec.pattern = Pattern::frame;
    else if (a.pattern == "hbands") spec.pattern = Pattern::hbands;
    else if (a.pattern == "checker") spec.pattern = Pattern::checker;
    else if (a.pattern == "random") spec.pattern = Pattern::random;
    else throw ValidationError("unknown pattern \"" + a.pattern + "\"");
    spec.width = a.width;
    spec.height = a.height;
    spec.bands = a.bands;
    spec.cell = a.cell;
    spec.density = a.density;
    spec.seed = a.seed;
    const auto bytes = save_pnm(synth(spec));
    write_output(a.out, bytes.data(), bytes.size());
}

struct CountsArgs {
    std::string input;
    int threshold = 128;
    int threads = default_threads();
    bool boundaries = false;
    std::string out;
};

void run_counts(const CountsArgs& a) {
    const BinaryImage image = load_input(a.input, a.threshold);
    const auto counts = cut_vertex_counts(image, strategy_for_threads(a.threads));
    std::string csv = "col,count\n";
    for (std::size_t c = 0; c < counts.size(); ++c)
        csv += std::to_string(c) + "," + std::to_string(counts[c]) + "\n";
    if (a.boundaries) {
        csv += "\nboundary\n";
        for (int b : detect_boundary_columns(counts)) csv += std::to_string(b) + "\n";
    }
    write_output(a.out, csv);
}

struct DecomposeArgs {
    std::string input;
    int threshold = 128;
    int threads = default_threads();
    std::string out;
};

void run_decompose(const DecomposeArgs& a) {
    const BinaryImage image = load_input(a.input, a.threshold);
    const auto profile = build_profile(image, strategy_for_threads(a.threads));
    write_output(a.out, to_json(decompose(profile)) + "\n");
}

struct VerifyArgs {
    std::string input;
    int threshold = 128;
};

int run_verify(const VerifyArgs& a) {
    const BinaryImage image = load_input(a.input, a.threshold);
    const Hypergraph mine = decompose(build_profile(image, ScanStrategy::serial()));
    const Hypergraph reference = oracle_decompose(image);

    const bool oracle_ok = mine == reference;
    const bool reconstruct_ok = reconstruct(mine) == image;
    const bool area_ok = areas(mine).total == foreground_count(image);

    std::string report;
    report += std::string("oracle_equivalence ") + (oracle_ok ? "PASS" : "FAIL") + "\n";
    report += std::string("reconstruction_identity ") + (reconstruct_ok ? "PASS" : "FAIL") + "\n";
    report += std::string("area_conservation ") + (area_ok ? "PASS" : "FAIL") + "\n";
    write_output("", report);
    return oracle_ok && reconstruct_ok && area_ok ? 0 : 1;
}

struct BenchArgs {
    std::string op = "counts";
    std::string strategies = "serial";
    int reps = 5;
    int warmup = 1;
    std::string csv;
    std::string svg;
    // resolution axis
    std::string sizes;
    std::string pattern;
    // hyperedges axis
    int width = 0;
    int height = 0;
    std::string targets;
};

void run_bench(const BenchArgs& a, SweepConfig::Axis axis) {
    SweepConfig cfg;
    cfg.axis = axis;
    cfg.op = parse_op(a.op);
    cfg.strategies = parse_strategies(a.strategies);
    cfg.reps = a.reps;
    cfg.warmup = a.warmup;

    std::vector<BenchRecord> records;
    if (axis == SweepConfig::Axis::resolution) {
        cfg.sizes = parse_sizes(a.sizes);
        cfg.pattern = parse_pattern(a.pattern);
        records = resolution_sweep(cfg);
    } else {
        cfg.width = a.width;
        cfg.height = a.height;
        cfg.targets = parse_targets(a.targets);
        records = hyperedge_sweep(cfg);
    }

    write_output(a.csv, emit_csv(records));
    if (!a.svg.empty()) write_output(a.svg, emit_svg(records, axis));
}

} // namespace

int run_cli(int argc, const char* const* argv) {
    CLI::App app{"y-convex hypergraph decomposition of binary images"};
    app.require_subcommand(1);
    app.failure_message(CLI::FailureMessage::help);

    SynthArgs synth_args;
    auto* synth_cmd = app.add_subcommand("synth", "generate a deterministic test image as PBM");
    synth_cmd->add_option("--pattern", synth_args.pattern,
                          "full|empty|frame|hbands|checker|random")
        ->required();
    synth_cmd->add_option("--width", synth_args.width)->required();
    synth_cmd->add_option("--height", synth_args.height)->required();
    synth_cmd->add_option("--seed", synth_args.seed, "PRNG seed for random (default 0)");
    synth_cmd->add_option("--k", synth_args.bands, "band count for hbands");
    synth_cmd->add_option("--cell", synth_args.cell, "cell size for checker");
    synth_cmd->add_option("--density", synth_args.density, "foreground probability for random");
    synth_cmd->add_option("--out", synth_args.out, "output PNM path (default: stdout)");

    CountsArgs counts_args;
    auto* counts_cmd = app.add_subcommand("counts", "per-column cut-vertex counts as CSV");
    counts_cmd->add_option("--input", counts_args.input, "PNM image (P1/P2/P4/P5)")->required();
    counts_cmd->add_option("--threshold", counts_args.threshold,
                           "grayscale foreground threshold (default 128)");
    counts_cmd->add_option("--threads", counts_args.threads,
                           "scan threads, 1 = serial (default: hardware threads)");
    counts_cmd->add_flag("--boundaries", counts_args.boundaries,
                         "append the boundary-column table");
    counts_cmd->add_option("--out", counts_args.out, "output CSV path (default: stdout)");

    DecomposeArgs decompose_args;
    auto* decompose_cmd =
        app.add_subcommand("decompose", "y-convex hypergraph of the image as JSON");
    decompose_cmd->add_option("--input", decompose_args.input, "PNM image (P1/P2/P4/P5)")
        ->required();
    decompose_cmd->add_option("--threshold", decompose_args.threshold,
                              "grayscale foreground threshold (default 128)");
    decompose_cmd->add_option("--threads", decompose_args.threads,
                              "scan threads, 1 = serial (default: hardware threads)");
    decompose_cmd->add_option("--out", decompose_args.out, "output JSON path (default: stdout)");

    VerifyArgs verify_args;
    auto* verify_cmd =
        app.add_subcommand("verify", "check decomposition properties of one image");
    verify_cmd->add_option("--input", verify_args.input, "PNM image (P1/P2/P4/P5)")->required();
    verify_cmd->add_option("--threshold", verify_args.threshold,
                           "grayscale foreground threshold (default 128)");

    auto* bench_cmd = app.add_subcommand("bench", "timed sweeps with CSV/SVG reports");
    bench_cmd->require_subcommand(1);

    BenchArgs bench_res_args;
    auto* bench_res = bench_cmd->add_subcommand("resolution", "vary image size");
    bench_res->add_option("--sizes", bench_res_args.sizes, "comma list, strictly increasing")
        ->required();
    bench_res->add_option("--pattern", bench_res_args.pattern,
                          "full|empty|frame|hbands:K|checker:C|random:D[:SEED]")
        ->required();
    bench_res->add_option("--op", bench_res_args.op, "counts|profile|decompose (default counts)");
    bench_res->add_option("--strategies", bench_res_args.strategies,
                          "comma list of serial|parallel:N (default serial)");
    bench_res->add_option("--reps", bench_res_args.reps, "timed repetitions (default 5)");
    bench_res->add_option("--warmup", bench_res_args.warmup, "untimed repetitions (default 1)");
    bench_res->add_option("--csv", bench_res_args.csv, "CSV output path")->required();
    bench_res->add_option("--svg", bench_res_args.svg, "optional SVG chart path");

    BenchArgs bench_edge_args;
    auto* bench_edge = bench_cmd->add_subcommand("hyperedges", "vary hyperedge count");
    bench_edge->add_option("--width", bench_edge_args.width)->required();
    bench_edge->add_option("--height", bench_edge_args.height)->required();
    bench_edge->add_option("--targets", bench_edge_args.targets,
                           "comma list of band counts and/or max (= checker)")
        ->required();
    bench_edge->add_option("--op", bench_edge_args.op, "counts|profile|decompose (default counts)");
    bench_edge->add_option("--strategies", bench_edge_args.strategies,
                           "comma list of serial|parallel:N (default serial)");
    bench_edge->add_option("--reps", bench_edge_args.reps, "timed repetitions (default 5)");
    bench_edge->add_option("--warmup", bench_edge_args.warmup, "untimed repetitions (default 1)");
    bench_edge->add_option("--csv", bench_edge_args.csv, "CSV output path")->required();
    bench_edge->add_option("--svg", bench_edge_args.svg, "optional SVG chart path");

    int exit_code = 0;
    synth_cmd->callback([&] { run_synth(synth_args); });
    counts_cmd->callback([&] { run_counts(counts_args); });
    decompose_cmd->callback([&] { run_decompose(decompose_args); });
    verify_cmd->callback([&] { exit_code = run_verify(verify_args); });
    bench_res->callback([&] { run_bench(bench_res_args, SweepConfig::Axis::resolution); });
    bench_edge->callback([&] { run_bench(bench_edge_args, SweepConfig::Axis::hyperedges); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    } catch (const IoError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return exit_code;
}

} // namespace ychg
