#include "ychg/hypergraph.hpp"

#include <algorithm>
#include <cassert>
#include <limits>
#include <numeric>
#include <string>

#include "json.hpp"

#include "ychg/errors.hpp"

namespace ychg {

namespace {
constexpr std::uint32_t kNoLink = std::numeric_limits<std::uint32_t>::max();
}

Hypergraph::Hypergraph(int width, int height, std::vector<Run> runs,
                       std::vector<std::uint32_t> edge_offsets)
    : width_(width), height_(height), runs_(std::move(runs)),
      edge_offsets_(std::move(edge_offsets)) {
    if (edge_offsets_.empty()) edge_offsets_.push_back(0);
    assert(edge_offsets_.front() == 0);
    assert(edge_offsets_.back() == runs_.size());

    for (const Run& r : runs_)
        if (r.col < 0 || r.col >= width_ || r.y_top < 0 || r.y_top > r.y_bot ||
            r.y_bot >= height_)
            throw ValidationError("hypergraph: run in column " + std::to_string(r.col) +
                                  " lies outside the " + std::to_string(width_) + "x" +
                                  std::to_string(height_) + " geometry");

    // Derive the run -> edge mapping in profile order: bucket runs by column,
    // then sort each column's bucket by y_top.
    col_run_offsets_.assign(static_cast<std::size_t>(width_) + 1, 0);
    for (const Run& r : runs_) ++col_run_offsets_[static_cast<std::size_t>(r.col) + 1];
    std::partial_sum(col_run_offsets_.begin(), col_run_offsets_.end(), col_run_offsets_.begin());

    struct Slot {
        int y_top;
        std::uint32_t edge;
    };
    std::vector<Slot> slots(runs_.size());
    std::vector<std::uint32_t> cursor(col_run_offsets_.begin(), col_run_offsets_.end() - 1);
    for (std::size_t e = 0; e + 1 < edge_offsets_.size(); ++e)
        for (std::size_t i = edge_offsets_[e]; i < edge_offsets_[e + 1]; ++i) {
            const Run& r = runs_[i];
            slots[cursor[static_cast<std::size_t>(r.col)]++] = {r.y_top,
                                                               static_cast<std::uint32_t>(e)};
        }
    for (int c = 0; c < width_; ++c)
        std::sort(slots.begin() + col_run_offsets_[static_cast<std::size_t>(c)],
                  slots.begin() + col_run_offsets_[static_cast<std::size_t>(c) + 1],
                  [](const Slot& a, const Slot& b) { return a.y_top < b.y_top; });

    run_to_edge_.resize(runs_.size());
    for (std::size_t k = 0; k < slots.size(); ++k) run_to_edge_[k] = slots[k].edge;
}

namespace {

void validate_profile(const ColumnProfile& profile) {
    const std::size_t width = static_cast<std::size_t>(profile.width);
    if (profile.width < 0 || profile.height < 0)
        throw ValidationError("decompose: profile has negative geometry");
    if (profile.runs.size() != width || profile.counts.size() != width)
        throw ValidationError("decompose: profile arrays do not match width " +
                              std::to_string(profile.width));
    for (std::size_t c = 0; c < width; ++c) {
        const auto& column = profile.runs[c];
        if (profile.counts[c] != static_cast<int>(column.size()))
            throw ValidationError("decompose: counts[" + std::to_string(c) +
                                  "] does not equal the number of runs");
        for (std::size_t i = 0; i < column.size(); ++i) {
            const Run& r = column[i];
            if (r.col != static_cast<int>(c))
                throw ValidationError("decompose: run in column list " + std::to_string(c) +
                                      " claims column " + std::to_string(r.col));
            if (r.y_top < 0 || r.y_top > r.y_bot || r.y_bot >= profile.height)
                throw ValidationError("decompose: run [" + std::to_string(r.y_top) + "," +
                                      std::to_string(r.y_bot) + "] in column " +
                                      std::to_string(c) + " outside height " +
                                      std::to_string(profile.height));
            if (i > 0 && r.y_top < column[i - 1].y_bot + 2)
                throw ValidationError("decompose: runs in column " + std::to_string(c) +
                                      " must be sorted and separated by background");
        }
    }
}

} // namespace

Hypergraph decompose(const ColumnProfile& profile) {
    validate_profile(profile);

    const std::size_t width = static_cast<std::size_t>(profile.width);
    std::vector<std::size_t> offset(width + 1, 0);
    for (std::size_t c = 0; c < width; ++c) offset[c + 1] = offset[c] + profile.runs[c].size();
    const std::size_t total = offset[width];

    // Link runs across each adjacent column pair: a pair joins iff it
    // overlaps vertically and the overlap is unique on both sides. Disjoint
    // sorted intervals make one two-pointer sweep per pair enough.
    std::vector<std::uint32_t> right_link(total, kNoLink);
    std::vector<std::uint8_t> has_left(total, 0);
    std::vector<std::uint32_t> overlaps_a, overlaps_b, partner_a, partner_b;
    for (std::size_t c = 0; c + 1 < width; ++c) {
        const auto& a = profile.runs[c];
        const auto& b = profile.runs[c + 1];
        if (a.empty() || b.empty()) continue;
        overlaps_a.assign(a.size(), 0);
        partner_a.assign(a.size(), 0);
        overlaps_b.assign(b.size(), 0);
        partner_b.assign(b.size(), 0);
        std::size_t i = 0, j = 0;
        while (i < a.size() && j < b.size()) {
            if (a[i].y_bot < b[j].y_top) {
                ++i;
            } else if (b[j].y_bot < a[i].y_top) {
                ++j;
            } else {
                ++overlaps_a[i];
                partner_a[i] = static_cast<std::uint32_t>(j);
                ++overlaps_b[j];
                partner_b[j] = static_cast<std::uint32_t>(i);
                if (a[i].y_bot < b[j].y_bot) {
                    ++i;
                } else if (b[j].y_bot < a[i].y_bot) {
                    ++j;
                } else {
                    ++i;
                    ++j;
                }
            }
        }
        for (std::size_t k = 0; k < a.size(); ++k) {
            if (overlaps_a[k] != 1) continue;
            const std::uint32_t m = partner_a[k];
            if (overlaps_b[m] != 1) continue;
            right_link[offset[c] + k] = static_cast<std::uint32_t>(offset[c + 1] + m);
            has_left[offset[c + 1] + m] = 1;
        }
    }

    // Mutual uniqueness leaves at most one link per side, so components are
    // chains. Walking them left to right in (column, y_top) discovery order
    // yields the canonical hyperedge numbering directly.
    std::vector<Run> edge_runs;
    edge_runs.reserve(total);
    std::vector<std::uint32_t> edge_offsets{0};
    for (std::size_t c = 0; c < width; ++c)
        for (std::size_t k = 0; k < profile.runs[c].size(); ++k) {
            const std::size_t g = offset[c] + k;
            if (has_left[g]) continue;
            std::size_t cur = g;
            std::size_t col = c;
            while (true) {
                edge_runs.push_back(profile.runs[col][cur - offset[col]]);
                const std::uint32_t next = right_link[cur];
                if (next == kNoLink) break;
                cur = next;
                ++col;
            }
            edge_offsets.push_back(static_cast<std::uint32_t>(edge_runs.size()));
        }

    return Hypergraph(profile.width, profile.height, std::move(edge_runs),
                      std::move(edge_offsets));
}

BinaryImage reconstruct(const Hypergraph& hypergraph) {
    // Geometry is validated at construction, so every run paints in bounds.
    BinaryImage img(hypergraph.width(), hypergraph.height());
    for (const Run& r : hypergraph.all_runs())
        for (int y = r.y_top; y <= r.y_bot; ++y) img.set(r.col, y, true);
    return img;
}

AreaReport areas(const Hypergraph& hypergraph) {
    AreaReport report;
    report.per_edge.reserve(hypergraph.edge_count());
    for (std::size_t e = 0; e < hypergraph.edge_count(); ++e) {
        std::int64_t area = 0;
        for (const Run& r : hypergraph.edge(e).runs) area += r.length();
        report.per_edge.push_back(area);
        report.total += area;
    }
    return report;
}

std::size_t hyperedge_count(const Hypergraph& hypergraph) { return hypergraph.edge_count(); }

std::string to_json(const Hypergraph& hypergraph) {
    nlohmann::ordered_json doc;
    doc["width"] = hypergraph.width();
    doc["height"] = hypergraph.height();
    auto edges = nlohmann::ordered_json::array();
    for (std::size_t e = 0; e < hypergraph.edge_count(); ++e) {
        const HyperedgeView view = hypergraph.edge(e);
        nlohmann::ordered_json runs = nlohmann::ordered_json::array();
        for (const Run& r : view.runs) runs.push_back({r.y_top, r.y_bot});
        edges.push_back({{"id", view.id}, {"col_start", view.col_start}, {"runs", std::move(runs)}});
    }
    doc["hyperedges"] = std::move(edges);
    return doc.dump();
}

namespace {

[[noreturn]] void fail_at(const std::string& path, const std::string& what) {
    throw ValidationError("ychg json: " + what + " at " +
                          (path.empty() ? "the document root" : path));
}

int require_int(const nlohmann::json& node, const std::string& path, int min_value,
                std::int64_t max_value) {
    if (!node.is_number_integer()) fail_at(path, "expected an integer");
    const std::int64_t v = node.get<std::int64_t>();
    if (v < min_value || v > max_value)
        fail_at(path, "value " + std::to_string(v) + " out of range [" +
                          std::to_string(min_value) + ", " + std::to_string(max_value) + "]");
    return static_cast<int>(v);
}

void require_keys(const nlohmann::json& node, const std::string& path,
                  std::initializer_list<const char*> keys) {
    if (!node.is_object()) fail_at(path, "expected an object");
    for (const char* key : keys)
        if (!node.contains(key)) fail_at(path, std::string("missing key \"") + key + "\"");
    if (node.size() != keys.size())
        for (const auto& [key, value] : node.items()) {
            (void)value;
            if (std::find_if(keys.begin(), keys.end(), [&](const char* k) { return key == k; }) ==
                keys.end())
                fail_at(path + "/" + key, "unknown key");
        }
}

} // namespace

Hypergraph from_json(std::string_view text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("ychg json: ") + e.what(), e.byte);
    }

    require_keys(doc, "", {"width", "height", "hyperedges"});
    const int width = require_int(doc["width"], "/width", 0, std::numeric_limits<int>::max());
    const int height = require_int(doc["height"], "/height", 0, std::numeric_limits<int>::max());
    if (!doc["hyperedges"].is_array()) fail_at("/hyperedges", "expected an array");

    std::vector<Run> edge_runs;
    std::vector<std::uint32_t> edge_offsets{0};
    int prev_col_start = -1;
    int prev_y_top = -1;
    // Per-column occupancy for the disjointness check: (y_top, y_bot, edge).
    struct Occupied {
        int y_top;
        int y_bot;
        std::size_t edge;
    };
    std::vector<std::vector<Occupied>> occupancy(static_cast<std::size_t>(width));

    const auto& edges = doc["hyperedges"];
    for (std::size_t e = 0; e < edges.size(); ++e) {
        const std::string epath = "/hyperedges/" + std::to_string(e);
        require_keys(edges[e], epath, {"id", "col_start", "runs"});
        const int id = require_int(edges[e]["id"], epath + "/id", 0,
                                   std::numeric_limits<int>::max());
        if (static_cast<std::size_t>(id) != e)
            fail_at(epath + "/id", "ids must be dense and ascending; expected " +
                                       std::to_string(e));
        const int col_start =
            require_int(edges[e]["col_start"], epath + "/col_start", 0, width - 1);
        const auto& runs = edges[e]["runs"];
        if (!runs.is_array() || runs.empty())
            fail_at(epath + "/runs", "expected a non-empty array");
        if (col_start + static_cast<std::int64_t>(runs.size()) > width)
            fail_at(epath + "/runs", "column span exceeds width " + std::to_string(width));

        int prev_top = 0, prev_bot = 0;
        for (std::size_t i = 0; i < runs.size(); ++i) {
            const std::string rpath = epath + "/runs/" + std::to_string(i);
            if (!runs[i].is_array() || runs[i].size() != 2)
                fail_at(rpath, "expected [y_top, y_bot]");
            const int y_top = require_int(runs[i][0], rpath + "/0", 0, height - 1);
            const int y_bot = require_int(runs[i][1], rpath + "/1", 0, height - 1);
            if (y_top > y_bot) fail_at(rpath, "y_top exceeds y_bot");
            if (i > 0 && (std::max(prev_top, y_top) > std::min(prev_bot, y_bot)))
                fail_at(rpath, "consecutive runs of a hyperedge must overlap vertically");
            const int col = col_start + static_cast<int>(i);
            edge_runs.push_back({col, y_top, y_bot});
            occupancy[static_cast<std::size_t>(col)].push_back({y_top, y_bot, e});
            prev_top = y_top;
            prev_bot = y_bot;
        }

        const int first_top = edge_runs[edge_offsets.back()].y_top;
        if (e > 0 && (col_start < prev_col_start ||
                      (col_start == prev_col_start && first_top <= prev_y_top)))
            fail_at(epath, "hyperedges must be in canonical (col_start, y_top) order");
        prev_col_start = col_start;
        prev_y_top = first_top;
        edge_offsets.push_back(static_cast<std::uint32_t>(edge_runs.size()));
    }

    // Runs from different hyperedges may neither overlap nor touch within a
    // column; touching runs would have been a single maximal run.
    for (int c = 0; c < width; ++c) {
        auto& column = occupancy[static_cast<std::size_t>(c)];
        std::sort(column.begin(), column.end(),
                  [](const Occupied& a, const Occupied& b) { return a.y_top < b.y_top; });
        for (std::size_t i = 1; i < column.size(); ++i)
            if (column[i].y_top <= column[i - 1].y_bot + 1)
                fail_at("/hyperedges/" + std::to_string(column[i].edge),
                        "run in column " + std::to_string(c) +
                            (column[i].y_top <= column[i - 1].y_bot
                                 ? " overlaps a run of hyperedge "
                                 : " touches a run of hyperedge ") +
                            std::to_string(column[i - 1].edge));
    }

    return Hypergraph(width, height, std::move(edge_runs), std::move(edge_offsets));
}

} // namespace ychg
