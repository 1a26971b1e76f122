#include "ychg/oracle.hpp"

#include <algorithm>
#include <cstdint>
#include <vector>

namespace ychg {

namespace {

// Direct per-pixel run enumeration, no shared code with build_profile.
std::vector<std::vector<Run>> naive_runs(const BinaryImage& image) {
    std::vector<std::vector<Run>> columns(static_cast<std::size_t>(image.width()));
    for (int c = 0; c < image.width(); ++c) {
        int y = 0;
        while (y < image.height()) {
            if (!image.get(c, y)) {
                ++y;
                continue;
            }
            const int top = y;
            while (y < image.height() && image.get(c, y)) ++y;
            columns[static_cast<std::size_t>(c)].push_back({c, top, y - 1});
        }
    }
    return columns;
}

bool intervals_overlap(const Run& a, const Run& b) {
    return std::max(a.y_top, b.y_top) <= std::min(a.y_bot, b.y_bot);
}

} // namespace

Hypergraph oracle_decompose(const BinaryImage& image) {
    const auto columns = naive_runs(image);

    // Global run ids, column-major.
    std::vector<std::size_t> col_offset(columns.size() + 1, 0);
    for (std::size_t c = 0; c < columns.size(); ++c)
        col_offset[c + 1] = col_offset[c] + columns[c].size();
    const std::size_t total = col_offset[columns.size()];

    std::vector<Run> flat(total);
    for (std::size_t c = 0; c < columns.size(); ++c)
        std::copy(columns[c].begin(), columns[c].end(), flat.begin() + col_offset[c]);

    // Bipartite overlap graph between every adjacent column pair, by
    // exhaustive pairwise interval intersection.
    std::vector<std::vector<std::size_t>> right_overlaps(total);
    std::vector<std::vector<std::size_t>> left_overlaps(total);
    for (std::size_t c = 0; c + 1 < columns.size(); ++c)
        for (std::size_t i = 0; i < columns[c].size(); ++i)
            for (std::size_t j = 0; j < columns[c + 1].size(); ++j)
                if (intervals_overlap(columns[c][i], columns[c + 1][j])) {
                    right_overlaps[col_offset[c] + i].push_back(col_offset[c + 1] + j);
                    left_overlaps[col_offset[c + 1] + j].push_back(col_offset[c] + i);
                }

    // Keep only mutually unique overlaps.
    std::vector<std::vector<std::size_t>> links(total);
    for (std::size_t r = 0; r < total; ++r)
        if (right_overlaps[r].size() == 1) {
            const std::size_t s = right_overlaps[r].front();
            if (left_overlaps[s].size() == 1) {
                links[r].push_back(s);
                links[s].push_back(r);
            }
        }

    // Connected components by exhaustive traversal.
    std::vector<std::int32_t> component(total, -1);
    std::vector<std::vector<std::size_t>> members;
    for (std::size_t start = 0; start < total; ++start) {
        if (component[start] >= 0) continue;
        const std::int32_t id = static_cast<std::int32_t>(members.size());
        members.push_back({});
        std::vector<std::size_t> frontier{start};
        component[start] = id;
        while (!frontier.empty()) {
            const std::size_t r = frontier.back();
            frontier.pop_back();
            members[static_cast<std::size_t>(id)].push_back(r);
            for (std::size_t s : links[r])
                if (component[s] < 0) {
                    component[s] = id;
                    frontier.push_back(s);
                }
        }
    }

    // Canonical order: runs by column within a component, components by
    // (col_start, y_top of the first run).
    for (auto& m : members)
        std::sort(m.begin(), m.end(),
                  [&](std::size_t a, std::size_t b) { return flat[a].col < flat[b].col; });
    std::sort(members.begin(), members.end(),
              [&](const std::vector<std::size_t>& a, const std::vector<std::size_t>& b) {
                  const Run& ra = flat[a.front()];
                  const Run& rb = flat[b.front()];
                  if (ra.col != rb.col) return ra.col < rb.col;
                  return ra.y_top < rb.y_top;
              });

    std::vector<Run> edge_runs;
    edge_runs.reserve(total);
    std::vector<std::uint32_t> offsets{0};
    offsets.reserve(members.size() + 1);
    for (const auto& m : members) {
        for (std::size_t r : m) edge_runs.push_back(flat[r]);
        offsets.push_back(static_cast<std::uint32_t>(edge_runs.size()));
    }
    return Hypergraph(image.width(), image.height(), std::move(edge_runs), std::move(offsets));
}

} // namespace ychg
