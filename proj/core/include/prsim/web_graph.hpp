#pragma once

#include <cstdint>
#include <istream>
#include <string>
#include <utility>
#include <vector>

namespace prsim {

/// Directed page graph. Out-link lists are sorted and duplicate-free,
/// self-loops are rejected, and in_links is kept as the exact transpose
/// of out_links. Immutable after construction; safe to share across
/// concurrent simulation runs.
struct WebGraph {
  std::size_t n = 0;
  std::vector<std::vector<std::uint32_t>> out_links;
  std::vector<std::vector<std::uint32_t>> in_links;

  std::size_t out_degree(std::uint32_t page) const { return out_links[page].size(); }
  std::size_t in_degree(std::uint32_t page) const { return in_links[page].size(); }
  std::size_t edge_count() const;
  bool has_edge(std::uint32_t src, std::uint32_t dst) const;
};

/// Builds a graph from an edge list, collapsing duplicates and rejecting
/// self-loops and out-of-range ids. n must be at least 2.
WebGraph make_web_graph(std::size_t n,
                        const std::vector<std::pair<std::uint32_t, std::uint32_t>>& edges);

/// Parses the edge-list text format:
///   - optional first non-comment line "n <N>"
///   - one edge per line: "src dst", 0-based, whitespace separated
///   - '#' starts a comment, blank lines are ignored
///   - ids must be < N when N is declared; otherwise n = max id + 1
WebGraph load_edge_list(std::istream& text);
WebGraph load_edge_list_file(const std::string& path);

bool has_dangling(const WebGraph& g);
std::vector<std::uint32_t> dangling_pages(const WebGraph& g);

/// Gives every dangling page artificial out-links: back-links to all of its
/// in-neighbors, or links to every other page if it has no in-neighbors.
/// In-neighbor sets are taken from the input graph, so all dangling pages
/// are patched against the same snapshot. Idempotent.
WebGraph patch_dangling(const WebGraph& g);

/// Deterministic random web: pages [0, hub_count) are hubs and receive
/// in-links from at least 90% of the pages (for n >= 10); every page draws
/// an out-degree uniformly in [min_deg, max_deg], counting hub links already
/// assigned to it. The result is passed through patch_dangling.
WebGraph random_web(std::size_t n, std::uint64_t seed, std::size_t hub_count,
                    std::size_t min_deg, std::size_t max_deg);

}  // namespace prsim
