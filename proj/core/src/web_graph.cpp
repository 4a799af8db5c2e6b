#include "prsim/web_graph.hpp"

#include <algorithm>
#include <fstream>
#include <optional>
#include <set>
#include <sstream>

#include "prsim/errors.hpp"
#include "prsim/rng.hpp"

namespace prsim {

namespace {

void derive_in_links(WebGraph& g) {
  g.in_links.assign(g.n, {});
  for (std::uint32_t src = 0; src < g.n; ++src)
    for (std::uint32_t dst : g.out_links[src]) g.in_links[dst].push_back(src);
  for (auto& lst : g.in_links) std::sort(lst.begin(), lst.end());
}

void normalize_out_links(WebGraph& g) {
  for (auto& lst : g.out_links) {
    std::sort(lst.begin(), lst.end());
    lst.erase(std::unique(lst.begin(), lst.end()), lst.end());
  }
}

}  // namespace

std::size_t WebGraph::edge_count() const {
  std::size_t m = 0;
  for (const auto& lst : out_links) m += lst.size();
  return m;
}

bool WebGraph::has_edge(std::uint32_t src, std::uint32_t dst) const {
  const auto& lst = out_links[src];
  return std::binary_search(lst.begin(), lst.end(), dst);
}

WebGraph make_web_graph(std::size_t n,
                        const std::vector<std::pair<std::uint32_t, std::uint32_t>>& edges) {
  if (n < 2) throw ValidationError("a web needs at least 2 pages, got n=" + std::to_string(n));
  WebGraph g;
  g.n = n;
  g.out_links.assign(n, {});
  for (auto [src, dst] : edges) {
    if (src >= n || dst >= n)
      throw ValidationError("edge (" + std::to_string(src) + "," + std::to_string(dst) +
                            ") out of range for n=" + std::to_string(n));
    if (src == dst)
      throw ValidationError("self-loop on page " + std::to_string(src));
    g.out_links[src].push_back(dst);
  }
  normalize_out_links(g);
  derive_in_links(g);
  return g;
}

WebGraph load_edge_list(std::istream& text) {
  std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;
  std::optional<std::size_t> declared_n;
  std::size_t max_id = 0;
  bool saw_edge = false;
  bool saw_content = false;

  std::string line;
  std::size_t lineno = 0;
  while (std::getline(text, line)) {
    ++lineno;
    if (auto pos = line.find('#'); pos != std::string::npos) line.erase(pos);
    std::istringstream ls(line);
    std::string first;
    if (!(ls >> first)) continue;  // blank or comment-only line

    if (!saw_content && first == "n") {
      long long declared = -1;
      std::string extra;
      if (!(ls >> declared) || (ls >> extra) || declared < 0)
        throw ParseError("malformed size declaration, expected 'n <N>'", lineno);
      declared_n = static_cast<std::size_t>(declared);
      saw_content = true;
      continue;
    }
    saw_content = true;

    long long src = -1, dst = -1;
    std::string extra;
    std::istringstream es(line);
    if (!(es >> src >> dst) || (es >> extra) || src < 0 || dst < 0)
      throw ParseError("malformed edge, expected 'src dst'", lineno);
    if (src == dst)
      throw ValidationError("line " + std::to_string(lineno) + ": self-loop on page " +
                            std::to_string(src));
    if (declared_n && (static_cast<std::size_t>(src) >= *declared_n ||
                       static_cast<std::size_t>(dst) >= *declared_n))
      throw ParseError("page id exceeds declared n=" + std::to_string(*declared_n), lineno);
    edges.emplace_back(static_cast<std::uint32_t>(src), static_cast<std::uint32_t>(dst));
    max_id = std::max({max_id, static_cast<std::size_t>(src), static_cast<std::size_t>(dst)});
    saw_edge = true;
  }

  const std::size_t n = declared_n ? *declared_n : (saw_edge ? max_id + 1 : 0);
  return make_web_graph(n, edges);
}

WebGraph load_edge_list_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open graph file: " + path);
  return load_edge_list(in);
}

std::vector<std::uint32_t> dangling_pages(const WebGraph& g) {
  std::vector<std::uint32_t> out;
  for (std::uint32_t i = 0; i < g.n; ++i)
    if (g.out_links[i].empty()) out.push_back(i);
  return out;
}

bool has_dangling(const WebGraph& g) {
  return std::any_of(g.out_links.begin(), g.out_links.end(),
                     [](const auto& lst) { return lst.empty(); });
}

WebGraph patch_dangling(const WebGraph& g) {
  WebGraph patched = g;
  // All dangling pages are patched against the input in-neighbor sets, so
  // the result does not depend on processing order.
  for (std::uint32_t d : dangling_pages(g)) {
    if (!g.in_links[d].empty()) {
      patched.out_links[d] = g.in_links[d];
    } else {
      patched.out_links[d].reserve(g.n - 1);
      for (std::uint32_t j = 0; j < g.n; ++j)
        if (j != d) patched.out_links[d].push_back(j);
    }
  }
  normalize_out_links(patched);
  derive_in_links(patched);
  return patched;
}

WebGraph random_web(std::size_t n, std::uint64_t seed, std::size_t hub_count,
                    std::size_t min_deg, std::size_t max_deg) {
  if (n < 2) throw ValidationError("random_web needs n >= 2");
  if (hub_count >= n) throw ValidationError("hub_count must be below n");
  if (min_deg < 1 || min_deg > max_deg || max_deg >= n)
    throw ValidationError("degree bounds must satisfy 1 <= min_deg <= max_deg < n");

  Rng rng(seed, 0);
  std::vector<std::set<std::uint32_t>> targets(n);

  // Hub wiring first: hub h receives in-links from a random subset of the
  // other pages, at least 92% of n (capped at n-1), so hub in-degree stays
  // above 0.9 n for n >= 10.
  const std::size_t hub_sources =
      std::min<std::size_t>(n - 1, (92 * n + 99) / 100);
  std::vector<std::uint32_t> pool(n);
  for (std::uint32_t i = 0; i < n; ++i) pool[i] = i;
  for (std::uint32_t h = 0; h < hub_count; ++h) {
    // Partial Fisher-Yates draw of hub_sources pages other than h.
    std::swap(pool[h], pool[n - 1]);
    for (std::size_t j = 0; j < hub_sources; ++j) {
      const std::size_t pick = j + rng.next_below(n - 1 - j);
      std::swap(pool[j], pool[pick]);
      targets[pool[j]].insert(h);
    }
    for (std::uint32_t i = 0; i < n; ++i) pool[i] = i;
  }

  // Every page then draws an out-degree in [min_deg, max_deg]; hub links
  // already assigned count toward it (and may exceed it when there are many
  // hubs).
  for (std::uint32_t p = 0; p < n; ++p) {
    const std::size_t want = rng.uniform_int(min_deg, max_deg);
    std::size_t guard = 0;
    while (targets[p].size() < want && guard < 64 * n) {
      const auto t = static_cast<std::uint32_t>(rng.next_below(n));
      if (t != p) targets[p].insert(t);
      ++guard;
    }
  }

  WebGraph g;
  g.n = n;
  g.out_links.assign(n, {});
  for (std::uint32_t p = 0; p < n; ++p)
    g.out_links[p].assign(targets[p].begin(), targets[p].end());
  normalize_out_links(g);
  derive_in_links(g);
  return patch_dangling(g);
}

}  // namespace prsim
