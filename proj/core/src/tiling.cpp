#include "cuspidal/tiling.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>

namespace cusp {

namespace {

void require(bool ok, const std::string& message) {
  if (!ok) throw std::invalid_argument(message);
}

// Component label per node (adjacency components; any shape).
std::map<Node, int> component_labels(const Shape& s) {
  std::map<Node, int> label;
  int next = 0;
  for (Node seed : s.nodes()) {
    if (label.count(seed)) continue;
    std::vector<Node> stack{seed};
    label[seed] = next;
    while (!stack.empty()) {
      Node u = stack.back();
      stack.pop_back();
      for (Node v : {north(u), east(u), south(u), west(u)}) {
        if (s.contains(v) && !label.count(v)) {
          label[v] = next;
          stack.push_back(v);
        }
      }
    }
    ++next;
  }
  return label;
}

}  // namespace

bool is_tableau(const Shape& host, const std::vector<Shape>& tiles) {
  if (tiles.empty()) return host.empty();
  std::map<Node, std::size_t> index;
  std::size_t covered = 0;
  for (std::size_t i = 0; i < tiles.size(); ++i) {
    if (tiles[i].empty() || !is_skew(tiles[i])) return false;
    for (Node u : tiles[i].nodes()) {
      if (!host.contains(u)) return false;
      if (!index.emplace(u, i).second) return false;  // overlap
      ++covered;
    }
  }
  if (covered != host.size()) return false;
  for (Node u : host.nodes())
    for (Node v : host.nodes())
      if (se_of(u, v) && index[u] > index[v]) return false;
  return true;
}

std::vector<RemovableRibbon> removable_ribbons(const Shape& host) {
  require(!host.empty() && is_skew(host),
          "removable_ribbons: host must be a nonempty skew shape");
  auto label = component_labels(host);
  std::vector<Node> starts, ends;
  for (Node u : host.nodes()) {
    if (!host.contains(south(u))) starts.push_back(u);
    if (!host.contains(east(u))) ends.push_back(u);
  }
  std::vector<RemovableRibbon> out;
  for (Node u : starts) {
    for (Node v : ends) {
      if (!ne_of(u, v) || label[u] != label[v]) continue;
      std::vector<Node> nodes;
      for (Node w : host.nodes())
        if (ne_of(u, w) && ne_of(w, v) && !host.contains(southeast(w)))
          nodes.push_back(w);
      out.push_back(RemovableRibbon{u, v, Shape(std::move(nodes))});
    }
  }
  std::sort(out.begin(), out.end(),
            [](const RemovableRibbon& a, const RemovableRibbon& b) {
              return std::pair(a.sw, a.ne) < std::pair(b.sw, b.ne);
            });
  return out;
}

Shape minimal_se_removable(const Shape& host, const ConvexPreorder& pre,
                           TieBreak tb) {
  auto rems = removable_ribbons(host);
  const int e = pre.e();

  // Find the minimal content class.
  std::optional<RootVector> min_content;
  for (const auto& r : rems) {
    RootVector c = content(r.ribbon, e);
    if (!min_content || pre.compare(c, *min_content) == Cmp::Less)
      min_content = c;
  }
  std::vector<const RemovableRibbon*> cls;
  for (const auto& r : rems)
    if (pre.compare(content(r.ribbon, e), *min_content) == Cmp::Equivalent)
      cls.push_back(&r);

  // Within an equivalence class, prefer contents that are indivisible
  // (delta rather than a higher multiple); one always exists.
  std::vector<const RemovableRibbon*> indivisible;
  for (const auto* r : cls) {
    auto pm = psi_m(content(r->ribbon, e));
    if (pm && pm->m == 1) indivisible.push_back(r);
  }
  if (!indivisible.empty()) cls = std::move(indivisible);

  const RemovableRibbon* pick = cls.front();
  for (const auto* r : cls) {
    bool better = tb == TieBreak::LexLeastSW
                      ? std::pair(r->sw, r->ne) < std::pair(pick->sw, pick->ne)
                      : std::pair(r->sw, r->ne) > std::pair(pick->sw, pick->ne);
    if (better) pick = r;
  }
  return pick->ribbon;
}

std::vector<std::pair<Shape, Shape>> enumerate_two_splits(
    const Shape& host, std::size_t node_cap) {
  require(is_skew(host), "enumerate_two_splits: host is not a skew shape");
  const std::size_t n = host.size();
  if (n > node_cap)
    throw CapExceeded("enumerate_two_splits: host has " + std::to_string(n) +
                      " nodes, cap is " + std::to_string(node_cap));
  if (n < 2) return {};

  const auto& nodes = host.nodes();
  std::vector<std::uint64_t> succ(n, 0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i != j && se_of(nodes[i], nodes[j])) succ[i] |= 1ull << j;

  std::vector<std::pair<Shape, Shape>> out;
  const std::uint64_t full = (n == 64) ? ~0ull : (1ull << n) - 1;
  for (std::uint64_t upper = 1; upper < full; ++upper) {
    bool closed = true;
    for (std::size_t i = 0; i < n && closed; ++i)
      if ((upper >> i) & 1) closed = (succ[i] & ~upper) == 0;
    if (!closed) continue;
    std::vector<Node> lo, up;
    for (std::size_t i = 0; i < n; ++i)
      ((upper >> i) & 1 ? up : lo).push_back(nodes[i]);
    out.emplace_back(Shape(std::move(lo)), Shape(std::move(up)));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Kostant tiling enumeration

namespace {

struct TilingSearch {
  const Shape& host;
  const ConvexPreorder& pre;
  std::vector<Node> nodes;
  std::vector<KostantTiling> results;

  explicit TilingSearch(const Shape& h, const ConvexPreorder& p)
      : host(h), pre(p), nodes(h.nodes()) {}

  // Greedy scheduling check: a tiling admits a weakly decreasing tableau
  // iff repeatedly emitting an available tile of maximal psi-content never
  // forces an increase.  Returns the tableau order, or nothing.
  std::optional<std::vector<std::size_t>> schedule(
      const std::vector<Shape>& tiles, const std::vector<RootVector>& psis) {
    const std::size_t k = tiles.size();
    // prec[i][j]: some node of tile i southeast-reaches a node of tile j,
    // so tile i must come no later than tile j.
    std::vector<std::vector<bool>> prec(k, std::vector<bool>(k, false));
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j) {
        if (i == j) continue;
        for (Node u : tiles[i].nodes()) {
          for (Node v : tiles[j].nodes())
            if (se_of(u, v)) {
              prec[i][j] = true;
              break;
            }
          if (prec[i][j]) break;
        }
      }
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = i + 1; j < k; ++j)
        if (prec[i][j] && prec[j][i]) return std::nullopt;

    std::vector<bool> placed(k, false);
    std::vector<std::size_t> order;
    std::optional<RootVector> prev;
    for (std::size_t step = 0; step < k; ++step) {
      std::optional<std::size_t> best;
      for (std::size_t i = 0; i < k; ++i) {
        if (placed[i]) continue;
        bool available = true;
        for (std::size_t j = 0; j < k && available; ++j)
          if (!placed[j] && j != i && prec[j][i]) available = false;
        if (!available) continue;
        if (!best || pre.compare(psis[i], psis[*best]) == Cmp::Greater)
          best = i;
      }
      if (!best) return std::nullopt;  // precedence cycle
      if (prev && pre.compare(psis[*best], *prev) == Cmp::Greater)
        return std::nullopt;
      prev = psis[*best];
      placed[*best] = true;
      order.push_back(*best);
    }
    return order;
  }

  void emit(const std::vector<Shape>& tiles) {
    std::vector<RootVector> psis;
    for (const Shape& t : tiles)
      psis.push_back(psi_m(content(t, pre.e()))->base);
    auto order = schedule(tiles, psis);
    if (!order) return;
    KostantTiling kt;
    for (std::size_t i : *order) {
      kt.tiles.push_back(tiles[i]);
      kt.contents.push_back(content(tiles[i], pre.e()));
    }
    kt.partition = kostant_from_sequence(kt.contents, pre);
    results.push_back(std::move(kt));
  }

  // Partition the remaining nodes; each candidate tile contains the least
  // remaining node, so every tiling is generated exactly once.
  void grow(std::uint64_t remaining, std::vector<Shape>& tiles) {
    if (!remaining) {
      emit(tiles);
      return;
    }
    const std::size_t anchor = std::countr_zero(remaining);
    std::uint64_t rest = remaining & ~(1ull << anchor);
    // Subsets of `rest`, each unioned with the anchor.
    std::uint64_t sub = 0;
    while (true) {
      std::uint64_t mask = sub | (1ull << anchor);
      std::vector<Node> tn;
      for (std::size_t i = 0; i < nodes.size(); ++i)
        if ((mask >> i) & 1) tn.push_back(nodes[i]);
      Shape tile(std::move(tn));
      if (is_skew(tile) && psi_m(content(tile, pre.e()))) {
        tiles.push_back(tile);
        grow(remaining & ~mask, tiles);
        tiles.pop_back();
      }
      if (sub == rest) break;
      sub = (sub - rest) & rest;  // next subset of rest
    }
  }
};

}  // namespace

std::vector<KostantTiling> enumerate_kostant_tilings(
    const Shape& host, const ConvexPreorder& pre, std::size_t node_cap) {
  require(!host.empty() && is_skew(host),
          "enumerate_kostant_tilings: host must be a nonempty skew shape");
  if (host.size() > node_cap)
    throw CapExceeded("enumerate_kostant_tilings: host has " +
                      std::to_string(host.size()) + " nodes, cap is " +
                      std::to_string(node_cap));
  TilingSearch search(host, pre);
  std::vector<Shape> tiles;
  search.grow((host.size() == 64) ? ~0ull : (1ull << host.size()) - 1, tiles);
  return search.results;
}

}  // namespace cusp
