#include "polarfly/analysis.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace polarfly {

long long moore_bound(int k, int d) {
  long long sum = 0, pow = 1;
  for (int i = 0; i < d; ++i) {
    sum += pow;
    pow *= (k - 1);
  }
  return 1 + static_cast<long long>(k) * sum;
}

MooreEfficiency moore_efficiency(int k, long long n, int d) {
  MooreEfficiency e;
  e.numerator = n;
  e.denominator = moore_bound(k, d);
  long long g = std::gcd(e.numerator, e.denominator);
  if (g > 1) {
    e.numerator /= g;
    e.denominator /= g;
  }
  return e;
}

std::vector<RadixEntry> feasible_radixes(int k_min, int k_max) {
  std::vector<RadixEntry> out;
  for (int k = std::max(k_min, 3); k <= k_max; ++k) {
    int q = k - 1;
    if (!is_prime_power(q)) continue;
    out.push_back({k, q, static_cast<long long>(q) * q + q + 1});
  }
  return out;
}

namespace {

// Cut size of a 0/1 partition.
long long cut_size(const Graph& g, const std::vector<int>& side) {
  long long cut = 0;
  for (int u = 0; u < g.n; ++u)
    for (int v : g.adj[u])
      if (u < v && side[u] != side[v]) ++cut;
  return cut;
}

// gain of v = external degree - internal degree
int gain_of(const Graph& g, const std::vector<int>& side, int v) {
  int ext = 0, in = 0;
  for (int u : g.adj[v]) (side[u] != side[v] ? ext : in)++;
  return ext - in;
}

}  // namespace

BisectionResult bisection(const Graph& g, int restarts, std::uint64_t seed) {
  BisectionResult best;
  best.total_edges = static_cast<long long>(g.edge_count());
  best.cut_edges = best.total_edges + 1;

  std::vector<int> order(g.n);
  std::iota(order.begin(), order.end(), 0);

  for (int attempt = 0; attempt < restarts; ++attempt) {
    std::mt19937_64 rng(seed + static_cast<std::uint64_t>(attempt) * 0x9E3779B97F4A7C15ull);
    std::shuffle(order.begin(), order.end(), rng);
    std::vector<int> side(g.n, 1);
    for (int i = 0; i < g.n / 2; ++i) side[order[i]] = 0;

    std::vector<int> gain(g.n);
    for (int v = 0; v < g.n; ++v) gain[v] = gain_of(g, side, v);

    // greedy swap refinement: repeatedly swap the best cross pair while
    // it strictly reduces the cut
    bool improved = true;
    while (improved) {
      improved = false;
      // top candidates per side by gain
      constexpr int kTop = 6;
      std::vector<int> top0, top1;
      for (int s = 0; s < 2; ++s) {
        auto& top = s == 0 ? top0 : top1;
        for (int v = 0; v < g.n; ++v) {
          if (side[v] != s) continue;
          top.push_back(v);
          std::push_heap(top.begin(), top.end(),
                         [&](int a, int b) { return gain[a] > gain[b]; });
          if (static_cast<int>(top.size()) > kTop) {
            std::pop_heap(top.begin(), top.end(),
                          [&](int a, int b) { return gain[a] > gain[b]; });
            top.pop_back();
          }
        }
      }
      int best_a = -1, best_b = -1, best_gain = 0;
      for (int a : top0)
        for (int b : top1) {
          int w = g.has_edge(a, b) ? 1 : 0;
          int gg = gain[a] + gain[b] - 2 * w;
          if (gg > best_gain) {
            best_gain = gg;
            best_a = a;
            best_b = b;
          }
        }
      if (best_a >= 0) {
        // swap and update gains incrementally
        for (int v : {best_a, best_b}) {
          for (int u : g.adj[v]) gain[u] += side[u] == side[v] ? 2 : -2;
          side[v] = 1 - side[v];
        }
        gain[best_a] = gain_of(g, side, best_a);
        gain[best_b] = gain_of(g, side, best_b);
        improved = true;
      }
    }

    long long cut = cut_size(g, side);
    if (cut < best.cut_edges) {
      best.cut_edges = cut;
      best.side = side;
    }
  }
  best.fraction = best.total_edges == 0
                      ? 0.0
                      : static_cast<double>(best.cut_edges) /
                            static_cast<double>(best.total_edges);
  return best;
}

std::vector<ResilienceStep> resilience_run(const Graph& g, std::uint64_t seed,
                                           int step) {
  if (step < 1) throw std::invalid_argument("step must be >= 1");
  auto all_edges = g.edges();
  std::mt19937_64 rng(seed);
  std::shuffle(all_edges.begin(), all_edges.end(), rng);

  Graph cur = g;
  std::vector<ResilienceStep> trace;
  size_t removed = 0;
  while (removed < all_edges.size()) {
    size_t take = std::min<size_t>(step, all_edges.size() - removed);
    for (size_t i = 0; i < take; ++i) {
      auto [u, v] = all_edges[removed + i];
      auto& ru = cur.adj[u];
      ru.erase(std::find(ru.begin(), ru.end(), v));
      auto& rv = cur.adj[v];
      rv.erase(std::find(rv.begin(), rv.end(), u));
    }
    removed += take;
    ResilienceStep rec;
    rec.failed_fraction =
        static_cast<double>(removed) / static_cast<double>(all_edges.size());
    rec.diameter = diameter(cur);
    rec.avg_shortest_path = rec.diameter == kInfiniteDiameter
                                ? -1.0
                                : avg_shortest_path(cur);
    trace.push_back(rec);
    if (rec.diameter == kInfiniteDiameter) break;
  }
  return trace;
}

Graph random_regular_baseline(int n, int k, std::uint64_t seed) {
  if (n <= k || k < 1 || (static_cast<long long>(n) * k) % 2 != 0)
    throw InfeasibleDegreeError("no simple " + std::to_string(k) +
                                "-regular graph on " + std::to_string(n) +
                                " vertices");
  std::mt19937_64 rng(seed);
  for (int attempt = 0; attempt < 2000; ++attempt) {
    // pair what we can, reshuffle the leftover stubs, and only restart
    // when a pass makes no progress (rejecting whole pairings would
    // almost never succeed at these degrees)
    std::vector<int> stubs;
    stubs.reserve(static_cast<size_t>(n) * k);
    for (int v = 0; v < n; ++v)
      for (int i = 0; i < k; ++i) stubs.push_back(v);

    std::set<std::pair<int, int>> seen;
    while (!stubs.empty()) {
      std::shuffle(stubs.begin(), stubs.end(), rng);
      std::vector<int> leftover;
      for (size_t i = 0; i + 1 < stubs.size(); i += 2) {
        int u = stubs[i], v = stubs[i + 1];
        if (u != v && seen.insert({std::min(u, v), std::max(u, v)}).second)
          continue;
        leftover.push_back(u);
        leftover.push_back(v);
      }
      if (leftover.size() == stubs.size()) break;  // stuck
      stubs = std::move(leftover);
    }
    if (!stubs.empty()) continue;
    Graph g(n);
    for (auto [u, v] : seen) g.add_edge(u, v);
    g.finalize();
    if (is_connected(g)) return g;
  }
  throw std::runtime_error("pairing model failed to produce a connected graph");
}

}  // namespace polarfly
