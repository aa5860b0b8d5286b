#include "switchquest/solver.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <chrono>
#include <cstdint>
#include <map>
#include <mutex>
#include <thread>
#include <unordered_map>

namespace switchquest {

namespace {

using Key = std::array<std::uint64_t, 2>;

struct KeyHash {
  std::size_t operator()(const Key& k) const {
    std::uint64_t h = k[0] * 0x9E3779B97F4A7C15ULL;
    h ^= (k[1] + 0x632BE59BD9B4E019ULL + (h << 6) + (h >> 2));
    return static_cast<std::size_t>(h ^ (h >> 31));
  }
};

struct Entry {
  std::int8_t value = 0;
  bool exact = false;
};

// Memo table split into independently locked shards.
class Memo {
 public:
  static constexpr std::size_t kShards = 64;

  bool find(const Key& key, Entry& out) {
    Shard& s = shard(key);
    std::lock_guard lock(s.mutex);
    auto it = s.map.find(key);
    if (it == s.map.end()) return false;
    out = it->second;
    return true;
  }

  void store(const Key& key, int value, bool exact) {
    Shard& s = shard(key);
    std::lock_guard lock(s.mutex);
    Entry& e = s.map[key];
    if (e.exact) return;
    if (exact || value > e.value) {
      e.value = static_cast<std::int8_t>(value);
      e.exact = exact;
    }
  }

 private:
  struct Shard {
    std::mutex mutex;
    std::unordered_map<Key, Entry, KeyHash> map;
  };
  Shard& shard(const Key& key) { return shards_[KeyHash{}(key) % kShards]; }
  std::array<Shard, kShards> shards_;
};

// Lexicographic m-combinations of {0..n-1}; calls f(indices) until it returns false.
template <class F>
void for_each_combination(int n, int m, F&& f) {
  if (m > n || m <= 0) return;
  std::vector<int> idx(m);
  for (int i = 0; i < m; ++i) idx[i] = i;
  for (;;) {
    if (!f(idx)) return;
    int i = m - 1;
    while (i >= 0 && idx[i] == n - m + i) --i;
    if (i < 0) return;
    ++idx[i];
    for (int j = i + 1; j < m; ++j) idx[j] = idx[j - 1] + 1;
  }
}

class Solver {
 public:
  Solver(const Graph& g, int k, Goal goal, const SolverConfig& cfg)
      : g_(g), k_(k), goal_(goal), cyclic_(has_cycle(g)) {
    if (k < 1) throw std::invalid_argument("solve_exact: k must be at least 1");
    if (goal == Goal::kSink && cyclic_) {
      throw std::invalid_argument("solve_exact: sink search is not defined on graphs with cycles");
    }
    askable_index_.assign(g.vertex_count(), -1);
    for (VertexIndex v = 0; v < static_cast<VertexIndex>(g.vertex_count()); ++v) {
      if (g.is_askable(v)) {
        askable_index_[v] = static_cast<int>(askable_.size());
        askable_.push_back(v);
      }
    }
    const int count = static_cast<int>(askable_.size());
    if (count > cfg.max_askable || count > 32) {
      throw SolverCapExceeded("solve_exact: " + std::to_string(count) +
                                  " askable vertices exceed the cap of " +
                                  std::to_string(std::min(cfg.max_askable, 32)),
                              count);
    }
    if (g.max_out_degree() > 14) {
      throw SolverCapExceeded("solve_exact: out-degree above 14 is not supported", count);
    }
    if (!cyclic_) topo_ = *topological_order(g);
    if (cfg.symmetry_reduction) setup_mirror();
  }

  bool symmetry_used() const { return !mirror_.empty(); }
  std::size_t states() const { return states_; }
  std::size_t hits() const { return hits_; }

  bool determined(const Knowledge& known) const { return is_determined(g_, known, goal_); }

  // Unknown askable vertices reachable from the frontier, frontier first, then
  // by breadth-first order.
  std::vector<VertexIndex> live(const Knowledge& known) const {
    const FlowPath p = flow(g_, known);
    std::vector<VertexIndex> out;
    if (p.closed || g_.is_sink(p.end())) return out;
    std::vector<char> seen(g_.vertex_count(), 0);
    std::vector<VertexIndex> queue{p.end()};
    seen[p.end()] = 1;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const VertexIndex v = queue[head];
      if (known.known(v)) {
        const VertexIndex w = g_.head(v, known.slot(v));
        if (!seen[w]) {
          seen[w] = 1;
          queue.push_back(w);
        }
        continue;
      }
      if (g_.is_askable(v)) out.push_back(v);
      for (EdgeIndex e : g_.out_edges(v)) {
        const VertexIndex w = g_.edge(e).to;
        if (!seen[w]) {
          seen[w] = 1;
          queue.push_back(w);
        }
      }
    }
    return out;
  }

  // value < beta: exact. Otherwise a lower bound that is at least beta.
  int value(Knowledge& known, int beta) {
    if (determined(known)) return 0;
    if (beta <= 1) return 1;
    const FlowPath p = flow(g_, known);
    const auto reach = restricted_reachable(g_, known, cyclic_ ? g_.source() : p.end());
    const Key key = canonical_key(known, reach);
    Entry cached;
    if (memo_.find(key, cached)) {
      if (cached.exact || cached.value >= beta) {
        ++hits_;
        return cached.value;
      }
    }
    ++states_;

    std::vector<VertexIndex> open = live(known);
    const int ub = upper_bound(known, p.end(), open);
    if (ub <= 1) {
      memo_.store(key, 1, true);
      return 1;
    }
    const int limit = std::min(beta, ub + 1);
    const int best = search(known, open, limit);
    const bool exact = best < beta;
    memo_.store(key, best, exact);
    return best;
  }

  // Worst case over the answers to `questions`, cut off once it reaches `best`.
  int worst_case(Knowledge& known, const std::vector<VertexIndex>& questions, int best) {
    const std::size_t m = questions.size();
    std::vector<int> slot(m, 0);
    int worst = 0;
    for (;;) {
      for (std::size_t i = 0; i < m; ++i) known.set(questions[i], slot[i]);
      const int child = value(known, best - 1);
      for (std::size_t i = 0; i < m; ++i) known.set(questions[i], -1);
      worst = std::max(worst, child + 1);
      if (worst >= best) return worst;
      std::size_t i = 0;
      while (i < m && ++slot[i] == g_.out_degree(questions[i])) slot[i++] = 0;
      if (i == m) return worst;
    }
  }

  int upper_bound(const Knowledge& known, VertexIndex front,
                  const std::vector<VertexIndex>& open) const {
    if (cyclic_) return static_cast<int>(open.size());
    const auto reach = restricted_reachable(g_, known, front);
    std::vector<int> count(g_.vertex_count(), 0);
    for (auto it = topo_.rbegin(); it != topo_.rend(); ++it) {
      const VertexIndex v = *it;
      if (!reach[v]) continue;
      int below = 0;
      if (known.known(v)) {
        below = count[g_.head(v, known.slot(v))];
      } else {
        for (EdgeIndex e : g_.out_edges(v)) below = std::max(below, count[g_.edge(e).to]);
      }
      count[v] = below + ((g_.is_askable(v) && !known.known(v)) ? 1 : 0);
    }
    return count[front];
  }

  const std::vector<VertexIndex>& askable() const { return askable_; }
  int k() const { return k_; }

 private:
  int search(Knowledge& known, const std::vector<VertexIndex>& open, int limit) {
    const int n = static_cast<int>(open.size());
    const int m = std::min(k_, n);
    int best = limit;
    std::vector<VertexIndex> questions(m);
    for_each_combination(n, m, [&](const std::vector<int>& idx) {
      for (int i = 0; i < m; ++i) questions[i] = open[idx[i]];
      const int w = worst_case(known, questions, best);
      if (w < best) best = w;
      return best > 1;
    });
    return best;
  }

  Key canonical_key(const Knowledge& known, const std::vector<char>& reach) const {
    Key key = encode(known, reach, false);
    if (!mirror_.empty()) key = std::min(key, encode(known, reach, true));
    return key;
  }

  Key encode(const Knowledge& known, const std::vector<char>& reach, bool mirrored) const {
    Key key{0, 0};
    for (std::size_t i = 0; i < askable_.size(); ++i) {
      VertexIndex v = askable_[i];
      if (mirrored) v = mirror_[v];
      std::uint64_t code = 0;
      if (reach[v]) {
        if (known.known(v)) {
          int s = known.slot(v);
          if (mirrored) s = g_.out_degree(v) - 1 - s;
          code = 2 + static_cast<std::uint64_t>(s);
        } else {
          code = 1;
        }
      }
      key[i / 16] |= code << (4 * (i % 16));
    }
    return key;
  }

  // Pyramid mirror v_{i,j} <-> v_{i,i+1-j}, which reverses every out-list.
  void setup_mirror() {
    const auto n = static_cast<VertexIndex>(g_.vertex_count());
    std::map<std::pair<int, int>, VertexIndex> at;
    std::vector<std::pair<int, int>> coord(n);
    for (VertexIndex v = 0; v < n; ++v) {
      const auto& tags = g_.vertex(v).tags;
      auto i = tags.find("i"), j = tags.find("j");
      if (i == tags.end() || j == tags.end()) return;
      try {
        coord[v] = {std::stoi(i->second), std::stoi(j->second)};
      } catch (const std::exception&) {
        return;
      }
      at[coord[v]] = v;
    }
    std::vector<VertexIndex> m(n);
    for (VertexIndex v = 0; v < n; ++v) {
      auto it = at.find({coord[v].first, coord[v].first + 1 - coord[v].second});
      if (it == at.end()) return;
      m[v] = it->second;
    }
    if (m[g_.source()] != g_.source()) return;
    for (VertexIndex v = 0; v < n; ++v) {
      const int d = g_.out_degree(v);
      if (g_.out_degree(m[v]) != d) return;
      for (int s = 0; s < d; ++s) {
        if (g_.head(m[v], d - 1 - s) != m[g_.head(v, s)]) return;
      }
    }
    mirror_ = std::move(m);
  }

  const Graph& g_;
  int k_;
  Goal goal_;
  bool cyclic_;
  std::vector<VertexIndex> askable_;
  std::vector<int> askable_index_;
  std::vector<VertexIndex> topo_;
  std::vector<VertexIndex> mirror_;
  Memo memo_;
  std::atomic<std::size_t> states_{0};
  std::atomic<std::size_t> hits_{0};
};

}  // namespace

SolveResult solve_exact(const Graph& g, int k, Goal goal, const SolverConfig& cfg) {
  const auto start = std::chrono::steady_clock::now();
  Solver solver(g, k, goal, cfg);
  SolveResult result;
  Knowledge root(g);

  if (!solver.determined(root)) {
    const std::vector<VertexIndex> open = solver.live(root);
    const int ub = solver.upper_bound(root, flow(g, root).end(), open);
    if (!cfg.parallel) {
      result.value = solver.value(root, ub + 1);
    } else {
      // Root question sets of maximal size, shared between workers.
      const int n = static_cast<int>(open.size());
      const int m = std::min(k, n);
      std::vector<std::vector<VertexIndex>> sets;
      for_each_combination(n, m, [&](const std::vector<int>& idx) {
        std::vector<VertexIndex> s;
        for (int i : idx) s.push_back(open[i]);
        sets.push_back(std::move(s));
        return true;
      });
      std::atomic<int> best{ub};
      std::atomic<std::size_t> next{0};
      int threads = cfg.threads > 0 ? cfg.threads
                                    : std::max(2, static_cast<int>(std::thread::hardware_concurrency()));
      std::vector<std::thread> pool;
      for (int t = 0; t < threads; ++t) {
        pool.emplace_back([&] {
          Knowledge known = root;
          for (std::size_t i = next++; i < sets.size(); i = next++) {
            const int bound = best.load() + 1;
            const int w = solver.worst_case(known, sets[i], bound);
            int cur = best.load();
            while (w < cur && !best.compare_exchange_weak(cur, w)) {
            }
          }
        });
      }
      for (auto& th : pool) th.join();
      result.value = best.load();
    }

    if (cfg.first_moves) {
      Knowledge known = root;
      const int n = static_cast<int>(open.size());
      for (int m = 1; m <= std::min(k, n); ++m) {
        for_each_combination(n, m, [&](const std::vector<int>& idx) {
          std::vector<VertexIndex> s;
          for (int i : idx) s.push_back(open[i]);
          if (solver.worst_case(known, s, result.value + 1) <= result.value) {
            std::sort(s.begin(), s.end());
            result.optimal_first_moves.push_back(std::move(s));
          }
          return true;
        });
      }
      std::sort(result.optimal_first_moves.begin(), result.optimal_first_moves.end(),
                [](const auto& a, const auto& b) {
                  if (a.size() != b.size()) return a.size() < b.size();
                  return a < b;
                });
    }
  }

  result.stats.states = solver.states();
  result.stats.memo_hits = solver.hits();
  result.stats.symmetry_used = solver.symmetry_used();
  result.stats.ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return result;
}

std::vector<std::pair<int, int>> solve_curve(const Graph& g, int k_max, Goal goal,
                                             const SolverConfig& cfg) {
  SolverConfig c = cfg;
  c.first_moves = false;
  std::vector<std::pair<int, int>> out;
  for (int k = 1; k <= k_max; ++k) out.emplace_back(k, solve_exact(g, k, goal, c).value);
  return out;
}

Json solve_to_json(const Graph& g, const SolveResult& r) {
  Json doc;
  doc["value"] = r.value;
  Json moves = Json::array();
  for (const auto& s : r.optimal_first_moves) {
    Json set = Json::array();
    for (VertexIndex v : s) set.push_back(g.id(v));
    moves.push_back(std::move(set));
  }
  doc["optimal_first_moves"] = std::move(moves);
  Json stats;
  stats["states"] = r.stats.states;
  stats["memo_hits"] = r.stats.memo_hits;
  stats["ms"] = r.stats.ms;
  doc["stats"] = std::move(stats);
  return doc;
}

}  // namespace switchquest
