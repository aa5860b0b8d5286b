#include "switchquest/strategies.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <sstream>

#include "switchquest/reduce.hpp"

namespace switchquest {

namespace {

VertexIndex frontier(const Graph& g, const Knowledge& known) {
  const FlowPath p = flow(g, known);
  if (p.closed || g.is_sink(p.end())) return kNoVertex;
  return p.end();
}

int tag_int(const Vertex& v, const std::string& key) {
  auto it = v.tags.find(key);
  if (it == v.tags.end()) return -1;
  try {
    return std::stoi(it->second);
  } catch (const std::exception&) {
    return -1;
  }
}

// Pyramid coordinates taken from the "i"/"j" tags; checks the out-lists.
struct PyramidIndex {
  int n = 0;
  std::map<std::pair<int, int>, VertexIndex> at;
  std::vector<int> row, col;

  void build(const Graph& g, const std::string& who) {
    at.clear();
    row.assign(g.vertex_count(), 0);
    col.assign(g.vertex_count(), 0);
    for (VertexIndex v = 0; v < static_cast<VertexIndex>(g.vertex_count()); ++v) {
      const int i = tag_int(g.vertex(v), "i");
      const int j = tag_int(g.vertex(v), "j");
      if (i < 1 || j < 1 || j > i) throw std::invalid_argument(who + ": not a pyramid graph");
      row[v] = i;
      col[v] = j;
      at[{i, j}] = v;
      n = std::max(n, i - 1);
    }
    for (VertexIndex v = 0; v < static_cast<VertexIndex>(g.vertex_count()); ++v) {
      if (g.is_sink(v)) {
        if (row[v] != n + 1) throw std::invalid_argument(who + ": not a pyramid graph");
        continue;
      }
      if (g.out_degree(v) != 2 || g.head(v, 0) != find(row[v] + 1, col[v]) ||
          g.head(v, 1) != find(row[v] + 1, col[v] + 1)) {
        throw std::invalid_argument(who + ": not a pyramid graph");
      }
    }
  }

  VertexIndex find(int i, int j) const {
    auto it = at.find({i, j});
    return it == at.end() ? kNoVertex : it->second;
  }
};

std::vector<VertexIndex> by_level_desc(std::span<const VertexIndex> questions,
                                       const std::vector<int>& level) {
  std::vector<VertexIndex> order(questions.begin(), questions.end());
  std::stable_sort(order.begin(), order.end(),
                   [&](VertexIndex a, VertexIndex b) { return level[a] > level[b]; });
  return order;
}

// ---------------------------------------------------------------------------
// Questioners

class FollowFlow : public Questioner {
 public:
  std::string name() const override { return "follow_flow"; }
  std::vector<VertexIndex> ask(const Graph& g, int, const Knowledge& known) override {
    const VertexIndex f = frontier(g, known);
    if (f == kNoVertex) return {};
    return {f};
  }
  std::unique_ptr<Questioner> clone() const override { return std::make_unique<FollowFlow>(*this); }
};

class AlgorithmA : public Questioner {
 public:
  std::string name() const override { return "algorithm_a"; }
  std::vector<VertexIndex> ask(const Graph& g, int k, const Knowledge& known) override {
    const VertexIndex f = frontier(g, known);
    if (f == kNoVertex) return {};
    std::vector<int> dist(g.vertex_count(), -1);
    std::deque<VertexIndex> queue{f};
    dist[f] = 0;
    while (!queue.empty()) {
      const VertexIndex v = queue.front();
      queue.pop_front();
      auto visit = [&](VertexIndex w) {
        if (dist[w] < 0) {
          dist[w] = dist[v] + 1;
          queue.push_back(w);
        }
      };
      if (known.known(v)) {
        visit(g.head(v, known.slot(v)));
      } else {
        for (EdgeIndex e : g.out_edges(v)) visit(g.edge(e).to);
      }
    }
    std::vector<VertexIndex> cand;
    for (VertexIndex v = 0; v < static_cast<VertexIndex>(g.vertex_count()); ++v) {
      if (dist[v] >= 0 && g.is_askable(v) && !known.known(v)) cand.push_back(v);
    }
    std::sort(cand.begin(), cand.end(), [&](VertexIndex a, VertexIndex b) {
      if (dist[a] != dist[b]) return dist[a] < dist[b];
      return g.id(a) < g.id(b);
    });
    if (static_cast<int>(cand.size()) > k) cand.resize(k);
    return cand;
  }
  std::unique_ptr<Questioner> clone() const override { return std::make_unique<AlgorithmA>(*this); }
};

class AlgorithmB : public Questioner {
 public:
  std::string name() const override { return "algorithm_b"; }
  void reset(const Graph& g, int) override {
    spine_.clear();
    index_.assign(g.vertex_count(), -1);
    for (VertexIndex v = 0; v < static_cast<VertexIndex>(g.vertex_count()); ++v) {
      const int s = tag_int(g.vertex(v), "spine");
      if (s >= 1) {
        spine_[s] = v;
        index_[v] = s;
      }
    }
    if (spine_.empty()) throw std::invalid_argument("algorithm_b: graph has no spine tags");
  }
  std::vector<VertexIndex> ask(const Graph& g, int k, const Knowledge& known) override {
    const VertexIndex f = frontier(g, known);
    if (f == kNoVertex) return {};
    std::vector<VertexIndex> out{f};
    if (index_[f] < 0) return out;
    for (auto it = spine_.upper_bound(index_[f]);
         it != spine_.end() && static_cast<int>(out.size()) < k; ++it) {
      const VertexIndex v = it->second;
      if (g.is_sink(v)) break;
      if (g.is_askable(v) && !known.known(v)) out.push_back(v);
    }
    return out;
  }
  std::unique_ptr<Questioner> clone() const override { return std::make_unique<AlgorithmB>(*this); }

 private:
  std::map<int, VertexIndex> spine_;
  std::vector<int> index_;
};

class TreeLevels : public Questioner {
 public:
  std::string name() const override { return "tree_levels"; }
  void reset(const Graph& g, int) override {
    if (!is_out_tree(g)) throw std::invalid_argument("tree_levels: graph is not a rooted tree");
  }
  std::vector<VertexIndex> ask(const Graph& g, int k, const Knowledge& known) override {
    const VertexIndex f = frontier(g, known);
    if (f == kNoVertex) return {};
    std::vector<VertexIndex> out;
    std::vector<VertexIndex> level{f};
    while (!level.empty()) {
      std::vector<VertexIndex> ask_here;
      std::vector<VertexIndex> next;
      for (VertexIndex v : level) {
        if (g.is_askable(v) && !known.known(v)) ask_here.push_back(v);
        for (EdgeIndex e : g.out_edges(v)) next.push_back(g.edge(e).to);
      }
      if (out.size() + ask_here.size() > static_cast<std::size_t>(k)) break;
      out.insert(out.end(), ask_here.begin(), ask_here.end());
      level = std::move(next);
    }
    return out;
  }
  std::unique_ptr<Questioner> clone() const override { return std::make_unique<TreeLevels>(*this); }
};

class PyramidRecursive : public Questioner {
 public:
  explicit PyramidRecursive(int l) : l_(l) {
    if (l < 1) throw std::invalid_argument("pyramid_recursive: l must be >= 1");
  }
  std::string name() const override { return "pyramid_recursive:l=" + std::to_string(l_); }
  void reset(const Graph& g, int k) override {
    if (k < l_ * (l_ + 1) / 2) {
      throw std::invalid_argument("pyramid_recursive: k = " + std::to_string(k) +
                                  " is below s_l = " + std::to_string(l_ * (l_ + 1) / 2));
    }
    py_.build(g, "pyramid_recursive");
  }
  std::vector<VertexIndex> ask(const Graph& g, int, const Knowledge& known) override {
    const VertexIndex f = frontier(g, known);
    if (f == kNoVertex) return {};
    std::vector<VertexIndex> out;
    const int a = py_.row[f], b = py_.col[f];
    for (int t = 0; t < l_; ++t) {
      for (int u = 0; u <= t; ++u) {
        const VertexIndex v = py_.find(a + t, b + u);
        if (v != kNoVertex && g.is_askable(v) && !known.known(v)) out.push_back(v);
      }
    }
    return out;
  }
  std::unique_ptr<Questioner> clone() const override {
    return std::make_unique<PyramidRecursive>(*this);
  }

 private:
  int l_;
  PyramidIndex py_;
};

class PyramidK2 : public Questioner {
 public:
  std::string name() const override { return "pyramid_k2"; }
  void reset(const Graph& g, int k) override {
    if (k != 2) throw std::invalid_argument("pyramid_k2: requires k = 2");
    py_.build(g, "pyramid_k2");
  }
  std::vector<VertexIndex> ask(const Graph& g, int, const Knowledge& known) override {
    const VertexIndex f = frontier(g, known);
    if (f == kNoVertex) return {};
    auto open = [&](VertexIndex v) { return v != kNoVertex && g.is_askable(v) && !known.known(v); };
    const VertexIndex left = g.head(f, 0), right = g.head(f, 1);
    // Second round of the pattern: one child is already known.
    if (known.known(left) != known.known(right) && g.is_askable(left)) {
      const VertexIndex other = known.known(left) ? right : left;
      if (open(other)) return {f, other};
      return {f};
    }
    const int a = py_.row[f], b = py_.col[f];
    if (py_.n + 1 - a <= 2) return {f};
    const VertexIndex middle = py_.find(a + 2, b + 1);
    if (open(middle)) return {f, middle};
    return {f};
  }
  std::unique_ptr<Questioner> clone() const override { return std::make_unique<PyramidK2>(*this); }

 private:
  PyramidIndex py_;
};

class LayeredComplete : public Questioner {
 public:
  std::string name() const override { return "layered_complete"; }
  void reset(const Graph& g, int) override {
    level_ = vertex_levels(g);
    by_level_.clear();
    for (VertexIndex v = 0; v < static_cast<VertexIndex>(g.vertex_count()); ++v) {
      by_level_[level_[v]].push_back(v);
    }
    width_ = 0;
    for (const auto& [lvl, members] : by_level_) {
      if (lvl == 1) continue;
      if (width_ == 0) width_ = static_cast<int>(members.size());
      if (static_cast<int>(members.size()) != width_) {
        throw std::invalid_argument("layered_complete: levels have different widths");
      }
    }
    for (const auto& e : g.edges()) {
      if (level_[e.to] != level_[e.from] + 1) {
        throw std::invalid_argument("layered_complete: graph is not layered");
      }
    }
  }
  std::vector<VertexIndex> ask(const Graph& g, int k, const Knowledge& known) override {
    const VertexIndex f = frontier(g, known);
    if (f == kNoVertex) return {};
    std::vector<VertexIndex> out{f};
    const int extra = width_ > 0 ? (k - 1) / width_ : 0;
    for (int t = 1; t <= extra; ++t) {
      auto it = by_level_.find(level_[f] + t);
      if (it == by_level_.end()) break;
      for (VertexIndex v : it->second) {
        if (g.is_askable(v) && !known.known(v)) out.push_back(v);
      }
    }
    return out;
  }
  std::unique_ptr<Questioner> clone() const override {
    return std::make_unique<LayeredComplete>(*this);
  }

 private:
  std::vector<int> level_;
  std::map<int, std::vector<VertexIndex>> by_level_;
  int width_ = 0;
};

// ---------------------------------------------------------------------------
// Adversaries

class AllLeft : public Adversary {
 public:
  std::string name() const override { return "all_left"; }
  std::unique_ptr<Adversary> clone() const override { return std::make_unique<AllLeft>(*this); }

 protected:
  AdversaryResponse respond(const Graph&, const Knowledge&,
                            std::span<const VertexIndex> questions) override {
    AdversaryResponse r;
    for (VertexIndex v : questions) r.answers.push_back({v, 0});
    return r;
  }
};

class OmitFirst : public AllLeft {
 public:
  std::string name() const override { return "omit_first"; }
  std::unique_ptr<Adversary> clone() const override { return std::make_unique<OmitFirst>(*this); }

 protected:
  AdversaryResponse respond(const Graph& g, const Knowledge& known,
                            std::span<const VertexIndex> questions) override {
    AdversaryResponse r = AllLeft::respond(g, known, questions);
    r.answers.erase(r.answers.begin());
    return r;
  }
};

class Thm4PathEdge : public Adversary {
 public:
  std::string name() const override { return "thm4_path_edge"; }
  void reset(const Graph& g, int) override {
    slot_.assign(g.vertex_count(), 0);
    std::vector<EdgeIndex> edges;
    if (has_cycle(g)) {
      edges = longest_generalized_path(g).edges;
    } else {
      edges = longest_path(g).edges;
    }
    for (EdgeIndex e : edges) slot_[g.edge(e).from] = g.slot_of(e);
  }
  std::unique_ptr<Adversary> clone() const override { return std::make_unique<Thm4PathEdge>(*this); }

 protected:
  AdversaryResponse respond(const Graph&, const Knowledge&,
                            std::span<const VertexIndex> questions) override {
    AdversaryResponse r;
    for (VertexIndex v : questions) r.answers.push_back({v, slot_[v]});
    return r;
  }

 private:
  std::vector<int> slot_;
};

class TreeMinSubtree : public Adversary {
 public:
  std::string name() const override { return "tree_min_subtree"; }
  void reset(const Graph& g, int) override {
    if (!is_out_tree(g)) throw std::invalid_argument("tree_min_subtree: graph is not a rooted tree");
    enter_.assign(g.vertex_count(), 0);
    leave_.assign(g.vertex_count(), 0);
    int clock = 0;
    std::vector<std::pair<VertexIndex, bool>> stack{{g.source(), false}};
    while (!stack.empty()) {
      auto [v, done] = stack.back();
      stack.pop_back();
      if (done) {
        leave_[v] = clock;
        continue;
      }
      enter_[v] = clock++;
      stack.push_back({v, true});
      auto out = g.out_edges(v);
      for (auto it = out.rbegin(); it != out.rend(); ++it) stack.push_back({g.edge(*it).to, false});
    }
  }
  std::unique_ptr<Adversary> clone() const override {
    return std::make_unique<TreeMinSubtree>(*this);
  }

 protected:
  AdversaryResponse respond(const Graph& g, const Knowledge&,
                            std::span<const VertexIndex> questions) override {
    AdversaryResponse r;
    for (VertexIndex v : questions) {
      int best_slot = 0, best_count = -1;
      for (int s = 0; s < g.out_degree(v); ++s) {
        const VertexIndex c = g.head(v, s);
        int count = 0;
        for (VertexIndex q : questions) {
          count += (enter_[q] >= enter_[c] && enter_[q] < leave_[c]) ? 1 : 0;
        }
        if (best_count < 0 || count < best_count) {
          best_count = count;
          best_slot = s;
        }
      }
      r.answers.push_back({v, best_slot});
    }
    return r;
  }

 private:
  std::vector<int> enter_, leave_;
};

class PyramidShorterSide : public Adversary {
 public:
  std::string name() const override { return "pyramid_shorter_side"; }
  void reset(const Graph& g, int) override { py_.build(g, "pyramid_shorter_side"); }
  std::unique_ptr<Adversary> clone() const override {
    return std::make_unique<PyramidShorterSide>(*this);
  }

 protected:
  AdversaryResponse respond(const Graph& g, const Knowledge& known,
                            std::span<const VertexIndex> questions) override {
    AdversaryResponse r;
    Knowledge work = known;
    auto continuation = [&](VertexIndex v) {
      int len = 0;
      while (!g.is_sink(v) && work.known(v)) {
        v = g.head(v, work.slot(v));
        ++len;
      }
      return len;
    };
    for (VertexIndex v : by_level_desc(questions, py_.row)) {
      int slot = 0;
      if (v == frontier(g, work)) {
        const int lu = continuation(g.head(v, 0));
        const int lw = continuation(g.head(v, 1));
        slot = lu <= lw ? 0 : 1;
      }
      work.set(v, slot);
      r.answers.push_back({v, slot});
    }
    return r;
  }

 private:
  PyramidIndex py_;
};

}  // namespace

// ---------------------------------------------------------------------------

class GpyLeftCommittingAdversary : public Adversary {
 public:
  std::string name() const override { return "gpy_left_committing"; }

  void reset(const Graph& g, int) override {
    level_ = vertex_levels(g);
    levels_.clear();
    int top = 0;
    for (VertexIndex v = 0; v < static_cast<VertexIndex>(g.vertex_count()); ++v) {
      top = std::max(top, level_[v]);
    }
    levels_.assign(top + 1, {});
    for (VertexIndex v = 0; v < static_cast<VertexIndex>(g.vertex_count()); ++v) {
      levels_[level_[v]].push_back(v);
    }
    d_ = 0;
    for (VertexIndex v = 0; v < static_cast<VertexIndex>(g.vertex_count()); ++v) {
      if (g.is_sink(v)) {
        if (level_[v] != top) throw std::invalid_argument("gpy_left_committing: sink above the last level");
        continue;
      }
      if (d_ == 0) d_ = g.out_degree(v);
      if (g.out_degree(v) != d_ || d_ < 2) {
        throw std::invalid_argument("gpy_left_committing: out-degrees differ");
      }
    }
    for (const auto& e : g.edges()) {
      if (level_[e.to] != level_[e.from] + 1) {
        throw std::invalid_argument("gpy_left_committing: graph is not layered");
      }
    }
    for (int lvl = 1; lvl < top; ++lvl) {
      std::vector<VertexIndex> heads;
      for (VertexIndex v : levels_[lvl]) heads.push_back(g.head(v, 0));
      std::sort(heads.begin(), heads.end());
      if (std::adjacent_find(heads.begin(), heads.end()) != heads.end()) {
        throw std::invalid_argument("gpy_left_committing: first edges do not form a matching");
      }
    }
    endpoint_hits_ = 0;
    max_hits_per_round_ = 0;
  }

  std::unique_ptr<Adversary> clone() const override {
    return std::make_unique<GpyLeftCommittingAdversary>(*this);
  }

  long max_hits_per_round() const { return max_hits_per_round_; }

 protected:
  AdversaryResponse respond(const Graph& g, const Knowledge& known,
                            std::span<const VertexIndex> questions) override {
    AdversaryResponse r;
    Knowledge work = known;
    const int sink_level = static_cast<int>(levels_.size()) - 1;
    long hits = 0;
    auto level_told = [&](int lvl) {
      if (lvl == sink_level) return false;
      for (VertexIndex u : levels_[lvl]) {
        if (!work.known(u)) return false;
      }
      return true;
    };
    for (VertexIndex v : by_level_desc(questions, level_)) {
      if (work.known(v)) {
        r.answers.push_back({v, work.slot(v)});
        continue;
      }
      int slot = 0;
      if (v == frontier(g, work)) {
        ++hits;
        int j = level_[v] + 1;
        while (level_told(j)) ++j;
        if (j < sink_level) {
          std::vector<VertexIndex> landing;
          for (int s = 0; s < g.out_degree(v); ++s) {
            VertexIndex x = g.head(v, s);
            while (level_[x] < j) x = g.head(x, work.slot(x));
            landing.push_back(x);
          }
          std::vector<VertexIndex> sorted = landing;
          std::sort(sorted.begin(), sorted.end());
          if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
            throw std::logic_error("gpy_left_committing: continuations of " + g.id(v) +
                                   " collide");
          }
          for (int s = 0; s < static_cast<int>(landing.size()); ++s) {
            if (!work.known(landing[s])) {
              slot = s;
              break;
            }
          }
        }
        work.set(v, slot);
        r.answers.push_back({v, slot});
        continue;
      }
      int others = 0;
      for (VertexIndex u : levels_[level_[v]]) others += (u != v && work.known(u)) ? 1 : 0;
      work.set(v, 0);
      r.answers.push_back({v, 0});
      if (others >= d_ - 1) {
        for (VertexIndex u : levels_[level_[v]]) {
          if (!work.known(u)) {
            work.set(u, 0);
            r.volunteered.push_back({u, 0});
          }
        }
      }
    }
    endpoint_hits_ += hits;
    max_hits_per_round_ = std::max(max_hits_per_round_, hits);
    return r;
  }

 private:
  std::vector<int> level_;
  std::vector<std::vector<VertexIndex>> levels_;
  int d_ = 0;
  long endpoint_hits_ = 0;
  long max_hits_per_round_ = 0;
};

// Working graph W is the reduced graph left after all answers so far; image_
// maps every input vertex into W; path_ is a longest path of W from its source.
class Thm3Adversary : public Adversary {
 public:
  std::string name() const override { return "thm3_longest_path"; }

  void reset(const Graph& g, int k) override {
    if (k != 1) throw std::invalid_argument("thm3_longest_path: defined for k = 1 only");
    if (has_cycle(g)) throw std::invalid_argument("thm3_longest_path: graph has a cycle");
    std::set<std::pair<VertexIndex, VertexIndex>> pairs;
    for (const auto& e : g.edges()) {
      if (!pairs.insert({e.from, e.to}).second) {
        throw std::invalid_argument("thm3_longest_path: graph has parallel edges");
      }
    }
    for (VertexIndex v = 0; v < static_cast<VertexIndex>(g.vertex_count()); ++v) {
      if (g.is_forced(v)) {
        throw std::invalid_argument("thm3_longest_path: " + g.id(v) + " has out-degree 1");
      }
    }
    work_ = g;
    image_.resize(g.vertex_count());
    for (VertexIndex v = 0; v < static_cast<VertexIndex>(g.vertex_count()); ++v) image_[v] = v;
    path_ = longest_path(work_).vertices;
  }

  std::unique_ptr<Adversary> clone() const override { return std::make_unique<Thm3Adversary>(*this); }

  std::optional<std::string> state_key() const override {
    std::string key;
    for (const auto& e : work_.edges()) {
      key += work_.id(e.from);
      key += '>';
      key += work_.id(e.to);
      key += ';';
    }
    key += '|';
    for (VertexIndex v : path_) {
      key += work_.id(v);
      key += ',';
    }
    return key;
  }

  int path_length() const { return static_cast<int>(path_.size()) - 1; }

 protected:
  AdversaryResponse respond(const Graph& g, const Knowledge&,
                            std::span<const VertexIndex> questions) override {
    AdversaryResponse r;
    for (VertexIndex u : questions) r.answers.push_back({u, answer_one(g, u)});
    return r;
  }

 private:
  int answer_one(const Graph& g, VertexIndex u) {
    const VertexIndex x = image_[u];
    std::vector<VertexIndex> target(g.out_degree(u));
    bool any = false;
    for (int s = 0; s < g.out_degree(u); ++s) {
      target[s] = image_[g.head(u, s)];
      any = any || target[s] != x;
    }
    // Every edge of u lies inside its merged vertex: the answer carries no information.
    if (!any) return 0;

    auto first_slot = [&](auto pred) {
      for (int s = 0; s < static_cast<int>(target.size()); ++s) {
        if (target[s] != x && pred(target[s])) return s;
      }
      return -1;
    };
    auto pos_of = [&](VertexIndex w) {
      auto it = std::find(path_.begin(), path_.end(), w);
      return it == path_.end() ? -1 : static_cast<int>(it - path_.begin());
    };
    const int pos = pos_of(x);
    const int last = static_cast<int>(path_.size()) - 1;
    int slot = -1;
    if (pos >= 0 && pos < last) {
      bool shortcut = false;
      if (pos >= 1) {
        for (EdgeIndex e : work_.out_edges(path_[pos - 1])) {
          shortcut = shortcut || work_.edge(e).to == path_[pos + 1];
        }
      }
      if (shortcut) {
        slot = first_slot([&](VertexIndex y) { return y != path_[pos + 1]; });
      } else {
        slot = first_slot([&](VertexIndex y) { return y == path_[pos + 1]; });
      }
    } else {
      slot = first_slot([&](VertexIndex y) { return pos_of(y) < 0; });
      if (slot < 0) {
        int best = -1;
        for (int s = 0; s < static_cast<int>(target.size()); ++s) {
          if (target[s] != x && pos_of(target[s]) > best) {
            best = pos_of(target[s]);
            slot = s;
          }
        }
      }
    }
    if (slot < 0) slot = first_slot([](VertexIndex) { return true; });

    EdgeIndex edge = kNoEdge;
    for (EdgeIndex e : work_.out_edges(x)) {
      if (work_.edge(e).to == target[slot]) {
        edge = e;
        break;
      }
    }
    if (edge == kNoEdge) {
      throw std::logic_error("thm3_longest_path: working graph lost the edge of " + g.id(u));
    }
    ReductionResult step = apply_answer_simple(work_, x, edge);
    for (VertexIndex& v : image_) v = step.image[v];

    std::vector<VertexIndex> mapped;
    for (VertexIndex v : path_) {
      const VertexIndex w = step.image[v];
      if (mapped.empty() || mapped.back() != w) mapped.push_back(w);
    }
    work_ = std::move(step.graph);
    bool valid = !mapped.empty() && mapped.front() == work_.source();
    for (std::size_t i = 0; valid && i + 1 < mapped.size(); ++i) {
      bool edge_ok = false;
      for (EdgeIndex e : work_.out_edges(mapped[i])) edge_ok = edge_ok || work_.edge(e).to == mapped[i + 1];
      valid = edge_ok;
    }
    if (!valid || static_cast<int>(mapped.size()) - 1 < longest_path_len(work_)) {
      path_ = longest_path(work_).vertices;
    } else {
      path_ = std::move(mapped);
    }
    return slot;
  }

  Graph work_;
  std::vector<VertexIndex> image_;
  std::vector<VertexIndex> path_;
};

// ---------------------------------------------------------------------------

std::unique_ptr<Questioner> questioner_follow_flow() { return std::make_unique<FollowFlow>(); }
std::unique_ptr<Questioner> questioner_algorithm_a() { return std::make_unique<AlgorithmA>(); }
std::unique_ptr<Questioner> questioner_algorithm_b() { return std::make_unique<AlgorithmB>(); }
std::unique_ptr<Questioner> questioner_tree_levels() { return std::make_unique<TreeLevels>(); }
std::unique_ptr<Questioner> questioner_pyramid_recursive(int l) {
  return std::make_unique<PyramidRecursive>(l);
}
std::unique_ptr<Questioner> questioner_pyramid_k2() { return std::make_unique<PyramidK2>(); }
std::unique_ptr<Questioner> questioner_layered_complete() {
  return std::make_unique<LayeredComplete>();
}

std::unique_ptr<Adversary> adversary_all_left() { return std::make_unique<AllLeft>(); }
std::unique_ptr<Adversary> adversary_thm3_longest_path() { return std::make_unique<Thm3Adversary>(); }
std::unique_ptr<Adversary> adversary_thm4_path_edge() { return std::make_unique<Thm4PathEdge>(); }
std::unique_ptr<Adversary> adversary_tree_min_subtree() {
  return std::make_unique<TreeMinSubtree>();
}
std::unique_ptr<Adversary> adversary_pyramid_shorter_side() {
  return std::make_unique<PyramidShorterSide>();
}
std::unique_ptr<Adversary> adversary_gpy_left_committing() {
  return std::make_unique<GpyLeftCommittingAdversary>();
}
std::unique_ptr<Adversary> adversary_omit_first() { return std::make_unique<OmitFirst>(); }

int thm3_path_length(const Adversary& a) {
  const auto* t = dynamic_cast<const Thm3Adversary*>(&a);
  if (!t) throw std::invalid_argument("thm3_path_length: not a thm3_longest_path adversary");
  return t->path_length();
}

long gpy_endpoint_hits(const Adversary& a) {
  const auto* t = dynamic_cast<const GpyLeftCommittingAdversary*>(&a);
  if (!t) throw std::invalid_argument("gpy_endpoint_hits: not a gpy_left_committing adversary");
  return t->max_hits_per_round();
}

// ---------------------------------------------------------------------------

namespace {

struct Spec {
  std::string name;
  std::map<std::string, std::string> params;
};

Spec parse_spec(const std::string& text) {
  Spec s;
  const auto colon = text.find(':');
  s.name = text.substr(0, colon);
  if (colon == std::string::npos) return s;
  std::stringstream rest(text.substr(colon + 1));
  std::string item;
  while (std::getline(rest, item, ',')) {
    const auto eq = item.find('=');
    if (eq == std::string::npos) {
      throw UnknownStrategyError("malformed strategy parameter '" + item + "' in '" + text + "'");
    }
    s.params[item.substr(0, eq)] = item.substr(eq + 1);
  }
  return s;
}

std::string joined(const std::vector<std::string>& names) {
  std::string out;
  for (const auto& n : names) out += (out.empty() ? "" : ", ") + n;
  return out;
}

void no_params(const Spec& s) {
  if (!s.params.empty()) throw UnknownStrategyError(s.name + " takes no parameters");
}

}  // namespace

std::vector<std::string> questioner_names() {
  return {"follow_flow",       "algorithm_a", "algorithm_b",     "tree_levels",
          "pyramid_recursive", "pyramid_k2",  "layered_complete"};
}

std::vector<std::string> adversary_names() {
  return {"all_left",         "thm3_longest_path",    "thm4_path_edge",
          "tree_min_subtree", "pyramid_shorter_side", "gpy_left_committing",
          "omit_first"};
}

std::unique_ptr<Questioner> make_questioner(const std::string& text) {
  const Spec s = parse_spec(text);
  if (s.name == "pyramid_recursive") {
    int l = 1;
    for (const auto& [k, v] : s.params) {
      if (k != "l") throw UnknownStrategyError("pyramid_recursive: unknown parameter '" + k + "'");
      try {
        l = std::stoi(v);
      } catch (const std::exception&) {
        throw UnknownStrategyError("pyramid_recursive: l must be an integer");
      }
    }
    return questioner_pyramid_recursive(l);
  }
  no_params(s);
  if (s.name == "follow_flow") return questioner_follow_flow();
  if (s.name == "algorithm_a") return questioner_algorithm_a();
  if (s.name == "algorithm_b") return questioner_algorithm_b();
  if (s.name == "tree_levels") return questioner_tree_levels();
  if (s.name == "pyramid_k2") return questioner_pyramid_k2();
  if (s.name == "layered_complete") return questioner_layered_complete();
  throw UnknownStrategyError("unknown questioner '" + s.name + "' (known: " +
                             joined(questioner_names()) + ")");
}

std::unique_ptr<Adversary> make_adversary(const std::string& text) {
  const Spec s = parse_spec(text);
  no_params(s);
  if (s.name == "all_left") return adversary_all_left();
  if (s.name == "thm3_longest_path") return adversary_thm3_longest_path();
  if (s.name == "thm4_path_edge") return adversary_thm4_path_edge();
  if (s.name == "tree_min_subtree") return adversary_tree_min_subtree();
  if (s.name == "pyramid_shorter_side") return adversary_pyramid_shorter_side();
  if (s.name == "gpy_left_committing") return adversary_gpy_left_committing();
  if (s.name == "omit_first") return adversary_omit_first();
  throw UnknownStrategyError("unknown adversary '" + s.name + "' (known: " +
                             joined(adversary_names()) + ")");
}

}  // namespace switchquest
