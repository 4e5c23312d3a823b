#include "unfold.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <queue>

namespace h1min {

namespace {

// Partial universal cover around a root vertex, grown by Dijkstra expansion
// and kept consistent by closing face relations as soon as all but one step
// of a boundary word is present. Identifications (two lifted vertices forced
// equal) are handled with a union-find whose cascades run to a fixpoint, so
// the structure is a faithful quotient of the true cover ball wherever the
// needed relations fit inside the explored region.
class Unfolding {
 public:
  Unfolding(const Complex2& k, std::uint32_t root, double radius)
      : k_(k), radius_(radius), early_exit_(k.face_count() == 0) {
    build_face_words();
    root_ = new_vertex(root, 0.0);
    heap_.push({0.0, root_});
    run();
  }

  // Shortest distance from the root to a different lift of the same base
  // vertex, within the explored radius.
  std::optional<double> essential_loop_length() {
    if (early_loop_) return early_loop_;
    finish_distances();
    std::optional<double> best;
    std::uint32_t r = find(root_);
    for (std::uint32_t x = 0; x < base_.size(); ++x) {
      if (find(x) != x || x == r || base_[x] != base_[r]) continue;
      if (final_dist_[x] < (best ? *best : std::numeric_limits<double>::infinity()))
        best = final_dist_[x];
    }
    return best;
  }

 private:
  using Key = std::uint32_t;  // 2*edge + dir, dir 0 = forward (u -> v)

  static Key make_key(std::uint32_t e, bool rev) { return 2 * e + (rev ? 1u : 0u); }
  static Key rev_key(Key k) { return k ^ 1u; }

  struct Step {
    std::uint32_t edge;
    bool rev;
  };

  void build_face_words() {
    words_.resize(k_.face_count());
    incidences_.assign(2 * static_cast<std::size_t>(k_.edge_count()), {});
    for (std::uint32_t f = 0; f < k_.face_count(); ++f) {
      const auto& walk = k_.face_walk(f);
      for (std::size_t p = 0; p < walk.size(); ++p) {
        words_[f].push_back({walk[p].edge, walk[p].reversed});
        incidences_[make_key(walk[p].edge, walk[p].reversed)].push_back(
            {f, static_cast<std::uint32_t>(p)});
      }
    }
  }

  std::uint32_t new_vertex(std::uint32_t base, double dist) {
    std::uint32_t id = static_cast<std::uint32_t>(base_.size());
    base_.push_back(base);
    dist_.push_back(dist);
    parent_.push_back(id);
    adj_.emplace_back();
    return id;
  }

  std::uint32_t find(std::uint32_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  std::uint32_t adj_get(std::uint32_t x, Key key) {
    x = find(x);
    for (auto& [k, t] : adj_[x])
      if (k == key) return find(t);
    return UINT32_MAX;
  }

  // Records a lifted edge between roots a and b; conflicting slots merge.
  void set_adj(std::uint32_t a, Key key, std::uint32_t b) {
    a = find(a);
    b = find(b);
    std::uint32_t cur = adj_get(a, key);
    if (cur != UINT32_MAX) {
      if (cur != b) queue_merge(cur, b);
      return;
    }
    adj_[a].push_back({key, b});
    closure_queue_.push_back({a, key});
    std::uint32_t back = adj_get(b, rev_key(key));
    if (back == UINT32_MAX) {
      adj_[b].push_back({rev_key(key), a});
      closure_queue_.push_back({b, rev_key(key)});
    } else if (back != a) {
      queue_merge(back, a);
    }
  }

  void queue_merge(std::uint32_t a, std::uint32_t b) { merge_queue_.push_back({a, b}); }

  void process_merges() {
    while (!merge_queue_.empty()) {
      auto [a, b] = merge_queue_.front();
      merge_queue_.pop_front();
      a = find(a);
      b = find(b);
      if (a == b) continue;
      if (dist_[b] < dist_[a] || (dist_[b] == dist_[a] && b < a)) std::swap(a, b);
      if (base_[a] != base_[b])
        fail(ErrorCode::internal, "unfolding merged lifts of distinct vertices");
      parent_[b] = a;
      if (dist_[b] < dist_[a]) dist_[a] = dist_[b];
      heap_.push({dist_[a], a});
      auto moved = std::move(adj_[b]);
      adj_[b].clear();
      for (auto& [key, t] : moved) set_adj(a, key, find(t));
    }
  }

  // Face relation closure anchored at a lifted directed edge.
  void close_at(std::uint32_t a, Key key) {
    a = find(a);
    std::uint32_t b = adj_get(a, key);
    if (b == UINT32_MAX) return;
    for (const auto& [f, p] : incidences_[key]) {
      const auto& word = words_[f];
      const std::uint32_t k = static_cast<std::uint32_t>(word.size());
      std::uint32_t fwd = b, F = 0;
      while (F < k - 1) {
        const Step& s = word[(p + 1 + F) % k];
        std::uint32_t nxt = adj_get(fwd, make_key(s.edge, s.rev));
        if (nxt == UINT32_MAX) break;
        fwd = nxt;
        ++F;
      }
      if (F == k - 1) {
        if (fwd != find(a)) queue_merge(fwd, a);
        continue;
      }
      std::uint32_t bwd = find(a), B = 0;
      while (B < k - 2 - F) {
        const Step& s = word[(p + k - 1 - B) % k];
        std::uint32_t prv = adj_get(bwd, make_key(s.edge, !s.rev));
        if (prv == UINT32_MAX) break;
        bwd = prv;
        ++B;
      }
      if (B == k - 2 - F) {
        const Step& s = word[(p + F + 1) % k];
        set_adj(fwd, make_key(s.edge, s.rev), bwd);
      }
    }
  }

  void settle() {
    while (!merge_queue_.empty() || !closure_queue_.empty()) {
      process_merges();
      if (!closure_queue_.empty()) {
        auto [a, key] = closure_queue_.front();
        closure_queue_.pop_front();
        close_at(a, key);
      }
    }
  }

  void run() {
    while (!heap_.empty()) {
      settle();
      if (heap_.empty()) break;
      auto [d, x] = heap_.top();
      heap_.pop();
      x = find(x);
      if (d > dist_[x] + 1e-12) continue;
      if (dist_[x] > radius_) continue;
      if (early_exit_ && x != find(root_) && base_[x] == base_[find(root_)]) {
        early_loop_ = dist_[x];
        return;
      }
      expand(x);
      settle();
    }
    settle();
  }

  void expand(std::uint32_t x) {
    std::uint32_t bx = base_[x];
    for (const auto& inc : k_.incidences(bx)) {
      Key key = make_key(inc.edge, inc.reversed);
      double nd = dist_[find(x)] + k_.edge(inc.edge).length;
      std::uint32_t t = adj_get(x, key);
      if (t == UINT32_MAX) {
        if (nd > radius_) continue;
        std::uint32_t y = new_vertex(inc.other, nd);
        set_adj(x, key, y);
        heap_.push({nd, y});
      } else if (nd < dist_[t]) {
        dist_[t] = nd;
        heap_.push({nd, t});
      }
    }
  }

  // Exact Dijkstra over the settled structure.
  void finish_distances() {
    final_dist_.assign(base_.size(), std::numeric_limits<double>::infinity());
    using Item = std::pair<double, std::uint32_t>;
    std::priority_queue<Item, std::vector<Item>, std::greater<Item>> pq;
    std::uint32_t r = find(root_);
    final_dist_[r] = 0.0;
    pq.push({0.0, r});
    while (!pq.empty()) {
      auto [d, x] = pq.top();
      pq.pop();
      if (d > final_dist_[x]) continue;
      for (auto& [key, t0] : adj_[x]) {
        std::uint32_t t = find(t0);
        double nd = d + k_.edge(key / 2).length;
        if (nd < final_dist_[t]) {
          final_dist_[t] = nd;
          pq.push({nd, t});
        }
      }
    }
  }

  const Complex2& k_;
  double radius_;
  bool early_exit_;
  std::uint32_t root_ = 0;

  std::vector<std::vector<Step>> words_;
  std::vector<std::vector<std::pair<std::uint32_t, std::uint32_t>>> incidences_;

  std::vector<std::uint32_t> base_;
  std::vector<double> dist_;
  std::vector<std::uint32_t> parent_;
  std::vector<std::vector<std::pair<Key, std::uint32_t>>> adj_;

  std::priority_queue<std::pair<double, std::uint32_t>,
                      std::vector<std::pair<double, std::uint32_t>>,
                      std::greater<std::pair<double, std::uint32_t>>>
      heap_;
  std::deque<std::pair<std::uint32_t, std::uint32_t>> merge_queue_;
  std::deque<std::pair<std::uint32_t, Key>> closure_queue_;

  std::vector<double> final_dist_;
  std::optional<double> early_loop_;
};

}  // namespace

std::optional<double> shortest_essential_loop(const Complex2& k, std::uint32_t v, double radius) {
  if (v >= k.vertex_count()) fail(ErrorCode::argument, "vertex out of range");
  Unfolding u(k, v, radius);
  return u.essential_loop_length();
}

MetricProfile injectivity_profile(const Complex2& k, double horizon, double R) {
  if (!(horizon > 0.0)) fail(ErrorCode::argument, "horizon must be positive");
  MetricProfile p;
  p.complex = &k;
  p.horizon = horizon;
  p.injrad.resize(k.vertex_count());
  for (std::uint32_t v = 0; v < k.vertex_count(); ++v) {
    auto loop = shortest_essential_loop(k, v, horizon);
    p.injrad[v] = loop ? std::min(*loop / 2.0, horizon) : horizon;
  }
  p.R = R;
  p.thick.resize(k.vertex_count());
  for (std::uint32_t v = 0; v < k.vertex_count(); ++v) p.thick[v] = p.injrad[v] > R;
  return p;
}

MetricProfile reprofile(const MetricProfile& p, double newR) {
  MetricProfile out = p;
  out.R = newR;
  for (std::size_t v = 0; v < out.injrad.size(); ++v) out.thick[v] = out.injrad[v] > newR;
  return out;
}

BsStats bs_statistics(const MetricProfile& p) {
  BsStats s;
  if (p.injrad.empty()) return s;
  std::size_t thin = 0;
  std::map<double, std::uint32_t> hist;
  for (std::size_t v = 0; v < p.injrad.size(); ++v) {
    if (!p.thick[v]) ++thin;
    ++hist[p.injrad[v]];
  }
  s.thin_fraction = static_cast<double>(thin) / static_cast<double>(p.injrad.size());
  s.histogram.assign(hist.begin(), hist.end());
  return s;
}

}  // namespace h1min
