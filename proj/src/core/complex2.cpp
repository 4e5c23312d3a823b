#include "complex2.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <queue>
#include <sstream>

namespace h1min {

namespace {

std::string fmt_double(double x) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

}  // namespace

std::optional<std::vector<WalkStep>> resolve_face_walk(const std::vector<Edge>& edges,
                                                       const std::vector<std::uint32_t>& face) {
  if (face.empty()) return std::nullopt;
  const Edge& first = edges[face[0]];
  int orientations = first.is_loop() ? 1 : 2;
  for (int o = 0; o < orientations; ++o) {
    bool rev0 = (o == 1);
    std::uint32_t start = rev0 ? first.v : first.u;
    std::uint32_t cur = rev0 ? first.u : first.v;
    std::vector<WalkStep> steps;
    steps.push_back({face[0], rev0});
    bool ok = true;
    for (std::size_t i = 1; i < face.size(); ++i) {
      const Edge& e = edges[face[i]];
      if (e.is_loop()) {
        if (cur != e.u) {
          ok = false;
          break;
        }
        steps.push_back({face[i], false});
      } else if (cur == e.u) {
        steps.push_back({face[i], false});
        cur = e.v;
      } else if (cur == e.v) {
        steps.push_back({face[i], true});
        cur = e.u;
      } else {
        ok = false;
        break;
      }
    }
    if (ok && cur == start) return steps;
  }
  return std::nullopt;
}

Complex2 Complex2::build(std::uint32_t vertex_count, std::vector<Edge> edges,
                         const std::vector<std::vector<std::uint32_t>>& faces) {
  for (std::size_t f = 0; f < faces.size(); ++f)
    for (auto e : faces[f])
      if (e >= edges.size())
        fail(ErrorCode::argument,
             "face " + std::to_string(f) + " references edge " + std::to_string(e) + " of " +
                 std::to_string(edges.size()));
  std::vector<std::vector<WalkStep>> walks;
  walks.reserve(faces.size());
  for (std::size_t f = 0; f < faces.size(); ++f) {
    auto w = resolve_face_walk(edges, faces[f]);
    if (!w)
      fail(ErrorCode::argument,
           "face " + std::to_string(f) + " boundary is not a closed walk in the 1-skeleton");
    walks.push_back(std::move(*w));
  }
  return build_with_walks(vertex_count, std::move(edges), std::move(walks));
}

Complex2 Complex2::build_with_walks(std::uint32_t vertex_count, std::vector<Edge> edges,
                                    std::vector<std::vector<WalkStep>> face_walks) {
  Complex2 k;
  k.vertex_count_ = vertex_count;
  k.edges_ = std::move(edges);
  k.face_walks_ = std::move(face_walks);
  k.finalize();
  return k;
}

void Complex2::finalize() {
  for (std::size_t e = 0; e < edges_.size(); ++e) {
    const Edge& ed = edges_[e];
    if (ed.u >= vertex_count_ || ed.v >= vertex_count_)
      fail(ErrorCode::argument, "edge " + std::to_string(e) + " references a missing vertex");
    if (!(ed.length > 0.0) || !std::isfinite(ed.length))
      fail(ErrorCode::argument, "edge " + std::to_string(e) + " has nonpositive length");
  }

  // Verify each stored walk is closed and consistent with the edge list.
  for (std::size_t f = 0; f < face_walks_.size(); ++f) {
    const auto& w = face_walks_[f];
    if (w.empty()) fail(ErrorCode::argument, "face " + std::to_string(f) + " has empty boundary");
    std::uint32_t start = 0, cur = 0;
    for (std::size_t i = 0; i < w.size(); ++i) {
      if (w[i].edge >= edges_.size())
        fail(ErrorCode::argument, "face " + std::to_string(f) + " references a missing edge");
      const Edge& e = edges_[w[i].edge];
      std::uint32_t tail = w[i].reversed ? e.v : e.u;
      std::uint32_t head = w[i].reversed ? e.u : e.v;
      if (i == 0) {
        start = tail;
      } else if (cur != tail) {
        fail(ErrorCode::argument,
             "face " + std::to_string(f) + " boundary is not a closed walk in the 1-skeleton");
      }
      cur = head;
    }
    if (cur != start)
      fail(ErrorCode::argument,
           "face " + std::to_string(f) + " boundary is not a closed walk in the 1-skeleton");
  }

  adjacency_.assign(vertex_count_, {});
  for (std::uint32_t e = 0; e < edges_.size(); ++e) {
    const Edge& ed = edges_[e];
    adjacency_[ed.u].push_back({e, false, ed.v});
    adjacency_[ed.v].push_back({e, true, ed.u});  // loops get both directions at u
  }

  face_boundaries_.clear();
  face_boundaries_.reserve(face_walks_.size());
  for (std::size_t f = 0; f < face_walks_.size(); ++f) {
    Chain1 b{BitVec(edges_.size())};
    for (const auto& s : face_walks_[f]) b.bits.flip(s.edge);
    if (boundary1(b).bits.any())
      fail(ErrorCode::internal, "face " + std::to_string(f) + " violates d1*d2 = 0");
    face_boundaries_.push_back(std::move(b));
  }

  if (!face_walks_.empty()) {
    volume_ = static_cast<double>(face_walks_.size());
  } else {
    volume_ = 0.0;
    for (const auto& e : edges_) volume_ += e.length;
  }
}

std::uint32_t Complex2::face_walk_start(std::uint32_t f) const {
  const WalkStep& s = face_walks_[f][0];
  const Edge& e = edges_[s.edge];
  return s.reversed ? e.v : e.u;
}

Chain1 Complex2::chain_from_edges(const std::vector<std::uint32_t>& idx) const {
  for (auto e : idx)
    if (e >= edges_.size())
      fail(ErrorCode::argument, "chain references edge " + std::to_string(e) + " of " +
                                    std::to_string(edges_.size()));
  return Chain1{BitVec::from_indices(edges_.size(), idx)};
}

Chain0 Complex2::boundary1(const Chain1& c) const {
  BitVec out(vertex_count_);
  for (std::size_t k = 0; k < c.bits.word_count(); ++k) {
    std::uint64_t w = c.bits.word(k);
    while (w) {
      std::uint32_t e = static_cast<std::uint32_t>((k << 6) + __builtin_ctzll(w));
      w &= w - 1;
      const Edge& ed = edges_[e];
      if (!ed.is_loop()) {
        out.flip(ed.u);
        out.flip(ed.v);
      }
    }
  }
  return Chain0{std::move(out)};
}

Chain1 Complex2::boundary2(const std::vector<std::uint32_t>& face_set) const {
  Chain1 out = empty_chain1();
  for (auto f : face_set) {
    if (f >= face_walks_.size())
      fail(ErrorCode::argument, "face index " + std::to_string(f) + " out of range");
    out ^= face_boundaries_[f];
  }
  return out;
}

double Complex2::chain_length(const Chain1& c) const {
  double total = 0.0;
  for (std::size_t k = 0; k < c.bits.word_count(); ++k) {
    std::uint64_t w = c.bits.word(k);
    while (w) {
      std::uint32_t e = static_cast<std::uint32_t>((k << 6) + __builtin_ctzll(w));
      w &= w - 1;
      total += edges_[e].length;
    }
  }
  return total;
}

BitMatrix Complex2::boundary1_matrix() const {
  BitMatrix m(vertex_count_, edges_.size());
  for (std::size_t e = 0; e < edges_.size(); ++e) {
    const Edge& ed = edges_[e];
    if (!ed.is_loop()) {
      m.set(ed.u, e, true);
      m.set(ed.v, e, true);
    }
  }
  return m;
}

BitMatrix Complex2::boundary2_matrix() const {
  BitMatrix m(edges_.size(), face_walks_.size());
  for (std::size_t f = 0; f < face_walks_.size(); ++f)
    for (auto e : face_boundaries_[f].bits.indices()) m.set(e, f, true);
  return m;
}

std::vector<double> Complex2::shortest_distances(std::uint32_t source, double bound) const {
  std::vector<double> dist(vertex_count_, std::numeric_limits<double>::infinity());
  using Item = std::pair<double, std::uint32_t>;
  std::priority_queue<Item, std::vector<Item>, std::greater<Item>> pq;
  dist[source] = 0.0;
  pq.push({0.0, source});
  while (!pq.empty()) {
    auto [d, v] = pq.top();
    pq.pop();
    if (d > dist[v]) continue;
    for (const auto& inc : adjacency_[v]) {
      double nd = d + edges_[inc.edge].length;
      if (nd <= bound && nd < dist[inc.other]) {
        dist[inc.other] = nd;
        pq.push({nd, inc.other});
      }
    }
  }
  return dist;
}

const Complex2::BoundaryForm& Complex2::boundary_form() const {
  auto& cache = *boundary_form_cache_;
  std::call_once(cache.once, [&] {
    auto form = std::make_unique<BoundaryForm>();
    for (std::uint32_t f = 0; f < face_walks_.size(); ++f)
      if (form->space.add(face_boundaries_[f].bits)) form->pivot_faces.push_back(f);
    cache.form = std::move(form);
  });
  return *cache.form;
}

Complex2 Complex2::parse(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t lineno = 0;
  bool saw_header = false;
  std::optional<std::uint32_t> vcount;
  std::vector<Edge> edges;
  std::vector<std::vector<std::uint32_t>> faces;
  bool saw_face = false;

  auto die = [&](const std::string& msg) {
    fail(ErrorCode::parse, "line " + std::to_string(lineno) + ": " + msg);
  };

  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream ls(line);
    std::string tok;
    if (!(ls >> tok)) continue;
    if (tok[0] == '#') continue;
    if (!saw_header) {
      std::string ver;
      if (tok != "complex2" || !(ls >> ver) || ver != "v1")
        die("expected header 'complex2 v1'");
      saw_header = true;
      continue;
    }
    if (tok == "v") {
      if (vcount) die("duplicate vertex count");
      long long n;
      if (!(ls >> n) || n < 0) die("bad vertex count");
      vcount = static_cast<std::uint32_t>(n);
    } else if (tok == "e") {
      if (!vcount) die("edge before vertex count");
      if (saw_face) die("edge line after face lines");
      long long u, v;
      double len;
      if (!(ls >> u >> v >> len)) die("expected 'e <u> <v> <length>'");
      if (u < 0 || v < 0 || u >= *vcount || v >= *vcount) die("edge endpoint out of range");
      if (!(len > 0.0)) die("edge length must be positive");
      edges.push_back({static_cast<std::uint32_t>(u), static_cast<std::uint32_t>(v), len});
    } else if (tok == "f") {
      if (!vcount) die("face before vertex count");
      saw_face = true;
      std::vector<std::uint32_t> face;
      long long e;
      while (ls >> e) {
        if (e < 0 || static_cast<std::size_t>(e) >= edges.size())
          die("face references edge " + std::to_string(e) + " of " + std::to_string(edges.size()));
        face.push_back(static_cast<std::uint32_t>(e));
      }
      if (!ls.eof()) die("bad token in face line");
      if (face.empty()) die("empty face line");
      faces.push_back(std::move(face));
    } else {
      die("unknown directive '" + tok + "'");
    }
    std::string extra;
    if (tok != "f" && (ls >> extra)) die("trailing tokens");
  }
  if (!saw_header) fail(ErrorCode::parse, "missing 'complex2 v1' header");
  if (!vcount) fail(ErrorCode::parse, "missing 'v <count>' line");
  return build(*vcount, std::move(edges), faces);
}

Complex2 Complex2::read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorCode::io, "cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  try {
    return parse(ss.str());
  } catch (const Error& e) {
    if (e.code() == ErrorCode::parse || e.code() == ErrorCode::argument)
      fail(ErrorCode::parse, path + ": " + e.what());
    throw;
  }
}

std::string Complex2::to_text() const {
  std::ostringstream out;
  out << "complex2 v1\n";
  out << "v " << vertex_count_ << "\n";
  for (const auto& e : edges_) out << "e " << e.u << " " << e.v << " " << fmt_double(e.length) << "\n";
  for (const auto& w : face_walks_) {
    out << "f";
    for (const auto& s : w) out << " " << s.edge;
    out << "\n";
  }
  return out.str();
}

void Complex2::write_file(const std::string& path) const {
  std::ofstream out(path);
  if (!out) fail(ErrorCode::io, "cannot open '" + path + "' for writing");
  out << to_text();
  if (!out) fail(ErrorCode::io, "write failed for '" + path + "'");
}

}  // namespace h1min
