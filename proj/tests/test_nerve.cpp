#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>
#include <random>

#include "homology.hpp"
#include "minrep.hpp"
#include "nerve.hpp"
#include "spaces.hpp"
#include "support/fixtures.hpp"

using namespace h1min;

namespace {

// Independent greedy net oracle on all-pairs distances (Floyd-Warshall).
std::vector<std::uint32_t> net_oracle(const Complex2& k, double kappa) {
  const std::uint32_t V = k.vertex_count();
  std::vector<std::vector<double>> d(V, std::vector<double>(V, 1e18));
  for (std::uint32_t v = 0; v < V; ++v) d[v][v] = 0.0;
  for (std::uint32_t e = 0; e < k.edge_count(); ++e) {
    const Edge& ed = k.edge(e);
    d[ed.u][ed.v] = std::min(d[ed.u][ed.v], ed.length);
    d[ed.v][ed.u] = d[ed.u][ed.v];
  }
  for (std::uint32_t m = 0; m < V; ++m)
    for (std::uint32_t i = 0; i < V; ++i)
      for (std::uint32_t j = 0; j < V; ++j)
        d[i][j] = std::min(d[i][j], d[i][m] + d[m][j]);
  std::vector<std::uint32_t> net;
  for (std::uint32_t v = 0; v < V; ++v) {
    bool ok = true;
    for (auto c : net)
      if (d[c][v] < kappa / 2.0) ok = false;
    if (ok) net.push_back(v);
  }
  return net;
}

}  // namespace

TEST_CASE("net construction") {
  Complex2 c12 = gen_cycle(12);

  // kappa/2 below the minimum edge length selects everything.
  CHECK(build_net(c12, 1.5).size() == 12);

  // kappa/2 beyond the diameter selects a single center.
  CHECK(build_net(c12, 13.0).size() == 1);

  auto net = build_net(c12, 2.0);
  CHECK(net == net_oracle(c12, 2.0));

  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 15; ++trial) {
    Complex2 k = testing::random_complex(rng);
    CHECK(build_net(k, 2.0) == net_oracle(k, 2.0));
  }
}

TEST_CASE("single ball cover") {
  Complex2 c12 = gen_cycle(12);
  NerveData nd = build_nerve(c12, 13.0);
  CHECK(nd.net.size() == 1);
  CHECK(nd.nerve.vertex_count() == 1);
  CHECK(betti(nd.nerve).b1 == 0);
}

TEST_CASE("nerve of a circle is a circle") {
  Complex2 c12 = gen_cycle(12);
  NerveData nd = build_nerve(c12, 2.0);
  CHECK(nd.net.size() == 12);
  Betti nb = betti(nd.nerve);
  CHECK(nb.b0 == 1);
  CHECK(nb.b1 == 1);
  CHECK(!nd.warned_kappa);  // systole 12 is far above 2*kappa = 4

  // Invariants: covers have radius kappa, tau paths stay short.
  for (std::size_t c = 0; c < nd.net.size(); ++c) {
    auto dist = c12.shortest_distances(nd.net[c]);
    for (auto v : nd.cover[c]) CHECK(dist[v] <= 2.0 + 1e-12);
  }
  for (const auto& tau : nd.tau_chains) CHECK(c12.chain_length(tau) <= 2 * 2.0 + 1e-9);
}

TEST_CASE("push cycle") {
  Complex2 c12 = gen_cycle(12);
  NerveData nd = build_nerve(c12, 2.0);
  HomologyBasis nerve_basis(nd.nerve);
  REQUIRE(nerve_basis.b1() == 1);

  Chain1 empty = nd.nerve.empty_chain1();
  CHECK(push_cycle(nd, empty).bits.none());

  Chain1 gen = nerve_basis.class_reps()[0];
  Chain1 pushed = push_cycle(nd, gen);
  CHECK(c12.is_cycle(pushed));
  CHECK(c12.chain_length(pushed) <= 2.0 * 2.0 * gen.support_size() + 1e-9);

  // The push lands in the nontrivial class of the circle.
  HomologyBasis src_basis(c12);
  CHECK(same_class(c12, pushed, src_basis.class_reps()[0]));

  CHECK_THROWS_AS(push_cycle(nd, nd.nerve.chain_from_edges({0})), Error);
}

TEST_CASE("push is linear") {
  Complex2 t66 = gen_product_complex(gen_cycle(6), gen_cycle(6));
  NerveData nd = build_nerve(t66, 1.0);
  HomologyBasis nb(nd.nerve);
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 10; ++trial) {
    Chain1 a = nd.nerve.empty_chain1(), b = nd.nerve.empty_chain1();
    for (const auto& z : nb.cycle_basis()) {
      if (rng() & 1) a ^= z;
      if (rng() & 1) b ^= z;
    }
    Chain1 sum = a;
    sum ^= b;
    Chain1 pushed_sum = push_cycle(nd, sum);
    Chain1 expect = push_cycle(nd, a);
    expect ^= push_cycle(nd, b);
    CHECK(pushed_sum == expect);
  }
}

TEST_CASE("induced map surjective on fixtures") {
  // Contractible-ish source: genus 0, b1 = 0, vacuously surjective.
  Complex2 sphere = gen_surface(0);
  NerveData snd = build_nerve(sphere, 1.0);
  InducedMap sm = induced_h1_map(snd);
  CHECK(sm.surjective);

  Complex2 c12 = gen_cycle(12);
  InducedMap cm = induced_h1_map(build_nerve(c12, 2.0));
  CHECK(cm.rank == 1);
  CHECK(cm.surjective);

  Complex2 t66 = gen_product_complex(gen_cycle(6), gen_cycle(6));
  InducedMap tm = induced_h1_map(build_nerve(t66, 1.0));
  CHECK(tm.rank == 2);
  CHECK(tm.surjective);

  // A genuine torus triangulation: the subdivided 7-vertex torus.
  Complex2 tri = subdivide(testing::csaszar_torus());
  InducedMap trm = induced_h1_map(build_nerve(tri, 1.0));
  CHECK(trm.rank == 2);
  CHECK(trm.surjective);

  Complex2 genus2 = gen_surface(2);
  InducedMap gm = induced_h1_map(build_nerve(genus2, 1.0));
  CHECK(gm.rank == 4);
  CHECK(gm.surjective);
}

TEST_CASE("approximate class round trips through the nerve") {
  Complex2 c12 = gen_cycle(12);
  NerveData nd = build_nerve(c12, 2.0);
  HomologyBasis src(c12);
  Chain1 gen = src.class_reps()[0];
  Chain1 snapped = approximate_class(nd, gen);
  CHECK(nd.nerve.is_cycle(snapped));
  Chain1 back = push_cycle(nd, snapped);
  CHECK(same_class(c12, back, gen));

  // Torus basis classes round trip too.
  Complex2 t66 = gen_product_complex(gen_cycle(6), gen_cycle(6));
  NerveData tnd = build_nerve(t66, 1.0);
  HomologyBasis tb(t66);
  for (const auto& rep : tb.class_reps()) {
    Chain1 approx = approximate_class(tnd, rep);
    CHECK(same_class(t66, push_cycle(tnd, approx), rep));
  }

  // A face boundary sits inside one ball: its snap is null-homologous.
  Chain1 small = t66.face_boundary(0);
  Chain1 approx_small = approximate_class(tnd, small);
  Chain1 pushed_small = push_cycle(tnd, approx_small);
  CHECK(same_class(t66, pushed_small, t66.empty_chain1()));

  // Report-only: nerve representative size scales linearly with the source
  // length (the fitted constant per class stays bounded).
  double worst_ratio = 0.0;
  for (const auto& rep : tb.class_reps()) {
    ReducedRep dr = local_search_reduce(t66, rep);
    Chain1 approx = approximate_class(tnd, dr.cycle);
    if (dr.length > 0)
      worst_ratio = std::max(worst_ratio, approx.support_size() / dr.length);
  }
  CHECK(worst_ratio > 0.0);
  MESSAGE("nerve edges per unit of source length, fitted C = ", worst_ratio);
}

TEST_CASE("uncovered edges are reported") {
  Complex2 sparse = gen_cycle(6, 3.0);  // every edge longer than the balls
  NerveData nd = build_nerve(sparse, 1.0);
  HomologyBasis basis(sparse);
  CHECK_THROWS_AS(approximate_class(nd, basis.class_reps()[0]), Error);
  try {
    approximate_class(nd, basis.class_reps()[0]);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::uncovered);
  }
}

TEST_CASE("kappa guard warns near the systole") {
  Complex2 c12 = gen_cycle(12);
  CHECK(!build_nerve(c12, 2.0).warned_kappa);
  CHECK(build_nerve(c12, 3.0).warned_kappa);  // 4*kappa reaches the systole
  CHECK(build_nerve(c12, 6.0).warned_kappa);

  // Balls fill short loops: C3 x C4 at kappa = 1 loses both classes, and the
  // guard says so up front.
  Complex2 t34 = gen_product_complex(gen_cycle(3), gen_cycle(4));
  NerveData nd = build_nerve(t34, 1.0);
  CHECK(nd.warned_kappa);
  CHECK(!induced_h1_map(nd).surjective);
}

TEST_CASE("unwarned nerves are surjective") {
  std::vector<std::pair<Complex2, double>> instances;
  for (std::uint32_t n = 5; n <= 14; ++n) instances.push_back({gen_cycle(n), 1.0});
  instances.push_back({gen_cycle(12), 2.0});
  instances.push_back({gen_product_complex(gen_cycle(5), gen_cycle(5)), 1.0});
  instances.push_back({gen_product_complex(gen_cycle(6), gen_cycle(8)), 1.0});
  instances.push_back({gen_surface(2), 1.0});
  int surjective_checked = 0;
  for (auto& [k, kappa] : instances) {
    NerveData nd = build_nerve(k, kappa);
    if (nd.warned_kappa) continue;
    CHECK(induced_h1_map(nd).surjective);
    ++surjective_checked;
  }
  CHECK(surjective_checked >= 10);
}

TEST_CASE("nerve serialization files") {
  namespace fs = std::filesystem;
  fs::path dir = fs::temp_directory_path() / "h1min_nerve_test";
  fs::remove_all(dir);
  Complex2 c12 = gen_cycle(12);
  NerveData nd = build_nerve(c12, 2.0);
  write_nerve_files(nd, dir.string());
  CHECK(fs::exists(dir / "nerve_complex.cpx"));
  CHECK(fs::exists(dir / "net.txt"));
  CHECK(fs::exists(dir / "cover.txt"));
  CHECK(fs::exists(dir / "tau.txt"));
  Complex2 back = Complex2::read_file((dir / "nerve_complex.cpx").string());
  CHECK(back.vertex_count() == nd.nerve.vertex_count());
  CHECK(back.edge_count() == nd.nerve.edge_count());
}
