#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <random>

#include "homology.hpp"
#include "minrep.hpp"
#include "spaces.hpp"
#include "support/fixtures.hpp"
#include "unfold.hpp"

using namespace h1min;
using h1min::testing::csaszar_torus;
using h1min::testing::naive_coset_min_length;
using h1min::testing::random_complex;

namespace {

// Random instances kept inside the exact-search comfort zone.
Complex2 small_instance(std::mt19937_64& rng) {
  testing::RandomComplexOpts opts;
  opts.min_vertices = 4;
  opts.max_vertices = 10;
  opts.max_extra_edges = 7;
  opts.max_faces = 9;
  return random_complex(rng, opts);
}

}  // namespace

TEST_CASE("r_length basics") {
  Complex2 c8 = gen_cycle(8);
  Chain1 full = c8.chain_from_edges({0, 1, 2, 3, 4, 5, 6, 7});

  MetricProfile all_thick = injectivity_profile(c8, 10.0, 0.0);
  CHECK(r_length(c8, full, all_thick) == doctest::Approx(c8.chain_length(full)));

  MetricProfile none_thick = injectivity_profile(c8, 10.0, 5.0);
  CHECK(r_length(c8, full, none_thick) == doctest::Approx(0.0));

  MetricProfile r3 = injectivity_profile(c8, 10.0, 3.0);  // injrad 4 everywhere
  CHECK(r_length(c8, full, r3) == doctest::Approx(8.0));

  // Monotone in R, bounded by the plain length.
  for (double R : {0.0, 1.0, 2.0, 3.9, 4.0}) {
    MetricProfile p = injectivity_profile(c8, 10.0, R);
    CHECK(r_length(c8, full, p) <= c8.chain_length(full) + 1e-12);
  }
}

TEST_CASE("exact minimum on easy instances") {
  // Trivial class collapses to the empty chain.
  Complex2 torus = csaszar_torus();
  Chain1 bd = torus.boundary2({0, 3, 7});
  ReducedRep rep = exact_min_representative(torus, bd);
  CHECK(rep.length == doctest::Approx(0.0));
  CHECK(rep.cycle.support_size() == 0);
  CHECK(rep.certificate);

  // No faces: the coset is a singleton.
  Complex2 c5 = gen_cycle(5);
  Chain1 all5 = c5.chain_from_edges({0, 1, 2, 3, 4});
  CHECK(exact_min_representative(c5, all5).length == doctest::Approx(5.0));

  // Torus classes agree with the brute-force enumeration.
  HomologyBasis basis(torus);
  for (const auto& repc : basis.class_reps()) {
    double exact = exact_min_representative(torus, repc).length;
    CHECK(exact == doctest::Approx(naive_coset_min_length(torus, repc)));
  }
}

TEST_CASE("exact minimum matches brute force on random instances") {
  std::mt19937_64 rng(101);
  int tested = 0;
  for (int trial = 0; trial < 40; ++trial) {
    Complex2 k = small_instance(rng);
    HomologyBasis basis(k);
    if (basis.b1() == 0) continue;
    for (const auto& rep : basis.class_reps()) {
      ReducedRep er = exact_min_representative(k, rep);
      CHECK(er.length == doctest::Approx(naive_coset_min_length(k, rep)).epsilon(1e-9));
      CHECK(same_class(k, er.cycle, rep));
      CHECK(local_minimality_check(k, er.cycle));
      ++tested;
    }
  }
  CHECK(tested > 30);
}

TEST_CASE("exact cap") {
  Complex2 big = gen_product_complex(gen_cycle(4), gen_cycle(6));  // rank d2 = 23
  HomologyBasis basis(big);
  CHECK_THROWS_AS(exact_min_representative(big, basis.class_reps()[0], 10), Error);
  try {
    exact_min_representative(big, basis.class_reps()[0], 10);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::cap_exceeded);
  }
}

TEST_CASE("exact tie break is the lexicographically smallest support") {
  // Wedge of two unit loops glued along a bigon: both loops are homologous
  // with equal length, the smaller edge index wins.
  Complex2 theta = Complex2::build_with_walks(1, {{0, 0, 1.0}, {0, 0, 1.0}},
                                              {{{0, false}, {1, true}}});
  Chain1 loop1 = theta.chain_from_edges({1});
  ReducedRep min1 = exact_min_representative(theta, loop1);
  CHECK(min1.length == doctest::Approx(1.0));
  CHECK(min1.cycle.edges() == std::vector<std::uint32_t>{0});
}

TEST_CASE("descent reduces and certifies") {
  Complex2 torus = csaszar_torus();
  HomologyBasis basis(torus);

  // A fixpoint input comes back unchanged.
  ReducedRep minimal = exact_min_representative(torus, basis.class_reps()[0]);
  ReducedRep again = local_search_reduce(torus, minimal.cycle);
  CHECK(again.cycle == minimal.cycle);
  CHECK(again.certificate);
  CHECK(again.accepted_moves == 0);

  // Spoiled input: minimal plus one face boundary that lengthens it.
  Chain1 spoiled = minimal.cycle;
  std::uint32_t spoiler = UINT32_MAX;
  for (std::uint32_t f = 0; f < torus.face_count(); ++f) {
    Chain1 cand = spoiled;
    cand ^= torus.face_boundary(f);
    if (torus.chain_length(cand) > minimal.length + 0.5) {
      spoiler = f;
      break;
    }
  }
  REQUIRE(spoiler != UINT32_MAX);
  spoiled ^= torus.face_boundary(spoiler);
  ReducedRep healed = local_search_reduce(torus, spoiled);
  CHECK(healed.length == doctest::Approx(minimal.length));
  CHECK(healed.certificate);
  CHECK(same_class(torus, healed.cycle, minimal.cycle));
}

TEST_CASE("descent dominates exact and stays in class") {
  std::mt19937_64 rng(211);
  int instances = 0;
  std::uint64_t accepted = 0;
  while (instances < 100) {
    Complex2 k = small_instance(rng);
    HomologyBasis basis(k);
    if (basis.b1() == 0) continue;
    ++instances;
    for (const auto& rep : basis.class_reps()) {
      ReducedRep er = exact_min_representative(k, rep);
      ReducedRep dr = local_search_reduce(k, rep);
      CHECK(dr.length >= er.length - 1e-9);
      CHECK(dr.length <= k.chain_length(rep) + 1e-9);
      CHECK(same_class(k, dr.cycle, rep));
      CHECK(local_minimality_check(k, dr.cycle));
      CHECK(dr.certificate);
      accepted += dr.accepted_moves;
    }
  }
  CHECK(accepted > 0);
}

TEST_CASE("descent tie rules") {
  // Four parallel edges; two bigons make two equally improving moves from
  // {e0, e3}. Face order and lexicographic support disagree on the winner.
  Complex2 quad = Complex2::build_with_walks(
      2, {{0, 1, 3.0}, {0, 1, 1.0}, {0, 1, 1.0}, {0, 1, 3.0}},
      {{{0, false}, {2, true}}, {{0, false}, {1, true}}});
  Chain1 start = quad.chain_from_edges({0, 3});
  REQUIRE(quad.is_cycle(start));

  DescentParams by_face;  // default: first face among the steepest
  ReducedRep a = local_search_reduce(quad, start, by_face);
  CHECK(a.cycle.edges() == std::vector<std::uint32_t>{2, 3});

  DescentParams by_lex;
  by_lex.tie_rule = TieRule::lex_support;
  ReducedRep b = local_search_reduce(quad, start, by_lex);
  CHECK(b.cycle.edges() == std::vector<std::uint32_t>{1, 3});

  CHECK(a.length == doctest::Approx(b.length));
  CHECK(a.certificate);
  CHECK(b.certificate);
}

TEST_CASE("annealed normalized sweep dominates the exact one") {
  Complex2 kb = testing::klein_grid(4, 5);  // rank d2 = 19
  HomologyBasis basis(kb);
  MetricProfile profile = injectivity_profile(kb, 9.0, 1.7);

  RLengthParams exact_params;
  exact_params.exact_cap = 22;
  auto exact = normalized_r_length(kb, basis, profile, exact_params);
  CHECK(exact.exact);

  RLengthParams annealed_params;
  annealed_params.exact_cap = 4;  // force the annealed path
  annealed_params.seed = 31;
  auto annealed = normalized_r_length(kb, basis, profile, annealed_params);
  CHECK(!annealed.exact);
  CHECK(annealed.value >= exact.value - 1e-9);
  MESSAGE("exact ", exact.value, " vs annealed ", annealed.value);
}

TEST_CASE("anneal with a zero-temperature schedule is plain descent") {
  Complex2 torus = csaszar_torus();
  HomologyBasis basis(torus);
  Chain1 start = basis.class_reps()[0];
  start ^= torus.face_boundary(2);
  start ^= torus.face_boundary(9);

  AnnealParams zero;
  zero.t0 = 0.0;
  zero.seed = 99;
  ReducedRep a = anneal_reduce(torus, start, zero);
  ReducedRep d = local_search_reduce(torus, start);
  CHECK(a.cycle == d.cycle);
  CHECK(a.length == doctest::Approx(d.length));
  CHECK(a.method == MinMethod::anneal);
}

TEST_CASE("anneal is deterministic and sound") {
  std::mt19937_64 rng(307);
  Complex2 k = small_instance(rng);
  HomologyBasis basis(k);
  while (basis.b1() == 0) {
    k = small_instance(rng);
    basis = HomologyBasis(k);
  }
  AnnealParams params;
  params.seed = 12345;
  const Chain1& rep = basis.class_reps()[0];
  ReducedRep a1 = anneal_reduce(k, rep, params);
  ReducedRep a2 = anneal_reduce(k, rep, params);
  CHECK(a1.cycle == a2.cycle);
  CHECK(a1.length == a2.length);
  CHECK(same_class(k, a1.cycle, rep));
  CHECK(a1.certificate);  // descent polish runs to a fixpoint

  ReducedRep er = exact_min_representative(k, rep);
  CHECK(a1.length >= er.length - 1e-9);
}

TEST_CASE("anneal usually matches exact on small instances") {
  std::mt19937_64 rng(401);
  int instances = 0, matched = 0;
  while (instances < 40) {
    Complex2 k = small_instance(rng);
    HomologyBasis basis(k);
    if (basis.b1() == 0) continue;
    ++instances;
    AnnealParams params;
    params.seed = 7 * instances;
    bool all = true;
    for (const auto& rep : basis.class_reps()) {
      double exact = exact_min_representative(k, rep).length;
      double got = anneal_reduce(k, rep, params).length;
      if (got > exact + 1e-9) all = false;
    }
    matched += all ? 1 : 0;
  }
  CHECK(matched >= 36);  // 90%
}

TEST_CASE("circuit decomposition") {
  Complex2 tri = Complex2::build(3, {{0, 1, 1.0}, {1, 2, 1.0}, {0, 2, 1.0}}, {});
  auto circuits = circuit_decompose(tri, tri.chain_from_edges({0, 1, 2}));
  REQUIRE(circuits.size() == 1);
  CHECK(circuits[0].size() == 3);

  // Two vertex-disjoint triangles.
  Complex2 two = Complex2::build(
      6, {{0, 1, 1.0}, {1, 2, 1.0}, {0, 2, 1.0}, {3, 4, 1.0}, {4, 5, 1.0}, {3, 5, 1.0}}, {});
  CHECK(circuit_decompose(two, two.chain_from_edges({0, 1, 2, 3, 4, 5})).size() == 2);

  // Figure eight: two loops at one vertex.
  Complex2 eight = gen_wedge(2);
  CHECK(circuit_decompose(eight, eight.chain_from_edges({0, 1})).size() == 2);

  CHECK_THROWS_AS(circuit_decompose(tri, tri.chain_from_edges({0})), Error);
}

TEST_CASE("circuits partition the support into closed walks") {
  std::mt19937_64 rng(503);
  for (int trial = 0; trial < 40; ++trial) {
    Complex2 k = small_instance(rng);
    HomologyBasis basis(k);
    if (basis.cycle_basis().empty()) continue;
    Chain1 c = k.empty_chain1();
    for (const auto& z : basis.cycle_basis())
      if (rng() & 1) c ^= z;
    if (c.bits.none()) continue;

    auto circuits = circuit_decompose(k, c);
    std::map<std::uint32_t, int> seen;
    for (const auto& walk : circuits) {
      // Each circuit is a closed walk in the 1-skeleton.
      CHECK(resolve_face_walk(k.edges(), walk).has_value());
      for (auto e : walk) seen[e]++;
    }
    CHECK(seen.size() == c.support_size());
    for (auto [e, count] : seen) {
      CHECK(count == 1);
      CHECK(c.bits.get(e));
    }
  }
}

TEST_CASE("local minimality check") {
  Complex2 torus = csaszar_torus();
  HomologyBasis basis(torus);
  ReducedRep minimal = exact_min_representative(torus, basis.class_reps()[0]);
  CHECK(local_minimality_check(torus, minimal.cycle));

  // A lengthening face flip is not locally minimal.
  Chain1 bad = minimal.cycle;
  for (std::uint32_t f = 0; f < torus.face_count(); ++f) {
    Chain1 cand = bad;
    cand ^= torus.face_boundary(f);
    if (torus.chain_length(cand) > minimal.length + 0.5) {
      bad = cand;
      break;
    }
  }
  CHECK(!local_minimality_check(torus, bad));

  // Face-free graphs have no moves at all.
  Complex2 c5 = gen_cycle(5);
  CHECK(local_minimality_check(c5, c5.chain_from_edges({0, 1, 2, 3, 4})));
}

TEST_CASE("scaling covariance") {
  std::mt19937_64 rng(601);
  for (int trial = 0; trial < 10; ++trial) {
    Complex2 k = small_instance(rng);
    HomologyBasis basis(k);
    if (basis.b1() == 0) continue;

    const double lambda = 3.25;
    std::vector<Edge> scaled_edges;
    for (std::uint32_t e = 0; e < k.edge_count(); ++e) {
      Edge ed = k.edge(e);
      ed.length *= lambda;
      scaled_edges.push_back(ed);
    }
    std::vector<std::vector<WalkStep>> walks;
    for (std::uint32_t f = 0; f < k.face_count(); ++f) walks.push_back(k.face_walk(f));
    Complex2 scaled = Complex2::build_with_walks(k.vertex_count(), scaled_edges, walks);

    for (const auto& rep : basis.class_reps()) {
      ReducedRep a = exact_min_representative(k, rep);
      ReducedRep b = exact_min_representative(scaled, Chain1{rep.bits});
      CHECK(b.length == doctest::Approx(lambda * a.length).epsilon(1e-9));
      CHECK(b.cycle == a.cycle);  // same argmin under uniform scaling
    }
  }
}

TEST_CASE("normalized r-length") {
  // b1 = 0: empty sup convention.
  Complex2 sphere = gen_surface(0);
  HomologyBasis sb(sphere);
  MetricProfile sp = injectivity_profile(sphere, 3.0, 1.0);
  auto zero = normalized_r_length(sphere, sb, sp);
  CHECK(zero.value == doctest::Approx(0.0));
  CHECK(zero.exact);

  // C6 with R = 0: one class of length 6 over volume 6.
  Complex2 c6 = gen_cycle(6);
  HomologyBasis cb(c6);
  MetricProfile cp = injectivity_profile(c6, 8.0, 0.0);
  auto one = normalized_r_length(c6, cb, cp);
  CHECK(one.value == doctest::Approx(1.0));
  CHECK(one.exact);

  // C3 x C4 at R = 1: classes have minimal lengths 3, 4 and 7.
  Complex2 t34 = gen_product_complex(gen_cycle(3), gen_cycle(4));
  HomologyBasis tb(t34);
  MetricProfile tp = injectivity_profile(t34, 5.0, 1.0);
  auto val = normalized_r_length(t34, tb, tp);
  CHECK(val.value == doctest::Approx(7.0 / 12.0));
  CHECK(val.exact);

  // Fully thin: value 0.
  MetricProfile thin = reprofile(tp, 2.0);
  auto v0 = normalized_r_length(t34, tb, thin);
  CHECK(v0.value == doctest::Approx(0.0));
}

TEST_CASE("normalized r-length matches brute force on a mixed profile") {
  // Klein grid: injrad alternates 1.5 / 2.0 by column, so R = 1.7 leaves a
  // genuinely mixed thick/thin decomposition.
  Complex2 kb = testing::klein_grid(4, 3);
  HomologyBasis basis(kb);
  REQUIRE(basis.b1() == 2);
  MetricProfile profile = injectivity_profile(kb, 8.0, 1.7);
  std::size_t thick = profile.thick_count();
  CHECK(thick > 0);
  CHECK(thick < kb.vertex_count());

  // Independent enumeration: for each nonzero class, scan the whole coset
  // rebuilt from scratch and take the minimal r-length.
  auto pivots = kb.boundary_form().pivot_faces;
  double sup = 0.0;
  for (std::uint64_t cls = 1; cls < 4; ++cls) {
    BitVec coords(2);
    if (cls & 1) coords.set(0, true);
    if (cls & 2) coords.set(1, true);
    Chain1 base = basis.chain_from_coordinates(coords);
    double best = r_length(kb, base, profile);
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << pivots.size()); ++mask) {
      Chain1 cand = base;
      for (std::size_t i = 0; i < pivots.size(); ++i)
        if ((mask >> i) & 1) cand ^= kb.face_boundary(pivots[i]);
      best = std::min(best, r_length(kb, cand, profile));
    }
    sup = std::max(sup, best);
  }

  auto got = normalized_r_length(kb, basis, profile);
  CHECK(got.exact);
  CHECK(got.value == doctest::Approx(sup / kb.volume()));
}

TEST_CASE("normalized r-length sweep is non-increasing in R") {
  Complex2 t34 = gen_product_complex(gen_cycle(3), gen_cycle(4));
  HomologyBasis tb(t34);
  MetricProfile base = injectivity_profile(t34, 9.0, 0.0);
  std::vector<MetricProfile> profiles;
  for (double R : {0.0, 1.0, 1.4, 2.0, 4.0}) profiles.push_back(reprofile(base, R));
  auto vals = normalized_r_length_sweep(t34, tb, profiles);
  REQUIRE(vals.size() == 5);
  for (std::size_t i = 1; i < vals.size(); ++i) CHECK(vals[i].value <= vals[i - 1].value + 1e-12);
  CHECK(vals[0].value == doctest::Approx(7.0 / 12.0));
  CHECK(vals.back().value == doctest::Approx(0.0));

  // Sampled path on a wedge tower level: basis classes only, exact = false.
  TowerSpec wt = make_wedge_tower(2, 4);
  Cover big = gen_cover(wt.base, wt.levels[3].cover);  // degree 8, b1 = 9
  HomologyBasis wb(big.complex);
  MetricProfile wp = injectivity_profile(big.complex, 3.0, 0.25);
  RLengthParams params;
  params.budget = 16;  // 2^9 exceeds it: sampling kicks in
  auto wv = normalized_r_length(big.complex, wb, wp, params);
  CHECK(!wv.exact);
  CHECK(wv.value > 0.0);
}

TEST_CASE("rep serialization format") {
  Complex2 c5 = gen_cycle(5);
  Chain1 all5 = c5.chain_from_edges({0, 1, 2, 3, 4});
  ReducedRep rep = exact_min_representative(c5, all5);
  CHECK(rep.format(c5) == "rep exact 5 5 : chain 0 1 2 3 4");
}
