// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure. argv[1] (optional) is the CLI binary used by the determinism
// criterion; without it that criterion falls back to the library path.
#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "bounds.hpp"
#include "experiment.hpp"
#include "homology.hpp"
#include "minrep.hpp"
#include "nerve.hpp"
#include "spaces.hpp"
#include "support/fixtures.hpp"
#include "unfold.hpp"

using namespace h1min;
namespace fs = std::filesystem;

namespace {

int g_failures = 0;

struct Timer {
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  }
};

void report(int id, const std::string& name, bool pass, const std::string& detail) {
  std::printf("[%s] criterion %d: %s (%s)\n", pass ? "PASS" : "FAIL", id, name.c_str(),
              detail.c_str());
  std::fflush(stdout);
  if (!pass) ++g_failures;
}

template <typename Fn>
void criterion(int id, const std::string& name, Fn&& fn) {
  try {
    fn();
  } catch (const std::exception& e) {
    report(id, name, false, std::string("exception: ") + e.what());
  }
}

Complex2 random_instance(std::mt19937_64& rng) {
  testing::RandomComplexOpts opts;
  opts.min_vertices = 4;
  opts.max_vertices = 14;
  opts.max_extra_edges = 10;
  opts.max_faces = 18;  // rank d2 <= faces <= 18
  return testing::random_complex(rng, opts);
}

std::string read_file(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void c1_chain_axioms() {
  Timer timer;
  std::mt19937_64 rng(20240915);
  std::vector<Complex2> fixtures;
  fixtures.push_back(testing::csaszar_torus());
  fixtures.push_back(testing::klein_grid(3, 3));
  fixtures.push_back(gen_surface(0));
  fixtures.push_back(gen_surface(2));
  fixtures.push_back(gen_product_complex(gen_cycle(3), gen_cycle(4)));
  fixtures.push_back(gen_product_complex(gen_wedge(2), gen_cycle(3)));

  std::size_t checked = 0, violations = 0;
  auto check_complex = [&](const Complex2& k) {
    ++checked;
    for (std::uint32_t f = 0; f < k.face_count(); ++f)
      if (k.boundary1(k.face_boundary(f)).bits.any()) ++violations;
    std::vector<std::uint32_t> subset;
    for (std::uint32_t f = 0; f < k.face_count(); ++f)
      if (rng() & 1) subset.push_back(f);
    if (k.boundary1(k.boundary2(subset)).bits.any()) ++violations;
    Betti b = betti(k);
    if (static_cast<std::int64_t>(b.b0) - b.b1 + b.b2 != k.euler_characteristic()) ++violations;
  };
  for (const auto& k : fixtures) check_complex(k);
  while (checked < 220) check_complex(random_instance(rng));

  double secs = timer.seconds();
  report(1, "chain axioms d1(d2) = 0",
         violations == 0 && checked >= 200 && secs < 10.0,
         std::to_string(checked) + " complexes, " + std::to_string(violations) +
             " violations, " + std::to_string(secs) + "s");
}

void c2_homology() {
  std::vector<std::string> bad;
  auto expect = [&](const char* name, const Complex2& k, std::uint32_t b0, std::uint32_t b1,
                    std::uint32_t b2) {
    Betti b = betti(k);
    if (b.b0 != b0 || b.b1 != b1 || b.b2 != b2) bad.push_back(name);
    if (static_cast<std::int64_t>(b.b0) - b.b1 + b.b2 != k.euler_characteristic())
      bad.push_back(std::string(name) + " (euler)");
  };
  expect("7-vertex torus", testing::csaszar_torus(), 1, 2, 1);
  expect("klein bottle", testing::klein_grid(3, 3), 1, 2, 1);
  expect("genus 2", gen_surface(2), 1, 4, 1);
  expect("genus 3", gen_surface(3), 1, 6, 1);
  for (std::uint32_t k = 1; k <= 8; ++k)
    expect(("wedge " + std::to_string(k)).c_str(), gen_wedge(k), 1, k, 0);

  std::string detail = bad.empty() ? "all fixtures exact" : ("failed: " + bad.front());
  report(2, "homology correctness", bad.empty(), detail);
}

void c3_c4_oracle_and_surgery() {
  Timer timer;
  std::mt19937_64 rng(77001);
  int instances = 0;
  int exact_mismatch = 0, descent_below = 0, class_violations = 0;
  int anneal_perfect = 0;
  std::uint64_t accepted_events = 0;

  // Structured fixtures push rank d2 toward the criterion's cap of 18; the
  // random stream fills the rest of the 100 instances.
  std::vector<Complex2> pool;
  pool.push_back(testing::csaszar_torus());                          // rank 13
  pool.push_back(testing::klein_grid(3, 3));                         // rank 17
  pool.push_back(gen_product_complex(gen_cycle(3), gen_cycle(4)));   // rank 11
  pool.push_back(gen_product_complex(gen_cycle(3), gen_cycle(6)));   // rank 17
  pool.push_back(gen_product_complex(gen_cycle(4), gen_cycle(4)));   // rank 15

  std::size_t pool_next = 0;
  std::size_t classes_total = 0, descent_equal = 0;
  while (instances < 100) {
    Complex2 k = pool_next < pool.size() ? std::move(pool[pool_next++]) : random_instance(rng);
    HomologyBasis basis(k);
    if (basis.b1() == 0 || k.boundary_form().rank() > 18) continue;
    ++instances;
    AnnealParams anneal_params;
    anneal_params.seed = 1000 + instances;
    bool anneal_all = true;
    for (const auto& rep : basis.class_reps()) {
      ++classes_total;
      ReducedRep er = exact_min_representative(k, rep);
      double naive = testing::naive_coset_min_length(k, rep);
      if (std::fabs(er.length - naive) > 1e-9) ++exact_mismatch;

      ReducedRep dr = local_search_reduce(k, rep);
      if (dr.length < er.length - 1e-9) ++descent_below;
      if (dr.length <= er.length + 1e-9) ++descent_equal;
      if (!same_class(k, dr.cycle, rep)) ++class_violations;
      accepted_events += dr.accepted_moves;

      ReducedRep ar = anneal_reduce(k, rep, anneal_params);
      if (!same_class(k, ar.cycle, rep)) ++class_violations;
      if (ar.length > er.length + 1e-9) anneal_all = false;
      if (ar.length < er.length - 1e-9) ++descent_below;
      accepted_events += ar.accepted_moves;
    }
    anneal_perfect += anneal_all ? 1 : 0;
  }

  bool pass3 = exact_mismatch == 0 && descent_below == 0 && anneal_perfect >= 90;
  report(3, "exact-oracle agreement",
         pass3,
         std::to_string(instances) + " instances, exact mismatches " +
             std::to_string(exact_mismatch) + ", descent below exact " +
             std::to_string(descent_below) + ", descent equality rate " +
             std::to_string(descent_equal) + "/" + std::to_string(classes_total) +
             ", anneal exact on " + std::to_string(anneal_perfect) + "%, " +
             std::to_string(timer.seconds()) + "s");

  bool pass4 = class_violations == 0 && accepted_events >= 1000;
  report(4, "surgery soundness",
         pass4,
         std::to_string(accepted_events) + " accepted moves, " +
             std::to_string(class_violations) + " class violations");
}

void c5_counting() {
  Timer timer;
  std::vector<std::uint32_t> ns;
  for (std::uint32_t n = 10; n <= 200; n += 10) ns.push_back(n);
  std::vector<double> deltas;
  for (int i = 1; i <= 9; ++i) deltas.push_back(0.05 * i);

  CountingSweep sweep = counting_sweep({2, 3, 5}, ns, deltas);
  bool p2_holds = true;
  for (const auto& rep : sweep.reports)
    if (rep.p == 2 && rep.n >= 50 && !rep.holds) p2_holds = false;

  std::ostringstream n0s;
  for (const auto& t : sweep.thresholds)
    n0s << "n0(p=" << t.p << ",d=" << t.delta << ")="
        << (t.n0 == UINT32_MAX ? std::string("none") : std::to_string(t.n0)) << " ";
  std::printf("  %s\n", n0s.str().c_str());

  double secs = timer.seconds();
  report(5, "counting lemma (exact big-integer sums)", p2_holds && secs < 5.0,
         std::to_string(sweep.reports.size()) + " checks, p=2 holds for n >= 50, " +
             std::to_string(secs) + "s");
}

void c6_dimension_bound() {
  std::mt19937_64 rng(88002);
  int ran = 0, failed = 0;

  Complex2 torus = testing::csaszar_torus();
  HomologyBasis tb(torus);
  DimBoundCheck tc = verify_dimension_bound(torus, tb);
  if (tc.ran) {
    ++ran;
    failed += tc.holds ? 0 : 1;
  }

  // Wedge documentation case: m is the max over all classes (the full-support
  // class), not over basis elements.
  bool wedge_ok = true;
  for (std::uint32_t k = 2; k <= 6; ++k) {
    Complex2 w = gen_wedge(k);
    HomologyBasis wb(w);
    DimBoundCheck wc = verify_dimension_bound(w, wb);
    if (!wc.ran || !wc.holds || wc.m_max != k) wedge_ok = false;
    if (!(dimension_bound(k, 1) < static_cast<double>(k))) wedge_ok = false;
    ++ran;
    failed += wc.holds ? 0 : 1;
  }

  int random_ran = 0;
  std::size_t attempts = 0;
  while (random_ran < 50 && attempts < 4000) {
    ++attempts;
    Complex2 k = random_instance(rng);
    HomologyBasis basis(k);
    DimBoundCheck c = verify_dimension_bound(k, basis, 12, 18);
    if (!c.ran) continue;
    ++random_ran;
    ++ran;
    failed += c.holds ? 0 : 1;
  }

  report(6, "dimension bound",
         failed == 0 && wedge_ok && random_ran >= 50,
         std::to_string(ran) + " instances ran, " + std::to_string(failed) +
             " failures, wedge m=max-over-classes documented");
}

void c7_nerve() {
  struct Fixture {
    std::string name;
    Complex2 k;
    double kappa;
  };
  std::vector<Fixture> fixtures;
  fixtures.push_back({"C12 kappa=2", gen_cycle(12), 2.0});
  fixtures.push_back({"torus C6xC8 kappa=1", gen_product_complex(gen_cycle(6), gen_cycle(8)), 1.0});
  fixtures.push_back({"genus-2 kappa=1", gen_surface(2), 1.0});

  bool all_surjective = true, all_sound = true, all_bounded = true;
  std::string detail;
  for (auto& f : fixtures) {
    NerveData nd = build_nerve(f.k, f.kappa);
    HomologyBasis src(f.k);
    HomologyBasis nrv(nd.nerve);
    InducedMap m = induced_h1_map(nd, src, nrv);
    if (!m.surjective) all_surjective = false;

    for (const auto& rep : src.class_reps()) {
      Chain1 approx = approximate_class(nd, rep);
      Chain1 pushed = push_cycle(nd, approx);
      if (!same_class(f.k, pushed, rep)) all_sound = false;
      if (f.k.chain_length(pushed) > 2.0 * f.kappa * approx.support_size() + 1e-9)
        all_bounded = false;
    }
    for (const auto& rep : nrv.class_reps()) {
      Chain1 pushed = push_cycle(nd, rep);
      if (f.k.chain_length(pushed) > 2.0 * f.kappa * rep.support_size() + 1e-9)
        all_bounded = false;
    }
    detail += f.name + " rank=" + std::to_string(m.rank) + "/" + std::to_string(src.b1()) + " ";
  }
  report(7, "nerve transfer", all_surjective && all_sound && all_bounded, detail);
}

void c8_c9_towers() {
  Timer timer;
  TowerSpec product = make_product_cycle_tower(3, 4, 6);
  TowerParams params;
  params.seed = 7;
  auto records = run_tower_experiment(product, {1.0, 2.0, 4.0, 8.0}, params);

  TowerSpec wedge = make_wedge_tower(2, 6);
  auto wrecords = run_tower_experiment(wedge, {2.0}, params);
  double secs = timer.seconds();

  // Product tower: b1/vol strictly decreasing and exactly 2/(12k^2).
  bool product_ok = true;
  std::vector<double> per_level;
  for (const auto& r : records) {
    if (!r.error.empty()) product_ok = false;
    if (r.R == 2.0) per_level.push_back(r.b1_over_vol);
  }
  if (per_level.size() != 6) product_ok = false;
  for (std::size_t k = 1; k <= per_level.size(); ++k) {
    double expected = 2.0 / (12.0 * static_cast<double>(k) * static_cast<double>(k));
    if (per_level[k - 1] != expected) product_ok = false;
    if (k > 1 && !(per_level[k - 1] < per_level[k - 2])) product_ok = false;
  }

  // Wedge tower: no decay, the ratio stays above 1/2.
  bool wedge_ok = wrecords.size() == 6;
  for (const auto& r : wrecords) {
    if (!r.error.empty()) wedge_ok = false;
    if (!(r.b1_over_vol >= 0.5)) wedge_ok = false;
  }

  report(8, "tower decay vs no-decay", product_ok && wedge_ok && secs < 60.0,
         "product 2/(12k^2) exact, wedge floor 1/2, " + std::to_string(secs) + "s");

  // Criterion 9: the largest level with thin_fraction = 0 across the sweep.
  std::string best_level;
  double best_volume = -1.0;
  for (const auto& r : records) {
    if (r.error.empty() && r.thin_fraction == 0.0 && r.volume > best_volume) {
      bool all_thick = true;
      for (const auto& q : records)
        if (q.level == r.level && q.thin_fraction != 0.0) all_thick = false;
      if (all_thick) {
        best_volume = r.volume;
        best_level = r.level;
      }
    }
  }
  bool monotone = !best_level.empty();
  std::vector<std::pair<double, double>> points;  // (R, value)
  if (monotone) {
    std::vector<const ExperimentRecord*> rows;
    for (const auto& r : records)
      if (r.level == best_level) rows.push_back(&r);
    std::sort(rows.begin(), rows.end(),
              [](const ExperimentRecord* a, const ExperimentRecord* b) { return a->R < b->R; });
    for (std::size_t i = 1; i < rows.size(); ++i)
      if (rows[i]->rlength_norm > rows[i - 1]->rlength_norm + 1e-12) monotone = false;
    for (const auto* r : rows)
      if (r->rlength_norm > 0.0) points.push_back({std::log(r->R), std::log(r->rlength_norm)});
  }
  double slope = 0.0;
  if (points.size() >= 2) {
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (auto [x, y] : points) {
      sx += x;
      sy += y;
      sxx += x * x;
      sxy += x * y;
    }
    double n = static_cast<double>(points.size());
    slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
  }
  report(9, "R-length scaling", monotone,
         "level " + best_level + " non-increasing across R, empirical log-log slope " +
             std::to_string(slope));
}

void c10_determinism(const char* cli_path) {
  fs::path dir = fs::temp_directory_path() / "h1min_acceptance";
  fs::remove_all(dir);
  fs::create_directories(dir);

  TowerSpec tower = make_product_cycle_tower(3, 4, 3);
  tower.base.write_file((dir / "base.cpx").string());
  tower.base_ref = "base.cpx";
  write_tower_file(tower, (dir / "t.twr").string());

  bool pass = false;
  std::string detail;
  if (cli_path) {
    auto run = [&](const std::string& out) {
      std::string cmd = std::string("\"") + cli_path + "\" tower \"" + (dir / "t.twr").string() +
                        "\" --R 1,2 --seed 42 --out \"" + (dir / out).string() +
                        "\" > /dev/null 2>&1";
      return std::system(cmd.c_str());
    };
    int rc1 = run("a"), rc2 = run("b");
    bool csv_same = read_file(dir / "a" / "tower.csv") == read_file(dir / "b" / "tower.csv");
    bool json_same = read_file(dir / "a" / "tower.json") == read_file(dir / "b" / "tower.json");
    bool nonempty = !read_file(dir / "a" / "tower.csv").empty();
    pass = rc1 == 0 && rc2 == 0 && csv_same && json_same && nonempty;
    detail = std::string("cli runs rc=") + std::to_string(rc1) + "," + std::to_string(rc2) +
             ", csv " + (csv_same ? "identical" : "differ") + ", json " +
             (json_same ? "identical" : "differ");
  } else {
    TowerParams params;
    params.seed = 42;
    auto r1 = run_tower_experiment(tower, {1.0, 2.0}, params);
    auto r2 = run_tower_experiment(tower, {1.0, 2.0}, params);
    pass = records_to_csv(r1, false) == records_to_csv(r2, false) &&
           records_to_json(r1, false) == records_to_json(r2, false);
    detail = "library fallback (no CLI path given)";
  }
  report(10, "seeded determinism", pass, detail);
}

}  // namespace

int main(int argc, char** argv) {
  const char* cli = argc > 1 ? argv[1] : nullptr;
  criterion(1, "chain axioms d1(d2) = 0", c1_chain_axioms);
  criterion(2, "homology correctness", c2_homology);
  criterion(3, "exact-oracle agreement", c3_c4_oracle_and_surgery);
  criterion(5, "counting lemma", c5_counting);
  criterion(6, "dimension bound", c6_dimension_bound);
  criterion(7, "nerve transfer", c7_nerve);
  criterion(8, "tower decay", c8_c9_towers);
  criterion(10, "seeded determinism", [&] { c10_determinism(cli); });

  if (g_failures) {
    std::printf("%d criterion(s) failed\n", g_failures);
    return 1;
  }
  std::printf("all criteria passed\n");
  return 0;
}
