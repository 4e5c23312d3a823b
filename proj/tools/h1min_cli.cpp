// Command-line front end for the h1min shared library. Talks to the C API
// only, so it doubles as a smoke test of the installed surface.
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <memory>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "h1min/h1min.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitValidation = 1;
constexpr int kExitCapExceeded = 2;

[[noreturn]] void die(h1m_status s) {
  std::fprintf(stderr, "error (%s): %s\n", h1m_status_name(s), h1m_last_error());
  std::exit(s == H1M_ERR_CAP_EXCEEDED ? kExitCapExceeded : kExitValidation);
}

void check(h1m_status s) {
  if (s != H1M_OK) die(s);
}

struct ComplexHandle {
  h1m_complex* k = nullptr;
  ~ComplexHandle() { h1m_complex_free(k); }
};

std::string take_string(char* s) {
  std::string out = s ? s : "";
  h1m_string_free(s);
  return out;
}

std::vector<double> parse_double_list(const std::string& text) {
  std::vector<double> out;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t next = text.find(',', pos);
    if (next == std::string::npos) next = text.size();
    out.push_back(std::stod(text.substr(pos, next - pos)));
    pos = next + 1;
  }
  return out;
}

std::vector<std::uint32_t> parse_uint_list(const std::string& text) {
  std::vector<std::uint32_t> out;
  for (double d : parse_double_list(text)) out.push_back(static_cast<std::uint32_t>(d));
  return out;
}

// "A:B:S" inclusive range.
template <typename T>
std::vector<T> parse_range(const std::string& text) {
  std::vector<T> out;
  double a, b, s;
  if (std::sscanf(text.c_str(), "%lf:%lf:%lf", &a, &b, &s) != 3 || s <= 0) {
    std::fprintf(stderr, "error: bad range '%s', expected A:B:S\n", text.c_str());
    std::exit(kExitValidation);
  }
  for (double x = a; x <= b + 1e-9; x += s) out.push_back(static_cast<T>(x + 1e-12));
  return out;
}

void print_chain(const char* prefix, h1m_chain* c) {
  std::uint32_t n = h1m_chain_support_size(c);
  std::vector<std::uint32_t> edges(n);
  h1m_chain_support(c, edges.data(), n);
  std::printf("%schain", prefix);
  for (auto e : edges) std::printf(" %u", e);
  std::printf("\n");
}

int cmd_homology(const std::string& path) {
  ComplexHandle k;
  check(h1m_complex_read(path.c_str(), &k.k));
  std::uint32_t b[3];
  check(h1m_betti(k.k, b));
  std::printf("vertices %u edges %u faces %u\n", h1m_complex_vertex_count(k.k),
              h1m_complex_edge_count(k.k), h1m_complex_face_count(k.k));
  std::printf("volume %.17g euler %lld\n", h1m_complex_volume(k.k),
              static_cast<long long>(h1m_complex_euler(k.k)));
  std::printf("betti %u %u %u\n", b[0], b[1], b[2]);
  h1m_basis* basis = nullptr;
  check(h1m_basis_compute(k.k, &basis));
  std::printf("boundary_rank %u\n", h1m_basis_boundary_rank(basis));
  for (std::uint32_t i = 0; i < h1m_basis_b1(basis); ++i) {
    h1m_chain* rep = nullptr;
    check(h1m_basis_class_rep(basis, i, &rep));
    std::printf("class %u ", i);
    print_chain("", rep);
    h1m_chain_free(rep);
  }
  h1m_basis_free(basis);
  return kExitOk;
}

int cmd_minrep(const std::string& path, const std::string& coords, const std::string& method_name,
               std::uint64_t seed, double R, double horizon, std::uint32_t cap) {
  ComplexHandle k;
  check(h1m_complex_read(path.c_str(), &k.k));
  h1m_basis* basis = nullptr;
  check(h1m_basis_compute(k.k, &basis));
  std::uint32_t b1 = h1m_basis_b1(basis);

  h1m_profile* profile = nullptr;
  if (R > 0.0) {
    double h = horizon > 0.0 ? horizon : 2.0 * R + 1.0;
    check(h1m_profile_compute(k.k, h, R, &profile));
  }

  h1m_method method = H1M_METHOD_EXACT;
  if (method_name == "descent") method = H1M_METHOD_DESCENT;
  else if (method_name == "anneal") method = H1M_METHOD_ANNEAL;

  h1m_minimize_opts opts;
  h1m_minimize_opts_init(&opts);
  opts.seed = seed;
  if (cap) opts.exact_cap = cap;

  std::vector<std::vector<std::uint8_t>> classes;
  if (!coords.empty()) {
    if (coords.size() != b1) {
      std::fprintf(stderr, "error: --class needs %u bits, got %zu\n", b1, coords.size());
      return kExitValidation;
    }
    std::vector<std::uint8_t> bits;
    for (char ch : coords) {
      if (ch != '0' && ch != '1') {
        std::fprintf(stderr, "error: --class must be a bitstring of 0s and 1s\n");
        return kExitValidation;
      }
      bits.push_back(ch == '1' ? 1 : 0);
    }
    classes.push_back(std::move(bits));
  } else {
    for (std::uint32_t i = 0; i < b1; ++i) {
      std::vector<std::uint8_t> bits(b1, 0);
      bits[i] = 1;
      classes.push_back(std::move(bits));
    }
  }
  if (classes.empty()) {
    std::printf("b1 = 0: no nontrivial classes\n");
    h1m_basis_free(basis);
    return kExitOk;
  }

  std::size_t cap_failures = 0;
  for (std::size_t i = 0; i < classes.size(); ++i) {
    h1m_chain* c = nullptr;
    check(h1m_chain_from_class(basis, classes[i].data(), b1, &c));
    h1m_rep* rep = nullptr;
    h1m_status s = h1m_minimize(k.k, c, method, &opts, profile, &rep);
    if (s == H1M_ERR_CAP_EXCEEDED) {
      std::fprintf(stderr, "class %zu: cap exceeded: %s\n", i, h1m_last_error());
      ++cap_failures;
      h1m_chain_free(c);
      continue;
    }
    check(s);
    std::printf("%s\n", take_string([&] {
                  char* text = nullptr;
                  check(h1m_rep_format(rep, &text));
                  return text;
                }()).c_str());
    h1m_rep_free(rep);
    h1m_chain_free(c);
  }
  if (profile) h1m_profile_free(profile);
  h1m_basis_free(basis);
  return cap_failures == classes.size() ? kExitCapExceeded : kExitOk;
}

int cmd_nerve(const std::string& path, double kappa, const std::string& out_dir) {
  ComplexHandle k;
  check(h1m_complex_read(path.c_str(), &k.k));
  h1m_nerve* nerve = nullptr;
  check(h1m_nerve_build(k.k, kappa, &nerve));
  h1m_complex* nc = nullptr;
  check(h1m_nerve_complex(nerve, &nc));
  std::uint32_t bsrc[3], bnrv[3];
  check(h1m_betti(k.k, bsrc));
  check(h1m_betti(nc, bnrv));
  std::uint32_t rank = 0;
  int surjective = 0;
  check(h1m_nerve_induced_map(nerve, &rank, &surjective));
  std::printf("net %u balls (kappa %.17g)\n", h1m_nerve_net_size(nerve), kappa);
  std::printf("nerve vertices %u edges %u faces %u\n", h1m_complex_vertex_count(nc),
              h1m_complex_edge_count(nc), h1m_complex_face_count(nc));
  std::printf("b1 source %u nerve %u\n", bsrc[1], bnrv[1]);
  std::printf("induced_h1 rank %u surjective %s\n", rank, surjective ? "yes" : "no");
  double vol = h1m_complex_volume(k.k);
  std::printf("vertices_per_volume %.17g max_degree %u\n",
              vol > 0 ? h1m_nerve_net_size(nerve) / vol : 0.0, h1m_nerve_max_degree(nerve));
  if (h1m_nerve_kappa_warning(nerve))
    std::printf("warning: an essential loop of length <= 4*kappa exists; "
                "surjectivity may fail\n");
  if (!out_dir.empty()) {
    check(h1m_nerve_write(nerve, out_dir.c_str()));
    std::printf("wrote %s/{nerve_complex.cpx,net.txt,cover.txt,tau.txt}\n", out_dir.c_str());
  }
  h1m_complex_free(nc);
  h1m_nerve_free(nerve);
  return kExitOk;
}

int cmd_counting(const std::string& ps, const std::string& n_range, const std::string& d_range) {
  auto plist = parse_uint_list(ps);
  auto ns = parse_range<std::uint32_t>(n_range);
  auto ds = parse_range<double>(d_range);
  std::printf("p,n,delta,ratio,holds\n");
  for (auto p : plist) {
    for (double d : ds) {
      std::uint32_t n0 = UINT32_MAX;
      for (auto n : ns) {
        double ratio = 0.0;
        int holds = 0;
        check(h1m_counting_check(p, n, d, &ratio, &holds, nullptr));
        std::printf("%u,%u,%.6g,%.6g,%d\n", p, n, d, ratio, holds);
        if (holds) {
          if (n0 == UINT32_MAX) n0 = n;
        } else {
          n0 = UINT32_MAX;
        }
      }
      if (n0 == UINT32_MAX)
        std::printf("# n0(p=%u, delta=%.6g) = beyond range\n", p, d);
      else
        std::printf("# n0(p=%u, delta=%.6g) = %u\n", p, d, n0);
    }
  }
  return kExitOk;
}

int cmd_tower(const std::string& path, const std::string& r_list, std::uint64_t seed,
              const std::string& out_dir, bool timings, std::uint64_t budget, std::uint32_t cap,
              double horizon) {
  h1m_tower* tower = nullptr;
  check(h1m_tower_read(path.c_str(), &tower));
  auto rs = parse_double_list(r_list);
  h1m_tower_opts opts;
  h1m_tower_opts_init(&opts);
  opts.seed = seed;
  opts.budget = budget;
  opts.exact_cap = cap;
  opts.horizon = horizon;
  h1m_records* records = nullptr;
  check(h1m_tower_run(tower, rs.data(), static_cast<std::uint32_t>(rs.size()), &opts, &records));
  char* csv = nullptr;
  check(h1m_records_csv(records, timings ? 1 : 0, &csv));
  std::printf("%s", csv);
  h1m_string_free(csv);
  if (!out_dir.empty()) {
    check(h1m_records_emit(records, out_dir.c_str(), timings ? 1 : 0));
    std::printf("# wrote %s/{tower.csv,tower.json,tower.svg}\n", out_dir.c_str());
  }
  bool failures = false;
  for (std::uint32_t i = 0; i < h1m_records_count(records); ++i) {
    char* err = nullptr;
    check(h1m_records_error(records, i, &err));
    std::string e = take_string(err);
    if (!e.empty()) {
      std::fprintf(stderr, "# level failure: %s\n", e.c_str());
      failures = true;
    }
  }
  h1m_records_free(records);
  h1m_tower_free(tower);
  return failures ? kExitValidation : kExitOk;
}

int cmd_validate(const std::string& path) {
  // Peek at the header to pick the format.
  FILE* f = std::fopen(path.c_str(), "rb");
  if (!f) {
    std::fprintf(stderr, "error: cannot open '%s'\n", path.c_str());
    return kExitValidation;
  }
  char head[16] = {0};
  size_t got = std::fread(head, 1, sizeof(head) - 1, f);
  std::fclose(f);
  (void)got;
  h1m_status s;
  if (std::strncmp(head, "tower", 5) == 0) {
    h1m_tower* tower = nullptr;
    s = h1m_tower_read(path.c_str(), &tower);
    if (s == H1M_OK) {
      s = h1m_tower_validate(tower);
      h1m_tower_free(tower);
    }
  } else {
    h1m_complex* k = nullptr;
    s = h1m_complex_read(path.c_str(), &k);
    h1m_complex_free(k);
  }
  if (s != H1M_OK) {
    std::fprintf(stderr, "invalid (%s): %s\n", h1m_status_name(s), h1m_last_error());
    return kExitValidation;
  }
  std::printf("ok\n");
  return kExitOk;
}

int cmd_gen(const std::string& what, const std::vector<std::uint32_t>& args, double length,
            const std::string& out) {
  auto write_complex = [&](h1m_complex* k) {
    check(h1m_complex_write(k, out.c_str()));
    std::printf("wrote %s\n", out.c_str());
    h1m_complex_free(k);
    return kExitOk;
  };
  h1m_complex* k = nullptr;
  if (what == "cycle") {
    check(h1m_gen_cycle(args.at(0), length, &k));
    return write_complex(k);
  }
  if (what == "wedge") {
    check(h1m_gen_wedge(args.at(0), &k));
    return write_complex(k);
  }
  if (what == "surface") {
    check(h1m_gen_surface(args.at(0), &k));
    return write_complex(k);
  }
  if (what == "product-cycles") {
    h1m_complex *c1 = nullptr, *c2 = nullptr;
    check(h1m_gen_cycle(args.at(0), length, &c1));
    check(h1m_gen_cycle(args.at(1), length, &c2));
    check(h1m_gen_product(c1, c2, &k));
    h1m_complex_free(c1);
    h1m_complex_free(c2);
    return write_complex(k);
  }
  if (what == "product-tower" || what == "wedge-tower") {
    h1m_tower* tower = nullptr;
    if (what == "product-tower")
      check(h1m_tower_product_spec(args.at(0), args.at(1), args.at(2), &tower));
    else
      check(h1m_tower_wedge_spec(args.at(0), args.at(1), &tower));
    std::string base = out + ".base.cpx";
    check(h1m_tower_write(tower, out.c_str(), base.c_str()));
    std::printf("wrote %s and %s\n", out.c_str(), base.c_str());
    h1m_tower_free(tower);
    return kExitOk;
  }
  std::fprintf(stderr, "error: unknown generator '%s'\n", what.c_str());
  return kExitValidation;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"mod-2 homology, reduced representatives and tower experiments"};
  app.require_subcommand(1);

  std::string path, coords, method = "exact", out_dir, r_list = "0";
  std::uint64_t seed = 0, budget = 0;
  std::uint32_t cap = 0;
  double kappa = 1.0, R = 0.0, horizon = 0.0, length = 1.0;
  bool timings = false;

  auto* homology = app.add_subcommand("homology", "Betti numbers and a homology basis");
  homology->add_option("complex", path, "complex2 file")->required();

  auto* minrep = app.add_subcommand("minrep", "minimal representatives of homology classes");
  minrep->add_option("complex", path, "complex2 file")->required();
  minrep->add_option("--class", coords, "class coordinates as a bitstring over the basis");
  minrep->add_option("--seed", seed, "annealing seed");
  minrep->add_option("--R", R, "thick/thin threshold for the reported R-length");
  minrep->add_option("--horizon", horizon, "injectivity horizon (default 2R+1)");
  minrep->add_option("--cap", cap, "exact coset cap (rank d2)");
  bool use_exact = false, use_descent = false, use_anneal = false;
  minrep->add_flag("--exact", use_exact, "exact coset minimum (default)");
  minrep->add_flag("--descent", use_descent, "steepest-descent surgery");
  minrep->add_flag("--anneal", use_anneal, "simulated annealing + descent polish");

  auto* nerve = app.add_subcommand("nerve", "ball-cover nerve and transfer map");
  nerve->add_option("complex", path, "complex2 file")->required();
  nerve->add_option("--kappa", kappa, "ball radius")->required();
  nerve->add_option("--out", out_dir, "directory for nerve files");

  std::string ps = "2", n_range = "10:200:10", d_range = "0.05:0.45:0.05";
  auto* counting = app.add_subcommand("counting", "exact binomial tail bound checks");
  counting->add_option("--p", ps, "comma-separated primes");
  counting->add_option("--n-range", n_range, "A:B:S");
  counting->add_option("--delta-range", d_range, "A:B:S");

  auto* tower = app.add_subcommand("tower", "run a tower experiment");
  tower->add_option("spec", path, "tower file")->required();
  tower->add_option("--R", r_list, "comma-separated thresholds")->required();
  tower->add_option("--seed", seed, "root seed");
  tower->add_option("--out", out_dir, "output directory");
  tower->add_option("--budget", budget, "class enumeration budget");
  tower->add_option("--cap", cap, "exact coset cap");
  tower->add_option("--horizon", horizon, "injectivity horizon (default 2*max(R)+1)");
  tower->add_flag("--timings", timings, "emit wall-clock runtime_ms (breaks byte-determinism)");

  auto* validate = app.add_subcommand("validate", "validate a complex2 or tower file");
  validate->add_option("file", path, "file to validate")->required();

  std::string gen_what;
  std::vector<std::uint32_t> gen_args;
  auto* gen = app.add_subcommand("gen", "write fixture complexes and towers");
  gen->add_option("what", gen_what,
                  "cycle|wedge|surface|product-cycles|product-tower|wedge-tower")
      ->required();
  gen->add_option("args", gen_args, "generator arguments");
  gen->add_option("--length", length, "edge length for cycles");
  gen->add_option("--out", out_dir, "output path")->required();

  CLI11_PARSE(app, argc, argv);

  if (homology->parsed()) return cmd_homology(path);
  if (minrep->parsed()) {
    if (use_descent) method = "descent";
    if (use_anneal) method = "anneal";
    return cmd_minrep(path, coords, method, seed, R, horizon, cap);
  }
  if (nerve->parsed()) return cmd_nerve(path, kappa, out_dir);
  if (counting->parsed()) return cmd_counting(ps, n_range, d_range);
  if (tower->parsed()) return cmd_tower(path, r_list, seed, out_dir, timings, budget, cap, horizon);
  if (validate->parsed()) return cmd_validate(path);
  if (gen->parsed()) return cmd_gen(gen_what, gen_args, length, out_dir);
  return kExitOk;
}
