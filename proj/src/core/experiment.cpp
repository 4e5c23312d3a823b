#include "experiment.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "homology.hpp"
#include "unfold.hpp"

namespace h1min {

namespace {

std::string fmt(double x) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

}  // namespace

bool ExperimentRecord::operator==(const ExperimentRecord& o) const {
  return level == o.level && volume == o.volume && b1 == o.b1 && b1_over_vol == o.b1_over_vol &&
         rlength_norm == o.rlength_norm && rlength_exact == o.rlength_exact &&
         thin_fraction == o.thin_fraction && R == o.R && runtime_ms == o.runtime_ms &&
         error == o.error;
}

std::vector<ExperimentRecord> run_tower_experiment(const TowerSpec& spec,
                                                   std::vector<double> r_list,
                                                   const TowerParams& params) {
  if (r_list.empty()) fail(ErrorCode::argument, "tower experiment needs at least one R");
  std::sort(r_list.begin(), r_list.end());
  double horizon = params.horizon > 0.0 ? params.horizon : 2.0 * r_list.back() + 1.0;

  std::vector<ExperimentRecord> records;
  for (std::size_t li = 0; li < spec.levels.size(); ++li) {
    const auto& level = spec.levels[li];
    auto started = std::chrono::steady_clock::now();
    auto elapsed_ms = [&] {
      return static_cast<std::uint64_t>(std::chrono::duration_cast<std::chrono::milliseconds>(
                                            std::chrono::steady_clock::now() - started)
                                            .count());
    };
    try {
      Cover cover = gen_cover(spec.base, level.cover);
      const Complex2& k = cover.complex;
      HomologyBasis basis(k);
      MetricProfile base_profile = injectivity_profile(k, horizon, r_list.front());

      std::vector<MetricProfile> profiles;
      profiles.reserve(r_list.size());
      for (double R : r_list) profiles.push_back(reprofile(base_profile, R));

      RLengthParams rl = params.rlength;
      rl.seed = splitmix64(params.seed ^ splitmix64(li + 1));
      auto norms = normalized_r_length_sweep(k, basis, profiles, rl);

      for (std::size_t ri = 0; ri < r_list.size(); ++ri) {
        ExperimentRecord rec;
        rec.level = level.label;
        rec.volume = k.volume();
        rec.b1 = basis.b1();
        rec.b1_over_vol = rec.volume > 0.0 ? rec.b1 / rec.volume : 0.0;
        rec.rlength_norm = norms[ri].value;
        rec.rlength_exact = norms[ri].exact;
        rec.thin_fraction = bs_statistics(profiles[ri]).thin_fraction;
        rec.R = r_list[ri];
        rec.runtime_ms = elapsed_ms();
        records.push_back(std::move(rec));
      }
    } catch (const Error& e) {
      for (double R : r_list) {
        ExperimentRecord rec;
        rec.level = level.label;
        rec.R = R;
        rec.error = e.what();
        rec.runtime_ms = elapsed_ms();
        records.push_back(std::move(rec));
      }
    }
  }
  return records;
}

const char* kRecordCsvHeader =
    "level,volume,b1,b1_over_vol,rlength_norm,rlength_exact,thin_fraction,R,runtime_ms";

std::string records_to_csv(const std::vector<ExperimentRecord>& records, bool include_timings) {
  std::ostringstream out;
  out << kRecordCsvHeader << "\n";
  for (const auto& r : records) {
    out << r.level << "," << fmt(r.volume) << "," << r.b1 << "," << fmt(r.b1_over_vol) << ","
        << fmt(r.rlength_norm) << "," << (r.rlength_exact ? 1 : 0) << "," << fmt(r.thin_fraction)
        << "," << fmt(r.R) << "," << (include_timings ? r.runtime_ms : 0) << "\n";
  }
  return out.str();
}

std::string records_to_json(const std::vector<ExperimentRecord>& records, bool include_timings) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const auto& r : records) {
    nlohmann::ordered_json row;
    row["level"] = r.level;
    row["volume"] = r.volume;
    row["b1"] = r.b1;
    row["b1_over_vol"] = r.b1_over_vol;
    row["rlength_norm"] = r.rlength_norm;
    row["rlength_exact"] = r.rlength_exact;
    row["thin_fraction"] = r.thin_fraction;
    row["R"] = r.R;
    row["runtime_ms"] = include_timings ? r.runtime_ms : 0;
    if (!r.error.empty()) row["error"] = r.error;
    arr.push_back(std::move(row));
  }
  return arr.dump(2) + "\n";
}

std::vector<ExperimentRecord> records_from_json(const std::string& text) {
  nlohmann::json arr;
  try {
    arr = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    fail(ErrorCode::parse, std::string("bad records json: ") + e.what());
  }
  if (!arr.is_array()) fail(ErrorCode::parse, "records json must be an array");
  std::vector<ExperimentRecord> out;
  for (const auto& row : arr) {
    ExperimentRecord r;
    r.level = row.at("level").get<std::string>();
    r.volume = row.at("volume").get<double>();
    r.b1 = row.at("b1").get<std::uint32_t>();
    r.b1_over_vol = row.at("b1_over_vol").get<double>();
    r.rlength_norm = row.at("rlength_norm").get<double>();
    r.rlength_exact = row.at("rlength_exact").get<bool>();
    r.thin_fraction = row.at("thin_fraction").get<double>();
    r.R = row.at("R").get<double>();
    r.runtime_ms = row.at("runtime_ms").get<std::uint64_t>();
    if (row.contains("error")) r.error = row.at("error").get<std::string>();
    out.push_back(std::move(r));
  }
  return out;
}

namespace {

struct SvgSeries {
  std::string name;
  std::string color;
  std::vector<std::pair<double, double>> points;  // (volume, value)
};

}  // namespace

std::string records_to_svg(const std::vector<ExperimentRecord>& records) {
  const double W = 640, H = 400, ml = 70, mr = 160, mt = 30, mb = 50;

  std::vector<SvgSeries> series;
  {
    SvgSeries b1s{"b1/vol", "#1f77b4", {}};
    std::vector<std::string> seen_levels;
    for (const auto& r : records) {
      if (r.error.empty() &&
          std::find(seen_levels.begin(), seen_levels.end(), r.level) == seen_levels.end()) {
        seen_levels.push_back(r.level);
        b1s.points.push_back({r.volume, r.b1_over_vol});
      }
    }
    if (!b1s.points.empty()) series.push_back(std::move(b1s));

    std::vector<double> rs;
    for (const auto& r : records)
      if (r.error.empty() && std::find(rs.begin(), rs.end(), r.R) == rs.end()) rs.push_back(r.R);
    const char* palette[] = {"#d62728", "#ff7f0e", "#2ca02c", "#9467bd", "#8c564b", "#e377c2"};
    for (std::size_t i = 0; i < rs.size(); ++i) {
      SvgSeries s{"rlength_norm R=" + fmt(rs[i]), palette[i % 6], {}};
      for (const auto& r : records)
        if (r.error.empty() && r.R == rs[i]) s.points.push_back({r.volume, r.rlength_norm});
      series.push_back(std::move(s));
    }
  }

  double vmin = 1e300, vmax = 0, ymax = 0;
  for (const auto& s : series)
    for (auto [v, y] : s.points) {
      vmin = std::min(vmin, v);
      vmax = std::max(vmax, v);
      ymax = std::max(ymax, y);
    }
  if (series.empty() || vmin <= 0) {
    vmin = 1;
    vmax = 10;
  }
  if (vmax <= vmin) vmax = vmin * 10;
  if (ymax <= 0) ymax = 1;

  auto X = [&](double v) {
    return ml + (std::log10(v) - std::log10(vmin)) / (std::log10(vmax) - std::log10(vmin)) *
                    (W - ml - mr);
  };
  auto Y = [&](double y) { return H - mb - (y / ymax) * (H - mt - mb); };

  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << W << "\" height=\"" << H
      << "\" viewBox=\"0 0 " << W << " " << H << "\">\n";
  out << "<rect width=\"" << W << "\" height=\"" << H << "\" fill=\"white\"/>\n";
  out << "<line x1=\"" << ml << "\" y1=\"" << H - mb << "\" x2=\"" << W - mr << "\" y2=\""
      << H - mb << "\" stroke=\"black\"/>\n";
  out << "<line x1=\"" << ml << "\" y1=\"" << mt << "\" x2=\"" << ml << "\" y2=\"" << H - mb
      << "\" stroke=\"black\"/>\n";
  out << "<text x=\"" << (ml + (W - ml - mr) / 2) << "\" y=\"" << H - 12
      << "\" text-anchor=\"middle\" font-size=\"13\">volume (log scale)</text>\n";
  out << "<text x=\"18\" y=\"" << (mt + (H - mt - mb) / 2)
      << "\" text-anchor=\"middle\" font-size=\"13\" transform=\"rotate(-90 18 "
      << (mt + (H - mt - mb) / 2) << ")\">normalized value</text>\n";

  double legend_y = mt + 10;
  for (const auto& s : series) {
    out << "<polyline fill=\"none\" stroke=\"" << s.color << "\" stroke-width=\"1.5\" points=\"";
    for (auto [v, y] : s.points) out << fmt(X(v)) << "," << fmt(Y(y)) << " ";
    out << "\"/>\n";
    for (auto [v, y] : s.points)
      out << "<circle cx=\"" << fmt(X(v)) << "\" cy=\"" << fmt(Y(y)) << "\" r=\"3\" fill=\""
          << s.color << "\"/>\n";
    out << "<rect x=\"" << W - mr + 10 << "\" y=\"" << legend_y - 9
        << "\" width=\"10\" height=\"10\" fill=\"" << s.color << "\"/>\n";
    out << "<text x=\"" << W - mr + 26 << "\" y=\"" << legend_y << "\" font-size=\"12\">" << s.name
        << "</text>\n";
    legend_y += 18;
  }
  out << "</svg>\n";
  return out.str();
}

void emit_report(const std::vector<ExperimentRecord>& records, const std::string& dir,
                 bool include_timings) {
  if (records.empty()) fail(ErrorCode::argument, "no records to emit");
  namespace fs = std::filesystem;
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) fail(ErrorCode::io, "cannot create directory '" + dir + "'");
  auto write = [&](const char* name, const std::string& body) {
    std::ofstream out(fs::path(dir) / name, std::ios::binary);
    if (!out) fail(ErrorCode::io, std::string("cannot open '") + name + "' for writing");
    out << body;
    if (!out) fail(ErrorCode::io, std::string("write failed for '") + name + "'");
  };
  write("tower.csv", records_to_csv(records, include_timings));
  write("tower.json", records_to_json(records, include_timings));
  write("tower.svg", records_to_svg(records));
}

}  // namespace h1min
