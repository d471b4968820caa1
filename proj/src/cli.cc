// Copyright 2026 The toposim Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "toposim/cli.h"

#include <CLI11.hpp>
#include <json.hpp>

#include <charconv>
#include <cstdio>
#include <fstream>
#include <map>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "toposim/decoder.h"
#include "toposim/scattering.h"

namespace toposim {

namespace {

using json = nlohmann::json;

/// Raised for bad flag values that CLI11 cannot see on its own.
struct ConfigError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

int parse_int(std::string_view text) {
  int v = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc() || ptr != text.data() + text.size()) throw ConfigError("not an integer: " + std::string(text));
  return v;
}

std::vector<int> parse_int_list(std::string_view text) {
  std::vector<int> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t comma = text.find(',', start);
    const std::size_t end = comma == std::string_view::npos ? text.size() : comma;
    out.push_back(parse_int(text.substr(start, end - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

json model_json(const ModelSpec& spec) {
  return {{"model", spec.model},
          {"rows", spec.rows},
          {"cols", spec.cols},
          {"twist", spec.twist},
          {"twist_offset", spec.twist_offset},
          {"region", spec.region}};
}

json lifetime_json(const LifetimeConfig& c) {
  return {{"rows", c.rows},
          {"cols", c.cols},
          {"block", {c.block_row, c.block_col, c.block_height, c.block_width}},
          {"island", c.island},
          {"label", to_string(c.label)},
          {"p", c.p},
          {"rounds", c.rounds},
          {"trials", c.trials},
          {"seed", c.seed},
          {"zone_width", c.zone_width},
          {"penetration", c.penetration}};
}

void apply_lifetime_json(const json& j, LifetimeConfig& c) {
  const std::map<std::string, int> known{{"rows", 0}, {"cols", 0}, {"block", 0}, {"island", 0},
                                         {"label", 0}, {"p", 0}, {"rounds", 0}, {"trials", 0},
                                         {"seed", 0}, {"zone_width", 0}, {"penetration", 0}};
  if (!j.is_object()) throw ConfigError("config must be a JSON object");
  for (const auto& [key, value] : j.items()) {
    if (!known.count(key)) throw ConfigError("unknown config key: " + key);
  }
  try {
    if (j.contains("rows")) c.rows = j.at("rows").get<int>();
    if (j.contains("cols")) c.cols = j.at("cols").get<int>();
    if (j.contains("block")) {
      const auto b = j.at("block").get<std::vector<int>>();
      if (b.size() != 4) throw ConfigError("block needs [row, col, height, width]");
      c.block_row = b[0];
      c.block_col = b[1];
      c.block_height = b[2];
      c.block_width = b[3];
    }
    if (j.contains("island")) c.island = j.at("island").get<bool>();
    if (j.contains("label")) c.label = parse_label(j.at("label").get<std::string>());
    if (j.contains("p")) c.p = j.at("p").get<double>();
    if (j.contains("rounds")) c.rounds = j.at("rounds").get<std::uint64_t>();
    if (j.contains("trials")) c.trials = j.at("trials").get<std::uint64_t>();
    if (j.contains("seed")) c.seed = j.at("seed").get<std::uint64_t>();
    if (j.contains("zone_width")) c.zone_width = j.at("zone_width").get<int>();
    if (j.contains("penetration")) c.penetration = j.at("penetration").get<int>();
  } catch (const json::exception& e) {
    throw ConfigError(std::string("bad config value: ") + e.what());
  }
}

json artifact(std::string_view subcommand, const json& config, std::uint64_t seed) {
  json full = config;
  full["subcommand"] = subcommand;
  return {{"tool", kToolName},
          {"version", kToolVersion},
          {"config_hash", config_hash(full.dump())},
          {"seed", seed},
          {"config", full}};
}

std::string csv_preamble(const json& header) {
  return "# " + std::string(kToolName) + " " + std::string(kToolVersion) +
         " config_hash=" + header.at("config_hash").get<std::string>() +
         " seed=" + std::to_string(header.at("seed").get<std::uint64_t>()) + "\n";
}

void emit(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << text;
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw std::runtime_error("cannot open " + path);
  file << text;
  if (!file) throw std::runtime_error("cannot write " + path);
}

struct ModelFlags {
  std::string model = "z2";
  std::string size = "3x3";
  std::string twist = "none";
  int twist_offset = 0;
  std::string region;
};

void add_model_flags(CLI::App* app, ModelFlags& f) {
  app->add_option("--model", f.model, "z2, z4, ds, hybrid or island")
      ->check(CLI::IsMember({"z2", "z4", "ds", "hybrid", "island"}));
  app->add_option("--size", f.size, "lattice size RxC or L");
  app->add_option("--twist", f.twist, "none, vertical, horizontal or double (z2 only)")
      ->check(CLI::IsMember({"none", "vertical", "horizontal", "double"}));
  app->add_option("--twist-offset", f.twist_offset, "column or row of the twist strip");
  app->add_option("--region", f.region, "block row,col,height,width for hybrid and island");
}

ModelSpec to_spec(const ModelFlags& f) {
  ModelSpec s;
  s.model = f.model;
  const auto size = parse_size(f.size);
  s.rows = size[0];
  s.cols = size[1];
  s.twist = f.twist;
  s.twist_offset = f.twist_offset;
  if (!f.region.empty()) {
    const auto r = parse_int_list(f.region);
    if (r.size() != 4) throw ConfigError("--region needs row,col,height,width");
    s.region = {r[0], r[1], r[2], r[3]};
  }
  return s;
}

int cmd_info(const ModelFlags& flags, bool list, std::uint64_t seed, const std::string& out_path, std::ostream& out) {
  const ModelSpec spec = to_spec(flags);
  const StabilizerCode code = build_model(spec);
  json j = artifact("info", model_json(spec), seed);
  std::map<std::string, int> kinds;
  for (const auto& g : code.generators) ++kinds[std::string(kind_name(g.kind))];
  const int k = logical_dimension_log2(code);
  const int bits_per_site = code.dim == 4 ? 2 : 1;
  j["dim"] = code.dim;
  j["num_sites"] = code.num_sites();
  j["num_generators"] = code.generators.size();
  j["generators_by_kind"] = kinds;
  j["commuting"] = pairwise_commuting(code.matrix());
  j["logical_dimension_log2"] = k;
  j["logical_dimension"] = k < 63 ? json(std::uint64_t{1} << k) : json(nullptr);
  j["logical_qudits"] = static_cast<double>(k) / bits_per_site;
  json regions = json::array();
  for (const auto& r : code.regions) regions.push_back({{"role", r.role}, {"cells", r.count()}});
  j["regions"] = regions;
  if (list) {
    json gens = json::array();
    for (const auto& g : code.generators) {
      gens.push_back(std::string(kind_name(g.kind)) + " " + std::to_string(g.anchor) + " " + to_literal(g.op));
    }
    j["generators"] = gens;
  }
  emit(out_path, j.dump(2) + "\n", out);
  return kExitOk;
}

json distance_json(const DistanceResult& r) {
  json j{{"overflow", r.overflow}, {"nodes", r.nodes}};
  j["distance"] = r.overflow ? json(nullptr) : json(r.distance);
  if (!r.overflow) j["witness"] = to_literal(r.witness);
  return j;
}

int cmd_distance(const ModelFlags& flags, std::uint64_t budget, std::uint64_t seed, const std::string& out_path,
                 std::ostream& out) {
  const ModelSpec spec = to_spec(flags);
  const StabilizerCode code = build_model(spec);
  const LogicalStructure logicals(code);
  json config = model_json(spec);
  config["budget"] = budget;
  json j = artifact("distance", config, seed);
  bool overflow = false;
  int best = 0;
  json classes = json::array();
  for (const auto& entry : class_resolved_distances(logicals, budget)) {
    json c = distance_json(entry.result);
    c["class"] = entry.cls.id();
    classes.push_back(c);
    overflow = overflow || entry.result.overflow;
    if (!entry.result.overflow && (best == 0 || entry.result.distance < best)) best = entry.result.distance;
  }
  j["classes"] = classes;
  j["distance"] = overflow || best == 0 ? json(nullptr) : json(best);
  if (spec.twist == "vertical" || spec.twist == "horizontal") {
    const auto orientation = spec.twist == "vertical" ? Orientation::Vertical : Orientation::Horizontal;
    const TwistedLogicals t = twisted_logicals(code, orientation);
    const LogicalStructure base(build_z2_toric(code.lattice));
    const DistanceResult base_d = code_distance(base, std::nullopt, budget);
    json tw{{"base_distance", distance_json(base_d)}};
    for (const auto& [name, op] : {std::pair{"z_t", &t.z_t}, std::pair{"x_t", &t.x_t}, std::pair{"y_t", &t.y_t}}) {
      const DistanceResult r = code_distance(logicals, *op, budget);
      overflow = overflow || r.overflow;
      tw[name] = distance_json(r);
      tw[name]["class"] = logicals.classify(*op).id();
    }
    overflow = overflow || base_d.overflow;
    j["twisted"] = tw;
  }
  j["overflow"] = overflow;
  emit(out_path, j.dump(2) + "\n", out);
  return overflow ? kExitOverflow : kExitOk;
}

struct BenchFlags {
  std::string sizes = "2,3,4";
  double p = 0.01;
  std::uint64_t trials = 10000;
  std::string out_path;
  std::string summary_path;
  bool no_timing = false;
};

int cmd_bench(const BenchFlags& f, std::uint64_t seed, std::ostream& out) {
  const std::vector<int> sizes = parse_int_list(f.sizes);
  if (f.p < 0.0 || f.p > 1.0) throw ConfigError("--p must lie in [0, 1]");
  for (int L : sizes) {
    if (L < 2) throw ConfigError("sizes must be at least 2");
  }
  const json config{{"sizes", sizes}, {"p", f.p}, {"trials", f.trials}};
  const json header = artifact("decode-bench", config, seed);
  std::vector<BenchResult> results;
  std::string csv = csv_preamble(header) + bench_csv_header() + "\n";
  for (int L : sizes) {
    BenchConfig c;
    c.size = L;
    c.p = f.p;
    c.trials = f.trials;
    c.seed = seed;
    results.push_back(run_decoder_bench(c));
    csv += bench_csv_row(results.back(), !f.no_timing) + "\n";
  }
  emit(f.out_path, csv, out);
  if (!f.summary_path.empty()) {
    json j = header;
    j["schema_version"] = kBenchSchemaVersion;
    json rows = json::array();
    for (const auto& r : results) {
      json row{{"L", r.config.size},
               {"failures", r.failures},
               {"rate", static_cast<double>(r.failures) / static_cast<double>(std::max<std::uint64_t>(1, r.config.trials))},
               {"failures_by_class", r.failures_by_class}};
      if (!f.no_timing) row["wall_seconds"] = r.wall_seconds;
      rows.push_back(row);
    }
    j["results"] = rows;
    json tests = json::array();
    for (std::size_t i = 0; i + 1 < results.size(); ++i) {
      const SignTest s = paired_sign_test(results[i], results[i + 1]);
      tests.push_back({{"smaller", results[i].config.size},
                       {"larger", results[i + 1].config.size},
                       {"worse", s.worse},
                       {"better", s.better},
                       {"p_value", s.p_value}});
    }
    j["sign_tests"] = tests;
    emit(f.summary_path, j.dump(2) + "\n", out);
  }
  return kExitOk;
}

struct ScatterFlags {
  std::string config_path;
  std::string label;
  double p = 0.02;
  std::uint64_t trials = 10000;
  std::uint64_t rounds = 100000;
  bool island = false;
  int zone_width = 1;
  int penetration = 2;
  std::string out_path;
  std::string summary_path;
  std::string trace_path;
  std::uint64_t trace_trial = 0;
  bool no_timing = false;
};

int cmd_scatter(const ScatterFlags& f, CLI::App* app, std::uint64_t seed, bool seed_given, std::ostream& out) {
  LifetimeConfig c = f.island ? island_preset() : LifetimeConfig{};
  if (!f.config_path.empty()) {
    std::ifstream file(f.config_path);
    if (!file) throw ConfigError("cannot read config " + f.config_path);
    json j;
    try {
      j = json::parse(file);
    } catch (const json::exception& e) {
      throw ConfigError(std::string("config is not valid JSON: ") + e.what());
    }
    if (j.value("island", false) && !f.island) c = island_preset();
    apply_lifetime_json(j, c);
  }
  if (seed_given) c.seed = seed;
  if (app->count("--label")) c.label = parse_label(f.label);
  if (app->count("--p")) c.p = f.p;
  if (app->count("--trials")) c.trials = f.trials;
  if (app->count("--rounds")) c.rounds = f.rounds;
  if (app->count("--island")) c.island = true;
  if (app->count("--zone-width")) c.zone_width = f.zone_width;
  if (app->count("--penetration")) c.penetration = f.penetration;
  if (c.p < 0.0 || c.p > 1.0) throw ConfigError("p must lie in [0, 1]");
  if (classify_scattering(c.label) != ScatterOutcome::Reflect) {
    throw ConfigError("label " + to_string(c.label) + " is deconfined; the lifetime experiment needs a confined label");
  }

  const json header = artifact("scatter", lifetime_json(c), c.seed);
  const LifetimeResult r = lifetime_experiment(c);

  std::string csv = csv_preamble(header) + "schema_version,trial,lifetime,censored\n";
  for (std::size_t t = 0; t < r.lifetimes.size(); ++t) {
    csv += std::to_string(kLifetimeSchemaVersion) + "," + std::to_string(t) + "," + std::to_string(r.lifetimes[t]) +
           "," + (r.lifetimes[t] == 0 ? "1" : "0") + "\n";
  }
  json j = header;
  j["schema_version"] = kLifetimeSchemaVersion;
  j["class"] = conjugacy_class(c.label).name;
  j["q"] = r.q;
  j["inverse_q"] = r.q > 0.0 ? json(1.0 / r.q) : json(nullptr);
  j["changing_pairs"] = r.changing_pairs;
  j["zone_pairs"] = r.zone_pairs;
  j["censored"] = r.censored;
  j["mean"] = r.mean;
  j["variance"] = r.variance;
  j["standard_error"] = r.standard_error;
  j["z_score"] = r.q > 0.0 && r.standard_error > 0.0 ? json((r.mean - 1.0 / r.q) / r.standard_error) : json(nullptr);
  j["chi_square"] = r.chi_square;
  j["dof"] = r.dof;
  j["gof_p_value"] = r.gof_p_value;
  j["bounces"] = r.bounces;
  j["reflections"] = r.reflections;
  j["reflection_frequency"] =
      r.bounces > 0 ? static_cast<double>(r.reflections) / static_cast<double>(r.bounces) : 0.0;
  json hist = json::array();
  for (const auto& b : lifetime_histogram(r)) hist.push_back({{"lo", b.lo}, {"hi", b.hi}, {"count", b.count}});
  j["histogram"] = hist;
  if (!f.no_timing) j["wall_seconds"] = r.wall_seconds;

  if (f.out_path.empty() && f.summary_path.empty()) {
    emit("", j.dump(2) + "\n", out);
  } else {
    if (!f.out_path.empty()) emit(f.out_path, csv, out);
    emit(f.summary_path, j.dump(2) + "\n", out);
  }
  if (!f.trace_path.empty()) {
    const ScatterTrace trace = scatter_trace(c, f.trace_trial);
    std::string text = csv_preamble(header) + "schema_version,round,position,label,class,energy,reflected,poisoned\n";
    for (const auto& e : trace.entries) {
      text += std::to_string(kLifetimeSchemaVersion) + "," + std::to_string(e.round) + "," +
              std::to_string(e.position) + "," + to_string(e.label) + "," + e.class_name + "," +
              std::to_string(e.energy) + "," + (e.reflected ? "1" : "0") + "," + (e.poisoned ? "1" : "0") + "\n";
    }
    emit(f.trace_path, text, out);
  }
  return kExitOk;
}

int cmd_selftest(std::ostream& out) {
  int failed = 0;
  auto check = [&](const std::string& name, bool ok) {
    out << (ok ? "PASS " : "FAIL ") << name << "\n";
    failed += !ok;
  };
  for (int L = 2; L <= 4; ++L) {
    const TorusLattice lat(L, L);
    const StabilizerCode z2 = build_z2_toric(lat);
    const StabilizerCode z4 = build_z4_toric(lat);
    const StabilizerCode ds = condense_ds(z4, RegionMask::full(lat, "condensed-ds"));
    const StabilizerCode tw = insert_noncontractible_twist(z2, Orientation::Vertical, 0);
    const std::string tag = " L=" + std::to_string(L);
    check("commuting" + tag, pairwise_commuting(z2.matrix()) && pairwise_commuting(z4.matrix()) &&
                                 pairwise_commuting(ds.matrix()) && pairwise_commuting(tw.matrix()));
    check("logical-dimensions" + tag, logical_dimension(z2) == 4 && logical_dimension(z4) == 16 &&
                                          logical_dimension(ds) == 4 && logical_dimension(tw) == 2);
    check("condensed-group" + tag, same_group(ds.matrix(), explicit_ds_group(lat)));
  }
  {
    const TorusLattice lat(3, 3);
    const StabilizerCode ds = condense_ds(build_z4_toric(lat), RegionMask::full(lat, "condensed-ds"));
    const LogicalStructure logicals(ds);
    bool ok = true;
    for (std::size_t e = 0; e < lat.num_edges(); ++e) {
      for (int k = 1; k < 16; ++k) {
        const PauliOperator err = PauliOperator::single_site(4, lat.num_edges(), e, k / 4, k % 4);
        ok = ok && logical_failure(logicals, err, decode(ds, extract_syndrome(ds, err))).is_identity();
      }
    }
    check("single-error-decoding L=3", ok);
  }
  bool parity = true;
  for (int a = 0; a < 4; ++a) {
    for (int b = 0; b < 4; ++b) {
      parity = parity && ((classify_scattering({a, b}) == ScatterOutcome::Transmit) == ((a + b) % 2 == 0));
    }
  }
  check("scattering-parity", parity);
  return failed == 0 ? kExitOk : kExitFailure;
}

void diagnostic(std::ostream& err, std::string_view kind, std::string_view message) {
  err << json{{"error", kind}, {"message", message}}.dump() << "\n";
}

}  // namespace

StabilizerCode build_model(const ModelSpec& spec) {
  const TorusLattice lat(spec.rows, spec.cols);
  if (spec.twist != "none" && spec.model != "z2") throw std::invalid_argument("twists need --model z2");
  auto block = [&]() {
    auto [r0, c0, h, w] = spec.region;
    if (h == 0 || w == 0) {
      h = std::max(1, spec.rows / 3);
      w = std::max(1, spec.cols / 3);
      r0 = (spec.rows - h) / 2;
      c0 = (spec.cols - w) / 2;
    }
    if (h < 0 || w < 0) throw std::invalid_argument("region height and width must be positive");
    return RegionMask::block(lat, r0, c0, h, w, "block");
  };
  if (spec.model == "z2") {
    StabilizerCode code = build_z2_toric(lat);
    if (spec.twist == "vertical") return insert_noncontractible_twist(code, Orientation::Vertical, spec.twist_offset);
    if (spec.twist == "horizontal") {
      return insert_noncontractible_twist(code, Orientation::Horizontal, spec.twist_offset);
    }
    if (spec.twist == "double") return insert_double_twist(code, spec.twist_offset, spec.twist_offset);
    if (spec.twist != "none") throw std::invalid_argument("unknown twist " + spec.twist);
    return code;
  }
  if (spec.model == "z4") return build_z4_toric(lat);
  if (spec.model == "ds") return build_hybrid(lat, RegionMask::full(lat, "condensed-ds"));
  if (spec.model == "hybrid") return build_hybrid(lat, block());
  if (spec.model == "island") return build_island(lat, block());
  throw std::invalid_argument("unknown model " + spec.model);
}

AnyonLabel parse_label(std::string_view text) {
  if (text == "vacuum" || text == "1") return {0, 0};
  // Class names of the deconfined sector, by their representative.
  if (text == "s") return {1, 1};
  if (text == "s-bar" || text == "sbar") return {1, 3};
  if (text == "ss-bar" || text == "ssbar") return {0, 2};
  const auto comma = text.find(',');
  if (comma != std::string_view::npos) {
    const int a = parse_int(text.substr(0, comma));
    const int b = parse_int(text.substr(comma + 1));
    return {((a % 4) + 4) % 4, ((b % 4) + 4) % 4};
  }
  AnyonLabel out{0, 0};
  std::size_t i = 0;
  bool any = false;
  auto exponent = [&]() {
    if (i < text.size() && text[i] == '^') ++i;
    const std::size_t start = i;
    while (i < text.size() && text[i] >= '0' && text[i] <= '9') ++i;
    return start == i ? 1 : parse_int(text.substr(start, i - start));
  };
  if (i < text.size() && text[i] == 'e') {
    ++i;
    out.a = exponent() % 4;
    any = true;
  }
  if (i < text.size() && text[i] == 'm') {
    ++i;
    out.b = exponent() % 4;
    any = true;
  }
  if (!any || i != text.size()) throw std::invalid_argument("cannot parse anyon label '" + std::string(text) + "'");
  return out;
}

std::array<int, 2> parse_size(std::string_view text) {
  const auto x = text.find('x');
  if (x == std::string_view::npos) {
    const int n = parse_int(text);
    return {n, n};
  }
  return {parse_int(text.substr(0, x)), parse_int(text.substr(x + 1))};
}

std::string config_hash(std::string_view canonical) {
  std::uint64_t h = 14695981039346656037ULL;
  for (unsigned char ch : canonical) {
    h ^= ch;
    h *= 1099511628211ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Stabilizer simulator for twisted and condensed toric codes", std::string(kToolName)};
  app.set_version_flag("--version", std::string(kToolVersion));
  app.require_subcommand(1);
  std::uint64_t seed = 1;
  std::string out_path;

  ModelFlags info_flags;
  bool list = false;
  auto* info = app.add_subcommand("info", "generators and logical dimension");
  add_model_flags(info, info_flags);
  info->add_flag("--generators", list, "list every generator");
  info->add_option("--seed", seed, "recorded in the output");
  info->add_option("--out", out_path, "output JSON path");

  ModelFlags dist_flags;
  std::uint64_t budget = kDefaultDistanceBudget;
  auto* distance = app.add_subcommand("distance", "class-resolved code distances");
  add_model_flags(distance, dist_flags);
  distance->add_option("--budget", budget, "enumeration node budget");
  distance->add_option("--seed", seed, "recorded in the output");
  distance->add_option("--out", out_path, "output JSON path");

  BenchFlags bench_flags;
  auto* bench = app.add_subcommand("decode-bench", "Monte Carlo logical failure rate of the decoder");
  bench->add_option("--sizes,--size", bench_flags.sizes, "comma-separated lattice sizes L");
  bench->add_option("--p", bench_flags.p, "per-site error probability");
  bench->add_option("--trials", bench_flags.trials, "trials per size");
  bench->add_option("--seed", seed, "base seed");
  bench->add_option("--out", bench_flags.out_path, "CSV output path");
  bench->add_option("--summary", bench_flags.summary_path, "JSON summary path");
  bench->add_flag("--no-timing", bench_flags.no_timing, "omit wall times for byte-identical output");

  ScatterFlags scatter_flags;
  auto* scatter = app.add_subcommand("scatter", "conjugacy-class lifetime experiment");
  scatter->add_option("--config", scatter_flags.config_path, "JSON experiment config");
  scatter->add_option("--label", scatter_flags.label, "initial anyon label, e.g. e, m3, e2m");
  scatter->add_option("--p", scatter_flags.p, "per-round poisoning probability");
  scatter->add_option("--trials", scatter_flags.trials, "trials");
  scatter->add_option("--rounds", scatter_flags.rounds, "round budget per trial");
  scatter->add_option("--seed", seed, "base seed");
  scatter->add_flag("--island", scatter_flags.island, "toric-code island inside a condensed bulk");
  scatter->add_option("--zone-width", scatter_flags.zone_width, "poisoning zone width");
  scatter->add_option("--penetration", scatter_flags.penetration, "cells probed per bounce");
  scatter->add_option("--out", scatter_flags.out_path, "per-trial lifetimes CSV path");
  scatter->add_option("--summary", scatter_flags.summary_path, "JSON summary path");
  scatter->add_option("--trace", scatter_flags.trace_path, "round-by-round CSV of one trial");
  scatter->add_option("--trace-trial", scatter_flags.trace_trial, "trial index for --trace");
  scatter->add_flag("--no-timing", scatter_flags.no_timing, "omit wall time for byte-identical output");

  auto* selftest = app.add_subcommand("selftest", "invariant suites");

  std::vector<const char*> argv{"toposim"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForVersion&) {
    out << kToolVersion << "\n";
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    diagnostic(err, "invalid-config", e.what());
    return kExitInvalidConfig;
  }

  try {
    if (*info) return cmd_info(info_flags, list, seed, out_path, out);
    if (*distance) return cmd_distance(dist_flags, budget, seed, out_path, out);
    if (*bench) return cmd_bench(bench_flags, seed, out);
    if (*scatter) return cmd_scatter(scatter_flags, scatter, seed, scatter->count("--seed") > 0, out);
    if (*selftest) return cmd_selftest(out);
  } catch (const std::invalid_argument& e) {
    diagnostic(err, "invalid-config", e.what());
    return kExitInvalidConfig;
  } catch (const std::exception& e) {
    diagnostic(err, "runtime", e.what());
    return kExitFailure;
  }
  return kExitInvalidConfig;
}

}  // namespace toposim
