// Copyright 2026 The cagen Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cagen/cli.h"

#include <algorithm>
#include <map>
#include <sstream>

#include "CLI11.hpp"
#include "cagen/adversarial.h"
#include "cagen/analysis.h"
#include "cagen/errors.h"
#include "cagen/io.h"
#include "cagen/oracles.h"
#include "cagen/rng.h"

namespace cagen::cli {

namespace {

namespace fs = std::filesystem;
using io::Json;

enum class FlagType { kU64, kString, kBool };

struct Flag {
  const char* name;  // without leading dashes
  FlagType type;
  const char* help;
};

std::string key_of(const char* name) {
  std::string k = name;
  std::replace(k.begin(), k.end(), '-', '_');
  return k;
}

[[noreturn]] void bad(const std::string& msg) { throw ConfigError(msg); }

// Merged settings: config file first, command-line flags on top.
class Settings {
 public:
  Json j = Json::object();
  fs::path base_dir = ".";

  bool has(const std::string& key) const { return j.contains(key) && !j.at(key).is_null(); }

  std::uint64_t u64(const std::string& key) const {
    if (!has(key)) bad("missing setting --" + dashed(key));
    const Json& v = j.at(key);
    if (!v.is_number_unsigned()) bad("setting --" + dashed(key) + " must be a non-negative integer");
    return v.get<std::uint64_t>();
  }
  std::uint64_t u64(const std::string& key, std::uint64_t fallback) const {
    return has(key) ? u64(key) : fallback;
  }
  std::string str(const std::string& key) const {
    if (!has(key)) bad("missing setting --" + dashed(key));
    const Json& v = j.at(key);
    if (v.is_string()) return v.get<std::string>();
    bad("setting --" + dashed(key) + " must be a string");
  }
  std::string str(const std::string& key, const std::string& fallback) const {
    return has(key) ? str(key) : fallback;
  }
  bool flag(const std::string& key) const {
    if (!has(key)) return false;
    const Json& v = j.at(key);
    if (!v.is_boolean()) bad("setting --" + dashed(key) + " must be true or false");
    return v.get<bool>();
  }

  static std::string dashed(std::string k) {
    std::replace(k.begin(), k.end(), '_', '-');
    return k;
  }
};

std::uint64_t parse_u64_flag(const std::string& name, const std::string& s) {
  if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos) {
    bad("--" + name + " expects a non-negative integer, got '" + s + "'");
  }
  try {
    return std::stoull(s);
  } catch (const std::exception&) {
    bad("--" + name + " value '" + s + "' is out of range");
  }
}

// Registers flags on a subcommand and merges them over the config file.
class FlagSet {
 public:
  FlagSet(CLI::App* app, std::vector<Flag> flags) : flags_(std::move(flags)) {
    for (const Flag& f : flags_) {
      const std::string opt = "--" + std::string(f.name);
      if (f.type == FlagType::kBool) {
        options_[f.name] = app->add_flag(opt, bools_[f.name], f.help);
      } else {
        options_[f.name] = app->add_option(opt, strings_[f.name], f.help);
      }
    }
    options_["config"] = app->add_option("--config", config_, "JSON settings file");
  }

  Settings merge() const {
    Settings s;
    if (!config_.empty()) {
      const fs::path p = config_;
      s.j = io::parse_json(io::read_file(p), "config '" + config_ + "'");
      if (!s.j.is_object()) bad("config '" + config_ + "' must be a JSON object");
      s.base_dir = p.has_parent_path() ? p.parent_path() : fs::path(".");
    }
    for (const Flag& f : flags_) {
      if (options_.at(f.name)->count() == 0) continue;
      const std::string key = key_of(f.name);
      switch (f.type) {
        case FlagType::kU64:
          s.j[key] = parse_u64_flag(f.name, strings_.at(f.name));
          break;
        case FlagType::kString:
          s.j[key] = strings_.at(f.name);
          break;
        case FlagType::kBool:
          s.j[key] = bools_.at(f.name);
          break;
      }
    }
    return s;
  }

 private:
  std::vector<Flag> flags_;
  std::map<std::string, CLI::Option*> options_;
  std::map<std::string, std::string> strings_;
  std::map<std::string, bool> bools_;
  std::string config_;
};

const std::vector<Flag> kGeneratorFlags = {
    {"generator-file", FlagType::kString, "generator JSON file"},
    {"type", FlagType::kString,
     "iterative | counter_mode | counter_assisted | bad_mode | t_step"},
    {"n", FlagType::kU64, "state space size"},
    {"f", FlagType::kString,
     "f as shorthand (random, constant:C, negation, identity, affine:A:B, mixer:KEY)"},
    {"table", FlagType::kString, "f from a function table file (JSON or FTBL)"},
    {"g", FlagType::kString, "output function shorthand (identity, truncate:B)"},
    {"op", FlagType::kString, "add_mod | sub_mod | xor"},
    {"s", FlagType::kU64, "counter-mode constant"},
    {"counter-start", FlagType::kU64, "counter offset"},
    {"variant", FlagType::kString, "bad_mode variant"},
    {"t", FlagType::kU64, "t-step block size"},
    {"dense", FlagType::kBool, "dense t-step mode"},
    {"rng-seed", FlagType::kU64, "seed for every random choice"},
};

std::vector<Flag> with(std::vector<Flag> base, std::initializer_list<Flag> extra) {
  base.insert(base.end(), extra.begin(), extra.end());
  return base;
}

io::ParseContext context(const Settings& s, const fs::path& base) {
  io::ParseContext ctx;
  ctx.base_dir = base;
  ctx.rng_seed = s.u64("rng_seed", 0);
  return ctx;
}

io::AnyGenerator build_generator(const Settings& s) {
  if (s.has("generator")) {
    io::ParseContext ctx = context(s, s.base_dir);
    return io::generator_from_json(s.j.at("generator"), ctx);
  }
  if (s.has("generator_file")) {
    const fs::path p = s.base_dir / s.str("generator_file");
    io::ParseContext ctx = context(s, p.has_parent_path() ? p.parent_path() : fs::path("."));
    return io::generator_from_json(io::parse_json(io::read_file(p), "'" + p.string() + "'"),
                                   ctx);
  }
  if (!s.has("type")) bad("no generator given: use --type, --generator-file or --config");
  // Assemble a generator document from the flat settings.
  Json g{{"type", s.str("type")}};
  if (s.has("n")) g["n"] = s.u64("n");
  if (s.has("table")) {
    g["f_file"] = s.str("table");
  } else if (s.has("f")) {
    g["f"] = s.j.at("f");
  }
  if (s.has("g")) g["g"] = s.j.at("g");
  if (s.has("op")) g["op"] = s.j.at("op");
  for (const char* k : {"s", "counter_start", "t"}) {
    if (s.has(k)) g[k] = s.u64(k);
  }
  if (s.has("variant")) g["variant"] = s.str("variant");
  if (s.has("dense")) g["dense"] = s.flag("dense");
  // Structured parts only a config file can carry.
  for (const char* k : {"inner", "assist", "output"}) {
    if (s.has(k)) g[k] = s.j.at(k);
  }
  io::ParseContext ctx = context(s, s.base_dir);
  return io::generator_from_json(g, ctx);
}

std::uint64_t space_size(const io::AnyGenerator& g) {
  return std::visit(
      [](const auto& spec) -> std::uint64_t {
        if constexpr (std::is_same_v<std::decay_t<decltype(spec)>, GeneratorSpec>) {
          return spec.space().size();
        } else {
          return spec.f.size();
        }
      },
      g);
}

state_t default_seed(const GeneratorSpec& spec) {
  if (const auto* m = std::get_if<CounterMode>(&spec.node())) {
    return m->op.apply_unchecked(spec.space(), m->s, 0);
  }
  return 0;
}

void emit(const Settings& s, std::ostream& out, const std::string& bytes) {
  if (s.has("output")) {
    io::write_file(s.str("output"), bytes);
  } else {
    out << bytes;
  }
}

std::string join_csv(const std::vector<state_t>& v) {
  std::string line;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) line += ',';
    line += std::to_string(v[i]);
  }
  return line + "\n";
}

// ---- generate ----

int cmd_generate(const Settings& s, std::ostream& out) {
  const io::AnyGenerator gen = build_generator(s);
  const std::uint64_t length = s.u64("length", 16);
  const std::string format = s.str("format", "csv");
  if (format != "csv" && format != "json" && format != "raw") {
    bad("--format must be csv, json or raw");
  }
  std::vector<state_t> values;
  state_t seed = 0;
  if (const auto* spec = std::get_if<GeneratorSpec>(&gen)) {
    seed = s.u64("seed", default_seed(*spec));
    const std::string observe = s.str("observe", "outputs");
    if (observe == "outputs") {
      values = run_outputs(*spec, seed, length);
    } else if (observe == "states") {
      values = run_states(*spec, seed, length);
    } else {
      bad("--observe must be states or outputs");
    }
  } else {
    const auto& tspec = std::get<TStepSpec>(gen);
    seed = s.u64("seed", 0);
    for (const Tuple& tu : run_tuple_outputs(tspec, seed, length)) {
      values.insert(values.end(), tu.begin(), tu.end());
    }
  }
  std::string bytes;
  if (format == "csv") {
    bytes = join_csv(values);
  } else if (format == "json") {
    bytes = io::dump(Json{{"seed", seed}, {"length", length}, {"outputs", values}});
  } else {
    bytes.reserve(values.size() * 8);
    for (state_t v : values) {
      for (int b = 0; b < 8; ++b) bytes.push_back(static_cast<char>((v >> (8 * b)) & 0xff));
    }
  }
  emit(s, out, bytes);
  return kExitOk;
}

// ---- diversity ----

std::vector<state_t> read_sequence(const fs::path& p) {
  const std::string text = io::read_file(p);
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && (text[first] == '[' || text[first] == '{')) {
    Json j = io::parse_json(text, "'" + p.string() + "'");
    if (j.is_object()) {
      if (j.contains("outputs")) {
        j = j.at("outputs");
      } else if (j.contains("sequence")) {
        j = j.at("sequence");
      } else {
        bad("sequence file needs a 'sequence' or 'outputs' array");
      }
    }
    if (!j.is_array()) bad("sequence must be a JSON array");
    std::vector<state_t> seq;
    for (const Json& v : j) {
      if (!v.is_number_unsigned()) bad("sequence entries must be non-negative integers");
      seq.push_back(v.get<std::uint64_t>());
    }
    return seq;
  }
  std::vector<state_t> seq;
  std::string token;
  for (char c : text) {
    if (c == ',' || c == '\n' || c == ' ' || c == '\r' || c == '\t') {
      if (!token.empty()) seq.push_back(parse_u64_flag("input", token));
      token.clear();
    } else {
      token.push_back(c);
    }
  }
  if (!token.empty()) seq.push_back(parse_u64_flag("input", token));
  return seq;
}

std::optional<io::CurveBounds> bounds_for(const GeneratorSpec& spec, const DiversityCurve& c,
                                          Observe observe) {
  const auto* ca = std::get_if<CounterAssisted>(&spec.node());
  if (!ca || observe != Observe::kStates) return std::nullopt;
  const auto im = image_size(ca->f);
  if (!im) return std::nullopt;
  io::CurveBounds b;
  for (std::uint64_t k = 1; k <= c.kmax; ++k) {
    const TheoremBounds t = theorem_bounds(k, spec.space().size(), *im);
    b.gamma.push_back(t.gamma);
    b.eta.push_back(t.eta);
  }
  return b;
}

int cmd_diversity(const Settings& s, std::ostream& out) {
  const std::string format = s.str("format", "json");
  if (format != "json" && format != "csv") bad("--format must be json or csv");
  std::string mode = s.str("mode", s.has("input") ? "sequence" : "generator");
  if (mode != "sequence" && mode != "generator") bad("--mode must be sequence or generator");

  DiversityCurve curve;
  std::optional<io::CurveBounds> bounds;
  if (mode == "sequence") {
    std::vector<state_t> seq;
    if (s.has("input")) {
      seq = read_sequence(s.base_dir / s.str("input"));
    } else {
      const io::AnyGenerator gen = build_generator(s);
      const auto* spec = std::get_if<GeneratorSpec>(&gen);
      if (!spec) bad("sequence mode needs a single-step generator or --input");
      seq = run_states(*spec, s.u64("seed", default_seed(*spec)), s.u64("length"));
    }
    if (seq.empty()) bad("sequence is empty");
    curve = sequence_diversity(seq, s.u64("kmax", seq.size()));
  } else {
    const io::AnyGenerator gen = build_generator(s);
    const std::uint64_t n = space_size(gen);
    DiversityOptions opts;
    opts.guard = s.u64("guard", kDefaultBruteForceGuard);
    const std::string observe = s.str("observe", "states");
    if (observe != "states" && observe != "outputs") bad("--observe must be states or outputs");
    opts.observe = observe == "states" ? Observe::kStates : Observe::kOutputs;
    opts.include_seed_position = s.flag("include_seed");
    opts.sweep_inner_seeds = s.flag("sweep_inner_seeds");
    if (s.has("cap")) opts.cap = s.u64("cap");
    if (s.has("sampled")) {
      const std::uint64_t count = s.u64("sampled");
      if (count == 0) bad("--sampled needs at least one seed");
      Rng rng(s.u64("rng_seed", 0), 7);
      std::vector<state_t> seeds;
      for (std::uint64_t i = 0; i < count; ++i) seeds.push_back(rng.below(n));
      opts.seeds = std::move(seeds);
    }
    const std::uint64_t kmax = s.u64("kmax", n);
    if (const auto* spec = std::get_if<GeneratorSpec>(&gen)) {
      curve = generator_diversity(*spec, kmax, opts);
      bounds = bounds_for(*spec, curve, opts.observe);
    } else {
      curve = tstep_diversity(std::get<TStepSpec>(gen), kmax, opts);
    }
  }
  emit(s, out, format == "json" ? io::dump(io::curve_to_json(curve, bounds))
                                : io::curve_to_csv(curve));
  return kExitOk;
}

// ---- cycle ----

int cmd_cycle(const Settings& s, std::ostream& out) {
  io::ParseContext ctx = context(s, s.base_dir);
  FunctionTable f = FunctionTable::constant(StateSpace(1), 0);
  if (s.has("table")) {
    f = io::load_function_table(s.base_dir / s.str("table"), ctx);
  } else if (s.has("f")) {
    Json j = s.j.at("f");
    f = io::function_table_from_json(j, ctx, s.has("n") ? std::optional(s.u64("n")) : std::nullopt);
  } else {
    bad("cycle needs --table FILE or --f with --n");
  }
  const CycleReport r = cycle_structure(f, s.u64("guard", kDefaultSweepGuard));
  const std::string seeds = s.str("seeds", "auto");
  bool include;
  if (seeds == "auto") {
    include = f.size() <= 4096;
  } else if (seeds == "always" || seeds == "never") {
    include = seeds == "always";
  } else {
    bad("--seeds must be auto, always or never");
  }
  emit(s, out, io::dump(io::cycle_report_to_json(r, include)));
  return kExitOk;
}

// ---- adversary ----

int cmd_adversary(const Settings& s, std::ostream& out) {
  const std::uint64_t n = s.u64("n");
  const MeshedVariant variant = meshed_variant_from_name(s.str("variant", "square_add_mod"));
  MeshedOptions opts;
  opts.x = s.u64("x", 0);
  opts.y = s.u64("y", 0);
  opts.alpha = s.u64("alpha", 0);
  opts.beta = s.u64("beta", 0);
  if (s.flag("random_fill")) opts.random_fill_seed = stream_seed(s.u64("rng_seed", 0), 11);
  const MeshedConstruction c = build_meshed(n, variant, opts);
  const fs::path prefix = s.str("out");
  const std::string table_name = prefix.filename().string() + ".json";
  Json meta = io::meshed_metadata_to_json(c, table_name);
  if (opts.random_fill_seed) meta["random_fill_seed"] = *opts.random_fill_seed;
  io::write_file(prefix.string() + ".json", io::dump(io::function_table_to_json(c.f)));
  io::write_file(prefix.string() + ".bin", io::function_table_to_binary(c.f));
  io::write_file(prefix.string() + ".meta.json", io::dump(meta));
  out << io::dump(meta);
  return kExitOk;
}

// ---- distinguish ----

int cmd_distinguish(const Settings& s, std::ostream& out) {
  const ExperimentReport r =
      distinguishing_experiment(s.u64("n", 65536), s.u64("k", 64), s.u64("trials", 10000),
                                s.u64("rng_seed", 0));
  emit(s, out, io::dump(io::experiment_to_json(r)));
  return kExitOk;
}

// ---- validate ----

int cmd_validate(const std::string& file, bool emit_canonical, std::uint64_t rng_seed,
                 std::ostream& out) {
  const fs::path path = file;
  const fs::path base = path.has_parent_path() ? path.parent_path() : fs::path(".");
  const std::string bytes = io::read_file(path);
  io::ParseContext ctx;
  ctx.base_dir = base;
  ctx.rng_seed = rng_seed;
  if (io::is_binary_table(bytes)) {
    const FunctionTable f = io::function_table_from_binary(bytes);
    if (emit_canonical) {
      out << io::function_table_to_binary(f);
    } else {
      out << "ok function_table_binary n=" << f.size() << "\n";
    }
    return kExitOk;
  }
  const Json j = io::parse_json(bytes, "'" + file + "'");
  const io::DocumentKind kind = io::detect_document_kind(j);
  Json canonical;
  switch (kind) {
    case io::DocumentKind::kFunctionTable:
      canonical = io::function_table_to_json(io::function_table_from_json(j, ctx));
      break;
    case io::DocumentKind::kGenerator:
      canonical = io::any_generator_to_json(io::generator_from_json(j, ctx));
      break;
    case io::DocumentKind::kRunConfig: {
      Settings s;
      s.j = j;
      if (!s.has("rng_seed")) s.j["rng_seed"] = rng_seed;
      s.base_dir = base;
      build_generator(s);
      canonical = j;
      break;
    }
    case io::DocumentKind::kCurve: {
      std::optional<io::CurveBounds> bounds;
      const DiversityCurve c = io::curve_from_json(j, &bounds);
      if (auto err = c.check_chain(std::numeric_limits<std::uint64_t>::max())) {
        bad("curve violates the monotonicity chain: " + *err);
      }
      canonical = io::curve_to_json(c, bounds);
      break;
    }
    case io::DocumentKind::kCycleReport: {
      const CycleReport r = io::cycle_report_from_json(j);
      canonical = io::cycle_report_to_json(r, j.contains("seeds"));
      break;
    }
    case io::DocumentKind::kExperiment:
      canonical = io::experiment_to_json(io::experiment_from_json(j));
      break;
    case io::DocumentKind::kMeshedMetadata: {
      MeshedOptions opts;
      opts.x = io::get_u64(j, "x");
      opts.y = io::get_u64(j, "y");
      opts.alpha = io::get_u64(j, "alpha");
      opts.beta = io::get_u64(j, "beta");
      if (j.contains("random_fill_seed")) opts.random_fill_seed = io::get_u64(j, "random_fill_seed");
      if (!j.contains("variant") || !j.at("variant").is_string()) bad("missing field 'variant'");
      const MeshedConstruction c = build_meshed(
          io::get_u64(j, "n"), meshed_variant_from_name(j.at("variant").get<std::string>()), opts);
      if (!j.contains("table_file") || !j.at("table_file").is_string()) {
        bad("missing field 'table_file'");
      }
      const std::string table_file = j.at("table_file").get<std::string>();
      canonical = io::meshed_metadata_to_json(c, table_file);
      if (opts.random_fill_seed) canonical["random_fill_seed"] = *opts.random_fill_seed;
      const FunctionTable stored = io::load_function_table(base / table_file, ctx);
      if (stored.tabulate() != c.f.tabulate()) {
        bad("table '" + table_file + "' does not match the construction");
      }
      if (canonical != j) bad("metadata does not match the construction it names");
      break;
    }
  }
  if (emit_canonical) {
    out << io::dump(canonical);
  } else {
    out << "ok " << io::document_kind_name(kind) << "\n";
  }
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"cagen: counter-assisted generator toolkit"};
  app.require_subcommand(1);

  auto* generate = app.add_subcommand("generate", "emit a generator's output stream");
  FlagSet gen_flags(generate, with(kGeneratorFlags,
                                   {{"seed", FlagType::kU64, "seed x_0"},
                                    {"length", FlagType::kU64, "number of outputs"},
                                    {"format", FlagType::kString, "csv | json | raw"},
                                    {"observe", FlagType::kString, "outputs | states"},
                                    {"output", FlagType::kString, "write to file"}}));

  auto* diversity = app.add_subcommand("diversity", "diversity curve of a sequence or generator");
  FlagSet div_flags(
      diversity,
      with(kGeneratorFlags,
           {{"mode", FlagType::kString, "generator | sequence"},
            {"input", FlagType::kString, "sequence file (CSV or JSON array)"},
            {"seed", FlagType::kU64, "seed for sequence mode"},
            {"length", FlagType::kU64, "run length for sequence mode"},
            {"kmax", FlagType::kU64, "largest window"},
            {"guard", FlagType::kU64, "largest n swept exhaustively"},
            {"sampled", FlagType::kU64, "sample this many seeds (upper bound)"},
            {"cap", FlagType::kU64, "compute min(D(k), cap)"},
            {"observe", FlagType::kString, "states | outputs"},
            {"include-seed", FlagType::kBool, "count windows starting at x_0"},
            {"sweep-inner-seeds", FlagType::kBool, "minimize over nested seeds too"},
            {"format", FlagType::kString, "json | csv"},
            {"output", FlagType::kString, "write to file"}}));

  auto* cycle = app.add_subcommand("cycle", "functional-graph cycle report of f");
  FlagSet cyc_flags(cycle, {{"table", FlagType::kString, "function table file"},
                            {"f", FlagType::kString, "f shorthand"},
                            {"n", FlagType::kU64, "state space size for --f"},
                            {"guard", FlagType::kU64, "largest n"},
                            {"seeds", FlagType::kString, "auto | always | never"},
                            {"rng-seed", FlagType::kU64, "seed for --f random"},
                            {"output", FlagType::kString, "write to file"}});

  auto* adversary = app.add_subcommand("adversary", "build a meshed worst-case f");
  FlagSet adv_flags(adversary,
                    {{"n", FlagType::kU64, "state space size"},
                     {"variant", FlagType::kString,
                      "square_add_mod | power_of_two_add_mod | general_floor_add_mod | "
                      "power_of_two_xor | custom_add_mod"},
                     {"x", FlagType::kU64, "x parameter"},
                     {"y", FlagType::kU64, "y parameter"},
                     {"alpha", FlagType::kU64, "alpha for custom_add_mod"},
                     {"beta", FlagType::kU64, "beta for custom_add_mod"},
                     {"random-fill", FlagType::kBool, "random values off the mesh"},
                     {"rng-seed", FlagType::kU64, "seed for --random-fill"},
                     {"out", FlagType::kString, "output prefix"}});

  auto* distinguish = app.add_subcommand("distinguish", "oracle birthday experiment");
  FlagSet dis_flags(distinguish, {{"n", FlagType::kU64, "state space size"},
                                  {"k", FlagType::kU64, "transcript length"},
                                  {"trials", FlagType::kU64, "trials per oracle"},
                                  {"rng-seed", FlagType::kU64, "master seed"},
                                  {"output", FlagType::kString, "write to file"}});

  auto* validate = app.add_subcommand("validate", "re-parse a file written by cagen");
  std::string validate_file;
  bool validate_emit = false;
  std::string validate_rng = "0";
  validate->add_option("file", validate_file, "file to check")->required();
  validate->add_flag("--emit", validate_emit, "print the canonical re-serialization");
  validate->add_option("--rng-seed", validate_rng, "seed for 'random' tables");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    std::ostringstream help;
    if (e.get_exit_code() == 0) {
      out << app.help();
      return kExitOk;
    }
    err << "error: " << e.what() << "\n";
    return kExitConfig;
  }

  try {
    if (generate->parsed()) return cmd_generate(gen_flags.merge(), out);
    if (diversity->parsed()) return cmd_diversity(div_flags.merge(), out);
    if (cycle->parsed()) return cmd_cycle(cyc_flags.merge(), out);
    if (adversary->parsed()) return cmd_adversary(adv_flags.merge(), out);
    if (distinguish->parsed()) return cmd_distinguish(dis_flags.merge(), out);
    if (validate->parsed()) {
      return cmd_validate(validate_file, validate_emit,
                          parse_u64_flag("rng-seed", validate_rng), out);
    }
  } catch (const GuardExceeded& e) {
    err << "error: " << e.what() << "\n";
    return kExitRuntime;
  } catch (const ExhaustedAssist& e) {
    err << "error: " << e.what() << "\n";
    return kExitRuntime;
  } catch (const ConfigError& e) {
    err << "error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const ConstructionError& e) {
    err << "error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const InvalidOperation& e) {
    err << "error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitRuntime;
  }
  return kExitConfig;
}

}  // namespace cagen::cli
