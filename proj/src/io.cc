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

#include "cagen/io.h"

#include <fstream>
#include <sstream>

#include "cagen/errors.h"
#include "cagen/rng.h"

namespace cagen::io {

namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

[[noreturn]] void bad(const std::string& msg) { throw ConfigError(msg); }

const Json& require(const Json& j, const char* field) {
  if (!j.is_object()) bad("expected a JSON object holding field '" + std::string(field) + "'");
  auto it = j.find(field);
  if (it == j.end()) bad("missing field '" + std::string(field) + "'");
  return *it;
}

std::uint64_t as_u64(const Json& v, const std::string& what) {
  if (!v.is_number_unsigned()) bad("field '" + what + "' must be a non-negative integer");
  return v.get<std::uint64_t>();
}

std::string get_string(const Json& j, const char* field) {
  const Json& v = require(j, field);
  if (!v.is_string()) bad("field '" + std::string(field) + "' must be a string");
  return v.get<std::string>();
}

bool get_bool_or(const Json& j, const char* field, bool fallback) {
  auto it = j.find(field);
  if (it == j.end()) return fallback;
  if (!it->is_boolean()) bad("field '" + std::string(field) + "' must be a boolean");
  return it->get<bool>();
}

std::vector<state_t> get_u64_array(const Json& j, const char* field) {
  const Json& v = require(j, field);
  if (!v.is_array()) bad("field '" + std::string(field) + "' must be an array");
  std::vector<state_t> out;
  out.reserve(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (!v[i].is_number_unsigned()) {
      bad("field '" + std::string(field) + "' entry " + std::to_string(i) +
          " must be a non-negative integer");
    }
    out.push_back(v[i].get<std::uint64_t>());
  }
  return out;
}

void check_entries(const std::vector<state_t>& values, std::uint64_t bound,
                   const char* field) {
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (values[i] >= bound) {
      bad("field '" + std::string(field) + "' entry " + std::to_string(i) + " (value " +
          std::to_string(values[i]) + ") outside {0.." + std::to_string(bound - 1) + "}");
    }
  }
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> parts;
  std::string cur;
  std::istringstream is(s);
  while (std::getline(is, cur, sep)) parts.push_back(cur);
  if (!s.empty() && s.back() == sep) parts.emplace_back();
  return parts;
}

std::uint64_t parse_number(const std::string& s, const std::string& what) {
  if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos) {
    bad(what + ": '" + s + "' is not a non-negative integer");
  }
  try {
    return std::stoull(s);
  } catch (const std::exception&) {
    bad(what + ": '" + s + "' is out of range");
  }
}

StateSpace space_of(std::uint64_t n) {
  try {
    return StateSpace(n);
  } catch (const DomainError& e) {
    bad(std::string("field 'n': ") + e.what());
  }
}

FunctionTable shorthand_table(const std::string& s, ParseContext& ctx,
                              std::optional<std::uint64_t> n) {
  if (!n) bad("function shorthand '" + s + "' needs field 'n'");
  const StateSpace space = space_of(*n);
  const auto parts = split(s, ':');
  const std::string& kind = parts[0];
  if (kind == "negation" && parts.size() == 1) return FunctionTable::negation(space);
  if (kind == "identity" && parts.size() == 1) return FunctionTable::identity(space);
  if (kind == "constant" && parts.size() == 2) {
    const state_t c = parse_number(parts[1], "constant");
    if (c >= *n) bad("constant " + std::to_string(c) + " outside {0.." + std::to_string(*n - 1) + "}");
    return FunctionTable::constant(space, c);
  }
  if (kind == "affine" && parts.size() == 3) {
    return FunctionTable::affine(space, parse_number(parts[1], "affine a") % *n,
                                 parse_number(parts[2], "affine b") % *n);
  }
  if (kind == "mixer" && (parts.size() == 2 || parts.size() == 3)) {
    const unsigned rounds =
        parts.size() == 3 ? static_cast<unsigned>(parse_number(parts[2], "mixer rounds")) : 4;
    return FunctionTable::keyed_mixer(space, KeyedMixer(parts[1], rounds));
  }
  if (kind == "random" && parts.size() == 1) {
    if (!ctx.rng_seed) bad("function 'random' needs an rng seed");
    if (*n > kDefaultSweepGuard) bad("function 'random' needs n <= 2^26");
    Rng rng(*ctx.rng_seed, 1000 + ctx.random_streams++);
    return FunctionTable::table(space, rng.table(*n));
  }
  bad("unknown function shorthand '" + s + "'");
}

}  // namespace

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) bad("cannot read file '" + path.string() + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::filesystem::path& path, const std::string& bytes) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot write file '" + path.string() + "'");
  out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
  if (!out) throw std::runtime_error("write failed for '" + path.string() + "'");
}

Json parse_json(const std::string& text, const std::string& what) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    bad(what + " is not valid JSON: " + e.what());
  }
}

std::uint64_t get_u64(const Json& j, const char* field) {
  return as_u64(require(j, field), field);
}

std::uint64_t get_u64_or(const Json& j, const char* field, std::uint64_t fallback) {
  if (!j.is_object() || !j.contains(field)) return fallback;
  return as_u64(j.at(field), field);
}

// ---- function tables ----

Json function_table_to_json(const FunctionTable& f) {
  const std::uint64_t n = f.size();
  switch (f.backend()) {
    case FunctionTable::Backend::kExplicit: {
      const auto v = f.explicit_values();
      return Json{{"n", n}, {"table", std::vector<state_t>(v.begin(), v.end())}};
    }
    case FunctionTable::Backend::kConstant:
      return Json{{"n", n}, {"kind", "constant"}, {"value", f.constant_value()}};
    case FunctionTable::Backend::kNegation:
      return Json{{"n", n}, {"kind", "negation"}};
    case FunctionTable::Backend::kAffine: {
      const auto [a, b] = f.affine_coefficients();
      return Json{{"n", n}, {"kind", "affine"}, {"a", a}, {"b", b}};
    }
    case FunctionTable::Backend::kKeyedMixer:
      return Json{{"n", n},
                  {"kind", "keyed_mixer"},
                  {"key", f.mixer().key()},
                  {"rounds", f.mixer().rounds()}};
  }
  return Json();
}

FunctionTable function_table_from_json(const Json& j, ParseContext& ctx,
                                       std::optional<std::uint64_t> n_hint) {
  if (j.is_string()) return shorthand_table(j.get<std::string>(), ctx, n_hint);
  if (!j.is_object()) bad("function table must be an object or a shorthand string");
  const std::uint64_t n = get_u64(j, "n");
  if (n_hint && *n_hint != n) {
    bad("field 'n' is " + std::to_string(n) + " but the generator has n = " +
        std::to_string(*n_hint));
  }
  const StateSpace space = space_of(n);
  if (j.contains("table")) {
    auto values = get_u64_array(j, "table");
    if (values.size() != n) {
      bad("field 'table' has " + std::to_string(values.size()) +
          " entries, expected n = " + std::to_string(n));
    }
    check_entries(values, n, "table");
    return FunctionTable::table(space, std::move(values));
  }
  const std::string kind = get_string(j, "kind");
  if (kind == "constant") {
    const state_t c = get_u64(j, "value");
    if (c >= n) bad("field 'value' outside {0.." + std::to_string(n - 1) + "}");
    return FunctionTable::constant(space, c);
  }
  if (kind == "negation") return FunctionTable::negation(space);
  if (kind == "identity") return FunctionTable::identity(space);
  if (kind == "affine") {
    const state_t a = get_u64(j, "a"), b = get_u64(j, "b");
    if (a >= n || b >= n) bad("fields 'a' and 'b' must lie in {0.." + std::to_string(n - 1) + "}");
    return FunctionTable::affine(space, a, b);
  }
  if (kind == "keyed_mixer") {
    return FunctionTable::keyed_mixer(
        space, KeyedMixer(get_string(j, "key"), static_cast<unsigned>(get_u64(j, "rounds"))));
  }
  if (kind == "random") return shorthand_table("random", ctx, n);
  bad("field 'kind': unknown function kind '" + kind + "'");
}

std::string function_table_to_binary(const FunctionTable& f) {
  const std::vector<state_t> values = f.tabulate();
  std::string out = "FTBL";
  auto put = [&](std::uint64_t v) {
    for (int b = 0; b < 8; ++b) out.push_back(static_cast<char>((v >> (8 * b)) & 0xff));
  };
  put(values.size());
  for (state_t v : values) put(v);
  return out;
}

bool is_binary_table(const std::string& bytes) {
  return bytes.size() >= 4 && bytes.compare(0, 4, "FTBL") == 0;
}

FunctionTable function_table_from_binary(const std::string& bytes) {
  if (!is_binary_table(bytes)) bad("binary table must start with 'FTBL'");
  auto get = [&](std::size_t offset) {
    std::uint64_t v = 0;
    for (int b = 7; b >= 0; --b) {
      v = (v << 8) | static_cast<unsigned char>(bytes[offset + b]);
    }
    return v;
  };
  if (bytes.size() < 12) bad("binary table is truncated before n");
  const std::uint64_t n = get(4);
  if (n == 0 || n > kDefaultSweepGuard) bad("binary table n = " + std::to_string(n) + " unsupported");
  if (bytes.size() != 12 + 8 * n) {
    bad("binary table has " + std::to_string(bytes.size()) + " bytes, expected " +
        std::to_string(12 + 8 * n) + " for n = " + std::to_string(n));
  }
  std::vector<state_t> values(n);
  for (std::uint64_t i = 0; i < n; ++i) values[i] = get(12 + 8 * i);
  check_entries(values, n, "table");
  return FunctionTable::table(StateSpace(n), std::move(values));
}

FunctionTable load_function_table(const std::filesystem::path& path,
                                  ParseContext& ctx) {
  const std::string bytes = read_file(path);
  if (is_binary_table(bytes)) return function_table_from_binary(bytes);
  return function_table_from_json(parse_json(bytes, "'" + path.string() + "'"), ctx);
}

// ---- ops and output functions ----

Json op_to_json(const LatinOp& op) {
  if (op.kind() != LatinOp::Kind::kConjugated) return op.name();
  auto table = [](const PermutationTable& p) {
    return std::vector<state_t>(p.values().begin(), p.values().end());
  };
  return Json{{"kind", "conjugated"},
              {"base", op_to_json(op.base())},
              {"pre_left", table(op.pre_left())},
              {"pre_right", table(op.pre_right())},
              {"post", table(op.post())}};
}

LatinOp op_from_json(const Json& j) {
  if (j.is_string()) {
    const std::string s = j.get<std::string>();
    if (s == "add_mod") return LatinOp::add_mod();
    if (s == "sub_mod") return LatinOp::sub_mod();
    if (s == "xor") return LatinOp::xor_op();
    bad("field 'op': unknown operation '" + s + "'");
  }
  if (!j.is_object() || get_string(j, "kind") != "conjugated") {
    bad("field 'op' must be add_mod, sub_mod, xor or a conjugated object");
  }
  auto perm = [&](const char* field) {
    auto values = get_u64_array(j, field);
    check_entries(values, values.size(), field);
    return PermutationTable(std::move(values));
  };
  return LatinOp::conjugated(op_from_json(require(j, "base")), perm("pre_left"),
                             perm("pre_right"), perm("post"));
}

Json output_to_json(const OutputFunction& g) {
  switch (g.backend()) {
    case OutputFunction::Backend::kIdentity:
      return Json{{"kind", "identity"}};
    case OutputFunction::Backend::kTruncate:
      return Json{{"kind", "truncate"}, {"bits", g.truncate_bits()}};
    case OutputFunction::Backend::kTable: {
      const auto v = g.table_values();
      return Json{{"kind", "table"},
                  {"table", std::vector<state_t>(v.begin(), v.end())},
                  {"output_size", g.output_size()}};
    }
    case OutputFunction::Backend::kMapped:
      return Json{{"kind", "mapped"}, {"f", function_table_to_json(g.mapped_function())}};
    case OutputFunction::Backend::kKeyedMixer:
      return Json{{"kind", "keyed_mixer"},
                  {"key", g.mixer().key()},
                  {"rounds", g.mixer().rounds()},
                  {"output_size", g.output_size()}};
  }
  return Json();
}

OutputFunction output_from_json(const Json& j, const StateSpace& space,
                                ParseContext& ctx) {
  if (j.is_string()) {
    const auto parts = split(j.get<std::string>(), ':');
    if (parts[0] == "identity" && parts.size() == 1) return OutputFunction::identity(space);
    if (parts[0] == "truncate" && parts.size() == 2) {
      return OutputFunction::truncate(
          space, static_cast<unsigned>(parse_number(parts[1], "truncate bits")));
    }
    if (parts[0] == "mixer" && parts.size() == 3) {
      return OutputFunction::keyed_mixer(space, KeyedMixer(parts[1], 4),
                                         parse_number(parts[2], "mixer output size"));
    }
    bad("field 'g': unknown output shorthand '" + j.get<std::string>() + "'");
  }
  const std::string kind = get_string(j, "kind");
  if (kind == "identity") return OutputFunction::identity(space);
  if (kind == "truncate") {
    return OutputFunction::truncate(space, static_cast<unsigned>(get_u64(j, "bits")));
  }
  if (kind == "table") {
    const std::uint64_t m = get_u64(j, "output_size");
    auto values = get_u64_array(j, "table");
    if (values.size() != space.size()) {
      bad("field 'table' has " + std::to_string(values.size()) +
          " entries, expected n = " + std::to_string(space.size()));
    }
    check_entries(values, m, "table");
    return OutputFunction::table(space, std::move(values), m);
  }
  if (kind == "mapped") {
    return OutputFunction::mapped(function_table_from_json(require(j, "f"), ctx, space.size()));
  }
  if (kind == "keyed_mixer") {
    return OutputFunction::keyed_mixer(
        space, KeyedMixer(get_string(j, "key"), static_cast<unsigned>(get_u64(j, "rounds"))),
        get_u64(j, "output_size"));
  }
  bad("field 'kind': unknown output function kind '" + kind + "'");
}

// ---- generators ----

Json generator_to_json(const GeneratorSpec& spec) {
  Json j;
  j["n"] = spec.space().size();
  std::visit(
      Overloaded{
          [&](const Iterative& m) {
            j["type"] = "iterative";
            j["f"] = function_table_to_json(m.f);
            j["g"] = output_to_json(m.g);
          },
          [&](const CounterMode& m) {
            j["type"] = "counter_mode";
            j["g"] = output_to_json(m.g);
            j["op"] = op_to_json(m.op);
            j["s"] = m.s;
          },
          [&](const CounterAssisted& m) {
            j["type"] = "counter_assisted";
            j["f"] = function_table_to_json(m.f);
            j["g"] = output_to_json(m.g);
            j["op"] = op_to_json(m.op);
            j["counter_start"] = m.counter_start;
          },
          [&](const SequenceAssisted& m) {
            j["type"] = "sequence_assisted";
            j["f"] = function_table_to_json(m.f);
            j["g"] = output_to_json(m.g);
            j["op"] = op_to_json(m.op);
            if (const auto* v = std::get_if<std::vector<state_t>>(&m.assist)) {
              j["assist"] = *v;
            } else {
              const auto& na = std::get<NestedAssist>(m.assist);
              j["assist"] = Json{{"generator", generator_to_json(*na.generator)},
                                 {"seed", na.seed}};
            }
          },
          [&](const Cascade& m) {
            j["type"] = "cascade";
            j["f"] = function_table_to_json(m.f);
            j["g"] = output_to_json(m.g);
            j["op"] = op_to_json(m.op);
            j["inner"] = Json{{"generator", generator_to_json(*m.inner.generator)},
                              {"seed", m.inner.seed}};
          },
          [&](const BadMode& m) {
            j["type"] = "bad_mode";
            j["variant"] = std::string(bad_variant_name(m.variant));
            j["f"] = function_table_to_json(m.f);
            j["g"] = output_to_json(m.g);
          },
      },
      spec.node());
  return j;
}

namespace {

Json tuple_output_to_json(const TupleOutput& out) {
  return std::visit(
      Overloaded{
          [](const BlockwiseIdentity&) { return Json{{"kind", "identity"}}; },
          [](const Feistel3& o) {
            return Json{{"kind", "feistel3"},
                        {"g1", output_to_json(o.g1)},
                        {"g2", output_to_json(o.g2)},
                        {"g3", output_to_json(o.g3)},
                        {"op", op_to_json(o.op)}};
          },
          [](const Lucks& o) {
            std::string bits;
            for (unsigned i = 0; i < 2 * o.h.width() - 1; ++i) bits.push_back(o.h.bit(i) ? '1' : '0');
            return Json{{"kind", "lucks"},
                        {"g", output_to_json(o.g)},
                        {"h", Json{{"width", o.h.width()}, {"key", bits}}},
                        {"op", op_to_json(o.op)}};
          },
          [](const CustomTupleTable& o) {
            return Json{{"kind", "custom"},
                        {"entries", o.entries},
                        {"output_size", o.output_size}};
          },
      },
      out);
}

TupleOutput tuple_output_from_json(const Json& j, const StateSpace& space,
                                   ParseContext& ctx) {
  const std::string kind = j.is_string() ? j.get<std::string>() : get_string(j, "kind");
  if (kind == "identity") return BlockwiseIdentity{};
  const LatinOp op = j.contains("op") ? op_from_json(j.at("op")) : LatinOp::xor_op();
  if (kind == "feistel3") {
    return Feistel3{output_from_json(require(j, "g1"), space, ctx),
                    output_from_json(require(j, "g2"), space, ctx),
                    output_from_json(require(j, "g3"), space, ctx), op};
  }
  if (kind == "lucks") {
    const Json& h = require(j, "h");
    const unsigned w = static_cast<unsigned>(get_u64(h, "width"));
    const std::string key = get_string(h, "key");
    std::vector<bool> bits;
    for (char c : key) {
      if (c != '0' && c != '1') bad("field 'key' must be a string of 0 and 1");
      bits.push_back(c == '1');
    }
    try {
      return Lucks{output_from_json(require(j, "g"), space, ctx), ShiftHashKey(w, bits), op};
    } catch (const DomainError& e) {
      bad(std::string("field 'h': ") + e.what());
    }
  }
  if (kind == "custom") {
    return CustomTupleTable{get_u64_array(j, "entries"), get_u64(j, "output_size")};
  }
  bad("field 'output': unknown tuple output '" + kind + "'");
}

}  // namespace

Json tstep_to_json(const TStepSpec& spec) {
  return Json{{"type", "t_step"},
              {"n", spec.f.size()},
              {"f", function_table_to_json(spec.f)},
              {"t", spec.t},
              {"op", op_to_json(spec.op)},
              {"dense", spec.dense},
              {"counter_start", spec.counter_start},
              {"output", tuple_output_to_json(spec.output)}};
}

Json any_generator_to_json(const AnyGenerator& g) {
  return std::visit(Overloaded{[](const GeneratorSpec& s) { return generator_to_json(s); },
                               [](const TStepSpec& s) { return tstep_to_json(s); }},
                    g);
}

namespace {

FunctionTable parse_f(const Json& j, ParseContext& ctx, std::optional<std::uint64_t> n) {
  if (j.contains("f_file")) {
    const std::filesystem::path p = ctx.base_dir / get_string(j, "f_file");
    FunctionTable f = load_function_table(p, ctx);
    if (n && f.size() != *n) {
      bad("field 'f_file': table has n = " + std::to_string(f.size()) +
          " but the generator has n = " + std::to_string(*n));
    }
    return f;
  }
  return function_table_from_json(require(j, "f"), ctx, n);
}

GeneratorSpec nested_from_json(const Json& j, ParseContext& ctx, state_t& seed) {
  AnyGenerator g = generator_from_json(require(j, "generator"), ctx);
  if (!std::holds_alternative<GeneratorSpec>(g)) bad("nested generators cannot be t_step");
  seed = get_u64_or(j, "seed", 0);
  return std::get<GeneratorSpec>(std::move(g));
}

}  // namespace

AnyGenerator generator_from_json(const Json& j, ParseContext& ctx) {
  if (!j.is_object()) bad("generator must be a JSON object");
  const std::string type = get_string(j, "type");
  std::optional<std::uint64_t> n;
  if (j.contains("n")) n = get_u64(j, "n");
  auto op_of = [&] { return j.contains("op") ? op_from_json(j.at("op")) : LatinOp::add_mod(); };

  try {
    if (type == "counter_mode") {
      if (!n) bad("counter_mode needs field 'n'");
      const StateSpace space = space_of(*n);
      const OutputFunction g = j.contains("g") ? output_from_json(j.at("g"), space, ctx)
                                               : OutputFunction::identity(space);
      const state_t s = get_u64_or(j, "s", 0);
      return GeneratorSpec::counter_mode(g, op_of(), s);
    }
    const FunctionTable f = parse_f(j, ctx, n);
    const StateSpace& space = f.space();
    const OutputFunction g = j.contains("g") ? output_from_json(j.at("g"), space, ctx)
                                             : OutputFunction::identity(space);
    if (type == "iterative") return GeneratorSpec::iterative(f, g);
    if (type == "counter_assisted") {
      return GeneratorSpec::counter_assisted(f, g, op_of(), get_u64_or(j, "counter_start", 0));
    }
    if (type == "sequence_assisted") {
      const Json& a = require(j, "assist");
      if (a.is_array()) {
        auto values = get_u64_array(j, "assist");
        check_entries(values, space.size(), "assist");
        return GeneratorSpec::sequence_assisted(f, g, op_of(), std::move(values));
      }
      state_t seed = 0;
      GeneratorSpec inner = nested_from_json(a, ctx, seed);
      return GeneratorSpec::sequence_assisted(f, g, op_of(), std::move(inner), seed);
    }
    if (type == "cascade") {
      state_t seed = 0;
      GeneratorSpec inner = nested_from_json(require(j, "inner"), ctx, seed);
      return GeneratorSpec::cascade(f, g, op_of(), std::move(inner), seed);
    }
    if (type == "bad_mode") {
      const BadVariant v = bad_variant_from_name(get_string(j, "variant"));
      return GeneratorSpec(BadMode{v, f, g});
    }
    if (type == "t_step") {
      TStepSpec spec{f,
                     static_cast<unsigned>(get_u64_or(j, "t", 2)),
                     op_of(),
                     j.contains("output") ? tuple_output_from_json(j.at("output"), space, ctx)
                                          : TupleOutput{BlockwiseIdentity{}},
                     get_bool_or(j, "dense", false),
                     get_u64_or(j, "counter_start", 0)};
      validate(spec);
      return spec;
    }
  } catch (const DomainError& e) {
    bad("generator '" + type + "': " + e.what());
  } catch (const InvalidOperation& e) {
    bad("generator '" + type + "': " + e.what());
  }
  bad("field 'type': unknown generator type '" + type + "'");
}

// ---- curves ----

Json curve_to_json(const DiversityCurve& c, const std::optional<CurveBounds>& bounds) {
  Json j{{"kmax", c.kmax},
         {"values", c.values},
         {"subject", c.subject},
         {"upper_bound", c.upper_bound}};
  j["total"] = c.total ? Json(*c.total) : Json(nullptr);
  if (c.cap) j["cap"] = *c.cap;
  if (bounds) j["bounds"] = Json{{"gamma", bounds->gamma}, {"eta", bounds->eta}};
  return j;
}

DiversityCurve curve_from_json(const Json& j, std::optional<CurveBounds>* bounds) {
  DiversityCurve c;
  c.kmax = get_u64(j, "kmax");
  c.values = get_u64_array(j, "values");
  if (c.values.size() != c.kmax) bad("field 'values' must have kmax entries");
  if (j.contains("subject")) c.subject = get_string(j, "subject");
  c.upper_bound = get_bool_or(j, "upper_bound", false);
  if (j.contains("total") && !j.at("total").is_null()) c.total = get_u64(j, "total");
  if (j.contains("cap")) c.cap = get_u64(j, "cap");
  if (bounds) {
    bounds->reset();
    if (j.contains("bounds")) {
      const Json& b = j.at("bounds");
      *bounds = CurveBounds{get_u64_array(b, "gamma"), get_u64_array(b, "eta")};
    }
  }
  return c;
}

std::string curve_to_csv(const DiversityCurve& c) {
  std::string out = "k,diversity\n";
  for (std::uint64_t k = 1; k <= c.values.size(); ++k) {
    out += std::to_string(k) + "," + std::to_string(c.values[k - 1]) + "\n";
  }
  return out;
}

// ---- cycle reports ----

Json cycle_report_to_json(const CycleReport& r, bool include_seeds) {
  Json cycles = Json::array();
  for (const CycleInfo& c : r.cycles) {
    cycles.push_back(Json{{"length", c.length}, {"representative", c.representative}});
  }
  Json j{{"n", r.n}, {"p_min", r.p_min}, {"cycles", cycles}};
  if (include_seeds) {
    Json seeds = Json::array();
    for (const SeedCycle& s : r.seeds) {
      seeds.push_back(Json{{"seed", s.seed}, {"tail", s.tail}, {"period", s.period}});
    }
    j["seeds"] = seeds;
  }
  return j;
}

CycleReport cycle_report_from_json(const Json& j) {
  CycleReport r;
  r.n = get_u64_or(j, "n", 0);
  r.p_min = get_u64(j, "p_min");
  const Json& cycles = require(j, "cycles");
  if (!cycles.is_array()) bad("field 'cycles' must be an array");
  for (const Json& c : cycles) {
    r.cycles.push_back({get_u64(c, "length"), get_u64(c, "representative")});
  }
  if (j.contains("seeds")) {
    for (const Json& s : j.at("seeds")) {
      r.seeds.push_back({get_u64(s, "seed"), get_u64(s, "tail"), get_u64(s, "period")});
    }
  }
  return r;
}

// ---- experiments ----

Json experiment_to_json(const ExperimentReport& r) {
  Json oracles = Json::array();
  for (const OracleStats& s : r.oracles) {
    oracles.push_back(Json{
        {"oracle", std::string(oracle_name(s.which))},
        {"trials", s.trials},
        {"birthday_flags", s.birthday_flags},
        {"birthday_rate", s.birthday_rate()},
        {"with_collision", s.with_collision},
        {"collision_rate", s.collision_rate()},
        {"consistent_given_collision", s.consistent_given_collision()},
        {"verdicts",
         Json{{std::string(verdict_name(Verdict::kConsistent)), s.consistent},
              {std::string(verdict_name(Verdict::kRandomLike)), s.random_like},
              {std::string(verdict_name(Verdict::kInconclusive)), s.inconclusive}}}});
  }
  return Json{{"n", r.n},
              {"k", r.k},
              {"trials", r.trials},
              {"rng_seed", r.rng_seed},
              {"estimate_k2_over_2n", r.estimate_k2_over_2n},
              {"exact_birthday", r.exact_birthday},
              {"oracles", oracles}};
}

ExperimentReport experiment_from_json(const Json& j) {
  ExperimentReport r;
  r.n = get_u64(j, "n");
  r.k = get_u64(j, "k");
  r.trials = get_u64(j, "trials");
  r.rng_seed = get_u64(j, "rng_seed");
  r.estimate_k2_over_2n = static_cast<double>(r.k) * static_cast<double>(r.k) /
                          (2.0 * static_cast<double>(r.n));
  r.exact_birthday = exact_birthday_probability(r.n, r.k);
  const Json& oracles = require(j, "oracles");
  if (!oracles.is_array() || oracles.size() != 4) bad("field 'oracles' must list 4 oracles");
  for (const Json& o : oracles) {
    const OracleKind which = oracle_from_name(get_string(o, "oracle"));
    OracleStats& s = r.oracles[static_cast<std::size_t>(which)];
    s.which = which;
    s.trials = get_u64(o, "trials");
    s.birthday_flags = get_u64(o, "birthday_flags");
    s.with_collision = get_u64(o, "with_collision");
    const Json& v = require(o, "verdicts");
    s.consistent = get_u64(v, "consistent_with_counter_assisted");
    s.random_like = get_u64(v, "random_like");
    s.inconclusive = get_u64(v, "inconclusive");
  }
  return r;
}

// ---- meshed metadata ----

Json meshed_metadata_to_json(const MeshedConstruction& c, const std::string& table_file) {
  Json j{{"variant", std::string(meshed_variant_name(c.variant))},
         {"n", c.n},
         {"alpha", c.alpha},
         {"beta", c.beta},
         {"x", c.x},
         {"y", c.y},
         {"modulus", c.modulus},
         {"a_values", c.a_values},
         {"b_values", c.b_values},
         {"seed", c.seed()},
         {"total_bound", c.total_bound()},
         {"table_file", table_file},
         {"generator", Json{{"type", "counter_assisted"},
                            {"n", c.n},
                            {"op", op_to_json(c.op())},
                            {"f_file", table_file}}}};
  const auto period = c.expected_period();
  const auto total = c.expected_total();
  j["expected_period"] = period ? Json(*period) : Json(nullptr);
  j["total_diversity"] = total ? Json(*total) : Json(nullptr);
  j["length"] = (period ? *period : c.modulus) + 1;
  return j;
}

// ---- documents ----

std::string document_kind_name(DocumentKind k) {
  switch (k) {
    case DocumentKind::kFunctionTable:
      return "function_table";
    case DocumentKind::kGenerator:
      return "generator";
    case DocumentKind::kRunConfig:
      return "run_config";
    case DocumentKind::kCurve:
      return "diversity_curve";
    case DocumentKind::kCycleReport:
      return "cycle_report";
    case DocumentKind::kExperiment:
      return "experiment_report";
    case DocumentKind::kMeshedMetadata:
      return "meshed_metadata";
  }
  return "?";
}

DocumentKind detect_document_kind(const Json& j) {
  if (!j.is_object()) bad("document must be a JSON object");
  if (j.contains("alpha") && j.contains("beta")) return DocumentKind::kMeshedMetadata;
  if (j.contains("oracles")) return DocumentKind::kExperiment;
  if (j.contains("p_min")) return DocumentKind::kCycleReport;
  if (j.contains("values") && j.contains("kmax")) return DocumentKind::kCurve;
  if (j.contains("type")) return DocumentKind::kGenerator;
  if (j.contains("generator") || j.contains("generator_file")) return DocumentKind::kRunConfig;
  if (j.contains("n") && (j.contains("table") || j.contains("kind"))) {
    return DocumentKind::kFunctionTable;
  }
  bad("document matches no known schema");
}

}  // namespace cagen::io
