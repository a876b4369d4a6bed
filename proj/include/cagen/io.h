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
//
// File formats.
//
// Function table, JSON:    {"n": N, "table": [f(0), ..., f(N-1)]}
//   or a structured backend: {"n": N, "kind": "constant", "value": c},
//   "negation", "identity", {"kind": "affine", "a", "b"},
//   {"kind": "keyed_mixer", "key", "rounds"}; or a shorthand string:
//   "constant:C", "negation", "identity", "affine:A:B", "mixer:KEY[:R]",
//   "random" (drawn from the run's rng seed).
// Function table, binary:  "FTBL", u64-LE n, n x u64-LE entries.
//
// Latin op:        "add_mod" | "sub_mod" | "xor" |
//                  {"kind": "conjugated", "base", "pre_left", "pre_right", "post"}
// Output function: "identity" | "truncate:B" | "mixer:KEY:M" |
//                  {"kind": "identity" | "truncate" (bits) |
//                   "table" (table, output_size) | "mapped" (f) |
//                   "keyed_mixer" (key, rounds, output_size)}
//
// Generator:  {"type": T, "n", "f" | "f_file", "g", "op", ...} with T one of
//   iterative, counter_mode (s), counter_assisted (counter_start),
//   sequence_assisted (assist: array or {"generator", "seed"}),
//   cascade (inner: {"generator", "seed"}), bad_mode (variant),
//   t_step (t, dense, counter_start, output).
//
// All JSON is emitted with sorted keys and two-space indentation so output
// is byte-stable.

#ifndef CAGEN_IO_H_
#define CAGEN_IO_H_

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "json.hpp"

#include "cagen/adversarial.h"
#include "cagen/analysis.h"
#include "cagen/function_table.h"
#include "cagen/generator.h"
#include "cagen/multistep.h"
#include "cagen/oracles.h"

namespace cagen::io {

using Json = nlohmann::json;

// Where relative file references resolve and where "random" tables draw
// from. Each random table takes the next stream of rng_seed.
struct ParseContext {
  std::filesystem::path base_dir = ".";
  std::optional<std::uint64_t> rng_seed;
  std::uint64_t random_streams = 0;
};

std::string dump(const Json& j);  // two-space indent, trailing newline

// Reads a whole file; throws ConfigError naming the path on failure.
std::string read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, const std::string& bytes);
// Throws ConfigError with the parser's message.
Json parse_json(const std::string& text, const std::string& what);

Json function_table_to_json(const FunctionTable& f);
FunctionTable function_table_from_json(const Json& j, ParseContext& ctx,
                                       std::optional<std::uint64_t> n_hint = {});
std::string function_table_to_binary(const FunctionTable& f);
FunctionTable function_table_from_binary(const std::string& bytes);
// JSON or binary, by content.
FunctionTable load_function_table(const std::filesystem::path& path,
                                  ParseContext& ctx);
bool is_binary_table(const std::string& bytes);

Json op_to_json(const LatinOp& op);
LatinOp op_from_json(const Json& j);

Json output_to_json(const OutputFunction& g);
OutputFunction output_from_json(const Json& j, const StateSpace& space,
                                ParseContext& ctx);

using AnyGenerator = std::variant<GeneratorSpec, TStepSpec>;

Json generator_to_json(const GeneratorSpec& spec);
Json tstep_to_json(const TStepSpec& spec);
Json any_generator_to_json(const AnyGenerator& g);
AnyGenerator generator_from_json(const Json& j, ParseContext& ctx);

struct CurveBounds {
  std::vector<std::uint64_t> gamma;
  std::vector<std::uint64_t> eta;
};

Json curve_to_json(const DiversityCurve& c,
                   const std::optional<CurveBounds>& bounds = std::nullopt);
DiversityCurve curve_from_json(const Json& j, std::optional<CurveBounds>* bounds = nullptr);
std::string curve_to_csv(const DiversityCurve& c);

Json cycle_report_to_json(const CycleReport& r, bool include_seeds);
CycleReport cycle_report_from_json(const Json& j);

Json experiment_to_json(const ExperimentReport& r);
ExperimentReport experiment_from_json(const Json& j);

// Metadata written next to a meshed construction. `table_file` is the
// construction's table as referenced from the metadata's directory.
Json meshed_metadata_to_json(const MeshedConstruction& c,
                             const std::string& table_file);

enum class DocumentKind {
  kFunctionTable,
  kGenerator,
  kRunConfig,
  kCurve,
  kCycleReport,
  kExperiment,
  kMeshedMetadata,
};

std::string document_kind_name(DocumentKind k);
// Throws ConfigError when the document matches no known schema.
DocumentKind detect_document_kind(const Json& j);

// Integer field accessors that name the field in their ConfigError.
std::uint64_t get_u64(const Json& j, const char* field);
std::uint64_t get_u64_or(const Json& j, const char* field, std::uint64_t fallback);

}  // namespace cagen::io

#endif  // CAGEN_IO_H_
