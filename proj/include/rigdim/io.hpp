#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "rigdim/rigidity.hpp"

namespace rigdim {

using Json = nlohmann::ordered_json;

/// The TOML subset used by algebra and module files: comments, bare and
/// quoted keys, dotted keys, strings, integers, booleans, arrays, inline
/// tables, [table] and [[array]] headers. Throws ParseError with a line.
Json parse_toml(const std::string& text);

struct AlgebraFile {
  AlgebraPtr algebra;
  std::optional<std::size_t> max_path_length;
  std::optional<std::size_t> cutoff;
  std::optional<std::uint64_t> seed;
};

/// Parse errors throw ParseError; construction errors (NotAdmissible, ...)
/// propagate with the offending relation quoted.
AlgebraFile parse_algebra(const std::string& text);
AlgebraFile read_algebra_file(const std::string& path);

struct ModuleFile {
  std::string name;
  std::vector<Module> summands;
  /// Present only if the file sets `complete`.
  std::optional<bool> complete;
};

/// Summands are verified against the relations on load.
ModuleFile parse_module(const std::string& text, const AlgebraPtr& alg);
ModuleFile read_module_file(const std::string& path, const AlgebraPtr& alg);
std::string write_module_file(const std::vector<Module>& summands, std::optional<bool> complete);

Json to_json(const ValueWithStatus& v);
Json to_json(const HomologicalDims& d);
Json to_json(const RigidityReport& r);
Json to_json(const MuellerResult& m);

std::string read_text(const std::string& path);

}  // namespace rigdim
