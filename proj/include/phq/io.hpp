#pragma once

#include <cstddef>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>

#include <json.hpp>

#include "phq/catalog.hpp"
#include "phq/error.hpp"
#include "phq/reduction.hpp"
#include "phq/structures.hpp"

namespace phq {

/// Input error with a location: line/column for malformed JSON, a JSON
/// pointer (e.g. "/brackets/2/i") for well-formed JSON with bad content.
class InputError : public Error {
 public:
  InputError(ErrorKind kind, const std::string& message, std::size_t line, std::size_t column);
  InputError(ErrorKind kind, const std::string& message, std::string path);

  std::optional<std::size_t> line() const noexcept { return line_; }
  std::optional<std::size_t> column() const noexcept { return column_; }
  const std::string& path() const noexcept { return path_; }

 private:
  std::optional<std::size_t> line_, column_;
  std::string path_;
};

/// Algebra file: {"dim", "basis"?, "brackets": [{"i","j","coeffs"}], "J",
/// "phi"}. Indices are zero-based with i < j; scalars are rational strings
/// (plain integers are accepted too). Matrices act on coordinate columns:
/// column c of J is the image of basis vector c.
PHQAlgebra parse_algebra(std::string_view text);
PHQAlgebra read_algebra(const std::filesystem::path& path);

/// Canonical, deterministic text; parse_algebra(serialize(a)) == a.
std::string serialize(const PHQAlgebra& a);

/// Recipe: a JSON expression tree. Atoms: {"op":"abelian","p","q"},
/// {"op":"L42"}, {"op":"L24"}, {"op":"catalog","label"}, {"op":"kodaira"}
/// (only as the "of" argument of tstar). Combinators:
/// {"op":"direct_sum","args":[...]}, {"op":"tstar","of","theta":[4]},
/// {"op":"phq_ext","base","D"?,"F"?,"s0"?}, {"op":"tensor","arg",
/// "truncated_poly":k}, {"op":"complexify","arg"}.
PHQAlgebra evaluate_recipe(std::string_view text);
PHQAlgebra read_recipe(const std::filesystem::path& path);

nlohmann::ordered_json to_json(const Report& report);
nlohmann::ordered_json to_json(const Fingerprint& f);
nlohmann::ordered_json to_json(const ReductionStep& step);
nlohmann::ordered_json to_json(const Reduction& reduction);
nlohmann::ordered_json to_json(const Classification& c);

std::string reduction_text(const Reduction& reduction);
std::string classification_text(const Classification& c);

}  // namespace phq
