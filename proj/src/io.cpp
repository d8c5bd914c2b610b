#include "phq/io.hpp"

#include <fstream>
#include <map>
#include <sstream>

#include "phq/constructions.hpp"

namespace phq {

using nlohmann::json;
using nlohmann::ordered_json;

InputError::InputError(ErrorKind kind, const std::string& message, std::size_t line, std::size_t column)
    : Error(kind, message + " (line " + std::to_string(line) + ", column " + std::to_string(column) + ")"),
      line_(line),
      column_(column) {}

InputError::InputError(ErrorKind kind, const std::string& message, std::string path)
    : Error(kind, message + " (at " + (path.empty() ? std::string("/") : path) + ")"), path_(std::move(path)) {}

namespace {

[[noreturn]] void fail(const std::string& path, const std::string& message, ErrorKind kind = ErrorKind::ParseError) {
  throw InputError(kind, message, path);
}

json parse_json(std::string_view text) {
  try {
    return json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    // e.byte is the 1-based offset of the offending character.
    std::size_t line = 1, column = 1;
    const std::size_t stop = std::min<std::size_t>(e.byte == 0 ? 0 : e.byte - 1, text.size());
    for (std::size_t i = 0; i < stop; ++i) {
      if (text[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    // Keep only the reason, e.g. "syntax error while parsing value - invalid literal".
    std::string what = e.what();
    const auto colon = what.find(": ", what.find("column"));
    std::string reason = colon == std::string::npos ? "" : what.substr(colon);
    reason = reason.substr(0, reason.find("; last read"));
    throw InputError(ErrorKind::ParseError, "malformed JSON" + reason, line, column);
  }
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError(ErrorKind::ParseError, "cannot read " + path.string(), "");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

const json& member(const json& object, const std::string& path, const char* key) {
  if (!object.is_object()) fail(path, "expected an object");
  auto it = object.find(key);
  if (it == object.end()) fail(path, std::string("missing key \"") + key + "\"");
  return *it;
}

Rational scalar(const json& value, const std::string& path) {
  try {
    if (value.is_number_integer()) return Rational(value.dump());
    if (value.is_string()) return parse_rational(value.get<std::string>());
  } catch (const Error& e) {
    fail(path, e.what(), ErrorKind::BadRational);
  }
  fail(path, "expected a rational string or an integer", ErrorKind::BadRational);
}

std::size_t count(const json& value, const std::string& path) {
  if (!value.is_number_unsigned()) fail(path, "expected a non-negative integer");
  return value.get<std::size_t>();
}

Matrix matrix(const json& value, std::size_t n, const std::string& path) {
  if (!value.is_array() || value.size() != n) fail(path, "expected " + std::to_string(n) + " rows");
  Matrix m(n, n);
  for (std::size_t r = 0; r < n; ++r) {
    const std::string row_path = path + "/" + std::to_string(r);
    if (!value[r].is_array() || value[r].size() != n) fail(row_path, "expected " + std::to_string(n) + " entries");
    for (std::size_t c = 0; c < n; ++c) m(r, c) = scalar(value[r][c], row_path + "/" + std::to_string(c));
  }
  return m;
}

Vector vector(const json& value, std::size_t n, const std::string& path) {
  if (!value.is_array() || value.size() != n) fail(path, "expected " + std::to_string(n) + " entries");
  Vector v(n);
  for (std::size_t i = 0; i < n; ++i) v[i] = scalar(value[i], path + "/" + std::to_string(i));
  return v;
}

std::size_t index(const json& value, std::size_t dim, const std::string& path) {
  const std::size_t i = count(value, path);
  if (i >= dim) fail(path, "index " + std::to_string(i) + " out of range for dimension " + std::to_string(dim),
                     ErrorKind::IndexOutOfRange);
  return i;
}

std::size_t parse_index_key(const std::string& key, std::size_t dim, const std::string& path) {
  if (key.empty() || key.find_first_not_of("0123456789") != std::string::npos)
    fail(path, "coefficient key must be a basis index");
  if (key.size() > 9 || std::stoul(key) >= dim)
    fail(path, "index " + key + " out of range for dimension " + std::to_string(dim), ErrorKind::IndexOutOfRange);
  return std::stoul(key);
}

PHQAlgebra algebra_from_json(const json& root, const std::string& path) {
  const std::size_t n = count(member(root, path, "dim"), path + "/dim");

  std::vector<std::string> names = default_basis_names(n);
  if (root.contains("basis")) {
    const json& basis = root["basis"];
    if (!basis.is_array() || basis.size() != n) fail(path + "/basis", "expected " + std::to_string(n) + " names");
    for (std::size_t i = 0; i < n; ++i) {
      if (!basis[i].is_string()) fail(path + "/basis/" + std::to_string(i), "expected a string");
      names[i] = basis[i].get<std::string>();
    }
  }

  StructureConstants c(n);
  const json& brackets = member(root, path, "brackets");
  if (!brackets.is_array()) fail(path + "/brackets", "expected an array");
  std::vector<bool> seen(n * n, false);
  for (std::size_t e = 0; e < brackets.size(); ++e) {
    const std::string entry = path + "/brackets/" + std::to_string(e);
    const std::size_t i = index(member(brackets[e], entry, "i"), n, entry + "/i");
    const std::size_t j = index(member(brackets[e], entry, "j"), n, entry + "/j");
    if (i >= j) fail(entry, "bracket entries need i < j");
    if (seen[i * n + j]) fail(entry, "duplicate bracket entry");
    seen[i * n + j] = true;
    const json& coeffs = member(brackets[e], entry, "coeffs");
    if (!coeffs.is_object()) fail(entry + "/coeffs", "expected an object");
    Vector value = zero_vector(n);
    for (const auto& [key, coefficient] : coeffs.items()) {
      const std::string coeff_path = entry + "/coeffs/" + key;
      value[parse_index_key(key, n, coeff_path)] = scalar(coefficient, coeff_path);
    }
    c.set_bracket(i, j, value);
  }

  Matrix jm = matrix(member(root, path, "J"), n, path + "/J");
  Matrix phi = matrix(member(root, path, "phi"), n, path + "/phi");
  return PHQAlgebra(LieAlgebra(std::move(names), std::move(c)), std::move(jm), std::move(phi));
}

std::string quoted(const std::string& s) { return json(s).dump(); }

void write_matrix(std::ostringstream& out, const Matrix& m) {
  out << "[";
  for (std::size_t r = 0; r < m.rows(); ++r) {
    out << (r ? ",\n    [" : "\n    [");
    for (std::size_t c = 0; c < m.cols(); ++c) out << (c ? ", " : "") << quoted(to_string(m(r, c)));
    out << "]";
  }
  out << (m.rows() ? "\n  ]" : "]");
}

// ---------------------------------------------------------------------------
// recipes

PHQAlgebra evaluate(const json& node, const std::string& path);

Matrix optional_matrix(const json& node, const char* key, std::size_t n, const std::string& path) {
  if (!node.contains(key) || node[key].is_null()) return Matrix(n, n);
  return matrix(node[key], n, path + "/" + key);
}

PHQAlgebra evaluate(const json& node, const std::string& path) {
  const json& op_value = member(node, path, "op");
  if (!op_value.is_string()) fail(path + "/op", "expected a string");
  const std::string op = op_value.get<std::string>();

  try {
    if (op == "abelian")
      return abelian_phq(count(member(node, path, "p"), path + "/p"), count(member(node, path, "q"), path + "/q"));
    if (op == "L42") return lorentz_algebra(false);
    if (op == "L24") return lorentz_algebra(true);
    if (op == "catalog") {
      const json& label = member(node, path, "label");
      if (!label.is_string()) fail(path + "/label", "expected a string");
      return build(label.get<std::string>());
    }
    if (op == "direct_sum") {
      const json& args = member(node, path, "args");
      if (!args.is_array() || args.empty()) fail(path + "/args", "expected a non-empty array");
      PHQAlgebra out = evaluate(args[0], path + "/args/0");
      for (std::size_t i = 1; i < args.size(); ++i)
        out = direct_sum(out, evaluate(args[i], path + "/args/" + std::to_string(i)));
      return out;
    }
    if (op == "tstar") {
      if (node.contains("of")) {
        const json& of = node["of"];
        if (!of.is_object() || of.value("op", "") != "kodaira") fail(path + "/of", "tstar is defined over kodaira only");
      }
      return tstar_kodaira(vector(member(node, path, "theta"), 4, path + "/theta"));
    }
    if (op == "phq_ext") {
      PHQAlgebra base = evaluate(member(node, path, "base"), path + "/base");
      const std::size_t n = base.dim();
      Matrix d = optional_matrix(node, "D", n, path);
      Matrix f = optional_matrix(node, "F", n, path);
      Vector s0 = node.contains("s0") ? vector(node["s0"], n, path + "/s0") : zero_vector(n);
      return phq_double_extension(ExtensionData(std::move(base), std::move(d), std::move(f), std::move(s0)));
    }
    if (op == "tensor") {
      PHQAlgebra arg = evaluate(member(node, path, "arg"), path + "/arg");
      return tensor_construct(arg, truncated_poly(count(member(node, path, "truncated_poly"), path + "/truncated_poly")));
    }
    if (op == "complexify") return complexify(evaluate(member(node, path, "arg"), path + "/arg"));
    if (op == "kodaira") fail(path, "kodaira carries no metric; use it as the \"of\" argument of tstar");
  } catch (const InputError&) {
    throw;
  } catch (const Error& e) {
    throw InputError(e.kind(), e.what(), path);
  }
  fail(path + "/op", "unknown op \"" + op + "\"");
}

ordered_json rationals(const Vector& v) {
  ordered_json out = ordered_json::array();
  for (const auto& x : v) out.push_back(to_string(x));
  return out;
}

ordered_json rationals(const Matrix& m) {
  ordered_json out = ordered_json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) out.push_back(rationals(m.row(r)));
  return out;
}

std::string_view kind_name(StepKind kind) { return kind == StepKind::split_plane ? "split_plane" : "plane_reduction"; }

}  // namespace

PHQAlgebra parse_algebra(std::string_view text) { return algebra_from_json(parse_json(text), ""); }

PHQAlgebra read_algebra(const std::filesystem::path& path) { return parse_algebra(read_file(path)); }

std::string serialize(const PHQAlgebra& a) {
  const std::size_t n = a.dim();
  std::ostringstream out;
  out << "{\n  \"dim\": " << n << ",\n  \"basis\": [";
  for (std::size_t i = 0; i < n; ++i) out << (i ? ", " : "") << quoted(a.algebra().basis_names()[i]);
  out << "],\n  \"brackets\": [";
  bool first = true;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      const Vector value = a.algebra().basis_bracket(i, j);
      if (is_zero(value)) continue;
      out << (first ? "\n    " : ",\n    ") << "{\"i\": " << i << ", \"j\": " << j << ", \"coeffs\": {";
      bool first_coeff = true;
      for (std::size_t k = 0; k < n; ++k) {
        if (value[k] == 0) continue;
        out << (first_coeff ? "" : ", ") << quoted(std::to_string(k)) << ": " << quoted(to_string(value[k]));
        first_coeff = false;
      }
      out << "}}";
      first = false;
    }
  out << (first ? "],\n" : "\n  ],\n") << "  \"J\": ";
  write_matrix(out, a.J());
  out << ",\n  \"phi\": ";
  write_matrix(out, a.phi());
  out << "\n}\n";
  return out.str();
}

PHQAlgebra evaluate_recipe(std::string_view text) { return evaluate(parse_json(text), ""); }

PHQAlgebra read_recipe(const std::filesystem::path& path) { return evaluate_recipe(read_file(path)); }

ordered_json to_json(const Report& report) {
  ordered_json checks = ordered_json::array();
  for (const auto& c : report.checks())
    checks.push_back({{"name", c.name}, {"passed", c.passed}, {"details", c.details}});
  return {{"passed", report.passed()}, {"checks", checks}};
}

ordered_json to_json(const Fingerprint& f) {
  auto sig = [](const Signature& s) { return ordered_json::array({s.positive, s.negative}); };
  ordered_json out{{"dim", f.dim}, {"dim_derived", f.dim_derived}, {"dim_center", f.dim_center}};
  out["nilpotency_index"] = f.nilpotency_index ? ordered_json(*f.nilpotency_index) : ordered_json(nullptr);
  out["sig_phi"] = sig(f.sig_phi);
  out["sig_phi_on_derived"] = sig(f.sig_phi_on_derived);
  out["row"] = f.table_row();
  return out;
}

ordered_json to_json(const ReductionStep& step) {
  ordered_json out{{"kind", kind_name(step.kind)}, {"input_dim", step.input.dim()}, {"z", rationals(step.z)}};
  if (step.kind == StepKind::split_plane) {
    out["sign"] = step.sign;
  } else {
    out["v"] = rationals(step.v);
    if (step.extension) {
      out["D"] = rationals(step.extension->D());
      out["F"] = rationals(step.extension->F());
      out["s0"] = rationals(step.extension->s0());
    }
  }
  out["recovered_dim"] = step.recovered.dim();
  out["recovered_signature"] = to_string(signature(step.recovered.phi()));
  return out;
}

ordered_json to_json(const Reduction& reduction) {
  ordered_json steps = ordered_json::array();
  for (const auto& s : reduction.steps) steps.push_back(to_json(s));
  return {{"steps", steps},
          {"residue", {{"dim", reduction.residue.dim()}, {"signature", to_string(signature(reduction.residue.phi()))}}}};
}

ordered_json to_json(const Classification& c) {
  ordered_json peeled = ordered_json::array();
  for (const auto& s : c.peeled.steps) peeled.push_back(to_json(s));
  return {{"label", to_string(c.label)},
          {"fingerprint", to_json(c.fingerprint)},
          {"core_fingerprint", to_json(c.core_fingerprint)},
          {"peeled", peeled},
          {"reduction", to_json(c.reduction)}};
}

std::string reduction_text(const Reduction& reduction) {
  std::ostringstream out;
  for (std::size_t i = 0; i < reduction.steps.size(); ++i) {
    const ReductionStep& s = reduction.steps[i];
    out << "step " << i + 1 << ": " << kind_name(s.kind) << " dim " << s.input.dim() << " -> " << s.recovered.dim()
        << ", z = " << to_string(s.z);
    if (s.kind == StepKind::split_plane) {
      out << ", sign " << (s.sign > 0 ? "+" : "-");
    } else {
      out << ", v = " << to_string(s.v);
      if (s.extension)
        out << ", D " << (s.extension->D().is_zero() ? "= 0" : "!= 0") << ", F "
            << (s.extension->F().is_zero() ? "= 0" : "!= 0") << ", s0 = " << to_string(s.extension->s0());
    }
    out << "\n";
  }
  out << "residue: abelian, dim " << reduction.residue.dim() << ", signature "
      << to_string(signature(reduction.residue.phi())) << "\n";
  return out.str();
}

std::string classification_text(const Classification& c) {
  std::ostringstream out;
  out << to_string(c.label) << "\n";
  out << "fingerprint: " << c.fingerprint.table_row() << " (center " << c.fingerprint.dim_center << ")\n";
  out << "core: " << (c.core_fingerprint.dim ? c.core_fingerprint.table_row() : std::string("zero")) << "\n";
  out << "definite planes peeled: " << c.peeled.steps.size() << ", signature " << to_string(c.peeled.removed) << "\n";
  out << reduction_text(c.reduction);
  return out.str();
}

}  // namespace phq
