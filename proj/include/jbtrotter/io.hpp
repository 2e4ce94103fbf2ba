#pragma once

#include <charconv>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "jbtrotter/trotter.hpp"

namespace jbtrotter {

using nlohmann::json;

struct ProblemInstance {
  AlgebraDescriptor algebra;
  std::vector<Element> elements;
  std::string label;
};

/// Shortest decimal that parses back to the same double.
inline std::string format_double(double v) {
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, ptr);
}

inline std::string format_optional(const std::optional<double>& v) {
  return v ? format_double(*v) : std::string{};
}

// ---------------------------------------------------------------- instances

namespace detail {

inline double number_at(const json& j, const char* what) {
  if (!j.is_number()) fail(ErrorKind::kMismatch, std::string(what) + " must be a number");
  return j.get<double>();
}

inline std::vector<double> numbers(const json& j, std::size_t expected, const char* what) {
  if (!j.is_array() || j.size() != expected)
    fail(ErrorKind::kMismatch, std::string(what) + " must be an array of " +
                                   std::to_string(expected) + " numbers");
  std::vector<double> out;
  for (const auto& v : j) out.push_back(number_at(v, what));
  return out;
}

inline Octonion octonion_from(const json& j, const char* what) {
  const auto c = numbers(j, 8, what);
  Octonion o;
  for (std::size_t i = 0; i < 8; ++i) o[i] = c[i];
  return o;
}

/// Rejects sym/herm payloads whose defect exceeds the load tolerance, then
/// symmetrizes what is left.
inline constexpr double kLoadSymmetryTol = 1e-9;

template <class T>
void check_loaded_symmetry(SquareMatrix<T>& m, std::size_t index) {
  if (self_adjoint_defect(m) > kLoadSymmetryTol * std::max(1.0, max_abs(m)))
    fail(ErrorKind::kSymmetry,
         "element " + std::to_string(index) + " is not self-adjoint within 1e-9");
  make_self_adjoint(m);
}

inline Element element_from_json(const AlgebraDescriptor& d, const json& j, std::size_t index) {
  const std::size_t n = d.dim;
  switch (d.kind) {
    case AlgebraKind::kSym: {
      RealMatrix m(n, numbers(j, n * n, "sym element"));
      check_loaded_symmetry(m, index);
      return Element::sym(std::move(m));
    }
    case AlgebraKind::kHerm: {
      if (!j.is_array() || j.size() != n * n)
        fail(ErrorKind::kMismatch, "herm element must be an array of " +
                                       std::to_string(n * n) + " [re, im] pairs");
      ComplexMatrix m(n);
      for (std::size_t i = 0; i < n * n; ++i) {
        const auto pair = numbers(j[i], 2, "herm entry");
        m.data()[i] = {pair[0], pair[1]};
      }
      check_loaded_symmetry(m, index);
      return Element::herm(std::move(m));
    }
    case AlgebraKind::kSpin: {
      if (!j.is_object() || !j.contains("s") || !j.contains("v"))
        fail(ErrorKind::kMismatch, "spin element must be {\"s\": real, \"v\": [reals]}");
      return Element::spin(number_at(j["s"], "spin s"), numbers(j["v"], n, "spin v"));
    }
    case AlgebraKind::kAlbert: {
      if (!j.is_object() || !j.contains("diag") || !j.contains("x") || !j.contains("y") ||
          !j.contains("z"))
        fail(ErrorKind::kMismatch, "albert element must have diag, x, y, z");
      AlbertPayload p;
      const auto diag = numbers(j["diag"], 3, "albert diag");
      for (int i = 0; i < 3; ++i) p.diag[i] = diag[i];
      p.x = octonion_from(j["x"], "albert x");
      p.y = octonion_from(j["y"], "albert y");
      p.z = octonion_from(j["z"], "albert z");
      return Element::albert(p);
    }
  }
  fail(ErrorKind::kSchema, "unknown algebra kind");
}

inline json octonion_to_json(const Octonion& o) {
  return json(std::vector<double>(o.coeffs().begin(), o.coeffs().end()));
}

}  // namespace detail

inline json element_to_json(const Element& e) {
  switch (e.descriptor().kind) {
    case AlgebraKind::kSym: {
      const auto d = e.as<RealMatrix>().data();
      return json(std::vector<double>(d.begin(), d.end()));
    }
    case AlgebraKind::kHerm: {
      json arr = json::array();
      for (const auto& z : e.as<ComplexMatrix>().data()) arr.push_back({z.real(), z.imag()});
      return arr;
    }
    case AlgebraKind::kSpin: {
      const auto& p = e.as<SpinPayload>();
      return {{"s", p.s}, {"v", p.v}};
    }
    case AlgebraKind::kAlbert: {
      const auto& p = e.as<AlbertPayload>();
      return {{"diag", std::vector<double>(p.diag.begin(), p.diag.end())},
              {"x", detail::octonion_to_json(p.x)},
              {"y", detail::octonion_to_json(p.y)},
              {"z", detail::octonion_to_json(p.z)}};
    }
  }
  return {};
}

inline json instance_to_json(const ProblemInstance& inst) {
  json elements = json::array();
  for (const auto& e : inst.elements) elements.push_back(element_to_json(e));
  return {{"algebra", {{"kind", std::string(to_string(inst.algebra.kind))},
                       {"dim", inst.algebra.dim}}},
          {"label", inst.label},
          {"elements", elements}};
}

/// Validates and builds an instance from JSON text.
inline ProblemInstance parse_instance(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    fail(ErrorKind::kParse, std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object()) fail(ErrorKind::kSchema, "top level must be an object");
  if (!doc.contains("algebra") || !doc["algebra"].is_object())
    fail(ErrorKind::kSchema, "missing object field 'algebra'");
  const auto& alg = doc["algebra"];
  if (!alg.contains("kind") || !alg["kind"].is_string())
    fail(ErrorKind::kSchema, "algebra.kind must be a string");
  if (!alg.contains("dim") || !alg["dim"].is_number_integer() || alg["dim"].get<long long>() < 1)
    fail(ErrorKind::kSchema, "algebra.dim must be a positive integer");
  const std::string kind = alg["kind"].get<std::string>();
  const auto dim = alg["dim"].get<std::size_t>();

  AlgebraDescriptor d;
  if (kind == "sym") d.kind = AlgebraKind::kSym;
  else if (kind == "herm") d.kind = AlgebraKind::kHerm;
  else if (kind == "spin") d.kind = AlgebraKind::kSpin;
  else if (kind == "albert") d.kind = AlgebraKind::kAlbert;
  else fail(ErrorKind::kSchema, "algebra.kind must be sym, herm, spin or albert");
  if (d.kind == AlgebraKind::kAlbert && dim != 3)
    fail(ErrorKind::kMismatch, "albert algebra requires dim 3");
  d.dim = dim;

  std::string label;
  if (doc.contains("label")) {
    if (!doc["label"].is_string()) fail(ErrorKind::kSchema, "label must be a string");
    label = doc["label"].get<std::string>();
  }
  if (!doc.contains("elements") || !doc["elements"].is_array() || doc["elements"].empty())
    fail(ErrorKind::kSchema, "elements must be a non-empty array");

  ProblemInstance inst{d, {}, label};
  std::size_t i = 0;
  for (const auto& e : doc["elements"]) inst.elements.push_back(detail::element_from_json(d, e, i++));
  return inst;
}

inline ProblemInstance load_instance(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorKind::kParse, "cannot read '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_instance(ss.str());
}

inline void save_instance(const ProblemInstance& inst, const std::string& path) {
  std::ofstream out(path);
  if (!out) fail(ErrorKind::kInvalidInput, "cannot write '" + path + "'");
  out << instance_to_json(inst).dump(2) << '\n';
}

// ------------------------------------------------------------------ n grids

/// "8", "1,2,4,8" or the geometric form "start:stop:xFACTOR".
/// Result is strictly increasing and positive.
inline std::vector<std::uint64_t> parse_n_range(std::string_view text) {
  auto parse_u64 = [&](std::string_view s) {
    std::uint64_t v = 0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || ptr != s.data() + s.size() || s.empty())
      fail(ErrorKind::kUsage, "bad integer '" + std::string(s) + "' in n range");
    return v;
  };
  std::vector<std::uint64_t> out;
  if (const auto c1 = text.find(':'); c1 != std::string_view::npos) {
    const auto c2 = text.find(':', c1 + 1);
    if (c2 == std::string_view::npos || text.size() < c2 + 3 || text[c2 + 1] != 'x')
      fail(ErrorKind::kUsage, "geometric range must look like 1:1024:x2");
    const auto start = parse_u64(text.substr(0, c1));
    const auto stop = parse_u64(text.substr(c1 + 1, c2 - c1 - 1));
    const auto factor = parse_u64(text.substr(c2 + 2));
    if (start < 1 || factor < 2 || stop < start)
      fail(ErrorKind::kUsage, "geometric range needs 1 <= start <= stop and factor >= 2");
    for (std::uint64_t n = start; n <= stop; n *= factor) {
      out.push_back(n);
      if (n > stop / factor) break;
    }
  } else {
    std::size_t pos = 0;
    while (pos <= text.size()) {
      const auto comma = text.find(',', pos);
      const auto tok = text.substr(pos, comma == std::string_view::npos ? text.size() - pos
                                                                        : comma - pos);
      out.push_back(parse_u64(tok));
      if (comma == std::string_view::npos) break;
      pos = comma + 1;
    }
  }
  for (std::size_t i = 0; i < out.size(); ++i) {
    if (out[i] < 1) fail(ErrorKind::kUsage, "n values must be positive");
    if (i > 0 && out[i] <= out[i - 1]) fail(ErrorKind::kUsage, "n values must increase");
  }
  return out;
}

// ------------------------------------------------------------------ records

inline constexpr std::string_view kCsvHeader =
    "scheme,n,error,bound_thm31,bound_thm33i,bound_thm33ii,bound_special_i,bound_special_ii";

inline void write_csv(std::ostream& os, std::span<const SweepRecord> records) {
  os << kCsvHeader << '\n';
  for (const auto& r : records) {
    os << to_string(r.scheme) << ',' << r.n << ',' << format_double(r.error) << ','
       << format_optional(r.bound_thm31) << ',' << format_optional(r.bound_thm33i) << ','
       << format_optional(r.bound_thm33ii) << ',' << format_optional(r.bound_special_i) << ','
       << format_optional(r.bound_special_ii) << '\n';
  }
}

inline json record_to_json(const SweepRecord& r) {
  auto opt = [](const std::optional<double>& v) { return v ? json(*v) : json(nullptr); };
  return {{"scheme", std::string(to_string(r.scheme))},
          {"n", r.n},
          {"error", r.error},
          {"bound_thm31", opt(r.bound_thm31)},
          {"bound_thm33i", opt(r.bound_thm33i)},
          {"bound_thm33ii", opt(r.bound_thm33ii)},
          {"bound_special_i", opt(r.bound_special_i)},
          {"bound_special_ii", opt(r.bound_special_ii)}};
}

/// Whitespace-separated columns for one scheme: n, error, then every bound
/// present in the first record.
inline void write_plotdata(std::ostream& os, std::span<const SweepRecord> records) {
  if (records.empty()) return;
  const auto& first = records.front();
  const std::pair<const char*, std::optional<double> SweepRecord::*> cols[] = {
      {"bound_thm31", &SweepRecord::bound_thm31},
      {"bound_thm33i", &SweepRecord::bound_thm33i},
      {"bound_thm33ii", &SweepRecord::bound_thm33ii},
      {"bound_special_i", &SweepRecord::bound_special_i},
      {"bound_special_ii", &SweepRecord::bound_special_ii}};
  os << "# scheme " << to_string(first.scheme) << "\n# n error";
  for (const auto& [name, member] : cols)
    if (first.*member) os << ' ' << name;
  os << '\n';
  for (const auto& r : records) {
    os << r.n << ' ' << format_double(r.error);
    for (const auto& [name, member] : cols)
      if (first.*member) os << ' ' << format_optional(r.*member);
    os << '\n';
  }
}

}  // namespace jbtrotter
