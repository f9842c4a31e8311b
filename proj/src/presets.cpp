#include "confspace/presets.hpp"

#include <charconv>
#include <optional>

namespace confspace {

namespace {

std::optional<int> parse_int(std::string_view s) {
  int value = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || ptr != s.data() + s.size()) return std::nullopt;
  return value;
}

[[noreturn]] void unknown(std::string_view key) {
  std::string msg = "unknown preset '" + std::string(key) + "'; available:";
  for (const auto& p : preset_patterns()) msg += " " + p;
  throw UnknownPresetError(msg);
}

// H_c(R^d): a single class in degree d, all products zero. The one-point
// compactification quotient is S^d, so r = d - 1.
PresetEntry euclidean(std::string key, int d) {
  CohomologyAlgebra a(key, d, false, {{"e", d}}, d - 1);
  return {std::move(key), std::move(a),
          "compactly supported cohomology of R^" + std::to_string(d) +
              "; connectivity of S^" + std::to_string(d) + " = " + std::to_string(d - 1)};
}

PresetEntry sphere(std::string key, int d) {
  CohomologyAlgebra a(key, d, true, {{"1", 0}, {"s", d}}, d - 1);
  a.complete_unit_products();
  return {std::move(key), std::move(a),
          "cohomology of S^" + std::to_string(d) + "; S^d is (d-1)-connected"};
}

PresetEntry projective(std::string key, int m) {
  std::vector<BasisClass> basis{{"1", 0}, {"x", 2}};
  for (int i = 2; i <= m; ++i) basis.push_back({"x^" + std::to_string(i), 2 * i});
  CohomologyAlgebra a(key, 2 * m, true, std::move(basis), 1);
  for (int i = 1; i <= m; ++i) {
    for (int j = 1; i + j <= m; ++j) a.set_product(i, j, i + j, 1);
  }
  a.complete_unit_products();
  return {std::move(key), std::move(a),
          "truncated polynomial ring Q[x]/x^" + std::to_string(m + 1) +
              ", |x| = 2; CP^m is simply connected (r = 1)"};
}

// Degree-1 classes a_i, b_i with a_i b_i = t = -b_i a_i. With `closed` a unit
// is added in front; without it this is H_c of the once-punctured surface.
PresetEntry surface(std::string key, int g, bool closed) {
  std::vector<BasisClass> basis;
  if (closed) basis.push_back({"1", 0});
  for (int i = 1; i <= g; ++i) {
    basis.push_back({"a" + std::to_string(i), 1});
    basis.push_back({"b" + std::to_string(i), 1});
  }
  basis.push_back({"t", 2});
  const std::size_t offset = closed ? 1 : 0;
  const std::size_t top = basis.size() - 1;
  CohomologyAlgebra a(key, 2, closed, std::move(basis), 0);
  for (int i = 0; i < g; ++i) {
    const std::size_t ai = offset + 2 * i;
    a.set_product(ai, ai + 1, top, 1);
    a.set_product(ai + 1, ai, top, -1);
  }
  a.complete_unit_products();
  std::string notes = closed ? "cohomology of the closed orientable surface of genus "
                             : "compactly supported cohomology of the once-punctured genus-";
  notes += std::to_string(g) + (closed ? "" : " surface (full intersection form)");
  notes += closed ? "; connected, not simply connected (r = 0)"
                  : "; quotient by the boundary is the closed surface (r = 0)";
  return {std::move(key), std::move(a), std::move(notes)};
}

}  // namespace

PresetEntry get_preset_entry(std::string_view key) {
  constexpr std::string_view kPunctured = "-punctured";
  const bool punctured = key.ends_with(kPunctured);
  const std::string_view stem = punctured ? key.substr(0, key.size() - kPunctured.size()) : key;

  if (key == "r2") return euclidean(std::string(key), 2);
  if (key == "torus") return surface(std::string(key), 1, true);

  const auto colon = stem.find(':');
  if (colon == std::string_view::npos) unknown(key);
  const std::string_view family = stem.substr(0, colon);
  const auto param = parse_int(stem.substr(colon + 1));
  if (!param) unknown(key);

  if (family == "sphere-even" && *param >= 2 && *param % 2 == 0) {
    return punctured ? euclidean(std::string(key), *param) : sphere(std::string(key), *param);
  }
  if (family == "genus" && *param >= 1) return surface(std::string(key), *param, !punctured);
  if (family == "cp" && *param >= 1 && !punctured) return projective(std::string(key), *param);
  unknown(key);
}

CohomologyAlgebra get_preset(std::string_view key) { return get_preset_entry(key).algebra; }

std::vector<std::string> preset_patterns() {
  return {"r2",    "sphere-even:<d>", "sphere-even:<d>-punctured", "cp:<m>",
          "torus", "genus:<g>",       "genus:<g>-punctured"};
}

std::vector<std::string> preset_catalog() {
  return {"r2",          "sphere-even:2", "sphere-even:4", "sphere-even:4-punctured",
          "cp:2",        "cp:3",          "torus",         "genus:2",
          "genus:1-punctured", "genus:2-punctured"};
}

}  // namespace confspace
