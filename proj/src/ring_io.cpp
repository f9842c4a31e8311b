#include "confspace/ring_io.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

namespace confspace {

namespace {

using nlohmann::json;

const json& require(const json& obj, const char* key) {
  if (!obj.is_object() || !obj.contains(key)) {
    throw RingFormatError(std::string("missing field '") + key + "'");
  }
  return obj.at(key);
}

std::size_t basis_index(const CohomologyAlgebra& a, const json& ref) {
  if (!ref.is_string()) throw RingFormatError("basis references must be class names");
  const auto idx = a.find(ref.get<std::string>());
  if (!idx) throw RingFormatError("unknown basis class '" + ref.get<std::string>() + "'");
  return *idx;
}

Rational coefficient_from(const json& c) {
  if (c.is_number_integer()) {
    if (c.is_number_unsigned()) return Rational(Integer(std::to_string(c.get<std::uint64_t>())));
    return Rational(Integer(std::to_string(c.get<std::int64_t>())));
  }
  if (c.is_string()) {
    try {
      return parse_rational(c.get<std::string>());
    } catch (const std::invalid_argument& e) {
      throw RingFormatError(e.what());
    }
  }
  throw RingFormatError("coefficients must be integers or \"p/q\" strings");
}

}  // namespace

CohomologyAlgebra parse_ring(std::string_view json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw RingFormatError(std::string("invalid JSON: ") + e.what());
  }

  try {
    std::vector<BasisClass> basis;
    for (const auto& b : require(doc, "basis")) {
      basis.push_back({require(b, "name").get<std::string>(), require(b, "degree").get<int>()});
    }
    std::optional<int> connectivity;
    if (doc.contains("connectivity") && !doc.at("connectivity").is_null()) {
      connectivity = doc.at("connectivity").get<int>();
    }
    CohomologyAlgebra algebra(require(doc, "name").get<std::string>(),
                              require(doc, "dimension").get<int>(),
                              require(doc, "closed").get<bool>(), std::move(basis), connectivity);

    if (doc.contains("products")) {
      for (const auto& p : doc.at("products")) {
        const std::size_t left = basis_index(algebra, require(p, "left"));
        const std::size_t right = basis_index(algebra, require(p, "right"));
        if (algebra.has_product_entry(left, right)) {
          throw RingFormatError("product " + algebra.basis()[left].name + " * " +
                                algebra.basis()[right].name + " listed twice");
        }
        algebra.declare_product(left, right);
        for (const auto& term : require(p, "result")) {
          const std::size_t k = basis_index(algebra, require(term, "basis"));
          const Rational c =
              algebra.coefficient(left, right, k) + coefficient_from(require(term, "coeff"));
          algebra.set_product(left, right, k, c);
        }
      }
    }
    algebra.complete_unit_products();
    return algebra;
  } catch (const json::exception& e) {
    throw RingFormatError(std::string("schema error: ") + e.what());
  }
}

CohomologyAlgebra load_ring_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw RingFormatError("cannot read '" + path.string() + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_ring(buf.str());
}

std::string dump_ring(const CohomologyAlgebra& algebra) {
  json doc;
  doc["name"] = algebra.name();
  doc["dimension"] = algebra.dimension();
  doc["closed"] = algebra.closed();
  if (algebra.connectivity()) doc["connectivity"] = *algebra.connectivity();
  doc["basis"] = json::array();
  for (const auto& b : algebra.basis()) doc["basis"].push_back({{"name", b.name}, {"degree", b.degree}});
  doc["products"] = json::array();
  for (const auto& [pair, terms] : algebra.products()) {
    if (terms.empty()) continue;
    json result = json::array();
    for (const auto& [k, c] : terms) {
      json coeff;
      if (c.get_den() == 1 && c.get_num().fits_slong_p()) {
        coeff = c.get_num().get_si();
      } else {
        coeff = to_string(c);
      }
      result.push_back({{"coeff", coeff}, {"basis", algebra.basis()[k].name}});
    }
    doc["products"].push_back({{"left", algebra.basis()[pair.first].name},
                               {"right", algebra.basis()[pair.second].name},
                               {"result", std::move(result)}});
  }
  return doc.dump(2) + "\n";
}

}  // namespace confspace
