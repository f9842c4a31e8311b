#ifndef CONFSPACE_RING_IO_HPP
#define CONFSPACE_RING_IO_HPP

#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>

#include "confspace/algebra.hpp"

namespace confspace {

// Raised for unreadable files and documents that do not follow the
// ring-description schema. Domain problems (bad signs, degenerate pairing)
// are not parse errors; they surface through validate_algebra().
class RingFormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Ring-description document:
//
//   {
//     "name": "torus", "dimension": 2, "closed": true, "connectivity": 0,
//     "basis": [{"name": "1", "degree": 0}, ...],
//     "products": [{"left": "a1", "right": "b1",
//                   "result": [{"coeff": 1, "basis": "t"}]}, ...]
//   }
//
// Coefficients are JSON integers or "p/q" strings. For closed rings the unit
// products are filled in for every pair the document leaves out.
CohomologyAlgebra parse_ring(std::string_view json_text);
CohomologyAlgebra load_ring_file(const std::filesystem::path& path);

// Inverse of parse_ring: every nonzero structure constant, unit products
// included, in (left, right) order. Deterministic output.
std::string dump_ring(const CohomologyAlgebra& algebra);

}  // namespace confspace

#endif  // CONFSPACE_RING_IO_HPP
