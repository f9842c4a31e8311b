#ifndef CONFSPACE_PRESETS_HPP
#define CONFSPACE_PRESETS_HPP

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "confspace/algebra.hpp"

namespace confspace {

struct PresetEntry {
  std::string key;
  CohomologyAlgebra algebra;
  std::string notes;
};

class UnknownPresetError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Key grammar:
//   r2                        H_c(R^2)
//   sphere-even:<d>           H(S^d), d even >= 2
//   sphere-even:<d>-punctured H_c(R^d)
//   cp:<m>                    H(CP^m), m >= 1
//   torus                     same as genus:1
//   genus:<g>                 H of the closed orientable surface of genus g
//   genus:<g>-punctured       H_c of that surface minus a point
PresetEntry get_preset_entry(std::string_view key);
CohomologyAlgebra get_preset(std::string_view key);

// Key patterns, for error messages and --help.
std::vector<std::string> preset_patterns();

// Representative instances of every family, used by test sweeps.
std::vector<std::string> preset_catalog();

}  // namespace confspace

#endif  // CONFSPACE_PRESETS_HPP
