#ifndef CONFSPACE_TEST_SUPPORT_HPP
#define CONFSPACE_TEST_SUPPORT_HPP

#include <cstddef>
#include <random>
#include <string>
#include <vector>

#include "confspace/algebra.hpp"
#include "confspace/exact_linalg.hpp"

namespace confspace::testing {

using DenseMatrix = std::vector<std::vector<Rational>>;

// Textbook Gauss-Jordan over Q on a dense copy. Independent of the sparse
// fraction-free elimination under test.
std::size_t dense_rank(DenseMatrix m);
DenseMatrix to_dense(const RationalMatrix& m);

// H_c of M minus a point: the same ring with the unit class removed.
CohomologyAlgebra drop_unit(const CohomologyAlgebra& closed);

// Substitutes a random invertible integer basis change in every degree
// (keeping the unit fixed), which gives generic rational structure constants.
CohomologyAlgebra random_basis_change(const CohomologyAlgebra& a, std::mt19937_64& rng);

// A random valid ring of dimension <= 6: a closed building block or its
// punctured H_c ring, scrambled by random_basis_change.
CohomologyAlgebra random_valid_algebra(std::mt19937_64& rng);

// Equal dimension, closedness, degrees and nonzero structure constants
// (names ignored).
bool same_structure(const CohomologyAlgebra& a, const CohomologyAlgebra& b);

}  // namespace confspace::testing

#endif  // CONFSPACE_TEST_SUPPORT_HPP
