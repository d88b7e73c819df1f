#pragma once

#include <cstddef>
#include <vector>

#include "hankelcf/series.hpp"

namespace hankelcf {

/// Brute-force Hankel determinant H_n^{(k)}: determinant of the n x n matrix
/// with entries a_{k+i+j}. Independent of the continued-fraction machinery;
/// this is the ground truth the rest of the library is checked against.
/// F_p uses Gaussian elimination, Q uses fraction-free Bareiss on integer
/// lifts with the final exact division checked.
FieldElement hankel_det(const SeriesHandle& s, std::size_t n, std::size_t k = 0);
FieldElement hankel_det(const std::vector<FieldElement>& coeffs, const FieldSpec& spec,
                        std::size_t n, std::size_t k = 0);

/// H_0..H_{n_max}, each determinant built independently.
std::vector<FieldElement> hankel_sequence_bruteforce(const SeriesHandle& s, std::size_t n_max);
std::vector<FieldElement> hankel_sequence_bruteforce(const std::vector<FieldElement>& coeffs,
                                                     const FieldSpec& spec, std::size_t n_max);

}  // namespace hankelcf
