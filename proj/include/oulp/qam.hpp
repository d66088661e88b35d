#pragma once

#include "oulp/types.hpp"

#include <cstdint>
#include <vector>

namespace oulp {

// Gray-mapped unit-energy 16-QAM. Point index bits b3 b2 b1 b0: (b3, b2) pick the in-phase
// level and (b1, b0) the quadrature level, each through 00 -> -3, 01 -> -1, 11 -> +1, 10 -> +3.
const CVec& qam16_constellation();

CVec qam16_map(const std::vector<std::uint8_t>& bits);
std::vector<std::uint8_t> qam16_demap(const CVec& symbols);

int qam16_index(const std::uint8_t* bits);
void qam16_bits(int index, std::uint8_t* bits);

inline int bit_errors(int a, int b) { return __builtin_popcount(static_cast<unsigned>(a ^ b)); }

} // namespace oulp
