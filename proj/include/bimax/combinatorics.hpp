#ifndef BIMAX_COMBINATORICS_HPP
#define BIMAX_COMBINATORICS_HPP

#include <cstdint>

namespace bimax {

// Exact binomial coefficient for the enumeration ranges (i <= 25).
std::uint64_t binomial(int i, int j);

// The rank-th m-subset of [0, cells) as a bitmask, where subsets are
// ordered by increasing numeric mask value (the combinatorial number
// system). Enumeration workers use this to start mid-range.
std::uint64_t unrank_combination(std::uint64_t rank, int m, int cells);

// The numerically next mask with the same popcount (Gosper's hack).
// Undefined for v == 0.
std::uint64_t next_combination(std::uint64_t v);

}  // namespace bimax

#endif
