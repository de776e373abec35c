#pragma once

#include <cstdint>
#include <limits>
#include <vector>

namespace cfc {

constexpr std::int64_t NEG_INF = std::numeric_limits<std::int64_t>::min();

// Tables are indexed by subset bitmask over a ground set of size n (size 2^n).

// (f*g)(Y) = sum over A ⊎ B = Y of f(A)·g(B), exact modulo 2^64
std::vector<std::int64_t> subset_convolution_ring(const std::vector<std::int64_t>& f,
                                                  const std::vector<std::int64_t>& g, int n);

// (f*g)(Y) = max over A ⊎ B = Y of f(A)+g(B), NEG_INF absorbing.
// Values are shifted to be non-negative and encoded as exponents of a formal
// variable, so the cost is 2^n·n²·D² with D the value range.
std::vector<std::int64_t> subset_convolution_maxsum(const std::vector<std::int64_t>& f,
                                                    const std::vector<std::int64_t>& g, int n);

} // namespace cfc
