#pragma once

#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace ordhom {

using BigInt = boost::multiprecision::cpp_int;

/// Exact binomial coefficient C(n, k) from Pascal's recurrence; zero when k > n.
BigInt binomial(std::uint32_t n, std::uint32_t k);

/// 2^e as a big integer.
BigInt pow2(std::uint32_t e);

inline std::string to_string(const BigInt& v) { return v.str(); }

}  // namespace ordhom
