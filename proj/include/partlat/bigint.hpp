// Copyright 2026 The partlat Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef PARTLAT_BIGINT_HPP_
#define PARTLAT_BIGINT_HPP_

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <mutex>
#include <string>
#include <vector>

namespace partlat {

using BigInt = boost::multiprecision::cpp_int;
using BigFloat = boost::multiprecision::cpp_bin_float_50;

inline BigInt factorial(unsigned n) {
  BigInt r = 1;
  for (unsigned i = 2; i <= n; ++i) r *= i;
  return r;
}

inline BigInt binomial(const BigInt& n, unsigned k) {
  if (k > n) return 0;
  BigInt r = 1;
  for (unsigned i = 1; i <= k; ++i) {
    r *= n - (k - i);
    r /= i;
  }
  return r;
}

inline BigInt binomial(unsigned n, unsigned k) { return binomial(BigInt(n), k); }

// Exact when the result fits; callers use it for small table sizes only.
inline std::uint64_t binomial_u64(std::uint64_t n, unsigned k) {
  if (k > n) return 0;
  std::uint64_t r = 1;
  for (unsigned i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

// Bell numbers from the Bell triangle; rows are cached.
inline BigInt bell(unsigned n) {
  static std::mutex mu;
  static std::vector<BigInt> cache{1};
  std::lock_guard<std::mutex> lock(mu);
  if (n < cache.size()) return cache[n];
  std::vector<BigInt> row{1};
  for (unsigned i = 1; i <= n; ++i) {
    std::vector<BigInt> next{row.back()};
    next.reserve(row.size() + 1);
    for (const auto& x : row) next.push_back(next.back() + x);
    row = std::move(next);
    if (i >= cache.size()) cache.push_back(row.front());
  }
  return cache[n];
}

inline std::uint64_t bell_u64(unsigned n) { return bell(n).convert_to<std::uint64_t>(); }

inline std::string to_string(const BigInt& x) { return x.str(); }

// "3.911e19" style rendering with the given number of significant digits.
inline std::string to_scientific(const BigInt& x, unsigned digits) {
  std::string s = x.str();
  bool neg = !s.empty() && s[0] == '-';
  if (neg) s.erase(0, 1);
  if (s.size() <= digits) return (neg ? "-" : "") + s;
  BigInt scale = boost::multiprecision::pow(BigInt(10), static_cast<unsigned>(s.size() - digits));
  BigInt a = boost::multiprecision::abs(x);
  BigInt q = (a + scale / 2) / scale;
  std::string m = q.str();
  std::size_t exp = s.size() - 1;
  if (m.size() > digits) {
    m.pop_back();
    ++exp;
  }
  std::string out = neg ? "-" : "";
  out += m.substr(0, 1);
  if (m.size() > 1) out += "." + m.substr(1);
  out += "e" + std::to_string(exp);
  return out;
}

}  // namespace partlat

#endif  // PARTLAT_BIGINT_HPP_
