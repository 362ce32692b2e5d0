#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace turan {

// All counting in audits and bound evaluation is exact: arbitrary-precision
// integers and rationals, no floating point on any verification path.
using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

BigInt binom(long long n, long long k);
BigInt factorial(long long n);
BigInt ipow(const BigInt& base, unsigned long long exp);

// Largest v >= 0 with v^t <= x. Requires x >= 0, t >= 1.
BigInt iroot_floor(const BigInt& x, unsigned t);

// Smallest k >= 0 with k >= alpha * x^(1/t), for rational alpha >= 0 and
// integer x >= 0. Computed by integer bracketing: k^t * den(alpha)^t is
// compared against num(alpha)^t * x, so no root is ever evaluated in
// floating point.
BigInt ceil_scaled_root(const BigRat& alpha, const BigInt& x, unsigned t);

// Largest r >= 0 with r <= beta * y^(1/t), for rational beta, y >= 0.
BigInt floor_scaled_root(const BigRat& beta, const BigRat& y, unsigned t);

// Smallest integer >= alpha * x^(1/t) returned as BigInt; alias used when
// a bound term must be rounded upward before scaling by a constant.
inline BigInt iroot_ceil(const BigInt& x, unsigned t) {
    BigInt f = iroot_floor(x, t);
    return ipow(f, t) == x ? f : f + 1;
}

BigRat rat_pow(const BigRat& base, unsigned long long exp);

std::string rat_str(const BigRat& r);

// FNV-1a, 64 bit. Used for content digests and cache checksums (integrity
// against accidental corruption, not an adversary).
std::uint64_t fnv1a64(std::string_view data);
std::string fnv1a64_hex(std::string_view data);

}  // namespace turan
