#pragma once

// Exact big-integer combinatorics: factorials, lcm-factorials d!* = lcm(1..d),
// p-adic valuations, and the brute-force lcm-of-products oracle.
//
// Everything here is exact integer arithmetic; no floating point is used
// anywhere in the library.

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace cibound {

/// Arbitrary-precision integer. Quantities handled by the library are
/// non-negative; negativity is rejected at the API boundaries that care.
using NatBig = boost::multiprecision::cpp_int;

/// Bad caller input (invalid profile, guard exceeded, ...). Maps to exit 1
/// in the CLI.
struct input_error : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// An internally inconsistent state, e.g. a certified divisor that fails to
/// divide the certified multiple. Always a bug, never a user error. Maps to
/// exit 2 in the CLI.
struct consistency_error : std::logic_error {
  using std::logic_error::logic_error;
};

/// Trial-division primality. Degrees are desk-scale, so this is all the
/// number theory the library needs.
inline bool is_prime(long long p) {
  if (p < 2) return false;
  for (long long q = 2; q * q <= p; ++q)
    if (p % q == 0) return false;
  return true;
}

inline std::vector<int> primes_up_to(int n) {
  std::vector<int> out;
  for (int p = 2; p <= n; ++p)
    if (is_prime(p)) out.push_back(p);
  return out;
}

/// d! for d >= 1. Degree-0 forms do not exist, so d = 0 is rejected rather
/// than mapped to the empty product.
inline NatBig factorial(int d) {
  if (d < 1) throw input_error("factorial: degree must be >= 1, got " + std::to_string(d));
  NatBig acc = 1;
  for (int i = 2; i <= d; ++i) acc *= i;
  return acc;
}

/// d!* = lcm(1, 2, ..., d), computed by iterated lcm.
inline NatBig lcm_factorial(int d) {
  if (d < 1) throw input_error("lcm_factorial: degree must be >= 1, got " + std::to_string(d));
  NatBig acc = 1;
  for (int i = 2; i <= d; ++i) acc = lcm(acc, NatBig(i));
  return acc;
}

/// The prime-power form of d!*: product over primes p <= d of p^floor(log_p d).
/// Kept separate from lcm_factorial so the two routes can be checked against
/// each other.
inline NatBig lcm_factorial_closed_form(int d) {
  if (d < 1) throw input_error("lcm_factorial_closed_form: degree must be >= 1");
  NatBig acc = 1;
  for (int p : primes_up_to(d)) {
    long long pe = p;
    while (pe <= d / p) pe *= p;  // largest power of p that is <= d
    acc *= pe;
  }
  return acc;
}

/// Largest e with p^e | x. Rejects x = 0 (the valuation would be infinite).
inline int p_adic_valuation(NatBig x, long long p) {
  if (x == 0) throw input_error("p_adic_valuation: valuation of 0 is infinite");
  if (x < 0) throw input_error("p_adic_valuation: negative argument");
  if (!is_prime(p)) throw input_error("p_adic_valuation: modulus must be prime");
  int e = 0;
  while (x % p == 0) {
    x /= p;
    ++e;
  }
  return e;
}

/// lcm over all tuples (i_1, ..., i_r), 1 <= i_j <= d_j, of the product
/// i_1 * ... * i_r, by exhaustive enumeration. This is the independent check
/// for lcm_factorial_product; the identity of the two is the content of the
/// product lemma.
///
/// The tuple count is capped (default 10^6) since the enumeration is
/// exponential in r.
inline NatBig product_lcm_oracle(const std::vector<int>& degrees,
                                 std::uint64_t tuple_guard = 1'000'000) {
  if (degrees.empty()) return 1;
  NatBig tuples = 1;
  for (int d : degrees) {
    if (d < 1) throw input_error("product_lcm_oracle: degrees must be >= 1");
    tuples *= d;
  }
  if (tuples > tuple_guard)
    throw input_error("product_lcm_oracle: oracle too large (" + tuples.str() + " tuples exceed guard " +
                      std::to_string(tuple_guard) + ")");

  std::vector<int> idx(degrees.size(), 1);
  NatBig acc = 1;
  for (;;) {
    NatBig prod = 1;
    for (int v : idx) prod *= v;
    acc = lcm(acc, prod);
    // odometer increment
    std::size_t k = 0;
    while (k < idx.size() && idx[k] == degrees[k]) idx[k++] = 1;
    if (k == idx.size()) break;
    ++idx[k];
  }
  return acc;
}

/// prod_j d_j!*. Equal to product_lcm_oracle on the same input whenever the
/// oracle's guard admits the enumeration.
inline NatBig lcm_factorial_product(const std::vector<int>& degrees) {
  NatBig acc = 1;
  for (int d : degrees) acc *= lcm_factorial(d);
  return acc;
}

}  // namespace cibound
