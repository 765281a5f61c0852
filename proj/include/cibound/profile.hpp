#pragma once

// Multi-degree profiles (n, r, d_1..d_r) of complete intersections of
// dimension n in P^{n+r}, plus the degree-1 normalization.

#include <algorithm>
#include <numeric>
#include <string>
#include <vector>

#include "cibound/arith.hpp"

namespace cibound {

/// The tuple (n, r, d_1..d_r); r is implicit in the degree list. A profile
/// with an empty degree list is the projective-space marker produced by
/// normalize() when every form is linear; create() never accepts one.
struct MultiDegreeProfile {
  int n = 1;
  std::vector<int> degrees;

  static MultiDegreeProfile create(int n, std::vector<int> degrees) {
    if (n < 1) throw input_error("profile: dimension n must be >= 1, got " + std::to_string(n));
    if (degrees.empty()) throw input_error("profile: at least one degree required");
    for (int d : degrees)
      if (d < 1) throw input_error("profile: degrees must be >= 1, got " + std::to_string(d));
    return MultiDegreeProfile{n, std::move(degrees)};
  }

  int r() const { return static_cast<int>(degrees.size()); }
  int d_prime() const { return std::accumulate(degrees.begin(), degrees.end(), 0); }

  /// The hypothesis sum d_i <= n + r under which the factorial upper bound
  /// applies.
  bool fano() const { return d_prime() <= n + r(); }

  bool is_projective_space() const { return degrees.empty(); }
  bool is_normalized() const {
    return std::none_of(degrees.begin(), degrees.end(), [](int d) { return d == 1; });
  }
  int max_degree() const { return degrees.empty() ? 1 : *std::max_element(degrees.begin(), degrees.end()); }

  std::string to_string() const {
    std::string s = "(n=" + std::to_string(n) + ", r=" + std::to_string(r()) + ", degrees=[";
    for (std::size_t i = 0; i < degrees.size(); ++i) {
      if (i) s += ",";
      s += std::to_string(degrees[i]);
    }
    return s + "])";
  }

  bool operator==(const MultiDegreeProfile&) const = default;
};

/// Removes every degree-1 form: a linear section only cuts down the ambient
/// projective space, so (n, r, [..,1,..]) and (n, r-1, [..]) describe the same
/// variety. All degrees removed leaves the projective-space marker.
inline MultiDegreeProfile normalize(const MultiDegreeProfile& p) {
  MultiDegreeProfile out;
  out.n = p.n;
  for (int d : p.degrees)
    if (d > 1) out.degrees.push_back(d);
  return out;
}

}  // namespace cibound
