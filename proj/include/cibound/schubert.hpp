#pragma once

// A minimal Chow-ring engine for the Grassmannian Gr(2, m) over the Schubert
// basis {sigma_{a,b} : m-2 >= a >= b >= 0}, with splitting-principle Chern
// classes of Sym^3 of a rank-2 bundle and the degree (integration) map.
// Reproduces the 27 lines on a cubic and the index bound for the Fano variety
// of lines.

#include <compare>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "cibound/arith.hpp"

namespace cibound::schubert {

/// A two-row partition (a, b), a >= b >= 0. Valid on Gr(2, m) iff a <= m-2.
struct Partition2 {
  int a = 0;
  int b = 0;
  auto operator<=>(const Partition2&) const = default;
  int weight() const { return a + b; }
};

/// An integer combination of Schubert basis classes on a fixed Gr(2, m).
/// Out-of-box terms are identically zero and are never stored.
class SchubertClass {
 public:
  explicit SchubertClass(int m) : m_(m) {
    if (m < 3) throw input_error("SchubertClass: Gr(2,m) needs m >= 3");
  }

  static SchubertClass sigma(int m, int a, int b, NatBig coeff = 1) {
    SchubertClass cls(m);
    if (a < b || b < 0) throw input_error("SchubertClass: partition needs a >= b >= 0");
    cls.add_term({a, b}, std::move(coeff));
    return cls;
  }

  int ambient_m() const { return m_; }
  bool is_zero() const { return terms_.empty(); }
  const std::map<Partition2, NatBig>& terms() const { return terms_; }

  NatBig coefficient(Partition2 p) const {
    auto it = terms_.find(p);
    return it == terms_.end() ? NatBig(0) : it->second;
  }

  /// Adds coeff * sigma_{p}; silently drops terms outside the box.
  SchubertClass& add_term(Partition2 p, const NatBig& coeff) {
    if (coeff == 0 || p.a > m_ - 2 || p.a < p.b || p.b < 0) return *this;
    NatBig& slot = terms_[p];
    slot += coeff;
    if (slot == 0) terms_.erase(p);
    return *this;
  }

  friend SchubertClass operator+(const SchubertClass& x, const SchubertClass& y) {
    check_same_ambient(x, y);
    SchubertClass out = x;
    for (const auto& [p, c] : y.terms_) out.add_term(p, c);
    return out;
  }
  friend SchubertClass operator-(const SchubertClass& x, const SchubertClass& y) {
    check_same_ambient(x, y);
    SchubertClass out = x;
    for (const auto& [p, c] : y.terms_) out.add_term(p, -c);
    return out;
  }
  friend SchubertClass operator*(const NatBig& k, const SchubertClass& x) {
    SchubertClass out(x.m_);
    for (const auto& [p, c] : x.terms_) out.add_term(p, k * c);
    return out;
  }

  bool operator==(const SchubertClass&) const = default;

  static void check_same_ambient(const SchubertClass& x, const SchubertClass& y) {
    if (x.m_ != y.m_)
      throw input_error("SchubertClass: ambient mismatch Gr(2," + std::to_string(x.m_) + ") vs Gr(2," +
                        std::to_string(y.m_) + ")");
  }

 private:
  int m_;
  std::map<Partition2, NatBig> terms_;
};

/// Pieri rule: sigma_1 * sigma_{a,b} = sigma_{a+1,b} + sigma_{a,b+1}, with
/// terms leaving the box or the partition order dropped.
inline SchubertClass pieri_sigma1(const SchubertClass& cls) {
  SchubertClass out(cls.ambient_m());
  for (const auto& [p, c] : cls.terms()) {
    out.add_term({p.a + 1, p.b}, c);
    out.add_term({p.a, p.b + 1}, c);
  }
  return out;
}

/// sigma_{1,1} * sigma_{a,b} = sigma_{a+1,b+1} (zero past the box edge).
inline SchubertClass shift_sigma11(const SchubertClass& cls) {
  SchubertClass out(cls.ambient_m());
  for (const auto& [p, c] : cls.terms()) out.add_term({p.a + 1, p.b + 1}, c);
  return out;
}

/// Ring product in CH(Gr(2, m)). Every basis class factors as
/// sigma_{a,b} = sigma_{1,1}^b * sigma_{a-b}, and the single-row classes
/// satisfy sigma_k = sigma_1 sigma_{k-1} - sigma_{1,1} sigma_{k-2}, an
/// identity that survives the box truncation; products therefore reduce to
/// the two special rules above.
inline SchubertClass multiply(const SchubertClass& x, const SchubertClass& y) {
  SchubertClass::check_same_ambient(x, y);
  const int m = x.ambient_m();
  SchubertClass out(m);
  for (const auto& [p, c] : y.terms()) {
    // x * sigma_{k} for k = 0..a-b via the three-term recursion
    SchubertClass prev2 = x;                // x * sigma_0
    SchubertClass prev1 = pieri_sigma1(x);  // x * sigma_1
    const int k = p.a - p.b;
    SchubertClass row = (k == 0) ? prev2 : prev1;
    for (int j = 2; j <= k; ++j) {
      SchubertClass next = pieri_sigma1(prev1) - shift_sigma11(prev2);
      prev2 = prev1;
      prev1 = next;
      row = next;
    }
    for (int j = 0; j < p.b; ++j) row = shift_sigma11(row);
    out = out + c * row;
  }
  return out;
}

/// Degree map: the coefficient of the top class sigma_{m-2,m-2}.
inline NatBig integrate(const SchubertClass& cls) {
  const int t = cls.ambient_m() - 2;
  return cls.coefficient({t, t});
}

// ---------------------------------------------------------------------------
// Symmetric polynomials in two Chern roots
// ---------------------------------------------------------------------------

/// A polynomial with integer coefficients in the elementary symmetric
/// generators e1, e2 of two Chern roots, graded by weight(e1) = 1,
/// weight(e2) = 2.
class SymmetricPoly2 {
 public:
  using Key = std::pair<int, int>;  // (i, j) -> e1^i e2^j

  SymmetricPoly2() = default;

  static SymmetricPoly2 term(int i, int j, NatBig coeff) {
    SymmetricPoly2 p;
    p.add(i, j, std::move(coeff));
    return p;
  }
  static SymmetricPoly2 e1() { return term(1, 0, 1); }
  static SymmetricPoly2 e2() { return term(0, 1, 1); }

  SymmetricPoly2& add(int i, int j, const NatBig& coeff) {
    if (i < 0 || j < 0) throw input_error("SymmetricPoly2: negative exponent");
    if (coeff == 0) return *this;
    NatBig& slot = coeffs_[{i, j}];
    slot += coeff;
    if (slot == 0) coeffs_.erase({i, j});
    return *this;
  }

  const std::map<Key, NatBig>& coefficients() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  NatBig coefficient(int i, int j) const {
    auto it = coeffs_.find({i, j});
    return it == coeffs_.end() ? NatBig(0) : it->second;
  }

  /// Substitution e1 -> v1, e2 -> v2 (used for spot checks and the
  /// sign-convention test e1 -> -e1).
  NatBig evaluate(const NatBig& v1, const NatBig& v2) const {
    NatBig acc = 0;
    for (const auto& [k, c] : coeffs_) {
      NatBig t = c;
      for (int i = 0; i < k.first; ++i) t *= v1;
      for (int j = 0; j < k.second; ++j) t *= v2;
      acc += t;
    }
    return acc;
  }

  SymmetricPoly2 substitute_e1_negated() const {
    SymmetricPoly2 out;
    for (const auto& [k, c] : coeffs_) out.add(k.first, k.second, k.first % 2 ? -c : c);
    return out;
  }

  friend SymmetricPoly2 operator+(const SymmetricPoly2& x, const SymmetricPoly2& y) {
    SymmetricPoly2 out = x;
    for (const auto& [k, c] : y.coeffs_) out.add(k.first, k.second, c);
    return out;
  }
  friend SymmetricPoly2 operator*(const SymmetricPoly2& x, const SymmetricPoly2& y) {
    SymmetricPoly2 out;
    for (const auto& [kx, cx] : x.coeffs_)
      for (const auto& [ky, cy] : y.coeffs_) out.add(kx.first + ky.first, kx.second + ky.second, cx * cy);
    return out;
  }

  bool operator==(const SymmetricPoly2&) const = default;

 private:
  std::map<Key, NatBig> coeffs_;
};

namespace detail {

/// Plain polynomial in the two Chern roots x1, x2 (exponent pair -> coeff).
class XPoly {
 public:
  using Key = std::pair<int, int>;

  XPoly() = default;
  static XPoly linear(NatBig c1, NatBig c2) {
    XPoly p;
    p.add(1, 0, std::move(c1));
    p.add(0, 1, std::move(c2));
    return p;
  }
  static XPoly constant(NatBig c) {
    XPoly p;
    p.add(0, 0, std::move(c));
    return p;
  }

  XPoly& add(int i, int j, const NatBig& coeff) {
    if (coeff == 0) return *this;
    NatBig& slot = coeffs_[{i, j}];
    slot += coeff;
    if (slot == 0) coeffs_.erase({i, j});
    return *this;
  }

  bool is_zero() const { return coeffs_.empty(); }
  const std::map<Key, NatBig>& coefficients() const { return coeffs_; }

  friend XPoly operator+(const XPoly& x, const XPoly& y) {
    XPoly out = x;
    for (const auto& [k, c] : y.coeffs_) out.add(k.first, k.second, c);
    return out;
  }
  friend XPoly operator-(const XPoly& x, const XPoly& y) {
    XPoly out = x;
    for (const auto& [k, c] : y.coeffs_) out.add(k.first, k.second, -c);
    return out;
  }
  friend XPoly operator*(const XPoly& x, const XPoly& y) {
    XPoly out;
    for (const auto& [kx, cx] : x.coeffs_)
      for (const auto& [ky, cy] : y.coeffs_) out.add(kx.first + ky.first, kx.second + ky.second, cx * cy);
    return out;
  }

  bool operator==(const XPoly&) const = default;

 private:
  std::map<Key, NatBig> coeffs_;
};

inline XPoly power(XPoly base, int e) {
  XPoly acc = XPoly::constant(1);
  for (int i = 0; i < e; ++i) acc = acc * base;
  return acc;
}

/// Rewrites a symmetric polynomial in x1, x2 over the elementary basis:
/// repeatedly strip the lex-leading monomial x1^a x2^b (a >= b for a
/// symmetric polynomial) as e1^{a-b} e2^b. Throws if the input is not
/// symmetric.
inline SymmetricPoly2 to_elementary(XPoly p) {
  const XPoly e1 = XPoly::linear(1, 1);
  const XPoly e2 = XPoly::linear(0, 1) * XPoly::linear(1, 0);
  SymmetricPoly2 out;
  while (!p.is_zero()) {
    // lex-leading: largest x1-exponent, then largest x2-exponent
    auto lead = p.coefficients().rbegin();
    const auto [a, b] = lead->first;
    const NatBig c = lead->second;
    if (a < b) throw consistency_error("to_elementary: polynomial is not symmetric in the Chern roots");
    out.add(a - b, b, c);
    XPoly back = power(e1, a - b) * power(e2, b);
    XPoly scaled;
    for (const auto& [k, bc] : back.coefficients()) scaled.add(k.first, k.second, bc * c);
    p = p - scaled;
  }
  return out;
}

/// k-th elementary symmetric polynomial of an arbitrary list of root forms.
inline XPoly elementary_of_roots(const std::vector<XPoly>& roots, int k) {
  // coefficient of T^{n-k} in prod (T + root): run the product as a vector of
  // T-coefficients
  std::vector<XPoly> acc{XPoly::constant(1)};
  for (const XPoly& r : roots) {
    std::vector<XPoly> next(acc.size() + 1);
    for (std::size_t i = 0; i < next.size(); ++i) next[i] = XPoly();
    for (std::size_t i = 0; i < acc.size(); ++i) {
      next[i] = next[i] + acc[i];          // times T
      next[i + 1] = next[i + 1] + acc[i] * r;  // times root
    }
    acc = std::move(next);
  }
  return acc.at(static_cast<std::size_t>(k));
}

}  // namespace detail

/// Chern classes of Sym^3 of a rank-2 bundle with Chern roots x1, x2: the
/// k-th elementary symmetric polynomial of {3x1, 2x1+x2, x1+2x2, 3x2},
/// rewritten in e1 = c1, e2 = c2.
inline SymmetricPoly2 chern_sym3(int k) {
  if (k < 1 || k > 4) throw input_error("chern_sym3: k must be in 1..4");
  const std::vector<detail::XPoly> roots = {
      detail::XPoly::linear(3, 0),
      detail::XPoly::linear(2, 1),
      detail::XPoly::linear(1, 2),
      detail::XPoly::linear(0, 3),
  };
  return detail::to_elementary(detail::elementary_of_roots(roots, k));
}

/// Identifies e1 -> sigma_1, e2 -> sigma_{1,1} and expands on Gr(2, m).
inline SchubertClass embed(const SymmetricPoly2& poly, int m) {
  SchubertClass out(m);
  for (const auto& [k, c] : poly.coefficients()) {
    SchubertClass mono = SchubertClass::sigma(m, 0, 0);
    for (int i = 0; i < k.first; ++i) mono = pieri_sigma1(mono);
    for (int j = 0; j < k.second; ++j) mono = shift_sigma11(mono);
    out = out + c * mono;
  }
  return out;
}

/// Degree of the Fano variety of lines on a cubic n-fold sliced down to a
/// 4-dimensional cycle: integrate(c4(Sym^3 U) * sigma_{1,1}^{n-2}) on
/// Gr(2, n+2). Equals 27 for every n >= 2; exported to the bounds module as
/// the index constraint of the fano-lines example.
inline NatBig fano_lines_degree(int n) {
  if (n < 2) throw input_error("fano_lines_degree: n must be >= 2");
  const int m = n + 2;
  SchubertClass cls = embed(chern_sym3(4), m);
  for (int j = 0; j < n - 2; ++j) cls = shift_sigma11(cls);
  return integrate(cls);
}

}  // namespace cibound::schubert
