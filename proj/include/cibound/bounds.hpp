#pragma once

// Torsion-order certificates for complete intersections: the factorial upper
// bound, the lcm-factorial lower bounds for the generic member (with and
// without a rational point), prime-power witnesses for the very general
// member in characteristic zero, and a small divisibility-constraint solver
// replaying the worked examples.

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "cibound/arith.hpp"
#include "cibound/profile.hpp"

namespace cibound {

enum class Scenario { Generic, GenericWithPoint, VeryGeneralChar0 };

inline std::string to_string(Scenario s) {
  switch (s) {
    case Scenario::Generic: return "generic";
    case Scenario::GenericWithPoint: return "with-point";
    case Scenario::VeryGeneralChar0: return "very-general";
  }
  return "?";
}

/// Which divisibility rule certifies a witness: the m = 1 rule carries no
/// parity condition; the m >= 2 rule requires p odd or n even.
enum class WitnessRule { SinglePrime, PrimePower };

inline std::string to_string(WitnessRule r) {
  return r == WitnessRule::SinglePrime ? "single-prime" : "prime-power";
}

/// A verified instance (p, m, i, a, c) of the degeneration inequality
///   d_i >= p^m * ceil((n + r + 1 - d' + d_i) / (p^m + 1)),
/// certifying p^m | Tor for the very general member of the family.
struct PrimePowerWitness {
  int p = 2;
  int m = 1;
  int index = 1;      // 1-based position of the qualifying degree (smallest wins)
  long long a = 0;    // the ceiling above
  long long c = 0;    // d_i - p^m * a, >= 0 exactly when the witness is valid
  WitnessRule rule = WitnessRule::SinglePrime;

  std::string summary() const {
    return "p=" + std::to_string(p) + " m=" + std::to_string(m) + " index=" + std::to_string(index) +
           " a=" + std::to_string(a) + " c=" + std::to_string(c) + " rule=" + to_string(rule);
  }
  bool operator==(const PrimePowerWitness&) const = default;
};

struct ProvenanceEntry {
  std::string rule;
  NatBig factor;
  std::string citation;
};

/// A pair (known_divisor, known_multiple) of certified bounds on the torsion
/// order, with the rules that produced each factor.
struct TorsionCertificate {
  MultiDegreeProfile profile;     // as supplied by the caller
  MultiDegreeProfile normalized;  // degree-1 forms removed
  Scenario scenario = Scenario::Generic;
  NatBig known_divisor = 1;
  std::optional<NatBig> known_multiple;  // nullopt: unknown (torsion may be infinite)
  std::vector<ProvenanceEntry> provenance;
  std::vector<PrimePowerWitness> witnesses;
  std::string level_note;
  std::vector<std::string> notes;

  bool exact() const { return known_multiple && *known_multiple == known_divisor; }
};

namespace detail {
inline void require_normalized(const MultiDegreeProfile& p, const char* who) {
  if (!p.is_normalized())
    throw input_error(std::string(who) + ": expects a normalized profile (no degree-1 forms); run normalize() first");
}
}  // namespace detail

/// Factorial upper bound: prod_i d_i! bounds the torsion order whenever
/// sum d_i <= n + r; outside that range nothing is known (nullopt).
inline std::optional<NatBig> roitman_upper_bound(const MultiDegreeProfile& p) {
  detail::require_normalized(p, "roitman_upper_bound");
  if (!p.fano()) return std::nullopt;
  NatBig acc = 1;
  for (int d : p.degrees) acc *= factorial(d);
  return acc;
}

/// The complete intersection W_x in P^{n+r-1} of lines osculating to maximal
/// order at a point: multi-degree is the concatenation of (d_i-1, ..., 2, 1),
/// its degree prod_i (d_i-1)!, its codimension sum_i (d_i-1). The cone over a
/// linear slice of W_x realizes the factorial bound.
struct ConeProfile {
  std::vector<int> degrees;
  NatBig degree = 1;
  int codimension = 0;
};

inline ConeProfile roitman_cone_profile(const MultiDegreeProfile& p) {
  detail::require_normalized(p, "roitman_cone_profile");
  if (!p.fano()) throw input_error("roitman_cone_profile: requires sum d_i <= n + r");
  ConeProfile cone;
  for (int d : p.degrees) {
    for (int j = d - 1; j >= 1; --j) cone.degrees.push_back(j);
    cone.degree *= factorial(d - 1);  // d >= 2 after normalization
    cone.codimension += d - 1;
  }
  return cone;
}

/// prod_i d_i!*: a certified divisor of the torsion order of the generic
/// complete intersection over the function field of the parameter space.
inline NatBig generic_lower_divisor(const MultiDegreeProfile& p) {
  detail::require_normalized(p, "generic_lower_divisor");
  if (!p.fano())
    throw input_error("generic_lower_divisor: hypothesis sum d_i <= n + r fails for " + p.to_string());
  return lcm_factorial_product(p.degrees);
}

/// prod_i d_i, the index of the generic complete intersection.
inline NatBig index_generic(const MultiDegreeProfile& p) {
  detail::require_normalized(p, "index_generic");
  NatBig acc = 1;
  for (int d : p.degrees) acc *= d;
  return acc;
}

/// prod_i d_i!* / prod_i d_i: the divisor surviving after a rational point is
/// adjoined. The division is exact since d | d!*.
inline NatBig generic_with_point_lower_divisor(const MultiDegreeProfile& p) {
  NatBig num = generic_lower_divisor(p);
  NatBig den = index_generic(p);
  if (num % den != 0)
    throw consistency_error("generic_with_point_lower_divisor: non-exact division " + num.str() + " / " + den.str());
  return num / den;
}

/// Tests the degeneration inequality for one prime power p^m. Returns a
/// witness iff n >= 3, sum d_i <= n + r, some degree satisfies the inequality,
/// and the parity gate holds (m = 1 needs no parity; m >= 2 needs p odd or n
/// even). Smallest qualifying index wins.
inline std::optional<PrimePowerWitness> prime_power_witness(const MultiDegreeProfile& p, int prime, int m) {
  detail::require_normalized(p, "prime_power_witness");
  if (!is_prime(prime)) throw input_error("prime_power_witness: p must be prime, got " + std::to_string(prime));
  if (m < 1) throw input_error("prime_power_witness: m must be >= 1");
  if (p.n < 3) return std::nullopt;
  if (!p.fano()) return std::nullopt;
  const bool parity_ok = (m == 1) || (prime % 2 == 1) || (p.n % 2 == 0);
  if (!parity_ok) return std::nullopt;

  NatBig pm = 1;
  for (int j = 0; j < m; ++j) pm *= prime;
  const int base = p.n + p.r() + 1 - p.d_prime();  // >= 1 under the Fano hypothesis
  for (int i = 0; i < p.r(); ++i) {
    const int d = p.degrees[i];
    NatBig num = base + d;
    NatBig a = (num + pm) / (pm + 1);  // ceil(num / (pm + 1))
    if (d >= pm * a) {
      PrimePowerWitness w;
      w.p = prime;
      w.m = m;
      w.index = i + 1;
      w.a = a.convert_to<long long>();
      w.c = (NatBig(d) - pm * a).convert_to<long long>();
      w.rule = (m == 1) ? WitnessRule::SinglePrime : WitnessRule::PrimePower;
      return w;
    }
  }
  return std::nullopt;
}

struct VeryGeneralBound {
  NatBig divisor = 1;
  std::vector<PrimePowerWitness> witnesses;  // one per contributing prime, at its maximal m
};

/// Combined prime-power divisor for the very general member over an
/// algebraically closed field of characteristic zero: for each prime
/// p <= max d_i, the largest m with p^m <= max d_i and a valid witness
/// contributes p^m. Each m is tested independently; the inequality is not
/// assumed monotone in m. Profiles with n < 3 or sum d_i > n + r get the
/// trivial divisor 1.
inline VeryGeneralBound very_general_lower_divisor(const MultiDegreeProfile& p) {
  detail::require_normalized(p, "very_general_lower_divisor");
  VeryGeneralBound out;
  if (p.is_projective_space() || p.n < 3 || !p.fano()) return out;
  const int dmax = p.max_degree();
  for (int prime : primes_up_to(dmax)) {
    std::optional<PrimePowerWitness> best;
    long long pm = prime;
    for (int m = 1; pm <= dmax; ++m, pm *= prime) {
      if (auto w = prime_power_witness(p, prime, m)) best = w;
    }
    if (best) {
      NatBig contribution = 1;
      for (int j = 0; j < best->m; ++j) contribution *= prime;
      out.divisor *= contribution;
      out.witnesses.push_back(*best);
    }
  }
  return out;
}

/// Assembles the certificate for one profile and one field scenario. The
/// factorial multiple applies in every scenario; the divisor depends on it.
/// A divisor that fails to divide a finite multiple is a bug and raises
/// consistency_error.
inline TorsionCertificate certificate(const MultiDegreeProfile& profile, Scenario scenario) {
  TorsionCertificate cert;
  cert.profile = profile;
  cert.normalized = normalize(profile);
  cert.scenario = scenario;

  const MultiDegreeProfile& np = cert.normalized;
  if (np.r() != profile.r())
    cert.notes.push_back("removed " + std::to_string(profile.r() - np.r()) +
                         " degree-1 form(s): linear sections only cut down the ambient space");
  if (np.is_projective_space())
    cert.notes.push_back("all forms linear: the variety is a projective space, torsion order 1");

  cert.known_multiple = roitman_upper_bound(np);
  if (cert.known_multiple) {
    cert.provenance.push_back({"upper/factorial-product", *cert.known_multiple,
                               "cone over the osculating-line locus: torsion order divides prod_i d_i!"});
  } else {
    cert.notes.push_back("sum d_i > n + r: factorial bound inapplicable, torsion order may be infinite");
  }

  if (!cert.known_multiple) {
    cert.known_divisor = 1;  // nothing certified outside the Fano range
    return cert;
  }

  switch (scenario) {
    case Scenario::Generic: {
      cert.known_divisor = generic_lower_divisor(np);
      cert.provenance.push_back({"lower/lcm-factorial-product", cert.known_divisor,
                                 "hyperplane degenerations and the index: prod_i lcm(1..d_i) divides the "
                                 "torsion order of the generic member"});
      break;
    }
    case Scenario::GenericWithPoint: {
      cert.known_divisor = generic_with_point_lower_divisor(np);
      cert.provenance.push_back({"lower/lcm-factorial-over-index", cert.known_divisor,
                                 "adjoining a rational point costs at most the index prod_i d_i"});
      break;
    }
    case Scenario::VeryGeneralChar0: {
      VeryGeneralBound vg = very_general_lower_divisor(np);
      cert.known_divisor = vg.divisor;
      cert.witnesses = vg.witnesses;
      for (const auto& w : vg.witnesses) {
        NatBig pm = 1;
        for (int j = 0; j < w.m; ++j) pm *= w.p;
        cert.provenance.push_back({"lower/prime-power-degeneration", pm,
                                   "degeneration to an inseparable " + pm.str() +
                                       "-cyclic cover in characteristic " + std::to_string(w.p)});
      }
      if (!vg.witnesses.empty())
        cert.level_note =
            "prime-power divisors hold already for the level-(n-2) torsion order, which divides the "
            "level-0 torsion order";
      if (np.n < 3 && !np.is_projective_space())
        cert.notes.push_back("prime-power degeneration requires dimension >= 3; no divisor certified beyond 1");
      break;
    }
  }

  if (cert.known_multiple && *cert.known_multiple % cert.known_divisor != 0)
    throw consistency_error("certificate: divisor " + cert.known_divisor.str() + " does not divide multiple " +
                            cert.known_multiple->str() + " for " + profile.to_string());
  return cert;
}

// ---------------------------------------------------------------------------
// Divisibility-constraint systems
// ---------------------------------------------------------------------------

/// One constraint on an unknown torsion order t:
///   Divides:       a | t
///   DividedBy:     t | b
///   ScaledDivides: a | c * t
struct DivisibilityConstraint {
  enum class Kind { Divides, DividedBy, ScaledDivides };
  Kind kind = Kind::Divides;
  NatBig a = 1;
  NatBig b = 1;
  NatBig scale = 1;
  std::string description;

  static DivisibilityConstraint divides(NatBig a) {
    DivisibilityConstraint c;
    c.kind = Kind::Divides;
    c.a = std::move(a);
    c.description = c.a.str() + " | t";
    return c;
  }
  static DivisibilityConstraint divided_by(NatBig b) {
    DivisibilityConstraint c;
    c.kind = Kind::DividedBy;
    c.b = std::move(b);
    c.description = "t | " + c.b.str();
    return c;
  }
  static DivisibilityConstraint scaled_divides(NatBig a, NatBig scale) {
    DivisibilityConstraint c;
    c.kind = Kind::ScaledDivides;
    c.a = std::move(a);
    c.scale = std::move(scale);
    c.description = c.a.str() + " | " + c.scale.str() + "*t";
    return c;
  }

  bool satisfied_by(const NatBig& t) const {
    switch (kind) {
      case Kind::Divides: return t % a == 0;
      case Kind::DividedBy: return b % t == 0;
      case Kind::ScaledDivides: return (scale * t) % a == 0;
    }
    return false;
  }
};

/// All divisors of x, sorted. Factorization is trial division up to 10^6;
/// a single larger prime cofactor is accepted, anything harder is refused.
/// Certificate multiples are factorial products, hence smooth, so this never
/// bites in practice.
inline std::vector<NatBig> divisors_of(const NatBig& x, std::size_t divisor_guard = 1u << 20) {
  if (x < 1) throw input_error("divisors_of: argument must be >= 1");
  std::map<NatBig, int> fact;
  NatBig rest = x;
  for (long long p = 2; p <= 1'000'000 && NatBig(p) * p <= rest; ++p) {
    while (rest % p == 0) {
      ++fact[p];
      rest /= p;
    }
  }
  if (rest > 1) {
    // after removing all factors < 10^6, a remaining cofactor below 10^12 is prime
    if (rest < NatBig(1'000'000) * 1'000'000 || rest < 1'000'000)
      ++fact[rest];
    else
      throw input_error("divisors_of: value too hard to factor by trial division: " + x.str());
  }
  std::vector<NatBig> divs{1};
  for (const auto& [p, e] : fact) {
    const std::size_t base = divs.size();
    if (base * (e + 1) > divisor_guard) throw input_error("divisors_of: divisor count exceeds guard");
    NatBig pe = 1;
    for (int j = 1; j <= e; ++j) {
      pe *= p;
      for (std::size_t i = 0; i < base; ++i) divs.push_back(divs[i] * pe);
    }
  }
  std::sort(divs.begin(), divs.end());
  return divs;
}

/// Enumerates the divisors t of candidate_multiple and keeps those satisfying
/// every constraint. An empty result signals contradictory constraints.
inline std::set<NatBig> solve_constraints(const NatBig& candidate_multiple,
                                          const std::vector<DivisibilityConstraint>& constraints) {
  if (candidate_multiple < 1) throw input_error("solve_constraints: candidate multiple must be >= 1");
  std::set<NatBig> out;
  for (const NatBig& t : divisors_of(candidate_multiple)) {
    bool ok = true;
    for (const auto& c : constraints)
      if (!c.satisfied_by(t)) {
        ok = false;
        break;
      }
    if (ok) out.insert(t);
  }
  return out;
}

}  // namespace cibound
