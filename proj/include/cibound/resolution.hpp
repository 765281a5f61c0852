#pragma once

// Combinatorial blow-up schedules resolving a non-degenerate singularity of a
// p^m-cyclic cover: step counts, local y-exponents, exceptional-divisor chain
// types, and the multiplicities of the weighted exceptional divisor E'. Plans
// are pure bookkeeping; no coordinate ring is modeled.

#include <random>
#include <string>
#include <vector>

#include "cibound/arith.hpp"

namespace cibound::resolution {

/// The trichotomy driving the schedule: p odd / p = 2 with n even / p = 2
/// with n odd.
enum class CaseTag { OddP, P2EvenN, P2OddN };

enum class ExceptionalType { QuadricCone, SmoothQuadric, ProjectiveSpace };
enum class StrictTransformType { BlownUpCone, SmoothQuadric, ProjectiveSpace };

inline std::string to_string(CaseTag t) {
  switch (t) {
    case CaseTag::OddP: return "odd-p";
    case CaseTag::P2EvenN: return "p2-even-n";
    case CaseTag::P2OddN: return "p2-odd-n";
  }
  return "?";
}
inline std::string to_string(ExceptionalType t) {
  switch (t) {
    case ExceptionalType::QuadricCone: return "quadric-cone";
    case ExceptionalType::SmoothQuadric: return "smooth-quadric";
    case ExceptionalType::ProjectiveSpace: return "projective-space";
  }
  return "?";
}
inline std::string to_string(StrictTransformType t) {
  switch (t) {
    case StrictTransformType::BlownUpCone: return "blown-up-cone";
    case StrictTransformType::SmoothQuadric: return "smooth-quadric";
    case StrictTransformType::ProjectiveSpace: return "projective-space";
  }
  return "?";
}

struct SingularityCase {
  int p = 2;
  int m = 1;
  int n = 2;
  CaseTag tag = CaseTag::P2EvenN;

  static SingularityCase create(int p, int m, int n) {
    if (!is_prime(p)) throw input_error("singularity case: p must be prime, got " + std::to_string(p));
    if (m < 1) throw input_error("singularity case: m must be >= 1");
    if (n < 2) throw input_error("singularity case: dimension n must be >= 2");
    SingularityCase c;
    c.p = p;
    c.m = m;
    c.n = n;
    c.tag = (p % 2 == 1) ? CaseTag::OddP : (n % 2 == 0 ? CaseTag::P2EvenN : CaseTag::P2OddN);
    return c;
  }
  bool operator==(const SingularityCase&) const = default;
};

struct BlowupStep {
  int index = 1;              // 1-based position in the schedule
  long long local_exponent = 1;  // y-exponent of the local equation entering this step
  ExceptionalType exceptional_type = ExceptionalType::QuadricCone;
  StrictTransformType strict_transform_type = StrictTransformType::BlownUpCone;
  int coordinate_change_tag = 0;  // p=2, n odd only: substitution-group number; 0 otherwise
  bool operator==(const BlowupStep&) const = default;
};

struct ResolutionPlan {
  SingularityCase sing;
  std::vector<BlowupStep> steps;
  // component i meets only i+-1; the pairwise intersections are all smooth quadrics
  std::vector<ExceptionalType> chain_intersections;
  std::vector<int> e_prime_multiplicities;  // one per exceptional component
  std::vector<int> group_sizes;             // p=2, n odd: substitution-group sizes; empty otherwise
  std::vector<std::string> notes;
  bool operator==(const ResolutionPlan&) const = default;
};

namespace detail {
inline long long pow_ll(int p, int m) {
  long long acc = 1;
  for (int i = 0; i < m; ++i) {
    if (acc > (1LL << 40)) throw input_error("resolution: p^m too large");
    acc *= p;
  }
  return acc;
}

/// Group sizes of the p=2, n odd schedule: (2^{m-1}-1, 2^{m-2}, ..., 1)
/// coordinate-substitution groups, one smoothing blow-up, one final blow-up
/// for normal crossings; zero-size groups are dropped. Sums to 2^m.
inline std::vector<int> p2oddn_group_sizes(int m) {
  std::vector<int> sizes;
  if (m >= 1 && (1 << (m - 1)) - 1 > 0) sizes.push_back((1 << (m - 1)) - 1);
  for (int j = 2; j <= m; ++j) sizes.push_back(1 << (m - j));
  sizes.push_back(1);  // blow-up reaching smoothness
  sizes.push_back(1);  // blow-up producing strict normal crossings
  return sizes;
}
}  // namespace detail

/// Number of point blow-ups needed: (p^m - 1)/2 + 1 for p odd, 2^{m-1} for
/// p = 2 with n even, 2^m for p = 2 with n odd.
inline long long blowup_count(int p, int m, int n) {
  const SingularityCase c = SingularityCase::create(p, m, n);
  const long long pm = detail::pow_ll(p, m);
  switch (c.tag) {
    case CaseTag::OddP: return (pm - 1) / 2 + 1;
    case CaseTag::P2EvenN: return pm / 2;
    case CaseTag::P2OddN: return pm;
  }
  return 0;
}

/// The full schedule for one non-degenerate singular point. Multi-point
/// covers are a list of independent plans.
inline ResolutionPlan resolution_plan(int p, int m, int n) {
  ResolutionPlan plan;
  plan.sing = SingularityCase::create(p, m, n);
  const long long pm = detail::pow_ll(p, m);
  const long long total = blowup_count(p, m, n);

  auto push = [&plan](long long exponent, ExceptionalType e, StrictTransformType s, int tag) {
    BlowupStep step;
    step.index = static_cast<int>(plan.steps.size()) + 1;
    step.local_exponent = exponent;
    step.exceptional_type = e;
    step.strict_transform_type = s;
    step.coordinate_change_tag = tag;
    plan.steps.push_back(step);
  };

  switch (plan.sing.tag) {
    case CaseTag::OddP:
      // exponents p^m, p^m-2, ..., 3 on cone steps; the last blow-up, at an
      // already smooth point, produces a projective space
      for (long long i = 1; i < total; ++i)
        push(pm - 2 * (i - 1), ExceptionalType::QuadricCone, StrictTransformType::BlownUpCone, 0);
      push(1, ExceptionalType::ProjectiveSpace, StrictTransformType::ProjectiveSpace, 0);
      break;

    case CaseTag::P2EvenN:
      // exponents 2^m, 2^m-2, ..., 4 on cone steps; the final exceptional
      // divisor is the smooth quadric cut out by the surviving y^2 term
      for (long long i = 1; i < total; ++i)
        push(pm - 2 * (i - 1), ExceptionalType::QuadricCone, StrictTransformType::BlownUpCone, 0);
      push(2, ExceptionalType::SmoothQuadric, StrictTransformType::SmoothQuadric, 0);
      break;

    case CaseTag::P2OddN: {
      plan.group_sizes = detail::p2oddn_group_sizes(m);
      const int groups = static_cast<int>(plan.group_sizes.size());
      int subst = 0;  // substitution groups seen so far (the non-final groups)
      for (int g = 0; g < groups; ++g) {
        const int size = plan.group_sizes[g];
        const bool smoothing = (g == groups - 2);
        const bool final_nc = (g == groups - 1);
        long long start;
        if (final_nc) {
          start = 1;  // variety already smooth; normal-crossings blow-up
        } else if (smoothing) {
          start = 3;  // boundary form b_m y^3 + x^2 + quadric
        } else {
          ++subst;
          // substitution group 1 starts from the original equation y^{2^m};
          // group j >= 2 starts from the rewritten boundary form with
          // exponent 2^{m-j+1} + 2
          start = (subst == 1) ? pm : (1LL << (m - subst + 1)) + 2;
        }
        for (int k = 0; k < size; ++k) {
          if (final_nc)
            push(start, ExceptionalType::ProjectiveSpace, StrictTransformType::ProjectiveSpace, g + 1);
          else
            push(start - 2 * k, ExceptionalType::QuadricCone, StrictTransformType::BlownUpCone, g + 1);
        }
      }
      plan.notes.push_back(
          "second-to-last exceptional divisor typed quadric-cone by the pattern of the preceding steps; "
          "the source text does not type it explicitly");
      break;
    }
  }

  plan.chain_intersections.assign(plan.steps.size() > 1 ? plan.steps.size() - 1 : 0,
                                  ExceptionalType::SmoothQuadric);
  plan.e_prime_multiplicities.assign(plan.steps.size(), 1);
  if (plan.sing.tag != CaseTag::P2EvenN) plan.e_prime_multiplicities.back() = 2;
  return plan;
}

/// Re-checks every plan invariant from scratch: the count formula, the
/// exponent schedule, types, tags, chain shape, and the E' multiplicity rule.
/// Returns false rather than throwing so harnesses can probe mutations.
inline bool verify_plan(const ResolutionPlan& plan) {
  const auto& sc = plan.sing;
  if (!is_prime(sc.p) || sc.m < 1 || sc.n < 2) return false;
  const CaseTag expect_tag =
      (sc.p % 2 == 1) ? CaseTag::OddP : (sc.n % 2 == 0 ? CaseTag::P2EvenN : CaseTag::P2OddN);
  if (sc.tag != expect_tag) return false;

  long long pm = 1;
  for (int i = 0; i < sc.m; ++i) {
    if (pm > (1LL << 40)) return false;
    pm *= sc.p;
  }
  const long long expect_count =
      sc.tag == CaseTag::OddP ? (pm - 1) / 2 + 1 : (sc.tag == CaseTag::P2EvenN ? pm / 2 : pm);
  const long long s = static_cast<long long>(plan.steps.size());
  if (s != expect_count || s < 1) return false;

  for (long long i = 0; i < s; ++i)
    if (plan.steps[i].index != i + 1) return false;

  // expected exponent / type / tag per step
  if (sc.tag == CaseTag::OddP || sc.tag == CaseTag::P2EvenN) {
    if (!plan.group_sizes.empty()) return false;
    const long long last_exponent = sc.tag == CaseTag::OddP ? 1 : 2;
    for (long long i = 0; i < s; ++i) {
      const auto& st = plan.steps[i];
      if (st.coordinate_change_tag != 0) return false;
      if (i + 1 < s) {
        if (st.local_exponent != pm - 2 * i) return false;
        if (st.exceptional_type != ExceptionalType::QuadricCone) return false;
        if (st.strict_transform_type != StrictTransformType::BlownUpCone) return false;
      } else {
        if (st.local_exponent != last_exponent) return false;
        if (sc.tag == CaseTag::OddP) {
          if (st.exceptional_type != ExceptionalType::ProjectiveSpace) return false;
          if (st.strict_transform_type != StrictTransformType::ProjectiveSpace) return false;
        } else {
          if (st.exceptional_type != ExceptionalType::SmoothQuadric) return false;
          if (st.strict_transform_type != StrictTransformType::SmoothQuadric) return false;
        }
      }
    }
  } else {
    // p = 2, n odd: substitution groups (2^{m-1}-1, 2^{m-2}, ..., 1), one
    // smoothing blow-up entering at exponent 3, one normal-crossings blow-up
    // entering at exponent 1; per-group exponents decrease by 2
    std::vector<int> expect_sizes;
    if ((1 << (sc.m - 1)) - 1 > 0) expect_sizes.push_back((1 << (sc.m - 1)) - 1);
    for (int j = 2; j <= sc.m; ++j) expect_sizes.push_back(1 << (sc.m - j));
    expect_sizes.push_back(1);
    expect_sizes.push_back(1);
    if (plan.group_sizes != expect_sizes) return false;

    long long step_at = 0;
    const int groups = static_cast<int>(expect_sizes.size());
    int subst = 0;
    for (int g = 0; g < groups; ++g) {
      const bool smoothing = (g == groups - 2);
      const bool final_nc = (g == groups - 1);
      long long start;
      if (final_nc)
        start = 1;
      else if (smoothing)
        start = 3;
      else {
        ++subst;
        start = (subst == 1) ? pm : (1LL << (sc.m - subst + 1)) + 2;
      }
      for (int k = 0; k < expect_sizes[g]; ++k, ++step_at) {
        if (step_at >= s) return false;
        const auto& st = plan.steps[step_at];
        if (st.coordinate_change_tag != g + 1) return false;
        if (final_nc) {
          if (st.local_exponent != 1) return false;
          if (st.exceptional_type != ExceptionalType::ProjectiveSpace) return false;
          if (st.strict_transform_type != StrictTransformType::ProjectiveSpace) return false;
        } else {
          if (st.local_exponent != start - 2 * k) return false;
          if (st.exceptional_type != ExceptionalType::QuadricCone) return false;
          if (st.strict_transform_type != StrictTransformType::BlownUpCone) return false;
        }
      }
    }
    if (step_at != s) return false;
  }

  // chain shape: s components in a row, every pairwise intersection a smooth quadric
  if (static_cast<long long>(plan.chain_intersections.size()) != (s > 1 ? s - 1 : 0)) return false;
  for (auto t : plan.chain_intersections)
    if (t != ExceptionalType::SmoothQuadric) return false;

  // E': trailing component counted twice exactly when p or n is odd
  if (static_cast<long long>(plan.e_prime_multiplicities.size()) != s) return false;
  const bool doubled_tail = (sc.p % 2 == 1) || (sc.n % 2 == 1);
  for (long long i = 0; i < s; ++i) {
    const int expect_mult = (i + 1 == s && doubled_tail) ? 2 : 1;
    if (plan.e_prime_multiplicities[i] != expect_mult) return false;
  }
  return true;
}

/// A mutated copy of a plan together with a description of what changed.
/// Used by verification harnesses to confirm verify_plan rejects corrupted
/// plans. Only fields with semantic content are mutated (for p odd the plan
/// does not depend on n, so n is only perturbed when p = 2, where the parity
/// flip must be detected).
struct PlanMutation {
  std::string description;
  ResolutionPlan plan;
};

inline PlanMutation random_single_field_mutation(const ResolutionPlan& plan, std::mt19937& rng) {
  auto pick = [&rng](int n) { return std::uniform_int_distribution<int>(0, n - 1)(rng); };
  ResolutionPlan out = plan;
  const int step_count = static_cast<int>(plan.steps.size());
  const int kinds = 9;
  for (;;) {
    switch (pick(kinds)) {
      case 0: {
        const int i = pick(step_count);
        out.steps[i].local_exponent += 1 + pick(3);
        return {"step " + std::to_string(i + 1) + " local_exponent", out};
      }
      case 1: {
        const int i = pick(step_count);
        auto& t = out.steps[i].exceptional_type;
        t = static_cast<ExceptionalType>((static_cast<int>(t) + 1 + pick(2)) % 3);
        return {"step " + std::to_string(i + 1) + " exceptional_type", out};
      }
      case 2: {
        const int i = pick(step_count);
        auto& t = out.steps[i].strict_transform_type;
        t = static_cast<StrictTransformType>((static_cast<int>(t) + 1 + pick(2)) % 3);
        return {"step " + std::to_string(i + 1) + " strict_transform_type", out};
      }
      case 3: {
        const int i = pick(step_count);
        out.steps[i].index += 1;
        return {"step " + std::to_string(i + 1) + " index", out};
      }
      case 4: {
        const int i = pick(step_count);
        out.steps[i].coordinate_change_tag += 1;
        return {"step " + std::to_string(i + 1) + " coordinate_change_tag", out};
      }
      case 5: {
        const int i = pick(static_cast<int>(plan.e_prime_multiplicities.size()));
        out.e_prime_multiplicities[i] = plan.e_prime_multiplicities[i] == 1 ? 2 : 1;
        return {"e_prime_multiplicities[" + std::to_string(i) + "]", out};
      }
      case 6: {
        if (plan.chain_intersections.empty()) continue;
        const int i = pick(static_cast<int>(plan.chain_intersections.size()));
        out.chain_intersections[i] = ExceptionalType::QuadricCone;
        return {"chain_intersections[" + std::to_string(i) + "]", out};
      }
      case 7: {
        out.sing.m += 1;
        return {"case m", out};
      }
      case 8: {
        if (plan.sing.p == 2) {
          out.sing.n += 1;  // parity flip, detected through the case tag
          return {"case n", out};
        }
        out.sing.tag = plan.sing.tag == CaseTag::OddP ? CaseTag::P2EvenN : CaseTag::OddP;
        return {"case tag", out};
      }
    }
  }
}

}  // namespace cibound::resolution
