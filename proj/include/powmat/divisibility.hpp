#pragma once

#include <array>
#include <optional>
#include <string_view>
#include <vector>

#include "powmat/smith_core.hpp"

namespace powmat {

enum class PairKind { GcdGcd, GcdLcm, LcmLcm };

std::string_view pair_kind_name(PairKind kind);                 // "gcd-gcd", ...
std::optional<PairKind> parse_pair_kind(std::string_view name);

constexpr std::array<PairKind, 3> kAllPairKinds{PairKind::GcdGcd, PairKind::GcdLcm,
                                                PairKind::LcmLcm};

struct NonIntegralWitness {
  Index row{0}, col{0};
  Rational value;
};

struct QuotientCheck {
  bool divides{false};
  ExactMatrix quotient;  // B * A^{-1}, kept whole even when non-integral
  std::optional<NonIntegralWitness> witness;
};

/// When enabled, every divides() call on symmetric inputs also checks the
/// left quotient A^{-1} B and throws InternalError if the two integrality
/// verdicts disagree. Test binaries switch this on at startup.
void set_divides_self_check(bool enabled);
bool divides_self_check();

/// Decides A | B in M_n(Z) through the right quotient Q = B A^{-1}: divides
/// iff Q is integral. Throws DimensionMismatchError on shape errors and
/// SingularMatrixError when det A = 0 (the quotient method is then
/// inapplicable; never reported as a false verdict).
QuotientCheck divides(const ExactMatrix& a, const ExactMatrix& b);

enum class VerdictStatus { Divides, Fails, Inapplicable };

struct DivisibilityVerdict {
  PairKind pair{PairKind::GcdGcd};
  unsigned a{1}, b{1};
  VerdictStatus status{VerdictStatus::Inapplicable};
  std::optional<ExactMatrix> quotient;        // present iff status == Divides
  std::optional<NonIntegralWitness> witness;  // present iff status == Fails
  bool divides() const { return status == VerdictStatus::Divides; }
};

/// Builds the two power matrices named by the pair kind and runs divides().
DivisibilityVerdict check_pair(const OrderedSet& s, unsigned a, unsigned b,
                               PairKind kind);

struct TheoremReport {
  StructureReport structure;
  unsigned a{1}, b{1};
  bool exponent_divides{false};
  bool preconditions_met{false};
  std::array<DivisibilityVerdict, 3> verdicts;  // GcdGcd, GcdLcm, LcmLcm

  bool all_divide() const {
    for (const auto& v : verdicts)
      if (!v.divides()) return false;
    return true;
  }
  /// Preconditions hold yet a factorization fails: a build-breaking event.
  bool theorem_violated() const { return preconditions_met && !all_divide(); }
};

/// The verification pipeline: structural analysis, precondition evaluation
/// (gcd closed, a | b, max_gtd <= 2, condition G) and all three quotient
/// checks. Nothing is assumed; everything lands in the report.
TheoremReport verify_main_theorem(const OrderedSet& s, unsigned a, unsigned b);

struct SingleGtdLemmaCheck {
  bool gcd_difference{false};       // x^a - y^a | (x,z)^b - (y,z)^b
  bool lcm_difference{false};       // x^a - y^a | [x,z]^b - [y,z]^b
  std::optional<bool> weighted;     // r^a (y^a - x^a) | y^a [z,x]^b - x^a [z,y]^b
  bool all_hold() const {
    return gcd_difference && lcm_difference && weighted.value_or(true);
  }
};

/// Divisibility claims for an element with a single greatest-type divisor:
/// requires a | b, S gcd closed, G_S(x) = {y} and z in S; the weighted claim
/// additionally needs r in S with r | x.
SingleGtdLemmaCheck lemma_divisibility_single(const OrderedSet& s, const Int& x,
                                              const Int& y, const Int& z, unsigned a,
                                              unsigned b,
                                              const std::optional<Int>& r = {});

struct DoubleGtdLemmaCheck {
  bool gcd_combination{false};
  bool lcm_combination{false};
  std::optional<bool> weighted;
  bool all_hold() const {
    return gcd_combination && lcm_combination && weighted.value_or(true);
  }
};

/// Divisibility claims for an element x with G_S(x) = {y1, y2}, y3 = (y1,y2):
/// the denominator is x^a + y3^a - y1^a - y2^a. Hypotheses: a | b, S gcd
/// closed, max_gtd <= 2, z in S, the interval {u in S : (x,z) | u | x}
/// satisfies condition G, and x itself satisfies condition G (the proof
/// rests on x y3 = y1 y2, which only that gives).
DoubleGtdLemmaCheck lemma_divisibility_double(const OrderedSet& s, const Int& x,
                                              const Int& z, unsigned a, unsigned b,
                                              const std::optional<Int>& r = {});

struct PeelReport {
  std::array<DivisibilityVerdict, 3> full;    // on S
  std::array<DivisibilityVerdict, 3> peeled;  // on S without max(S)
  bool biconditional_holds{false};            // per pair, full <=> peeled
  std::array<bool, 3> last_line_integral{};   // last row and column of B A^{-1}
  bool ok() const {
    return biconditional_holds && last_line_integral[0] && last_line_integral[1] &&
           last_line_integral[2];
  }
};

/// Checks the peeling equivalence between S and S minus its maximum, plus
/// integrality of the last row and column of the three quotients. Requires
/// S gcd closed with max_gtd <= 2, condition G, a | b and |S| >= 2.
PeelReport peel_equivalence_check(const OrderedSet& s, unsigned a, unsigned b);

/// Rebuilds the three pairs under the permuted ordering x_{sigma(0)}, ... and
/// checks the divides verdicts are unchanged. sigma permutes 0..n-1.
bool permutation_invariance_check(const OrderedSet& s, unsigned a, unsigned b,
                                  const std::vector<int>& sigma);

}  // namespace powmat
