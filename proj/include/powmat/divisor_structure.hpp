#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "powmat/exact.hpp"

namespace powmat {

struct GcdClosureWitness {
  Int left, right, missing_gcd;
};

/// Strictly ascending set of distinct positive integers, the canonical
/// ordering for every matrix built from it. Divisor-poset metadata
/// (pairwise divisibility, gcd-closure, greatest-type divisors) is computed
/// once at construction and shared by the rest of the library.
class OrderedSet {
 public:
  /// Sorts, validates and builds the poset caches.
  static OrderedSet normalize(std::vector<Int> values);

  /// Parses a comma-separated decimal list such as "1,3,5,45".
  static OrderedSet parse(std::string_view csv);

  int size() const { return static_cast<int>(xs_.size()); }
  const Int& at(int k) const { return xs_[static_cast<size_t>(k)]; }
  const std::vector<Int>& elements() const { return xs_; }
  const Int& max() const { return xs_.back(); }

  bool contains(const Int& v) const { return index_of(v) >= 0; }
  int index_of(const Int& v) const;  // -1 when absent

  /// x_i | x_j, from the cache.
  bool divides_in_set(int i, int j) const {
    return divides_[static_cast<size_t>(i) * xs_.size() + static_cast<size_t>(j)];
  }

  bool gcd_closed() const { return gcd_closed_; }
  const std::optional<GcdClosureWitness>& gcd_witness() const { return gcd_witness_; }

  /// Indices of the greatest-type divisors of x_k, ascending.
  const std::vector<int>& gtd_indices(int k) const {
    return gtd_idx_[static_cast<size_t>(k)];
  }
  int max_gtd() const { return max_gtd_; }

  /// The set without its maximum. Requires size >= 2.
  OrderedSet without_max() const;

  std::string str() const;  // "{1, 2, 3, 12}"

  friend bool operator==(const OrderedSet& a, const OrderedSet& b) {
    return a.xs_ == b.xs_;
  }

 private:
  explicit OrderedSet(std::vector<Int> sorted);
  void build_caches();

  std::vector<Int> xs_;
  std::vector<bool> divides_;  // row-major n*n
  bool gcd_closed_{false};
  std::optional<GcdClosureWitness> gcd_witness_;
  std::vector<std::vector<int>> gtd_idx_;
  int max_gtd_{0};
};

/// All positive divisors of n, ascending.
std::vector<Int> divisors(const Int& n);

/// Moebius function via trial factorization.
int mobius(const Int& n);

struct GcdClosedCheck {
  bool closed{false};
  std::optional<GcdClosureWitness> witness;  // lexicographically smallest failing pair
};

GcdClosedCheck is_gcd_closed(const OrderedSet& s);

/// Smallest gcd-closed superset: closes under pairwise gcd to a fixpoint.
OrderedSet gcd_closure(const OrderedSet& s);

bool is_factor_closed(const OrderedSet& s);

/// True iff consecutive elements of the ascending order divide each other.
bool is_divisor_chain(const OrderedSet& s);

/// G_S(x): members d < x with d | x and no strictly intermediate element of
/// S between d and x. Throws ElementNotInSetError when x is not in S.
std::vector<Int> greatest_type_divisors(const OrderedSet& s, const Int& x);

struct ConditionGViolation {
  enum class Reason { LcmNotElement, GcdNotSharedGtd };
  Int element, y1, y2;
  Reason reason{Reason::LcmNotElement};
};

struct StructureReport {
  bool gcd_closed{false};
  std::optional<GcdClosureWitness> gcd_witness;
  bool factor_closed{false};
  bool divisor_chain{false};
  std::vector<std::vector<Int>> gtd_map;  // aligned with the ascending elements
  int max_gtd{0};
  bool condition_g{false};
  std::vector<bool> element_condition_g;            // aligned
  std::vector<ConditionGViolation> violations;      // smallest failing pair per element
};

/// Full structural report: closure flags, greatest-type divisor map and the
/// per-element condition-G verdicts. An element x passes when |G_S(x)| <= 1,
/// or when every pair y1 != y2 in G_S(x) has [y1,y2] = x and
/// (y1,y2) in G_S(y1) and G_S(y2).
StructureReport analyze(const OrderedSet& s);

/// Evaluates condition G on the interval {u in S : lo | u | hi} as a set of
/// its own. Throws NotDivisibleError when lo does not divide hi and
/// ElementNotInSetError when either endpoint is missing.
bool sub_poset_condition_G(const OrderedSet& s, const Int& lo, const Int& hi);

/// Condition G restricted to one element of S.
bool element_satisfies_condition_g(const OrderedSet& s, const Int& x);

/// Condition G for the whole set; cheaper than analyze() when only the flag
/// is needed.
bool set_satisfies_condition_g(const OrderedSet& s);

}  // namespace powmat
