#include "powmat/divisibility.hpp"

#include <atomic>

namespace powmat {

namespace {

std::atomic<bool> g_self_check{false};

void require_exponents(unsigned a, unsigned b) {
  if (a == 0 || b == 0) throw InvalidInput("exponents must be positive integers");
}

MatrixKind divisor_kind(PairKind kind) {
  return kind == PairKind::LcmLcm ? MatrixKind::Lcm : MatrixKind::Gcd;
}

MatrixKind dividend_kind(PairKind kind) {
  return kind == PairKind::GcdGcd ? MatrixKind::Gcd : MatrixKind::Lcm;
}

QuotientCheck quotient_check(const ExactMatrix& a, const ExactMatrix& a_inv,
                             const ExactMatrix& b) {
  QuotientCheck res;
  res.quotient = b * a_inv;
  IntegralityResult integ = integrality_check(res.quotient);
  res.divides = integ.ok;
  if (!integ.ok) res.witness = NonIntegralWitness{integ.row, integ.col, integ.value};
  if (divides_self_check() && is_symmetric(a) && is_symmetric(b)) {
    // For symmetric inputs the left and right quotients are transposes of
    // each other, so their integrality verdicts must agree.
    ExactMatrix left = a_inv * b;
    if (integrality_check(left).ok != res.divides)
      throw InternalError("left/right quotient integrality verdicts disagree on "
                          "symmetric inputs");
  }
  return res;
}

DivisibilityVerdict verdict_from(PairKind kind, unsigned a, unsigned b,
                                 QuotientCheck&& q) {
  DivisibilityVerdict v;
  v.pair = kind;
  v.a = a;
  v.b = b;
  v.status = q.divides ? VerdictStatus::Divides : VerdictStatus::Fails;
  if (q.divides)
    v.quotient = std::move(q.quotient);
  else
    v.witness = q.witness;
  return v;
}

DivisibilityVerdict inapplicable_verdict(PairKind kind, unsigned a, unsigned b) {
  DivisibilityVerdict v;
  v.pair = kind;
  v.a = a;
  v.b = b;
  v.status = VerdictStatus::Inapplicable;
  return v;
}

}  // namespace

void set_divides_self_check(bool enabled) { g_self_check.store(enabled); }
bool divides_self_check() { return g_self_check.load(); }

QuotientCheck divides(const ExactMatrix& a, const ExactMatrix& b) {
  if (a.rows() != a.cols() || b.rows() != b.cols())
    throw DimensionMismatchError("divisibility requires square matrices");
  if (a.rows() != b.rows())
    throw DimensionMismatchError("divisor and dividend dimensions differ");
  ExactMatrix a_inv = exact_inverse(a);  // throws SingularMatrixError when det = 0
  return quotient_check(a, a_inv, b);
}

std::string_view pair_kind_name(PairKind kind) {
  switch (kind) {
    case PairKind::GcdGcd:
      return "gcd-gcd";
    case PairKind::GcdLcm:
      return "gcd-lcm";
    case PairKind::LcmLcm:
      return "lcm-lcm";
  }
  return "?";
}

std::optional<PairKind> parse_pair_kind(std::string_view name) {
  if (name == "gcd-gcd") return PairKind::GcdGcd;
  if (name == "gcd-lcm") return PairKind::GcdLcm;
  if (name == "lcm-lcm") return PairKind::LcmLcm;
  return std::nullopt;
}

DivisibilityVerdict check_pair(const OrderedSet& s, unsigned a, unsigned b,
                               PairKind kind) {
  require_exponents(a, b);
  ExactMatrix A = power_matrix({s, a, divisor_kind(kind)});
  ExactMatrix B = power_matrix({s, b, dividend_kind(kind)});
  try {
    return verdict_from(kind, a, b, divides(A, B));
  } catch (const SingularMatrixError&) {
    return inapplicable_verdict(kind, a, b);
  }
}

TheoremReport verify_main_theorem(const OrderedSet& s, unsigned a, unsigned b) {
  require_exponents(a, b);
  TheoremReport r;
  r.a = a;
  r.b = b;
  r.structure = analyze(s);
  r.exponent_divides = (b % a == 0);
  r.preconditions_met = r.structure.gcd_closed && r.exponent_divides &&
                        r.structure.max_gtd <= 2 && r.structure.condition_g;

  ExactMatrix gcd_a = power_matrix({s, a, MatrixKind::Gcd});
  ExactMatrix gcd_b = power_matrix({s, b, MatrixKind::Gcd});
  ExactMatrix lcm_a = power_matrix({s, a, MatrixKind::Lcm});
  ExactMatrix lcm_b = power_matrix({s, b, MatrixKind::Lcm});

  ExactMatrix gcd_a_inv = exact_inverse(gcd_a);  // positive definite, never singular
  r.verdicts[0] =
      verdict_from(PairKind::GcdGcd, a, b, quotient_check(gcd_a, gcd_a_inv, gcd_b));
  r.verdicts[1] =
      verdict_from(PairKind::GcdLcm, a, b, quotient_check(gcd_a, gcd_a_inv, lcm_b));
  try {
    ExactMatrix lcm_a_inv = exact_inverse(lcm_a);
    r.verdicts[2] =
        verdict_from(PairKind::LcmLcm, a, b, quotient_check(lcm_a, lcm_a_inv, lcm_b));
  } catch (const SingularMatrixError&) {
    r.verdicts[2] = inapplicable_verdict(PairKind::LcmLcm, a, b);
  }
  return r;
}

SingleGtdLemmaCheck lemma_divisibility_single(const OrderedSet& s, const Int& x,
                                              const Int& y, const Int& z, unsigned a,
                                              unsigned b, const std::optional<Int>& r) {
  if (a == 0 || b == 0 || b % a != 0)
    throw HypothesisViolatedError("a and b must be positive with a | b");
  if (!s.gcd_closed()) throw HypothesisViolatedError("S must be gcd closed");
  int ix = s.index_of(x);
  if (ix < 0) throw HypothesisViolatedError("x must be in S");
  if (!s.contains(z)) throw HypothesisViolatedError("z must be in S");
  const auto& g = s.gtd_indices(ix);
  if (g.size() != 1 || s.at(g[0]) != y)
    throw HypothesisViolatedError("G_S(x) must equal {y}");

  SingleGtdLemmaCheck out;
  Int xa = ipow(x, a);
  Int ya = ipow(y, a);
  Int denom = xa - ya;  // positive: y < x
  out.gcd_difference = (ipow(powmat::gcd(x, z), b) - ipow(powmat::gcd(y, z), b)) % denom == 0;
  out.lcm_difference = (ipow(powmat::lcm(x, z), b) - ipow(powmat::lcm(y, z), b)) % denom == 0;
  if (r) {
    if (!s.contains(*r) || x % *r != 0)
      throw HypothesisViolatedError("r must be in S with r | x");
    Int weighted_denom = ipow(*r, a) * (ya - xa);
    Int numer = ya * ipow(powmat::lcm(z, x), b) - xa * ipow(powmat::lcm(z, y), b);
    out.weighted = (numer % weighted_denom == 0);
  }
  return out;
}

DoubleGtdLemmaCheck lemma_divisibility_double(const OrderedSet& s, const Int& x,
                                              const Int& z, unsigned a, unsigned b,
                                              const std::optional<Int>& r) {
  if (a == 0 || b == 0 || b % a != 0)
    throw HypothesisViolatedError("a and b must be positive with a | b");
  if (!s.gcd_closed()) throw HypothesisViolatedError("S must be gcd closed");
  if (s.max_gtd() > 2) throw HypothesisViolatedError("max_gtd(S) must be at most 2");
  int ix = s.index_of(x);
  if (ix < 0) throw HypothesisViolatedError("x must be in S");
  if (!s.contains(z)) throw HypothesisViolatedError("z must be in S");
  const auto& g = s.gtd_indices(ix);
  if (g.size() != 2) throw HypothesisViolatedError("x must have exactly two "
                                                   "greatest-type divisors");
  if (!sub_poset_condition_G(s, powmat::gcd(x, z), x))
    throw HypothesisViolatedError("the interval {u in S : (x,z) | u | x} must satisfy "
                                  "the condition G");
  if (!element_satisfies_condition_g(s, x))
    throw HypothesisViolatedError("x must satisfy the condition G");

  const Int& y1 = s.at(g[0]);
  const Int& y2 = s.at(g[1]);
  Int y3 = powmat::gcd(y1, y2);

  Int denom = ipow(x, a) + ipow(y3, a) - ipow(y1, a) - ipow(y2, a);
  if (denom.is_zero())
    throw InternalError("vanishing denominator despite condition G on x");

  DoubleGtdLemmaCheck out;
  Int gn = ipow(powmat::gcd(z, x), b) + ipow(powmat::gcd(z, y3), b) -
           ipow(powmat::gcd(z, y1), b) - ipow(powmat::gcd(z, y2), b);
  Int ln = ipow(powmat::lcm(z, x), b) + ipow(powmat::lcm(z, y3), b) -
           ipow(powmat::lcm(z, y1), b) - ipow(powmat::lcm(z, y2), b);
  out.gcd_combination = gn % denom == 0;
  out.lcm_combination = ln % denom == 0;
  if (r) {
    if (!s.contains(*r) || x % *r != 0)
      throw HypothesisViolatedError("r must be in S with r | x");
    Int numer = ipow(x, a) * ipow(powmat::lcm(z, y3), b) +
                ipow(y3, a) * ipow(powmat::lcm(z, x), b) -
                ipow(y1, a) * ipow(powmat::lcm(z, y2), b) -
                ipow(y2, a) * ipow(powmat::lcm(z, y1), b);
    out.weighted = (numer % (ipow(*r, a) * denom) == 0);
  }
  return out;
}

namespace {

bool last_line_integral(const ExactMatrix& q) {
  const Index n = q.rows();
  for (Index j = 0; j < n; ++j) {
    if (!q(n - 1, j).is_integer()) return false;
  }
  for (Index i = 0; i < n; ++i) {
    if (!q(i, n - 1).is_integer()) return false;
  }
  return true;
}

}  // namespace

PeelReport peel_equivalence_check(const OrderedSet& s, unsigned a, unsigned b) {
  if (a == 0 || b == 0 || b % a != 0)
    throw HypothesisViolatedError("a and b must be positive with a | b");
  if (!s.gcd_closed()) throw HypothesisViolatedError("S must be gcd closed");
  if (s.max_gtd() > 2) throw HypothesisViolatedError("max_gtd(S) must be at most 2");
  if (!set_satisfies_condition_g(s))
    throw HypothesisViolatedError("S must satisfy the condition G");
  if (s.size() < 2) throw HypothesisViolatedError("|S| must be at least 2");

  PeelReport report;
  OrderedSet peeled = s.without_max();
  ExactMatrix gcd_a = power_matrix({s, a, MatrixKind::Gcd});
  ExactMatrix lcm_a = power_matrix({s, a, MatrixKind::Lcm});
  ExactMatrix gcd_a_inv = exact_inverse(gcd_a);
  ExactMatrix lcm_a_inv = exact_inverse(lcm_a);
  ExactMatrix gcd_b = power_matrix({s, b, MatrixKind::Gcd});
  ExactMatrix lcm_b = power_matrix({s, b, MatrixKind::Lcm});

  QuotientCheck checks[3] = {quotient_check(gcd_a, gcd_a_inv, gcd_b),
                             quotient_check(gcd_a, gcd_a_inv, lcm_b),
                             quotient_check(lcm_a, lcm_a_inv, lcm_b)};
  for (int i = 0; i < 3; ++i) {
    report.last_line_integral[static_cast<size_t>(i)] =
        last_line_integral(checks[i].quotient);
    report.full[static_cast<size_t>(i)] = verdict_from(
        kAllPairKinds[static_cast<size_t>(i)], a, b, std::move(checks[i]));
    report.peeled[static_cast<size_t>(i)] =
        check_pair(peeled, a, b, kAllPairKinds[static_cast<size_t>(i)]);
  }
  report.biconditional_holds = true;
  for (size_t i = 0; i < 3; ++i) {
    report.biconditional_holds = report.biconditional_holds &&
                                 (report.full[i].divides() == report.peeled[i].divides());
  }
  return report;
}

bool permutation_invariance_check(const OrderedSet& s, unsigned a, unsigned b,
                                  const std::vector<int>& sigma) {
  require_exponents(a, b);
  const int n = s.size();
  if (static_cast<int>(sigma.size()) != n)
    throw InvalidPermutationError("permutation length differs from |S|");
  std::vector<bool> seen(static_cast<size_t>(n), false);
  for (int v : sigma) {
    if (v < 0 || v >= n || seen[static_cast<size_t>(v)])
      throw InvalidPermutationError("indices must form a permutation of 0..n-1");
    seen[static_cast<size_t>(v)] = true;
  }

  std::vector<Int> permuted;
  permuted.reserve(static_cast<size_t>(n));
  for (int v : sigma) permuted.push_back(s.at(v));

  for (PairKind kind : kAllPairKinds) {
    VerdictStatus baseline = check_pair(s, a, b, kind).status;
    VerdictStatus shuffled;
    ExactMatrix A = power_matrix(permuted, a, divisor_kind(kind));
    ExactMatrix B = power_matrix(permuted, b, dividend_kind(kind));
    try {
      shuffled = divides(A, B).divides ? VerdictStatus::Divides : VerdictStatus::Fails;
    } catch (const SingularMatrixError&) {
      shuffled = VerdictStatus::Inapplicable;
    }
    if (baseline != shuffled) return false;
  }
  return true;
}

}  // namespace powmat
