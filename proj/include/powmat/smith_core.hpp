#pragma once

#include <vector>

#include "powmat/divisor_structure.hpp"
#include "powmat/linalg.hpp"

namespace powmat {

enum class MatrixKind { Gcd, Lcm };

struct PowerMatrixSpec {
  OrderedSet set;
  unsigned exponent{1};  // a >= 1
  MatrixKind kind{MatrixKind::Gcd};
};

/// The ath power GCD matrix ((x_i, x_j)^a) or LCM matrix ([x_i, x_j]^a) on
/// the ascending ordering of the set.
ExactMatrix power_matrix(const PowerMatrixSpec& spec);

/// Same, on an explicit element ordering (used by permutation checks).
ExactMatrix power_matrix(const std::vector<Int>& ordering, unsigned a, MatrixKind kind);

/// (xi_a * mu)(d) = sum over e | d of e^a mu(d/e), the Jordan totient J_a(d).
/// Computed by the direct divisor sum (results memoised for small d).
Int xi_mobius(const Int& d, unsigned a);

/// ((1/xi_a) * mu)(d) = sum over e | d of e^{-a} mu(d/e).
Rational xi_inverse_mobius(const Int& d, unsigned a);

/// alpha_{a,k}: sum of (xi_a * mu)(d) over divisors d of x_k that divide no
/// smaller element of S. Requires S gcd closed; index k is 0-based.
Int alpha_coeff(const OrderedSet& s, unsigned a, int k);

/// Closed form of alpha_{a,k} from the greatest-type divisors of x_k:
/// x_0^a at k = 0; x_k^a - y^a for a single gtd y; the four-term inclusion-
/// exclusion for a gtd pair. Throws TooManyGtdsError when |G_S(x_k)| >= 3.
Int alpha_closed(const OrderedSet& s, unsigned a, int k);

/// beta_{a,k}: the same filtered divisor sum with (1/xi_a) * mu.
Rational beta_coeff(const OrderedSet& s, unsigned a, int k);
Rational beta_closed(const OrderedSet& s, unsigned a, int k);

/// c_{ij}: sum of mu(d) over d with d x_i | x_j and d x_i dividing no
/// element of S below x_j. Zero whenever x_i does not divide x_j.
Int c_coeff(const OrderedSet& s, int i, int j);

/// Case-table form of c_{ij}: -1 at greatest-type divisors of x_j, +1 at
/// x_j itself and at the gcd of a gtd pair, 0 elsewhere.
Int c_closed(const OrderedSet& s, int i, int j);

/// All coefficients for one (set, exponent), computed once via the divisor
/// sums; immutable afterwards.
struct CoefficientTable {
  int n{0};
  unsigned exponent{1};
  std::vector<Int> alpha;
  std::vector<Rational> beta;
  std::vector<Int> c;  // row-major n*n

  const Int& c_at(int i, int j) const {
    return c[static_cast<size_t>(i) * static_cast<size_t>(n) + static_cast<size_t>(j)];
  }
};

CoefficientTable coefficient_table(const OrderedSet& s, unsigned a);

/// Product formulas: det(S^a) = prod alpha_{a,k} for the GCD kind and
/// det[S^a] = prod x_k^{2a} beta_{a,k} for the LCM kind. Requires S gcd
/// closed; agrees with bareiss_det of the built matrix.
Rational det_by_formula(const PowerMatrixSpec& spec);

enum class ArithmeticFn { Power, InversePower };  // xi_a and 1/xi_a

/// Smith's determinant on factor-closed sets: det(f(x_i, x_j)) equals the
/// product of (f * mu)(x_k). Throws NotFactorClosedError otherwise.
Rational smith_det_fc(const OrderedSet& s, ArithmeticFn f, unsigned a);

/// Structural inverse built from the coefficient table. GCD kind needs S
/// gcd closed; LCM kind additionally needs max_gtd <= 2 (which guarantees
/// every beta is nonzero). Equals exact_inverse of the built matrix.
ExactMatrix structural_inverse(const PowerMatrixSpec& spec);

}  // namespace powmat
