#include "powmat/smith_core.hpp"

#include <map>
#include <memory>
#include <mutex>

namespace powmat {

namespace {

void require_exponent(unsigned a) {
  if (a == 0) throw InvalidInput("exponent must be a positive integer");
}

void require_gcd_closed(const OrderedSet& s) {
  if (!s.gcd_closed()) {
    const auto& w = *s.gcd_witness();
    throw NotGcdClosedError(w.left.str(), w.right.str(), w.missing_gcd.str());
  }
}

void require_index(const OrderedSet& s, int k) {
  if (k < 0 || k >= s.size())
    throw InvalidInput("index " + std::to_string(k) + " out of range for n = " +
                       std::to_string(s.size()));
}

Int xi_mobius_direct(const Int& d, unsigned a) {
  Int sum = 0;
  for (const Int& e : divisors(d)) {
    int mu = mobius(d / e);
    if (mu == 0) continue;
    Int term = ipow(e, a);
    if (mu > 0)
      sum += term;
    else
      sum -= term;
  }
  return sum;
}

Rational xi_inverse_mobius_direct(const Int& d, unsigned a) {
  Rational sum(0);
  for (const Int& e : divisors(d)) {
    int mu = mobius(d / e);
    if (mu == 0) continue;
    sum += Rational(Int(mu), ipow(e, a));
  }
  return sum;
}

// The convolution values depend only on (d, a); exhaustive sweeps hit the
// same small arguments millions of times, so the divisor-sum results are
// memoised for d up to the limit. Same route, cached.
constexpr unsigned kConvMaxExponent = 16;
constexpr unsigned long long kConvMaxArg = 1024;

struct ConvCache {
  std::vector<Int> jordan;
  std::vector<Rational> inverse;
};

const ConvCache* conv_cache(unsigned a) {
  if (a > kConvMaxExponent) return nullptr;
  static std::mutex mu;
  static std::map<unsigned, std::unique_ptr<ConvCache>> caches;
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = caches[a];
  if (!slot) {
    slot = std::make_unique<ConvCache>();
    slot->jordan.reserve(kConvMaxArg + 1);
    slot->inverse.reserve(kConvMaxArg + 1);
    slot->jordan.emplace_back(0);
    slot->inverse.emplace_back(0);
    for (unsigned long long d = 1; d <= kConvMaxArg; ++d) {
      slot->jordan.push_back(xi_mobius_direct(Int(d), a));
      slot->inverse.push_back(xi_inverse_mobius_direct(Int(d), a));
    }
  }
  return slot.get();
}

}  // namespace

Int xi_mobius(const Int& d, unsigned a) {
  require_exponent(a);
  if (d <= 0) throw NonPositiveElementError(d.str());
  if (d <= kConvMaxArg) {
    if (const ConvCache* cache = conv_cache(a))
      return cache->jordan[d.convert_to<size_t>()];
  }
  return xi_mobius_direct(d, a);
}

Rational xi_inverse_mobius(const Int& d, unsigned a) {
  require_exponent(a);
  if (d <= 0) throw NonPositiveElementError(d.str());
  if (d <= kConvMaxArg) {
    if (const ConvCache* cache = conv_cache(a))
      return cache->inverse[d.convert_to<size_t>()];
  }
  return xi_inverse_mobius_direct(d, a);
}

ExactMatrix power_matrix(const PowerMatrixSpec& spec) {
  return power_matrix(spec.set.elements(), spec.exponent, spec.kind);
}

ExactMatrix power_matrix(const std::vector<Int>& ordering, unsigned a, MatrixKind kind) {
  require_exponent(a);
  const Index n = static_cast<Index>(ordering.size());
  if (n == 0) throw EmptySetError();
  ExactMatrix m(n, n);
  for (Index i = 0; i < n; ++i) {
    for (Index j = i; j < n; ++j) {
      const Int& x = ordering[static_cast<size_t>(i)];
      const Int& y = ordering[static_cast<size_t>(j)];
      Int base = kind == MatrixKind::Gcd ? powmat::gcd(x, y) : powmat::lcm(x, y);
      Rational entry(ipow(base, a));
      m(i, j) = entry;
      m(j, i) = std::move(entry);
    }
  }
  return m;
}

Int alpha_coeff(const OrderedSet& s, unsigned a, int k) {
  require_exponent(a);
  require_gcd_closed(s);
  require_index(s, k);
  Int sum = 0;
  for (const Int& d : divisors(s.at(k))) {
    bool divides_smaller = false;
    for (int t = 0; t < k && !divides_smaller; ++t) {
      divides_smaller = (s.at(t) % d == 0);
    }
    if (!divides_smaller) sum += xi_mobius(d, a);
  }
  return sum;
}

Int alpha_closed(const OrderedSet& s, unsigned a, int k) {
  require_exponent(a);
  require_gcd_closed(s);
  require_index(s, k);
  if (k == 0) return ipow(s.at(0), a);
  const auto& g = s.gtd_indices(k);
  if (g.size() == 1) return ipow(s.at(k), a) - ipow(s.at(g[0]), a);
  if (g.size() == 2) {
    const Int& y1 = s.at(g[0]);
    const Int& y2 = s.at(g[1]);
    return ipow(s.at(k), a) - ipow(y1, a) - ipow(y2, a) + ipow(powmat::gcd(y1, y2), a);
  }
  if (g.size() >= 3) throw TooManyGtdsError(s.at(k).str(), static_cast<int>(g.size()));
  throw InternalError("element beyond the minimum has no greatest-type divisor in a "
                      "gcd-closed set");
}

Rational beta_coeff(const OrderedSet& s, unsigned a, int k) {
  require_exponent(a);
  require_gcd_closed(s);
  require_index(s, k);
  Rational sum(0);
  for (const Int& d : divisors(s.at(k))) {
    bool divides_smaller = false;
    for (int t = 0; t < k && !divides_smaller; ++t) {
      divides_smaller = (s.at(t) % d == 0);
    }
    if (!divides_smaller) sum += xi_inverse_mobius(d, a);
  }
  return sum;
}

Rational beta_closed(const OrderedSet& s, unsigned a, int k) {
  require_exponent(a);
  require_gcd_closed(s);
  require_index(s, k);
  if (k == 0) return Rational(Int(1), ipow(s.at(0), a));
  const auto& g = s.gtd_indices(k);
  Rational self(Int(1), ipow(s.at(k), a));
  if (g.size() == 1) return self - Rational(Int(1), ipow(s.at(g[0]), a));
  if (g.size() == 2) {
    const Int& y1 = s.at(g[0]);
    const Int& y2 = s.at(g[1]);
    return self - Rational(Int(1), ipow(y1, a)) - Rational(Int(1), ipow(y2, a)) +
           Rational(Int(1), ipow(powmat::gcd(y1, y2), a));
  }
  if (g.size() >= 3) throw TooManyGtdsError(s.at(k).str(), static_cast<int>(g.size()));
  throw InternalError("element beyond the minimum has no greatest-type divisor in a "
                      "gcd-closed set");
}

Int c_coeff(const OrderedSet& s, int i, int j) {
  require_gcd_closed(s);
  require_index(s, i);
  require_index(s, j);
  if (!s.divides_in_set(i, j)) return 0;
  const Int& xi = s.at(i);
  const Int& xj = s.at(j);
  Int sum = 0;
  for (const Int& q : divisors(xj / xi)) {
    Int dxi = q * xi;
    bool divides_smaller = false;
    for (int t = 0; t < j && !divides_smaller; ++t) {
      divides_smaller = (s.at(t) % dxi == 0);
    }
    if (!divides_smaller) sum += mobius(q);
  }
  return sum;
}

Int c_closed(const OrderedSet& s, int i, int j) {
  require_gcd_closed(s);
  require_index(s, i);
  require_index(s, j);
  if (j == 0) return i == 0 ? 1 : 0;
  const auto& g = s.gtd_indices(j);
  if (g.size() == 1) {
    if (i == g[0]) return -1;
    return i == j ? 1 : 0;
  }
  if (g.size() == 2) {
    if (i == g[0] || i == g[1]) return -1;
    if (i == j) return 1;
    return s.at(i) == powmat::gcd(s.at(g[0]), s.at(g[1])) ? 1 : 0;
  }
  if (g.size() >= 3) throw TooManyGtdsError(s.at(j).str(), static_cast<int>(g.size()));
  throw InternalError("element beyond the minimum has no greatest-type divisor in a "
                      "gcd-closed set");
}

CoefficientTable coefficient_table(const OrderedSet& s, unsigned a) {
  require_exponent(a);
  require_gcd_closed(s);
  CoefficientTable t;
  t.n = s.size();
  t.exponent = a;
  t.alpha.reserve(static_cast<size_t>(t.n));
  t.beta.reserve(static_cast<size_t>(t.n));
  t.c.assign(static_cast<size_t>(t.n) * static_cast<size_t>(t.n), Int(0));
  for (int k = 0; k < t.n; ++k) {
    t.alpha.push_back(alpha_coeff(s, a, k));
    t.beta.push_back(beta_coeff(s, a, k));
  }
  for (int j = 0; j < t.n; ++j) {
    for (int i = 0; i <= j; ++i) {
      if (!s.divides_in_set(i, j)) continue;
      t.c[static_cast<size_t>(i) * static_cast<size_t>(t.n) + static_cast<size_t>(j)] =
          c_coeff(s, i, j);
    }
  }
  return t;
}

Rational det_by_formula(const PowerMatrixSpec& spec) {
  require_exponent(spec.exponent);
  require_gcd_closed(spec.set);
  const OrderedSet& s = spec.set;
  if (spec.kind == MatrixKind::Gcd) {
    Int det = 1;
    for (int k = 0; k < s.size(); ++k) det *= alpha_coeff(s, spec.exponent, k);
    return Rational(det);
  }
  Rational det(1);
  for (int k = 0; k < s.size(); ++k) {
    det *= Rational(ipow(s.at(k), 2 * spec.exponent)) * beta_coeff(s, spec.exponent, k);
  }
  return det;
}

Rational smith_det_fc(const OrderedSet& s, ArithmeticFn f, unsigned a) {
  require_exponent(a);
  for (const Int& x : s.elements()) {
    for (const Int& d : divisors(x)) {
      if (!s.contains(d)) throw NotFactorClosedError(x.str(), d.str());
    }
  }
  Rational det(1);
  for (const Int& x : s.elements()) {
    det *= f == ArithmeticFn::Power ? Rational(xi_mobius(x, a)) : xi_inverse_mobius(x, a);
  }
  return det;
}

ExactMatrix structural_inverse(const PowerMatrixSpec& spec) {
  require_exponent(spec.exponent);
  require_gcd_closed(spec.set);
  const OrderedSet& s = spec.set;
  const int n = s.size();
  const unsigned a = spec.exponent;

  if (spec.kind == MatrixKind::Lcm && s.max_gtd() > 2) {
    for (int k = 0; k < n; ++k) {
      if (static_cast<int>(s.gtd_indices(k).size()) > 2)
        throw TooManyGtdsError(s.at(k).str(), static_cast<int>(s.gtd_indices(k).size()));
    }
  }

  CoefficientTable tbl = coefficient_table(s, a);
  if (spec.kind == MatrixKind::Lcm) {
    for (int k = 0; k < n; ++k) {
      if (tbl.beta[static_cast<size_t>(k)].is_zero()) throw ZeroBetaError(k);
    }
  } else {
    for (int k = 0; k < n; ++k) {
      if (tbl.alpha[static_cast<size_t>(k)].is_zero())
        throw InternalError("alpha coefficient vanished on a gcd-closed set");
    }
  }

  ExactMatrix inv(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = i; j < n; ++j) {
      Rational sum(0);
      for (int k = j; k < n; ++k) {  // x_i | x_k and x_j | x_k needs k >= j >= i
        if (!s.divides_in_set(i, k) || !s.divides_in_set(j, k)) continue;
        Int num = tbl.c_at(i, k) * tbl.c_at(j, k);
        if (num.is_zero()) continue;
        if (spec.kind == MatrixKind::Gcd) {
          sum += Rational(num, tbl.alpha[static_cast<size_t>(k)]);
        } else {
          sum += Rational(num) / tbl.beta[static_cast<size_t>(k)];
        }
      }
      if (spec.kind == MatrixKind::Lcm) {
        sum = sum / Rational(ipow(s.at(i), a) * ipow(s.at(j), a));
      }
      inv(i, j) = sum;
      inv(j, i) = std::move(sum);
    }
  }
  return inv;
}

}  // namespace powmat
