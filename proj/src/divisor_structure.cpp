#include "powmat/divisor_structure.hpp"

#include <algorithm>
#include <limits>
#include <set>
#include <sstream>

namespace powmat {

namespace {

constexpr unsigned long long kU64Max = std::numeric_limits<unsigned long long>::max();

bool fits_u64(const Int& n) { return n > 0 && n <= kU64Max; }

std::vector<Int> divisors_u64(unsigned long long n) {
  std::vector<unsigned long long> small, large;
  for (unsigned long long i = 1; i <= n / i; ++i) {
    if (n % i == 0) {
      small.push_back(i);
      if (i != n / i) large.push_back(n / i);
    }
  }
  std::vector<Int> out;
  out.reserve(small.size() + large.size());
  for (auto v : small) out.emplace_back(v);
  for (auto it = large.rbegin(); it != large.rend(); ++it) out.emplace_back(*it);
  return out;
}

int mobius_u64(unsigned long long n) {
  int primes = 0;
  for (unsigned long long p = 2; p <= n / p; p += (p == 2 ? 1 : 2)) {
    if (n % p == 0) {
      n /= p;
      if (n % p == 0) return 0;
      ++primes;
    }
  }
  if (n > 1) ++primes;
  return primes % 2 == 0 ? 1 : -1;
}

}  // namespace

std::vector<Int> divisors(const Int& n) {
  if (n <= 0) throw NonPositiveElementError(n.str());
  if (fits_u64(n)) return divisors_u64(n.convert_to<unsigned long long>());
  std::vector<Int> small, large;
  for (Int i = 1; i * i <= n; ++i) {
    if (n % i == 0) {
      small.push_back(i);
      if (i * i != n) large.push_back(n / i);
    }
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

int mobius(const Int& n) {
  if (n <= 0) throw NonPositiveElementError(n.str());
  if (fits_u64(n)) return mobius_u64(n.convert_to<unsigned long long>());
  Int m = n;
  int primes = 0;
  for (Int p = 2; p * p <= m; p += (p == 2 ? 1 : 2)) {
    if (m % p == 0) {
      m /= p;
      if (m % p == 0) return 0;
      ++primes;
    }
  }
  if (m > 1) ++primes;
  return primes % 2 == 0 ? 1 : -1;
}

OrderedSet::OrderedSet(std::vector<Int> sorted) : xs_(std::move(sorted)) { build_caches(); }

OrderedSet OrderedSet::normalize(std::vector<Int> values) {
  if (values.empty()) throw EmptySetError();
  for (const Int& v : values) {
    if (v <= 0) throw NonPositiveElementError(v.str());
  }
  std::sort(values.begin(), values.end());
  for (size_t i = 1; i < values.size(); ++i) {
    if (values[i] == values[i - 1]) throw DuplicateElementError(values[i].str());
  }
  return OrderedSet(std::move(values));
}

OrderedSet OrderedSet::parse(std::string_view csv) {
  std::vector<Int> values;
  size_t pos = 0;
  while (pos <= csv.size()) {
    size_t comma = csv.find(',', pos);
    if (comma == std::string_view::npos) comma = csv.size();
    std::string_view token = csv.substr(pos, comma - pos);
    size_t first = token.find_first_not_of(" \t");
    if (first == std::string_view::npos) throw ParseError("empty element in set literal");
    size_t last = token.find_last_not_of(" \t");
    values.push_back(parse_int(token.substr(first, last - first + 1)));
    pos = comma + 1;
    if (comma == csv.size()) break;
  }
  return normalize(std::move(values));
}

void OrderedSet::build_caches() {
  const int n = size();
  divides_.assign(static_cast<size_t>(n) * static_cast<size_t>(n), false);
  for (int i = 0; i < n; ++i) {
    for (int j = i; j < n; ++j) {
      if (xs_[static_cast<size_t>(j)] % xs_[static_cast<size_t>(i)] == 0)
        divides_[static_cast<size_t>(i) * static_cast<size_t>(n) +
                 static_cast<size_t>(j)] = true;
    }
  }
  // divides_(i,i) covers i == j; nothing below the diagonal can divide upward
  // since the ordering is strictly increasing.

  gcd_closed_ = true;
  for (int i = 0; i < n && gcd_closed_; ++i) {
    for (int j = i + 1; j < n; ++j) {
      Int g = powmat::gcd(xs_[static_cast<size_t>(i)], xs_[static_cast<size_t>(j)]);
      if (!std::binary_search(xs_.begin(), xs_.end(), g)) {
        gcd_closed_ = false;
        gcd_witness_ = GcdClosureWitness{xs_[static_cast<size_t>(i)],
                                         xs_[static_cast<size_t>(j)], g};
        break;
      }
    }
  }

  gtd_idx_.assign(static_cast<size_t>(n), {});
  max_gtd_ = 0;
  for (int j = 0; j < n; ++j) {
    auto& g = gtd_idx_[static_cast<size_t>(j)];
    for (int i = 0; i < j; ++i) {
      if (!divides_in_set(i, j)) continue;
      bool maximal = true;
      for (int e = i + 1; e < j && maximal; ++e) {
        if (divides_in_set(i, e) && divides_in_set(e, j)) maximal = false;
      }
      if (maximal) g.push_back(i);
    }
    max_gtd_ = std::max(max_gtd_, static_cast<int>(g.size()));
  }
}

int OrderedSet::index_of(const Int& v) const {
  auto it = std::lower_bound(xs_.begin(), xs_.end(), v);
  if (it == xs_.end() || *it != v) return -1;
  return static_cast<int>(it - xs_.begin());
}

OrderedSet OrderedSet::without_max() const {
  if (size() < 2) throw EmptySetError();
  return OrderedSet(std::vector<Int>(xs_.begin(), xs_.end() - 1));
}

std::string OrderedSet::str() const {
  std::ostringstream os;
  os << '{';
  for (int i = 0; i < size(); ++i) {
    if (i) os << ", ";
    os << xs_[static_cast<size_t>(i)];
  }
  os << '}';
  return os.str();
}

GcdClosedCheck is_gcd_closed(const OrderedSet& s) {
  return {s.gcd_closed(), s.gcd_witness()};
}

OrderedSet gcd_closure(const OrderedSet& s) {
  std::set<Int> cur(s.elements().begin(), s.elements().end());
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<Int> missing;
    for (auto i = cur.begin(); i != cur.end(); ++i) {
      for (auto j = std::next(i); j != cur.end(); ++j) {
        Int g = powmat::gcd(*i, *j);
        if (!cur.count(g)) missing.push_back(g);
      }
    }
    for (const Int& g : missing) grew |= cur.insert(g).second;
  }
  return OrderedSet::normalize(std::vector<Int>(cur.begin(), cur.end()));
}

bool is_factor_closed(const OrderedSet& s) {
  for (const Int& x : s.elements()) {
    for (const Int& d : divisors(x)) {
      if (!s.contains(d)) return false;
    }
  }
  return true;
}

bool is_divisor_chain(const OrderedSet& s) {
  for (int i = 0; i + 1 < s.size(); ++i) {
    if (!s.divides_in_set(i, i + 1)) return false;
  }
  return true;
}

std::vector<Int> greatest_type_divisors(const OrderedSet& s, const Int& x) {
  int k = s.index_of(x);
  if (k < 0) throw ElementNotInSetError(x.str());
  std::vector<Int> out;
  for (int i : s.gtd_indices(k)) out.push_back(s.at(i));
  return out;
}

namespace {

// Verdict for a single element's greatest-type-divisor pairs; fills the
// first (lexicographically smallest) violating pair when one exists.
bool element_condition_g(const OrderedSet& s, int k,
                         std::vector<ConditionGViolation>* violations) {
  const auto& g = s.gtd_indices(k);
  if (g.size() <= 1) return true;
  const Int& x = s.at(k);
  for (size_t p = 0; p < g.size(); ++p) {
    for (size_t q = p + 1; q < g.size(); ++q) {
      const Int& y1 = s.at(g[p]);
      const Int& y2 = s.at(g[q]);
      if (powmat::lcm(y1, y2) != x) {
        if (violations)
          violations->push_back({x, y1, y2, ConditionGViolation::Reason::LcmNotElement});
        return false;
      }
      Int y3 = powmat::gcd(y1, y2);
      int i3 = s.index_of(y3);
      auto in_gtds = [&](int owner) {
        const auto& list = s.gtd_indices(owner);
        return i3 >= 0 && std::find(list.begin(), list.end(), i3) != list.end();
      };
      if (!in_gtds(g[p]) || !in_gtds(g[q])) {
        if (violations)
          violations->push_back(
              {x, y1, y2, ConditionGViolation::Reason::GcdNotSharedGtd});
        return false;
      }
    }
  }
  return true;
}

}  // namespace

StructureReport analyze(const OrderedSet& s) {
  StructureReport r;
  r.gcd_closed = s.gcd_closed();
  r.gcd_witness = s.gcd_witness();
  r.factor_closed = is_factor_closed(s);
  r.divisor_chain = is_divisor_chain(s);
  r.max_gtd = s.max_gtd();
  r.gtd_map.reserve(static_cast<size_t>(s.size()));
  r.element_condition_g.reserve(static_cast<size_t>(s.size()));
  r.condition_g = true;
  for (int k = 0; k < s.size(); ++k) {
    std::vector<Int> g;
    for (int i : s.gtd_indices(k)) g.push_back(s.at(i));
    r.gtd_map.push_back(std::move(g));
    bool ok = element_condition_g(s, k, &r.violations);
    r.element_condition_g.push_back(ok);
    r.condition_g = r.condition_g && ok;
  }
  return r;
}

bool sub_poset_condition_G(const OrderedSet& s, const Int& lo, const Int& hi) {
  if (!s.contains(lo)) throw ElementNotInSetError(lo.str());
  if (!s.contains(hi)) throw ElementNotInSetError(hi.str());
  if (hi % lo != 0) throw NotDivisibleError(lo.str(), hi.str());
  std::vector<Int> subset;
  for (const Int& u : s.elements()) {
    if (u % lo == 0 && hi % u == 0) subset.push_back(u);
  }
  OrderedSet sub = OrderedSet::normalize(std::move(subset));
  for (int k = 0; k < sub.size(); ++k) {
    if (!element_condition_g(sub, k, nullptr)) return false;
  }
  return true;
}

bool element_satisfies_condition_g(const OrderedSet& s, const Int& x) {
  int k = s.index_of(x);
  if (k < 0) throw ElementNotInSetError(x.str());
  return element_condition_g(s, k, nullptr);
}

bool set_satisfies_condition_g(const OrderedSet& s) {
  for (int k = 0; k < s.size(); ++k) {
    if (!element_condition_g(s, k, nullptr)) return false;
  }
  return true;
}

}  // namespace powmat
