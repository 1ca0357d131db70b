#include "powmat/json_io.hpp"

namespace powmat {

using nlohmann::json;

json json_of(const ExactMatrix& m) {
  json rows = json::array();
  for (Index i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (Index j = 0; j < m.cols(); ++j) row.push_back(m(i, j).str());
    rows.push_back(std::move(row));
  }
  return rows;
}

json json_of(const OrderedSet& s) {
  json arr = json::array();
  for (const Int& x : s.elements()) arr.push_back(x.str());
  return arr;
}

namespace {

json json_of_witness(const GcdClosureWitness& w) {
  return {{"left", w.left.str()}, {"right", w.right.str()}, {"gcd", w.missing_gcd.str()}};
}

const char* reason_name(ConditionGViolation::Reason r) {
  return r == ConditionGViolation::Reason::LcmNotElement ? "lcm-not-element"
                                                         : "gcd-not-shared-gtd";
}

}  // namespace

json json_of(const StructureReport& r) {
  json gtd_map = json::array();
  for (const auto& g : r.gtd_map) {
    json list = json::array();
    for (const Int& d : g) list.push_back(d.str());
    gtd_map.push_back(std::move(list));
  }
  json violations = json::array();
  for (const auto& v : r.violations) {
    violations.push_back({{"x", v.element.str()},
                          {"y1", v.y1.str()},
                          {"y2", v.y2.str()},
                          {"reason", reason_name(v.reason)}});
  }
  json out{{"gcd_closed", r.gcd_closed},
           {"factor_closed", r.factor_closed},
           {"divisor_chain", r.divisor_chain},
           {"gtd_map", std::move(gtd_map)},
           {"max_gtd", r.max_gtd},
           {"condition_G", r.condition_g},
           {"element_condition_G", r.element_condition_g},
           {"violations", std::move(violations)}};
  if (r.gcd_witness) out["gcd_witness"] = json_of_witness(*r.gcd_witness);
  return out;
}

json json_of(const IntegralityResult& r) {
  json out{{"ok", r.ok}};
  if (!r.ok) {
    out["row"] = r.row;
    out["col"] = r.col;
    out["value"] = r.value.str();
  }
  return out;
}

json json_of(const CoefficientTable& t) {
  json alpha = json::array();
  for (const Int& v : t.alpha) alpha.push_back(v.str());
  json beta = json::array();
  for (const Rational& v : t.beta)
    beta.push_back(v.numerator().str() + "/" + v.denominator().str());
  json c = json::array();
  for (int i = 0; i < t.n; ++i) {
    json row = json::array();
    for (int j = 0; j < t.n; ++j) row.push_back(t.c_at(i, j).str());
    c.push_back(std::move(row));
  }
  return {{"n", t.n},
          {"a", t.exponent},
          {"alpha", std::move(alpha)},
          {"beta", std::move(beta)},
          {"c", std::move(c)}};
}

json json_of(const DivisibilityVerdict& v) {
  json out{{"pair", std::string(pair_kind_name(v.pair))}, {"a", v.a}, {"b", v.b}};
  switch (v.status) {
    case VerdictStatus::Divides:
      out["divides"] = true;
      out["quotient"] = json_of(*v.quotient);
      break;
    case VerdictStatus::Fails:
      out["divides"] = false;
      out["witness"] = {{"row", v.witness->row},
                        {"col", v.witness->col},
                        {"value", v.witness->value.str()}};
      break;
    case VerdictStatus::Inapplicable:
      out["divides"] = nullptr;
      out["inapplicable"] = true;
      break;
  }
  return out;
}

json json_of(const TheoremReport& r) {
  json verdicts = json::array();
  for (const auto& v : r.verdicts) verdicts.push_back(json_of(v));
  return {{"a", r.a},
          {"b", r.b},
          {"structure", json_of(r.structure)},
          {"exponent_divides", r.exponent_divides},
          {"preconditions_met", r.preconditions_met},
          {"verdicts", std::move(verdicts)},
          {"all_divide", r.all_divide()},
          {"theorem_violated", r.theorem_violated()}};
}

json json_of(const PeelReport& r) {
  json full = json::array();
  for (const auto& v : r.full) full.push_back(json_of(v));
  json peeled = json::array();
  for (const auto& v : r.peeled) peeled.push_back(json_of(v));
  return {{"full", std::move(full)},
          {"peeled", std::move(peeled)},
          {"biconditional_holds", r.biconditional_holds},
          {"last_line_integral", r.last_line_integral},
          {"ok", r.ok()}};
}

json json_of(const FamilyInstance& inst) {
  return {{"u", inst.u().str()},
          {"v", inst.v().str()},
          {"w", inst.w().str()},
          {"set", json_of(inst.members())}};
}

namespace {

json json_of_side(const CaseSide& side) {
  json out{{"verified", side.verified}};
  out["instance"] = side.instance ? json_of(*side.instance) : json(nullptr);
  return out;
}

}  // namespace

json json_of(const CaseResult& c) {
  return {{"b", c.b},
          {"gcd_side", json_of_side(c.gcd_side)},
          {"lcm_side", json_of_side(c.lcm_side)}};
}

json json_of(const Reproduction& r) {
  return {{"id", r.id},
          {"set", json_of(r.set)},
          {"a", r.a},
          {"b", r.b},
          {"pair", std::string(pair_kind_name(r.pair))},
          {"quotient", json_of(r.quotient)},
          {"matches_reference", r.matches_reference}};
}

json json_of(const Finding& f) {
  return {{"set", json_of(f.set)},
          {"a", f.a},
          {"b", f.b},
          {"pair", std::string(pair_kind_name(f.pair))},
          {"divides", f.divides},
          {"structure", {{"max_gtd", f.max_gtd}, {"condition_G", f.condition_g}}}};
}

}  // namespace powmat
