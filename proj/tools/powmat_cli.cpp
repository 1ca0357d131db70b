// powmat: exact power GCD / LCM matrix toolkit.
//
// Subcommands: analyze, matrix, det, inverse, divides, verify, family,
// search, reproduce. Human-readable tables by default, JSON with --json.
// Exit codes: 0 success / true verdict, 1 false verdict (divides, verify),
// 2 input errors, 3 internal invariant violations.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "powmat/json_io.hpp"

namespace {

using namespace powmat;
using nlohmann::json;

constexpr int kExitTrue = 0;
constexpr int kExitFalse = 1;
constexpr int kExitInput = 2;
constexpr int kExitInternal = 3;

struct SetSource {
  std::string inline_set;
  std::string file;

  std::vector<OrderedSet> load() const {
    std::vector<OrderedSet> out;
    if (!inline_set.empty()) {
      out.push_back(OrderedSet::parse(inline_set));
      return out;
    }
    std::ifstream in(file);
    if (!in) throw InvalidInput("cannot open set file '" + file + "'");
    std::string line;
    while (std::getline(in, line)) {
      size_t first = line.find_first_not_of(" \t\r");
      if (first == std::string::npos || line[first] == '#') continue;
      out.push_back(OrderedSet::parse(line));
    }
    if (out.empty()) throw InvalidInput("set file '" + file + "' holds no sets");
    return out;
  }
};

void add_set_options(CLI::App* cmd, SetSource* src, bool allow_file = true) {
  auto* set_opt =
      cmd->add_option("--set", src->inline_set, "comma-separated elements, e.g. 1,3,5,45");
  if (allow_file) {
    auto* file_opt =
        cmd->add_option("--file", src->file, "file with one comma-separated set per line");
    set_opt->excludes(file_opt);
    cmd->callback([src]() {
      if (src->inline_set.empty() && src->file.empty())
        throw CLI::RequiredError("--set or --file");
    });
  } else {
    set_opt->required();
  }
}

unsigned g_exponent_cap = 256;

void check_exponent(unsigned e) {
  if (e == 0) throw InvalidInput("exponents must be positive");
  if (e > g_exponent_cap)
    throw InvalidInput("exponent " + std::to_string(e) + " exceeds the cap of " +
                       std::to_string(g_exponent_cap) +
                       " (raise it with --exponent-cap)");
}

std::string format_matrix(const ExactMatrix& m) {
  std::vector<size_t> width(static_cast<size_t>(m.cols()), 0);
  for (Index j = 0; j < m.cols(); ++j) {
    for (Index i = 0; i < m.rows(); ++i) {
      width[static_cast<size_t>(j)] =
          std::max(width[static_cast<size_t>(j)], m(i, j).str().size());
    }
  }
  std::ostringstream os;
  for (Index i = 0; i < m.rows(); ++i) {
    os << "  [";
    for (Index j = 0; j < m.cols(); ++j) {
      std::string cell = m(i, j).str();
      if (j) os << "  ";
      os << std::string(width[static_cast<size_t>(j)] - cell.size(), ' ') << cell;
    }
    os << "]\n";
  }
  return os.str();
}

const char* yesno(bool v) { return v ? "yes" : "no"; }

MatrixKind parse_kind(const std::string& name) {
  if (name == "gcd") return MatrixKind::Gcd;
  if (name == "lcm") return MatrixKind::Lcm;
  throw InvalidInput("unknown matrix kind '" + name + "' (expected gcd or lcm)");
}

PairKind require_pair_kind(const std::string& name) {
  auto kind = parse_pair_kind(name);
  if (!kind)
    throw InvalidInput("unknown pair '" + name +
                       "' (expected gcd-gcd, gcd-lcm or lcm-lcm)");
  return *kind;
}

void print_structure(std::ostream& os, const OrderedSet& s, const StructureReport& r) {
  os << "set: " << s.str() << "\n";
  os << "  gcd closed:    " << yesno(r.gcd_closed);
  if (r.gcd_witness) {
    os << "   (gcd(" << r.gcd_witness->left << ", " << r.gcd_witness->right
       << ") = " << r.gcd_witness->missing_gcd << " missing)";
  }
  os << "\n";
  os << "  factor closed: " << yesno(r.factor_closed) << "\n";
  os << "  divisor chain: " << yesno(r.divisor_chain) << "\n";
  os << "  max |G(x)|:    " << r.max_gtd << "\n";
  os << "  condition G:   " << yesno(r.condition_g) << "\n";
  for (int k = 0; k < s.size(); ++k) {
    os << "  G(" << s.at(k) << ") = {";
    const auto& g = r.gtd_map[static_cast<size_t>(k)];
    for (size_t i = 0; i < g.size(); ++i) os << (i ? ", " : "") << g[i];
    os << "}\n";
  }
  for (const auto& v : r.violations) {
    os << "  violation at x = " << v.element << ": pair (" << v.y1 << ", " << v.y2
       << ") "
       << (v.reason == ConditionGViolation::Reason::LcmNotElement
               ? "has lcm below x"
               : "has a gcd that is not a shared greatest-type divisor")
       << "\n";
  }
}

void print_verdict(std::ostream& os, const DivisibilityVerdict& v) {
  os << "pair " << pair_kind_name(v.pair) << ", a = " << v.a << ", b = " << v.b << ": ";
  switch (v.status) {
    case VerdictStatus::Divides:
      os << "divides\n" << format_matrix(*v.quotient);
      break;
    case VerdictStatus::Fails:
      os << "does not divide; entry (" << v.witness->row << ", " << v.witness->col
         << ") = " << v.witness->value << "\n";
      break;
    case VerdictStatus::Inapplicable:
      os << "unknown by quotient method (singular divisor)\n";
      break;
  }
}

// ---- subcommand handlers ----

int run_analyze(const SetSource& src, bool as_json) {
  for (const OrderedSet& s : src.load()) {
    StructureReport r = analyze(s);
    if (as_json) {
      json out = json_of(r);
      out["set"] = json_of(s);
      std::cout << out.dump() << "\n";
    } else {
      print_structure(std::cout, s, r);
    }
  }
  return kExitTrue;
}

int run_matrix(const SetSource& src, unsigned a, const std::string& kind, bool as_json) {
  check_exponent(a);
  OrderedSet s = src.load().front();
  ExactMatrix m = power_matrix({s, a, parse_kind(kind)});
  if (as_json) {
    json out{{"set", json_of(s)}, {"a", a}, {"kind", kind}, {"matrix", json_of(m)}};
    std::cout << out.dump() << "\n";
  } else {
    std::cout << (parse_kind(kind) == MatrixKind::Gcd ? "(S^" : "[S^") << a
              << (parse_kind(kind) == MatrixKind::Gcd ? ") on " : "] on ") << s.str()
              << "\n"
              << format_matrix(m);
  }
  return kExitTrue;
}

int run_det(const SetSource& src, unsigned a, const std::string& kind_name,
            const std::string& method, bool reciprocal, bool as_json) {
  check_exponent(a);
  OrderedSet s = src.load().front();
  json out{{"set", json_of(s)}, {"a", a}, {"method", method}};
  std::ostringstream human;

  if (method == "smith") {
    Rational det = smith_det_fc(s, reciprocal ? ArithmeticFn::InversePower
                                              : ArithmeticFn::Power, a);
    out["det"] = det.str();
    human << "Smith determinant on factor-closed " << s.str() << " with f = "
          << (reciprocal ? "1/xi_" : "xi_") << a << ": " << det << "\n";
  } else {
    MatrixKind kind = parse_kind(kind_name);
    out["kind"] = kind_name;
    std::optional<Rational> elim, formula;
    if (method == "auto" || method == "elimination")
      elim = bareiss_det(power_matrix({s, a, kind}));
    if (method == "formula" || (method == "auto" && s.gcd_closed()))
      formula = det_by_formula({s, a, kind});
    if (elim && formula && *elim != *formula)
      throw InternalError("determinant formula disagrees with elimination: " +
                          formula->str() + " vs " + elim->str());
    if (elim) {
      out["det"] = elim->str();
      human << "det (elimination) = " << *elim << "\n";
    }
    if (formula) {
      out["det"] = formula->str();
      out["coefficients"] = json_of(coefficient_table(s, a));
      human << "det (formula)     = " << *formula << "\n";
    }
  }
  if (as_json)
    std::cout << out.dump() << "\n";
  else
    std::cout << human.str();
  return kExitTrue;
}

int run_inverse(const SetSource& src, unsigned a, const std::string& kind_name,
                const std::string& method, bool as_json) {
  check_exponent(a);
  OrderedSet s = src.load().front();
  MatrixKind kind = parse_kind(kind_name);
  std::optional<ExactMatrix> elim, structural;
  if (method == "auto" || method == "elimination")
    elim = exact_inverse(power_matrix({s, a, kind}));
  if (method == "structural" ||
      (method == "auto" && s.gcd_closed() &&
       (kind == MatrixKind::Gcd || s.max_gtd() <= 2)))
    structural = structural_inverse({s, a, kind});
  if (elim && structural && !matrices_equal(*elim, *structural))
    throw InternalError("structural inverse disagrees with elimination");
  const ExactMatrix& result = elim ? *elim : *structural;
  if (as_json) {
    json out{{"set", json_of(s)}, {"a", a}, {"kind", kind_name},
             {"inverse", json_of(result)}};
    if (structural) out["coefficients"] = json_of(coefficient_table(s, a));
    std::cout << out.dump() << "\n";
  } else {
    std::cout << "inverse of " << (kind == MatrixKind::Gcd ? "(S^" : "[S^") << a
              << (kind == MatrixKind::Gcd ? ") on " : "] on ") << s.str() << "\n"
              << format_matrix(result);
  }
  return kExitTrue;
}

int run_divides(const SetSource& src, unsigned a, unsigned b, const std::string& pair,
                bool as_json) {
  check_exponent(a);
  check_exponent(b);
  PairKind kind = require_pair_kind(pair);
  int exit_code = kExitTrue;
  for (const OrderedSet& s : src.load()) {
    DivisibilityVerdict v = check_pair(s, a, b, kind);
    if (as_json) {
      json out = json_of(v);
      out["set"] = json_of(s);
      std::cout << out.dump() << "\n";
    } else {
      std::cout << "set " << s.str() << ", ";
      print_verdict(std::cout, v);
    }
    if (v.status == VerdictStatus::Inapplicable)
      exit_code = std::max(exit_code, kExitInput);
    else if (!v.divides())
      exit_code = std::max(exit_code, kExitFalse);
  }
  return exit_code;
}

int run_verify(const SetSource& src, unsigned a, unsigned b, bool as_json) {
  check_exponent(a);
  check_exponent(b);
  int exit_code = kExitTrue;
  for (const OrderedSet& s : src.load()) {
    TheoremReport r = verify_main_theorem(s, a, b);
    if (as_json) {
      json out = json_of(r);
      out["set"] = json_of(s);
      std::cout << out.dump() << "\n";
    } else {
      print_structure(std::cout, s, r.structure);
      std::cout << "  a | b:         " << yesno(r.exponent_divides) << "\n";
      std::cout << "  preconditions: " << (r.preconditions_met ? "met" : "not met")
                << "\n";
      for (const auto& v : r.verdicts) {
        std::cout << "  ";
        print_verdict(std::cout, v);
      }
      if (r.theorem_violated())
        std::cout << "  THEOREM VIOLATION: preconditions met but a factorization "
                     "failed\n";
    }
    if (r.theorem_violated()) return kExitInternal;
    if (!r.all_divide()) exit_code = std::max(exit_code, kExitFalse);
  }
  return exit_code;
}

int run_family(unsigned b, std::optional<long long> u, std::optional<long long> v,
               std::optional<long long> w, bool as_json) {
  check_exponent(b);
  if (u || v || w) {
    if (!(u && v && w)) throw InvalidInput("--u, --v and --w must be given together");
    FamilyInstance inst{Int(*u), Int(*v), Int(*w)};
    Int d1 = family_delta(inst, 1);
    Int db = family_delta(inst, b);
    Int gb = family_gamma(inst, b);
    bool gcd_ok = family_gcd_divides(inst, b);
    bool lcm_ok = family_lcm_divides(inst, b);
    if (as_json) {
      json out{{"instance", json_of(inst)},
               {"b", b},
               {"delta_1", d1.str()},
               {"delta_b", db.str()},
               {"gamma_b", gb.str()},
               {"gcd_divides", gcd_ok},
               {"lcm_divides", lcm_ok}};
      std::cout << out.dump() << "\n";
    } else {
      std::cout << "family " << inst.str() << ", set " << inst.members().str() << "\n"
                << "  Delta_1 = " << d1 << "\n"
                << "  Delta_" << b << " = " << db << "\n"
                << "  Gamma_" << b << " = " << gb << "\n"
                << "  (S) | (S^" << b << "): " << yesno(gcd_ok) << "\n"
                << "  (S) | [S^" << b << "]: " << yesno(lcm_ok) << "\n";
    }
    return kExitTrue;
  }

  CaseResult c = theorem_1_3_case(b);
  if (as_json) {
    std::cout << json_of(c).dump() << "\n";
  } else {
    std::cout << "b = " << b << "\n";
    auto show = [&](const char* label, const CaseSide& side) {
      std::cout << "  " << label << ": ";
      if (!side.instance)
        std::cout << "no designated witness\n";
      else
        std::cout << side.instance->str() << ", "
                  << (side.verified ? "verified" : "NOT verified") << "\n";
    };
    show("gcd side", c.gcd_side);
    show("lcm side", c.lcm_side);
  }
  bool broken = (c.gcd_side.instance && !c.gcd_side.verified) ||
                (c.lcm_side.instance && !c.lcm_side.verified);
  return broken ? kExitInternal : kExitTrue;
}

int run_search(int n, long long max_element, std::vector<std::string> ab_specs,
               std::vector<std::string> pair_names, std::optional<bool> condition_g,
               std::optional<int> max_gtd, std::optional<int> max_gtd_le) {
  SearchParams params;
  params.max_size = n;
  params.max_element = Int(max_element);
  if (ab_specs.empty()) ab_specs = {"1:2"};
  for (const std::string& spec : ab_specs) {
    size_t colon = spec.find(':');
    if (colon == std::string::npos)
      throw InvalidInput("--ab expects the form A:B, got '" + spec + "'");
    unsigned a = static_cast<unsigned>(std::stoul(spec.substr(0, colon)));
    unsigned b = static_cast<unsigned>(std::stoul(spec.substr(colon + 1)));
    check_exponent(a);
    check_exponent(b);
    params.exponent_pairs.emplace_back(a, b);
  }
  if (pair_names.empty()) pair_names = {"gcd-gcd", "gcd-lcm", "lcm-lcm"};
  for (const std::string& name : pair_names)
    params.pairs.push_back(require_pair_kind(name));
  params.condition_g = condition_g;
  if (max_gtd) {
    params.max_gtd_min = max_gtd;
    params.max_gtd_max = max_gtd;
  }
  if (max_gtd_le) params.max_gtd_max = max_gtd_le;

  for (const Finding& f : search(params)) std::cout << json_of(f).dump() << "\n";
  return kExitTrue;
}

int run_reproduce(const std::string& id, unsigned b_max, bool as_json) {
  auto run_fixed = [&](const std::string& which) {
    Reproduction r = reproduce_fixed_example(which);  // throws on mismatch
    if (as_json) {
      std::cout << json_of(r).dump() << "\n";
    } else {
      std::cout << r.id << ": [S^" << r.b << "][S]^-1 on " << r.set.str()
                << " matches the published matrix\n"
                << format_matrix(r.quotient);
    }
  };
  auto run_sweep = [&](const std::string& which, PairKind side) {
    std::vector<SweepOutcome> outcomes = theorem_1_3_sweep(side, b_max);
    unsigned verified = 0, skipped = 0;
    for (const SweepOutcome& o : outcomes) {
      if (!o.ok())
        throw InternalError(which + ": b = " + std::to_string(o.b) +
                            " failed the witness-table verification");
      if (o.instance)
        ++verified;
      else
        ++skipped;
    }
    if (as_json) {
      json out{{"id", which}, {"b_max", b_max}, {"verified", verified},
               {"without_witness", skipped}};
      std::cout << out.dump() << "\n";
    } else {
      std::cout << which << ": b = 1.." << b_max << ", " << verified
                << " witnesses verified by criterion and quotient; no witness "
                   "designated for " << skipped << " value(s) of b, as published\n";
    }
  };

  if (id == "t13iii-a" || id == "t13iii-b") {
    run_fixed(id);
  } else if (id == "t13i") {
    run_sweep(id, PairKind::GcdGcd);
  } else if (id == "t13ii") {
    run_sweep(id, PairKind::GcdLcm);
  } else if (id == "all") {
    run_sweep("t13i", PairKind::GcdGcd);
    run_sweep("t13ii", PairKind::GcdLcm);
    run_fixed("t13iii-a");
    run_fixed("t13iii-b");
  } else {
    throw InvalidInput("unknown case id '" + id +
                       "' (expected t13i, t13ii, t13iii-a, t13iii-b or all)");
  }
  return kExitTrue;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact power GCD/LCM matrix toolkit"};
  app.require_subcommand(1);
  app.add_option("--exponent-cap", g_exponent_cap,
                 "upper bound accepted for exponents (memory guard)")
      ->capture_default_str();

  // analyze
  auto* analyze_cmd = app.add_subcommand("analyze", "divisor-poset structure report");
  SetSource analyze_src;
  bool analyze_json = false;
  add_set_options(analyze_cmd, &analyze_src);
  analyze_cmd->add_flag("--json", analyze_json, "emit JSON");

  // matrix
  auto* matrix_cmd = app.add_subcommand("matrix", "print a power GCD/LCM matrix");
  SetSource matrix_src;
  unsigned matrix_a = 1;
  std::string matrix_kind = "gcd";
  bool matrix_json = false;
  add_set_options(matrix_cmd, &matrix_src, false);
  matrix_cmd->add_option("--a", matrix_a, "exponent")->required();
  matrix_cmd->add_option("--kind", matrix_kind, "gcd or lcm")
      ->required()
      ->check(CLI::IsMember({"gcd", "lcm"}));
  matrix_cmd->add_flag("--json", matrix_json, "emit JSON");

  // det
  auto* det_cmd = app.add_subcommand("det", "exact determinant");
  SetSource det_src;
  unsigned det_a = 1;
  std::string det_kind = "gcd", det_method = "auto";
  bool det_reciprocal = false, det_json = false;
  add_set_options(det_cmd, &det_src, false);
  det_cmd->add_option("--a", det_a, "exponent")->required();
  det_cmd->add_option("--kind", det_kind, "gcd or lcm")
      ->capture_default_str()
      ->check(CLI::IsMember({"gcd", "lcm"}));
  det_cmd->add_option("--method", det_method, "auto, elimination, formula or smith")
      ->capture_default_str()
      ->check(CLI::IsMember({"auto", "elimination", "formula", "smith"}));
  det_cmd->add_flag("--reciprocal", det_reciprocal,
                    "with --method smith: use f = 1/xi_a instead of xi_a");
  det_cmd->add_flag("--json", det_json, "emit JSON");

  // inverse
  auto* inv_cmd = app.add_subcommand("inverse", "exact inverse");
  SetSource inv_src;
  unsigned inv_a = 1;
  std::string inv_kind = "gcd", inv_method = "auto";
  bool inv_json = false;
  add_set_options(inv_cmd, &inv_src, false);
  inv_cmd->add_option("--a", inv_a, "exponent")->required();
  inv_cmd->add_option("--kind", inv_kind, "gcd or lcm")
      ->capture_default_str()
      ->check(CLI::IsMember({"gcd", "lcm"}));
  inv_cmd->add_option("--method", inv_method, "auto, elimination or structural")
      ->capture_default_str()
      ->check(CLI::IsMember({"auto", "elimination", "structural"}));
  inv_cmd->add_flag("--json", inv_json, "emit JSON");

  // divides
  auto* div_cmd = app.add_subcommand("divides", "matrix divisibility in M_n(Z)");
  SetSource div_src;
  unsigned div_a = 1, div_b = 1;
  std::string div_pair;
  bool div_json = false;
  add_set_options(div_cmd, &div_src);
  div_cmd->add_option("--a", div_a, "divisor exponent")->required();
  div_cmd->add_option("--b", div_b, "dividend exponent")->required();
  div_cmd->add_option("--pair", div_pair, "gcd-gcd, gcd-lcm or lcm-lcm")
      ->required()
      ->check(CLI::IsMember({"gcd-gcd", "gcd-lcm", "lcm-lcm"}));
  div_cmd->add_flag("--json", div_json, "emit JSON");

  // verify
  auto* verify_cmd =
      app.add_subcommand("verify", "run the full verification pipeline on a set");
  SetSource verify_src;
  unsigned verify_a = 1, verify_b = 1;
  bool verify_json = false;
  add_set_options(verify_cmd, &verify_src);
  verify_cmd->add_option("--a", verify_a, "divisor exponent")->required();
  verify_cmd->add_option("--b", verify_b, "dividend exponent")->required();
  verify_cmd->add_flag("--json", verify_json, "emit JSON");

  // family
  auto* family_cmd = app.add_subcommand(
      "family", "the {1,u,v,uvw} family: instance report or witness table");
  unsigned family_b = 1;
  std::optional<long long> family_u, family_v, family_w;
  bool family_json = false;
  family_cmd->add_option("--b", family_b, "dividend exponent")->required();
  family_cmd->add_option("--u", family_u, "family parameter u");
  family_cmd->add_option("--v", family_v, "family parameter v");
  family_cmd->add_option("--w", family_w, "family parameter w");
  family_cmd->add_flag("--json", family_json, "emit JSON");

  // search
  auto* search_cmd = app.add_subcommand(
      "search", "sweep gcd-closed sets and emit divisibility hits as JSON lines");
  int search_n = 5;
  long long search_max = 60;
  std::vector<std::string> search_ab, search_pairs;
  std::string search_cg;
  std::optional<int> search_max_gtd, search_max_gtd_le;
  search_cmd->add_option("--n", search_n, "set size bound")->capture_default_str();
  search_cmd->add_option("--max", search_max, "element bound")->capture_default_str();
  search_cmd->add_option("--ab", search_ab, "exponent pair A:B (repeatable)");
  search_cmd->add_option("--pair", search_pairs,
                         "pair kind to test (repeatable; default all three)");
  search_cmd->add_option("--condition-g", search_cg,
                         "keep only sets where condition G is true/false")
      ->check(CLI::IsMember({"true", "false"}));
  search_cmd->add_option("--max-gtd", search_max_gtd,
                         "keep only sets with this max |G(x)|");
  search_cmd->add_option("--max-gtd-le", search_max_gtd_le,
                         "keep only sets with max |G(x)| at most this");

  // reproduce
  auto* repro_cmd =
      app.add_subcommand("reproduce", "recompute published results and compare");
  std::string repro_id;
  unsigned repro_bmax = 60;
  bool repro_json = false;
  repro_cmd->add_option("id", repro_id, "t13i, t13ii, t13iii-a, t13iii-b or all")
      ->required();
  repro_cmd->add_option("--bmax", repro_bmax, "sweep bound for t13i/t13ii")
      ->capture_default_str();
  repro_cmd->add_flag("--json", repro_json, "emit JSON");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitInput;
  }

  try {
    if (*analyze_cmd) return run_analyze(analyze_src, analyze_json);
    if (*matrix_cmd) return run_matrix(matrix_src, matrix_a, matrix_kind, matrix_json);
    if (*det_cmd)
      return run_det(det_src, det_a, det_kind, det_method, det_reciprocal, det_json);
    if (*inv_cmd) return run_inverse(inv_src, inv_a, inv_kind, inv_method, inv_json);
    if (*div_cmd) return run_divides(div_src, div_a, div_b, div_pair, div_json);
    if (*verify_cmd) return run_verify(verify_src, verify_a, verify_b, verify_json);
    if (*family_cmd)
      return run_family(family_b, family_u, family_v, family_w, family_json);
    if (*search_cmd) {
      std::optional<bool> cg;
      if (search_cg == "true")
        cg = true;
      else if (search_cg == "false")
        cg = false;
      else if (!search_cg.empty())
        throw InvalidInput("--condition-g expects true or false");
      return run_search(search_n, search_max, search_ab, search_pairs, cg,
                        search_max_gtd, search_max_gtd_le);
    }
    if (*repro_cmd) return run_reproduce(repro_id, repro_bmax, repro_json);
  } catch (const InternalError& e) {
    std::cerr << "internal invariant violation: " << e.what() << "\n";
    return kExitInternal;
  } catch (const SingularMatrixError& e) {
    std::cerr << "quotient method inapplicable: " << e.what() << "\n";
    return kExitInput;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  }
  return kExitInput;
}
