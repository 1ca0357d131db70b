#pragma once

#include <json.hpp>

#include "powmat/counterexample.hpp"

namespace powmat {

// All big integers serialize as decimal strings, never as JSON numbers:
// quotient entries overflow 64-bit long before they overflow the library.
// Int and Rational values go through .str(); overloading json_of on them
// would make every call with an Eigen matrix probe a matrix-to-scalar
// conversion, which boost 1.74's cpp_int rejects with a hard error.

nlohmann::json json_of(const ExactMatrix& m);
nlohmann::json json_of(const OrderedSet& s);
nlohmann::json json_of(const StructureReport& r);
nlohmann::json json_of(const IntegralityResult& r);
nlohmann::json json_of(const CoefficientTable& t);
nlohmann::json json_of(const DivisibilityVerdict& v);
nlohmann::json json_of(const TheoremReport& r);
nlohmann::json json_of(const PeelReport& r);
nlohmann::json json_of(const FamilyInstance& inst);
nlohmann::json json_of(const CaseResult& c);
nlohmann::json json_of(const Reproduction& r);
nlohmann::json json_of(const Finding& f);

}  // namespace powmat
