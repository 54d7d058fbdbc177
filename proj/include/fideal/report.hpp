#pragma once

// JSON forms of the library's result types.

#include "json.hpp"

#include "fideal/complex.hpp"
#include "fideal/engine.hpp"
#include "fideal/graph.hpp"
#include "fideal/monomial.hpp"
#include "fideal/perfect.hpp"
#include "fideal/unmixed.hpp"

namespace fideal {

using Json = nlohmann::ordered_json;

/// Decimal number when it fits in 2^53, decimal string otherwise.
[[nodiscard]] Json big_to_json(const BigInt& v);

[[nodiscard]] Json indices_json(Mask m);
[[nodiscard]] Json to_json(const MonomialSet& s);
[[nodiscard]] Json to_json(const SimplicialComplex& c);
[[nodiscard]] Json to_json(const Graph& g);
[[nodiscard]] Json to_json(const FCReport& r);
[[nodiscard]] Json to_json(const FIdealVerdict& v);
[[nodiscard]] Json to_json(const TypeReport& t);
[[nodiscard]] Json to_json(const UnmixedReport& r);
[[nodiscard]] Json to_json(const CountResult& r);
[[nodiscard]] Json to_json(const PerfectNumber& p);

[[nodiscard]] std::string to_string(IdealType t);
[[nodiscard]] std::string to_string(PerfectMethod m);

}  // namespace fideal
