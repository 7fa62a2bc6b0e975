#ifndef CHARVAR_IO_HPP
#define CHARVAR_IO_HPP

#include "charvar/alexander.hpp"
#include "charvar/arrangement.hpp"
#include "charvar/components.hpp"

#include <json.hpp>

#include <optional>
#include <string>
#include <vector>

namespace charvar {

using Json = nlohmann::ordered_json;

/// Scalars: "p/q" (or a JSON integer) for rationals, {"order": m, "coeffs":
/// ["p/q", ...]} for sum coeffs[i] zeta_m^i. All indices in files are 1-based.
/// Every reader throws ValidationError on malformed input.
ExactScalar scalar_from_json(const Json& j);
Json scalar_to_json(const ExactScalar& x);
std::vector<ExactScalar> point_from_json(const Json& j);
/// Comma-separated rationals, e.g. "-1,1,1/2".
std::vector<ExactScalar> point_from_text(const std::string& text);

Arrangement arrangement_from_json(const Json& j);
Json arrangement_to_json(const Arrangement& arr);

Lattice2 lattice_from_json(const Json& j);
Json lattice_to_json(const Lattice2& lat);

/// An input file holds an arrangement, a lattice, or both; with both, the
/// lattice must match the geometry.
struct ArrangementInput {
  std::optional<Arrangement> arrangement;
  Lattice2 lattice;
};
ArrangementInput input_from_json(const Json& j);
Json fixture_to_json(const Fixture& f);

Json component_to_json(const SubspaceComponent& c);

/// Delta factors: ["A", i, j, exp] or, as an extension, ["s", i, exp] for a
/// half twist of strands i, i+1. Optional "labels": hyperplane of each strand.
MonodromyInput monodromy_from_json(const Json& j);
Json monodromy_to_json(const MonodromyInput& m);

struct MembershipQuery {
  std::vector<ExactScalar> point;
  int k = 1;
};
MembershipQuery query_from_json(const Json& j);

Json read_json_file(const std::string& path);

}  // namespace charvar

#endif  // CHARVAR_IO_HPP
