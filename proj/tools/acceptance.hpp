#ifndef CHARVAR_TOOLS_ACCEPTANCE_HPP
#define CHARVAR_TOOLS_ACCEPTANCE_HPP

#include "charvar/alexander.hpp"
#include "charvar/arrangement.hpp"
#include "charvar/components.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace charvar::acceptance {

struct Options {
  std::uint64_t seed = 42;
  int samples = 5;  ///< verification points per enumerated component
};

struct Outcome {
  int id = 0;
  std::string name;
  bool pass = false;
  std::string detail;
};

constexpr int criterion_count = 12;

Outcome run(int id, const Options& opt);

/// e.g. "15 components, dim 2: 15 (local 10, nonlocal 5), essential: 5".
std::string census(const EnumerationResult& res);

/// Monodromy of the diamond with H7 sent to infinity (strands carry the
/// labels listed in the file).
MonodromyInput diamond_deconed_monodromy();

/// Rank bridge and transpose identity on one lattice, `samples` random lambda.
struct Invariants {
  std::string name;
  int n = 0;
  long b2 = 0;
  Index rank_phi_one = 0;
  int transpose_checked = 0;
  int transpose_failed = 0;
  bool pass = false;
};

Invariants invariants(const std::string& name, const Lattice2& lat, int samples, std::uint64_t seed);

}  // namespace charvar::acceptance

#endif  // CHARVAR_TOOLS_ACCEPTANCE_HPP
