#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "coverforge/surgery.hpp"

namespace coverforge {

struct SmithResult {
  std::vector<Int> invariant_factors;  // the nontrivial ones (> 1)
  int rank = 0;
};

// Invariant factors and rank of an integer matrix, exact arithmetic.
SmithResult smith_normal_form(IntMatrix m);

// #positive - #negative eigenvalues of a symmetric integer matrix, via
// congruence diagonalization over the rationals.
int signature(const IntMatrix& m);

// (c1^2 - 2*chi - 3*sign)/4 + m with c1 = 0, chi = 1 + #components,
// m = #(+1)-surgeries.
Rat d3_invariant(const SurgeryDiagram& d, int sig);

enum class Flag { stein_fillable, overtwisted, unknown };
std::string to_string(Flag f);

class ClassificationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Tight/overtwisted classification where the criteria apply: quasipositive
// words give Stein fillable covers, a pure negative level (on the reduced
// word or any cyclic rotation of it) or a detached overtwisted-sphere
// summand gives overtwisted ones. Contradictory evidence throws.
std::set<Flag> classify(const BraidWord& b, const SurgeryDiagram& d,
                        const std::optional<QuasipositivityCertificate>& cert = {});

struct InvariantReport {
  int sl = 0;
  std::vector<Int> h1_factors;
  int b1 = 0;
  int signature = 0;
  int euler_char_X = 1;
  int plus_count = 0;
  Rat d3;
  bool c1_zero = true;
  std::set<Flag> flags;
  std::vector<SummandTag> summand_tags;
};

InvariantReport analyze(const BraidWord& b, int p,
                        const std::optional<QuasipositivityCertificate>& cert = {});

enum class Conclusion { invariants_distinguish, invariants_agree, contactomorphic_if_overtwisted };
std::string to_string(Conclusion c);

struct ComparisonVerdict {
  InvariantReport left;
  InvariantReport right;
  bool smooth_match = false;    // H1 factors and b1 equal
  bool homotopy_match = false;  // smooth_match and equal d3
  Conclusion conclusion = Conclusion::invariants_distinguish;
  std::string caveat;
};

ComparisonVerdict compare_braids(const BraidWord& b1, const BraidWord& b2, int p);

}  // namespace coverforge
