#pragma once

#include <string>
#include <vector>

#include "coverforge/openbook.hpp"

namespace coverforge {

// One contact (+1)/(-1) surgery component: a standard Legendrian unknot
// (tb = -1, rotation 0) sitting on a copy of its curve in page slot `time`.
struct SurgeryComponent {
  CurveLabel curve;
  int time;           // global page slot, strictly increasing
  int contact_coeff;  // +1 or -1

  int tb() const { return -1; }
  int rotation() const { return 0; }
  int smooth_framing() const { return tb() + contact_coeff; }  // 0 or -2

  friend bool operator==(const SurgeryComponent&, const SurgeryComponent&) = default;
};

struct SurgeryDiagram {
  CoverParams params;
  std::vector<SurgeryComponent> components;
  IntMatrix linking;  // smooth framings on the diagonal, lk off-diagonal
  int plus_count = 0;

  friend bool operator==(const SurgeryDiagram&, const SurgeryDiagram&) = default;
};

struct PrefixResult {
  bool base_consumed;
  BraidWord remainder;
};

// Put the word in the form (s1 s2 ... s_{n-1}) * remainder: consume a
// literal base-unknot prefix, or prepend its inverse to the word.
PrefixResult prefix_normalize(const BraidWord& b);

// Linking number between two components, earlier.time < later.time.
int linking_rule(const SurgeryComponent& earlier, const SurgeryComponent& later);

SurgeryDiagram build_diagram(const BraidWord& b, int p);

struct SummandTag {
  std::string kind;          // "overtwisted S3 summand" or "#_{p-1}(S1xS2) summand"
  std::vector<int> members;  // component indices
};

// Detached blocks of the linking graph matching the overtwisted-sphere or
// trivial-strand shapes. Reported per connected component.
std::vector<SummandTag> detect_special_blocks(const SurgeryDiagram& d,
                                              const BraidWord& b);

enum class DiagramFormat { json, dot };
std::string export_diagram(const SurgeryDiagram& d, DiagramFormat format);
SurgeryDiagram diagram_from_json(const std::string& text);

}  // namespace coverforge
