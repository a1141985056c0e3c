#pragma once

#include <vector>

#include "coverforge/braid.hpp"
#include "coverforge/intmat.hpp"

namespace coverforge {

// Degree of the cyclic cover and strand count of the base braid.
struct CoverParams {
  int p;  // cover degree, >= 2
  int n;  // strands, >= 2

  friend bool operator==(const CoverParams&, const CoverParams&) = default;
};

// The curve running between the lifts of branch points x_strand and
// x_{strand+1} on sheets `sheet` and `sheet`+1 of the lifted page.
struct CurveLabel {
  int sheet;   // 1..p-1
  int strand;  // 1..n-1

  friend bool operator==(const CurveLabel&, const CurveLabel&) = default;
};

struct LiftedPage {
  CoverParams params;
  int euler_char;
  int boundary_components;
  int genus;
  std::vector<CurveLabel> curves;  // all (p-1)(n-1) labels, basis order
};

struct SignedTwist {
  CurveLabel curve;
  int handedness;  // +1 right, -1 left

  friend bool operator==(const SignedTwist&, const SignedTwist&) = default;
};

// Dehn twist word, first applied = first element.
struct TwistWord {
  std::vector<SignedTwist> twists;

  friend bool operator==(const TwistWord&, const TwistWord&) = default;
};

void validate(const CoverParams& params);
bool valid_label(const CurveLabel& c, const CoverParams& params);

// Basis position of a labeled curve; basis order is (sheet-major, strand).
int curve_index(const CurveLabel& c, const CoverParams& params);

LiftedPage lifted_page(const CoverParams& params);

// Lift of a single braid generator to the cover: p-1 parallel twists on
// one strand level, sheet p-1 applied first for a positive letter.
TwistWord lift_letter(const BraidLetter& letter, const CoverParams& params);
TwistWord lift_monodromy(const BraidWord& b, int p);

// Algebraic intersection number of the two labeled curves on the page.
int page_intersection(const CurveLabel& a, const CurveLabel& b);

// Action on H_1 of the page in the curve basis; right twist about a is the
// transvection x -> x + <x,a>a.
IntMatrix homology_action(const TwistWord& w, const CoverParams& params);

// Braid relations of the lifted generators, checked on homology.
bool verify_lift_relations(const CoverParams& params);

}  // namespace coverforge
