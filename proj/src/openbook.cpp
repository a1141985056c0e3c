#include "coverforge/openbook.hpp"

#include <numeric>
#include <stdexcept>

namespace coverforge {

void validate(const CoverParams& params) {
  if (params.p < 2) throw std::invalid_argument("cover degree p must be >= 2");
  if (params.n < 2) throw std::invalid_argument("strand count n must be >= 2");
}

bool valid_label(const CurveLabel& c, const CoverParams& params) {
  return c.sheet >= 1 && c.sheet <= params.p - 1 && c.strand >= 1 &&
         c.strand <= params.n - 1;
}

int curve_index(const CurveLabel& c, const CoverParams& params) {
  if (!valid_label(c, params)) throw std::invalid_argument("curve label out of range");
  return (c.sheet - 1) * (params.n - 1) + (c.strand - 1);
}

LiftedPage lifted_page(const CoverParams& params) {
  validate(params);
  LiftedPage page;
  page.params = params;
  // Riemann-Hurwitz for the disk branched at n points.
  page.euler_char = params.p + params.n - params.p * params.n;
  page.boundary_components = std::gcd(params.n, params.p);
  page.genus = (2 - page.euler_char - page.boundary_components) / 2;
  for (int k = 1; k <= params.p - 1; ++k)
    for (int j = 1; j <= params.n - 1; ++j) page.curves.push_back({k, j});
  return page;
}

TwistWord lift_letter(const BraidLetter& letter, const CoverParams& params) {
  validate(params);
  if (letter.index < 1 || letter.index > params.n - 1)
    throw std::invalid_argument("letter index out of range for cover");
  TwistWord w;
  if (letter.sign > 0) {
    // sheet p-1 applied first, sheet 1 last
    for (int k = params.p - 1; k >= 1; --k)
      w.twists.push_back({{k, letter.index}, +1});
  } else {
    // group inverse of the positive lift
    for (int k = 1; k <= params.p - 1; ++k)
      w.twists.push_back({{k, letter.index}, -1});
  }
  return w;
}

TwistWord lift_monodromy(const BraidWord& b, int p) {
  CoverParams params{p, b.strands()};
  validate(params);
  TwistWord w;
  // word composition is right to left: the last letter acts first
  for (auto it = b.letters().rbegin(); it != b.letters().rend(); ++it) {
    TwistWord lifted = lift_letter(*it, params);
    w.twists.insert(w.twists.end(), lifted.twists.begin(), lifted.twists.end());
  }
  return w;
}

// Sign convention (see docs/conventions.md): with ds = b.sheet - a.sheet and
// dj = b.strand - a.strand,
//   <a,b> = +1 for (ds,dj) in {(-1,0), (0,-1), (+1,+1)}
//   <a,b> = -1 for (ds,dj) in {(+1,0), (0,+1), (-1,-1)}
// and 0 otherwise. This is the unique choice (up to global reorientation)
// under which the lifted generators satisfy the braid relations.
int page_intersection(const CurveLabel& a, const CurveLabel& b) {
  int ds = b.sheet - a.sheet;
  int dj = b.strand - a.strand;
  if ((ds == -1 && dj == 0) || (ds == 0 && dj == -1) || (ds == 1 && dj == 1)) return +1;
  if ((ds == 1 && dj == 0) || (ds == 0 && dj == 1) || (ds == -1 && dj == -1)) return -1;
  return 0;
}

IntMatrix homology_action(const TwistWord& w, const CoverParams& params) {
  validate(params);
  const int dim = (params.p - 1) * (params.n - 1);
  IntMatrix result = IntMatrix::identity(dim);
  for (const auto& twist : w.twists) {
    if (!valid_label(twist.curve, params))
      throw std::invalid_argument("twist label out of range");
    // transvection x -> x + h*<x,a>*a in the curve basis
    IntMatrix t = IntMatrix::identity(dim);
    const int a = curve_index(twist.curve, params);
    for (int x = 0; x < dim; ++x) {
      CurveLabel xl{x / (params.n - 1) + 1, x % (params.n - 1) + 1};
      int pairing = page_intersection(xl, twist.curve);
      if (pairing != 0) t(a, x) += twist.handedness * pairing;
    }
    result = t * result;  // application order: earlier twists act first
  }
  return result;
}

bool verify_lift_relations(const CoverParams& params) {
  validate(params);
  std::vector<IntMatrix> gen;
  for (int i = 1; i <= params.n - 1; ++i)
    gen.push_back(homology_action(lift_letter({i, +1}, params), params));
  for (int i = 0; i + 1 < static_cast<int>(gen.size()); ++i) {
    if (gen[i] * gen[i + 1] * gen[i] != gen[i + 1] * gen[i] * gen[i + 1]) return false;
  }
  for (int i = 0; i < static_cast<int>(gen.size()); ++i)
    for (int j = i + 2; j < static_cast<int>(gen.size()); ++j)
      if (gen[i] * gen[j] != gen[j] * gen[i]) return false;
  return true;
}

}  // namespace coverforge
