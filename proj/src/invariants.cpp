#include "coverforge/invariants.hpp"

#include <algorithm>
#include <cstdlib>

namespace coverforge {

namespace {

Int abs_int(const Int& v) { return v < 0 ? Int(-v) : v; }

// Nearest-integer quotient keeps entries small during elimination.
Int rounded_div(const Int& a, const Int& b) {
  Int q = a / b;
  Int r = a - q * b;
  if (2 * abs_int(r) > abs_int(b)) q += (a < 0) == (b < 0) ? 1 : -1;
  return q;
}

}  // namespace

SmithResult smith_normal_form(IntMatrix m) {
  const int rows = m.rows(), cols = m.cols();
  const int bound = std::min(rows, cols);
  std::vector<Int> diag;

  for (int t = 0; t < bound; ++t) {
    // locate a minimal-magnitude pivot in the trailing submatrix
    int pr = -1, pc = -1;
    for (int i = t; i < rows; ++i)
      for (int j = t; j < cols; ++j)
        if (m(i, j) != 0 &&
            (pr == -1 || abs_int(m(i, j)) < abs_int(m(pr, pc)))) {
          pr = i;
          pc = j;
        }
    if (pr == -1) break;

    for (;;) {
      if (pr != t)
        for (int j = 0; j < cols; ++j) std::swap(m(t, j), m(pr, j));
      if (pc != t)
        for (int i = 0; i < rows; ++i) std::swap(m(i, t), m(i, pc));

      bool clean = true;
      for (int i = t + 1; i < rows; ++i) {
        if (m(i, t) == 0) continue;
        Int q = rounded_div(m(i, t), m(t, t));
        for (int j = t; j < cols; ++j) m(i, j) -= q * m(t, j);
        if (m(i, t) != 0) clean = false;
      }
      for (int j = t + 1; j < cols; ++j) {
        if (m(t, j) == 0) continue;
        Int q = rounded_div(m(t, j), m(t, t));
        for (int i = t; i < rows; ++i) m(i, j) -= q * m(i, t);
        if (m(t, j) != 0) clean = false;
      }
      if (clean) {
        // pivot must divide the rest of the submatrix
        bool divides = true;
        for (int i = t + 1; i < rows && divides; ++i)
          for (int j = t + 1; j < cols && divides; ++j)
            if (m(i, j) % m(t, t) != 0) {
              for (int jj = t; jj < cols; ++jj) m(t, jj) += m(i, jj);
              divides = false;
            }
        if (divides) break;
      }
      // refresh the pivot choice
      pr = pc = -1;
      for (int i = t; i < rows; ++i)
        for (int j = t; j < cols; ++j)
          if (m(i, j) != 0 &&
              (pr == -1 || abs_int(m(i, j)) < abs_int(m(pr, pc)))) {
            pr = i;
            pc = j;
          }
    }
    diag.push_back(abs_int(m(t, t)));
  }

  SmithResult out;
  out.rank = static_cast<int>(diag.size());
  for (const Int& d : diag)
    if (d > 1) out.invariant_factors.push_back(d);
  return out;
}

int signature(const IntMatrix& m) {
  const int n = m.rows();
  if (m.cols() != n) throw std::invalid_argument("signature needs a square matrix");
  std::vector<std::vector<Rat>> a(n, std::vector<Rat>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (m(i, j) != m(j, i)) throw std::invalid_argument("signature needs a symmetric matrix");
      a[i][j] = Rat(m(i, j));
    }

  auto swap_sym = [&](int i, int j) {
    std::swap(a[i], a[j]);
    for (int k = 0; k < n; ++k) std::swap(a[k][i], a[k][j]);
  };

  int pos = 0, neg = 0;
  for (int i = 0; i < n; ++i) {
    if (a[i][i] == 0) {
      int jd = -1, jo = -1;
      for (int j = i + 1; j < n; ++j) {
        if (jd == -1 && a[j][j] != 0) jd = j;
        if (jo == -1 && a[i][j] != 0) jo = j;
      }
      if (jd != -1) {
        swap_sym(i, jd);
      } else if (jo != -1) {
        // zero diagonal, hyperbolic direction: fold row/col jo into i
        for (int k = 0; k < n; ++k) a[i][k] += a[jo][k];
        for (int k = 0; k < n; ++k) a[k][i] += a[k][jo];
      } else {
        continue;  // row and column are zero from i on
      }
    }
    const Rat d = a[i][i];
    (d > 0 ? pos : neg) += 1;
    for (int j = i + 1; j < n; ++j) {
      if (a[j][i] == 0) continue;
      const Rat f = a[j][i] / d;
      for (int k = i; k < n; ++k) a[j][k] -= f * a[i][k];
    }
    for (int j = i + 1; j < n; ++j) {
      if (a[i][j] == 0) continue;
      const Rat f = a[i][j] / d;
      for (int k = i; k < n; ++k) a[k][j] -= f * a[k][i];
    }
  }
  return pos - neg;
}

Rat d3_invariant(const SurgeryDiagram& d, int sig) {
  const int chi = 1 + static_cast<int>(d.components.size());
  return Rat(-2 * chi - 3 * sig, 4) + d.plus_count;
}

std::string to_string(Flag f) {
  switch (f) {
    case Flag::stein_fillable: return "stein_fillable";
    case Flag::overtwisted: return "overtwisted";
    case Flag::unknown: return "unknown";
  }
  return "?";
}

std::set<Flag> classify(const BraidWord& b, const SurgeryDiagram& d,
                        const std::optional<QuasipositivityCertificate>& cert) {
  const BraidWord reduced = free_reduce(b);

  bool overtwisted = false;
  for (int s = 0; s < std::max(1, reduced.length()) && !overtwisted; ++s)
    overtwisted = pure_negative_level(free_reduce(cyclic_rotate(reduced, s))).has_value();
  if (!overtwisted)
    for (const auto& tag : detect_special_blocks(d, b))
      if (tag.kind == "overtwisted S3 summand") overtwisted = true;

  bool stein = is_positive(reduced);
  if (!stein && cert) stein = verify_quasipositive(b, *cert);

  if (stein && overtwisted)
    throw ClassificationError(
        "inconsistent classification inputs: quasipositive evidence together "
        "with a pure negative level");
  if (stein) return {Flag::stein_fillable};
  if (overtwisted) return {Flag::overtwisted};
  return {Flag::unknown};
}

InvariantReport analyze(const BraidWord& b, int p,
                        const std::optional<QuasipositivityCertificate>& cert) {
  SurgeryDiagram d = build_diagram(b, p);
  InvariantReport r;
  r.sl = self_linking(b);
  SmithResult snf = smith_normal_form(d.linking);
  r.h1_factors = snf.invariant_factors;
  r.b1 = static_cast<int>(d.components.size()) - snf.rank;
  r.signature = signature(d.linking);
  r.euler_char_X = 1 + static_cast<int>(d.components.size());
  r.plus_count = d.plus_count;
  r.d3 = d3_invariant(d, r.signature);
  r.flags = classify(b, d, cert);
  r.summand_tags = detect_special_blocks(d, b);
  return r;
}

std::string to_string(Conclusion c) {
  switch (c) {
    case Conclusion::invariants_distinguish: return "invariants_distinguish";
    case Conclusion::invariants_agree: return "invariants_agree";
    case Conclusion::contactomorphic_if_overtwisted: return "contactomorphic_if_overtwisted";
  }
  return "?";
}

ComparisonVerdict compare_braids(const BraidWord& b1, const BraidWord& b2, int p) {
  ComparisonVerdict v;
  v.left = analyze(b1, p);
  v.right = analyze(b2, p);
  v.smooth_match = v.left.h1_factors == v.right.h1_factors && v.left.b1 == v.right.b1;
  v.homotopy_match = v.smooth_match && v.left.d3 == v.right.d3;
  if (!v.homotopy_match) {
    v.conclusion = Conclusion::invariants_distinguish;
  } else if (v.left.flags.count(Flag::overtwisted) &&
             v.right.flags.count(Flag::overtwisted)) {
    v.conclusion = Conclusion::contactomorphic_if_overtwisted;
    v.caveat =
        "contactomorphism requires the inputs to be smoothly isotopic "
        "transverse links (user's hypothesis); when H1 has 2-torsion, equal "
        "(c1 = 0, d3) does not by itself pin down the plane-field homotopy "
        "class (the Spin^c structure could differ)";
  } else {
    v.conclusion = Conclusion::invariants_agree;
  }
  return v;
}

}  // namespace coverforge
