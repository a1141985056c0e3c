#pragma once

#include <map>
#include <string>
#include <vector>

#include "coverforge/braid.hpp"
#include "coverforge/intmat.hpp"

namespace coverforge {

// Integer Laurent polynomial; no zero coefficients stored.
class LaurentPoly {
 public:
  LaurentPoly() = default;
  LaurentPoly(Int constant);  // NOLINT(google-explicit-constructor)
  static LaurentPoly monomial(Int coeff, int exp);

  const std::map<int, Int>& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  int min_exp() const;
  int max_exp() const;
  Int coeff(int exp) const;
  Int eval_at_one() const;

  LaurentPoly operator+(const LaurentPoly& o) const;
  LaurentPoly operator-(const LaurentPoly& o) const;
  LaurentPoly operator*(const LaurentPoly& o) const;
  LaurentPoly operator-() const;
  LaurentPoly shifted(int exp) const;  // multiply by t^exp
  LaurentPoly reciprocal() const;      // t -> 1/t

  // Exact division; throws if the remainder is nonzero.
  LaurentPoly divide_exact(const LaurentPoly& o) const;

  std::string str() const;

  friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

 private:
  void trim();
  std::map<int, Int> coeffs_;
};

using LaurentMatrix = std::vector<std::vector<LaurentPoly>>;

// Product of the reduced Burau matrices of the letters, word order.
LaurentMatrix burau_reduced(const BraidWord& b);
LaurentMatrix burau_generator(int index, int sign, int strands);

class OracleError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Alexander polynomial of the knot closure of b, normalized so that it is
// symmetric in t <-> 1/t and takes value 1 at t = 1.
LaurentPoly alexander_poly(const BraidWord& b);

struct H1Order {
  bool finite = true;
  Int order = 1;  // meaningful only when finite
};

// |H_1| of the p-fold cyclic branched cover of the knot closure, computed
// as the absolute product of the Alexander polynomial over the nontrivial
// p-th roots of unity (exact resultant arithmetic); 0 product = infinite.
H1Order h1_order_fox(const BraidWord& b, int p);

// Exact determinant of a square Laurent-entry matrix (fraction-free).
LaurentPoly laurent_det(LaurentMatrix m);

// |Res(x^{p-1}+...+1, f)| for an integer polynomial f, Bareiss elimination.
Int cyclotomic_like_resultant(const std::vector<Int>& f, int p);

}  // namespace coverforge
