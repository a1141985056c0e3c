#include "coverforge/oracle.hpp"

#include <algorithm>
#include <sstream>

namespace coverforge {

LaurentPoly::LaurentPoly(Int constant) {
  if (constant != 0) coeffs_[0] = std::move(constant);
}

LaurentPoly LaurentPoly::monomial(Int coeff, int exp) {
  LaurentPoly p;
  if (coeff != 0) p.coeffs_[exp] = std::move(coeff);
  return p;
}

void LaurentPoly::trim() {
  for (auto it = coeffs_.begin(); it != coeffs_.end();)
    it = it->second == 0 ? coeffs_.erase(it) : std::next(it);
}

int LaurentPoly::min_exp() const {
  if (is_zero()) throw OracleError("min_exp of zero polynomial");
  return coeffs_.begin()->first;
}

int LaurentPoly::max_exp() const {
  if (is_zero()) throw OracleError("max_exp of zero polynomial");
  return coeffs_.rbegin()->first;
}

Int LaurentPoly::coeff(int exp) const {
  auto it = coeffs_.find(exp);
  return it == coeffs_.end() ? Int(0) : it->second;
}

Int LaurentPoly::eval_at_one() const {
  Int s = 0;
  for (const auto& [e, c] : coeffs_) s += c;
  return s;
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const {
  LaurentPoly out = *this;
  for (const auto& [e, c] : o.coeffs_) out.coeffs_[e] += c;
  out.trim();
  return out;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& o) const {
  LaurentPoly out = *this;
  for (const auto& [e, c] : o.coeffs_) out.coeffs_[e] -= c;
  out.trim();
  return out;
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
  LaurentPoly out;
  for (const auto& [e1, c1] : coeffs_)
    for (const auto& [e2, c2] : o.coeffs_) out.coeffs_[e1 + e2] += c1 * c2;
  out.trim();
  return out;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly out = *this;
  for (auto& [e, c] : out.coeffs_) c = -c;
  return out;
}

LaurentPoly LaurentPoly::shifted(int exp) const {
  LaurentPoly out;
  for (const auto& [e, c] : coeffs_) out.coeffs_[e + exp] = c;
  return out;
}

LaurentPoly LaurentPoly::reciprocal() const {
  LaurentPoly out;
  for (const auto& [e, c] : coeffs_) out.coeffs_[-e] = c;
  return out;
}

LaurentPoly LaurentPoly::divide_exact(const LaurentPoly& o) const {
  if (o.is_zero()) throw OracleError("division by zero polynomial");
  if (is_zero()) return {};
  LaurentPoly rem = *this;
  LaurentPoly quot;
  const int dlead = o.max_exp();
  const Int& dc = o.coeffs_.rbegin()->second;
  while (!rem.is_zero() && rem.max_exp() - rem.min_exp() >= o.max_exp() - o.min_exp()) {
    const Int& rc = rem.coeffs_.rbegin()->second;
    if (rc % dc != 0) throw OracleError("inexact polynomial division");
    LaurentPoly term = monomial(rc / dc, rem.max_exp() - dlead);
    quot = quot + term;
    rem = rem - term * o;
  }
  if (!rem.is_zero()) throw OracleError("inexact polynomial division");
  return quot;
}

std::string LaurentPoly::str() const {
  if (is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    const auto& [e, c] = *it;
    if (!first) out << (c > 0 ? " + " : " - ");
    else if (c < 0) out << "-";
    first = false;
    Int a = c < 0 ? Int(-c) : c;
    if (a != 1 || e == 0) out << a.str();
    if (e != 0) {
      if (a != 1) out << "*";
      out << "t";
      if (e != 1) out << "^" << e;
    }
  }
  return out.str();
}

LaurentMatrix burau_generator(int index, int sign, int strands) {
  const int d = strands - 1;
  if (index < 1 || index > d) throw OracleError("generator index out of range");
  const LaurentPoly t = LaurentPoly::monomial(1, 1);
  const LaurentPoly tinv = LaurentPoly::monomial(1, -1);
  const LaurentPoly one(1);

  LaurentMatrix m(d, std::vector<LaurentPoly>(d));
  for (int i = 0; i < d; ++i) m[i][i] = one;
  const int i = index - 1;  // 0-based row/col of the twisted band
  if (sign > 0) {
    m[i][i] = -t;
    if (i > 0) m[i][i - 1] = t;
    if (i + 1 < d) m[i][i + 1] = one;
  } else {
    m[i][i] = -tinv;
    if (i > 0) m[i][i - 1] = one;
    if (i + 1 < d) m[i][i + 1] = tinv;
  }
  return m;
}

namespace {

LaurentMatrix mul(const LaurentMatrix& a, const LaurentMatrix& b) {
  const int n = static_cast<int>(a.size());
  LaurentMatrix out(n, std::vector<LaurentPoly>(n));
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k) {
      if (a[i][k].is_zero()) continue;
      for (int j = 0; j < n; ++j)
        if (!b[k][j].is_zero()) out[i][j] = out[i][j] + a[i][k] * b[k][j];
    }
  return out;
}

}  // namespace

LaurentMatrix burau_reduced(const BraidWord& b) {
  if (b.strands() < 2) throw OracleError("reduced Burau needs >= 2 strands");
  const int d = b.strands() - 1;
  LaurentMatrix m(d, std::vector<LaurentPoly>(d));
  for (int i = 0; i < d; ++i) m[i][i] = LaurentPoly(1);
  for (const auto& l : b.letters())
    m = mul(m, burau_generator(l.index, l.sign, b.strands()));
  return m;
}

LaurentPoly laurent_det(LaurentMatrix m) {
  const int n = static_cast<int>(m.size());
  if (n == 0) return LaurentPoly(1);
  // fraction-free (Bareiss) elimination; divisions are exact
  LaurentPoly prev(1);
  int sign = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (m[k][k].is_zero()) {
      int swap_row = -1;
      for (int i = k + 1; i < n; ++i)
        if (!m[i][k].is_zero()) {
          swap_row = i;
          break;
        }
      if (swap_row == -1) return {};
      std::swap(m[k], m[swap_row]);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j)
        m[i][j] = (m[k][k] * m[i][j] - m[i][k] * m[k][j]).divide_exact(prev);
    prev = m[k][k];
  }
  LaurentPoly det = m[n - 1][n - 1];
  return sign < 0 ? -det : det;
}

LaurentPoly alexander_poly(const BraidWord& b) {
  if (!closure_is_knot(b)) throw OracleError("braid closure is not a knot");
  const int n = b.strands();

  LaurentMatrix m = burau_reduced(b);
  for (int i = 0; i < n - 1; ++i) m[i][i] = m[i][i] - LaurentPoly(1);
  LaurentPoly det = laurent_det(std::move(m));

  // det(rho - I) = Delta * (1 - t^n)/(1 - t), up to units
  LaurentPoly denom = LaurentPoly(1) - LaurentPoly::monomial(1, n);
  LaurentPoly numer = det * (LaurentPoly(1) - LaurentPoly::monomial(1, 1));
  LaurentPoly delta = numer.divide_exact(denom);
  if (delta.is_zero()) throw OracleError("vanishing Alexander determinant");

  // normalize: symmetric in t <-> 1/t, value 1 at t = 1
  int center = delta.min_exp() + delta.max_exp();
  if (center % 2 != 0) throw OracleError("Alexander polynomial has odd spread");
  delta = delta.shifted(-center / 2);
  Int at_one = delta.eval_at_one();
  if (at_one == -1)
    delta = -delta;
  else if (at_one != 1)
    throw OracleError("Alexander normalization failed: Delta(1) != +-1");
  if (delta != delta.reciprocal())
    throw OracleError("Alexander polynomial is not symmetric");
  return delta;
}

Int cyclotomic_like_resultant(const std::vector<Int>& f, int p) {
  // Res(g, f) with g = x^{p-1} + ... + x + 1, via the Sylvester matrix.
  int deg_f = static_cast<int>(f.size()) - 1;
  while (deg_f >= 0 && f[deg_f] == 0) --deg_f;
  if (deg_f < 0) return 0;
  const int deg_g = p - 1;
  if (deg_g == 0) return 1;
  if (deg_f == 0) {
    Int r = 1;
    for (int i = 0; i < deg_g; ++i) r *= f[0];
    return r < 0 ? Int(-r) : r;
  }

  const int n = deg_f + deg_g;
  IntMatrix s(n, n);
  for (int row = 0; row < deg_f; ++row)  // rows of g coefficients
    for (int k = 0; k <= deg_g; ++k) s(row, row + k) = 1;
  for (int row = 0; row < deg_g; ++row)  // rows of f coefficients
    for (int k = 0; k <= deg_f; ++k) s(deg_f + row, row + k) = f[deg_f - k];

  // Bareiss determinant
  Int prev = 1;
  int sign = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (s(k, k) == 0) {
      int swap_row = -1;
      for (int i = k + 1; i < n; ++i)
        if (s(i, k) != 0) {
          swap_row = i;
          break;
        }
      if (swap_row == -1) return 0;
      for (int j = 0; j < n; ++j) std::swap(s(k, j), s(swap_row, j));
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j)
        s(i, j) = (s(k, k) * s(i, j) - s(i, k) * s(k, j)) / prev;
    prev = s(k, k);
  }
  Int det = s(n - 1, n - 1) * sign;
  return det < 0 ? Int(-det) : det;
}

H1Order h1_order_fox(const BraidWord& b, int p) {
  if (p < 2) throw OracleError("cover degree must be >= 2");
  LaurentPoly delta = alexander_poly(b);
  // shift to an ordinary polynomial; the unit t^k has unit resultant
  delta = delta.shifted(-delta.min_exp());
  std::vector<Int> f(delta.max_exp() + 1);
  for (const auto& [e, c] : delta.coeffs()) f[e] = c;
  Int r = cyclotomic_like_resultant(f, p);
  if (r == 0) return {false, 0};
  return {true, r};
}

}  // namespace coverforge
