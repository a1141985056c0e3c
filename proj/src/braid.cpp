#include "coverforge/braid.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <numeric>
#include <sstream>

namespace coverforge {

BraidWord::BraidWord(int strands, std::vector<BraidLetter> letters)
    : strands_(strands), letters_(std::move(letters)), n_plus_(0) {
  if (strands_ < 1) throw BraidError("strand count must be >= 1");
  for (const auto& l : letters_) {
    if (l.index < 1 || l.index > strands_ - 1)
      throw BraidError("generator index " + std::to_string(l.index) +
                       " out of range for " + std::to_string(strands_) + " strands");
    if (l.sign != 1 && l.sign != -1) throw BraidError("letter sign must be +1 or -1");
    if (l.sign > 0) ++n_plus_;
  }
}

namespace {

// Token: `s<k>` or `-s<k>`, optional `^<m>` suffix.
void parse_token(const std::string& tok, std::vector<BraidLetter>& out) {
  size_t pos = 0;
  int sign = +1;
  if (pos < tok.size() && tok[pos] == '-') {
    sign = -1;
    ++pos;
  }
  if (pos >= tok.size() || tok[pos] != 's')
    throw BraidError("malformed token '" + tok + "'");
  ++pos;
  size_t caret = tok.find('^', pos);
  std::string index_part = tok.substr(pos, caret == std::string::npos ? std::string::npos : caret - pos);
  if (index_part.empty() ||
      !std::all_of(index_part.begin(), index_part.end(), [](unsigned char c) { return std::isdigit(c); }))
    throw BraidError("malformed token '" + tok + "'");
  int index = 0;
  std::from_chars(index_part.data(), index_part.data() + index_part.size(), index);

  long long power = 1;
  if (caret != std::string::npos) {
    std::string power_part = tok.substr(caret + 1);
    if (power_part.empty()) throw BraidError("malformed token '" + tok + "'");
    try {
      size_t used = 0;
      power = std::stoll(power_part, &used);
      if (used != power_part.size()) throw std::invalid_argument("");
    } catch (const std::exception&) {
      throw BraidError("malformed token '" + tok + "'");
    }
  }
  if (power < 0) {
    sign = -sign;
    power = -power;
  }
  for (long long i = 0; i < power; ++i) out.push_back({index, sign});
}

}  // namespace

BraidWord parse_braid(const std::string& text, int strands) {
  if (strands < 1) throw BraidError("strand count must be >= 1");
  std::vector<BraidLetter> letters;
  std::istringstream in(text);
  std::string tok;
  while (in >> tok) parse_token(tok, letters);
  return BraidWord(strands, std::move(letters));  // bounds checked there
}

std::string format_braid(const BraidWord& b) {
  std::string out;
  for (const auto& l : b.letters()) {
    if (!out.empty()) out += ' ';
    if (l.sign < 0) out += '-';
    out += 's';
    out += std::to_string(l.index);
  }
  return out;
}

int self_linking(const BraidWord& b) {
  return b.n_plus() - b.n_minus() - b.strands();
}

namespace {
BraidWord stabilize(const BraidWord& b, int sign) {
  std::vector<BraidLetter> letters = b.letters();
  letters.push_back({b.strands(), sign});
  return BraidWord(b.strands() + 1, std::move(letters));
}
}  // namespace

BraidWord positive_stabilize(const BraidWord& b) { return stabilize(b, +1); }
BraidWord negative_stabilize(const BraidWord& b) { return stabilize(b, -1); }

BraidWord concat(const BraidWord& a, const BraidWord& b) {
  if (a.strands() != b.strands()) throw BraidError("strand counts differ");
  std::vector<BraidLetter> letters = a.letters();
  letters.insert(letters.end(), b.letters().begin(), b.letters().end());
  return BraidWord(a.strands(), std::move(letters));
}

BraidWord inverse(const BraidWord& b) {
  std::vector<BraidLetter> letters;
  letters.reserve(b.letters().size());
  for (auto it = b.letters().rbegin(); it != b.letters().rend(); ++it)
    letters.push_back(it->inverse());
  return BraidWord(b.strands(), std::move(letters));
}

BraidWord conjugate(const BraidWord& b, BraidLetter g) {
  if (g.index < 1 || g.index > b.strands() - 1)
    throw BraidError("conjugating generator out of range");
  std::vector<BraidLetter> letters;
  letters.reserve(b.letters().size() + 2);
  letters.push_back(g);
  letters.insert(letters.end(), b.letters().begin(), b.letters().end());
  letters.push_back(g.inverse());
  return BraidWord(b.strands(), std::move(letters));
}

BraidWord free_reduce(const BraidWord& b) {
  std::vector<BraidLetter> stack;
  stack.reserve(b.letters().size());
  for (const auto& l : b.letters()) {
    if (!stack.empty() && stack.back() == l.inverse())
      stack.pop_back();
    else
      stack.push_back(l);
  }
  return BraidWord(b.strands(), std::move(stack));
}

BraidWord cyclic_rotate(const BraidWord& b, int shift) {
  if (b.empty()) return b;
  int len = b.length();
  int s = ((shift % len) + len) % len;
  std::vector<BraidLetter> letters(b.letters().begin() + s, b.letters().end());
  letters.insert(letters.end(), b.letters().begin(), b.letters().begin() + s);
  return BraidWord(b.strands(), std::move(letters));
}

BraidWord reverse_word(const BraidWord& b) {
  std::vector<BraidLetter> letters(b.letters().rbegin(), b.letters().rend());
  return BraidWord(b.strands(), std::move(letters));
}

BraidWord flip_indices(const BraidWord& b) {
  std::vector<BraidLetter> letters = b.letters();
  for (auto& l : letters) l.index = b.strands() - l.index;
  return BraidWord(b.strands(), std::move(letters));
}

bool is_positive(const BraidWord& b) {
  return b.n_minus() == 0 && b.n_plus() >= 1;
}

namespace {

// Cyclic word reduction: free reduction plus cancellation across the ends.
BraidWord cyclic_reduce(BraidWord w) {
  w = free_reduce(w);
  while (w.length() >= 2 &&
         w.letters().front() == w.letters().back().inverse()) {
    std::vector<BraidLetter> inner(w.letters().begin() + 1, w.letters().end() - 1);
    w = free_reduce(BraidWord(w.strands(), std::move(inner)));
  }
  return w;
}

}  // namespace

bool verify_quasipositive(const BraidWord& b, const QuasipositivityCertificate& cert) {
  BraidWord product(b.strands());
  for (const auto& [conj, index] : cert.factors) {
    if (conj.strands() != b.strands())
      throw BraidError("certificate conjugator on wrong strand count");
    if (index < 1 || index > b.strands() - 1)
      throw BraidError("certificate generator index out of range");
    BraidWord factor = concat(concat(conj, BraidWord(b.strands(), {{index, +1}})), inverse(conj));
    product = concat(product, factor);
  }
  BraidWord lhs = cyclic_reduce(b);
  BraidWord rhs = cyclic_reduce(product);
  if (lhs.length() != rhs.length()) return false;
  if (lhs.empty()) return true;
  for (int s = 0; s < lhs.length(); ++s)
    if (cyclic_rotate(lhs, s) == rhs) return true;
  return false;
}

std::optional<int> pure_negative_level(const BraidWord& b) {
  for (int i = 1; i <= b.strands() - 1; ++i) {
    bool has_neg = false, has_pos = false;
    for (const auto& l : b.letters())
      if (l.index == i) (l.sign < 0 ? has_neg : has_pos) = true;
    if (has_neg && !has_pos) return i;
  }
  return std::nullopt;
}

std::vector<int> closure_permutation(const BraidWord& b) {
  std::vector<int> perm(b.strands());
  std::iota(perm.begin(), perm.end(), 0);
  for (const auto& l : b.letters()) std::swap(perm[l.index - 1], perm[l.index]);
  return perm;
}

bool closure_is_knot(const BraidWord& b) {
  std::vector<int> perm = closure_permutation(b);
  int count = 0, cur = 0;
  do {
    cur = perm[cur];
    ++count;
  } while (cur != 0);
  return count == b.strands();
}

}  // namespace coverforge
