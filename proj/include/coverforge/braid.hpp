#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace coverforge {

// One occurrence of a standard generator or its inverse.
struct BraidLetter {
  int index = 1;  // generator subscript, 1-based
  int sign = +1;  // +1 or -1

  BraidLetter inverse() const { return {index, -sign}; }
  friend bool operator==(const BraidLetter&, const BraidLetter&) = default;
};

class BraidError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A word in the braid group B_n on `strands` strands. Immutable.
class BraidWord {
 public:
  explicit BraidWord(int strands, std::vector<BraidLetter> letters = {});

  int strands() const { return strands_; }
  const std::vector<BraidLetter>& letters() const { return letters_; }
  int length() const { return static_cast<int>(letters_.size()); }
  int n_plus() const { return n_plus_; }
  int n_minus() const { return length() - n_plus_; }
  bool empty() const { return letters_.empty(); }

  friend bool operator==(const BraidWord&, const BraidWord&) = default;

 private:
  int strands_;
  std::vector<BraidLetter> letters_;
  int n_plus_;
};

// Word grammar: whitespace-separated tokens `s<k>` or `-s<k>`, optional
// `^<m>` power suffix (m may be negative).
BraidWord parse_braid(const std::string& text, int strands);
std::string format_braid(const BraidWord& b);

int self_linking(const BraidWord& b);

BraidWord positive_stabilize(const BraidWord& b);
BraidWord negative_stabilize(const BraidWord& b);

BraidWord concat(const BraidWord& a, const BraidWord& b);
BraidWord inverse(const BraidWord& b);
BraidWord conjugate(const BraidWord& b, BraidLetter g);
BraidWord free_reduce(const BraidWord& b);
BraidWord cyclic_rotate(const BraidWord& b, int shift);
BraidWord reverse_word(const BraidWord& b);
BraidWord flip_indices(const BraidWord& b);

bool is_positive(const BraidWord& b);

// Witness that a word is a product of conjugates w_i s_{k_i} w_i^{-1}.
struct QuasipositivityCertificate {
  std::vector<std::pair<BraidWord, int>> factors;
};

// Word-level check: the certificate product must equal b after free
// reduction, up to cyclic rotation.
bool verify_quasipositive(const BraidWord& b,
                          const QuasipositivityCertificate& cert);

// Smallest i such that s_i^{-1} occurs in b but s_i does not.
std::optional<int> pure_negative_level(const BraidWord& b);

// Permutation of {0..n-1} induced by the closure; perm[i] = end strand of i.
std::vector<int> closure_permutation(const BraidWord& b);
bool closure_is_knot(const BraidWord& b);

}  // namespace coverforge
