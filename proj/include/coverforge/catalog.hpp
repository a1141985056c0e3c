#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "coverforge/invariants.hpp"

namespace coverforge {

// Partial expectations checked by `catalog run`.
struct Expected {
  std::optional<int> sl;
  std::optional<std::vector<Int>> h1_factors;
  std::optional<Rat> d3;
  std::optional<Flag> flag;
};

struct CatalogEntry {
  std::string name;
  BraidWord word;
  std::string provenance;  // citation string
  Expected expected;
};

struct CatalogPair {
  std::string name;
  BraidWord left;
  BraidWord right;
  std::string provenance;
  Conclusion expected_min = Conclusion::invariants_agree;
};

// Parametrized families.
BraidWord base_unknot(int n);
BraidWord lens_word(int k);                       // s1^-k in B_2
BraidWord uot_word();                             // s1 s1^-2 in B_2
BraidWord torus_word(int n, int k);               // (s1...s_{n-1})^k in B_n
CatalogPair bm_pair(int u, int v, int w);         // 3-braid negative flype pair
CatalogPair flype_pair(int m, const BraidWord& v, const BraidWord& w, int strands);
std::vector<CatalogPair> ngot_pairs();

std::vector<CatalogEntry> builtin_entries();
std::vector<CatalogPair> builtin_pairs();

struct CatalogCheck {
  std::string name;
  bool pass;
  std::string detail;
};

struct CatalogRunOptions {
  std::vector<int> ps = {2};    // cover degrees to run
  std::string family;           // empty = all builtin entries and pairs
  std::vector<int> params;      // family parameters
};

std::vector<CatalogCheck> run_catalog(const CatalogRunOptions& opts);

}  // namespace coverforge
