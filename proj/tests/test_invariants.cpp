#include <doctest.h>

#include <random>

#include "coverforge/invariants.hpp"

using namespace coverforge;

namespace {

BraidWord random_word(std::mt19937& rng, int strands, int len) {
  std::uniform_int_distribution<int> idx(1, strands - 1);
  std::uniform_int_distribution<int> sgn(0, 1);
  std::vector<BraidLetter> letters;
  for (int i = 0; i < len; ++i) letters.push_back({idx(rng), sgn(rng) ? +1 : -1});
  return BraidWord(strands, std::move(letters));
}

IntMatrix from_rows(const std::vector<std::vector<int>>& rows) {
  IntMatrix m(static_cast<int>(rows.size()),
              rows.empty() ? 0 : static_cast<int>(rows[0].size()));
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) m(i, j) = rows[i][j];
  return m;
}

}  // namespace

TEST_CASE("smith normal form basics") {
  SmithResult r = smith_normal_form(from_rows({{2, 0}, {0, 3}}));
  CHECK(r.rank == 2);
  CHECK(r.invariant_factors == std::vector<Int>{6});

  r = smith_normal_form(from_rows({{1, 2}, {3, 4}}));
  CHECK(r.rank == 2);
  CHECK(r.invariant_factors == std::vector<Int>{2});

  r = smith_normal_form(from_rows({{2, 4}, {4, 8}}));
  CHECK(r.rank == 1);
  CHECK(r.invariant_factors == std::vector<Int>{2});

  r = smith_normal_form(from_rows({{0, 0}, {0, 0}}));
  CHECK(r.rank == 0);
  CHECK(r.invariant_factors.empty());

  r = smith_normal_form(from_rows({{2, 0}, {0, 2}}));
  CHECK(r.invariant_factors == std::vector<Int>{2, 2});

  r = smith_normal_form(IntMatrix(0, 0));
  CHECK(r.rank == 0);
}

TEST_CASE("smith normal form divisibility chain") {
  std::mt19937 rng(23);
  std::uniform_int_distribution<int> entry(-6, 6);
  for (int trial = 0; trial < 30; ++trial) {
    int n = 2 + trial % 4;
    IntMatrix m(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) m(i, j) = entry(rng);
    SmithResult r = smith_normal_form(m);
    for (size_t i = 0; i + 1 < r.invariant_factors.size(); ++i)
      CHECK(r.invariant_factors[i + 1] % r.invariant_factors[i] == 0);
  }
}

TEST_CASE("smith normal form is invariant under unimodular moves") {
  std::mt19937 rng(37);
  std::uniform_int_distribution<int> entry(-5, 5);
  std::uniform_int_distribution<int> pick(0, 3);
  for (int trial = 0; trial < 50; ++trial) {
    int n = 2 + trial % 3;
    IntMatrix m(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) m(i, j) = entry(rng);
    IntMatrix moved = m;
    for (int step = 0; step < 6; ++step) {
      int i = pick(rng) % n, j = pick(rng) % n;
      if (i == j) continue;
      int c = entry(rng);
      if (step % 2 == 0)
        for (int k = 0; k < n; ++k) moved(i, k) += c * moved(j, k);
      else
        for (int k = 0; k < n; ++k) moved(k, i) += c * moved(k, j);
    }
    SmithResult a = smith_normal_form(m);
    SmithResult b = smith_normal_form(moved);
    CHECK(a.rank == b.rank);
    CHECK(a.invariant_factors == b.invariant_factors);
  }
}

TEST_CASE("signature of small symmetric matrices") {
  CHECK(signature(from_rows({{1, 0}, {0, -1}})) == 0);
  CHECK(signature(from_rows({{2, 1}, {1, 2}})) == 2);
  CHECK(signature(from_rows({{-2, 1}, {1, -2}})) == -2);
  CHECK(signature(from_rows({{0, 1}, {1, 0}})) == 0);
  CHECK(signature(from_rows({{0, 0}, {0, 0}})) == 0);
  CHECK(signature(from_rows({{0, -1, -1}, {-1, 0, -1}, {-1, -1, 0}})) == 1);
  CHECK(signature(IntMatrix(0, 0)) == 0);
  CHECK_THROWS(signature(from_rows({{0, 1}, {2, 0}})));
  CHECK_THROWS(signature(IntMatrix(2, 3)));
}

TEST_CASE("analyze: trefoil double cover") {
  InvariantReport r = analyze(parse_braid("s1^3", 2), 2);
  CHECK(r.sl == 1);
  CHECK(r.h1_factors == std::vector<Int>{3});
  CHECK(r.b1 == 0);
  CHECK(r.signature == -2);
  CHECK(r.plus_count == 0);
  CHECK(r.d3 == 0);
  CHECK(r.flags == std::set<Flag>{Flag::stein_fillable});
}

TEST_CASE("analyze: split unknot gives free homology") {
  InvariantReport r = analyze(parse_braid("s1 s2 -s2", 3), 3);
  CHECK(r.b1 == 2);
  CHECK(r.h1_factors.empty());
  REQUIRE(r.summand_tags.size() == 1);
  CHECK(r.summand_tags[0].kind == "#_{p-1}(S1xS2) summand");
}

TEST_CASE("classification paths") {
  BraidWord pos = parse_braid("s1 s2 s1", 3);
  CHECK(analyze(pos, 2).flags == std::set<Flag>{Flag::stein_fillable});

  BraidWord neg = parse_braid("s1^-3", 2);
  CHECK(analyze(neg, 2).flags == std::set<Flag>{Flag::overtwisted});

  // mixed word with no applicable criterion
  BraidWord mixed = parse_braid("s1^3 s2^2 s1^3 -s2", 3);
  CHECK(analyze(mixed, 2).flags == std::set<Flag>{Flag::unknown});

  // quasipositive via certificate: s2^-1 s1 s2 s1
  BraidWord qp = parse_braid("-s2 s1 s2 s1", 3);
  QuasipositivityCertificate cert;
  cert.factors.emplace_back(parse_braid("-s2", 3), 1);
  cert.factors.emplace_back(BraidWord(3), 1);
  CHECK(analyze(qp, 2, cert).flags == std::set<Flag>{Flag::stein_fillable});
  CHECK(analyze(qp, 2).flags == std::set<Flag>{Flag::unknown});

  // pure negative level found only after cyclic rotation
  BraidWord rotated = parse_braid("-s2 s1 -s2", 3);
  CHECK(analyze(rotated, 2).flags == std::set<Flag>{Flag::overtwisted});
}

TEST_CASE("analyze is invariant under free reduction") {
  std::mt19937 rng(41);
  for (int trial = 0; trial < 25; ++trial) {
    BraidWord b = random_word(rng, 2 + trial % 3, 1 + trial % 8);
    int p = 2 + trial % 3;
    InvariantReport a = analyze(b, p);
    InvariantReport c = analyze(free_reduce(b), p);
    CHECK(a.sl == c.sl);
    CHECK(a.h1_factors == c.h1_factors);
    CHECK(a.b1 == c.b1);
    CHECK(a.d3 == c.d3);
  }
}

TEST_CASE("cover invariants only depend on the closure") {
  // different braid presentations of the unknot and the 2-unlink
  InvariantReport r = analyze(parse_braid("s2 s1", 3), 2);
  CHECK(r.h1_factors.empty());
  CHECK(r.b1 == 0);
  CHECK(r.d3 == Rat(-1, 2));

  r = analyze(parse_braid("s2", 3), 2);  // unknot plus split unknot
  CHECK(r.b1 == 1);
  CHECK(r.h1_factors.empty());

  r = analyze(parse_braid("s1 s2 -s2 -s1", 3), 2);  // 3-component unlink
  CHECK(r.b1 == 2);
  CHECK(r.h1_factors.empty());

  // Hopf link and its mirror at p=3 both have |H1| = 3
  InvariantReport hopf = analyze(parse_braid("s1^2", 2), 3);
  InvariantReport mirror = analyze(parse_braid("s1^-2", 2), 3);
  CHECK(hopf.b1 == 0);
  CHECK(hopf.h1_factors == std::vector<Int>{3});
  CHECK(mirror.h1_factors == std::vector<Int>{3});

  std::mt19937 rng(59);
  for (int trial = 0; trial < 20; ++trial) {
    BraidWord b = random_word(rng, 2 + trial % 3, 1 + trial % 6);
    int p = 2 + trial % 3;
    InvariantReport base = analyze(b, p);
    InvariantReport rot = analyze(cyclic_rotate(b, 1 + trial % 3), p);
    InvariantReport conj = analyze(conjugate(b, {1 + trial % (b.strands() - 1), trial % 2 ? 1 : -1}), p);
    for (const InvariantReport* other : {&rot, &conj}) {
      CHECK(other->sl == base.sl);
      CHECK(other->h1_factors == base.h1_factors);
      CHECK(other->b1 == base.b1);
      CHECK(other->d3 == base.d3);
    }
  }
}

TEST_CASE("comparison verdicts") {
  BraidWord b = parse_braid("s1 s2 -s1", 3);
  ComparisonVerdict v = compare_braids(b, b, 2);
  CHECK(v.conclusion == Conclusion::invariants_agree);
  CHECK(v.smooth_match);
  CHECK(v.homotopy_match);

  v = compare_braids(parse_braid("s1", 2), parse_braid("s1^-3", 2), 2);
  CHECK(v.conclusion == Conclusion::invariants_distinguish);

  // both overtwisted with equal invariants: the conditional verdict
  v = compare_braids(parse_braid("s1^-3", 2), parse_braid("s1^-3", 2), 2);
  CHECK(v.conclusion == Conclusion::contactomorphic_if_overtwisted);
  CHECK_FALSE(v.caveat.empty());
}
