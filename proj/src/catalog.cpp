#include "coverforge/catalog.hpp"

#include <sstream>

#include "coverforge/oracle.hpp"

namespace coverforge {

BraidWord base_unknot(int n) {
  std::vector<BraidLetter> letters;
  for (int i = 1; i <= n - 1; ++i) letters.push_back({i, +1});
  return BraidWord(n, std::move(letters));
}

BraidWord lens_word(int k) {
  std::vector<BraidLetter> letters(k, BraidLetter{1, -1});
  return BraidWord(2, std::move(letters));
}

BraidWord uot_word() {
  return BraidWord(2, {{1, +1}, {1, -1}, {1, -1}});
}

BraidWord torus_word(int n, int k) {
  std::vector<BraidLetter> letters;
  for (int rep = 0; rep < k; ++rep)
    for (int i = 1; i <= n - 1; ++i) letters.push_back({i, +1});
  return BraidWord(n, std::move(letters));
}

namespace {

BraidWord power(int index, int exp, int strands) {
  std::vector<BraidLetter> letters(std::abs(exp), BraidLetter{index, exp >= 0 ? +1 : -1});
  return BraidWord(strands, std::move(letters));
}

}  // namespace

CatalogPair bm_pair(int u, int v, int w) {
  BraidWord l1 = concat(concat(power(1, u, 3), power(2, v, 3)),
                        concat(power(1, w, 3), power(2, -1, 3)));
  BraidWord l2 = concat(concat(power(1, u, 3), power(2, -1, 3)),
                        concat(power(1, w, 3), power(2, v, 3)));
  std::ostringstream name;
  name << "bm(" << u << "," << v << "," << w << ")";
  return {name.str(), l1, l2,
          "Birman-Menasco 3-braid pair related by a negative flype"};
}

CatalogPair flype_pair(int m, const BraidWord& v, const BraidWord& w, int strands) {
  BraidWord k1 = concat(concat(power(1, m, strands), v),
                        concat(power(1, -1, strands), w));
  BraidWord k2 = concat(concat(power(1, -1, strands), v),
                        concat(power(1, m, strands), w));
  std::ostringstream name;
  name << "flype(m=" << m << ")";
  return {name.str(), k1, k2, "negative flype pair s1^m v s1^-1 w vs s1^-1 v s1^m w"};
}

std::vector<CatalogPair> ngot_pairs() {
  BraidWord l1p = parse_braid("-s3 s2 s3 s1 s1 s3 -s2 s1 s2 s1^-2", 4);
  BraidWord l2p = parse_braid("s3 s2 s1 -s3 s1 -s2 s1 s2 s1^-2 s3", 4);
  BraidWord l1pp = parse_braid("-s4 s3 s4 s2 s1 s4 s2 s1 s2 -s3 s2 s3 -s2 -s1 -s2 -s1", 5);
  BraidWord l2pp = parse_braid("s4 s3 s2 s1 -s4 s2 s1 s2 -s3 s2 s3 -s2 -s1 -s2 -s1 s4", 5);
  return {
      {"ngot-P(-4,-3,3)", l1p, l2p,
       "transverse push-off pair of the pretzel knot P(-4,-3,3)"},
      {"ngot-P(-6,-3,3)", l1pp, l2pp,
       "transverse push-off pair of the pretzel knot P(-6,-3,3)"},
  };
}

std::vector<CatalogEntry> builtin_entries() {
  std::vector<CatalogEntry> out;
  for (int n = 2; n <= 5; ++n) {
    Expected e;
    e.h1_factors = std::vector<Int>{};
    e.d3 = Rat(-1, 2);
    e.flag = Flag::stein_fillable;
    out.push_back({"unknot-B" + std::to_string(n), base_unknot(n),
                   "base unknot braid s1...s" + std::to_string(n - 1), e});
  }
  {
    Expected e;
    e.sl = 1;
    e.flag = Flag::stein_fillable;
    out.push_back({"trefoil", torus_word(2, 3), "(2,3) torus knot as s1^3", e});
  }
  {
    Expected e;
    e.sl = 3;
    e.flag = Flag::stein_fillable;
    out.push_back({"cinquefoil", torus_word(2, 5), "(2,5) torus knot as s1^5", e});
  }
  for (int k = 1; k <= 4; ++k) {
    Expected e;
    e.flag = Flag::overtwisted;
    out.push_back({"lens-" + std::to_string(k), lens_word(k),
                   "negative 2-braid s1^-" + std::to_string(k) +
                       "; double cover is the lens space L(k,k-1)",
                   e});
  }
  {
    Expected e;
    e.h1_factors = std::vector<Int>{};
    e.flag = Flag::overtwisted;
    out.push_back({"ot-sphere", uot_word(),
                   "negatively stabilized unknot; cover is an overtwisted S3", e});
  }
  return out;
}

std::vector<CatalogPair> builtin_pairs() {
  std::vector<CatalogPair> out;
  out.push_back(bm_pair(3, 2, 3));
  out.push_back(bm_pair(5, 2, 3));
  out.push_back(bm_pair(3, 2, 5));
  out.push_back(flype_pair(2, power(2, 1, 3), power(2, 1, 3), 3));
  for (auto& pr : ngot_pairs()) out.push_back(std::move(pr));
  return out;
}

namespace {

std::string rat_str(const Rat& r) {
  std::ostringstream out;
  out << r;
  return out.str();
}

CatalogCheck check_entry(const CatalogEntry& entry, int p) {
  CatalogCheck check{entry.name + " @p=" + std::to_string(p), true, ""};
  std::ostringstream detail;
  InvariantReport r = analyze(entry.word, p);
  const Expected& e = entry.expected;
  if (e.sl && r.sl != *e.sl) {
    check.pass = false;
    detail << "sl=" << r.sl << " want " << *e.sl << "; ";
  }
  if (e.h1_factors && r.h1_factors != *e.h1_factors) {
    check.pass = false;
    detail << "h1 factor mismatch; ";
  }
  if (e.d3 && r.d3 != *e.d3) {
    check.pass = false;
    detail << "d3=" << rat_str(r.d3) << " want " << rat_str(*e.d3) << "; ";
  }
  if (e.flag && !r.flags.count(*e.flag)) {
    check.pass = false;
    detail << "missing flag " << to_string(*e.flag) << "; ";
  }
  // oracle cross-check on knot closures
  if (closure_is_knot(entry.word)) {
    H1Order fox = h1_order_fox(entry.word, p);
    Int snf_order = 1;
    for (const auto& f : r.h1_factors) snf_order *= f;
    bool snf_finite = r.b1 == 0;
    if (snf_finite != fox.finite || (snf_finite && snf_order != fox.order)) {
      check.pass = false;
      detail << "SNF |H1|=" << (snf_finite ? snf_order.str() : "inf")
             << " vs oracle " << (fox.finite ? fox.order.str() : "inf") << "; ";
    } else {
      detail << "|H1|=" << (fox.finite ? fox.order.str() : "inf") << " (oracle ok); ";
    }
  }
  check.detail = detail.str();
  return check;
}

CatalogCheck check_pair(const CatalogPair& pair, int p) {
  CatalogCheck check{pair.name + " @p=" + std::to_string(p), true, ""};
  ComparisonVerdict v = compare_braids(pair.left, pair.right, p);
  bool agrees = v.conclusion != Conclusion::invariants_distinguish &&
                v.left.sl == v.right.sl;
  check.pass = agrees;
  std::ostringstream detail;
  detail << to_string(v.conclusion) << " (sl " << v.left.sl << "/" << v.right.sl
         << ", d3 " << rat_str(v.left.d3) << "/" << rat_str(v.right.d3) << ")";
  check.detail = detail.str();
  return check;
}

}  // namespace

std::vector<CatalogCheck> run_catalog(const CatalogRunOptions& opts) {
  std::vector<CatalogCheck> out;
  auto run_entry = [&](const CatalogEntry& e) {
    for (int p : opts.ps) out.push_back(check_entry(e, p));
  };
  auto run_pair = [&](const CatalogPair& pr) {
    for (int p : opts.ps) out.push_back(check_pair(pr, p));
  };

  if (opts.family.empty()) {
    for (const auto& e : builtin_entries()) run_entry(e);
    for (const auto& pr : builtin_pairs()) run_pair(pr);
    return out;
  }
  const auto& ps = opts.params;
  auto need = [&](size_t k) {
    if (ps.size() != k)
      throw std::invalid_argument("family '" + opts.family + "' expects " +
                                  std::to_string(k) + " parameter(s)");
  };
  if (opts.family == "bm") {
    need(3);
    run_pair(bm_pair(ps[0], ps[1], ps[2]));
  } else if (opts.family == "flype") {
    need(1);
    run_pair(flype_pair(ps[0], power(2, 1, 3), power(2, 1, 3), 3));
  } else if (opts.family == "ngot") {
    for (const auto& pr : ngot_pairs()) run_pair(pr);
  } else if (opts.family == "torus") {
    need(2);
    Expected e;
    e.flag = Flag::stein_fillable;
    std::ostringstream name;
    name << "torus(" << ps[0] << "," << ps[1] << ")";
    run_entry({name.str(), torus_word(ps[0], ps[1]), "positive torus braid", e});
  } else if (opts.family == "lens") {
    need(1);
    const int k = ps[0];
    Expected e;
    e.d3 = Rat(3 - k, 4);
    e.flag = Flag::overtwisted;
    if (k > 1) e.h1_factors = std::vector<Int>{Int(k)};
    else e.h1_factors = std::vector<Int>{};
    CatalogEntry entry{"lens-" + std::to_string(k), lens_word(k),
                       "negative 2-braid; double cover L(k,k-1)", e};
    for (int p : opts.ps)
      if (p == 2) out.push_back(check_entry(entry, p));
      else out.push_back(check_entry({entry.name, entry.word, entry.provenance, Expected{}}, p));
  } else if (opts.family == "base") {
    need(1);
    Expected e;
    e.h1_factors = std::vector<Int>{};
    e.d3 = Rat(-1, 2);
    e.flag = Flag::stein_fillable;
    run_entry({"unknot-B" + std::to_string(ps[0]), base_unknot(ps[0]), "base unknot", e});
  } else if (opts.family == "uot") {
    for (int p : opts.ps) {
      Expected e;
      e.h1_factors = std::vector<Int>{};
      e.d3 = Rat(2 * p - 3, 2);
      e.flag = Flag::overtwisted;
      out.push_back(check_entry({"ot-sphere", uot_word(), "overtwisted S3 block", e}, p));
    }
  } else {
    throw std::invalid_argument("unknown family '" + opts.family + "'");
  }
  return out;
}

}  // namespace coverforge
