#include "coverforge/surgery.hpp"

#include <sstream>
#include <stdexcept>

#include "coverforge/serialize.hpp"

namespace coverforge {

PrefixResult prefix_normalize(const BraidWord& b) {
  const int n = b.strands();
  if (n < 2) throw BraidError("prefix normalization needs >= 2 strands");
  bool literal = b.length() >= n - 1;
  for (int i = 0; literal && i < n - 1; ++i)
    if (b.letters()[i] != BraidLetter{i + 1, +1}) literal = false;
  if (literal) {
    std::vector<BraidLetter> rest(b.letters().begin() + (n - 1), b.letters().end());
    return {true, BraidWord(n, std::move(rest))};
  }
  // multiply by the trivial word: base * (base^-1 * b)
  std::vector<BraidLetter> rest;
  for (int i = n - 1; i >= 1; --i) rest.push_back({i, -1});
  rest.insert(rest.end(), b.letters().begin(), b.letters().end());
  return {false, BraidWord(n, std::move(rest))};
}

int linking_rule(const SurgeryComponent& earlier, const SurgeryComponent& later) {
  if (earlier.time >= later.time)
    throw std::invalid_argument("linking_rule requires earlier.time < later.time");
  const int k = earlier.curve.sheet, j = earlier.curve.strand;
  const int l = later.curve.sheet, i = later.curve.strand;
  if ((l == k && i == j) || (l == k - 1 && i == j - 1)) return -1;
  if ((l == k - 1 && i == j) || (l == k && i == j - 1)) return +1;
  return 0;
}

SurgeryDiagram build_diagram(const BraidWord& b, int p) {
  CoverParams params{p, b.strands()};
  validate(params);
  const BraidWord remainder = prefix_normalize(b).remainder;

  SurgeryDiagram d;
  d.params = params;
  int time = 0;
  // The monodromy composes right to left, so the last letter's twists sit on
  // the earliest pages.
  std::vector<BraidLetter> letters(remainder.letters().rbegin(),
                                   remainder.letters().rend());
  for (const auto& letter : letters) {
    if (letter.sign > 0) {
      // u+ block: sheet p-1 earliest, Legendrian surgeries
      for (int k = p - 1; k >= 1; --k)
        d.components.push_back({{k, letter.index}, time++, -1});
    } else {
      // u- block: sheet 1 earliest, (+1) contact surgeries
      for (int k = 1; k <= p - 1; ++k)
        d.components.push_back({{k, letter.index}, time++, +1});
    }
  }
  const int m = static_cast<int>(d.components.size());
  d.linking = IntMatrix(m, m);
  for (int i = 0; i < m; ++i) {
    d.linking(i, i) = d.components[i].smooth_framing();
    if (d.components[i].contact_coeff == +1) ++d.plus_count;
    for (int j = i + 1; j < m; ++j) {
      int lk = linking_rule(d.components[i], d.components[j]);
      d.linking(i, j) = lk;
      d.linking(j, i) = lk;
    }
  }
  return d;
}

namespace {

std::vector<std::vector<int>> linking_graph_components(const SurgeryDiagram& d) {
  const int m = static_cast<int>(d.components.size());
  std::vector<int> group(m, -1);
  std::vector<std::vector<int>> out;
  for (int start = 0; start < m; ++start) {
    if (group[start] != -1) continue;
    std::vector<int> stack{start}, members;
    group[start] = static_cast<int>(out.size());
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      members.push_back(v);
      for (int w = 0; w < m; ++w)
        if (w != v && group[w] == -1 && d.linking(v, w) != 0) {
          group[w] = group[start];
          stack.push_back(w);
        }
    }
    out.push_back(std::move(members));
  }
  return out;
}

}  // namespace

std::vector<SummandTag> detect_special_blocks(const SurgeryDiagram& d,
                                              const BraidWord& /*b*/) {
  const int p = d.params.p;
  std::vector<SummandTag> tags;
  auto blocks = linking_graph_components(d);

  // u^ot shape: 2(p-1) components, all contact +1, one strand level, every
  // sheet appearing exactly twice.
  for (const auto& block : blocks) {
    if (static_cast<int>(block.size()) != 2 * (p - 1)) continue;
    bool all_plus = true;
    int strand = d.components[block[0]].curve.strand;
    std::vector<int> sheet_count(p, 0);
    for (int idx : block) {
      const auto& c = d.components[idx];
      if (c.contact_coeff != +1 || c.curve.strand != strand) all_plus = false;
      ++sheet_count[c.curve.sheet - 1];
    }
    bool sheets_ok = true;
    for (int k = 0; k < p - 1; ++k) sheets_ok = sheets_ok && sheet_count[k] == 2;
    if (all_plus && sheets_ok)
      tags.push_back({"overtwisted S3 summand", block});
  }

  // detached u- block: p-1 mutually unlinked +1 components on one strand,
  // one per sheet. Each is a singleton in the linking graph.
  std::vector<std::vector<int>> singles_by_strand;
  for (const auto& block : blocks) {
    if (block.size() != 1) continue;
    const auto& c = d.components[block[0]];
    if (c.contact_coeff != +1) continue;
    if (static_cast<int>(singles_by_strand.size()) <= c.curve.strand)
      singles_by_strand.resize(c.curve.strand + 1);
    singles_by_strand[c.curve.strand].push_back(block[0]);
  }
  for (size_t strand = 0; strand < singles_by_strand.size(); ++strand) {
    const auto& members = singles_by_strand[strand];
    if (static_cast<int>(members.size()) != p - 1) continue;
    std::vector<int> sheet_count(p, 0);
    for (int idx : members) ++sheet_count[d.components[idx].curve.sheet - 1];
    bool sheets_ok = true;
    for (int k = 0; k < p - 1; ++k) sheets_ok = sheets_ok && sheet_count[k] == 1;
    if (sheets_ok)
      tags.push_back({"#_{p-1}(S1xS2) summand", members});
  }
  return tags;
}

std::string export_diagram(const SurgeryDiagram& d, DiagramFormat format) {
  if (format == DiagramFormat::json) return to_json(d).dump(2);
  if (format != DiagramFormat::dot) throw std::invalid_argument("unknown diagram format");

  std::ostringstream out;
  out << "graph surgery {\n";
  for (size_t i = 0; i < d.components.size(); ++i) {
    const auto& c = d.components[i];
    out << "  c" << i << " [label=\"a[" << c.curve.sheet << "," << c.curve.strand
        << "] t" << c.time << " (" << (c.contact_coeff > 0 ? "+1" : "-1")
        << " | " << c.smooth_framing() << ")\"];\n";
  }
  for (size_t i = 0; i < d.components.size(); ++i)
    for (size_t j = i + 1; j < d.components.size(); ++j) {
      const Int& lk = d.linking(static_cast<int>(i), static_cast<int>(j));
      if (lk != 0)
        out << "  c" << i << " -- c" << j << " [label=\"" << (lk > 0 ? "+1" : "-1")
            << "\"];\n";
    }
  out << "}\n";
  return out.str();
}

SurgeryDiagram diagram_from_json(const std::string& text) {
  return diagram_from_json_obj(Json::parse(text));
}

}  // namespace coverforge
