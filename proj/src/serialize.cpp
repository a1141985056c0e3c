#include "coverforge/serialize.hpp"

#include <sstream>

namespace coverforge {

namespace {

std::string int_str(const Int& v) { return v.str(); }

Json rat_json(const Rat& r) {
  return Json{{"num", boost::multiprecision::numerator(r).str()},
              {"den", boost::multiprecision::denominator(r).str()}};
}

std::string rat_str(const Rat& r) {
  std::ostringstream out;
  out << r;
  return out.str();
}

}  // namespace

Json to_json(const BraidWord& b) {
  Json letters = Json::array();
  for (const auto& l : b.letters()) letters.push_back({{"index", l.index}, {"sign", l.sign}});
  return Json{{"strands", b.strands()}, {"letters", letters}};
}

BraidWord braid_from_json(const Json& j) {
  std::vector<BraidLetter> letters;
  for (const auto& l : j.at("letters"))
    letters.push_back({l.at("index").get<int>(), l.at("sign").get<int>()});
  return BraidWord(j.at("strands").get<int>(), std::move(letters));
}

Json to_json(const TwistWord& w) {
  Json arr = Json::array();
  for (const auto& t : w.twists)
    arr.push_back({{"sheet", t.curve.sheet},
                   {"strand", t.curve.strand},
                   {"handedness", t.handedness}});
  return arr;
}

Json to_json(const SurgeryDiagram& d) {
  Json comps = Json::array();
  for (const auto& c : d.components)
    comps.push_back({{"sheet", c.curve.sheet},
                     {"strand", c.curve.strand},
                     {"time", c.time},
                     {"contact", c.contact_coeff}});
  Json linking = Json::array();
  for (int i = 0; i < d.linking.rows(); ++i) {
    Json row = Json::array();
    for (int j = 0; j < d.linking.cols(); ++j)
      row.push_back(static_cast<long long>(d.linking(i, j)));
    linking.push_back(row);
  }
  return Json{{"params", {{"p", d.params.p}, {"n", d.params.n}}},
              {"components", comps},
              {"linking", linking}};
}

SurgeryDiagram diagram_from_json_obj(const Json& j) {
  SurgeryDiagram d;
  d.params = {j.at("params").at("p").get<int>(), j.at("params").at("n").get<int>()};
  validate(d.params);
  for (const auto& c : j.at("components")) {
    SurgeryComponent comp{{c.at("sheet").get<int>(), c.at("strand").get<int>()},
                          c.at("time").get<int>(),
                          c.at("contact").get<int>()};
    if (!valid_label(comp.curve, d.params))
      throw std::invalid_argument("component curve label out of range");
    if (comp.contact_coeff == +1) ++d.plus_count;
    d.components.push_back(comp);
  }
  const int m = static_cast<int>(d.components.size());
  const auto& linking = j.at("linking");
  if (static_cast<int>(linking.size()) != m)
    throw std::invalid_argument("linking matrix size mismatch");
  d.linking = IntMatrix(m, m);
  for (int i = 0; i < m; ++i)
    for (int jj = 0; jj < m; ++jj)
      d.linking(i, jj) = Int(linking.at(i).at(jj).get<long long>());
  return d;
}

Json to_json(const InvariantReport& r) {
  Json h1 = Json::array();
  for (const auto& f : r.h1_factors) h1.push_back(int_str(f));
  Json flags = Json::array();
  for (const auto& f : r.flags) flags.push_back(to_string(f));
  Json tags = Json::array();
  for (const auto& t : r.summand_tags)
    tags.push_back({{"kind", t.kind}, {"members", t.members}});
  return Json{{"sl", r.sl},
              {"h1_factors", h1},
              {"b1", r.b1},
              {"signature", r.signature},
              {"euler_char_X", r.euler_char_X},
              {"plus_count", r.plus_count},
              {"d3", rat_json(r.d3)},
              {"c1_zero", r.c1_zero},
              {"flags", flags},
              {"summand_tags", tags}};
}

Json to_json(const ComparisonVerdict& v) {
  Json j{{"left", to_json(v.left)},
         {"right", to_json(v.right)},
         {"smooth_match", v.smooth_match},
         {"homotopy_match", v.homotopy_match},
         {"conclusion", to_string(v.conclusion)}};
  if (!v.caveat.empty()) j["caveat"] = v.caveat;
  return j;
}

QuasipositivityCertificate certificate_from_json(const Json& j, int strands) {
  QuasipositivityCertificate cert;
  for (const auto& f : j.at("factors"))
    cert.factors.emplace_back(parse_braid(f.at("conjugator").get<std::string>(), strands),
                              f.at("generator").get<int>());
  return cert;
}

std::string report_text(const InvariantReport& r) {
  std::ostringstream out;
  out << "sl          = " << r.sl << "\n";
  out << "H1          = ";
  if (r.b1 > 0) out << "Z^" << r.b1;
  if (r.h1_factors.empty() && r.b1 == 0) out << "0";
  for (size_t i = 0; i < r.h1_factors.size(); ++i)
    out << (i || r.b1 ? " + " : "") << "Z/" << r.h1_factors[i].str();
  out << "\n";
  out << "b1          = " << r.b1 << "\n";
  out << "signature   = " << r.signature << "\n";
  out << "chi(X)      = " << r.euler_char_X << "\n";
  out << "m (+1 cnt)  = " << r.plus_count << "\n";
  out << "d3          = " << rat_str(r.d3) << "\n";
  out << "c1          = 0\n";
  out << "flags       =";
  for (const auto& f : r.flags) out << " " << to_string(f);
  out << "\n";
  for (const auto& t : r.summand_tags) {
    out << "summand     = " << t.kind << " {";
    for (size_t i = 0; i < t.members.size(); ++i) out << (i ? "," : "") << t.members[i];
    out << "}\n";
  }
  return out.str();
}

std::string verdict_text(const ComparisonVerdict& v) {
  std::ostringstream out;
  out << "left:\n" << report_text(v.left);
  out << "right:\n" << report_text(v.right);
  out << "smooth_match   = " << (v.smooth_match ? "yes" : "no") << "\n";
  out << "homotopy_match = " << (v.homotopy_match ? "yes" : "no") << "\n";
  out << "conclusion     = " << to_string(v.conclusion) << "\n";
  if (!v.caveat.empty()) out << "caveat: " << v.caveat << "\n";
  return out.str();
}

}  // namespace coverforge
