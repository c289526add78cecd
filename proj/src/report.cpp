#include "maxff/report.hpp"

#include <algorithm>
#include <sstream>

namespace maxff {

namespace {

const char* kind_name(AutDescriptor::Kind k) {
  using K = AutDescriptor::Kind;
  switch (k) {
    case K::Cyclic: return "cyclic";
    case K::C3SemidirectGi: return "c3_semidirect";
    case K::Order96: return "order96";
    case K::ContainsGiC4: return "contains_gi_c4";
    case K::Roquette: return "roquette";
    case K::Infinite: return "infinite";
  }
  return "?";
}

AutDescriptor::Kind kind_from_name(const std::string& s) {
  using K = AutDescriptor::Kind;
  for (auto k : {K::Cyclic, K::C3SemidirectGi, K::Order96, K::ContainsGiC4, K::Roquette, K::Infinite})
    if (s == kind_name(k)) return k;
  throw std::invalid_argument("unknown automorphism kind '" + s + "'");
}

std::string braces(const std::vector<std::int64_t>& v) { return "{" + join_ints(v, ", ") + "}"; }

std::string aut_cell(const std::optional<AutDescriptor>& d) {
  if (!d) return "-";
  std::string s = d->label();
  if (d->order) s += std::string(", order ") + (d->lower_bound ? ">= " : "") + std::to_string(*d->order);
  if (d->conjectural) s += " (equality conjectural)";
  return s;
}

std::string pad(const std::string& s, std::size_t w) { return s.size() >= w ? s : s + std::string(w - s.size(), ' '); }

}  // namespace

std::string join_ints(const std::vector<std::int64_t>& v, const std::string& sep) {
  std::string out;
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (k) out += sep;
    out += std::to_string(v[k]);
  }
  return out;
}

Json to_json(const AutDescriptor& d) {
  Json j;
  j["kind"] = kind_name(d.kind);
  j["label"] = d.label();
  j["order"] = d.order ? Json(*d.order) : Json(nullptr);
  j["lower_bound"] = d.lower_bound;
  j["conjectural"] = d.conjectural;
  return j;
}

AutDescriptor aut_from_json(const Json& j) {
  AutDescriptor d;
  d.kind = kind_from_name(j.at("kind").get<std::string>());
  if (!j.at("order").is_null()) d.order = j.at("order").get<std::int64_t>();
  d.lower_bound = j.at("lower_bound").get<bool>();
  d.conjectural = j.at("conjectural").get<bool>();
  return d;
}

Json to_json(const Classification& c) {
  Json j;
  j["m"] = c.m;
  if (c.q) j["q"] = *c.q;
  j["phi2"] = c.phi2;
  j["class_count"] = c.class_count;
  j["field"] = {{"p", c.palpha_field.p},
                {"h", c.palpha_field.h},
                {"irreducible", c.palpha_field.irreducible},
                {"auxiliary", c.palpha_field_auxiliary}};
  Json classes = Json::array();
  for (const auto& r : c.classes) {
    Json e;
    e["canonical"] = r.canonical;
    e["label"] = r.label;
    e["members"] = r.members;
    e["gaps"] = {{"p0", r.gaps.p0}, {"pinf", r.gaps.pinf}, {"palpha", r.gaps.palpha}};
    if (r.aut) e["aut"] = to_json(*r.aut);
    if (r.maximal) e["maximal"] = *r.maximal;
    if (r.rational_places) e["rational_places"] = *r.rational_places;
    e["two_nongap_somewhere"] = r.two_nongap_somewhere;
    e["distinctness"] = r.distinctness;
    e["collides_with"] = r.collides_with;
    classes.push_back(std::move(e));
  }
  j["classes"] = std::move(classes);
  return j;
}

Classification classification_from_json(const Json& j) {
  Classification c;
  c.m = j.at("m").get<std::int64_t>();
  if (j.contains("q")) c.q = j.at("q").get<std::int64_t>();
  c.phi2 = j.at("phi2").get<std::int64_t>();
  c.class_count = j.at("class_count").get<std::int64_t>();
  const auto& f = j.at("field");
  c.palpha_field = {f.at("p").get<std::int64_t>(), f.at("h").get<int>(),
                    f.at("irreducible").get<std::vector<std::int64_t>>()};
  c.palpha_field_auxiliary = f.at("auxiliary").get<bool>();
  for (const auto& e : j.at("classes")) {
    ClassReport r;
    r.canonical = e.at("canonical").get<std::int64_t>();
    r.label = e.at("label").get<std::int64_t>();
    r.members = e.at("members").get<std::vector<std::int64_t>>();
    const auto& g = e.at("gaps");
    r.gaps = {g.at("p0").get<std::vector<std::int64_t>>(), g.at("pinf").get<std::vector<std::int64_t>>(),
              g.at("palpha").get<std::vector<std::int64_t>>()};
    if (e.contains("aut")) r.aut = aut_from_json(e.at("aut"));
    if (e.contains("maximal")) r.maximal = e.at("maximal").get<bool>();
    if (e.contains("rational_places")) r.rational_places = e.at("rational_places").get<std::int64_t>();
    r.two_nongap_somewhere = e.at("two_nongap_somewhere").get<bool>();
    r.distinctness = e.at("distinctness").get<std::string>();
    r.collides_with = e.at("collides_with").get<std::vector<std::int64_t>>();
    c.classes.push_back(std::move(r));
  }
  return c;
}

std::string render_gap_blocks(const std::vector<std::pair<std::int64_t, Profile>>& cols, bool with_palpha,
                              std::size_t per_block) {
  std::ostringstream os;
  const std::vector<std::string> names = with_palpha
                                             ? std::vector<std::string>{"G(Pinf)", "G(P0)", "G(Palpha)"}
                                             : std::vector<std::string>{"G(Pinf)", "G(P0)"};
  for (std::size_t start = 0; start < cols.size(); start += per_block) {
    const std::size_t end = std::min(cols.size(), start + per_block);
    std::vector<std::vector<std::string>> grid(names.size() + 1);
    grid[0].push_back("");
    for (std::size_t r = 0; r < names.size(); ++r) grid[r + 1].push_back(names[r]);
    for (std::size_t k = start; k < end; ++k) {
      const auto& [label, prof] = cols[k];
      grid[0].push_back("i=" + std::to_string(label));
      grid[1].push_back(braces(prof.pinf));
      grid[2].push_back(braces(prof.p0));
      if (with_palpha) grid[3].push_back(braces(prof.palpha));
    }
    std::vector<std::size_t> width(grid[0].size(), 0);
    for (const auto& row : grid)
      for (std::size_t c = 0; c < row.size(); ++c) width[c] = std::max(width[c], row[c].size());
    std::string rule = "+";
    for (auto w : width) rule += std::string(w + 2, '-') + "+";
    os << rule << '\n';
    for (const auto& row : grid) {
      os << '|';
      for (std::size_t c = 0; c < row.size(); ++c) os << ' ' << pad(row[c], width[c]) << " |";
      os << '\n' << rule << '\n';
    }
    if (end < cols.size()) os << '\n';
  }
  return os.str();
}

std::string render_table(const Classification& c) {
  std::ostringstream os;
  os << "m = " << c.m;
  if (c.q) os << ", q = " << *c.q;
  os << ", genus " << c.m - 1 << '\n';
  os << "phi2(m) = " << c.phi2 << ", classes N(m) = " << c.class_count << '\n';
  os << "P(+-alpha) field: F_" << c.palpha_field.p << "^" << 2 * c.palpha_field.h << ", modulus ["
     << join_ints(c.palpha_field.irreducible, ",") << "]" << (c.palpha_field_auxiliary ? " (auxiliary)" : "")
     << "\n\n";

  const std::vector<std::string> head{"label", "members", "aut", "places", "verdict"};
  std::vector<std::vector<std::string>> rows{head};
  for (const auto& r : c.classes) {
    std::string places = "-";
    if (r.rational_places) places = std::to_string(*r.rational_places) + (*r.maximal ? " maximal" : " NOT maximal");
    std::string verdict = r.distinctness;
    if (!r.collides_with.empty()) verdict += " with " + join_ints(r.collides_with, ",");
    rows.push_back({std::to_string(r.label), braces(r.members), aut_cell(r.aut), places, verdict});
  }
  std::vector<std::size_t> width(head.size(), 0);
  for (const auto& row : rows)
    for (std::size_t k = 0; k < row.size(); ++k) width[k] = std::max(width[k], row[k].size());
  for (const auto& row : rows) {
    std::string line;
    for (std::size_t k = 0; k < row.size(); ++k) line += (k ? "  " : "") + pad(row[k], width[k]);
    while (!line.empty() && line.back() == ' ') line.pop_back();
    os << line << '\n';
  }
  os << '\n';

  std::vector<std::pair<std::int64_t, Profile>> cols;
  for (const auto& r : c.classes) cols.emplace_back(r.label, r.gaps);
  os << render_gap_blocks(cols, true);
  return os.str();
}

std::string render_csv(const Classification& c) {
  std::ostringstream os;
  os << "i,place,gaps\n";
  for (const auto& r : c.classes) {
    os << r.label << ",P0," << join_ints(r.gaps.p0) << '\n';
    os << r.label << ",Pinf," << join_ints(r.gaps.pinf) << '\n';
    os << r.label << ",Palpha," << join_ints(r.gaps.palpha) << '\n';
  }
  return os.str();
}

Json to_json(const VerificationReport& r) {
  Json checks = Json::array();
  for (const auto& c : r.order_checks) checks.push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
  return {{"map", r.map},
          {"points_checked", r.points_checked},
          {"points_skipped", r.points_skipped},
          {"failures", r.failures},
          {"order_checks", checks}};
}

}  // namespace maxff
