#include "gj/verify.hpp"

#include <algorithm>
#include <chrono>
#include <set>

#include <json.hpp>

#include "gj/jordan.hpp"

namespace gj {
namespace {

using Json = nlohmann::ordered_json;

std::vector<std::size_t> distinct_sorted(std::vector<std::size_t> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

std::string set_str(const std::vector<std::size_t>& v) {
  std::string s = "{";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(v[i]);
  }
  return s + "}";
}

VerificationRow verify_entry(Builder& b, const CorpusEntry& e, bool with_timing) {
  VerificationRow r;
  r.section = e.section;
  r.label = e.label;
  r.expr = e.expr;
  r.characteristic = e.characteristic;
  r.citation = e.citation;
  r.expected_order = e.order;
  r.expected_jordan = e.jordan;
  r.profile_expected = e.profile.has_value();
  auto t0 = std::chrono::steady_clock::now();
  try {
    std::shared_ptr<const GroupTable> g = b.build(e.expr);
    r.order = g->order();
    JordanReport jr = jordan_constant(*g);
    r.jordan = jr.jordan;
    r.index = jr.whole_group_index;
    if (r.order != e.order) {
      r.failure = "order " + std::to_string(r.order) + " != " + std::to_string(e.order);
    } else if (e.jordan && r.jordan != *e.jordan) {
      r.failure = "J " + std::to_string(r.jordan) + " != " + std::to_string(*e.jordan);
    } else if (e.profile) {
      NormalAbelianProfile p = normal_abelian_profile(*g);
      std::vector<std::vector<unsigned>> got;
      got.reserve(p.entries.size());
      for (const NormalAbelianEntry& en : p.entries) got.push_back(en.invariants);
      if (got != *e.profile)
        r.failure = "profile " + render_profile(got) + " != " + render_profile(*e.profile);
    }
    r.pass = r.failure.empty();
  } catch (const Error& err) {
    r.pass = false;
    r.failure = err.what();
  }
  if (with_timing)
    r.millis = std::chrono::duration_cast<std::chrono::milliseconds>(
                   std::chrono::steady_clock::now() - t0)
                   .count();
  return r;
}

// Distinct computed J over rows whose characteristic tag lies in the set.
std::vector<std::size_t> tag_set(const std::vector<VerificationRow>& rows,
                                 const std::set<std::string>& tags) {
  std::vector<std::size_t> v;
  for (const VerificationRow& r : rows)
    if (tags.count(r.characteristic)) v.push_back(r.jordan);
  return distinct_sorted(v);
}

void add_check(SectionReport& s, const std::string& what, bool ok) {
  s.aggregate_checks.push_back(what + ": " + (ok ? "pass" : "fail"));
  s.aggregates_pass = s.aggregates_pass && ok;
}

void section_aggregates(SectionReport& s) {
  const std::vector<VerificationRow>& rows = s.rows;
  std::vector<std::size_t> all;
  for (const VerificationRow& r : rows) all.push_back(r.jordan);
  s.computed_set = distinct_sorted(all);

  if (s.section == "noniso") {
    s.expected_set = {1, 2, 4, 12, 144};
    add_check(s, "characteristic 2 assembly {1,12,144}",
              tag_set(rows, {"2", "generic"}) == std::vector<std::size_t>{1, 12, 144});
    add_check(s, "characteristic 3 assembly {1,2,4}",
              tag_set(rows, {"3", "generic"}) == std::vector<std::size_t>{1, 2, 4});
    add_check(s, "characteristic >=5 assembly {1}",
              tag_set(rows, {"generic"}) == std::vector<std::size_t>{1});
  } else if (s.section == "ordinary") {
    s.expected_set = {2, 12, 24};
  } else if (s.section == "supersingular") {
    s.expected_set = {2, 8, 12, 24, 60, 120, 288, 360, 960};
    add_check(s, "generic rows realize {2,12,24,60}",
              tag_set(rows, {"generic"}) == std::vector<std::size_t>{2, 12, 24, 60});
    auto maxof = [&](const std::set<std::string>& tags) {
      std::size_t m = 0;
      for (const VerificationRow& r : rows)
        if (tags.count(r.characteristic)) m = std::max(m, r.jordan);
      return m;
    };
    std::size_t m2 = maxof({"2", "generic"});
    std::size_t m3 = maxof({"3", "generic"});
    std::size_t m5 = maxof({"5", "generic"});
    std::size_t mg = maxof({"generic"});
    add_check(s, "characteristic 2 maximum 960", m2 == 960);
    add_check(s, "characteristic 3 maximum 360", m3 == 360);
    add_check(s, "characteristic 5 maximum 120", m5 == 120);
    add_check(s, "characteristic >=7 maximum 60", mg == 60);
    const std::set<std::size_t> allowed{12, 24, 60, 120, 360, 960};
    add_check(s, "maxima within {12,24,60,120,360,960}",
              allowed.count(m2) && allowed.count(m3) && allowed.count(m5) &&
                  allowed.count(mg));
  } else if (s.section == "simple") {
    s.expected_set = {1, 2, 12, 24, 60};
  }
  add_check(s, "distinct J values " + set_str(s.expected_set),
            s.computed_set == s.expected_set);
}

}  // namespace

VerificationReport run_verification(Builder& b, const std::vector<CorpusEntry>& corpus,
                                    const std::string& section, unsigned threads,
                                    bool with_timing) {
  static const std::vector<std::string> kOrder{"noniso", "ordinary", "supersingular",
                                               "simple"};
  std::vector<std::string> wanted;
  if (section == "all") {
    wanted = kOrder;
  } else if (std::find(kOrder.begin(), kOrder.end(), section) != kOrder.end()) {
    wanted = {section};
  } else {
    throw CorpusError("unknown section '" + section + "'");
  }

  VerificationReport rep;
  rep.pass = true;
  for (const std::string& name : wanted) {
    std::vector<const CorpusEntry*> entries;
    for (const CorpusEntry& e : corpus)
      if (e.section == name) entries.push_back(&e);
    if (entries.empty()) {
      if (section == "all") continue;
      throw CorpusError("section '" + name + "' has no rows");
    }
    SectionReport sec;
    sec.section = name;
    sec.rows.resize(entries.size());
    parallel_for(entries.size(), threads, [&](std::size_t i) {
      sec.rows[i] = verify_entry(b, *entries[i], with_timing);
    });
    section_aggregates(sec);
    sec.pass = sec.aggregates_pass;
    for (const VerificationRow& r : sec.rows) sec.pass = sec.pass && r.pass;
    rep.pass = rep.pass && sec.pass;
    rep.sections.push_back(std::move(sec));
  }
  return rep;
}

std::string to_markdown(const VerificationReport& r) {
  std::string out;
  for (const SectionReport& s : r.sections) {
    out += "## " + s.section + "\n\n";
    out += "| label | expression | order | i | J | expected J | profile | pass | ms |\n";
    out += "|---|---|---|---|---|---|---|---|---|\n";
    for (const VerificationRow& row : s.rows) {
      out += "| " + row.label + " | " + row.expr + " | " + std::to_string(row.order) +
             " | " + std::to_string(row.index) + " | " + std::to_string(row.jordan) +
             " | " +
             (row.expected_jordan ? std::to_string(*row.expected_jordan)
                                  : std::string("-")) +
             " | " + (row.profile_expected ? (row.pass ? "ok" : "checked") : "-") + " | " +
             (row.pass ? "pass" : "FAIL") + " | " + std::to_string(row.millis) + " |\n";
    }
    out += "\n";
    for (const std::string& c : s.aggregate_checks) out += "- " + c + "\n";
    out += "- computed J set " + set_str(s.computed_set) + "\n";
    for (const VerificationRow& row : s.rows)
      if (!row.pass) out += "- " + row.label + " failed: " + row.failure + "\n";
    out += "\nSection status: " + std::string(s.pass ? "pass" : "fail") + "\n\n";
  }
  out += "Overall: " + std::string(r.pass ? "pass" : "fail") + "\n";
  return out;
}

std::string to_json(const VerificationReport& r) {
  Json arr = Json::array();
  for (const SectionReport& s : r.sections) {
    Json js;
    js["section"] = s.section;
    Json rows = Json::array();
    for (const VerificationRow& row : s.rows) {
      Json jr;
      jr["label"] = row.label;
      jr["expr"] = row.expr;
      jr["order"] = row.order;
      jr["i"] = row.index;
      jr["J"] = row.jordan;
      if (row.expected_jordan)
        jr["expectedJ"] = *row.expected_jordan;
      else
        jr["expectedJ"] = nullptr;
      jr["pass"] = row.pass;
      jr["millis"] = row.millis;
      rows.push_back(std::move(jr));
    }
    js["rows"] = std::move(rows);
    js["sets"] = Json{{"computed", s.computed_set}, {"expected", s.expected_set}};
    js["status"] = s.pass ? "pass" : "fail";
    arr.push_back(std::move(js));
  }
  return arr.dump(2) + "\n";
}

std::string to_csv(const VerificationReport& r) {
  std::string out = "section,label,expr,order,i,J,expectedJ,pass,millis\n";
  for (const SectionReport& s : r.sections)
    for (const VerificationRow& row : s.rows) {
      out += s.section + ",\"" + row.label + "\",\"" + row.expr + "\"," +
             std::to_string(row.order) + "," + std::to_string(row.index) + "," +
             std::to_string(row.jordan) + "," +
             (row.expected_jordan ? std::to_string(*row.expected_jordan)
                                  : std::string("")) +
             "," + (row.pass ? "pass" : "fail") + "," + std::to_string(row.millis) + "\n";
    }
  return out;
}

VerificationReport report_from_json(const std::string& text) {
  Json arr = Json::parse(text);
  if (!arr.is_array()) throw ParseError("report must be a JSON array", 0);
  VerificationReport rep;
  rep.pass = true;
  for (const Json& js : arr) {
    SectionReport s;
    s.section = js.at("section").get<std::string>();
    for (const Json& jr : js.at("rows")) {
      VerificationRow row;
      row.section = s.section;
      row.label = jr.at("label").get<std::string>();
      row.expr = jr.at("expr").get<std::string>();
      row.order = jr.at("order").get<std::size_t>();
      row.index = jr.at("i").get<std::size_t>();
      row.jordan = jr.at("J").get<std::size_t>();
      if (!jr.at("expectedJ").is_null())
        row.expected_jordan = jr.at("expectedJ").get<std::size_t>();
      row.pass = jr.at("pass").get<bool>();
      row.millis = jr.at("millis").get<std::int64_t>();
      s.rows.push_back(std::move(row));
    }
    s.computed_set = js.at("sets").at("computed").get<std::vector<std::size_t>>();
    s.expected_set = js.at("sets").at("expected").get<std::vector<std::size_t>>();
    s.pass = js.at("status").get<std::string>() == "pass";
    s.aggregates_pass = s.pass;
    rep.pass = rep.pass && s.pass;
    rep.sections.push_back(std::move(s));
  }
  return rep;
}

}  // namespace gj
