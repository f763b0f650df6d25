#include "gj/corpus.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "gj/expr.hpp"

namespace gj {
namespace {

const char* kBuiltinCorpus = R"CORPUS(# Verification corpus: one row per target group.
# label | expression | order | J or - | profile or - | characteristic | citation
# profile entries are ';'-separated invariant-factor lists, ',' within one
# subgroup, "1" for the trivial subgroup.

[noniso]
Thm2.6(1)  | C(2) x C(2)           |   4 |   1 | - | generic | Thm2.6(1); Lem2.2
Thm2.6(2)  | C(2) x C(4)           |   8 |   1 | - | generic | Thm2.6(2); Lem2.2
Thm2.6(3)  | C(2) x C(6)           |  12 |   1 | - | generic | Thm2.6(3); Lem2.2
Thm2.6(4)  | C(2) x Dic(12)        |  24 |   2 | - | 3       | Thm2.6(4); Lem2.2; Lem3.3
Thm2.6(5)  | C(2) x Tstar          |  48 |  12 | - | 2       | Thm2.6(5); Lem2.2; Lem3.4
Thm2.6(6)  | C(4) x C(4)           |  16 |   1 | - | generic | Thm2.6(6); Lem2.2
Thm2.6(7)  | C(4) x C(6)           |  24 |   1 | - | generic | Thm2.6(7); Lem2.2
Thm2.6(8)  | C(4) x Dic(12)        |  48 |   2 | - | 3       | Thm2.6(8); Lem2.2; Lem3.3
Thm2.6(9)  | C(4) x Tstar          |  96 |  12 | - | 2       | Thm2.6(9); Lem2.2; Lem3.4
Thm2.6(10) | C(6) x C(6)           |  36 |   1 | - | generic | Thm2.6(10); Lem2.2
Thm2.6(11) | C(6) x Dic(12)        |  72 |   2 | - | 3       | Thm2.6(11); Lem2.2; Lem3.3
Thm2.6(12) | C(6) x Tstar          | 144 |  12 | - | 2       | Thm2.6(12); Lem2.2; Lem3.4
Thm2.6(13) | Dic(12) x Dic(12)     | 144 |   4 | - | 3       | Thm2.6(13); Lem3.3; Thm3.5
Thm2.6(14) | Tstar x Tstar         | 576 | 144 | - | 2       | Thm2.6(14); Lem3.4; Thm3.5

[ordinary]
Thm2.7(1)  | D(4)                        |  8 |  2 | -     | n/a | Thm2.7(1); Lem3.7
Thm2.7(2)  | D(6)                        | 12 |  2 | -     | n/a | Thm2.7(2); Lem3.7
Thm2.7(3)  | Dic(12)                     | 12 |  2 | -     | n/a | Thm2.7(3); Lem3.3
Thm2.7(4)  | SL(2,3)                     | 24 | 12 | -     | n/a | Thm2.7(4); Lem3.4
Thm2.7(5)  | semi(C(12), C(2), outer2)   | 24 |  2 | -     | n/a | Thm2.7(5); Lem2.5
Thm2.7(6)  | GL(2,3)                     | 48 | 24 | 1;2   | n/a | Thm2.7(6); Lem3.8(i)
Thm2.7(7)  | semi(C(6) x C(6), C(2), swap) | 72 | 2 | -   | n/a | Thm2.7(7); Lem2.5
Thm2.7(8)  | Tstar x C(3)                | 72 | 12 | -     | n/a | Thm2.7(8); Lem3.8(ii)
Thm2.7(9)  | semi(Tstar, C(4), outer2)   | 96 | 24 | 1;2;4 | n/a | Thm2.7(9); Lem3.8(iii)

[supersingular]
Thm2.8(1)  | ES1920                      | 1920 | 960 | 1;2 | 2       | Thm2.8(1); Lem3.11
Thm2.8(2)  | SL(2,3) x S(3)              |  144 |  24 | -   | 2       | Thm2.8(2); Lem3.12(i)
Thm2.8(3)  | swap2(SL(2,3))              | 1152 | 288 | -   | 2       | Thm2.8(3); Lem3.12(ii)
Thm2.8(4)  | SL(2,9)                     |  720 | 360 | -   | 3       | Thm2.8(4); Lem3.13(i)
Thm2.8(5)  | semi(C(3), Ostar, invert)   |  144 |  24 | 1;2;3;6 | 3   | Thm2.8(5); Lem3.13(ii)
Thm2.8(6)  | swap2(Dic(12))              |  288 |   8 | 1;2;2,2;3,3;3,6;6,6 | 3 | Thm2.8(6); Lem3.13(iii)
Thm2.8(7)  | SL25dot2                    |  240 | 120 | 1;2 | 5       | Thm2.8(7); Lem3.14
Thm2.8(8)  | SL25colon2                  |  240 | 120 | 1;2 | 5       | Thm2.8(8); Lem3.14
Thm2.8(9)  | GL(2,3)                     |   48 |  24 | 1;2 | generic | Thm2.8(9); Lem3.8(i)
Thm2.8(10) | semi(C(12), C(2), outer2)   |   24 |   2 | -   | generic | Thm2.8(10); Lem2.5
Thm2.8(11) | semi(Tstar, C(4), outer2)   |   96 |  24 | 1;2;4 | generic | Thm2.8(11); Lem3.8(iii)
Thm2.8(12) | semi(C(6) x C(6), C(2), swap) | 72 |   2 | -   | generic | Thm2.8(12); Lem2.5
Thm2.8(13) | Tstar x C(3)                |   72 |  12 | -   | generic | Thm2.8(13); Lem3.8(ii)
Thm2.8(14) | D(4)                        |    8 |   2 | -   | generic | Thm2.8(14); Lem3.7
Thm2.8(15) | D(6)                        |   12 |   2 | -   | generic | Thm2.8(15); Lem3.7
Thm2.8(16) | Istar                       |  120 |  60 | -   | generic | Thm2.8(16); Thm3.1
Thm2.8(17) | Dic(24)                     |   24 |   2 | -   | generic | Thm2.8(17); Lem3.3
Thm2.8(18) | Ostar                       |   48 |  24 | -   | generic | Thm2.8(18); Thm3.1
Thm2.8(19) | Tstar                       |   24 |  12 | -   | generic | Thm2.8(19); Lem3.4
Thm2.8(20) | Dic(12)                     |   12 |   2 | -   | generic | Thm2.8(20); Lem3.3

[simple]
Sim(1) | C(6)    |   6 |  1 | - | n/a | Thm3.1
Sim(2) | Dic(12) |  12 |  2 | - | n/a | Thm3.1
Sim(3) | Tstar   |  24 | 12 | - | n/a | Thm3.1
Sim(4) | Ostar   |  48 | 24 | - | n/a | Thm3.1
Sim(5) | Istar   | 120 | 60 | - | n/a | Thm3.1
)CORPUS";

std::string strip(const std::string& s) {
  std::size_t a = s.find_first_not_of(" \t\r");
  if (a == std::string::npos) return "";
  std::size_t b = s.find_last_not_of(" \t\r");
  return s.substr(a, b - a + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

std::size_t parse_size(const std::string& tok, const std::string& ctx) {
  std::size_t pos = 0;
  unsigned long long v = 0;
  try {
    v = std::stoull(tok, &pos);
  } catch (const std::exception&) {
    throw CorpusError("bad number '" + tok + "' in " + ctx);
  }
  if (pos != tok.size() || v == 0)
    throw CorpusError("bad number '" + tok + "' in " + ctx);
  return static_cast<std::size_t>(v);
}

}  // namespace

std::vector<std::vector<unsigned>> parse_profile(const std::string& token) {
  std::vector<std::vector<unsigned>> out;
  for (const std::string& part : split(token, ';')) {
    std::string p = strip(part);
    if (p.empty()) throw CorpusError("empty profile entry in '" + token + "'");
    if (p == "1") {
      out.push_back({});
      continue;
    }
    std::vector<unsigned> invs;
    for (const std::string& fs : split(p, ',')) {
      std::size_t v = parse_size(strip(fs), "profile '" + token + "'");
      if (v < 2) throw CorpusError("invariant factor below 2 in '" + token + "'");
      invs.push_back(static_cast<unsigned>(v));
    }
    for (std::size_t i = 0; i + 1 < invs.size(); ++i)
      if (invs[i + 1] % invs[i] != 0)
        throw CorpusError("invariant factors must divide in turn: '" + token + "'");
    out.push_back(std::move(invs));
  }
  return out;
}

std::string render_profile(const std::vector<std::vector<unsigned>>& profile) {
  std::string s;
  for (std::size_t i = 0; i < profile.size(); ++i) {
    if (i) s += ";";
    if (profile[i].empty()) {
      s += "1";
      continue;
    }
    for (std::size_t j = 0; j < profile[i].size(); ++j) {
      if (j) s += ",";
      s += std::to_string(profile[i][j]);
    }
  }
  return s;
}

std::vector<CorpusEntry> parse_corpus(const std::string& text) {
  static const std::set<std::string> kSections{"noniso", "ordinary", "supersingular",
                                               "simple"};
  static const std::set<std::string> kTags{"2", "3", "5", "generic", "n/a"};
  std::vector<CorpusEntry> out;
  std::set<std::string> labels;
  std::string section;
  std::istringstream in(text);
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::string s = strip(line);
    if (s.empty() || s[0] == '#') continue;
    if (s.front() == '[' && s.back() == ']') {
      section = s.substr(1, s.size() - 2);
      if (!kSections.count(section))
        throw CorpusError("unknown section '" + section + "' at line " +
                          std::to_string(lineno));
      continue;
    }
    if (section.empty())
      throw CorpusError("row before any section marker at line " + std::to_string(lineno));
    std::vector<std::string> cols = split(s, '|');
    if (cols.size() != 7)
      throw CorpusError("expected 7 columns at line " + std::to_string(lineno));
    for (std::string& c : cols) c = strip(c);
    CorpusEntry e;
    e.section = section;
    e.label = cols[0];
    e.expr = cols[1];
    e.order = parse_size(cols[2], "row " + e.label);
    if (cols[3] != "-") e.jordan = parse_size(cols[3], "row " + e.label);
    if (cols[4] != "-") e.profile = parse_profile(cols[4]);
    e.characteristic = cols[5];
    e.citation = cols[6];
    if (e.label.empty() || !labels.insert(e.label).second)
      throw CorpusError("missing or duplicate label at line " + std::to_string(lineno));
    if (!kTags.count(e.characteristic))
      throw CorpusError("unknown characteristic tag '" + e.characteristic + "' in row " +
                        e.label);
    if (e.jordan && e.order % *e.jordan != 0)
      throw CorpusError("expected J does not divide the order in row " + e.label);
    try {
      parse_expr(e.expr);
    } catch (const ParseError& pe) {
      throw CorpusError("row " + e.label + ": " + pe.what());
    }
    out.push_back(std::move(e));
  }
  if (out.empty()) throw CorpusError("corpus has no rows");
  return out;
}

const std::string& builtin_corpus_text() {
  static const std::string text = kBuiltinCorpus;
  return text;
}

}  // namespace gj
