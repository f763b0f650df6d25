#ifndef GJ_CORPUS_HPP
#define GJ_CORPUS_HPP

#include <optional>
#include <string>
#include <vector>

#include "gj/error.hpp"

namespace gj {

// One verification target: an expression with its expected values and the
// source row it reproduces.  Labels and citations are opaque row
// identifiers carried through to reports.
struct CorpusEntry {
  std::string section;  // noniso | ordinary | supersingular | simple
  std::string label;
  std::string expr;
  std::size_t order = 0;
  std::optional<std::size_t> jordan;
  std::optional<std::vector<std::vector<unsigned>>> profile;
  std::string characteristic;  // 2 | 3 | 5 | generic | n/a
  std::string citation;
};

// Profile column syntax: entries joined by ';', each entry its invariant
// factors joined by ',' with "1" denoting the trivial subgroup.
std::vector<std::vector<unsigned>> parse_profile(const std::string& token);
std::string render_profile(const std::vector<std::vector<unsigned>>& profile);

// Parses the pipe-separated table (section markers "[name]", '#' comments);
// validates expressions, divisibility of expected J, tag and section names,
// and label uniqueness.  Throws CorpusError.
std::vector<CorpusEntry> parse_corpus(const std::string& text);

// The corpus shipped inside the library; identical to data/corpus.txt.
const std::string& builtin_corpus_text();

}  // namespace gj

#endif
