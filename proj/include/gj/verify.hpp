#ifndef GJ_VERIFY_HPP
#define GJ_VERIFY_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gj/build.hpp"
#include "gj/corpus.hpp"

namespace gj {

struct VerificationRow {
  std::string section;
  std::string label;
  std::string expr;
  std::string characteristic;
  std::string citation;
  std::size_t expected_order = 0;
  std::optional<std::size_t> expected_jordan;
  bool profile_expected = false;
  std::size_t order = 0;   // computed
  std::size_t index = 0;   // i(G)
  std::size_t jordan = 0;  // J(G)
  bool pass = false;
  std::string failure;  // empty when passing
  std::int64_t millis = 0;
};

struct SectionReport {
  std::string section;
  std::vector<VerificationRow> rows;
  std::vector<std::size_t> computed_set;  // distinct computed J, ascending
  std::vector<std::size_t> expected_set;
  // Rendered per-section aggregate checks, "description: pass|fail".
  std::vector<std::string> aggregate_checks;
  bool aggregates_pass = true;
  bool pass = false;
};

struct VerificationReport {
  std::vector<SectionReport> sections;
  bool pass = false;
};

// section: noniso | ordinary | supersingular | simple | all.  Rows verify
// independently (optionally in parallel) and report in corpus order; with
// timing off every milliseconds field is zero, making output
// run-independent.
VerificationReport run_verification(Builder& b, const std::vector<CorpusEntry>& corpus,
                                    const std::string& section, unsigned threads = 1,
                                    bool with_timing = true);

std::string to_markdown(const VerificationReport& r);
// Array of section objects: {section, rows:[{label, expr, order, i, J,
// expectedJ, pass, millis}], sets:{computed, expected}, status}.
std::string to_json(const VerificationReport& r);
std::string to_csv(const VerificationReport& r);

// Rebuilds the JSON-visible report model; emit(parse(emit(r))) == emit(r).
VerificationReport report_from_json(const std::string& text);

}  // namespace gj

#endif
