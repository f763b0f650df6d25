#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "gj/build.hpp"
#include "gj/corpus.hpp"
#include "gj/jordan.hpp"
#include "gj/table_io.hpp"
#include "gj/verify.hpp"

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw gj::CorpusError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string invariants_line(const std::vector<unsigned>& inv) {
  if (inv.empty()) return "1";
  std::string s;
  for (std::size_t i = 0; i < inv.size(); ++i) {
    if (i) s += " x ";
    s += "C(" + std::to_string(inv[i]) + ")";
  }
  return s;
}

int cmd_compute(const std::string& expr, int threads) {
  gj::Builder b;
  auto g = b.build(expr);
  gj::JordanReport r = gj::jordan_constant(*g, threads);
  std::printf("label:            %s\n", r.label.c_str());
  std::printf("order:            %zu\n", r.order);
  std::printf("subgroup classes: %zu\n", r.class_count);
  std::printf("i(G):             %zu\n", r.whole_group_index);
  std::printf("J(G):             %zu\n", r.jordan);
  std::printf("witness:          |H| = %zu, |A| = %zu\n", r.witness.subgroup.count(),
              r.witness.abelian.count());
  std::printf("millis:           %llu\n", static_cast<unsigned long long>(r.millis));
  for (const std::string& n : b.notes()) std::fprintf(stderr, "note: %s\n", n.c_str());
  return 0;
}

int cmd_profile(const std::string& expr) {
  gj::Builder b;
  auto g = b.build(expr);
  gj::NormalAbelianProfile p = gj::normal_abelian_profile(*g);
  std::printf("label: %s\n", g->label().c_str());
  std::printf("order: %zu\n", g->order());
  std::printf("normal abelian subgroups: %zu\n", p.entries.size());
  for (const gj::NormalAbelianEntry& e : p.entries)
    std::printf("  order %4zu  %s\n", e.sub.size, invariants_line(e.invariants).c_str());
  return 0;
}

int cmd_subgroups(const std::string& expr, bool classes, int threads) {
  gj::Builder b;
  auto g = b.build(expr);
  gj::SubgroupClassInventory inv = gj::subgroup_classes(*g, threads);
  std::printf("label: %s\n", g->label().c_str());
  std::printf("order: %zu\n", g->order());
  std::printf("subgroup classes: %zu\n", inv.classes.size());
  std::printf("subgroups total:  %zu\n", inv.total_subgroups);
  if (classes) {
    std::printf("%8s %10s %16s\n", "order", "class", "normalizer");
    for (const gj::SubgroupClass& c : inv.classes)
      std::printf("%8zu %10zu %16zu\n", c.order, c.class_size, c.normalizer_order);
  }
  return 0;
}

int cmd_verify(const std::string& section, const std::string& format,
               const std::string& corpus_path, int threads, bool no_timing) {
  std::string text =
      corpus_path.empty() ? std::string(gj::builtin_corpus_text()) : read_file(corpus_path);
  std::vector<gj::CorpusEntry> corpus = gj::parse_corpus(text);
  gj::Builder b;
  gj::VerificationReport rep =
      gj::run_verification(b, corpus, section, static_cast<unsigned>(threads), !no_timing);
  if (format == "md")
    std::fputs(gj::to_markdown(rep).c_str(), stdout);
  else if (format == "json")
    std::fputs(gj::to_json(rep).c_str(), stdout);
  else
    std::fputs(gj::to_csv(rep).c_str(), stdout);
  for (const std::string& n : b.notes()) std::fprintf(stderr, "note: %s\n", n.c_str());
  return rep.pass ? 0 : 1;
}

int cmd_export(const std::string& expr, const std::string& out) {
  gj::Builder b;
  auto g = b.build(expr);
  std::ofstream f(out, std::ios::binary);
  if (!f) throw gj::CorpusError("cannot write '" + out + "'");
  f << gj::table_to_json(*g);
  std::printf("wrote %s (order %zu)\n", out.c_str(), g->order());
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact Jordan constants of finite groups built from expressions"};
  app.require_subcommand(1);
  std::string expr, section = "all", format = "md", corpus_path, table_out;
  int threads = 1;
  bool classes = false, no_timing = false;

  CLI::App* compute = app.add_subcommand("compute", "Build a group; report i(G) and J(G)");
  compute->add_option("expr", expr, "group expression, e.g. \"Tstar x C(3)\"")->required();
  compute->add_option("--threads", threads, "worker threads");

  CLI::App* profile =
      app.add_subcommand("profile", "List all normal abelian subgroups with invariants");
  profile->add_option("expr", expr, "group expression")->required();

  CLI::App* subgroups =
      app.add_subcommand("subgroups", "Count subgroup conjugacy classes");
  subgroups->add_option("expr", expr, "group expression")->required();
  subgroups->add_flag("--classes", classes, "print one line per class");
  subgroups->add_option("--threads", threads, "worker threads");

  CLI::App* verify = app.add_subcommand(
      "verify-paper", "Run the bundled corpus and check every expected value");
  verify->add_option("--section", section,
                     "noniso | ordinary | supersingular | simple | all");
  verify->add_option("--format", format, "md | json | csv")
      ->check(CLI::IsMember({"md", "json", "csv"}));
  verify->add_option("--corpus", corpus_path, "corpus file (defaults to built-in)");
  verify->add_option("--threads", threads, "worker threads");
  verify->add_flag("--no-timing", no_timing, "zero the millis column (stable output)");

  CLI::App* exportc = app.add_subcommand("export", "Write a multiplication table as JSON");
  exportc->add_option("expr", expr, "group expression")->required();
  exportc->add_option("--table", table_out, "output path")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (compute->parsed()) return cmd_compute(expr, threads);
    if (profile->parsed()) return cmd_profile(expr);
    if (subgroups->parsed()) return cmd_subgroups(expr, classes, threads);
    if (verify->parsed())
      return cmd_verify(section, format, corpus_path, threads, no_timing);
    if (exportc->parsed()) return cmd_export(expr, table_out);
  } catch (const gj::Error& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  }
  return 2;
}
