#pragma once

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <map>
#include <optional>
#include <ostream>
#include <set>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "rwg/rwg.hpp"

#ifndef RWG_GOLDEN_DIR
#define RWG_GOLDEN_DIR "data/golden"
#endif

namespace rwg::cli {

enum ExitCode : int { kOk = 0, kUsage = 1, kTooLarge = 2, kPrecondition = 3, kDiff = 4 };

inline int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::Parse:
    case ErrorCode::DuplicateEntry:
    case ErrorCode::EntryOutOfRange:
    case ErrorCode::LetterOutOfRange:
      return kUsage;
    case ErrorCode::TooLarge:
      return kTooLarge;
    default:
      return kPrecondition;
  }
}

inline nlohmann::ordered_json report_json(const ConjectureReport& r) {
  nlohmann::ordered_json j;
  j["perm"] = r.pi.to_string();
  j["diam_g"] = r.diam_g ? nlohmann::ordered_json(*r.diam_g) : nlohmann::ordered_json(nullptr);
  j["i2"] = r.l2.i2;
  j["i3"] = r.l2.i3;
  j["class"] = std::string(to_string(r.bound_class));
  if (r.bound_class == BoundClass::Skipped) j["reason"] = r.skip_reason;
  return j;
}

// ---------------------------------------------------------------- sectioned text

/// Named sections of "vertex ..." / "edge x|y K" / "diameter k" lines; the
/// format of the golden files and of `graph` text output.
using Sections = std::map<std::string, std::vector<std::string>>;

inline std::string edge_line(std::string x, std::string y, EdgeKind kind) {
  if (y < x) std::swap(x, y);
  return "edge " + x + "|" + y + " " + kind_letter(kind);
}

template <typename Payload, typename Label>
std::vector<std::string> graph_lines(const LabeledGraph<Payload>& g, Label lab) {
  std::vector<std::string> lines;
  for (const auto& v : g.vertices()) lines.push_back("vertex " + lab(v));
  for (const auto& e : g.edges()) lines.push_back(edge_line(lab(g.vertex(e.u)), lab(g.vertex(e.v)), e.kind));
  return lines;
}

inline std::string normalize_line(const std::string& line) {
  if (line.rfind("edge ", 0) != 0) return line;
  const auto bar = line.find('|');
  const auto space = line.rfind(' ');
  if (bar == std::string::npos || space == std::string::npos || space < bar)
    throw Error(ErrorCode::Parse, "malformed edge line: " + line);
  const char kind = line.back();
  return edge_line(line.substr(5, bar - 5), line.substr(bar + 1, space - bar - 1),
                   kind == 'B' ? EdgeKind::LongBraid : EdgeKind::Commutation);
}

inline Sections read_sections(std::istream& in) {
  Sections s;
  std::string current;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    if (line.front() == '[' && line.back() == ']') {
      current = line.substr(1, line.size() - 2);
      s[current];
      continue;
    }
    s[current].push_back(normalize_line(line));
  }
  return s;
}

inline void write_sections(std::ostream& out, const Sections& s) {
  for (const auto& [name, lines] : s) {
    if (!name.empty()) out << '[' << name << "]\n";
    for (const auto& l : lines) out << l << '\n';
  }
}

/// Lines present on one side only, as "- golden" / "+ generated".
inline std::vector<std::string> diff_sections(const Sections& golden, const Sections& generated) {
  std::vector<std::string> out;
  std::set<std::string> names;
  for (const auto& [n, _] : golden) names.insert(n);
  for (const auto& [n, _] : generated) names.insert(n);
  for (const auto& name : names) {
    auto sorted = [&](const Sections& s) {
      std::vector<std::string> v;
      if (auto it = s.find(name); it != s.end()) {
        v = it->second;
        for (auto& l : v) l = normalize_line(l);
      }
      std::sort(v.begin(), v.end());
      return v;
    };
    const auto a = sorted(golden);
    const auto b = sorted(generated);
    std::vector<std::string> only_a;
    std::vector<std::string> only_b;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(only_a));
    std::set_difference(b.begin(), b.end(), a.begin(), a.end(), std::back_inserter(only_b));
    for (const auto& l : only_a) out.push_back("[" + name + "] - " + l);
    for (const auto& l : only_b) out.push_back("[" + name + "] + " + l);
  }
  return out;
}

// ---------------------------------------------------------------- reproduce

inline Sections reproduce_fig2(const DiameterOptions& options) {
  const auto g = build_word_graph(Permutation::parse("4231"));
  Sections s;
  s["G"] = graph_lines(g, [](const Word& w) { return label(w); });
  s["G"].push_back("diameter " + std::to_string(diameter(g, options)));
  for (auto [name, kind] : {std::pair{"C", EdgeKind::Commutation}, std::pair{"B", EdgeKind::LongBraid}}) {
    const auto q = contract(g, kind);
    s[name] = graph_lines(q, [](const std::vector<Word>& m) { return label(m); });
    s[name].push_back("diameter " + std::to_string(diameter(q, options)));
  }
  return s;
}

/// G_pi for an inflation, labelled "encoding = word" through the encoding's
/// bijection. Words without a preimage and encoding moves missing from G_pi
/// show up as extra lines so that they register as a diff.
template <typename Image>
std::vector<std::string> encoded_word_graph(Form form, const Permutation& alpha, const Permutation& beta,
                                            Image image, const DiameterOptions& options) {
  const auto pi = form == Form::Twelve ? inflate_12(alpha, beta) : inflate_21(alpha, beta);
  const auto g = build_word_graph(pi);
  const auto h = build_encoding_graph(form, alpha, beta);
  std::map<Word, EncodedWord> preimage;
  for (const auto& w : h.vertices()) preimage.emplace(image(w), w);
  auto lab = [&](const Word& w) {
    auto it = preimage.find(w);
    return (it == preimage.end() ? std::string("?") : format_encoded(it->second)) + " = " + format_word(w);
  };
  auto lines = graph_lines(g, lab);
  for (const auto& e : h.edges()) {
    const auto x = image(h.vertex(e.u));
    const auto y = image(h.vertex(e.v));
    const auto gx = g.find(x);
    const auto gy = g.find(y);
    if (!gx || !gy || g.edge_between(*gx, *gy) != e.kind)
      lines.push_back("unmatched encoding move " + edge_line(format_encoded(h.vertex(e.u)),
                                                             format_encoded(h.vertex(e.v)), e.kind));
  }
  if (h.vertex_count() != g.vertex_count()) lines.push_back("encoding set size " + std::to_string(h.vertex_count()));
  if (h.edge_count() != g.edge_count()) lines.push_back("encoding move count " + std::to_string(h.edge_count()));
  lines.push_back("diameter " + std::to_string(diameter(g, options, word_automorphisms(pi, g))));
  return lines;
}

inline Sections reproduce_fig3(const DiameterOptions& options) {
  return {{"U", encoded_word_graph(Form::Twelve, Permutation::parse("2143"), Permutation::parse("312"),
                                   [](const EncodedWord& w) { return eta(w); }, options)}};
}

inline Sections reproduce_fig4(const DiameterOptions& options) {
  return {{"V", encoded_word_graph(Form::TwentyOne, Permutation::parse("21"), Permutation::parse("123"),
                                   [](const EncodedWord& w) { return psi(w); }, options)}};
}

struct Table2Result {
  Sections rows;
  std::vector<std::string> notes;  // coverage of each sweep
};

inline Table2Result reproduce_table2(const DiameterOptions& options) {
  Table2Result r;
  auto& rows = r.rows[""];
  for (int n = 4; n <= 6; ++n) {
    const auto summary = summarize(sweep(n, options));
    std::string note = "S" + std::to_string(n) + ": covered " + std::to_string(summary.covered) + ", skipped " +
                       std::to_string(summary.skipped.size());
    for (const auto& p : summary.skipped) note += " " + p.to_string();
    r.notes.push_back(note);
    for (const auto& p : summary.at_lower) {
      std::string expr = "?";
      if (const auto f = match_low_family(p)) {
        expr = to_expression(*f);
        if (parse_inflation(expr) != p) expr += " (round trip failed)";
      }
      rows.push_back("row " + p.to_string() + " " + expr);
    }
  }
  return r;
}

// ---------------------------------------------------------------- formulas

class FormulaReport {
 public:
  FormulaReport(std::ostream& out, DiameterOptions options) : out_(out), options_(options) {}

  void run(const Permutation& pi) {
    const auto breakdown = l2(pi);
    out_ << "perm " << display(pi) << "\n";
    out_ << "length " << pi.length() << "\n";
    out_ << "l2 " << breakdown.l2 << " (i2=" << breakdown.i2 << " i3=" << breakdown.i3 << ")\n";
    if (const auto d = brute(pi))
      out_ << "brute " << to_string(*d) << "\n";
    else
      out_ << "brute skipped: " << failures_[pi] << "\n";

    for (const auto& [alpha, beta] : splits_12(pi)) {
      const auto name = "12[" + display(alpha) + "," + display(beta) + "]";
      const auto da = brute(alpha);
      const auto db = brute(beta);
      if (!da || !db) {
        out_ << name << " skipped: " << failures_[da ? beta : alpha] << "\n";
        continue;
      }
      out_ << name << " " << to_string(diam_12(*da, *db, alpha.length(), beta.length())) << "\n";
    }

    for (const auto& [alpha, beta] : splits_21(pi)) {
      if (beta != Permutation::identity(beta.size())) continue;
      const auto da = brute(alpha);
      const auto name = "21[" + display(alpha) + ",i" + std::to_string(beta.size()) + "]";
      if (!da) {
        out_ << name << " skipped: " << failures_[alpha] << "\n";
        continue;
      }
      if (beta.size() == 1)
        out_ << "21[" << display(alpha) << ",1] "
             << to_string(diam_21_single(*da, alpha.length(), alpha.size())) << "\n";
      const auto b = bounds_21_iota(*da, alpha.length(), alpha.size(), beta.size());
      out_ << name << " bounds g in [" << b.g_lower << "," << b.g_upper << "] c=" << b.c << " b in [" << b.b_lower
           << "," << b.b_upper << "]\n";
    }

    if (avoids(pi, Permutation::parse("312"))) out_ << "312-avoiding " << to_string(diam_312_avoiding(pi)) << "\n";
    if (avoids(pi, Permutation::parse("231"))) out_ << "231-avoiding " << to_string(diam_231_avoiding(pi)) << "\n";
    if (pi.size() >= 1 && pi == Permutation::decreasing(pi.size()))
      out_ << "delta_" << pi.size() << " " << to_string(delta_recursion(pi.size())) << "\n";
    if (const auto f = match_low_family(pi))
      out_ << to_expression(*f) << " g=" << diam_low_family(f->a, f->b, f->c, f->d) << "\n";
  }

 private:
  static std::string display(const Permutation& p) { return p.empty() ? "e" : p.to_string(); }

  std::optional<DiameterTriple> brute(const Permutation& p) {
    if (auto it = cache_.find(p); it != cache_.end()) return it->second;
    std::optional<DiameterTriple> value;
    try {
      value = diameter_triple(p, options_);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::TooLarge) throw;
      failures_[p] = e.what();
    }
    cache_.emplace(p, value);
    return value;
  }

  std::ostream& out_;
  DiameterOptions options_;
  std::map<Permutation, std::optional<DiameterTriple>> cache_;
  std::map<Permutation, std::string> failures_;
};

// ---------------------------------------------------------------- entry point

/// Runs one command. `args` excludes the program name.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Reduced word graphs of permutations", "rwg"};
  app.require_subcommand(1);
  app.fallthrough();
  unsigned threads = std::max(1u, std::thread::hardware_concurrency());
  app.add_option("--threads", threads, "worker threads for sweeps and diameters")->check(CLI::PositiveNumber);

  std::string perm_text;
  std::size_t cap = kDefaultVertexCap;

  auto* enumerate_cmd = app.add_subcommand("enumerate", "print R(pi), one word per line");
  enumerate_cmd->add_option("perm", perm_text)->required();
  std::size_t word_cap = kDefaultWordCap;
  enumerate_cmd->add_option("--cap", word_cap, "largest |R(pi)| to enumerate");

  auto* graph_cmd = app.add_subcommand("graph", "print G_pi, C_pi or B_pi");
  graph_cmd->add_option("perm", perm_text)->required();
  std::string contract_kind;
  graph_cmd->add_option("--contract", contract_kind, "C or B")->check(CLI::IsMember({"C", "B"}));
  bool dot = false;
  bool json = false;
  auto* dot_flag = graph_cmd->add_flag("--dot", dot, "DOT output");
  graph_cmd->add_flag("--json", json, "JSON output")->excludes(dot_flag);
  graph_cmd->add_option("--cap", word_cap, "largest |R(pi)| to build");

  auto* diameter_cmd = app.add_subcommand("diameter", "brute-force diameters");
  diameter_cmd->add_option("perm", perm_text)->required();
  std::string which = "all";
  diameter_cmd->add_option("--which", which)->check(CLI::IsMember({"g", "c", "b", "all"}));
  diameter_cmd->add_option("--cap", cap, "vertex cap");

  auto* encode_cmd = app.add_subcommand("encode", "encoding set and its images");
  std::string form_text;
  std::string alpha_text;
  std::string beta_text;
  encode_cmd->add_option("form", form_text)->required()->check(CLI::IsMember({"12", "21"}));
  encode_cmd->add_option("alpha", alpha_text)->required();
  encode_cmd->add_option("beta", beta_text)->required();
  encode_cmd->add_option("--cap", word_cap, "largest encoding set");

  auto* formulas_cmd = app.add_subcommand("formulas", "every applicable formula next to brute force");
  formulas_cmd->add_option("perm", perm_text)->required();
  formulas_cmd->add_option("--cap", cap, "vertex cap for brute force");

  auto* sweep_cmd = app.add_subcommand("sweep", "classify all of S_n as JSON lines");
  int n = 0;
  sweep_cmd->add_option("n", n)->required()->check(CLI::Range(1, 9));
  sweep_cmd->add_option("--cap", cap, "vertex cap; larger graphs are skipped");
  std::string out_path;
  sweep_cmd->add_option("--out", out_path, "write JSON lines here instead of stdout");
  std::string csv_path;
  sweep_cmd->add_option("--csv", csv_path, "write the AtLower rows as CSV");

  auto* classify_cmd = app.add_subcommand("classify", "one conjecture report");
  classify_cmd->add_option("perm", perm_text)->required();
  classify_cmd->add_option("--cap", cap, "vertex cap");

  auto* reproduce_cmd = app.add_subcommand("reproduce", "rebuild a figure or table and diff it against golden data");
  std::string target;
  reproduce_cmd->add_option("target", target)->required()->check(CLI::IsMember({"fig2", "fig3", "fig4", "table2"}));
  std::string golden_dir = RWG_GOLDEN_DIR;
  reproduce_cmd->add_option("--golden-dir", golden_dir, "directory holding the golden files");
  bool print = false;
  reproduce_cmd->add_flag("--print", print, "print the regenerated data");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }

  DiameterOptions options;
  options.vertex_cap = cap;
  options.threads = threads;

  try {
    if (*enumerate_cmd) {
      for (const auto& w : enumerate(Permutation::parse(perm_text), word_cap)) out << format_word(w) << "\n";
    } else if (*graph_cmd) {
      const auto g = build_word_graph(Permutation::parse(perm_text), word_cap);
      auto emit = [&](const auto& graph, const std::string& name) {
        if (dot)
          out << export_dot(graph, name);
        else if (json)
          out << export_json(graph).dump() << "\n";
        else
          write_sections(out, {{name, graph_lines(graph, [](const auto& v) { return label(v); })}});
      };
      if (contract_kind.empty())
        emit(g, "G");
      else
        emit(contract(g, contract_kind == "C" ? EdgeKind::Commutation : EdgeKind::LongBraid), contract_kind);
    } else if (*diameter_cmd) {
      const auto pi = Permutation::parse(perm_text);
      if (which == "all") {
        out << to_string(diameter_triple(pi, options)) << "\n";
      } else if (which == "g") {
        out << "g=" << word_graph_diameter(pi, options) << "\n";
      } else {
        const auto d = diameter_triple(pi, options);
        out << which << "=" << (which == "c" ? d.c : d.b) << "\n";
      }
    } else if (*encode_cmd) {
      const auto alpha = Permutation::parse(alpha_text);
      const auto beta = Permutation::parse(beta_text);
      if (form_text == "12") {
        const auto u = build_U(alpha, beta, word_cap);
        out << "U " << inflate_12(alpha, beta).to_string() << " " << u.size() << "\n";
        for (const auto& w : u) out << format_encoded(w) << "\t" << format_word(eta(w)) << "\n";
      } else {
        const auto v = build_V(alpha, beta, word_cap);
        out << "V " << inflate_21(alpha, beta).to_string() << " " << v.size() << "\n";
        for (const auto& w : v) out << format_encoded(w) << "\t" << format_word(psi(w)) << "\n";
      }
    } else if (*formulas_cmd) {
      FormulaReport(out, options).run(Permutation::parse(perm_text));
    } else if (*sweep_cmd) {
      std::ofstream file;
      if (!out_path.empty()) {
        file.open(out_path);
        if (!file) throw Error(ErrorCode::Precondition, "cannot write " + out_path);
      }
      std::ostream& sink = out_path.empty() ? out : file;
      const auto reports = sweep(n, options);
      for (const auto& r : reports) sink << report_json(r).dump() << "\n";
      const auto summary = summarize(reports);
      if (!csv_path.empty()) {
        std::ofstream csv(csv_path);
        if (!csv) throw Error(ErrorCode::Precondition, "cannot write " + csv_path);
        csv << "n,perm,diam_g,l2,expression\n";
        for (const auto& r : reports) {
          if (r.bound_class != BoundClass::AtLower) continue;
          const auto f = match_low_family(r.pi);
          csv << n << "," << r.pi.to_string() << "," << *r.diam_g << "," << r.l2.l2 << ","
              << (f ? to_expression(*f) : "") << "\n";
        }
      }
      err << "S" << n << ": covered " << summary.covered << ", skipped " << summary.skipped.size() << ", AtLower "
          << summary.at_lower.size() << ", AtUpper " << summary.at_upper.size() << ", bound violations "
          << summary.bound_violations.size() << ", 3412 violations " << summary.containment_violations.size()
          << "\n";
    } else if (*classify_cmd) {
      out << report_json(report_for(Permutation::parse(perm_text), options)).dump() << "\n";
    } else if (*reproduce_cmd) {
      const auto path = std::filesystem::path(golden_dir) / (target + ".txt");
      std::ifstream in(path);
      if (!in) throw Error(ErrorCode::Precondition, "cannot read golden file " + path.string());
      const auto golden = read_sections(in);
      options.vertex_cap = kDefaultVertexCap;
      Sections generated;
      if (target == "fig2") {
        generated = reproduce_fig2(options);
      } else if (target == "fig3") {
        generated = reproduce_fig3(options);
      } else if (target == "fig4") {
        generated = reproduce_fig4(options);
      } else {
        auto t = reproduce_table2(options);
        for (const auto& note : t.notes) err << note << "\n";
        generated = std::move(t.rows);
      }
      if (print) write_sections(out, generated);
      const auto diff = diff_sections(golden, generated);
      for (const auto& line : diff) out << line << "\n";
      out << "reproduce " << target << ": " << (diff.empty() ? "OK" : std::to_string(diff.size()) + " differences")
          << "\n";
      return diff.empty() ? kOk : kDiff;
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return exit_code_for(e.code());
  }
  return kOk;
}

}  // namespace rwg::cli
