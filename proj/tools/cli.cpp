#include "cli.hpp"

#include <CLI11.hpp>
#include <cstdio>
#include <json.hpp>
#include <memory>
#include <optional>
#include <ostream>
#include <set>

#include "wicks/error.hpp"
#include "wicks/forms.hpp"
#include "wicks/matcher.hpp"
#include "wicks/normalizer.hpp"
#include "wicks/solver.hpp"
#include "wicks/verify.hpp"

namespace wicks::cli {

namespace {

using nlohmann::ordered_json;

std::string join(const std::vector<std::string>& tokens) {
  std::string out;
  for (const auto& t : tokens) {
    if (!out.empty()) out += ' ';
    out += t;
  }
  return out;
}

std::string hex_id(const std::string& text) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(content_hash(text)));
  return buf;
}

ordered_json genus_value(const std::optional<int>& g) { return g ? ordered_json(*g) : ordered_json(nullptr); }
std::string genus_text(const ordered_json& g) { return g.is_null() ? "inf" : std::to_string(g.get<int>()); }

ordered_json substitution_json(const Substitution& s, const std::vector<Symbol>& order) {
  ordered_json out = ordered_json::object();
  for (const auto& v : order) out[v.name()] = format_word(s.image(v));
  return out;
}

ordered_json substitution_json(const Substitution& s) {
  std::vector<Symbol> order;
  for (const auto& [v, img] : s.assignments()) order.push_back(v);
  return substitution_json(s, order);
}

std::string assignments_text(const ordered_json& a) {
  std::string out;
  for (const auto& [v, w] : a.items()) {
    if (!out.empty()) out += ", ";
    out += v + " -> " + w.get<std::string>();
  }
  return out;
}

ordered_json match_json(const Match& m) {
  const std::set<Symbol> vars = m.form.symbols();
  return {{"form", format_word(m.form)},
          {"rotation_offset", m.rotation_offset},
          {"assignment", substitution_json(m.assignment, std::vector<Symbol>(vars.begin(), vars.end()))}};
}

std::string match_text(const ordered_json& m) {
  return "form " + m["form"].get<std::string>() + " at offset " + std::to_string(m["rotation_offset"].get<std::size_t>()) +
         ": " + assignments_text(m["assignment"]);
}

ordered_json classes_json(const std::vector<SolutionClassRep>& reps) {
  ordered_json out = ordered_json::array();
  for (const auto& r : reps) {
    ordered_json lengths = ordered_json::object();
    for (const auto& v : r.variables()) lengths[v.name()] = r.rep.image(v).size();
    out.push_back({{"assignments", substitution_json(r.rep, r.variables())},
                   {"lengths", lengths},
                   {"fingerprint_id", hex_id(r.fingerprint.fingerprint())},
                   {"distinctness", to_string(r.distinctness)}});
  }
  return out;
}

ordered_json certificates_json(const std::vector<SolutionClassRep>& reps) {
  ordered_json out = ordered_json::array();
  for (const auto& r : reps) {
    if (r.match) {
      out.push_back(match_json(*r.match));
    } else {
      out.push_back({{"construction", "three-squares identity"}});
    }
  }
  return out;
}

// ---- text rendering, one line per JSON field ----

void render_solution(const ordered_json& j, std::ostream& out) {
  out << "equation: " << j["equation"].get<std::string>() << "\n";
  out << "genus: " << genus_text(j["genus"]) << "\n";
  if (j.contains("complete")) out << "complete: " << (j["complete"].get<bool>() ? "yes" : "no") << "\n";
  out << "classes: " << j["classes"].size() << "\n";
  for (std::size_t i = 0; i < j["classes"].size(); ++i) {
    const auto& c = j["classes"][i];
    std::string lengths;
    for (const auto& [v, n] : c["lengths"].items()) lengths += (lengths.empty() ? "" : ",") + std::to_string(n.get<std::size_t>());
    out << "  [" << i + 1 << "] " << assignments_text(c["assignments"]) << "  (lengths " << lengths << "; fingerprint "
        << c["fingerprint_id"].get<std::string>() << "; " << c["distinctness"].get<std::string>() << ")\n";
    const auto& cert = j["certificates"][i];
    if (cert.contains("form")) {
      out << "      from " << match_text(cert) << "\n";
    } else {
      out << "      from the " << cert["construction"].get<std::string>() << "\n";
    }
  }
}

void render_genus(const ordered_json& j, std::ostream& out) {
  out << "equation: " << j["equation"].get<std::string>() << "\n";
  for (const auto& c : j["certificates"]) {
    const std::string kind = c["kind"].get<std::string>();
    out << kind << ": " << genus_text(j["genus"][kind]);
    if (c["forced"].get<bool>()) out << " (forced)";
    out << "\n";
    if (c.contains("match")) out << "  certificate: " << match_text(c["match"]) << "\n";
    if (!c["exhausted_below"].empty()) {
      std::string g;
      for (const auto& e : c["exhausted_below"]) g += (g.empty() ? "" : ",") + std::to_string(e.get<int>());
      out << "  no form matches at genus " << g << "\n";
    }
    if (!c["reason"].get<std::string>().empty()) out << "  " << c["reason"].get<std::string>() << "\n";
  }
}

void render_forms(const ordered_json& j, std::ostream& out) {
  out << "wicks " << j["orientability"].get<std::string>() << " genus=" << j["genus"].get<int>()
      << (j["maximal"].get<bool>() ? " maximal" : "") << " count=" << j["count"].get<std::size_t>() << "\n";
  for (const auto& f : j["forms"]) out << f["length"].get<int>() << "  " << f["form"].get<std::string>() << "\n";
}

void render_reduction(const ordered_json& j, std::ostream& out) {
  out << "equation: " << j["equation"].get<std::string>() << "\n";
  if (!j["conjugator"].get<std::string>().empty()) {
    out << "cyclically reduced by conjugating with " << j["conjugator"].get<std::string>() << "\n";
  }
  out << "steps: " << j["steps"].size() << "\n";
  for (const auto& s : j["steps"]) {
    out << "  " << s["kind"].get<std::string>() << "  (" << s["measure_before"][0].get<std::size_t>() << ","
        << s["measure_before"][1].get<std::size_t>() << ") -> (" << s["measure_after"][0].get<std::size_t>() << ","
        << s["measure_after"][1].get<std::size_t>() << ")  move " << assignments_text(s["move"])
        << "  word " << s["word_after"].get<std::string>() << "\n";
  }
  out << "word: " << j["word"].get<std::string>() << "\n";
  out << "psi: " << assignments_text(j["psi"]) << "\n";
}

void render_report(const ordered_json& j, std::ostream& out) {
  for (const auto& c : j["claims"]) {
    out << c["status"].get<std::string>() << "  " << c["id"].get<std::string>() << "  " << c["details"].get<std::string>()
        << "\n";
  }
  out << (j["passed"].get<bool>() ? "all claims passed" : "some claims failed") << "\n";
}

void render_witness(const ordered_json& j, std::ostream& out) {
  out << j["word"].get<std::string>() << "\n";
  out << "length: " << j["length"].get<std::size_t>() << "\n";
}

// ---- commands ----

Word constant_word(const std::vector<std::string>& tokens) { return parse_word(join(tokens), SymbolKind::constant); }

ordered_json genus_command(const Word& u, bool plus, bool minus, FormLibrary& lib) {
  ordered_json j{{"equation", format_word(u)}, {"genus", ordered_json::object()}, {"classes", ordered_json::array()},
                 {"certificates", ordered_json::array()}};
  auto add = [&](const char* kind, const GenusResult& g) {
    j["genus"][kind] = genus_value(g.value);
    ordered_json c{{"kind", kind}, {"forced", g.forced}, {"exhausted_below", g.exhausted_below}, {"reason", g.reason}};
    if (g.certificate) c["match"] = match_json(*g.certificate);
    j["certificates"].push_back(c);
  };
  if (plus) add("genus+", genus_plus(u, lib));
  if (minus) add("genus-", genus_minus(u, lib));
  return j;
}

ordered_json commutators_command(const Word& u, FormLibrary& lib) {
  const auto reps = solve_commutators(u, lib);
  const int g = reps.empty() ? 0 : reps.front().genus;
  return {{"equation", format_word(standard_orientable(g)) + " = " + format_word(u)},
          {"genus", g},
          {"classes", classes_json(reps)},
          {"certificates", certificates_json(reps)}};
}

ordered_json squares_command(const Word& u, FormLibrary& lib) {
  const SquaresSolution s = solve_squares(u, lib);
  return {{"equation", format_word(standard_nonorientable(s.genus)) + " = " + format_word(u)},
          {"genus", s.genus},
          {"complete", s.complete},
          {"classes", classes_json(s.classes)},
          {"certificates", certificates_json(s.classes)}};
}

ordered_json forms_command(bool orientable, int genus, bool maximal, FormLibrary& lib) {
  const auto forms = maximal ? enumerate_wicks(orientable, genus, true) : lib.complete(orientable, genus);
  ordered_json list = ordered_json::array();
  for (const auto& f : forms) list.push_back({{"length", f.length}, {"form", format_word(f.word)}});
  return {{"orientability", orientable ? "orientable" : "nonorientable"},
          {"genus", genus},
          {"maximal", maximal},
          {"count", forms.size()},
          {"forms", list}};
}

ordered_json reduction_command(const std::string& form_text, const std::vector<std::string>& assignment_texts) {
  const Word w = parse_word(form_text, SymbolKind::variable);
  Substitution psi;
  for (const auto& a : assignment_texts) {
    auto [v, img] = parse_assignment(a);
    psi.set(v, std::move(img));
  }
  const Word image = apply_substitution(psi, w);
  if (image.empty()) throw DomainError("the solution spells the trivial word");
  const CyclicReduction cr = cyclic_reduce(image);
  Substitution phi;
  for (const auto& [v, img] : psi.assignments()) phi.set(v, cr.conjugator * img * cr.conjugator.inverse());
  const ReductionResult r = reduce_solution(w, phi, cr.core);
  ordered_json steps = ordered_json::array();
  for (const auto& s : r.trace.steps) {
    steps.push_back({{"kind", to_string(s.kind)},
                     {"measure_before", {s.before.total_length, s.before.variables}},
                     {"measure_after", {s.after.total_length, s.after.variables}},
                     {"move", substitution_json(s.move.forward())},
                     {"word_after", format_word(s.word_after)}});
  }
  return {{"equation", format_word(w) + " = " + format_word(image)},
          {"conjugator", format_word(cr.conjugator)},
          {"steps", steps},
          {"word", format_word(r.word)},
          {"psi", substitution_json(r.psi)}};
}

ordered_json verify_command(bool skip_slow, FormLibrary& lib) {
  SuiteOptions opts;
  opts.skip_slow = skip_slow;
  const VerificationReport report = run_reproduction_suite(opts, lib);
  ordered_json claims = ordered_json::array();
  for (const auto& c : report.claims) {
    claims.push_back({{"id", c.id}, {"criterion", c.criterion}, {"status", to_string(c.status)}, {"details", c.details}});
  }
  return {{"claims", claims}, {"passed", report.passed()}};
}

ordered_json witness_command(const std::string& family, int n) {
  const Word w = family == "u1" ? witness_u1(n) : witness_u2(n);
  return {{"family", family}, {"n", n}, {"word", format_word(w)}, {"length", w.size()}};
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Solutions of [x1,y1]...[xg,yg] = U and x1^2...xg^2 = U in free groups", "wicks"};
  app.require_subcommand(1);
  std::string format = "text";
  std::string tables;
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--tables", tables, "Directory for cached Wicks form tables");

  std::vector<std::string> word_tokens;
  bool only_plus = false, only_minus = false, both = false;
  auto* genus = app.add_subcommand("genus", "genus+ and genus- of a word");
  genus->add_option("word", word_tokens, "Word over constants, e.g. 'a^-1 b^-1 a b'")->required();
  auto* o_flag = genus->add_flag("--orientable", only_plus, "Only genus+");
  auto* n_flag = genus->add_flag("--nonorientable", only_minus, "Only genus-");
  auto* b_flag = genus->add_flag("--both", both, "Both (default)");
  o_flag->excludes(n_flag)->excludes(b_flag);
  n_flag->excludes(b_flag);

  auto* solve = app.add_subcommand("solve", "Stabilizer classes of solutions");
  solve->require_subcommand(1);
  auto* comm = solve->add_subcommand("commutators", "[x1,y1]...[xg,yg] = U at g = genus+(U)");
  comm->add_option("word", word_tokens)->required();
  auto* sq = solve->add_subcommand("squares", "x1^2...xg^2 = U at g = genus-(U)");
  sq->add_option("word", word_tokens)->required();

  std::string orientability;
  int form_genus = 0;
  bool maximal = false;
  auto* wicks = app.add_subcommand("wicks", "List Wicks forms");
  wicks->add_option("orientability", orientability)->required()->check(CLI::IsMember({"orientable", "nonorientable"}));
  wicks->add_option("genus", form_genus)->required()->check(CLI::Range(1, 64));
  wicks->add_flag("--maximal", maximal, "Only forms of maximal length");

  std::string form_text;
  std::vector<std::string> assignment_texts;
  auto* reduce = app.add_subcommand("reduce-solution", "Reduce a solution of W = U to a cancellation-free one");
  reduce->add_option("form", form_text, "Quadratic word over variables, e.g. 'x^-1 y^-1 x y'")->required();
  reduce->add_option("assignments", assignment_texts, "Assignments such as 'x=a b'")->required();

  bool skip_slow = false;
  auto* verify = app.add_subcommand("verify", "Reproduction suite");
  verify->require_subcommand(1);
  auto* paper = verify->add_subcommand("paper", "Run every claim of the suite");
  paper->add_flag("--skip-slow", skip_slow, "Skip the maximal genus-2 census");

  std::string family;
  int index = 0;
  auto* witness = app.add_subcommand("witness", "Witness words for the length bounds");
  witness->add_option("family", family)->required()->check(CLI::IsMember({"u1", "u2"}));
  witness->add_option("n", index)->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  std::unique_ptr<FormLibrary> own;
  if (!tables.empty()) own = std::make_unique<FormLibrary>(std::filesystem::path(tables));
  FormLibrary& lib = own ? *own : FormLibrary::shared();

  try {
    ordered_json j;
    void (*render)(const ordered_json&, std::ostream&) = nullptr;
    int code = 0;
    if (*genus) {
      j = genus_command(constant_word(word_tokens), !only_minus, !only_plus, lib);
      render = render_genus;
    } else if (*comm) {
      j = commutators_command(constant_word(word_tokens), lib);
      render = render_solution;
    } else if (*sq) {
      j = squares_command(constant_word(word_tokens), lib);
      render = render_solution;
    } else if (*wicks) {
      j = forms_command(orientability == "orientable", form_genus, maximal, lib);
      render = render_forms;
    } else if (*reduce) {
      j = reduction_command(form_text, assignment_texts);
      render = render_reduction;
    } else if (*paper) {
      j = verify_command(skip_slow, lib);
      render = render_report;
      code = j["passed"].get<bool>() ? 0 : 1;
    } else {
      j = witness_command(family, index);
      render = render_witness;
    }
    if (format == "json") {
      out << j.dump(2) << "\n";
    } else {
      render(j, out);
    }
    return code;
  } catch (const MalformedInput& e) {
    err << "malformed input: " << e.what() << "\n";
    return 2;
  } catch (const DomainError& e) {
    err << "domain error: " << e.what() << "\n";
    return 2;
  } catch (const NoSolution& e) {
    err << "no solution: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace wicks::cli
