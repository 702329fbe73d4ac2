// ftop: command-line front end.
//
//   ftop parse <expr>
//   ftop lift -i <map> -g <map> [--fillers] [--format text|json]
//   ftop orth -P <map>[,<map>...] -w <word> -n <bound> [--jobs K] [--format text|json]
//   ftop classify <map|space>
//   ftop enumerate -n <bound> [--t0]
//   ftop retract -f <map> -g <map>
//   ftop factor -f <map> -P <maps> -w <word> -n <bound> [--jobs K]
//   ftop verify [--suite NAME] [-n N] [--jobs K] [--format text|json] [--long]
//
// Exit codes: 0 holds / found / pass, 1 fails / not found, 2 usage or parse
// error, 3 capacity exceeded.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "ftop/dsl.hpp"
#include "ftop/json_io.hpp"
#include "ftop/lifting.hpp"
#include "ftop/orthogonal.hpp"
#include "ftop/properties.hpp"
#include "ftop/registry.hpp"
#include "ftop/universe.hpp"
#include "ftop/verify.hpp"

namespace {

using namespace ftop;

constexpr int kHolds = 0;
constexpr int kFails = 1;
constexpr int kUsage = 2;
constexpr int kCapacity = 3;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

nlohmann::json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open '" + path + "'");
  try {
    return nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw UsageError(path + ": " + e.what());
  }
}

bool looks_like_map(const std::string& text) {
  return text.find("-->") != std::string::npos || text.find("⟶") != std::string::npos;
}

CMap load_map(const std::string& text) {
  if (!text.empty() && text[0] == '@') return map_from_json(read_json_file(text.substr(1)));
  const auto& reg = Registry::instance();
  if (reg.has_map(text)) return reg.map(text);
  return parse_map(text);
}

SpacePtr load_space(const std::string& text) {
  if (!text.empty() && text[0] == '@') return share(space_from_json(read_json_file(text.substr(1))));
  const auto& reg = Registry::instance();
  if (reg.has_space(text)) return reg.space(text);
  return share(parse_space(text));
}

// Splits a list of maps on commas outside braces.
std::vector<CMap> load_maps(const std::string& text) {
  std::vector<CMap> out;
  int depth = 0;
  std::string current;
  for (char c : text) {
    if (c == '{') ++depth;
    if (c == '}') --depth;
    if (c == ',' && depth == 0) {
      out.push_back(load_map(current));
      current.clear();
    } else {
      current += c;
    }
  }
  if (!current.empty()) out.push_back(load_map(current));
  if (out.empty()) throw UsageError("expected at least one map");
  return out;
}

std::string show(const CMap& f) { return render(relabel_for_render(f)); }

void check_format(const std::string& format) {
  if (format != "text" && format != "json") throw UsageError("--format must be text or json");
}

int cmd_parse(const std::string& expr) {
  bool is_map = looks_like_map(expr);
  if (!expr.empty() && expr[0] == '@') {
    is_map = read_json_file(expr.substr(1)).contains("src");
  } else if (Registry::instance().has_map(expr)) {
    is_map = true;
  } else if (Registry::instance().has_space(expr)) {
    is_map = false;
  }
  if (is_map) {
    const CMap f = relabel_for_render(load_map(expr));
    std::cout << render(f) << "\n" << to_json(f).dump(2) << "\n";
  } else {
    const SpacePtr s = load_space(expr);
    std::cout << render(*s) << "\n" << to_json(*s).dump(2) << "\n";
  }
  return kHolds;
}

int cmd_lift(const std::string& i_text, const std::string& g_text, bool fillers, const std::string& format) {
  check_format(format);
  const CMap i = load_map(i_text);
  const CMap g = load_map(g_text);
  const LiftCertificate cert = lifts(i, g, {.keep_fillers = fillers});
  if (format == "json") {
    std::cout << to_json(cert).dump(2) << "\n";
  } else {
    std::cout << "i: " << show(i) << "\n"
              << "g: " << show(g) << "\n"
              << "holds: " << (cert.holds ? "true" : "false") << "\n"
              << "squares: " << cert.squares << "\n";
    if (cert.counterexample) {
      const Square& sq = *cert.counterexample;
      std::cout << "counterexample:\n"
                << "  f:   " << show(sq.f()) << "\n"
                << "  phi: " << show(sq.phi()) << "\n";
    }
    if (cert.holds) {
      std::ostringstream digest;
      digest << std::hex << cert.digest;
      std::cout << "filler digest: " << digest.str() << "\n";
      for (std::size_t k = 0; k < cert.fillers.size(); ++k) std::cout << "  h" << k << ": " << show(cert.fillers[k]) << "\n";
    }
  }
  return cert.holds ? kHolds : kFails;
}

int cmd_orth(const std::string& base_text, const std::string& word, int n, int jobs, const std::string& format) {
  check_format(format);
  validate_word(word);
  const auto base = load_maps(base_text);
  const Universe u = Universe::load_or_build(n, jobs);
  const OrthogonalResult r = relative_orthogonal({base, word}, u, jobs);
  const auto members = select(u, r.members);
  if (format == "json") {
    nlohmann::json j{{"bound", r.bound},
                     {"word", r.word},
                     {"approximation", to_string(r.approximation)},
                     {"universe_maps", u.maps().size()}};
    j["base"] = nlohmann::json::array();
    for (const auto& b : base) j["base"].push_back(show(b));
    j["members"] = nlohmann::json::array();
    for (const auto& m : members) j["members"].push_back(show(m));
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "# class P^" << word << " relative to spaces with at most " << n << " points\n"
              << "# approximation: " << to_string(r.approximation) << "; the true class may differ beyond the bound\n"
              << "# " << members.size() << " of " << u.maps().size() << " maps\n";
    for (const auto& m : members) std::cout << show(m) << "\n";
  }
  return kHolds;
}

int cmd_classify(const std::string& expr) {
  bool is_map = looks_like_map(expr) || Registry::instance().has_map(expr);
  if (!expr.empty() && expr[0] == '@') is_map = read_json_file(expr.substr(1)).contains("src");
  if (is_map) {
    std::cout << to_json(classify(load_map(expr))).dump(2) << "\n";
  } else {
    std::cout << to_json(classify(*load_space(expr))).dump(2) << "\n";
  }
  return kHolds;
}

int cmd_enumerate(int n, bool t0_only) {
  if (n < 0) throw UsageError("-n must be nonnegative");
  for (const auto& s : enumerate_spaces(n, t0_only)) std::cout << render(*s) << "\n";
  return kHolds;
}

int cmd_retract(const std::string& f_text, const std::string& g_text) {
  const CMap f = load_map(f_text);
  const CMap g = load_map(g_text);
  const auto w = is_retract_of(f, g);
  if (!w) {
    std::cout << "no retraction\n";
    return kFails;
  }
  std::cout << "retract (verified: " << (verify_retract(f, g, *w) ? "yes" : "no") << ")\n"
            << "s:  " << show(w->s) << "\n"
            << "r:  " << show(w->r) << "\n"
            << "s': " << show(w->s_cod) << "\n"
            << "r': " << show(w->r_cod) << "\n";
  return kHolds;
}

int cmd_factor(const std::string& f_text, const std::string& base_text, const std::string& word, int n, int jobs) {
  validate_word(word, true);
  const CMap f = load_map(f_text);
  const auto base = load_maps(base_text);
  const Universe u = Universe::load_or_build(n, jobs);
  const FactorSearchResult r = factor_search(f, base, word, u, jobs);
  std::cout << "# exploration within spaces of at most " << n << " points; a miss says nothing beyond the bound\n"
            << "# left class P^" << word << "l: " << r.left_class_size << " maps, right class P^" << word
            << "lr: " << r.right_class_size << " maps, candidates tested: " << r.candidates_tested << "\n";
  if (!r.found) {
    std::cout << "no factorization found\n";
    return kFails;
  }
  std::cout << "left:  " << show(r.found->left) << "\n"
            << "right: " << show(r.found->right) << "\n";
  return kHolds;
}

int cmd_verify(const std::string& suite, int n, int jobs, const std::string& format, bool long_running,
               bool timings) {
  check_format(format);
  SuiteOptions options;
  options.n = n;
  options.jobs = jobs;
  options.long_running = long_running;
  const SuiteReport report = run_suite(suite, options);
  if (format == "json") {
    std::cout << to_json(report, timings).dump(2) << "\n";
  } else {
    std::cout << to_text(report);
  }
  return report.ok() ? kHolds : kFails;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite topological spaces, lifting properties and orthogonal classes"};
  app.require_subcommand(1);

  std::string expr;
  auto* parse = app.add_subcommand("parse", "Parse a space or map and print its canonical form and JSON");
  parse->add_option("expr", expr, "DSL text, registry name or @file.json")->required();

  std::string i_text;
  std::string g_text;
  std::string format = "text";
  bool fillers = false;
  auto* lift = app.add_subcommand("lift", "Decide whether i has the left lifting property against g");
  lift->add_option("-i", i_text, "Left map")->required();
  lift->add_option("-g", g_text, "Right map")->required();
  lift->add_flag("--fillers", fillers, "List one filler per square");
  lift->add_option("--format", format, "text or json");

  std::string base_text;
  std::string word;
  int n = 0;
  int jobs = 0;
  auto* orth = app.add_subcommand("orth", "Bounded orthogonal class of a set of maps");
  orth->add_option("-P", base_text, "Comma-separated base maps")->required();
  orth->add_option("-w", word, "Word over l and r")->required();
  orth->add_option("-n", n, "Universe bound (points)")->required();
  orth->add_option("--jobs", jobs, "Worker threads (0 = all cores)");
  orth->add_option("--format", format, "text or json");

  auto* classify_cmd = app.add_subcommand("classify", "Print the classical properties of a map or space");
  classify_cmd->add_option("expr", expr, "Map or space")->required();

  bool t0_only = false;
  auto* enumerate = app.add_subcommand("enumerate", "List spaces up to homeomorphism");
  enumerate->add_option("-n", n, "Largest number of points")->required();
  enumerate->add_flag("--t0", t0_only, "Only T0 spaces");

  std::string f_text;
  auto* retract = app.add_subcommand("retract", "Search for f as a retract of g in the arrow category");
  retract->add_option("-f", f_text, "The candidate retract")->required();
  retract->add_option("-g", g_text, "The ambient map")->required();

  auto* factor = app.add_subcommand("factor", "Search for f = p.i with i in P^{w l} and p in P^{w l r}");
  factor->add_option("-f", f_text, "Map to factor")->required();
  factor->add_option("-P", base_text, "Comma-separated base maps")->required();
  factor->add_option("-w", word, "Word prefix over l and r (may be empty)");
  factor->add_option("-n", n, "Universe bound (points)")->required();
  factor->add_option("--jobs", jobs, "Worker threads (0 = all cores)");

  std::string suite = "all";
  bool long_running = false;
  bool no_timings = false;
  auto* verify = app.add_subcommand("verify", "Run verification suites");
  verify->add_option("--suite", suite, "Suite name or all");
  verify->add_option("-n", n, "Universe bound (0 = per-suite default)");
  verify->add_option("--jobs", jobs, "Worker threads (0 = all cores)");
  verify->add_option("--format", format, "text or json");
  verify->add_flag("--long", long_running, "Allow map sweeps beyond 4 points");
  verify->add_flag("--no-timings", no_timings, "Leave runtimes out of the report");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*parse) return cmd_parse(expr);
    if (*lift) return cmd_lift(i_text, g_text, fillers, format);
    if (*orth) return cmd_orth(base_text, word, n, jobs, format);
    if (*classify_cmd) return cmd_classify(expr);
    if (*enumerate) return cmd_enumerate(n, t0_only);
    if (*retract) return cmd_retract(f_text, g_text);
    if (*factor) return cmd_factor(f_text, base_text, word, n, jobs);
    if (*verify) return cmd_verify(suite, n, jobs, format, long_running, !no_timings);
  } catch (const CapacityError& e) {
    std::cerr << "capacity: " << e.what() << "\n";
    return kCapacity;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kUsage;
  } catch (const UsageError& e) {
    std::cerr << "usage: " << e.what() << "\n";
    return kUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
