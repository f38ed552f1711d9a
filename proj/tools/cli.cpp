#include "cli.hpp"

#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <set>
#include <sstream>

#include "CLI11.hpp"
#include "cactus/cayley.hpp"
#include "cactus/confspace.hpp"
#include "cactus/equiv.hpp"
#include "cactus/j3.hpp"
#include "cactus/perm.hpp"
#include "cactus/words.hpp"

namespace cactus::cli {

namespace {

struct CommandConfig {
  std::string word_text;
  bool from_stdin = false;
  std::optional<int> degree;
  std::string subset;  // comma separated; empty = full group
  std::string group = "J3_2";
  std::int64_t radius = 0;
  std::string format = "dot";
  std::string out_path;
  int chamber_degree = 4;
  std::int64_t cover_k = 0;
  std::string suite;
  std::optional<std::int64_t> jmin, jmax, kmin, kmax, mmin, mmax;
  std::size_t max_length = 8;
  bool perturb_phi0 = false;
};

struct Result {
  std::string text;
  int code = kExitOk;
};

// The word operand, with the degree inferred from its letters when --n is
// absent (at least 3, so short words get exact J_3 treatment).
Word read_word(const CommandConfig& cfg, std::istream& in) {
  std::string text = cfg.word_text;
  if (cfg.from_stdin) {
    text.assign(std::istreambuf_iterator<char>(in),
                std::istreambuf_iterator<char>());
  }
  const int needed = max_index(text);
  const int n = cfg.degree.value_or(std::max(3, needed));
  const Word w = parse_word(text, n);
  if (!cfg.subset.empty()) {
    std::set<int> sizes;
    std::istringstream in_sizes(cfg.subset);
    for (std::string item; std::getline(in_sizes, item, ',');) {
      try {
        sizes.insert(std::stoi(item));
      } catch (const std::exception&) {
        throw Error("bad --subset entry '" + item + "'");
      }
    }
    const auto spec = PresentationSpec::with_subset(n, std::move(sizes));
    if (!spec.admits(w)) {
      throw Error("word uses a generator outside J_n^S");
    }
  }
  return w;
}

IntRange range_of(const std::optional<std::int64_t>& lo,
                  const std::optional<std::int64_t>& hi, std::int64_t def_lo,
                  std::int64_t def_hi, const char* what) {
  IntRange r{lo.value_or(def_lo), hi.value_or(def_hi)};
  r.validate(what);
  return r;
}

Result cmd_normalize(const CommandConfig& cfg, std::istream& in) {
  const Word w = read_word(cfg, in);
  if (w.degree() == 3) return {canonicalize(w).to_string() + "\n"};
  const auto reduced = free_reduce(w).to_string();
  return {"freely-reduced:" + (reduced.empty() ? "" : " " + reduced) + "\n"};
}

Result cmd_project(const CommandConfig& cfg, std::istream& in) {
  return {project(read_word(cfg, in)).to_string() + "\n"};
}

Result cmd_pure(const CommandConfig& cfg, std::istream& in) {
  return {std::string(is_pure(read_word(cfg, in)) ? "yes" : "no") + "\n"};
}

Result cmd_cayley(const CommandConfig& cfg) {
  const auto g = build_window(parse_cayley_group(cfg.group), cfg.radius);
  return {cfg.format == "json" ? export_json(g) : export_dot(g)};
}

Result cmd_chambers(const CommandConfig& cfg) {
  std::string text;
  for (const auto& c : enumerate_chambers(cfg.chamber_degree)) {
    text += c.name() + "\n";
  }
  return {text};
}

Result cmd_cover(const CommandConfig& cfg) {
  std::string text;
  for (const auto& v : cover_window(cfg.cover_k)) text += v.to_string() + "\n";
  return {text};
}

Result cmd_verify(const CommandConfig& cfg) {
  VerificationReport report;
  if (cfg.suite == "equivariance") {
    const auto j = range_of(cfg.jmin, cfg.jmax, -20, 20, "j");
    const auto k = range_of(cfg.kmin, cfg.kmax, -50, 50, "k");
    report = cfg.perturb_phi0
                 ? check_equivariance(j, k, testing::phi0_perturbed)
                 : check_equivariance(j, k);
  } else if (cfg.suite == "action") {
    report = verify_action_axioms(range_of(cfg.kmin, cfg.kmax, -10, 10, "k"),
                                  range_of(cfg.mmin, cfg.mmax, -60, 60, "m"));
  } else if (cfg.suite == "iso") {
    report = verify_iso(range_of(cfg.kmin, cfg.kmax, -15, 15, "k"));
  } else {
    report = verify_affine_oracle(cfg.max_length);
  }
  return {report.to_text(), report.ok() ? kExitOk : kExitVerifyFailed};
}

void add_word_options(CLI::App* sub, CommandConfig& cfg) {
  sub->add_option("word", cfg.word_text, "word, e.g. \"s1,2 s1,3\"");
  sub->add_flag("--stdin", cfg.from_stdin, "read the word from stdin");
  sub->add_option("--n", cfg.degree, "group degree (default: inferred, >= 3)")
      ->check(CLI::Range(2, 64));
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in,
        std::ostream& out, std::ostream& err) {
  CommandConfig cfg;
  CLI::App app{"Cactus group words, Cayley windows, and the PJ_3 / X(4) "
               "correspondence"};
  app.name("cactus");
  app.require_subcommand(1);

  auto* normalize = app.add_subcommand(
      "normalize", "canonical form (degree 3) or free reduction");
  add_word_options(normalize, cfg);
  normalize->add_option("--subset", cfg.subset,
                        "require letters of J_n^S; S as sizes q-p+1, e.g. 2,3");

  auto* project_cmd = app.add_subcommand("project", "image in S_n");
  add_word_options(project_cmd, cfg);
  auto* pure = app.add_subcommand("pure", "is the word in the pure cactus group");
  add_word_options(pure, cfg);

  auto* cayley = app.add_subcommand("cayley", "Cayley graph window");
  cayley->add_option("--group", cfg.group, "J3 or J3_2")
      ->check(CLI::IsMember({"J3", "J3_2"}));
  cayley->add_option("--radius", cfg.radius, "max word length")
      ->check(CLI::NonNegativeNumber);
  cayley->add_option("--format", cfg.format, "dot or json")
      ->check(CLI::IsMember({"dot", "json"}));

  auto* chambers = app.add_subcommand("chambers", "chambers of X(n)");
  chambers->add_option("--n", cfg.chamber_degree, "number of points")
      ->check(CLI::Range(3, 10));

  auto* cover = app.add_subcommand("cover", "universal cover window of X(4)");
  cover->add_option("-K,--window", cfg.cover_k, "k ranges over [-K, K]")
      ->check(CLI::NonNegativeNumber);

  auto* verify = app.add_subcommand("verify", "run a verification sweep");
  verify->add_option("suite", cfg.suite, "equivariance | action | iso | oracle")
      ->required()
      ->check(CLI::IsMember({"equivariance", "action", "iso", "oracle"}));
  verify->add_option("--jmin", cfg.jmin);
  verify->add_option("--jmax", cfg.jmax);
  verify->add_option("--kmin", cfg.kmin);
  verify->add_option("--kmax", cfg.kmax);
  verify->add_option("--mmin", cfg.mmin);
  verify->add_option("--mmax", cfg.mmax);
  verify->add_option("--max-length", cfg.max_length,
                     "oracle suite: longest word checked");
  verify->add_flag("--perturb-phi0", cfg.perturb_phi0)->group("");

  for (auto* sub : app.get_subcommands({})) {
    sub->add_option("--out", cfg.out_path, "write output here, not stdout");
  }

  std::vector<const char*> argv = {"cactus"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  Result result;
  try {
    if (normalize->parsed()) {
      result = cmd_normalize(cfg, in);
    } else if (project_cmd->parsed()) {
      result = cmd_project(cfg, in);
    } else if (pure->parsed()) {
      result = cmd_pure(cfg, in);
    } else if (cayley->parsed()) {
      result = cmd_cayley(cfg);
    } else if (chambers->parsed()) {
      result = cmd_chambers(cfg);
    } else if (cover->parsed()) {
      result = cmd_cover(cfg);
    } else {
      result = cmd_verify(cfg);
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  if (cfg.out_path.empty()) {
    out << result.text;
  } else {
    std::ofstream file(cfg.out_path, std::ios::binary);
    if (!file) {
      err << "error: cannot write " << cfg.out_path << "\n";
      return kExitUsage;
    }
    file << result.text;
  }
  return result.code;
}

}  // namespace cactus::cli
