#include "grassmann/cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "grassmann/errors.hpp"
#include "grassmann/expression.hpp"
#include "grassmann/setfamily.hpp"
#include "grassmann/structure.hpp"
#include "grassmann/subspace.hpp"
#include "grassmann/text.hpp"
#include "grassmann/verify.hpp"

namespace grassmann {
namespace {

using nlohmann::json;

std::string read_source(const std::string& path, std::istream& in) {
  std::ostringstream buffer;
  if (path == "-") {
    buffer << in.rdbuf();
    return buffer.str();
  }
  std::ifstream file(path);
  if (!file) throw DocumentError("cannot open " + path);
  buffer << file.rdbuf();
  return buffer.str();
}

// A leading minus would otherwise be read as a short option.
std::vector<std::string> protect_negative_expressions(std::vector<std::string> args) {
  if (args.empty() || args.front() != "eval") return args;
  for (auto& a : args) {
    if (a.size() > 1 && a[0] == '-' && a[1] != '-' && a != "-h") a.insert(a.begin(), ' ');
  }
  return args;
}

std::string family_text(const SetFamily& f) { return to_json(f).dump(); }

// ------------------------------------------------------------------ commands

struct EvalArgs {
  int n = 1;
  std::string field = "rational";
  bool grades = false;
  bool initial = false;
  std::vector<std::string> expressions;
};

int cmd_eval(const EvalArgs& a, std::ostream& out) {
  const Field field = Field::parse(a.field);
  for (const auto& text : a.expressions) {
    const Element x = evaluate_expression(text, a.n, field);
    out << print_element(x) << '\n';
    if (a.grades) {
      for (int k = 0; k <= a.n; ++k) {
        const Element part = grade_component(x, k);
        if (!part.is_zero()) out << "  degree " << k << ": " << print_element(part) << '\n';
      }
    }
    if (a.initial) {
      if (x.is_zero()) {
        out << "  inm: undefined\n";
      } else {
        out << "  inm: " << print_element(Element::monomial(a.n, initial_monomial(x).mask(), field)) << '\n';
        out << "  int: " << print_element(initial_term(x)) << '\n';
        out << "  min: " << print_element(min_part(x)) << '\n';
      }
    }
  }
  return kExitOk;
}

struct GammaArgs {
  std::string document;
  std::string perm;
};

int cmd_gamma(const GammaArgs& a, std::istream& in, std::ostream& out, std::ostream& err) {
  const Subspace d = read_subspace(parse_subspace_document(read_source(a.document, in)));
  const Permutation sigma = a.perm.empty() ? Permutation::identity(d.n()) : Permutation::parse(a.perm, d.n());
  const Subspace result = gamma_chain(sigma, d);
  if (result.dim() != d.dim()) {
    err << "gamma chain changed the dimension from " << d.dim() << " to " << result.dim() << '\n';
    return kExitVerificationFailed;
  }
  json j;
  j["permutation"] = sigma.to_string();
  j["dim"] = result.dim();
  j["subspace"] = to_json(write_subspace(result));
  j["family"] = to_json(monomial_family(sigma, d));
  out << j.dump(2) << '\n';
  return kExitOk;
}

json report_json(const StructureReport& r) {
  return json{{"dimension", r.dimension},
              {"square_dimension", r.square_dimension},
              {"is_subalgebra", r.is_subalgebra},
              {"is_commutative", r.is_commutative},
              {"is_square_zero", r.is_square_zero},
              {"is_e0_submodule", r.is_e0_submodule},
              {"is_maximal_commutative", r.is_maximal_commutative}};
}

int cmd_analyze(const std::string& document, std::istream& in, std::ostream& out) {
  const Subspace a = read_subspace(parse_subspace_document(read_source(document, in)));
  json j = report_json(analyze(a));
  j["n"] = a.n();
  j["hilbert_series"] = hilbert_series(a);
  j["is_graded"] = is_graded(a);
  out << j.dump(2) << '\n';
  return kExitOk;
}

struct SearchFlags {
  std::optional<std::uint64_t> budget;
  bool json = false;
  bool stats = false;
};

SearchOptions search_options(const SearchFlags& f) {
  SearchOptions o;
  if (f.budget) o.node_budget = *f.budget;
  return o;
}

struct MaxdimArgs {
  int n = 1;
  bool certify = false;
  SearchFlags flags;
};

int cmd_maxdim(const MaxdimArgs& a, std::ostream& out, std::ostream& err) {
  const std::uint64_t value = max_comm_dim(a.n);
  if (!a.certify) {
    if (a.flags.json) {
      out << json{{"n", a.n}, {"max_comm_dim", value}}.dump(2) << '\n';
    } else {
      out << value << '\n';
    }
    return kExitOk;
  }
  if (a.n > 7) throw CLI::ValidationError("--certify", "certification is limited to n <= 7");
  SearchOptions options = search_options(a.flags);
  if (!options.node_budget) options.node_budget = kDefaultNodeBudget;
  const SearchResult r = max_odd_intersecting(a.n, options);
  const std::uint64_t certified = (std::uint64_t{1} << (a.n - 1)) + r.maximum;
  const bool agree = certified == value;
  if (a.flags.json) {
    json j{{"n", a.n},
           {"max_comm_dim", value},
           {"search_maximum", r.maximum},
           {"certified", agree},
           {"certificate", to_json(r.certificate)}};
    if (a.flags.stats) j["nodes"] = r.nodes;
    out << j.dump(2) << '\n';
  } else {
    out << value << '\n';
    out << "odd intersecting maximum " << r.maximum << ", certificate " << family_text(r.certificate) << '\n';
    if (a.flags.stats) out << "nodes " << r.nodes << '\n';
  }
  if (!agree) {
    err << "mismatch: formula " << value << " but 2^(n-1) + search maximum = " << certified << '\n';
    return kExitVerificationFailed;
  }
  return kExitOk;
}

struct SearchArgs {
  std::string kind = "odd";
  int n = 1;
  int k = 1;
  int i = 1;
  bool all = false;
  SearchFlags flags;
};

int cmd_search(const SearchArgs& a, std::ostream& out) {
  SearchOptions options = search_options(a.flags);
  options.enumerate_all = a.all;
  SearchResult r;
  if (a.kind == "odd") {
    r = max_odd_intersecting(a.n, options);
  } else if (a.kind == "ekr") {
    r = ekr_search(a.n, a.k, options);
  } else {
    r = two_level_max(a.n, a.i, options);
  }
  if (a.flags.json) {
    json j{{"kind", a.kind}, {"n", a.n}, {"maximum", r.maximum}, {"certificate", to_json(r.certificate)}};
    if (a.all || a.kind == "two-level") {
      auto maxima = json::array();
      for (const auto& f : r.all_maxima) maxima.push_back(to_json(f));
      j["all_maxima"] = maxima;
    }
    if (a.flags.stats) j["nodes"] = r.nodes;
    out << j.dump(2) << '\n';
    return kExitOk;
  }
  out << r.maximum << '\n' << family_text(r.certificate) << '\n';
  if (a.all || a.kind == "two-level") {
    out << r.all_maxima.size() << " maximum families\n";
    for (const auto& f : r.all_maxima) out << family_text(f) << '\n';
  }
  if (a.flags.stats) out << "nodes " << r.nodes << '\n';
  return kExitOk;
}

struct CanonicalArgs {
  int n = 1;
  int l = 1;
  std::string field = "rational";
};

int cmd_canonical(const CanonicalArgs& a, std::ostream& out) {
  const Subspace s = canonical_max_commutative(a.n, a.l, Field::parse(a.field));
  out << to_json(write_subspace(s)).dump(2) << '\n';
  return kExitOk;
}

struct VerifyArgs {
  int upto_n = 7;
  std::uint64_t seed = verify::Options{}.seed;
  std::vector<std::string> mutate;
  std::vector<std::string> only;
  bool json = false;
  bool list = false;
  bool stats = false;
};

int cmd_verify(const VerifyArgs& a, std::ostream& out) {
  if (a.list) {
    for (const auto& c : verify::checks()) {
      out << (c.criterion ? std::to_string(c.criterion) : std::string("-")) << '\t' << c.anchor
          << (c.mutable_input ? "\t(mutable)" : "") << '\n';
    }
    return kExitOk;
  }
  verify::Options options;
  options.upto_n = a.upto_n;
  options.seed = a.seed;
  for (const auto& m : a.mutate) {
    bool known = false;
    for (const auto& c : verify::checks()) known = known || (c.anchor == m && c.mutable_input);
    if (!known) throw CLI::ValidationError("--mutate", "no mutable check named '" + m + "'");
    options.mutate.insert(m);
  }
  std::function<bool(const verify::Check&)> select;
  if (!a.only.empty()) {
    select = [&](const verify::Check& c) {
      for (const auto& prefix : a.only) {
        if (c.anchor.rfind(prefix, 0) == 0) return true;
      }
      return false;
    };
  }
  const auto results = verify::run(options, select);
  std::size_t failed = 0;
  std::size_t passed = 0;
  std::size_t skipped = 0;
  for (const auto& r : results) {
    failed += r.status == verify::Status::Fail;
    passed += r.status == verify::Status::Pass;
    skipped += r.status == verify::Status::Skip;
  }
  if (a.json) {
    out << verify::report(results).dump(2) << '\n';
  } else {
    for (const auto& r : results) {
      out << '[' << verify::to_string(r.status) << "] " << r.anchor;
      if (!r.detail.empty()) out << ": " << r.detail;
      if (a.stats) {
        out << " (" << (r.stats.empty() ? "" : r.stats + ", ") << r.seconds << " s)";
      }
      out << '\n';
    }
    out << passed << " passed, " << failed << " failed, " << skipped << " skipped\n";
  }
  return failed == 0 ? kExitOk : kExitVerificationFailed;
}

void add_search_flags(CLI::App* cmd, SearchFlags& flags) {
  cmd->add_option("--budget", flags.budget, "node budget for the search");
  cmd->add_flag("--json", flags.json, "print JSON");
  cmd->add_flag("--stats", flags.stats, "also print search node counts");
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Computations in the Grassmann algebra E^(n)", "grassmann"};
  app.require_subcommand(1);

  EvalArgs eval;
  auto* eval_cmd = app.add_subcommand("eval", "evaluate sums and products of elements");
  eval_cmd->add_option("--n", eval.n, "number of generators")->required()->check(CLI::Range(1, 16));
  eval_cmd->add_option("--field", eval.field, "rational or gf:p");
  eval_cmd->add_flag("--grades", eval.grades, "print homogeneous components");
  eval_cmd->add_flag("--initial", eval.initial, "print initial monomial, initial term and minimal part");
  eval_cmd->add_option("expression", eval.expressions, "expressions such as \"(v{1}+v{2,3})*v{4}\"")->required();

  GammaArgs gamma_args;
  auto* gamma_cmd = app.add_subcommand("gamma", "apply a gamma chain to a subspace document");
  gamma_cmd->add_option("document", gamma_args.document, "subspace document file, or - for stdin")->required();
  gamma_cmd->add_option("--perm", gamma_args.perm, "permutation images, e.g. 1,2,6,4,5,3 (default identity)");

  std::string analyze_doc;
  auto* analyze_cmd = app.add_subcommand("analyze", "report structural properties of a subspace document");
  analyze_cmd->add_option("document", analyze_doc, "subspace document file, or - for stdin")->required();

  MaxdimArgs maxdim;
  auto* maxdim_cmd = app.add_subcommand("maxdim", "maximal dimension of a commutative subalgebra");
  maxdim_cmd->add_option("--n", maxdim.n, "number of generators")->required()->check(CLI::Range(1, 62));
  maxdim_cmd->add_flag("--certify", maxdim.certify, "confirm with an exhaustive family search (n <= 7)");
  add_search_flags(maxdim_cmd, maxdim.flags);

  SearchArgs search;
  auto* search_cmd = app.add_subcommand("search", "maximum intersecting families");
  search_cmd->add_option("--kind", search.kind, "odd, ekr or two-level")
      ->check(CLI::IsMember({"odd", "ekr", "two-level"}));
  search_cmd->add_option("--n", search.n, "ground set size")->required()->check(CLI::Range(1, 16));
  search_cmd->add_option("--k", search.k, "set size for ekr");
  search_cmd->add_option("--i", search.i, "lower level parameter for two-level");
  search_cmd->add_flag("--all", search.all, "list every maximum family");
  add_search_flags(search_cmd, search.flags);

  CanonicalArgs canonical;
  auto* canonical_cmd = app.add_subcommand("canonical", "a maximal commutative subalgebra of maximal dimension");
  canonical_cmd->add_option("--n", canonical.n, "number of generators")->required()->check(CLI::Range(1, 16));
  canonical_cmd->add_option("--l", canonical.l, "star element");
  canonical_cmd->add_option("--field", canonical.field, "rational or gf:p");

  VerifyArgs verify_args;
  auto* verify_cmd = app.add_subcommand("verify-paper", "run the acceptance checks");
  verify_cmd->add_option("--upto-n", verify_args.upto_n, "largest n exercised")->check(CLI::Range(1, 16));
  verify_cmd->add_option("--seed", verify_args.seed, "random seed");
  verify_cmd->add_option("--mutate", verify_args.mutate, "corrupt the input of the named check");
  verify_cmd->add_option("--only", verify_args.only, "run only checks whose anchor starts with this");
  verify_cmd->add_flag("--json", verify_args.json, "print the JSON report");
  verify_cmd->add_flag("--list", verify_args.list, "list the checks");
  verify_cmd->add_flag("--stats", verify_args.stats, "show timings");

  try {
    const auto protected_args = protect_negative_expressions(args);
    std::vector<std::string> reversed(protected_args.rbegin(), protected_args.rend());
    app.parse(reversed);
    if (eval_cmd->parsed()) return cmd_eval(eval, out);
    if (gamma_cmd->parsed()) return cmd_gamma(gamma_args, in, out, err);
    if (analyze_cmd->parsed()) return cmd_analyze(analyze_doc, in, out);
    if (maxdim_cmd->parsed()) return cmd_maxdim(maxdim, out, err);
    if (search_cmd->parsed()) return cmd_search(search, out);
    if (canonical_cmd->parsed()) return cmd_canonical(canonical, out);
    if (verify_cmd->parsed()) return cmd_verify(verify_args, out);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  } catch (const BudgetExceeded& e) {
    err << "budget exhausted: " << e.what() << " (best so far " << e.best_so_far() << ")\n";
    return kExitBudget;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const nlohmann::json::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace grassmann
