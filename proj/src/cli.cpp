#include "bforge/cli.hpp"

#include <algorithm>
#include <iostream>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "bforge/binomial_system.hpp"
#include "bforge/borel.hpp"
#include "bforge/chain.hpp"
#include "bforge/groebner.hpp"
#include "bforge/hilbert.hpp"
#include "bforge/io.hpp"
#include "bforge/symbolic.hpp"
#include "bforge/unipotent.hpp"
#include "bforge/verify.hpp"

namespace bforge {

namespace {

struct GlobalOptions {
  std::optional<std::string> config_path;
  std::optional<std::uint64_t> seed;
  std::optional<int> bound;
  std::optional<long> entropy_bound;
  std::optional<int> retries;
  std::optional<long> spair_budget;
  std::optional<long> enum_budget;
};

// Precedence per knob: command-line flag, then environment (seed only),
// then config file, then the built-in default.
WorkspaceConfig resolve_config(const GlobalOptions& g) {
  WorkspaceConfig cfg = load_config(g.config_path);
  if (g.seed) cfg.seed = *g.seed;
  if (g.bound) cfg.bound = *g.bound;
  if (g.entropy_bound) cfg.entropy_bound = *g.entropy_bound;
  if (g.retries) cfg.retries = *g.retries;
  if (g.spair_budget) cfg.spair_budget = *g.spair_budget;
  if (g.enum_budget) cfg.enum_budget = *g.enum_budget;
  return cfg;
}

void add_global_options(CLI::App& app, GlobalOptions& g) {
  app.add_option("--config", g.config_path,
                 "path to a key=value workspace config");
  app.add_option("--seed", g.seed, "seed for randomized choices");
  app.add_option("--bound", g.bound, "degree bound for tabulated output");
  app.add_option("--entropy-bound", g.entropy_bound,
                 "largest coefficient drawn for generic changes");
  app.add_option("--retries", g.retries, "certification retry attempts");
  app.add_option("--spair-budget", g.spair_budget,
                 "maximum S-pair reductions per basis computation");
  app.add_option("--enum-budget", g.enum_budget,
                 "maximum states visited per enumeration");
}

std::pair<Exponent, Exponent> parse_pair(const std::string& a,
                                         const std::string& b) {
  const Exponent ea = parse_exponent_csv(a);
  const Exponent eb = parse_exponent_csv(b, ea.width());
  return {ea, eb};
}

BinomialSystem system_from_file(const std::string& path) {
  const RawSystem raw = parse_system_file(path);
  return BinomialSystem(raw.n, raw.d, raw.a, raw.c, raw.rho);
}

void print_checks(std::ostream& out, const std::vector<Check>& items) {
  for (const Check& c : items) {
    out << (c.ok ? "ok   " : "FAIL ") << c.id;
    if (!c.detail.empty()) out << ": " << c.detail;
    out << "\n";
  }
}

int run_gb(const std::string& path, const std::string& order_name,
           const WorkspaceConfig& cfg, std::ostream& out) {
  const ParsedIdeal parsed = parse_ideal_file(path);
  const TermOrder order = order_from_name(order_name, parsed.ideal.width());
  std::vector<Polynomial> basis =
      parsed.ideal.reduced_basis(order, cfg.limits());
  out << ideal_to_text(Ideal(parsed.ideal.width(), std::move(basis)),
                       parsed.ring);
  return 0;
}

int run_init(const std::string& path, const std::string& order_name,
             const WorkspaceConfig& cfg, std::ostream& out) {
  const ParsedIdeal parsed = parse_ideal_file(path);
  const TermOrder order = order_from_name(order_name, parsed.ideal.width());
  out << monomial_ideal_to_text(
      parsed.ideal.initial_ideal(order, cfg.limits()), parsed.ring);
  return 0;
}

int run_gin(const std::string& path, const std::string& order_name,
            const WorkspaceConfig& cfg, std::ostream& out) {
  const ParsedIdeal parsed = parse_ideal_file(path);
  const TermOrder order = order_from_name(order_name, parsed.ideal.width());
  out << monomial_ideal_to_text(
      gin(parsed.ideal, order, cfg.seed, cfg.limits()), parsed.ring);
  return 0;
}

int run_sat(const std::string& path, const WorkspaceConfig& cfg,
            std::ostream& out) {
  const ParsedIdeal parsed = parse_ideal_file(path);
  out << ideal_to_text(saturate(parsed.ideal, cfg.seed, cfg.limits()),
                       parsed.ring);
  return 0;
}

int run_hilbert(const std::string& path, const WorkspaceConfig& cfg,
                std::ostream& out) {
  const ParsedIdeal parsed = parse_ideal_file(path);
  const Limits lim = cfg.limits();
  const HilbertData data =
      hilbert_function_ideal(parsed.ideal, cfg.bound, lim);
  const MonomialIdeal initial =
      parsed.ideal.initial_ideal(TermOrder::rlex(parsed.ideal.width()), lim);
  out << hilbert_to_text(data, hilbert_polynomial(initial, lim));
  return 0;
}

int run_borel_check(const std::string& a, const std::string& b,
                    std::ostream& out) {
  const auto [ea, eb] = parse_pair(a, b);
  const bool ge = borel_ge(ea, eb);
  out << (ge ? "comparable" : "incomparable") << "\n";
  return ge ? 0 : 1;
}

int run_borel_witness(const std::string& a, const std::string& b,
                      const WorkspaceConfig& cfg, std::ostream& out) {
  const auto [ea, eb] = parse_pair(a, b);
  const BorelWitness witness = borel_witness(ea, eb);
  if (!witness.comparable) {
    throw Error(ErrorCode::NotComparable,
                ea.to_string() + " does not dominate " + eb.to_string());
  }
  out << witness.matrix.to_string() << "\n";
  out << "prefix sums:";
  for (int v : witness.alphas) out << " " << v;
  out << "\nrepair steps: " << witness.repair_steps << "\n";
  const auto all = enumerate_U(ea, eb, cfg.limits());
  out << "matrices: " << all.size() << "\n";
  return 0;
}

int run_borel_closure(const std::string& path, std::ostream& out) {
  const std::string text = read_file(path);
  std::set<Exponent> rows;
  int width = -1;
  std::istringstream in(text);
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    const auto begin = line.find_first_not_of(" \t\r");
    if (begin == std::string::npos) continue;
    const auto end = line.find_last_not_of(" \t\r");
    const std::string body = line.substr(begin, end - begin + 1);
    Exponent e = parse_exponent_csv(body, width);
    if (width < 0) width = e.width();
    rows.insert(std::move(e));
  }
  if (rows.empty()) {
    throw Error(ErrorCode::Parse, path + ": no exponent rows");
  }
  std::vector<Exponent> closure;
  for (const Exponent& e : borel_closure(rows)) closure.push_back(e);
  const TermOrder order = TermOrder::rlex(width);
  std::sort(closure.begin(), closure.end(),
            [&](const Exponent& x, const Exponent& y) {
              return order.greater(x, y);
            });
  for (const Exponent& e : closure) out << exponent_to_csv(e) << "\n";
  return 0;
}

int run_alpha(const std::string& a, const std::string& b,
              const WorkspaceConfig& cfg, std::ostream& out) {
  const auto [ea, eb] = parse_pair(a, b);
  const Polynomial alpha = alpha_coefficient(ea, eb, cfg.limits());
  out << polynomial_to_string(alpha, symbolic_ring(ea.width())) << "\n";
  return 0;
}

int run_bsys_validate(const std::string& path, std::ostream& out) {
  const RawSystem raw = parse_system_file(path);
  const SystemReport report =
      validate_system(raw.n, raw.d, raw.a, raw.c, raw.rho);
  print_checks(out, report.items);
  if (report.normalization_hint) {
    out << "hint: " << *report.normalization_hint << "\n";
  }
  return report.all_ok() ? 0 : 1;
}

int run_bsys_good(const std::string& path, std::ostream& out) {
  const BinomialSystem sys = system_from_file(path);
  const bool good = sys.is_good();
  out << (good ? "good" : "not good") << "\n";
  if (!sys.binomial_set().empty()) {
    out << "pivot: variable " << sys.pivot() << ", move value "
        << sys.pivot_value() << "\n";
  }
  return good ? 0 : 1;
}

int run_bsys_formulas(const std::string& path, const WorkspaceConfig& cfg,
                      std::ostream& out) {
  const BinomialSystem sys = system_from_file(path);
  const GbFormulas formulas = gb_formulas(sys, cfg.limits(), true);
  const NamedRing ring = default_ring(sys.width());
  out << "# reduced basis\n"
      << ideal_to_text(Ideal(sys.width(), formulas.basis), ring);
  out << "# initial ideal\n" << monomial_ideal_to_text(formulas.initial, ring);
  out << "# saturated basis\n"
      << ideal_to_text(Ideal(sys.width(), formulas.saturated_basis), ring);
  out << "# saturation\n" << ideal_to_text(formulas.saturated, ring);
  return 0;
}

int run_bsys_filtration(const std::string& path, int bound,
                        const WorkspaceConfig& cfg, std::ostream& out) {
  const BinomialSystem sys = system_from_file(path);
  const Filtration filtration = build_filtration(sys, bound, cfg.limits());
  const NamedRing ring = default_ring(sys.width());
  for (size_t j = 0; j < filtration.steps.size(); ++j) {
    out << "# step " << j
        << (filtration.binomial_branch[j] ? " (binomial section)"
                                          : " (monomial section)")
        << "\n"
        << ideal_to_text(filtration.steps[j], ring);
  }
  return 0;
}

int run_bsys_check(const std::string& path, int bound,
                   const WorkspaceConfig& cfg, std::ostream& out) {
  const BinomialSystem sys = system_from_file(path);
  const FiltrationReport report = check_filtration(sys, bound, cfg.limits());
  print_checks(out, report.items);
  int passed = 0;
  for (const Check& c : report.items) passed += c.ok ? 1 : 0;
  out << "filtration: " << (report.all_ok() ? "PASS" : "FAIL") << " ("
      << passed << "/" << report.items.size() << " checks)\n";
  return report.all_ok() ? 0 : 1;
}

int run_chain(const std::string& path, const WorkspaceConfig& cfg,
              std::ostream& out) {
  const std::vector<ChainEdge> edges = load_chain_file(path);
  const ChainReport report =
      verify_chain(edges, cfg.bound, cfg.seed, cfg.limits());
  for (const ChainEdgeResult& e : report.edges) {
    out << (e.ok() ? "ok   " : "FAIL ") << e.label << " ["
        << relation_name(e.relation) << "] annotation " << e.annotation
        << (e.annotation_ok ? "" : " (unexpected)")
        << (e.ideal_matches ? "" : " (ideal mismatch)") << "\n";
  }
  out << "chain: " << (report.all_ok() ? "PASS" : "FAIL") << " ("
      << report.edges.size() << " edges)\n";
  return report.all_ok() ? 0 : 1;
}

int run_verify(const std::string& suite, const WorkspaceConfig& cfg,
               std::ostream& out) {
  const SuiteReport report = run_suite(suite, cfg);
  out << report.to_string();
  return report.exit_code();
}

int dispatch(const std::vector<std::string>& args, std::ostream& out,
             std::ostream& err) {
  CLI::App app{"exact toolkit for Borel orders, Groebner bases and "
               "deformation checks"};
  app.name("borel-forge");
  app.fallthrough();
  app.require_subcommand(1);

  GlobalOptions g;
  add_global_options(app, g);

  std::string file;
  std::string order_name = "rlex";
  std::string lhs, rhs;
  std::string suite = "all";
  int filtration_bound = 0;

  CLI::App* gb = app.add_subcommand("gb", "reduced Groebner basis of a file");
  gb->add_option("file", file)->required();
  gb->add_option("--order", order_name, "term order (rlex or hlex)");

  CLI::App* init = app.add_subcommand("init", "initial ideal of a file");
  init->add_option("file", file)->required();
  init->add_option("--order", order_name, "term order (rlex or hlex)");

  CLI::App* gin_cmd =
      app.add_subcommand("gin", "certified generic initial ideal");
  gin_cmd->add_option("file", file)->required();
  gin_cmd->add_option("--order", order_name, "term order (rlex or hlex)");

  CLI::App* sat =
      app.add_subcommand("sat", "saturation by the last variable");
  sat->add_option("file", file)->required();

  CLI::App* hilbert =
      app.add_subcommand("hilbert", "Hilbert function and polynomial");
  hilbert->add_option("file", file)->required();

  CLI::App* borel = app.add_subcommand("borel", "Borel order utilities");
  borel->require_subcommand(1);
  CLI::App* borel_check =
      borel->add_subcommand("check", "decide exponent domination");
  borel_check->add_option("a", lhs, "dominating exponent, comma separated")
      ->required();
  borel_check->add_option("b", rhs, "dominated exponent")->required();
  CLI::App* borel_witness_cmd =
      borel->add_subcommand("witness", "matrix witness for domination");
  borel_witness_cmd->add_option("a", lhs)->required();
  borel_witness_cmd->add_option("b", rhs)->required();
  CLI::App* borel_closure_cmd =
      borel->add_subcommand("closure", "Borel closure of listed exponents");
  borel_closure_cmd->add_option("file", file)->required();

  CLI::App* alpha =
      app.add_subcommand("alpha", "structure coefficient of a change of basis");
  alpha->add_option("a", lhs)->required();
  alpha->add_option("b", rhs)->required();

  CLI::App* bsys = app.add_subcommand("bsys", "binomial system utilities");
  bsys->require_subcommand(1);
  CLI::App* bsys_validate =
      bsys->add_subcommand("validate", "shape and closedness report");
  bsys_validate->add_option("file", file)->required();
  CLI::App* bsys_good =
      bsys->add_subcommand("good", "report whether the system is good");
  bsys_good->add_option("file", file)->required();
  CLI::App* bsys_formulas =
      bsys->add_subcommand("formulas", "closed-form basis and saturation");
  bsys_formulas->add_option("file", file)->required();
  CLI::App* bsys_filtration =
      bsys->add_subcommand("filtration", "print the section filtration");
  bsys_filtration->add_option("file", file)->required();
  bsys_filtration->add_option("--steps-bound", filtration_bound,
                              "degree bound for dimension tables");
  CLI::App* bsys_check =
      bsys->add_subcommand("check", "verify the filtration lemmas");
  bsys_check->add_option("file", file)->required();
  bsys_check->add_option("--steps-bound", filtration_bound,
                         "degree bound for dimension tables");

  CLI::App* chain =
      app.add_subcommand("chain", "verify a deformation chain file");
  chain->add_option("file", file)->required();

  CLI::App* verify = app.add_subcommand("verify", "run a verification suite");
  verify->add_option("suite", suite,
                     "one of: " + [] {
                       std::string names;
                       for (const std::string& s : suite_names()) {
                         if (!names.empty()) names += ", ";
                         names += s;
                       }
                       return names;
                     }());

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      return app.exit(e, out, err);
    }
    err << "error (Parse): " << e.what() << "\n";
    return 2;
  }

  const WorkspaceConfig cfg = resolve_config(g);
  if (gb->parsed()) return run_gb(file, order_name, cfg, out);
  if (init->parsed()) return run_init(file, order_name, cfg, out);
  if (gin_cmd->parsed()) return run_gin(file, order_name, cfg, out);
  if (sat->parsed()) return run_sat(file, cfg, out);
  if (hilbert->parsed()) return run_hilbert(file, cfg, out);
  if (borel->parsed()) {
    if (borel_check->parsed()) return run_borel_check(lhs, rhs, out);
    if (borel_witness_cmd->parsed())
      return run_borel_witness(lhs, rhs, cfg, out);
    if (borel_closure_cmd->parsed()) return run_borel_closure(file, out);
  }
  if (alpha->parsed()) return run_alpha(lhs, rhs, cfg, out);
  if (bsys->parsed()) {
    if (bsys_validate->parsed()) return run_bsys_validate(file, out);
    if (bsys_good->parsed()) return run_bsys_good(file, out);
    if (bsys_formulas->parsed()) return run_bsys_formulas(file, cfg, out);
    if (bsys_filtration->parsed())
      return run_bsys_filtration(file, filtration_bound, cfg, out);
    if (bsys_check->parsed())
      return run_bsys_check(file, filtration_bound, cfg, out);
  }
  if (chain->parsed()) return run_chain(file, cfg, out);
  if (verify->parsed()) return run_verify(suite, cfg, out);
  err << "error (Parse): no subcommand selected\n";
  return 2;
}

}  // namespace

int cli_run(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  try {
    return dispatch(args, out, err);
  } catch (const Error& e) {
    err << "error (" << error_code_name(e.code()) << "): " << e.what()
        << "\n";
    return e.exit_code();
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
}

int cli_run(int argc, const char* const* argv) {
  std::vector<std::string> args;
  for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
  return cli_run(args, std::cout, std::cerr);
}

}  // namespace bforge
