// recur: exponent-reduction engine for products of polynomial powers.
//
// Subcommands: reduce, classify, verify, selftest, rules. See README.md.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "recur/engine.hpp"
#include "recur/errors.hpp"
#include "recur/parse.hpp"
#include "recur/printer.hpp"
#include "recur/selftest.hpp"
#include "recur/verify.hpp"

namespace {

using namespace recur;

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorCode::SyntaxError, "cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

Window parse_window(const std::string& text) {
  auto comma = text.find(',');
  if (comma == std::string::npos)
    fail(ErrorCode::SyntaxError, "--window expects LO,HI");
  auto lo = Rat::parse(text.substr(0, comma));
  auto hi = Rat::parse(text.substr(comma + 1));
  if (!lo || !hi || *hi - *lo < Rat(1))
    fail(ErrorCode::SyntaxError, "--window expects rationals LO,HI with HI-LO >= 1");
  return Window{*lo, *hi};
}

struct Options {
  std::string expr;
  std::string var = "x";
  std::string window = "-1,0";
  std::string against;
  std::string rules_filter;
  std::string form_filter;
  std::string case_filter;
  std::string catalog_file;
  int max_steps = 512;
  int samples = 25;
  std::uint64_t seed = 42;
  bool json = false;
  bool trace = false;
  bool strict = false;
  bool do_export = false;
};

const Catalog& active_catalog(const Options& opt, std::optional<Catalog>& storage) {
  if (opt.catalog_file.empty()) return Catalog::builtin();
  storage = Catalog::load(read_file(opt.catalog_file));
  return *storage;
}

void print_result_human(const Integrand& input, const ReductionResult& r,
                        const std::string& var, bool trace) {
  std::cout << "input:     " << print_expr(input, var) << "\n";
  std::cout << "status:    "
            << (r.status == ReduceStatus::Terminal ? "terminal" : "obstructed") << "\n";
  if (!r.obstruction.empty()) std::cout << "reason:    " << r.obstruction << "\n";
  for (const AlgTerm& g : r.algebraic)
    std::cout << "algebraic: " << print_algterm(g, var) << "\n";
  for (const auto& [coeff, ig] : r.residuals)
    std::cout << "residual:  " << coeff.str() << " * INT(" << print_expr(ig, var) << ")\n";
  std::cout << "steps:     " << r.trace.size() << "\n";
  if (trace) {
    for (const Step& s : r.trace) {
      std::cout << "  step " << s.rule_id << " solve=" << s.solve_for
                << " scale=" << s.scale.str();
      for (const AlgTerm& g : s.alg_contribution)
        std::cout << " alg=" << print_algterm(g, var);
      if (!s.next_vanishes) std::cout << " next=" << print_expr(s.next, var);
      std::cout << "\n";
    }
  }
}

int run_reduce(const Options& opt) {
  std::optional<Catalog> storage;
  const Catalog& cat = active_catalog(opt, storage);
  Integrand input = parse_expr(opt.expr, opt.var);
  ReduceOptions ropts;
  ropts.window = parse_window(opt.window);
  ropts.max_steps = opt.max_steps;
  ReductionResult r = reduce(input, ropts, cat);
  if (opt.json)
    std::cout << serialize_result(input, r, opt.var) << "\n";
  else
    print_result_human(input, r, opt.var, opt.trace);
  if (opt.strict && r.status == ReduceStatus::Obstructed) return 1;
  return 0;
}

int run_classify(const Options& opt) {
  Integrand input = parse_expr(opt.expr, opt.var);
  FormClass fc = classify(input);
  std::cout << form_name(fc.tag) << ", case " << fc.profile.case_label;
  for (const auto& [name, value] : fc.profile.guard_values)
    std::cout << ", " << name << "=" << value.str();
  std::cout << "\n";
  return 0;
}

int run_verify(const Options& opt) {
  Integrand input = parse_expr(opt.expr, opt.var);
  ReductionResult r = load_result(read_file(opt.against), opt.var);
  VerifyReport report = verify_result(input, r);
  if (report.ok) {
    std::cout << "ok: reconstruction identity holds\n";
    return 0;
  }
  std::cout << "FAIL: nonzero residual\n";
  for (const auto& [name, p] : report.residual.numerators)
    if (!p.is_zero()) std::cout << "  " << name << ": " << print_poly(p, opt.var) << "\n";
  return 1;
}

int run_selftest(const Options& opt) {
  std::optional<Catalog> storage;
  const Catalog& cat = active_catalog(opt, storage);
  std::vector<std::string> filter;
  if (!opt.rules_filter.empty() && opt.rules_filter != "all") {
    std::istringstream in(opt.rules_filter);
    std::string id;
    while (std::getline(in, id, ',')) filter.push_back(id);
  }
  SelftestReport report = selftest_catalog(cat, opt.samples, opt.seed, filter);
  for (const RuleReport& r : report.per_rule) {
    std::cout << r.id << " " << r.case_label << " " << r.samples << " "
              << (r.pass ? "ok" : "FAIL") << (r.detail.empty() ? "" : " " + r.detail)
              << "\n";
  }
  std::cout << report.passed << "/" << report.total << " ok\n";
  return report.ok() ? 0 : 1;
}

int run_rules(const Options& opt) {
  std::optional<Catalog> storage;
  const Catalog& cat = active_catalog(opt, storage);
  if (opt.do_export) {
    std::cout << cat.export_text();
    return 0;
  }
  int count = 0;
  for (const Rule& r : cat.rules()) {
    if (!opt.form_filter.empty() && opt.form_filter != form_name(r.form)) continue;
    if (!opt.case_filter.empty() && opt.case_filter != r.case_label) continue;
    std::cout << r.id << "  form=" << form_name(r.form) << " case=" << r.case_label
              << " shift=(";
    for (std::size_t k = 0; k < r.shift.size(); ++k)
      std::cout << (k ? "," : "") << r.shift[k];
    std::cout << ")" << (r.reversible ? " reversible" : "") << "\n";
    ++count;
  }
  std::cout << count << " rules\n";
  if (!opt.form_filter.empty() && count == 0) {
    auto form = form_from_name(opt.form_filter);
    if (form && !opt.case_filter.empty())
      fail(ErrorCode::NoRuleForCase,
           opt.form_filter + " has no case " + opt.case_filter);
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"two-term recurrence reduction of power-product integrals"};
  app.require_subcommand(1);
  Options opt;

  auto add_catalog = [&](CLI::App* cmd) {
    cmd->add_option("--catalog", opt.catalog_file, "load the rule catalog from a file");
  };

  CLI::App* reduce_cmd = app.add_subcommand("reduce", "reduce an integrand");
  reduce_cmd->add_option("expr", opt.expr, "integrand expression")->required();
  reduce_cmd->add_option("--var", opt.var, "integration variable name");
  reduce_cmd->add_option("--max-steps", opt.max_steps, "step limit")
      ->check(CLI::PositiveNumber);
  reduce_cmd->add_option("--window", opt.window, "target interval LO,HI (meaning (LO,HI])");
  reduce_cmd->add_flag("--json", opt.json, "emit the JSON result");
  reduce_cmd->add_flag("--trace", opt.trace, "print the step trace");
  reduce_cmd->add_flag("--strict", opt.strict, "exit nonzero when obstructed");
  add_catalog(reduce_cmd);

  CLI::App* classify_cmd = app.add_subcommand("classify", "form and degeneracy case");
  classify_cmd->add_option("expr", opt.expr, "integrand expression")->required();
  classify_cmd->add_option("--var", opt.var, "integration variable name");

  CLI::App* verify_cmd = app.add_subcommand("verify", "check a saved reduction");
  verify_cmd->add_option("expr", opt.expr, "original integrand")->required();
  verify_cmd->add_option("--against", opt.against, "result JSON file")->required();
  verify_cmd->add_option("--var", opt.var, "integration variable name");

  CLI::App* selftest_cmd = app.add_subcommand("selftest", "randomized catalog check");
  selftest_cmd->add_option("--rules", opt.rules_filter, "comma-separated rule ids or 'all'");
  selftest_cmd->add_option("--samples", opt.samples, "instantiations per rule")
      ->check(CLI::PositiveNumber);
  selftest_cmd->add_option("--seed", opt.seed, "random seed");
  add_catalog(selftest_cmd);

  CLI::App* rules_cmd = app.add_subcommand("rules", "list catalog entries");
  rules_cmd->add_option("--form", opt.form_filter, "filter by form tag");
  rules_cmd->add_option("--case", opt.case_filter, "filter by case label");
  rules_cmd->add_flag("--export", opt.do_export, "dump the catalog in its text format");
  add_catalog(rules_cmd);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (reduce_cmd->parsed()) return run_reduce(opt);
    if (classify_cmd->parsed()) return run_classify(opt);
    if (verify_cmd->parsed()) return run_verify(opt);
    if (selftest_cmd->parsed()) return run_selftest(opt);
    if (rules_cmd->parsed()) return run_rules(opt);
  } catch (const recur::Error& e) {
    std::cerr << e.machine_line() << "\n";
    return 1;
  }
  return 2;
}
