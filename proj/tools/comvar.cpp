#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "comvar/catalog.hpp"
#include "comvar/character.hpp"
#include "comvar/errors.hpp"
#include "comvar/hilbert.hpp"
#include "comvar/ideal_io.hpp"
#include "comvar/oracle.hpp"
#include "comvar/scenario.hpp"

using namespace comvar;
using nlohmann::json;

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitBudget = 3;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Options shared by the commands that read an ideal file.
struct FileOptions {
  std::string path;
  std::string field;
  std::string order;
  std::uint64_t budget_pairs = 1'000'000;
  double budget_seconds = 0.0;
  bool json = false;

  void attach(CLI::App* cmd) {
    cmd->add_option("file", path, "Ideal file")->required();
    cmd->add_option("--field", field, "Override the file's field (q, p=<prime>)");
    cmd->add_option("--order", order, "Override the file's order (lex, grevlex, block:<k>)");
    cmd->add_option("--budget-pairs", budget_pairs, "Maximum S-pairs reduced (0 = no cap)");
    cmd->add_option("--budget-seconds", budget_seconds, "Wall-clock cap in seconds (0 = none)");
    cmd->add_flag("--json", json, "Print JSON");
  }

  IdealPresentation load() const {
    IdealPresentation I = read_ideal_file(path);
    if (field.empty() && order.empty()) return I;
    FieldSpec f = field.empty() ? I.ring.field() : FieldSpec::parse(field);
    MonomialOrder o = order.empty() ? I.ring.order() : MonomialOrder::parse(order);
    return recast(I, f, o);
  }

  GbBudget budget() const { return GbBudget{budget_pairs, budget_seconds}; }
};

/// Options shared by the verify commands.
struct VerifyOptions {
  std::string config_path;
  std::optional<std::string> field;
  std::optional<std::uint64_t> seed;
  std::optional<std::uint64_t> budget_pairs;
  std::optional<double> budget_seconds;
  std::optional<int> r;
  std::optional<unsigned> workers;
  bool include_heavy = false;
  bool certify_q = false;
  bool no_timing = false;
  std::string out;

  void attach(CLI::App* cmd) {
    cmd->add_option("--config", config_path, "key=value configuration file");
    cmd->add_option("--field", field, "Field for Gröbner scenarios (q, p=<prime>)");
    cmd->add_option("--seed", seed, "Base seed for oracles");
    cmd->add_option("--budget-pairs", budget_pairs, "Pair cap per Gröbner computation");
    cmd->add_option("--budget-seconds", budget_seconds, "Time cap per Gröbner computation");
    cmd->add_option("--r", r, "Run only this r");
    cmd->add_option("--workers", workers, "Scenarios run concurrently");
    cmd->add_flag("--include-heavy", include_heavy, "Also run heavy scenarios");
    cmd->add_flag("--certify-q", certify_q, "Rerun passing scenarios over Q");
    cmd->add_flag("--no-timing", no_timing, "Omit timing fields");
    cmd->add_option("--out", out, "Write the JSON report here instead of stdout");
  }

  Config config() const {
    Config c = config_path.empty() ? Config{} : Config::load(config_path);
    if (field) c.set("field", *field);
    if (seed) c.seed = *seed;
    if (budget_pairs) c.budget_pairs = *budget_pairs;
    if (budget_seconds) c.set("budget_seconds", std::to_string(*budget_seconds));
    if (r) c.set("r", std::to_string(*r));
    if (workers) c.set("workers", std::to_string(*workers));
    if (include_heavy) c.include_heavy = true;
    if (certify_q) c.certify_q = true;
    return c;
  }

  void emit(const json& j) const {
    if (out.empty()) {
      std::cout << j.dump(2) << "\n";
      return;
    }
    std::ofstream f(out);
    if (!f) throw UsageError("cannot write " + out);
    f << j.dump(2) << "\n";
  }
};

json stats_json(const GbStats& s) {
  return {{"pairs_reduced", s.pairs_reduced},
          {"pairs_skipped", s.pairs_skipped},
          {"zero_reductions", s.zero_reductions},
          {"basis_size", s.basis_size},
          {"max_basis_size", s.max_basis_size}};
}

std::string basis_text(const GroebnerBasis& G) {
  IdealPresentation out(G.ring(), G.basis());
  return write_ideal_text(out);
}

int print_bool(bool value, bool as_json, const char* key) {
  if (as_json) {
    std::cout << json{{key, value}}.dump() << "\n";
  } else {
    std::cout << (value ? "true" : "false") << "\n";
  }
  return value ? kExitPass : kExitFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"comvar: commuting-variety ideals, Gröbner bases and verification scenarios"};
  app.require_subcommand(1);
  int code = kExitPass;

  // ideal build
  auto* ideal = app.add_subcommand("ideal", "Work with ideal files");
  ideal->require_subcommand(1);
  auto* build_cmd = ideal->add_subcommand("build", "Write the ideal of a catalog variety");
  std::string build_id, build_field = "p=32003", build_order = "grevlex", build_out;
  build_cmd->add_option("variety", build_id, "Variety id, e.g. sl2-nilcomm:r=3")->required();
  build_cmd->add_option("--field", build_field, "q or p=<prime>");
  build_cmd->add_option("--order", build_order, "lex, grevlex or block:<k>");
  build_cmd->add_option("-o,--out", build_out, "Output file (default stdout)");
  build_cmd->callback([&] {
    auto I = build(VarietyId::parse(build_id), FieldSpec::parse(build_field));
    I = recast(I, I.ring.field(), MonomialOrder::parse(build_order));
    if (build_out.empty()) {
      write_ideal(std::cout, I);
    } else {
      std::ofstream f(build_out);
      if (!f) throw UsageError("cannot write " + build_out);
      write_ideal(f, I);
    }
  });

  FileOptions gb_opts, dim_opts, hil_opts, mem_opts, rad_opts;
  auto* gb_cmd = app.add_subcommand("gb", "Reduced Gröbner basis of an ideal file");
  gb_opts.attach(gb_cmd);
  gb_cmd->callback([&] {
    const auto I = gb_opts.load();
    const auto G = buchberger(I, gb_opts.budget());
    if (gb_opts.json) {
      json basis = json::array();
      for (const auto& g : G.basis()) basis.push_back(g.to_string());
      std::cout << json{{"ring", G.ring().names()},
                        {"field", G.ring().field().to_string()},
                        {"order", G.ring().order().to_string()},
                        {"basis", basis},
                        {"stats", stats_json(G.stats())},
                        {"timing", {{"seconds", G.stats().seconds}}}}
                       .dump(2)
                << "\n";
    } else {
      std::cout << basis_text(G);
      std::cerr << "pairs " << G.stats().pairs_reduced << ", basis " << G.basis().size()
                << ", " << G.stats().seconds << " s\n";
    }
  });

  auto* dim_cmd = app.add_subcommand("dim", "Krull dimension of the quotient ring");
  dim_opts.attach(dim_cmd);
  dim_cmd->callback([&] {
    const long d = krull_dimension(dim_opts.load(), dim_opts.budget());
    if (dim_opts.json) {
      std::cout << json{{"dimension", d}}.dump() << "\n";
    } else {
      std::cout << d << "\n";
    }
  });

  std::size_t hil_terms = 10;
  auto* hil_cmd = app.add_subcommand("hilbert", "Hilbert series of a homogeneous ideal");
  hil_opts.attach(hil_cmd);
  hil_cmd->add_option("-N,--terms", hil_terms, "Number of series coefficients");
  hil_cmd->callback([&] {
    auto I = hil_opts.load();
    I = recast(I, I.ring.field(), MonomialOrder::grevlex());
    const auto h = hilbert_series(buchberger(I, hil_opts.budget()), hil_terms);
    if (hil_opts.json) {
      std::cout << json{{"numerator", h.numerator},
                        {"denominator_power", h.denominator_power},
                        {"dimension", h.dimension},
                        {"coefficients", h.coefficients}}
                       .dump(2)
                << "\n";
    } else {
      std::cout << "numerator";
      for (auto c : h.numerator) std::cout << ' ' << c;
      std::cout << "\ndenominator_power " << h.denominator_power << "\ndimension "
                << h.dimension << "\ncoefficients";
      for (auto c : h.coefficients) std::cout << ' ' << c;
      std::cout << "\n";
    }
  });

  std::string mem_poly, rad_poly;
  auto* mem_cmd = app.add_subcommand("member", "Ideal membership (exit 0 member, 1 not)");
  mem_opts.attach(mem_cmd);
  mem_cmd->add_option("polynomial", mem_poly, "Polynomial in the file's variables")->required();
  mem_cmd->callback([&] {
    const auto I = mem_opts.load();
    const auto f = parse_polynomial(I.ring, mem_poly);
    code = print_bool(ideal_member(f, I, mem_opts.budget()), mem_opts.json, "member");
  });

  auto* rad_cmd =
      app.add_subcommand("radical-member", "Radical membership (exit 0 member, 1 not)");
  rad_opts.attach(rad_cmd);
  rad_cmd->add_option("polynomial", rad_poly, "Polynomial in the file's variables")->required();
  rad_cmd->callback([&] {
    const auto I = rad_opts.load();
    const auto f = parse_polynomial(I.ring, rad_poly);
    code = print_bool(radical_member(f, I, rad_opts.budget()), rad_opts.json, "radical_member");
  });

  // oracle
  auto* oracle = app.add_subcommand("oracle", "Geometric oracles on parametrized varieties");
  oracle->require_subcommand(1);
  std::string o_id;
  std::uint64_t o_seed = 1;
  int o_trials = 3, o_degree = 0;
  std::size_t o_count = 10, o_samples = 0;
  auto* o_dim = oracle->add_subcommand("dim", "Jacobian-rank dimension, two seeds");
  o_dim->add_option("variety", o_id, "Variety id")->required();
  o_dim->add_option("--trials", o_trials, "Random parameter points per seed");
  o_dim->add_option("--seed", o_seed, "Seed (the second seed is seed + 1)");
  o_dim->callback([&] {
    const auto id = VarietyId::parse(o_id);
    const auto a = jacobian_rank_dimension(id, o_trials, o_seed);
    const auto b = jacobian_rank_dimension(id, o_trials, o_seed + 1);
    std::cout << json{{"variety", id.to_string()},
                      {"dimension", a},
                      {"second_seed_dimension", b},
                      {"seeds", {o_seed, o_seed + 1}},
                      {"agree", a == b}}
                     .dump(2)
              << "\n";
    if (a != b) code = kExitFail;
  });
  auto* o_hf = oracle->add_subcommand("hf", "Hilbert function by evaluation rank");
  o_hf->add_option("variety", o_id, "Variety id")->required();
  o_hf->add_option("-n,--degree", o_degree, "Degree")->required();
  o_hf->add_option("--samples", o_samples, "Sample cap (0 = automatic)");
  o_hf->add_option("--seed", o_seed, "Seed (the second seed is seed + 1)");
  o_hf->callback([&] {
    const auto id = VarietyId::parse(o_id);
    json j{{"variety", id.to_string()}, {"degree", o_degree}, {"seeds", {o_seed, o_seed + 1}}};
    try {
      j["value"] = hilbert_function_by_evaluation(id, o_degree, o_samples, o_seed);
      j["agree"] = true;
    } catch (const OracleDisagreement& e) {
      j["value"] = nullptr;
      j["values"] = {e.first(), e.second()};
      j["agree"] = false;
      code = kExitFail;
    }
    std::cout << j.dump(2) << "\n";
  });
  auto* o_sample = oracle->add_subcommand("sample", "Seeded points on the variety");
  o_sample->add_option("variety", o_id, "Variety id")->required();
  o_sample->add_option("--count", o_count, "Number of points");
  o_sample->add_option("--seed", o_seed, "Seed");
  o_sample->callback([&] {
    std::cout << samples_to_json(sample(VarietyId::parse(o_id), o_count, o_seed)) << "\n";
  });

  // charseries
  int cs_r = 1, cs_n = 8;
  bool cs_json = false;
  auto* cs = app.add_subcommand("charseries", "Character series P_r(n) chi(n alpha)");
  cs->add_option("-r", cs_r, "Number of tuples")->required()->check(CLI::PositiveNumber);
  cs->add_option("-N", cs_n, "Top degree")->required()->check(CLI::NonNegativeNumber);
  cs->add_flag("--json", cs_json, "Print JSON");
  cs->callback([&] {
    const auto series = character_series(cs_r, cs_n);
    json rows = json::array();
    for (int n = 0; n <= cs_n; ++n) {
      const auto& ch = series.degrees[n];
      json weights = json::object();
      for (const auto& [w, m] : ch.multiplicities) weights[std::to_string(w)] = m;
      rows.push_back({{"degree", n},
                      {"partitions", partition_count(cs_r, n)},
                      {"dimension", ch.dimension()},
                      {"weights", weights}});
    }
    if (cs_json) {
      std::cout << json{{"r", cs_r}, {"degrees", rows}}.dump(2) << "\n";
      return;
    }
    std::cout << "degree\tP_r(n)\tdim\tweights\n";
    for (const auto& row : rows) {
      std::cout << row["degree"] << '\t' << row["partitions"] << '\t' << row["dimension"] << '\t';
      bool first = true;
      for (const auto& [w, m] : series.degrees[row["degree"].get<int>()].multiplicities) {
        std::cout << (first ? "" : " ") << w << ':' << m;
        first = false;
      }
      std::cout << '\n';
    }
  });

  // verify
  auto* verify = app.add_subcommand("verify", "Run verification scenarios");
  verify->require_subcommand(1);
  VerifyOptions run_opts, suite_opts;
  std::string run_id, suite_filter;
  auto* v_run = verify->add_subcommand("run", "Run one scenario");
  v_run->add_option("id", run_id, "Scenario id")->required();
  run_opts.attach(v_run);
  v_run->callback([&] {
    const Config config = run_opts.config();
    if (!find_scenario(run_id)) throw UsageError("unknown scenario '" + run_id + "'");
    const Report rep = run_scenario(run_id, config);
    run_opts.emit(rep.to_json(!run_opts.no_timing));
    code = exit_code_for(rep);
  });
  auto* v_suite = verify->add_subcommand("suite", "Run every scenario matching a glob filter");
  v_suite->add_option("filter", suite_filter, "Glob over scenario ids, e.g. 'dim.*'");
  suite_opts.attach(v_suite);
  v_suite->callback([&] {
    const Config config = suite_opts.config();
    const auto result = run_suite(suite_filter, config);
    for (const auto& w : result.warnings) std::cerr << "warning: " << w << "\n";
    suite_opts.emit(suite_to_json(result, config, !suite_opts.no_timing));
    code = result.exit_code;
  });
  bool audit_json = false;
  auto* v_audit = verify->add_subcommand("audit", "List acceptance criteria and their scenarios");
  v_audit->add_flag("--json", audit_json, "Print JSON");
  auto* v_list = verify->add_subcommand("list", "List registered scenarios");
  v_list->callback([&] {
    for (const auto& s : registry()) {
      std::cout << s.id << (s.heavy ? " [heavy]" : "") << "\t" << s.claim << "\n";
    }
  });
  v_audit->callback([&] {
    const auto entries = audit();
    bool missing = false;
    json out = json::array();
    for (const auto& e : entries) {
      if (e.scenarios.empty()) missing = true;
      out.push_back({{"criterion", e.criterion}, {"summary", e.summary}, {"scenarios", e.scenarios}});
    }
    if (audit_json) {
      std::cout << out.dump(2) << "\n";
    } else {
      for (const auto& e : entries) {
        std::cout << e.criterion << ". " << e.summary << "\n   ";
        if (e.scenarios.empty()) std::cout << " NO SCENARIO";
        for (const auto& s : e.scenarios) std::cout << ' ' << s;
        std::cout << "\n";
      }
    }
    code = missing ? kExitFail : kExitPass;
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  } catch (const BudgetExceeded& e) {
    std::cerr << "budget exceeded: " << e.what() << "\n";
    return kExitBudget;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const CharacteristicError& e) {
    std::cerr << "characteristic error: " << e.what() << "\n";
    return kExitFail;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFail;
  }
  return code;
}
