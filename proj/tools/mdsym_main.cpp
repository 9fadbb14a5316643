#include <cstdio>
#include <exception>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "mdsym/classical.hpp"
#include "mdsym/congruence.hpp"
#include "mdsym/dedekind_sum.hpp"
#include "mdsym/higher_order.hpp"
#include "mdsym/moonshine.hpp"
#include "mdsym/verify.hpp"
#include "mdsym/words.hpp"

namespace {

using nlohmann::json;

int run_sum(const std::string& h, const std::string& k, bool as_json) {
  const mdsym::Int hi = mdsym::parse_int(h);
  const mdsym::Int ki = mdsym::parse_int(k);
  const mdsym::Rat s = mdsym::dedekind_sum(hi, ki);
  if (as_json)
    std::cout << json{{"value", s.str()}}.dump() << "\n";
  else
    std::cout << "s(" << hi.get_str() << "," << ki.get_str() << ") = " << s.str() << "\n";
  return 0;
}

int run_symbol(const std::string& group, const std::string& level, const std::string& cusp,
               const std::string& matrix, bool as_json) {
  const mdsym::ScaledMat m = mdsym::ScaledMat::parse(matrix);
  mdsym::Rat value;
  if (group == "sl2z") {
    value = mdsym::dedekind_symbol_sl2z(m);
  } else if (group == "gamma0") {
    const mdsym::Int n = mdsym::parse_int(level);
    value = cusp == "0" ? mdsym::dedekind_symbol_gamma0_cusp0(n, m)
                        : mdsym::dedekind_symbol_gamma0(n, m);
  } else if (group == "plus") {
    const mdsym::Int n = mdsym::parse_int(level);
    value = mdsym::dedekind_symbol_plus(n, m);
  } else {
    throw std::invalid_argument("unknown group '" + group + "' (sl2z|gamma0|plus)");
  }
  if (as_json)
    std::cout << json{{"value", value.str()}}.dump() << "\n";
  else
    std::cout << value.str() << "\n";
  return 0;
}

int run_star(const std::string& group, const std::string& cusp, const std::string& matrix,
             std::size_t budget, bool as_json) {
  const mdsym::GroupPreset* preset = mdsym::GroupPreset::by_name(group);
  if (!preset) throw std::invalid_argument("unknown group '" + group + "' (gamma0-11|gamma0-37plus)");
  const mdsym::ScaledMat m = mdsym::ScaledMat::parse(matrix);
  const mdsym::Word w = mdsym::solve_word(*preset, m, {budget});
  const mdsym::SymbolCusp at =
      cusp == "0" ? mdsym::SymbolCusp::zero : mdsym::SymbolCusp::infinity;
  const mdsym::AffineModZ v = mdsym::s_star(*preset, w, at);
  if (as_json)
    std::cout << json{{"value", v.str()}, {"mod", 1}}.dump() << "\n";
  else
    std::cout << v.str() << " (mod 1)\n";
  return 0;
}

int run_word(const std::string& group, const std::string& matrix, std::size_t budget,
             bool as_json) {
  const mdsym::GroupPreset* preset = mdsym::GroupPreset::by_name(group);
  if (!preset) throw std::invalid_argument("unknown group '" + group + "'");
  const mdsym::ScaledMat m = mdsym::ScaledMat::parse(matrix);
  const mdsym::Word w =
      group == "sl2z" ? mdsym::sl2z_word(m) : mdsym::solve_word(*preset, m, {budget});
  if (as_json)
    std::cout << json{{"word", mdsym::word_str(*preset, w)}}.dump() << "\n";
  else
    std::cout << mdsym::word_str(*preset, w) << "\n";
  return 0;
}

int run_verify(const std::string& suite, std::uint64_t seed, double tol, bool as_json) {
  if (suite != "numerics") throw std::invalid_argument("unknown suite '" + suite + "' (numerics)");
  const auto results = mdsym::run_numerics_suite(seed, tol);
  bool all_pass = true;
  json report = json::array();
  for (const auto& r : results) {
    all_pass = all_pass && r.pass;
    report.push_back({{"check", r.name}, {"max_residual", r.max_residual}, {"pass", r.pass}});
    if (!as_json)
      std::printf("%-28s max_residual=%.3e %s\n", r.name.c_str(), r.max_residual,
                  r.pass ? "pass" : "FAIL");
  }
  if (as_json) std::cout << report.dump() << "\n";
  if (!all_pass) {
    std::cerr << "failed checks:";
    for (const auto& r : results)
      if (!r.pass) std::cerr << " " << r.name;
    std::cerr << "\n";
    return 2;
  }
  return 0;
}

int run_presets(bool as_json) {
  const mdsym::GroupPreset* presets[] = {&mdsym::GroupPreset::sl2z(),
                                         &mdsym::GroupPreset::gamma0_11(),
                                         &mdsym::GroupPreset::gamma0_37plus()};
  if (as_json) {
    json arr = json::array();
    for (const auto* p : presets) arr.push_back(json::parse(p->to_json()));
    std::cout << arr.dump() << "\n";
    return 0;
  }
  for (const auto* p : presets) {
    std::cout << p->name() << "  level=" << p->level().get_str()
              << "  volume=" << p->group_data().volume_over_pi.str() << "*pi\n";
    for (const auto& g : p->generators()) {
      std::cout << "  " << g.name << " = " << g.mat.str() << "  S=" << g.s_value.str();
      if (p->has_higher_order()) {
        std::cout << "  S*=" << g.s_star_inf.str();
        if (g.s_star_xb == 1) std::cout << " + X_B";
        else if (g.s_star_xb != 0) std::cout << " + " << g.s_star_xb << "*X_B";
        std::cout << " (mod 1)";
      }
      std::cout << "\n";
    }
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"modular Dedekind symbols: exact symbols, words and q-series checks"};
  app.set_help_flag("--help", "print help");  // frees 'h' for the positional in `sum h k`
  app.require_subcommand(1);
  bool as_json = false;
  app.add_flag("--json", as_json, "machine-readable output");

  std::string arg_h, arg_k;
  auto* sum = app.add_subcommand("sum", "classical Dedekind sum s(h,k)");
  sum->add_option("h", arg_h)->required();
  sum->add_option("k", arg_k)->required();

  std::string group, level = "1", cusp = "inf", matrix;
  auto* symbol = app.add_subcommand("symbol", "modular Dedekind symbol S");
  symbol->add_option("--group", group, "sl2z|gamma0|plus")->required();
  symbol->add_option("--level", level, "level N (gamma0/plus)");
  symbol->add_option("--cusp", cusp, "inf|0 (gamma0)")->check(CLI::IsMember({"inf", "0"}));
  symbol->add_option("--matrix", matrix, "\"a,b,c,d\" or \"a,b,c,d;e\"")->required();

  std::string star_group, star_cusp = "inf", star_matrix;
  std::size_t budget = 1'000'000;
  auto* star = app.add_subcommand("star", "higher-order symbol S* (mod 1)");
  star->add_option("--group", star_group, "gamma0-11|gamma0-37plus")->required();
  star->add_option("--cusp", star_cusp, "inf|0")->check(CLI::IsMember({"inf", "0"}));
  star->add_option("--matrix", star_matrix)->required();
  star->add_option("--budget", budget, "word-search node budget");

  std::string word_group, word_matrix;
  auto* word = app.add_subcommand("word", "decompose a matrix over preset generators");
  word->add_option("--group", word_group, "sl2z|gamma0-11|gamma0-37plus")->required();
  word->add_option("--matrix", word_matrix)->required();
  word->add_option("--budget", budget, "word-search node budget");

  std::string suite = "numerics";
  std::uint64_t seed = 42;
  double tol = 1e-9;
  auto* verify = app.add_subcommand("verify", "floating-point verification suites");
  verify->add_option("--suite", suite, "numerics");
  verify->add_option("--seed", seed, "RNG seed (default 42)");
  verify->add_option("--tol", tol, "series-identity tolerance (default 1e-9)");

  auto* presets = app.add_subcommand("presets", "list the shipped group presets");

  for (auto* sub : {sum, symbol, star, word, verify, presets})
    sub->fallthrough();  // lets --json appear after the subcommand

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 1;
  }

  try {
    if (sum->parsed()) return run_sum(arg_h, arg_k, as_json);
    if (symbol->parsed()) return run_symbol(group, level, cusp, matrix, as_json);
    if (star->parsed()) return run_star(star_group, star_cusp, star_matrix, budget, as_json);
    if (word->parsed()) return run_word(word_group, word_matrix, budget, as_json);
    if (verify->parsed()) return run_verify(suite, seed, tol, as_json);
    if (presets->parsed()) return run_presets(as_json);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
