#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "autfn/finite.hpp"
#include "autfn/nielsen.hpp"
#include "autfn/parser.hpp"
#include "autfn/suite.hpp"

namespace {

using nlohmann::json;

long env_long(const char* name, long fallback) {
  const char* v = std::getenv(name);
  if (v == nullptr || *v == '\0') return fallback;
  try {
    return std::stol(v);
  } catch (const std::exception&) {
    throw autfn::SemanticError(std::string(name) + " must be an integer, got '" + v + "'");
  }
}

// n image words, either as n arguments or semicolon-separated.
std::vector<autfn::Word> parse_images(const std::vector<std::string>& args, int n) {
  std::string joined;
  for (const std::string& a : args) {
    if (!joined.empty()) joined += ";";
    joined += a;
  }
  std::vector<std::string> pieces;
  std::string cur;
  for (char c : joined) {
    if (c == ';') {
      pieces.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  pieces.push_back(cur);
  if (static_cast<int>(pieces.size()) != n) {
    throw autfn::SemanticError("expected " + std::to_string(n) + " image words, got " +
                               std::to_string(pieces.size()));
  }
  std::vector<autfn::Word> images;
  images.reserve(pieces.size());
  for (const std::string& p : pieces) images.push_back(autfn::Word::parse(p, n));
  return images;
}

json matrix_json(const autfn::IntMatrix& m) {
  json rows = json::array();
  for (int r = 0; r < m.dim(); ++r) {
    json row = json::array();
    for (int c = 0; c < m.dim(); ++c) row.push_back(m(r, c));
    rows.push_back(row);
  }
  return rows;
}

json matrix_json(const autfn::ModMatrix& m) {
  json rows = json::array();
  for (int r = 0; r < m.dim(); ++r) {
    json row = json::array();
    for (int c = 0; c < m.dim(); ++c) row.push_back(m(r, c));
    rows.push_back(row);
  }
  return rows;
}

void emit(const std::string& command, const json& rank, const json& result,
          const std::string& status) {
  json out{{"command", command}, {"rank", rank}, {"result", result}, {"status", status}};
  std::cout << out.dump(2) << "\n";
}

std::string bits_string(std::uint32_t v, int n) {
  std::string s(static_cast<std::size_t>(n), '0');
  for (int k = 0; k < n; ++k) {
    if ((v >> k) & 1u) s[static_cast<std::size_t>(k)] = '1';
  }
  return s;
}

std::vector<autfn::Endo> default_shadow_gens(int n) {
  std::vector<autfn::Endo> gens;
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      if (i != j) gens.push_back(autfn::lambda(i, j, n));
    }
  gens.push_back(autfn::special(autfn::Special::Iota, n));
  return gens;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"autfn: symbolic computation in the automorphism group of a free group"};
  app.require_subcommand(1);
  int exit_code = 0;

  long order_cap = env_long("AUTFN_ORDER_CAP", autfn::kDefaultOrderCap);
  long closure_cap = env_long("AUTFN_CLOSURE_CAP", autfn::kDefaultClosureCap);
  long step_budget = env_long("AUTFN_STEP_BUDGET", autfn::kDefaultStepBudget);

  // eval
  auto* eval_cmd = app.add_subcommand("eval", "print the images of an expression");
  int eval_n = 0;
  std::string eval_expr;
  eval_cmd->add_option("-n,--rank", eval_n, "ambient rank")->required();
  eval_cmd->add_option("expr", eval_expr, "generator expression")->required();
  eval_cmd->callback([&] {
    std::cout << autfn::evaluate(*autfn::parse_expr(eval_expr, eval_n), eval_n).str()
              << "\n";
  });

  // ab
  auto* ab_cmd = app.add_subcommand("ab", "abelianization matrix and determinant");
  int ab_n = 0;
  unsigned ab_mod = 0;
  bool ab_json = false;
  std::string ab_expr;
  ab_cmd->add_option("-n,--rank", ab_n, "ambient rank")->required();
  ab_cmd->add_option("--mod", ab_mod, "reduce the matrix mod m (m >= 2)");
  ab_cmd->add_flag("--json", ab_json, "JSON output");
  ab_cmd->add_option("expr", ab_expr, "generator expression")->required();
  ab_cmd->callback([&] {
    if (ab_mod == 1) throw autfn::SemanticError("--mod needs a modulus >= 2");
    autfn::IntMatrix m =
        autfn::abelianize(autfn::evaluate(*autfn::parse_expr(ab_expr, ab_n), ab_n));
    long long d = autfn::det(m);
    if (ab_mod != 0) {
      autfn::ModMatrix mm = autfn::mod_reduce(m, ab_mod);
      long long dm = ((d % ab_mod) + ab_mod) % ab_mod;
      if (ab_json) {
        emit("ab", ab_n,
             {{"matrix", matrix_json(mm)}, {"modulus", ab_mod}, {"det", dm}}, "ok");
      } else {
        std::cout << mm.str() << "\ndet mod " << ab_mod << " = " << dm << "\n";
      }
    } else if (ab_json) {
      emit("ab", ab_n, {{"matrix", matrix_json(m)}, {"det", d}}, "ok");
    } else {
      std::cout << m.str() << "\ndet = " << d << "\n";
    }
  });

  // order
  auto* order_cmd = app.add_subcommand("order", "order of an expression, capped");
  int order_n = 0;
  std::string order_expr;
  order_cmd->add_option("-n,--rank", order_n, "ambient rank")->required();
  order_cmd->add_option("--cap", order_cap, "order cap");
  order_cmd->add_option("expr", order_expr, "generator expression")->required();
  order_cmd->callback([&] {
    autfn::Endo f = autfn::evaluate(*autfn::parse_expr(order_expr, order_n), order_n);
    try {
      std::cout << autfn::order_with_cap(f, order_cap) << "\n";
    } catch (const autfn::OrderCapExceeded&) {
      std::cout << "CAP-EXCEEDED\n";
      exit_code = 3;
    }
  });

  // is-aut / invert / factor take explicit image words
  auto* isaut_cmd = app.add_subcommand("is-aut", "decide automorphism-ness of image words");
  int isaut_n = 0;
  std::vector<std::string> isaut_words;
  isaut_cmd->add_option("-n,--rank", isaut_n, "ambient rank")->required();
  isaut_cmd->add_option("--step-budget", step_budget, "Nielsen move budget");
  isaut_cmd->add_option("words", isaut_words, "n image words (`;`-separable)")->required();
  isaut_cmd->callback([&] {
    autfn::Endo f(isaut_n, parse_images(isaut_words, isaut_n));
    if (autfn::is_automorphism(f, step_budget)) {
      std::cout << "automorphism\n";
    } else {
      std::cout << "not an automorphism\n";
      exit_code = 1;
    }
  });

  auto* invert_cmd = app.add_subcommand("invert", "invert an automorphism given by images");
  int invert_n = 0;
  std::vector<std::string> invert_words;
  invert_cmd->add_option("-n,--rank", invert_n, "ambient rank")->required();
  invert_cmd->add_option("--step-budget", step_budget, "Nielsen move budget");
  invert_cmd->add_option("words", invert_words, "n image words (`;`-separable)")->required();
  invert_cmd->callback([&] {
    autfn::Endo f(invert_n, parse_images(invert_words, invert_n));
    std::cout << autfn::inverse(f, step_budget).str() << "\n";
  });

  auto* factor_cmd =
      app.add_subcommand("factor", "factor an automorphism into elementary generators");
  int factor_n = 0;
  std::vector<std::string> factor_words;
  factor_cmd->add_option("-n,--rank", factor_n, "ambient rank")->required();
  factor_cmd->add_option("--step-budget", step_budget, "Nielsen move budget");
  factor_cmd->add_option("words", factor_words, "n image words (`;`-separable)")->required();
  factor_cmd->callback([&] {
    autfn::Endo f(factor_n, parse_images(factor_words, factor_n));
    auto factors = autfn::factor_into_elementary(f, step_budget);
    if (factors.empty()) {
      std::cout << "p()\n";  // identity, still a valid expression
      return;
    }
    std::string line;
    for (const auto& fac : factors) {
      if (!line.empty()) line += " ";
      line += fac.expr_string();
    }
    std::cout << line << "\n";
  });

  // suite
  auto* suite_cmd = app.add_subcommand("suite", "run the identity catalog");
  std::string suite_range = "3..6";
  bool suite_json = false;
  std::string suite_file;
  suite_cmd->add_option("--n-range", suite_range, "rank range, e.g. 3..6");
  suite_cmd->add_flag("--json", suite_json, "JSON output");
  suite_cmd->add_option("--file", suite_file, "additional user suite file");
  suite_cmd->callback([&] {
    int lo = 0, hi = 0;
    std::size_t dots = suite_range.find("..");
    try {
      if (dots == std::string::npos) {
        lo = hi = std::stoi(suite_range);
      } else {
        lo = std::stoi(suite_range.substr(0, dots));
        hi = std::stoi(suite_range.substr(dots + 2));
      }
    } catch (const std::exception&) {
      throw autfn::SemanticError("bad rank range '" + suite_range + "'");
    }
    autfn::SuiteReport rep = autfn::run_suite(lo, hi);
    if (!suite_file.empty()) {
      std::ifstream in(suite_file);
      if (!in) throw autfn::SemanticError("cannot open suite file '" + suite_file + "'");
      auto checks = autfn::parse_user_suite(in);
      autfn::SuiteReport user = autfn::run_user_checks(checks);
      for (auto& e : user.entries) rep.entries.push_back(std::move(e));
    }
    bool ok = rep.all_passed();
    if (suite_json) {
      emit("suite", suite_range, autfn::to_json(rep), ok ? "ok" : "fail");
    } else {
      std::cout << autfn::to_text(rep);
    }
    if (!ok) exit_code = 1;
  });

  // closure
  auto* closure_cmd = app.add_subcommand("closure", "closure of generator expressions");
  int closure_n = 0;
  bool closure_json = false;
  std::vector<std::string> closure_exprs;
  closure_cmd->add_option("-n,--rank", closure_n, "ambient rank")->required();
  closure_cmd->add_option("--cap", closure_cap, "element cap");
  closure_cmd->add_flag("--json", closure_json, "JSON output");
  closure_cmd->add_option("exprs", closure_exprs, "generator expressions");
  closure_cmd->callback([&] {
    std::vector<autfn::Endo> gens;
    for (const std::string& e : closure_exprs) {
      gens.push_back(autfn::evaluate(*autfn::parse_expr(e, closure_n), closure_n));
    }
    autfn::EndoSet set = autfn::closure(gens, closure_n, closure_cap);
    if (closure_json) {
      json elems = json::array();
      for (const auto& e : set.elements) elems.push_back(e.str());
      emit("closure", closure_n, {{"size", set.size()}, {"elements", elems}}, "ok");
    } else {
      std::cout << "size = " << set.size() << "\n";
      for (const auto& e : set.elements) std::cout << e.str() << "\n";
    }
  });

  // subgroups
  auto* subgroups_cmd =
      app.add_subcommand("subgroups", "S_n-invariant subgroups of (Z/2)^n");
  int subgroups_n = 0;
  bool subgroups_json = false;
  subgroups_cmd->add_option("-n,--rank", subgroups_n, "n")->required();
  subgroups_cmd->add_flag("--json", subgroups_json, "JSON output");
  subgroups_cmd->callback([&] {
    auto subs = autfn::sn_invariant_subgroups(subgroups_n);
    if (subgroups_json) {
      json list = json::array();
      for (const auto& s : subs) {
        json vecs = json::array();
        for (std::uint32_t v : s.elements) vecs.push_back(bits_string(v, s.n));
        list.push_back(
            {{"label", autfn::to_string(s.label)}, {"size", s.size()}, {"vectors", vecs}});
      }
      emit("subgroups", subgroups_n, {{"count", subs.size()}, {"subgroups", list}}, "ok");
    } else {
      std::cout << "count = " << subs.size() << "\n";
      for (const auto& s : subs) {
        std::cout << autfn::to_string(s.label) << " size=" << s.size() << ":";
        for (std::uint32_t v : s.elements) std::cout << " " << bits_string(v, s.n);
        std::cout << "\n";
      }
    }
  });

  // shadow
  auto* shadow_cmd = app.add_subcommand("shadow", "mod-2 abelianization closure");
  int shadow_n = 0;
  bool shadow_json = false;
  std::vector<std::string> shadow_exprs;
  shadow_cmd->add_option("-n,--rank", shadow_n, "ambient rank")->required();
  shadow_cmd->add_option("--cap", closure_cap, "element cap");
  shadow_cmd->add_flag("--json", shadow_json, "JSON output");
  shadow_cmd->add_option("exprs", shadow_exprs,
                         "generator expressions (default: all l(i,j) and iota)");
  shadow_cmd->callback([&] {
    std::vector<autfn::Endo> gens;
    if (shadow_exprs.empty()) {
      gens = default_shadow_gens(shadow_n);
    } else {
      for (const std::string& e : shadow_exprs) {
        gens.push_back(autfn::evaluate(*autfn::parse_expr(e, shadow_n), shadow_n));
      }
    }
    autfn::ModMatrixSet set = autfn::gl2_shadow(shadow_n, gens, closure_cap);
    if (shadow_json) {
      json elems = json::array();
      for (const auto& m : set.elements) elems.push_back(matrix_json(m));
      emit("shadow", shadow_n, {{"size", set.size()}, {"elements", elems}}, "ok");
    } else {
      std::cout << "size = " << set.size() << "\n";
      for (const auto& m : set.elements) std::cout << m.str() << "\n";
    }
  });

  // normal-closure
  auto* nc_cmd = app.add_subcommand("normal-closure",
                                    "normal closure of an element in a finite group");
  int nc_n = 0;
  bool nc_json = false;
  std::string nc_in = "wn";
  std::string nc_expr;
  nc_cmd->add_option("-n,--rank", nc_n, "ambient rank")->required();
  nc_cmd->add_option("--in", nc_in, "ambient group: wn, sigma or shadow")
      ->check(CLI::IsMember({"wn", "sigma", "shadow"}));
  nc_cmd->add_option("--cap", closure_cap, "element cap");
  nc_cmd->add_flag("--json", nc_json, "JSON output");
  nc_cmd->add_option("expr", nc_expr, "generator expression")->required();
  nc_cmd->callback([&] {
    autfn::Endo x = autfn::evaluate(*autfn::parse_expr(nc_expr, nc_n), nc_n);
    std::size_t ambient = 0, size = 0;
    std::vector<std::string> elems;
    if (nc_in == "shadow") {
      autfn::ModMatrixSet group =
          autfn::gl2_shadow(nc_n, default_shadow_gens(nc_n), closure_cap);
      autfn::ModMatrixSet nc =
          autfn::normal_closure_in_finite(group, autfn::mod_reduce(autfn::abelianize(x), 2));
      ambient = group.size();
      size = nc.size();
      for (const auto& m : nc.elements) elems.push_back(m.str());
    } else {
      autfn::EndoSet group = nc_in == "wn" ? autfn::build_Wn(nc_n, closure_cap)
                                           : autfn::build_Sigma(nc_n);
      autfn::EndoSet nc = autfn::normal_closure_in_finite(group, x);
      ambient = group.size();
      size = nc.size();
      for (const auto& e : nc.elements) elems.push_back(e.str());
    }
    if (nc_json) {
      emit("normal-closure", nc_n,
           {{"ambient", nc_in},
            {"ambient_size", ambient},
            {"size", size},
            {"elements", elems}},
           "ok");
    } else {
      std::cout << "ambient " << nc_in << " size = " << ambient << "\n";
      std::cout << "normal closure size = " << size << "\n";
      for (const auto& e : elems) std::cout << e << "\n";
    }
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const autfn::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const autfn::SemanticError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const autfn::BadIndices& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const autfn::UnsupportedRank& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const autfn::IndexOutOfRank& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const autfn::RankMismatch& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const autfn::OrderCapExceeded& e) {
    std::cerr << "cap exceeded: " << e.what() << "\n";
    return 3;
  } catch (const autfn::ClosureCapExceeded& e) {
    std::cerr << "cap exceeded: " << e.what() << "\n";
    return 3;
  } catch (const autfn::StepBudgetExceeded& e) {
    std::cerr << "step budget exceeded: " << e.what() << "\n";
    return 3;
  } catch (const autfn::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return exit_code;
}
