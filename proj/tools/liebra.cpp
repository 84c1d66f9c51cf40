#include <cstdint>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "liebra/counting.hpp"
#include "liebra/eil.hpp"
#include "liebra/formats.hpp"
#include "liebra/orders.hpp"
#include "liebra/pairing.hpp"
#include "liebra/poisson.hpp"
#include "liebra/verify.hpp"

namespace {

using nlohmann::json;
using namespace liebra;

int g_exit = 0;

json graph_obj(const ColoredGraph& g) { return json::parse(graph_json(g)); }
json graph_obj(const OrientedGraph& g) { return json::parse(graph_json(g)); }

void require_alphabet(std::uint64_t mask, int n) {
  if (n <= 0) return;
  if (mask != (n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1)) {
    throw DomainError("expression must use exactly x1..x" + std::to_string(n));
  }
}

void print_items(const std::vector<std::string>& items, int n, bool as_json) {
  if (as_json) {
    json j{{"schema", 1}, {"n", n}, {"items", items}};
    std::cout << j.dump() << "\n";
    return;
  }
  for (const std::string& s : items) std::cout << s << "\n";
}

void cmd_enumerate_trees(int n, bool as_json) {
  const std::vector<ColoredGraph> trees = enumerate_basis_trees(n);
  if (as_json) {
    json arr = json::array();
    for (const ColoredGraph& g : trees) arr.push_back(graph_obj(g));
    std::cout << json{{"schema", 1}, {"n", n}, {"trees", arr}}.dump() << "\n";
    return;
  }
  for (const ColoredGraph& g : trees) std::cout << g.line() << "\n";
}

void cmd_basis(const std::string& family, int n, bool as_json) {
  std::vector<std::string> items;
  if (family == "lie") {
    for (const ColoredGraph& g : enumerate_basis_trees(n)) items.push_back(basis_monomial(g).text());
  } else if (family == "eil") {
    for (const OrientedGraph& g : eil_basis(n)) items.push_back(arcs_text(g));
  } else {
    for (const PoissonMonomial& b : poisson_basis(n)) items.push_back(b.text());
  }
  print_items(items, n, as_json);
}

void cmd_normalize_lie(const std::string& expr, int n, bool as_json) {
  const Monomial m = parse_monomial(expr);
  require_alphabet(m.mask(), n);
  const MonCombo lc = lc_normalize(m);
  if (as_json) {
    json arr = json::array();
    for (const auto& [key, coeff] : lc) arr.push_back({{"coeff", coeff}, {"monomial", key.text()}});
    std::cout << json{{"schema", 1}, {"input", expr}, {"terms", arr}}.dump() << "\n";
    return;
  }
  std::cout << combo_text(lc) << "\n";
}

void cmd_normalize_eil(const std::string& path, int n, bool as_json) {
  const OrientedGraph g = load_oriented_graph(path, n);
  const EilCombo image = eil_normalize(g);
  if (as_json) {
    json arr = json::array();
    for (const auto& [key, coeff] : image) arr.push_back({{"coeff", coeff}, {"graph", graph_obj(key)}});
    std::cout << json{{"schema", 1}, {"input", graph_obj(g)}, {"terms", arr}}.dump() << "\n";
    return;
  }
  std::cout << combo_text(image);
}

void cmd_normalize_poisson(const std::string& expr, int n, bool as_json) {
  const PoissonMonomial pm = parse_poisson(expr);
  require_alphabet(pm.mask(), n);
  const PoisCombo image = poisson_normalize(pm);
  if (as_json) {
    json arr = json::array();
    for (const auto& [key, coeff] : image) arr.push_back({{"coeff", coeff}, {"monomial", key.text()}});
    std::cout << json{{"schema", 1}, {"input", expr}, {"terms", arr}}.dump() << "\n";
    return;
  }
  std::cout << combo_text(image) << "\n";
}

void cmd_pair(const std::string& path, const std::string& expr, int n, bool as_json) {
  const OrientedGraph g = load_oriented_graph(path, n);
  const PoissonMonomial pm = parse_poisson(expr);
  const long long value = pair_com(g, pm);
  if (as_json) {
    std::cout << json{{"schema", 1}, {"value", value}}.dump() << "\n";
  } else {
    std::cout << value << "\n";
  }
}

void cmd_matrix_lie(int n, const std::string& order_name, bool as_json) {
  const std::vector<ColoredGraph> order =
      order_name == "ind" ? linear_extension(n) : enumerate_basis_trees(n);
  const PairingMatrix m = pairing_matrix(order);
  const bool ut = m.upper_triangular();
  const bool uni = m.diagonal_unimodular();
  if (as_json) {
    std::cout << json{{"schema", 1},
                      {"n", n},
                      {"dim", m.dim()},
                      {"order", order_name},
                      {"upper_triangular", ut},
                      {"diagonal_unimodular", uni}}
                     .dump()
              << "\n";
  } else if (ut && uni) {
    std::cout << m.dim() << "×" << m.dim() << " upper triangular, diagonal ±" << 1 << "\n";
  } else if (!ut) {
    const auto v = m.lower_violations(1);
    std::cout << m.dim() << "×" << m.dim() << " NOT upper triangular, first violation at ("
              << v[0].first << "," << v[0].second << ")\n";
  } else {
    std::cout << m.dim() << "×" << m.dim() << " upper triangular, diagonal NOT unimodular\n";
  }
  if (!(ut && uni)) g_exit = 1;
}

void cmd_matrix_com(int n, bool as_json) {
  const ComMatrixReport rep = com_matrix(n);
  if (as_json) {
    json blocks = json::array();
    for (const ComBlockReport& b : rep.diagonal) {
      blocks.push_back({{"blocks", b.blocks},
                        {"dim", b.dim},
                        {"kronecker_ok", b.kronecker_ok},
                        {"unimodular_ok", b.unimodular_ok}});
    }
    std::cout << json{{"schema", 1},
                      {"n", rep.n},
                      {"dim", rep.dim},
                      {"cross_zero", rep.cross_zero},
                      {"blocks_ok", rep.blocks_ok},
                      {"diagonal", blocks}}
                     .dump()
              << "\n";
  } else {
    std::cout << rep.dim << "×" << rep.dim << " block diagonal over " << rep.diagonal.size()
              << " partitions; cross zeros " << (rep.cross_zero ? "OK" : "VIOLATED")
              << "; Kronecker blocks " << (rep.blocks_ok ? "OK" : "VIOLATED") << "\n";
  }
  if (!(rep.cross_zero && rep.blocks_ok)) g_exit = 1;
}

void cmd_order_ind(int n, bool list, bool as_json) {
  const std::vector<ColoredGraph> order = linear_extension(n);
  if (as_json) {
    json arr = json::array();
    for (const ColoredGraph& g : order) {
      arr.push_back({{"tree", g.line()}, {"index", index_vector(g)}});
    }
    std::cout << json{{"schema", 1}, {"n", n}, {"order", arr}}.dump() << "\n";
    return;
  }
  for (std::size_t i = 0; i < order.size(); ++i) {
    std::cout << i << ") " << order[i].line();
    if (list) std::cout << "  |  " << index_vector_text(order[i]);
    std::cout << "\n";
  }
}

void cmd_order_opdag(int n, bool dot) {
  const OpReach r = op_reachability(n);
  if (dot) {
    std::cout << opdag_dot(r);
    return;
  }
  for (std::size_t i = 0; i < r.moves.size(); ++i) {
    for (int j : r.moves[i]) std::cout << i << " -> " << j << "\n";
  }
}

void cmd_count(int n, bool as_json) {
  const std::vector<long long> counted = count_by_increasing_edges(n);
  const std::vector<long long> poly = increasing_edge_polynomial(n);
  const bool match = counted == poly;
  if (as_json) {
    std::cout << json{{"schema", 1}, {"n", n}, {"counts", counted}, {"poly", poly}, {"match", match}}
                     .dump()
              << "\n";
  } else {
    auto row = [](const std::vector<long long>& v) {
      std::string s;
      for (long long x : v) {
        if (!s.empty()) s += ' ';
        s += std::to_string(x);
      }
      return s;
    };
    std::cout << row(counted) << " | poly: " << row(poly) << " | " << (match ? "MATCH" : "MISMATCH")
              << "\n";
  }
  if (!match) g_exit = 1;
}

json suite_json(const SuiteReport& r) {
  json fails = json::array();
  for (const CheckFailure& f : r.failures) fails.push_back({{"check", f.check}, {"repro", f.reproducer}});
  return {{"name", r.name},
          {"checks", r.checks},
          {"failures", fails},
          {"seconds", r.seconds},
          {"ok", r.ok()}};
}

void print_suite(const SuiteReport& r) {
  std::cout << r.name << ": " << r.checks << " checks, " << r.failures.size()
            << (r.ok() ? " failures" : " FAILURES") << ", " << r.seconds << "s\n";
  for (const CheckFailure& f : r.failures) {
    std::cout << "  FAIL " << f.check << ": " << f.reproducer << "\n";
  }
}

void print_criterion(const AcceptanceResult& a) {
  std::cout << (a.pass ? "[PASS]" : "[FAIL]") << " criterion " << a.id << ": " << a.title << " ("
            << a.seconds << "s) " << a.detail << "\n";
}

void cmd_verify(const std::string& what, int max_n, int samples, std::uint64_t seed, bool as_json) {
  const VerifyOptions opt{max_n, samples, seed};
  std::vector<SuiteReport> suites;
  std::vector<AcceptanceResult> criteria;
  if (what == "all") {
    suites = run_all_suites(opt);
    criteria = run_acceptance();
  } else if (what == "acceptance") {
    criteria = run_acceptance();
  } else {
    suites.push_back(run_suite(what, opt));
  }
  bool ok = true;
  for (const SuiteReport& r : suites) ok = ok && r.ok();
  for (const AcceptanceResult& a : criteria) ok = ok && a.pass;
  if (as_json) {
    json js = json::array();
    for (const SuiteReport& r : suites) js.push_back(suite_json(r));
    json jc = json::array();
    for (const AcceptanceResult& a : criteria) {
      jc.push_back({{"id", a.id},
                    {"title", a.title},
                    {"pass", a.pass},
                    {"detail", a.detail},
                    {"seconds", a.seconds}});
    }
    std::cout << json{{"schema", 1}, {"suites", js}, {"criteria", jc}, {"ok", ok}}.dump() << "\n";
  } else {
    for (const SuiteReport& r : suites) print_suite(r);
    for (const AcceptanceResult& a : criteria) print_criterion(a);
    std::cout << (ok ? "VERIFY: ok" : "VERIFY: FAILED") << "\n";
  }
  if (!ok) g_exit = 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"two-colored bracket algebra workbench"};
  app.require_subcommand(1);

  int n = 3;
  int max_n = 4;
  int samples = 1000;
  std::uint64_t seed = 7;
  bool as_json = false;
  bool list_flag = false;
  bool dot_flag = false;
  std::string expr;
  std::string graph_file;
  std::string order_name = "ind";
  std::string check_name;
  std::string verify_what = "all";

  auto* enumerate = app.add_subcommand("enumerate", "list combinatorial families");
  enumerate->require_subcommand(1);
  auto* etrees = enumerate->add_subcommand("trees", "pattern-free two-colored trees");
  etrees->add_option("--n", n, "alphabet size")->required()->check(CLI::Range(1, 7));
  etrees->add_flag("--json", as_json, "machine-readable output");
  etrees->callback([&] { cmd_enumerate_trees(n, as_json); });

  auto* basis = app.add_subcommand("basis", "distinguished bases");
  basis->require_subcommand(1);
  for (const std::string family : {"lie", "eil", "poisson"}) {
    auto* sub = basis->add_subcommand(family, family + std::string(" basis"));
    sub->add_option("--n", n, "alphabet size")->required()->check(CLI::Range(1, 7));
    sub->add_flag("--json", as_json, "machine-readable output");
    sub->callback([&, family] { cmd_basis(family, n, as_json); });
  }

  auto* normalize = app.add_subcommand("normalize", "rewrite onto a basis");
  normalize->require_subcommand(1);
  auto* nlie = normalize->add_subcommand("lie", "bracket monomials");
  nlie->add_option("--expr", expr, "bracket expression")->required();
  nlie->add_option("--n", n, "expected alphabet size")->check(CLI::Range(1, 64));
  nlie->add_flag("--json", as_json, "machine-readable output");
  nlie->callback([&] { cmd_normalize_lie(expr, nlie->count("--n") ? n : 0, as_json); });
  auto* neil = normalize->add_subcommand("eil", "oriented graphs");
  neil->add_option("--graph", graph_file, "edge-list or JSON file")->required();
  neil->add_option("--n", n, "alphabet size")->check(CLI::Range(1, 64));
  neil->add_flag("--json", as_json, "machine-readable output");
  neil->callback([&] { cmd_normalize_eil(graph_file, neil->count("--n") ? n : 0, as_json); });
  auto* npois = normalize->add_subcommand("poisson", "product monomials");
  npois->add_option("--expr", expr, "product expression")->required();
  npois->add_option("--n", n, "expected alphabet size")->check(CLI::Range(1, 64));
  npois->add_flag("--json", as_json, "machine-readable output");
  npois->callback([&] { cmd_normalize_poisson(expr, npois->count("--n") ? n : 0, as_json); });

  auto* pair = app.add_subcommand("pair", "pair an oriented graph against an expression");
  pair->add_option("--graph", graph_file, "edge-list or JSON file")->required();
  pair->add_option("--expr", expr, "bracket or product expression")->required();
  pair->add_option("--n", n, "alphabet size")->check(CLI::Range(1, 64));
  pair->add_flag("--json", as_json, "machine-readable output");
  pair->callback([&] { cmd_pair(graph_file, expr, pair->count("--n") ? n : 0, as_json); });

  auto* matrix = app.add_subcommand("matrix", "pairing matrix certificates");
  matrix->add_option("--n", n, "alphabet size")->check(CLI::Range(1, 5));
  matrix->add_option("--order", order_name, "row/column order")
      ->check(CLI::IsMember({"ind", "lex"}));
  matrix->add_option("--check", check_name, "certificate to run")
      ->check(CLI::IsMember({"triangular"}));
  matrix->add_flag("--json", as_json, "machine-readable output");
  auto* mcom = matrix->add_subcommand("com", "product-side block matrix");
  mcom->add_option("--n", n, "alphabet size")->required()->check(CLI::Range(1, 4));
  mcom->add_option("--check", check_name, "certificate to run")->check(CLI::IsMember({"blocks"}));
  mcom->add_flag("--json", as_json, "machine-readable output");
  mcom->callback([&] { cmd_matrix_com(n, as_json); });
  matrix->callback([&] {
    if (mcom->parsed()) return;
    if (!matrix->count("--n")) throw CLI::RequiredError("--n");
    cmd_matrix_lie(n, order_name, as_json);
  });

  auto* order = app.add_subcommand("order", "index order and move structure");
  order->require_subcommand(1);
  auto* oind = order->add_subcommand("ind", "linear extension of the index order");
  oind->add_option("--n", n, "alphabet size")->required()->check(CLI::Range(1, 5));
  oind->add_flag("--list", list_flag, "include index vectors");
  oind->add_flag("--json", as_json, "machine-readable output");
  oind->callback([&] { cmd_order_ind(n, list_flag, as_json); });
  auto* odag = order->add_subcommand("opdag", "single-move DAG");
  odag->add_option("--n", n, "alphabet size")->required()->check(CLI::Range(1, 5));
  odag->add_flag("--dot", dot_flag, "emit DOT");
  odag->callback([&] { cmd_order_opdag(n, dot_flag); });

  auto* count = app.add_subcommand("count", "enumerative checks");
  count->require_subcommand(1);
  auto* cinc = count->add_subcommand("inc-edges", "rooted trees by increasing edges");
  cinc->add_option("--n", n, "alphabet size")->required()->check(CLI::Range(1, 9));
  cinc->add_flag("--json", as_json, "machine-readable output");
  cinc->callback([&] { cmd_count(n, as_json); });

  std::vector<std::string> verify_names = {"all", "acceptance"};
  for (const std::string& s : suite_names()) verify_names.push_back(s);
  auto* verify = app.add_subcommand("verify", "invariant suites and release gates");
  verify->add_option("suite", verify_what, "all, acceptance, or a module suite")
      ->check(CLI::IsMember(verify_names));
  verify->add_option("--max-n", max_n, "largest alphabet for the suites")->check(CLI::Range(1, 5));
  verify->add_option("--samples", samples, "random samples per suite")->check(CLI::Range(1, 1000000));
  verify->add_option("--seed", seed, "RNG seed");
  verify->add_flag("--json", as_json, "machine-readable output");
  verify->callback([&] { cmd_verify(verify_what, max_n, samples, seed, as_json); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
  return g_exit;
}
