#include "pentatail/cli.hpp"

#include <fstream>
#include <functional>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>

#include "pentatail/agb.hpp"
#include "pentatail/bivariate.hpp"
#include "pentatail/bounds.hpp"
#include "pentatail/errors.hpp"
#include "pentatail/parallel.hpp"
#include "pentatail/partitions.hpp"
#include "pentatail/polya.hpp"
#include "pentatail/report.hpp"
#include "pentatail/tails.hpp"
#include "pentatail/verifier.hpp"

namespace pentatail::cli {

using nlohmann::json;

namespace {

constexpr int kTable2Columns = 8;

struct GoldenRow {
  const char* triple;
  const char* c;
  const char* b;
  int k;
  std::array<int, kTable2Columns> l;
};

constexpr std::array<GoldenRow, 8> kGolden{{
    {"(1,2,3)", "17/24", "7/24", 3, {15, 2, 1, 0, 0, 0, 0, 0}},
    {"(1,2,5)", "27/40", "13/40", 4, {23, 4, 1, 1, 0, 0, 0, 0}},
    {"(1,2,7)", "41/56", "23/56", 5, {35, 6, 2, 1, 1, 0, 0, 0}},
    {"(1,3,4)", "7/12", "5/12", 4, {29, 5, 2, 1, 0, 0, 0, 0}},
    {"(1,3,5)", "19/30", "11/30", 5, {33, 6, 2, 1, 1, 0, 0, 0}},
    {"(1,4,9)", "13/24", "7/12", 8, {99, 22, 10, 4, 2, 1, 1, 1}},
    {"(2,3,5)", "49/120", "71/120", 7, {82, 18, 7, 3, 1, 1, 1, 0}},
    {"(2,3,7)", "71/168", "97/168", 8, {110, 25, 11, 5, 3, 1, 1, 1}},
}};

struct Globals {
  std::string format = "json";
  std::string out_path;
  unsigned workers = 1;
  int max_order = 200000;
  int max_enum = kDefaultEnumerationCap;
};

class UsageError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

void require_order(int order, const Globals& g) {
  if (order < 0) throw UsageError("order must be nonnegative");
  if (order > g.max_order) {
    throw LimitExceeded("order " + std::to_string(order) + " exceeds --max-order " +
                        std::to_string(g.max_order));
  }
}

void write_output(const std::string& text, const Globals& g, std::ostream& out) {
  if (g.out_path.empty()) {
    out << text;
    return;
  }
  std::ofstream f(g.out_path, std::ios::binary);
  if (!f) throw UsageError("cannot open output file " + g.out_path);
  f << text;
}

std::vector<int> parse_int_list(const std::string& s) {
  std::vector<int> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(item, &used);
    } catch (const std::exception&) {
      throw UsageError("expected comma-separated integers, got '" + s + "'");
    }
    if (used != item.size()) throw UsageError("expected comma-separated integers, got '" + s + "'");
    out.push_back(v);
  }
  return out;
}

// ------------------------------------------------------------------- table2

std::string render_table2(const json& table, Format f) {
  std::ostringstream os;
  switch (f) {
    case Format::json:
      os << table.dump(2) << '\n';
      break;
    case Format::csv:
      os << "triple,C,B,K";
      for (int l = 1; l <= kTable2Columns; ++l) os << ",L" << l;
      os << '\n';
      for (const auto& row : table["rows"]) {
        os << '"' << row["triple"].get<std::string>() << "\"," << row["C"].get<std::string>() << ','
           << row["B"].get<std::string>() << ',' << row["K"].get<int>();
        for (const auto& l : row["L"]) os << ',' << l.get<int>();
        os << '\n';
      }
      break;
    case Format::text:
      for (const auto& row : table["rows"]) {
        os << row["triple"].get<std::string>() << "  C=" << row["C"].get<std::string>()
           << "  B=" << row["B"].get<std::string>() << "  K=" << row["K"].get<int>() << "  L=";
        bool first = true;
        for (const auto& l : row["L"]) {
          os << (first ? "" : ",") << l.get<int>();
          first = false;
        }
        os << '\n';
      }
      break;
  }
  return os.str();
}

int cmd_table2(const Globals& g, const std::string& golden_path, std::ostream& out,
               std::ostream& err) {
  json expected = table2_golden();
  if (!golden_path.empty()) {
    std::ifstream f(golden_path);
    if (!f) throw UsageError("cannot read golden file " + golden_path);
    try {
      expected = json::parse(f);
    } catch (const json::exception& e) {
      throw UsageError("golden file is not valid JSON: " + std::string(e.what()));
    }
  }
  const json actual = table2_json();
  write_output(render_table2(actual, parse_format(g.format)), g, out);
  const auto diff = table2_diff(expected, actual);
  for (const auto& line : diff) err << line << '\n';
  return diff.empty() ? kExitPass : kExitMismatch;
}

// ------------------------------------------------------------------- verify

int cmd_verify(const Globals& g, const std::string& theorem, const std::string& triple,
               std::optional<int> k_max, std::optional<int> n_max, std::ostream& out) {
  if (theorem.empty() == triple.empty()) throw UsageError("give exactly one of --theorem or --triple");
  VerifyOptions opts;
  opts.workers = g.workers;
  opts.k_max = k_max;
  opts.max_order = n_max ? std::min(*n_max, g.max_order) : g.max_order;
  if (k_max && *k_max < 1) throw UsageError("--kmax must be >= 1");
  const Format f = parse_format(g.format);
  if (!theorem.empty()) {
    const auto id = parse_theorem_id(theorem);
    if (!id) throw UsageError("unknown theorem '" + theorem + "' (mth1, mth2, th2, th1)");
    const TheoremReport r = verify_theorem(*id, opts);
    write_output(emit_report(r, f), g, out);
    return r.status == Status::pass ? kExitPass : kExitMismatch;
  }
  const auto parts = parse_int_list(triple);
  if (parts.size() != 3) throw UsageError("--triple needs three parts a,b,c");
  const Triple t(parts[0], parts[1], parts[2]);
  const VerificationReport r = verify_triple(t, opts);
  write_output(emit_report(r, f), g, out);
  return r.status == Status::pass ? kExitPass : kExitMismatch;
}

// ----------------------------------------------------------------- identity

struct IdentityArgs {
  std::string id;
  std::optional<int> order;
  int k = 1;
  int d = 2;
  int tau = 1;
  int i = 1;
};

int cmd_identity(const Globals& g, const IdentityArgs& a, std::ostream& out) {
  static const std::map<std::string, int> kDefaultOrder{
      {"pnt", 2000}, {"am", 200}, {"ag", 80}, {"jtp", 150}, {"cor25", 200}};
  const auto def = kDefaultOrder.find(a.id);
  if (def == kDefaultOrder.end()) throw UsageError("unknown identity '" + a.id + "'");
  const int order = a.order.value_or(def->second);
  require_order(order, g);

  IdentityCheck check;
  json params = json::object();
  if (a.id == "pnt") {
    check = compare_series(euler_product(order), pentagonal_tail(0, order));
  } else if (a.id == "am") {
    if (a.k < 1) throw UsageError("--k must be >= 1");
    params["k"] = a.k;
    check = check_am_identity(a.k, order);
  } else if (a.id == "ag") {
    const AGBParams p(a.d, a.i, a.tau);
    params = {{"d", a.d}, {"tau", a.tau}, {"i", a.i}};
    check = compare_series(ag_product_side(p, order), ag_sum_side(p, order));
  } else if (a.id == "jtp") {
    params = {{"i", a.i}, {"d", a.d}};
    const Series theta = theta_jtp(a.i, a.d, order);
    Series product = mul(mul(pochhammer(a.i, a.d, std::nullopt, order),
                             pochhammer(a.d - a.i, a.d, std::nullopt, order)),
                         pochhammer(a.d, a.d, std::nullopt, order));
    check = compare_series(theta, product);
  } else {
    check = compare_series(cor25_product(order), cor25_quotient(order));
  }

  json doc = {{"identity", a.id},
              {"order", order},
              {"params", params},
              {"holds", check.holds},
              {"first_mismatch", check.first_mismatch ? json(*check.first_mismatch) : json(nullptr)}};
  std::ostringstream os;
  switch (parse_format(g.format)) {
    case Format::json:
      os << doc.dump(2) << '\n';
      break;
    case Format::csv:
      os << "identity,order,holds,first_mismatch\n"
         << a.id << ',' << order << ',' << (check.holds ? "true" : "false") << ','
         << (check.first_mismatch ? std::to_string(*check.first_mismatch) : "") << '\n';
      break;
    case Format::text:
      os << a.id << " to order " << order << ": " << (check.holds ? "holds" : "FAILS");
      if (check.first_mismatch) os << " (first mismatch at q^" << *check.first_mismatch << ')';
      os << '\n';
      break;
  }
  write_output(os.str(), g, out);
  return check.holds ? kExitPass : kExitMismatch;
}

// --------------------------------------------------------------- conjecture

struct ConjectureArgs {
  std::string id;
  std::optional<int> r;
  std::optional<int> s;
  int k_max = 4;
  int d_max = 5;
  int n_max = 40;
  int order = 120;
  std::string mode = "both";
};

int cmd_conjecture(const Globals& g, const ConjectureArgs& a, std::ostream& out) {
  ConjectureReport report;
  if (a.id == "trunc-jtp") {
    require_order(a.order, g);
    std::vector<std::pair<int, int>> pairs;
    if (a.r.has_value() != a.s.has_value()) throw UsageError("give both --R and --S or neither");
    if (a.r) {
      pairs.emplace_back(*a.r, *a.s);
    } else {
      pairs = {{5, 1}, {5, 2}, {7, 2}, {7, 3}};
    }
    std::vector<JtpMode> modes;
    if (a.mode == "head" || a.mode == "both") modes.push_back(JtpMode::head);
    if (a.mode == "tail" || a.mode == "both") modes.push_back(JtpMode::tail);
    if (modes.empty()) throw UsageError("--mode must be head, tail or both");
    report = scan_trunc_jtp(pairs, a.k_max, a.order, modes, g.workers);
  } else if (a.id == "bivariate-tail") {
    require_order(a.n_max + a.k_max * (a.k_max + 1) / 2, g);
    report = scan_bivariate_tail(a.k_max, a.d_max, a.n_max, g.workers);
  } else if (a.id == "bivariate-finite") {
    require_order(a.n_max, g);
    report = scan_bivariate_finite(a.k_max, a.n_max, g.workers);
  } else {
    throw UsageError("unknown conjecture '" + a.id + "'");
  }
  write_output(emit_report(report, parse_format(g.format)), g, out);
  return report.exit_code();
}

// ------------------------------------------------------------------- oracle

struct OracleArgs {
  std::string which;
  int k = 1;
  int n = 0;
  int d = 2;
  std::string parts;
};

int cmd_oracle(const Globals& g, const OracleArgs& a, std::ostream& out) {
  if (a.n < 0) throw UsageError("--n must be nonnegative");
  Integer value;
  if (a.which == "mk") {
    if (a.k < 1) throw UsageError("--k must be >= 1");
    value = mk_bruteforce(a.k, a.n, g.max_enum);
  } else if (a.which == "partitions") {
    const auto parts = parse_int_list(a.parts);
    if (parts.empty()) throw UsageError("--parts needs at least one part");
    for (int p : parts) {
      if (p < 1) throw UsageError("parts must be positive");
    }
    Integer count = 0;
    for_each_partition(
        a.n,
        [&](std::span<const int> lambda) {
          for (int x : lambda) {
            if (std::find(parts.begin(), parts.end(), x) == parts.end()) return;
          }
          ++count;
        },
        g.max_enum);
    value = count;
  } else if (a.which == "dregular") {
    if (a.d < 2) throw UsageError("--d must be >= 2");
    value = count_dregular_bruteforce(a.d, a.n, g.max_enum);
  } else {
    throw UsageError("unknown oracle '" + a.which + "'");
  }
  switch (parse_format(g.format)) {
    case Format::json:
      out << json{{"oracle", a.which}, {"n", a.n}, {"value", value.str()}}.dump(2) << '\n';
      break;
    case Format::csv:
      out << "oracle,n,value\n" << a.which << ',' << a.n << ',' << value.str() << '\n';
      break;
    case Format::text:
      out << value.str() << '\n';
      break;
  }
  return kExitPass;
}

}  // namespace

json table2_json() {
  json rows = json::array();
  for (const auto& t : table_triples()) {
    const QuadraticProfile p = periodic_profile(t);
    const BoundTable b = profile_bounds(p);
    json ls = json::array();
    for (int k = 1; k <= kTable2Columns; ++k) ls.push_back(b.l_cap(k));
    rows.push_back({{"triple", t.to_string()},
                    {"C", p.c.str()},
                    {"B", p.b_f.str()},
                    {"K", b.k_cap},
                    {"L", ls}});
  }
  return {{"rows", rows}};
}

json table2_golden() {
  json rows = json::array();
  for (const auto& g : kGolden) {
    rows.push_back({{"triple", g.triple}, {"C", g.c}, {"B", g.b}, {"K", g.k}, {"L", g.l}});
  }
  return {{"rows", rows}};
}

std::vector<std::string> table2_diff(const json& expected, const json& actual) {
  std::vector<std::string> diff;
  const json& e = expected.contains("rows") ? expected["rows"] : json::array();
  const json& a = actual.contains("rows") ? actual["rows"] : json::array();
  if (e.size() != a.size()) {
    diff.push_back("row count: expected " + std::to_string(e.size()) + ", got " +
                   std::to_string(a.size()));
  }
  for (std::size_t r = 0; r < std::min(e.size(), a.size()); ++r) {
    for (const char* key : {"triple", "C", "B", "K", "L"}) {
      const json ev = e[r].value(key, json());
      const json av = a[r].value(key, json());
      if (ev != av) {
        diff.push_back("row " + std::to_string(r + 1) + " " + key + ": expected " + ev.dump() +
                       ", got " + av.dump());
      }
    }
  }
  return diff;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact pentagonal-tail positivity toolkit"};
  app.require_subcommand(1);
  app.fallthrough();

  Globals g;
  g.workers = default_workers();
  app.add_option("--format", g.format, "json, csv or text")->check(CLI::IsMember({"json", "csv", "text"}));
  app.add_option("--out", g.out_path, "Write the report to this file");
  app.add_option("--workers", g.workers, "Worker threads (default: " + std::string(kWorkersEnv) + " or all cores)")
      ->check(CLI::PositiveNumber);
  app.add_option("--max-order", g.max_order, "Largest truncation order a run may use")
      ->check(CLI::PositiveNumber);
  app.add_option("--max-enum", g.max_enum, "Largest n the enumeration oracles accept")
      ->check(CLI::PositiveNumber);

  auto* table2 = app.add_subcommand("table2", "Recompute the bound table and compare with the golden copy");
  std::string golden_path;
  table2->add_option("--golden", golden_path, "JSON file overriding the embedded golden table");

  auto* verify = app.add_subcommand("verify", "Scan a triple or check a theorem's exception lists");
  std::string theorem;
  std::string triple;
  std::optional<int> k_max;
  std::optional<int> n_max;
  verify->add_option("--theorem", theorem, "mth1, mth2, th2 or th1");
  verify->add_option("--triple", triple, "a,b,c");
  verify->add_option("--kmax", k_max, "Last tail index to handle");
  verify->add_option("--nmax", n_max, "Largest truncation order the scan may use");

  auto* identity = app.add_subcommand("identity", "Check a series identity coefficientwise");
  IdentityArgs ia;
  identity->add_option("--id", ia.id, "pnt, am, ag, jtp or cor25")->required();
  identity->add_option("--order", ia.order, "Truncation order");
  identity->add_option("--k", ia.k, "Tail index (am)");
  identity->add_option("--d", ia.d, "d (ag, jtp)");
  identity->add_option("--tau", ia.tau, "tau in {0,1} (ag)");
  identity->add_option("--i", ia.i, "i (ag, jtp)");

  auto* conjecture = app.add_subcommand("conjecture", "Scan a conjecture over a grid");
  ConjectureArgs ca;
  conjecture->add_option("--id", ca.id, "trunc-jtp, bivariate-tail or bivariate-finite")->required();
  conjecture->add_option("--R", ca.r, "Modulus R (trunc-jtp)");
  conjecture->add_option("--S", ca.s, "Shift S (trunc-jtp)");
  conjecture->add_option("--kmax", ca.k_max, "Largest k");
  conjecture->add_option("--dmax", ca.d_max, "Largest d (bivariate-tail)");
  conjecture->add_option("--nmax", ca.n_max, "Largest n (bivariate)");
  conjecture->add_option("--order", ca.order, "Truncation order (trunc-jtp)");
  conjecture->add_option("--mode", ca.mode, "head, tail or both (trunc-jtp)");

  auto* oracle = app.add_subcommand("oracle", "Brute-force enumeration oracles");
  OracleArgs oa;
  oracle->add_option("--which", oa.which, "mk, partitions or dregular")->required();
  oracle->add_option("--k", oa.k, "k (mk)");
  oracle->add_option("--n", oa.n, "n")->required();
  oracle->add_option("--d", oa.d, "d (dregular)");
  oracle->add_option("--parts", oa.parts, "Allowed parts, comma separated (partitions)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kExitPass : kExitUsage;
  }

  try {
    if (*table2) return cmd_table2(g, golden_path, out, err);
    if (*verify) return cmd_verify(g, theorem, triple, k_max, n_max, out);
    if (*identity) return cmd_identity(g, ia, out);
    if (*conjecture) return cmd_conjecture(g, ca, out);
    return cmd_oracle(g, oa, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const LimitExceeded& e) {
    err << "refused: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kExitMismatch;
  }
}

}  // namespace pentatail::cli
