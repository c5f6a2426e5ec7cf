#include "symdist/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "symdist/error.hpp"
#include "symdist/json_io.hpp"

namespace symdist {

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

int max_rank() {
  const char* raw = std::getenv(kMaxRankVariable);
  if (raw == nullptr || *raw == '\0') return kDefaultMaxRank;
  try {
    std::size_t used = 0;
    int value = std::stoi(raw, &used);
    if (used != std::string(raw).size() || value < 1) throw std::invalid_argument(raw);
    return value;
  } catch (const std::exception&) {
    throw UsageError(std::string(kMaxRankVariable) + " must be a positive integer, got '" + raw + "'");
  }
}

void check_rank(int rank, const std::string& what) {
  int cap = max_rank();
  if (rank > cap)
    throw UsageError(what + " " + std::to_string(rank) + " exceeds the cap " + std::to_string(cap) +
                     " (set " + kMaxRankVariable + " to raise it)");
}

struct OutputChoice {
  std::string format = "table";
  bool json = false;

  void attach(CLI::App* cmd) {
    auto* f = cmd->add_option("--format", format, "Output format")
                  ->check(CLI::IsMember({"table", "json"}));
    cmd->add_flag("--json", json, "Same as --format=json")->excludes(f);
  }
  bool as_json() const { return json || format == "json"; }
};

// Plain text table with columns padded to their widest cell.
class TextTable {
 public:
  void row(std::vector<std::string> cells) { rows_.push_back(std::move(cells)); }

  void print(std::ostream& out) const {
    std::vector<std::size_t> width;
    for (const auto& r : rows_)
      for (std::size_t i = 0; i < r.size(); ++i) {
        if (width.size() <= i) width.push_back(0);
        width[i] = std::max(width[i], r[i].size());
      }
    for (const auto& r : rows_) {
      std::string line;
      for (std::size_t i = 0; i < r.size(); ++i) {
        std::string cell = r[i];
        if (i + 1 < r.size()) cell.resize(width[i] + 2, ' ');
        line += cell;
      }
      line.erase(line.find_last_not_of(' ') + 1);
      out << line << '\n';
    }
  }

 private:
  std::vector<std::vector<std::string>> rows_;
};

std::string signed_int(int v) { return (v > 0 ? "+" : "") + std::to_string(v); }

std::string symbol_list(const std::vector<Symbol>& symbols) {
  std::string out;
  for (std::size_t i = 0; i < symbols.size(); ++i) out += (i ? " " : "") + format(symbols[i]);
  return out;
}

void print_chartable(int n, std::ostream& out) {
  const auto& index = ClassIndex::of(n);
  const auto& table = character_table(n);
  const auto irreducibles = bipartitions_of(n);
  TextTable t;
  std::vector<std::string> header{"irr\\class"};
  for (const auto& c : index.classes()) header.push_back(format(c));
  t.row(std::move(header));
  for (std::size_t i = 0; i < irreducibles.size(); ++i) {
    std::vector<std::string> r{format(irreducibles[i])};
    for (const auto& v : table[i].values()) r.push_back(to_string(v));
    t.row(std::move(r));
  }
  out << "W_" << n << ": " << index.size() << " classes\n";
  t.print(out);
}

void print_xi(const std::vector<XiResult>& results, std::ostream& out) {
  const auto& first = results.front();
  std::string routes;
  for (const auto& r : results) routes += (routes.empty() ? "" : ",") + std::string(route_name(r.route));
  out << "Xi_" << first.n << " on W_" << 2 * first.n << "  route" << (results.size() > 1 ? "s " : " ")
      << routes;
  if (results.size() > 1) out << ": agree";
  out << "\n\n";
  TextTable values;
  values.row({"class", "value"});
  for (std::size_t i = 0; i < first.character.values().size(); ++i)
    values.row({format(first.character.classes()[i]), to_string(first.character[i])});
  values.print(out);
  out << "\ndecomposition (" << first.decomposition.size() << " terms)\n";
  TextTable terms;
  for (const auto& [b, c] : first.decomposition) terms.row({signed_int(c), format(b)});
  terms.print(out);
}

void print_cells(const DistinguishedReport& report, std::ostream& out) {
  out << "rank " << report.rank << ": " << report.cells.size() << " special symbols, "
      << report.symbols.size() << " distinguished\n";
  for (const auto& c : report.cells) {
    out << "\nZ = " << format(c.cell.z) << "  d = " << c.d << '\n';
    TextTable t;
    for (const auto& term : c.cell.terms)
      t.row({"  " + std::string(term.sign > 0 ? "+" : "-"), format(term.symbol)});
    t.print(out);
    out << "  constituents: " << symbol_list(c.constituents) << '\n';
  }
  out << "\nunion: " << symbol_list(report.symbols) << '\n';
  out << "cuspidal: " << (report.cuspidal_required ? (report.cuspidal_present ? "present" : "MISSING")
                                                   : "not at this rank")
      << '\n';
}

int print_claims(const std::vector<oracle::Claim>& claims, bool json, std::ostream& out) {
  bool ok = std::all_of(claims.begin(), claims.end(), [](const auto& c) { return c.passed; });
  if (json) {
    out << claims_json(claims).dump(2) << '\n';
  } else {
    TextTable t;
    for (const auto& c : claims) t.row({c.passed ? "PASS" : "FAIL", c.name, c.detail});
    t.print(out);
  }
  return ok ? 0 : 1;
}

int print_verification(const VerificationReport& report, bool json, std::ostream& out) {
  if (json) {
    out << verification_json(report).dump(2) << '\n';
  } else {
    TextTable t;
    for (const auto& c : report.checks) t.row({status_name(c.status), c.name, c.detail});
    t.print(out);
    out << '\n'
        << report.count(CheckStatus::pass) << " pass, " << report.count(CheckStatus::fail)
        << " fail, " << report.count(CheckStatus::discrepancy_documented)
        << " discrepancy-documented\n";
  }
  return report.ok() ? 0 : 1;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Symbols, cells and the Xi module of Sp_4n", "symdist"};
  app.require_subcommand(1);

  int chartable_n = 0;
  OutputChoice chartable_out;
  auto* chartable = app.add_subcommand("chartable", "Character table of W_n");
  chartable->add_option("n", chartable_n, "Rank of W_n")->required()->check(CLI::PositiveNumber);
  chartable_out.attach(chartable);

  int xi_n = 0;
  std::string xi_route = "all";
  OutputChoice xi_out;
  auto* xi_cmd = app.add_subcommand("xi", "The virtual W_2n-module Xi_n");
  xi_cmd->add_option("n", xi_n, "Index n (module on W_2n)")->required()->check(CLI::PositiveNumber);
  xi_cmd->add_option("--route", xi_route, "A, B, C or all")
      ->check(CLI::IsMember({"A", "B", "C", "all"}));
  xi_out.attach(xi_cmd);

  int cells_rank = 0;
  OutputChoice cells_out;
  auto* cells_cmd = app.add_subcommand("cells", "Cells over the special set at a given rank");
  cells_cmd->add_option("--rank", cells_rank, "Even symbol rank 2n")->required()->check(CLI::PositiveNumber);
  cells_out.attach(cells_cmd);

  int dist_n = 0;
  OutputChoice dist_out;
  auto* dist_cmd = app.add_subcommand("distinguished", "Distinguished unipotent symbols of Sp_4n");
  dist_cmd->add_option("--n", dist_n, "Index n")->required()->check(CLI::PositiveNumber);
  dist_out.attach(dist_cmd);

  int oracle_max_n = 2;
  bool include_w6 = false;
  OutputChoice oracle_out;
  auto* oracle_cmd = app.add_subcommand("oracle", "Brute-force group checks");
  oracle_cmd->require_subcommand(1);
  auto* oracle_verify = oracle_cmd->add_subcommand("verify", "Run the brute-force claims");
  oracle_verify->add_option("--max-n", oracle_max_n, "Largest n for W_2n checks (1 or 2)")
      ->check(CLI::Range(1, 2));
  oracle_verify->add_flag("--include-w6", include_w6, "Also check kappa_3 and nu_3 on W_6");
  oracle_out.attach(oracle_verify);

  OutputChoice verify_out;
  auto* verify_cmd = app.add_subcommand("verify", "Run every reference fixture");
  verify_out.attach(verify_cmd);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*chartable) {
      check_rank(chartable_n, "rank");
      if (chartable_out.as_json())
        out << chartable_json(chartable_n).dump(2) << '\n';
      else
        print_chartable(chartable_n, out);
      return 0;
    }
    if (*xi_cmd) {
      check_rank(2 * xi_n, "rank 2n =");
      std::vector<XiResult> results;
      if (xi_route == "all") {
        results = xi_all_routes(xi_n);
      } else {
        XiRoute route = xi_route == "A"   ? XiRoute::induction
                        : xi_route == "B" ? XiRoute::gamma2
                                          : XiRoute::cells;
        results.push_back(xi(xi_n, route));
      }
      if (xi_out.as_json())
        out << xi_json(results).dump(2) << '\n';
      else
        print_xi(results, out);
      return 0;
    }
    if (*cells_cmd || *dist_cmd) {
      int rank = *cells_cmd ? cells_rank : 2 * dist_n;
      if (rank % 2 != 0) throw UsageError("--rank must be even, got " + std::to_string(rank));
      check_rank(rank, "rank");
      auto report = distinguished(rank / 2);
      const auto& choice = *cells_cmd ? cells_out : dist_out;
      if (choice.as_json())
        out << distinguished_json(report).dump(2) << '\n';
      else
        print_cells(report, out);
      return 0;
    }
    if (*oracle_verify) {
      return print_claims(oracle::verify_claims(oracle_max_n, include_w6), oracle_out.as_json(), out);
    }
    if (*verify_cmd) return print_verification(run_verification(), verify_out.as_json(), out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const ModelViolation& e) {
    err << Json{{"error", "model violation"}, {"message", e.what()}, {"object", e.object()}}.dump()
        << '\n';
    return 1;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
  return 2;
}

}  // namespace symdist
