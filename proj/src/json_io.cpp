#include "symdist/json_io.hpp"

namespace symdist {

Json to_json(const Integer& v) {
  if (v.fits_slong_p()) return static_cast<std::int64_t>(v.get_si());
  return to_string(v);
}

Json to_json(const Rational& v) {
  if (is_integer(v)) return to_json(Integer(v.get_num()));
  return to_string(v);
}

Json symbol_json(const Symbol& s) {
  return Json{{"top", s.top()}, {"bottom", s.bottom()}};
}

Json class_function_json(const ClassFunction& f) {
  Json out = Json::object();
  for (std::size_t i = 0; i < f.values().size(); ++i) out[format(f.classes()[i])] = to_json(f[i]);
  return out;
}

Json chartable_json(int n) {
  Json classes = Json::array();
  for (const auto& c : ClassIndex::of(n).classes()) classes.push_back(format(c));
  Json rows = Json::object();
  const auto& table = character_table(n);
  const auto irreducibles = bipartitions_of(n);
  for (std::size_t i = 0; i < irreducibles.size(); ++i)
    rows[format(irreducibles[i])] = class_function_json(table[i]);
  return Json{{"n", n}, {"classes", std::move(classes)}, {"rows", std::move(rows)}};
}

Json xi_json(const std::vector<XiResult>& results) {
  const auto& first = results.front();
  Json routes = Json::array();
  for (const auto& r : results) routes.push_back(route_name(r.route));
  Json decomposition = Json::object();
  for (const auto& [b, c] : first.decomposition) decomposition[format(b)] = c;

  Json agreement{{"agree", true}, {"compared", routes}};
  for (std::size_t k = 1; k < results.size(); ++k) {
    auto cmp = compare_routes(first, results[k]);
    if (!cmp.agree) {
      agreement["agree"] = false;
      agreement["first_difference"] = format(*cmp.first_difference);
      agreement["detail"] = cmp.detail;
      break;
    }
  }
  return Json{{"n", first.n},
              {"routes", std::move(routes)},
              {"character", class_function_json(first.character)},
              {"decomposition", std::move(decomposition)},
              {"route_agreement", std::move(agreement)}};
}

Json cell_json(const CellReport& report) {
  Json terms = Json::array();
  for (const auto& t : report.cell.terms)
    terms.push_back(Json{{"sign", t.sign}, {"symbol", format(t.symbol)}});
  Json constituents = Json::array();
  for (const auto& s : report.constituents) constituents.push_back(format(s));
  return Json{{"Z", format(report.cell.z)},
              {"d", report.d},
              {"terms", std::move(terms)},
              {"constituents", std::move(constituents)}};
}

Json distinguished_json(const DistinguishedReport& report) {
  Json cells = Json::array();
  for (const auto& c : report.cells) cells.push_back(cell_json(c));
  Json all = Json::array();
  for (const auto& s : report.symbols) all.push_back(format(s));
  return Json{{"rank", report.rank},
              {"cells", std::move(cells)},
              {"union", std::move(all)},
              {"count", report.symbols.size()},
              {"cuspidal_present", report.cuspidal_present}};
}

Json claims_json(const std::vector<oracle::Claim>& claims) {
  Json out = Json::array();
  for (const auto& c : claims)
    out.push_back(Json{{"claim", c.name}, {"status", c.passed ? "pass" : "fail"}, {"detail", c.detail}});
  return out;
}

Json verification_json(const VerificationReport& report) {
  Json checks = Json::array();
  for (const auto& c : report.checks)
    checks.push_back(Json{{"name", c.name}, {"status", status_name(c.status)}, {"detail", c.detail}});
  return Json{{"checks", std::move(checks)},
              {"pass", report.count(CheckStatus::pass)},
              {"fail", report.count(CheckStatus::fail)},
              {"discrepancy_documented", report.count(CheckStatus::discrepancy_documented)}};
}

}  // namespace symdist
