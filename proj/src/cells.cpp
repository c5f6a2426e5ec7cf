#include "symdist/cells.hpp"

#include <algorithm>
#include <iterator>
#include <set>
#include <stdexcept>

#include "symdist/error.hpp"

namespace symdist {

namespace {

bool in_row(const std::vector<int>& row, int x) {
  return std::binary_search(row.begin(), row.end(), x);
}

std::string format_pairs(const std::vector<SinglePair>& pairs) {
  std::string out = "{";
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    if (i) out += ",";
    out += "(" + std::to_string(pairs[i].first) + "," + std::to_string(pairs[i].second) + ")";
  }
  return out + "}";
}

std::vector<int> set_difference(const std::vector<int>& a, const std::vector<int>& b) {
  std::vector<int> out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

std::vector<int> symmetric_difference(const std::vector<int>& a, const std::vector<int>& b) {
  std::vector<int> out;
  std::set_symmetric_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

std::vector<int> intersection(const std::vector<int>& a, const std::vector<int>& b) {
  std::vector<int> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

std::vector<int> set_union(const std::vector<int>& a, const std::vector<int>& b) {
  std::vector<int> out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

}  // namespace

SinglePair make_pair_of_singles(int a, int b) { return a < b ? SinglePair{a, b} : SinglePair{b, a}; }

void require_special(const Symbol& z) {
  if (!is_special(z)) throw std::invalid_argument("symbol " + format(z) + " is not special");
}

Arrangement phi_z(const Symbol& z) {
  require_special(z);
  auto sd = singles_and_doubles(z);
  Arrangement phi;
  std::vector<int> paired;
  const auto& top = z.top();
  const auto& bottom = z.bottom();
  for (std::size_t i = 0; i < bottom.size(); ++i) {
    if (top[i] == bottom[i]) continue;
    if (in_row(sd.doubles, top[i]) || in_row(sd.doubles, bottom[i]))
      throw std::invalid_argument("phi_z: column (" + std::to_string(top[i]) + "," +
                                  std::to_string(bottom[i]) + ") of " + format(z) +
                                  " contains a doubled entry");
    phi.pairs.push_back(make_pair_of_singles(top[i], bottom[i]));
    paired.push_back(top[i]);
    paired.push_back(bottom[i]);
  }
  std::sort(paired.begin(), paired.end());
  auto rest = set_difference(sd.singles, paired);
  if (rest.size() != 1) throw ModelViolation("phi_z: expected one isolated single", format(z));
  phi.isolated = rest.front();
  std::sort(phi.pairs.begin(), phi.pairs.end());
  return phi;
}

std::vector<SinglePair> phi_hat_z(const Symbol& z) {
  std::vector<SinglePair> out;
  for (const auto& p : phi_z(z).pairs)
    if ((p.second - p.first) % 2 != 0) out.push_back(p);
  return out;
}

namespace {

void check_partitions_singles(const Symbol& z, const Arrangement& phi) {
  std::vector<int> covered{phi.isolated};
  for (const auto& [a, b] : phi.pairs) {
    covered.push_back(a);
    covered.push_back(b);
  }
  std::sort(covered.begin(), covered.end());
  if (covered != singles_and_doubles(z).singles)
    throw std::invalid_argument("arrangement " + format_pairs(phi.pairs) + " with isolated " +
                                std::to_string(phi.isolated) +
                                " does not partition the singles of " + format(z));
}

bool admissible_rec(const std::vector<int>& singles, const std::vector<int>& doubles,
                    const std::vector<SinglePair>& pairs) {
  if (pairs.empty()) return true;
  for (std::size_t k = 0; k < pairs.size(); ++k) {
    auto [a, b] = pairs[k];
    auto ia = std::lower_bound(singles.begin(), singles.end(), a);
    if (ia + 1 == singles.end() || *(ia + 1) != b) continue;
    bool double_between = std::any_of(doubles.begin(), doubles.end(),
                                      [&](int x) { return x > a && x < b; });
    if (double_between) continue;
    std::vector<int> rest_singles;
    std::copy_if(singles.begin(), singles.end(), std::back_inserter(rest_singles),
                 [&](int x) { return x != a && x != b; });
    std::vector<SinglePair> rest_pairs = pairs;
    rest_pairs.erase(rest_pairs.begin() + static_cast<std::ptrdiff_t>(k));
    if (admissible_rec(rest_singles, doubles, rest_pairs)) return true;
  }
  return false;
}

void matchings(std::vector<int> items, std::vector<SinglePair>& current,
               std::vector<std::vector<SinglePair>>& out) {
  if (items.empty()) {
    auto sorted = current;
    std::sort(sorted.begin(), sorted.end());
    out.push_back(sorted);
    return;
  }
  int first = items.front();
  for (std::size_t j = 1; j < items.size(); ++j) {
    std::vector<int> rest;
    for (std::size_t k = 1; k < items.size(); ++k)
      if (k != j) rest.push_back(items[k]);
    current.push_back({first, items[j]});
    matchings(rest, current, out);
    current.pop_back();
  }
}

}  // namespace

bool is_admissible(const Symbol& z, const Arrangement& phi) {
  require_special(z);
  check_partitions_singles(z, phi);
  auto sd = singles_and_doubles(z);
  return admissible_rec(sd.singles, sd.doubles, phi.pairs);
}

std::vector<Arrangement> all_arrangements(const Symbol& z) {
  require_special(z);
  auto singles = singles_and_doubles(z).singles;
  std::vector<Arrangement> out;
  for (int isolated : singles) {
    std::vector<int> rest;
    std::copy_if(singles.begin(), singles.end(), std::back_inserter(rest),
                 [&](int x) { return x != isolated; });
    std::vector<std::vector<SinglePair>> found;
    std::vector<SinglePair> current;
    matchings(rest, current, found);
    for (auto& pairs : found) out.push_back({std::move(pairs), isolated});
  }
  return out;
}

Symbol lambda_of_psi(const Symbol& z, const std::vector<SinglePair>& psi) {
  std::vector<int> top = z.top();
  std::vector<int> bottom = z.bottom();
  for (const auto& [a, b] : psi) {
    bool a_top = in_row(z.top(), a) && !in_row(z.bottom(), a);
    bool b_top = in_row(z.top(), b) && !in_row(z.bottom(), b);
    bool a_bottom = in_row(z.bottom(), a) && !in_row(z.top(), a);
    bool b_bottom = in_row(z.bottom(), b) && !in_row(z.top(), b);
    if (!((a_top && b_bottom) || (a_bottom && b_top)))
      throw std::invalid_argument("lambda_of_psi: pair (" + std::to_string(a) + "," +
                                  std::to_string(b) + ") is not a top/bottom pair of singles of " +
                                  format(z));
    int up = a_top ? a : b;      // currently in the top row
    int down = a_top ? b : a;    // currently in the bottom row
    std::erase(top, up);
    std::erase(bottom, down);
    top.push_back(down);
    bottom.push_back(up);
  }
  std::sort(top.begin(), top.end());
  std::sort(bottom.begin(), bottom.end());
  return Symbol(std::move(top), std::move(bottom));
}

Cell make_cell(const Symbol& z, const Arrangement& phi, const std::vector<SinglePair>& phi_hat) {
  if (!is_admissible(z, phi))
    throw std::invalid_argument("arrangement " + format_pairs(phi.pairs) +
                                " is not admissible for " + format(z));
  for (const auto& p : phi_hat)
    if (std::find(phi.pairs.begin(), phi.pairs.end(), p) == phi.pairs.end())
      throw std::invalid_argument("phi_hat pair not in the arrangement");
  Cell cell{z, phi, phi_hat, {}};
  const std::size_t d = phi.pairs.size();
  for (std::size_t mask = 0; mask < (std::size_t{1} << d); ++mask) {
    std::vector<SinglePair> psi;
    int hat_count = 0;
    for (std::size_t k = 0; k < d; ++k) {
      if (!(mask >> k & 1U)) continue;
      psi.push_back(phi.pairs[k]);
      if (std::find(phi_hat.begin(), phi_hat.end(), phi.pairs[k]) != phi_hat.end()) ++hat_count;
    }
    cell.terms.push_back({hat_count % 2 == 0 ? 1 : -1, lambda_of_psi(z, psi)});
  }
  return cell;
}

Cell canonical_cell(const Symbol& z) { return make_cell(z, phi_z(z), phi_hat_z(z)); }

ClassFunction cell_character(const Cell& cell) {
  ClassFunction f(rank(cell.z));
  for (const auto& term : cell.terms) {
    auto chi = w_irreducible(bipartition_of(term.symbol));
    if (term.sign > 0)
      f += chi;
    else
      f -= chi;
  }
  return f;
}

namespace {

// Rows r = 1..len(β)+1 of an even horizontal strip over β: α_r ∈ [β_r, β_{r-1}]
// with α_r - β_r even.
void even_strips(const Partition& beta, std::size_t row, int budget, std::vector<int>& alpha,
                 std::vector<Partition>& out) {
  const std::size_t rows = static_cast<std::size_t>(beta.length()) + 1;
  if (row == rows) {
    if (budget == 0) out.push_back(Partition::from_unsorted(alpha));
    return;
  }
  int lo = beta[row];
  int hi = row == 0 ? lo + budget : std::min(beta[row - 1], lo + budget);
  for (int value = lo; value <= hi; value += 2) {
    alpha.push_back(value);
    even_strips(beta, row + 1, budget - (value - lo), alpha, out);
    alpha.pop_back();
  }
}

}  // namespace

std::vector<Symbol> enumerate_special_set(int n) {
  if (n < 1) throw std::invalid_argument("enumerate_special_set: n must be at least 1");
  std::vector<Symbol> out;
  for (int k = 0; k <= n; ++k) {
    for (const auto& beta : partitions_of(k)) {
      std::vector<Partition> alphas;
      std::vector<int> alpha;
      even_strips(beta, 0, 2 * (n - k), alpha, alphas);
      for (const auto& a : alphas) {
        Symbol z = symbol_of({a, beta});
        if (!is_special(z))
          throw ModelViolation("even horizontal strip produced a non-special symbol",
                               format(Bipartition{a, beta}) + " -> " + format(z));
        out.push_back(z);
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<FamilyMember> family(const Symbol& z) {
  require_special(z);
  auto sd = singles_and_doubles(z);
  const auto& m = sd.singles;
  auto top_singles = intersection(z.top(), m);
  std::vector<FamilyMember> out;
  for (std::size_t mask = 0; mask < (std::size_t{1} << m.size()); ++mask) {
    std::vector<int> a;
    for (std::size_t k = 0; k < m.size(); ++k)
      if (mask >> k & 1U) a.push_back(m[k]);
    if (a.size() % 2 != 0) continue;
    auto top = symmetric_difference(a, top_singles);
    auto bottom = set_difference(m, top);
    out.push_back({{m, a}, Symbol(set_union(sd.doubles, top), set_union(sd.doubles, bottom))});
  }
  return out;
}

FamilyIndex family_index(const Symbol& z, const Symbol& member) {
  require_special(z);
  auto sd = singles_and_doubles(z);
  auto msd = singles_and_doubles(member);
  if (msd.singles != sd.singles || msd.doubles != sd.doubles)
    throw std::invalid_argument("symbol " + format(member) + " is not in the family of " +
                                format(z));
  auto a = symmetric_difference(intersection(member.top(), sd.singles),
                                intersection(z.top(), sd.singles));
  if (a.size() % 2 != 0) a = symmetric_difference(a, sd.singles);
  return {sd.singles, a};
}

std::vector<FourierEntry> fourier_multiplicities(const Cell& cell) {
  std::vector<std::vector<int>> b_sets;
  for (const auto& term : cell.terms) b_sets.push_back(family_index(cell.z, term.symbol).subset);
  const Rational scale(1, Integer(1) << static_cast<unsigned>(cell.phi.pairs.size()));
  std::vector<FourierEntry> out;
  for (auto& member : family(cell.z)) {
    Rational sum = 0;
    for (std::size_t t = 0; t < cell.terms.size(); ++t) {
      auto overlap = intersection(member.index.subset, b_sets[t]).size();
      sum += cell.terms[t].sign * (overlap % 2 == 0 ? 1 : -1);
    }
    sum *= scale;
    sum.canonicalize();
    out.push_back({std::move(member), sum});
  }
  return out;
}

std::vector<Symbol> fourier_constituents(const Cell& cell) {
  std::vector<Symbol> out;
  for (const auto& entry : fourier_multiplicities(cell)) {
    if (entry.multiplicity == 1) {
      out.push_back(entry.member.symbol);
    } else if (entry.multiplicity != 0) {
      std::string a;
      for (int x : entry.member.index.subset) a += (a.empty() ? "" : ",") + std::to_string(x);
      throw ModelViolation("Fourier multiplicity " + to_string(entry.multiplicity) +
                               " outside {0,1}",
                           "Z=" + format(cell.z) + " A={" + a + "} symbol=" +
                               format(entry.member.symbol));
    }
  }
  const std::size_t expected = std::size_t{1} << cell.phi.pairs.size();
  if (out.size() != expected)
    throw ModelViolation("cell has " + std::to_string(out.size()) + " constituents, expected " +
                             std::to_string(expected),
                         format(cell.z));
  std::sort(out.begin(), out.end());
  return out;
}

DistinguishedReport distinguished(int n) {
  DistinguishedReport report;
  report.n = n;
  report.rank = 2 * n;
  std::set<Symbol> all;
  std::size_t expected = 0;
  for (const auto& z : enumerate_special_set(n)) {
    CellReport cr;
    cr.cell = canonical_cell(z);
    cr.d = static_cast<int>(cr.cell.phi.pairs.size());
    cr.constituents = fourier_constituents(cr.cell);
    expected += cr.constituents.size();
    all.insert(cr.constituents.begin(), cr.constituents.end());
    report.cells.push_back(std::move(cr));
  }
  report.symbols.assign(all.begin(), all.end());
  if (report.symbols.size() != expected)
    throw ModelViolation("families of distinct special symbols overlap",
                         "rank " + std::to_string(report.rank));
  for (int d = 0; d * d + d <= report.rank; ++d)
    if (d * d + d == report.rank) {
      report.cuspidal_required = true;
      report.cuspidal_present = all.contains(cuspidal_symbol(d));
    }
  if (!report.cuspidal_required)
    report.cuspidal_present =
        std::any_of(all.begin(), all.end(), [](const Symbol& s) { return is_cuspidal(s); });
  if (report.cuspidal_required && !report.cuspidal_present)
    throw ModelViolation("cuspidal symbol missing from the distinguished list",
                         "rank " + std::to_string(report.rank));
  return report;
}

}  // namespace symdist
