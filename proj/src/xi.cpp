#include "symdist/xi.hpp"

#include <stdexcept>

#include "symdist/cells.hpp"
#include "symdist/error.hpp"

namespace symdist {

ClassFunction multiplicative(int n, BlockRule rule) {
  return ClassFunction::from(n, [&](const Bipartition& c) {
    Rational value = 1;
    auto apply = [&](const Partition& p, bool negative) {
      const auto& parts = p.parts();
      for (std::size_t i = 0; i < parts.size();) {
        std::size_t j = i;
        while (j < parts.size() && parts[j] == parts[i]) ++j;
        value *= rule(parts[i], static_cast<int>(j - i), negative);
        i = j;
      }
    };
    apply(c.alpha, false);
    apply(c.beta, true);
    return value;
  });
}

Rational kappa_block(int part, int multiplicity, bool /*negative*/) {
  if (part % 2 != 0) return 0;
  return Rational(power(Integer(2), static_cast<unsigned long>(multiplicity)));
}

Rational nu_block(int part, int multiplicity, bool negative) {
  if (multiplicity % 2 != 0) return 0;
  const auto half = static_cast<unsigned long>(multiplicity / 2);
  // Odd parts i with multiplicity 2k give (±i)^k (2k)!/k!; even parts p with
  // even multiplicity m give (±p)^{m/2} m!/(m/2)!. Both read base^h (2h)!/h!.
  Integer base = negative ? Integer(-part) : Integer(part);
  return Rational(power(base, half) * factorial(2 * half) / factorial(half));
}

ClassFunction kappa(int r) {
  if (r < 0) throw std::invalid_argument("kappa: negative index");
  return multiplicative(2 * r, kappa_block);
}

ClassFunction nu(int m) {
  if (m < 0) throw std::invalid_argument("nu: negative index");
  return multiplicative(2 * m, nu_block);
}

Decomposition kappa_expected_decomposition(int r) {
  Decomposition d;
  for (int i = 0; i <= r; ++i)
    d[Bipartition{Partition::from_unsorted({2 * r - i, i}), Partition()}] = i % 2 == 0 ? 1 : -1;
  return d;
}

Decomposition nu_expected_decomposition(int m) {
  Decomposition d;
  for (const auto& alpha : partitions_of(m)) d[Bipartition{alpha, alpha}] = 1;
  return d;
}

const char* route_name(XiRoute route) {
  switch (route) {
    case XiRoute::induction: return "A";
    case XiRoute::gamma2: return "B";
    case XiRoute::cells: return "C";
  }
  return "?";
}

std::map<Bipartition, int> gamma2_circle_terms(int n) {
  std::map<Bipartition, int> terms;
  for (int k = 0; k <= n; ++k) {
    for (const auto& beta : partitions_of(k)) {
      for (const auto& alpha : partitions_of(2 * n - k)) {
        if (!contains(alpha, beta)) continue;
        SkewShape shape(alpha, beta);
        if (!in_gamma2_circle(shape)) continue;
        auto v = hv_split(shape).vertical.size() / 2;
        terms[Bipartition{alpha, beta}] = v % 2 == 0 ? 1 : -1;
      }
    }
  }
  return terms;
}

namespace {

ClassFunction route_induction(int n) {
  ClassFunction total(2 * n);
  for (int r = 0; r <= n; ++r) total += induction_product(kappa(r), nu(n - r));
  return total;
}

ClassFunction route_gamma2(int n) {
  ClassFunction total(2 * n);
  for (const auto& [b, sign] : gamma2_circle_terms(n)) {
    if (sign > 0)
      total += w_irreducible(b);
    else
      total -= w_irreducible(b);
  }
  return total;
}

ClassFunction route_cells(int n) {
  ClassFunction total(2 * n);
  for (const auto& z : enumerate_special_set(n)) total += cell_character(canonical_cell(z));
  return total;
}

}  // namespace

XiResult xi(int n, XiRoute route) {
  if (n < 1) throw std::invalid_argument("xi: n must be at least 1");
  XiResult result;
  result.n = n;
  result.route = route;
  switch (route) {
    case XiRoute::induction: result.character = route_induction(n); break;
    case XiRoute::gamma2: result.character = route_gamma2(n); break;
    case XiRoute::cells: result.character = route_cells(n); break;
  }
  if (!result.character.is_integral())
    throw ModelViolation("Xi character has non-integral values",
                         std::string("route ") + route_name(route));
  for (const auto& [b, c] : decompose(result.character)) {
    if (!is_integer(c) || abs(c) > 1)
      throw ModelViolation("Xi coefficient outside {-1,0,1}",
                           format(b) + " -> " + to_string(c));
    result.decomposition[b] = static_cast<int>(c.get_num().get_si());
  }
  return result;
}

RouteAgreement compare_routes(const XiResult& a, const XiResult& b) {
  RouteAgreement out;
  if (a.character.degree() != b.character.degree()) {
    out.agree = false;
    out.detail = "degree mismatch";
    return out;
  }
  for (std::size_t i = 0; i < a.character.values().size(); ++i) {
    if (a.character[i] != b.character[i]) {
      out.agree = false;
      out.first_difference = a.character.classes()[i];
      out.detail = std::string("route ") + route_name(a.route) + " gives " +
                   to_string(a.character[i]) + ", route " + route_name(b.route) + " gives " +
                   to_string(b.character[i]) + " at class " + format(*out.first_difference);
      return out;
    }
  }
  return out;
}

std::vector<XiResult> xi_all_routes(int n) {
  std::vector<XiResult> results{xi(n, XiRoute::induction), xi(n, XiRoute::gamma2),
                                xi(n, XiRoute::cells)};
  for (std::size_t k = 1; k < results.size(); ++k) {
    auto agreement = compare_routes(results[0], results[k]);
    if (!agreement.agree)
      throw ModelViolation("Xi routes disagree", agreement.detail);
  }
  return results;
}

}  // namespace symdist
