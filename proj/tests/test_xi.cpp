#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "symdist/cells.hpp"
#include "symdist/oracle.hpp"
#include "symdist/xi.hpp"

using namespace symdist;

namespace {

const std::vector<const char*> kW2Classes{"1,1;-", "2;-", "1;1", "-;2", "-;1,1"};

std::vector<Rational> on_w2(const ClassFunction& f) {
  std::vector<Rational> out;
  for (auto c : kW2Classes) out.push_back(f.at(parse_bipartition(c)));
  return out;
}

std::vector<Rational> rationals(std::initializer_list<int> v) { return {v.begin(), v.end()}; }

}  // namespace

TEST_CASE("kappa closed form") {
  CHECK(on_w2(kappa(1)) == rationals({0, 2, 0, 2, 0}));
  CHECK(kappa(2).at(parse_bipartition("2,2;-")) == 4);
  CHECK(kappa(2).at(parse_bipartition("-;2,2")) == 4);
  CHECK(kappa(2).at(parse_bipartition("2,1,1;-")) == 0);
  CHECK(kappa(2).at(parse_bipartition("2;2")) == 4);
  CHECK(kappa(0) == trivial_character(0));
}

TEST_CASE("nu closed form") {
  CHECK(on_w2(nu(1)) == rationals({2, 0, 0, 0, -2}));
  CHECK(nu(2).at(parse_bipartition("1,1,1,1;-")) == 12);
  CHECK(nu(2).at(parse_bipartition("-;1,1,1,1")) == 12);
  CHECK(nu(2).at(parse_bipartition("2,2;-")) == 4);
  CHECK(nu(2).at(parse_bipartition("-;2,2")) == -4);
  CHECK(nu(2).at(parse_bipartition("2;1,1")) == 0);
  CHECK(nu(0) == trivial_character(0));
}

TEST_CASE("kappa and nu decompositions") {
  for (int r = 0; r <= 4; ++r) {
    CAPTURE(r);
    CHECK(decompose(kappa(r)) == kappa_expected_decomposition(r));
    CHECK(decompose(nu(r)) == nu_expected_decomposition(r));
  }
  CHECK(kappa_expected_decomposition(2) ==
        Decomposition{{parse_bipartition("4;-"), 1}, {parse_bipartition("3,1;-"), -1}, {parse_bipartition("2,2;-"), 1}});
  CHECK(nu_expected_decomposition(2) ==
        Decomposition{{parse_bipartition("2;2"), 1}, {parse_bipartition("1,1;1,1"), 1}});
}

TEST_CASE("kappa and nu against brute-force induction") {
  for (int n = 1; n <= 2; ++n) {
    CHECK(kappa(n) == oracle::kappa_bruteforce(n));
    CHECK(nu(n) == oracle::nu_bruteforce(n));
  }
}

TEST_CASE("Xi_1") {
  auto results = xi_all_routes(1);
  CHECK(on_w2(results[0].character) == rationals({2, 2, 0, 2, -2}));
  std::map<Bipartition, int> want{
      {parse_bipartition("2;-"), 1}, {parse_bipartition("1,1;-"), -1}, {parse_bipartition("1;1"), 1}};
  for (const auto& r : results) CHECK(r.decomposition == want);
  auto manual = induction_product(kappa(1), nu(0)) + induction_product(kappa(0), nu(1));
  CHECK(manual == results[0].character);
}

TEST_CASE("route identity and coefficient support") {
  for (int n = 1; n <= 4; ++n) {
    CAPTURE(n);
    auto a = xi(n, XiRoute::induction);
    auto b = xi(n, XiRoute::gamma2);
    auto c = xi(n, XiRoute::cells);
    CHECK(a.character == b.character);
    CHECK(a.character == c.character);
    CHECK(compare_routes(a, c).agree);

    // Independent support test: walk all bipartitions and apply the rule.
    for (const auto& bp : bipartitions_of(2 * n)) {
      int want = 0;
      if (contains(bp.alpha, bp.beta)) {
        SkewShape s(bp.alpha, bp.beta);
        if (in_gamma2_circle(s)) want = (hv_split(s).vertical.size() / 2) % 2 ? -1 : 1;
      }
      auto it = a.decomposition.find(bp);
      CHECK((it == a.decomposition.end() ? 0 : it->second) == want);
    }
  }
}

TEST_CASE("trivial constituent and norms") {
  for (int n = 1; n <= 5; ++n) {
    auto r = xi(n, XiRoute::induction);
    CHECK(r.decomposition.at(Bipartition{Partition{2 * n}, {}}) == 1);
    for (const auto& [b, c] : r.decomposition) CHECK((c == 1 || c == -1));
  }
  std::vector<int> norms{3, 7, 16};
  for (int n = 1; n <= 3; ++n) {
    auto f = xi(n, XiRoute::induction).character;
    CHECK(inner_product(f, f) == norms[static_cast<std::size_t>(n - 1)]);
    int cells = 0;
    for (const auto& z : enumerate_special_set(n)) cells += 1 << singles_and_doubles(z).d;
    CHECK(cells == norms[static_cast<std::size_t>(n - 1)]);
  }
}

TEST_CASE("route disagreement is reported") {
  auto a = xi(2, XiRoute::induction);
  auto b = a;
  b.route = XiRoute::gamma2;
  b.character[3] += 1;
  auto cmp = compare_routes(a, b);
  CHECK_FALSE(cmp.agree);
  REQUIRE(cmp.first_difference.has_value());
  CHECK(*cmp.first_difference == a.character.classes()[3]);
  CHECK(cmp.detail.find(format(a.character.classes()[3])) != std::string::npos);
}
