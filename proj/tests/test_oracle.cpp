#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>

#include "symdist/oracle.hpp"
#include "symdist/xi.hpp"

using namespace symdist;
using namespace symdist::oracle;

namespace {

// Key for set membership: image then flip bits.
std::vector<int> key(const SignedPermutation& w) {
  std::vector<int> k;
  for (int i = 0; i < w.degree(); ++i) k.push_back(w.image(i) * 2 + (w.flipped(i) ? 1 : 0));
  return k;
}

}  // namespace

TEST_CASE("group enumeration") {
  CHECK(enumerate_group(1).size() == 2);
  CHECK(enumerate_group(2).size() == 8);
  CHECK(enumerate_group(3).size() == 48);
  CHECK(enumerate_group(4).size() == 384);
  CHECK_THROWS_AS(enumerate_group(5), std::invalid_argument);
  CHECK_THROWS_AS(for_each_element(7, [](const SignedPermutation&) {}), std::invalid_argument);

  auto g = enumerate_group(3);
  std::set<std::vector<int>> keys;
  for (const auto& w : g) keys.insert(key(w));
  CHECK(keys.size() == g.size());
  for (const auto& a : g) {
    CHECK(a * a.inverse() == SignedPermutation::identity(3));
    for (const auto& b : g) CHECK(keys.count(key(a * b)));
  }
  CHECK_THROWS_AS(SignedPermutation({0, 0}, {0, 0}), std::invalid_argument);
  CHECK_THROWS_AS(SignedPermutation({0, 1}, {0}), std::invalid_argument);
}

TEST_CASE("cycle types") {
  CHECK(class_of(SignedPermutation::identity(2)) == parse_bipartition("1,1;-"));
  CHECK(class_of(SignedPermutation({0, 1}, {1, 0})) == parse_bipartition("1;1"));
  CHECK(class_of(SignedPermutation({1, 0}, {0, 0})) == parse_bipartition("2;-"));
  CHECK(class_of(SignedPermutation({1, 0}, {1, 0})) == parse_bipartition("-;2"));
  CHECK(class_of(SignedPermutation({1, 0}, {1, 1})) == parse_bipartition("2;-"));
  // Conjugation preserves the class.
  auto g = enumerate_group(3);
  for (const auto& w : g)
    for (std::size_t k = 0; k < g.size(); k += 7) CHECK(class_of(g[k] * w * g[k].inverse()) == class_of(w));
}

TEST_CASE("subgroups") {
  CHECK(subgroup_order(1, Subgroup::K) == 8);
  CHECK(subgroup_order(2, Subgroup::K) == 128);
  CHECK(subgroup_order(1, Subgroup::N) == 4);
  CHECK(subgroup_order(2, Subgroup::N) == 32);
  CHECK(in_n(sigma(2), 2));
  CHECK(in_k(sigma(2), 2));
  CHECK(sgn_k(sigma(2), 2) == -1);
  for (int n = 1; n <= 2; ++n) {
    CHECK(is_linear_character(n, Subgroup::K, SubgroupCharacter::sgn_K));
    CHECK(is_linear_character(n, Subgroup::N, SubgroupCharacter::sgn_N));
    CHECK(is_linear_character(n, Subgroup::N, SubgroupCharacter::trivial));
  }
}

TEST_CASE("induced characters") {
  // |K_1| = 8 = |W_2|, so the index and the degree are 1; K_2 has index 3.
  auto ind = induced_character_bruteforce(1, Subgroup::K, SubgroupCharacter::trivial);
  CHECK(ind == trivial_character(2));
  auto ind2 = induced_character_bruteforce(2, Subgroup::K, SubgroupCharacter::trivial);
  CHECK(ind2.at(parse_bipartition("1,1,1,1;-")) == 3);
  auto ind_n = induced_character_bruteforce(1, Subgroup::N, SubgroupCharacter::trivial);
  CHECK(ind_n.at(parse_bipartition("1,1;-")) == 2);
  CHECK(kappa_bruteforce(1) == kappa(1));
  auto nu1 = nu_bruteforce(1);
  std::vector<int> want{2, 0, 0, 0, -2};
  std::vector<const char*> classes{"1,1;-", "2;-", "1;1", "-;2", "-;1,1"};
  for (std::size_t i = 0; i < classes.size(); ++i) CHECK(nu1.at(parse_bipartition(classes[i])) == want[i]);
  CHECK(kappa_bruteforce(2) == kappa(2));
  CHECK(nu_bruteforce(2) == nu(2));
  CHECK_THROWS_AS(induced_character_bruteforce(4, Subgroup::K, SubgroupCharacter::trivial), std::invalid_argument);
}

TEST_CASE("quadratic character by definition") {
  auto one = chi_definitional(1);
  CHECK(one.values.at(parse_bipartition("1;-")) == 1);
  CHECK(one.values.at(parse_bipartition("-;1")) == -1);
  auto two = chi_definitional(2);
  CHECK(two.values.at(parse_bipartition("-;1,1")) == 1);
  CHECK(two.values.at(parse_bipartition("-;2")) == -1);
  for (int n = 1; n <= 4; ++n) {
    auto c = chi_definitional(n);
    CHECK(c.class_constant);
    CHECK(c.matches_convention);
  }
  CHECK_THROWS_AS(chi_definitional(5), std::invalid_argument);
}

TEST_CASE("claims") {
  auto claims = verify_claims(2, false);
  CHECK(claims.size() == 20);
  for (const auto& c : claims) {
    CAPTURE(c.name);
    CHECK(c.passed);
  }
  auto with_w6 = verify_claims(1, true);
  CHECK(with_w6.size() == 4 + 6 + 2);
  for (const auto& c : with_w6) CHECK(c.passed);
}
