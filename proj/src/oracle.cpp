#include "symdist/oracle.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "symdist/xi.hpp"

namespace symdist::oracle {

SignedPermutation::SignedPermutation(std::vector<int> image, std::vector<std::uint8_t> flips)
    : image_(std::move(image)), flips_(std::move(flips)) {
  if (image_.size() != flips_.size())
    throw std::invalid_argument("signed permutation: image/flip size mismatch");
  std::vector<bool> seen(image_.size(), false);
  for (int x : image_) {
    if (x < 0 || x >= static_cast<int>(image_.size()) || seen[static_cast<std::size_t>(x)])
      throw std::invalid_argument("signed permutation: not a bijection");
    seen[static_cast<std::size_t>(x)] = true;
  }
}

SignedPermutation SignedPermutation::identity(int n) {
  std::vector<int> image(static_cast<std::size_t>(n));
  std::iota(image.begin(), image.end(), 0);
  return {std::move(image), std::vector<std::uint8_t>(static_cast<std::size_t>(n), 0)};
}

SignedPermutation SignedPermutation::operator*(const SignedPermutation& rhs) const {
  const auto n = image_.size();
  std::vector<int> image(n);
  std::vector<std::uint8_t> flips(n);
  for (std::size_t i = 0; i < n; ++i) {
    auto mid = static_cast<std::size_t>(rhs.image_[i]);
    image[i] = image_[mid];
    flips[i] = static_cast<std::uint8_t>(rhs.flips_[i] ^ flips_[mid]);
  }
  return {std::move(image), std::move(flips)};
}

SignedPermutation SignedPermutation::inverse() const {
  const auto n = image_.size();
  std::vector<int> image(n);
  std::vector<std::uint8_t> flips(n);
  for (std::size_t i = 0; i < n; ++i) {
    auto to = static_cast<std::size_t>(image_[i]);
    image[to] = static_cast<int>(i);
    flips[to] = flips_[i];
  }
  return {std::move(image), std::move(flips)};
}

void for_each_element(int n, const std::function<void(const SignedPermutation&)>& visit) {
  if (n < 0 || n > kMaxStreamDegree)
    throw std::invalid_argument("for_each_element: W_" + std::to_string(n) +
                                " is outside the brute-force range");
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  do {
    for (unsigned mask = 0; mask < (1U << n); ++mask) {
      std::vector<std::uint8_t> flips(static_cast<std::size_t>(n));
      for (int i = 0; i < n; ++i) flips[static_cast<std::size_t>(i)] = (mask >> i) & 1U;
      visit(SignedPermutation(perm, std::move(flips)));
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
}

std::vector<SignedPermutation> enumerate_group(int n) {
  if (n < 0 || n > kMaxMaterializedDegree)
    throw std::invalid_argument("enumerate_group: n must be between 0 and 4");
  std::vector<SignedPermutation> out;
  for_each_element(n, [&](const SignedPermutation& w) { out.push_back(w); });
  return out;
}

Bipartition class_of(const SignedPermutation& w) {
  const int n = w.degree();
  std::vector<bool> seen(static_cast<std::size_t>(n), false);
  std::vector<int> positive, negative;
  for (int start = 0; start < n; ++start) {
    if (seen[static_cast<std::size_t>(start)]) continue;
    int length = 0;
    int flips = 0;
    for (int x = start; !seen[static_cast<std::size_t>(x)]; x = w.image(x)) {
      seen[static_cast<std::size_t>(x)] = true;
      flips += w.flipped(x) ? 1 : 0;
      ++length;
    }
    (flips % 2 == 0 ? positive : negative).push_back(length);
  }
  return {Partition::from_unsorted(positive), Partition::from_unsorted(negative)};
}

std::map<Bipartition, std::uint64_t> class_sizes(int n) {
  std::map<Bipartition, std::uint64_t> sizes;
  for_each_element(n, [&](const SignedPermutation& w) { ++sizes[class_of(w)]; });
  return sizes;
}

SignedPermutation sigma(int n) {
  std::vector<int> image(static_cast<std::size_t>(2 * n));
  for (int i = 0; i < 2 * n; ++i) image[static_cast<std::size_t>(i)] = 2 * n - 1 - i;
  return {std::move(image), std::vector<std::uint8_t>(static_cast<std::size_t>(2 * n), 0)};
}

bool in_k(const SignedPermutation& w, int n) {
  bool keeps = true, swaps = true;
  for (int i = 0; i < n; ++i) {
    if (w.image(i) >= n) keeps = false;
    if (w.image(i) < n) swaps = false;
  }
  return keeps || swaps;
}

bool in_n(const SignedPermutation& w, int n) {
  auto s = sigma(n);
  return w * s == s * w;
}

int sgn_k(const SignedPermutation& w, int n) { return w.image(0) < n ? 1 : -1; }

int sgn_n(const SignedPermutation& w, int n) {
  int flips = 0;
  for (int i = 0; i < n; ++i) flips += w.flipped(i) ? 1 : 0;
  return flips % 2 == 0 ? 1 : -1;
}

namespace {

bool member(const SignedPermutation& w, int n, Subgroup h) {
  return h == Subgroup::K ? in_k(w, n) : in_n(w, n);
}

int character_value(const SignedPermutation& w, int n, SubgroupCharacter chi) {
  switch (chi) {
    case SubgroupCharacter::trivial: return 1;
    case SubgroupCharacter::sgn_K: return sgn_k(w, n);
    case SubgroupCharacter::sgn_N: return sgn_n(w, n);
  }
  return 0;
}

}  // namespace

std::uint64_t subgroup_order(int n, Subgroup h) {
  std::uint64_t count = 0;
  for_each_element(2 * n, [&](const SignedPermutation& w) { count += member(w, n, h) ? 1 : 0; });
  return count;
}

bool is_linear_character(int n, Subgroup h, SubgroupCharacter chi) {
  if (n > 2) throw std::invalid_argument("is_linear_character: n must be at most 2");
  std::vector<SignedPermutation> elements;
  for_each_element(2 * n, [&](const SignedPermutation& w) {
    if (member(w, n, h)) elements.push_back(w);
  });
  for (const auto& a : elements)
    for (const auto& b : elements)
      if (character_value(a * b, n, chi) != character_value(a, n, chi) * character_value(b, n, chi))
        return false;
  return true;
}

ClassFunction induced_character_bruteforce(int n, Subgroup h, SubgroupCharacter chi) {
  if (n < 0 || 2 * n > kMaxStreamDegree)
    throw std::invalid_argument("induced_character_bruteforce: n must be at most 3");
  ClassFunction sums(2 * n);
  std::uint64_t order = 0;
  for_each_element(2 * n, [&](const SignedPermutation& w) {
    if (!member(w, n, h)) return;
    ++order;
    sums.set(class_of(w), sums.at(class_of(w)) + character_value(w, n, chi));
  });
  const auto& index = sums.index();
  ClassFunction induced(2 * n);
  for (std::size_t i = 0; i < index.size(); ++i) {
    induced[i] = Rational(index.centralizer(i)) * sums[i] / Rational(Integer(order));
    induced[i].canonicalize();
  }
  return induced;
}

ClassFunction kappa_bruteforce(int n) {
  return induced_character_bruteforce(n, Subgroup::K, SubgroupCharacter::trivial) -
         induced_character_bruteforce(n, Subgroup::K, SubgroupCharacter::sgn_K);
}

ClassFunction nu_bruteforce(int n) {
  return induced_character_bruteforce(n, Subgroup::N, SubgroupCharacter::sgn_N);
}

QuadraticCharacterCheck chi_definitional(int n) {
  if (n < 0 || n > kMaxMaterializedDegree)
    throw std::invalid_argument("chi_definitional: n must be at most 4");
  QuadraticCharacterCheck check;
  check.values = ClassFunction(n);
  std::map<Bipartition, int> seen;
  for_each_element(n, [&](const SignedPermutation& w) {
    int flips = 0;
    for (int i = 0; i < n; ++i) flips += w.flipped(i) ? 1 : 0;
    int value = flips % 2 == 0 ? 1 : -1;
    auto c = class_of(w);
    auto [it, inserted] = seen.emplace(c, value);
    if (!inserted && it->second != value) check.class_constant = false;
  });
  for (const auto& [c, value] : seen) check.values.set(c, value);
  check.matches_convention = check.class_constant && check.values == quadratic_character(n);
  return check;
}

std::vector<Claim> verify_claims(int max_n, bool include_w6) {
  std::vector<Claim> claims;
  auto add = [&](std::string name, bool ok, std::string detail = {}) {
    claims.push_back({std::move(name), ok, std::move(detail)});
  };
  const int top_degree = std::min(kMaxMaterializedDegree, std::max(1, 2 * max_n));
  for (int n = 1; n <= top_degree; ++n) {
    auto sizes = class_sizes(n);
    const auto& index = ClassIndex::of(n);
    bool ok = sizes.size() == index.size();
    std::string detail;
    for (std::size_t i = 0; ok && i < index.size(); ++i) {
      Integer expected = index.group_order() / index.centralizer(i);
      auto it = sizes.find(index[i]);
      if (it == sizes.end() || Integer(static_cast<unsigned long>(it->second)) != expected) {
        ok = false;
        detail = "class " + format(index[i]);
      }
    }
    add("class sizes W_" + std::to_string(n) + " = |W|/z", ok, detail);

    auto chi = chi_definitional(n);
    add("quadratic character W_" + std::to_string(n) + " = (-1)^len(beta)",
        chi.class_constant && chi.matches_convention,
        chi.class_constant ? "" : "not constant on classes");
  }

  std::vector<int> ranks;
  for (int n = 1; n <= std::min(max_n, 2); ++n) ranks.push_back(n);
  if (include_w6) ranks.push_back(3);
  for (int n : ranks) {
    const std::string tag = "n=" + std::to_string(n);
    if (n <= 2) {
      std::uint64_t fact = 1;
      for (int i = 2; i <= n; ++i) fact *= static_cast<std::uint64_t>(i);
      std::uint64_t k_expected = 2 * fact * fact * (std::uint64_t{1} << (2 * n));
      std::uint64_t n_expected = (std::uint64_t{1} << n) * fact * (std::uint64_t{1} << n);
      auto k_order = subgroup_order(n, Subgroup::K);
      auto n_order = subgroup_order(n, Subgroup::N);
      add("|K| = 2 (n!)^2 2^(2n), " + tag, k_order == k_expected,
          std::to_string(k_order) + " vs " + std::to_string(k_expected));
      add("|N| = 2^n n! 2^n, " + tag, n_order == n_expected,
          std::to_string(n_order) + " vs " + std::to_string(n_expected));
      add("sgn_K is a linear character, " + tag,
          is_linear_character(n, Subgroup::K, SubgroupCharacter::sgn_K));
      add("sgn_N is a linear character, " + tag,
          is_linear_character(n, Subgroup::N, SubgroupCharacter::sgn_N));
    }
    auto compare = [&](const ClassFunction& closed, const ClassFunction& brute) {
      for (std::size_t i = 0; i < closed.values().size(); ++i)
        if (closed[i] != brute[i])
          return "class " + format(closed.classes()[i]) + ": closed form " +
                 to_string(closed[i]) + ", brute force " + to_string(brute[i]);
      return std::string();
    };
    auto kd = compare(kappa(n), kappa_bruteforce(n));
    add("kappa closed form = Ind 1 - Ind sgn_K, " + tag, kd.empty(), kd);
    auto nd = compare(nu(n), nu_bruteforce(n));
    add("nu closed form = Ind sgn_N, " + tag, nd.empty(), nd);
  }
  return claims;
}

}  // namespace symdist::oracle
