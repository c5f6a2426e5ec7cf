#include "symdist/bipartition.hpp"

#include <stdexcept>

namespace symdist {

std::strong_ordering operator<=>(const Bipartition& a, const Bipartition& b) {
  if (a.size() != b.size()) return a.size() <=> b.size();
  if (a.alpha.size() != b.alpha.size()) return b.alpha.size() <=> a.alpha.size();
  if (auto c = a.alpha <=> b.alpha; c != 0) return c;
  return a.beta <=> b.beta;
}

std::vector<Bipartition> bipartitions_of(int n) {
  std::vector<Bipartition> out;
  for (int a = n; a >= 0; --a) {
    auto alphas = partitions_of(a);
    auto betas = partitions_of(n - a);
    for (const auto& alpha : alphas)
      for (const auto& beta : betas) out.push_back({alpha, beta});
  }
  return out;
}

std::string format(const Bipartition& b) {
  return format(b.alpha) + ";" + format(b.beta);
}

Bipartition parse_bipartition(std::string_view text) {
  auto semi = text.find(';');
  if (semi == std::string_view::npos)
    throw std::invalid_argument("malformed bipartition: '" + std::string(text) + "'");
  return {parse_partition(text.substr(0, semi)), parse_partition(text.substr(semi + 1))};
}

}  // namespace symdist
