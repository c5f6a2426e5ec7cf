#include "symdist/symbols.hpp"

#include <algorithm>
#include <iterator>
#include <numeric>
#include <stdexcept>

namespace symdist {

namespace {

void check_row(const std::vector<int>& row) {
  for (std::size_t i = 0; i < row.size(); ++i) {
    if (row[i] < 0) throw std::invalid_argument("symbol entries must be non-negative");
    if (i > 0 && row[i] <= row[i - 1])
      throw std::invalid_argument("symbol rows must be strictly increasing");
  }
}

std::string format_row(const std::vector<int>& row) {
  if (row.empty()) return "-";
  std::string out;
  for (std::size_t i = 0; i < row.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(row[i]);
  }
  return out;
}

}  // namespace

Symbol::Symbol(std::vector<int> top, std::vector<int> bottom)
    : Symbol(reduce({std::move(top), std::move(bottom)})) {}

Symbol reduce(const RawSymbol& raw) {
  check_row(raw.top);
  check_row(raw.bottom);
  std::vector<int> top = raw.top;
  std::vector<int> bottom = raw.bottom;
  while (!top.empty() && !bottom.empty() && top.front() == 0 && bottom.front() == 0) {
    top.erase(top.begin());
    bottom.erase(bottom.begin());
    for (int& x : top) --x;
    for (int& x : bottom) --x;
  }
  if (top.size() < bottom.size() || (top.size() == bottom.size() && bottom < top))
    std::swap(top, bottom);
  return Symbol(Symbol::Normalized{}, std::move(top), std::move(bottom));
}

std::strong_ordering operator<=>(const Symbol& a, const Symbol& b) {
  if (auto c = rank(a) <=> rank(b); c != 0) return c;
  if (auto c = defect(a) <=> defect(b); c != 0) return c;
  if (auto c = a.top_ <=> b.top_; c != 0) return c;
  return a.bottom_ <=> b.bottom_;
}

int rank(const Symbol& s) {
  int total = std::accumulate(s.top().begin(), s.top().end(), 0) +
              std::accumulate(s.bottom().begin(), s.bottom().end(), 0);
  // floor(((k-1)/2)^2) = floor((k-1)^2 / 4)
  int k = static_cast<int>(s.top().size() + s.bottom().size());
  return total - ((k - 1) * (k - 1)) / 4;
}

int defect(const Symbol& s) {
  return static_cast<int>(s.top().size()) - static_cast<int>(s.bottom().size());
}

Symbol symbol_of(const Bipartition& b) {
  // Ascending parts, α padded to exactly one more part than β.
  std::vector<int> alpha(b.alpha.parts().rbegin(), b.alpha.parts().rend());
  std::vector<int> beta(b.beta.parts().rbegin(), b.beta.parts().rend());
  std::size_t m = std::max(alpha.size() == 0 ? 0 : alpha.size() - 1, beta.size());
  alpha.insert(alpha.begin(), m + 1 - alpha.size(), 0);
  beta.insert(beta.begin(), m - beta.size(), 0);
  for (std::size_t i = 0; i < alpha.size(); ++i) alpha[i] += static_cast<int>(i);
  for (std::size_t i = 0; i < beta.size(); ++i) beta[i] += static_cast<int>(i);
  return Symbol(std::move(alpha), std::move(beta));
}

Bipartition bipartition_of(const Symbol& s) {
  if (defect(s) != 1)
    throw std::invalid_argument("bipartition_of: symbol " + format(s) +
                                " does not have defect 1");
  auto unshift = [](const std::vector<int>& row) {
    std::vector<int> parts;
    for (std::size_t i = 0; i < row.size(); ++i) parts.push_back(row[i] - static_cast<int>(i));
    return Partition::from_unsorted(std::move(parts));
  };
  return {unshift(s.top()), unshift(s.bottom())};
}

bool is_special(const Symbol& s) {
  if (defect(s) != 1) return false;
  const auto& top = s.top();
  const auto& bottom = s.bottom();
  for (std::size_t i = 0; i < bottom.size(); ++i)
    if (top[i] > bottom[i] || bottom[i] > top[i + 1]) return false;
  return true;
}

SinglesAndDoubles singles_and_doubles(const Symbol& s) {
  SinglesAndDoubles out;
  std::set_symmetric_difference(s.top().begin(), s.top().end(), s.bottom().begin(),
                                s.bottom().end(), std::back_inserter(out.singles));
  std::set_intersection(s.top().begin(), s.top().end(), s.bottom().begin(),
                        s.bottom().end(), std::back_inserter(out.doubles));
  out.d = (static_cast<int>(out.singles.size()) - 1) / 2;
  return out;
}

bool is_cuspidal(const Symbol& s) {
  int def = defect(s);
  if (def % 2 == 0) return false;
  return rank(s) == (def * def) / 4;
}

Symbol cuspidal_symbol(int d) {
  std::vector<int> top(static_cast<std::size_t>(2 * d + 1));
  std::iota(top.begin(), top.end(), 0);
  return Symbol(std::move(top), {});
}

namespace {

// Strictly increasing sequences of the given length, entries >= lo, summing
// to `sum`.
void increasing_rows(int length, int sum, int lo, std::vector<int>& current,
                     std::vector<std::vector<int>>& out) {
  if (length == 0) {
    if (sum == 0) out.push_back(current);
    return;
  }
  if (length == 1) {
    if (sum >= lo) {
      current.push_back(sum);
      out.push_back(current);
      current.pop_back();
    }
    return;
  }
  // remaining length-1 entries are each > v, so need sum - v >= (length-1)*(v+1) + (length-1)(length-2)/2
  for (int v = lo;; ++v) {
    int rest_min = (length - 1) * (v + 1) + (length - 1) * (length - 2) / 2;
    if (v + rest_min > sum) break;
    current.push_back(v);
    increasing_rows(length - 1, sum - v, v + 1, current, out);
    current.pop_back();
  }
}

std::vector<std::vector<int>> increasing_rows(int length, int sum) {
  std::vector<std::vector<int>> out;
  std::vector<int> current;
  increasing_rows(length, sum, 0, current, out);
  return out;
}

std::vector<Symbol> symbols_of_defect(int rank_value, int def) {
  std::vector<Symbol> out;
  // A reduced symbol with m bottom entries has rank at least m + floor(def^2/4).
  int floor_bound = (def * def) / 4;
  for (int m = 0; m + floor_bound <= rank_value; ++m) {
    int k = 2 * m + def;
    int total = rank_value + ((k - 1) * (k - 1)) / 4;
    for (int top_sum = 0; top_sum <= total; ++top_sum) {
      auto tops = increasing_rows(m + def, top_sum);
      if (tops.empty()) continue;
      auto bottoms = increasing_rows(m, total - top_sum);
      for (const auto& top : tops)
        for (const auto& bottom : bottoms) {
          if (!top.empty() && !bottom.empty() && top[0] == 0 && bottom[0] == 0) continue;
          out.push_back(reduce({top, bottom}));
        }
    }
  }
  return out;
}

}  // namespace

std::vector<Symbol> defect_one_symbols(int rank_value) {
  auto out = symbols_of_defect(rank_value, 1);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Symbol> odd_defect_symbols(int rank_value) {
  std::vector<Symbol> out;
  for (int def = 1; (def * def) / 4 <= rank_value; def += 2) {
    auto part = symbols_of_defect(rank_value, def);
    out.insert(out.end(), part.begin(), part.end());
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::string format(const Symbol& s) {
  return format_row(s.top()) + "|" + format_row(s.bottom());
}

Symbol parse_symbol(std::string_view text) {
  auto bar = text.find('|');
  if (bar == std::string_view::npos)
    throw std::invalid_argument("malformed symbol: '" + std::string(text) + "'");
  auto row = [&](std::string_view part) {
    std::vector<int> values;
    if (part == "-" || part.empty()) return values;
    // Partitions share the comma list syntax, but symbol rows may contain 0.
    std::size_t pos = 0;
    while (pos <= part.size()) {
      std::size_t comma = part.find(',', pos);
      if (comma == std::string_view::npos) comma = part.size();
      std::string token(part.substr(pos, comma - pos));
      std::size_t used = 0;
      int value = 0;
      try {
        value = std::stoi(token, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (token.empty() || used != token.size())
        throw std::invalid_argument("malformed symbol: '" + std::string(text) + "'");
      values.push_back(value);
      pos = comma + 1;
    }
    return values;
  };
  return Symbol(row(text.substr(0, bar)), row(text.substr(bar + 1)));
}

}  // namespace symdist
