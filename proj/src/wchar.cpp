#include "symdist/wchar.hpp"

#include <algorithm>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <utility>

namespace symdist {

Integer hyperoctahedral_order(int n) {
  return power(Integer(2), static_cast<unsigned long>(n)) *
         factorial(static_cast<unsigned long>(n));
}

namespace {

// Π over distinct parts k of (2k)^m m!.
Integer block_centralizer(const Partition& p) {
  Integer z = 1;
  const auto& parts = p.parts();
  for (std::size_t i = 0; i < parts.size();) {
    std::size_t j = i;
    while (j < parts.size() && parts[j] == parts[i]) ++j;
    auto m = static_cast<unsigned long>(j - i);
    z *= power(Integer(2 * parts[i]), m) * factorial(m);
    i = j;
  }
  return z;
}

}  // namespace

Integer centralizer_order(const Bipartition& c) {
  return block_centralizer(c.alpha) * block_centralizer(c.beta);
}

ClassIndex::ClassIndex(int n) : n_(n), classes_(bipartitions_of(n)) {
  for (std::size_t i = 0; i < classes_.size(); ++i) {
    positions_.emplace(classes_[i], i);
    centralizers_.push_back(centralizer_order(classes_[i]));
  }
  order_ = hyperoctahedral_order(n);
}

const ClassIndex& ClassIndex::of(int n) {
  if (n < 0) throw std::invalid_argument("ClassIndex: negative rank");
  static std::mutex mutex;
  static std::map<int, std::unique_ptr<ClassIndex>> cache;
  std::lock_guard lock(mutex);
  auto& slot = cache[n];
  if (!slot) slot.reset(new ClassIndex(n));
  return *slot;
}

std::size_t ClassIndex::index(const Bipartition& c) const {
  auto it = positions_.find(c);
  if (it == positions_.end())
    throw std::out_of_range("bipartition " + format(c) + " is not a class of W_" +
                            std::to_string(n_));
  return it->second;
}

ClassFunction::ClassFunction(int n)
    : index_(&ClassIndex::of(n)), values_(index_->size(), Rational(0)) {}

bool ClassFunction::is_integral() const {
  return std::all_of(values_.begin(), values_.end(),
                     [](const Rational& v) { return is_integer(v); });
}

ClassFunction& ClassFunction::operator+=(const ClassFunction& other) {
  if (other.degree() != degree()) throw std::invalid_argument("class function degree mismatch");
  for (std::size_t i = 0; i < values_.size(); ++i) values_[i] += other.values_[i];
  return *this;
}

ClassFunction& ClassFunction::operator-=(const ClassFunction& other) {
  if (other.degree() != degree()) throw std::invalid_argument("class function degree mismatch");
  for (std::size_t i = 0; i < values_.size(); ++i) values_[i] -= other.values_[i];
  return *this;
}

ClassFunction& ClassFunction::operator*=(const Rational& scalar) {
  for (auto& v : values_) v *= scalar;
  return *this;
}

bool operator==(const ClassFunction& a, const ClassFunction& b) {
  return a.degree() == b.degree() && a.values_ == b.values_;
}

Rational inner_product(const ClassFunction& f, const ClassFunction& g) {
  if (f.degree() != g.degree())
    throw std::invalid_argument("inner_product: W_" + std::to_string(f.degree()) +
                                " vs W_" + std::to_string(g.degree()));
  Rational sum = 0;
  const auto& index = f.index();
  for (std::size_t i = 0; i < index.size(); ++i) {
    if (sgn(f[i]) == 0 || sgn(g[i]) == 0) continue;
    sum += f[i] * g[i] / Rational(index.centralizer(i));
  }
  sum.canonicalize();
  return sum;
}

namespace {

struct PartBlock {
  int part;
  int multiplicity;
  bool negative;
};

std::vector<PartBlock> blocks_of(const Bipartition& c) {
  std::vector<PartBlock> blocks;
  auto add = [&](const Partition& p, bool negative) {
    const auto& parts = p.parts();
    for (std::size_t i = 0; i < parts.size();) {
      std::size_t j = i;
      while (j < parts.size() && parts[j] == parts[i]) ++j;
      blocks.push_back({parts[i], static_cast<int>(j - i), negative});
      i = j;
    }
  };
  add(c.alpha, false);
  add(c.beta, true);
  return blocks;
}

}  // namespace

ClassFunction induction_product(const ClassFunction& f, const ClassFunction& g) {
  const int a = f.degree();
  const int b = g.degree();
  const auto& left = f.index();
  const auto& right = g.index();
  return ClassFunction::from(a + b, [&](const Bipartition& c) {
    auto blocks = blocks_of(c);
    Rational total = 0;
    std::vector<int> take(blocks.size(), 0);
    // Choose how many cycles of each block go to the W_a factor.
    auto recurse = [&](auto&& self, std::size_t k, int budget) -> void {
      if (k == blocks.size()) {
        if (budget != 0) return;
        std::vector<int> la, lb, ra, rb;
        for (std::size_t j = 0; j < blocks.size(); ++j) {
          auto& lhs = blocks[j].negative ? lb : la;
          auto& rhs = blocks[j].negative ? rb : ra;
          lhs.insert(lhs.end(), static_cast<std::size_t>(take[j]), blocks[j].part);
          rhs.insert(rhs.end(), static_cast<std::size_t>(blocks[j].multiplicity - take[j]),
                     blocks[j].part);
        }
        Bipartition cl{Partition::from_unsorted(la), Partition::from_unsorted(lb)};
        Bipartition cr{Partition::from_unsorted(ra), Partition::from_unsorted(rb)};
        std::size_t il = left.index(cl);
        std::size_t ir = right.index(cr);
        if (sgn(f[il]) == 0 || sgn(g[ir]) == 0) return;
        Rational weight(centralizer_order(c), left.centralizer(il) * right.centralizer(ir));
        total += weight * f[il] * g[ir];
        return;
      }
      for (int t = 0; t <= blocks[k].multiplicity && t * blocks[k].part <= budget; ++t) {
        take[k] = t;
        self(self, k + 1, budget - t * blocks[k].part);
      }
      take[k] = 0;
    };
    recurse(recurse, 0, a);
    total.canonicalize();
    return total;
  });
}

ClassFunction trivial_character(int n) {
  return ClassFunction::from(n, [](const Bipartition&) { return Rational(1); });
}

ClassFunction quadratic_character(int n) {
  return ClassFunction::from(
      n, [](const Bipartition& c) { return Rational(c.beta.length() % 2 == 0 ? 1 : -1); });
}

namespace {

using CharacterKey = std::pair<Partition, Partition>;

Integer murnaghan_nakayama(const Partition& shape, const Partition& cycle_type,
                           std::map<CharacterKey, Integer>& memo) {
  if (shape.size() != cycle_type.size())
    throw std::invalid_argument("sym_character: sizes differ");
  if (cycle_type.empty()) return 1;
  CharacterKey key{shape, cycle_type};
  if (auto it = memo.find(key); it != memo.end()) return it->second;

  const int k = cycle_type[0];
  Partition rest(std::vector<int>(cycle_type.parts().begin() + 1, cycle_type.parts().end()));

  // Beta-set of the shape: removing a rim hook of length k moves one bead
  // from position x to the vacant position x - k; the leg length is the
  // number of beads strictly in between.
  const int len = shape.length();
  std::vector<int> beads(static_cast<std::size_t>(len));
  for (int i = 0; i < len; ++i) beads[static_cast<std::size_t>(i)] = shape[static_cast<std::size_t>(i)] + len - 1 - i;
  auto occupied = [&](int x) { return std::find(beads.begin(), beads.end(), x) != beads.end(); };

  Integer value = 0;
  for (int i = 0; i < len; ++i) {
    int from = beads[static_cast<std::size_t>(i)];
    int to = from - k;
    if (to < 0 || occupied(to)) continue;
    int between = 0;
    for (int x : beads)
      if (x > to && x < from) ++between;
    std::vector<int> moved = beads;
    moved[static_cast<std::size_t>(i)] = to;
    std::sort(moved.begin(), moved.end(), std::greater<>());
    std::vector<int> parts;
    for (int j = 0; j < len; ++j) parts.push_back(moved[static_cast<std::size_t>(j)] - (len - 1 - j));
    Integer term = murnaghan_nakayama(Partition::from_unsorted(parts), rest, memo);
    value += between % 2 == 0 ? term : Integer(-term);
  }
  memo.emplace(std::move(key), value);
  return value;
}

}  // namespace

Integer sym_character(const Partition& shape, const Partition& cycle_type) {
  thread_local std::map<CharacterKey, Integer> memo;
  return murnaghan_nakayama(shape, cycle_type, memo);
}

ClassFunction lifted_character(const Partition& alpha) {
  return ClassFunction::from(alpha.size(), [&](const Bipartition& c) {
    return Rational(sym_character(alpha, merge(c.alpha, c.beta)));
  });
}

ClassFunction twisted_lifted_character(const Partition& beta) {
  return ClassFunction::from(beta.size(), [&](const Bipartition& c) {
    Integer v = sym_character(beta, merge(c.alpha, c.beta));
    return Rational(c.beta.length() % 2 == 0 ? v : Integer(-v));
  });
}

namespace {

ClassFunction build_irreducible(const Bipartition& b) {
  return induction_product(lifted_character(b.alpha), twisted_lifted_character(b.beta));
}

}  // namespace

const std::vector<ClassFunction>& character_table(int n) {
  static std::mutex mutex;
  static std::map<int, std::unique_ptr<std::vector<ClassFunction>>> cache;
  std::lock_guard lock(mutex);
  auto& slot = cache[n];
  if (!slot) {
    auto table = std::make_unique<std::vector<ClassFunction>>();
    for (const auto& b : ClassIndex::of(n).classes()) table->push_back(build_irreducible(b));
    slot = std::move(table);
  }
  return *slot;
}

ClassFunction w_irreducible(const Bipartition& b) {
  const auto& index = ClassIndex::of(b.size());
  return character_table(b.size())[index.index(b)];
}

Decomposition decompose(const ClassFunction& f) {
  Decomposition out;
  const auto& table = character_table(f.degree());
  const auto& index = f.index();
  for (std::size_t i = 0; i < table.size(); ++i) {
    Rational c = inner_product(f, table[i]);
    if (sgn(c) != 0) out.emplace(index[i], std::move(c));
  }
  return out;
}

ClassFunction recompose(int n, const Decomposition& d) {
  ClassFunction f(n);
  for (const auto& [b, c] : d) f += w_irreducible(b) * c;
  return f;
}

}  // namespace symdist
