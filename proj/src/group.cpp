#include "ftq/group.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <random>
#include <stdexcept>

#include "ftq/errors.hpp"

namespace ftq {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

FpElement FpElement::inverse() const {
  if (value_ == 0) throw std::domain_error("inverse of zero in F_p");
  // Fermat: a^(p-2).
  std::uint64_t result = 1, base = value_;
  std::uint32_t e = modulus_ - 2;
  while (e) {
    if (e & 1) result = result * base % modulus_;
    base = base * base % modulus_;
    e >>= 1;
  }
  return {result, modulus_};
}

std::vector<std::string> FamilySpec::variables() const {
  std::vector<std::string> out;
  auto note = [&](const Polynomial& p) {
    for (const auto& v : p.variables())
      if (std::find(out.begin(), out.end(), v) == out.end()) out.push_back(v);
  };
  for (const auto& row : pattern)
    for (const auto& cell : row) note(cell);
  for (const auto& c : constraints) note(c.poly);
  return out;
}

namespace {

using Matrix = std::vector<std::uint32_t>;

Matrix multiply_mod(std::span<const std::uint32_t> a, std::span<const std::uint32_t> b, std::size_t n,
                    std::uint32_t p) {
  Matrix out(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      std::uint64_t acc = 0;
      for (std::size_t k = 0; k < n; ++k) acc += std::uint64_t(a[i * n + k]) * b[k * n + j];
      out[i * n + j] = static_cast<std::uint32_t>(acc % p);
    }
  return out;
}

std::optional<Matrix> inverse_mod(std::span<const std::uint32_t> m, std::size_t n, std::uint32_t p) {
  std::vector<FpElement> a;
  std::vector<FpElement> inv;
  a.reserve(n * n);
  inv.reserve(n * n);
  for (std::size_t i = 0; i < n * n; ++i) {
    a.emplace_back(m[i], p);
    inv.emplace_back(i / n == i % n ? 1 : 0, p);
  }
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && a[pivot * n + col].is_zero()) ++pivot;
    if (pivot == n) return std::nullopt;
    for (std::size_t j = 0; j < n; ++j) {
      std::swap(a[pivot * n + j], a[col * n + j]);
      std::swap(inv[pivot * n + j], inv[col * n + j]);
    }
    const FpElement scale = a[col * n + col].inverse();
    for (std::size_t j = 0; j < n; ++j) {
      a[col * n + j] = a[col * n + j] * scale;
      inv[col * n + j] = inv[col * n + j] * scale;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || a[r * n + col].is_zero()) continue;
      const FpElement factor = a[r * n + col];
      for (std::size_t j = 0; j < n; ++j) {
        a[r * n + j] = a[r * n + j] - factor * a[col * n + j];
        inv[r * n + j] = inv[r * n + j] - factor * inv[col * n + j];
      }
    }
  }
  Matrix out(n * n);
  for (std::size_t i = 0; i < n * n; ++i) out[i] = inv[i].value();
  return out;
}

std::string describe(std::span<const std::uint32_t> m, std::size_t n) {
  std::string s = "[";
  for (std::size_t i = 0; i < n; ++i) {
    s += i ? ";" : "";
    for (std::size_t j = 0; j < n; ++j) s += (j ? "," : "") + std::to_string(m[i * n + j]);
  }
  return s + "]";
}

}  // namespace

FiniteGroup::Key FiniteGroup::key(std::span<const std::uint32_t> matrix) const {
  Key k = 0;
  for (auto v : matrix) k = k * prime_ + v;
  return k;
}

std::span<const std::uint32_t> FiniteGroup::matrix(Element a) const {
  const std::size_t n2 = dim_ * dim_;
  return {entries_.data() + std::size_t(a) * n2, n2};
}

std::optional<FiniteGroup::Element> FiniteGroup::find(std::span<const std::uint32_t> matrix) const {
  if (matrix.size() != dim_ * dim_) return std::nullopt;
  auto it = index_.find(key(matrix));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

FiniteGroup::Element FiniteGroup::multiply_matrices(Element a, Element b) const {
  const Matrix product = multiply_mod(matrix(a), matrix(b), dim_, prime_);
  auto it = index_.find(key(product));
  if (it == index_.end())
    throw NotAGroup("product " + describe(product, dim_) + " of elements " + std::to_string(a) + " and " +
                    std::to_string(b) + " is not in " + name_);
  return it->second;
}

FiniteGroup::Element FiniteGroup::multiply(Element a, Element b) const {
  if (!table_.empty()) return table_[std::size_t(a) * order_ + b];
  return multiply_matrices(a, b);
}

std::size_t generated_order(const FiniteGroup& group, std::span<const FiniteGroup::Element> generators) {
  std::vector<bool> seen(group.order(), false);
  std::deque<FiniteGroup::Element> queue{group.identity()};
  seen[group.identity()] = true;
  std::size_t count = 1;
  while (!queue.empty()) {
    const auto x = queue.front();
    queue.pop_front();
    for (auto s : generators) {
      const auto y = group.multiply(s, x);
      if (!seen[y]) {
        seen[y] = true;
        ++count;
        queue.push_back(y);
      }
    }
  }
  return count;
}

namespace {

// Adds elements in index order until the generated subgroup is everything.
std::vector<FiniteGroup::Element> extend_generators(const FiniteGroup& group,
                                                    std::vector<FiniteGroup::Element> gens) {
  std::vector<bool> in_subgroup(group.order(), false);
  std::vector<FiniteGroup::Element> members{group.identity()};
  in_subgroup[group.identity()] = true;
  auto close = [&] {
    // The subgroup is finite, so closing under left multiplication by the
    // generators is enough.
    for (std::size_t i = 0; i < members.size(); ++i)
      for (auto s : gens) {
        const auto y = group.multiply(s, members[i]);
        if (!in_subgroup[y]) {
          in_subgroup[y] = true;
          members.push_back(y);
        }
      }
  };
  close();
  for (FiniteGroup::Element candidate = 1; candidate < group.order() && members.size() < group.order();
       ++candidate) {
    if (in_subgroup[candidate]) continue;
    gens.push_back(candidate);
    close();
  }
  return gens;
}

}  // namespace

std::vector<FiniteGroup::Element> greedy_generators(const FiniteGroup& group) {
  return extend_generators(group, {});
}

ConjugacyData conjugacy_classes(const FiniteGroup& group, std::span<const FiniteGroup::Element> generators) {
  constexpr std::uint32_t unassigned = ~std::uint32_t{0};
  ConjugacyData data;
  data.class_of.assign(group.order(), unassigned);
  std::vector<FiniteGroup::Element> inverse_gens;
  for (auto s : generators) inverse_gens.push_back(group.inverse(s));

  for (FiniteGroup::Element x = 0; x < group.order(); ++x) {
    if (data.class_of[x] != unassigned) continue;
    const auto id = static_cast<std::uint32_t>(data.class_reps.size());
    data.class_reps.push_back(x);
    data.class_of[x] = id;
    std::uint64_t size = 1;
    std::deque<FiniteGroup::Element> queue{x};
    while (!queue.empty()) {
      const auto y = queue.front();
      queue.pop_front();
      for (std::size_t i = 0; i < generators.size(); ++i) {
        const auto z = group.multiply(group.multiply(generators[i], y), inverse_gens[i]);
        if (data.class_of[z] == unassigned) {
          data.class_of[z] = id;
          ++size;
          queue.push_back(z);
        }
      }
    }
    data.class_sizes.push_back(size);
    data.centralizer_orders.push_back(group.order() / size);
  }
  for (auto rep : data.class_reps) data.inverse_class.push_back(data.class_of[group.inverse(rep)]);
  return data;
}

FiniteGroup::Element commutator(const FiniteGroup& group, FiniteGroup::Element a, FiniteGroup::Element b) {
  return group.multiply(group.multiply(a, b), group.multiply(group.inverse(a), group.inverse(b)));
}

FiniteGroup FiniteGroup::from_matrices(std::string name, std::uint32_t prime, std::size_t dim,
                                       std::vector<std::vector<std::uint32_t>> matrices,
                                       const std::vector<std::vector<std::uint32_t>>& generator_hint,
                                       const GroupLimits& limits) {
  if (!is_prime(prime)) throw InvalidInput(std::to_string(prime) + " is not prime");
  if (dim == 0) throw InvalidInput("matrix dimension must be positive");
  if (std::pow(double(prime), double(dim * dim)) >= 3.0e38)
    throw TooLarge("matrices of size " + std::to_string(dim) + " over F_" + std::to_string(prime) +
                   " exceed the element index range");
  if (matrices.size() > limits.max_order)
    throw TooLarge(name + " has more than " + std::to_string(limits.max_order) + " elements");
  if (matrices.empty()) throw NotAGroup(name + " is empty");

  FiniteGroup g;
  g.name_ = std::move(name);
  g.prime_ = prime;
  g.dim_ = dim;
  const std::size_t n2 = dim * dim;

  std::vector<std::uint32_t> identity(n2, 0);
  for (std::size_t i = 0; i < dim; ++i) identity[i * dim + i] = 1;
  auto id_it = std::find(matrices.begin(), matrices.end(), identity);
  if (id_it == matrices.end()) throw NotAGroup(g.name_ + " does not contain the identity");
  std::iter_swap(matrices.begin(), id_it);

  g.order_ = matrices.size();
  g.entries_.reserve(g.order_ * n2);
  for (const auto& m : matrices) {
    if (m.size() != n2) throw InvalidInput("matrix of wrong size in " + g.name_);
    for (auto v : m)
      if (v >= prime) throw InvalidInput("matrix entry out of range in " + g.name_);
    const Element index = static_cast<Element>(g.index_.size());
    if (!g.index_.emplace(g.key(m), index).second) throw InvalidInput("duplicate element in " + g.name_);
    g.entries_.insert(g.entries_.end(), m.begin(), m.end());
  }

  // Inverses.
  g.inverse_.resize(g.order_);
  for (Element a = 0; a < g.order_; ++a) {
    auto inv = inverse_mod(g.matrix(a), dim, prime);
    if (!inv) throw NotAGroup("singular matrix " + describe(g.matrix(a), dim) + " in " + g.name_);
    auto found = g.find(*inv);
    if (!found) throw NotAGroup("inverse of " + describe(g.matrix(a), dim) + " missing from " + g.name_);
    g.inverse_[a] = *found;
  }

  // Closure: full table when small, otherwise via a generating set whose
  // generated subgroup must exhaust the element list.
  if (g.order_ <= limits.table_threshold) {
    g.table_.resize(g.order_ * g.order_);
    for (Element a = 0; a < g.order_; ++a)
      for (Element b = 0; b < g.order_; ++b) g.table_[std::size_t(a) * g.order_ + b] = g.multiply_matrices(a, b);
  }

  std::vector<Element> hint;
  for (const auto& m : generator_hint) {
    auto found = g.find(m);
    if (!found) throw InvalidInput("generator " + describe(m, dim) + " is not an element of " + g.name_);
    hint.push_back(*found);
  }
  g.generators_ = extend_generators(g, hint);
  if (generated_order(g, g.generators_) != g.order_)
    throw NotAGroup(g.name_ + " is not generated by its elements");

  // Associativity.
  if (g.order_ <= limits.exhaustive_axiom_threshold) {
    for (Element a = 0; a < g.order_; ++a)
      for (Element b = 0; b < g.order_; ++b) {
        const Element ab = g.multiply(a, b);
        for (Element c = 0; c < g.order_; ++c)
          if (g.multiply(ab, c) != g.multiply(a, g.multiply(b, c)))
            throw NotAGroup("associativity fails in " + g.name_);
      }
  } else {
    std::mt19937_64 rng(0x5eed);
    std::uniform_int_distribution<Element> pick(0, static_cast<Element>(g.order_ - 1));
    for (std::uint64_t i = 0; i < limits.sampled_axiom_triples; ++i) {
      const Element a = pick(rng), b = pick(rng), c = pick(rng);
      if (g.multiply(g.multiply(a, b), c) != g.multiply(a, g.multiply(b, c)))
        throw NotAGroup("associativity fails in " + g.name_);
    }
  }

  if (hint.empty() && g.order_ <= limits.table_threshold) {
    std::vector<Element> all(g.order_);
    for (Element a = 0; a < g.order_; ++a) all[a] = a;
    g.classes_ = conjugacy_classes(g, all);
  } else {
    g.classes_ = conjugacy_classes(g, g.generators_);
  }
  return g;
}

GroupPtr instantiate_family(const FamilySpec& spec, std::uint32_t prime, const GroupLimits& limits) {
  if (!is_prime(prime)) throw InvalidInput(std::to_string(prime) + " is not prime");
  if (prime > limits.max_prime)
    throw TooLarge("prime " + std::to_string(prime) + " exceeds the configured bound " +
                   std::to_string(limits.max_prime));
  if (prime > 251) throw TooLarge("primes above 251 are not supported");
  if (spec.odd_primes_only && prime == 2) throw InvalidInput(spec.name + " is defined for odd primes only");
  if (spec.dim == 0 || spec.pattern.size() != spec.dim)
    throw InvalidInput(spec.name + ": pattern must have " + std::to_string(spec.dim) + " rows");
  for (const auto& row : spec.pattern)
    if (row.size() != spec.dim) throw InvalidInput(spec.name + ": pattern rows must have " + std::to_string(spec.dim) + " cells");

  const auto vars = spec.variables();
  const double assignments = std::pow(double(prime), double(vars.size()));
  if (assignments > double(limits.max_assignments))
    throw TooLarge(spec.name + " at p=" + std::to_string(prime) + " needs " + std::to_string(assignments) +
                   " assignments");

  std::vector<ModularPolynomial> cells;
  for (const auto& row : spec.pattern)
    for (const auto& cell : row) cells.emplace_back(cell, vars, prime);
  std::vector<std::pair<ModularPolynomial, Relation>> constraints;
  for (const auto& c : spec.constraints) constraints.emplace_back(ModularPolynomial(c.poly, vars, prime), c.relation);

  auto satisfies = [&](std::span<const std::uint32_t> values) {
    for (const auto& [poly, rel] : constraints) {
      const bool zero = poly.evaluate(values) == 0;
      if ((rel == Relation::Equal) != zero) return false;
    }
    return true;
  };
  auto build = [&](std::span<const std::uint32_t> values) {
    std::vector<std::uint32_t> m(cells.size());
    for (std::size_t i = 0; i < cells.size(); ++i) m[i] = cells[i].evaluate(values);
    return m;
  };

  std::vector<std::vector<std::uint32_t>> matrices;
  std::unordered_map<std::string, bool> seen;
  std::vector<std::uint32_t> values(vars.size(), 0);
  while (true) {
    if (satisfies(values)) {
      auto m = build(values);
      std::string k(m.begin(), m.end());
      if (seen.emplace(std::move(k), true).second) {
        matrices.push_back(std::move(m));
        if (matrices.size() > limits.max_order)
          throw TooLarge(spec.name + " at p=" + std::to_string(prime) + " has more than " +
                         std::to_string(limits.max_order) + " elements");
      }
    }
    std::size_t i = 0;
    while (i < values.size() && ++values[i] == prime) values[i++] = 0;
    if (i == values.size()) break;
  }

  std::vector<std::vector<std::uint32_t>> hint;
  for (const auto& assignment : spec.generators) {
    std::vector<std::uint32_t> v(vars.size());
    for (std::size_t i = 0; i < vars.size(); ++i) {
      auto it = assignment.find(vars[i]);
      if (it == assignment.end()) throw InvalidInput(spec.name + ": generator does not assign '" + vars[i] + "'");
      std::int64_t x = it->second % std::int64_t(prime);
      if (x < 0) x += prime;
      v[i] = static_cast<std::uint32_t>(x);
    }
    if (!satisfies(v)) continue;  // e.g. a generator that degenerates at this prime
    hint.push_back(build(v));
  }

  std::string name = spec.name + "(F_" + std::to_string(prime) + ")";
  return std::make_shared<const FiniteGroup>(
      FiniteGroup::from_matrices(std::move(name), prime, spec.dim, std::move(matrices), hint, limits));
}

}  // namespace ftq
