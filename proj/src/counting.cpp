#include "ftq/counting.hpp"

#include <algorithm>
#include <cmath>
#include <thread>
#include <unordered_map>

#include "ftq/errors.hpp"

namespace ftq {

Rational surface_invariant(const ClassAlgebra& algebra, unsigned genus) {
  auto v = algebra.unit();
  for (unsigned i = 0; i < genus; ++i) v = algebra.convolve(v, algebra.genus_element());
  return algebra.counit(v);
}

std::vector<std::uint64_t> commutator_fiber_counts(const FiniteGroup& group) {
  const auto n = group.order();
  std::vector<std::uint64_t> counts(n, 0);
  for (FiniteGroup::Element a = 0; a < n; ++a) {
    const auto a_inv = group.inverse(a);
    for (FiniteGroup::Element b = 0; b < n; ++b)
      ++counts[group.multiply(group.multiply(a, b), group.multiply(a_inv, group.inverse(b)))];
  }
  return counts;
}

namespace {

double power(double base, unsigned exponent) { return std::pow(base, double(exponent)); }

// Depth-first walk over (A₁, B₁, …) carrying the running product.
std::uint64_t count_from(const FiniteGroup& group, FiniteGroup::Element product, unsigned pairs_left) {
  const auto n = group.order();
  if (pairs_left == 0) return product == group.identity() ? 1 : 0;
  std::uint64_t total = 0;
  for (FiniteGroup::Element a = 0; a < n; ++a) {
    const auto a_inv = group.inverse(a);
    for (FiniteGroup::Element b = 0; b < n; ++b) {
      const auto c = group.multiply(group.multiply(a, b), group.multiply(a_inv, group.inverse(b)));
      total += count_from(group, group.multiply(product, c), pairs_left - 1);
    }
  }
  return total;
}

Integer naive_count(const FiniteGroup& group, unsigned genus) {
  const auto n = group.order();
  const unsigned workers = std::max(1u, std::min<unsigned>(std::thread::hardware_concurrency(), 16));
  std::vector<std::uint64_t> partial(workers, 0);
  std::vector<std::thread> threads;
  // Split on the outermost coordinate A₁.
  for (unsigned w = 0; w < workers; ++w)
    threads.emplace_back([&, w] {
      std::uint64_t total = 0;
      for (FiniteGroup::Element a = w; a < n; a += workers) {
        const auto a_inv = group.inverse(a);
        for (FiniteGroup::Element b = 0; b < n; ++b) {
          const auto c = group.multiply(group.multiply(a, b), group.multiply(a_inv, group.inverse(b)));
          total += count_from(group, c, genus - 1);
        }
      }
      partial[w] = total;
    });
  for (auto& t : threads) t.join();
  Integer sum = 0;
  for (auto p : partial) sum += Integer(std::to_string(p));
  return sum;
}

template <typename T>
T convolution_count(const FiniteGroup& group, const std::vector<std::uint64_t>& fiber, unsigned genus) {
  const auto n = group.order();
  std::vector<T> f(fiber.begin(), fiber.end());
  std::vector<T> current = f;
  for (unsigned step = 1; step < genus; ++step) {
    // (current * f)(z) = Σ_x current(x) f(x⁻¹ z)
    std::vector<T> next(n, T(0));
    for (FiniteGroup::Element x = 0; x < n; ++x) {
      if (current[x] == 0) continue;
      const auto x_inv = group.inverse(x);
      for (FiniteGroup::Element z = 0; z < n; ++z) {
        const auto y = group.multiply(x_inv, z);
        if (f[y] != 0) next[z] += current[x] * f[y];
      }
    }
    current = std::move(next);
  }
  return current[group.identity()];
}

std::string to_decimal(unsigned __int128 v) {
  if (v == 0) return "0";
  std::string s;
  while (v) {
    s.push_back(char('0' + int(v % 10)));
    v /= 10;
  }
  return {s.rbegin(), s.rend()};
}

}  // namespace

Integer brute_force_hom_count(const FiniteGroup& group, unsigned genus, HomCountMethod method,
                              const HomCountLimits& limits) {
  if (genus == 0) return 1;
  const double n = double(group.order());
  const double tuples = power(n, 2 * genus);
  const bool naive_ok = tuples <= double(limits.naive_tuples);
  const bool convolution_ok = n * n <= double(limits.commutator_pairs);
  if (method == HomCountMethod::Naive || (method == HomCountMethod::Automatic && naive_ok)) {
    if (!naive_ok)
      throw ResourceCap("naive enumeration of " + std::to_string(tuples) + " tuples exceeds the cap of " +
                        std::to_string(limits.naive_tuples));
    return naive_count(group, genus);
  }
  if (!convolution_ok)
    throw ResourceCap("enumerating " + std::to_string(n * n) + " commutators exceeds the cap of " +
                      std::to_string(limits.commutator_pairs));
  const auto fiber = commutator_fiber_counts(group);
  if (tuples < 1e37) return Integer(to_decimal(convolution_count<unsigned __int128>(group, fiber, genus)));
  return convolution_count<Integer>(group, fiber, genus);
}

Rational character_groupoid_cardinality(const FiniteGroup& group, unsigned genus, const HomCountLimits& limits) {
  return Rational(brute_force_hom_count(group, genus, HomCountMethod::Automatic, limits)) /
         Rational(static_cast<unsigned long>(group.order()));
}

GroupoidPtr representation_groupoid(GroupPtr group, unsigned genus, std::uint64_t tuple_cap) {
  const auto n = group->order();
  const double tuples = power(double(n), 2 * genus);
  if (tuples > 1e8) throw ResourceCap("enumerating G^" + std::to_string(2 * genus) + " exceeds 10^8 tuples");
  const auto width = 2 * genus;
  const auto total = static_cast<std::uint64_t>(tuples);

  std::vector<std::uint64_t> solutions;
  std::vector<FiniteGroup::Element> digits(width);
  for (std::uint64_t code = 0; code < total; ++code) {
    auto rest = code;
    for (std::size_t i = width; i-- > 0;) {
      digits[i] = static_cast<FiniteGroup::Element>(rest % n);
      rest /= n;
    }
    auto product = group->identity();
    for (unsigned i = 0; i < genus; ++i) product = group->multiply(product, commutator(*group, digits[2 * i], digits[2 * i + 1]));
    if (product == group->identity()) {
      solutions.push_back(code);
      if (solutions.size() > tuple_cap)
        throw ResourceCap("representation variety has more than " + std::to_string(tuple_cap) + " points");
    }
  }
  std::unordered_map<std::uint64_t, std::uint32_t> index;
  for (std::uint32_t i = 0; i < solutions.size(); ++i) index.emplace(solutions[i], i);

  GroupAction action;
  action.size = solutions.size();
  const FiniteGroup* g = group.get();
  action.act = [g, n, width, solutions = std::move(solutions), index = std::move(index)](FiniteGroup::Element e,
                                                                                         std::uint32_t x) {
    auto rest = solutions[x];
    std::vector<FiniteGroup::Element> tuple(width);
    for (std::size_t i = width; i-- > 0;) {
      tuple[i] = static_cast<FiniteGroup::Element>(rest % n);
      rest /= n;
    }
    std::uint64_t code = 0;
    const auto inv = g->inverse(e);
    for (auto t : tuple) code = code * n + g->multiply(g->multiply(e, t), inv);
    return index.at(code);
  };
  return action_groupoid(std::move(group), action);
}

}  // namespace ftq
