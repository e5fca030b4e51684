#include "ftq/class_algebra.hpp"

#include <array>
#include <optional>
#include <random>

#include "ftq/errors.hpp"

namespace ftq {

ClassFunction::ClassFunction(GroupPtr group, std::vector<Rational> values)
    : group_(std::move(group)), values_(std::move(values)) {
  if (!group_) throw InvalidInput("class function without a group");
  if (values_.size() != group_->class_count())
    throw InvalidInput("class function has " + std::to_string(values_.size()) + " values but " + group_->name() +
                       " has " + std::to_string(group_->class_count()) + " classes");
}

ClassFunction ClassFunction::zero(GroupPtr group) {
  const auto k = group->class_count();
  return {std::move(group), std::vector<Rational>(k)};
}

ClassFunction ClassFunction::constant(GroupPtr group, const Rational& value) {
  const auto k = group->class_count();
  return {std::move(group), std::vector<Rational>(k, value)};
}

ClassFunction ClassFunction::indicator(GroupPtr group, std::size_t class_index) {
  if (class_index >= group->class_count())
    throw InvalidInput("class index " + std::to_string(class_index) + " out of range");
  auto f = zero(std::move(group));
  f.values_[class_index] = 1;
  return f;
}

const Rational& ClassFunction::at_element(FiniteGroup::Element g) const {
  return values_[group_->classes().class_of[g]];
}

ClassFunction ClassFunction::operator+(const ClassFunction& rhs) const {
  require_same_group(group_, rhs.group_);
  auto out = *this;
  for (std::size_t i = 0; i < values_.size(); ++i) out.values_[i] += rhs.values_[i];
  return out;
}

ClassFunction ClassFunction::operator-(const ClassFunction& rhs) const {
  require_same_group(group_, rhs.group_);
  auto out = *this;
  for (std::size_t i = 0; i < values_.size(); ++i) out.values_[i] -= rhs.values_[i];
  return out;
}

ClassFunction ClassFunction::operator*(const Rational& factor) const {
  auto out = *this;
  for (auto& v : out.values_) v *= factor;
  return out;
}

bool ClassFunction::is_zero() const {
  for (const auto& v : values_)
    if (v != 0) return false;
  return true;
}

void require_same_group(const GroupPtr& a, const GroupPtr& b) {
  if (a != b)
    throw GroupMismatch("operands live on " + (a ? a->name() : "<none>") + " and " + (b ? b->name() : "<none>"));
}

nlohmann::json to_json(const ClassFunction& f) {
  nlohmann::json values = nlohmann::json::array();
  for (const auto& v : f.values()) values.push_back(to_string(v));
  nlohmann::json reps = nlohmann::json::array();
  for (auto rep : f.group()->classes().class_reps) {
    auto m = f.group()->matrix(rep);
    reps.push_back(std::vector<std::uint32_t>(m.begin(), m.end()));
  }
  return {{"group", f.group()->name()}, {"values", values}, {"representatives", reps}};
}

ClassFunction class_function_from_json(GroupPtr group, const nlohmann::json& doc) {
  const nlohmann::json& values = doc.is_array() ? doc : doc.at("values");
  if (!values.is_array()) throw InvalidInput("class function values must be an array");
  auto parse = [](const nlohmann::json& v) {
    if (v.is_number_integer()) return Rational(v.get<long>());
    if (v.is_string()) return parse_rational(v.get<std::string>());
    throw InvalidInput("class function value must be an integer or a \"num/den\" string");
  };
  if (!doc.is_object() || !doc.contains("representatives")) {
    std::vector<Rational> out;
    for (const auto& v : values) out.push_back(parse(v));
    return {std::move(group), std::move(out)};
  }
  const auto& reps = doc.at("representatives");
  if (!reps.is_array() || reps.size() != values.size())
    throw InvalidInput("representatives and values must have the same length");
  std::vector<std::optional<Rational>> slots(group->class_count());
  for (std::size_t i = 0; i < reps.size(); ++i) {
    const auto m = reps[i].get<std::vector<std::uint32_t>>();
    const auto element = group->find(m);
    if (!element) throw InvalidInput("representative " + reps[i].dump() + " is not in " + group->name());
    const auto c = group->classes().class_of[*element];
    const Rational v = parse(values[i]);
    if (slots[c] && *slots[c] != v)
      throw NotClassInvariant("conflicting values on class " + std::to_string(c) + " of " + group->name());
    slots[c] = v;
  }
  std::vector<Rational> out;
  for (std::size_t c = 0; c < slots.size(); ++c) {
    if (!slots[c]) throw InvalidInput("no value given for class " + std::to_string(c) + " of " + group->name());
    out.push_back(*slots[c]);
  }
  return {std::move(group), std::move(out)};
}

StructureConstants::StructureConstants(const FiniteGroup& group)
    : k_(group.class_count()), counts_(k_ * k_ * k_, 0) {
  const auto& cls = group.classes();
  for (std::size_t c = 0; c < k_; ++c) {
    const auto rep = cls.class_reps[c];
    for (FiniteGroup::Element x = 0; x < group.order(); ++x) {
      const auto y = group.multiply(group.inverse(x), rep);
      ++counts_[(std::size_t(cls.class_of[x]) * k_ + cls.class_of[y]) * k_ + c];
    }
  }
}

ClassAlgebra::ClassAlgebra(GroupPtr group) : group_(std::move(group)), constants_(*group_) {
  genus_element_ = genus_operator(unit());
}

void ClassAlgebra::check(const ClassFunction& f) const { require_same_group(group_, f.group()); }

ClassFunction ClassAlgebra::convolve(const ClassFunction& a, const ClassFunction& b) const {
  check(a);
  check(b);
  const auto k = dimension();
  std::vector<Rational> out(k);
  for (std::size_t i = 0; i < k; ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < k; ++j) {
      if (b[j] == 0) continue;
      const Rational ab = a[i] * b[j];
      for (std::size_t c = 0; c < k; ++c)
        if (auto n = constants_(i, j, c)) out[c] += ab * Rational(static_cast<unsigned long>(n));
    }
  }
  return {group_, std::move(out)};
}

Rational ClassAlgebra::pair(const ClassFunction& a, const ClassFunction& b) const {
  check(a);
  check(b);
  const auto& cls = g().classes();
  Rational sum = 0;
  for (std::size_t c = 0; c < dimension(); ++c)
    sum += Rational(static_cast<unsigned long>(cls.class_sizes[c])) * a[c] * b[cls.inverse_class[c]];
  return sum / Rational(static_cast<unsigned long>(g().order()));
}

ClassFunction ClassAlgebra::unit() const { return indicator(0); }

Rational ClassAlgebra::counit(const ClassFunction& a) const {
  check(a);
  return a[0] / Rational(static_cast<unsigned long>(g().order()));
}

Rational ClassAlgebra::gamma(std::size_t class1, std::size_t class2) const {
  const auto& cls = g().classes();
  if (cls.inverse_class[class1] != class2) return 0;
  return Rational(static_cast<unsigned long>(cls.centralizer_orders[class1]));
}

TensorSquare ClassAlgebra::copairing() const {
  const auto k = dimension();
  TensorSquare t(k, k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) t(i, j) = gamma(i, j);
  return t;
}

TensorSquare ClassAlgebra::comultiply(const ClassFunction& a) const {
  check(a);
  const auto k = dimension();
  const auto& cls = g().classes();
  TensorSquare t(k, k);
  for (std::size_t y = 0; y < k; ++y) {
    const auto column = convolve(a, indicator(cls.inverse_class[y]));
    const Rational z(static_cast<unsigned long>(cls.centralizer_orders[y]));
    for (std::size_t x = 0; x < k; ++x) t(x, y) = z * column[x];
  }
  return t;
}

ClassFunction ClassAlgebra::genus_operator(const ClassFunction& a) const { return multiply_tensor(comultiply(a)); }

RationalMatrix ClassAlgebra::genus_matrix() const {
  const auto k = dimension();
  RationalMatrix m(k, k);
  for (std::size_t j = 0; j < k; ++j) {
    const auto column = convolve(indicator(j), genus_element_);
    for (std::size_t i = 0; i < k; ++i) m(i, j) = column[i];
  }
  return m;
}

ClassFunction ClassAlgebra::multiply_tensor(const TensorSquare& t) const {
  const auto k = dimension();
  std::vector<Rational> out(k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) {
      if (t(i, j) == 0) continue;
      for (std::size_t c = 0; c < k; ++c)
        if (auto n = constants_(i, j, c)) out[c] += t(i, j) * Rational(static_cast<unsigned long>(n));
    }
  return {group_, std::move(out)};
}

ClassFunction ClassAlgebra::contract_left(const ClassFunction& a, const TensorSquare& t) const {
  check(a);
  const auto k = dimension();
  std::vector<Rational> out(k);
  for (std::size_t i = 0; i < k; ++i) {
    const Rational w = pair(a, indicator(i));
    if (w == 0) continue;
    for (std::size_t j = 0; j < k; ++j) out[j] += w * t(i, j);
  }
  return {group_, std::move(out)};
}

ClassFunction ClassAlgebra::contract_right(const TensorSquare& t, const ClassFunction& a) const {
  check(a);
  const auto k = dimension();
  std::vector<Rational> out(k);
  for (std::size_t j = 0; j < k; ++j) {
    const Rational w = pair(indicator(j), a);
    if (w == 0) continue;
    for (std::size_t i = 0; i < k; ++i) out[i] += t(i, j) * w;
  }
  return {group_, std::move(out)};
}

ClassFunction ClassAlgebra::counit_left(const TensorSquare& t) const {
  const auto k = dimension();
  const Rational w = Rational(1) / Rational(static_cast<unsigned long>(g().order()));
  std::vector<Rational> out(k);
  for (std::size_t j = 0; j < k; ++j) out[j] = w * t(0, j);
  return {group_, std::move(out)};
}

ClassFunction ClassAlgebra::counit_right(const TensorSquare& t) const {
  const auto k = dimension();
  const Rational w = Rational(1) / Rational(static_cast<unsigned long>(g().order()));
  std::vector<Rational> out(k);
  for (std::size_t i = 0; i < k; ++i) out[i] = w * t(i, 0);
  return {group_, std::move(out)};
}

bool AxiomReport::passed() const {
  for (const auto& c : checks)
    if (!c.passed) return false;
  return true;
}

namespace {

// Index triples to test: all of them for small class counts, a fixed
// pseudo-random sample otherwise.
std::vector<std::array<std::size_t, 3>> triples(std::size_t k) {
  std::vector<std::array<std::size_t, 3>> out;
  if (k <= 16) {
    for (std::size_t a = 0; a < k; ++a)
      for (std::size_t b = 0; b < k; ++b)
        for (std::size_t c = 0; c < k; ++c) out.push_back({a, b, c});
    return out;
  }
  std::mt19937_64 rng(20240613);
  std::uniform_int_distribution<std::size_t> pick(0, k - 1);
  for (int i = 0; i < 400; ++i) out.push_back({pick(rng), pick(rng), pick(rng)});
  return out;
}

}  // namespace

AxiomReport frobenius_axiom_suite(const ClassAlgebra& algebra) {
  AxiomReport report;
  report.group = algebra.g().name();
  const auto k = algebra.dimension();
  auto e = [&](std::size_t i) { return algebra.indicator(i); };
  auto add = [&](std::string name) -> AxiomCheck& {
    report.checks.push_back({std::move(name), true, {}});
    return report.checks.back();
  };
  auto fail = [](AxiomCheck& c, std::string witness) {
    if (c.passed) {
      c.passed = false;
      c.witness = std::move(witness);
    }
  };
  auto idx = [](std::initializer_list<std::size_t> xs) {
    std::string s = "classes";
    for (auto x : xs) s += " " + std::to_string(x);
    return s;
  };

  auto& comm = add("commutativity");
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i + 1; j < k; ++j)
      if (algebra.convolve(e(i), e(j)) != algebra.convolve(e(j), e(i))) fail(comm, idx({i, j}));

  auto& assoc = add("associativity");
  auto& pair_assoc = add("pairing_associativity");
  for (const auto& [a, b, c] : triples(k)) {
    const auto ab = algebra.convolve(e(a), e(b));
    const auto bc = algebra.convolve(e(b), e(c));
    if (algebra.convolve(ab, e(c)) != algebra.convolve(e(a), bc)) fail(assoc, idx({a, b, c}));
    if (algebra.pair(ab, e(c)) != algebra.pair(e(a), bc)) fail(pair_assoc, idx({a, b, c}));
  }

  auto& unit = add("unit");
  auto& counit = add("counit");
  auto& snake_l = add("snake_left");
  auto& snake_r = add("snake_right");
  auto& pairing = add("pairing_is_counit_of_product");
  auto& genus = add("genus_factorization");
  const auto gamma = algebra.copairing();
  for (std::size_t i = 0; i < k; ++i) {
    if (algebra.convolve(algebra.unit(), e(i)) != e(i)) fail(unit, idx({i}));
    const auto d = algebra.comultiply(e(i));
    if (algebra.counit_left(d) != e(i) || algebra.counit_right(d) != e(i)) fail(counit, idx({i}));
    if (algebra.contract_left(e(i), gamma) != e(i)) fail(snake_l, idx({i}));
    if (algebra.contract_right(gamma, e(i)) != e(i)) fail(snake_r, idx({i}));
    for (std::size_t j = 0; j < k; ++j)
      if (algebra.pair(e(i), e(j)) != algebra.counit(algebra.convolve(e(i), e(j)))) fail(pairing, idx({i, j}));
    if (algebra.genus_operator(e(i)) != algebra.convolve(e(i), algebra.genus_element())) fail(genus, idx({i}));
  }
  return report;
}

}  // namespace ftq
