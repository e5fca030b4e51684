#include "ftq/groupoid.hpp"

#include <algorithm>
#include <numeric>

#include "ftq/errors.hpp"

namespace ftq {

using Object = FiniteGroupoid::Object;
using Morphism = FiniteGroupoid::Morphism;

FiniteGroupoid::FiniteGroupoid(std::size_t objects, std::vector<Object> sources, std::vector<Object> targets,
                               std::vector<Morphism> identities, std::vector<Morphism> inverses, Composer compose)
    : object_count_(objects),
      sources_(std::move(sources)),
      targets_(std::move(targets)),
      identities_(std::move(identities)),
      inverses_(std::move(inverses)),
      compose_(std::move(compose)) {
  const auto n = sources_.size();
  if (targets_.size() != n || inverses_.size() != n || identities_.size() != object_count_)
    throw NotAGroupoid("inconsistent morphism or object counts");
  for (std::size_t m = 0; m < n; ++m)
    if (sources_[m] >= object_count_ || targets_[m] >= object_count_ || inverses_[m] >= n)
      throw NotAGroupoid("morphism " + std::to_string(m) + " refers to a missing object or inverse");
  for (Object x = 0; x < object_count_; ++x)
    if (identities_[x] >= n || sources_[identities_[x]] != x || targets_[identities_[x]] != x)
      throw NotAGroupoid("identity of object " + std::to_string(x) + " is not an endomorphism of it");

  out_offsets_.assign(object_count_ + 1, 0);
  for (auto s : sources_) ++out_offsets_[s + 1];
  std::partial_sum(out_offsets_.begin(), out_offsets_.end(), out_offsets_.begin());
  out_.resize(n);
  auto fill = out_offsets_;
  for (Morphism m = 0; m < n; ++m) out_[fill[sources_[m]]++] = m;
  out_position_.resize(n);
  for (Object x = 0; x < object_count_; ++x) {
    auto begin = out_.begin() + out_offsets_[x], end = out_.begin() + out_offsets_[x + 1];
    std::sort(begin, end, [&](Morphism a, Morphism b) {
      return std::pair(targets_[a], a) < std::pair(targets_[b], b);
    });
    for (auto it = begin; it != end; ++it) out_position_[*it] = static_cast<std::uint32_t>(it - begin);
  }

  std::vector<Object> parent(object_count_);
  std::iota(parent.begin(), parent.end(), 0);
  auto root = [&](Object x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (Morphism m = 0; m < n; ++m) {
    const auto a = root(sources_[m]), b = root(targets_[m]);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
  iso_class_.resize(object_count_);
  std::vector<std::uint32_t> class_of_root(object_count_, ~0u);
  for (Object x = 0; x < object_count_; ++x) {
    const auto r = root(x);
    if (class_of_root[r] == ~0u) {
      class_of_root[r] = static_cast<std::uint32_t>(iso_reps_.size());
      iso_reps_.push_back(x);
    }
    iso_class_[x] = class_of_root[r];
  }
}

FiniteGroupoid FiniteGroupoid::point() {
  return FiniteGroupoid(1, {0}, {0}, {0}, {0}, [](Morphism, Morphism) { return Morphism{0}; });
}

FiniteGroupoid FiniteGroupoid::from_table(std::size_t objects, std::vector<Object> sources, std::vector<Object> targets,
                                          std::vector<Morphism> inverses,
                                          std::vector<std::vector<std::int64_t>> composition) {
  const auto n = sources.size();
  if (composition.size() != n) throw NotAGroupoid("composition table must have one row per morphism");
  for (const auto& row : composition)
    if (row.size() != n) throw NotAGroupoid("composition table must be square");
  if (targets.size() != n) throw NotAGroupoid("every morphism needs a source and a target");
  for (std::size_t m = 0; m < n; ++m)
    if (sources[m] >= objects || targets[m] >= objects)
      throw NotAGroupoid("morphism " + std::to_string(m) + " refers to a missing object");

  // The identity is the unique idempotent endomorphism.
  std::vector<Morphism> identities(objects, ~0u);
  for (Morphism m = 0; m < n; ++m)
    if (sources[m] == targets[m] && composition[m][m] == std::int64_t(m)) {
      if (identities[sources[m]] != ~0u) throw NotAGroupoid("object " + std::to_string(sources[m]) + " has two identities");
      identities[sources[m]] = m;
    }
  for (Object x = 0; x < objects; ++x)
    if (identities[x] == ~0u) throw NotAGroupoid("object " + std::to_string(x) + " has no identity");

  auto table = std::make_shared<std::vector<std::vector<std::int64_t>>>(std::move(composition));
  FiniteGroupoid g(objects, std::move(sources), std::move(targets), std::move(identities), std::move(inverses),
                   [table](Morphism after, Morphism before) {
                     const auto c = (*table)[after][before];
                     if (c < 0 || std::size_t(c) >= table->size())
                       throw NotAGroupoid("composite of " + std::to_string(after) + " after " +
                                          std::to_string(before) + " is undefined");
                     return static_cast<Morphism>(c);
                   });
  g.validate();
  return g;
}

Morphism FiniteGroupoid::compose(Morphism after, Morphism before) const {
  if (targets_[before] != sources_[after])
    throw NotAGroupoid("morphisms " + std::to_string(after) + " and " + std::to_string(before) + " are not composable");
  return compose_(after, before);
}

std::span<const Morphism> FiniteGroupoid::morphisms_from(Object x) const {
  return {out_.data() + out_offsets_[x], out_offsets_[x + 1] - out_offsets_[x]};
}

std::span<const Morphism> FiniteGroupoid::hom(Object x, Object y) const {
  const auto out = morphisms_from(x);
  auto lo = std::partition_point(out.begin(), out.end(), [&](Morphism m) { return targets_[m] < y; });
  auto hi = std::partition_point(lo, out.end(), [&](Morphism m) { return targets_[m] <= y; });
  return {out.data() + (lo - out.begin()), static_cast<std::size_t>(hi - lo)};
}

std::size_t FiniteGroupoid::hom_position(Morphism m) const {
  const auto h = hom(sources_[m], targets_[m]);
  const auto first = static_cast<std::size_t>(h.data() - (out_.data() + out_offsets_[sources_[m]]));
  return out_position_[m] - first;
}

void FiniteGroupoid::validate() const {
  auto fail = [](const std::string& what) { throw NotAGroupoid(what); };
  auto name = [](Morphism m) { return std::to_string(m); };
  for (Morphism m = 0; m < morphism_count(); ++m) {
    const auto s = sources_[m], t = targets_[m];
    if (compose(m, identities_[s]) != m || compose(identities_[t], m) != m)
      fail("identity law fails for morphism " + name(m));
    const auto inv = inverses_[m];
    if (sources_[inv] != t || targets_[inv] != s) fail("inverse of " + name(m) + " has the wrong endpoints");
    if (compose(inv, m) != identities_[s] || compose(m, inv) != identities_[t])
      fail("morphism " + name(m) + " is not inverted by " + name(inv));
    for (auto n : morphisms_from(t)) {
      const auto nm = compose(n, m);
      if (nm >= morphism_count() || sources_[nm] != s || targets_[nm] != targets_[n])
        fail("composite of " + name(n) + " after " + name(m) + " has the wrong endpoints");
      for (auto p : morphisms_from(targets_[n]))
        if (compose(p, nm) != compose(compose(p, n), m))
          fail("associativity fails on " + name(p) + ", " + name(n) + ", " + name(m));
    }
  }
}

GroupoidFunctor::GroupoidFunctor(GroupoidPtr source, GroupoidPtr target, std::vector<Object> object_map,
                                 std::vector<Morphism> morphism_map, std::size_t check_cap)
    : source_(std::move(source)),
      target_(std::move(target)),
      object_map_(std::move(object_map)),
      morphism_map_(std::move(morphism_map)) {
  const auto& a = *source_;
  const auto& b = *target_;
  if (object_map_.size() != a.object_count() || morphism_map_.size() != a.morphism_count())
    throw NotAFunctor("object or morphism map has the wrong length");
  for (auto x : object_map_)
    if (x >= b.object_count()) throw NotAFunctor("object map leaves the target groupoid");
  for (Morphism m = 0; m < a.morphism_count(); ++m) {
    const auto fm = morphism_map_[m];
    if (fm >= b.morphism_count()) throw NotAFunctor("morphism map leaves the target groupoid");
    if (b.source(fm) != object_map_[a.source(m)] || b.target(fm) != object_map_[a.target(m)])
      throw NotAFunctor("morphism " + std::to_string(m) + " is not sent between the images of its endpoints");
  }
  for (Object x = 0; x < a.object_count(); ++x)
    if (morphism_map_[a.identity(x)] != b.identity(object_map_[x]))
      throw NotAFunctor("identity of object " + std::to_string(x) + " is not preserved");
  std::size_t checked = 0;
  for (Morphism m = 0; m < a.morphism_count() && checked < check_cap; ++m)
    for (auto n : a.morphisms_from(a.target(m))) {
      if (morphism_map_[a.compose(n, m)] != b.compose(morphism_map_[n], morphism_map_[m]))
        throw NotAFunctor("composition of " + std::to_string(n) + " after " + std::to_string(m) +
                          " is not preserved");
      if (++checked >= check_cap) break;
    }
}

GroupoidFunctor GroupoidFunctor::identity(GroupoidPtr groupoid) {
  std::vector<Object> objects(groupoid->object_count());
  std::iota(objects.begin(), objects.end(), 0);
  std::vector<Morphism> morphisms(groupoid->morphism_count());
  std::iota(morphisms.begin(), morphisms.end(), 0);
  GroupoidFunctor f;
  f.source_ = groupoid;
  f.target_ = std::move(groupoid);
  f.object_map_ = std::move(objects);
  f.morphism_map_ = std::move(morphisms);
  return f;
}

GroupoidFunctor GroupoidFunctor::to_point(GroupoidPtr groupoid, GroupoidPtr terminal) {
  if (terminal->object_count() != 1 || terminal->morphism_count() != 1)
    throw NotAFunctor("target of to_point must be the point groupoid");
  GroupoidFunctor f;
  f.object_map_.assign(groupoid->object_count(), 0);
  f.morphism_map_.assign(groupoid->morphism_count(), 0);
  f.source_ = std::move(groupoid);
  f.target_ = std::move(terminal);
  return f;
}

GroupoidFunctor GroupoidFunctor::from_point(GroupoidPtr point, GroupoidPtr groupoid, Object object) {
  if (point->object_count() != 1 || point->morphism_count() != 1)
    throw NotAFunctor("source of from_point must be the point groupoid");
  if (object >= groupoid->object_count()) throw InvalidInput("object " + std::to_string(object) + " out of range");
  GroupoidFunctor f;
  f.object_map_ = {object};
  f.morphism_map_ = {groupoid->identity(object)};
  f.source_ = std::move(point);
  f.target_ = std::move(groupoid);
  return f;
}

GroupoidFunctor compose(const GroupoidFunctor& after, const GroupoidFunctor& before) {
  if (after.source() != before.target()) throw NotAFunctor("functors are not composable");
  std::vector<Object> objects;
  for (auto x : before.object_map()) objects.push_back(after(x));
  std::vector<Morphism> morphisms;
  for (auto m : before.morphism_map()) morphisms.push_back(after.map(m));
  return GroupoidFunctor(before.source(), after.target(), std::move(objects), std::move(morphisms), 0);
}

IsoInvariantFunction::IsoInvariantFunction(GroupoidPtr groupoid, std::vector<Rational> values)
    : groupoid_(std::move(groupoid)), values_(std::move(values)) {
  if (values_.size() != groupoid_->object_count())
    throw InvalidInput("function needs one value per object (" + std::to_string(groupoid_->object_count()) + ")");
  for (Object x = 0; x < values_.size(); ++x)
    if (values_[x] != values_[groupoid_->iso_representative(groupoid_->iso_class(x))])
      throw NotIsoInvariant("values differ on isomorphic objects " + std::to_string(x) + " and " +
                            std::to_string(groupoid_->iso_representative(groupoid_->iso_class(x))));
}

IsoInvariantFunction IsoInvariantFunction::from_class_values(GroupoidPtr groupoid,
                                                             std::span<const Rational> class_values) {
  if (class_values.size() != groupoid->iso_class_count())
    throw InvalidInput("function needs one value per isomorphism class");
  std::vector<Rational> values(groupoid->object_count());
  for (Object x = 0; x < values.size(); ++x) values[x] = class_values[groupoid->iso_class(x)];
  return {std::move(groupoid), std::move(values)};
}

IsoInvariantFunction IsoInvariantFunction::constant(GroupoidPtr groupoid, const Rational& value) {
  const auto n = groupoid->object_count();
  return {std::move(groupoid), std::vector<Rational>(n, value)};
}

std::vector<Rational> IsoInvariantFunction::class_values() const {
  std::vector<Rational> out;
  for (std::size_t c = 0; c < groupoid_->iso_class_count(); ++c) out.push_back(values_[groupoid_->iso_representative(c)]);
  return out;
}

GroupoidPtr action_groupoid(GroupPtr group, const GroupAction& action) {
  const auto& g = *group;
  const auto n = g.order();
  const auto size = action.size;
  if (size * n > std::size_t{1} << 31) throw SizeCap("action groupoid would have more than 2^31 morphisms");

  std::vector<std::uint32_t> acted(size * n);
  for (std::uint32_t x = 0; x < size; ++x)
    for (FiniteGroup::Element e = 0; e < n; ++e) {
      const auto y = action.act(e, x);
      if (y >= size) throw NotAnAction("action sends point " + std::to_string(x) + " outside the set");
      acted[std::size_t(x) * n + e] = y;
    }
  for (std::uint32_t x = 0; x < size; ++x)
    if (acted[std::size_t(x) * n] != x) throw NotAnAction("identity moves point " + std::to_string(x));
  // Compatibility on all triples when affordable, otherwise on generators.
  std::vector<FiniteGroup::Element> lefts;
  if (n * n * size <= 20'000'000) {
    lefts.resize(n);
    std::iota(lefts.begin(), lefts.end(), 0);
  } else {
    lefts.assign(g.generators().begin(), g.generators().end());
  }
  for (auto a : lefts)
    for (FiniteGroup::Element b = 0; b < n; ++b)
      for (std::uint32_t x = 0; x < size; ++x)
        if (acted[std::size_t(x) * n + g.multiply(a, b)] != acted[std::size_t(acted[std::size_t(x) * n + b]) * n + a])
          throw NotAnAction("(gh)·x differs from g·(h·x) at point " + std::to_string(x));

  std::vector<Object> sources(size * n), targets(size * n);
  std::vector<Morphism> inverses(size * n), identities(size);
  for (std::uint32_t x = 0; x < size; ++x) {
    identities[x] = static_cast<Morphism>(std::size_t(x) * n);
    for (FiniteGroup::Element e = 0; e < n; ++e) {
      const auto m = std::size_t(x) * n + e;
      sources[m] = x;
      targets[m] = acted[m];
      inverses[m] = static_cast<Morphism>(std::size_t(acted[m]) * n + g.inverse(e));
    }
  }
  auto composer = [group, n](Morphism after, Morphism before) {
    const auto x = before / n;
    return static_cast<Morphism>(std::size_t(x) * n + group->multiply(after % n, before % n));
  };
  return std::make_shared<const FiniteGroupoid>(size, std::move(sources), std::move(targets), std::move(identities),
                                                std::move(inverses), composer);
}

GroupoidPtr conjugation_groupoid(GroupPtr group) { return tuple_conjugation_groupoid(std::move(group), 1); }

GroupoidPtr tuple_conjugation_groupoid(GroupPtr group, std::size_t arity) {
  const auto n = group->order();
  double size = 1;
  for (std::size_t i = 0; i < arity; ++i) size *= double(n);
  if (size * double(n) > 2.0e7) throw SizeCap("[G^" + std::to_string(arity) + "/G] is too large to materialize");
  GroupAction action;
  action.size = static_cast<std::size_t>(size);
  const FiniteGroup* g = group.get();
  action.act = [g, n, arity](FiniteGroup::Element e, std::uint32_t x) {
    const auto inv = g->inverse(e);
    std::uint32_t out = 0, scale = 1;
    for (std::size_t i = 0; i < arity; ++i) {
      const auto digit = x % n;
      x /= static_cast<std::uint32_t>(n);
      out += scale * g->multiply(g->multiply(e, digit), inv);
      scale *= static_cast<std::uint32_t>(n);
    }
    return out;
  };
  return action_groupoid(std::move(group), action);
}

Rational cardinality(const FiniteGroupoid& groupoid) {
  Rational sum = 0;
  for (std::size_t c = 0; c < groupoid.iso_class_count(); ++c)
    sum += Rational(1, static_cast<unsigned long>(groupoid.automorphism_count(groupoid.iso_representative(c))));
  return sum;
}

namespace {

struct FiberData {
  GroupoidPtr b, c;
  std::vector<Object> obj_b, obj_c;
  std::vector<std::size_t> pair_offset;  // |B|·|C| + 1 entries
  std::vector<std::size_t> mor_offset;   // objects + 1 entries
  std::vector<Object> mor_source;

  std::size_t out_c(Object o) const { return c->morphisms_from(obj_c[o]).size(); }
  Morphism morphism(Object o, Morphism beta, Morphism zeta) const {
    return static_cast<Morphism>(mor_offset[o] + b->out_position(beta) * out_c(o) + c->out_position(zeta));
  }
};

}  // namespace

FiberProduct fiber_product(const GroupoidFunctor& f, const GroupoidFunctor& h, std::size_t object_cap) {
  if (f.target() != h.target()) throw InvalidInput("fiber product legs have different targets");
  const auto& A = *f.target();
  auto data = std::make_shared<FiberData>();
  data->b = f.source();
  data->c = h.source();
  const auto& B = *data->b;
  const auto& C = *data->c;

  data->pair_offset.assign(B.object_count() * C.object_count() + 1, 0);
  std::size_t objects = 0;
  for (Object x = 0; x < B.object_count(); ++x)
    for (Object y = 0; y < C.object_count(); ++y) {
      data->pair_offset[x * C.object_count() + y] = objects;
      objects += A.hom(f(x), h(y)).size();
      if (objects > object_cap)
        throw SizeCap("fiber product has more than " + std::to_string(object_cap) + " objects");
    }
  data->pair_offset.back() = objects;

  std::vector<Morphism> alpha(objects);
  data->obj_b.resize(objects);
  data->obj_c.resize(objects);
  for (Object x = 0; x < B.object_count(); ++x)
    for (Object y = 0; y < C.object_count(); ++y) {
      auto o = data->pair_offset[x * C.object_count() + y];
      for (auto a : A.hom(f(x), h(y))) {
        data->obj_b[o] = x;
        data->obj_c[o] = y;
        alpha[o++] = a;
      }
    }

  data->mor_offset.assign(objects + 1, 0);
  for (std::size_t o = 0; o < objects; ++o)
    data->mor_offset[o + 1] = data->mor_offset[o] + B.morphisms_from(data->obj_b[o]).size() * data->out_c(o);
  const auto morphisms = data->mor_offset.back();
  if (morphisms > std::size_t{1} << 31) throw SizeCap("fiber product has too many morphisms");

  auto object_of = [&](Object x, Object y, Morphism a) {
    return static_cast<Object>(data->pair_offset[x * C.object_count() + y] + A.hom_position(a));
  };

  std::vector<Object> sources(morphisms), targets(morphisms);
  std::vector<Morphism> inverses(morphisms), identities(objects), proj_b(morphisms), proj_c(morphisms);
  for (Object o = 0; o < objects; ++o) {
    const auto x = data->obj_b[o], y = data->obj_c[o];
    identities[o] = data->morphism(o, B.identity(x), C.identity(y));
    for (auto beta : B.morphisms_from(x))
      for (auto zeta : C.morphisms_from(y)) {
        const auto m = data->morphism(o, beta, zeta);
        // α' = h(ζ) ∘ α ∘ f(β)⁻¹
        const auto a2 = A.compose(A.compose(h.map(zeta), alpha[o]), A.inverse(f.map(beta)));
        const auto t = object_of(B.target(beta), C.target(zeta), a2);
        sources[m] = o;
        targets[m] = t;
        proj_b[m] = beta;
        proj_c[m] = zeta;
        inverses[m] = data->morphism(t, B.inverse(beta), C.inverse(zeta));
      }
  }
  auto pb = std::make_shared<std::vector<Morphism>>(proj_b);
  auto pc = std::make_shared<std::vector<Morphism>>(proj_c);
  auto composer = [data, pb, pc, sources_copy = std::make_shared<std::vector<Object>>(sources)](Morphism after,
                                                                                               Morphism before) {
    const auto o = (*sources_copy)[before];
    return data->morphism(o, data->b->compose((*pb)[after], (*pb)[before]),
                          data->c->compose((*pc)[after], (*pc)[before]));
  };
  auto obj_b = data->obj_b;
  auto obj_c = data->obj_c;
  auto groupoid = std::make_shared<const FiniteGroupoid>(objects, std::move(sources), std::move(targets),
                                                         std::move(identities), std::move(inverses), composer);
  constexpr std::size_t projection_checks = 20'000;
  GroupoidFunctor left(groupoid, data->b, std::move(obj_b), std::move(proj_b), projection_checks);
  GroupoidFunctor right(groupoid, data->c, std::move(obj_c), std::move(proj_c), projection_checks);
  return {groupoid, std::move(left), std::move(right)};
}

IsoInvariantFunction pullback(const GroupoidFunctor& f, const IsoInvariantFunction& phi) {
  if (phi.groupoid() != f.target()) throw GroupMismatch("function does not live on the target of the functor");
  std::vector<Rational> values;
  for (auto y : f.object_map()) values.push_back(phi(y));
  return {f.source(), std::move(values)};
}

FiberProduct homotopy_fiber(const GroupoidFunctor& f, Object object) {
  auto point = std::make_shared<const FiniteGroupoid>(FiniteGroupoid::point());
  return fiber_product(f, GroupoidFunctor::from_point(point, f.target(), object));
}

namespace {

// Calls visit(target_class, source_object, weight) for every iso class of
// every homotopy fiber over the iso-class representatives of the target.
template <typename Visit>
void for_each_fiber_class(const GroupoidFunctor& f, Visit visit) {
  const auto& target = *f.target();
  for (std::size_t c = 0; c < target.iso_class_count(); ++c) {
    const auto fiber = homotopy_fiber(f, target.iso_representative(c));
    const auto& fg = *fiber.groupoid;
    for (std::size_t k = 0; k < fg.iso_class_count(); ++k) {
      const auto rep = fg.iso_representative(k);
      visit(c, fiber.left(rep), Rational(1, static_cast<unsigned long>(fg.automorphism_count(rep))));
    }
  }
}

}  // namespace

IsoInvariantFunction pushforward(const GroupoidFunctor& f, const IsoInvariantFunction& phi) {
  if (phi.groupoid() != f.source()) throw GroupMismatch("function does not live on the source of the functor");
  std::vector<Rational> class_values(f.target()->iso_class_count());
  for_each_fiber_class(f, [&](std::size_t c, Object x, const Rational& w) { class_values[c] += phi(x) * w; });
  return IsoInvariantFunction::from_class_values(f.target(), class_values);
}

RationalMatrix quantize_span(const Span& span) {
  if (span.left.source() != span.right.source()) throw InvalidInput("span legs have different sources");
  const auto& from = *span.left.target();
  RationalMatrix m(span.right.target()->iso_class_count(), from.iso_class_count());
  for_each_fiber_class(span.right, [&](std::size_t c, Object x, const Rational& w) {
    m(c, from.iso_class(span.left(x))) += w;
  });
  return m;
}

Span compose_spans(const Span& second, const Span& first) {
  auto p = fiber_product(first.right, second.left);
  return {compose(first.left, p.left), compose(second.right, p.right)};
}

GroupoidPtr product(const GroupoidPtr& a, const GroupoidPtr& b) {
  const auto na = a->object_count(), nb = b->object_count();
  const auto ma = a->morphism_count(), mb = b->morphism_count();
  if (ma * mb > std::size_t{1} << 31) throw SizeCap("product groupoid has too many morphisms");
  std::vector<Object> sources(ma * mb), targets(ma * mb);
  std::vector<Morphism> inverses(ma * mb), identities(na * nb);
  for (Morphism x = 0; x < ma; ++x)
    for (Morphism y = 0; y < mb; ++y) {
      const auto m = x * mb + y;
      sources[m] = static_cast<Object>(a->source(x) * nb + b->source(y));
      targets[m] = static_cast<Object>(a->target(x) * nb + b->target(y));
      inverses[m] = static_cast<Morphism>(a->inverse(x) * mb + b->inverse(y));
    }
  for (Object x = 0; x < na; ++x)
    for (Object y = 0; y < nb; ++y) identities[x * nb + y] = static_cast<Morphism>(a->identity(x) * mb + b->identity(y));
  auto composer = [a, b, mb](Morphism after, Morphism before) {
    return static_cast<Morphism>(a->compose(after / mb, before / mb) * mb + b->compose(after % mb, before % mb));
  };
  return std::make_shared<const FiniteGroupoid>(na * nb, std::move(sources), std::move(targets), std::move(identities),
                                                std::move(inverses), composer);
}

GroupoidFunctor product(const GroupoidFunctor& f, const GroupoidFunctor& g, GroupoidPtr source, GroupoidPtr target) {
  const auto nb = g.source()->object_count(), mb = g.source()->morphism_count();
  const auto nb2 = g.target()->object_count(), mb2 = g.target()->morphism_count();
  if (source->object_count() != f.source()->object_count() * nb ||
      target->object_count() != f.target()->object_count() * nb2)
    throw NotAFunctor("product functor endpoints do not match the factors");
  std::vector<Object> objects(source->object_count());
  for (Object x = 0; x < objects.size(); ++x) objects[x] = static_cast<Object>(f(x / nb) * nb2 + g(x % nb));
  std::vector<Morphism> morphisms(source->morphism_count());
  for (Morphism m = 0; m < morphisms.size(); ++m)
    morphisms[m] = static_cast<Morphism>(f.map(m / mb) * mb2 + g.map(m % mb));
  return GroupoidFunctor(std::move(source), std::move(target), std::move(objects), std::move(morphisms), 20'000);
}

Skeleton skeletonize(const GroupoidPtr& groupoid) {
  const auto& g = *groupoid;
  const auto k = g.iso_class_count();
  std::vector<Morphism> kept;
  std::vector<Morphism> local(g.morphism_count(), ~0u);
  for (std::size_t c = 0; c < k; ++c)
    for (auto m : g.hom(g.iso_representative(c), g.iso_representative(c))) {
      local[m] = static_cast<Morphism>(kept.size());
      kept.push_back(m);
    }
  std::vector<Object> sources, targets;
  std::vector<Morphism> inverses, identities(k);
  for (auto m : kept) {
    sources.push_back(static_cast<Object>(g.iso_class(g.source(m))));
    targets.push_back(static_cast<Object>(g.iso_class(g.target(m))));
    inverses.push_back(local[g.inverse(m)]);
  }
  for (std::size_t c = 0; c < k; ++c) identities[c] = local[g.identity(g.iso_representative(c))];
  auto kept_ptr = std::make_shared<std::vector<Morphism>>(kept);
  auto local_ptr = std::make_shared<std::vector<Morphism>>(std::move(local));
  auto composer = [groupoid, kept_ptr, local_ptr](Morphism after, Morphism before) {
    return (*local_ptr)[groupoid->compose((*kept_ptr)[after], (*kept_ptr)[before])];
  };
  auto skeleton = std::make_shared<const FiniteGroupoid>(k, std::move(sources), std::move(targets),
                                                         std::move(identities), std::move(inverses), composer);
  std::vector<Object> objects(k);
  for (std::size_t c = 0; c < k; ++c) objects[c] = g.iso_representative(c);
  GroupoidFunctor inclusion(skeleton, groupoid, std::move(objects), std::move(kept));
  return {skeleton, std::move(inclusion)};
}

GroupoidPtr groupoid_from_json(const nlohmann::json& doc) {
  try {
    const auto objects = doc.at("objects").get<std::size_t>();
    std::vector<Object> sources, targets;
    std::vector<Morphism> inverses;
    for (const auto& m : doc.at("morphisms")) {
      sources.push_back(m.at("src").get<Object>());
      targets.push_back(m.at("tgt").get<Object>());
      inverses.push_back(m.at("inverse").get<Morphism>());
    }
    auto composition = doc.at("composition").get<std::vector<std::vector<std::int64_t>>>();
    return std::make_shared<const FiniteGroupoid>(FiniteGroupoid::from_table(
        objects, std::move(sources), std::move(targets), std::move(inverses), std::move(composition)));
  } catch (const nlohmann::json::exception& e) {
    throw InvalidInput(std::string("malformed groupoid description: ") + e.what());
  }
}

}  // namespace ftq
