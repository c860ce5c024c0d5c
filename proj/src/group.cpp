#include "arithgraph/group.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>

#include "arithgraph/errors.hpp"

namespace arithgraph {

std::size_t element_cap() {
  if (const char* env = std::getenv("ARITHGRAPH_ELEMENT_CAP")) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
  }
  return kDefaultElementCap;
}

namespace detail {

std::uint64_t hash_row(std::span<const Point> r) noexcept {
  std::uint64_t h = 0x9e3779b97f4a7c15ull ^ r.size();
  std::size_t i = 0;
  for (; i + 4 <= r.size(); i += 4) {
    const std::uint64_t chunk = std::uint64_t{r[i]} | (std::uint64_t{r[i + 1]} << 16) |
                                (std::uint64_t{r[i + 2]} << 32) | (std::uint64_t{r[i + 3]} << 48);
    h = (h ^ chunk) * 0xff51afd7ed558ccdull;
    h ^= h >> 29;
  }
  for (; i < r.size(); ++i) {
    h = (h ^ r[i]) * 0xc4ceb9fe1a85ec53ull;
    h ^= h >> 31;
  }
  h ^= h >> 33;
  return h;
}

std::optional<Elem> GroupData::lookup(std::span<const Point> r) const noexcept {
  if (r.size() != degree) return std::nullopt;
  std::uint64_t s = hash_row(r) & slot_mask;
  for (;;) {
    const std::uint32_t v = slots[s];
    if (v == 0) return std::nullopt;
    const Elem e = v - 1;
    if (std::equal(r.begin(), r.end(), images.begin() + static_cast<std::ptrdiff_t>(std::size_t{e} * degree)))
      return e;
    s = (s + 1) & slot_mask;
  }
}

namespace {

// Growable open-addressing index over rows stored in an external flat table.
class RowIndex {
 public:
  explicit RowIndex(std::size_t degree) : degree_(degree) { rehash(64); }

  // Returns (index, inserted). rows must already hold the candidate at
  // position `candidate` when inserting.
  std::pair<Elem, bool> insert(const std::vector<Point>& rows, Elem candidate) {
    if ((count_ + 1) * 2 > slots_.size()) rehash_with(rows, slots_.size() * 2);
    std::span<const Point> r{rows.data() + std::size_t{candidate} * degree_, degree_};
    std::uint64_t s = hash_row(r) & mask_;
    for (;;) {
      const std::uint32_t v = slots_[s];
      if (v == 0) {
        slots_[s] = candidate + 1;
        ++count_;
        return {candidate, true};
      }
      const Elem e = v - 1;
      if (std::equal(r.begin(), r.end(), rows.begin() + static_cast<std::ptrdiff_t>(std::size_t{e} * degree_)))
        return {e, false};
      s = (s + 1) & mask_;
    }
  }

 private:
  void rehash(std::size_t n) {
    slots_.assign(n, 0);
    mask_ = n - 1;
  }
  void rehash_with(const std::vector<Point>& rows, std::size_t n) {
    std::vector<std::uint32_t> old = std::move(slots_);
    rehash(n);
    for (std::uint32_t v : old) {
      if (v == 0) continue;
      std::span<const Point> r{rows.data() + std::size_t{v - 1} * degree_, degree_};
      std::uint64_t s = hash_row(r) & mask_;
      while (slots_[s] != 0) s = (s + 1) & mask_;
      slots_[s] = v;
    }
  }

  std::size_t degree_;
  std::size_t count_ = 0;
  std::vector<std::uint32_t> slots_;
  std::uint64_t mask_ = 0;
};

thread_local std::vector<Point> scratch;

std::span<Point> scratch_row(std::size_t degree) {
  if (scratch.size() < degree) scratch.resize(degree);
  return {scratch.data(), degree};
}

}  // namespace
}  // namespace detail

FiniteGroup make_group_from_sorted(std::size_t degree, std::vector<Point> images, std::span<const Elem> gens,
                                   std::string name) {
  auto d = std::make_shared<detail::GroupData>();
  d->degree = degree;
  d->order = images.size() / degree;
  d->images = std::move(images);
  d->gens.assign(gens.begin(), gens.end());
  std::size_t cap = 1;
  while (cap < d->order * 2) cap <<= 1;
  d->slots.assign(cap, 0);
  d->slot_mask = cap - 1;
  for (Elem e = 0; e < d->order; ++e) {
    std::uint64_t s = detail::hash_row(d->row(e)) & d->slot_mask;
    while (d->slots[s] != 0) s = (s + 1) & d->slot_mask;
    d->slots[s] = e + 1;
  }
  d->inverse.resize(d->order);
  d->orders.resize(d->order);
  std::vector<Point> inv(degree);
  for (Elem e = 0; e < d->order; ++e) {
    auto r = d->row(e);
    for (std::size_t x = 0; x < degree; ++x) inv[r[x]] = static_cast<Point>(x);
    d->inverse[e] = *d->lookup(inv);
    d->orders[e] = static_cast<std::uint32_t>(cycle_order(r));
  }
  d->primes = prime_divisors(d->order);
  return FiniteGroup(std::move(d), std::move(name));
}

std::size_t FiniteGroup::degree() const noexcept { return data_->degree; }
std::size_t FiniteGroup::order() const noexcept { return data_->order; }
const std::string& FiniteGroup::name() const noexcept { return name_; }
const PrimeSet& FiniteGroup::primes() const noexcept { return data_->primes; }
std::span<const Point> FiniteGroup::images(Elem e) const noexcept { return data_->row(e); }

Permutation FiniteGroup::element(Elem e) const {
  auto r = data_->row(e);
  return Permutation::from_images(std::vector<Point>(r.begin(), r.end()));
}

std::optional<Elem> FiniteGroup::find(std::span<const Point> images) const noexcept { return data_->lookup(images); }

Elem FiniteGroup::index_of(const Permutation& g) const {
  if (g.degree() != degree())
    throw Error(ErrorKind::NotAMember, "permutation of degree " + std::to_string(g.degree()) + " in group of degree " +
                                           std::to_string(degree()));
  if (auto e = find(g.images())) return *e;
  throw Error(ErrorKind::NotAMember, g.to_cycles() + " is not an element of " + name());
}

Elem FiniteGroup::mul(Elem a, Elem b) const noexcept {
  const auto& d = *data_;
  auto buf = detail::scratch_row(d.degree);
  const Point* ra = d.images.data() + std::size_t{a} * d.degree;
  const Point* rb = d.images.data() + std::size_t{b} * d.degree;
  for (std::size_t x = 0; x < d.degree; ++x) buf[x] = rb[ra[x]];
  return *d.lookup(buf);
}

Elem FiniteGroup::inv(Elem a) const noexcept { return data_->inverse[a]; }

Elem FiniteGroup::conj(Elem a, Elem g) const noexcept {
  const auto& d = *data_;
  auto buf = detail::scratch_row(d.degree);
  const Point* ra = d.images.data() + std::size_t{a} * d.degree;
  const Point* rg = d.images.data() + std::size_t{g} * d.degree;
  // x^(g^-1 a g): map x = y^g to (y^a)^g.
  for (std::size_t y = 0; y < d.degree; ++y) buf[rg[y]] = rg[ra[y]];
  return *d.lookup(buf);
}

Elem FiniteGroup::pow(Elem a, std::uint64_t k) const noexcept {
  k %= elem_order(a);
  Elem r = identity(), base = a;
  while (k) {
    if (k & 1) r = mul(r, base);
    base = mul(base, base);
    k >>= 1;
  }
  return r;
}

bool FiniteGroup::commute(Elem a, Elem b) const noexcept {
  const auto& d = *data_;
  const Point* ra = d.images.data() + std::size_t{a} * d.degree;
  const Point* rb = d.images.data() + std::size_t{b} * d.degree;
  for (std::size_t x = 0; x < d.degree; ++x)
    if (rb[ra[x]] != ra[rb[x]]) return false;
  return true;
}

std::uint32_t FiniteGroup::elem_order(Elem e) const noexcept { return data_->orders[e]; }
std::span<const Elem> FiniteGroup::generators() const noexcept { return data_->gens; }

std::vector<Permutation> FiniteGroup::generator_permutations() const {
  std::vector<Permutation> out;
  for (Elem g : data_->gens) out.push_back(element(g));
  return out;
}

const std::vector<std::vector<Elem>>& FiniteGroup::classes() const {
  const auto& d = *data_;
  std::call_once(d.classes_once, [&] {
    constexpr std::uint32_t kUnset = ~std::uint32_t{0};
    d.class_of.assign(d.order, kUnset);
    std::vector<Elem> queue;
    for (Elem e = 0; e < d.order; ++e) {
      if (d.class_of[e] != kUnset) continue;
      const auto id = static_cast<std::uint32_t>(d.classes.size());
      queue.assign(1, e);
      d.class_of[e] = id;
      for (std::size_t i = 0; i < queue.size(); ++i) {
        for (Elem g : d.gens) {
          const Elem c = conj(queue[i], g);
          if (d.class_of[c] == kUnset) {
            d.class_of[c] = id;
            queue.push_back(c);
          }
        }
      }
      std::sort(queue.begin(), queue.end());
      d.classes.push_back(queue);
    }
  });
  return d.classes;
}

std::uint32_t FiniteGroup::class_index(Elem e) const {
  classes();
  return data_->class_of[e];
}

FiniteGroup FiniteGroup::renamed(std::string name) const { return FiniteGroup(data_, std::move(name)); }

std::string SubgroupRef::describe() const {
  std::string out = "<";
  for (std::size_t i = 0; i < gens_.size(); ++i) {
    if (i) out += ", ";
    out += cycles_of(parent_.images(gens_[i]));
  }
  return out + ">";
}

FiniteGroup group_from_generators(std::size_t degree, std::span<const Permutation> gens, std::size_t cap,
                                  std::string name) {
  if (degree == 0 || degree > kMaxDegree)
    throw Error(ErrorKind::InvalidSpec, "degree must lie in 1.." + std::to_string(kMaxDegree));
  if (cap < 1) throw Error(ErrorKind::BudgetExceeded, "element cap must be at least 1");
  for (const auto& g : gens)
    if (g.degree() != degree)
      throw Error(ErrorKind::DegreeMismatch,
                  "generator " + g.to_cycles() + " has degree " + std::to_string(g.degree()) + ", expected " +
                      std::to_string(degree));

  std::vector<Point> rows(degree);
  std::iota(rows.begin(), rows.end(), Point{0});
  detail::RowIndex index(degree);
  index.insert(rows, 0);
  std::size_t count = 1;
  for (std::size_t i = 0; i < count; ++i) {
    for (const auto& g : gens) {
      const std::size_t base = rows.size();
      rows.resize(base + degree);
      for (std::size_t x = 0; x < degree; ++x) rows[base + x] = g[rows[i * degree + x]];
      auto [e, inserted] = index.insert(rows, static_cast<Elem>(count));
      if (!inserted) {
        rows.resize(base);
        continue;
      }
      if (++count > cap)
        throw Error(ErrorKind::BudgetExceeded,
                    "closure exceeds element cap " + std::to_string(cap) + (name.empty() ? "" : " for " + name));
    }
  }

  std::vector<Elem> perm(count);
  std::iota(perm.begin(), perm.end(), Elem{0});
  auto row_of = [&](Elem e) { return rows.begin() + static_cast<std::ptrdiff_t>(std::size_t{e} * degree); };
  std::sort(perm.begin(), perm.end(), [&](Elem a, Elem b) {
    return std::lexicographical_compare(row_of(a), row_of(a) + static_cast<std::ptrdiff_t>(degree), row_of(b),
                                        row_of(b) + static_cast<std::ptrdiff_t>(degree));
  });
  std::vector<Point> sorted(count * degree);
  for (std::size_t i = 0; i < count; ++i) std::copy(row_of(perm[i]), row_of(perm[i]) + static_cast<std::ptrdiff_t>(degree), sorted.begin() + static_cast<std::ptrdiff_t>(i * degree));

  std::vector<Elem> gen_idx;
  for (const auto& g : gens) {
    auto r = g.images();
    std::size_t lo = 0, hi = count;
    while (lo < hi) {
      const std::size_t mid = (lo + hi) / 2;
      auto it = sorted.begin() + static_cast<std::ptrdiff_t>(mid * degree);
      if (std::lexicographical_compare(it, it + static_cast<std::ptrdiff_t>(degree), r.begin(), r.end()))
        lo = mid + 1;
      else
        hi = mid;
    }
    const auto e = static_cast<Elem>(lo);
    if (e != FiniteGroup::identity() && std::find(gen_idx.begin(), gen_idx.end(), e) == gen_idx.end())
      gen_idx.push_back(e);
  }
  return make_group_from_sorted(degree, std::move(sorted), gen_idx, std::move(name));
}

std::uint64_t element_order(const FiniteGroup& g, const Permutation& x) { return g.elem_order(g.index_of(x)); }

SubgroupRef trivial_subgroup(const FiniteGroup& g) {
  ElementSet m(g.order());
  m.insert(FiniteGroup::identity());
  return SubgroupRef(g, std::move(m), {});
}

SubgroupRef whole_group(const FiniteGroup& g) {
  ElementSet m(g.order());
  for (Elem e = 0; e < g.order(); ++e) m.insert(e);
  auto gens = g.generators();
  return SubgroupRef(g, std::move(m), std::vector<Elem>(gens.begin(), gens.end()));
}

std::optional<SubgroupRef> closure(const SubgroupRef& base, std::span<const Elem> extra, std::size_t limit,
                                   const std::function<bool(Elem)>& accept) {
  const FiniteGroup& g = base.parent();
  ElementSet members = base.members();
  std::vector<Elem> elems = base.elements();
  auto gb = base.generators();
  std::vector<Elem> gens(gb.begin(), gb.end());
  std::vector<Elem> reps;
  for (Elem s : extra) {
    if (members.test(s)) continue;
    gens.push_back(s);
    const std::size_t h = elems.size();
    auto add_coset = [&](Elem r) {
      if (limit && elems.size() + h > limit) return false;
      for (std::size_t i = 0; i < h; ++i) {
        const Elem e = g.mul(elems[i], r);
        if (accept && !accept(e)) return false;
        members.insert(e);
        elems.push_back(e);
      }
      return true;
    };
    if (!add_coset(s)) return std::nullopt;
    reps.assign(1, s);
    for (std::size_t i = 0; i < reps.size(); ++i) {
      for (Elem t : gens) {
        const Elem e = g.mul(reps[i], t);
        if (members.test(e)) continue;
        if (!add_coset(e)) return std::nullopt;
        reps.push_back(e);
      }
    }
  }
  return SubgroupRef(g, std::move(members), std::move(gens));
}

SubgroupRef subgroup_generated(const FiniteGroup& g, std::span<const Elem> seed) {
  for (Elem e : seed)
    if (e >= g.order()) throw Error(ErrorKind::NotAMember, "element index " + std::to_string(e) + " out of range");
  return *closure(trivial_subgroup(g), seed);
}

SubgroupRef subgroup_generated(const FiniteGroup& g, std::span<const Permutation> seed) {
  std::vector<Elem> idx;
  for (const auto& p : seed) idx.push_back(g.index_of(p));
  return subgroup_generated(g, idx);
}

SubgroupRef join(const SubgroupRef& a, const SubgroupRef& b) {
  if (a.order() < b.order()) return *closure(b, a.generators());
  return *closure(a, b.generators());
}

SubgroupRef intersection(const SubgroupRef& a, const SubgroupRef& b) {
  return subgroup_from_members(a.parent(), a.members() & b.members());
}

SubgroupRef subgroup_from_members(const FiniteGroup& g, const ElementSet& members) {
  SubgroupRef cur = trivial_subgroup(g);
  members.for_each([&](Elem e) {
    if (cur.order() == members.count() || cur.contains(e)) return;
    Elem one[1] = {e};
    cur = *closure(cur, one);
  });
  return cur;
}

FiniteGroup as_group(const SubgroupRef& h, std::string name) {
  const FiniteGroup& g = h.parent();
  std::vector<Point> rows;
  rows.reserve(h.order() * g.degree());
  std::vector<Elem> position(g.order(), 0);
  Elem next = 0;
  h.members().for_each([&](Elem e) {
    auto r = g.images(e);
    rows.insert(rows.end(), r.begin(), r.end());
    position[e] = next++;
  });
  std::vector<Elem> gens;
  for (Elem e : h.generators())
    if (e != FiniteGroup::identity()) gens.push_back(position[e]);
  return make_group_from_sorted(g.degree(), std::move(rows), gens, std::move(name));
}

bool is_normal(const SubgroupRef& h) {
  const FiniteGroup& g = h.parent();
  for (Elem t : h.generators())
    for (Elem s : g.generators())
      if (!h.contains(g.conj(t, s))) return false;
  return true;
}

SubgroupRef conjugate(const SubgroupRef& h, Elem x) {
  const FiniteGroup& g = h.parent();
  ElementSet m(g.order());
  h.members().for_each([&](Elem e) { m.insert(g.conj(e, x)); });
  std::vector<Elem> gens;
  for (Elem t : h.generators()) gens.push_back(g.conj(t, x));
  return SubgroupRef(g, std::move(m), std::move(gens));
}

DirectProduct direct_product(const FiniteGroup& a, const FiniteGroup& b, std::size_t cap, std::string name) {
  const std::size_t d1 = a.degree(), d2 = b.degree(), n = d1 + d2;
  if (n > kMaxDegree) throw Error(ErrorKind::BudgetExceeded, "product degree exceeds " + std::to_string(kMaxDegree));
  if (a.order() * b.order() > cap)
    throw Error(ErrorKind::BudgetExceeded,
                "product order " + std::to_string(a.order() * b.order()) + " exceeds element cap " + std::to_string(cap));
  std::vector<Permutation> left, right;
  for (Elem e : a.generators()) {
    std::vector<Point> img(n);
    std::iota(img.begin(), img.end(), Point{0});
    auto r = a.images(e);
    std::copy(r.begin(), r.end(), img.begin());
    left.push_back(Permutation::from_images(std::move(img)));
  }
  for (Elem e : b.generators()) {
    std::vector<Point> img(n);
    std::iota(img.begin(), img.end(), Point{0});
    auto r = b.images(e);
    for (std::size_t x = 0; x < d2; ++x) img[d1 + x] = static_cast<Point>(d1 + r[x]);
    right.push_back(Permutation::from_images(std::move(img)));
  }
  std::vector<Permutation> all = left;
  all.insert(all.end(), right.begin(), right.end());
  if (name.empty()) name = a.name() + "x" + b.name();
  FiniteGroup p = group_from_generators(n, all, cap, std::move(name));
  return DirectProduct{p, subgroup_generated(p, std::span<const Permutation>(left)),
                       subgroup_generated(p, std::span<const Permutation>(right))};
}

const std::vector<std::vector<Elem>>& conjugacy_classes(const FiniteGroup& g) { return g.classes(); }

Quotient quotient_group(const FiniteGroup& g, const SubgroupRef& n, std::size_t cap) {
  if (!n.parent().same_as(g)) throw Error(ErrorKind::NotAMember, "subgroup belongs to a different group");
  if (!is_normal(n)) throw Error(ErrorKind::NotNormal, n.describe() + " is not normal in " + g.name());
  if (n.is_trivial()) {
    std::vector<Elem> id(g.order());
    std::iota(id.begin(), id.end(), Elem{0});
    return Quotient{g, std::move(id), n};
  }
  const std::size_t index = g.order() / n.order();
  constexpr std::size_t kMaxQuotientTable = std::size_t{1} << 27;
  if (index > kMaxDegree || index > cap || index * index > kMaxQuotientTable)
    throw Error(ErrorKind::BudgetExceeded, "coset action of index " + std::to_string(index) + " is too large");

  constexpr std::uint32_t kUnset = ~std::uint32_t{0};
  std::vector<std::uint32_t> coset_of(g.order(), kUnset);
  std::vector<Elem> reps;
  const auto kernel = n.elements();
  for (Elem x = 0; x < g.order(); ++x) {
    if (coset_of[x] != kUnset) continue;
    const auto c = static_cast<std::uint32_t>(reps.size());
    reps.push_back(x);
    for (Elem m : kernel) coset_of[g.mul(m, x)] = c;
  }

  auto action_of = [&](Elem s) {
    std::vector<Point> img(index);
    for (std::size_t c = 0; c < index; ++c) img[c] = static_cast<Point>(coset_of[g.mul(reps[c], s)]);
    return img;
  };
  std::vector<Permutation> qgens;
  for (Elem s : g.generators()) qgens.push_back(Permutation::from_images(action_of(s)));
  FiniteGroup q = group_from_generators(index, qgens, cap, g.name() + "/N");
  if (q.order() != index) throw Error(ErrorKind::NotNormal, "coset action has unexpected order");

  std::vector<Elem> proj(g.order());
  std::vector<Elem> rep_image(index);
  for (std::size_t c = 0; c < index; ++c) rep_image[c] = *q.find(action_of(reps[c]));
  for (Elem x = 0; x < g.order(); ++x) proj[x] = rep_image[coset_of[x]];
  return Quotient{std::move(q), std::move(proj), n};
}

SubgroupRef preimage(const Quotient& q, const SubgroupRef& in_quotient) {
  std::vector<Elem> lifts;
  std::vector<bool> wanted(q.group.order(), false);
  for (Elem y : in_quotient.generators()) wanted[y] = true;
  for (Elem x = 0; x < q.projection.size(); ++x) {
    if (wanted[q.projection[x]]) {
      lifts.push_back(x);
      wanted[q.projection[x]] = false;
    }
  }
  return *closure(q.kernel, lifts);
}

SubgroupRef image(const Quotient& q, const SubgroupRef& in_parent) {
  std::vector<Elem> gens;
  for (Elem x : in_parent.generators()) gens.push_back(q.projection[x]);
  return subgroup_generated(q.group, gens);
}

}  // namespace arithgraph
