#include "pgog/pgroup.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <queue>
#include <random>
#include <set>
#include <sstream>

namespace pgog {

namespace {

[[noreturn]] void fail(const std::string& msg) { throw std::invalid_argument(msg); }

long long checked_pow(long long base, int exp, long long cap) {
  long long r = 1;
  for (int i = 0; i < exp; ++i) {
    r *= base;
    if (r > cap) return cap + 1;
  }
  return r;
}

void check_group_table(const std::vector<Elt>& table, int n, Elt identity) {
  // Latin square rows and columns
  std::vector<char> seen(n);
  for (int x = 0; x < n; ++x) {
    std::fill(seen.begin(), seen.end(), 0);
    for (int y = 0; y < n; ++y) {
      Elt v = table[size_t(x) * n + y];
      if (v < 0 || v >= n) fail("group table entry out of range");
      if (seen[v]) fail("group table row is not a permutation");
      seen[v] = 1;
    }
  }
  for (int y = 0; y < n; ++y) {
    std::fill(seen.begin(), seen.end(), 0);
    for (int x = 0; x < n; ++x) {
      Elt v = table[size_t(x) * n + y];
      if (seen[v]) fail("group table column is not a permutation");
      seen[v] = 1;
    }
  }
  for (int x = 0; x < n; ++x)
    if (table[size_t(identity) * n + x] != x || table[size_t(x) * n + identity] != x)
      fail("identity element does not act as identity");

  auto mul = [&](Elt x, Elt y) { return table[size_t(x) * n + y]; };
  if (n <= 256) {
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y) {
        Elt xy = mul(x, y);
        for (int z = 0; z < n; ++z)
          if (mul(xy, z) != mul(x, mul(y, z))) fail("group table is not associative");
      }
  } else {
    // structural constructions are associative by build; sample raw tables
    std::mt19937_64 rng(0x70676f67u ^ (uint64_t(n) << 20));
    std::uniform_int_distribution<int> dist(0, n - 1);
    for (int i = 0; i < 100000; ++i) {
      Elt x = dist(rng), y = dist(rng), z = dist(rng);
      if (mul(mul(x, y), z) != mul(x, mul(y, z))) fail("group table is not associative");
    }
  }
}

Elt find_identity(const std::vector<Elt>& table, int n) {
  for (Elt e = 0; e < n; ++e) {
    bool ok = true;
    for (int x = 0; x < n && ok; ++x) ok = table[size_t(e) * n + x] == x;
    if (ok) return e;
  }
  fail("group table has no identity element");
}

}  // namespace

GroupSpec GroupSpec::cyclic(int n) {
  GroupSpec s;
  s.kind = Kind::Cyclic;
  s.n = n;
  return s;
}

GroupSpec GroupSpec::elementary_abelian(int p, int k) {
  GroupSpec s;
  s.kind = Kind::ElementaryAbelian;
  s.p = p;
  s.k = k;
  return s;
}

GroupSpec GroupSpec::product(std::vector<GroupSpec> factors) {
  GroupSpec s;
  s.kind = Kind::Product;
  s.sub = std::move(factors);
  return s;
}

GroupSpec GroupSpec::semidirect(GroupSpec normal, GroupSpec acting,
                                std::vector<std::vector<Elt>> action) {
  GroupSpec s;
  s.kind = Kind::Semidirect;
  s.sub.push_back(std::move(normal));
  s.sub.push_back(std::move(acting));
  s.action = std::move(action);
  return s;
}

GroupSpec GroupSpec::raw_table(std::vector<std::vector<Elt>> table) {
  GroupSpec s;
  s.kind = Kind::Table;
  s.table = std::move(table);
  return s;
}

GroupSpec GroupSpec::with_label(std::string text) const {
  GroupSpec s = *this;
  s.label = std::move(text);
  return s;
}

FiniteGroup::FiniteGroup(std::vector<Elt> table, int order, GroupSpec provenance,
                         std::string label)
    : order_(order),
      table_(std::move(table)),
      provenance_(std::move(provenance)),
      label_(std::move(label)) {
  if (order_ < 1) fail("group order must be positive");
  if (table_.size() != size_t(order_) * order_) fail("group table has wrong shape");
  identity_ = find_identity(table_, order_);
  check_group_table(table_, order_, identity_);
  inverse_.assign(order_, -1);
  for (Elt x = 0; x < order_; ++x)
    for (Elt y = 0; y < order_; ++y)
      if (mul(x, y) == identity_) inverse_[x] = y;
  for (Elt x = 0; x < order_; ++x)
    if (inverse_[x] < 0 || mul(inverse_[x], x) != identity_)
      fail("group table has an element without two-sided inverse");
}

Elt FiniteGroup::power(Elt x, long long e) const {
  if (e < 0) return power(inv(x), -e);
  Elt r = identity_;
  while (e-- > 0) r = mul(r, x);
  return r;
}

std::string FiniteGroup::display_name() const {
  if (!label_.empty()) return label_;
  std::ostringstream os;
  switch (provenance_.kind) {
    case GroupSpec::Kind::Cyclic:
      os << "C" << provenance_.n;
      break;
    case GroupSpec::Kind::ElementaryAbelian:
      os << "C" << provenance_.p << "^" << provenance_.k;
      break;
    case GroupSpec::Kind::Product: {
      if (provenance_.sub.empty()) return "C1";
      bool first = true;
      for (const auto& f : provenance_.sub) {
        if (!first) os << "x";
        first = false;
        os << group_from_spec(f)->display_name();
      }
      break;
    }
    case GroupSpec::Kind::Semidirect:
      os << group_from_spec(provenance_.sub[0])->display_name() << ":"
         << group_from_spec(provenance_.sub[1])->display_name();
      break;
    case GroupSpec::Kind::Table:
      os << "table(" << order_ << ")";
      break;
  }
  return os.str();
}

bool FiniteGroup::operator==(const FiniteGroup& other) const {
  return order_ == other.order_ && identity_ == other.identity_ &&
         table_ == other.table_ && label_ == other.label_ &&
         provenance_ == other.provenance_;
}

bool groups_equal(const GroupPtr& a, const GroupPtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  return *a == *b;
}

bool Subgroup::contains(Elt x) const {
  return std::binary_search(elements.begin(), elements.end(), x);
}

GroupHom::GroupHom(GroupPtr domain, GroupPtr codomain, std::vector<Elt> map)
    : domain_(std::move(domain)), codomain_(std::move(codomain)), map_(std::move(map)) {
  const int n = domain_->order();
  if (map_.size() != size_t(n)) fail("homomorphism map has wrong length");
  for (Elt v : map_)
    if (v < 0 || v >= codomain_->order()) fail("homomorphism image out of range");
  for (Elt x = 0; x < n; ++x)
    for (Elt y = 0; y < n; ++y)
      if (map_[domain_->mul(x, y)] != codomain_->mul(map_[x], map_[y]))
        fail("images are inconsistent with a homomorphism");
  std::vector<Elt> img(map_);
  std::sort(img.begin(), img.end());
  img.erase(std::unique(img.begin(), img.end()), img.end());
  injective_ = img.size() == size_t(n);
  image_ = Subgroup{codomain_, std::move(img)};
}

bool GroupHom::operator==(const GroupHom& other) const {
  return groups_equal(domain_, other.domain_) && groups_equal(codomain_, other.codomain_) &&
         map_ == other.map_;
}

GroupPtr group_from_spec(const GroupSpec& spec, int order_cap) {
  switch (spec.kind) {
    case GroupSpec::Kind::Cyclic: {
      int n = spec.n;
      if (n < 1) fail("cyclic group needs order >= 1");
      if (n > order_cap) fail("group order exceeds cap");
      std::vector<Elt> t(size_t(n) * n);
      for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) t[size_t(x) * n + y] = Elt((x + y) % n);
      return std::make_shared<FiniteGroup>(std::move(t), n, spec, spec.label);
    }
    case GroupSpec::Kind::ElementaryAbelian: {
      if (!is_prime(spec.p)) fail("elementary abelian group needs a prime p");
      if (spec.k < 0) fail("elementary abelian group needs rank >= 0");
      long long n = checked_pow(spec.p, spec.k, order_cap);
      if (n > order_cap) fail("group order exceeds cap");
      int order = int(n), p = spec.p;
      std::vector<Elt> t(size_t(order) * order);
      for (int x = 0; x < order; ++x)
        for (int y = 0; y < order; ++y) {
          int a = x, b = y, place = 1, r = 0;
          for (int i = 0; i < spec.k; ++i) {
            r += ((a + b) % p) * place;
            a /= p;
            b /= p;
            place *= p;
          }
          t[size_t(x) * order + y] = Elt(r);
        }
      return std::make_shared<FiniteGroup>(std::move(t), order, spec, spec.label);
    }
    case GroupSpec::Kind::Product: {
      std::vector<GroupPtr> factors;
      long long n = 1;
      for (const auto& f : spec.sub) {
        factors.push_back(group_from_spec(f, order_cap));
        n *= factors.back()->order();
        if (n > order_cap) fail("group order exceeds cap");
      }
      int order = int(n);
      std::vector<Elt> t(size_t(order) * order);
      // first factor most significant
      auto split = [&](int x, std::vector<int>& digits) {
        for (int i = int(factors.size()) - 1; i >= 0; --i) {
          digits[i] = x % factors[i]->order();
          x /= factors[i]->order();
        }
      };
      std::vector<int> dx(factors.size()), dy(factors.size());
      for (int x = 0; x < order; ++x)
        for (int y = 0; y < order; ++y) {
          split(x, dx);
          split(y, dy);
          int r = 0;
          for (size_t i = 0; i < factors.size(); ++i)
            r = r * factors[i]->order() + factors[i]->mul(dx[i], dy[i]);
          t[size_t(x) * order + y] = Elt(r);
        }
      return std::make_shared<FiniteGroup>(std::move(t), order, spec, spec.label);
    }
    case GroupSpec::Kind::Semidirect: {
      if (spec.sub.size() != 2) fail("semidirect product needs normal and acting parts");
      GroupPtr nor = group_from_spec(spec.sub[0], order_cap);
      GroupPtr act = group_from_spec(spec.sub[1], order_cap);
      long long n = (long long)nor->order() * act->order();
      if (n > order_cap) fail("group order exceeds cap");
      const auto& alpha = spec.action;
      if (alpha.size() != size_t(act->order())) fail("action needs one permutation per acting element");
      for (const auto& perm : alpha) {
        if (perm.size() != size_t(nor->order())) fail("action permutation has wrong length");
        std::vector<char> seen(nor->order(), 0);
        for (Elt v : perm) {
          if (v < 0 || v >= nor->order() || seen[v]) fail("action entry is not a permutation");
          seen[v] = 1;
        }
        for (Elt x = 0; x < nor->order(); ++x)
          for (Elt y = 0; y < nor->order(); ++y)
            if (perm[nor->mul(x, y)] != nor->mul(perm[x], perm[y]))
              fail("action permutation is not an automorphism");
      }
      for (Elt x = 0; x < nor->order(); ++x)
        if (alpha[act->identity()][x] != x) fail("action of identity is not trivial");
      for (Elt a = 0; a < act->order(); ++a)
        for (Elt b = 0; b < act->order(); ++b)
          for (Elt x = 0; x < nor->order(); ++x)
            if (alpha[act->mul(a, b)][x] != alpha[a][alpha[b][x]])
              fail("action is not a homomorphism into the automorphism group");
      int order = int(n), m = act->order();
      std::vector<Elt> t(size_t(order) * order);
      for (int x = 0; x < order; ++x) {
        Elt n1 = Elt(x / m), a1 = Elt(x % m);
        for (int y = 0; y < order; ++y) {
          Elt n2 = Elt(y / m), a2 = Elt(y % m);
          t[size_t(x) * order + y] =
              Elt(nor->mul(n1, alpha[a1][n2]) * m + act->mul(a1, a2));
        }
      }
      return std::make_shared<FiniteGroup>(std::move(t), order, spec, spec.label);
    }
    case GroupSpec::Kind::Table: {
      int n = int(spec.table.size());
      if (n < 1) fail("raw table is empty");
      if (n > order_cap) fail("group order exceeds cap");
      std::vector<Elt> t;
      t.reserve(size_t(n) * n);
      for (const auto& row : spec.table) {
        if (row.size() != size_t(n)) fail("raw table is not square");
        t.insert(t.end(), row.begin(), row.end());
      }
      return std::make_shared<FiniteGroup>(std::move(t), n, spec, spec.label);
    }
  }
  fail("unknown group kind");
}

GroupHom hom_from_generator_images(const GroupPtr& domain, const GroupPtr& codomain,
                                   const std::vector<Elt>& gens,
                                   const std::vector<Elt>& images) {
  if (gens.size() != images.size()) fail("generator and image lists differ in length");
  for (Elt g : gens)
    if (g < 0 || g >= domain->order()) fail("generator out of range");
  for (Elt im : images)
    if (im < 0 || im >= codomain->order()) fail("image out of range");

  std::vector<Elt> map(domain->order(), -1);
  map[domain->identity()] = codomain->identity();
  std::queue<Elt> work;
  work.push(domain->identity());
  auto assign = [&](Elt x, Elt im) {
    if (map[x] == -1) {
      map[x] = im;
      work.push(x);
    } else if (map[x] != im) {
      fail("images are inconsistent with a homomorphism");
    }
  };
  for (size_t i = 0; i < gens.size(); ++i) assign(gens[i], images[i]);
  while (!work.empty()) {
    Elt x = work.front();
    work.pop();
    for (size_t i = 0; i < gens.size(); ++i)
      assign(domain->mul(x, gens[i]), codomain->mul(map[x], map[gens[i]]));
  }
  for (Elt x = 0; x < domain->order(); ++x)
    if (map[x] == -1) fail("generators do not generate the domain");
  return GroupHom(domain, codomain, std::move(map));
}

GroupHom identity_hom(const GroupPtr& g) {
  std::vector<Elt> map(g->order());
  std::iota(map.begin(), map.end(), 0);
  return GroupHom(g, g, std::move(map));
}

GroupHom trivial_hom(const GroupPtr& domain, const GroupPtr& codomain) {
  return GroupHom(domain, codomain,
                  std::vector<Elt>(domain->order(), codomain->identity()));
}

GroupHom compose(const GroupHom& outer, const GroupHom& inner) {
  if (!groups_equal(inner.codomain(), outer.domain()))
    fail("homomorphisms do not compose");
  std::vector<Elt> map(inner.domain()->order());
  for (Elt x = 0; x < inner.domain()->order(); ++x) map[x] = outer(inner(x));
  return GroupHom(inner.domain(), outer.codomain(), std::move(map));
}

GroupHom inverse_iso(const GroupHom& f) {
  if (!f.injective() || !f.surjective()) fail("homomorphism is not invertible");
  std::vector<Elt> map(f.codomain()->order());
  for (Elt x = 0; x < f.domain()->order(); ++x) map[f(x)] = x;
  return GroupHom(f.codomain(), f.domain(), std::move(map));
}

Subgroup make_subgroup(const GroupPtr& parent, std::vector<Elt> elements) {
  std::sort(elements.begin(), elements.end());
  elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
  for (Elt x : elements)
    if (x < 0 || x >= parent->order()) fail("subgroup element out of range");
  Subgroup s{parent, std::move(elements)};
  if (!s.contains(parent->identity())) fail("subgroup misses the identity");
  for (Elt x : s.elements) {
    if (!s.contains(parent->inv(x))) fail("subgroup is not closed under inverse");
    for (Elt y : s.elements)
      if (!s.contains(parent->mul(x, y))) fail("subgroup is not closed under product");
  }
  return s;
}

Subgroup subgroup_generated(const GroupPtr& g, const std::vector<Elt>& gens) {
  for (Elt x : gens)
    if (x < 0 || x >= g->order()) fail("generator out of range");
  std::set<Elt> span{g->identity()};
  std::queue<Elt> work;
  work.push(g->identity());
  for (Elt x : gens)
    if (span.insert(x).second) work.push(x);
  while (!work.empty()) {
    Elt x = work.front();
    work.pop();
    for (Elt y : gens) {
      Elt z = g->mul(x, y);
      if (span.insert(z).second) work.push(z);
    }
  }
  return Subgroup{g, std::vector<Elt>(span.begin(), span.end())};
}

Subgroup trivial_subgroup(const GroupPtr& g) {
  return Subgroup{g, {g->identity()}};
}

Subgroup full_subgroup(const GroupPtr& g) {
  std::vector<Elt> all(g->order());
  std::iota(all.begin(), all.end(), 0);
  return Subgroup{g, std::move(all)};
}

Subgroup intersect(const Subgroup& a, const Subgroup& b) {
  if (!groups_equal(a.parent, b.parent)) fail("subgroups of different groups");
  std::vector<Elt> out;
  std::set_intersection(a.elements.begin(), a.elements.end(), b.elements.begin(),
                        b.elements.end(), std::back_inserter(out));
  return Subgroup{a.parent, std::move(out)};
}

Subgroup preimage_subgroup(const GroupHom& f, const Subgroup& s) {
  if (!groups_equal(s.parent, f.codomain())) fail("subgroup does not live in the codomain");
  std::vector<Elt> out;
  for (Elt x = 0; x < f.domain()->order(); ++x)
    if (s.contains(f(x))) out.push_back(x);
  return Subgroup{f.domain(), std::move(out)};
}

Subgroup image_subgroup(const GroupHom& f, const Subgroup& s) {
  if (!groups_equal(s.parent, f.domain())) fail("subgroup does not live in the domain");
  std::vector<Elt> out;
  for (Elt x : s.elements) out.push_back(f(x));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return Subgroup{f.codomain(), std::move(out)};
}

std::vector<Elt> double_cosets(const GroupPtr& p, const Subgroup& q, const Subgroup& r) {
  if (!groups_equal(q.parent, p) || !groups_equal(r.parent, p))
    fail("double cosets need subgroups of the ambient group");
  std::vector<char> covered(p->order(), 0);
  std::vector<Elt> reps;
  for (Elt x = 0; x < p->order(); ++x) {
    if (covered[x]) continue;
    reps.push_back(x);
    for (Elt a : q.elements) {
      Elt ax = p->mul(a, x);
      for (Elt b : r.elements) covered[p->mul(ax, b)] = 1;
    }
  }
  return reps;
}

bool is_normal(const GroupPtr& p, const Subgroup& s) {
  if (!groups_equal(s.parent, p)) fail("subgroup of a different group");
  for (Elt g = 0; g < p->order(); ++g)
    for (Elt x : s.elements)
      if (!s.contains(p->conj(g, x))) return false;
  return true;
}

bool is_p_group(const FiniteGroup& g, int p) {
  if (!is_prime(p)) fail("p must be prime");
  int n = g.order();
  while (n % p == 0) n /= p;
  return n == 1;
}

bool is_prime(int p) {
  if (p < 2) return false;
  for (int d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

std::vector<Elt> minimal_generators(const GroupPtr& g) {
  std::vector<Elt> gens;
  Subgroup span = trivial_subgroup(g);
  while (span.order() < g->order()) {
    Elt next = -1;
    for (Elt x = 0; x < g->order(); ++x)
      if (!span.contains(x)) {
        next = x;
        break;
      }
    gens.push_back(next);
    span = subgroup_generated(g, gens);
  }
  return gens;
}

std::vector<Subgroup> all_subgroups(const GroupPtr& g) {
  if (g->order() > 64) fail("subgroup enumeration is limited to order 64");
  std::set<std::vector<Elt>> seen;
  std::vector<Subgroup> out;
  std::queue<std::vector<Elt>> work;
  std::vector<Elt> triv{g->identity()};
  seen.insert(triv);
  out.push_back(Subgroup{g, triv});
  work.push(triv);
  while (!work.empty()) {
    std::vector<Elt> s = work.front();
    work.pop();
    for (Elt x = 0; x < g->order(); ++x) {
      if (std::binary_search(s.begin(), s.end(), x)) continue;
      std::vector<Elt> gens = s;
      gens.push_back(x);
      Subgroup t = subgroup_generated(g, gens);
      if (seen.insert(t.elements).second) {
        out.push_back(t);
        work.push(t.elements);
      }
    }
  }
  std::sort(out.begin(), out.end(), [](const Subgroup& a, const Subgroup& b) {
    if (a.order() != b.order()) return a.order() < b.order();
    return a.elements < b.elements;
  });
  return out;
}

SubgroupGroup subgroup_as_group(const Subgroup& s) {
  const auto& par = *s.parent;
  int n = s.order();
  std::vector<Elt> pos(par.order(), -1);
  for (int i = 0; i < n; ++i) pos[s.elements[i]] = Elt(i);
  std::vector<std::vector<Elt>> rows(n, std::vector<Elt>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Elt prod = par.mul(s.elements[i], s.elements[j]);
      if (pos[prod] < 0) fail("subgroup is not closed under product");
      rows[i][j] = pos[prod];
    }
  GroupPtr grp = group_from_spec(GroupSpec::raw_table(std::move(rows)));
  GroupHom emb(grp, s.parent, s.elements);
  return SubgroupGroup{grp, std::move(emb), s.elements};
}

}  // namespace pgog
