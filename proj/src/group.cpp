#include "sigmalat/group.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <set>

namespace sigmalat {

namespace {

std::vector<Permutation> dedup_generators(unsigned degree, std::vector<Permutation> gens) {
  std::vector<Permutation> out;
  for (auto& g : gens) {
    if (g.degree() != degree) throw ParseError("generator degree mismatch");
    if (g.is_identity()) continue;
    if (std::find(out.begin(), out.end(), g) == out.end()) out.push_back(std::move(g));
  }
  return out;
}

}  // namespace

Group Group::generate(unsigned degree, std::vector<Permutation> generators,
                      const Limits& limits) {
  if (degree == 0) throw ParseError("degree must be at least 1");
  Group g;
  g.degree_ = degree;
  g.generators_ = dedup_generators(degree, std::move(generators));

  std::set<Permutation> closed;
  std::vector<const Permutation*> frontier;
  auto [it, ignored] = closed.insert(Permutation::identity(degree));
  frontier.push_back(&*it);
  while (!frontier.empty()) {
    std::vector<const Permutation*> next;
    for (const Permutation* p : frontier) {
      for (const Permutation& gen : g.generators_) {
        Permutation q = (*p) * gen;
        auto [jt, inserted] = closed.insert(std::move(q));
        if (inserted) {
          if (closed.size() > limits.element_cap)
            throw CapExceeded("closure exceeds element cap " +
                              std::to_string(limits.element_cap));
          next.push_back(&*jt);
        }
      }
    }
    frontier = std::move(next);
  }
  g.elements_.assign(closed.begin(), closed.end());
  g.build_index_tables();
  return g;
}

Group Group::from_sorted_elements(unsigned degree, std::vector<Permutation> elements) {
  Group g;
  g.degree_ = degree;
  g.elements_ = std::move(elements);
  g.build_index_tables();
  // Greedy generating set over the closed element list.
  std::vector<bool> in(g.order(), false);
  in[0] = true;
  std::size_t covered = 1;
  std::vector<std::uint32_t> gen_ids;
  for (std::uint32_t e = 1; e < g.order() && covered < g.order(); ++e) {
    if (in[e]) continue;
    gen_ids.push_back(e);
    // close the covered set under right multiplication by e
    std::vector<std::uint32_t> members;
    members.reserve(g.order());
    for (std::uint32_t i = 0; i < g.order(); ++i)
      if (in[i]) members.push_back(i);
    std::size_t head = 0;
    while (head < members.size()) {
      std::uint32_t m = members[head++];
      for (std::uint32_t x : gen_ids) {
        std::uint32_t y = g.mul(m, x);
        if (!in[y]) {
          in[y] = true;
          ++covered;
          members.push_back(y);
        }
      }
    }
  }
  for (std::uint32_t id : gen_ids) g.generators_.push_back(g.elements_[id]);
  g.generator_ids_ = std::move(gen_ids);
  return g;
}

void Group::build_index_tables() {
  const std::uint64_t n = elements_.size();
  inv_table_.resize(n);
  if (n <= kMulTableCap) {
    mul_table_.assign(n * n, 0);
    for (std::uint64_t a = 0; a < n; ++a) {
      for (std::uint64_t b = 0; b < n; ++b)
        mul_table_[a * n + b] = index_of(elements_[a] * elements_[b]);
    }
    for (std::uint64_t a = 0; a < n; ++a) {
      for (std::uint64_t b = 0; b < n; ++b)
        if (mul_table_[a * n + b] == 0) {
          inv_table_[a] = static_cast<std::uint32_t>(b);
          break;
        }
    }
  } else {
    for (std::uint64_t a = 0; a < n; ++a) inv_table_[a] = index_of(elements_[a].inverse());
  }
  if (generator_ids_.empty()) {
    for (const auto& gen : generators_) generator_ids_.push_back(index_of(gen));
  }
}

std::uint32_t Group::index_of(const Permutation& p) const {
  auto it = std::lower_bound(elements_.begin(), elements_.end(), p);
  if (it == elements_.end() || !(*it == p)) throw Error("element not in group");
  return static_cast<std::uint32_t>(it - elements_.begin());
}

std::optional<std::uint32_t> Group::find(const Permutation& p) const {
  auto it = std::lower_bound(elements_.begin(), elements_.end(), p);
  if (it == elements_.end() || !(*it == p)) return std::nullopt;
  return static_cast<std::uint32_t>(it - elements_.begin());
}

std::uint32_t Group::mul(std::uint32_t a, std::uint32_t b) const {
  if (!mul_table_.empty()) return mul_table_[static_cast<std::uint64_t>(a) * order() + b];
  return index_of(elements_[a] * elements_[b]);
}

std::uint32_t Group::conj(std::uint32_t a, std::uint32_t g) const {
  return mul(mul(inv(g), a), g);
}

std::uint32_t Group::commutator(std::uint32_t a, std::uint32_t b) const {
  return mul(mul(inv(a), inv(b)), mul(a, b));
}

std::uint64_t Group::element_order(std::uint32_t a) const {
  return perm_order(elements_[a]);
}

bool Subgroup::contains(std::uint32_t e) const {
  return std::binary_search(elems.begin(), elems.end(), e);
}

bool Subgroup::contains_all(const Subgroup& other) const {
  return std::includes(elems.begin(), elems.end(), other.elems.begin(), other.elems.end());
}

std::vector<std::uint32_t> Subgroup::generator_ids() const {
  std::vector<bool> in(parent->order(), false);
  std::vector<std::uint32_t> members{0};
  in[0] = true;
  std::vector<std::uint32_t> gens;
  for (std::uint32_t e : elems) {
    if (in[e]) continue;
    gens.push_back(e);
    std::size_t head = 0;
    while (head < members.size()) {
      std::uint32_t m = members[head++];
      for (std::uint32_t x : gens) {
        std::uint32_t y = parent->mul(m, x);
        if (!in[y]) {
          in[y] = true;
          members.push_back(y);
        }
      }
    }
    if (members.size() == elems.size()) break;
  }
  return gens;
}

std::vector<Permutation> Subgroup::generator_perms() const {
  std::vector<Permutation> out;
  for (std::uint32_t id : generator_ids()) out.push_back(parent->element(id));
  return out;
}

Subgroup whole_group(const Group& g) {
  Subgroup s;
  s.parent = &g;
  s.elems.resize(g.order());
  std::iota(s.elems.begin(), s.elems.end(), 0);
  return s;
}

Subgroup trivial_subgroup(const Group& g) {
  return Subgroup{&g, {0}};
}

Subgroup subgroup_from_elems(const Group& g, std::vector<std::uint32_t> elems) {
  std::sort(elems.begin(), elems.end());
  elems.erase(std::unique(elems.begin(), elems.end()), elems.end());
  return Subgroup{&g, std::move(elems)};
}

Subgroup generated_subgroup(const Group& g, const std::vector<std::uint32_t>& gens) {
  std::vector<bool> in(g.order(), false);
  std::vector<std::uint32_t> members{0};
  in[0] = true;
  std::size_t head = 0;
  while (head < members.size()) {
    std::uint32_t m = members[head++];
    for (std::uint32_t x : gens) {
      std::uint32_t y = g.mul(m, x);
      if (!in[y]) {
        in[y] = true;
        members.push_back(y);
      }
    }
  }
  std::sort(members.begin(), members.end());
  return Subgroup{&g, std::move(members)};
}

Group subgroup_group(const Subgroup& s) {
  std::vector<Permutation> elems;
  elems.reserve(s.elems.size());
  for (std::uint32_t e : s.elems) elems.push_back(s.parent->element(e));
  return Group::from_sorted_elements(s.parent->degree(), std::move(elems));
}

Subgroup center(const Group& g) {
  std::vector<std::uint32_t> out;
  for (std::uint32_t x = 0; x < g.order(); ++x) {
    bool central = true;
    for (std::uint32_t gen : g.generator_ids())
      if (g.mul(x, gen) != g.mul(gen, x)) {
        central = false;
        break;
      }
    if (central) out.push_back(x);
  }
  return Subgroup{&g, std::move(out)};
}

Subgroup centralizer(const Group& g, const Subgroup& s) {
  const auto sgens = s.generator_ids();
  std::vector<std::uint32_t> out;
  for (std::uint32_t x = 0; x < g.order(); ++x) {
    bool ok = true;
    for (std::uint32_t t : sgens)
      if (g.mul(x, t) != g.mul(t, x)) {
        ok = false;
        break;
      }
    if (ok) out.push_back(x);
  }
  return Subgroup{&g, std::move(out)};
}

Subgroup normalizer(const Group& g, const Subgroup& s) {
  const auto sgens = s.generator_ids();
  std::vector<std::uint32_t> out;
  for (std::uint32_t x = 0; x < g.order(); ++x) {
    bool ok = true;
    for (std::uint32_t t : sgens)
      if (!s.contains(g.conj(t, x))) {
        ok = false;
        break;
      }
    if (ok) out.push_back(x);
  }
  return Subgroup{&g, std::move(out)};
}

Subgroup section_centralizer(const Group& g, const Subgroup& h, const Subgroup& k) {
  std::vector<std::uint32_t> out;
  for (std::uint32_t x = 0; x < g.order(); ++x) {
    bool ok = true;
    for (std::uint32_t hh : h.elems)
      if (!k.contains(g.commutator(hh, x))) {
        ok = false;
        break;
      }
    if (ok) out.push_back(x);
  }
  return Subgroup{&g, std::move(out)};
}

namespace {

// Smallest subgroup containing seeds and closed under conjugation by amb_gens.
Subgroup normal_closure_impl(const Group& g, std::vector<std::uint32_t> seeds,
                             const std::vector<std::uint32_t>& amb_gens) {
  Subgroup cur = generated_subgroup(g, seeds);
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<std::uint32_t> extra;
    for (std::uint32_t s : cur.generator_ids())
      for (std::uint32_t a : amb_gens) {
        std::uint32_t c = g.conj(s, a);
        if (!cur.contains(c)) extra.push_back(c);
      }
    if (!extra.empty()) {
      std::vector<std::uint32_t> gens = cur.generator_ids();
      gens.insert(gens.end(), extra.begin(), extra.end());
      cur = generated_subgroup(g, gens);
      grew = true;
    }
  }
  return cur;
}

}  // namespace

Subgroup derived_subgroup(const Group& g) {
  return derived_subgroup(g, whole_group(g));
}

Subgroup derived_subgroup(const Group& g, const Subgroup& s) {
  const auto sgens = s.generator_ids();
  std::vector<std::uint32_t> comms;
  for (std::uint32_t a : sgens)
    for (std::uint32_t b : sgens) comms.push_back(g.commutator(a, b));
  return normal_closure_impl(g, std::move(comms), sgens);
}

bool is_abelian(const Group& g) {
  for (std::uint32_t a : g.generator_ids())
    for (std::uint32_t b : g.generator_ids())
      if (g.mul(a, b) != g.mul(b, a)) return false;
  return true;
}

bool GroupHom::is_homomorphism() const {
  if (!source || !target || map.size() != source->order()) return false;
  for (std::uint32_t x = 0; x < source->order(); ++x)
    for (std::uint32_t y = 0; y < source->order(); ++y)
      if (map[source->mul(x, y)] != target->mul(map[x], map[y])) return false;
  return true;
}

QuotientResult quotient(const Group& g, const Subgroup& n, const Limits& limits) {
  for (std::uint32_t gen : g.generator_ids())
    for (std::uint32_t x : n.generator_ids())
      if (!n.contains(g.conj(x, gen)))
        throw NotNormalError("quotient by a non-normal subgroup");

  const std::uint32_t num_cosets = static_cast<std::uint32_t>(g.order() / n.order());
  std::vector<std::uint32_t> coset_of(g.order(), UINT32_MAX);
  std::vector<std::uint32_t> rep;
  rep.reserve(num_cosets);
  for (std::uint32_t x = 0; x < g.order(); ++x) {
    if (coset_of[x] != UINT32_MAX) continue;
    std::uint32_t cid = static_cast<std::uint32_t>(rep.size());
    rep.push_back(x);
    for (std::uint32_t m : n.elems) coset_of[g.mul(m, x)] = cid;
  }

  auto action_perm = [&](std::uint32_t x) {
    std::vector<std::uint16_t> img(num_cosets);
    for (std::uint32_t c = 0; c < num_cosets; ++c)
      img[c] = static_cast<std::uint16_t>(coset_of[g.mul(rep[c], x)]);
    return Permutation(std::move(img));
  };

  std::vector<Permutation> qgens;
  for (std::uint32_t gen : g.generator_ids()) qgens.push_back(action_perm(gen));
  QuotientResult out{Group::generate(num_cosets, std::move(qgens), limits), {}};
  out.proj.resize(g.order());
  for (std::uint32_t x = 0; x < g.order(); ++x)
    out.proj[x] = out.group.index_of(action_perm(x));
  return out;
}

std::vector<std::vector<std::uint32_t>> conjugacy_classes(const Group& g) {
  std::vector<std::vector<std::uint32_t>> classes;
  std::vector<bool> seen(g.order(), false);
  for (std::uint32_t x = 0; x < g.order(); ++x) {
    if (seen[x]) continue;
    std::vector<std::uint32_t> cls{x};
    seen[x] = true;
    std::size_t head = 0;
    while (head < cls.size()) {
      std::uint32_t y = cls[head++];
      for (std::uint32_t gen : g.generator_ids()) {
        std::uint32_t z = g.conj(y, gen);
        if (!seen[z]) {
          seen[z] = true;
          cls.push_back(z);
        }
      }
    }
    std::sort(cls.begin(), cls.end());
    classes.push_back(std::move(cls));
  }
  return classes;
}

Group cyclic_group(unsigned n) {
  if (n == 0) throw ParseError("cyclic group order must be positive");
  if (n == 1) return Group::generate(1, {});
  std::vector<std::uint16_t> img(n);
  for (unsigned i = 0; i < n; ++i) img[i] = static_cast<std::uint16_t>((i + 1) % n);
  return Group::generate(n, {Permutation(std::move(img))});
}

Group dihedral_group(unsigned order) {
  if (order < 6 || order % 2 != 0)
    throw ParseError("dihedral constructor expects even order >= 6");
  unsigned n = order / 2;
  std::vector<std::uint16_t> rot(n), refl(n);
  for (unsigned i = 0; i < n; ++i) {
    rot[i] = static_cast<std::uint16_t>((i + 1) % n);
    refl[i] = static_cast<std::uint16_t>((n - i) % n);
  }
  return Group::generate(n, {Permutation(std::move(rot)), Permutation(std::move(refl))});
}

Group symmetric_group(unsigned n) {
  if (n == 0) throw ParseError("symmetric group degree must be positive");
  if (n == 1) return Group::generate(1, {});
  std::vector<Permutation> gens;
  gens.push_back(Permutation::from_cycles(n, {{0, 1}}));
  if (n > 2) {
    std::vector<std::uint16_t> cyc(n);
    std::iota(cyc.begin(), cyc.end(), 0);
    gens.push_back(Permutation::from_cycles(n, {cyc}));
  }
  return Group::generate(n, std::move(gens));
}

Group alternating_group(unsigned n) {
  if (n == 0) throw ParseError("alternating group degree must be positive");
  if (n < 3) return Group::generate(n, {});
  std::vector<Permutation> gens;
  gens.push_back(Permutation::from_cycles(n, {{0, 1, 2}}));
  if (n > 3) {
    std::vector<std::uint16_t> cyc;
    if (n % 2 == 1) {
      cyc.resize(n);
      std::iota(cyc.begin(), cyc.end(), 0);
    } else {
      cyc.resize(n - 1);
      std::iota(cyc.begin(), cyc.end(), 1);
    }
    gens.push_back(Permutation::from_cycles(n, {cyc}));
  }
  return Group::generate(n, std::move(gens));
}

namespace {

// Quaternion units 1,-1,i,-i,j,-j,k,-k as (sign, axis), axis 0=e,1=i,2=j,3=k.
unsigned quat_index(int sign, unsigned axis) { return axis * 2 + (sign < 0 ? 1 : 0); }

std::pair<int, unsigned> quat_mul(int s1, unsigned a1, int s2, unsigned a2) {
  static constexpr int sign_tab[4][4] = {
      {1, 1, 1, 1}, {1, -1, 1, -1}, {1, -1, -1, 1}, {1, 1, -1, -1}};
  static constexpr unsigned axis_tab[4][4] = {
      {0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
  return {s1 * s2 * sign_tab[a1][a2], axis_tab[a1][a2]};
}

}  // namespace

Group quaternion8() {
  auto right_mult = [&](int s, unsigned a) {
    std::vector<std::uint16_t> img(8);
    for (unsigned ax = 0; ax < 4; ++ax)
      for (int sg : {1, -1}) {
        auto [rs, ra] = quat_mul(sg, ax, s, a);
        img[quat_index(sg, ax)] = static_cast<std::uint16_t>(quat_index(rs, ra));
      }
    return Permutation(std::move(img));
  };
  return Group::generate(8, {right_mult(1, 1), right_mult(1, 2)});
}

Group sl2(unsigned p, const Limits& limits) {
  if (p < 2) throw ParseError("sl2 expects a prime p >= 2");
  for (unsigned d = 2; d * d <= p; ++d)
    if (p % d == 0) throw ParseError("sl2 expects a prime modulus");
  const unsigned npts = p * p - 1;
  if (npts > 65535) throw CapExceeded("sl2 degree too large");
  auto point = [&](unsigned x, unsigned y) { return x * p + y - 1; };
  auto matrix_perm = [&](unsigned a, unsigned b, unsigned c, unsigned d) {
    std::vector<std::uint16_t> img(npts);
    for (unsigned x = 0; x < p; ++x)
      for (unsigned y = 0; y < p; ++y) {
        if (x == 0 && y == 0) continue;
        unsigned nx = (a * x + b * y) % p;
        unsigned ny = (c * x + d * y) % p;
        img[point(x, y)] = static_cast<std::uint16_t>(point(nx, ny));
      }
    return Permutation(std::move(img));
  };
  // T = [[1,1],[0,1]], S = [[0,-1],[1,0]] generate SL(2,p).
  return Group::generate(npts, {matrix_perm(1, 1, 0, 1), matrix_perm(0, p - 1, 1, 0)},
                         limits);
}

Group direct_product(const Group& a, const Group& b, const Limits& limits) {
  const unsigned da = a.degree(), db = b.degree();
  std::vector<Permutation> gens;
  for (const auto& g : a.generators()) {
    std::vector<std::uint16_t> img(da + db);
    for (unsigned i = 0; i < da; ++i) img[i] = g[i];
    for (unsigned i = 0; i < db; ++i) img[da + i] = static_cast<std::uint16_t>(da + i);
    gens.push_back(Permutation(std::move(img)));
  }
  for (const auto& g : b.generators()) {
    std::vector<std::uint16_t> img(da + db);
    for (unsigned i = 0; i < da; ++i) img[i] = static_cast<std::uint16_t>(i);
    for (unsigned i = 0; i < db; ++i) img[da + i] = static_cast<std::uint16_t>(da + g[i]);
    gens.push_back(Permutation(std::move(img)));
  }
  if (a.order() * b.order() > limits.element_cap)
    throw CapExceeded("direct product exceeds element cap");
  return Group::generate(da + db, std::move(gens), limits);
}

SemidirectAction power_action(const Group& n, std::uint64_t k, unsigned h_generators) {
  std::vector<std::uint32_t> table(n.order());
  for (std::uint32_t x = 0; x < n.order(); ++x) {
    std::uint64_t e = k % n.element_order(x);
    std::uint32_t y = n.identity_id();
    for (std::uint64_t i = 0; i < e; ++i) y = n.mul(y, x);
    table[x] = y;
  }
  SemidirectAction act;
  for (unsigned i = 0; i < h_generators; ++i) act.gen_images.push_back(table);
  return act;
}

Group semidirect_product(const Group& n, const Group& h, const SemidirectAction& action,
                         const Limits& limits) {
  if (action.gen_images.size() != h.generator_ids().size())
    throw BadActionError("action table count does not match the complement's generators");
  const std::uint64_t N = n.order(), H = h.order();
  if (N * H > limits.element_cap) throw CapExceeded("semidirect product exceeds element cap");

  auto check_automorphism = [&](const std::vector<std::uint32_t>& t) {
    if (t.size() != N) throw BadActionError("automorphism table has wrong size");
    std::vector<bool> hit(N, false);
    for (std::uint32_t v : t) {
      if (v >= N || hit[v]) throw BadActionError("action table is not a bijection");
      hit[v] = true;
    }
    if (t[n.identity_id()] != n.identity_id())
      throw BadActionError("action does not fix the identity");
    for (std::uint32_t x = 0; x < N; ++x)
      for (std::uint32_t y = 0; y < N; ++y)
        if (t[n.mul(x, y)] != n.mul(t[x], t[y]))
          throw BadActionError("action table is not an automorphism");
  };
  for (const auto& t : action.gen_images) check_automorphism(t);

  // Extend generator images to phi : H -> Aut(N) with phi(h1 h2) = phi(h1) o phi(h2).
  std::vector<std::vector<std::uint32_t>> phi(H);
  std::vector<bool> known(H, false);
  std::vector<std::uint32_t> ident(N);
  std::iota(ident.begin(), ident.end(), 0);
  phi[h.identity_id()] = ident;
  known[h.identity_id()] = true;
  std::vector<std::uint32_t> queue{h.identity_id()};
  std::size_t head = 0;
  const auto& hgens = h.generator_ids();
  while (head < queue.size()) {
    std::uint32_t cur = queue[head++];
    for (std::size_t gi = 0; gi < hgens.size(); ++gi) {
      std::uint32_t nxt = h.mul(cur, hgens[gi]);
      std::vector<std::uint32_t> comp(N);
      for (std::uint32_t x = 0; x < N; ++x) comp[x] = phi[cur][action.gen_images[gi][x]];
      if (known[nxt]) {
        if (phi[nxt] != comp)
          throw BadActionError("action does not extend to a homomorphism on the complement");
      } else {
        phi[nxt] = std::move(comp);
        known[nxt] = true;
        queue.push_back(nxt);
      }
    }
  }

  // Regular representation on pairs (n, h); (n1,h1)(n2,h2) = (n1 phi(h1)(n2), h1 h2).
  const unsigned deg = static_cast<unsigned>(N * H);
  if (deg > 65535) throw CapExceeded("semidirect product degree too large");
  auto pt = [&](std::uint32_t ni, std::uint32_t hi) {
    return static_cast<std::uint16_t>(ni * H + hi);
  };
  auto right_mult = [&](std::uint32_t n2, std::uint32_t h2) {
    std::vector<std::uint16_t> img(deg);
    for (std::uint32_t ni = 0; ni < N; ++ni)
      for (std::uint32_t hi = 0; hi < H; ++hi)
        img[pt(ni, hi)] = pt(n.mul(ni, phi[hi][n2]), h.mul(hi, h2));
    return Permutation(std::move(img));
  };
  std::vector<Permutation> gens;
  for (std::uint32_t ng : n.generator_ids()) gens.push_back(right_mult(ng, h.identity_id()));
  for (std::uint32_t hg : hgens) gens.push_back(right_mult(n.identity_id(), hg));
  Group result = Group::generate(deg, std::move(gens), limits);
  if (result.order() != N * H)
    throw BadActionError("semidirect product closure has unexpected order");
  return result;
}

Group wreath_regular(const Group& a, const Group& b, const Limits& limits) {
  const std::uint64_t copies = b.order();
  // |A wr B| = |A|^|B| * |B|; guard before materializing anything.
  std::uint64_t total = copies;
  for (std::uint64_t i = 0; i < copies; ++i) {
    if (total > limits.element_cap / std::max<std::uint64_t>(1, a.order()) &&
        a.order() > 1)
      throw CapExceeded("wreath product exceeds element cap");
    total *= a.order();
  }
  if (total > limits.element_cap) throw CapExceeded("wreath product exceeds element cap");
  const unsigned da = a.degree();
  const unsigned deg = static_cast<unsigned>(da * copies);
  if (deg > 65535) throw CapExceeded("wreath product degree too large");

  std::vector<Permutation> gens;
  for (const auto& g : a.generators()) {
    std::vector<std::uint16_t> img(deg);
    std::iota(img.begin(), img.end(), 0);
    for (unsigned i = 0; i < da; ++i) img[i] = g[i];
    gens.push_back(Permutation(std::move(img)));
  }
  for (std::uint32_t bg : b.generator_ids()) {
    std::vector<std::uint16_t> img(deg);
    for (std::uint32_t c = 0; c < copies; ++c) {
      std::uint32_t dst = b.mul(c, bg);
      for (unsigned i = 0; i < da; ++i)
        img[c * da + i] = static_cast<std::uint16_t>(dst * da + i);
    }
    gens.push_back(Permutation(std::move(img)));
  }
  return Group::generate(deg, std::move(gens), limits);
}

}  // namespace sigmalat
