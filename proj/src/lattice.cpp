#include "sigmalat/lattice.hpp"

#include <algorithm>
#include <numeric>

namespace sigmalat {

std::uint64_t p_part(std::uint64_t n, std::uint64_t p) {
  std::uint64_t q = 1;
  while (n % p == 0) {
    n /= p;
    q *= p;
  }
  return q;
}

Lattice Lattice::enumerate(const Group& g, const Limits& limits) {
  if (g.order() > limits.lattice_order_cap)
    throw CapExceeded("group order " + std::to_string(g.order()) +
                      " over the lattice guard " + std::to_string(limits.lattice_order_cap));

  struct Found {
    std::vector<std::uint32_t> elems;
    std::vector<std::uint32_t> gens;
  };
  std::vector<Found> found;
  std::map<std::vector<std::uint32_t>, std::uint32_t> seen;
  auto record = [&](std::vector<std::uint32_t> elems, std::vector<std::uint32_t> gens)
      -> std::uint32_t {
    auto it = seen.find(elems);
    if (it != seen.end()) return it->second;
    std::uint32_t id = static_cast<std::uint32_t>(found.size());
    if (found.size() + 1 > limits.subgroup_cap)
      throw CapExceeded("subgroup count exceeds cap " + std::to_string(limits.subgroup_cap));
    seen.emplace(elems, id);
    found.push_back({std::move(elems), std::move(gens)});
    return id;
  };

  record({g.identity_id()}, {});
  std::vector<std::uint32_t> elem_cyc(g.order());
  elem_cyc[g.identity_id()] = 0;
  std::vector<std::uint32_t> cyclics;  // discovery ids of cyclic subgroups
  cyclics.push_back(0);
  for (std::uint32_t x = 1; x < g.order(); ++x) {
    Subgroup c = generated_subgroup(g, {x});
    std::uint32_t before = static_cast<std::uint32_t>(found.size());
    std::uint32_t id = record(c.elems, {x});
    elem_cyc[x] = id;
    if (id == before) cyclics.push_back(id);
  }

  // Close under join with cyclic subgroups; every subgroup is reached since
  // any <x1..xk> arises by repeatedly joining a cyclic onto a smaller member.
  // found grows while iterating, so snapshot the row before record() calls.
  for (std::size_t a = 0; a < found.size(); ++a) {
    const std::vector<std::uint32_t> elems_a = found[a].elems;
    const std::vector<std::uint32_t> gens_a = found[a].gens;
    for (std::size_t ci = 1; ci < cyclics.size(); ++ci) {
      std::uint32_t x = found[cyclics[ci]].gens[0];
      if (std::binary_search(elems_a.begin(), elems_a.end(), x)) continue;
      std::vector<std::uint32_t> gens = gens_a;
      gens.push_back(x);
      Subgroup j = generated_subgroup(g, gens);
      record(std::move(j.elems), std::move(gens));
    }
  }

  Lattice lat;
  lat.g_ = &g;
  lat.subs_.reserve(found.size());
  for (auto& f : found) lat.subs_.push_back(Subgroup{&g, std::move(f.elems)});
  std::sort(lat.subs_.begin(), lat.subs_.end());
  for (std::uint32_t i = 0; i < lat.subs_.size(); ++i)
    lat.index_.emplace(lat.subs_[i].elems, i);

  const std::uint32_t s = lat.size();
  lat.below_.assign(s, Bitset(s));
  lat.above_.assign(s, Bitset(s));
  for (std::uint32_t i = 0; i < s; ++i) {
    lat.below_[i].set(i);
    lat.above_[i].set(i);
  }
  for (std::uint32_t i = 0; i < s; ++i) {
    for (std::uint32_t j = i + 1; j < s; ++j) {
      if (lat.subs_[j].order() % lat.subs_[i].order() != 0) continue;
      if (lat.subs_[i].order() == lat.subs_[j].order()) continue;
      if (lat.subs_[j].contains_all(lat.subs_[i])) {
        lat.below_[j].set(i);
        lat.above_[i].set(j);
      }
    }
  }

  lat.sub_of_elem_.resize(g.order());
  for (std::uint32_t x = 0; x < g.order(); ++x) {
    Subgroup c = generated_subgroup(g, {x});
    lat.sub_of_elem_[x] = lat.index_.at(c.elems);
  }
  {
    std::vector<bool> is_cyc(s, false);
    for (std::uint32_t x = 0; x < g.order(); ++x) is_cyc[lat.sub_of_elem_[x]] = true;
    for (std::uint32_t i = 0; i < s; ++i)
      if (is_cyc[i]) lat.cyclic_ids_.push_back(i);
  }

  lat.conj_tab_.assign(s, {});
  lat.normal_memo_.assign(static_cast<std::size_t>(s) * s, -1);
  lat.core_memo_.assign(static_cast<std::size_t>(s) * s, UINT32_MAX);
  return lat;
}

std::uint32_t Lattice::index_of(const Subgroup& s) const {
  return index_of_elems(s.elems);
}

std::uint32_t Lattice::index_of_elems(const std::vector<std::uint32_t>& sorted_elems) const {
  auto it = index_.find(sorted_elems);
  if (it == index_.end()) throw Error("subgroup not present in lattice");
  return it->second;
}

std::uint32_t Lattice::join(std::uint32_t a, std::uint32_t b) const {
  std::size_t r = above_[a].first_common(above_[b]);
  return static_cast<std::uint32_t>(r);
}

std::uint32_t Lattice::meet(std::uint32_t a, std::uint32_t b) const {
  std::size_t r = below_[a].last_common(below_[b]);
  return static_cast<std::uint32_t>(r);
}

std::vector<std::uint32_t> Lattice::interval(std::uint32_t a, std::uint32_t b) const {
  std::vector<std::uint32_t> out;
  const Bitset& up = above_[a];
  const Bitset& down = below_[b];
  for (std::size_t i = up.find_first(); i != Bitset::npos; i = up.find_next(i))
    if (down.test(i)) out.push_back(static_cast<std::uint32_t>(i));
  return out;
}

bool Lattice::covers(std::uint32_t bottom, std::uint32_t top) const {
  if (bottom == top || !leq(bottom, top)) return false;
  for (std::size_t i = above_[bottom].find_first(); i != Bitset::npos;
       i = above_[bottom].find_next(i)) {
    if (i == bottom || i == top) continue;
    if (below_[top].test(i)) return false;
  }
  return true;
}

std::uint32_t Lattice::conjugate_id(std::uint32_t id, std::uint32_t g) const {
  auto& row = conj_tab_[id];
  if (row.empty()) row.assign(g_->order(), UINT32_MAX);
  if (row[g] != UINT32_MAX) return row[g];
  std::vector<std::uint32_t> c;
  c.reserve(subs_[id].elems.size());
  for (std::uint32_t e : subs_[id].elems) c.push_back(g_->conj(e, g));
  std::sort(c.begin(), c.end());
  row[g] = index_.at(c);
  return row[g];
}

bool Lattice::normal_in(std::uint32_t a, std::uint32_t b) const {
  std::int8_t& memo = normal_memo_[static_cast<std::size_t>(a) * size() + b];
  if (memo >= 0) return memo == 1;
  bool ok = true;
  for (std::uint32_t x : subs_[b].elems)
    if (conjugate_id(a, x) != a) {
      ok = false;
      break;
    }
  memo = ok ? 1 : 0;
  return ok;
}

std::uint32_t Lattice::core_in(std::uint32_t a, std::uint32_t b) const {
  std::uint32_t& memo = core_memo_[static_cast<std::size_t>(a) * size() + b];
  if (memo != UINT32_MAX) return memo;
  std::uint32_t c = a;
  for (std::uint32_t x : subs_[b].elems) {
    std::uint32_t cx = conjugate_id(a, x);
    if (cx != a) c = meet(c, cx);
    if (c == trivial_id()) break;
  }
  memo = c;
  return c;
}

std::uint32_t Lattice::normal_closure_in(std::uint32_t a, std::uint32_t b) const {
  std::uint32_t c = a;
  for (std::uint32_t x : subs_[b].elems) {
    std::uint32_t cx = conjugate_id(a, x);
    if (cx != a) c = join(c, cx);
    if (c == b) break;
  }
  // c now contains all conjugates of a under single elements of b; since
  // conjugation permutes the lattice and fixes c's construction set, c is
  // already normal in b.
  return c;
}

bool Lattice::permutes(std::uint32_t a, std::uint32_t b) const {
  return order_of(join(a, b)) * order_of(meet(a, b)) == order_of(a) * order_of(b);
}

std::vector<std::uint32_t> Lattice::normal_ids() const {
  std::vector<std::uint32_t> out;
  for (std::uint32_t i = 0; i < size(); ++i)
    if (normal_in(i, full_id())) out.push_back(i);
  return out;
}

std::vector<std::uint32_t> Lattice::maximal_ids() const {
  std::vector<std::uint32_t> out;
  for (std::uint32_t i = 0; i + 1 < size(); ++i)
    if (above_[i].count() == 2) out.push_back(i);
  return out;
}

std::uint32_t Lattice::frattini_id() const {
  auto maxes = maximal_ids();
  std::uint32_t f = full_id();
  for (std::uint32_t m : maxes) f = meet(f, m);
  return f;
}

std::vector<std::uint32_t> Lattice::subgroups_of_order(std::uint64_t n) const {
  std::vector<std::uint32_t> out;
  for (std::uint32_t i = 0; i < size(); ++i)
    if (order_of(i) == n) out.push_back(i);
  return out;
}

std::vector<std::uint32_t> Lattice::sylow_ids(std::uint64_t p) const {
  return subgroups_of_order(p_part(group().order(), p));
}

bool is_normal(const Subgroup& a, const Subgroup& b) {
  if (!b.contains_all(a)) throw NotContainedError("is_normal: subgroup not contained in ambient");
  const Group& g = *a.parent;
  const auto agens = a.generator_ids();
  for (std::uint32_t x : b.elems)
    for (std::uint32_t t : agens)
      if (!a.contains(g.conj(t, x))) return false;
  return true;
}

Subgroup core(const Subgroup& a, const Subgroup& ambient) {
  if (!ambient.contains_all(a))
    throw NotContainedError("core: subgroup not contained in ambient");
  const Group& g = *a.parent;
  // One pass of intersections over all conjugates is already the core.
  std::vector<std::uint32_t> cur = a.elems;
  std::vector<std::uint32_t> scratch;
  for (std::uint32_t x : ambient.elems) {
    std::vector<std::uint32_t> conj;
    conj.reserve(a.elems.size());
    for (std::uint32_t e : a.elems) conj.push_back(g.conj(e, x));
    std::sort(conj.begin(), conj.end());
    scratch.clear();
    std::set_intersection(cur.begin(), cur.end(), conj.begin(), conj.end(),
                          std::back_inserter(scratch));
    cur.swap(scratch);
    if (cur.size() == 1) break;
  }
  return Subgroup{&g, std::move(cur)};
}

Subgroup normal_closure(const Subgroup& a, const Subgroup& ambient) {
  if (!ambient.contains_all(a))
    throw NotContainedError("normal_closure: subgroup not contained in ambient");
  const Group& g = *a.parent;
  const auto ambient_gens = ambient.generator_ids();
  std::vector<std::uint32_t> gens = a.generator_ids();
  Subgroup cur = generated_subgroup(g, gens);
  bool grew = true;
  while (grew) {
    grew = false;
    for (std::uint32_t t : cur.generator_ids())
      for (std::uint32_t x : ambient_gens) {
        std::uint32_t c = g.conj(t, x);
        if (!cur.contains(c)) {
          gens.push_back(c);
          grew = true;
        }
      }
    if (grew) cur = generated_subgroup(g, gens);
  }
  return cur;
}

std::vector<Subgroup> normal_subgroups(const Group& g) {
  auto classes = conjugacy_classes(g);
  std::vector<Subgroup> atoms;
  for (const auto& cls : classes) {
    Subgroup n = generated_subgroup(g, cls);
    if (std::find(atoms.begin(), atoms.end(), n) == atoms.end()) atoms.push_back(n);
  }
  // Join closure; joins of conjugation-closed subgroups stay normal.
  std::vector<Subgroup> out{trivial_subgroup(g)};
  auto add = [&](const Subgroup& s) {
    if (std::find(out.begin(), out.end(), s) == out.end()) {
      out.push_back(s);
      return true;
    }
    return false;
  };
  for (const auto& a : atoms) add(a);
  for (std::size_t i = 0; i < out.size(); ++i)
    for (const auto& a : atoms) {
      if (out[i].contains_all(a)) continue;
      std::vector<std::uint32_t> gens = out[i].generator_ids();
      auto ag = a.generator_ids();
      gens.insert(gens.end(), ag.begin(), ag.end());
      add(generated_subgroup(g, gens));
    }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Subgroup> minimal_normal_subgroups(const Group& g) {
  auto normals = normal_subgroups(g);
  std::vector<Subgroup> out;
  for (const auto& n : normals) {
    if (n.is_trivial()) continue;
    bool minimal = true;
    for (const auto& m : normals) {
      if (m.is_trivial() || m == n) continue;
      if (m.order() < n.order() && n.contains_all(m)) {
        minimal = false;
        break;
      }
    }
    if (minimal) out.push_back(n);
  }
  return out;
}

std::vector<Subgroup> maximal_subgroups(const Lattice& lat) {
  std::vector<Subgroup> out;
  for (std::uint32_t id : lat.maximal_ids()) out.push_back(lat.at(id));
  return out;
}

Subgroup frattini(const Lattice& lat) { return lat.at(lat.frattini_id()); }

std::vector<Subgroup> sylow(const Lattice& lat, std::uint64_t p) {
  std::vector<Subgroup> out;
  for (std::uint32_t id : lat.sylow_ids(p)) out.push_back(lat.at(id));
  return out;
}

ProductSet product_sets(const Subgroup& a, const Subgroup& b) {
  const Group& g = *a.parent;
  std::vector<bool> ab(g.order(), false), ba(g.order(), false);
  for (std::uint32_t x : a.elems)
    for (std::uint32_t y : b.elems) {
      ab[g.mul(x, y)] = true;
      ba[g.mul(y, x)] = true;
    }
  ProductSet out;
  bool equal = true;
  for (std::uint32_t e = 0; e < g.order(); ++e) {
    if (ab[e]) out.elems.push_back(e);
    if (ab[e] != ba[e]) equal = false;
  }
  out.is_subgroup = equal;
  return out;
}

}  // namespace sigmalat
