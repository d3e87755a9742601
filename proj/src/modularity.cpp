#include "sigmalat/modularity.hpp"

#include <algorithm>

namespace sigmalat {

ModularView::ModularView(const Lattice& lat) : lat_(&lat) {
  pair_memo_.assign(static_cast<std::size_t>(lat.size()) * lat.size(), -1);
  direct_memo_.assign(static_cast<std::size_t>(lat.size()) * lat.size(), -1);
}

bool ModularView::modular_direct(std::uint32_t m, std::uint32_t ambient,
                                 ModularWitness* witness) const {
  std::int8_t& memo = direct_memo_[static_cast<std::size_t>(m) * lat_->size() + ambient];
  if (memo >= 0 && !witness) return memo == 1;
  const Bitset& down = lat_->ideal(ambient);
  std::vector<std::uint32_t> members;
  for (std::size_t i = down.find_first(); i != Bitset::npos; i = down.find_next(i))
    members.push_back(static_cast<std::uint32_t>(i));
  // (i) <X, M ^ Z> = <X, M> ^ Z whenever X <= Z
  for (std::uint32_t z : members) {
    for (std::uint32_t x : members) {
      if (!lat_->leq(x, z)) continue;
      if (lat_->join(x, lat_->meet(m, z)) != lat_->meet(lat_->join(x, m), z)) {
        if (witness) *witness = {x, z, false};
        memo = 0;
        return false;
      }
    }
    // (ii) <M, Y ^ Z> = <M, Y> ^ Z whenever M <= Z
    if (lat_->leq(m, z)) {
      for (std::uint32_t y : members) {
        if (lat_->join(m, lat_->meet(y, z)) != lat_->meet(lat_->join(m, y), z)) {
          if (witness) *witness = {y, z, false};
          memo = 0;
          return false;
        }
      }
    }
  }
  memo = 1;
  return true;
}

bool ModularView::modular_reduced(std::uint32_t m, std::uint32_t ambient,
                                  ModularWitness* witness) const {
  const Group& g = lat_->group();
  const Subgroup& amb = lat_->at(ambient);
  for (std::uint32_t x : amb.elems) {
    if (prime_factors(g.element_order(x)).size() != 1) continue;  // prime power only
    std::uint32_t j = lat_->join(m, lat_->cyclic_of(x));
    if (!modular_direct(m, j)) {
      if (witness) *witness = {x, UINT32_MAX, true};
      return false;
    }
  }
  return true;
}

bool ModularView::modular_in(std::uint32_t m, std::uint32_t ambient, ModularStrategy s,
                             ModularWitness* witness) const {
  return s == ModularStrategy::kDirect ? modular_direct(m, ambient, witness)
                                       : modular_reduced(m, ambient, witness);
}

bool ModularView::modular_pair(std::uint32_t m, std::uint32_t ambient) const {
  std::int8_t& memo = pair_memo_[static_cast<std::size_t>(m) * lat_->size() + ambient];
  if (memo >= 0) return memo == 1;
  bool ok = modular_reduced(m, ambient);
  memo = ok ? 1 : 0;
  return ok;
}

bool ModularView::quasinormal_full(std::uint32_t a, std::uint32_t ambient,
                                   std::uint32_t* witness) const {
  const Bitset& down = lat_->ideal(ambient);
  for (std::size_t i = down.find_first(); i != Bitset::npos; i = down.find_next(i)) {
    if (!lat_->permutes(a, static_cast<std::uint32_t>(i))) {
      if (witness) *witness = static_cast<std::uint32_t>(i);
      return false;
    }
  }
  return true;
}

bool ModularView::quasinormal_cyclic(std::uint32_t a, std::uint32_t ambient,
                                     std::uint32_t* witness) const {
  for (std::uint32_t x : lat_->at(ambient).elems) {
    std::uint32_t c = lat_->cyclic_of(x);
    if (!lat_->permutes(a, c)) {
      if (witness) *witness = c;
      return false;
    }
  }
  return true;
}

void ModularView::ensure_submod_reach() const {
  if (!submod_reach_.empty()) return;
  const std::uint32_t s = lat_->size();
  submod_reach_.assign(s, Bitset(s));
  for (std::uint32_t i = s; i-- > 0;) {
    submod_reach_[i].set(i);
    const Bitset& ups = lat_->filter(i);
    for (std::size_t j = ups.find_next(i); j != Bitset::npos; j = ups.find_next(j)) {
      if (submod_reach_[i].test(j)) continue;
      if (modular_pair(i, static_cast<std::uint32_t>(j)))
        submod_reach_[i] |= submod_reach_[j];
    }
  }
}

bool ModularView::submodular(std::uint32_t a, std::uint32_t ambient) const {
  ensure_submod_reach();
  return submod_reach_[a].test(ambient);
}

bool ModularView::dedekind(std::uint32_t ambient) const {
  const Bitset& down = lat_->ideal(ambient);
  for (std::size_t i = down.find_first(); i != Bitset::npos; i = down.find_next(i))
    if (!lat_->normal_in(static_cast<std::uint32_t>(i), ambient)) return false;
  return true;
}

bool ModularView::iwasawa(std::uint32_t ambient) const {
  const Bitset& down = lat_->ideal(ambient);
  for (std::size_t i = down.find_first(); i != Bitset::npos; i = down.find_next(i))
    if (!quasinormal_full(static_cast<std::uint32_t>(i), ambient)) return false;
  return true;
}

bool ModularView::m_group(std::uint32_t ambient) const {
  const Bitset& down = lat_->ideal(ambient);
  for (std::size_t i = down.find_first(); i != Bitset::npos; i = down.find_next(i))
    if (!modular_pair(static_cast<std::uint32_t>(i), ambient)) return false;
  return true;
}

bool is_modular_in(const ModularView& mv, const Subgroup& m, const Subgroup& ambient,
                   ModularStrategy s, ModularWitness* witness) {
  return mv.modular_in(mv.lat().index_of(m), mv.lat().index_of(ambient), s, witness);
}

bool is_quasinormal(const ModularView& mv, const Subgroup& a, const Subgroup& ambient,
                    QuasinormalStrategy s) {
  std::uint32_t ai = mv.lat().index_of(a);
  std::uint32_t gi = mv.lat().index_of(ambient);
  return s == QuasinormalStrategy::kFull ? mv.quasinormal_full(ai, gi)
                                         : mv.quasinormal_cyclic(ai, gi);
}

bool induces_power_automorphisms(const Group& g, const std::vector<std::uint32_t>& xs,
                                 const Subgroup& d) {
  for (std::uint32_t x : xs) {
    for (std::uint32_t e : d.elems)
      if (!d.contains(g.conj(e, x)))
        throw NotNormalizedError("element does not normalize the target subgroup");
  }
  for (std::uint32_t x : xs) {
    for (std::uint32_t e : d.elems) {
      std::uint32_t c = g.conj(e, x);
      // c must be a power of e
      bool found = false;
      std::uint32_t pw = g.identity_id();
      do {
        if (pw == c) {
          found = true;
          break;
        }
        pw = g.mul(pw, e);
      } while (pw != g.identity_id());
      if (!found) return false;
    }
  }
  return true;
}

std::optional<PGroupShape> detect_p_group_shape(const Group& g,
                                                const std::vector<Subgroup>& normals) {
  auto primes = prime_factors(g.order());
  for (std::uint64_t p : primes) {
    Subgroup base = o_pi_primes(g, {p}, normals);
    if (base.is_trivial()) continue;
    // elementary abelian: every non-identity element of order p, all commuting
    bool elem_ab = true;
    for (std::uint32_t e : base.elems) {
      if (e != g.identity_id() && g.element_order(e) != p) {
        elem_ab = false;
        break;
      }
    }
    if (elem_ab) {
      for (std::uint32_t a : base.generator_ids()) {
        for (std::uint32_t b : base.generator_ids())
          if (g.mul(a, b) != g.mul(b, a)) {
            elem_ab = false;
            break;
          }
        if (!elem_ab) break;
      }
    }
    if (!elem_ab) continue;
    for (std::uint64_t q : primes) {
      if (q == p) continue;
      if (base.order() * q != g.order()) continue;
      for (std::uint32_t t = 0; t < g.order(); ++t) {
        if (g.element_order(t) != q || base.contains(t)) continue;
        bool power = true, trivial_action = true;
        for (std::uint32_t e : base.elems) {
          std::uint32_t c = g.conj(e, t);
          if (!base.contains(c)) {
            power = false;
            break;
          }
          if (c != e) trivial_action = false;
          bool found = false;
          std::uint32_t pw = g.identity_id();
          do {
            if (pw == c) {
              found = true;
              break;
            }
            pw = g.mul(pw, e);
          } while (pw != g.identity_id());
          if (!found) {
            power = false;
            break;
          }
        }
        if (power && !trivial_action)
          return PGroupShape{p, q, base, t};
      }
    }
  }
  return std::nullopt;
}

}  // namespace sigmalat
