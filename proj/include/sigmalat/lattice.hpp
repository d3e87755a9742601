#ifndef SIGMALAT_LATTICE_HPP
#define SIGMALAT_LATTICE_HPP

#include <cstdint>
#include <map>
#include <vector>

#include "sigmalat/bitset.hpp"
#include "sigmalat/group.hpp"

namespace sigmalat {

// The complete subgroup lattice of a materialized group, built as the closure
// of all cyclic subgroups under join. Subgroups are kept in canonical order
// (order, lexicographic element list), so id 0 is the trivial subgroup and the
// last id is the whole group; joins/meets resolve structurally through the
// inclusion bitmatrix. Construction is deterministic; completed lattices are
// logically immutable (the mutable members are memo tables).
class Lattice {
public:
  static Lattice enumerate(const Group& g, const Limits& limits = {});

  const Group& group() const { return *g_; }
  std::uint32_t size() const { return static_cast<std::uint32_t>(subs_.size()); }
  const Subgroup& at(std::uint32_t id) const { return subs_[id]; }
  std::uint64_t order_of(std::uint32_t id) const { return subs_[id].order(); }
  std::uint32_t trivial_id() const { return 0; }
  std::uint32_t full_id() const { return size() - 1; }

  std::uint32_t index_of(const Subgroup& s) const;                 // throws if absent
  std::uint32_t index_of_elems(const std::vector<std::uint32_t>& sorted_elems) const;

  bool leq(std::uint32_t a, std::uint32_t b) const { return above_[a].test(b); }
  const Bitset& ideal(std::uint32_t id) const { return below_[id]; }   // all subgroups <= id
  const Bitset& filter(std::uint32_t id) const { return above_[id]; }  // all subgroups >= id

  std::uint32_t join(std::uint32_t a, std::uint32_t b) const;
  std::uint32_t meet(std::uint32_t a, std::uint32_t b) const;
  std::vector<std::uint32_t> interval(std::uint32_t a, std::uint32_t b) const;

  // Hasse covers of the interval [a, full]; b covers a when nothing sits between.
  bool covers(std::uint32_t bottom, std::uint32_t top) const;

  const std::vector<std::uint32_t>& cyclic_ids() const { return cyclic_ids_; }
  std::uint32_t cyclic_of(std::uint32_t elem) const { return sub_of_elem_[elem]; }

  std::uint32_t conjugate_id(std::uint32_t id, std::uint32_t g) const;
  bool normal_in(std::uint32_t a, std::uint32_t b) const;  // requires a <= b
  std::uint32_t core_in(std::uint32_t a, std::uint32_t b) const;
  std::uint32_t normal_closure_in(std::uint32_t a, std::uint32_t b) const;

  // AB = BA, decided by |<A,B>| * |A cap B| == |A| * |B|.
  bool permutes(std::uint32_t a, std::uint32_t b) const;

  std::vector<std::uint32_t> normal_ids() const;          // normal in the whole group
  std::vector<std::uint32_t> maximal_ids() const;         // maximal subgroups of G
  std::uint32_t frattini_id() const;
  std::vector<std::uint32_t> subgroups_of_order(std::uint64_t n) const;
  std::vector<std::uint32_t> sylow_ids(std::uint64_t p) const;

private:
  const Group* g_ = nullptr;
  std::vector<Subgroup> subs_;
  std::map<std::vector<std::uint32_t>, std::uint32_t> index_;
  std::vector<Bitset> below_, above_;
  std::vector<std::uint32_t> cyclic_ids_;
  std::vector<std::uint32_t> sub_of_elem_;

  mutable std::vector<std::vector<std::uint32_t>> conj_tab_;
  mutable std::vector<std::int8_t> normal_memo_;
  mutable std::vector<std::uint32_t> core_memo_;
};

// Subgroup-level operations (usable with or without a lattice).
bool is_normal(const Subgroup& a, const Subgroup& b);  // throws NotContained if a is not inside b
Subgroup core(const Subgroup& a, const Subgroup& ambient);
Subgroup normal_closure(const Subgroup& a, const Subgroup& ambient);

// All normal subgroups of g: join closure of the normal closures of the
// conjugacy classes. Works without the full lattice.
std::vector<Subgroup> normal_subgroups(const Group& g);
std::vector<Subgroup> minimal_normal_subgroups(const Group& g);

std::vector<Subgroup> maximal_subgroups(const Lattice& lat);
Subgroup frattini(const Lattice& lat);
std::vector<Subgroup> sylow(const Lattice& lat, std::uint64_t p);

struct ProductSet {
  std::vector<std::uint32_t> elems;  // the set AB, sorted
  bool is_subgroup = false;          // AB == BA
};
ProductSet product_sets(const Subgroup& a, const Subgroup& b);

std::uint64_t p_part(std::uint64_t n, std::uint64_t p);

}  // namespace sigmalat

#endif
