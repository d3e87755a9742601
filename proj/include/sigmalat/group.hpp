#ifndef SIGMALAT_GROUP_HPP
#define SIGMALAT_GROUP_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "sigmalat/error.hpp"
#include "sigmalat/perm.hpp"

namespace sigmalat {

// Fully materialized permutation group. Immutable after construction; the
// element list is sorted lexicographically on image arrays, which makes the
// identity element index 0 and every derived listing deterministic.
class Group {
public:
  static Group generate(unsigned degree, std::vector<Permutation> generators,
                        const Limits& limits = {});
  // Internal fast path: elements already form a sorted closed set.
  static Group from_sorted_elements(unsigned degree, std::vector<Permutation> elements);

  unsigned degree() const { return degree_; }
  std::uint64_t order() const { return elements_.size(); }
  const std::vector<Permutation>& elements() const { return elements_; }
  const Permutation& element(std::uint32_t i) const { return elements_[i]; }
  const std::vector<Permutation>& generators() const { return generators_; }
  const std::vector<std::uint32_t>& generator_ids() const { return generator_ids_; }

  std::uint32_t identity_id() const { return 0; }
  std::uint32_t index_of(const Permutation& p) const;      // throws if absent
  std::optional<std::uint32_t> find(const Permutation& p) const;

  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const;
  std::uint32_t inv(std::uint32_t a) const { return inv_table_[a]; }
  std::uint32_t conj(std::uint32_t a, std::uint32_t g) const;  // g^-1 a g
  std::uint32_t commutator(std::uint32_t a, std::uint32_t b) const;  // a^-1 b^-1 a b
  std::uint64_t element_order(std::uint32_t a) const;

  bool has_mul_table() const { return !mul_table_.empty(); }

private:
  void build_index_tables();

  unsigned degree_ = 1;
  std::vector<Permutation> generators_;
  std::vector<std::uint32_t> generator_ids_;
  std::vector<Permutation> elements_;
  std::vector<std::uint32_t> inv_table_;
  std::vector<std::uint32_t> mul_table_;  // order*order when order <= kMulTableCap
  static constexpr std::uint64_t kMulTableCap = 2048;
};

// Subgroup as a sorted set of element indices into a parent group. The parent
// must outlive the subgroup.
struct Subgroup {
  const Group* parent = nullptr;
  std::vector<std::uint32_t> elems;

  std::uint64_t order() const { return elems.size(); }
  bool contains(std::uint32_t e) const;
  bool contains_all(const Subgroup& other) const;
  bool is_trivial() const { return elems.size() == 1; }
  bool is_full() const { return parent && elems.size() == parent->order(); }

  // Greedy minimal-ish generating set, deterministic (ascending element scan).
  std::vector<std::uint32_t> generator_ids() const;
  std::vector<Permutation> generator_perms() const;
  // Canonical ordering used everywhere: (order, lexicographic element list).
  friend bool operator==(const Subgroup& a, const Subgroup& b) {
    return a.elems == b.elems;
  }
  friend bool operator<(const Subgroup& a, const Subgroup& b) {
    if (a.elems.size() != b.elems.size()) return a.elems.size() < b.elems.size();
    return a.elems < b.elems;
  }
};

Subgroup whole_group(const Group& g);
Subgroup trivial_subgroup(const Group& g);
Subgroup subgroup_from_elems(const Group& g, std::vector<std::uint32_t> elems);
// Closure of the given elements inside g.
Subgroup generated_subgroup(const Group& g, const std::vector<std::uint32_t>& gens);
// Materialize a subgroup as a Group on the same points.
Group subgroup_group(const Subgroup& s);

Subgroup center(const Group& g);
Subgroup centralizer(const Group& g, const Subgroup& s);
Subgroup normalizer(const Group& g, const Subgroup& s);
// Elements commuting with the section h/k, i.e. {g : [h,g] in k for all h}.
Subgroup section_centralizer(const Group& g, const Subgroup& h, const Subgroup& k);
Subgroup derived_subgroup(const Group& g);
Subgroup derived_subgroup(const Group& g, const Subgroup& s);
bool is_abelian(const Group& g);

// Element-wise homomorphism table between materialized groups.
struct GroupHom {
  const Group* source = nullptr;
  const Group* target = nullptr;
  std::vector<std::uint32_t> map;  // source element id -> target element id

  bool is_homomorphism() const;  // exhaustive check
};

struct QuotientResult {
  Group group;
  std::vector<std::uint32_t> proj;  // element id of g -> element id of quotient
};

// Quotient of g by a normal subgroup n, realized on the right cosets of n and
// re-canonicalized through generate(). Throws NotNormalError.
QuotientResult quotient(const Group& g, const Subgroup& n, const Limits& limits = {});

// Conjugation orbits, classes ordered by least member, members ascending.
std::vector<std::vector<std::uint32_t>> conjugacy_classes(const Group& g);

// Standard constructors.
Group cyclic_group(unsigned n);
Group dihedral_group(unsigned order);  // order = 2n, n >= 3
Group symmetric_group(unsigned n);
Group alternating_group(unsigned n);
Group quaternion8();
Group sl2(unsigned p, const Limits& limits = {});  // acts on the p^2-1 nonzero vectors
Group direct_product(const Group& a, const Group& b, const Limits& limits = {});

// Action for a semidirect product N x| H: one automorphism of N per generator
// of H, each given as a permutation of N's element indices. Validated to
// extend to a homomorphism H -> Aut(N); throws BadActionError otherwise.
struct SemidirectAction {
  std::vector<std::vector<std::uint32_t>> gen_images;
};
// Power map x -> x^k as an automorphism table of an abelian group.
SemidirectAction power_action(const Group& n, std::uint64_t k, unsigned h_generators = 1);

Group semidirect_product(const Group& n, const Group& h, const SemidirectAction& action,
                         const Limits& limits = {});
Group wreath_regular(const Group& a, const Group& b, const Limits& limits = {});

}  // namespace sigmalat

#endif
