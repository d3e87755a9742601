#ifndef SIGMALAT_MODULARITY_HPP
#define SIGMALAT_MODULARITY_HPP

#include <cstdint>
#include <optional>

#include "sigmalat/sigma.hpp"

namespace sigmalat {

enum class ModularStrategy { kDirect, kReduced };
enum class QuasinormalStrategy { kFull, kCyclic };

// Witness for a failed modularity check: either a violating (x, z) pair of the
// Kurosh identities (direct) or a prime-power element whose join breaks it
// (reduced).
struct ModularWitness {
  std::uint32_t x = UINT32_MAX;  // subgroup id (direct) or element id (reduced)
  std::uint32_t z = UINT32_MAX;  // subgroup id (direct only)
  bool from_reduced = false;
};

// Modularity / quasinormality machinery over one lattice. sigma-free, so one
// view serves every partition. Memo tables make the pairwise quantifiers
// reusable across the transitivity scans.
class ModularView {
public:
  explicit ModularView(const Lattice& lat);

  const Lattice& lat() const { return *lat_; }

  // Kurosh identities quantified over the ideal of `ambient`.
  bool modular_direct(std::uint32_t m, std::uint32_t ambient,
                      ModularWitness* witness = nullptr) const;
  // Lemma-style reduction: modular in <x, M> for every prime-power-order x.
  bool modular_reduced(std::uint32_t m, std::uint32_t ambient,
                       ModularWitness* witness = nullptr) const;
  bool modular_in(std::uint32_t m, std::uint32_t ambient, ModularStrategy s,
                  ModularWitness* witness = nullptr) const;
  // Default strategy (reduced), memoized; the workhorse for chain scans.
  bool modular_pair(std::uint32_t m, std::uint32_t ambient) const;

  bool quasinormal_full(std::uint32_t a, std::uint32_t ambient,
                        std::uint32_t* witness = nullptr) const;
  bool quasinormal_cyclic(std::uint32_t a, std::uint32_t ambient,
                          std::uint32_t* witness = nullptr) const;

  // Submodular: chain of modular steps up to the ambient subgroup.
  bool submodular(std::uint32_t a, std::uint32_t ambient) const;

  bool dedekind(std::uint32_t ambient) const;   // every subgroup normal
  bool iwasawa(std::uint32_t ambient) const;    // every subgroup quasinormal
  bool m_group(std::uint32_t ambient) const;    // every subgroup modular

private:
  void ensure_submod_reach() const;

  const Lattice* lat_;
  mutable std::vector<std::int8_t> pair_memo_;      // modular_pair results
  mutable std::vector<std::int8_t> direct_memo_;    // modular_direct results
  mutable std::vector<Bitset> submod_reach_;
};

// Spec-level subgroup operations.
bool is_modular_in(const ModularView& mv, const Subgroup& m, const Subgroup& ambient,
                   ModularStrategy s, ModularWitness* witness = nullptr);
bool is_quasinormal(const ModularView& mv, const Subgroup& a, const Subgroup& ambient,
                    QuasinormalStrategy s);

// Power-automorphism check: every x in xs normalizes d and maps each element
// of d into its own cyclic subgroup. Throws NotNormalized.
bool induces_power_automorphisms(const Group& g, const std::vector<std::uint32_t>& xs,
                                 const Subgroup& d);

// Non-abelian P-group shape: elementary abelian O_p(G) complemented by an
// order-q element acting by nontrivial power maps.
struct PGroupShape {
  std::uint64_t p = 0;
  std::uint64_t q = 0;
  Subgroup base;
  std::uint32_t top = 0;  // generator of the complement
};
std::optional<PGroupShape> detect_p_group_shape(const Group& g,
                                                const std::vector<Subgroup>& normals);

}  // namespace sigmalat

#endif
