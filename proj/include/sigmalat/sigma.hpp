#ifndef SIGMALAT_SIGMA_HPP
#define SIGMALAT_SIGMA_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "sigmalat/lattice.hpp"

namespace sigmalat {

// A class of the partition: explicit classes are indexed 0..k-1; leftover
// primes fall in one shared rest class or in per-prime singleton classes.
using ClassId = std::int64_t;
constexpr ClassId kRestClass = -1;

enum class LeftoverPolicy { kSingletons, kOneClass };

// Partition of all primes into disjoint classes, stored as finitely many
// explicit classes plus a policy for the rest. Only primes dividing corpus
// orders ever get materialized.
class SigmaPartition {
public:
  SigmaPartition() = default;  // sigma^1
  SigmaPartition(std::vector<std::vector<std::uint64_t>> classes, LeftoverPolicy policy);

  static SigmaPartition sigma1() { return SigmaPartition({}, LeftoverPolicy::kSingletons); }
  static SigmaPartition sigma_pi(std::vector<std::uint64_t> primes);  // {pi, pi'}
  // Grammar: "sigma1" | "pi:[2,3]" | "classes=[[2,3],[5]];rest=singletons|one-class".
  static SigmaPartition parse(const std::string& spec);
  std::string canonical() const;

  ClassId class_of(std::uint64_t p) const;
  std::string class_name(ClassId c) const;
  const std::vector<std::vector<std::uint64_t>>& explicit_classes() const { return classes_; }
  LeftoverPolicy policy() const { return policy_; }

  // sigma(n): classes meeting the prime divisors of n; sigma(1) is empty.
  std::vector<ClassId> of_int(std::uint64_t n) const;
  std::vector<ClassId> of_group(const Group& g) const { return of_int(g.order()); }
  bool is_primary_int(std::uint64_t n) const { return of_int(n).size() <= 1; }

  // sigma_i-part of n: the product of the p-parts over primes of n in class c.
  std::uint64_t class_part(std::uint64_t n, ClassId c) const;
  // Primes of n that lie in class c.
  std::vector<std::uint64_t> class_primes(std::uint64_t n, ClassId c) const;

private:
  std::vector<std::vector<std::uint64_t>> classes_;
  LeftoverPolicy policy_ = LeftoverPolicy::kSingletons;
};

std::vector<std::uint64_t> prime_factors(std::uint64_t n);  // distinct, ascending

bool is_sigma_primary(const SigmaPartition& sigma, const Group& g);
// Normal Hall sigma_i-subgroup for every class of sigma(G); decided from the
// normal-subgroup list, so it works beyond the lattice guard.
bool is_sigma_nilpotent(const SigmaPartition& sigma, const Group& g);
bool is_sigma_nilpotent(const SigmaPartition& sigma, const Group& g,
                        const std::vector<Subgroup>& normals);
// Every chief factor sigma-primary (defined in formations.cpp).
bool is_sigma_soluble(const SigmaPartition& sigma, const Group& g);
bool is_sigma_full(const SigmaPartition& sigma, const Lattice& lat);

std::vector<Subgroup> hall_subgroups(const SigmaPartition& sigma, const Lattice& lat,
                                     ClassId c);

// O_pi: the largest normal subgroup whose order only involves the given primes.
Subgroup o_pi_primes(const Group& g, const std::vector<std::uint64_t>& primes,
                     const std::vector<Subgroup>& normals);
Subgroup o_pi_classes(const SigmaPartition& sigma, const Group& g,
                      const std::vector<ClassId>& classes,
                      const std::vector<Subgroup>& normals);
// O^Pi: generated by all elements whose order misses every class in Pi.
Subgroup o_upper_pi(const SigmaPartition& sigma, const Group& g,
                    const std::vector<ClassId>& classes);

// Lattice-level sigma machinery for one partition. Reachability closures are
// computed lazily and shared across every (subgroup, ambient) query: a chain
// from A to H only ever passes through subgroups of H, so one global DAG
// answers sigma-subnormality for all ambient pairs.
class SigmaView {
public:
  SigmaView(const Lattice& lat, SigmaPartition sigma);

  const Lattice& lat() const { return *lat_; }
  const SigmaPartition& sigma() const { return sigma_; }

  bool sigma_subnormal(std::uint32_t a, std::uint32_t ambient) const;
  // Shortest witness chain a = c0 < c1 < ... = ambient, canonical tiebreak.
  std::optional<std::vector<std::uint32_t>> sigma_subnormal_chain(std::uint32_t a,
                                                                  std::uint32_t ambient) const;
  // Classical subnormality (normal steps only).
  bool subnormal(std::uint32_t a, std::uint32_t ambient) const;

  std::vector<ClassId> classes_of(std::uint32_t sub) const;
  bool sigma_full_sub(std::uint32_t sub) const;
  const std::vector<std::uint32_t>& halls_of(std::uint32_t sub, ClassId c) const;

  bool sigma_permutable(std::uint32_t a, std::uint32_t ambient) const;
  bool sigma_seminormal(std::uint32_t a, std::uint32_t ambient) const;
  bool s_permutable(std::uint32_t a, std::uint32_t ambient) const;  // Sylow permutable

private:
  bool step_ok(std::uint32_t k, std::uint32_t h) const;
  void ensure_reach() const;
  void ensure_snorm_reach() const;

  const Lattice* lat_;
  SigmaPartition sigma_;
  mutable std::vector<Bitset> reach_;        // sigma-subnormal reachability
  mutable std::vector<Bitset> snorm_reach_;  // normal-step reachability
  mutable std::vector<std::int8_t> sp_memo_;
  mutable std::vector<std::int8_t> full_memo_;
  mutable std::vector<std::vector<std::pair<ClassId, std::vector<std::uint32_t>>>> halls_memo_;
};

}  // namespace sigmalat

#endif
