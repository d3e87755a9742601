#ifndef SIGMALAT_CONTEXT_HPP
#define SIGMALAT_CONTEXT_HPP

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "sigmalat/modularity.hpp"
#include "sigmalat/sigma.hpp"

namespace sigmalat {

enum class FormationId {
  kAbelianSquarefree,
  kNilpotent,
  kSigmaNilpotent,
  kSoluble,
  kSigmaSoluble,
  kSupersoluble,
  kSigmaSupersoluble,
  kSC,
  kSigmaSC,
};

const char* formation_name(FormationId f);
std::optional<FormationId> formation_from_name(const std::string& name);

struct ChiefFactor {
  Subgroup bottom;
  Subgroup top;
  std::uint64_t order = 1;
  bool abelian = false;
  bool simple = false;
  bool cyclic = false;
};

struct ChiefSeries {
  std::vector<ChiefFactor> factors;
};

// Per-group workspace: owns the group and lazily computes/caches the derived
// structures every classifier leans on (lattice, sigma views, normal list,
// chief series, quotients, subgroup contexts). Single-threaded by design; the
// corpus runner parallelizes across groups, never inside one context.
class GroupCtx {
public:
  explicit GroupCtx(Group g, Limits limits = {}, std::string name = "");
  GroupCtx(const GroupCtx&) = delete;
  GroupCtx& operator=(const GroupCtx&) = delete;

  const Group& group() const { return *group_; }
  const std::string& name() const { return name_; }
  const Limits& limits() const { return limits_; }

  const Lattice& lattice();
  const ModularView& modular();
  SigmaView& sigma_view(const SigmaPartition& sigma);
  const std::vector<Subgroup>& normals();
  const std::vector<std::vector<std::uint32_t>>& conj_classes();
  const ChiefSeries& chief();

  GroupCtx& quotient_ctx(const Subgroup& n);
  const std::vector<std::uint32_t>& quotient_proj(const Subgroup& n);
  GroupCtx& sub_ctx(const Subgroup& s);

  bool member(FormationId f, const SigmaPartition& sigma);
  const Subgroup& residual(FormationId f, const SigmaPartition& sigma);
  bool soluble();
  Subgroup soluble_radical();
  const Subgroup& center_sub();

private:
  std::unique_ptr<Group> group_;
  Limits limits_;
  std::string name_;

  std::unique_ptr<Lattice> lattice_;
  std::unique_ptr<ModularView> modular_;
  std::map<std::string, std::unique_ptr<SigmaView>> sigma_views_;
  std::optional<std::vector<Subgroup>> normals_;
  std::optional<std::vector<std::vector<std::uint32_t>>> conj_classes_;
  std::optional<ChiefSeries> chief_;
  std::optional<Subgroup> center_;

  struct QuotientEntry {
    std::unique_ptr<GroupCtx> ctx;
    std::vector<std::uint32_t> proj;
  };
  std::map<std::vector<std::uint32_t>, QuotientEntry> quotients_;
  std::map<std::vector<std::uint32_t>, std::unique_ptr<GroupCtx>> subctxs_;
  std::map<std::pair<int, std::string>, bool> member_memo_;
  std::map<std::pair<int, std::string>, Subgroup> residual_memo_;
};

// Chief series built bottom-up. The default picks the canonically least
// minimal normal subgroup above the current term; seeded picks uniformly among
// the candidates (Jordan-Hoelder makes the factor multiset agree).
ChiefSeries chief_series(GroupCtx& ctx);
ChiefSeries chief_series_seeded(GroupCtx& ctx, std::uint64_t seed);
// Series forced through the normal subgroup d (factors below d come first).
ChiefSeries chief_series_through(GroupCtx& ctx, const Subgroup& d);

// Multiset signature for Jordan-Hoelder comparisons.
std::vector<std::tuple<std::uint64_t, bool, bool, bool>> factor_signature(const ChiefSeries& s);

bool is_member(FormationId f, const SigmaPartition& sigma, GroupCtx& ctx);
Subgroup residual(FormationId f, const SigmaPartition& sigma, GroupCtx& ctx);

// sigma-central chief factor H/K: one class covers both H/K and G/C_G(H/K).
// Throws NotChiefFactor if H/K is not a chief factor of the context group.
bool is_sigma_central(GroupCtx& ctx, const SigmaPartition& sigma, const Subgroup& k,
                      const Subgroup& h);

}  // namespace sigmalat

#endif
