#include "sigmalat/context.hpp"

#include <algorithm>
#include <random>

namespace sigmalat {

namespace {

constexpr const char* kFormationNames[] = {
    "abelian-squarefree", "nilpotent",    "sigma-nilpotent",
    "soluble",            "sigma-soluble", "supersoluble",
    "sigma-supersoluble", "sc",            "sigma-sc",
};

}  // namespace

const char* formation_name(FormationId f) {
  return kFormationNames[static_cast<int>(f)];
}

std::optional<FormationId> formation_from_name(const std::string& name) {
  for (int i = 0; i < 9; ++i)
    if (name == kFormationNames[i]) return static_cast<FormationId>(i);
  return std::nullopt;
}

GroupCtx::GroupCtx(Group g, Limits limits, std::string name)
    : group_(std::make_unique<Group>(std::move(g))),
      limits_(limits),
      name_(std::move(name)) {}

const Lattice& GroupCtx::lattice() {
  if (!lattice_) lattice_ = std::make_unique<Lattice>(Lattice::enumerate(*group_, limits_));
  return *lattice_;
}

const ModularView& GroupCtx::modular() {
  if (!modular_) modular_ = std::make_unique<ModularView>(lattice());
  return *modular_;
}

SigmaView& GroupCtx::sigma_view(const SigmaPartition& sigma) {
  std::string key = sigma.canonical();
  auto it = sigma_views_.find(key);
  if (it == sigma_views_.end())
    it = sigma_views_.emplace(key, std::make_unique<SigmaView>(lattice(), sigma)).first;
  return *it->second;
}

const std::vector<Subgroup>& GroupCtx::normals() {
  if (!normals_) normals_ = normal_subgroups(*group_);
  return *normals_;
}

const std::vector<std::vector<std::uint32_t>>& GroupCtx::conj_classes() {
  if (!conj_classes_) conj_classes_ = conjugacy_classes(*group_);
  return *conj_classes_;
}

const ChiefSeries& GroupCtx::chief() {
  if (!chief_) chief_ = chief_series(*this);
  return *chief_;
}

GroupCtx& GroupCtx::quotient_ctx(const Subgroup& n) {
  auto it = quotients_.find(n.elems);
  if (it == quotients_.end()) {
    QuotientResult q = quotient(*group_, n, limits_);
    QuotientEntry entry;
    entry.proj = std::move(q.proj);
    entry.ctx = std::make_unique<GroupCtx>(std::move(q.group), limits_,
                                           name_.empty() ? "" : name_ + "/N");
    it = quotients_.emplace(n.elems, std::move(entry)).first;
  }
  return *it->second.ctx;
}

const std::vector<std::uint32_t>& GroupCtx::quotient_proj(const Subgroup& n) {
  quotient_ctx(n);
  return quotients_.at(n.elems).proj;
}

GroupCtx& GroupCtx::sub_ctx(const Subgroup& s) {
  auto it = subctxs_.find(s.elems);
  if (it == subctxs_.end()) {
    it = subctxs_
             .emplace(s.elems, std::make_unique<GroupCtx>(subgroup_group(s), limits_,
                                                          name_.empty() ? "" : name_ + ".sub"))
             .first;
  }
  return *it->second;
}

bool GroupCtx::member(FormationId f, const SigmaPartition& sigma) {
  bool sigma_dep = f == FormationId::kSigmaNilpotent || f == FormationId::kSigmaSoluble ||
                   f == FormationId::kSigmaSupersoluble || f == FormationId::kSigmaSC;
  auto key = std::make_pair(static_cast<int>(f), sigma_dep ? sigma.canonical() : std::string());
  auto it = member_memo_.find(key);
  if (it != member_memo_.end()) return it->second;
  bool v = is_member(f, sigma, *this);
  member_memo_.emplace(key, v);
  return v;
}

const Subgroup& GroupCtx::residual(FormationId f, const SigmaPartition& sigma) {
  bool sigma_dep = f == FormationId::kSigmaNilpotent || f == FormationId::kSigmaSoluble ||
                   f == FormationId::kSigmaSupersoluble;
  auto key = std::make_pair(static_cast<int>(f), sigma_dep ? sigma.canonical() : std::string());
  auto it = residual_memo_.find(key);
  if (it == residual_memo_.end())
    it = residual_memo_.emplace(key, sigmalat::residual(f, sigma, *this)).first;
  return it->second;
}

bool GroupCtx::soluble() { return member(FormationId::kSoluble, SigmaPartition::sigma1()); }

Subgroup GroupCtx::soluble_radical() {
  const Subgroup* best = nullptr;
  for (const auto& n : normals()) {
    if (best && n.order() <= best->order()) continue;
    if (sub_ctx(n).soluble()) best = &n;
  }
  return best ? *best : trivial_subgroup(*group_);
}

const Subgroup& GroupCtx::center_sub() {
  if (!center_) center_ = center(*group_);
  return *center_;
}

namespace {

// Minimal members of {n in normals : k < n, n <= within}.
std::vector<const Subgroup*> minimal_normals_above(const std::vector<Subgroup>& normals,
                                                   const Subgroup& k,
                                                   const Subgroup* within) {
  std::vector<const Subgroup*> cands;
  for (const auto& n : normals) {
    if (n.order() <= k.order()) continue;
    if (!n.contains_all(k)) continue;
    if (within && !within->contains_all(n)) continue;
    cands.push_back(&n);
  }
  std::vector<const Subgroup*> out;
  for (const Subgroup* n : cands) {
    bool minimal = true;
    for (const Subgroup* m : cands)
      if (m != n && m->order() < n->order() && n->contains_all(*m)) {
        minimal = false;
        break;
      }
    if (minimal) out.push_back(n);
  }
  return out;
}

ChiefFactor make_factor(GroupCtx& ctx, const Subgroup& k, const Subgroup& h) {
  const Group& g = ctx.group();
  ChiefFactor f;
  f.bottom = k;
  f.top = h;
  f.order = h.order() / k.order();
  f.abelian = true;
  auto hgens = h.generator_ids();
  for (std::uint32_t a : hgens) {
    for (std::uint32_t b : hgens)
      if (!k.contains(g.commutator(a, b))) {
        f.abelian = false;
        break;
      }
    if (!f.abelian) break;
  }
  GroupCtx& hctx = ctx.sub_ctx(h);
  std::vector<std::uint32_t> k_in_h;
  for (std::uint32_t e : k.elems) k_in_h.push_back(hctx.group().index_of(g.element(e)));
  Subgroup kh = subgroup_from_elems(hctx.group(), std::move(k_in_h));
  GroupCtx& q = hctx.quotient_ctx(kh);
  f.simple = q.normals().size() == 2;
  f.cyclic = false;
  for (std::uint32_t x = 0; x < q.group().order(); ++x)
    if (q.group().element_order(x) == q.group().order()) {
      f.cyclic = true;
      break;
    }
  return f;
}

ChiefSeries build_series(GroupCtx& ctx, const Subgroup* through, std::uint64_t* seed) {
  const auto& normals = ctx.normals();
  ChiefSeries series;
  Subgroup k = trivial_subgroup(ctx.group());
  std::mt19937_64 rng(seed ? *seed : 0);
  bool inside = through != nullptr && through->order() > 1;
  while (k.order() < ctx.group().order()) {
    const Subgroup* scope = inside && k.order() < through->order() ? through : nullptr;
    auto cands = minimal_normals_above(normals, k, scope);
    if (cands.empty()) throw Error("chief series construction stalled");
    const Subgroup* pick = cands.front();
    if (seed) {
      std::uniform_int_distribution<std::size_t> d(0, cands.size() - 1);
      pick = cands[d(rng)];
    }
    series.factors.push_back(make_factor(ctx, k, *pick));
    k = *pick;
  }
  return series;
}

}  // namespace

ChiefSeries chief_series(GroupCtx& ctx) { return build_series(ctx, nullptr, nullptr); }

ChiefSeries chief_series_seeded(GroupCtx& ctx, std::uint64_t seed) {
  return build_series(ctx, nullptr, &seed);
}

ChiefSeries chief_series_through(GroupCtx& ctx, const Subgroup& d) {
  return build_series(ctx, &d, nullptr);
}

std::vector<std::tuple<std::uint64_t, bool, bool, bool>> factor_signature(
    const ChiefSeries& s) {
  std::vector<std::tuple<std::uint64_t, bool, bool, bool>> out;
  for (const auto& f : s.factors) out.emplace_back(f.order, f.abelian, f.simple, f.cyclic);
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

bool squarefree(std::uint64_t n) {
  for (std::uint64_t p : prime_factors(n))
    if (n % (p * p) == 0) return false;
  return true;
}

bool has_normal_of_order(const std::vector<Subgroup>& normals, std::uint64_t order) {
  for (const auto& n : normals)
    if (n.order() == order) return true;
  return false;
}

}  // namespace

bool is_member(FormationId f, const SigmaPartition& sigma, GroupCtx& ctx) {
  const Group& g = ctx.group();
  switch (f) {
    case FormationId::kAbelianSquarefree: {
      if (!is_abelian(g)) return false;
      for (std::uint32_t x = 0; x < g.order(); ++x)
        if (!squarefree(g.element_order(x))) return false;
      return true;
    }
    case FormationId::kNilpotent: {
      for (std::uint64_t p : prime_factors(g.order()))
        if (!has_normal_of_order(ctx.normals(), p_part(g.order(), p))) return false;
      return true;
    }
    case FormationId::kSigmaNilpotent:
      return is_sigma_nilpotent(sigma, g, ctx.normals());
    case FormationId::kSoluble: {
      Subgroup d = whole_group(g);
      while (true) {
        Subgroup next = derived_subgroup(g, d);
        if (next.order() == d.order()) break;
        d = next;
      }
      return d.is_trivial();
    }
    case FormationId::kSigmaSoluble: {
      for (const auto& fac : ctx.chief().factors)
        if (!sigma.is_primary_int(fac.order)) return false;
      return true;
    }
    case FormationId::kSupersoluble: {
      for (const auto& fac : ctx.chief().factors)
        if (prime_factors(fac.order).size() != 1 || !squarefree(fac.order)) return false;
      return true;
    }
    case FormationId::kSigmaSupersoluble: {
      const Subgroup& d = ctx.residual(FormationId::kSigmaNilpotent, sigma);
      if (d.is_trivial()) return true;
      ChiefSeries s = chief_series_through(ctx, d);
      for (const auto& fac : s.factors) {
        if (!d.contains_all(fac.top)) break;
        if (prime_factors(fac.order).size() != 1 || !squarefree(fac.order)) return false;
      }
      return true;
    }
    case FormationId::kSC:
    case FormationId::kSigmaSC: {
      const Subgroup& d =
          ctx.residual(f == FormationId::kSC ? FormationId::kNilpotent
                                             : FormationId::kSigmaNilpotent,
                       sigma);
      if (d.is_trivial()) return true;
      ChiefSeries s = chief_series_through(ctx, d);
      for (const auto& fac : s.factors) {
        if (!d.contains_all(fac.top)) break;
        if (!fac.simple) return false;
      }
      return true;
    }
  }
  return false;
}

Subgroup residual(FormationId f, const SigmaPartition& sigma, GroupCtx& ctx) {
  if (f == FormationId::kSC || f == FormationId::kSigmaSC)
    throw Error("residual is only defined for the formation ids");
  const Group& g = ctx.group();
  std::vector<std::uint32_t> cur = whole_group(g).elems;
  for (const auto& n : ctx.normals()) {
    GroupCtx& q = ctx.quotient_ctx(n);
    if (q.member(f, sigma)) {
      std::vector<std::uint32_t> tmp;
      std::set_intersection(cur.begin(), cur.end(), n.elems.begin(), n.elems.end(),
                            std::back_inserter(tmp));
      cur = std::move(tmp);
    }
  }
  Subgroup res = Subgroup{&g, std::move(cur)};
  GroupCtx& sanity = ctx.quotient_ctx(res);
  if (!sanity.member(f, sigma))
    throw Error(std::string("formation residual sanity check failed for ") +
                formation_name(f));
  return res;
}

bool is_sigma_soluble(const SigmaPartition& sigma, const Group& g) {
  GroupCtx ctx(g, Limits{});
  return ctx.member(FormationId::kSigmaSoluble, sigma);
}

bool is_sigma_central(GroupCtx& ctx, const SigmaPartition& sigma, const Subgroup& k,
                      const Subgroup& h) {
  const Group& g = ctx.group();
  if (k.order() >= h.order() || !h.contains_all(k))
    throw NotChiefFactorError("bottom must sit strictly inside top");
  bool k_norm = false, h_norm = false;
  for (const auto& n : ctx.normals()) {
    if (n == k) k_norm = true;
    if (n == h) h_norm = true;
  }
  if (!k_norm || !h_norm)
    throw NotChiefFactorError("section terms are not normal subgroups");
  for (const auto& n : ctx.normals())
    if (n.order() > k.order() && n.order() < h.order() && n.contains_all(k) &&
        h.contains_all(n))
      throw NotChiefFactorError("section is not a chief factor");
  Subgroup c = section_centralizer(g, h, k);
  auto s1 = sigma.of_int(h.order() / k.order());
  auto s2 = sigma.of_int(g.order() / c.order());
  std::vector<ClassId> all = s1;
  all.insert(all.end(), s2.begin(), s2.end());
  std::sort(all.begin(), all.end());
  all.erase(std::unique(all.begin(), all.end()), all.end());
  return all.size() == 1;
}

}  // namespace sigmalat
