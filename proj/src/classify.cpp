#include "sigmalat/classify.hpp"

#include <algorithm>

namespace sigmalat {

namespace {

constexpr const char* kPropertyNames[] = {"T",       "PT",      "PST",     "PsigmaT",
                                          "QsigmaT", "T_sigma", "MsigmaT", "MT"};

Subgroup map_to_parent(const Group& parent, const Group& child, const Subgroup& s) {
  std::vector<std::uint32_t> elems;
  elems.reserve(s.elems.size());
  for (std::uint32_t e : s.elems) elems.push_back(parent.index_of(child.element(e)));
  std::sort(elems.begin(), elems.end());
  return Subgroup{&parent, std::move(elems)};
}

Subgroup map_to_child(const Group& parent, const Group& child, const Subgroup& s) {
  std::vector<std::uint32_t> elems;
  elems.reserve(s.elems.size());
  for (std::uint32_t e : s.elems) elems.push_back(child.index_of(parent.element(e)));
  std::sort(elems.begin(), elems.end());
  return Subgroup{&child, std::move(elems)};
}

bool modular_with(GroupCtx& ctx, const EngineOptions& opt, std::uint32_t m,
                  std::uint32_t ambient) {
  const ModularView& mv = ctx.modular();
  return opt.modular == ModularStrategy::kReduced ? mv.modular_pair(m, ambient)
                                                  : mv.modular_direct(m, ambient);
}

}  // namespace

const char* property_name(TransProperty p) { return kPropertyNames[static_cast<int>(p)]; }

std::optional<TransProperty> property_from_name(const std::string& name) {
  for (int i = 0; i < 8; ++i)
    if (name == kPropertyNames[i]) return static_cast<TransProperty>(i);
  return std::nullopt;
}

const char* functor_name(FunctorId f) {
  switch (f) {
    case FunctorId::kNormal: return "normal";
    case FunctorId::kModular: return "modular";
    case FunctorId::kSigmaPermutable: return "sigma-permutable";
  }
  return "?";
}

bool functor_holds(GroupCtx& ctx, const SigmaPartition& sigma, FunctorId tau,
                   std::uint32_t a, std::uint32_t ambient) {
  switch (tau) {
    case FunctorId::kNormal: return ctx.lattice().normal_in(a, ambient);
    case FunctorId::kModular: return ctx.modular().modular_pair(a, ambient);
    case FunctorId::kSigmaPermutable:
      return ctx.sigma_view(sigma).sigma_permutable(a, ambient);
  }
  return false;
}

bool sigma_quasinormal(GroupCtx& ctx, const SigmaPartition& sigma, std::uint32_t a,
                       std::uint32_t ambient) {
  return ctx.modular().modular_pair(a, ambient) &&
         ctx.sigma_view(sigma).sigma_subnormal(a, ambient);
}

std::vector<Bitset> sigma_quasi_reach(GroupCtx& ctx, const SigmaPartition& sigma) {
  const Lattice& lat = ctx.lattice();
  const std::uint32_t s = lat.size();
  std::vector<Bitset> reach(s, Bitset(s));
  for (std::uint32_t i = s; i-- > 0;) {
    reach[i].set(i);
    const Bitset& ups = lat.filter(i);
    for (std::size_t j = ups.find_next(i); j != Bitset::npos; j = ups.find_next(j)) {
      if (reach[i].test(j)) continue;
      if (sigma_quasinormal(ctx, sigma, i, static_cast<std::uint32_t>(j)))
        reach[i] |= reach[j];
    }
  }
  return reach;
}

bool sigma_subquasinormal(GroupCtx& ctx, const SigmaPartition& sigma, std::uint32_t a,
                          std::uint32_t ambient) {
  return sigma_quasi_reach(ctx, sigma)[a].test(ambient);
}

bool is_T(GroupCtx& ctx, Subgroup* witness) {
  const Lattice& lat = ctx.lattice();
  SigmaView& sv = ctx.sigma_view(SigmaPartition::sigma1());
  for (std::uint32_t a = 0; a < lat.size(); ++a) {
    if (!sv.subnormal(a, lat.full_id())) continue;
    if (!lat.normal_in(a, lat.full_id())) {
      if (witness) *witness = lat.at(a);
      return false;
    }
  }
  return true;
}

bool is_PT(GroupCtx& ctx, const EngineOptions& opt, Subgroup* witness) {
  const Lattice& lat = ctx.lattice();
  SigmaView& sv = ctx.sigma_view(SigmaPartition::sigma1());
  for (std::uint32_t a = 0; a < lat.size(); ++a) {
    if (!sv.subnormal(a, lat.full_id())) continue;
    if (!modular_with(ctx, opt, a, lat.full_id())) {
      if (witness) *witness = lat.at(a);
      return false;
    }
  }
  return true;
}

bool is_PST(GroupCtx& ctx, Subgroup* witness) {
  const Lattice& lat = ctx.lattice();
  SigmaView& sv = ctx.sigma_view(SigmaPartition::sigma1());
  for (std::uint32_t a = 0; a < lat.size(); ++a) {
    if (!sv.subnormal(a, lat.full_id())) continue;
    if (!sv.s_permutable(a, lat.full_id())) {
      if (witness) *witness = lat.at(a);
      return false;
    }
  }
  return true;
}

Verdict is_PsigmaT(GroupCtx& ctx, const SigmaPartition& sigma, PsigmaTMode mode,
                   Subgroup* witness) {
  const Lattice& lat = ctx.lattice();
  SigmaView& sv = ctx.sigma_view(sigma);
  if (!sv.sigma_full_sub(lat.full_id())) return Verdict::kUndefined;
  if (mode == PsigmaTMode::kSubnormal) {
    for (std::uint32_t a = 0; a < lat.size(); ++a) {
      if (!sv.sigma_subnormal(a, lat.full_id())) continue;
      if (!sv.sigma_permutable(a, lat.full_id())) {
        if (witness) *witness = lat.at(a);
        return Verdict::kFalse;
      }
    }
    return Verdict::kTrue;
  }
  for (std::uint32_t h = 0; h < lat.size(); ++h) {
    const Bitset& ups = lat.filter(h);
    for (std::size_t k = ups.find_first(); k != Bitset::npos; k = ups.find_next(k)) {
      if (!sv.sigma_permutable(h, static_cast<std::uint32_t>(k))) continue;
      if (!sv.sigma_permutable(static_cast<std::uint32_t>(k), lat.full_id())) continue;
      if (!sv.sigma_permutable(h, lat.full_id())) {
        if (witness) *witness = lat.at(h);
        return Verdict::kFalse;
      }
    }
  }
  return Verdict::kTrue;
}

bool is_QsigmaT(GroupCtx& ctx, const SigmaPartition& sigma, const EngineOptions& opt,
                Subgroup* witness) {
  const Lattice& lat = ctx.lattice();
  SigmaView& sv = ctx.sigma_view(sigma);
  for (std::uint32_t a = 0; a < lat.size(); ++a) {
    if (!sv.sigma_subnormal(a, lat.full_id())) continue;
    if (!modular_with(ctx, opt, a, lat.full_id())) {
      if (witness) *witness = lat.at(a);
      return false;
    }
  }
  return true;
}

bool is_T_sigma(GroupCtx& ctx, const SigmaPartition& sigma, Subgroup* witness) {
  const Lattice& lat = ctx.lattice();
  SigmaView& sv = ctx.sigma_view(sigma);
  for (std::uint32_t a = 0; a < lat.size(); ++a) {
    if (!sv.sigma_subnormal(a, lat.full_id())) continue;
    if (!lat.normal_in(a, lat.full_id())) {
      if (witness) *witness = lat.at(a);
      return false;
    }
  }
  return true;
}

bool is_MsigmaT(GroupCtx& ctx, const SigmaPartition& sigma, const EngineOptions& opt,
                Subgroup* witness) {
  const Lattice& lat = ctx.lattice();
  SigmaView& sv = ctx.sigma_view(sigma);
  auto reach = sigma_quasi_reach(ctx, sigma);
  for (std::uint32_t a = 0; a < lat.size(); ++a) {
    if (!reach[a].test(lat.full_id())) continue;
    bool quasi = modular_with(ctx, opt, a, lat.full_id()) &&
                 sv.sigma_subnormal(a, lat.full_id());
    if (!quasi) {
      if (witness) *witness = lat.at(a);
      return false;
    }
  }
  return true;
}

bool is_MT(GroupCtx& ctx, const EngineOptions& opt, Subgroup* witness) {
  const Lattice& lat = ctx.lattice();
  const ModularView& mv = ctx.modular();
  for (std::uint32_t a = 0; a < lat.size(); ++a) {
    if (!mv.submodular(a, lat.full_id())) continue;
    if (!modular_with(ctx, opt, a, lat.full_id())) {
      if (witness) *witness = lat.at(a);
      return false;
    }
  }
  return true;
}

bool is_dedekind(GroupCtx& ctx) { return ctx.modular().dedekind(ctx.lattice().full_id()); }
bool is_iwasawa(GroupCtx& ctx) { return ctx.modular().iwasawa(ctx.lattice().full_id()); }
bool is_m_group(GroupCtx& ctx) { return ctx.modular().m_group(ctx.lattice().full_id()); }

bool is_sigma_permutable_sub(GroupCtx& ctx, const SigmaPartition& sigma, const Subgroup& a) {
  const Lattice& lat = ctx.lattice();
  return ctx.sigma_view(sigma).sigma_permutable(lat.index_of(a), lat.full_id());
}

bool is_sigma_subnormal_sub(GroupCtx& ctx, const SigmaPartition& sigma, const Subgroup& a,
                            std::vector<Subgroup>* chain) {
  const Lattice& lat = ctx.lattice();
  SigmaView& sv = ctx.sigma_view(sigma);
  std::uint32_t id = lat.index_of(a);
  if (!sv.sigma_subnormal(id, lat.full_id())) return false;
  if (chain) {
    auto ids = sv.sigma_subnormal_chain(id, lat.full_id());
    chain->clear();
    for (std::uint32_t c : *ids) chain->push_back(lat.at(c));
  }
  return true;
}

std::optional<RobinsonComplex> robinson_complex(GroupCtx& ctx, const SigmaPartition& sigma,
                                                const Subgroup* d_opt,
                                                std::string* fail_reason) {
  auto fail = [&](const std::string& why) -> std::optional<RobinsonComplex> {
    if (fail_reason) *fail_reason = why;
    return std::nullopt;
  };
  const Group& g = ctx.group();
  Subgroup d = d_opt ? *d_opt : ctx.residual(FormationId::kSigmaSoluble, sigma);
  if (d.is_trivial()) return fail("D is trivial");
  bool normal = false;
  for (const auto& n : ctx.normals())
    if (n == d) {
      normal = true;
      break;
    }
  if (!normal) return fail("D is not normal");

  GroupCtx& dctx = ctx.sub_ctx(d);
  Subgroup z = map_to_parent(g, dctx.group(), center(dctx.group()));
  Subgroup phi = map_to_parent(g, dctx.group(), frattini(dctx.lattice()));
  if (!phi.contains_all(z)) return fail("Z(D) is not contained in Frattini(D)");

  // U_j: preimages of the minimal normal subgroups of G/Z inside D/Z.
  std::vector<Subgroup> us;
  std::vector<const Subgroup*> cands;
  for (const auto& n : ctx.normals())
    if (n.order() > z.order() && n.contains_all(z) && d.contains_all(n))
      cands.push_back(&n);
  for (const Subgroup* n : cands) {
    bool minimal = true;
    for (const Subgroup* m : cands)
      if (m != n && m->order() < n->order() && n->contains_all(*m)) {
        minimal = false;
        break;
      }
    if (minimal) us.push_back(*n);
  }
  if (us.empty()) return fail("no chief factors above Z(D) inside D");

  const Lattice& lat = ctx.lattice();
  std::uint32_t z_id = lat.index_of(z);
  std::uint32_t d_id = lat.index_of(d);
  for (const auto& u : us) {
    if (!sigma.is_primary_int(u.order() / z.order())) {
      // good: factor must be non-sigma-primary; verified below
    } else {
      return fail("factor U/Z(D) is sigma-primary");
    }
    GroupCtx& uctx = ctx.sub_ctx(u);
    Subgroup z_in_u = map_to_child(g, uctx.group(), z);
    GroupCtx& q = uctx.quotient_ctx(z_in_u);
    if (q.normals().size() != 2) return fail("factor U/Z(D) is not simple");
  }
  std::uint32_t prog = z_id;
  for (const auto& u : us) {
    std::uint32_t u_id = lat.index_of(u);
    if (lat.meet(prog, u_id) != z_id) return fail("factors do not intersect in Z(D)");
    prog = lat.join(prog, u_id);
  }
  if (prog != d_id) return fail("factors do not generate D over Z(D)");

  if (z.order() > 1) {
    ChiefSeries below = chief_series_through(ctx, z);
    for (const auto& f : below.factors) {
      if (!z.contains_all(f.top)) break;
      if (!f.cyclic) return fail("a chief factor below Z(D) is not cyclic");
    }
  }
  RobinsonComplex out;
  out.d = d;
  out.z = z;
  out.u = us;
  return out;
}

bool condition_N(GroupCtx& ctx, const std::vector<std::uint64_t>& pi) {
  for (const auto& n : ctx.normals()) {
    if (!ctx.sub_ctx(n).soluble()) continue;
    GroupCtx& q = ctx.quotient_ctx(n);
    const Group& qg = q.group();
    Subgroup o = o_pi_primes(qg, pi, q.normals());
    if (o.is_trivial()) continue;
    std::vector<std::uint32_t> pi_prime_elements;
    for (std::uint32_t x = 0; x < qg.order(); ++x) {
      bool coprime = true;
      for (std::uint64_t p : prime_factors(qg.element_order(x)))
        if (std::find(pi.begin(), pi.end(), p) != pi.end()) {
          coprime = false;
          break;
        }
      if (coprime) pi_prime_elements.push_back(x);
    }
    if (!induces_power_automorphisms(qg, pi_prime_elements, o)) return false;
  }
  return true;
}

bool condition_P(GroupCtx& ctx, const std::vector<std::uint64_t>& pi, bool require_all) {
  std::uint64_t part = 1;
  for (std::uint64_t p : pi) part *= p_part(ctx.group().order(), p);
  if (ctx.lattice().subgroups_of_order(part).empty()) return true;  // no Hall pi-subgroup
  for (const auto& n : ctx.normals()) {
    if (!ctx.sub_ctx(n).soluble()) continue;
    GroupCtx& q = ctx.quotient_ctx(n);
    const Group& qg = q.group();
    Subgroup o = o_pi_primes(qg, pi, q.normals());
    if (o.is_trivial()) continue;
    const Lattice& qlat = q.lattice();
    std::uint64_t qpart = 1;
    for (std::uint64_t p : pi) qpart *= p_part(qg.order(), p);
    auto halls = qlat.subgroups_of_order(qpart);
    if (halls.empty()) continue;
    std::uint32_t o_id = qlat.index_of(o);
    bool any_hall_ok = false;
    for (std::uint32_t h : halls) {
      bool all_modular = true;
      const Bitset& down = qlat.ideal(o_id);
      for (std::size_t v = down.find_first(); v != Bitset::npos; v = down.find_next(v))
        if (!q.modular().modular_pair(static_cast<std::uint32_t>(v), h)) {
          all_modular = false;
          break;
        }
      if (require_all && !all_modular) return false;
      if (all_modular) any_hall_ok = true;
    }
    if (!require_all && !any_hall_ok) return false;
  }
  return true;
}

bool condition_t(GroupCtx& ctx, const std::vector<std::uint64_t>& pi) {
  for (const auto& n : ctx.normals()) {
    if (!ctx.sub_ctx(n).soluble()) continue;
    GroupCtx& q = ctx.quotient_ctx(n);
    Subgroup o = o_pi_primes(q.group(), pi, q.normals());
    if (o.is_trivial()) continue;
    const Lattice& qlat = q.lattice();
    std::uint32_t o_id = qlat.index_of(o);
    const Bitset& down = qlat.ideal(o_id);
    for (std::size_t v = down.find_first(); v != Bitset::npos; v = down.find_next(v))
      if (!qlat.normal_in(static_cast<std::uint32_t>(v), qlat.full_id())) return false;
  }
  return true;
}

bool condition_M(GroupCtx& ctx, std::optional<std::pair<std::uint64_t, std::uint64_t>> pq) {
  for (const auto& n : ctx.normals()) {
    if (!ctx.sub_ctx(n).soluble()) continue;
    GroupCtx& q = ctx.quotient_ctx(n);
    const Lattice& qlat = q.lattice();
    SigmaView& qsv = q.sigma_view(SigmaPartition::sigma1());
    for (const auto& w : q.normals()) {
      if (w.is_trivial()) continue;
      GroupCtx& wctx = q.sub_ctx(w);
      auto shape = detect_p_group_shape(wctx.group(), wctx.normals());
      if (!shape) continue;
      if (pq && (shape->p != pq->first || shape->q != pq->second)) continue;
      std::uint32_t w_id = qlat.index_of(w);
      const Bitset& down = qlat.ideal(w_id);
      for (std::size_t v = down.find_first(); v != Bitset::npos; v = down.find_next(v)) {
        if (qsv.subnormal(static_cast<std::uint32_t>(v), qlat.full_id())) continue;
        if (!q.modular().modular_pair(static_cast<std::uint32_t>(v), qlat.full_id()))
          return false;
      }
    }
  }
  return true;
}

namespace {

ordered_json subgroup_json(const Subgroup& s) {
  ordered_json j;
  j["order"] = s.order();
  j["generators"] = witness_generator_strings(s);
  return j;
}

// Shared condition bundle of Theorems 2.3 / 3.5 / 4.5 and Corollary 2.16:
// D = sigma-nilpotent residual; (i) D abelian Hall of odd order with a
// sigma-nilpotent complement M carrying the tau-clause, power automorphisms on
// D; (ii) O_{sigma_i}(D) has a normal complement in a Hall sigma_i-subgroup.
struct Bundle {
  bool holds_i = false, holds_ii = false;
  ordered_json details;
};

Bundle soluble_bundle(GroupCtx& ctx, const SigmaPartition& sigma,
                      std::optional<FunctorId> tau) {
  const Group& g = ctx.group();
  const Lattice& lat = ctx.lattice();
  Bundle b;
  Subgroup d = ctx.residual(FormationId::kSigmaNilpotent, sigma);
  std::uint32_t d_id = lat.index_of(d);
  GroupCtx& dctx = ctx.sub_ctx(d);

  bool d_abelian = is_abelian(dctx.group());
  bool d_hall = std::gcd(d.order(), g.order() / d.order()) == 1;
  bool d_odd = d.order() % 2 == 1;

  std::optional<std::uint32_t> m_id;
  for (std::uint32_t cand : lat.subgroups_of_order(g.order() / d.order())) {
    if (lat.meet(cand, d_id) != lat.trivial_id()) continue;
    if (!ctx.sub_ctx(lat.at(cand)).member(FormationId::kSigmaNilpotent, sigma)) continue;
    if (tau) {
      bool clause = true;
      const Bitset& down = lat.ideal(cand);
      for (std::size_t u = down.find_first(); u != Bitset::npos; u = down.find_next(u))
        if (!functor_holds(ctx, sigma, *tau, static_cast<std::uint32_t>(u), cand)) {
          clause = false;
          break;
        }
      if (!clause) continue;
    }
    m_id = cand;
    break;
  }

  std::vector<std::uint32_t> all_elems(g.order());
  for (std::uint32_t x = 0; x < g.order(); ++x) all_elems[x] = x;
  bool power_auts = induces_power_automorphisms(g, all_elems, d);

  bool per_class = true;
  for (ClassId c : sigma.of_int(g.order())) {
    Subgroup o_in_d = o_pi_classes(sigma, dctx.group(),  {c}, dctx.normals());
    Subgroup o = map_to_parent(g, dctx.group(), o_in_d);
    std::uint32_t o_id = lat.index_of(o);
    std::uint64_t hall_order = sigma.class_part(g.order(), c);
    bool found = false;
    for (std::uint32_t h : lat.subgroups_of_order(hall_order)) {
      if (!lat.leq(o_id, h)) continue;
      const Bitset& down = lat.ideal(h);
      for (std::size_t si = down.find_first(); si != Bitset::npos; si = down.find_next(si)) {
        std::uint32_t s = static_cast<std::uint32_t>(si);
        if (lat.order_of(s) * lat.order_of(o_id) != lat.order_of(h)) continue;
        if (lat.meet(s, o_id) != lat.trivial_id()) continue;
        if (!lat.normal_in(s, h)) continue;
        found = true;
        break;
      }
      if (found) break;
    }
    if (!found) {
      per_class = false;
      break;
    }
  }

  b.holds_i = d_abelian && d_hall && d_odd && m_id.has_value() && power_auts;
  b.holds_ii = per_class;
  b.details["D"] = subgroup_json(d);
  b.details["D_abelian"] = d_abelian;
  b.details["D_hall"] = d_hall;
  b.details["D_odd_order"] = d_odd;
  b.details["complement_found"] = m_id.has_value();
  if (m_id) b.details["M"] = subgroup_json(lat.at(*m_id));
  if (tau) b.details["tau"] = functor_name(*tau);
  b.details["power_automorphisms_on_D"] = power_auts;
  b.details["per_class_normal_complement"] = per_class;
  return b;
}

std::vector<std::uint64_t> primes_of_class(const SigmaPartition& sigma, std::uint64_t n,
                                           ClassId c) {
  return sigma.class_primes(n, c);
}

}  // namespace

TheoremCheck theorem2_3_check(GroupCtx& ctx, const SigmaPartition& sigma) {
  if (!ctx.member(FormationId::kSigmaSoluble, sigma))
    throw NotSigmaSolubleError("Theorem 2.3 applies to sigma-soluble groups");
  Bundle b = soluble_bundle(ctx, sigma, std::nullopt);
  TheoremCheck t;
  t.name = "2.3";
  t.hypothesis = true;
  t.conditions = b.holds_i && b.holds_ii;
  t.implied = to_verdict(t.conditions);
  t.details = std::move(b.details);
  t.details["holds_i"] = b.holds_i;
  t.details["holds_ii"] = b.holds_ii;
  return t;
}

TheoremCheck theorem2_11_check(GroupCtx& ctx, const SigmaPartition& sigma, FunctorId tau) {
  if (!ctx.member(FormationId::kSigmaSoluble, sigma))
    throw NotSigmaSolubleError("Theorem 2.11 applies to sigma-soluble groups");
  const Lattice& lat = ctx.lattice();
  SigmaView& sv = ctx.sigma_view(sigma);
  bool premise = true;
  for (std::uint32_t a = 0; a < lat.size() && premise; ++a) {
    if (!sv.sigma_subnormal(a, lat.full_id())) continue;
    if (!functor_holds(ctx, sigma, tau, a, lat.full_id())) premise = false;
  }
  Bundle b = soluble_bundle(ctx, sigma, tau);
  TheoremCheck t;
  t.name = "2.11";
  t.hypothesis = true;
  t.conditions = b.holds_i && b.holds_ii;
  t.implied = to_verdict(t.conditions);
  t.details = std::move(b.details);
  t.details["premise_every_sigma_subnormal_is_tau"] = premise;
  t.details["holds_i"] = b.holds_i;
  t.details["holds_ii"] = b.holds_ii;
  return t;
}

TheoremCheck theorem3_5_check(GroupCtx& ctx, const SigmaPartition& sigma) {
  if (!ctx.member(FormationId::kSigmaSoluble, sigma))
    throw NotSigmaSolubleError("Theorem 3.5 applies to sigma-soluble groups");
  Bundle b = soluble_bundle(ctx, sigma, FunctorId::kModular);
  TheoremCheck t;
  t.name = "3.5";
  t.hypothesis = true;
  t.conditions = b.holds_i && b.holds_ii;
  t.implied = to_verdict(t.conditions);
  t.details = std::move(b.details);
  return t;
}

TheoremCheck theorem4_5_check(GroupCtx& ctx, const SigmaPartition& sigma) {
  if (!ctx.soluble()) throw NotSolubleError("Theorem 4.5 applies to soluble groups");
  Bundle b = soluble_bundle(ctx, sigma, FunctorId::kModular);
  TheoremCheck t;
  t.name = "4.5";
  t.hypothesis = true;
  t.conditions = b.holds_i && b.holds_ii;
  t.implied = to_verdict(t.conditions);
  t.details = std::move(b.details);
  return t;
}

TheoremCheck theorem5_3_check(GroupCtx& ctx) {
  if (!ctx.soluble()) throw NotSolubleError("Theorem 5.3 applies to soluble groups");
  TheoremCheck t;
  t.name = "5.3";
  t.hypothesis = true;
  t.conditions = is_m_group(ctx);
  t.implied = to_verdict(t.conditions);
  t.details["lattice_modular"] = t.conditions;
  return t;
}

namespace {

// Common (ii)/(iii) scaffolding of the non-soluble characterizations 2.20,
// 3.6 and 5.8: Robinson complex at the canonical D plus quotient conditions on
// G and on G / U'_{j1}...U'_{jr} for every proper nonempty index family.
struct ComplexConditions {
  bool has_complex = false;
  std::optional<RobinsonComplex> complex;
  std::string complex_fail;
  std::vector<Subgroup> quotient_kernels;  // products of derived subgroups
};

ComplexConditions complex_scaffold(GroupCtx& ctx, const SigmaPartition& sigma,
                                   const Subgroup& d) {
  ComplexConditions cc;
  if (d.is_trivial()) {
    cc.has_complex = true;
    return cc;
  }
  cc.complex = robinson_complex(ctx, sigma, &d, &cc.complex_fail);
  cc.has_complex = cc.complex.has_value();
  if (!cc.complex) return cc;
  const Group& g = ctx.group();
  const std::size_t k = cc.complex->u.size();
  std::vector<Subgroup> derived;
  for (const auto& u : cc.complex->u) derived.push_back(derived_subgroup(g, u));
  for (std::uint32_t mask = 1; k > 1 && mask + 1 < (1u << k); ++mask) {
    std::vector<std::uint32_t> gens;
    for (std::size_t j = 0; j < k; ++j)
      if (mask & (1u << j)) {
        auto gj = derived[j].generator_ids();
        gens.insert(gens.end(), gj.begin(), gj.end());
      }
    cc.quotient_kernels.push_back(generated_subgroup(g, gens));
  }
  std::sort(cc.quotient_kernels.begin(), cc.quotient_kernels.end());
  cc.quotient_kernels.erase(
      std::unique(cc.quotient_kernels.begin(), cc.quotient_kernels.end()),
      cc.quotient_kernels.end());
  return cc;
}

}  // namespace

TheoremCheck theorem2_20_check(GroupCtx& ctx, const SigmaPartition& sigma) {
  const Group& g = ctx.group();
  const Lattice& lat = ctx.lattice();
  SigmaView& sv = ctx.sigma_view(sigma);
  TheoremCheck t;
  t.name = "2.20";

  bool full = sv.sigma_full_sub(lat.full_id());
  bool halls_ok = true;
  if (full) {
    for (ClassId c : sigma.of_int(g.order())) {
      for (std::uint32_t h : sv.halls_of(lat.full_id(), c)) {
        GroupCtx& hctx = ctx.sub_ctx(lat.at(h));
        if (!hctx.member(FormationId::kSupersoluble, sigma) && !is_PST(hctx)) {
          halls_ok = false;
          break;
        }
      }
      if (!halls_ok) break;
    }
  }
  t.hypothesis = full && halls_ok;
  t.details["sigma_full"] = full;
  t.details["halls_supersoluble_or_PST"] = halls_ok;

  Subgroup d = ctx.residual(FormationId::kSigmaSoluble, sigma);
  t.details["D"] = subgroup_json(d);

  GroupCtx& q = ctx.quotient_ctx(d);
  bool cond_i = q.member(FormationId::kSigmaSoluble, sigma) &&
                theorem2_3_check(q, sigma).conditions;
  t.details["i_quotient_sigma_soluble_PsigmaT"] = cond_i;

  ComplexConditions cc = complex_scaffold(ctx, sigma, d);
  bool cond_ii = cc.has_complex;
  t.details["ii_robinson_complex"] = cond_ii;
  if (!cc.complex_fail.empty()) t.details["complex_failure"] = cc.complex_fail;

  bool cond_iii = true;
  if (!d.is_trivial() && cc.complex) {
    std::vector<GroupCtx*> targets{&ctx};
    for (const auto& ker : cc.quotient_kernels) targets.push_back(&ctx.quotient_ctx(ker));
    for (GroupCtx* tc : targets) {
      for (ClassId c : sigma.of_int(cc.complex->z.order())) {
        auto pi = primes_of_class(sigma, tc->group().order(), c);
        if (!condition_N(*tc, pi)) {
          cond_iii = false;
          break;
        }
      }
      if (!cond_iii) break;
    }
  } else if (!d.is_trivial()) {
    cond_iii = false;  // cannot evaluate without the complex; bundle already fails
  }
  t.details["iii_N_conditions"] = cond_iii;

  t.conditions = cond_i && cond_ii && cond_iii;
  t.implied = t.hypothesis ? to_verdict(t.conditions) : Verdict::kUndefined;
  return t;
}

TheoremCheck theorem3_6_check(GroupCtx& ctx, const SigmaPartition& sigma) {
  const Lattice& lat = ctx.lattice();
  SigmaView& sv = ctx.sigma_view(sigma);
  TheoremCheck t;
  t.name = "3.6";
  t.hypothesis = sv.sigma_full_sub(lat.full_id());
  t.details["sigma_full"] = t.hypothesis;

  Subgroup d = ctx.residual(FormationId::kSigmaSoluble, sigma);
  t.details["D"] = subgroup_json(d);

  GroupCtx& q = ctx.quotient_ctx(d);
  bool cond_i = q.member(FormationId::kSigmaSoluble, sigma) &&
                theorem3_5_check(q, sigma).conditions;
  t.details["i_quotient_sigma_soluble_QsigmaT"] = cond_i;

  ComplexConditions cc = complex_scaffold(ctx, sigma, d);
  bool cond_ii = cc.has_complex;
  t.details["ii_robinson_complex"] = cond_ii;
  if (!cc.complex_fail.empty()) t.details["complex_failure"] = cc.complex_fail;

  bool cond_iii = true;
  if (!d.is_trivial() && cc.complex) {
    std::vector<GroupCtx*> targets{&ctx};
    for (const auto& ker : cc.quotient_kernels) targets.push_back(&ctx.quotient_ctx(ker));
    for (GroupCtx* tc : targets) {
      for (ClassId c : sigma.of_int(cc.complex->z.order()))
        if (!condition_N(*tc, primes_of_class(sigma, tc->group().order(), c))) {
          cond_iii = false;
          break;
        }
      if (!cond_iii) break;
      for (ClassId c : sigma.of_int(d.order()))
        if (!condition_P(*tc, primes_of_class(sigma, tc->group().order(), c))) {
          cond_iii = false;
          break;
        }
      if (!cond_iii) break;
    }
  } else if (!d.is_trivial()) {
    cond_iii = false;
  }
  t.details["iii_N_and_P_conditions"] = cond_iii;

  t.conditions = cond_i && cond_ii && cond_iii;
  t.implied = t.hypothesis ? to_verdict(t.conditions) : Verdict::kUndefined;
  return t;
}

TheoremCheck theorem3_19_check(GroupCtx& ctx, const SigmaPartition& sigma) {
  const Lattice& lat = ctx.lattice();
  SigmaView& sv = ctx.sigma_view(sigma);
  TheoremCheck t;
  t.name = "3.19";
  t.hypothesis = sv.sigma_full_sub(lat.full_id());
  t.details["sigma_full"] = t.hypothesis;

  bool t_conditions = true;
  for (ClassId c : sigma.of_int(ctx.group().order()))
    if (!condition_t(ctx, primes_of_class(sigma, ctx.group().order(), c))) {
      t_conditions = false;
      break;
    }
  bool chief_ok = true;
  for (const auto& f : ctx.chief().factors)
    if (!sigma.is_primary_int(f.order) && !f.simple) {
      chief_ok = false;
      break;
    }
  t.details["t_conditions"] = t_conditions;
  t.details["non_sigma_primary_chief_factors_simple"] = chief_ok;
  t.conditions = t_conditions && chief_ok;
  t.implied = t.hypothesis ? to_verdict(t.conditions) : Verdict::kUndefined;
  return t;
}

TheoremCheck theorem5_8_check(GroupCtx& ctx) {
  const SigmaPartition sigma1 = SigmaPartition::sigma1();
  TheoremCheck t;
  t.name = "5.8";
  t.hypothesis = true;

  Subgroup d = ctx.residual(FormationId::kSoluble, sigma1);
  t.details["D"] = subgroup_json(d);

  GroupCtx& q = ctx.quotient_ctx(d);
  bool cond_i = is_m_group(q);
  t.details["i_quotient_M_group"] = cond_i;

  ComplexConditions cc = complex_scaffold(ctx, sigma1, d);
  bool cond_ii = cc.has_complex;
  t.details["ii_robinson_complex"] = cond_ii;
  if (!cc.complex_fail.empty()) t.details["complex_failure"] = cc.complex_fail;

  bool cond_iii = true;
  if (!d.is_trivial() && cc.complex) {
    auto pi_d = prime_factors(d.order());
    auto pi_g = prime_factors(ctx.group().order());
    std::vector<GroupCtx*> targets{&ctx};
    for (const auto& ker : cc.quotient_kernels) targets.push_back(&ctx.quotient_ctx(ker));
    for (GroupCtx* tc : targets) {
      for (std::uint64_t p : prime_factors(cc.complex->z.order()))
        if (!condition_N(*tc, {p})) {
          cond_iii = false;
          break;
        }
      if (!cond_iii) break;
      for (std::uint64_t p : pi_d)
        if (!condition_P(*tc, {p})) {
          cond_iii = false;
          break;
        }
      if (!cond_iii) break;
      for (std::uint64_t p : pi_g) {
        for (std::uint64_t qq : pi_g) {
          if (p == qq) continue;
          bool touches_d =
              std::find(pi_d.begin(), pi_d.end(), p) != pi_d.end() ||
              std::find(pi_d.begin(), pi_d.end(), qq) != pi_d.end();
          if (!touches_d) continue;
          if (!condition_M(*tc, std::make_pair(p, qq))) {
            cond_iii = false;
            break;
          }
        }
        if (!cond_iii) break;
      }
      if (!cond_iii) break;
    }
  } else if (!d.is_trivial()) {
    cond_iii = false;
  }
  t.details["iii_N_P_M_conditions"] = cond_iii;

  t.conditions = cond_i && cond_ii && cond_iii;
  t.implied = to_verdict(t.conditions);
  return t;
}

TheoremCheck corollary2_17_check(GroupCtx& ctx, const SigmaPartition& sigma) {
  const Lattice& lat = ctx.lattice();
  SigmaView& sv = ctx.sigma_view(sigma);
  TheoremCheck t;
  t.name = "2.17";
  bool t_group = is_T(ctx);
  bool halls_dedekind = true;
  for (ClassId c : sigma.of_int(ctx.group().order())) {
    for (std::uint32_t h : sv.halls_of(lat.full_id(), c))
      if (!ctx.modular().dedekind(h)) {
        halls_dedekind = false;
        break;
      }
    if (!halls_dedekind) break;
  }
  t.details["T_group"] = t_group;
  t.details["hall_subgroups_dedekind"] = halls_dedekind;
  t.conditions = t_group && halls_dedekind;
  t.implied = to_verdict(t.conditions);
  return t;
}

TheoremCheck check_theorem(GroupCtx& ctx, const SigmaPartition& sigma,
                           const std::string& name) {
  if (name == "2.3") return theorem2_3_check(ctx, sigma);
  if (name == "2.17") return corollary2_17_check(ctx, sigma);
  if (name == "2.20") return theorem2_20_check(ctx, sigma);
  if (name == "3.5") return theorem3_5_check(ctx, sigma);
  if (name == "3.6") return theorem3_6_check(ctx, sigma);
  if (name == "3.19") return theorem3_19_check(ctx, sigma);
  if (name == "4.5") return theorem4_5_check(ctx, sigma);
  if (name == "5.3") return theorem5_3_check(ctx);
  if (name == "5.8") return theorem5_8_check(ctx);
  throw ParseError("unknown theorem name '" + name + "'");
}

std::vector<std::string> witness_generator_strings(const Subgroup& s) {
  std::vector<std::string> out;
  for (const auto& p : s.generator_perms()) out.push_back(p.cycle_string());
  if (out.empty()) out.push_back("()");
  return out;
}

PropertyResult classify_property(GroupCtx& ctx, const SigmaPartition& sigma,
                                 TransProperty p, const EngineOptions& opt) {
  PropertyResult r;
  Subgroup w;
  Subgroup* wp = &w;
  bool has_witness = false;
  switch (p) {
    case TransProperty::kT:
      r.verdict = to_verdict(is_T(ctx, wp));
      has_witness = r.verdict == Verdict::kFalse;
      break;
    case TransProperty::kPT:
      r.verdict = to_verdict(is_PT(ctx, opt, wp));
      has_witness = r.verdict == Verdict::kFalse;
      break;
    case TransProperty::kPST:
      r.verdict = to_verdict(is_PST(ctx, wp));
      has_witness = r.verdict == Verdict::kFalse;
      break;
    case TransProperty::kPsigmaT:
      r.verdict = is_PsigmaT(ctx, sigma, opt.psigmat, wp);
      has_witness = r.verdict == Verdict::kFalse;
      if (r.verdict == Verdict::kUndefined) r.details["not_sigma_full"] = true;
      break;
    case TransProperty::kQsigmaT:
      r.verdict = to_verdict(is_QsigmaT(ctx, sigma, opt, wp));
      has_witness = r.verdict == Verdict::kFalse;
      break;
    case TransProperty::kTsigma:
      r.verdict = to_verdict(is_T_sigma(ctx, sigma, wp));
      has_witness = r.verdict == Verdict::kFalse;
      break;
    case TransProperty::kMsigmaT:
      r.verdict = to_verdict(is_MsigmaT(ctx, sigma, opt, wp));
      has_witness = r.verdict == Verdict::kFalse;
      break;
    case TransProperty::kMT:
      r.verdict = to_verdict(is_MT(ctx, opt, wp));
      has_witness = r.verdict == Verdict::kFalse;
      break;
  }
  if (has_witness) r.witness = std::move(w);
  return r;
}

}  // namespace sigmalat
