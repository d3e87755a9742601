#ifndef SIGMALAT_CLASSIFY_HPP
#define SIGMALAT_CLASSIFY_HPP

#include <optional>
#include <string>
#include <utility>

#include "json.hpp"
#include "sigmalat/context.hpp"

namespace sigmalat {

using ordered_json = nlohmann::ordered_json;

enum class Verdict { kFalse = 0, kTrue = 1, kUndefined = 2 };
inline Verdict to_verdict(bool b) { return b ? Verdict::kTrue : Verdict::kFalse; }

enum class TransProperty { kT, kPT, kPST, kPsigmaT, kQsigmaT, kTsigma, kMsigmaT, kMT };
const char* property_name(TransProperty p);
std::optional<TransProperty> property_from_name(const std::string& name);

enum class PsigmaTMode { kSubnormal, kTransitive };

// Strategy selection; --oracle flips everything to the slow definitional side.
struct EngineOptions {
  ModularStrategy modular = ModularStrategy::kReduced;
  QuasinormalStrategy quasi = QuasinormalStrategy::kCyclic;
  PsigmaTMode psigmat = PsigmaTMode::kSubnormal;
  static EngineOptions oracle() {
    return {ModularStrategy::kDirect, QuasinormalStrategy::kFull, PsigmaTMode::kTransitive};
  }
};

struct PropertyResult {
  Verdict verdict = Verdict::kUndefined;
  std::optional<Subgroup> witness;  // canonically least offender when false
  ordered_json details;             // per-condition flags for theorem-backed checks
};

PropertyResult classify_property(GroupCtx& ctx, const SigmaPartition& sigma,
                                 TransProperty p, const EngineOptions& opt = {});

// Subgroup functors (the three instances the theory is run at).
enum class FunctorId { kNormal, kModular, kSigmaPermutable };
const char* functor_name(FunctorId f);
bool functor_holds(GroupCtx& ctx, const SigmaPartition& sigma, FunctorId tau,
                   std::uint32_t a, std::uint32_t ambient);

bool sigma_quasinormal(GroupCtx& ctx, const SigmaPartition& sigma, std::uint32_t a,
                       std::uint32_t ambient);
// Chain of sigma-quasinormal steps; one reach closure answers all ambients.
std::vector<Bitset> sigma_quasi_reach(GroupCtx& ctx, const SigmaPartition& sigma);
bool sigma_subquasinormal(GroupCtx& ctx, const SigmaPartition& sigma, std::uint32_t a,
                          std::uint32_t ambient);

// Direct deciders.
bool is_T(GroupCtx& ctx, Subgroup* witness = nullptr);
bool is_PT(GroupCtx& ctx, const EngineOptions& opt = {}, Subgroup* witness = nullptr);
bool is_PST(GroupCtx& ctx, Subgroup* witness = nullptr);
Verdict is_PsigmaT(GroupCtx& ctx, const SigmaPartition& sigma,
                   PsigmaTMode mode = PsigmaTMode::kSubnormal, Subgroup* witness = nullptr);
bool is_QsigmaT(GroupCtx& ctx, const SigmaPartition& sigma, const EngineOptions& opt = {},
                Subgroup* witness = nullptr);
bool is_T_sigma(GroupCtx& ctx, const SigmaPartition& sigma, Subgroup* witness = nullptr);
bool is_MsigmaT(GroupCtx& ctx, const SigmaPartition& sigma, const EngineOptions& opt = {},
                Subgroup* witness = nullptr);
bool is_MT(GroupCtx& ctx, const EngineOptions& opt = {}, Subgroup* witness = nullptr);

bool is_dedekind(GroupCtx& ctx);
bool is_iwasawa(GroupCtx& ctx);
bool is_m_group(GroupCtx& ctx);
bool is_sigma_permutable_sub(GroupCtx& ctx, const SigmaPartition& sigma, const Subgroup& a);
bool is_sigma_subnormal_sub(GroupCtx& ctx, const SigmaPartition& sigma, const Subgroup& a,
                            std::vector<Subgroup>* chain = nullptr);

// Robinson sigma-complex.
struct RobinsonComplex {
  Subgroup d;
  Subgroup z;
  std::vector<Subgroup> u;
};
std::optional<RobinsonComplex> robinson_complex(GroupCtx& ctx, const SigmaPartition& sigma,
                                                const Subgroup* d_opt = nullptr,
                                                std::string* fail_reason = nullptr);

// Quotient conditions, each quantified over all soluble normal subgroups.
bool condition_N(GroupCtx& ctx, const std::vector<std::uint64_t>& pi);
bool condition_P(GroupCtx& ctx, const std::vector<std::uint64_t>& pi, bool require_all = true);
bool condition_t(GroupCtx& ctx, const std::vector<std::uint64_t>& pi);
// M_P when pq is empty; M_{p,q} with the base/top primes pinned otherwise.
bool condition_M(GroupCtx& ctx, std::optional<std::pair<std::uint64_t, std::uint64_t>> pq);

struct TheoremCheck {
  std::string name;
  bool hypothesis = true;
  bool conditions = false;
  Verdict implied = Verdict::kUndefined;  // what the theorem concludes when it applies
  ordered_json details;
};

TheoremCheck theorem2_3_check(GroupCtx& ctx, const SigmaPartition& sigma);
TheoremCheck theorem2_11_check(GroupCtx& ctx, const SigmaPartition& sigma, FunctorId tau);
TheoremCheck theorem2_20_check(GroupCtx& ctx, const SigmaPartition& sigma);
TheoremCheck theorem3_5_check(GroupCtx& ctx, const SigmaPartition& sigma);
TheoremCheck theorem3_6_check(GroupCtx& ctx, const SigmaPartition& sigma);
TheoremCheck theorem3_19_check(GroupCtx& ctx, const SigmaPartition& sigma);
TheoremCheck theorem4_5_check(GroupCtx& ctx, const SigmaPartition& sigma);
TheoremCheck theorem5_3_check(GroupCtx& ctx);
TheoremCheck theorem5_8_check(GroupCtx& ctx);
TheoremCheck corollary2_17_check(GroupCtx& ctx, const SigmaPartition& sigma);
// Dispatch by the paper-facing name ("2.3", "2.20", "3.5", "3.6", "3.19",
// "4.5", "5.3", "5.8", "2.17").
TheoremCheck check_theorem(GroupCtx& ctx, const SigmaPartition& sigma,
                           const std::string& name);

std::vector<std::string> witness_generator_strings(const Subgroup& s);

}  // namespace sigmalat

#endif
