#include "sigmalat/sigma.hpp"

#include <algorithm>
#include <deque>
#include <sstream>

namespace sigmalat {

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      out.push_back(p);
      while (n % p == 0) n /= p;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

namespace {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

}  // namespace

SigmaPartition::SigmaPartition(std::vector<std::vector<std::uint64_t>> classes,
                               LeftoverPolicy policy)
    : classes_(std::move(classes)), policy_(policy) {
  for (auto& cls : classes_) {
    if (cls.empty()) throw ParseError("sigma class must not be empty");
    std::sort(cls.begin(), cls.end());
    cls.erase(std::unique(cls.begin(), cls.end()), cls.end());
    for (std::uint64_t p : cls)
      if (!is_prime(p)) throw ParseError("sigma class member " + std::to_string(p) + " is not prime");
  }
  std::sort(classes_.begin(), classes_.end());
  for (std::size_t i = 0; i + 1 < classes_.size(); ++i)
    for (std::uint64_t p : classes_[i])
      for (std::size_t j = i + 1; j < classes_.size(); ++j)
        if (std::binary_search(classes_[j].begin(), classes_[j].end(), p))
          throw ParseError("sigma classes are not disjoint at prime " + std::to_string(p));
}

SigmaPartition SigmaPartition::sigma_pi(std::vector<std::uint64_t> primes) {
  return SigmaPartition({std::move(primes)}, LeftoverPolicy::kOneClass);
}

ClassId SigmaPartition::class_of(std::uint64_t p) const {
  for (std::size_t i = 0; i < classes_.size(); ++i)
    if (std::binary_search(classes_[i].begin(), classes_[i].end(), p))
      return static_cast<ClassId>(i);
  if (policy_ == LeftoverPolicy::kOneClass) return kRestClass;
  return static_cast<ClassId>(classes_.size()) + static_cast<ClassId>(p);
}

std::string SigmaPartition::class_name(ClassId c) const {
  if (c == kRestClass) return "rest";
  if (c < static_cast<ClassId>(classes_.size())) {
    std::ostringstream os;
    os << '{';
    const auto& cls = classes_[static_cast<std::size_t>(c)];
    for (std::size_t i = 0; i < cls.size(); ++i) {
      if (i) os << ',';
      os << cls[i];
    }
    os << '}';
    return os.str();
  }
  return "{" + std::to_string(c - static_cast<ClassId>(classes_.size())) + "}";
}

std::vector<ClassId> SigmaPartition::of_int(std::uint64_t n) const {
  std::vector<ClassId> out;
  for (std::uint64_t p : prime_factors(n)) out.push_back(class_of(p));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::uint64_t SigmaPartition::class_part(std::uint64_t n, ClassId c) const {
  std::uint64_t part = 1;
  for (std::uint64_t p : prime_factors(n))
    if (class_of(p) == c) part *= p_part(n, p);
  return part;
}

std::vector<std::uint64_t> SigmaPartition::class_primes(std::uint64_t n, ClassId c) const {
  std::vector<std::uint64_t> out;
  for (std::uint64_t p : prime_factors(n))
    if (class_of(p) == c) out.push_back(p);
  return out;
}

namespace {

std::vector<std::vector<std::uint64_t>> parse_class_list(const std::string& text,
                                                         std::size_t& i) {
  auto fail = [&](const std::string& m) { throw ParseError("sigma spec: " + m); };
  std::vector<std::vector<std::uint64_t>> classes;
  if (i >= text.size() || text[i] != '[') fail("expected '['");
  ++i;
  while (i < text.size() && text[i] != ']') {
    if (text[i] == ',') { ++i; continue; }
    if (text[i] != '[') fail("expected inner '['");
    ++i;
    std::vector<std::uint64_t> cls;
    while (i < text.size() && text[i] != ']') {
      if (text[i] == ',') { ++i; continue; }
      if (!isdigit(static_cast<unsigned char>(text[i]))) fail("expected prime");
      std::uint64_t v = 0;
      while (i < text.size() && isdigit(static_cast<unsigned char>(text[i])))
        v = v * 10 + static_cast<std::uint64_t>(text[i++] - '0');
      cls.push_back(v);
    }
    if (i >= text.size()) fail("unterminated class");
    ++i;  // ']'
    classes.push_back(std::move(cls));
  }
  if (i >= text.size()) fail("unterminated class list");
  ++i;  // ']'
  return classes;
}

}  // namespace

SigmaPartition SigmaPartition::parse(const std::string& raw) {
  std::string spec;
  for (char c : raw)
    if (c != ' ' && c != '\t') spec.push_back(c);
  if (spec == "sigma1") return sigma1();
  if (spec.rfind("pi:", 0) == 0) {
    std::string wrapped = "[" + spec.substr(3) + "]";
    std::size_t i = 0;
    auto classes = parse_class_list(wrapped, i);
    if (i != wrapped.size() || classes.size() != 1)
      throw ParseError("sigma spec: malformed pi class");
    return SigmaPartition(std::move(classes), LeftoverPolicy::kOneClass);
  }
  std::vector<std::vector<std::uint64_t>> classes;
  std::optional<LeftoverPolicy> policy;
  std::size_t i = 0;
  while (i < spec.size()) {
    if (spec[i] == ';') { ++i; continue; }
    if (spec.rfind("classes=", i) == i) {
      i += 8;
      classes = parse_class_list(spec, i);
    } else if (spec.rfind("rest=", i) == i) {
      i += 5;
      std::size_t j = spec.find(';', i);
      std::string v = spec.substr(i, j == std::string::npos ? std::string::npos : j - i);
      if (v == "singletons") policy = LeftoverPolicy::kSingletons;
      else if (v == "one-class") policy = LeftoverPolicy::kOneClass;
      else throw ParseError("sigma spec: unknown rest policy '" + v + "'");
      i = j == std::string::npos ? spec.size() : j;
    } else {
      throw ParseError("sigma spec: unexpected token at '" + spec.substr(i) + "'");
    }
  }
  if (!policy) throw ParseError("sigma spec: missing rest= policy");
  return SigmaPartition(std::move(classes), *policy);
}

std::string SigmaPartition::canonical() const {
  if (classes_.empty() && policy_ == LeftoverPolicy::kSingletons) return "sigma1";
  std::ostringstream os;
  if (classes_.size() == 1 && policy_ == LeftoverPolicy::kOneClass) {
    os << "pi:[";
    for (std::size_t i = 0; i < classes_[0].size(); ++i) {
      if (i) os << ',';
      os << classes_[0][i];
    }
    os << ']';
    return os.str();
  }
  os << "classes=[";
  for (std::size_t c = 0; c < classes_.size(); ++c) {
    if (c) os << ',';
    os << '[';
    for (std::size_t i = 0; i < classes_[c].size(); ++i) {
      if (i) os << ',';
      os << classes_[c][i];
    }
    os << ']';
  }
  os << "];rest=" << (policy_ == LeftoverPolicy::kOneClass ? "one-class" : "singletons");
  return os.str();
}

bool is_sigma_primary(const SigmaPartition& sigma, const Group& g) {
  return sigma.is_primary_int(g.order());
}

bool is_sigma_nilpotent(const SigmaPartition& sigma, const Group& g) {
  return is_sigma_nilpotent(sigma, g, normal_subgroups(g));
}

bool is_sigma_nilpotent(const SigmaPartition& sigma, const Group& g,
                        const std::vector<Subgroup>& normals) {
  for (ClassId c : sigma.of_int(g.order())) {
    std::uint64_t part = sigma.class_part(g.order(), c);
    bool found = false;
    for (const auto& n : normals)
      if (n.order() == part) {
        found = true;
        break;
      }
    if (!found) return false;
  }
  return true;
}

bool is_sigma_full(const SigmaPartition& sigma, const Lattice& lat) {
  std::uint64_t n = lat.group().order();
  for (ClassId c : sigma.of_int(n))
    if (lat.subgroups_of_order(sigma.class_part(n, c)).empty()) return false;
  return true;
}

std::vector<Subgroup> hall_subgroups(const SigmaPartition& sigma, const Lattice& lat,
                                     ClassId c) {
  std::vector<Subgroup> out;
  for (std::uint32_t id :
       lat.subgroups_of_order(sigma.class_part(lat.group().order(), c)))
    out.push_back(lat.at(id));
  return out;
}

Subgroup o_pi_primes(const Group& g, const std::vector<std::uint64_t>& primes,
                     const std::vector<Subgroup>& normals) {
  const Subgroup* best = nullptr;
  for (const auto& n : normals) {
    auto fs = prime_factors(n.order());
    bool ok = true;
    for (std::uint64_t p : fs)
      if (std::find(primes.begin(), primes.end(), p) == primes.end()) {
        ok = false;
        break;
      }
    if (ok && (!best || n.order() > best->order())) best = &n;
  }
  return best ? *best : trivial_subgroup(g);
}

Subgroup o_pi_classes(const SigmaPartition& sigma, const Group& g,
                      const std::vector<ClassId>& classes,
                      const std::vector<Subgroup>& normals) {
  std::vector<std::uint64_t> primes;
  for (std::uint64_t p : prime_factors(g.order()))
    if (std::find(classes.begin(), classes.end(), sigma.class_of(p)) != classes.end())
      primes.push_back(p);
  return o_pi_primes(g, primes, normals);
}

Subgroup o_upper_pi(const SigmaPartition& sigma, const Group& g,
                    const std::vector<ClassId>& classes) {
  std::vector<std::uint32_t> gens;
  for (std::uint32_t x = 0; x < g.order(); ++x) {
    auto cs = sigma.of_int(g.element_order(x));
    bool misses = true;
    for (ClassId c : cs)
      if (std::find(classes.begin(), classes.end(), c) != classes.end()) {
        misses = false;
        break;
      }
    if (misses) gens.push_back(x);
  }
  return generated_subgroup(g, gens);
}

SigmaView::SigmaView(const Lattice& lat, SigmaPartition sigma)
    : lat_(&lat), sigma_(std::move(sigma)) {
  sp_memo_.assign(static_cast<std::size_t>(lat.size()) * lat.size(), -1);
  full_memo_.assign(lat.size(), -1);
  halls_memo_.assign(lat.size(), {});
}

bool SigmaView::step_ok(std::uint32_t k, std::uint32_t h) const {
  if (lat_->normal_in(k, h)) return true;
  std::uint32_t c = lat_->core_in(k, h);
  return sigma_.is_primary_int(lat_->order_of(h) / lat_->order_of(c));
}

void SigmaView::ensure_reach() const {
  if (!reach_.empty()) return;
  const std::uint32_t s = lat_->size();
  reach_.assign(s, Bitset(s));
  for (std::uint32_t i = s; i-- > 0;) {
    reach_[i].set(i);
    const Bitset& ups = lat_->filter(i);
    for (std::size_t j = ups.find_next(i); j != Bitset::npos; j = ups.find_next(j)) {
      if (reach_[i].test(j)) continue;  // already reachable through a smaller hop
      if (step_ok(i, static_cast<std::uint32_t>(j)))
        reach_[i] |= reach_[j];
    }
  }
}

void SigmaView::ensure_snorm_reach() const {
  if (!snorm_reach_.empty()) return;
  const std::uint32_t s = lat_->size();
  snorm_reach_.assign(s, Bitset(s));
  for (std::uint32_t i = s; i-- > 0;) {
    snorm_reach_[i].set(i);
    const Bitset& ups = lat_->filter(i);
    for (std::size_t j = ups.find_next(i); j != Bitset::npos; j = ups.find_next(j)) {
      if (snorm_reach_[i].test(j)) continue;
      if (lat_->normal_in(i, static_cast<std::uint32_t>(j)))
        snorm_reach_[i] |= snorm_reach_[j];
    }
  }
}

bool SigmaView::sigma_subnormal(std::uint32_t a, std::uint32_t ambient) const {
  ensure_reach();
  return reach_[a].test(ambient);
}

bool SigmaView::subnormal(std::uint32_t a, std::uint32_t ambient) const {
  ensure_snorm_reach();
  return snorm_reach_[a].test(ambient);
}

std::optional<std::vector<std::uint32_t>> SigmaView::sigma_subnormal_chain(
    std::uint32_t a, std::uint32_t ambient) const {
  if (!sigma_subnormal(a, ambient)) return std::nullopt;
  // BFS in canonical order: shortest chain, least ids as tiebreak.
  std::vector<std::int32_t> parent(lat_->size(), -2);
  parent[a] = -1;
  std::deque<std::uint32_t> queue{a};
  while (!queue.empty()) {
    std::uint32_t k = queue.front();
    queue.pop_front();
    if (k == ambient) break;
    const Bitset& ups = lat_->filter(k);
    for (std::size_t j = ups.find_next(k); j != Bitset::npos; j = ups.find_next(j)) {
      if (!lat_->leq(static_cast<std::uint32_t>(j), ambient)) continue;
      if (parent[j] != -2) continue;
      if (step_ok(k, static_cast<std::uint32_t>(j))) {
        parent[j] = static_cast<std::int32_t>(k);
        queue.push_back(static_cast<std::uint32_t>(j));
      }
    }
  }
  std::vector<std::uint32_t> chain;
  std::int32_t cur = static_cast<std::int32_t>(ambient);
  while (cur != -1) {
    chain.push_back(static_cast<std::uint32_t>(cur));
    cur = parent[cur];
  }
  std::reverse(chain.begin(), chain.end());
  return chain;
}

std::vector<ClassId> SigmaView::classes_of(std::uint32_t sub) const {
  return sigma_.of_int(lat_->order_of(sub));
}

const std::vector<std::uint32_t>& SigmaView::halls_of(std::uint32_t sub, ClassId c) const {
  auto& row = halls_memo_[sub];
  for (auto& [cls, ids] : row)
    if (cls == c) return ids;
  std::uint64_t part = sigma_.class_part(lat_->order_of(sub), c);
  std::vector<std::uint32_t> ids;
  const Bitset& down = lat_->ideal(sub);
  for (std::size_t i = down.find_first(); i != Bitset::npos; i = down.find_next(i))
    if (lat_->order_of(static_cast<std::uint32_t>(i)) == part)
      ids.push_back(static_cast<std::uint32_t>(i));
  row.emplace_back(c, std::move(ids));
  return row.back().second;
}

bool SigmaView::sigma_full_sub(std::uint32_t sub) const {
  std::int8_t& memo = full_memo_[sub];
  if (memo >= 0) return memo == 1;
  bool ok = true;
  for (ClassId c : classes_of(sub))
    if (halls_of(sub, c).empty()) {
      ok = false;
      break;
    }
  memo = ok ? 1 : 0;
  return ok;
}

bool SigmaView::sigma_permutable(std::uint32_t a, std::uint32_t ambient) const {
  std::int8_t& memo = sp_memo_[static_cast<std::size_t>(a) * lat_->size() + ambient];
  if (memo >= 0) return memo == 1;
  bool ok;
  if (lat_->normal_in(a, ambient)) {
    ok = true;
  } else if (!sigma_full_sub(ambient)) {
    ok = false;
  } else {
    ok = true;
    for (ClassId c : classes_of(ambient)) {
      for (std::uint32_t h : halls_of(ambient, c))
        if (!lat_->permutes(a, h)) {
          ok = false;
          break;
        }
      if (!ok) break;
    }
  }
  memo = ok ? 1 : 0;
  return ok;
}

bool SigmaView::sigma_seminormal(std::uint32_t a, std::uint32_t ambient) const {
  const Group& g = lat_->group();
  auto sig_a = classes_of(a);
  for (std::uint32_t x : lat_->at(ambient).elems) {
    auto sig_x = sigma_.of_int(g.element_order(x));
    bool disjoint = true;
    for (ClassId c : sig_x)
      if (std::binary_search(sig_a.begin(), sig_a.end(), c)) {
        disjoint = false;
        break;
      }
    if (disjoint && lat_->conjugate_id(a, x) != a) return false;
  }
  return true;
}

bool SigmaView::s_permutable(std::uint32_t a, std::uint32_t ambient) const {
  std::uint64_t n = lat_->order_of(ambient);
  for (std::uint64_t p : prime_factors(n)) {
    std::uint64_t part = p_part(n, p);
    const Bitset& down = lat_->ideal(ambient);
    for (std::size_t i = down.find_first(); i != Bitset::npos; i = down.find_next(i))
      if (lat_->order_of(static_cast<std::uint32_t>(i)) == part &&
          !lat_->permutes(a, static_cast<std::uint32_t>(i)))
        return false;
  }
  return true;
}

}  // namespace sigmalat
