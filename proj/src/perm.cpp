#include "sigmalat/perm.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "sigmalat/error.hpp"

namespace sigmalat {

Permutation::Permutation(std::vector<std::uint16_t> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (std::uint16_t v : images_) {
    if (v >= images_.size() || seen[v])
      throw ParseError("image table is not a bijection on {0.." +
                       std::to_string(images_.size() - 1) + "}");
    seen[v] = true;
  }
}

Permutation Permutation::identity(unsigned degree) {
  std::vector<std::uint16_t> img(degree);
  std::iota(img.begin(), img.end(), 0);
  Permutation p;
  p.images_ = std::move(img);
  return p;
}

Permutation Permutation::from_cycles(
    unsigned degree, const std::vector<std::vector<std::uint16_t>>& cycles) {
  Permutation p = identity(degree);
  std::vector<bool> used(degree, false);
  for (const auto& cyc : cycles) {
    for (std::size_t i = 0; i < cyc.size(); ++i) {
      std::uint16_t a = cyc[i];
      std::uint16_t b = cyc[(i + 1) % cyc.size()];
      if (a >= degree) throw ParseError("cycle point " + std::to_string(a + 1) + " out of range");
      if (used[a]) throw ParseError("non-disjoint cycles: point " + std::to_string(a + 1) + " repeated");
      used[a] = true;
      p.images_[a] = b;
    }
  }
  return p;
}

bool Permutation::is_identity() const {
  for (unsigned i = 0; i < degree(); ++i)
    if (images_[i] != i) return false;
  return true;
}

Permutation Permutation::operator*(const Permutation& other) const {
  Permutation r;
  r.images_.resize(images_.size());
  for (unsigned i = 0; i < degree(); ++i) r.images_[i] = other.images_[images_[i]];
  return r;
}

Permutation Permutation::inverse() const {
  Permutation r;
  r.images_.resize(images_.size());
  for (unsigned i = 0; i < degree(); ++i) r.images_[images_[i]] = static_cast<std::uint16_t>(i);
  return r;
}

Permutation Permutation::conjugate_by(const Permutation& g) const {
  return g.inverse() * (*this) * g;
}

std::vector<std::vector<std::uint16_t>> Permutation::cycles() const {
  std::vector<std::vector<std::uint16_t>> out;
  std::vector<bool> seen(degree(), false);
  for (unsigned i = 0; i < degree(); ++i) {
    if (seen[i] || images_[i] == i) continue;
    std::vector<std::uint16_t> cyc;
    std::uint16_t x = static_cast<std::uint16_t>(i);
    while (!seen[x]) {
      seen[x] = true;
      cyc.push_back(x);
      x = images_[x];
    }
    out.push_back(std::move(cyc));
  }
  return out;
}

std::string Permutation::cycle_string() const {
  auto cyc = cycles();
  if (cyc.empty()) return "()";
  std::ostringstream os;
  for (const auto& c : cyc) {
    os << '(';
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (i) os << ' ';
      os << (c[i] + 1);
    }
    os << ')';
  }
  return os.str();
}

std::uint64_t perm_order(const Permutation& p) {
  std::uint64_t n = 1;
  for (const auto& c : p.cycles()) n = std::lcm(n, static_cast<std::uint64_t>(c.size()));
  return n;
}

Permutation parse_cycles(unsigned degree, const std::string& text) {
  std::vector<std::vector<std::uint16_t>> cycles;
  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && (text[i] == ' ' || text[i] == '\t')) ++i;
  };
  skip_ws();
  if (i >= text.size()) throw ParseError("expected cycle notation");
  while (i < text.size()) {
    skip_ws();
    if (i >= text.size()) break;
    if (text[i] != '(') throw ParseError("expected '(' in cycle notation");
    ++i;
    std::vector<std::uint16_t> cyc;
    while (true) {
      skip_ws();
      if (i < text.size() && text[i] == ',') { ++i; continue; }
      if (i >= text.size()) throw ParseError("unterminated cycle");
      if (text[i] == ')') { ++i; break; }
      if (!isdigit(static_cast<unsigned char>(text[i])))
        throw ParseError("unexpected character in cycle: '" + std::string(1, text[i]) + "'");
      unsigned long v = 0;
      while (i < text.size() && isdigit(static_cast<unsigned char>(text[i]))) {
        v = v * 10 + static_cast<unsigned long>(text[i] - '0');
        ++i;
      }
      if (v == 0 || v > degree)
        throw ParseError("cycle point " + std::to_string(v) + " out of range 1.." +
                         std::to_string(degree));
      cyc.push_back(static_cast<std::uint16_t>(v - 1));
    }
    if (!cyc.empty()) cycles.push_back(std::move(cyc));
  }
  skip_ws();
  if (i != text.size()) throw ParseError("trailing characters after cycles");
  // from_cycles enforces disjointness.
  return Permutation::from_cycles(degree, cycles);
}

}  // namespace sigmalat
