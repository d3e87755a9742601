#ifndef SIGMALAT_PERM_HPP
#define SIGMALAT_PERM_HPP

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace sigmalat {

// Permutation of {0..degree-1} as an image table. Composition uses the
// right-action convention: (a * b)(x) = b(a(x)), i.e. apply a first, so that
// x^(ab) = (x^a)^b and conjugation reads a^g = g^-1 * a * g.
class Permutation {
public:
  Permutation() = default;
  explicit Permutation(std::vector<std::uint16_t> images);

  static Permutation identity(unsigned degree);
  // Points are 0-based here; cycle I/O below is the 1-based external format.
  static Permutation from_cycles(unsigned degree,
                                 const std::vector<std::vector<std::uint16_t>>& cycles);

  unsigned degree() const { return static_cast<unsigned>(images_.size()); }
  std::uint16_t operator[](unsigned point) const { return images_[point]; }
  const std::vector<std::uint16_t>& images() const { return images_; }

  bool is_identity() const;

  Permutation operator*(const Permutation& other) const;
  Permutation inverse() const;
  Permutation conjugate_by(const Permutation& g) const;  // g^-1 * this * g

  // Disjoint cycles over moved points, each cycle starting at its least point,
  // cycles ordered by least point.
  std::vector<std::vector<std::uint16_t>> cycles() const;
  // 1-indexed cycle string, "()" for the identity.
  std::string cycle_string() const;

  friend bool operator==(const Permutation& a, const Permutation& b) = default;
  friend std::strong_ordering operator<=>(const Permutation& a, const Permutation& b) {
    return a.images_ <=> b.images_;
  }

private:
  std::vector<std::uint16_t> images_;
};

// Order of the permutation as an abstract element (lcm of cycle lengths).
std::uint64_t perm_order(const Permutation& p);

// Parses "(1 2 3)(4 5)" (1-indexed, disjoint). Commas also accepted as
// separators. Throws ParseError on overlap or out-of-range points.
Permutation parse_cycles(unsigned degree, const std::string& text);

}  // namespace sigmalat

#endif
