#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace braidmono {

/// A permutation of {1..n}. Points are stored 0-based internally (img_[i] is
/// the image of point i); every textual surface (one-line form, cycle
/// notation, diagnostics) is 1-based.
///
/// Composition convention, fixed project-wide: compose(p, q) means
/// "apply p, then q", so compose(p, q)[i] = q[p[i]].
class Perm {
public:
  Perm() = default;  // degree-0 placeholder; factories below enforce degree >= 1

  static Perm identity(int degree);

  /// Builds from 0-based images; throws std::invalid_argument unless the
  /// sequence is a bijection of {0..n-1} with n >= 1.
  static Perm from_images(std::vector<int> images);

  /// Parses the one-line text form, e.g. "[2,1,3]" for the transposition
  /// (1 2) in S3. Rejects non-bijections.
  static Perm from_one_line(const std::string& text);

  /// The transposition exchanging 0-based points i and j.
  static Perm transposition(int degree, int i, int j);

  int degree() const { return static_cast<int>(img_.size()); }
  int operator[](int point) const { return img_[point]; }
  const std::vector<int>& images() const { return img_; }

  bool is_identity() const;

  /// One-line form with 1-based labels: "[2,1,3]".
  std::string to_one_line() const;

  /// Cycle notation with 1-based labels: "(1 2)(3 4 5)"; "()" for the identity.
  std::string cycle_notation() const;

  friend bool operator==(const Perm&, const Perm&) = default;
  friend std::strong_ordering operator<=>(const Perm&, const Perm&) = default;

private:
  explicit Perm(std::vector<int> img) : img_(std::move(img)) {}
  std::vector<int> img_;
};

/// p then q. Throws on degree mismatch.
Perm compose(const Perm& p, const Perm& q);

Perm inverse(const Perm& p);

/// g^-1 p g under the fixed convention; preserves cycle type.
Perm conjugate(const Perm& p, const Perm& g);

/// p^e by repeated multiplication; e may be negative or zero.
Perm power(const Perm& p, int e);

/// [x, y] = x y x^-1 y^-1 (the project-wide commutator convention).
Perm commutator(const Perm& x, const Perm& y);

/// Cycle lengths in decreasing order, fixed points included; sums to degree.
using CycleType = std::vector<int>;

CycleType cycle_type(const Perm& p);

/// True iff exactly two points move and they swap.
bool is_transposition(const Perm& p);

/// Orbit of a 0-based point under a generator set (BFS over the generators;
/// this equals the orbit under the generated group). Sorted ascending.
std::vector<int> orbit_of_point(const std::vector<Perm>& gens, int point);

struct GroupSummary {
  std::uint64_t order = 1;
  bool transitive = false;
  std::uint64_t point_stabilizer_order = 1;  // stabilizer of point 1 (internal 0)
};

/// Order, transitivity and point-1 stabilizer order of the subgroup generated
/// by `gens`. The order is computed exactly through a stabilizer chain with
/// base (1, 2, ..., n); empty generator lists and mixed degrees are rejected.
GroupSummary summarize_generated_group(const std::vector<Perm>& gens);

/// n! as uint64; throws for n > 20 (would overflow).
std::uint64_t factorial(int n);

}  // namespace braidmono
