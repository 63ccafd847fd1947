#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "braidmono/enumerate.hpp"

namespace braidmono {

/// One orbit of the simultaneous Sn-conjugation action on representations.
struct ConjugacyClassRecord {
  /// Lexicographically minimal member of the full Sn-orbit under the
  /// canonical (degree, sigma, a1, a2, b1, b2) serialization order.
  MonodromyRep representative;
  std::uint64_t orbit_size = 0;
  std::uint64_t stabilizer_order = 0;  // orbit_size * stabilizer_order = n!
  /// Serialized orbit members (rep_key form), collected at small degree only.
  std::vector<std::string> member_keys;
};

enum class ClosurePolicy {
  /// Close fixed-sigma inputs under conjugation first; require closure for
  /// inputs with varying sigma.
  Auto,
  /// Error as soon as an orbit computation leaves the input set.
  RequireClosed,
  /// Extend the input with missing orbit members.
  Close,
};

struct ClassifyOptions {
  ClosurePolicy policy = ClosurePolicy::Auto;
  /// Through this degree, orbits of fixed-sigma inputs are materialized by
  /// explicit closure over all transpositions; beyond it they are computed
  /// inside the centralizer of (1 2) and scaled by n(n-1)/2, which avoids
  /// materializing the full orbit set at large degree.
  int explicit_closure_max_degree = 6;
  /// member_keys are collected up to this degree.
  int collect_members_max_degree = 4;
};

struct ClosureError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Partitions the solutions into conjugacy orbits. All inputs must share one
/// degree; duplicates are merged. Orbit records come back sorted by
/// representative, independent of input order.
std::vector<ConjugacyClassRecord> classify(const std::vector<MonodromyRep>& solutions,
                                           const ClassifyOptions& options = {});

/// Surface invariants of the branched covering attached to a class: chi is
/// always 1 and K^2 = 10 - n; the covering is Galois iff the monodromy image
/// is transitive of order n; general type holds for 2 <= n <= 9.
struct SurfaceReport {
  int degree = 0;
  int chi = 1;
  int k_squared = 0;
  bool galois = false;
  std::uint64_t image_order = 0;
  bool image_transitive = false;
  bool general_type_claimed = false;
};

SurfaceReport surface_report(const ConjugacyClassRecord& record);

struct TableRow {
  int degree = 0;
  std::uint64_t total = 0;        // over all transpositions
  std::uint64_t fixed_sigma = 0;  // with sigma = (1 2)
  std::uint64_t class_count = 0;
  int k_squared = 0;
  double enumerate_seconds = 0.0;
  double classify_seconds = 0.0;
};

/// Runs enumerate + classify for every degree 2..max_degree.
std::vector<TableRow> table_report(int max_degree, int worker_count = 1);

}  // namespace braidmono
