#pragma once

#include <array>
#include <chrono>
#include <cstdint>
#include <filesystem>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "braidmono/perm.hpp"
#include "braidmono/presentation.hpp"

namespace braidmono {

/// A candidate or confirmed monodromy representation: one permutation per
/// generator. Plain data; validity (the eleven relations, sigma a
/// transposition, transitive joint image) is checked by verify() and
/// guaranteed for everything emitted by enumerate().
struct MonodromyRep {
  int degree = 0;
  // Member order matters: the canonical comparison and serialization order
  // is (degree, sigma, a1, a2, b1, b2).
  Perm sigma, a1, a2, b1, b2;

  Assignment to_assignment() const { return Assignment(a1, a2, b1, b2, sigma); }

  friend bool operator==(const MonodromyRep&, const MonodromyRep&) = default;
  friend std::strong_ordering operator<=>(const MonodromyRep&, const MonodromyRep&) = default;
};

/// Canonical text key "n sigma a1 a2 b1 b2" using one-line permutation forms;
/// lexicographic key order matches MonodromyRep::operator<=> for a fixed degree.
std::string rep_key(const MonodromyRep& rep);

/// FNV-1a 64 over rep_key; used for orbit dedup and checkpoint digests.
std::uint64_t rep_digest(const MonodromyRep& rep);

struct SearchConfig {
  int degree = 0;
  /// true: search only sigma = (1 2) and scale the total by n(n-1)/2;
  /// false: search every transposition independently.
  bool fix_sigma = true;
  int worker_count = 1;
  /// Completed partitions between checkpoint flushes.
  int checkpoint_interval = 64;
  /// Soft cap on emitted solutions: the search stops claiming new partitions
  /// once reached, so truncation happens at partition boundaries and the
  /// emitted set stays the exact union of fully processed partitions.
  std::optional<std::uint64_t> limit;
  /// Empty = no checkpointing. enumerate() refuses an existing file
  /// (resume() continues one).
  std::filesystem::path checkpoint_path;
  /// Called after every completed partition (serialized by the result lock).
  std::function<void(std::uint64_t done, std::uint64_t total, std::uint64_t solutions)>
      on_progress;
};

struct EnumerationResult {
  int degree = 0;
  bool fix_sigma = true;
  /// Count over all transpositions. In fixed-sigma mode this is
  /// fixed_sigma_count * n(n-1)/2 (exact by conjugation stability).
  std::uint64_t total_count = 0;
  /// Count of solutions with sigma = (1 2), including partitions replayed
  /// from a checkpoint.
  std::uint64_t fixed_sigma_count = 0;
  /// Solutions emitted by this run. Partitions already recorded in a resumed
  /// checkpoint are not re-emitted; across the resume boundary each solution
  /// is emitted exactly once.
  std::vector<MonodromyRep> solutions;
  std::chrono::duration<double> elapsed{0};
  /// false when a limit stopped the run before all partitions were processed.
  bool complete = false;
};

struct CheckpointError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// All x in Sn satisfying the R2 relation for the given branching image:
/// s^-1 x s^-1 x = x s^-1 x s^-1. Every generator image of a valid
/// representation lies in this set, so it is the sound per-generator
/// prefilter of the search. Requires sigma to be a transposition.
std::vector<Perm> r2_candidates(const Perm& sigma);

/// Exhaustive pruned enumeration of all generic monodromy representations of
/// the given degree. See README for the search design.
EnumerationResult enumerate(const SearchConfig& config);

struct ResumeOptions {
  int worker_count = 1;
  int checkpoint_interval = 64;
  std::optional<std::uint64_t> limit;
  std::function<void(std::uint64_t, std::uint64_t, std::uint64_t)> on_progress;
};

/// Continues an interrupted enumeration from its checkpoint file. Degree,
/// mode and convention tags come from the header and must match this build;
/// any mismatch or corruption is a CheckpointError.
EnumerationResult resume(const std::filesystem::path& checkpoint_path,
                         const ResumeOptions& options = {});

struct CheckpointInfo {
  int degree = 0;
  bool fix_sigma = true;
  std::size_t partitions = 0;
  std::size_t completed = 0;
};

/// Header + completion summary of a checkpoint file, without running anything.
CheckpointInfo checkpoint_info(const std::filesystem::path& checkpoint_path);

/// Unpruned reference enumeration: every |Sn|^5 assignment is tested with the
/// generic word evaluator. Rejects degree > 3 (cost grows as |Sn|^5); exists
/// to certify the pruned enumerator at small degree.
EnumerationResult brute_force_oracle(int degree);

struct VerifyReport {
  std::array<bool, kRelationCount> relations{};
  bool sigma_is_transposition = false;
  bool transitive = false;

  bool pass() const;
  /// Names of failing checks: relation tags plus "sigma-not-transposition" /
  /// "not-transitive".
  std::vector<std::string> failure_names() const;
};

/// Re-checks a representation through the generic word evaluator plus the
/// genericity and transitivity predicates; independent of the enumerator's
/// pruned search path.
VerifyReport verify(const MonodromyRep& rep);

/// n(n-1)/2, the number of transpositions in Sn.
std::uint64_t transposition_count(int degree);

}  // namespace braidmono
