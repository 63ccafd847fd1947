#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "braidmono/classify.hpp"
#include "braidmono/enumerate.hpp"

namespace braidmono {

inline constexpr const char* kSchemaVersion = "1";

enum class Format { Jsonl, Csv };

Format parse_format(const std::string& name);  // "jsonl" | "csv"

/// One solution or class row in the wire formats. Permutations are carried
/// in the 1-based one-line text form ("[2,1,3]"); the class-level fields are
/// present only on classified records.
struct OutputRecord {
  std::string schema = kSchemaVersion;
  int degree = 0;
  std::string sigma, a1, a2, b1, b2;
  std::optional<std::uint64_t> orbit_size;
  std::optional<std::uint64_t> stabilizer_order;
  std::optional<bool> galois;
  std::optional<bool> transitive;
  std::optional<std::uint64_t> image_order;
  std::optional<int> chi;
  std::optional<int> k_squared;

  bool classified() const { return orbit_size.has_value(); }

  friend bool operator==(const OutputRecord&, const OutputRecord&) = default;
};

OutputRecord to_record(const MonodromyRep& rep);
OutputRecord to_record(const ConjugacyClassRecord& cls, const SurfaceReport& surface);

/// Rebuilds the representation from a record; throws std::invalid_argument
/// on malformed permutation fields or mixed degrees.
MonodromyRep to_rep(const OutputRecord& record);

/// Single-line serialization (no trailing newline).
std::string serialize_record(const OutputRecord& record, Format format);

/// Column header naming exactly the fields a record stream carries; written
/// once at the top of CSV output.
std::string csv_header(bool classified);

struct ParseError : std::runtime_error {
  ParseError(std::size_t line_no, const std::string& message)
      : std::runtime_error("line " + std::to_string(line_no) + ": " + message),
        line_no(line_no) {}
  std::size_t line_no;
};

/// Reads a whole record stream, auto-detecting the format from the first
/// non-empty line. Summary lines (JSONL objects with "summary": true, CSV
/// lines starting with '#') and the CSV header are skipped. Throws
/// ParseError with a 1-based line number on malformed input.
std::vector<OutputRecord> read_records(std::istream& in);

}  // namespace braidmono
