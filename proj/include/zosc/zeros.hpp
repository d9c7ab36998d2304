#pragma once

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace zosc {

/// Validated ascending table of positive ordinates gamma of nontrivial zeta
/// zeros, with multiplicities. Immutable once constructed.
///
/// Invariants checked on construction: ordinates strictly increasing and
/// positive, multiplicities >= 1, first ordinate in [14.13, 14.14], and the
/// zero count agrees with the Riemann-von Mangoldt estimate to within +-2 at
/// every T in {50, 100, 500, max_gamma} covered by the table.
class ZeroTable {
 public:
  /// Builds a table from ordinates; `text` optionally holds the decimal
  /// strings the ordinates were parsed from (used for digit-exact output).
  static ZeroTable from_ordinates(std::vector<double> gammas, std::vector<int> multiplicities = {},
                                  std::string source = {}, std::vector<std::string> text = {});

  [[nodiscard]] std::span<const double> gammas() const { return gammas_; }
  [[nodiscard]] std::span<const int> multiplicities() const { return multiplicities_; }
  [[nodiscard]] const std::string& source() const { return source_; }
  [[nodiscard]] std::size_t size() const { return gammas_.size(); }
  [[nodiscard]] double max_gamma() const { return gammas_.back(); }
  [[nodiscard]] double gamma(std::size_t i) const { return gammas_[i]; }
  [[nodiscard]] int multiplicity(std::size_t i) const { return multiplicities_[i]; }

  /// Decimal text of ordinate i exactly as it was ingested.
  [[nodiscard]] const std::string& text(std::size_t i) const { return text_[i]; }

  /// Serializes in the ingestion format (one ordinate per line, an optional
  /// multiplicity column when any multiplicity differs from 1).
  void write(std::ostream& out) const;

 private:
  ZeroTable() = default;
  std::vector<double> gammas_;
  std::vector<int> multiplicities_;
  std::vector<std::string> text_;
  std::string source_;
};

/// Riemann-von Mangoldt estimate (T/2pi) log(T/(2 pi e)) + 7/8.
[[nodiscard]] double riemann_von_mangoldt(double T);

/// Reads a zero table: one ordinate per line, '#' comments and blank lines
/// ignored, optional second column with the multiplicity. Throws DataError
/// with the offending line number on malformed or non-monotone input.
[[nodiscard]] ZeroTable load_zeros(const std::filesystem::path& path,
                                   std::optional<std::size_t> limit = std::nullopt);

/// Parses a table from a stream; `source` is recorded as provenance.
[[nodiscard]] ZeroTable parse_zeros(std::istream& in, const std::string& source,
                                    std::optional<std::size_t> limit = std::nullopt);

/// Sum of multiplicities over ordinates gamma <= T. Requires T <= max_gamma.
[[nodiscard]] long long count_below(const ZeroTable& table, double T);

/// Resolves the table path from an explicit flag value, else ZETA_ZEROS_PATH.
[[nodiscard]] std::filesystem::path resolve_zeros_path(const std::string& flag_value);

}  // namespace zosc
