#pragma once

// Verification matrix, printed-table reproduction and benchmarking.

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace chaindex {

enum class Status { Match, Mismatch, RoundingMatch };

/// Lowercase JSON spelling: "match", "mismatch", "rounding_match".
std::string to_json_name(Status s);
/// CSV spelling: "Match", "Mismatch", "RoundingMatch".
std::string to_csv_name(Status s);
Status parse_status(std::string_view text);

struct VerificationRecord {
  std::string claim_id;
  int n = 0;
  std::string paper_value;
  std::string computed_value;
  Status status = Status::Mismatch;

  friend bool operator==(const VerificationRecord&, const VerificationRecord&) = default;
};

struct StatusCounts {
  std::size_t match = 0;
  std::size_t mismatch = 0;
  std::size_t rounding_match = 0;
  friend bool operator==(const StatusCounts&, const StatusCounts&) = default;
};

struct VerificationReport {
  std::vector<VerificationRecord> records;

  StatusCounts summary() const;
  /// Records for one claim id, in n order.
  std::vector<VerificationRecord> find(std::string_view claim_id) const;
  std::optional<VerificationRecord> find(std::string_view claim_id, int n) const;

  friend bool operator==(const VerificationReport&, const VerificationReport&) = default;
};

std::string to_json(const VerificationReport& r);
/// Throws std::invalid_argument if the summary disagrees with the records.
VerificationReport report_from_json(std::string_view text);
std::string to_csv(const VerificationReport& r);

/// Claim ids defined at n, in report order.
std::vector<std::string> claim_registry(int n);

/// Every check for one n.
std::vector<VerificationRecord> verify_n(int n);

/// Threads from CHAINDEX_THREADS, capped by the hardware; at least 1.
unsigned default_thread_count();

/// Runs verify_n for from..to on up to `threads` workers (0 = default) and
/// merges by (claim registry order, n).
VerificationReport run_verification(int from, int to, unsigned threads = 0);

// --- printed tables ---

/// Printed values: table 1 (Kf) and 2 (Kf*) for n = 1..15 with two
/// decimals, table 3 (spanning trees) for n = 1..8 as integers.
std::optional<std::string> printed_table_value(int which, int n);

struct TableRow {
  int n = 0;
  std::string exact;
  std::string rendered;
  std::optional<std::string> printed;
  std::optional<Status> status;
};

/// Rows 1..n_max from the closed forms, compared with the printed values:
/// Match on identical rendering, RoundingMatch within 0.05, else Mismatch.
std::vector<TableRow> reproduce_table(int which, int n_max);
std::string table_to_csv(const std::vector<TableRow>& rows);
std::string table_to_json(int which, const std::vector<TableRow>& rows);

// --- benchmark ---

struct BenchRow {
  int n = 0;
  double closed_form_ms = 0;
  std::optional<double> oracle_ms;
  /// Kf, Kf* and tau agree between the two methods; empty when the oracle
  /// did not run.
  std::optional<bool> exact_equal;
};

struct BenchOptions {
  /// Largest n the O(n^3)-and-worse oracle is run for.
  int oracle_max_n = 20;
  bool spectral_check = true;
};

std::vector<BenchRow> run_bench(const std::vector<int>& ns, BenchOptions options = {});
std::string bench_to_csv(const std::vector<BenchRow>& rows);
std::string bench_to_json(const std::vector<BenchRow>& rows);

}  // namespace chaindex
