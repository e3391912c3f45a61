#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "hemi/fuzzy.hpp"
#include "hemi/ideals.hpp"

namespace hemi {

/// Knobs shared by every verification suite.
struct SuiteParams {
  std::vector<Grade> coarse_grades{Grade::from(0), Grade::from(1, 2), Grade::from(1)};
  std::vector<Grade> fine_grades{Grade::from(0), Grade::from(1, 3), Grade::from(2, 3),
                                 Grade::from(1)};
  std::uint64_t bound = 60;
  std::size_t samples = 1000;
  std::uint64_t seed = 20070101;
  HProductForm hproduct_form = HProductForm::single;
  std::size_t subset_cap = default_subset_cap;
  std::size_t fuzzy_cap = default_fuzzy_cap;
  /// Largest carrier order for suites that scan all subset pairs.
  std::size_t pair_scan_cap = 6;
};

struct SuiteReport {
  std::string id;
  std::string carrier;
  std::string params;
  Verdict verdict = Verdict::holds();
  bool skipped = false;
  std::string skip_reason;
  /// Counterexamples for Fails, exhibits (e.g. for the converse direction of
  /// an equivalence) otherwise.
  std::vector<Witness> witnesses;
  std::vector<std::string> notes;
  double elapsed_ms = 0;

  /// `Holds`, `Fails`, `HoldsUpToBound(B)` or `Skipped`.
  std::string status() const;
  bool failed() const { return !skipped && verdict.is_fails(); }

  /// Human-readable block: a status line plus indented witnesses and notes.
  std::string text() const;
  /// Tab-separated: suite, carrier, verdict, witness, elapsed-ms.
  std::string machine_line() const;
  /// One JSON object on one line.
  std::string json() const;
};

/// Suites that run against a finite carrier.
std::vector<std::string> suite_ids();

/// Throws PreconditionError for an unknown id.
SuiteReport run_suite(std::string_view id, const FiniteHemiring& carrier,
                      const SuiteParams& params = {});

/// Suites reproducing the N0 examples (prime evens; a two-valued set with
/// grade at zero below 1; a normal three-valued set).
std::vector<std::string> counterexample_ids();
std::vector<SuiteReport> run_counterexamples(const SuiteParams& params = {});

struct RunConfig {
  /// Empty means every suite.
  std::vector<std::string> suites;
  std::vector<std::string> builtins = default_builtin_names();
  SuiteParams params;
  bool include_counterexamples = true;
  /// Re-run product-sensitive suites with the sum-form h-product and
  /// annotate verdicts that change.
  bool compare_product_forms = false;
  unsigned jobs = 1;
};

struct AggregateReport {
  std::vector<SuiteReport> reports;
  std::vector<std::string> annotations;

  std::size_t failures() const;
  std::size_t skipped() const;
  int exit_code() const { return failures() == 0 ? 0 : 1; }
  std::string text() const;
};

AggregateReport run_all(const RunConfig& config);

}  // namespace hemi
