#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "legh/family.hpp"
#include "legh/heights.hpp"

namespace legh {

/// One evaluated sample of a family.
struct RunRecord {
  BigRational t;
  BigRational lambda;
  double h_lambda = 0;
  double nt_height = 0;
  double total_height = 0;
  /// |total_height - nt_height| / max{1, h_lambda}.
  double st_ratio = 0;
  int nt_depth = 0;
};

struct SkippedSample {
  BigRational t;
  std::string reason;
};

struct RecordSet {
  std::vector<RunRecord> records;  // in sample order
  std::vector<SkippedSample> skipped;
};

struct ExperimentOptions {
  NeronTateOptions nt;
  /// Worker threads; 0 picks the hardware concurrency.
  unsigned threads = 1;
};

/// Evaluates every sample, concurrently if requested. Samples where the
/// family is undefined, off the curve or the height iteration fails are
/// skipped with a reason. Output order follows the input order.
RecordSet evaluate_samples(const FamilySpec& family, const std::vector<BigRational>& samples,
                           const ExperimentOptions& opts = {});

struct HeightInequalityResult {
  RecordSet data;
  /// max h_lambda / max{1, nt_height}; 0 without records.
  double empirical_c = 0;
  /// Every Neron-Tate height is below the tolerance: the section is torsion.
  bool degenerate = false;
  /// First record index from which nt_height >= h_lambda / 4 holds for all later records.
  std::optional<std::size_t> quarter_bound_from;
};

HeightInequalityResult run_height_inequality(const FamilySpec& family, const std::vector<BigRational>& samples,
                                             const ExperimentOptions& opts = {});

struct SilvermanTateResult {
  RecordSet data;
  double max_ratio = 0;
  double first_quartile_max = 0;
  double last_quartile_max = 0;
};

SilvermanTateResult run_silverman_tate(const FamilySpec& family, const std::vector<BigRational>& samples,
                                       const ExperimentOptions& opts = {});

struct SpecializationResult {
  RecordSet data;
  /// (h_lambda, nt_height / h_lambda) per record with h_lambda > 0.
  std::vector<std::pair<double, double>> ratios;
  /// max - min of the ratios over the quarter of records with largest
  /// h_lambda (at least two records when available).
  double top_quartile_spread = 0;
  /// Ratio at the largest h_lambda.
  double limit_estimate = 0;
};

SpecializationResult run_specialization_ratio(const FamilySpec& family, const std::vector<BigRational>& samples,
                                              const ExperimentOptions& opts = {});

/// "a..b" (integers, step 1), "a..b:s" (rational step s), or a comma list of rationals.
std::vector<BigRational> parse_samples(const std::string& text);

/// Header plus one line per record, columns t,lambda,h_lambda,nt_height,total_height,st_ratio.
std::string records_to_csv(const std::vector<RunRecord>& records);

struct RunDocument {
  std::string experiment;
  FamilySpec family;
  std::vector<BigRational> samples;
  ExperimentOptions options;
  RecordSet data;
  std::vector<std::pair<std::string, double>> diagnostics;
  std::vector<std::pair<std::string, std::string>> labels;
};

std::string run_to_json(const RunDocument& run);

/// Writes <dir>/<experiment>.json and <dir>/<experiment>.csv, creating dir.
void write_run(const std::filesystem::path& dir, const RunDocument& run);

}  // namespace legh
