#include "legh/experiments.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <thread>

#include "legh/error.hpp"

namespace legh {

namespace {

struct Slot {
  std::optional<RunRecord> record;
  std::string skip_reason;
};

Slot evaluate_one(const FamilySpec& family, const BigRational& t, const NeronTateOptions& nt) {
  Slot s;
  try {
    const ProductFiberPoint p = family.point_at(t);
    RunRecord r;
    r.t = t;
    r.lambda = p.lambda();
    r.h_lambda = lambda_height(p.lambda()).value();
    r.total_height = total_height(p).value();
    const auto est = neron_tate_product(p, nt);
    r.nt_height = est.value;
    r.nt_depth = est.depth;
    r.st_ratio = std::fabs(r.total_height - r.nt_height) / std::max(1.0, r.h_lambda);
    s.record = std::move(r);
  } catch (const Error& e) {
    s.skip_reason = e.what();
  }
  return s;
}

std::size_t quartile_size(std::size_t n) { return std::min(n, std::max<std::size_t>(2, (n + 3) / 4)); }

}  // namespace

RecordSet evaluate_samples(const FamilySpec& family, const std::vector<BigRational>& samples,
                           const ExperimentOptions& opts) {
  std::vector<Slot> slots(samples.size());
  unsigned workers = opts.threads ? opts.threads : std::max(1u, std::thread::hardware_concurrency());
  workers = static_cast<unsigned>(std::min<std::size_t>(workers, std::max<std::size_t>(1, samples.size())));
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i = next++; i < samples.size(); i = next++) slots[i] = evaluate_one(family, samples[i], opts.nt);
  };
  if (workers <= 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work);
  }
  RecordSet out;
  for (std::size_t i = 0; i < samples.size(); ++i) {
    if (slots[i].record) {
      out.records.push_back(std::move(*slots[i].record));
    } else {
      out.skipped.push_back({samples[i], std::move(slots[i].skip_reason)});
    }
  }
  return out;
}

HeightInequalityResult run_height_inequality(const FamilySpec& family, const std::vector<BigRational>& samples,
                                             const ExperimentOptions& opts) {
  HeightInequalityResult res;
  res.data = evaluate_samples(family, samples, opts);
  const auto& recs = res.data.records;
  for (const auto& r : recs) res.empirical_c = std::max(res.empirical_c, r.h_lambda / std::max(1.0, r.nt_height));
  res.degenerate = !recs.empty() && std::all_of(recs.begin(), recs.end(), [&](const RunRecord& r) {
    return r.nt_height <= opts.nt.tolerance;
  });
  for (std::size_t i = recs.size(); i > 0; --i) {
    if (recs[i - 1].nt_height < recs[i - 1].h_lambda / 4) break;
    res.quarter_bound_from = i - 1;
  }
  return res;
}

SilvermanTateResult run_silverman_tate(const FamilySpec& family, const std::vector<BigRational>& samples,
                                       const ExperimentOptions& opts) {
  SilvermanTateResult res;
  res.data = evaluate_samples(family, samples, opts);
  const auto& recs = res.data.records;
  if (recs.empty()) return res;
  const std::size_t n = recs.size();
  const std::size_t q = std::max<std::size_t>(1, n / 4);
  for (std::size_t i = 0; i < n; ++i) {
    res.max_ratio = std::max(res.max_ratio, recs[i].st_ratio);
    if (i < q) res.first_quartile_max = std::max(res.first_quartile_max, recs[i].st_ratio);
    if (i >= n - q) res.last_quartile_max = std::max(res.last_quartile_max, recs[i].st_ratio);
  }
  return res;
}

SpecializationResult run_specialization_ratio(const FamilySpec& family, const std::vector<BigRational>& samples,
                                              const ExperimentOptions& opts) {
  SpecializationResult res;
  res.data = evaluate_samples(family, samples, opts);
  for (const auto& r : res.data.records) {
    if (r.h_lambda > 0) res.ratios.emplace_back(r.h_lambda, r.nt_height / r.h_lambda);
  }
  if (res.ratios.empty()) return res;
  auto by_height = res.ratios;
  std::stable_sort(by_height.begin(), by_height.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  const std::size_t q = quartile_size(by_height.size());
  double lo = by_height.back().second, hi = lo;
  for (std::size_t i = by_height.size() - q; i < by_height.size(); ++i) {
    lo = std::min(lo, by_height[i].second);
    hi = std::max(hi, by_height[i].second);
  }
  res.top_quartile_spread = hi - lo;
  res.limit_estimate = by_height.back().second;
  return res;
}

std::vector<BigRational> parse_samples(const std::string& text) {
  std::vector<BigRational> out;
  const auto dots = text.find("..");
  if (dots == std::string::npos) {
    std::size_t start = 0;
    while (start <= text.size()) {
      const auto comma = text.find(',', start);
      const auto piece = text.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
      out.push_back(parse_rational(piece));
      if (comma == std::string::npos) break;
      start = comma + 1;
    }
    return out;
  }
  const auto colon = text.find(':', dots);
  const BigRational a = parse_rational(text.substr(0, dots));
  const BigRational b = parse_rational(text.substr(dots + 2, colon == std::string::npos ? std::string::npos : colon - dots - 2));
  const BigRational step = colon == std::string::npos ? BigRational(1) : parse_rational(text.substr(colon + 1));
  if (step <= 0) throw Error(ErrorCode::InvalidInput, "sample step must be positive");
  if (b < a) throw Error(ErrorCode::InvalidInput, "empty sample range " + text);
  if ((b - a) / step > BigRational(10000000)) throw Error(ErrorCode::InvalidInput, "sample range too long");
  for (BigRational t = a; t <= b; t += step) {
    t.canonicalize();
    out.push_back(t);
  }
  return out;
}

}  // namespace legh
