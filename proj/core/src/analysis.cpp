#include "wmesc/analysis.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <ostream>
#include <stdexcept>

namespace wmesc {

Recurrence::Recurrence(std::vector<unsigned> gaps) : gaps_(std::move(gaps)) {
  if (gaps_.empty()) throw std::invalid_argument("recurrence needs at least one branch");
  for (unsigned d : gaps_) {
    if (d < 1) throw std::invalid_argument("recurrence gaps must be >= 1");
  }
}

unsigned Recurrence::max_gap() const noexcept { return *std::max_element(gaps_.begin(), gaps_.end()); }

double Recurrence::characteristic(double t) const {
  const unsigned big = max_gap();
  double value = std::pow(t, big);
  for (unsigned d : gaps_) value -= std::pow(t, big - d);
  return value;
}

double branching_root(const Recurrence& r) {
  // Dividing by t^D gives 1 - sum t^-d, strictly increasing for t > 0, so the
  // root is unique and bisection on the scaled form is well conditioned.
  auto scaled = [&](double t) {
    double v = 1.0;
    for (unsigned d : r.gaps()) v -= std::pow(t, -static_cast<double>(d));
    return v;
  };
  if (scaled(1.0) >= 0.0) return 1.0;
  double lo = 1.0;
  double hi = 2.0;
  while (scaled(hi) < 0.0) {
    lo = hi;
    hi *= 2.0;
  }
  while (hi - lo > 1e-12) {
    double mid = 0.5 * (lo + hi);
    (scaled(mid) < 0.0 ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

double linear_slack(std::size_t m) { return static_cast<double>(m) + 1.0; }

BoundReport check_bound(const SolveStats& stats, std::size_t m, double root, const SlackFn& slack) {
  const double growth = std::pow(root, static_cast<double>(m));
  BoundReport rep;
  rep.leaves = stats.leaves;
  rep.bound = slack(m) * growth;
  rep.ratio = static_cast<double>(stats.leaves) / growth;
  rep.pass = static_cast<double>(stats.leaves) <= rep.bound;
  return rep;
}

BoundReport check_quadratic_bound(const SolveStats& stats, std::size_t m) {
  BoundReport rep;
  rep.leaves = stats.leaves;
  rep.bound = 2.0 * static_cast<double>(m) * static_cast<double>(m);
  rep.ratio = rep.bound > 0.0 ? static_cast<double>(stats.leaves) / rep.bound : 0.0;
  rep.pass = static_cast<double>(stats.leaves) <= rep.bound;
  return rep;
}

std::vector<BenchRow> bench_corpus(const std::vector<Instance>& corpus, const BenchOptions& opts) {
  std::vector<BenchRow> rows;
  rows.reserve(corpus.size());
  SolveOptions solve_opts;
  solve_opts.tol = opts.tol;
  solve_opts.time_limit = opts.timeout;
  for (const auto& inst : corpus) {
    BenchRow row;
    row.m = inst.m();
    row.n = inst.n();
    try {
      auto result = solve(inst, solve_opts);
      row.covered = result.solution.covered;
      row.weight = result.solution.weight;
      row.stats = result.stats;
      row.status = "ok";
    } catch (const SolveTimeout& t) {
      row.stats = t.stats();
      row.status = "timeout";
    }
    row.leaf_ratio =
        static_cast<double>(row.stats.leaves) / std::pow(kSolverGrowthBound, static_cast<double>(row.m));
    rows.push_back(std::move(row));
  }
  return rows;
}

namespace {

void put_double(std::ostream& out, double v) {
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof buf, v);
  out.write(buf, end - buf);
}

}  // namespace

void write_bench_csv(std::ostream& out, const std::vector<BenchRow>& rows) {
  out << kBenchCsvHeader << '\n';
  for (const auto& row : rows) {
    out << row.m << ',' << row.n << ',';
    if (row.covered) out << *row.covered;
    out << ',';
    if (row.weight) put_double(out, *row.weight);
    out << ',' << row.stats.branch_nodes << ',' << row.stats.leaves << ',' << row.stats.max_depth << ',';
    char buf[64];
    auto [end, ec] = std::to_chars(buf, buf + sizeof buf, row.stats.elapsed_s, std::chars_format::fixed, 6);
    out.write(buf, end - buf);
    out << ',';
    put_double(out, row.leaf_ratio);
    out << ',' << row.status << '\n';
  }
}

}  // namespace wmesc
