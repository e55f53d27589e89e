#pragma once

#include "subcount/rational.hpp"

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace subcount {

struct BenchRow {
  std::string instance;
  std::size_t n = 0;
  std::size_t m = 0;
  std::string pattern;
  Rational rho{0};
  std::uint64_t exact = 0;
  double estimate = 0;
  double rel_err = 0;
  std::uint64_t q_total = 0;
  std::int64_t ms = 0;
  bool fallback = false;
};

struct BenchResult {
  std::string suite;
  std::vector<BenchRow> rows;
  /// Least-squares slope of log(q_total) against log(exact) over the rows of
  /// a suite whose instances vary the copy count at fixed m.
  std::optional<double> slope;
};

const std::vector<std::string>& bench_suites();

/// Throws std::invalid_argument for an unknown suite.
BenchResult run_bench(const std::string& suite, std::uint64_t seed = 1);

/// CSV with header instance,n,m,pattern,rho,exact,estimate,rel_err,q_total,ms
/// and a trailing "# slope=<value>" line when a slope was fitted.
void write_bench_csv(std::ostream& out, const BenchResult& result);

double fit_loglog_slope(const std::vector<double>& x, const std::vector<double>& y);

}  // namespace subcount
