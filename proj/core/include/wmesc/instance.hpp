#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace wmesc {

using Element = std::uint32_t;
using SubsetIndex = std::uint32_t;

/// Absolute tolerance used when comparing solution weights.
inline constexpr double kDefaultTolerance = 1e-9;

/// Raised by the WMESC v1 reader; carries the 1-based line of the offending input.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what);
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// A selection that is not mutually exclusive (or references unknown subsets).
class InvalidSelection : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Internal contract violation; the CLI maps it to exit code 2.
class PreconditionError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Weighted collection of subsets over the ground set {0, ..., n-1}.
///
/// Validated on construction and immutable afterwards: every subset is
/// nonempty, strictly increasing and in range, and every weight is finite
/// and nonnegative.
class Instance {
 public:
  Instance() = default;
  Instance(std::size_t n, std::vector<std::vector<Element>> subsets, std::vector<double> weights);

  std::size_t n() const noexcept { return n_; }
  std::size_t m() const noexcept { return subsets_.size(); }

  std::span<const Element> subset(SubsetIndex i) const { return subsets_.at(i); }
  double weight(SubsetIndex i) const { return weights_.at(i); }

  const std::vector<std::vector<Element>>& subsets() const noexcept { return subsets_; }
  const std::vector<double>& weights() const noexcept { return weights_; }

  friend bool operator==(const Instance&, const Instance&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<std::vector<Element>> subsets_;
  std::vector<double> weights_;
};

/// A mutually exclusive selection together with its objective values.
struct Solution {
  std::vector<SubsetIndex> chosen;  // strictly increasing
  std::size_t covered = 0;
  double weight = 0.0;
};

Instance parse_instance(std::istream& in);
Instance parse_instance(std::string_view text);

/// Writes WMESC v1. Weights use the shortest decimal form that reads back
/// to the same double.
void write_instance(std::ostream& out, const Instance& inst);
std::string serialize_instance(const Instance& inst);

/// Scores `chosen` against `inst`. Throws InvalidSelection if an index is
/// out of range, the indices are not strictly increasing, or two chosen
/// subsets share an element.
Solution evaluate(const Instance& inst, std::span<const SubsetIndex> chosen);

/// True iff `a` is strictly preferred: more coverage, or equal coverage and
/// weight lower by more than `tol`.
bool better(const Solution& a, const Solution& b, double tol = kDefaultTolerance) noexcept;

}  // namespace wmesc
