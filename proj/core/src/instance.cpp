#include "wmesc/instance.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>
#include <system_error>

namespace wmesc {

ParseError::ParseError(std::size_t line, const std::string& what)
    : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}

Instance::Instance(std::size_t n, std::vector<std::vector<Element>> subsets, std::vector<double> weights)
    : n_(n), subsets_(std::move(subsets)), weights_(std::move(weights)) {
  if (subsets_.size() != weights_.size()) {
    throw std::invalid_argument("subset count " + std::to_string(subsets_.size()) + " does not match weight count " +
                                std::to_string(weights_.size()));
  }
  if (subsets_.size() > std::numeric_limits<SubsetIndex>::max()) {
    throw std::invalid_argument("too many subsets");
  }
  for (std::size_t i = 0; i < subsets_.size(); ++i) {
    const auto& s = subsets_[i];
    if (s.empty()) throw std::invalid_argument("subset " + std::to_string(i) + " is empty");
    for (std::size_t j = 0; j < s.size(); ++j) {
      if (s[j] >= n_) {
        throw std::invalid_argument("subset " + std::to_string(i) + ": element " + std::to_string(s[j]) +
                                    " out of range [0, " + std::to_string(n_) + ")");
      }
      if (j > 0 && s[j - 1] >= s[j]) {
        throw std::invalid_argument("subset " + std::to_string(i) + ": elements not strictly increasing");
      }
    }
    if (!std::isfinite(weights_[i]) || weights_[i] < 0.0) {
      throw std::invalid_argument("subset " + std::to_string(i) + ": weight must be finite and nonnegative");
    }
    if (weights_[i] == 0.0) weights_[i] = 0.0;  // drop the sign of -0.0
  }
}

namespace {

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> tokens;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    std::size_t j = i;
    while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
    if (j > i) tokens.push_back(line.substr(i, j - i));
    i = j;
  }
  return tokens;
}

template <typename T>
T parse_uint(std::string_view tok, std::size_t line, const char* what) {
  T value{};
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc{} || ptr != tok.data() + tok.size()) {
    throw ParseError(line, std::string("invalid ") + what + " '" + std::string(tok) + "'");
  }
  return value;
}

double parse_weight(std::string_view tok, std::size_t line) {
  double value = 0.0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc{} || ptr != tok.data() + tok.size() || !std::isfinite(value)) {
    throw ParseError(line, "invalid weight '" + std::string(tok) + "'");
  }
  if (value < 0.0 || (value == 0.0 && std::signbit(value))) {
    throw ParseError(line, "negative weight " + std::string(tok));
  }
  return value;
}

bool is_data_line(std::string_view line) {
  auto first = line.find_first_not_of(" \t\r\f\v");
  return first != std::string_view::npos && line[first] != '#';
}

}  // namespace

Instance parse_instance(std::istream& in) {
  std::string raw;
  std::size_t line_no = 0;
  bool have_header = false;
  std::size_t n = 0;
  std::size_t m = 0;
  std::vector<std::vector<Element>> subsets;
  std::vector<double> weights;

  while (std::getline(in, raw)) {
    ++line_no;
    if (!is_data_line(raw)) continue;
    auto tokens = split_ws(raw);

    if (!have_header) {
      if (tokens.size() != 2) throw ParseError(line_no, "malformed header, expected \"n m\"");
      n = parse_uint<std::size_t>(tokens[0], line_no, "element count");
      m = parse_uint<std::size_t>(tokens[1], line_no, "subset count");
      if (n > std::numeric_limits<Element>::max()) throw ParseError(line_no, "element count too large");
      if (m > std::numeric_limits<SubsetIndex>::max()) throw ParseError(line_no, "subset count too large");
      have_header = true;
      continue;
    }

    if (subsets.size() == m) {
      throw ParseError(line_no, "wrong line count: expected exactly " + std::to_string(m) + " subset lines");
    }
    if (tokens.size() < 2) throw ParseError(line_no, "subset line needs a weight and a size");
    double w = parse_weight(tokens[0], line_no);
    auto k = parse_uint<std::size_t>(tokens[1], line_no, "subset size");
    if (k == 0) throw ParseError(line_no, "empty subset");
    if (tokens.size() != k + 2) {
      throw ParseError(line_no, "subset size " + std::to_string(k) + " but " + std::to_string(tokens.size() - 2) +
                                    " elements listed");
    }
    std::vector<Element> elems;
    elems.reserve(k);
    for (std::size_t j = 0; j < k; ++j) {
      auto e = parse_uint<std::uint64_t>(tokens[j + 2], line_no, "element id");
      if (e >= n) {
        throw ParseError(line_no, "element id " + std::to_string(e) + " out of range [0, " + std::to_string(n) + ")");
      }
      if (!elems.empty() && elems.back() >= e) throw ParseError(line_no, "element ids not strictly increasing");
      elems.push_back(static_cast<Element>(e));
    }
    subsets.push_back(std::move(elems));
    weights.push_back(w);
  }

  if (!have_header) throw ParseError(line_no + 1, "missing header");
  if (subsets.size() != m) {
    throw ParseError(line_no + 1, "wrong line count: expected " + std::to_string(m) + " subset lines, found " +
                                      std::to_string(subsets.size()));
  }
  return Instance(n, std::move(subsets), std::move(weights));
}

Instance parse_instance(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_instance(in);
}

void write_instance(std::ostream& out, const Instance& inst) {
  out << inst.n() << ' ' << inst.m() << '\n';
  char buf[64];
  for (SubsetIndex i = 0; i < inst.m(); ++i) {
    auto [end, ec] = std::to_chars(buf, buf + sizeof buf, inst.weight(i));
    out.write(buf, end - buf);
    auto s = inst.subset(i);
    out << ' ' << s.size();
    for (Element e : s) out << ' ' << e;
    out << '\n';
  }
}

std::string serialize_instance(const Instance& inst) {
  std::ostringstream out;
  write_instance(out, inst);
  return out.str();
}

Solution evaluate(const Instance& inst, std::span<const SubsetIndex> chosen) {
  Solution sol;
  std::vector<SubsetIndex> owner(inst.n(), 0);  // 1 + index of the subset holding the element
  for (std::size_t j = 0; j < chosen.size(); ++j) {
    SubsetIndex i = chosen[j];
    if (i >= inst.m()) {
      throw InvalidSelection("subset index " + std::to_string(i) + " out of range [0, " + std::to_string(inst.m()) +
                             ")");
    }
    if (j > 0 && chosen[j - 1] >= i) throw InvalidSelection("chosen indices not strictly increasing");
    for (Element e : inst.subset(i)) {
      if (owner[e] != 0) {
        throw InvalidSelection("subsets " + std::to_string(owner[e] - 1) + " and " + std::to_string(i) +
                               " share element " + std::to_string(e));
      }
      owner[e] = i + 1;
    }
    sol.covered += inst.subset(i).size();
    sol.weight += inst.weight(i);
  }
  sol.chosen.assign(chosen.begin(), chosen.end());
  return sol;
}

bool better(const Solution& a, const Solution& b, double tol) noexcept {
  if (a.covered != b.covered) return a.covered > b.covered;
  return a.weight < b.weight - tol;
}

}  // namespace wmesc
