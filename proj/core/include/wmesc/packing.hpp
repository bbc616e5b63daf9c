#pragma once

#include <array>
#include <iosfwd>
#include <string>
#include <vector>

#include "wmesc/instance.hpp"

namespace wmesc {

using Triple = std::array<std::string, 3>;

/// Maximum 3-set packing input: each member is a set of three distinct labels.
class PackingInstance {
 public:
  PackingInstance() = default;
  explicit PackingInstance(std::vector<Triple> triples);

  const std::vector<Triple>& triples() const noexcept { return triples_; }
  std::size_t size() const noexcept { return triples_.size(); }
  bool empty() const noexcept { return triples_.empty(); }

 private:
  std::vector<Triple> triples_;
};

/// One triple per line, whitespace separated. Blank lines and '#' comments
/// are skipped. Throws ParseError on lines without exactly three distinct labels.
PackingInstance parse_packing(std::istream& in);

/// Unit-weight WMESC instance with one subset per triple (input order) over
/// the union of labels, relabelled 0..n-1 in sorted label order.
Instance reduce_3set_packing(const PackingInstance& p);

}  // namespace wmesc
