#include "wmesc/packing.hpp"

#include <algorithm>
#include <istream>
#include <map>
#include <sstream>
#include <stdexcept>

namespace wmesc {

namespace {

bool distinct(const Triple& t) { return t[0] != t[1] && t[0] != t[2] && t[1] != t[2]; }

}  // namespace

PackingInstance::PackingInstance(std::vector<Triple> triples) : triples_(std::move(triples)) {
  for (std::size_t i = 0; i < triples_.size(); ++i) {
    if (!distinct(triples_[i])) {
      throw std::invalid_argument("triple " + std::to_string(i) + " does not have 3 distinct labels");
    }
  }
}

PackingInstance parse_packing(std::istream& in) {
  std::vector<Triple> triples;
  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    std::istringstream fields(raw);
    std::vector<std::string> labels;
    for (std::string tok; fields >> tok;) labels.push_back(std::move(tok));
    if (labels.empty() || labels.front().starts_with('#')) continue;
    if (labels.size() != 3) {
      throw ParseError(line_no, "expected 3 labels, found " + std::to_string(labels.size()));
    }
    Triple t{labels[0], labels[1], labels[2]};
    if (!distinct(t)) throw ParseError(line_no, "labels of a triple must be distinct");
    triples.push_back(std::move(t));
  }
  return PackingInstance(std::move(triples));
}

Instance reduce_3set_packing(const PackingInstance& p) {
  if (p.empty()) throw std::invalid_argument("packing instance is empty");

  std::map<std::string, Element> ids;
  for (const auto& t : p.triples()) {
    for (const auto& label : t) ids.emplace(label, 0);
  }
  Element next = 0;
  for (auto& [label, id] : ids) id = next++;

  std::vector<std::vector<Element>> subsets;
  subsets.reserve(p.size());
  for (const auto& t : p.triples()) {
    std::vector<Element> s{ids.at(t[0]), ids.at(t[1]), ids.at(t[2])};
    std::sort(s.begin(), s.end());
    subsets.push_back(std::move(s));
  }
  return Instance(ids.size(), std::move(subsets), std::vector<double>(p.size(), 1.0));
}

}  // namespace wmesc
