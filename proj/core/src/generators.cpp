#include "wmesc/generators.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <random>
#include <stdexcept>
#include <string>

#include "wmesc/intersection_graph.hpp"

namespace wmesc {

namespace {

// Bit-level mappings from raw mt19937_64 output; these are part of the
// reproducibility contract, so do not swap in <random> distributions.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  /// Uniform in [0, 1) from the top 53 bits.
  double unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  /// Uniform in [0, bound) by rejection of the biased low range.
  std::uint64_t below(std::uint64_t bound) {
    const std::uint64_t threshold = (0 - bound) % bound;
    while (true) {
      std::uint64_t r = next();
      if (r >= threshold) return r % bound;
    }
  }

  double weight() { return unit() * 10.0; }

  template <typename T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i) std::swap(v[i - 1], v[below(i)]);
  }

 private:
  std::mt19937_64 engine_;
};

std::size_t max_degree(const Instance& inst) {
  if (inst.m() == 0) return 0;
  auto g = build_graph(inst);
  return max_degree_node(g, SubProblem::all(inst.m())).second;
}

}  // namespace

void validate(const GenConfig& cfg) {
  if (cfg.n < 1) throw std::invalid_argument("generator: n must be >= 1");
  if (cfg.m < 1) throw std::invalid_argument("generator: m must be >= 1");
  if (cfg.max_size < 1 || cfg.max_size > cfg.n) {
    throw std::invalid_argument("generator: max_size must lie in [1, n]");
  }
  if (!(cfg.overlap >= 0.0 && cfg.overlap <= 1.0)) {
    throw std::invalid_argument("generator: overlap must lie in [0, 1]");
  }
  if (cfg.n > std::numeric_limits<Element>::max()) throw std::invalid_argument("generator: n too large");
}

Instance gen_random(const GenConfig& cfg) {
  validate(cfg);
  Rng rng(cfg.seed);

  std::vector<Element> fresh(cfg.n);
  std::iota(fresh.begin(), fresh.end(), Element{0});
  std::vector<Element> placed;  // elements used by earlier subsets
  std::vector<char> in_placed(cfg.n, 0);
  std::vector<char> in_current(cfg.n, 0);

  std::vector<std::vector<Element>> subsets;
  std::vector<double> weights;
  subsets.reserve(cfg.m);
  weights.reserve(cfg.m);

  for (std::size_t i = 0; i < cfg.m; ++i) {
    const std::size_t size = 1 + rng.below(cfg.max_size);
    std::vector<Element> s;
    auto take = [&](Element e) {
      in_current[e] = 1;
      s.push_back(e);
    };

    for (std::size_t slot = 0; slot < size; ++slot) {
      bool done = false;
      if (!placed.empty() && rng.unit() < cfg.overlap) {
        for (int attempt = 0; attempt < 8 && !done; ++attempt) {
          Element e = placed[rng.below(placed.size())];
          if (!in_current[e]) {
            take(e);
            done = true;
          }
        }
      }
      if (!done && !fresh.empty()) {
        std::size_t pos = rng.below(fresh.size());
        Element e = fresh[pos];
        fresh[pos] = fresh.back();
        fresh.pop_back();
        take(e);
        done = true;
      }
      if (!done) {
        // Every element has been placed somewhere; take any not already in s.
        if (s.size() == cfg.n) break;
        Element e;
        do {
          e = static_cast<Element>(rng.below(cfg.n));
        } while (in_current[e]);
        take(e);
      }
    }

    for (Element e : s) {
      in_current[e] = 0;
      if (!in_placed[e]) {
        in_placed[e] = 1;
        placed.push_back(e);
      }
    }
    std::sort(s.begin(), s.end());
    subsets.push_back(std::move(s));
    weights.push_back(rng.weight());
  }
  return Instance(cfg.n, std::move(subsets), std::move(weights));
}

std::optional<Instance> gen_bounded_degree(const GenConfig& cfg, std::size_t max_deg, std::size_t attempts) {
  validate(cfg);
  Rng seeds(cfg.seed);
  for (std::size_t a = 0; a < attempts; ++a) {
    GenConfig trial = cfg;
    trial.seed = seeds.next();
    Instance inst = gen_random(trial);
    if (max_degree(inst) <= max_deg) return inst;
  }
  return std::nullopt;
}

Instance gen_path(std::size_t m, std::uint64_t seed) {
  if (m < 1) throw std::invalid_argument("gen_path: m must be >= 1");
  Rng rng(seed);
  // S_i = {2i, 2i+1, 2i+2}: 2i+2 is the link shared with S_{i+1}.
  std::vector<std::vector<Element>> subsets(m);
  std::vector<double> weights(m);
  for (std::size_t i = 0; i < m; ++i) {
    auto base = static_cast<Element>(2 * i);
    subsets[i] = {base, base + 1};
    if (i + 1 < m) subsets[i].push_back(base + 2);
    weights[i] = rng.weight();
  }
  return Instance(2 * m, std::move(subsets), std::move(weights));
}

Instance gen_ring(std::size_t m, std::uint64_t seed) {
  if (m < 3) throw std::invalid_argument("gen_ring: m must be >= 3");
  Rng rng(seed);
  const std::size_t n = 2 * m;
  std::vector<std::vector<Element>> subsets(m);
  std::vector<double> weights(m);
  for (std::size_t i = 0; i < m; ++i) {
    auto base = static_cast<Element>(2 * i);
    subsets[i] = {base, base + 1, static_cast<Element>((2 * i + 2) % n)};
    std::sort(subsets[i].begin(), subsets[i].end());
    weights[i] = rng.weight();
  }
  return Instance(n, std::move(subsets), std::move(weights));
}

PlantedInstance gen_planted(std::size_t n, std::size_t k, std::size_t noise, std::uint64_t seed) {
  if (k < 1 || k > n) throw std::invalid_argument("gen_planted: need 1 <= k <= n");
  if (n > std::numeric_limits<Element>::max()) throw std::invalid_argument("gen_planted: n too large");
  Rng rng(seed);

  std::vector<Element> labels(n);
  std::iota(labels.begin(), labels.end(), Element{0});
  rng.shuffle(labels);

  // k - 1 distinct cut points in [1, n) split the shuffled labels into blocks.
  std::vector<std::size_t> cuts(n - 1);
  std::iota(cuts.begin(), cuts.end(), std::size_t{1});
  rng.shuffle(cuts);
  cuts.resize(k - 1);
  std::sort(cuts.begin(), cuts.end());
  cuts.push_back(n);

  struct Entry {
    std::vector<Element> elems;
    double weight;
    bool planted;
  };
  std::vector<Entry> entries;
  std::size_t lo = 0;
  for (std::size_t hi : cuts) {
    std::vector<Element> block(labels.begin() + static_cast<std::ptrdiff_t>(lo),
                               labels.begin() + static_cast<std::ptrdiff_t>(hi));
    std::sort(block.begin(), block.end());
    entries.push_back({std::move(block), rng.weight(), true});
    lo = hi;
  }

  const std::size_t noise_max = std::min(n, 2 * ((n + k - 1) / k));
  for (std::size_t j = 0; j < noise; ++j) {
    std::size_t size = 1 + rng.below(noise_max);
    std::vector<Element> pool(n);
    std::iota(pool.begin(), pool.end(), Element{0});
    rng.shuffle(pool);
    pool.resize(size);
    std::sort(pool.begin(), pool.end());
    entries.push_back({std::move(pool), rng.weight(), false});
  }

  rng.shuffle(entries);
  PlantedInstance out;
  std::vector<std::vector<Element>> subsets;
  std::vector<double> weights;
  for (std::size_t i = 0; i < entries.size(); ++i) {
    if (entries[i].planted) out.planted.push_back(static_cast<SubsetIndex>(i));
    subsets.push_back(std::move(entries[i].elems));
    weights.push_back(entries[i].weight);
  }
  out.instance = Instance(n, std::move(subsets), std::move(weights));
  return out;
}

}  // namespace wmesc
