#pragma once

#include "numgk/actions.hpp"
#include "numgk/factor.hpp"
#include "numgk/matrix.hpp"
#include "numgk/roots.hpp"
#include "numgk/spectral.hpp"

#include <algorithm>
#include <cstddef>
#include <functional>
#include <string>
#include <thread>
#include <unordered_set>
#include <vector>

namespace numgk {

struct SearchConfig {
  GeneratorWord generators;
  bool include_inverses = false;  // append inv(g) for every generator
  std::size_t max_len = 2;
  std::size_t max_states = 100000;
  bool report_all = false;  // false: stop at the first canonical hit
  unsigned workers = 1;
  Scalar report_width = Scalar(1, 1000000000);
};

struct SearchHit {
  GeneratorWord word;
  RealAlgebraic rho;
  std::size_t length = 0;
};

enum class SearchStatus { MaxLen, MaxStates, Exhausted, FirstHit };

inline std::string to_string(SearchStatus s) {
  switch (s) {
    case SearchStatus::MaxLen: return "max_len";
    case SearchStatus::MaxStates: return "max_states";
    case SearchStatus::Exhausted: return "exhausted";
    case SearchStatus::FirstHit: return "first_hit";
  }
  return "?";
}

struct SearchResult {
  std::vector<SearchHit> hits;
  SearchStatus status = SearchStatus::MaxLen;
  std::size_t states = 0;          // distinct matrices seen, identity included
  std::size_t words_examined = 0;  // candidate words generated
  std::size_t max_length_reached = 0;
};

namespace detail {

/// Runs body(i) for i in [0, count) on up to `workers` threads, in
/// contiguous chunks. Each index is written by exactly one thread.
inline void parallel_for(std::size_t count, unsigned workers, const std::function<void(std::size_t)>& body) {
  const std::size_t w = std::max<std::size_t>(1, std::min<std::size_t>(workers, count));
  if (w <= 1) {
    for (std::size_t i = 0; i < count; ++i) body(i);
    return;
  }
  std::vector<std::thread> pool;
  const std::size_t chunk = (count + w - 1) / w;
  for (std::size_t t = 0; t < w; ++t) {
    std::size_t begin = t * chunk;
    std::size_t end = std::min(count, begin + chunk);
    if (begin >= end) break;
    pool.emplace_back([&, begin, end] {
      for (std::size_t i = begin; i < end; ++i) body(i);
    });
  }
  for (auto& th : pool) th.join();
}

}  // namespace detail

/// Breadth-first search over words in the generators.
///
/// Nodes at each length are kept sorted by their application sequence
/// (generator indices, first-applied first). A word extends by applying one
/// more generator after it, so children of a sorted frontier come out sorted
/// and the first word reaching a matrix is the canonical one. Text words are
/// printed right-to-left as usual: sequence (i, j) is "g_j;g_i".
inline SearchResult search(const SurfaceModel& model, const SearchConfig& config) {
  if (config.max_states < 1) throw std::invalid_argument("max_states must be at least 1");
  GeneratorWord gens = config.generators;
  if (config.include_inverses)
    for (const auto& g : config.generators) gens.push_back(g.inverted());

  std::vector<Matrix> gen_matrix;
  for (const auto& g : gens) gen_matrix.push_back(generator_matrix(g, model));
  std::vector<int> inverse_of(gens.size(), -1);
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = 0; j < gens.size(); ++j)
      if (gens[i].inverted() == gens[j]) inverse_of[i] = static_cast<int>(j);

  struct Node {
    std::vector<std::size_t> seq;
    Matrix matrix;
  };
  struct Child {
    std::size_t parent;
    std::size_t gen;
    Matrix matrix;
    std::string key;
  };

  SearchResult result;
  std::unordered_set<std::string> seen;
  const Matrix id = Matrix::identity(model.rank());
  seen.insert(canonical_key(id));
  result.states = 1;
  std::vector<Node> frontier{{{}, id}};

  if (config.max_len == 0 || gens.empty()) {
    result.status = gens.empty() && config.max_len > 0 ? SearchStatus::Exhausted : SearchStatus::MaxLen;
    return result;
  }

  for (std::size_t len = 1; len <= config.max_len; ++len) {
    std::vector<Child> children;
    for (std::size_t p = 0; p < frontier.size(); ++p)
      for (std::size_t g = 0; g < gens.size(); ++g) {
        const auto& seq = frontier[p].seq;
        if (!seq.empty() && inverse_of[seq.back()] == static_cast<int>(g)) continue;
        children.push_back({p, g, {}, {}});
      }
    result.words_examined += children.size();
    detail::parallel_for(children.size(), config.workers, [&](std::size_t i) {
      Child& c = children[i];
      c.matrix = gen_matrix[c.gen] * frontier[c.parent].matrix;
      c.key = canonical_key(c.matrix);
    });

    // Sequential, order-preserving merge.
    std::vector<Node> next;
    bool budget_hit = false;
    for (auto& c : children) {
      if (seen.count(c.key)) continue;
      if (result.states >= config.max_states) {
        budget_hit = true;
        break;
      }
      seen.insert(c.key);
      ++result.states;
      std::vector<std::size_t> seq = frontier[c.parent].seq;
      seq.push_back(c.gen);
      next.push_back({std::move(seq), std::move(c.matrix)});
    }
    result.max_length_reached = len;

    // Exact rho > 1 test on the new states.
    std::vector<char> above(next.size(), 0);
    detail::parallel_for(next.size(), config.workers, [&](std::size_t i) {
      above[i] = spectral_radius_exceeds(next[i].matrix, Scalar(1)) ? 1 : 0;
    });
    for (std::size_t i = 0; i < next.size(); ++i) {
      if (!above[i]) continue;
      SearchHit hit;
      for (auto it = next[i].seq.rbegin(); it != next[i].seq.rend(); ++it) hit.word.push_back(gens[*it]);
      hit.length = len;
      hit.rho = spectral_radius_minimal(next[i].matrix).refine(config.report_width);
      result.hits.push_back(std::move(hit));
      if (!config.report_all) {
        result.status = SearchStatus::FirstHit;
        return result;
      }
    }
    if (budget_hit) {
      result.status = SearchStatus::MaxStates;
      return result;
    }
    if (next.empty()) {
      result.status = SearchStatus::Exhausted;
      return result;
    }
    frontier = std::move(next);
  }
  result.status = SearchStatus::MaxLen;
  return result;
}

}  // namespace numgk
