#include "drtest/blocks.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace drtest {

void validate_blocks(const Presentation& p, const BlockStructure& blocks) {
  const auto& gc = blocks.generator_cuts;
  const auto& rc = blocks.relator_cuts;
  const std::size_t n = p.generator_count();
  const std::size_t m = p.relator_count();
  if (gc.empty() || gc.size() != rc.size()) {
    throw ValidationError("block structure needs matching, nonempty cut lists");
  }
  if (gc.back() != n || rc.back() != m) {
    throw ValidationError("last cuts must equal the generator and relator counts");
  }
  if (m == 0) {
    if (gc.size() != 1) {
      throw ValidationError("a presentation without relators has a single block");
    }
    return;
  }
  for (std::size_t l = 0; l < gc.size(); ++l) {
    std::size_t g0 = l == 0 ? 0 : gc[l - 1];
    std::size_t r0 = l == 0 ? 0 : rc[l - 1];
    if (gc[l] <= g0 || rc[l] <= r0) {
      throw ValidationError("block cuts must be strictly increasing and start above zero");
    }
    for (std::size_t j = r0; j < rc[l]; ++j) {
      for (const auto& letter : p.relators[j]) {
        if (letter.generator >= gc[l]) {
          throw ValidationError("relator " + std::to_string(j + 1) + " uses generator " +
                                std::to_string(letter.generator + 1) + " outside block " +
                                std::to_string(l + 1));
        }
      }
    }
  }
}

namespace {

Blocking identity_blocking(const Presentation& p, BlockStructure blocks) {
  Blocking b;
  for (std::size_t i = 0; i < p.generator_count(); ++i) {
    b.generator_order.push_back(i);
  }
  for (std::size_t j = 0; j < p.relator_count(); ++j) {
    b.relator_order.push_back(j);
  }
  b.blocks = std::move(blocks);
  return b;
}

// Vector in original coordinates to the reordered presentation's coordinates.
RationalVector to_reordered(const RationalVector& v, const std::vector<std::size_t>& order) {
  RationalVector out(order.size());
  for (std::size_t t = 0; t < order.size(); ++t) {
    out[t] = v[order[t]];
  }
  return out;
}

RationalVector to_original(const RationalVector& v, const std::vector<std::size_t>& order) {
  RationalVector out(order.size());
  for (std::size_t t = 0; t < order.size(); ++t) {
    out[order[t]] = v[t];
  }
  return out;
}

}  // namespace

Verdict block_itest(const Presentation& p, const BlockStructure& blocks,
                    const std::vector<RationalVector>& vectors) {
  validate_blocks(p, blocks);
  if (vectors.size() != blocks.block_count()) {
    throw std::invalid_argument("block_itest: need one vector per block");
  }
  for (std::size_t l = 0; l < vectors.size(); ++l) {
    if (vectors[l].size() != p.generator_count()) {
      throw std::invalid_argument("block_itest: vector " + std::to_string(l + 1) +
                                  " has the wrong dimension");
    }
    if (!orthogonal_to_relators(p, vectors[l])) {
      throw std::invalid_argument("block_itest: vector " + std::to_string(l + 1) +
                                  " is not orthogonal to every relator");
    }
  }
  Verdict out;
  out.test = "block-itest";
  BlockWitness witness{identity_blocking(p, blocks), vectors, {}};
  for (std::size_t l = 0; l < blocks.block_count(); ++l) {
    std::size_t g0 = l == 0 ? 0 : blocks.generator_cuts[l - 1];
    std::size_t r0 = l == 0 ? 0 : blocks.relator_cuts[l - 1];
    auto block = weight_matrix(p, vectors[l])
                     .block(g0, blocks.generator_cuts[l], r0, blocks.relator_cuts[l]);
    auto good = is_good(block);
    if (!good) {
      out.status = Status::Inconclusive;
      out.note = "diagonal block " + std::to_string(l + 1) + " is not good";
      return out;
    }
    witness.goodness.push_back(std::move(*good));
  }
  out.status = Status::ProvenDR;
  out.note = "all " + std::to_string(blocks.block_count()) + " diagonal blocks are good";
  out.witness = std::move(witness);
  return out;
}

Verdict block_itest(const Presentation& p, const Blocking& blocking,
                    const std::vector<RationalVector>& vectors) {
  auto q = reorder(p, blocking.generator_order, blocking.relator_order);
  std::vector<RationalVector> local;
  for (const auto& v : vectors) {
    if (v.size() != p.generator_count()) {
      throw std::invalid_argument("block_itest: vector has the wrong dimension");
    }
    local.push_back(to_reordered(v, blocking.generator_order));
  }
  auto verdict = block_itest(q, blocking.blocks, local);
  if (auto* w = std::get_if<BlockWitness>(&verdict.witness)) {
    w->blocking = blocking;
    w->vectors = vectors;
  }
  return verdict;
}

namespace {

using RelatorSet = std::vector<bool>;

struct Closure {
  const Presentation& p;
  std::vector<std::set<std::size_t>> supports;

  explicit Closure(const Presentation& pres) : p(pres) {
    for (const auto& r : p.relators) {
      std::set<std::size_t> s;
      for (const auto& l : r) {
        s.insert(l.generator);
      }
      supports.push_back(std::move(s));
    }
  }

  std::set<std::size_t> support(const RelatorSet& set) const {
    std::set<std::size_t> out;
    for (std::size_t j = 0; j < set.size(); ++j) {
      if (set[j]) {
        out.insert(supports[j].begin(), supports[j].end());
      }
    }
    return out;
  }

  RelatorSet close(RelatorSet set) const {
    bool changed = true;
    while (changed) {
      changed = false;
      auto gens = support(set);
      for (std::size_t j = 0; j < set.size(); ++j) {
        if (!set[j] && std::includes(gens.begin(), gens.end(), supports[j].begin(),
                                     supports[j].end())) {
          set[j] = true;
          changed = true;
        }
      }
    }
    return set;
  }
};

bool strict_subset(const RelatorSet& a, const RelatorSet& b) {
  bool proper = false;
  for (std::size_t j = 0; j < a.size(); ++j) {
    if (a[j] && !b[j]) {
      return false;
    }
    proper = proper || (b[j] && !a[j]);
  }
  return proper;
}

Blocking chain_blocking(const Presentation& p, const Closure& closure,
                        const std::vector<RelatorSet>& chain) {
  Blocking b;
  std::vector<bool> gen_taken(p.generator_count(), false);
  std::vector<bool> rel_taken(p.relator_count(), false);
  for (std::size_t l = 0; l < chain.size(); ++l) {
    auto gens = closure.support(chain[l]);
    if (l + 1 == chain.size()) {
      for (std::size_t i = 0; i < p.generator_count(); ++i) {
        gens.insert(i);
      }
    }
    for (auto g : gens) {
      if (!gen_taken[g]) {
        gen_taken[g] = true;
        b.generator_order.push_back(g);
      }
    }
    for (std::size_t j = 0; j < p.relator_count(); ++j) {
      if (chain[l][j] && !rel_taken[j]) {
        rel_taken[j] = true;
        b.relator_order.push_back(j);
      }
    }
    b.blocks.generator_cuts.push_back(b.generator_order.size());
    b.blocks.relator_cuts.push_back(b.relator_order.size());
  }
  return b;
}

}  // namespace

std::vector<Blocking> detect_blocks(const Presentation& p, std::size_t cap) {
  const std::size_t n = p.generator_count();
  const std::size_t m = p.relator_count();
  std::vector<Blocking> out;
  if (m == 0) {
    out.push_back(identity_blocking(p, {{n}, {0}}));
    return out;
  }
  auto push = [&](Blocking b) {
    if (out.size() < cap && std::find(out.begin(), out.end(), b) == out.end()) {
      out.push_back(std::move(b));
    }
  };

  // Every closed set is reachable from the empty set by adding one relator
  // and closing; collect them breadth first.
  Closure closure(p);
  const std::size_t closed_cap = 4096;
  std::vector<RelatorSet> closed{RelatorSet(m, false)};
  std::set<RelatorSet> seen(closed.begin(), closed.end());
  for (std::size_t idx = 0; idx < closed.size() && closed.size() < closed_cap; ++idx) {
    for (std::size_t j = 0; j < m; ++j) {
      if (closed[idx][j]) {
        continue;
      }
      auto next = closed[idx];
      next[j] = true;
      next = closure.close(next);
      if (seen.insert(next).second) {
        closed.push_back(next);
      }
    }
  }
  const RelatorSet full(m, true);

  // Chains from the empty set to the full set, fewest blocks first.
  std::vector<RelatorSet> chain;
  auto extend = [&](auto& self, const RelatorSet& current, std::size_t remaining) -> void {
    if (out.size() >= cap) {
      return;
    }
    if (remaining == 1) {
      if (current != full) {
        chain.push_back(full);
        push(chain_blocking(p, closure, chain));
        chain.pop_back();
      }
      return;
    }
    for (const auto& c : closed) {
      if (c != full && strict_subset(current, c)) {
        chain.push_back(c);
        self(self, c, remaining - 1);
        chain.pop_back();
      }
    }
  };
  for (std::size_t k = 1; k <= m && out.size() < cap; ++k) {
    extend(extend, RelatorSet(m, false), k);
  }

  // The finest structure in the given order: cut wherever the next relator
  // reaches a higher generator index.
  BlockStructure finest;
  std::vector<std::size_t> bound(m);
  for (std::size_t j = 0; j < m; ++j) {
    bound[j] = std::max(j == 0 ? std::size_t{0} : bound[j - 1], p.relators[j].alphabet_bound());
  }
  for (std::size_t j = 0; j + 1 < m; ++j) {
    if (bound[j] < bound[j + 1]) {
      finest.generator_cuts.push_back(bound[j]);
      finest.relator_cuts.push_back(j + 1);
    }
  }
  finest.generator_cuts.push_back(n);
  finest.relator_cuts.push_back(m);
  try {
    validate_blocks(p, finest);
    auto b = identity_blocking(p, finest);
    if (std::find(out.begin(), out.end(), b) == out.end()) {
      if (out.size() >= cap && !out.empty()) {
        out.back() = std::move(b);
      } else {
        out.push_back(std::move(b));
      }
    }
  } catch (const ValidationError&) {
  }
  return out;
}

Verdict block_itest_search(const Presentation& p, const SearchOptions& options, std::size_t cap) {
  Verdict out;
  out.test = "block-itest";
  out.status = Status::Inconclusive;
  bool budget_hit = false;
  std::size_t tried = 0;
  for (const auto& blocking : detect_blocks(p, cap)) {
    if (blocking.blocks.block_count() < 2) {
      continue;
    }
    ++tried;
    auto q = reorder(p, blocking.generator_order, blocking.relator_order);
    std::vector<RationalVector> vectors;
    for (std::size_t l = 0; l < blocking.blocks.block_count(); ++l) {
      const auto& b = blocking.blocks;
      Submatrix range{l == 0 ? 0 : b.generator_cuts[l - 1], b.generator_cuts[l],
                      l == 0 ? 0 : b.relator_cuts[l - 1], b.relator_cuts[l]};
      SearchStats stats;
      auto found = search_submatrix(q, range, options, stats);
      if (!found.vector) {
        budget_hit = budget_hit || found.reason == InconclusiveReason::Budget;
        break;
      }
      vectors.push_back(to_original(*found.vector, blocking.generator_order));
    }
    if (vectors.size() == blocking.blocks.block_count()) {
      auto verdict = block_itest(p, blocking, vectors);
      if (verdict.status != Status::ProvenDR) {
        throw std::logic_error("block_itest_search: found vectors do not pass the block test");
      }
      return verdict;
    }
  }
  out.reason = budget_hit ? InconclusiveReason::Budget : InconclusiveReason::None;
  out.note = tried == 0 ? "no nontrivial block structure"
                        : "no blocking among " + std::to_string(tried) + " candidates passed";
  return out;
}

}  // namespace drtest
