#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "drtest/presentation.hpp"
#include "drtest/rational.hpp"
#include "drtest/weight_matrix.hpp"

namespace drtest {

enum class Status { ProvenDR, ProvenAspherical, Inconclusive, Inapplicable };

enum class InconclusiveReason { None, Exhausted, Budget };

/// Cut points n_1 < ... < n_k = n and m_1 < ... < m_k = m: relators
/// 1..m_l use only generators 1..n_l.
struct BlockStructure {
  std::vector<std::size_t> generator_cuts;
  std::vector<std::size_t> relator_cuts;

  std::size_t block_count() const { return relator_cuts.size(); }
  friend bool operator==(const BlockStructure&, const BlockStructure&) = default;
};

/// A reordering of the presentation (new index t is old order[t]) together
/// with a block structure valid for the reordered presentation.
struct Blocking {
  std::vector<std::size_t> generator_order;
  std::vector<std::size_t> relator_order;
  BlockStructure blocks;
  friend bool operator==(const Blocking&, const Blocking&) = default;
};

struct VectorWitness {
  RationalVector vector;
  GoodnessWitness goodness;
};

/// One vector per block; goodness orders are local to each diagonal block.
struct BlockWitness {
  Blocking blocking;
  std::vector<RationalVector> vectors;
  std::vector<GoodnessWitness> goodness;
};

/// Underlying graph that is a tree.
struct HowieWitness {
  bool initial_graph = true;  // false: the terminal graph
};

enum class DeforestKind { ILT, TLI };
/// For TLI, IL reads as TL and T reads as I.
enum class Clause { IL, T };

struct DeforestStep {
  std::size_t edge = 0;
  std::size_t vertex = 0;
  Clause clause = Clause::IL;
};

struct DeforestationWitness {
  DeforestKind kind = DeforestKind::ILT;
  SubLog source;
  SubLog target;
  std::vector<DeforestStep> steps;
  /// v = (1,...,1) for ILT or (-1,...,-1) for TLI with the induced orders.
  std::optional<VectorWitness> induced;
};

/// Stages Gamma_0 > Gamma_1 > ... > Gamma_k, the last one discrete.
struct StagedDeforestationWitness {
  std::vector<DeforestationWitness> stages;
  std::optional<BlockWitness> blocks;
};

enum class Side { Left, Right };

struct Deletion {
  std::size_t edge = 0;
  std::size_t generator = 0;
};

struct DeletionWitness {
  Side side = Side::Left;
  bool generalized = false;
  std::vector<Deletion> steps;
  std::optional<VectorWitness> induced;
};

struct HullWitness {
  std::size_t generator = 0;
  std::size_t position = 0;  // 1-based letter position of the occurrence
  RationalVector point;
  RationalVector normal;
  /// Every (position, point) that qualified, in scan order.
  std::vector<std::pair<std::size_t, RationalVector>> candidates;
  VectorWitness confirmation;
};

struct DyckWitness {
  std::size_t rotation = 0;  // 0-based start of the rotation in the relator
  std::size_t x = 0;
  std::size_t y = 1;
  bool inverted = false;  // the x-shape is a negative strong Dyck word
  Word rotated;
  std::size_t syllables = 0;
};

using Witness = std::variant<std::monostate, VectorWitness, BlockWitness, HowieWitness,
                             DeforestationWitness, StagedDeforestationWitness, DeletionWitness,
                             HullWitness, DyckWitness>;

struct Verdict {
  Status status = Status::Inconclusive;
  std::string test;
  std::string note;
  Witness witness;
  InconclusiveReason reason = InconclusiveReason::None;

  bool proven() const { return status == Status::ProvenDR || status == Status::ProvenAspherical; }
};

std::string to_string(Status s);
std::string to_string(InconclusiveReason r);

}  // namespace drtest
