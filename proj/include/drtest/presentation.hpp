#pragma once

#include <cstdint>
#include <iterator>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "drtest/word.hpp"

namespace drtest {

class ValidationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct Presentation {
  std::vector<std::string> generators;
  std::vector<Word> relators;

  std::size_t generator_count() const { return generators.size(); }
  std::size_t relator_count() const { return relators.size(); }

  /// Unique names, no empty relator, every letter within the alphabet.
  void validate() const;

  friend bool operator==(const Presentation&, const Presentation&) = default;
};

/// new generator t is old generator_order[t]; new relator t is old relator_order[t].
Presentation reorder(const Presentation& p, const std::vector<std::size_t>& generator_order,
                     const std::vector<std::size_t>& relator_order);

Presentation subpresentation(const Presentation& p, std::uint64_t relator_mask);

/// All 2^m subpresentations on the same generators, lazily, in mask order.
class Subpresentations {
 public:
  explicit Subpresentations(const Presentation& p);

  class iterator {
   public:
    using iterator_category = std::input_iterator_tag;
    using value_type = Presentation;
    using difference_type = std::ptrdiff_t;
    using pointer = const Presentation*;
    using reference = Presentation;

    iterator(const Presentation* p, std::uint64_t mask) : p_(p), mask_(mask) {}
    Presentation operator*() const { return subpresentation(*p_, mask_); }
    std::uint64_t mask() const { return mask_; }
    iterator& operator++() {
      ++mask_;
      return *this;
    }
    friend bool operator==(const iterator& a, const iterator& b) { return a.mask_ == b.mask_; }

   private:
    const Presentation* p_;
    std::uint64_t mask_;
  };

  iterator begin() const { return {p_, 0}; }
  iterator end() const { return {p_, end_}; }
  std::uint64_t size() const { return end_; }

 private:
  const Presentation* p_;
  std::uint64_t end_;
};

inline Subpresentations subpresentations(const Presentation& p) { return Subpresentations(p); }

struct LogEdge {
  std::size_t init = 0;
  std::size_t terminal = 0;
  std::size_t label = 0;
  friend bool operator==(const LogEdge&, const LogEdge&) = default;
};

/// Labeled oriented graph.
struct Log {
  std::vector<std::string> vertices;
  std::vector<LogEdge> edges;

  std::size_t vertex_count() const { return vertices.size(); }
  std::size_t edge_count() const { return edges.size(); }

  void validate() const;
  /// Every edge reversed (init and terminal swapped), labels kept.
  Log opposite() const;

  friend bool operator==(const Log&, const Log&) = default;
};

/// Underlying graph (init--terminal) is a tree.
bool is_lot(const Log& g);

/// Subsets of vertices and edges over a parent Log's indices. A sub-LOG is
/// admissible when each kept edge keeps its initial, terminal and label vertex.
struct SubLog {
  std::vector<bool> vertices;
  std::vector<bool> edges;

  static SubLog full(const Log& g);
  bool admissible(const Log& g) const;
  std::size_t vertex_count() const;
  std::size_t edge_count() const;
  bool discrete() const { return edge_count() == 0; }

  friend bool operator==(const SubLog&, const SubLog&) = default;
  friend bool operator<(const SubLog& a, const SubLog& b) {
    return a.vertices != b.vertices ? a.vertices < b.vertices : a.edges < b.edges;
  }
};

/// Relator x z y^-1 z^-1 for an edge x -> y labeled z; one generator per vertex.
Presentation log_to_presentation(const Log& g);

struct AdianRelation {
  Word lhs;
  Word rhs;
  friend bool operator==(const AdianRelation&, const AdianRelation&) = default;
};

struct AdianPresentation {
  std::vector<std::string> generators;
  std::vector<AdianRelation> relations;

  /// Both sides of every relation nontrivial and positive.
  void validate() const;
  /// Relators U V^-1.
  Presentation to_presentation() const;

  friend bool operator==(const AdianPresentation&, const AdianPresentation&) = default;
};

/// Splits each literal relator as (positive U)(inverse of positive V).
std::optional<AdianPresentation> detect_adian(const Presentation& p);

}  // namespace drtest
