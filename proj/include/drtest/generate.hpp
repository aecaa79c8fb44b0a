#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "drtest/presentation.hpp"

// Seeded instance generators. Draws go through uniform_below, not
// std::uniform_int_distribution, so output is identical across standard
// libraries.

namespace drtest {

using Rng = std::mt19937_64;

/// Uniform in [0, n); n > 0.
std::uint64_t uniform_below(Rng& rng, std::uint64_t n);
/// Uniform in [lo, hi].
std::int64_t uniform_between(Rng& rng, std::int64_t lo, std::int64_t hi);

/// Uniform labeled tree on `vertices` vertices (Pruefer code), random edge
/// orientations and uniformly random labels. Vertices are named a, b, ...
Log random_lot(Rng& rng, std::size_t vertices);

/// Arbitrary LOG: `edges` edges with independent uniform endpoints and labels.
Log random_log(Rng& rng, std::size_t vertices, std::size_t edges);

/// Random word over n generators, length in [1, max_length].
Word random_word(Rng& rng, std::size_t n, std::size_t max_length);
Word random_positive_word(Rng& rng, std::size_t n, std::size_t length);

/// Words w_1..w_depth over {x, y} for a commutator tower, each nonempty of
/// length <= max_length and all positive or all negative.
std::vector<Word> random_tower_words(Rng& rng, std::size_t depth, std::size_t max_length);

/// Adian presentation on `generators` generators with `relations` relations
/// whose sides have equal length in [1, max_length].
AdianPresentation random_adian(Rng& rng, std::size_t generators, std::size_t relations,
                               std::size_t max_length);

/// Names x1, x2, ... or a, b, ... when n <= 26.
std::vector<std::string> generator_names(std::size_t n);

}  // namespace drtest
