#include "drtest/generate.hpp"

#include <stdexcept>

namespace drtest {

std::uint64_t uniform_below(Rng& rng, std::uint64_t n) {
  if (n == 0) {
    throw std::invalid_argument("uniform_below: empty range");
  }
  // Reject the top partial copy of [0, n) to avoid modulo bias.
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
  std::uint64_t x;
  do {
    x = rng();
  } while (x >= limit);
  return x % n;
}

std::int64_t uniform_between(Rng& rng, std::int64_t lo, std::int64_t hi) {
  return lo + static_cast<std::int64_t>(uniform_below(rng, static_cast<std::uint64_t>(hi - lo) + 1));
}

std::vector<std::string> generator_names(std::size_t n) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < n; ++i) {
    out.push_back(n <= 26 ? std::string(1, static_cast<char>('a' + i)) : "x" + std::to_string(i + 1));
  }
  return out;
}

Log random_lot(Rng& rng, std::size_t vertices) {
  if (vertices == 0) {
    throw std::invalid_argument("random_lot: need at least one vertex");
  }
  Log g{generator_names(vertices), {}};
  if (vertices == 1) {
    return g;
  }
  std::vector<std::size_t> code;
  for (std::size_t t = 0; t + 2 < vertices; ++t) {
    code.push_back(uniform_below(rng, vertices));
  }
  std::vector<std::size_t> degree(vertices, 1);
  for (auto c : code) {
    ++degree[c];
  }
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  for (auto c : code) {
    for (std::size_t leaf = 0; leaf < vertices; ++leaf) {
      if (degree[leaf] == 1) {
        edges.emplace_back(leaf, c);
        --degree[leaf];
        --degree[c];
        break;
      }
    }
  }
  std::size_t u = vertices;
  for (std::size_t v = 0; v < vertices; ++v) {
    if (degree[v] == 1) {
      if (u == vertices) {
        u = v;
      } else {
        edges.emplace_back(u, v);
      }
    }
  }
  for (auto [a, b] : edges) {
    if (uniform_below(rng, 2) == 1) {
      std::swap(a, b);
    }
    g.edges.push_back({a, b, static_cast<std::size_t>(uniform_below(rng, vertices))});
  }
  return g;
}

Log random_log(Rng& rng, std::size_t vertices, std::size_t edges) {
  Log g{generator_names(vertices), {}};
  for (std::size_t e = 0; e < edges; ++e) {
    std::size_t a = uniform_below(rng, vertices);
    std::size_t b = uniform_below(rng, vertices);
    std::size_t c = uniform_below(rng, vertices);
    g.edges.push_back({a, b, c});
  }
  return g;
}

Word random_word(Rng& rng, std::size_t n, std::size_t max_length) {
  Word w;
  std::size_t len = 1 + uniform_below(rng, max_length);
  for (std::size_t t = 0; t < len; ++t) {
    w.push_back({static_cast<std::size_t>(uniform_below(rng, n)), uniform_below(rng, 2) ? 1 : -1});
  }
  return w;
}

Word random_positive_word(Rng& rng, std::size_t n, std::size_t length) {
  Word w;
  for (std::size_t t = 0; t < length; ++t) {
    w.push_back(pos(uniform_below(rng, n)));
  }
  return w;
}

std::vector<Word> random_tower_words(Rng& rng, std::size_t depth, std::size_t max_length) {
  std::vector<Word> out;
  for (std::size_t i = 0; i < depth; ++i) {
    Word w = random_positive_word(rng, 2, 1 + uniform_below(rng, max_length));
    out.push_back(uniform_below(rng, 2) ? w : w.inverse());
  }
  return out;
}

AdianPresentation random_adian(Rng& rng, std::size_t generators, std::size_t relations,
                               std::size_t max_length) {
  AdianPresentation a{generator_names(generators), {}};
  for (std::size_t j = 0; j < relations; ++j) {
    std::size_t len = 1 + uniform_below(rng, max_length);
    a.relations.push_back(
        {random_positive_word(rng, generators, len), random_positive_word(rng, generators, len)});
  }
  return a;
}

}  // namespace drtest
