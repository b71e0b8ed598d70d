#ifndef RLAT_MODELGEN_HPP
#define RLAT_MODELGEN_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "rlat/filters.hpp"
#include "rlat/lattice.hpp"

namespace rlat {

inline constexpr int kMaxEnumOrder = 7;

/// Isomorphism-class certificate: the lexicographically least relabeled
/// encoding of the leq and ⊙ tables, found by partition refinement plus
/// backtracking over the residual permutations.
struct CanonicalForm {
  std::vector<std::uint8_t> bytes;
  friend auto operator<=>(const CanonicalForm&, const CanonicalForm&) = default;
};

CanonicalForm canonical_form(const Lattice& l);

struct EnumerationResult {
  std::vector<Lattice> classes;  // one representative per class, certificate order
  bool truncated = false;
};

/// Streams one representative per isomorphism class of order exactly n.
EnumerationResult enumerate_order(int n, std::size_t cap = 1u << 20);

/// Class counts via the naive generator (all tables, full-axiom filter,
/// brute-force n! dedup). Only sensible for n ≤ 4.
std::size_t naive_class_count(int n);

/// Boolean query over the predicate catalog.
/// Grammar: expr := atom | '!' expr | expr '&' expr | '(' expr ')'.
struct Query {
  enum class Scope { Filter, Lattice };
  struct Node {
    enum class Kind { Atom, Not, And } kind;
    int atom = -1;           // index into the scope's atom table
    int lhs = -1, rhs = -1;  // children for Not (lhs) and And
  };
  Scope scope;
  std::vector<Node> nodes;
  int root = -1;
  std::string text;
};

Query parse_query(const std::string& text);

struct SearchHit {
  Lattice lattice;
  std::optional<ElementSet> witness;  // satisfying filter, for filter scope
};

struct SearchResult {
  std::vector<SearchHit> hits;
  bool truncated = false;
};

/// All (class, filter) pairs satisfying the query, smallest orders first.
SearchResult search(const Query& q, int max_order, std::size_t cap = 1u << 20);

}  // namespace rlat

#endif
