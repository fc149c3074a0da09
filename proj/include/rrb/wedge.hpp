#pragma once

// Index bookkeeping for alternating multilinear maps.
//
// A basis of the k-th exterior power of an n-dimensional space is given by
// strictly increasing index tuples, ordered lexicographically.

#include <cstddef>
#include <utility>
#include <vector>

namespace rrb {

using IndexTuple = std::vector<std::size_t>;

/// Binomial coefficient; saturates at SIZE_MAX instead of overflowing.
std::size_t binomial(std::size_t n, std::size_t k);

class WedgeBasis {
 public:
  WedgeBasis(std::size_t n, std::size_t k);

  std::size_t n() const { return n_; }
  std::size_t k() const { return k_; }
  std::size_t size() const { return tuples_.size(); }
  const IndexTuple& tuple(std::size_t idx) const { return tuples_[idx]; }
  const std::vector<IndexTuple>& tuples() const& { return tuples_; }
  std::vector<IndexTuple> tuples() && { return std::move(tuples_); }
  /// Position of a strictly increasing tuple.
  std::size_t index(const IndexTuple& t) const;

 private:
  std::size_t n_, k_;
  std::vector<IndexTuple> tuples_;
};

/// Lexicographic position of a strictly increasing k-tuple from {0..n-1}.
std::size_t wedge_index(std::size_t n, const IndexTuple& t);

/// Sorts `t` in place and returns the sign of the sorting permutation, or 0
/// if `t` has a repeated entry.
int sort_with_sign(IndexTuple& t);

}  // namespace rrb
