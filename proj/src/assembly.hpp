#pragma once

// Row-wise assembly of coboundary matrices.
//
// Every coboundary formula has the shape "value of the new cochain on a basis
// point = sum of (scalar) * (matrix) * (old cochain evaluated on some vectors)".
// The old cochain is unknown, so each such term contributes a linear
// functional in its coordinates. RowBuilder collects those functionals for one
// output point (one row per target coordinate), expanding vector arguments
// multilinearly into the increasing wedge basis.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <span>
#include <utility>
#include <vector>

#include "rrb/linalg.hpp"
#include "rrb/wedge.hpp"

namespace rrb::detail {

using SparseVec = std::vector<std::pair<std::size_t, Rational>>;

SparseVec sparse(const Vector& v);
SparseVec basis(std::size_t i);

/// One summand Hom(wedge^degree A (x) Tail, Target) of a cochain space,
/// placed at `offset` in the concatenated coordinates. Coordinates are
/// (tuple, tail, target) with the target fastest.
inline constexpr std::size_t kNoTail = SIZE_MAX;

struct Block {
  std::size_t offset = 0;
  std::size_t arg_dim = 0;
  std::size_t degree = 0;
  std::size_t tail_dim = kNoTail;
  std::size_t target_dim = 0;

  Block() = default;
  Block(std::size_t offset, std::size_t arg_dim, std::size_t degree, std::size_t tail_dim, std::size_t target_dim);

  std::size_t tuples() const { return binomial(arg_dim, degree); }
  bool has_tail() const { return tail_dim != kNoTail; }
  std::size_t tails() const { return has_tail() ? tail_dim : 1; }
  std::size_t size() const;
  std::size_t end() const { return offset + size(); }
  std::size_t coordinate(std::size_t tuple, std::size_t tail, std::size_t c) const {
    return offset + (tuple * tails() + tail) * target_dim + c;
  }
};

class RowBuilder {
 public:
  explicit RowBuilder(std::size_t target_dim) : rows_(target_dim) {}

  /// rows += scale * post * f(args..., tail), where f is the cochain block
  /// `b`. `post` maps the block's target to this builder's target; nullptr
  /// means the identity.
  void add(const Block& b, const std::vector<SparseVec>& args, const SparseVec* tail, const Matrix* post,
           const Rational& scale);

  const std::vector<std::map<std::size_t, Rational>>& rows() const { return rows_; }

 private:
  void expand(const Block& b, const std::vector<SparseVec>& args, std::size_t pos, IndexTuple& idx,
              const Rational& coef, const SparseVec* tail, const Matrix* post);

  std::vector<std::map<std::size_t, Rational>> rows_;
};

/// Fills the rows of `m` belonging to block `out` by calling
/// eval(tuple, tail, builder) on every output point. Work is split across
/// assembly_threads() threads; each point owns its rows, so the result does
/// not depend on the thread count.
template <class F>
void fill_block(Matrix& m, const Block& out, F&& eval);

/// Number of worker threads (environment variable RRB_THREADS, default 1).
std::size_t assembly_threads();

/// Runs body(i) for i in [0, n) on assembly_threads() threads.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body);

template <class F>
void fill_block(Matrix& m, const Block& out, F&& eval) {
  const WedgeBasis wb(out.arg_dim, out.degree);
  const std::size_t points = wb.size() * out.tails();
  parallel_for(points, [&](std::size_t p) {
    const std::size_t t = p / out.tails(), tail = p % out.tails();
    RowBuilder rb(out.target_dim);
    eval(wb.tuple(t), tail, rb);
    for (std::size_t c = 0; c < out.target_dim; ++c) {
      const std::size_t row = out.coordinate(t, tail, c);
      for (const auto& [col, v] : rb.rows()[c]) m(row, col) = v;
    }
  });
}

/// args with position `skip` removed.
std::vector<SparseVec> without(const std::vector<SparseVec>& args, std::size_t skip);
/// args with positions i < j removed and `front` prepended.
std::vector<SparseVec> replace_pair(const std::vector<SparseVec>& args, std::size_t i, std::size_t j, SparseVec front);
std::vector<SparseVec> basis_args(const IndexTuple& t);

inline int parity_sign(std::size_t k) { return k % 2 == 0 ? 1 : -1; }

}  // namespace rrb::detail
