#include "assembly.hpp"

#include <cstdlib>
#include <stdexcept>
#include <string>
#include <thread>

namespace rrb::detail {

SparseVec sparse(const Vector& v) {
  SparseVec s;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (v[i] != 0) s.emplace_back(i, v[i]);
  return s;
}

SparseVec basis(std::size_t i) { return {{i, Rational(1)}}; }

Block::Block(std::size_t offset, std::size_t arg_dim, std::size_t degree, std::size_t tail_dim,
             std::size_t target_dim)
    : offset(offset), arg_dim(arg_dim), degree(degree), tail_dim(tail_dim), target_dim(target_dim) {}

std::size_t Block::size() const { return tuples() * tails() * target_dim; }

void RowBuilder::add(const Block& b, const std::vector<SparseVec>& args, const SparseVec* tail, const Matrix* post,
                     const Rational& scale) {
  if (args.size() != b.degree) throw std::logic_error("cochain evaluated on the wrong number of arguments");
  if ((tail != nullptr) != b.has_tail()) throw std::logic_error("cochain tail argument mismatch");
  if (post ? (post->cols() != b.target_dim || post->rows() != rows_.size()) : b.target_dim != rows_.size())
    throw std::logic_error("post-composition has the wrong shape");
  if (scale == 0 || b.size() == 0) return;
  IndexTuple idx;
  idx.reserve(args.size());
  expand(b, args, 0, idx, scale, tail, post);
}

void RowBuilder::expand(const Block& b, const std::vector<SparseVec>& args, std::size_t pos, IndexTuple& idx,
                        const Rational& coef, const SparseVec* tail, const Matrix* post) {
  if (pos < args.size()) {
    for (const auto& [i, v] : args[pos]) {
      idx.push_back(i);
      expand(b, args, pos + 1, idx, coef * v, tail, post);
      idx.pop_back();
    }
    return;
  }
  IndexTuple sorted = idx;
  const int sign = sort_with_sign(sorted);
  if (sign == 0) return;
  const std::size_t t = wedge_index(b.arg_dim, sorted);
  const Rational c0 = sign > 0 ? coef : Rational(-coef);
  auto emit = [&](std::size_t tl, const Rational& c) {
    for (std::size_t k = 0; k < b.target_dim; ++k) {
      const std::size_t col = b.coordinate(t, tl, k);
      if (post) {
        for (std::size_t r = 0; r < post->rows(); ++r)
          if ((*post)(r, k) != 0) rows_[r][col] += c * (*post)(r, k);
      } else {
        rows_[k][col] += c;
      }
    }
  };
  if (tail) {
    for (const auto& [tl, v] : *tail) emit(tl, c0 * v);
  } else {
    emit(0, c0);
  }
}

std::size_t assembly_threads() {
  if (const char* env = std::getenv("RRB_THREADS")) {
    try {
      const long n = std::stol(env);
      if (n >= 1) return static_cast<std::size_t>(n);
    } catch (const std::exception&) {
    }
  }
  return 1;
}

void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body) {
  const std::size_t threads = std::min(assembly_threads(), n);
  if (threads <= 1) {
    for (std::size_t i = 0; i < n; ++i) body(i);
    return;
  }
  std::vector<std::thread> pool;
  std::vector<std::exception_ptr> errors(threads);
  for (std::size_t w = 0; w < threads; ++w)
    pool.emplace_back([&, w] {
      try {
        for (std::size_t i = w; i < n; i += threads) body(i);
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  for (auto& t : pool) t.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
}

std::vector<SparseVec> without(const std::vector<SparseVec>& args, std::size_t skip) {
  std::vector<SparseVec> out;
  for (std::size_t i = 0; i < args.size(); ++i)
    if (i != skip) out.push_back(args[i]);
  return out;
}

std::vector<SparseVec> replace_pair(const std::vector<SparseVec>& args, std::size_t i, std::size_t j,
                                    SparseVec front) {
  std::vector<SparseVec> out{std::move(front)};
  for (std::size_t k = 0; k < args.size(); ++k)
    if (k != i && k != j) out.push_back(args[k]);
  return out;
}

std::vector<SparseVec> basis_args(const IndexTuple& t) {
  std::vector<SparseVec> out;
  for (auto i : t) out.push_back(basis(i));
  return out;
}

}  // namespace rrb::detail
