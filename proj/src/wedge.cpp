#include "rrb/wedge.hpp"

#include <cstdint>
#include <stdexcept>

namespace rrb {

std::size_t binomial(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  if (k > n - k) k = n - k;
  std::size_t r = 1;
  for (std::size_t i = 1; i <= k; ++i) {
    std::size_t num = n - k + i;
    if (r > SIZE_MAX / num) return SIZE_MAX;
    r = r * num / i;  // exact: r * num is C(n-k+i, i) * i
  }
  return r;
}

WedgeBasis::WedgeBasis(std::size_t n, std::size_t k) : n_(n), k_(k) {
  if (k > n) return;
  IndexTuple t(k);
  for (std::size_t i = 0; i < k; ++i) t[i] = i;
  while (true) {
    tuples_.push_back(t);
    // advance to the lexicographic successor
    std::size_t i = k;
    while (i > 0 && t[i - 1] == n - k + i - 1) --i;
    if (i == 0) break;
    ++t[i - 1];
    for (std::size_t j = i; j < k; ++j) t[j] = t[j - 1] + 1;
  }
}

std::size_t WedgeBasis::index(const IndexTuple& t) const {
  if (t.size() != k_) throw std::invalid_argument("wedge index: wrong tuple length");
  return wedge_index(n_, t);
}

std::size_t wedge_index(std::size_t n, const IndexTuple& t) {
  const std::size_t k = t.size();
  std::size_t idx = 0;
  for (std::size_t p = 0; p < k; ++p)
    for (std::size_t v = (p == 0 ? 0 : t[p - 1] + 1); v < t[p]; ++v) idx += binomial(n - 1 - v, k - 1 - p);
  return idx;
}

int sort_with_sign(IndexTuple& t) {
  int sign = 1;
  for (std::size_t i = 1; i < t.size(); ++i) {
    for (std::size_t j = i; j > 0 && t[j - 1] >= t[j]; --j) {
      if (t[j - 1] == t[j]) return 0;
      std::swap(t[j - 1], t[j]);
      sign = -sign;
    }
  }
  return sign;
}

}  // namespace rrb
