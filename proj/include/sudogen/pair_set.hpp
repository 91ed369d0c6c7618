#pragma once

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "sudogen/pi_matrix.hpp"

namespace sudogen {

// Iteration order over the pairs of [n] x [n].  AMajor follows the canonical
// index (<1,1>, <1,2>, ..., second component fastest); BMajor varies the
// first component fastest (<1,1>, <2,1>, ...).  Counting results must not
// depend on which one a search uses.
enum class PairOrder { AMajor, BMajor };

// Subset of [n] x [n], one bit per canonical pair index.  This is the cell
// payload of the candidate grid, so the mutators are branch-light and
// allocation-free.
class PairSet {
 public:
  PairSet() = default;

  static PairSet full(int n) {
    PairSet s = none(n);
    const int total = n * n;
    for (int w = 0; w < static_cast<int>(s.words_.size()); ++w) {
      const int bits = std::min(64, total - w * 64);
      s.words_[w] = bits == 64 ? ~std::uint64_t{0}
                               : ((std::uint64_t{1} << bits) - 1);
    }
    return s;
  }

  static PairSet none(int n) {
    if (n < 1) throw std::invalid_argument("order must be positive");
    PairSet s;
    s.n_ = n;
    s.words_.assign(static_cast<std::size_t>((n * n + 63) / 64), 0);
    return s;
  }

  int order() const { return n_; }

  bool contains(Pair p) const {
    const int idx = pair_index(p, n_);
    return (words_[idx >> 6] >> (idx & 63)) & 1;
  }

  // true when the pair was not yet present
  bool insert(Pair p) {
    const int idx = pair_index(p, n_);
    const std::uint64_t bit = std::uint64_t{1} << (idx & 63);
    const bool added = !(words_[idx >> 6] & bit);
    words_[idx >> 6] |= bit;
    return added;
  }

  // true when the pair was present
  bool erase(Pair p) {
    const int idx = pair_index(p, n_);
    const std::uint64_t bit = std::uint64_t{1} << (idx & 63);
    const bool had = words_[idx >> 6] & bit;
    words_[idx >> 6] &= ~bit;
    return had;
  }

  int size() const {
    int total = 0;
    for (std::uint64_t w : words_) total += std::popcount(w);
    return total;
  }

  bool empty() const {
    for (std::uint64_t w : words_)
      if (w) return false;
    return true;
  }

  // pair with the smallest canonical index; the set must be non-empty
  Pair min() const {
    for (std::size_t w = 0; w < words_.size(); ++w)
      if (words_[w])
        return pair_from_index(static_cast<int>(w * 64) +
                                   std::countr_zero(words_[w]),
                               n_);
    throw std::logic_error("min() on an empty pair set");
  }

  // ascending canonical index
  template <typename F>
  void for_each(F&& f) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      std::uint64_t bits = words_[w];
      while (bits) {
        const int idx = static_cast<int>(w * 64) + std::countr_zero(bits);
        f(pair_from_index(idx, n_));
        bits &= bits - 1;
      }
    }
  }

  std::vector<Pair> to_vector(PairOrder order = PairOrder::AMajor) const {
    std::vector<Pair> out;
    out.reserve(static_cast<std::size_t>(size()));
    if (order == PairOrder::AMajor) {
      for_each([&](Pair p) { out.push_back(p); });
    } else {
      for (int b = 1; b <= n_; ++b)
        for (int a = 1; a <= n_; ++a)
          if (contains({a, b})) out.push_back({a, b});
    }
    return out;
  }

  friend bool operator==(const PairSet&, const PairSet&) = default;

 private:
  int n_ = 0;
  std::vector<std::uint64_t> words_;
};

}  // namespace sudogen
