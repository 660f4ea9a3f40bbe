#pragma once

#include <cstdint>
#include <vector>

namespace grpgeo {

// Dense bitset over element indices 0..n-1. Sized at construction; all
// binary operations require equal universe sizes.
class Bitset {
 public:
  Bitset() = default;
  explicit Bitset(int n) : n_(n), w_((n + 63) / 64, 0) {}

  int universe() const { return n_; }

  static Bitset universe(int n) {
    Bitset b(n);
    for (std::size_t i = 0; i < b.w_.size(); ++i) b.w_[i] = ~std::uint64_t{0};
    if (n & 63) b.w_.back() = (std::uint64_t{1} << (n & 63)) - 1;
    return b;
  }

  bool test(int i) const { return (w_[i >> 6] >> (i & 63)) & 1u; }
  void set(int i) { w_[i >> 6] |= std::uint64_t{1} << (i & 63); }
  void reset(int i) { w_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }

  int count() const {
    int c = 0;
    for (auto w : w_) c += __builtin_popcountll(w);
    return c;
  }

  bool operator==(const Bitset& o) const { return n_ == o.n_ && w_ == o.w_; }
  bool operator!=(const Bitset& o) const { return !(*this == o); }

  Bitset operator&(const Bitset& o) const {
    Bitset r(n_);
    for (std::size_t i = 0; i < w_.size(); ++i) r.w_[i] = w_[i] & o.w_[i];
    return r;
  }
  Bitset operator|(const Bitset& o) const {
    Bitset r(n_);
    for (std::size_t i = 0; i < w_.size(); ++i) r.w_[i] = w_[i] | o.w_[i];
    return r;
  }

  bool subset_of(const Bitset& o) const {
    for (std::size_t i = 0; i < w_.size(); ++i)
      if (w_[i] & ~o.w_[i]) return false;
    return true;
  }

  // Total order used for deterministic lattice output.
  bool lex_less(const Bitset& o) const {
    for (std::size_t i = 0; i < w_.size(); ++i)
      if (w_[i] != o.w_[i]) return w_[i] < o.w_[i];
    return false;
  }

  std::uint64_t hash() const {
    std::uint64_t h = 1469598103934665603ull;
    for (auto w : w_) {
      h ^= w;
      h *= 1099511628211ull;
    }
    return h;
  }

  std::vector<int> members() const {
    std::vector<int> out;
    for (int i = 0; i < n_; ++i)
      if (test(i)) out.push_back(i);
    return out;
  }

 private:
  int n_ = 0;
  std::vector<std::uint64_t> w_;
};

struct BitsetHash {
  std::size_t operator()(const Bitset& b) const { return static_cast<std::size_t>(b.hash()); }
};

}  // namespace grpgeo
