#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace gpv {

using vertex = int;

/// Subset of {0, ..., n-1} stored as a packed bit vector.
class vertex_set {
public:
  vertex_set() = default;
  explicit vertex_set(int universe);
  vertex_set(int universe, std::initializer_list<vertex> members);
  vertex_set(int universe, const std::vector<vertex> &members);

  static vertex_set full(int universe);

  int universe() const { return n_; }

  bool contains(vertex v) const {
    return v >= 0 && v < n_ && ((words_[static_cast<std::size_t>(v) >> 6] >> (v & 63)) & 1u);
  }
  void insert(vertex v);
  void erase(vertex v);

  int size() const;
  bool empty() const;

  /// Smallest member >= from, or -1.
  vertex next(vertex from) const;
  vertex first() const { return next(0); }

  std::vector<vertex> members() const;

  vertex_set complement() const;

  vertex_set &operator|=(const vertex_set &o);
  vertex_set &operator&=(const vertex_set &o);
  /// Set difference.
  vertex_set &operator-=(const vertex_set &o);

  bool intersects(const vertex_set &o) const;
  bool is_subset_of(const vertex_set &o) const;

  friend vertex_set operator|(vertex_set a, const vertex_set &b) { return a |= b; }
  friend vertex_set operator&(vertex_set a, const vertex_set &b) { return a &= b; }
  friend vertex_set operator-(vertex_set a, const vertex_set &b) { return a -= b; }

  friend bool operator==(const vertex_set &a, const vertex_set &b) = default;

  /// Lexicographic order on the ascending member lists.
  static bool lex_less(const vertex_set &a, const vertex_set &b);

  /// "{0, 3, 5}"
  std::string to_string() const;

  template <class F> void for_each(F &&f) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      std::uint64_t bits = words_[w];
      while (bits) {
        int b = std::countr_zero(bits);
        f(static_cast<vertex>(w * 64 + static_cast<std::size_t>(b)));
        bits &= bits - 1;
      }
    }
  }

private:
  void check_universe(const vertex_set &o) const;

  int n_ = 0;
  std::vector<std::uint64_t> words_;
};

} // namespace gpv
