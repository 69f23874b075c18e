#include "gpv/vertex_set.hpp"

#include "gpv/errors.hpp"

#include <algorithm>
#include <sstream>

namespace gpv {

vertex_set::vertex_set(int universe) : n_(universe) {
  if (universe < 0)
    throw index_error("negative universe size");
  words_.assign((static_cast<std::size_t>(universe) + 63) / 64, 0);
}

vertex_set::vertex_set(int universe, std::initializer_list<vertex> members)
    : vertex_set(universe) {
  for (vertex v : members)
    insert(v);
}

vertex_set::vertex_set(int universe, const std::vector<vertex> &members)
    : vertex_set(universe) {
  for (vertex v : members)
    insert(v);
}

vertex_set vertex_set::full(int universe) {
  vertex_set s(universe);
  for (vertex v = 0; v < universe; ++v)
    s.insert(v);
  return s;
}

void vertex_set::insert(vertex v) {
  if (v < 0 || v >= n_)
    throw index_error("vertex " + std::to_string(v) + " outside universe of size " +
                      std::to_string(n_));
  words_[static_cast<std::size_t>(v) >> 6] |= std::uint64_t{1} << (v & 63);
}

void vertex_set::erase(vertex v) {
  if (v < 0 || v >= n_)
    throw index_error("vertex " + std::to_string(v) + " outside universe of size " +
                      std::to_string(n_));
  words_[static_cast<std::size_t>(v) >> 6] &= ~(std::uint64_t{1} << (v & 63));
}

int vertex_set::size() const {
  int c = 0;
  for (auto w : words_)
    c += std::popcount(w);
  return c;
}

bool vertex_set::empty() const {
  return std::all_of(words_.begin(), words_.end(), [](auto w) { return w == 0; });
}

vertex vertex_set::next(vertex from) const {
  if (from < 0)
    from = 0;
  if (from >= n_)
    return -1;
  std::size_t w = static_cast<std::size_t>(from) >> 6;
  std::uint64_t bits = words_[w] & (~std::uint64_t{0} << (from & 63));
  while (true) {
    if (bits)
      return static_cast<vertex>(w * 64 + static_cast<std::size_t>(std::countr_zero(bits)));
    if (++w == words_.size())
      return -1;
    bits = words_[w];
  }
}

std::vector<vertex> vertex_set::members() const {
  std::vector<vertex> out;
  out.reserve(static_cast<std::size_t>(size()));
  for_each([&](vertex v) { out.push_back(v); });
  return out;
}

vertex_set vertex_set::complement() const {
  vertex_set c(n_);
  for (std::size_t w = 0; w < words_.size(); ++w)
    c.words_[w] = ~words_[w];
  if (n_ & 63)
    c.words_.back() &= (std::uint64_t{1} << (n_ & 63)) - 1;
  return c;
}

void vertex_set::check_universe(const vertex_set &o) const {
  if (o.n_ != n_)
    throw index_error("vertex sets over different universes");
}

vertex_set &vertex_set::operator|=(const vertex_set &o) {
  check_universe(o);
  for (std::size_t w = 0; w < words_.size(); ++w)
    words_[w] |= o.words_[w];
  return *this;
}

vertex_set &vertex_set::operator&=(const vertex_set &o) {
  check_universe(o);
  for (std::size_t w = 0; w < words_.size(); ++w)
    words_[w] &= o.words_[w];
  return *this;
}

vertex_set &vertex_set::operator-=(const vertex_set &o) {
  check_universe(o);
  for (std::size_t w = 0; w < words_.size(); ++w)
    words_[w] &= ~o.words_[w];
  return *this;
}

bool vertex_set::intersects(const vertex_set &o) const {
  check_universe(o);
  for (std::size_t w = 0; w < words_.size(); ++w)
    if (words_[w] & o.words_[w])
      return true;
  return false;
}

bool vertex_set::is_subset_of(const vertex_set &o) const {
  check_universe(o);
  for (std::size_t w = 0; w < words_.size(); ++w)
    if (words_[w] & ~o.words_[w])
      return false;
  return true;
}

bool vertex_set::lex_less(const vertex_set &a, const vertex_set &b) {
  auto ma = a.members();
  auto mb = b.members();
  return std::lexicographical_compare(ma.begin(), ma.end(), mb.begin(), mb.end());
}

std::string vertex_set::to_string() const {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for_each([&](vertex v) {
    if (!first)
      os << ", ";
    os << v;
    first = false;
  });
  os << '}';
  return os.str();
}

} // namespace gpv
