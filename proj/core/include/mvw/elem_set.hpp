#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <vector>

#include <boost/dynamic_bitset.hpp>

namespace mvw {

using Elem = std::uint32_t;

// A subset of {0, ..., universe-1}. Used for ideals, filters and point sets.
class ElemSet {
 public:
  ElemSet() = default;
  explicit ElemSet(std::size_t universe) : bits_(universe) {}
  ElemSet(std::size_t universe, std::initializer_list<Elem> elems) : bits_(universe) {
    for (auto e : elems) bits_.set(e);
  }
  template <typename Range>
  static ElemSet from(std::size_t universe, Range const& elems) {
    ElemSet s(universe);
    for (auto e : elems) s.insert(static_cast<Elem>(e));
    return s;
  }
  static ElemSet full(std::size_t universe) {
    ElemSet s(universe);
    s.bits_.set();
    return s;
  }

  std::size_t universe() const noexcept { return bits_.size(); }
  std::size_t count() const noexcept { return bits_.count(); }
  bool empty() const noexcept { return bits_.none(); }
  bool is_full() const noexcept { return bits_.all(); }

  bool contains(Elem e) const { return e < bits_.size() && bits_.test(e); }
  void insert(Elem e) { bits_.set(e); }
  void erase(Elem e) { bits_.reset(e); }

  bool is_subset_of(ElemSet const& other) const { return bits_.is_subset_of(other.bits_); }
  bool intersects(ElemSet const& other) const { return bits_.intersects(other.bits_); }

  ElemSet& operator|=(ElemSet const& o) { bits_ |= o.bits_; return *this; }
  ElemSet& operator&=(ElemSet const& o) { bits_ &= o.bits_; return *this; }
  friend ElemSet operator|(ElemSet a, ElemSet const& b) { return a |= b; }
  friend ElemSet operator&(ElemSet a, ElemSet const& b) { return a &= b; }
  ElemSet complement() const {
    ElemSet s = *this;
    s.bits_.flip();
    return s;
  }

  std::vector<Elem> elements() const {
    std::vector<Elem> out;
    out.reserve(count());
    for (auto i = bits_.find_first(); i != Bits::npos; i = bits_.find_next(i))
      out.push_back(static_cast<Elem>(i));
    return out;
  }

  template <typename F>
  void for_each(F&& f) const {
    for (auto i = bits_.find_first(); i != Bits::npos; i = bits_.find_next(i))
      f(static_cast<Elem>(i));
  }

  friend bool operator==(ElemSet const& a, ElemSet const& b) { return a.bits_ == b.bits_; }
  friend bool operator!=(ElemSet const& a, ElemSet const& b) { return !(a == b); }
  // Total order: smaller sets first, then by sorted element list.
  friend bool operator<(ElemSet const& a, ElemSet const& b) {
    auto const ca = a.count();
    auto const cb = b.count();
    if (ca != cb) return ca < cb;
    auto i = a.bits_.find_first();
    auto j = b.bits_.find_first();
    while (i != Bits::npos && j != Bits::npos) {
      if (i != j) return i < j;
      i = a.bits_.find_next(i);
      j = b.bits_.find_next(j);
    }
    return false;
  }

 private:
  using Bits = boost::dynamic_bitset<std::uint64_t>;
  Bits bits_;
};

}  // namespace mvw
