#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace truthpred {

/// Dense position of a sentence inside its universe. Positions follow code order.
using SentenceId = std::uint32_t;

/// A subset of one universe's sentences, stored as a bitset over SentenceIds.
/// Sets drawn from different universes must not be mixed.
class CodeSet {
 public:
  CodeSet() = default;
  explicit CodeSet(std::size_t universe_size) : size_(universe_size), words_((universe_size + 63) / 64, 0) {}

  static CodeSet full(std::size_t universe_size);

  std::size_t universe_size() const { return size_; }
  std::size_t count() const;
  bool empty() const;
  bool is_full() const { return count() == size_; }

  bool contains(SentenceId id) const { return (words_[id >> 6] >> (id & 63)) & 1u; }
  void insert(SentenceId id) { words_[id >> 6] |= std::uint64_t{1} << (id & 63); }
  void erase(SentenceId id) { words_[id >> 6] &= ~(std::uint64_t{1} << (id & 63)); }

  CodeSet& operator|=(const CodeSet& other);
  CodeSet& operator&=(const CodeSet& other);
  CodeSet& operator-=(const CodeSet& other);
  friend CodeSet operator|(CodeSet a, const CodeSet& b) { return a |= b; }
  friend CodeSet operator&(CodeSet a, const CodeSet& b) { return a &= b; }
  friend CodeSet operator-(CodeSet a, const CodeSet& b) { return a -= b; }
  friend bool operator==(const CodeSet&, const CodeSet&) = default;

  bool is_subset_of(const CodeSet& other) const;
  bool intersects(const CodeSet& other) const;

  /// Members in increasing id (hence code) order.
  std::vector<SentenceId> ids() const;

  template <class F>
  void for_each(F&& f) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      std::uint64_t bits = words_[w];
      while (bits) {
        int bit = __builtin_ctzll(bits);
        f(static_cast<SentenceId>(w * 64 + static_cast<std::size_t>(bit)));
        bits &= bits - 1;
      }
    }
  }

 private:
  std::size_t size_ = 0;
  std::vector<std::uint64_t> words_;
};

}  // namespace truthpred
