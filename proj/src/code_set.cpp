#include "truthpred/code_set.hpp"

#include <bit>
#include <cassert>

namespace truthpred {

CodeSet CodeSet::full(std::size_t universe_size) {
  CodeSet s(universe_size);
  for (auto& w : s.words_) w = ~std::uint64_t{0};
  if (universe_size % 64 != 0 && !s.words_.empty()) s.words_.back() = (std::uint64_t{1} << (universe_size % 64)) - 1;
  return s;
}

std::size_t CodeSet::count() const {
  std::size_t n = 0;
  for (auto w : words_) n += static_cast<std::size_t>(std::popcount(w));
  return n;
}

bool CodeSet::empty() const {
  for (auto w : words_)
    if (w) return false;
  return true;
}

CodeSet& CodeSet::operator|=(const CodeSet& other) {
  assert(size_ == other.size_);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
  return *this;
}

CodeSet& CodeSet::operator&=(const CodeSet& other) {
  assert(size_ == other.size_);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
  return *this;
}

CodeSet& CodeSet::operator-=(const CodeSet& other) {
  assert(size_ == other.size_);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~other.words_[i];
  return *this;
}

bool CodeSet::is_subset_of(const CodeSet& other) const {
  assert(size_ == other.size_);
  for (std::size_t i = 0; i < words_.size(); ++i)
    if (words_[i] & ~other.words_[i]) return false;
  return true;
}

bool CodeSet::intersects(const CodeSet& other) const {
  assert(size_ == other.size_);
  for (std::size_t i = 0; i < words_.size(); ++i)
    if (words_[i] & other.words_[i]) return true;
  return false;
}

std::vector<SentenceId> CodeSet::ids() const {
  std::vector<SentenceId> out;
  out.reserve(count());
  for_each([&](SentenceId id) { out.push_back(id); });
  return out;
}

}  // namespace truthpred
