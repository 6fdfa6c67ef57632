// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef BCCKIT_ELEMENT_SET_H_
#define BCCKIT_ELEMENT_SET_H_

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace bcc {

// Elements are small non-negative ids; a set of them is a 64-bit mask.
using Element = int;
using ElementSet = std::uint64_t;

inline constexpr Element kMaxElementId = 63;
// Largest ground set any operation accepts.
inline constexpr int kGroundCap = 20;

inline constexpr ElementSet Singleton(Element e) { return ElementSet{1} << e; }
inline constexpr bool Contains(ElementSet s, Element e) {
  return (s >> e) & 1u;
}
inline constexpr int Size(ElementSet s) { return std::popcount(s); }
inline constexpr bool IsSubset(ElementSet a, ElementSet b) {
  return (a & ~b) == 0;
}
inline constexpr Element MinElement(ElementSet s) {
  return std::countr_zero(s);
}
inline constexpr Element MaxElement(ElementSet s) {
  return 63 - std::countl_zero(s);
}

ElementSet MakeSet(std::initializer_list<Element> elems);
ElementSet MakeSet(std::span<const Element> elems);
std::vector<Element> Elements(ElementSet s);
// "{1,2,3}"
std::string FormatSet(ElementSet s);
std::string FormatSets(std::span<const ElementSet> sets);

// Iterates the elements of `s` in increasing id order.
template <typename F>
void ForEachElement(ElementSet s, F&& f) {
  while (s != 0) {
    f(MinElement(s));
    s &= s - 1;
  }
}

// Maps a ground set onto positions 0..n-1 so that subsets can be indexed
// densely by a machine word.
class CompactIndex {
 public:
  explicit CompactIndex(ElementSet ground);

  int size() const { return static_cast<int>(elements_.size()); }
  ElementSet ground() const { return ground_; }
  Element element(int position) const { return elements_[position]; }
  int position(Element e) const { return positions_[e]; }

  std::uint32_t Compress(ElementSet s) const;
  ElementSet Expand(std::uint32_t compact) const;

 private:
  ElementSet ground_;
  std::vector<Element> elements_;
  std::vector<int> positions_;
};

// Inclusion-minimal members, sorted canonically (by size, then mask).
std::vector<ElementSet> MinimalSets(std::vector<ElementSet> sets);
void SortCanonical(std::vector<ElementSet>& sets);

}  // namespace bcc

#endif  // BCCKIT_ELEMENT_SET_H_
