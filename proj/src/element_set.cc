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

#include "bcckit/element_set.h"

#include <algorithm>

#include "bcckit/error.h"

namespace bcc {

namespace {

ElementSet AddChecked(ElementSet s, Element e) {
  if (e < 0 || e > kMaxElementId) {
    Fail(ErrorKind::kSchema,
         "element id " + std::to_string(e) + " outside [0, 63]");
  }
  return s | Singleton(e);
}

}  // namespace

ElementSet MakeSet(std::initializer_list<Element> elems) {
  ElementSet s = 0;
  for (Element e : elems) s = AddChecked(s, e);
  return s;
}

ElementSet MakeSet(std::span<const Element> elems) {
  ElementSet s = 0;
  for (Element e : elems) s = AddChecked(s, e);
  return s;
}

std::vector<Element> Elements(ElementSet s) {
  std::vector<Element> out;
  out.reserve(Size(s));
  ForEachElement(s, [&](Element e) { out.push_back(e); });
  return out;
}

std::string FormatSet(ElementSet s) {
  std::string out = "{";
  bool first = true;
  ForEachElement(s, [&](Element e) {
    if (!first) out += ',';
    out += std::to_string(e);
    first = false;
  });
  return out + "}";
}

std::string FormatSets(std::span<const ElementSet> sets) {
  std::string out = "{";
  for (std::size_t i = 0; i < sets.size(); ++i) {
    if (i > 0) out += ',';
    out += FormatSet(sets[i]);
  }
  return out + "}";
}

CompactIndex::CompactIndex(ElementSet ground)
    : ground_(ground), elements_(Elements(ground)), positions_(64, -1) {
  for (int i = 0; i < size(); ++i) positions_[elements_[i]] = i;
}

std::uint32_t CompactIndex::Compress(ElementSet s) const {
  std::uint32_t out = 0;
  ForEachElement(s & ground_, [&](Element e) {
    out |= std::uint32_t{1} << positions_[e];
  });
  return out;
}

ElementSet CompactIndex::Expand(std::uint32_t compact) const {
  ElementSet out = 0;
  while (compact != 0) {
    out |= Singleton(elements_[std::countr_zero(compact)]);
    compact &= compact - 1;
  }
  return out;
}

void SortCanonical(std::vector<ElementSet>& sets) {
  std::sort(sets.begin(), sets.end(), [](ElementSet a, ElementSet b) {
    const int sa = Size(a), sb = Size(b);
    return sa != sb ? sa < sb : a < b;
  });
}

std::vector<ElementSet> MinimalSets(std::vector<ElementSet> sets) {
  SortCanonical(sets);
  sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
  std::vector<ElementSet> out;
  for (ElementSet s : sets) {
    const bool dominated = std::any_of(
        out.begin(), out.end(), [s](ElementSet t) { return IsSubset(t, s); });
    if (!dominated) out.push_back(s);
  }
  return out;
}

}  // namespace bcc
