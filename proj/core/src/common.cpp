#include "catx/common.hpp"

#include <algorithm>

namespace catx {

IndexSet IndexSet::from_indices(const std::vector<int>& one_based) {
  IndexSet s;
  for (int i : one_based) s.insert(i);
  return s;
}

void IndexSet::insert(int one_based) {
  if (one_based < 1 || one_based > 32) {
    throw InputError("index " + std::to_string(one_based) + " outside 1..32");
  }
  mask_ |= std::uint32_t{1} << (one_based - 1);
}

std::vector<int> IndexSet::indices() const {
  std::vector<int> out;
  for (int k = 0; k < 32; ++k) {
    if ((mask_ >> k) & 1u) out.push_back(k + 1);
  }
  return out;
}

std::string IndexSet::to_string() const {
  std::string s = "[";
  bool first = true;
  for (int i : indices()) {
    if (!first) s += ",";
    s += std::to_string(i);
    first = false;
  }
  return s + "]";
}

std::vector<IndexSet> IndexSet::subsets() const {
  std::vector<IndexSet> out;
  // Enumerate submasks in increasing order.
  std::uint32_t sub = 0;
  while (true) {
    out.emplace_back(sub);
    if (sub == mask_) break;
    sub = ((sub | ~mask_) + 1) & mask_;
  }
  return out;
}

bool operator<(IndexSet a, IndexSet b) {
  if (a.size() != b.size()) return a.size() < b.size();
  const auto ia = a.indices();
  const auto ib = b.indices();
  return std::lexicographical_compare(ia.begin(), ia.end(), ib.begin(), ib.end());
}

}  // namespace catx
