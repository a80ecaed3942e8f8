#include "mpqp/active_set.hpp"

#include <algorithm>
#include <sstream>

#include "mpqp/errors.hpp"

namespace mpqp {

ActiveSet::ActiveSet(std::vector<int> indices) : indices_(std::move(indices)) {
  std::sort(indices_.begin(), indices_.end());
  if (std::adjacent_find(indices_.begin(), indices_.end()) != indices_.end()) {
    throw ValidationError("active set contains a duplicate index");
  }
  if (!indices_.empty() && indices_.front() < 0) {
    throw ValidationError("active set contains a negative index");
  }
}

ActiveSet::ActiveSet(std::initializer_list<int> indices)
    : ActiveSet(std::vector<int>(indices)) {}

ActiveSet ActiveSet::from_one_based(const std::vector<int>& indices, int m) {
  std::vector<int> zero_based;
  zero_based.reserve(indices.size());
  for (int i : indices) {
    if (i < 1 || i > m) {
      std::ostringstream os;
      os << "constraint index " << i << " outside 1.." << m;
      throw ValidationError(os.str());
    }
    zero_based.push_back(i - 1);
  }
  return ActiveSet(std::move(zero_based));
}

bool ActiveSet::contains(int index) const {
  return std::binary_search(indices_.begin(), indices_.end(), index);
}

ActiveSet ActiveSet::with(int index) const {
  ActiveSet out;
  out.indices_ = indices_;
  auto pos = std::lower_bound(out.indices_.begin(), out.indices_.end(), index);
  if (pos == out.indices_.end() || *pos != index) {
    out.indices_.insert(pos, index);
  }
  return out;
}

ActiveSet ActiveSet::without(int index) const {
  ActiveSet out;
  out.indices_.reserve(indices_.size());
  for (int i : indices_) {
    if (i != index) out.indices_.push_back(i);
  }
  return out;
}

std::vector<int> ActiveSet::complement(int m) const {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(m) - std::min<std::size_t>(size(), m));
  std::size_t k = 0;
  for (int i = 0; i < m; ++i) {
    if (k < indices_.size() && indices_[k] == i) {
      ++k;
    } else {
      out.push_back(i);
    }
  }
  return out;
}

std::vector<int> ActiveSet::one_based() const {
  std::vector<int> out(indices_);
  for (int& i : out) ++i;
  return out;
}

std::string ActiveSet::to_string() const {
  std::ostringstream os;
  os << '{';
  for (std::size_t k = 0; k < indices_.size(); ++k) {
    if (k) os << ',';
    os << indices_[k] + 1;
  }
  os << '}';
  return os.str();
}

std::strong_ordering ActiveSet::operator<=>(const ActiveSet& other) const {
  if (auto c = size() <=> other.size(); c != 0) return c;
  return indices_ <=> other.indices_;
}

bool adjacent(const ActiveSet& a, const ActiveSet& b) {
  const ActiveSet& small = a.size() < b.size() ? a : b;
  const ActiveSet& large = a.size() < b.size() ? b : a;
  if (large.size() != small.size() + 1) return false;
  return std::includes(large.indices().begin(), large.indices().end(),
                       small.indices().begin(), small.indices().end());
}

std::size_t ActiveSetHash::operator()(const ActiveSet& a) const noexcept {
  // FNV-1a over the canonical index sequence.
  std::uint64_t h = 1469598103934665603ULL;
  for (int i : a.indices()) {
    h ^= static_cast<std::uint64_t>(i) + 0x9e3779b97f4a7c15ULL;
    h *= 1099511628211ULL;
  }
  return static_cast<std::size_t>(h);
}

std::optional<Mask128> Mask128::from(const ActiveSet& a) {
  Mask128 mask;
  for (int i : a.indices()) {
    if (i >= 128) return std::nullopt;
    if (i < 64) {
      mask.lo |= std::uint64_t{1} << i;
    } else {
      mask.hi |= std::uint64_t{1} << (i - 64);
    }
  }
  return mask;
}

std::size_t Mask128Hash::operator()(const Mask128& m) const noexcept {
  std::uint64_t h = m.lo * 0x9e3779b97f4a7c15ULL;
  h ^= (m.hi + 0xbf58476d1ce4e5b9ULL) + (h << 6) + (h >> 2);
  return static_cast<std::size_t>(h ^ (h >> 31));
}

ExploredSet::ExploredSet(int num_constraints)
    : use_mask_(num_constraints <= 128) {}

bool ExploredSet::insert(const ActiveSet& a) {
  if (use_mask_) {
    if (auto mask = Mask128::from(a)) return masks_.insert(*mask).second;
    throw ValidationError("active set index exceeds explored-set width");
  }
  return sets_.insert(a).second;
}

bool ExploredSet::contains(const ActiveSet& a) const {
  if (use_mask_) {
    auto mask = Mask128::from(a);
    return mask && masks_.count(*mask) > 0;
  }
  return sets_.count(a) > 0;
}

std::size_t ExploredSet::size() const noexcept {
  return use_mask_ ? masks_.size() : sets_.size();
}

}  // namespace mpqp
