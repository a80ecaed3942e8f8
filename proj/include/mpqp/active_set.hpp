#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <optional>
#include <string>
#include <unordered_set>
#include <vector>

namespace mpqp {

/// A canonical subset of constraint indices.
///
/// Indices are 0-based internally and kept strictly increasing, so two sets
/// holding the same indices compare and hash identically regardless of how
/// they were built. Text output uses 1-based indices.
class ActiveSet {
 public:
  ActiveSet() = default;
  explicit ActiveSet(std::vector<int> indices);
  ActiveSet(std::initializer_list<int> indices);

  /// Builds from 1-based indices, checking each lies in 1..m.
  static ActiveSet from_one_based(const std::vector<int>& indices, int m);

  const std::vector<int>& indices() const noexcept { return indices_; }
  std::size_t size() const noexcept { return indices_.size(); }
  bool empty() const noexcept { return indices_.empty(); }
  bool contains(int index) const;

  ActiveSet with(int index) const;
  ActiveSet without(int index) const;

  /// Indices in 0..m-1 that are not in the set, increasing.
  std::vector<int> complement(int m) const;
  std::vector<int> one_based() const;

  /// "{1,3,7}" with 1-based indices.
  std::string to_string() const;

  /// Cardinality first, then lexicographic.
  std::strong_ordering operator<=>(const ActiveSet& other) const;
  bool operator==(const ActiveSet& other) const = default;

 private:
  std::vector<int> indices_;
};

/// Combinatorial adjacency: one set equals the other plus a single index.
bool adjacent(const ActiveSet& a, const ActiveSet& b);

struct ActiveSetHash {
  std::size_t operator()(const ActiveSet& a) const noexcept;
};

/// Fixed-width bitmask form of an ActiveSet for m <= 128.
struct Mask128 {
  std::uint64_t lo = 0;
  std::uint64_t hi = 0;

  static std::optional<Mask128> from(const ActiveSet& a);
  bool operator==(const Mask128&) const = default;
};

struct Mask128Hash {
  std::size_t operator()(const Mask128& m) const noexcept;
};

/// The explored collection of an exploration run.
///
/// `insert` is insert-if-absent and reports whether the set was new, which is
/// the only primitive a shared-frontier variant would need. Keys are bitmasks
/// when the constraint count allows it.
class ExploredSet {
 public:
  explicit ExploredSet(int num_constraints);

  bool insert(const ActiveSet& a);
  bool contains(const ActiveSet& a) const;
  std::size_t size() const noexcept;

 private:
  bool use_mask_;
  std::unordered_set<Mask128, Mask128Hash> masks_;
  std::unordered_set<ActiveSet, ActiveSetHash> sets_;
};

}  // namespace mpqp
