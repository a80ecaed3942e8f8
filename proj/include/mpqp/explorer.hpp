#pragma once

#include <cstddef>
#include <functional>
#include <iosfwd>
#include <vector>

#include "mpqp/active_set.hpp"
#include "mpqp/problem.hpp"
#include "mpqp/regions.hpp"

namespace mpqp {

struct ExplorationCounters {
  std::size_t popped = 0;
  std::size_t licq_fail = 0;
  std::size_t feas_calls = 0;
  std::size_t nonempty = 0;
  std::size_t empty = 0;
  /// Nonempty regions holding no ball of radius kThinMargin.
  std::size_t lower_dimensional = 0;
  /// Feasibility checks that did not conclude and were kept as nonempty.
  std::size_t inconclusive = 0;
  std::size_t pushed_supersets = 0;
  std::size_t pushed_subsets = 0;
  /// Final size of the explored collection.
  std::size_t explored = 0;
};

enum class PopOrder { DepthFirst, BreadthFirst };

enum class PopBranch { LicqNonEmpty, LicqEmpty, LicqFail };

/// One line of the run log: what happened to a popped set.
struct PopEvent {
  const ActiveSet& active_set;
  PopBranch branch;
  bool lower_dimensional;
  bool inconclusive;
  const std::vector<ActiveSet>& pushed;
  const ExplorationCounters& counters;
};

struct ExploreOptions {
  Tolerances tol;
  PopOrder order = PopOrder::DepthFirst;
  /// Classify nonempty regions as lower-dimensional (one extra solve for
  /// regions with several near-tight rows).
  bool classify_dimension = true;
  std::function<void(const PopEvent&)> on_pop;
};

struct ExplorationResult {
  /// One record per optimal active set, sorted by active set.
  std::vector<CriticalRegionRecord> records;
  ExplorationCounters counters;

  std::vector<ActiveSet> active_sets() const;
};

/// Enumerates the optimal active sets that satisfy LICQ by walking
/// combinatorially adjacent sets from `a0`.
///
/// Each popped set that satisfies LICQ gets its region built and checked; a
/// nonempty region is recorded and all unexplored sets one index larger and
/// one index smaller are pushed (larger first, so smaller ones pop first).
/// A set that fails LICQ pushes only its unexplored subsets. Throws BadSeed
/// if `a0` fails LICQ or has an empty region.
ExplorationResult explore(const MpLDP& ldp, const ActiveSet& a0,
                          const ExploreOptions& options = {});

/// Finds a starting set for explore: the optimal active set at the
/// minimum-norm point of Theta0, then at up to 50 seeded perturbations of it
/// projected back into Theta0, then the empty set if its region is nonempty.
/// Throws InfeasibleProblem when Theta0 is empty or every sample is
/// infeasible, NoStartFound otherwise.
ActiveSet initial_active_set(const MpLDP& ldp, const Tolerances& tol = {});

/// Writes one key=value line for a pop event.
void write_pop_event(std::ostream& os, const PopEvent& event);

using Membership = std::function<bool(const ActiveSet&)>;

/// Builds a sequence from `a` to `a_tilde` in which consecutive sets differ
/// by one index, no two consecutive sets both fail LICQ (or have empty
/// regions), and every set satisfies `membership`.
///
/// Indices of a_tilde \ a are added while the current set satisfies LICQ;
/// otherwise the first index of a \ a_tilde whose removal gives a set with
/// LICQ and membership is removed. `membership` is memoized. Throws
/// SequenceFailure if an added set fails membership or no removal qualifies.
/// Intended for pairs of optimal sets whose regions intersect.
std::vector<ActiveSet> valid_sequence(const MpLDP& ldp, const ActiveSet& a,
                                      const ActiveSet& a_tilde,
                                      const Membership& membership,
                                      const Tolerances& tol = {});

}  // namespace mpqp
