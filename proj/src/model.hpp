#pragma once

#include <compare>
#include <map>
#include <utility>
#include <vector>

#include "error.hpp"

namespace trawl {

// Arrival intensity mass per nonzero integer mark, finite support.
// rate(y) is the arrival rate of size-y events per unit time.
class LevyMeasure {
 public:
  LevyMeasure() = default;
  explicit LevyMeasure(std::vector<std::pair<int, double>> entries);
  LevyMeasure(std::initializer_list<std::pair<int, double>> entries)
      : LevyMeasure(std::vector<std::pair<int, double>>(entries)) {}

  double rate(int mark) const;
  bool contains(int mark) const;
  double total() const;  // sum of all masses
  // Sorted by mark, ascending.
  const std::vector<std::pair<int, double>>& entries() const { return entries_; }
  bool empty() const { return entries_.empty(); }

 private:
  std::vector<std::pair<int, double>> entries_;
};

// Full parameter vector: arrival intensities plus the trawl decay rate.
// Each live event survives an Exponential(phi) time inside the trawl.
struct TrawlModel {
  LevyMeasure levy;
  double phi = 0.0;
};

void validate(const LevyMeasure& levy);
void validate(const TrawlModel& model);

struct JumpEvent {
  double time = 0.0;
  int size = 0;
};

// Observed data: initial level, horizon, ordered jumps in (0, horizon].
struct JumpPath {
  long long y0 = 0;
  double horizon = 0.0;
  std::vector<JumpEvent> events;

  long long value_at_end() const;
};

void validate(const JumpPath& path);

// N_T^{(y)}: number of observed jumps of each size.
std::map<int, long long> counts_from_path(const JumpPath& path);

// Sparse count vector над marks: zero counts are never stored.
class StateVector {
 public:
  StateVector() = default;
  explicit StateVector(std::vector<std::pair<int, int>> items);
  StateVector(std::initializer_list<std::pair<int, int>> items)
      : StateVector(std::vector<std::pair<int, int>>(items)) {}

  int count(int mark) const;
  int l1() const;             // total live events
  long long anchor() const;   // sum of mark * count
  // Copy with count(mark) shifted by delta; drops the entry at zero.
  StateVector with(int mark, int delta) const;

  const std::vector<std::pair<int, int>>& items() const { return items_; }
  auto operator<=>(const StateVector&) const = default;

 private:
  std::vector<std::pair<int, int>> items_;  // sorted by mark, counts >= 1
};

// Sparse probability table over count vectors, all sharing one observed level:
// every stored state satisfies anchor() == anchor_value.
class StateDistribution {
 public:
  StateDistribution() = default;
  StateDistribution(long long anchor, std::vector<std::pair<StateVector, double>> table)
      : anchor_(anchor), table_(std::move(table)) {}
  static StateDistribution point_mass(StateVector state);
  static StateDistribution from_map(long long anchor, const std::map<StateVector, double>& weights);

  long long anchor_value() const { return anchor_; }
  const std::vector<std::pair<StateVector, double>>& table() const { return table_; }
  std::vector<std::pair<StateVector, double>>& mutable_table() { return table_; }
  bool empty() const { return table_.empty(); }
  std::size_t size() const { return table_.size(); }

  double prob(const StateVector& state) const;  // 0 when absent
  double mass() const;

  // Scales to unit mass, drops entries below prune_epsilon, rescales.
  // Returns the probability mass dropped.
  double normalize(double prune_epsilon);

  double mean_count(int mark) const;
  double mean_l1() const;
  double var_l1() const;
  // Sum of mean counts over positive (or negative) marks.
  double mean_side(bool positive) const;

 private:
  long long anchor_ = 0;
  std::vector<std::pair<StateVector, double>> table_;  // sorted by state
};

// Fully observed hidden record over (0, horizon]: what the complete-data
// estimators consume.
struct CompleteData {
  double horizon = 0.0;
  StateVector initial_state;                 // C_0
  std::map<int, long long> arrival_counts;   // N_T^{(y),A}
  std::map<int, long long> departure_counts; // N_T^{(y),D}
  double risk_integral = 0.0;                // integral of D_{t-} dt
};

void validate(const CompleteData& data);

double poisson_pmf(int k, double mean);
double log_poisson_pmf(int k, double mean);

}  // namespace trawl
