#pragma once

#include <limits>
#include <string>
#include <vector>

namespace qlogic {

struct Interval {
  double lo = -std::numeric_limits<double>::infinity();
  double hi = std::numeric_limits<double>::infinity();
  bool lo_closed = false;
  bool hi_closed = false;
};

/// Finite union of intervals on the real line, kept as disjoint components
/// sorted by left endpoint. Singletons are closed degenerate intervals.
class BorelSet {
 public:
  static BorelSet all();
  static BorelSet empty();
  static BorelSet point(double t);
  /// (-inf, t]
  static BorelSet at_most(double t);
  /// (t, inf)
  static BorelSet greater_than(double t);
  /// (s, t]
  static BorelSet half_open(double s, double t);
  static BorelSet interval(Interval iv);
  static BorelSet from_components(std::vector<Interval> parts);

  BorelSet complement() const;
  BorelSet unite(const BorelSet& other) const;
  BorelSet intersect(const BorelSet& other) const;

  /// Membership where endpoints within `snap` of x count as equal to x:
  /// a closed endpoint admits x up to snap beyond it, an open endpoint
  /// excludes x up to snap inside it.
  bool contains(double x, double snap = 0.0) const;
  bool is_empty() const noexcept { return parts_.empty(); }
  const std::vector<Interval>& components() const noexcept { return parts_; }
  std::string to_string() const;

 private:
  std::vector<Interval> parts_;
};

}  // namespace qlogic
