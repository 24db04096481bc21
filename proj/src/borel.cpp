#include "qlogic/borel.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace qlogic {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

bool degenerate(const Interval& iv) {
  if (iv.lo > iv.hi) return true;
  if (iv.lo == iv.hi) return !(iv.lo_closed && iv.hi_closed) || std::isinf(iv.lo);
  return false;
}

// True when a's right end reaches b's left end with no gap between them.
bool touches(const Interval& a, const Interval& b) {
  if (a.hi > b.lo) return true;
  if (a.hi < b.lo) return false;
  return a.hi_closed || b.lo_closed;
}

}  // namespace

BorelSet BorelSet::from_components(std::vector<Interval> parts) {
  for (Interval& iv : parts) {
    if (std::isinf(iv.lo)) iv.lo_closed = false;
    if (std::isinf(iv.hi)) iv.hi_closed = false;
  }
  std::erase_if(parts, degenerate);
  std::sort(parts.begin(), parts.end(), [](const Interval& a, const Interval& b) {
    if (a.lo != b.lo) return a.lo < b.lo;
    return a.lo_closed && !b.lo_closed;
  });
  BorelSet out;
  for (const Interval& iv : parts) {
    if (!out.parts_.empty() && touches(out.parts_.back(), iv)) {
      Interval& last = out.parts_.back();
      if (iv.hi > last.hi) {
        last.hi = iv.hi;
        last.hi_closed = iv.hi_closed;
      } else if (iv.hi == last.hi) {
        last.hi_closed = last.hi_closed || iv.hi_closed;
      }
    } else {
      out.parts_.push_back(iv);
    }
  }
  return out;
}

BorelSet BorelSet::all() { return from_components({Interval{}}); }
BorelSet BorelSet::empty() { return BorelSet{}; }
BorelSet BorelSet::point(double t) { return from_components({Interval{t, t, true, true}}); }
BorelSet BorelSet::at_most(double t) { return from_components({Interval{-kInf, t, false, true}}); }
BorelSet BorelSet::greater_than(double t) {
  return from_components({Interval{t, kInf, false, false}});
}
BorelSet BorelSet::half_open(double s, double t) {
  return from_components({Interval{s, t, false, true}});
}
BorelSet BorelSet::interval(Interval iv) { return from_components({iv}); }

BorelSet BorelSet::complement() const {
  std::vector<Interval> gaps;
  double lo = -kInf;
  bool lo_closed = false;
  for (const Interval& iv : parts_) {
    gaps.push_back(Interval{lo, iv.lo, lo_closed, !iv.lo_closed});
    lo = iv.hi;
    lo_closed = !iv.hi_closed;
  }
  gaps.push_back(Interval{lo, kInf, lo_closed, false});
  return from_components(std::move(gaps));
}

BorelSet BorelSet::unite(const BorelSet& other) const {
  std::vector<Interval> all_parts = parts_;
  all_parts.insert(all_parts.end(), other.parts_.begin(), other.parts_.end());
  return from_components(std::move(all_parts));
}

BorelSet BorelSet::intersect(const BorelSet& other) const {
  std::vector<Interval> out;
  for (const Interval& a : parts_) {
    for (const Interval& b : other.parts_) {
      Interval c;
      if (a.lo > b.lo) {
        c.lo = a.lo;
        c.lo_closed = a.lo_closed;
      } else if (b.lo > a.lo) {
        c.lo = b.lo;
        c.lo_closed = b.lo_closed;
      } else {
        c.lo = a.lo;
        c.lo_closed = a.lo_closed && b.lo_closed;
      }
      if (a.hi < b.hi) {
        c.hi = a.hi;
        c.hi_closed = a.hi_closed;
      } else if (b.hi < a.hi) {
        c.hi = b.hi;
        c.hi_closed = b.hi_closed;
      } else {
        c.hi = a.hi;
        c.hi_closed = a.hi_closed && b.hi_closed;
      }
      out.push_back(c);
    }
  }
  return from_components(std::move(out));
}

bool BorelSet::contains(double x, double snap) const {
  for (const Interval& iv : parts_) {
    const bool above = iv.lo_closed ? x >= iv.lo - snap : x > iv.lo + snap;
    const bool below = iv.hi_closed ? x <= iv.hi + snap : x < iv.hi - snap;
    if (above && below) return true;
  }
  return false;
}

std::string BorelSet::to_string() const {
  if (parts_.empty()) return "{}";
  std::ostringstream os;
  os.precision(12);
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    const Interval& iv = parts_[i];
    if (i) os << " u ";
    if (iv.lo == iv.hi) {
      os << '{' << iv.lo << '}';
      continue;
    }
    os << (iv.lo_closed ? '[' : '(') << iv.lo << ", " << iv.hi << (iv.hi_closed ? ']' : ')');
  }
  return os.str();
}

}  // namespace qlogic
