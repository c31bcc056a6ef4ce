#pragma once

#include <map>
#include <string>
#include <variant>

#include <boost/multiprecision/cpp_int.hpp>

#include "minhom/graph.hpp"
#include "minhom/recognition.hpp"

namespace minhom {

// Exact rational with a reduced, positive denominator.
using Rational = boost::multiprecision::cpp_rational;

struct Interval {
  Rational left;
  Rational right;

  bool intersects(const Interval& other) const {
    return left <= other.right && other.left <= right;
  }
  bool contains(const Interval& other) const {
    return left <= other.left && other.right <= right;
  }
  friend bool operator==(const Interval& a, const Interval& b) {
    return a.left == b.left && a.right == b.right;
  }
};

// Keyed by vertex name.
using IntervalFamily = std::map<std::string, Interval>;

struct BigraphIntervals {
  IntervalFamily white;
  IntervalFamily black;
  friend bool operator==(const BigraphIntervals&,
                         const BigraphIntervals&) = default;
};

struct ReflexiveIntervals {
  IntervalFamily intervals;
  friend bool operator==(const ReflexiveIntervals&,
                         const ReflexiveIntervals&) = default;
};

using IntervalRep = std::variant<BigraphIntervals, ReflexiveIntervals>;

// Bigraph case, 1-based positions: V_j = [j - 1/4, j + 1/4] and
// U_i = [L(i) - 2^-i, R(i) + 1/2 - 2^-i]. Vertices without neighbors get
// distinct point intervals to the right of every other interval.
// Reflexive case: position i gets [i, R(i) + i/(p+1)].
// Throws kInvalidOrdering when `ordering` fails its verifier; the result is
// checked with verify_representation before it is returned.
IntervalRep ordering_to_intervals(const Graph& h,
                                  const MinMaxOrdering& ordering);

// Orders each family by left endpoint. Throws kRepresentationMismatch when
// `rep` does not realize h and kTiedEndpoints on shared left endpoints.
MinMaxOrdering intervals_to_ordering(const Graph& h, const IntervalRep& rep);

// Intersection pattern equals adjacency and every family is inclusion-free.
bool verify_representation(const Graph& h, const IntervalRep& rep);

}  // namespace minhom
