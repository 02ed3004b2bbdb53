#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <vector>

#include "strand/treepair.hpp"

namespace strand {

// Exact dyadic rational num / 2^exp, kept normalized (num odd or zero).
struct Dyadic {
  boost::multiprecision::cpp_int num = 0;
  int exp = 0;

  Dyadic() = default;
  Dyadic(long n) : num(n) {}
  Dyadic(boost::multiprecision::cpp_int n, int e) : num(std::move(n)), exp(e) {
    normalize();
  }

  void normalize();
  friend Dyadic operator+(const Dyadic& a, const Dyadic& b);
  friend Dyadic operator-(const Dyadic& a, const Dyadic& b);
  friend bool operator==(const Dyadic& a, const Dyadic& b);
  friend std::strong_ordering operator<=>(const Dyadic& a, const Dyadic& b);

  // value * 2^k
  Dyadic scaled(int k) const { return Dyadic(num, exp - k); }
  std::string str() const;
};

// Piecewise-linear homeomorphism of [0,1]: dyadic breakpoints, power-of-2
// slopes.  breakpoints are the interior ones; slopes_log2 has one entry per
// piece (breakpoints.size() + 1).  Consecutive pieces with equal slope are
// merged, so the identity has no breakpoints.
struct PLMap {
  std::vector<Dyadic> breakpoints;
  std::vector<int> slopes_log2;
  std::vector<Dyadic> values;  // f(breakpoint), parallel to breakpoints

  bool is_identity() const { return breakpoints.empty() && slopes_log2.size() == 1 && slopes_log2[0] == 0; }
};

// The dyadic-subdivision map of a reduced tree pair.
PLMap element_to_plmap(const TreePair& t);
PLMap element_to_plmap(const StrandDiagram& d);

// log2 of the one-sided slopes at the endpoints.
int slope_log2_at_0(const PLMap& m);
int slope_log2_at_1(const PLMap& m);

// True iff f(x) != x for all x in (0, 1), decided exactly.  The identity
// returns false by definition (every point is fixed).
bool interior_fixed_point_free(const PLMap& m);

}  // namespace strand
