#include "strand/plmap.hpp"

#include <sstream>

namespace strand {

using boost::multiprecision::cpp_int;

void Dyadic::normalize() {
  if (num == 0) {
    exp = 0;
    return;
  }
  while (exp > 0 && (num & 1) == 0) {
    num >>= 1;
    --exp;
  }
  if (exp < 0) {
    num <<= -exp;
    exp = 0;
  }
}

Dyadic operator+(const Dyadic& a, const Dyadic& b) {
  int e = std::max(a.exp, b.exp);
  return Dyadic((a.num << (e - a.exp)) + (b.num << (e - b.exp)), e);
}

Dyadic operator-(const Dyadic& a, const Dyadic& b) {
  int e = std::max(a.exp, b.exp);
  return Dyadic((a.num << (e - a.exp)) - (b.num << (e - b.exp)), e);
}

bool operator==(const Dyadic& a, const Dyadic& b) {
  return a.exp == b.exp && a.num == b.num;
}

std::strong_ordering operator<=>(const Dyadic& a, const Dyadic& b) {
  int e = std::max(a.exp, b.exp);
  cpp_int l = a.num << (e - a.exp);
  cpp_int r = b.num << (e - b.exp);
  if (l < r) return std::strong_ordering::less;
  if (l > r) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::string Dyadic::str() const {
  std::ostringstream os;
  os << num;
  if (exp > 0) os << "/2^" << exp;
  return os.str();
}

PLMap element_to_plmap(const TreePair& t) {
  std::vector<int> dd = leaf_depths(t.domain);
  std::vector<int> rd = leaf_depths(t.range);
  if (dd.size() != rd.size()) throw ArityError("tree pair leaf count mismatch");
  PLMap raw;
  size_t pieces = dd.size();
  Dyadic x(0), y(0);
  std::vector<Dyadic> bx, by;
  std::vector<int> slopes;
  for (size_t i = 0; i < pieces; ++i) {
    slopes.push_back(dd[i] - rd[i]);  // width 2^-dd -> 2^-rd
    x = x + Dyadic(1, dd[i]);
    y = y + Dyadic(1, rd[i]);
    if (i + 1 < pieces) {
      bx.push_back(x);
      by.push_back(y);
    }
  }
  if (!(x == Dyadic(1)) || !(y == Dyadic(1)))
    throw InternalError("leaf widths do not fill [0,1]");
  // merge consecutive pieces with equal slope
  PLMap out;
  out.slopes_log2.push_back(slopes[0]);
  for (size_t i = 0; i + 1 < pieces; ++i) {
    if (slopes[i + 1] != out.slopes_log2.back()) {
      out.breakpoints.push_back(bx[i]);
      out.values.push_back(by[i]);
      out.slopes_log2.push_back(slopes[i + 1]);
    }
  }
  return out;
}

PLMap element_to_plmap(const StrandDiagram& d) {
  return element_to_plmap(diagram_to_treepair(d));
}

int slope_log2_at_0(const PLMap& m) { return m.slopes_log2.front(); }
int slope_log2_at_1(const PLMap& m) { return m.slopes_log2.back(); }

bool interior_fixed_point_free(const PLMap& m) {
  if (m.is_identity()) return false;
  // g = f - x is linear on each piece with g(0) = g(1) = 0, so fixed points
  // in (0,1) are: a zero at an interior breakpoint, a strict sign change
  // across a piece, or an identity piece touching an endpoint.
  size_t n = m.breakpoints.size();
  Dyadic zero(0);
  std::vector<int> sgn(n);
  for (size_t i = 0; i < n; ++i) {
    Dyadic g = m.values[i] - m.breakpoints[i];
    if (g == zero) return false;
    sgn[i] = g < zero ? -1 : 1;
  }
  if (m.slopes_log2.front() == 0 || m.slopes_log2.back() == 0) return false;
  for (size_t i = 0; i + 1 < n; ++i)
    if (sgn[i] != sgn[i + 1]) return false;
  return true;
}

}  // namespace strand
