#include "strand/families.hpp"

#include <sstream>

#include "strand/thompson.hpp"

namespace strand {

StrandDiagram right_vine(int k) {
  if (k < 1) throw ArityError("right vine needs at least one leaf");
  if (k == 1) return make_trivial(1);
  StrandDiagram d;
  int32_t src = d.add_node(NodeKind::Source);
  d.sources().push_back(src);
  std::vector<int32_t> sinks;
  for (int i = 0; i < k; ++i) sinks.push_back(d.add_node(NodeKind::Sink));
  PortRef hang{src, 0};
  for (int i = 0; i < k - 1; ++i) {
    int32_t s = d.add_node(NodeKind::Split);
    d.connect(hang, {s, 0});
    d.connect({s, 1}, {sinks[i], 0});
    hang = {s, 2};
  }
  d.connect(hang, {sinks[k - 1], 0});
  for (int32_t s : sinks) d.sinks().push_back(s);
  return d;
}

Word f_word(int n) {
  if (n < 2) throw ArityError("family index must be >= 2");
  // x0 (x1^-1 x0^-1 x1 x0^-1)^(n-1) x1^-2 (x0 x1 x0 x1^-1)^(n-1)
  Word w = parse_word("x0");
  Word a = parse_word("x1^-1 x0^-1 x1 x0^-1");
  for (int i = 0; i < n - 1; ++i) w.append(a);
  w.append(parse_word("x1^-2"));
  Word b = parse_word("x0 x1 x0 x1^-1");
  for (int i = 0; i < n - 1; ++i) w.append(b);
  return w;
}

Word g_word(int n) {
  if (n < 2) throw ArityError("family index must be >= 2");
  // x0 (x1^-2 x0^-1 x1 x0^-1)^(n-1) x1^-2 (x0 x1 x0)^(n-1)
  Word w = parse_word("x0");
  Word a = parse_word("x1^-2 x0^-1 x1 x0^-1");
  for (int i = 0; i < n - 1; ++i) w.append(a);
  w.append(parse_word("x1^-2"));
  Word b = parse_word("x0 x1 x0");
  for (int i = 0; i < n - 1; ++i) w.append(b);
  return w;
}

namespace {

// The x_i-index word forms; must agree with the compact forms.
Word f_word_indices(int n) {
  std::ostringstream os;
  os << "x0";
  for (int k = 1; k <= n - 1; ++k) os << " x" << 4 * k - 1 << "^2";
  for (int k = n - 1; k >= 1; --k) os << " x" << 4 * k + 1 << "^-2";
  os << " x1^-2";
  return parse_word(os.str());
}

Word g_word_indices(int n) {
  std::ostringstream os;
  os << "x0";
  for (int k = 1; k <= n - 1; ++k) os << " x" << 5 * k - 1 << "^2";
  for (int k = n - 1; k >= 1; --k) os << " x" << 5 * k + 1 << "^-2";
  os << " x1^-2";
  return parse_word(os.str());
}

}  // namespace

StrandDiagram f_element(int n) {
  StrandDiagram d = word_to_diagram(f_word(n));
  StrandDiagram alt = word_to_diagram(f_word_indices(n));
  STRAND_CHECK(diagrams_equal(d, alt), "the two f_n word forms disagree");
  return d;
}

StrandDiagram g_element(int n) {
  StrandDiagram d = word_to_diagram(g_word(n));
  StrandDiagram alt = word_to_diagram(g_word_indices(n));
  STRAND_CHECK(diagrams_equal(d, alt), "the two g_n word forms disagree");
  return d;
}

StrandDiagram frak_f(int n) {
  StrandDiagram t = right_vine(2 * n + 1);
  StrandDiagram d = multiply(multiply(inverse(t), f_element(n)), t);
  STRAND_CHECK(d.source_count() == 2 * n + 1 && d.sink_count() == 2 * n + 1,
               "frak_f shape mismatch");
  STRAND_CHECK(d.norm() == 4 * n, "frak_f norm mismatch");
  return d;
}

StrandDiagram frak_g(int n) {
  StrandDiagram t = right_vine(3 * n);
  StrandDiagram d = multiply(multiply(inverse(t), g_element(n)), t);
  STRAND_CHECK(d.source_count() == 3 * n && d.sink_count() == 3 * n,
               "frak_g shape mismatch");
  STRAND_CHECK(d.norm() == 4 * n, "frak_g norm mismatch");
  return d;
}

}  // namespace strand
