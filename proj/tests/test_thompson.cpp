#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <random>

#include "doctest.h"
#include "strand/families.hpp"
#include "strand/plmap.hpp"
#include "strand/thompson.hpp"
#include "oracle_treepair.hpp"

using namespace strand;

namespace {

Word random_word(std::mt19937_64& rng, int len) {
  Word w;
  for (int i = 0; i < len; ++i)
    w.letters.push_back({static_cast<uint32_t>(rng() & 1),
                         (rng() & 2) ? int8_t{1} : int8_t{-1}});
  return w;
}

}  // namespace

TEST_CASE("parse_word basics") {
  Word w = parse_word("x0 x1^-2");
  REQUIRE(w.size() == 3);
  CHECK(w.letters[0] == Letter{0, 1});
  CHECK(w.letters[1] == Letter{1, -1});
  CHECK(w.letters[2] == Letter{1, -1});

  Word x2 = parse_word("x2");
  REQUIRE(x2.size() == 3);
  CHECK(x2.letters[0] == Letter{0, -1});
  CHECK(x2.letters[1] == Letter{1, 1});
  CHECK(x2.letters[2] == Letter{0, 1});

  CHECK(parse_word("x3^2").size() == 10);
  CHECK(parse_word("x1^0").empty());
  CHECK(parse_word("").empty());
  CHECK(parse_word("   ").empty());

  CHECK_THROWS_AS(parse_word("y0"), ParseError);
  CHECK_THROWS_AS(parse_word("x"), ParseError);
  CHECK_THROWS_AS(parse_word("x1^"), ParseError);
  CHECK_THROWS_AS(parse_word("x1^a"), ParseError);
  try {
    parse_word("x0 q1");
    FAIL("expected parse error");
  } catch (const ParseError& e) {
    CHECK(e.position == 3);
  }
}

TEST_CASE("word rendering round trips") {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 40; ++i) {
    Word w = random_word(rng, 12);
    Word back = parse_word(word_to_text(w));
    CHECK(back.letters == w.letters);
  }
}

TEST_CASE("word_to_diagram basics") {
  CHECK(diagrams_equal(word_to_diagram(""), make_trivial(1)));
  CHECK(diagrams_equal(word_to_diagram("x0 x0^-1"), make_trivial(1)));
  CHECK(word_to_diagram("x0").norm() == 4);
  CHECK(word_to_diagram("x1").norm() == 6);
}

TEST_CASE("vine conjugation norms from the norm/length comparison") {
  StrandDiagram t3 = right_vine(3);
  for (const char* g : {"x0", "x1"}) {
    StrandDiagram c =
        multiply(multiply(inverse(t3), word_to_diagram(g)), t3);
    CHECK(c.norm() == 2);
  }
  // and norm(x1^n) = 2n + 4
  for (int n = 2; n <= 10; ++n) {
    CHECK(word_to_diagram(word_power(parse_word("x1"), n)).norm() == 2 * n + 4);
  }
}

TEST_CASE("relations of the infinite presentation hold") {
  // x_n x_k = x_k x_{n+1} for n > k, via the x_k expansion
  for (int k = 0; k <= 2; ++k) {
    for (int n = k + 1; n <= 4; ++n) {
      std::string lhs = "x" + std::to_string(n) + " x" + std::to_string(k);
      std::string rhs = "x" + std::to_string(k) + " x" + std::to_string(n + 1);
      CHECK(diagrams_equal(word_to_diagram(lhs), word_to_diagram(rhs)));
    }
  }
}

TEST_CASE("tree pair round trips") {
  TreePair triv = diagram_to_treepair(make_trivial(1));
  CHECK(triv.domain.caret_count() == 0);
  CHECK(triv.range.caret_count() == 0);

  TreePair p0 = diagram_to_treepair(word_to_diagram("x0"));
  CHECK(p0.domain.caret_count() == 2);
  CHECK(p0.range.caret_count() == 2);

  std::mt19937_64 rng(41);
  for (int i = 0; i < 200; ++i) {
    StrandDiagram d = word_to_diagram(random_word(rng, 10));
    TreePair t = diagram_to_treepair(d);
    CHECK(t.domain.caret_count() == d.norm() / 2);
    CHECK(treepair_reduced(t));
    CHECK(diagrams_equal(treepair_to_diagram(t), d));
  }
}

TEST_CASE("element_to_word round trips") {
  CHECK(element_to_word(make_trivial(1)).empty());
  CHECK(diagrams_equal(word_to_diagram(element_to_word(word_to_diagram("x0"))),
                       word_to_diagram("x0")));
  std::mt19937_64 rng(43);
  for (int i = 0; i < 200; ++i) {
    StrandDiagram d = word_to_diagram(random_word(rng, 10));
    Word w = element_to_word(d);
    CHECK(diagrams_equal(word_to_diagram(w), d));
  }
}

TEST_CASE("diagram multiplication agrees with the tree pair oracle") {
  std::mt19937_64 rng(47);
  for (int i = 0; i < 100; ++i) {
    Word wa = random_word(rng, 8), wb = random_word(rng, 8);
    StrandDiagram da = word_to_diagram(wa), db = word_to_diagram(wb);
    oracle::Pair pa = oracle::from_word(wa), pb = oracle::from_word(wb);
    CHECK(oracle::pair_equal(oracle::from_treepair(diagram_to_treepair(multiply(da, db))),
                             oracle::multiply(pa, pb)));
  }
  // x0 x1 != x1 x0 both routes
  StrandDiagram ab = multiply(word_to_diagram("x0"), word_to_diagram("x1"));
  StrandDiagram ba = multiply(word_to_diagram("x1"), word_to_diagram("x0"));
  CHECK(!diagrams_equal(ab, ba));
  CHECK(!oracle::pair_equal(oracle::multiply(oracle::from_word(parse_word("x0")),
                                             oracle::from_word(parse_word("x1"))),
                            oracle::multiply(oracle::from_word(parse_word("x1")),
                                             oracle::from_word(parse_word("x0")))));
}

TEST_CASE("plmap slopes and fixed points") {
  PLMap id = element_to_plmap(make_trivial(1));
  CHECK(id.is_identity());
  CHECK(slope_log2_at_0(id) == 0);
  CHECK(!interior_fixed_point_free(id));

  PLMap m0 = element_to_plmap(word_to_diagram("x0"));
  CHECK(slope_log2_at_0(m0) == 1);   // x0 doubles near 0
  CHECK(slope_log2_at_1(m0) == -1);
  CHECK(interior_fixed_point_free(m0));

  PLMap m1 = element_to_plmap(word_to_diagram("x1"));
  CHECK(slope_log2_at_0(m1) == 0);
  CHECK(slope_log2_at_1(m1) == -1);
  CHECK(!interior_fixed_point_free(m1));
}

TEST_CASE("endpoint slopes are conjugation invariants") {
  std::mt19937_64 rng(53);
  for (int i = 0; i < 50; ++i) {
    StrandDiagram f = word_to_diagram(random_word(rng, 8));
    StrandDiagram u = word_to_diagram(random_word(rng, 6));
    StrandDiagram c = conjugate(f, u);
    CHECK(slope_log2_at_0(element_to_plmap(c)) ==
          slope_log2_at_0(element_to_plmap(f)));
    CHECK(slope_log2_at_1(element_to_plmap(c)) ==
          slope_log2_at_1(element_to_plmap(f)));
  }
}
