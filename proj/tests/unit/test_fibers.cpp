#include <doctest.h>

#include <algorithm>
#include <set>

#include "shiftlab/classdeg.hpp"
#include "shiftlab/codes.hpp"
#include "shiftlab/error.hpp"
#include "shiftlab/fibers.hpp"
#include "support/fixtures.hpp"
#include "support/properties.hpp"

using namespace shiftlab;

namespace {

std::vector<std::string> formatted(const FactorTriple& t, const std::vector<PeriodicWord>& ws) {
  std::vector<std::string> out;
  for (const auto& w : ws) out.push_back(t.y().format_word(w.q));
  return out;
}

std::set<std::set<Symbol>> as_sets(const std::vector<SymbolSet>& v) {
  std::set<std::set<Symbol>> out;
  for (const auto& s : v) {
    auto m = s.members();
    out.emplace(m.begin(), m.end());
  }
  return out;
}

}  // namespace

TEST_CASE("canonical periodic words") {
  CHECK(canonical_periodic({1, 0, 1, 0}).q == Word{0, 1});
  CHECK(canonical_periodic({2, 0, 1}).q == Word{0, 1, 2});
  CHECK(reversed_periodic({0, 1, 2}) == Word{0, 2, 1});
  CHECK(reversed_periodic(reversed_periodic({0, 1, 2, 3})) == Word{0, 1, 2, 3});
}

TEST_CASE("periodic words in the image") {
  auto t2 = fixtures::load("t2");
  CHECK(formatted(t2, periodic_words(t2, 1)) == std::vector<std::string>{"0", "1"});
  CHECK(formatted(t2, periodic_words(t2, 2)) == std::vector<std::string>{"0", "1", "01"});

  auto t3 = fixtures::load("t3");
  auto p4 = periodic_words(t3, 4);
  CHECK(p4.size() == 9);
  for (const auto& w : p4) CHECK(t3.y().format_word(w.q).substr(0, 1) == "m");

  auto loop = identity_triple(build_graph({"a"}, {{"a", "a"}}));
  CHECK(periodic_words(loop, 5).size() == 1);
}

TEST_CASE("fiber graphs") {
  auto t2 = fixtures::load("t2");
  auto g = fiber_graph(t2, fixtures::word(t2, "0"));
  CHECK(g.vertices.size() == 3);
  CHECK(g.edge_count() == 4);

  auto t1 = fixtures::load("t1");
  auto g1 = fiber_graph(t1, fixtures::word(t1, "0"));
  CHECK(g1.vertices.size() == 2);
  CHECK(g1.edge_count() == 3);

  auto t3 = fixtures::load("t3");
  auto g3 = fiber_graph(t3, fixtures::word(t3, "mαaα'"));
  CHECK(g3.vertices.size() == 8);
  CHECK(g3.edge_count() == 8);

  auto t5 = fixtures::load("t5");
  CHECK_THROWS_AS(fiber_graph(t5, fixtures::word(t5, "b")), Error);
}

TEST_CASE("transition classes over fixed points") {
  auto t1 = fixtures::load("t1");
  auto c1 = periodic_classes(t1, fixtures::word(t1, "0"));
  REQUIRE(c1.classes.size() == 2);
  CHECK(as_sets(class_restriction(c1, 2, 0)) == std::set<std::set<Symbol>>{{0}, {1}});
  CHECK(c1.arrows == std::vector<std::pair<std::size_t, std::size_t>>{{0, 1}});

  auto t2 = fixtures::load("t2");
  auto c2 = periodic_classes(t2, fixtures::word(t2, "0"));
  REQUIRE(c2.classes.size() == 2);
  auto sets = class_restriction(c2, t2.x_size(), 0);
  CHECK(sets[0] == fixtures::xset(t2, {"a"}));
  CHECK(sets[1] == fixtures::xset(t2, {"d"}));
  CHECK(c2.has_arrow(0, 1));
  CHECK_FALSE(c2.has_arrow(1, 0));
  CHECK(class_degree(t2).value < c2.classes.size());
}

TEST_CASE("class tables on t3") {
  auto t3 = fixtures::load("t3");
  auto cs = periodic_classes(t3, fixtures::word(t3, "mβaβ'"));
  REQUIRE(cs.classes.size() == 2);
  auto sets = as_sets(class_restriction(cs, t3.x_size(), 2));
  CHECK(sets == as_sets({fixtures::xset(t3, {"1", "2"}), fixtures::xset(t3, {"5"})}));
  auto m = as_sets(class_restriction(cs, t3.x_size(), 0));
  CHECK(m == as_sets({fixtures::xset(t3, {"m1"}), fixtures::xset(t3, {"m2"})}));

  auto a = periodic_classes(t3, fixtures::word(t3, "mαaα'"));
  CHECK(as_sets(class_restriction(a, t3.x_size(), 2)) ==
        as_sets({fixtures::xset(t3, {"1"}), fixtures::xset(t3, {"3"})}));
  auto g = periodic_classes(t3, fixtures::word(t3, "mγaγ'"));
  CHECK(as_sets(class_restriction(g, t3.x_size(), 2)) ==
        as_sets({fixtures::xset(t3, {"2", "3"}), fixtures::xset(t3, {"6"})}));
}

TEST_CASE("class counts are at least the class degree") {
  for (auto name : {"t2", "t3", "t4", "t5"}) {
    auto t = fixtures::load(name);
    auto c = class_degree(t).value;
    for (const auto& w : periodic_words(t, 4)) CHECK(periodic_classes(t, w.q).classes.size() >= c);
  }
}

TEST_CASE("rotating the word shifts the classes") {
  for (auto name : {"t2", "t3", "t4"}) {
    auto t = fixtures::load(name);
    for (const auto& pw : periodic_words(t, 4)) {
      auto base = periodic_classes(t, pw.q);
      for (std::size_t r = 1; r < pw.period(); ++r) {
        Word rotated(pw.q.begin() + static_cast<std::ptrdiff_t>(r), pw.q.end());
        rotated.insert(rotated.end(), pw.q.begin(), pw.q.begin() + static_cast<std::ptrdiff_t>(r));
        auto shifted = periodic_classes(t, rotated);
        REQUIRE(shifted.classes.size() == base.classes.size());
        CHECK(shifted.arrows.size() == base.arrows.size());
        for (std::size_t i = 0; i < base.unrolled; ++i)
          CHECK(as_sets(class_restriction(shifted, t.x_size(), i)) ==
                as_sets(class_restriction(base, t.x_size(), i + r)));
      }
    }
  }
}

TEST_CASE("reversed classes") {
  auto t2 = fixtures::load("t2");
  auto r2 = reversed_classes(t2, fixtures::word(t2, "0"));
  REQUIRE(r2.classes.size() == 2);
  auto sets = class_restriction(r2, t2.x_size(), 0);
  CHECK(sets[0] == fixtures::xset(t2, {"a"}));
  CHECK(sets[1] == fixtures::xset(t2, {"d"}));
  CHECK(r2.has_arrow(1, 0));
  CHECK_FALSE(r2.has_arrow(0, 1));

  auto t1 = fixtures::load("t1");
  auto r1 = reversed_classes(t1, fixtures::word(t1, "0"));
  CHECK(r1.classes.size() == 2);
  CHECK(r1.arrows == std::vector<std::pair<std::size_t, std::size_t>>{{1, 0}});

  auto t4 = fixtures::load("t4");
  for (const auto& pw : periodic_words(t4, 3))
    CHECK(as_sets(class_restriction(reversed_classes(t4, pw.q), 4, 0)) ==
          as_sets(class_restriction(periodic_classes(t4, pw.q), 4, 0)));
}

TEST_CASE("reversal is an involution") {
  for (const auto& name : fixtures::bundled()) {
    auto o = properties::reversed_involution(fixtures::load(name));
    INFO(name << ": " << o.detail);
    CHECK(o.ok);
  }
}

TEST_CASE("separation diagnostic") {
  auto t2 = fixtures::load("t2");
  CHECK(separation_diagnostic(periodic_classes(t2, fixtures::word(t2, "0")), t2.x_size()).all_disjoint);
  auto t1 = fixtures::load("t1");
  CHECK(separation_diagnostic(periodic_classes(t1, fixtures::word(t1, "0")), t1.x_size()).all_disjoint);
  auto t3 = fixtures::load("t3");
  CHECK(separation_diagnostic(periodic_classes(t3, fixtures::word(t3, "mβaβ'")), t3.x_size()).all_disjoint);
}

TEST_CASE("point counts") {
  auto t2 = fixtures::load("t2");
  CHECK_FALSE(fiber_point_count(t2, fixtures::word(t2, "0")).finite);
  auto t4 = fixtures::load("t4");
  auto p = fiber_point_count(t4, fixtures::word(t4, "0"));
  CHECK(p.finite);
  CHECK(p.count == 2);
  auto t5 = fixtures::load("t5");
  p = fiber_point_count(t5, fixtures::word(t5, "ab"));
  CHECK(p.finite);
  CHECK(p.count == 1);
}

TEST_CASE("finite-to-one codes have finite periodic fibers") {
  for (auto name : {"t4", "t5"}) {
    auto t = fixtures::load(name);
    REQUIRE_FALSE(oracle::has_diamond(fixtures::to_oracle(t), 6));
    for (const auto& pw : periodic_words(t, 4)) CHECK(fiber_point_count(t, pw.q).finite);
  }
}
