#include <doctest.h>

#include "shiftlab/codes.hpp"
#include "shiftlab/core.hpp"
#include "shiftlab/error.hpp"
#include "support/fixtures.hpp"

using namespace shiftlab;

namespace {

SymbolGraph golden() { return build_graph({"a", "b"}, {{"a", "a"}, {"a", "b"}, {"b", "a"}}); }
SymbolGraph full2() { return build_graph({"0", "1"}, {{"0", "0"}, {"0", "1"}, {"1", "0"}, {"1", "1"}}); }

std::set<std::pair<std::string, std::string>> named_edges(const SymbolGraph& g) {
  std::set<std::pair<std::string, std::string>> out;
  for (auto [a, b] : g.edges()) out.emplace(g.symbols().name(a), g.symbols().name(b));
  return out;
}

}  // namespace

TEST_CASE("build_graph essentializes") {
  auto t1 = build_graph({"a", "b"}, {{"a", "a"}, {"a", "b"}, {"b", "b"}});
  CHECK(t1.size() == 2);
  CHECK(t1.edge_count() == 3);

  auto loop = build_graph({"a"}, {{"a", "a"}});
  CHECK(loop.size() == 1);
  CHECK(is_irreducible(loop));

  try {
    build_graph({"a", "b"}, {{"a", "b"}});
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::EmptyAfterEssentialization);
  }

  EssentializeLog log;
  auto pruned = build_graph({"a", "b", "c"}, {{"a", "a"}, {"a", "b"}, {"c", "a"}}, &log);
  CHECK(pruned.size() == 1);
  CHECK(log.removed == std::vector<std::string>{"b", "c"});
}

TEST_CASE("irreducibility of the bundled graphs") {
  CHECK_FALSE(is_irreducible(fixtures::load("t1").x()));
  for (auto name : {"t2", "t3", "t4", "t5"}) CHECK(is_irreducible(fixtures::load(name).x()));
}

TEST_CASE("higher block presentations") {
  auto hb = higher_block(full2(), 2);
  CHECK(hb.graph.size() == 4);
  CHECK(hb.graph.edge_count() == 8);

  auto g = higher_block(golden(), 2);
  CHECK(g.graph.symbols().names() == std::vector<std::string>{"aa", "ab", "ba"});
  CHECK(named_edges(g.graph) == std::set<std::pair<std::string, std::string>>{
                                    {"aa", "aa"}, {"aa", "ab"}, {"ab", "ba"}, {"ba", "aa"}, {"ba", "ab"}});

  auto same = higher_block(golden(), 1);
  CHECK(same.graph == golden());

  Word w{0, 0, 1, 0};
  CHECK(g.decode(g.encode(w)) == w);
}

TEST_CASE("transpose") {
  auto t1 = fixtures::load("t1").x();
  CHECK(named_edges(transpose(t1)) ==
        std::set<std::pair<std::string, std::string>>{{"a", "a"}, {"b", "a"}, {"b", "b"}});
  CHECK(transpose(full2()) == full2());
  auto t2 = fixtures::load("t2").x();
  CHECK(transpose(transpose(t2)) == t2);
}

TEST_CASE("word matrices on t2") {
  auto t2 = fixtures::load("t2");
  auto sym = [&](const char* s) { return t2.x().symbols().at(s); };

  auto m0 = word_matrix(t2, fixtures::word(t2, "0"));
  REQUIRE(m0);
  std::vector<std::pair<Symbol, Symbol>> diag{{sym("a"), sym("a")}, {sym("b"), sym("b")}, {sym("d"), sym("d")}};
  CHECK(m0->bits.support() == diag);

  auto m00 = word_matrix(t2, fixtures::word(t2, "00"));
  REQUIRE(m00);
  std::vector<std::pair<Symbol, Symbol>> pairs{
      {sym("a"), sym("a")}, {sym("a"), sym("b")}, {sym("b"), sym("d")}, {sym("d"), sym("d")}};
  CHECK(m00->bits.support() == pairs);
  CHECK(m00->first_label == m00->last_label);
}

TEST_CASE("word matrices multiply along concatenation") {
  for (auto name : {"t2", "t3", "t4"}) {
    auto t = fixtures::load(name);
    for (std::size_t l1 = 1; l1 <= 3; ++l1)
      for (const auto& u : image_words(t, l1))
        for (std::size_t l2 = 1; l2 <= 3; ++l2)
          for (const auto& v : image_words(t, l2)) {
            Word uv = u;
            uv.insert(uv.end(), v.begin(), v.end());
            auto mu = word_matrix(t, u);
            auto mv = word_matrix(t, v);
            auto edge = BoolMatrix(t.x_size());
            for (auto [a, b] : t.x().edges()) edge.set(a, b);
            auto product = mu->bits * edge * mv->bits;
            auto direct = word_matrix(t, uv);
            if (direct)
              CHECK(direct->bits == product);
            else
              CHECK(product.is_zero());
          }
  }
}

TEST_CASE("trivial labelling on t1 gives reachability") {
  auto t1 = fixtures::load("t1");
  for (std::size_t len = 2; len <= 6; ++len) {
    auto m = word_matrix(t1, Word(len, 0));
    REQUIRE(m);
    CHECK(m->bits.count() == 3);
    CHECK_FALSE(m->bits.get(1, 0));
  }
}

TEST_CASE("transition monoid") {
  auto loop = identity_triple(build_graph({"a"}, {{"a", "a"}}));
  auto m = monoid_closure(loop, 100);
  CHECK(m.elements.size() == 1);
  CHECK(m.status == MonoidStatus::Exact);

  auto t2 = fixtures::load("t2");
  auto closure = monoid_closure(t2, default_monoid_cap());
  CHECK(closure.status == MonoidStatus::Exact);
  for (const auto& e : closure.elements) {
    auto again = word_matrix(t2, e.witness);
    REQUIRE(again);
    CHECK(again->bits == e.bits);
  }

  auto t3 = fixtures::load("t3");
  CHECK(monoid_closure(t3, t3.y_size()).status == MonoidStatus::Capped);
}

TEST_CASE("connecting gap") {
  CHECK(connecting_gap(full2()) == 0);
  CHECK(connecting_gap(golden()) == 1);
}

TEST_CASE("word parsing") {
  auto t3 = fixtures::load("t3");
  CHECK(t3.y().parse_word("α'mα").size() == 3);
  CHECK(t3.y().parse_word("α' m α") == t3.y().parse_word("α'mα"));
  CHECK_THROWS_AS(t3.y().parse_word("mq"), Error);
}
