// Acceptance run: one PASS/FAIL line per criterion. Exit status is nonzero
// when any criterion fails.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "shiftlab/cli.hpp"
#include "shiftlab/error.hpp"
#include "shiftlab/structure.hpp"
#include "shiftlab/triple_io.hpp"
#include "support/fixtures.hpp"
#include "support/properties.hpp"

using namespace shiftlab;

namespace {

struct Verdict {
  bool ok = true;
  std::vector<std::string> notes;

  void expect(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      notes.push_back("failed: " + what);
    }
  }
  void note(const std::string& what) { notes.push_back(what); }
};

std::set<std::set<std::string>> named_sets(const FactorTriple& t, const std::vector<SymbolSet>& sets) {
  std::set<std::set<std::string>> out;
  for (const auto& s : sets) {
    std::set<std::string> names;
    s.for_each([&](Symbol a) { names.insert(t.x().symbols().name(a)); });
    out.insert(names);
  }
  return out;
}

Verdict criterion1() {
  Verdict v;
  auto t2 = fixtures::load("t2");
  auto r = class_degree(t2);
  v.expect(r.mode == ClassDegreeMode::Exact, "exact mode");
  v.expect(r.value == 1, "c = 1, got " + std::to_string(r.value));
  const auto& c = r.certificate;
  v.expect(c.depth() == 1 && is_transition_block(t2, c.w, c.n, c.m), "certificate of depth 1 verifies");
  v.note("c = " + std::to_string(r.value) + " at '" + t2.y().format_word(c.w) + "'");
  return v;
}

Verdict criterion2() {
  Verdict v;
  auto t3 = fixtures::load("t3");
  auto r = class_degree(t3);
  v.expect(r.mode == ClassDegreeMode::Exact && r.value == 2, "c = 2 exactly, got " + std::to_string(r.value));
  v.expect(is_transition_block(t3, r.certificate.w, r.certificate.n, r.certificate.m), "certificate verifies");
  auto m = magic_search(t3);
  v.expect(m.status == SearchStatus::Exact && m.d_min == 2, "d_min = 2, got " + std::to_string(m.d_min));
  v.expect(t3.y().format_word(m.witness_word) == "m", "witness 'm', got '" + t3.y().format_word(m.witness_word) + "'");
  v.note("c = " + std::to_string(r.value) + ", d_min = " + std::to_string(m.d_min));
  return v;
}

Verdict criterion3() {
  Verdict v;
  auto t1 = fixtures::load("t1");
  auto c1 = periodic_classes(t1, fixtures::word(t1, "0"));
  v.expect(c1.classes.size() == 2, "t1 over 0: 2 classes, got " + std::to_string(c1.classes.size()));
  v.expect(c1.arrows.size() == 1 && c1.has_arrow(0, 1) != c1.has_arrow(1, 0), "t1: a single one-way arrow");
  auto t2 = fixtures::load("t2");
  auto c2 = periodic_classes(t2, fixtures::word(t2, "0"));
  v.expect(c2.classes.size() == 2, "t2 over 0: 2 classes, got " + std::to_string(c2.classes.size()));
  v.note("t1: " + std::to_string(c1.classes.size()) + " classes, t2: " + std::to_string(c2.classes.size()) +
         " classes while c = 1");
  return v;
}

Verdict criterion4() {
  Verdict v;
  auto t3 = fixtures::load("t3");
  const std::vector<std::pair<std::string, std::set<std::set<std::string>>>> cases{
      {"mαaα'", {{"1"}, {"3"}}}, {"mβaβ'", {{"1", "2"}, {"5"}}}, {"mγaγ'", {{"2", "3"}, {"6"}}}};
  for (const auto& [q, expected] : cases) {
    auto cs = periodic_classes(t3, fixtures::word(t3, q));
    v.expect(named_sets(t3, class_restriction(cs, t3.x_size(), 2)) == expected, "class sets over " + q);
  }
  auto a = symbol_class_table(t3, t3.y().at("a"), 4);
  v.expect(!a.partition_exists && a.witness.has_value(), "a: NO_PARTITION with a witness");
  auto m = symbol_class_table(t3, t3.y().at("m"), 4);
  v.expect(m.partition_exists && named_sets(t3, m.parts) == std::set<std::set<std::string>>{{"m1"}, {"m2"}},
           "m: PARTITION_EXISTS {m1},{m2}");
  v.note("three tables reproduced, a has no partition, m splits as {m1},{m2}");
  return v;
}

Verdict criterion5() {
  Verdict v;
  auto t4 = fixtures::load("t4");
  auto point = parse_triple_file(fixtures::corpus_path("full2_point.json")).triple;
  auto d = degree(t4);
  auto c = class_degree(t4).value;
  v.expect(d == 2 && c == 2, "degree 2 and class degree 2, got " + std::to_string(d) + ", " + std::to_string(c));
  auto comp = composition_check(t4, point);
  v.expect(comp.c1 == 2 && comp.c2 == 1 && comp.composed == 1 && comp.holds, "composition (2, 1, 1, true)");
  v.expect(comp.strict, "strict inequality");
  v.note("(" + std::to_string(comp.c1) + ", " + std::to_string(comp.c2) + ", " + std::to_string(comp.composed) +
         ", " + (comp.holds ? "true" : "false") + "), strict = " + (comp.strict ? "true" : "false"));
  return v;
}

Verdict criterion6() {
  Verdict v;
  auto record = [&](const std::string& what, const properties::Outcome& o) {
    v.expect(o.ok, what + ": " + o.detail);
  };
  std::size_t instances = 0;
  for (const auto& name : fixtures::bundled()) {
    auto t = fixtures::load(name);
    const bool irreducible = is_irreducible(t.x());
    for (auto [what, o] : std::vector<std::pair<std::string, properties::Outcome>>{
             {"d monotonicity", properties::d_monotonicity(t)},
             {"block stability", properties::block_extension_stability(t)},
             {"reversed involution", properties::reversed_involution(t)}}) {
      record(name + " " + what, o);
      instances += o.checked;
    }
    if (!irreducible) continue;
    auto ur = properties::unique_routability(t);
    record(name + " unique routability", ur);
    auto inv = properties::recoding_invariance(t);
    record(name + " recoding invariance", inv);
    instances += ur.checked + inv.checked;
  }

  // the reducible triple: a depth-2 block whose pair routes through both symbols
  auto t1 = fixtures::load("t1");
  auto cert = min_depth_at(t1, fixtures::word(t1, "000"));
  auto r = check_unique_routability(t1, cert, 8);
  v.expect(!r.ok() && r.violations.front().through == fixtures::xset(t1, {"a", "b"}),
           "t1 routes through both a and b");

  auto t3 = fixtures::load("t3");
  auto tau_cert = certify(t3, fixtures::word(t3, "α'mα"), 1, fixtures::xset(t3, {"m1", "m2"}));
  auto tau = properties::tau_bridges(t3, tau_cert, 5);
  record("t3 τ", tau);
  instances += tau.checked;
  v.note(std::to_string(instances) + " instances checked");
  return v;
}

Verdict criterion7() {
  Verdict v;
  std::size_t words = 0;
  for (auto name : fixtures::bundled()) {
    auto o = properties::oracle_equivalence(fixtures::load(name));
    v.expect(o.ok, name + ": " + o.detail);
    words += o.checked;
  }
  auto point = parse_triple_file(fixtures::corpus_path("full2_point.json")).triple;
  auto o = properties::oracle_equivalence(point);
  v.expect(o.ok, "full2_point: " + o.detail);
  v.note(std::to_string(words + o.checked) + " words agree");
  return v;
}

Verdict criterion8() {
  Verdict v;
  auto t2 = fixtures::load("t2");
  auto keep = fixtures::xset(t2, {"a", "c", "d", "e"});
  Word v_bar{t2.x().symbols().at("b")};
  auto sd = subshift_diamond(t2, keep, v_bar);
  v.expect(sd.diamond.has_value(), "a diamond is found");
  v.expect(sd.bound == v_bar.size() + 2 * sd.l + 2 * sd.k, "bound is |v̄| + 2l + 2k");
  if (sd.diamond) {
    v.expect(sd.diamond->v.size() < sd.bound, "|v| below the bound");
    v.expect(is_diamond(t2, *sd.diamond), "diamond invariant");
    v.expect(is_subshift_diamond(t2, keep, v_bar, *sd.diamond, sd.bound), "subshift diamond invariant");
    v.note("|v| = " + std::to_string(sd.diamond->v.size()) + " < " + std::to_string(sd.bound));
  }
  return v;
}

nlohmann::json read_json(const std::string& path) { return nlohmann::json::parse(read_file(path)); }

Verdict criterion9() {
  Verdict v;
  const auto manifest = read_json(fixtures::corpus_path("manifest.json"));
  TripleLoader from_disk = [](const std::string& file) { return parse_triple_file(fixtures::corpus_path(file)).triple; };
  auto results = verify_manifest(manifest, from_disk);
  std::size_t failed = 0;
  for (const auto& r : results)
    if (!r.passed) ++failed;
  v.expect(failed == 0, std::to_string(failed) + " corpus assertions fail");

  nlohmann::json tagged = manifest;
  tagged["assertions"] = nlohmann::json::array();
  for (const auto& a : manifest["assertions"])
    if (a["file"] == "t3.json" && a["tag"] == "PAPER") tagged["assertions"].push_back(a);

  const auto source = read_json(fixtures::corpus_path("t3.json"));
  const auto& edges = source["edges"];
  std::vector<std::pair<std::string, nlohmann::json>> mutants;
  for (std::size_t e = 0; e < edges.size(); ++e) {
    auto removed = source;
    removed["edges"].erase(e);
    const auto label = edges[e][0].get<std::string>() + "->" + edges[e][1].get<std::string>();
    mutants.emplace_back("remove " + label, removed);
    auto back = nlohmann::json::array({edges[e][1], edges[e][0]});
    if (std::find(edges.begin(), edges.end(), back) != edges.end()) continue;
    auto reversed = removed;
    reversed["edges"].push_back(back);
    mutants.emplace_back("reverse " + label, reversed);
  }

  std::size_t killed = 0;
  std::vector<std::string> survivors;
  for (const auto& [what, doc] : mutants) {
    bool dead = false;
    try {
      auto mutated = parse_triple(doc).triple;
      TripleLoader load = [&](const std::string& file) { return file == "t3.json" ? mutated : from_disk(file); };
      for (const auto& r : verify_manifest(tagged, load)) dead = dead || !r.passed;
    } catch (const std::exception&) {
      dead = true;
    }
    if (dead)
      ++killed;
    else
      survivors.push_back(what);
  }
  v.expect(survivors.empty(), "surviving mutants: " + std::to_string(survivors.size()));
  for (const auto& s : survivors) v.note("survivor: " + s);
  v.note(std::to_string(results.size() - failed) + "/" + std::to_string(results.size()) + " assertions pass; " +
         std::to_string(killed) + "/" + std::to_string(mutants.size()) + " t3 mutants killed");
  return v;
}

}  // namespace

int main() {
  const std::vector<std::function<Verdict()>> criteria{criterion1, criterion2, criterion3, criterion4, criterion5,
                                                       criterion6, criterion7, criterion8, criterion9};
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    auto start = std::chrono::steady_clock::now();
    Verdict v;
    try {
      v = criteria[i]();
    } catch (const std::exception& e) {
      v.ok = false;
      v.notes.push_back(std::string("exception: ") + e.what());
    }
    auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
    std::ostringstream line;
    line << "criterion " << i + 1 << ": " << (v.ok ? "PASS" : "FAIL") << " (" << ms << " ms)";
    for (const auto& n : v.notes) line << "; " << n;
    std::puts(line.str().c_str());
    if (!v.ok) ++failures;
  }
  return failures == 0 ? 0 : 1;
}
