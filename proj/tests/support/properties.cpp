#include "properties.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "../oracle/path_oracle.hpp"
#include "fixtures.hpp"
#include "shiftlab/codes.hpp"
#include "shiftlab/degree.hpp"
#include "shiftlab/error.hpp"
#include "shiftlab/fibers.hpp"
#include "shiftlab/structure.hpp"

namespace properties {

using shiftlab::FactorTriple;
using shiftlab::Symbol;
using shiftlab::SymbolSet;
using shiftlab::Word;

namespace {

std::string show(const FactorTriple& t, const Word& w) { return "'" + t.y().format_word(w) + "'"; }

Word slice(const Word& w, std::size_t from, std::size_t len) {
  return Word(w.begin() + static_cast<std::ptrdiff_t>(from), w.begin() + static_cast<std::ptrdiff_t>(from + len));
}

std::set<int> to_set(const SymbolSet& s) {
  std::set<int> out;
  s.for_each([&](Symbol a) { out.insert(static_cast<int>(a)); });
  return out;
}

}  // namespace

Outcome d_monotonicity(const FactorTriple& t, std::size_t short_len, std::size_t long_len) {
  Outcome out;
  std::map<Word, std::size_t> d;
  for (std::size_t len = 1; len <= long_len; ++len)
    for (const auto& w : shiftlab::image_words(t, len)) d[w] = shiftlab::d_of_word(t, w).value;
  for (const auto& [outer, d_outer] : d)
    for (std::size_t len = 1; len <= std::min(short_len, outer.size()); ++len)
      for (std::size_t i = 0; i + len <= outer.size(); ++i) {
        ++out.checked;
        auto inner = slice(outer, i, len);
        if (d_outer > d.at(inner))
          out.fail("d(" + show(t, outer) + ") = " + std::to_string(d_outer) + " > d(" + show(t, inner) +
                   ") = " + std::to_string(d.at(inner)));
      }
  return out;
}

Outcome block_extension_stability(const FactorTriple& t, std::size_t min_len, std::size_t max_len,
                                  std::size_t extra) {
  Outcome out;
  std::map<Word, shiftlab::TransitionBlockCert> certs;
  for (std::size_t len = min_len; len <= max_len; ++len)
    for (const auto& w : shiftlab::image_words(t, len)) certs.emplace(w, shiftlab::min_depth_at(t, w));
  for (std::size_t len = min_len; len <= max_len + extra; ++len)
    for (const auto& outer : shiftlab::image_words(t, len))
      for (std::size_t inner = min_len; inner <= std::min(max_len, len); ++inner) {
        if (len - inner > extra) continue;
        for (std::size_t x = 0; x + inner <= len; ++x) {
          const auto& cert = certs.at(slice(outer, x, inner));
          ++out.checked;
          if (!shiftlab::is_transition_block(t, outer, cert.n + x, cert.m))
            out.fail("block " + show(t, cert.w) + " at " + std::to_string(cert.n) + " lost inside " +
                     show(t, outer));
        }
      }
  return out;
}

Outcome unique_routability(const FactorTriple& t, std::size_t max_len) {
  Outcome out;
  auto cert = shiftlab::class_degree(t).certificate;
  auto report = shiftlab::check_unique_routability(t, cert, max_len);
  out.checked = report.occurrences_checked;
  if (!report.ok()) {
    const auto& v = report.violations.front();
    out.fail("pair routes through " + std::to_string(v.through.count()) + " symbols of M in " +
             show(t, v.word));
  }
  return out;
}

Outcome tau_bridges(const FactorTriple& t, const shiftlab::TransitionBlockCert& cert, std::size_t max_bridge) {
  Outcome out;
  const auto c = cert.depth();
  std::map<Word, shiftlab::TauPermutation> taus;
  auto admissible = [&](const Word& v) {
    Word u = cert.w;
    u.insert(u.end(), v.begin(), v.end());
    u.insert(u.end(), cert.w.begin(), cert.w.end());
    return shiftlab::in_image(t, u);
  };
  std::vector<Word> bridges;
  if (admissible({})) bridges.push_back({});
  for (std::size_t len = 1; len <= max_bridge; ++len)
    for (const auto& v : shiftlab::image_words(t, len))
      if (admissible(v)) bridges.push_back(v);

  for (const auto& v : bridges) {
    ++out.checked;
    try {
      auto tau = shiftlab::tau_permutation(t, cert, v, c);
      std::set<Symbol> image;
      for (auto [a, b] : tau.map) image.insert(b);
      if (tau.map.size() != c || image.size() != c) out.fail("τ over " + show(t, v) + " is not a bijection of M");
      taus.emplace(v, std::move(tau));
    } catch (const shiftlab::Error& e) {
      out.fail("τ over " + show(t, v) + ": " + e.what());
    }
  }
  for (const auto& [v1, tau1] : taus)
    for (const auto& [v2, tau2] : taus) {
      Word joined = v1;
      joined.insert(joined.end(), cert.w.begin(), cert.w.end());
      joined.insert(joined.end(), v2.begin(), v2.end());
      ++out.checked;
      try {
        auto whole = shiftlab::tau_permutation(t, cert, joined, c);
        for (auto [a, b] : whole.map)
          if (tau2.apply(*tau1.apply(a)) != b) out.fail("τ does not compose over " + show(t, joined));
      } catch (const shiftlab::Error& e) {
        out.fail("τ over " + show(t, joined) + ": " + e.what());
      }
    }
  return out;
}

Outcome reversed_involution(const FactorTriple& t, std::size_t p_max) {
  Outcome out;
  auto tt = shiftlab::transpose_triple(t);
  if (!(shiftlab::transpose_triple(tt) == t)) out.fail("transpose is not an involution");
  for (const auto& pw : shiftlab::periodic_words(t, p_max)) {
    ++out.checked;
    const auto& q = pw.q;
    auto rq = shiftlab::reversed_periodic(q);
    if (shiftlab::reversed_periodic(rq) != q) out.fail("word reversal is not an involution");
    auto forward = shiftlab::periodic_classes(t, q);
    auto twice = shiftlab::reflect(shiftlab::reversed_classes(tt, rq), q);
    if (!(twice == forward)) out.fail("reversing twice changes the classes over " + show(t, q));

    auto reversed = shiftlab::reversed_classes(t, q);
    std::set<std::vector<shiftlab::FiberVertex>> a, b;
    for (const auto& cl : forward.classes) a.insert(cl.vertices);
    for (const auto& cl : reversed.classes) b.insert(cl.vertices);
    if (a != b || forward.unrolled != reversed.unrolled)
      out.fail("reversed classes over " + show(t, q) + " are not the forward classes");
    // arrows are reachability in the reversed graph: same pairs, other way round
    auto index = [](const shiftlab::ClassStructure& cs, const std::vector<shiftlab::FiberVertex>& v) {
      for (std::size_t i = 0; i < cs.classes.size(); ++i)
        if (cs.classes[i].vertices == v) return i;
      return cs.classes.size();
    };
    if (a == b)
      for (auto [from, to] : forward.arrows) {
        auto rf = index(reversed, forward.classes[from].vertices);
        auto rt = index(reversed, forward.classes[to].vertices);
        if (!reversed.has_arrow(rt, rf)) out.fail("arrow not reversed over " + show(t, q));
      }
  }
  return out;
}

Outcome recoding_invariance(const FactorTriple& t) {
  Outcome out;
  const auto c = shiftlab::class_degree(t).value;
  const bool finite = !shiftlab::find_diamond(t).has_value();
  const auto d = finite ? shiftlab::degree(t) : 0;
  std::vector<std::pair<std::string, FactorTriple>> variants{
      {"2-block", shiftlab::higher_block_triple(t, 2)},
      {"3-block", shiftlab::higher_block_triple(t, 3)},
      {"transpose", shiftlab::transpose_triple(t)}};
  for (const auto& [what, v] : variants) {
    ++out.checked;
    auto cv = shiftlab::class_degree(v).value;
    if (cv != c) out.fail(what + " class degree " + std::to_string(cv) + " != " + std::to_string(c));
    if (finite != !shiftlab::find_diamond(v).has_value()) out.fail(what + " changes finite-to-one");
    if (finite && shiftlab::degree(v) != d) out.fail(what + " changes the degree");
  }
  return out;
}

Outcome oracle_equivalence(const FactorTriple& t, std::size_t max_len) {
  Outcome out;
  const auto code = fixtures::to_oracle(t);
  for (std::size_t len = 1; len <= max_len; ++len) {
    auto words = shiftlab::image_words(t, len);
    auto brute = oracle::image_words(code, len);
    std::vector<std::vector<int>> mine;
    for (const auto& w : words) mine.push_back(fixtures::to_ints(w));
    if (mine != brute) out.fail("B_" + std::to_string(len) + "(Y) differs");

    for (const auto& w : words) {
      const auto wi = fixtures::to_ints(w);
      ++out.checked;
      auto m = shiftlab::word_matrix(t, w);
      std::set<oracle::Pair> pairs;
      if (m)
        for (auto [i, j] : m->bits.support()) pairs.emplace(static_cast<int>(i), static_cast<int>(j));
      if (!m || pairs != oracle::endpoint_pairs(code, wi)) out.fail("word matrix of " + show(t, w));

      for (std::size_t k = 0; k < len; ++k)
        if (to_set(shiftlab::symbol_set_at(t, w, k)) != oracle::symbols_at(code, wi, k))
          out.fail("symbol set of " + show(t, w) + " at " + std::to_string(k));
      if (static_cast<int>(shiftlab::d_of_word(t, w).value) != oracle::d_of_word(code, wi))
        out.fail("d(" + show(t, w) + ")");

      for (std::size_t n = 1; n + 1 < len; ++n) {
        auto profile = shiftlab::routing_profile(t, w, n);
        std::map<oracle::Pair, std::set<int>> routes;
        for (std::size_t p = 0; p < profile.pairs.size(); ++p)
          routes[{static_cast<int>(profile.pairs[p].first), static_cast<int>(profile.pairs[p].second)}] =
              to_set(profile.routes[p]);
        if (routes != oracle::routing(code, wi, n))
          out.fail("routing profile of " + show(t, w) + " at " + std::to_string(n));
      }
      if (len >= 3 && len <= 4 && shiftlab::min_depth_at(t, w).depth() != oracle::min_depth(code, wi))
        out.fail("minimum depth of " + show(t, w));
    }
  }
  return out;
}

Outcome magic_against_oracle(const FactorTriple& t, std::size_t max_len) {
  Outcome out;
  const auto code = fixtures::to_oracle(t);
  int best = static_cast<int>(t.x_size()) + 1;
  for (std::size_t len = 1; len <= max_len; ++len)
    for (const auto& w : oracle::image_words(code, len)) {
      ++out.checked;
      best = std::min(best, oracle::d_of_word(code, w));
    }
  auto report = shiftlab::magic_search(t);
  if (static_cast<int>(report.d_min) != best)
    out.fail("d_min " + std::to_string(report.d_min) + " but brute force gives " + std::to_string(best));
  if (oracle::d_of_word(code, fixtures::to_ints(report.witness_word)) != static_cast<int>(report.d_min))
    out.fail("witness " + show(t, report.witness_word) + " does not realize d_min");
  return out;
}

}  // namespace properties
