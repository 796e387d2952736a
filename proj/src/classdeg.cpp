#include "shiftlab/classdeg.hpp"

#include <algorithm>
#include <tuple>

#include "shiftlab/codes.hpp"
#include "shiftlab/error.hpp"
#include "shiftlab/hitting_set.hpp"

namespace shiftlab {

namespace {

void require_interior(const Word& w, std::size_t n) {
  if (w.size() < 3 || n == 0 || n + 1 >= w.size())
    throw Error(ErrorKind::CoordinateNotInterior,
                "coordinate " + std::to_string(n) + " is not interior to a word of length " + std::to_string(w.size()));
}

WordMatrix checked_matrix(const FactorTriple& t, const Word& w) {
  auto m = word_matrix(t, w);
  if (!m) throw Error(ErrorKind::WordNotInImage, "word is not in B(Y)");
  return std::move(*m);
}

RoutingProfile profile_from(const BoolMatrix& prefix, const BoolMatrix& suffix_t, const BoolMatrix& product) {
  RoutingProfile p;
  for (auto [i, j] : product.support()) {
    p.pairs.emplace_back(i, j);
    p.routes.push_back(prefix.row(i) & suffix_t.row(j));
  }
  return p;
}

std::vector<Symbol> route_choice(const RoutingProfile& p, const SymbolSet& m) {
  std::vector<Symbol> out;
  out.reserve(p.routes.size());
  for (const auto& r : p.routes) {
    auto hit = (r & m).members();
    if (hit.empty()) return {};
    out.push_back(hit.front());
  }
  return out;
}

using CertKey = std::tuple<std::size_t, std::size_t, Word, std::size_t>;

bool better(const CertKey& a, const SymbolSet& ma, const CertKey& b, const SymbolSet& mb) {
  if (a != b) return a < b;
  return lex_less(ma, mb);
}

TransitionBlockCert bounded_search(const FactorTriple& t, std::size_t max_len) {
  std::optional<TransitionBlockCert> best;
  for (std::size_t len = 3; len <= max_len; ++len) {
    for (const auto& w : image_words(t, len)) {
      auto c = min_depth_at(t, w);
      if (!best || c.depth() < best->depth()) best = std::move(c);
      if (best->depth() == 1) return *best;
    }
  }
  if (!best) throw Error(ErrorKind::InvalidArgument, "B(Y) has no words of length 3..max_len");
  return *best;
}

}  // namespace

RoutingProfile routing_profile(const FactorTriple& t, const Word& w, std::size_t n) {
  require_interior(w, n);
  auto full = checked_matrix(t, w);
  auto prefix = checked_matrix(t, Word(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(n) + 1));
  auto suffix = checked_matrix(t, Word(w.begin() + static_cast<std::ptrdiff_t>(n), w.end()));
  auto p = profile_from(prefix.bits, suffix.bits.transposed(), full.bits);
  p.w = w;
  p.n = n;
  return p;
}

bool is_transition_block(const FactorTriple& t, const Word& w, std::size_t n, const SymbolSet& m) {
  auto p = routing_profile(t, w, n);
  if (!m.is_subset_of(t.fiber(w[n])))
    throw Error(ErrorKind::InvalidArgument, "M must lie in the fiber of w_n");
  return hits_all(m, p.routes);
}

TransitionBlockCert certify(const FactorTriple& t, const Word& w, std::size_t n, const SymbolSet& m) {
  auto p = routing_profile(t, w, n);
  if (!m.is_subset_of(t.fiber(w[n]))) throw Error(ErrorKind::InvalidArgument, "M must lie in the fiber of w_n");
  auto routing = route_choice(p, m);
  if (routing.size() != p.routes.size())
    throw Error(ErrorKind::InvalidArgument, "not a transition block: some preimage avoids M");
  return TransitionBlockCert{w, n, m, std::move(routing)};
}

TransitionBlockCert min_depth_at(const FactorTriple& t, const Word& w) {
  require_interior(w, 1);
  auto full = checked_matrix(t, w);
  std::optional<std::pair<std::size_t, SymbolSet>> best;
  for (std::size_t n = 1; n + 1 < w.size(); ++n) {
    auto prefix = checked_matrix(t, Word(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(n) + 1));
    auto suffix = checked_matrix(t, Word(w.begin() + static_cast<std::ptrdiff_t>(n), w.end()));
    auto p = profile_from(prefix.bits, suffix.bits.transposed(), full.bits);
    std::optional<std::size_t> limit;
    if (best) limit = best->second.count() - 1;
    if (limit && *limit == 0) break;
    auto hs = min_hitting_set(p.routes, t.x_size(), limit);
    if (hs) best.emplace(n, hs->set);
  }
  return certify(t, w, best->first, best->second);
}

ClassDegreeReport class_degree(const FactorTriple& t, const ClassDegreeOptions& options) {
  if (!is_irreducible(t.x())) throw Error(ErrorKind::NotIrreducible, t.name() + " has a reducible domain");
  ClassDegreeReport report;
  if (!options.exact) {
    report.mode = ClassDegreeMode::UpperBound;
    report.max_len = options.max_len;
    report.certificate = bounded_search(t, options.max_len);
    report.value = report.certificate.depth();
    return report;
  }

  auto monoid = monoid_closure(t, options.cap, 2);
  report.monoid_status = monoid.status;
  report.monoid_size = monoid.elements.size();
  if (monoid.status == MonoidStatus::Capped) {
    report.mode = ClassDegreeMode::UpperBound;
    report.max_len = options.max_len;
    report.certificate = bounded_search(t, options.max_len);
    report.value = report.certificate.depth();
    return report;
  }

  const auto& elems = monoid.elements;
  std::vector<std::vector<std::size_t>> by_first(t.y_size());
  std::vector<BoolMatrix> transposed;
  transposed.reserve(elems.size());
  for (std::size_t k = 0; k < elems.size(); ++k) {
    by_first[elems[k].first_label].push_back(k);
    transposed.push_back(elems[k].bits.transposed());
  }

  bool found = false;
  CertKey best_key;
  SymbolSet best_m;
  for (const auto& m1 : elems) {
    for (std::size_t k2 : by_first[m1.last_label]) {
      const auto& m2 = elems[k2];
      Word w = m1.witness;
      w.insert(w.end(), m2.witness.begin() + 1, m2.witness.end());
      std::optional<std::size_t> limit;
      if (found) {
        auto depth = std::get<0>(best_key);
        bool later = std::make_tuple(w.size(), w) > std::make_tuple(std::get<1>(best_key), std::get<2>(best_key));
        limit = later ? depth - 1 : depth;
        if (*limit == 0) continue;
      }
      auto product = m1.bits * m2.bits;
      if (product.is_zero()) continue;
      auto p = profile_from(m1.bits, transposed[k2], product);
      auto hs = min_hitting_set(p.routes, t.x_size(), limit);
      if (!hs) continue;
      CertKey key{hs->size(), w.size(), w, m1.witness.size() - 1};
      if (!found || better(key, hs->set, best_key, best_m)) {
        best_key = std::move(key);
        best_m = hs->set;
        found = true;
      }
    }
  }
  if (!found) throw Error(ErrorKind::EmptyAfterEssentialization, "image shift has no words of length 3");
  report.certificate = certify(t, std::get<2>(best_key), std::get<3>(best_key), best_m);
  report.value = report.certificate.depth();
  return report;
}

RoutabilityReport check_unique_routability(const FactorTriple& t, const TransitionBlockCert& cert,
                                           std::size_t max_len) {
  RoutabilityReport report;
  for (std::size_t len = cert.w.size(); len <= max_len; ++len) {
    for (const auto& w : image_words(t, len)) {
      bool counted = false;
      for (std::size_t o = 0; o + cert.w.size() <= w.size(); ++o) {
        if (!std::equal(cert.w.begin(), cert.w.end(), w.begin() + static_cast<std::ptrdiff_t>(o))) continue;
        if (!counted) {
          ++report.words_checked;
          counted = true;
        }
        ++report.occurrences_checked;
        auto p = routing_profile(t, w, cert.n + o);
        for (std::size_t k = 0; k < p.pairs.size(); ++k) {
          auto through = p.routes[k] & cert.m;
          if (through.count() != 1) report.violations.push_back({w, cert.n + o, p.pairs[k], through});
        }
      }
    }
  }
  return report;
}

}  // namespace shiftlab
