#include "shiftlab/codes.hpp"

#include <deque>
#include <set>
#include <unordered_map>

#include "shiftlab/error.hpp"

namespace shiftlab {

FactorTriple build_triple(std::string name, const SymbolGraph& g, const std::map<std::string, std::string>& labels,
                          const std::vector<std::string>& y_order) {
  std::vector<std::string> used;
  std::set<std::string> used_set;
  for (Symbol s = 0; s < g.size(); ++s) {
    auto it = labels.find(g.symbols().name(s));
    if (it == labels.end())
      throw Error(ErrorKind::ValidationError, "symbol '" + g.symbols().name(s) + "' has no label");
    if (used_set.insert(it->second).second) used.push_back(it->second);
  }
  std::vector<std::string> order;
  if (y_order.empty()) {
    order = used;
  } else {
    for (const auto& l : y_order)
      if (used_set.contains(l)) order.push_back(l);
    if (order.size() != used_set.size())
      throw Error(ErrorKind::ValidationError, "image alphabet order does not list every used label");
  }
  Alphabet y(order);
  std::vector<Symbol> lab;
  lab.reserve(g.size());
  for (Symbol s = 0; s < g.size(); ++s) lab.push_back(y.at(labels.at(g.symbols().name(s))));
  return FactorTriple(std::move(name), g, std::move(y), std::move(lab));
}

FactorTriple recode_one_block(std::string name, const SymbolGraph& g, const SlidingBlockCode& code) {
  const std::size_t window = code.memory + code.anticipation + 1;
  auto hb = higher_block(g, window);
  std::map<std::string, std::string> labels;
  for (Symbol s = 0; s < hb.graph.size(); ++s) {
    auto it = code.block_map.find(hb.blocks[s]);
    if (it == code.block_map.end())
      throw Error(ErrorKind::ValidationError,
                  "block map is not defined on block '" + g.symbols().format_word(hb.blocks[s]) + "'");
    labels[hb.graph.symbols().name(s)] = it->second;
  }
  // keep the image alphabet in the order of first appearance in the block map
  std::vector<std::string> order;
  std::set<std::string> seen;
  for (const auto& [block, label] : code.block_map)
    if (seen.insert(label).second) order.push_back(label);
  EssentializeLog ignored;
  auto essential = induced_subgraph(hb.graph, SymbolSet::full(hb.graph.size()), &ignored);
  return build_triple(std::move(name), essential, labels, order);
}

FactorTriple higher_block_triple(const FactorTriple& t, std::size_t n) {
  auto hb = higher_block(t.x(), n);
  std::vector<Symbol> labels;
  for (const auto& b : hb.blocks) labels.push_back(t.label(b.front()));
  return FactorTriple(t.name() + "^[" + std::to_string(n) + "]", std::move(hb.graph), t.y(), std::move(labels));
}

FactorTriple transpose_triple(const FactorTriple& t) {
  return FactorTriple(t.name() + "^T", transpose(t.x()), t.y(), t.labels());
}

bool SoficPresentation::accepts(const Word& w) const {
  int state = 0;
  for (auto b : w) {
    if (b >= transitions[static_cast<std::size_t>(state)].size()) return false;
    state = transitions[static_cast<std::size_t>(state)][b];
    if (state < 0) return false;
  }
  return true;
}

SoficPresentation image_presentation(const FactorTriple& t) {
  SoficPresentation p;
  p.alphabet = t.y();
  std::unordered_map<SymbolSet, int> index;
  auto seed = SymbolSet::full(t.x_size());
  p.states.push_back(seed);
  index.emplace(seed, 0);
  for (std::size_t head = 0; head < p.states.size(); ++head) {
    std::vector<int> row(t.y_size(), -1);
    for (Symbol b = 0; b < t.y_size(); ++b) {
      auto next = t.step_forward(p.states[head], b);
      if (next.none()) continue;
      auto [it, inserted] = index.emplace(next, static_cast<int>(p.states.size()));
      if (inserted) p.states.push_back(next);
      row[b] = it->second;
    }
    p.transitions.push_back(std::move(row));
  }
  return p;
}

namespace {

void extend_words(const FactorTriple& t, std::size_t n, Word& prefix, const SymbolSet& reach,
                  std::vector<Word>& out) {
  if (prefix.size() == n) {
    out.push_back(prefix);
    return;
  }
  for (Symbol b = 0; b < t.y_size(); ++b) {
    auto next = prefix.empty() ? t.fiber(b) : t.step_forward(reach, b);
    if (next.none()) continue;
    prefix.push_back(b);
    extend_words(t, n, prefix, next, out);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<Word> image_words(const FactorTriple& t, std::size_t n) {
  std::vector<Word> out;
  Word prefix;
  extend_words(t, n, prefix, SymbolSet(t.x_size()), out);
  return out;
}

bool in_image(const FactorTriple& t, const Word& w) {
  if (w.empty()) return true;
  for (auto b : w)
    if (b >= t.y_size()) throw Error(ErrorKind::UnknownLabel, "word uses a symbol outside A(Y)");
  return forward_sets(t, w).back().any();
}

FactorTriple identity_triple(const SymbolGraph& g, std::string name) {
  std::vector<Symbol> labels(g.size());
  for (Symbol s = 0; s < g.size(); ++s) labels[s] = s;
  return FactorTriple(std::move(name), g, g.symbols(), std::move(labels));
}

bool language_included(const SoficPresentation& small, const SoficPresentation& big) {
  std::vector<int> letter_map(small.alphabet.size(), -1);
  for (Symbol b = 0; b < small.alphabet.size(); ++b)
    if (auto f = big.alphabet.find(small.alphabet.name(b))) letter_map[b] = static_cast<int>(*f);

  std::set<std::pair<int, int>> seen{{0, 0}};
  std::deque<std::pair<int, int>> queue{{0, 0}};
  while (!queue.empty()) {
    auto [s, g] = queue.front();
    queue.pop_front();
    const auto& row = small.transitions[static_cast<std::size_t>(s)];
    for (Symbol b = 0; b < row.size(); ++b) {
      if (row[b] < 0) continue;
      if (letter_map[b] < 0) return false;
      int gn = big.transitions[static_cast<std::size_t>(g)][static_cast<std::size_t>(letter_map[b])];
      if (gn < 0) return false;
      if (seen.emplace(row[b], gn).second) queue.emplace_back(row[b], gn);
    }
  }
  return true;
}

ComposeResult compose(const FactorTriple& t1, const FactorTriple& t2) {
  for (Symbol b = 0; b < t1.y_size(); ++b)
    if (!t2.x().symbols().find(t1.y().name(b)))
      throw Error(ErrorKind::CodomainMismatch,
                  "label '" + t1.y().name(b) + "' of " + t1.name() + " is not a symbol of " + t2.name());

  auto image1 = image_presentation(t1);
  auto domain2 = image_presentation(identity_triple(t2.x()));
  if (!language_included(image1, domain2))
    throw Error(ErrorKind::LanguageNotContained,
                "B(Y1) of " + t1.name() + " is not contained in B(X2) of " + t2.name());

  std::map<std::string, std::string> labels;
  for (Symbol s = 0; s < t1.x_size(); ++s) {
    Symbol mid = *t2.x().symbols().find(t1.y().name(t1.label(s)));
    labels[t1.x().symbols().name(s)] = t2.y().name(t2.label(mid));
  }
  ComposeResult out{build_triple(t2.name() + "∘" + t1.name(), t1.x(), labels, t2.y().names()), true, {}};
  if (!language_included(domain2, image1)) {
    out.exact_image = false;
    out.warnings.push_back("B(X2) strictly contains B(Y1); the composite is taken on the image of " + t1.name());
  }
  return out;
}

}  // namespace shiftlab
