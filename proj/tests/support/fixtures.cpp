#include "fixtures.hpp"

#include "shiftlab/triple_io.hpp"

#ifndef SHIFTLAB_CORPUS_DIR
#define SHIFTLAB_CORPUS_DIR "corpus"
#endif

namespace fixtures {

std::string corpus_path(const std::string& file) { return std::string(SHIFTLAB_CORPUS_DIR) + "/" + file; }

shiftlab::FactorTriple load(const std::string& name) {
  return shiftlab::parse_triple_file(corpus_path(name + ".json")).triple;
}

const std::vector<std::string>& bundled() {
  static const std::vector<std::string> names{"t1", "t2", "t3", "t4", "t5"};
  return names;
}

shiftlab::Word word(const shiftlab::FactorTriple& t, const std::string& text) { return t.y().parse_word(text); }

shiftlab::SymbolSet xset(const shiftlab::FactorTriple& t, const std::vector<std::string>& names) {
  shiftlab::SymbolSet s(t.x_size());
  for (const auto& n : names) s.set(t.x().symbols().at(n));
  return s;
}

oracle::Code to_oracle(const shiftlab::FactorTriple& t) {
  oracle::Code c;
  const auto n = t.x_size();
  c.edge.assign(n, std::vector<bool>(n, false));
  for (shiftlab::Symbol i = 0; i < n; ++i) {
    c.label.push_back(static_cast<int>(t.label(i)));
    for (shiftlab::Symbol j = 0; j < n; ++j) c.edge[i][j] = t.x().has_edge(i, j);
  }
  c.image_size = static_cast<int>(t.y_size());
  return c;
}

std::vector<int> to_ints(const shiftlab::Word& w) { return {w.begin(), w.end()}; }

}  // namespace fixtures
