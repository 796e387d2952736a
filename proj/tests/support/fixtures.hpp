#pragma once

#include <string>
#include <vector>

#include "../oracle/path_oracle.hpp"
#include "shiftlab/core.hpp"

namespace fixtures {

std::string corpus_path(const std::string& file);

// Loads corpus/<name>.json.
shiftlab::FactorTriple load(const std::string& name);

const std::vector<std::string>& bundled();  // t1 .. t5

shiftlab::Word word(const shiftlab::FactorTriple& t, const std::string& text);
shiftlab::SymbolSet xset(const shiftlab::FactorTriple& t, const std::vector<std::string>& names);

// Plain adjacency / label copy of t for the brute-force oracle.
oracle::Code to_oracle(const shiftlab::FactorTriple& t);
std::vector<int> to_ints(const shiftlab::Word& w);

}  // namespace fixtures
