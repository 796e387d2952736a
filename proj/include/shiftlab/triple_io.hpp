#pragma once

// JSON triple files.
//
//   {
//     "name": "t2",
//     "symbols": ["a", "b", ...],
//     "edges": [["a", "a"], ["a", "b"], ...],
//     "labels": {"a": "0", ...},
//     "image_order": ["0", "1"],            optional
//     "code": {                              optional, replaces "labels"
//       "memory": 0, "anticipation": 1,
//       "blocks": [{"block": ["0", "1"], "label": "1"}, ...]
//     },
//     "metadata": {...}                      optional, carried through
//   }
//
// Edge shifts are written with their edges as symbols.

#include <filesystem>
#include <string>

#include <json.hpp>

#include "shiftlab/codes.hpp"

namespace shiftlab {

struct TripleFile {
  FactorTriple triple;
  EssentializeLog log;
  nlohmann::json source;  // the parsed document
};

TripleFile parse_triple(const nlohmann::json& doc);
TripleFile parse_triple_text(const std::string& text);
TripleFile parse_triple_file(const std::filesystem::path& path);

// One-block form of a triple; canonical output is `dump_canonical`.
nlohmann::json serialize_triple(const FactorTriple& t);

// Sorted keys, two-space indent, UTF-8, trailing newline.
std::string dump_canonical(const nlohmann::json& j);

std::string read_file(const std::filesystem::path& path);

std::string sha256_hex(const std::string& bytes);

}  // namespace shiftlab
