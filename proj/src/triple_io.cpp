#include "shiftlab/triple_io.hpp"

#include <openssl/evp.h>

#include <fstream>
#include <set>
#include <sstream>

#include "shiftlab/error.hpp"

namespace shiftlab {

namespace {

using nlohmann::json;

[[noreturn]] void parse_fail(const std::string& field, const std::string& what) {
  throw Error(ErrorKind::ParseError, field + ": " + what);
}

const json& require(const json& doc, const char* key) {
  auto it = doc.find(key);
  if (it == doc.end()) parse_fail(key, "missing");
  return *it;
}

std::string as_string(const json& j, const std::string& field) {
  if (!j.is_string()) parse_fail(field, "expected a string");
  return j.get<std::string>();
}

std::size_t as_count(const json& j, const std::string& field) {
  if (!j.is_number_unsigned() && !(j.is_number_integer() && j.get<long long>() >= 0))
    parse_fail(field, "expected a nonnegative integer");
  return j.get<std::size_t>();
}

}  // namespace

TripleFile parse_triple(const json& doc) {
  if (!doc.is_object()) parse_fail("document", "expected a JSON object");
  TripleFile out;
  out.source = doc;
  auto name = as_string(require(doc, "name"), "name");

  const auto& syms = require(doc, "symbols");
  if (!syms.is_array() || syms.empty()) parse_fail("symbols", "expected a nonempty array");
  std::vector<std::string> symbols;
  std::set<std::string> declared;
  for (std::size_t i = 0; i < syms.size(); ++i) {
    auto s = as_string(syms[i], "symbols[" + std::to_string(i) + "]");
    if (!declared.insert(s).second) parse_fail("symbols[" + std::to_string(i) + "]", "duplicate symbol '" + s + "'");
    symbols.push_back(std::move(s));
  }

  const auto& edge_list = require(doc, "edges");
  if (!edge_list.is_array()) parse_fail("edges", "expected an array");
  std::vector<std::pair<std::string, std::string>> edges;
  for (std::size_t i = 0; i < edge_list.size(); ++i) {
    auto field = "edges[" + std::to_string(i) + "]";
    const auto& e = edge_list[i];
    if (!e.is_array() || e.size() != 2) parse_fail(field, "expected a [from, to] pair");
    auto from = as_string(e[0], field + "[0]");
    auto to = as_string(e[1], field + "[1]");
    if (!declared.contains(from)) parse_fail(field + "[0]", "unknown symbol '" + from + "'");
    if (!declared.contains(to)) parse_fail(field + "[1]", "unknown symbol '" + to + "'");
    edges.emplace_back(std::move(from), std::move(to));
  }

  std::vector<std::string> order;
  if (auto it = doc.find("image_order"); it != doc.end()) {
    if (!it->is_array()) parse_fail("image_order", "expected an array");
    for (std::size_t i = 0; i < it->size(); ++i)
      order.push_back(as_string((*it)[i], "image_order[" + std::to_string(i) + "]"));
  }

  SymbolGraph g;
  try {
    g = build_graph(symbols, edges, &out.log);
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::EmptyAfterEssentialization)
      throw Error(ErrorKind::ValidationError, "graph has no bi-infinite path (empty after essentialization)");
    throw;
  }

  if (auto it = doc.find("code"); it != doc.end()) {
    if (doc.contains("labels")) parse_fail("code", "give either 'labels' or 'code', not both");
    const auto& code = *it;
    if (!code.is_object()) parse_fail("code", "expected an object");
    SlidingBlockCode c;
    c.memory = as_count(require(code, "memory"), "code.memory");
    c.anticipation = as_count(require(code, "anticipation"), "code.anticipation");
    const auto& blocks = require(code, "blocks");
    if (!blocks.is_array()) parse_fail("code.blocks", "expected an array");
    // the block map is stated over the declared symbols, before essentialization
    Alphabet base(symbols);
    for (std::size_t i = 0; i < blocks.size(); ++i) {
      auto field = "code.blocks[" + std::to_string(i) + "]";
      const auto& b = blocks[i];
      if (!b.is_object()) parse_fail(field, "expected an object");
      const auto& word = require(b, "block");
      if (!word.is_array() || word.size() != c.memory + c.anticipation + 1)
        parse_fail(field + ".block", "expected " + std::to_string(c.memory + c.anticipation + 1) + " symbols");
      Word w;
      for (std::size_t k = 0; k < word.size(); ++k) {
        auto s = as_string(word[k], field + ".block[" + std::to_string(k) + "]");
        auto found = g.symbols().find(s);
        if (!base.find(s)) parse_fail(field + ".block", "unknown symbol '" + s + "'");
        if (!found) {
          w.clear();
          break;
        }
        w.push_back(*found);
      }
      auto label = as_string(require(b, "label"), field + ".label");
      if (!w.empty()) c.block_map[w] = label;
    }
    out.triple = recode_one_block(name, g, c);
    return out;
  }

  const auto& labels = require(doc, "labels");
  if (!labels.is_object()) parse_fail("labels", "expected an object");
  std::map<std::string, std::string> label_map;
  for (auto it = labels.begin(); it != labels.end(); ++it) {
    if (!declared.contains(it.key())) parse_fail("labels", "unknown symbol '" + it.key() + "'");
    label_map[it.key()] = as_string(it.value(), "labels." + it.key());
  }
  out.triple = build_triple(name, g, label_map, order);
  return out;
}

TripleFile parse_triple_text(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorKind::ParseError, std::string("malformed JSON: ") + e.what());
  }
  return parse_triple(doc);
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::IoError, "cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

TripleFile parse_triple_file(const std::filesystem::path& path) {
  auto text = read_file(path);
  try {
    return parse_triple_text(text);
  } catch (const Error& e) {
    throw Error(e.kind(), path.filename().string() + ": " + e.what());
  }
}

json serialize_triple(const FactorTriple& t) {
  json doc;
  doc["name"] = t.name();
  doc["symbols"] = t.x().symbols().names();
  json edges = json::array();
  for (auto [a, b] : t.x().edges()) edges.push_back({t.x().symbols().name(a), t.x().symbols().name(b)});
  doc["edges"] = std::move(edges);
  json labels = json::object();
  for (Symbol s = 0; s < t.x_size(); ++s) labels[t.x().symbols().name(s)] = t.y().name(t.label(s));
  doc["labels"] = std::move(labels);
  doc["image_order"] = t.y().names();
  return doc;
}

std::string dump_canonical(const json& j) { return j.dump(2, ' ', false) + "\n"; }

std::string sha256_hex(const std::string& bytes) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  EVP_Digest(bytes.data(), bytes.size(), digest, &len, EVP_sha256(), nullptr);
  static const char* hex = "0123456789abcdef";
  std::string out;
  for (unsigned int i = 0; i < len; ++i) {
    out.push_back(hex[digest[i] >> 4]);
    out.push_back(hex[digest[i] & 15]);
  }
  return out;
}

}  // namespace shiftlab
