#include "arithgraph/manifest.hpp"

#include <fstream>
#include <sstream>

#include "arithgraph/catalog.hpp"
#include "arithgraph/errors.hpp"
#include "arithgraph/spec_text.hpp"

namespace arithgraph {

namespace {

std::string_view trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  return s.substr(b, s.find_last_not_of(" \t\r") - b + 1);
}

}  // namespace

std::vector<ManifestEntry> parse_manifest(std::string_view text, std::string_view source) {
  std::vector<ManifestEntry> out;
  std::istringstream in{std::string(text)};
  std::string raw;
  for (std::size_t lineno = 1; std::getline(in, raw); ++lineno) {
    const std::string_view line = trim(raw);
    if (line.empty() || line.front() == '#') continue;
    const std::string where = std::string(source) + ":" + std::to_string(lineno);
    const auto sp = line.find_first_of(" \t");
    if (sp == std::string_view::npos) throw Error(ErrorKind::ParseError, where + ": expected NAME SPEC");
    ManifestEntry e{std::string(line.substr(0, sp)), std::string(trim(line.substr(sp))), lineno};
    try {
      parse_group_spec(e.spec);
    } catch (const Error& err) {
      throw Error(ErrorKind::ParseError, where + ": " + err.what());
    }
    out.push_back(std::move(e));
  }
  return out;
}

Corpus build_corpus(const std::vector<ManifestEntry>& entries, std::size_t cap) {
  Corpus c;
  for (const auto& e : entries) {
    FiniteGroup g = build(parse_group_spec(e.spec), cap);
    c.add(e.name, std::move(g), e.spec);
  }
  return c;
}

Corpus load_corpus(const std::filesystem::path& manifest, std::size_t cap) {
  std::filesystem::path p = manifest;
  if (!std::filesystem::exists(p) && p.is_relative() && std::filesystem::exists(data_dir() / p)) p = data_dir() / p;
  std::ifstream in(p);
  if (!in) throw Error(ErrorKind::Io, "cannot read manifest " + manifest.string());
  std::stringstream buf;
  buf << in.rdbuf();
  return build_corpus(parse_manifest(buf.str(), manifest.string()), cap);
}

std::filesystem::path bundled_manifest() { return data_dir() / "corpus.manifest"; }

}  // namespace arithgraph
