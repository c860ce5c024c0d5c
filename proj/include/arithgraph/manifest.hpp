#pragma once

#include <cstddef>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "arithgraph/classgraph.hpp"
#include "arithgraph/group.hpp"

namespace arithgraph {

struct ManifestEntry {
  std::string name;
  std::string spec;
  std::size_t line = 0;
};

/// One "NAME SPEC" pair per line; blank lines and lines starting with '#'
/// are skipped. Specs are checked against the grammar. Throws
/// Error(ParseError) naming source:line.
std::vector<ManifestEntry> parse_manifest(std::string_view text, std::string_view source = "<manifest>");

/// Reads and builds every entry, in file order. Relative paths are tried as
/// given, then under data_dir().
Corpus load_corpus(const std::filesystem::path& manifest, std::size_t cap = element_cap());

/// Builds a corpus from entries.
Corpus build_corpus(const std::vector<ManifestEntry>& entries, std::size_t cap = element_cap());

/// data_dir() / "corpus.manifest".
std::filesystem::path bundled_manifest();

}  // namespace arithgraph
