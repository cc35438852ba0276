#pragma once

#include <cstddef>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "orderdim/core.hpp"
#include "orderdim/diagonal.hpp"
#include "orderdim/dimension.hpp"
#include "orderdim/generators.hpp"
#include "orderdim/separators.hpp"

namespace orderdim {

inline constexpr int kFormatVersion = 1;

struct LevelData {
  std::vector<std::size_t> level;  // per element
  std::vector<LevelTag> meta;      // per level

  bool operator==(const LevelData&) const = default;
};

struct NamedChain {
  std::string name;
  ElementSet elements;

  bool operator==(const NamedChain&) const = default;
};

struct PosetDocument {
  Poset poset;
  std::vector<NamedChain> chains;
  std::optional<std::size_t> marked_point;
  std::optional<LevelData> levels;

  bool operator==(const PosetDocument&) const = default;

  /// Throws UnknownLabel.
  const NamedChain& chain(std::string_view name) const;
  ChainSet all_chains() const;
};

struct RealizerDocument {
  PosetDocument poset;
  Realizer realizer;

  bool operator==(const RealizerDocument&) const = default;
};

struct SeparatorDocument {
  /// Per instance, the element names by index.
  std::vector<std::vector<std::string>> names;
  std::vector<SeparatorInstance> instances;

  bool operator==(const SeparatorDocument&) const = default;
};

struct DiagonalConfig {
  std::size_t k = 1;
  std::size_t stages = 0;
  std::vector<std::size_t> assignment;
  std::vector<ProgramSpec> programs;
  /// Programs to be replaced via materialize_copies.
  std::vector<bool> copies;

  bool operator==(const DiagonalConfig&) const = default;
};

/// Element names default to their indices.
SeparatorDocument separator_document(std::vector<SeparatorInstance> instances);

PosetDocument poset_document(Poset P);
PosetDocument leveled_document(const LeveledPoset& lp);
/// Rebuilds the level view of a document produced by leveled_document.
/// Throws ParseError if the document has no levels.
LeveledPoset leveled_view(const PosetDocument& doc);

// Text forms. Parsers throw ParseError for malformed input and the usual
// library errors for invalid content.
std::string dump_poset(const PosetDocument& doc);
std::string dump_realizer(const RealizerDocument& doc);
std::string dump_separators(const SeparatorDocument& doc);
std::string dump_diagonal_config(const DiagonalConfig& cfg);

PosetDocument parse_poset(std::string_view text);
/// `base` resolves a relative "poset_file" reference.
RealizerDocument parse_realizer(std::string_view text, const std::filesystem::path& base = {});
SeparatorDocument parse_separators(std::string_view text);
DiagonalConfig parse_diagonal_config(std::string_view text);

std::string read_text(const std::filesystem::path& path);
void write_text(const std::filesystem::path& path, std::string_view text);

PosetDocument load_poset(const std::filesystem::path& path);
RealizerDocument load_realizer(const std::filesystem::path& path);
SeparatorDocument load_separators(const std::filesystem::path& path);
DiagonalConfig load_diagonal_config(const std::filesystem::path& path);

/// Re-indexes a realizer onto `target`, matching elements by label. Throws
/// SizeMismatch or UnknownLabel when the element sets differ.
Realizer translate_realizer(const Poset& source, const Realizer& R, const Poset& target);

}  // namespace orderdim
