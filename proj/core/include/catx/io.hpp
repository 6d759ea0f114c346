#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "catx/charcalc.hpp"
#include "catx/modules.hpp"

namespace catx {

using Json = nlohmann::ordered_json;

/// Weyl elements travel as reduced words of 1-based simple indices.
Json weyl_to_json(const RootSystem& rs, const WeylElement& w);
/// Any word is accepted; indices must lie in 1..rank.
WeylElement weyl_from_json(const RootSystem& rs, const Json& word);

Json index_set_to_json(IndexSet s);
/// Sorted, duplicate-free array of indices in 1..n.
IndexSet index_set_from_json(const Json& j, int n);

Json weight_to_json(const RootSystem& rs, const Weight& w);

/// A character file: the Cartan type it lives over plus the multiset.
struct CharacterFile {
  CartanType type;
  ModuleCharacter character;
  /// Some coset_rep was not the minimal representative and was replaced.
  bool canonicalized = false;
};

/// {"type", "itheta", "label", "weights": [{"coset_rep", "v", "mult"}, ...]}.
/// Characters mixing several formal characters carry "label"/"itheta" on
/// every weight as well.
Json character_to_json(const WeylGroup& W, const ModuleCharacter& c);
/// Strict mode rejects a non-minimal coset_rep instead of canonicalizing it.
CharacterFile character_from_json(const Json& j, bool strict);

std::string write_character(const WeylGroup& W, const ModuleCharacter& c);
/// Throws InputError on malformed JSON as well as on invalid content.
CharacterFile read_character(std::string_view text, bool strict);

/// {"n", "dims": {"[1]": 2, ...}, "maps": {"[]->[1]": [["1/2", "0"]], ...}}.
/// Only covering maps are written; longer ones follow by composition.
Json module_to_json(const AlgebraModule& M);
/// Matrix entries may be integers or "p/q" strings.
AlgebraModule module_from_json(const Json& j);

/// Comma-separated table with a header row; fields are quoted when needed.
void write_csv(std::ostream& out, const std::vector<std::string>& header,
               const std::vector<std::vector<std::string>>& rows);

/// Cartan matrix of a root system, rows and columns labelled a1..ar.
void cartan_csv(std::ostream& out, const RootSystem& rs);
/// Columns: label, itheta, coset_rep, v, mult (words space-separated).
void multiplicity_csv(std::ostream& out, const WeylGroup& W, const ModuleCharacter& c);

std::string word_string(const std::vector<int>& word);

}  // namespace catx
