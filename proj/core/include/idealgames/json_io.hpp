// json_io.hpp
// Canonical JSON text for every persisted artifact. Loaders validate shape
// and report failures as input_error carrying a JSON-pointer path; parse
// failures carry the byte position. Stores emit sorted keys with two-space
// indentation and a trailing newline, so loading a canonical document and
// storing it back is byte-identical.
#pragma once

#include <string>

#include "idealgames/bmgame.hpp"
#include "idealgames/cantor.hpp"
#include "idealgames/decomp.hpp"
#include "idealgames/game.hpp"
#include "idealgames/ideal.hpp"
#include "idealgames/pathrel.hpp"

namespace ig {

BlockSystem load_block_system(const std::string& text);
std::string store_block_system(const BlockSystem& sys);

TrieChain load_trie_chain(const std::string& text);
std::string store_trie_chain(const TrieChain& chain);

IdealInstance load_instance(const std::string& text);
std::string store_instance(const IdealInstance& inst);

FamilySpec load_family(const std::string& text);
std::string store_family(const FamilySpec& fam);

Decomposition load_decomposition(const std::string& text);
std::string store_decomposition(const Decomposition& dec);

Coloring load_coloring(const std::string& text);
std::string store_coloring(const Coloring& col);

FinitePoset load_poset(const std::string& text);
std::string store_poset(const FinitePoset& poset);

FiniteSpace load_space(const std::string& text);
std::string store_space(const FiniteSpace& space);

std::string store_subset_verdict(const SubsetVerdict& v);

// one header line, then one line per inning
std::string store_transcript(const Transcript& tr);

// whole-file helpers; read failures become input_error
std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& text);

}  // namespace ig
