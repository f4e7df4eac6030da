#pragma once

#include <filesystem>
#include <string>

#include "picod/collection.hpp"
#include "picod/coloring.hpp"
#include "picod/encoder.hpp"
#include "picod/instance.hpp"
#include "picod/localcf.hpp"
#include "picod/oracle.hpp"

namespace picod::io {

// Canonical JSON formats. Parse failures raise std::runtime_error with the
// offending field (and edge index, where one applies).
//
//   instance    {"m": int, "edges": [[int...], ...]}
//   coloring    {"k": int, "L": int, "assign": [[int...], ...]}
//   collection  {"k": int, "colorings": [<coloring>, ...]}
//   selection   {"essential": [[int...], ...]}
//   matrix      {"q": int, "k": int, "rows": int, "entries": [[int...], ...]}
//   report      {"l_star", "chi", "alpha", "delta", "lambda", "chain_ok"}

std::string to_json(const PicodInstance& inst);
PicodInstance instance_from_json(const std::string& text);

std::string to_json(const KFoldColoring& c);
KFoldColoring coloring_from_json(const std::string& text);

std::string to_json(const ColoringCollection& col);
ColoringCollection collection_from_json(const std::string& text);

std::string to_json(const EssentialSelection& sel);
EssentialSelection selection_from_json(const std::string& text);

std::string to_json(const FieldMatrix& g);
FieldMatrix matrix_from_json(const std::string& text);

/// Budget-exceeded searches serialize as null; chain_ok is null when the
/// report is partial.
std::string to_json(const ChainReport& report);

std::string read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, const std::string& text);

PicodInstance load_instance(const std::filesystem::path& path);
void save_instance(const PicodInstance& inst, const std::filesystem::path& path);
FieldMatrix load_matrix(const std::filesystem::path& path);
void save_matrix(const FieldMatrix& g, const std::filesystem::path& path);

}  // namespace picod::io
