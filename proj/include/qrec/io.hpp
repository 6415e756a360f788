#pragma once

// File formats and text output. Algebra and instance descriptions are UTF-8
// JSON documents; matrices are row-major integer arrays reduced mod p.
// Atoms are referenced everywhere by their name strings.

#include <filesystem>
#include <memory>
#include <string>

#include <nlohmann/json_fwd.hpp>

#include "qrec/glue.hpp"
#include "qrec/recollement.hpp"
#include "qrec/report.hpp"
#include "qrec/torsion.hpp"

namespace qrec {

using json = nlohmann::json;

/// Loads a bound quiver algebra with its atom list. A prime override of 0
/// keeps the file's field.
CategoryPtr load_algebra_file(const std::filesystem::path& path,
                              unsigned prime_override = 0);

/// Loads a recollement instance descriptor; the base algebra path is
/// resolved relative to the descriptor's directory.
std::shared_ptr<RecollementInstance>
load_instance_file(const std::filesystem::path& path, unsigned prime_override = 0);

CategoryPtr parse_algebra(const json& doc, unsigned prime_override = 0);

/// Parses {"dims": [...], "maps": {"arrow": [[...]]}} over a given algebra.
Representation parse_representation(const AlgebraPtr& algebra, const json& doc);

/// Parses {"x": ["name", ...], "y": [...]} against a category's atom list.
TorsionPair parse_pair(const ModuleCategory& cat, const json& doc);
TtfTriple parse_triple(const ModuleCategory& cat, const json& doc);

json pair_to_json(const ModuleCategory& cat, const TorsionPair& tp);
json triple_to_json(const ModuleCategory& cat, const TtfTriple& t);
json report_to_json(const Report& r);

std::string format_report(const Report& r);
std::string format_pair(const ModuleCategory& cat, const TorsionPair& tp);

/// Resolves an input name: an existing path is used as is; otherwise the
/// data directory is searched for `name` and `name.json`.
std::filesystem::path resolve_input(const std::string& name,
                                    const std::filesystem::path& data_dir);

/// Data directory: QREC_DATA_DIR if set, otherwise the build-time default.
std::filesystem::path default_data_dir();

} // namespace qrec
