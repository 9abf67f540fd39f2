#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

#include "mcomb/chain_complex.hpp"
#include "mcomb/enumeration.hpp"

namespace mcomb {

inline constexpr int kCatalogSchemaVersion = 1;

/// {"genus":g,"cells":[{"id","word","dim","aut_order","aut_parity","class"},...]}
/// restricted to cells with `chords` chords when given.
nlohmann::json catalog_to_json(const Catalog& catalog, std::optional<int> chords = std::nullopt);

/// Rebuilds a catalog from its JSON form, recomputing every derived field
/// from the word.  Throws CacheInvalid on any disagreement.
Catalog catalog_from_json(const nlohmann::json& doc);

/// {"k":k,"rows":[...],"cols":[...],"entries":[[r,c,v],...]}
nlohmann::json matrix_to_json(const BoundaryMatrix& m);

/// Dense CSV; header row holds the column ids, first column the row ids.
std::string matrix_to_csv(const BoundaryMatrix& m);

/// FNV-1a 64-bit digest, 16 lowercase hex digits.
std::string content_hash(std::string_view bytes);

/// One file per (genus, schema version) holding the catalog plus a digest.
class CatalogCache {
public:
    explicit CatalogCache(std::filesystem::path directory) : directory_(std::move(directory)) {}

    std::filesystem::path path_for(int genus) const;

    /// nullopt when no file exists.  Throws CacheInvalid for unreadable
    /// files, schema or digest mismatches and inconsistent contents.
    std::optional<Catalog> load(int genus) const;

    void store(const Catalog& catalog) const;

private:
    std::filesystem::path directory_;
};

}  // namespace mcomb
