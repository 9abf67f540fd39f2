#include "mcomb/io.hpp"

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>

#include "mcomb/error.hpp"

namespace mcomb {

using nlohmann::json;

json catalog_to_json(const Catalog& catalog, std::optional<int> chords) {
    json cells = json::array();
    for (int dim : catalog.dims()) {
        for (const auto& cell : catalog.cells(dim)) {
            if (chords && cell.chords() != *chords) continue;
            cells.push_back({{"id", cell.id},
                             {"word", render(cell.word)},
                             {"dim", cell.dim},
                             {"aut_order", cell.aut.order},
                             {"aut_parity", std::string(to_string(cell.aut.parity))},
                             {"class", std::string(to_string(cell.classification))}});
        }
    }
    return {{"genus", catalog.genus()}, {"cells", std::move(cells)}};
}

Catalog catalog_from_json(const json& doc) {
    auto invalid = [](const std::string& why) { return Error(ErrorCode::CacheInvalid, why); };
    try {
        const int genus = doc.at("genus").get<int>();
        std::vector<Cell> cells;
        std::map<int, std::size_t> ordinal;
        for (const auto& entry : doc.at("cells")) {
            const GaussianWord word = parse_word(entry.at("word").get<std::string>());
            if (canonicalize(ChordDiagram(word)).word != word)
                throw invalid("word " + render(word) + " is not canonical");
            Cell cell = Cell::make(genus, ++ordinal[word.chords()], word);
            if (genus != mcomb::genus(ChordDiagram(word)))
                throw invalid("word " + render(word) + " has the wrong genus");
            if (cell.id != entry.at("id").get<std::string>() ||
                cell.dim != entry.at("dim").get<int>() ||
                cell.aut.order != entry.at("aut_order").get<int>() ||
                to_string(cell.aut.parity) != entry.at("aut_parity").get<std::string>() ||
                to_string(cell.classification) != entry.at("class").get<std::string>())
                throw invalid("fields of " + entry.at("id").get<std::string>() + " disagree with its word");
            cells.push_back(std::move(cell));
        }
        return Catalog(genus, std::move(cells));
    } catch (const json::exception& e) {
        throw invalid(e.what());
    } catch (const Error& e) {
        if (e.code() == ErrorCode::CacheInvalid) throw;
        throw invalid(e.what());
    }
}

json matrix_to_json(const BoundaryMatrix& m) {
    json entries = json::array();
    for (const auto& e : m.entries) entries.push_back({e.row, e.col, e.value});
    return {{"k", m.k}, {"rows", m.rows}, {"cols", m.cols}, {"entries", std::move(entries)}};
}

std::string matrix_to_csv(const BoundaryMatrix& m) {
    std::ostringstream out;
    out << "face";
    for (const auto& c : m.cols) out << ',' << c;
    out << '\n';
    const auto dense = m.dense();
    for (std::size_t r = 0; r < m.rows.size(); ++r) {
        out << m.rows[r];
        for (auto v : dense[r]) out << ',' << v;
        out << '\n';
    }
    return out.str();
}

std::string content_hash(std::string_view bytes) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

std::filesystem::path CatalogCache::path_for(int genus) const {
    return directory_ / ("catalog-g" + std::to_string(genus) + "-v" +
                         std::to_string(kCatalogSchemaVersion) + ".json");
}

std::optional<Catalog> CatalogCache::load(int genus) const {
    const auto path = path_for(genus);
    std::error_code ec;
    if (!std::filesystem::exists(path, ec)) return std::nullopt;

    std::ifstream in(path);
    json doc;
    try {
        in >> doc;
        if (doc.at("schema_version").get<int>() != kCatalogSchemaVersion)
            throw Error(ErrorCode::CacheInvalid, path.string() + ": schema version mismatch");
        if (doc.at("genus").get<int>() != genus)
            throw Error(ErrorCode::CacheInvalid, path.string() + ": genus mismatch");
        const json& body = doc.at("catalog");
        if (content_hash(body.dump()) != doc.at("content_hash").get<std::string>())
            throw Error(ErrorCode::CacheInvalid, path.string() + ": content hash mismatch");
        return catalog_from_json(body);
    } catch (const json::exception& e) {
        throw Error(ErrorCode::CacheInvalid, path.string() + ": " + e.what());
    }
}

void CatalogCache::store(const Catalog& catalog) const {
    std::filesystem::create_directories(directory_);
    const json body = catalog_to_json(catalog);
    const json doc = {{"schema_version", kCatalogSchemaVersion},
                      {"genus", catalog.genus()},
                      {"content_hash", content_hash(body.dump())},
                      {"catalog", body}};
    const auto path = path_for(catalog.genus());
    const auto tmp = path.string() + ".tmp";
    {
        std::ofstream out(tmp);
        out << doc.dump() << '\n';
    }
    std::filesystem::rename(tmp, path);
}

}  // namespace mcomb
