// mcomb: enumerate cells, build boundary operators and compute homology of
// the combinatorial moduli space M^comb_{g,1}.
//
// Exit codes: 0 ok, 1 invariant failure, 2 usage / parse / budget error.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "mcomb/chain_complex.hpp"
#include "mcomb/diagram.hpp"
#include "mcomb/enumeration.hpp"
#include "mcomb/error.hpp"
#include "mcomb/exact_linalg.hpp"
#include "mcomb/invariants.hpp"
#include "mcomb/io.hpp"

#ifndef MCOMB_DEFAULT_ALIASES
#define MCOMB_DEFAULT_ALIASES ""
#endif

namespace {

using nlohmann::json;
using namespace mcomb;

constexpr int kExitOk = 0;
constexpr int kExitInvariant = 1;
constexpr int kExitUsage = 2;

enum class Format { Text, Json, Csv };

struct RunConfig {
    int genus = 2;
    std::optional<int> chords;
    int dim = 0;
    Format format = Format::Text;
    std::string out;
    std::string cache_dir;
    unsigned jobs = 1;
    std::uint64_t budget = kDefaultEnumerationBudget;
    std::uint64_t seed = 1;
    std::string aliases;
    std::string word;
};

class Output {
public:
    explicit Output(const std::string& path) {
        if (!path.empty()) {
            file_.open(path);
            if (!file_) throw std::runtime_error("cannot open " + path);
        }
    }
    std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }

private:
    std::ofstream file_;
};

EnumerationOptions enumeration_options(const RunConfig& cfg) {
    EnumerationOptions opts;
    opts.jobs = cfg.jobs;
    opts.budget = cfg.budget;
    return opts;
}

// Loads the catalog from the cache when one is configured.  A bad cache
// file is rebuilt unless `strict`, in which case CacheInvalid propagates.
Catalog obtain_catalog(const RunConfig& cfg, bool strict = false) {
    if (cfg.cache_dir.empty()) return build_catalog(cfg.genus, enumeration_options(cfg));
    CatalogCache cache(cfg.cache_dir);
    try {
        if (auto cached = cache.load(cfg.genus)) return std::move(*cached);
    } catch (const Error& e) {
        if (strict || e.code() != ErrorCode::CacheInvalid) throw;
        std::cerr << "warning: " << e.what() << "; rebuilding\n";
    }
    Catalog catalog = build_catalog(cfg.genus, enumeration_options(cfg));
    cache.store(catalog);
    return catalog;
}

std::map<GaussianWord, std::string> load_aliases(const RunConfig& cfg) {
    std::map<GaussianWord, std::string> out;
    std::string path = cfg.aliases;
    if (path.empty()) path = MCOMB_DEFAULT_ALIASES;
    if (path.empty()) return out;
    std::ifstream in(path);
    if (!in) return out;
    try {
        json doc;
        in >> doc;
        for (const auto& a : doc.at("aliases")) {
            if (!a.value("valid", false)) continue;
            const auto word = parse_word(a.at("word").get<std::string>());
            out.emplace(canonicalize(ChordDiagram(word)).word, a.at("label").get<std::string>());
        }
    } catch (const std::exception& e) {
        std::cerr << "warning: ignoring alias table " << path << ": " << e.what() << '\n';
    }
    return out;
}

std::string group_name(const SymmetryInfo& aut) {
    return aut.order == 1 ? "trivial" : "Z" + std::to_string(aut.order);
}

int cmd_enumerate(const RunConfig& cfg) {
    const Catalog catalog = obtain_catalog(cfg);
    Output out(cfg.out);
    auto& os = out.stream();
    switch (cfg.format) {
        case Format::Json:
            os << catalog_to_json(catalog, cfg.chords).dump(1) << '\n';
            break;
        case Format::Csv:
            os << "id,word,dim,aut_order,aut_parity,class\n";
            for (int dim : catalog.dims())
                for (const auto& c : catalog.cells(dim)) {
                    if (cfg.chords && c.chords() != *cfg.chords) continue;
                    os << c.id << ',' << render(c.word) << ',' << c.dim << ',' << c.aut.order << ','
                       << to_string(c.aut.parity) << ',' << to_string(c.classification) << '\n';
                }
            break;
        case Format::Text:
            for (int dim : catalog.dims())
                for (const auto& c : catalog.cells(dim)) {
                    if (cfg.chords && c.chords() != *cfg.chords) continue;
                    os << c.id << '\t' << render(c.word) << "\tdim=" << c.dim << '\t'
                       << group_name(c.aut) << '\t' << to_string(c.aut.parity) << '\t'
                       << to_string(c.classification) << '\n';
                }
            break;
    }
    return kExitOk;
}

int cmd_homology(const RunConfig& cfg) {
    const Catalog catalog = obtain_catalog(cfg);
    ComplexOptions copts;
    copts.jobs = cfg.jobs;
    const ChainComplexData cc = build_chain_complex(catalog, copts);
    const D2Report d2 = verify_d2(cc);

    std::optional<BettiReport> report;
    std::string betti_error;
    try {
        report = betti(cc, cfg.jobs);
    } catch (const Error& e) {
        if (e.code() != ErrorCode::NegativeBetti) throw;
        betti_error = e.what();
    }
    const EulerReport chi = euler(catalog);

    Output out(cfg.out);
    auto& os = out.stream();
    if (cfg.format == Format::Json) {
        json doc;
        doc["genus"] = cfg.genus;
        json cells = json::object(), ranks = json::object(), bettis = json::object();
        for (int dim : catalog.dims()) cells[std::to_string(dim)] = catalog.cells(dim).size();
        if (report) {
            for (const auto& row : report->rows) {
                if (cc.matrices.count(row.dim)) ranks[std::to_string(row.dim)] = row.rank_out;
                bettis[std::to_string(row.dim)] = row.betti;
            }
        }
        doc["cells"] = cells;
        doc["ranks"] = ranks;
        doc["betti"] = bettis;
        doc["d2_zero"] = d2.ok();
        doc["euler"] = {{"plain", chi.plain_chi},
                        {"orbifold", to_string(chi.orbifold_chi)},
                        {"harer_zagier", chi.hz_reference ? json(to_string(*chi.hz_reference)) : json()}};
        if (!betti_error.empty()) doc["error"] = betti_error;
        os << doc.dump(1) << '\n';
    } else {
        os << "genus " << cfg.genus << '\n';
        for (int dim : catalog.dims()) os << "cells C_" << dim << " = " << catalog.cells(dim).size() << '\n';
        for (const auto& check : d2.checks)
            os << "d_" << check.k - 1 << " o d_" << check.k << " = 0: " << (check.zero ? "yes" : "NO")
               << '\n';
        if (report) {
            for (auto it = cc.matrices.rbegin(); it != cc.matrices.rend(); ++it)
                os << "rank d_" << it->first << " = " << report->rank_of(it->first) << '\n';
            for (auto it = report->rows.rbegin(); it != report->rows.rend(); ++it)
                os << "b_" << it->dim << " = " << it->betti << '\n';
        } else {
            os << "error: " << betti_error << '\n';
        }
        os << "euler characteristic = " << chi.plain_chi << '\n';
        os << "orbifold euler characteristic = " << to_string(chi.orbifold_chi);
        if (chi.hz_reference) os << " (Harer-Zagier " << to_string(*chi.hz_reference) << ')';
        os << '\n';
    }
    return d2.ok() && report ? kExitOk : kExitInvariant;
}

int cmd_info(RunConfig cfg) {
    const GaussianWord word = parse_word(cfg.word);
    const ChordDiagram diagram(word);
    const int g = genus(diagram);
    const auto valences = vertex_valences(diagram);
    const SymmetryInfo aut = symmetry(diagram);
    const Canonical canon = canonicalize(diagram);
    const auto aliases = load_aliases(cfg);

    std::optional<Catalog> catalog;
    const Cell* cell = nullptr;
    if (g >= 1) {
        cfg.genus = g;
        try {
            catalog = obtain_catalog(cfg);
            cell = catalog->find(canon.word);
        } catch (const Error& e) {
            if (e.code() != ErrorCode::SizeLimitExceeded) throw;
        }
    }
    const Cell local = cell ? *cell : Cell::make(g, 0, canon.word);

    json faces = json::array();
    if (word.chords() >= 2) {
        if (cell) {
            for (const auto& inc : boundary_column(*cell, *catalog)) {
                if (!inc.face) continue;
                const Cell* f = catalog->find(*inc.face);
                faces.push_back({{"chord", inc.deleted_chord},
                                 {"face", *inc.face},
                                 {"face_word", render(f->word)},
                                 {"alpha", inc.alpha},
                                 {"rule", std::string(to_string(inc.rule))}});
            }
        } else {
            const ChordDiagram canonical_diagram(canon.word);
            for (int j = 1; j <= word.chords(); ++j) {
                const DeletionResult child = delete_chord(canonical_diagram, j);
                if (!child.genus_preserved) continue;
                faces.push_back({{"chord", j}, {"face_word", render(canonicalize(child.child).word)}});
            }
        }
    }

    json doc = {{"word", render(word)},
                {"canonical", render(canon.word)},
                {"rotation", canon.rotation},
                {"chords", word.chords()},
                {"genus", g},
                {"vertices", valences.size()},
                {"valences", valences},
                {"aut_order", aut.order},
                {"aut_parity", std::string(to_string(aut.parity))},
                {"chord_perm", aut.chord_perm},
                {"class", std::string(to_string(local.classification))},
                {"cell", cell ? json(cell->id) : json()},
                {"faces", faces}};
    if (auto it = aliases.find(canon.word); it != aliases.end()) doc["alias"] = it->second;

    Output out(cfg.out);
    auto& os = out.stream();
    if (cfg.format == Format::Json) {
        os << doc.dump(1) << '\n';
        return kExitOk;
    }
    os << "word " << render(word) << '\n'
       << "canonical " << render(canon.word) << " (rotation " << canon.rotation << ")\n"
       << "genus " << g << '\n'
       << "vertices V=" << valences.size() << '\n'
       << "automorphisms " << group_name(aut) << ' ' << to_string(aut.parity) << '\n'
       << "class " << to_string(local.classification) << '\n';
    if (cell) os << "cell " << cell->id << '\n';
    if (doc.contains("alias")) os << "alias " << doc["alias"].get<std::string>() << '\n';
    for (const auto& f : faces) {
        os << "face chord=" << f["chord"] << ' ' << f["face_word"].get<std::string>();
        if (f.contains("face"))
            os << ' ' << f["face"].get<std::string>() << " alpha=" << f["alpha"] << " ("
               << f["rule"].get<std::string>() << ')';
        os << '\n';
    }
    return kExitOk;
}

int cmd_boundary(const RunConfig& cfg) {
    const Catalog catalog = obtain_catalog(cfg);
    if (catalog.cells(cfg.dim).empty() || catalog.cells(cfg.dim - 1).empty()) {
        std::cerr << "error: no boundary map from dimension " << cfg.dim << '\n';
        return kExitUsage;
    }
    ComplexOptions copts;
    copts.jobs = cfg.jobs;
    const BoundaryMatrix m = boundary_matrix(cfg.dim, catalog, copts);
    Output out(cfg.out);
    auto& os = out.stream();
    switch (cfg.format) {
        case Format::Json: os << matrix_to_json(m).dump() << '\n'; break;
        case Format::Csv: os << matrix_to_csv(m); break;
        case Format::Text: {
            const auto dense = m.dense();
            os << "d_" << m.k << ": " << m.rows.size() << " x " << m.cols.size() << '\n';
            for (std::size_t r = 0; r < dense.size(); ++r) {
                os << m.rows[r];
                for (auto v : dense[r]) os << ' ' << v;
                os << '\n';
            }
        }
    }
    return kExitOk;
}

struct CheckLog {
    json passed = json::array();
    json failures = json::array();

    void record(const std::string& name, bool ok, const std::string& detail = {}) {
        if (ok)
            passed.push_back(name);
        else
            failures.push_back({{"check", name}, {"detail", detail}});
    }
};

// Expected (order, parity) tallies per dimension.
using Census = std::map<int, std::map<std::pair<int, std::string>, int>>;

std::optional<Census> reference_census(int genus) {
    if (genus == 1) return Census{{1, {{{4, "odd"}, 1}}}, {2, {{{6, "even"}, 1}}}};
    if (genus != 2) return std::nullopt;
    return Census{
        {8, {{{1, "even"}, 3}, {{2, "even"}, 5}, {{3, "even"}, 1}}},
        {7, {{{1, "even"}, 24}, {{2, "even"}, 4}, {{4, "odd"}, 1}}},
        {6, {{{1, "even"}, 41}, {{2, "even"}, 2}, {{2, "odd"}, 9}}},
        {5, {{{1, "even"}, 37}, {{2, "odd"}, 5}, {{3, "even"}, 1}, {{4, "even"}, 1}, {{6, "odd"}, 1}}},
        {4, {{{1, "even"}, 14}, {{2, "even"}, 4}, {{2, "odd"}, 1}, {{5, "even"}, 1}, {{10, "even"}, 1}}},
        {3, {{{1, "even"}, 2}, {{2, "even"}, 1}, {{8, "odd"}, 1}}},
    };
}

int cmd_check(const RunConfig& cfg) {
    CheckLog log;
    std::optional<Catalog> catalog;
    try {
        catalog = obtain_catalog(cfg, /*strict=*/true);
        log.record("cache", true);
    } catch (const Error& e) {
        if (e.code() != ErrorCode::CacheInvalid) throw;
        log.record("cache", false, e.what());
    }

    if (catalog) {
        if (auto expected = reference_census(cfg.genus)) {
            Census actual;
            for (int dim : catalog->dims())
                for (const auto& c : catalog->cells(dim))
                    ++actual[dim][{c.aut.order, std::string(to_string(c.aut.parity))}];
            log.record("census", actual == *expected, "per-dimension symmetry tallies differ");
        }

        bool classes_ok = true;
        for (int dim : catalog->dims())
            for (const auto& c : catalog->cells(dim))
                classes_ok = classes_ok && c.dim == c.chords() - 1 &&
                             (c.classification == CellClass::Simple) == (c.aut.order == 1);
        log.record("classification", classes_ok, "class disagrees with automorphism group");

        std::string closure_detail;
        const auto dims = catalog->dims();
        for (int dim : dims) {
            if (dim == dims.back()) continue;
            std::set<std::string> hit;
            for (const auto& parent : catalog->cells(dim + 1))
                for (const auto& inc : boundary_column(parent, *catalog))
                    if (inc.face) hit.insert(*inc.face);
            for (const auto& c : catalog->cells(dim))
                if (!hit.count(c.id)) closure_detail += c.id + " ";
        }
        log.record("closure", closure_detail.empty(), "not a face of any cell: " + closure_detail);

        ComplexOptions copts;
        copts.jobs = cfg.jobs;
        const ChainComplexData cc = build_chain_complex(*catalog, copts);
        const D2Report d2 = verify_d2(cc);
        std::string d2_detail;
        for (const auto& c : d2.checks)
            if (!c.zero) d2_detail += "k=" + std::to_string(c.k) + " column " + *c.first_bad_column + " ";
        log.record("d2_zero", d2.ok(), d2_detail);

        std::string sub_detail;
        for (const auto& [k, m] : cc.matrices)
            for (const auto& e : m.entries) {
                const bool face_odd = catalog->find(m.rows[e.row])->classification == CellClass::SpecialOdd;
                const bool parent_odd = catalog->find(m.cols[e.col])->classification == CellClass::SpecialOdd;
                if (face_odd != parent_odd) sub_detail += m.cols[e.col] + "->" + m.rows[e.row] + " ";
            }
        log.record("odd_subcomplex", sub_detail.empty(), sub_detail);

        try {
            const BettiReport base = betti(cc, cfg.jobs);
            log.record("betti_nonnegative", true);
            const EulerReport chi = euler(*catalog);
            log.record("euler_consistency", chi.plain_chi == base.euler_betti,
                       "cell and Betti alternating sums differ");
            if (chi.hz_reference)
                log.record("orbifold_euler", chi.orbifold_chi == *chi.hz_reference,
                           "orbifold chi " + to_string(chi.orbifold_chi));

            std::mt19937_64 rng(cfg.seed);
            std::map<std::string, std::size_t> shifts;
            for (int dim : catalog->dims())
                for (const auto& c : catalog->cells(dim)) shifts[c.id] = rng() % c.word.size();
            ComplexOptions shifted = copts;
            shifted.representative = [&](const Cell& c) { return shifts.at(c.id); };
            const ChainComplexData alt = build_chain_complex(*catalog, shifted);
            const BettiReport alt_report = betti(alt, cfg.jobs);
            bool same = verify_d2(alt).ok();
            for (const auto& row : base.rows) same = same && alt_report.rank_of(row.dim) == row.rank_out;
            log.record("representative_independence", same,
                       "ranks changed under seed " + std::to_string(cfg.seed));
        } catch (const Error& e) {
            if (e.code() != ErrorCode::NegativeBetti) throw;
            log.record("betti_nonnegative", false, e.what());
        }

        std::string oracle_detail;
        for (int n = chord_range(cfg.genus).first; n <= std::min(7, chord_range(cfg.genus).second); ++n) {
            std::vector<GaussianWord> fast;
            for (const auto& c : catalog->cells(n - 1)) fast.push_back(c.word);
            if (fast != brute_force_oracle(n, cfg.genus)) oracle_detail += "n=" + std::to_string(n) + " ";
        }
        log.record("oracle_agreement", oracle_detail.empty(), oracle_detail);
    }

    Output out(cfg.out);
    auto& os = out.stream();
    if (cfg.format == Format::Json) {
        os << json{{"genus", cfg.genus}, {"passed", log.passed}, {"failures", log.failures}}.dump(1) << '\n';
    } else {
        for (const auto& p : log.passed) os << "PASS " << p.get<std::string>() << '\n';
        for (const auto& f : log.failures)
            os << "FAIL " << f["check"].get<std::string>() << ": " << f["detail"].get<std::string>() << '\n';
        if (!log.failures.empty()) std::cerr << log.failures.dump() << '\n';
    }
    return log.failures.empty() ? kExitOk : kExitInvariant;
}

int exit_code_for(const Error& e) {
    switch (e.code()) {
        case ErrorCode::EmptyInput:
        case ErrorCode::OddLength:
        case ErrorCode::NonDoubleOccurrence:
        case ErrorCode::InvalidToken:
        case ErrorCode::ChordOutOfRange:
        case ErrorCode::SizeLimitExceeded:
            return kExitUsage;
        default:
            return kExitInvariant;
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Cells, boundary operators and rational homology of M^comb_{g,1}"};
    app.require_subcommand(1);

    RunConfig cfg;
    if (const char* env = std::getenv("MCOMB_CACHE_DIR")) cfg.cache_dir = env;
    if (const char* env = std::getenv("MCOMB_ALIASES")) cfg.aliases = env;

    const std::map<std::string, Format> formats{{"text", Format::Text}, {"json", Format::Json}, {"csv", Format::Csv}};
    std::string format_name = "text";
    app.add_option("--format", format_name, "Output format: text, json or csv")
        ->check(CLI::IsMember({"text", "json", "csv"}));
    app.add_option("--out", cfg.out, "Write output to this file instead of stdout");
    app.add_option("--cache-dir", cfg.cache_dir, "Catalog cache directory (env MCOMB_CACHE_DIR)");
    app.add_option("--jobs", cfg.jobs, "Worker threads")->check(CLI::PositiveNumber);
    app.add_option("--budget-override", cfg.budget, "Enumeration budget in matchings");
    app.add_option("--seed", cfg.seed, "Seed for randomized checks");
    app.add_option("--aliases", cfg.aliases, "Alias table of literature labels (env MCOMB_ALIASES)");

    auto genus_opt = [&](CLI::App* sub) {
        sub->add_option("--genus", cfg.genus, "Genus g >= 1")->check(CLI::PositiveNumber);
    };

    auto* enumerate = app.add_subcommand("enumerate", "List cells of the catalog");
    genus_opt(enumerate);
    enumerate->add_option("--chords", cfg.chords, "Only cells with this many chords");

    auto* homology = app.add_subcommand("homology", "Ranks, Betti numbers and Euler characteristics");
    genus_opt(homology);

    auto* info = app.add_subcommand("info", "Report on one Gaussian word");
    info->add_option("word", cfg.word, "Gaussian word, e.g. 12341234 or 1.2.1.2")->required();

    auto* check = app.add_subcommand("check", "Run the invariant suite");
    genus_opt(check);

    auto* boundary = app.add_subcommand("boundary", "Emit one boundary matrix");
    genus_opt(boundary);
    boundary->add_option("--dim", cfg.dim, "Source dimension k of d_k")->required();

    try {
        app.parse(argc, argv);
        cfg.format = formats.at(format_name);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (*enumerate) return cmd_enumerate(cfg);
        if (*homology) return cmd_homology(cfg);
        if (*info) return cmd_info(cfg);
        if (*check) return cmd_check(cfg);
        if (*boundary) return cmd_boundary(cfg);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_code_for(e);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitInvariant;
    }
    return kExitUsage;
}
