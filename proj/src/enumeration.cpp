#include "mcomb/enumeration.hpp"

#include <algorithm>
#include <limits>

#include "mcomb/error.hpp"
#include "parallel.hpp"

namespace mcomb {

std::string_view to_string(CellClass c) {
    switch (c) {
        case CellClass::Simple: return "simple";
        case CellClass::SpecialEven: return "special_even";
        case CellClass::SpecialOdd: return "special_odd";
    }
    return "unknown";
}

std::optional<CellClass> cell_class_from_string(std::string_view s) {
    if (s == "simple") return CellClass::Simple;
    if (s == "special_even") return CellClass::SpecialEven;
    if (s == "special_odd") return CellClass::SpecialOdd;
    return std::nullopt;
}

Cell Cell::make(int genus, std::size_t ordinal, GaussianWord canonical_word) {
    Cell cell;
    const int n = canonical_word.chords();
    cell.id = "g" + std::to_string(genus) + "-n" + std::to_string(n) + "-" + std::to_string(ordinal);
    cell.dim = n - 1;
    cell.aut = symmetry(ChordDiagram(canonical_word));
    if (cell.aut.order == 1)
        cell.classification = CellClass::Simple;
    else
        cell.classification =
            cell.aut.parity == Parity::Even ? CellClass::SpecialEven : CellClass::SpecialOdd;
    cell.word = std::move(canonical_word);
    return cell;
}

Catalog::Catalog(int genus, std::vector<Cell> cells) : genus_(genus), count_(cells.size()) {
    for (auto& cell : cells) by_dim_[cell.dim].push_back(std::move(cell));
    for (auto& [dim, list] : by_dim_) {
        for (std::size_t i = 0; i < list.size(); ++i) {
            if (!word_index_.emplace(list[i].word, std::pair{dim, i}).second)
                throw Error(ErrorCode::Internal, "duplicate word " + render(list[i].word));
            if (!id_index_.emplace(list[i].id, std::pair{dim, i}).second)
                throw Error(ErrorCode::Internal, "duplicate id " + list[i].id);
        }
    }
}

std::vector<int> Catalog::dims() const {
    std::vector<int> out;
    for (const auto& [dim, list] : by_dim_) out.push_back(dim);
    return out;
}

std::span<const Cell> Catalog::cells(int dim) const {
    auto it = by_dim_.find(dim);
    if (it == by_dim_.end()) return {};
    return it->second;
}

const Cell* Catalog::find(const GaussianWord& canonical_word) const {
    auto it = word_index_.find(canonical_word);
    if (it == word_index_.end()) return nullptr;
    return &by_dim_.at(it->second.first)[it->second.second];
}

const Cell* Catalog::find(std::string_view id) const {
    auto it = id_index_.find(std::string(id));
    if (it == id_index_.end()) return nullptr;
    return &by_dim_.at(it->second.first)[it->second.second];
}

std::uint64_t matching_count(int chords) {
    std::uint64_t count = 1;
    for (std::uint64_t k = 1; k < 2 * static_cast<std::uint64_t>(std::max(chords, 0)); k += 2) {
        if (count > std::numeric_limits<std::uint64_t>::max() / k)
            return std::numeric_limits<std::uint64_t>::max();
        count *= k;
    }
    return count;
}

namespace {

// Backtracking over matchings, always pairing the lowest free position.
// Corner cycles (vertices) are closed incrementally so that genus and
// valence violations prune whole subtrees, and partially known rotations
// that already read smaller than the current prefix are cut as well.
class Search {
public:
    Search(int chords, int genus, int min_valence)
        : size_(2 * chords),
          target_vertices_(chords + 1 - 2 * genus),
          min_valence_(min_valence),
          mates_(static_cast<std::size_t>(size_), -1),
          own_(static_cast<std::size_t>(size_)),
          rot_(static_cast<std::size_t>(size_)) {}

    std::vector<GaussianWord> run_with_first_mate(int first_mate) {
        results_.clear();
        if (target_vertices_ < 1) return {};
        assign(0, first_mate);
        return std::move(results_);
    }

private:
    void assign(int a, int b) {
        mates_[static_cast<std::size_t>(a)] = b;
        mates_[static_cast<std::size_t>(b)] = a;
        const int closed_before = closed_;
        const int corners_before = corners_closed_;
        if (close_cycles(a, b) && feasible() && rotation_prefix_ok()) descend();
        closed_ = closed_before;
        corners_closed_ = corners_before;
        mates_[static_cast<std::size_t>(a)] = -1;
        mates_[static_cast<std::size_t>(b)] = -1;
    }

    void descend() {
        int free = 0;
        while (free < size_ && mates_[static_cast<std::size_t>(free)] >= 0) ++free;
        if (free == size_) {
            accept();
            return;
        }
        for (int b = free + 1; b < size_; ++b)
            if (mates_[static_cast<std::size_t>(b)] < 0) assign(free, b);
    }

    int corner_next(int c) const {
        const int m = mates_[static_cast<std::size_t>(c)];
        return m < 0 ? -1 : (m + 1) % size_;
    }

    // Length of the corner cycle through `start`, or 0 while it is still open.
    int cycle_length(int start, int other, bool& contains_other) const {
        int length = 0;
        int c = start;
        do {
            c = corner_next(c);
            if (c < 0) return 0;
            contains_other = contains_other || c == other;
            ++length;
        } while (c != start);
        return length;
    }

    // Only cycles through the corners of the new pair can have just closed.
    bool close_cycles(int a, int b) {
        bool b_seen = false;
        bool unused = false;
        if (!count_cycle(cycle_length(a, b, b_seen))) return false;
        return b_seen || count_cycle(cycle_length(b, a, unused));
    }

    bool count_cycle(int length) {
        if (length == 0) return true;
        if (length < min_valence_) return false;
        ++closed_;
        corners_closed_ += length;
        return true;
    }

    bool feasible() const {
        const int open_vertices = target_vertices_ - closed_;
        if (open_vertices < 0) return false;
        const int open_corners = size_ - corners_closed_;
        if (open_vertices == 0) return open_corners == 0;
        return open_vertices * min_valence_ <= open_corners;
    }

    bool rotation_prefix_ok() {
        int known = 0;
        while (known < size_ && mates_[static_cast<std::size_t>(known)] >= 0) ++known;
        fill_labels(0, known, own_);
        for (int s = 1; s < size_; ++s) {
            int next = 1;
            for (int t = 0; t < known; ++t) {
                const int pos = (s + t) % size_;
                const int mate = mates_[static_cast<std::size_t>(pos)];
                if (mate < 0) break;
                const int mate_t = (mate - s + size_) % size_;
                rot_[static_cast<std::size_t>(t)] =
                    mate_t > t ? next++ : rot_[static_cast<std::size_t>(mate_t)];
                const int r = rot_[static_cast<std::size_t>(t)];
                const int o = own_[static_cast<std::size_t>(t)];
                if (r < o) return false;
                if (r > o) break;
            }
        }
        return true;
    }

    void fill_labels(int shift, int count, std::vector<int>& out) const {
        int next = 1;
        for (int t = 0; t < count; ++t) {
            const int mate = mates_[static_cast<std::size_t>((shift + t) % size_)];
            const int mate_t = (mate - shift + size_) % size_;
            out[static_cast<std::size_t>(t)] = mate_t > t ? next++ : out[static_cast<std::size_t>(mate_t)];
        }
    }

    void accept() {
        ChordDiagram d = ChordDiagram::from_matching(mates_);
        Canonical c = canonicalize(d);
        if (c.rotation != 0) return;
        results_.push_back(std::move(c.word));
    }

    int size_;
    int target_vertices_;
    int min_valence_;
    int closed_ = 0;
    int corners_closed_ = 0;
    std::vector<int> mates_;
    std::vector<int> own_;
    std::vector<int> rot_;
    std::vector<GaussianWord> results_;
};

}  // namespace

std::vector<GaussianWord> enumerate_gluings(int chords, int genus, const EnumerationOptions& options) {
    if (chords < 1 || genus < 0) return {};
    if (matching_count(chords) > options.budget)
        throw Error(ErrorCode::SizeLimitExceeded,
                    std::to_string(chords) + " chords exceed the enumeration budget");

    const int size = 2 * chords;
    std::vector<std::vector<GaussianWord>> parts(static_cast<std::size_t>(size - 1));
    detail::parallel_for(parts.size(), options.jobs, [&](std::size_t task) {
        Search search(chords, genus, options.min_valence);
        parts[task] = search.run_with_first_mate(static_cast<int>(task) + 1);
    });

    std::vector<GaussianWord> words;
    for (auto& part : parts)
        for (auto& w : part) words.push_back(std::move(w));
    std::sort(words.begin(), words.end());
    return words;
}

std::vector<Cell> enumerate_cells(int chords, int genus, const EnumerationOptions& options) {
    std::vector<Cell> cells;
    auto words = enumerate_gluings(chords, genus, options);
    cells.reserve(words.size());
    for (std::size_t i = 0; i < words.size(); ++i)
        cells.push_back(Cell::make(genus, i + 1, std::move(words[i])));
    return cells;
}

std::pair<int, int> chord_range(int genus) {
    // One vertex: n = 2g.  All vertices trivalent: 2n = 3V, V = n + 1 - 2g.
    return {std::max(1, 2 * genus), std::max(1, 6 * genus - 3)};
}

Catalog build_catalog(int genus, const EnumerationOptions& options) {
    if (genus < 1) throw Error(ErrorCode::ChordOutOfRange, "genus must be >= 1");
    const auto [lo, hi] = chord_range(genus);
    std::uint64_t projected = 0;
    for (int n = lo; n <= hi; ++n) {
        const std::uint64_t c = matching_count(n);
        projected = c > std::numeric_limits<std::uint64_t>::max() - projected
                        ? std::numeric_limits<std::uint64_t>::max()
                        : projected + c;
    }
    if (projected > options.budget)
        throw Error(ErrorCode::SizeLimitExceeded,
                    "genus " + std::to_string(genus) + " projects " + std::to_string(projected) +
                        " matchings, budget " + std::to_string(options.budget));

    EnumerationOptions per_n = options;
    per_n.budget = std::numeric_limits<std::uint64_t>::max();
    std::vector<Cell> cells;
    for (int n = lo; n <= hi; ++n) {
        auto part = enumerate_cells(n, genus, per_n);
        for (auto& c : part) cells.push_back(std::move(c));
    }
    return Catalog(genus, std::move(cells));
}

}  // namespace mcomb
