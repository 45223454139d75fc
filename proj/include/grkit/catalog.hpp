#pragma once

#include <algorithm>
#include <filesystem>
#include <map>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "construct.hpp"
#include "core.hpp"
#include "group.hpp"
#include "isomorphism.hpp"
#include "table_io.hpp"

namespace grkit {

struct CatalogEntry {
    std::string name;
    std::shared_ptr<const FiniteGroup> group;
    std::string source;  // "builtin" or the file path it was loaded from
};

struct IngestManifest {
    int files_seen = 0;
    int files_loaded = 0;
    int new_entries = 0;
    int merged_duplicates = 0;
    std::vector<std::pair<std::string, std::string>> merges;  // file stem -> entry it merged into
    std::vector<std::string> new_names;
    std::map<int, int> classes_per_order;  // distinct entries this directory's files map to
};

namespace detail {

// Invariant-factor chains d1 | d2 | ... | dk with k >= 2 and product <= maxn.
inline void invariant_types(int maxn, std::vector<int>& seq, long long prod,
                            std::vector<std::vector<int>>& out) {
    if (seq.size() >= 2) out.push_back(seq);
    int start = seq.empty() ? 2 : seq.back();
    for (int d = start; prod * d <= maxn; ++d) {
        if (!seq.empty() && d % seq.back() != 0) continue;
        seq.push_back(d);
        invariant_types(maxn, seq, prod * d, out);
        seq.pop_back();
    }
}

}  // namespace detail

class Catalog {
   public:
    static Catalog builtin() {
        Catalog cat;
        for (int n = 1; n <= 48; ++n)
            cat.push("C" + std::to_string(n), construct("cyclic:" + std::to_string(n)));
        std::vector<std::vector<int>> types;
        std::vector<int> seq;
        detail::invariant_types(48, seq, 1, types);
        for (const auto& t : types) {
            std::string name, spec = "abelian:";
            for (std::size_t i = 0; i < t.size(); ++i) {
                if (i) {
                    name += "x";
                    spec += ",";
                }
                name += "C" + std::to_string(t[i]);
                spec += std::to_string(t[i]);
            }
            cat.push(name, construct(spec));
        }
        for (int s = 3; s <= 6; ++s)
            for (int n : {2, 4, 8})
                cat.push("H" + std::to_string(s) + "_" + std::to_string(n),
                         construct("hsn:" + std::to_string(s) + "," + std::to_string(n)));
        for (int n = 2; n <= 12; ++n)
            cat.push("Dic" + std::to_string(n), construct("dicyclic:" + std::to_string(n)));
        cat.push("Q8xC2", construct("product:q8,cyclic:2"));
        cat.push("Q8xC2xC2", construct("product:q8,cyclic:2,cyclic:2"));
        cat.sort_entries();
        return cat;
    }

    const std::vector<CatalogEntry>& entries() const { return entries_; }

    const CatalogEntry* find(const std::string& name) const {
        for (const auto& e : entries_)
            if (e.name == name) return &e;
        return nullptr;
    }

    // Loads every .json group table in the directory (sorted by filename) and
    // merges groups already represented. Order <= 64 merges up to isomorphism;
    // larger groups merge only on identical tables. A file whose stem names an
    // existing entry must be isomorphic to it.
    IngestManifest ingest_directory(const std::string& dir) {
        namespace fs = std::filesystem;
        if (!fs::is_directory(dir)) throw error("not a directory: " + dir);
        std::vector<fs::path> files;
        for (const auto& de : fs::directory_iterator(dir))
            if (de.is_regular_file() && de.path().extension() == ".json")
                files.push_back(de.path());
        std::sort(files.begin(), files.end());

        IngestManifest man;
        man.files_seen = static_cast<int>(files.size());
        std::map<int, std::vector<std::string>> touched;  // order -> entry names (deduped below)
        for (const auto& path : files) {
            auto g = std::make_shared<FiniteGroup>(read_group_table(path.string()));
            ++man.files_loaded;
            std::string stem = path.stem().string();
            const CatalogEntry* hit = match(*g);
            const CatalogEntry* named = find(stem);
            if (named && (!hit || hit->name != named->name))
                throw error("file " + path.string() + " reuses catalog name '" + stem +
                            "' for a non-isomorphic group");
            if (hit) {
                ++man.merged_duplicates;
                man.merges.push_back({stem, hit->name});
                touched[hit->group->order()].push_back(hit->name);
            } else {
                entries_.push_back({stem, g, path.string()});
                ++man.new_entries;
                man.new_names.push_back(stem);
                touched[g->order()].push_back(stem);
            }
        }
        for (auto& [ord, names] : touched) {
            std::sort(names.begin(), names.end());
            names.erase(std::unique(names.begin(), names.end()), names.end());
            man.classes_per_order[ord] = static_cast<int>(names.size());
        }
        sort_entries();
        return man;
    }

   private:
    std::vector<CatalogEntry> entries_;

    void push(const std::string& name, FiniteGroup g) {
        if (find(name)) throw error("duplicate catalog name: " + name);
        entries_.push_back({name, std::make_shared<FiniteGroup>(std::move(g)), "builtin"});
    }

    void sort_entries() {
        std::stable_sort(entries_.begin(), entries_.end(),
                         [](const CatalogEntry& a, const CatalogEntry& b) {
                             if (a.group->order() != b.group->order())
                                 return a.group->order() < b.group->order();
                             return a.name < b.name;
                         });
    }

    // First existing entry the group duplicates, or nullptr.
    const CatalogEntry* match(const FiniteGroup& g) const {
        GroupFingerprint fp = fingerprint(g);
        for (const auto& e : entries_) {
            if (e.group->order() != g.order()) continue;
            if (g.order() <= 64) {
                if (fingerprint(*e.group) == fp && is_isomorphic(*e.group, g)) return &e;
            } else if (e.group->same_table(g)) {
                return &e;
            }
        }
        return nullptr;
    }
};

}  // namespace grkit
