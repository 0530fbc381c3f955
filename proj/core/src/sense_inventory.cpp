#include "semclass/sense_inventory.hpp"

#include <algorithm>
#include <cmath>
#include <unordered_set>

#include "semclass/tsv.hpp"
#include "semclass/unicode.hpp"
#include "semclass/util.hpp"

namespace semclass {

SenseInventory::Index SenseInventory::intern(SenseId id) {
    auto [it, inserted] = index_.try_emplace(std::move(id), static_cast<Index>(ids_.size()));
    if (inserted) {
        ids_.push_back(it->first);
        entry_of_.push_back(npos);
    }
    return it->second;
}

SenseInventory SenseInventory::parse(std::istream& in, ParseMode mode, ParseReport* report) {
    SenseInventory inv;
    TsvReader reader(in);
    std::string line;

    auto fail = [&](std::size_t lineno, const std::string& msg) {
        if (mode == ParseMode::strict) throw ParseError(msg, lineno);
        if (report) report->add(lineno, msg);
    };

    // Parses a comma-separated `sense:weight` list; nullopt on malformed
    // items or duplicate senses within the list.
    auto parse_list = [&](std::string_view field, std::vector<Neighbor>& out,
                          std::string& error) -> bool {
        out.clear();
        if (field.empty()) return true;
        std::unordered_set<Index> seen;
        for (std::string_view item : split(field, ',')) {
            std::size_t colon = item.rfind(':');
            if (colon == std::string_view::npos || colon == 0 || colon + 1 == item.size()) {
                error = "malformed sense:weight item '" + std::string(item) + "'";
                return false;
            }
            auto id = SenseId::parse(item.substr(0, colon));
            if (!id) {
                error = "malformed sense id '" + std::string(item.substr(0, colon)) + "'";
                return false;
            }
            auto weight = parse_double(item.substr(colon + 1));
            if (!weight || !std::isfinite(*weight) || *weight < 0) {
                error = "bad weight '" + std::string(item.substr(colon + 1)) + "'";
                return false;
            }
            id->lemma = nfc(id->lemma);
            Index idx = inv.intern(std::move(*id));
            if (!seen.insert(idx).second) {
                error = "duplicate sense '" + inv.ids_[idx].text() + "' in list";
                return false;
            }
            out.push_back({idx, *weight});
        }
        return true;
    };

    while (reader.next(line)) {
        std::size_t lineno = reader.line_number();
        auto fields = split(line, '\t');
        if (fields.size() != 3) {
            fail(lineno, "expected 3 tab-separated fields, got " + std::to_string(fields.size()));
            continue;
        }
        auto id = SenseId::parse(fields[0]);
        if (!id) {
            fail(lineno, "malformed sense id '" + std::string(fields[0]) + "'");
            continue;
        }
        id->lemma = nfc(id->lemma);

        Entry entry;
        std::string error;
        if (!parse_list(fields[1], entry.neighbors, error) ||
            !parse_list(fields[2], entry.hypernyms, error)) {
            fail(lineno, error);
            continue;
        }

        Index idx = inv.intern(*id);
        if (inv.entry_of_[idx] != npos)
            throw ParseError("duplicate sense id '" + id->text() + "'", lineno);
        inv.entry_of_[idx] = static_cast<Index>(inv.entries_.size());
        inv.entries_.push_back(std::move(entry));
        inv.entry_senses_.push_back(idx);
        inv.lemma_index_[id->lemma].push_back(idx);

        // Document frequency: count each hypernym lemma once per entry.
        std::unordered_set<std::string_view> seen_lemmas;
        for (const Neighbor& h : inv.entries_.back().hypernyms)
            if (seen_lemmas.insert(inv.ids_[h.sense].lemma).second)
                ++inv.hypernym_df_[inv.ids_[h.sense].lemma];
    }

    for (auto& [lemma, senses] : inv.lemma_index_)
        std::sort(senses.begin(), senses.end(),
                  [&](Index a, Index b) { return inv.ids_[a].sense < inv.ids_[b].sense; });
    return inv;
}

void SenseInventory::serialize(std::ostream& out) const {
    auto write_list = [&](const std::vector<Neighbor>& list) {
        bool first = true;
        for (const Neighbor& n : list) {
            if (!first) out << ',';
            first = false;
            out << ids_[n.sense] << ':' << format_double(n.weight);
        }
    };
    for (std::size_t slot = 0; slot < entries_.size(); ++slot) {
        out << ids_[entry_senses_[slot]] << '\t';
        write_list(entries_[slot].neighbors);
        out << '\t';
        write_list(entries_[slot].hypernyms);
        out << '\n';
    }
}

std::optional<SenseInventory::Index> SenseInventory::find(const SenseId& id) const {
    auto it = index_.find(id);
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

std::optional<double> SenseInventory::relatedness(Index a, Index b) const {
    if (a == b) return std::nullopt;
    std::optional<double> best;
    auto scan = [&](Index from, Index to) {
        if (const Entry* e = entry(from))
            for (const Neighbor& n : e->neighbors)
                if (n.sense == to && (!best || n.weight > *best)) best = n.weight;
    };
    scan(a, b);
    scan(b, a);
    return best;
}

std::optional<double> SenseInventory::relatedness(const SenseId& a, const SenseId& b) const {
    auto ia = find(a);
    auto ib = find(b);
    if (!ia || !ib) return std::nullopt;
    return relatedness(*ia, *ib);
}

const std::vector<SenseInventory::Index>* SenseInventory::lemma_sense_indices(
    std::string_view lemma) const {
    auto it = lemma_index_.find(nfc(lemma));
    if (it == lemma_index_.end()) return nullptr;
    return &it->second;
}

std::vector<SenseId> SenseInventory::lemma_senses(std::string_view lemma) const {
    std::vector<SenseId> out;
    if (const auto* senses = lemma_sense_indices(lemma))
        for (Index i : *senses) out.push_back(ids_[i]);
    return out;
}

std::uint32_t SenseInventory::hypernym_df(std::string_view lemma) const {
    auto it = hypernym_df_.find(std::string(lemma));
    return it == hypernym_df_.end() ? 0 : it->second;
}

}  // namespace semclass
