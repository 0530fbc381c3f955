#pragma once

#include <cstdint>
#include <istream>
#include <optional>
#include <ostream>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "semclass/error.hpp"
#include "semclass/sense_id.hpp"

namespace semclass {

// Induced sense inventory: one entry per input line, mapping a sense to its
// weighted related senses N(s) and weighted hypernym list H(s).
//
// Every sense mentioned anywhere in the file is interned to a dense Index;
// only senses with their own line are entries (they form the set S, and only
// they appear in the lemma index). Immutable after parsing, so all queries
// are safe from concurrent threads.
class SenseInventory {
public:
    using Index = std::uint32_t;
    static constexpr Index npos = static_cast<Index>(-1);

    struct Neighbor {
        Index sense;
        double weight;
        bool operator==(const Neighbor&) const = default;
    };

    struct Entry {
        std::vector<Neighbor> neighbors;   // N(s), input order preserved
        std::vector<Neighbor> hypernyms;   // H(s), input order preserved
    };

    // Input: three tab-separated columns per line (sense id, N list, H list),
    // lists comma-separated `sense:weight`. Lenient mode skips malformed
    // lines and records them in `report`; strict mode throws ParseError.
    // A duplicate sense id is fatal in both modes.
    static SenseInventory parse(std::istream& in, ParseMode mode = ParseMode::strict,
                                ParseReport* report = nullptr);

    // Writes the inventory back in the input format (entry order preserved,
    // weights in shortest round-trip decimal form).
    void serialize(std::ostream& out) const;

    // Relatedness between two senses: the weight of b in N(a) or of a in
    // N(b); when both directions exist, the maximum. nullopt when unrelated.
    std::optional<double> relatedness(const SenseId& a, const SenseId& b) const;
    std::optional<double> relatedness(Index a, Index b) const;

    // All entry senses of a lemma (exact match after NFC normalization),
    // ordered by sense number.
    std::vector<SenseId> lemma_senses(std::string_view lemma) const;
    // Index-level variant; nullptr when the lemma has no entries.
    const std::vector<Index>* lemma_sense_indices(std::string_view lemma) const;

    // Number of entries, the paper-level |S|.
    std::size_t size() const { return entries_.size(); }

    // --- interned-id surface -------------------------------------------
    std::size_t num_interned() const { return ids_.size(); }
    std::optional<Index> find(const SenseId& id) const;
    const SenseId& id_of(Index i) const { return ids_[i]; }
    bool has_entry(Index i) const { return entry_of_[i] != npos; }
    // nullptr for interned senses without their own line.
    const Entry* entry(Index i) const {
        return entry_of_[i] == npos ? nullptr : &entries_[entry_of_[i]];
    }
    // Entries in input order, as interned indices.
    const std::vector<Index>& entry_senses() const { return entry_senses_; }

    // How many entries list this lemma among their hypernyms (the tf-idf
    // document frequency; 0 for lemmas never used as a hypernym).
    std::uint32_t hypernym_df(std::string_view lemma) const;

private:
    Index intern(SenseId id);

    std::vector<SenseId> ids_;                      // Index -> SenseId
    std::unordered_map<SenseId, Index> index_;      // SenseId -> Index
    std::vector<Index> entry_of_;                   // Index -> entry slot or npos
    std::vector<Entry> entries_;                    // entry slot -> lists
    std::vector<Index> entry_senses_;               // entry slot -> Index
    std::unordered_map<std::string, std::vector<Index>> lemma_index_;
    std::unordered_map<std::string, std::uint32_t> hypernym_df_;
};

}  // namespace semclass
