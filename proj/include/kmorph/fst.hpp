#ifndef KMORPH_FST_HPP
#define KMORPH_FST_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace kmorph::fst {

// Deterministic acyclic automaton over arbitrary char32_t letters. States are
// numbered in BFS order from the initial state 0, transitions per state are
// sorted by letter. Payload indices attached to final states reference an
// external payload table.
struct Automaton {
    struct Transition {
        char32_t letter;
        uint32_t target;
        bool operator==(const Transition&) const = default;
    };

    // CSR transition storage: transitions of state s occupy
    // [trans_offset[s], trans_offset[s+1]).
    std::vector<uint32_t> trans_offset;
    std::vector<Transition> transitions;

    // CSR finals storage: payload indices of state s occupy
    // [final_offset[s], final_offset[s+1]); non-final states have an empty
    // range. Payload lists are sorted and duplicate-free.
    std::vector<uint32_t> final_offset;
    std::vector<uint32_t> payloads;

    uint32_t state_count() const { return trans_offset.empty() ? 0 : static_cast<uint32_t>(trans_offset.size() - 1); }
    uint32_t transition_count() const { return static_cast<uint32_t>(transitions.size()); }

    std::span<const Transition> out(uint32_t state) const {
        return {transitions.data() + trans_offset[state],
                transitions.data() + trans_offset[state + 1]};
    }
    // Binary search over the sorted per-state transitions.
    std::optional<uint32_t> step(uint32_t state, char32_t letter) const;

    bool is_final(uint32_t state) const {
        return final_offset[state + 1] > final_offset[state];
    }
    std::span<const uint32_t> finals_of(uint32_t state) const {
        return {payloads.data() + final_offset[state],
                payloads.data() + final_offset[state + 1]};
    }

    // Walks the whole key; empty when the key is not accepted.
    std::span<const uint32_t> accepts(std::u32string_view key) const;

    bool operator==(const Automaton&) const = default;
};

// Deduplicating table of UTF-8 payload records.
class PayloadTable {
public:
    uint32_t intern(std::string_view record);
    const std::string& at(uint32_t index) const { return records_.at(index); }
    size_t size() const { return records_.size(); }
    const std::vector<std::string>& records() const { return records_; }

private:
    std::vector<std::string> records_;
    std::unordered_map<std::string, uint32_t> index_;
};

struct Stats {
    uint64_t states = 0;
    uint64_t transitions = 0;
    uint64_t serialized_bytes = 0;
};

// Trie over the given keys; duplicate keys merge their payload lists.
// States come out in canonical BFS numbering.
Automaton build_trie(const std::vector<std::pair<std::u32string, uint32_t>>& entries);

// Revuz height-stratified minimization. Input must be acyclic (throws
// Error(cyclic_input) otherwise); result is canonical (BFS-numbered) and
// language- and payload-equivalent.
Automaton minimize(const Automaton& a);

Stats stats(const Automaton& a, const std::vector<std::string>& payload_records);

// Binary image: magic "KFST", version, alphabet table, per-state transition
// records (varint letter id + zigzag target delta), finals table, payload
// table, CRC32 trailer. Little-endian throughout.
std::string serialize(const Automaton& a, const std::vector<std::string>& payload_records);
std::pair<Automaton, std::vector<std::string>> deserialize(std::string_view bytes);

} // namespace kmorph::fst

#endif
