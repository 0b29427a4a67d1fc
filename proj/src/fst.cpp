#include "kmorph/fst.hpp"

#include <algorithm>
#include <cstring>
#include <deque>
#include <map>
#include <set>

#include <zlib.h>

#include "kmorph/error.hpp"

namespace kmorph::fst {

namespace {

void put_u16(std::string& out, uint16_t v) {
    out.push_back(static_cast<char>(v & 0xFF));
    out.push_back(static_cast<char>(v >> 8));
}

void put_u32(std::string& out, uint32_t v) {
    for (int i = 0; i < 4; ++i) out.push_back(static_cast<char>((v >> (8 * i)) & 0xFF));
}

void put_varint(std::string& out, uint64_t v) {
    while (v >= 0x80) {
        out.push_back(static_cast<char>(v | 0x80));
        v >>= 7;
    }
    out.push_back(static_cast<char>(v));
}

uint64_t zigzag(int64_t v) { return (static_cast<uint64_t>(v) << 1) ^ static_cast<uint64_t>(v >> 63); }
int64_t unzigzag(uint64_t v) { return static_cast<int64_t>(v >> 1) ^ -static_cast<int64_t>(v & 1); }

struct Reader {
    std::string_view data;
    size_t pos = 0;

    void need(size_t n) const {
        if (pos + n > data.size())
            throw Error(errc::truncated_input, "unexpected end of automaton image");
    }
    uint16_t u16() {
        need(2);
        uint16_t v = static_cast<uint8_t>(data[pos]) | (static_cast<uint8_t>(data[pos + 1]) << 8);
        pos += 2;
        return v;
    }
    uint32_t u32() {
        need(4);
        uint32_t v = 0;
        for (int i = 0; i < 4; ++i) v |= static_cast<uint32_t>(static_cast<uint8_t>(data[pos + i])) << (8 * i);
        pos += 4;
        return v;
    }
    uint64_t varint() {
        uint64_t v = 0;
        int shift = 0;
        while (true) {
            need(1);
            uint8_t b = static_cast<uint8_t>(data[pos++]);
            v |= static_cast<uint64_t>(b & 0x7F) << shift;
            if (!(b & 0x80)) break;
            shift += 7;
            if (shift > 63)
                throw Error(errc::truncated_input, "overlong varint in automaton image");
        }
        return v;
    }
    std::string_view bytes(size_t n) {
        need(n);
        std::string_view v = data.substr(pos, n);
        pos += n;
        return v;
    }
};

// Mutable node form used while building; frozen into CSR by renumbering.
struct Node {
    std::vector<std::pair<char32_t, uint32_t>> out;
    std::vector<uint32_t> pay;
};

Automaton freeze(const std::vector<Node>& nodes, uint32_t initial) {
    // BFS from the initial state over letter-sorted transitions gives the
    // canonical numbering used everywhere (structural equality, byte-stable
    // serialization).
    std::vector<uint32_t> order;
    std::vector<uint32_t> remap(nodes.size(), UINT32_MAX);
    std::deque<uint32_t> queue;
    remap[initial] = 0;
    order.push_back(initial);
    queue.push_back(initial);
    while (!queue.empty()) {
        uint32_t old = queue.front();
        queue.pop_front();
        for (const auto& [letter, target] : nodes[old].out) {
            if (remap[target] == UINT32_MAX) {
                remap[target] = static_cast<uint32_t>(order.size());
                order.push_back(target);
                queue.push_back(target);
            }
        }
    }
    Automaton a;
    a.trans_offset.reserve(order.size() + 1);
    a.final_offset.reserve(order.size() + 1);
    a.trans_offset.push_back(0);
    a.final_offset.push_back(0);
    for (uint32_t old : order) {
        for (const auto& [letter, target] : nodes[old].out)
            a.transitions.push_back({letter, remap[target]});
        a.trans_offset.push_back(static_cast<uint32_t>(a.transitions.size()));
        for (uint32_t p : nodes[old].pay) a.payloads.push_back(p);
        a.final_offset.push_back(static_cast<uint32_t>(a.payloads.size()));
    }
    return a;
}

} // namespace

std::optional<uint32_t> Automaton::step(uint32_t state, char32_t letter) const {
    auto range = out(state);
    auto it = std::lower_bound(range.begin(), range.end(), letter,
                               [](const Transition& t, char32_t l) { return t.letter < l; });
    if (it != range.end() && it->letter == letter) return it->target;
    return std::nullopt;
}

std::span<const uint32_t> Automaton::accepts(std::u32string_view key) const {
    uint32_t state = 0;
    for (char32_t c : key) {
        auto next = step(state, c);
        if (!next) return {};
        state = *next;
    }
    return finals_of(state);
}

uint32_t PayloadTable::intern(std::string_view record) {
    auto it = index_.find(std::string(record));
    if (it != index_.end()) return it->second;
    uint32_t id = static_cast<uint32_t>(records_.size());
    records_.emplace_back(record);
    index_.emplace(records_.back(), id);
    return id;
}

Automaton build_trie(const std::vector<std::pair<std::u32string, uint32_t>>& entries) {
    std::vector<Node> nodes(1);
    for (const auto& [key, payload] : entries) {
        uint32_t state = 0;
        for (char32_t c : key) {
            auto& out = nodes[state].out;
            auto it = std::lower_bound(out.begin(), out.end(), c,
                                       [](const auto& t, char32_t l) { return t.first < l; });
            if (it != out.end() && it->first == c) {
                state = it->second;
            } else {
                uint32_t fresh = static_cast<uint32_t>(nodes.size());
                nodes[state].out.insert(it, {c, fresh});
                nodes.emplace_back();
                state = fresh;
            }
        }
        nodes[state].pay.push_back(payload);
    }
    for (auto& n : nodes) {
        std::sort(n.pay.begin(), n.pay.end());
        n.pay.erase(std::unique(n.pay.begin(), n.pay.end()), n.pay.end());
    }
    return freeze(nodes, 0);
}

Automaton minimize(const Automaton& a) {
    uint32_t n = a.state_count();
    if (n == 0) return a;

    // Height of a state = longest path to a sink; computed by iterative DFS
    // that also rejects cycles.
    std::vector<int32_t> height(n, -1);
    std::vector<uint8_t> color(n, 0); // 0 white, 1 gray, 2 black
    std::vector<std::pair<uint32_t, uint32_t>> stack; // (state, next child index)
    for (uint32_t root = 0; root < n; ++root) {
        if (color[root] != 0) continue;
        stack.emplace_back(root, 0);
        color[root] = 1;
        while (!stack.empty()) {
            auto& [s, idx] = stack.back();
            auto out = a.out(s);
            if (idx < out.size()) {
                uint32_t t = out[idx++].target;
                if (color[t] == 1)
                    throw Error(errc::cyclic_input, "minimize requires an acyclic automaton");
                if (color[t] == 0) {
                    color[t] = 1;
                    stack.emplace_back(t, 0);
                }
            } else {
                int32_t h = 0;
                for (const auto& t : out) h = std::max(h, height[t.target] + 1);
                height[s] = h;
                color[s] = 2;
                stack.pop_back();
            }
        }
    }

    int32_t max_h = *std::max_element(height.begin(), height.end());
    std::vector<std::vector<uint32_t>> by_height(max_h + 1);
    for (uint32_t s = 0; s < n; ++s) by_height[height[s]].push_back(s);

    // Merge bottom-up: states are equivalent iff payload lists and
    // letter->representative maps coincide; equivalent states share a height.
    std::vector<uint32_t> rep(n);
    for (uint32_t s = 0; s < n; ++s) rep[s] = s;
    std::map<std::string, uint32_t> seen;
    std::string sig;
    for (int32_t h = 0; h <= max_h; ++h) {
        seen.clear();
        for (uint32_t s : by_height[h]) {
            sig.clear();
            for (uint32_t p : a.finals_of(s)) {
                put_varint(sig, p);
                sig.push_back('\x01');
            }
            sig.push_back('\x02');
            for (const auto& t : a.out(s)) {
                put_varint(sig, t.letter);
                put_varint(sig, rep[t.target]);
            }
            auto [it, fresh] = seen.emplace(sig, s);
            rep[s] = it->second;
        }
    }

    std::vector<Node> nodes(n);
    for (uint32_t s = 0; s < n; ++s) {
        if (rep[s] != s) continue;
        auto pays = a.finals_of(s);
        nodes[s].pay.assign(pays.begin(), pays.end());
        for (const auto& t : a.out(s)) nodes[s].out.emplace_back(t.letter, rep[t.target]);
    }
    return freeze(nodes, rep[0]);
}

std::string serialize(const Automaton& a, const std::vector<std::string>& payload_records) {
    std::string out;
    out += "KFST";
    put_u16(out, 1);

    std::set<char32_t> letters;
    for (const auto& t : a.transitions) letters.insert(t.letter);
    std::vector<char32_t> alphabet(letters.begin(), letters.end());
    std::map<char32_t, uint32_t> letter_id;
    for (size_t i = 0; i < alphabet.size(); ++i) letter_id[alphabet[i]] = static_cast<uint32_t>(i);

    put_u32(out, static_cast<uint32_t>(alphabet.size()));
    for (char32_t c : alphabet) put_u32(out, c);

    uint32_t n = a.state_count();
    put_u32(out, n);
    for (uint32_t s = 0; s < n; ++s) {
        auto range = a.out(s);
        put_varint(out, range.size());
        for (const auto& t : range) {
            put_varint(out, letter_id[t.letter]);
            put_varint(out, zigzag(static_cast<int64_t>(t.target) - static_cast<int64_t>(s)));
        }
    }

    uint32_t final_count = 0;
    for (uint32_t s = 0; s < n; ++s)
        if (a.is_final(s)) ++final_count;
    put_u32(out, final_count);
    for (uint32_t s = 0; s < n; ++s) {
        auto pays = a.finals_of(s);
        if (pays.empty()) continue;
        put_varint(out, s);
        put_varint(out, pays.size());
        for (uint32_t p : pays) put_varint(out, p);
    }

    put_u32(out, static_cast<uint32_t>(payload_records.size()));
    for (const auto& r : payload_records) {
        put_varint(out, r.size());
        out += r;
    }

    uint32_t crc = static_cast<uint32_t>(
        crc32(0, reinterpret_cast<const Bytef*>(out.data()), static_cast<uInt>(out.size())));
    put_u32(out, crc);
    return out;
}

std::pair<Automaton, std::vector<std::string>> deserialize(std::string_view bytes) {
    if (bytes.size() < 4) throw Error(errc::truncated_input, "automaton image too short");
    if (bytes.substr(0, 4) != "KFST")
        throw Error(errc::bad_magic, "not an automaton image (bad magic)");
    if (bytes.size() < 8) throw Error(errc::truncated_input, "automaton image too short");

    Reader r{bytes, 4};
    uint16_t version = r.u16();
    if (version != 1)
        throw Error(errc::version_mismatch,
                    "unsupported automaton format version " + std::to_string(version));

    uint32_t alpha_n = r.u32();
    std::vector<char32_t> alphabet(alpha_n);
    for (uint32_t i = 0; i < alpha_n; ++i) alphabet[i] = static_cast<char32_t>(r.u32());

    uint32_t n = r.u32();
    Automaton a;
    a.trans_offset.push_back(0);
    for (uint32_t s = 0; s < n; ++s) {
        uint64_t degree = r.varint();
        for (uint64_t i = 0; i < degree; ++i) {
            uint64_t lid = r.varint();
            int64_t delta = unzigzag(r.varint());
            if (lid >= alphabet.size())
                throw Error(errc::truncated_input, "letter id out of range");
            int64_t target = static_cast<int64_t>(s) + delta;
            if (target < 0 || target >= static_cast<int64_t>(n))
                throw Error(errc::truncated_input, "transition target out of range");
            a.transitions.push_back({alphabet[lid], static_cast<uint32_t>(target)});
        }
        a.trans_offset.push_back(static_cast<uint32_t>(a.transitions.size()));
    }

    uint32_t final_count = r.u32();
    a.final_offset.assign(n + 1, 0);
    std::vector<std::pair<uint32_t, std::vector<uint32_t>>> finals;
    finals.reserve(final_count);
    for (uint32_t i = 0; i < final_count; ++i) {
        uint32_t state = static_cast<uint32_t>(r.varint());
        if (state >= n) throw Error(errc::truncated_input, "final state out of range");
        uint64_t count = r.varint();
        std::vector<uint32_t> pays(count);
        for (uint64_t j = 0; j < count; ++j) pays[j] = static_cast<uint32_t>(r.varint());
        finals.emplace_back(state, std::move(pays));
    }

    uint32_t payload_count = r.u32();
    std::vector<std::string> records;
    records.reserve(payload_count);
    for (uint32_t i = 0; i < payload_count; ++i) {
        uint64_t len = r.varint();
        records.emplace_back(r.bytes(len));
    }

    uint32_t stored_crc = r.u32();
    if (r.pos != bytes.size())
        throw Error(errc::truncated_input, "trailing bytes after automaton image");
    uint32_t actual = static_cast<uint32_t>(crc32(
        0, reinterpret_cast<const Bytef*>(bytes.data()), static_cast<uInt>(bytes.size() - 4)));
    if (actual != stored_crc)
        throw Error(errc::checksum_mismatch, "automaton image checksum mismatch");

    for (const auto& [state, pays] : finals) {
        for (uint32_t p : pays) {
            if (p >= records.size())
                throw Error(errc::truncated_input, "payload index out of range");
        }
    }
    std::sort(finals.begin(), finals.end());
    size_t cursor = 0;
    for (uint32_t s = 0; s < n; ++s) {
        if (cursor < finals.size() && finals[cursor].first == s) {
            for (uint32_t p : finals[cursor].second) a.payloads.push_back(p);
            ++cursor;
        }
        a.final_offset[s + 1] = static_cast<uint32_t>(a.payloads.size());
    }
    return {std::move(a), std::move(records)};
}

Stats stats(const Automaton& a, const std::vector<std::string>& payload_records) {
    Stats s;
    s.states = a.state_count();
    s.transitions = a.transition_count();
    s.serialized_bytes = serialize(a, payload_records).size();
    return s;
}

} // namespace kmorph::fst
