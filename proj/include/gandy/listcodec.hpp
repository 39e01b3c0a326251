#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "gandy/meter.hpp"

namespace gandy {

inline constexpr char kOpen = '<';
inline constexpr char kClose = '>';
inline constexpr char kComma = ',';

inline bool isReservedChar(char c) {
    return c == kOpen || c == kClose || c == kComma;
}

struct AtomUsesReservedCharacter : std::runtime_error {
    explicit AtomUsesReservedCharacter(const std::string& atom)
        : std::runtime_error("atom uses reserved character: \"" + atom + "\"") {}
};

struct NotAList : std::runtime_error {
    NotAList() : std::runtime_error("depth is defined on lists, not bare atoms") {}
};

/// The base symbol set plus the three structural characters. Structural
/// characters can never be base symbols.
class Alphabet {
public:
    explicit Alphabet(std::string_view symbols);

    bool contains(char c) const;
    /// Every character of w is a base symbol. The empty word qualifies.
    bool validAtom(std::string_view w) const;
    const std::string& symbols() const { return symbols_; }

private:
    std::string symbols_;
    bool member_[256] = {};
};

/// A hereditarily finite list value: a base atom or a non-empty sequence of
/// values. Immutable; copies share nodes. Structural measures are cached at
/// construction so recursion never re-parses.
///
/// A list item may not be the empty atom: its encoding would collide with
/// the (rejected) empty list "<>" and could not be split back.
class ListValue {
public:
    static ListValue atom(std::string word);
    static ListValue list(std::vector<ListValue> items);

    bool isAtom() const { return node_->items.empty() && !node_->isList; }
    bool isList() const { return node_->isList; }
    const std::string& atomWord() const { return node_->atom; }
    const std::vector<ListValue>& items() const { return node_->items; }

    /// Length of the canonical encoding, brackets and commas included.
    std::size_t encodedLength() const { return node_->encodedLength; }
    /// Number of list nodes == number of '<' in the canonical encoding.
    std::size_t listNodeCount() const { return node_->listNodeCount; }
    /// 0 for atoms; the HW stratum index for lists.
    int depthOrZero() const { return node_->depth; }

    bool operator==(const ListValue& other) const;
    bool operator!=(const ListValue& other) const { return !(*this == other); }

private:
    struct Node {
        bool isList = false;
        std::string atom;
        std::vector<ListValue> items;
        std::size_t encodedLength = 0;
        std::size_t listNodeCount = 0;
        int depth = 0;
    };

    explicit ListValue(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

    std::shared_ptr<const Node> node_;
};

/// Canonical bracket/comma form. Atom characters are validated against a.
std::string encode(const ListValue& v, const Alphabet& a);

/// Canonical form without alphabet validation (structure is already sound
/// by construction).
std::string encoding(const ListValue& v);

/// Top-level components of "<w1,...,wn>", or nullopt for anything that is
/// not a well-formed single list: missing outer brackets, unbalanced
/// brackets, an empty component, or trailing garbage. Two counters drive the
/// scan: component length and bracket depth; counter updates are charged
/// ceil(log2(value+1)) units each, so the metered cost stays within
/// kSplitCostFactor * |w| * ceil(log2(|w|+1)).
std::optional<std::vector<std::string>> split(std::string_view w, CostMeter& meter);

inline std::optional<std::vector<std::string>> split(std::string_view w) {
    CostMeter scratch;
    return split(w, scratch);
}

/// The constant in the split cost bound; fixed by the implementation and
/// asserted by the tests.
inline constexpr std::uint64_t kSplitCostFactor = 3;

/// Full recursive parse; atoms validated against a. nullopt where split is
/// undefined or an atom falls outside the alphabet.
std::optional<ListValue> decode(std::string_view w, const Alphabet& a, CostMeter& meter);

inline std::optional<ListValue> decode(std::string_view w, const Alphabet& a) {
    CostMeter scratch;
    return decode(w, a, scratch);
}

/// Least n with v in HW_n. Throws NotAList for bare atoms.
int depth(const ListValue& v);

/// Number of '<' characters in w.
std::size_t leftCount(std::string_view w);

}  // namespace gandy
