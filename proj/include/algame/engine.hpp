#ifndef ALGAME_ENGINE_HPP
#define ALGAME_ENGINE_HPP

#include <cstdint>
#include <iosfwd>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "algame/ordinal.hpp"

namespace algame {

enum class NP : std::uint8_t { N, P };

enum class Rule : std::uint8_t { Normal, Misere };

/// Outcome under both play rules. Terminal positions are normal P and
/// misere N.
struct Outcome {
    NP normal = NP::N;
    NP misere = NP::N;

    NP under(Rule rule) const { return rule == Rule::Normal ? normal : misere; }
    friend bool operator==(const Outcome&, const Outcome&) = default;
};

char np_char(NP v);
NP np_from_char(char c);

/// An impartial game position. Implementations provide a canonical key that
/// is stable across isomorphic encodings of the same position, a terminal
/// test, and a finite option enumeration. The option relation must be
/// well-founded.
class Position {
public:
    virtual ~Position() = default;
    virtual std::string key() const = 0;
    virtual bool terminal() const = 0;
    virtual std::vector<std::shared_ptr<const Position>> options() const = 0;
};

using PositionPtr = std::shared_ptr<const Position>;

/// Write-once map from canonical key to solved value. Re-insertion must
/// carry an equal value.
class MemoTable {
public:
    struct Entry {
        Outcome outcome;
        std::optional<Ordinal> nimber;
    };

    const Entry* find(const std::string& key) const;
    /// Inserts, or verifies equality against the existing entry.
    void insert(const std::string& key, Entry entry);

    std::size_t size() const { return map_.size(); }
    const std::unordered_map<std::string, Entry>& entries() const { return map_; }

private:
    std::unordered_map<std::string, Entry> map_;
};

/// Memoized solver for outcomes and Sprague-Grundy values. Outcome and
/// nimber are computed in one depth-first pass over an explicit stack;
/// nimber bookkeeping can be switched off when only outcomes are needed.
class Solver {
public:
    struct Config {
        std::size_t max_positions = 10'000'000;
        bool compute_nimbers = true;
    };

    Solver() = default;
    explicit Solver(Config cfg) : cfg_(cfg) {}

    const MemoTable::Entry& solve(const PositionPtr& pos);
    Outcome outcome(const PositionPtr& pos) { return solve(pos).outcome; }
    Ordinal nimber(const PositionPtr& pos);

    /// First option (in enumeration order) that is a P-position under the
    /// rule, or nullptr if none exists. Deterministic tie-break.
    PositionPtr winning_option(const PositionPtr& pos, Rule rule);

    MemoTable& memo() { return memo_; }
    const MemoTable& memo() const { return memo_; }

    /// One record per line: `<key>\t<N|P>\t<N|P>\t<nimber or "-">`.
    /// Keys are written in sorted order so the file is reproducible.
    void save_cache(std::ostream& out) const;
    void load_cache(std::istream& in);

private:
    Config cfg_;
    MemoTable memo_;
};

/// Nim pile *size, optionally with extra options appended (models games such
/// as a pile of 1 that may also move to *2).
class NimPile final : public Position {
public:
    explicit NimPile(std::uint64_t size, std::vector<std::shared_ptr<const NimPile>> extra = {})
        : size_(size), extra_(std::move(extra)) {}

    std::uint64_t size() const { return size_; }

    std::string key() const override;
    bool terminal() const override { return size_ == 0 && extra_.empty(); }
    std::vector<PositionPtr> options() const override;

private:
    std::uint64_t size_;
    std::vector<std::shared_ptr<const NimPile>> extra_;
};

/// Selective compound: a move picks a non-empty subset of the non-terminal
/// components and moves in each chosen one. Terminal iff every component is
/// terminal. The canonical key sorts component keys, so reordering the
/// components cannot split memo entries.
class SelectiveCompound final : public Position {
public:
    explicit SelectiveCompound(std::vector<PositionPtr> components);

    const std::vector<PositionPtr>& components() const { return components_; }

    std::string key() const override;
    bool terminal() const override;
    std::vector<PositionPtr> options() const override;

private:
    std::vector<PositionPtr> components_;
};

std::shared_ptr<const SelectiveCompound> compound(std::vector<PositionPtr> components);

/// Closed-form normal outcome of a selective compound: P iff every
/// component is normal P.
NP compound_normal_outcome(const std::vector<Outcome>& component_outcomes);

/// Closed-form misere outcome of a selective compound: P iff exactly one
/// component is non-terminal and it is misere P, or at least two are
/// non-terminal and every component is normal P.
NP compound_misere_outcome(const std::vector<std::pair<bool, Outcome>>& components);

} // namespace algame

#endif
