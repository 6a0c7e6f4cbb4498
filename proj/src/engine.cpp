#include "algame/engine.hpp"

#include <algorithm>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>
#include <unordered_set>

#include "algame/errors.hpp"

namespace algame {

char np_char(NP v) { return v == NP::N ? 'N' : 'P'; }

NP np_from_char(char c) {
    if (c == 'N') return NP::N;
    if (c == 'P') return NP::P;
    throw parse_error(std::string("expected N or P, got '") + c + "'");
}

const MemoTable::Entry* MemoTable::find(const std::string& key) const {
    auto it = map_.find(key);
    return it == map_.end() ? nullptr : &it->second;
}

void MemoTable::insert(const std::string& key, Entry entry) {
    auto it = map_.find(key);
    if (it != map_.end()) {
        const Entry& old = it->second;
        if (!(old.outcome == entry.outcome) || old.nimber != entry.nimber)
            throw std::logic_error("memo table re-insertion with a different value for key " + key);
        return;
    }
    map_.emplace(key, std::move(entry));
}

namespace {

struct Frame {
    PositionPtr pos;
    std::string key;
    std::vector<PositionPtr> opts; // deduplicated by key
    std::vector<std::string> opt_keys;
    std::size_t next = 0;
};

MemoTable::Entry terminal_entry(bool with_nimber) {
    MemoTable::Entry e;
    e.outcome = Outcome{NP::P, NP::N};
    if (with_nimber) e.nimber = Ordinal();
    return e;
}

} // namespace

const MemoTable::Entry& Solver::solve(const PositionPtr& pos) {
    const std::string root_key = pos->key();
    if (const auto* hit = memo_.find(root_key)) return *hit;

    std::vector<Frame> stack;
    auto push = [&](PositionPtr p, std::string key) {
        if (memo_.size() + stack.size() >= cfg_.max_positions)
            throw resource_limit_error("position cap exceeded (max " +
                                       std::to_string(cfg_.max_positions) + ")");
        Frame f;
        f.pos = std::move(p);
        f.key = std::move(key);
        if (!f.pos->terminal()) {
            std::unordered_set<std::string> seen;
            for (auto& opt : f.pos->options()) {
                std::string k = opt->key();
                if (seen.insert(k).second) {
                    f.opts.push_back(std::move(opt));
                    f.opt_keys.push_back(std::move(k));
                }
            }
        }
        stack.push_back(std::move(f));
    };

    push(pos, root_key);
    while (!stack.empty()) {
        Frame& f = stack.back();
        if (f.pos->terminal()) {
            memo_.insert(f.key, terminal_entry(cfg_.compute_nimbers));
            stack.pop_back();
            continue;
        }
        bool descended = false;
        while (f.next < f.opts.size()) {
            std::size_t i = f.next;
            if (memo_.find(f.opt_keys[i])) {
                ++f.next;
                continue;
            }
            // Keep f.next pointing at this child; it will be memoized when
            // its frame completes.
            push(f.opts[i], f.opt_keys[i]);
            descended = true;
            break;
        }
        if (descended) continue;

        // All options solved.
        MemoTable::Entry e;
        bool all_normal_n = true, all_misere_n = true;
        std::vector<Ordinal> child_nimbers;
        if (cfg_.compute_nimbers) child_nimbers.reserve(f.opts.size());
        for (const std::string& k : f.opt_keys) {
            const auto* c = memo_.find(k);
            if (c->outcome.normal != NP::N) all_normal_n = false;
            if (c->outcome.misere != NP::N) all_misere_n = false;
            if (cfg_.compute_nimbers) child_nimbers.push_back(*c->nimber);
        }
        e.outcome.normal = all_normal_n ? NP::P : NP::N;
        e.outcome.misere = all_misere_n ? NP::P : NP::N; // non-terminal here
        if (cfg_.compute_nimbers) e.nimber = mex(std::move(child_nimbers));
        memo_.insert(f.key, std::move(e));
        stack.pop_back();
    }
    return *memo_.find(root_key);
}

Ordinal Solver::nimber(const PositionPtr& pos) {
    if (!cfg_.compute_nimbers)
        throw std::logic_error("solver was configured without nimber computation");
    return *solve(pos).nimber;
}

PositionPtr Solver::winning_option(const PositionPtr& pos, Rule rule) {
    for (auto& opt : pos->options())
        if (solve(opt).outcome.under(rule) == NP::P) return opt;
    return nullptr;
}

void Solver::save_cache(std::ostream& out) const {
    std::map<std::string, const MemoTable::Entry*> sorted;
    for (const auto& [k, v] : memo_.entries()) sorted.emplace(k, &v);
    for (const auto& [k, v] : sorted) {
        out << k << '\t' << np_char(v->outcome.normal) << '\t' << np_char(v->outcome.misere)
            << '\t' << (v->nimber ? render(*v->nimber) : "-") << '\n';
    }
}

void Solver::load_cache(std::istream& in) {
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::istringstream ls(line);
        std::string key, normal, misere, nim;
        if (!std::getline(ls, key, '\t') || !std::getline(ls, normal, '\t') ||
            !std::getline(ls, misere, '\t') || !std::getline(ls, nim))
            throw parse_error("malformed cache line: " + line);
        if (normal.size() != 1 || misere.size() != 1)
            throw parse_error("malformed cache line: " + line);
        MemoTable::Entry e;
        e.outcome.normal = np_from_char(normal[0]);
        e.outcome.misere = np_from_char(misere[0]);
        if (nim != "-") e.nimber = parse_ordinal(nim);
        memo_.insert(key, std::move(e));
    }
}

std::string NimPile::key() const {
    std::string k = "*" + std::to_string(size_);
    if (!extra_.empty()) {
        k += "!{";
        for (std::size_t i = 0; i < extra_.size(); ++i) {
            if (i) k += ",";
            k += extra_[i]->key();
        }
        k += "}";
    }
    return k;
}

std::vector<PositionPtr> NimPile::options() const {
    std::vector<PositionPtr> out;
    out.reserve(size_ + extra_.size());
    for (std::uint64_t b = 0; b < size_; ++b) out.push_back(std::make_shared<NimPile>(b));
    for (const auto& e : extra_) out.push_back(e);
    return out;
}

SelectiveCompound::SelectiveCompound(std::vector<PositionPtr> components)
    : components_(std::move(components)) {
    if (components_.empty())
        throw std::invalid_argument("selective compound needs at least one component");
}

std::string SelectiveCompound::key() const {
    std::vector<std::string> keys;
    keys.reserve(components_.size());
    for (const auto& c : components_) keys.push_back(c->key());
    std::sort(keys.begin(), keys.end());
    std::string k = "v{";
    for (std::size_t i = 0; i < keys.size(); ++i) {
        if (i) k += ";";
        k += keys[i];
    }
    return k + "}";
}

bool SelectiveCompound::terminal() const {
    for (const auto& c : components_)
        if (!c->terminal()) return false;
    return true;
}

std::vector<PositionPtr> SelectiveCompound::options() const {
    std::vector<std::size_t> active;
    for (std::size_t i = 0; i < components_.size(); ++i)
        if (!components_[i]->terminal()) active.push_back(i);
    if (active.size() >= 20)
        throw resource_limit_error("selective compound too wide to enumerate");

    std::vector<std::vector<PositionPtr>> opts(active.size());
    for (std::size_t a = 0; a < active.size(); ++a)
        opts[a] = components_[active[a]]->options();

    std::vector<PositionPtr> out;
    // Subsets of the active components, in binary counting order.
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << active.size()); ++mask) {
        std::vector<std::size_t> chosen;
        for (std::size_t a = 0; a < active.size(); ++a)
            if (mask >> a & 1) chosen.push_back(a);
        // Odometer over the chosen components' options.
        std::vector<std::size_t> idx(chosen.size(), 0);
        for (;;) {
            std::vector<PositionPtr> parts = components_;
            for (std::size_t c = 0; c < chosen.size(); ++c)
                parts[active[chosen[c]]] = opts[chosen[c]][idx[c]];
            out.push_back(std::make_shared<SelectiveCompound>(std::move(parts)));
            std::size_t c = 0;
            while (c < chosen.size() && ++idx[c] == opts[chosen[c]].size()) idx[c++] = 0;
            if (c == chosen.size()) break;
        }
    }
    return out;
}

std::shared_ptr<const SelectiveCompound> compound(std::vector<PositionPtr> components) {
    return std::make_shared<SelectiveCompound>(std::move(components));
}

NP compound_normal_outcome(const std::vector<Outcome>& component_outcomes) {
    for (const Outcome& o : component_outcomes)
        if (o.normal != NP::P) return NP::N;
    return NP::P;
}

NP compound_misere_outcome(const std::vector<std::pair<bool, Outcome>>& components) {
    std::size_t non_terminal = 0;
    const Outcome* lone = nullptr;
    bool all_normal_p = true;
    for (const auto& [is_terminal, out] : components) {
        if (!is_terminal) {
            ++non_terminal;
            lone = &out;
        }
        if (out.normal != NP::P) all_normal_p = false;
    }
    if (non_terminal == 1) return lone->misere;
    if (non_terminal >= 2 && all_normal_p) return NP::P;
    return NP::N;
}

} // namespace algame
