#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "oplin/errors.hpp"

namespace oplin {

/// Lattice steps; declaration order is the canonical enumeration order.
enum class Step : std::uint8_t { U, D, H, HH };

inline constexpr unsigned step_dx(Step s) { return s == Step::HH ? 2u : 1u; }
inline constexpr int step_dy(Step s) { return s == Step::U ? 1 : (s == Step::D ? -1 : 0); }

/// HH renders as 'X'.
inline char step_letter(Step s) {
    switch (s) {
        case Step::U: return 'U';
        case Step::D: return 'D';
        case Step::H: return 'H';
        case Step::HH: return 'X';
    }
    return '?';
}

/// A (generalized) Motzkin path: start level and steps. It never dips below
/// level 0; vertices are derived.
class Path {
public:
    struct Vertex {
        unsigned x;
        unsigned y;
        friend bool operator==(const Vertex&, const Vertex&) = default;
    };
    /// An edge and the vertex it starts from.
    struct Edge {
        Step step;
        unsigned x;
        unsigned y;
    };

    Path() = default;
    Path(unsigned start_level, std::vector<Step> steps) : start_(start_level), steps_(std::move(steps)) {
        if (!stays_nonnegative(start_, steps_))
            throw InputError("path " + to_string() + " dips below level 0");
    }

    static bool stays_nonnegative(unsigned start, const std::vector<Step>& steps) {
        long level = start;
        for (Step s : steps) {
            level += step_dy(s);
            if (level < 0) return false;
        }
        return true;
    }

    /// "3:DUH"; 'X' for HH.
    static Path parse(std::string_view text) {
        auto colon = text.find(':');
        if (colon == std::string_view::npos || colon == 0) throw InputError("path text needs 'level:steps'");
        unsigned start = 0;
        for (char c : text.substr(0, colon)) {
            if (c < '0' || c > '9') throw InputError("bad path start level in '" + std::string(text) + "'");
            start = start * 10 + static_cast<unsigned>(c - '0');
        }
        std::vector<Step> steps;
        for (char c : text.substr(colon + 1)) {
            switch (c) {
                case 'U': steps.push_back(Step::U); break;
                case 'D': steps.push_back(Step::D); break;
                case 'H': steps.push_back(Step::H); break;
                case 'X': steps.push_back(Step::HH); break;
                default: throw InputError("bad step letter in '" + std::string(text) + "'");
            }
        }
        return Path(start, std::move(steps));
    }

    unsigned start_level() const { return start_; }
    const std::vector<Step>& steps() const { return steps_; }
    std::size_t edge_count() const { return steps_.size(); }

    unsigned end_level() const {
        long level = start_;
        for (Step s : steps_) level += step_dy(s);
        return static_cast<unsigned>(level);
    }
    /// Total horizontal extent k.
    unsigned length() const {
        unsigned k = 0;
        for (Step s : steps_) k += step_dx(s);
        return k;
    }
    bool is_generalized() const { return std::find(steps_.begin(), steps_.end(), Step::HH) != steps_.end(); }

    std::vector<Vertex> vertices() const {
        std::vector<Vertex> v{{0, start_}};
        for (Step s : steps_) {
            const Vertex& last = v.back();
            v.push_back({last.x + step_dx(s), static_cast<unsigned>(static_cast<int>(last.y) + step_dy(s))});
        }
        return v;
    }
    std::vector<Edge> edges() const {
        std::vector<Edge> e;
        e.reserve(steps_.size());
        unsigned x = 0;
        long y = start_;
        for (Step s : steps_) {
            e.push_back({s, x, static_cast<unsigned>(y)});
            x += step_dx(s);
            y += step_dy(s);
        }
        return e;
    }

    std::string to_string() const {
        std::string s = std::to_string(start_) + ":";
        for (Step st : steps_) s += step_letter(st);
        return s;
    }

    friend bool operator==(const Path&, const Path&) = default;
    friend std::strong_ordering operator<=>(const Path& a, const Path& b) {
        if (auto c = a.start_ <=> b.start_; c != 0) return c;
        return std::lexicographical_compare_three_way(a.steps_.begin(), a.steps_.end(), b.steps_.begin(),
                                                      b.steps_.end());
    }
    friend std::ostream& operator<<(std::ostream& os, const Path& p) { return os << p.to_string(); }

private:
    unsigned start_ = 0;
    std::vector<Step> steps_;
};

/// All paths from (0,m) to (k,n) at or above level 0, lexicographic with
/// U < D < H < HH. HH steps only when allow_hh.
inline std::vector<Path> enumerate_paths(unsigned m, unsigned n, unsigned k, bool allow_hh) {
    std::vector<Path> out;
    std::vector<Step> steps;
    auto reachable = [&](long level, unsigned x) {
        long gap = level - static_cast<long>(n);
        return level >= 0 && x <= k && (gap < 0 ? -gap : gap) <= static_cast<long>(k - x);
    };
    auto dfs = [&](auto&& self, long level, unsigned x) -> void {
        if (x == k) {
            if (level == static_cast<long>(n)) out.emplace_back(m, steps);
            return;
        }
        for (Step s : {Step::U, Step::D, Step::H, Step::HH}) {
            if (s == Step::HH && !allow_hh) continue;
            long nl = level + step_dy(s);
            unsigned nx = x + step_dx(s);
            if (!reachable(nl, nx)) continue;
            steps.push_back(s);
            self(self, nl, nx);
            steps.pop_back();
        }
    };
    if (reachable(m, 0)) dfs(dfs, m, 0);
    return out;
}

/// Disjoint monominos {i} and dominos {i,i+1} on {1..k}.
class Paving {
public:
    struct Block {
        unsigned first;  // 1-based
        unsigned size;   // 1 or 2
        friend bool operator==(const Block&, const Block&) = default;
    };

    Paving() = default;
    Paving(unsigned ground_size, std::vector<Block> blocks) : k_(ground_size), blocks_(std::move(blocks)) {
        std::sort(blocks_.begin(), blocks_.end(), [](const Block& a, const Block& b) { return a.first < b.first; });
        unsigned next_free = 1;
        for (const auto& b : blocks_) {
            if (b.size != 1 && b.size != 2) throw InputError("paving blocks must have size 1 or 2");
            if (b.first < next_free || b.first + b.size - 1 > k_)
                throw InputError("paving blocks overlap or leave {1.." + std::to_string(k_) + "}");
            next_free = b.first + b.size;
        }
    }

    unsigned ground_size() const { return k_; }
    const std::vector<Block>& blocks() const { return blocks_; }

    /// 0 = isolated, 1 = monomino, 2 = domino start, 3 = domino end; index 1..k.
    std::vector<std::uint8_t> cover() const {
        std::vector<std::uint8_t> c(k_ + 1, 0);
        for (const auto& b : blocks_) {
            if (b.size == 1) {
                c[b.first] = 1;
            } else {
                c[b.first] = 2;
                c[b.first + 1] = 3;
            }
        }
        return c;
    }
    std::vector<unsigned> isolated_points() const {
        auto c = cover();
        std::vector<unsigned> out;
        for (unsigned i = 1; i <= k_; ++i)
            if (c[i] == 0) out.push_back(i);
        return out;
    }
    unsigned isolated_count() const {
        unsigned covered = 0;
        for (const auto& b : blocks_) covered += b.size;
        return k_ - covered;
    }

    /// "[{2,3},{5}] on 1..9"
    std::string to_string() const {
        std::string s = "[";
        for (std::size_t t = 0; t < blocks_.size(); ++t) {
            if (t) s += ",";
            s += "{" + std::to_string(blocks_[t].first);
            if (blocks_[t].size == 2) s += "," + std::to_string(blocks_[t].first + 1);
            s += "}";
        }
        return s + "] on 1.." + std::to_string(k_);
    }

    friend bool operator==(const Paving&, const Paving&) = default;

    /// Canonical order: lexicographic on the sorted block list, each block
    /// compared as the list of its elements.
    friend bool operator<(const Paving& a, const Paving& b) {
        auto elems = [](const Block& blk) {
            return blk.size == 1 ? std::vector<unsigned>{blk.first} : std::vector<unsigned>{blk.first, blk.first + 1};
        };
        std::size_t i = 0;
        for (; i < a.blocks_.size() && i < b.blocks_.size(); ++i) {
            auto ea = elems(a.blocks_[i]);
            auto eb = elems(b.blocks_[i]);
            if (ea != eb) return ea < eb;
        }
        if (a.blocks_.size() != b.blocks_.size()) return a.blocks_.size() < b.blocks_.size();
        return a.k_ < b.k_;
    }

private:
    unsigned k_ = 0;
    std::vector<Block> blocks_;
};

inline std::vector<Paving> enumerate_pavings(unsigned k) {
    std::vector<Paving> out;
    std::vector<Paving::Block> blocks;
    auto rec = [&](auto&& self, unsigned i) -> void {
        if (i > k) {
            out.emplace_back(k, blocks);
            return;
        }
        self(self, i + 1);  // isolated
        blocks.push_back({i, 1});
        self(self, i + 1);
        blocks.pop_back();
        if (i + 1 <= k) {
            blocks.push_back({i, 2});
            self(self, i + 2);
            blocks.pop_back();
        }
    };
    rec(rec, 1);
    std::sort(out.begin(), out.end());
    return out;
}

namespace detail {

inline void check_merge_sizes(const Path& p, const Paving& pi) {
    if (p.is_generalized()) throw InputError("merge expects a plain Motzkin path, got " + p.to_string());
    if (pi.isolated_count() != p.length())
        throw InputError("paving " + pi.to_string() + " has " + std::to_string(pi.isolated_count()) +
                         " isolated points but path " + p.to_string() + " has length " + std::to_string(p.length()));
}

/// Walks 1..k: isolated points consume the next step of p, monominos emit H,
/// dominos emit `domino` (DU or HH).
inline std::vector<Step> merged_steps(const Path& p, const Paving& pi, bool dominos_as_hh) {
    check_merge_sizes(p, pi);
    auto cover = pi.cover();
    std::vector<Step> out;
    std::size_t next = 0;
    for (unsigned i = 1; i <= pi.ground_size(); ++i) {
        switch (cover[i]) {
            case 0: out.push_back(p.steps()[next++]); break;
            case 1: out.push_back(Step::H); break;
            case 2:
                if (dominos_as_hh) {
                    out.push_back(Step::HH);
                } else {
                    out.push_back(Step::D);
                    out.push_back(Step::U);
                }
                break;
            default: break;  // second cell of a domino
        }
    }
    return out;
}

}  // namespace detail

/// True when inserting the paving's DU pairs keeps the path at or above 0.
inline bool merge_is_admissible(const Path& p, const Paving& pi) {
    return Path::stays_nonnegative(p.start_level(), detail::merged_steps(p, pi, false));
}

/// Monominos become H steps and dominos DU pairs at their positions.
/// Throws InputError when sizes disagree or the result would dip below 0
/// (a domino placed while the path sits at level 0).
inline Path merge_pair(const Path& p, const Paving& pi) {
    return Path(p.start_level(), detail::merged_steps(p, pi, false));
}

/// As merge_pair, but dominos become single HH steps; always admissible.
inline Path merge_pair_generalized(const Path& p, const Paving& pi) {
    return Path(p.start_level(), detail::merged_steps(p, pi, true));
}

/// Every (P, pi) with merge_pair(P, pi) == merged. Each H of `merged` comes
/// from P or from a monomino; each adjacent DU from P or from a domino.
inline std::vector<std::pair<Path, Paving>> merge_preimages(const Path& merged) {
    if (merged.is_generalized()) throw InputError("merge_preimages expects a plain Motzkin path");
    const auto& s = merged.steps();
    // choice points: H positions and starts of DU pairs, in step order
    struct Choice {
        std::size_t pos;
        bool domino;
    };
    std::vector<Choice> choices;
    for (std::size_t t = 0; t < s.size(); ++t) {
        if (s[t] == Step::H) choices.push_back({t, false});
        if (s[t] == Step::D && t + 1 < s.size() && s[t + 1] == Step::U) choices.push_back({t, true});
    }
    std::vector<std::pair<Path, Paving>> out;
    const std::size_t combos = std::size_t{1} << choices.size();
    for (std::size_t mask = 0; mask < combos; ++mask) {
        std::vector<bool> inserted(s.size(), false);
        std::vector<Paving::Block> blocks;
        for (std::size_t c = 0; c < choices.size(); ++c) {
            if (!(mask >> c & 1)) continue;
            const auto& ch = choices[c];
            inserted[ch.pos] = true;
            if (ch.domino) inserted[ch.pos + 1] = true;
            blocks.push_back({static_cast<unsigned>(ch.pos + 1), ch.domino ? 2u : 1u});
        }
        std::vector<Step> kept;
        for (std::size_t t = 0; t < s.size(); ++t)
            if (!inserted[t]) kept.push_back(s[t]);
        out.emplace_back(Path(merged.start_level(), std::move(kept)),
                         Paving(static_cast<unsigned>(s.size()), std::move(blocks)));
    }
    return out;
}

}  // namespace oplin
