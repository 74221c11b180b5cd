// Test support: seeded random generators for diagrams and move sequences.

#pragma once

#include <numeric>
#include <random>
#include <vector>

#include <vknot/finite_type.hpp>
#include <vknot/gauss.hpp>
#include <vknot/moves.hpp>

namespace vknot::testsupport {

inline GaussDiagram random_diagram(std::mt19937& rng, int n) {
    std::vector<int> pos(2 * std::size_t(n));
    std::iota(pos.begin(), pos.end(), 0);
    std::shuffle(pos.begin(), pos.end(), rng);
    std::vector<Passage> word(2 * std::size_t(n));
    std::vector<std::int8_t> signs(static_cast<std::size_t>(n));
    for (int c = 0; c < n; ++c) {
        const bool over_first = rng() & 1;
        word[std::size_t(pos[2 * std::size_t(c)])] = {c + 1,
                                                      over_first ? Role::Over : Role::Under};
        word[std::size_t(pos[2 * std::size_t(c) + 1])] = {c + 1,
                                                          over_first ? Role::Under : Role::Over};
        signs[std::size_t(c)] = (rng() & 1) ? 1 : -1;
    }
    return GaussDiagram(std::move(word), std::move(signs));
}

// Applies up to `steps` random legal moves keeping the crossing count at most
// max_n; returns the walked diagram (possibly after fewer moves if no move
// applies, which cannot happen for max_n > n).
inline GaussDiagram random_move_walk(std::mt19937& rng, const GaussDiagram& start, int steps,
                                     int max_n) {
    GaussDiagram cur = start;
    for (int s = 0; s < steps; ++s) {
        auto moves = applicable_moves(cur, std::max(0, max_n - cur.n()));
        if (moves.empty()) break;
        cur = apply(cur, moves[rng() % moves.size()]);
    }
    return cur;
}

// Random singular diagram with r singular chords and k classical chords.
inline SingularGaussDiagram random_singular_diagram(std::mt19937& rng, int r, int k) {
    const int m = r + k;
    std::vector<int> pos(2 * std::size_t(m));
    std::iota(pos.begin(), pos.end(), 0);
    std::shuffle(pos.begin(), pos.end(), rng);
    std::vector<SToken> word(2 * std::size_t(m));
    std::vector<std::int8_t> signs(static_cast<std::size_t>(k));
    for (int c = 0; c < r; ++c) {
        const bool tail_first = rng() & 1;
        word[std::size_t(pos[2 * std::size_t(c)])] = {true, c + 1, Role::Over, tail_first};
        word[std::size_t(pos[2 * std::size_t(c) + 1])] = {true, c + 1, Role::Over, !tail_first};
    }
    for (int c = 0; c < k; ++c) {
        const bool over_first = rng() & 1;
        const std::size_t a = std::size_t(pos[2 * std::size_t(r + c)]);
        const std::size_t b = std::size_t(pos[2 * std::size_t(r + c) + 1]);
        word[a] = {false, c + 1, over_first ? Role::Over : Role::Under, false};
        word[b] = {false, c + 1, over_first ? Role::Under : Role::Over, false};
        signs[std::size_t(c)] = (rng() & 1) ? 1 : -1;
    }
    return SingularGaussDiagram(std::move(word), std::move(signs));
}

} // namespace vknot::testsupport
