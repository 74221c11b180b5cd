// Diagrammatic Reidemeister moves on Gauss diagrams, and bounded equivalence
// search over canonical codes.
//
// Purely virtual and mixed moves act trivially on Gauss diagrams (virtual
// crossings are not recorded), so the move set here is R1, R2, R3 only.
//
// Admissible configurations, derived from the Over->Under arrow convention:
//
//  R1  an isolated chord, i.e. one whose endpoints are adjacent on the
//      circle. Any direction, any sign (4 add variants per site).
//
//  R2  two chords a, b with the two Over endpoints adjacent, the two Under
//      endpoints adjacent, and sign(a) = -sign(b). Both relative orders
//      (parallel and nested chords) occur planarly.
//
//  R3  three chords u, v, w pairwise meeting in three disjoint adjacent
//      endpoint pairs (one pair per strand of the triangle). The roles must
//      define a consistent height order t > m > b of the three strands, and
//      with O1, O2, O3 = +-1 recording which chord comes first inside the
//      pairs of t, m, b, and s_ij the sign of the chord joining strands i, j
//      (1 = t, 2 = m, 3 = b), a planar triangle requires
//
//          O1*O2 = s13*s23   and   O1*O3 = s12*s23.
//
//      The move swaps the two tokens inside each of the three pairs, which
//      keeps both constraints and is its own inverse.
//
// These tables are the calibrated source of truth for the move set; the
// fingerprint-invariance property suite exercises them against the Sawollek
// invariant, which is sensitive to any inadmissible configuration.

#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "gauss.hpp"

namespace vknot {

class move_error : public std::runtime_error {
public:
    explicit move_error(const std::string& what) : std::runtime_error(what) {}
};

// Declaration order is the search tie-break order.
enum class MoveKind : std::uint8_t { R1Remove, R2Remove, R3, R2Add, R1Add };

inline const char* to_string(MoveKind k) {
    switch (k) {
        case MoveKind::R1Remove: return "R1-remove";
        case MoveKind::R2Remove: return "R2-remove";
        case MoveKind::R3: return "R3";
        case MoveKind::R2Add: return "R2-add";
        case MoveKind::R1Add: return "R1-add";
    }
    return "?";
}

struct MoveInstance {
    MoveKind kind = MoveKind::R1Remove;
    // Sites. Remove moves and R3 store the start position of each adjacent
    // token pair; add moves store gap indices (gap g sits before position g).
    int a = 0;
    int b = 0;
    int c = 0;
    // Add-move parameters.
    Role first_role = Role::Over; // R1Add: role of the first inserted token;
                                  // R2Add: role of the pair inserted at gap a
    int sign = 1;                 // R1Add: chord sign; R2Add: sign of chord inserted first
    bool parallel = true;         // R2Add: second pair in same order as first

    friend bool operator==(const MoveInstance&, const MoveInstance&) = default;

    std::string to_string() const {
        std::string s = vknot::to_string(kind);
        switch (kind) {
            case MoveKind::R1Remove: s += "@" + std::to_string(a); break;
            case MoveKind::R2Remove:
                s += "@" + std::to_string(a) + "," + std::to_string(b);
                break;
            case MoveKind::R3:
                s += "@" + std::to_string(a) + "," + std::to_string(b) + "," +
                     std::to_string(c);
                break;
            case MoveKind::R1Add:
                s += "@gap" + std::to_string(a) + (first_role == Role::Over ? ",O" : ",U") +
                     (sign > 0 ? "+" : "-");
                break;
            case MoveKind::R2Add:
                s += "@gap" + std::to_string(a) + ",gap" + std::to_string(b) +
                     (first_role == Role::Over ? ",O" : ",U") + (sign > 0 ? "+" : "-") +
                     (parallel ? ",par" : ",nest");
                break;
        }
        return s;
    }
};

namespace detail {

inline bool cyclic_adjacent(std::size_t p, std::size_t q, std::size_t L) {
    return (p + 1) % L == q;
}

// pa, pb, pc: start positions of the three adjacent pairs. Returns whether
// the configuration is an admissible R3 triangle.
inline bool r3_admissible(const GaussDiagram& d, int pa, int pb, int pc) {
    const std::size_t L = d.length();
    const int starts[3] = {pa, pb, pc};
    // 6 distinct positions
    std::vector<std::size_t> pos;
    for (int s : starts) {
        pos.push_back(std::size_t(s));
        pos.push_back((std::size_t(s) + 1) % L);
    }
    std::vector<std::size_t> sorted = pos;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return false;

    // Each pair must join two distinct chords; the three pairs must realize
    // the three 2-subsets of a set of three chords.
    int chord_of_pair[3][2];
    for (int i = 0; i < 3; ++i) {
        const Passage& t1 = d.at(pos[2 * i]);
        const Passage& t2 = d.at(pos[2 * i + 1]);
        if (t1.id == t2.id) return false;
        chord_of_pair[i][0] = t1.id;
        chord_of_pair[i][1] = t2.id;
    }
    std::vector<int> ids;
    for (auto& cp : chord_of_pair) {
        ids.push_back(cp[0]);
        ids.push_back(cp[1]);
    }
    std::sort(ids.begin(), ids.end());
    ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
    if (ids.size() != 3) return false;
    for (int id : ids) {
        int cnt = 0;
        for (auto& cp : chord_of_pair) cnt += (cp[0] == id) + (cp[1] == id);
        if (cnt != 2) return false;
    }

    // Height order from roles: the strand (pair) holding a chord's Over
    // endpoint lies above the strand holding its Under endpoint.
    // above[i][j] = strand of pair i above strand of pair j.
    bool above[3][3] = {};
    for (int i = 0; i < 3; ++i)
        for (int e = 0; e < 2; ++e) {
            const int id = chord_of_pair[i][e];
            // find the other pair containing this chord
            for (int j = 0; j < 3; ++j) {
                if (j == i) continue;
                if (chord_of_pair[j][0] == id || chord_of_pair[j][1] == id) {
                    const Passage& tok = d.at(pos[2 * i + e]);
                    if (tok.role == Role::Over) above[i][j] = true;
                }
            }
        }
    // total order: one strand above both, one below both
    int t = -1, bo = -1;
    for (int i = 0; i < 3; ++i) {
        int up = 0, down = 0;
        for (int j = 0; j < 3; ++j) {
            if (j == i) continue;
            if (above[i][j]) ++up;
            if (above[j][i]) ++down;
        }
        if (up + down != 2) return false; // both endpoints of some chord in one pair
        if (up == 2) t = i;
        if (down == 2) bo = i;
    }
    if (t < 0 || bo < 0 || t == bo) return false;
    const int m = 3 - t - bo;

    // chord ids joining the height-labelled strands
    auto chord_between = [&](int i, int j) {
        for (int e = 0; e < 2; ++e) {
            int id = chord_of_pair[i][e];
            if (chord_of_pair[j][0] == id || chord_of_pair[j][1] == id) return id;
        }
        return -1;
    };
    const int tm = chord_between(t, m), tb = chord_between(t, bo), mb = chord_between(m, bo);
    if (tm < 0 || tb < 0 || mb < 0) return false;

    auto first_of_pair_is = [&](int i, int id) {
        return chord_of_pair[i][0] == id ? 1 : -1;
    };
    const int O1 = first_of_pair_is(t, tm);
    const int O2 = first_of_pair_is(m, tm);
    const int O3 = first_of_pair_is(bo, tb);
    const int s12 = d.sign(tm), s13 = d.sign(tb), s23 = d.sign(mb);
    return O1 * O2 == s13 * s23 && O1 * O3 == s12 * s23;
}

// Renumbers ids densely by first appearance, keeping signs from src.
inline GaussDiagram rebuild(std::vector<Passage> word, const GaussDiagram& src) {
    std::map<int, int> relabel;
    std::vector<std::int8_t> signs;
    for (Passage& p : word) {
        auto [it, fresh] = relabel.emplace(p.id, int(relabel.size()) + 1);
        if (fresh) signs.push_back(std::int8_t(src.sign(p.id)));
        p.id = it->second;
    }
    return GaussDiagram(std::move(word), std::move(signs));
}

} // namespace detail

// Complete list of move instances whose application keeps the crossing count
// at most n + max_add, ordered deterministically (kind, then site).
inline std::vector<MoveInstance> applicable_moves(const GaussDiagram& d, int max_add) {
    if (max_add < 0) throw move_error("max_add must be >= 0");
    std::vector<MoveInstance> out;
    const std::size_t L = d.length();
    const int n = d.n();

    // R1-remove: chord with adjacent endpoints.
    if (L >= 2) {
        std::vector<bool> done(std::size_t(n) + 1, false);
        for (std::size_t p = 0; p < L; ++p) {
            const Passage& t1 = d.at(p);
            const Passage& t2 = d.at((p + 1) % L);
            if (t1.id == t2.id && !done[std::size_t(t1.id)]) {
                done[std::size_t(t1.id)] = true;
                out.push_back({MoveKind::R1Remove, int(p)});
            }
        }
    }

    // R2-remove: adjacent Over pair + adjacent Under pair, opposite signs.
    for (int a = 1; a <= n; ++a)
        for (int b = a + 1; b <= n; ++b) {
            if (d.sign(a) == d.sign(b)) continue;
            std::size_t oa = L, ob = L, ua = L, ub = L;
            for (std::size_t p = 0; p < L; ++p) {
                const Passage& t = d.at(p);
                if (t.id == a) (t.role == Role::Over ? oa : ua) = p;
                if (t.id == b) (t.role == Role::Over ? ob : ub) = p;
            }
            std::size_t ostart = L, ustart = L;
            if (detail::cyclic_adjacent(oa, ob, L)) ostart = oa;
            else if (detail::cyclic_adjacent(ob, oa, L)) ostart = ob;
            if (detail::cyclic_adjacent(ua, ub, L)) ustart = ua;
            else if (detail::cyclic_adjacent(ub, ua, L)) ustart = ub;
            if (ostart == L || ustart == L) continue;
            out.push_back({MoveKind::R2Remove, int(ostart), int(ustart)});
        }

    // R3 triangles.
    if (L >= 6) {
        std::vector<int> pair_starts;
        for (std::size_t p = 0; p < L; ++p)
            if (d.at(p).id != d.at((p + 1) % L).id) pair_starts.push_back(int(p));
        for (std::size_t i = 0; i < pair_starts.size(); ++i)
            for (std::size_t j = i + 1; j < pair_starts.size(); ++j)
                for (std::size_t k = j + 1; k < pair_starts.size(); ++k)
                    if (detail::r3_admissible(d, pair_starts[i], pair_starts[j],
                                              pair_starts[k]))
                        out.push_back(
                            {MoveKind::R3, pair_starts[i], pair_starts[j], pair_starts[k]});
    }

    // R2-add.
    if (max_add >= 2) {
        const int gaps = L == 0 ? 1 : int(L);
        for (int g1 = 0; g1 < gaps; ++g1)
            for (int g2 = g1; g2 < gaps; ++g2)
                for (Role fr : {Role::Over, Role::Under})
                    for (int sg : {1, -1})
                        for (bool par : {true, false}) {
                            out.push_back({MoveKind::R2Add, g1, g2, 0, fr, sg, par});
                        }
    }

    // R1-add.
    if (max_add >= 1) {
        const int gaps = L == 0 ? 1 : int(L);
        for (int g = 0; g < gaps; ++g)
            for (Role fr : {Role::Over, Role::Under})
                for (int sg : {1, -1}) out.push_back({MoveKind::R1Add, g, 0, 0, fr, sg});
    }

    std::stable_sort(out.begin(), out.end(), [](const MoveInstance& x, const MoveInstance& y) {
        if (x.kind != y.kind) return x.kind < y.kind;
        if (x.a != y.a) return x.a < y.a;
        if (x.b != y.b) return x.b < y.b;
        return x.c < y.c;
    });
    return out;
}

// Applies a move instance; throws move_error if the instance is stale or
// ill-sited for this diagram.
inline GaussDiagram apply(const GaussDiagram& d, const MoveInstance& m) {
    const std::size_t L = d.length();
    const auto word = d.word();

    switch (m.kind) {
        case MoveKind::R1Remove: {
            if (L < 2 || std::size_t(m.a) >= L) throw move_error("R1-remove: bad site");
            const std::size_t p = std::size_t(m.a), q = (p + 1) % L;
            if (d.at(p).id != d.at(q).id) throw move_error("R1-remove: endpoints not adjacent");
            std::vector<Passage> w;
            for (std::size_t i = 0; i < L; ++i)
                if (i != p && i != q) w.push_back(word[i]);
            return detail::rebuild(std::move(w), d);
        }
        case MoveKind::R2Remove: {
            if (std::size_t(m.a) >= L || std::size_t(m.b) >= L)
                throw move_error("R2-remove: bad site");
            const std::size_t po = std::size_t(m.a), po2 = (po + 1) % L;
            const std::size_t pu = std::size_t(m.b), pu2 = (pu + 1) % L;
            const Passage &o1 = d.at(po), &o2 = d.at(po2), &u1 = d.at(pu), &u2 = d.at(pu2);
            const bool shape = o1.role == Role::Over && o2.role == Role::Over &&
                               u1.role == Role::Under && u2.role == Role::Under &&
                               ((o1.id == u1.id && o2.id == u2.id) ||
                                (o1.id == u2.id && o2.id == u1.id)) &&
                               o1.id != o2.id && d.sign(o1.id) == -d.sign(o2.id);
            if (!shape) throw move_error("R2-remove: configuration does not match");
            std::vector<Passage> w;
            for (std::size_t i = 0; i < L; ++i)
                if (i != po && i != po2 && i != pu && i != pu2) w.push_back(word[i]);
            return detail::rebuild(std::move(w), d);
        }
        case MoveKind::R3: {
            if (!detail::r3_admissible(d, m.a, m.b, m.c))
                throw move_error("R3: configuration does not match");
            std::vector<Passage> w = word;
            for (int s : {m.a, m.b, m.c}) {
                const std::size_t p = std::size_t(s), q = (p + 1) % L;
                std::swap(w[p], w[q]);
            }
            return GaussDiagram(std::move(w), d.signs());
        }
        case MoveKind::R1Add: {
            const int gaps = L == 0 ? 1 : int(L);
            if (m.a < 0 || m.a >= gaps) throw move_error("R1-add: bad gap");
            std::vector<Passage> w = word;
            const int id = d.n() + 1;
            w.insert(w.begin() + m.a, {Passage{id, m.first_role}, Passage{id, toggled(m.first_role)}});
            std::vector<std::int8_t> signs(d.signs());
            signs.push_back(std::int8_t(m.sign));
            return GaussDiagram(std::move(w), std::move(signs));
        }
        case MoveKind::R2Add: {
            const int gaps = L == 0 ? 1 : int(L);
            if (m.a < 0 || m.a >= gaps || m.b < m.a || m.b >= gaps)
                throw move_error("R2-add: bad gaps");
            const int ia = d.n() + 1, ib = d.n() + 2;
            const Role r1 = m.first_role, r2 = toggled(m.first_role);
            // pair at gap a: (ia, ib) with role r1; pair at gap b: order per
            // the parallel flag, role r2.
            std::vector<Passage> first = {{ia, r1}, {ib, r1}};
            std::vector<Passage> second = m.parallel
                                              ? std::vector<Passage>{{ia, r2}, {ib, r2}}
                                              : std::vector<Passage>{{ib, r2}, {ia, r2}};
            std::vector<Passage> w = word;
            if (m.a == m.b) {
                std::vector<Passage> block = first;
                block.insert(block.end(), second.begin(), second.end());
                w.insert(w.begin() + m.a, block.begin(), block.end());
            } else {
                // insert at the larger gap first so indices stay valid
                w.insert(w.begin() + m.b, second.begin(), second.end());
                w.insert(w.begin() + m.a, first.begin(), first.end());
            }
            std::vector<std::int8_t> signs(d.signs());
            signs.push_back(std::int8_t(m.sign));
            signs.push_back(std::int8_t(-m.sign));
            return GaussDiagram(std::move(w), std::move(signs));
        }
    }
    throw move_error("unknown move kind");
}

struct SearchStats {
    long long nodes_expanded = 0;
    long long frontier_peak = 0; // peak size of the visited set
};

enum class SearchStatus : std::uint8_t { Equivalent, Unknown };

struct SearchVerdict {
    SearchStatus status = SearchStatus::Unknown;
    std::vector<MoveInstance> witness; // replays from source to target
    SearchStats stats;
};

// Iterative-deepening search for a move path from d1 to d2 with every
// intermediate diagram holding at most max_n crossings and at most `depth`
// moves. Equivalent only when a replayable path was found; Unknown never
// claims inequivalence. node_budget bounds total expansions across all
// deepening rounds.
inline SearchVerdict bounded_equivalent(const GaussDiagram& d1, const GaussDiagram& d2,
                                        int depth, int max_n,
                                        long long node_budget = 200000) {
    if (depth < 0) throw move_error("depth must be >= 0");
    if (max_n < std::max(d1.n(), d2.n()))
        throw move_error("max_n must be at least max(n1, n2)");

    SearchVerdict v;
    const CanonicalCode target = d2.canonical_code();
    if (d1.canonical_code() == target) {
        v.status = SearchStatus::Equivalent;
        return v;
    }

    std::vector<MoveInstance> path;
    bool budget_hit = false;

    for (int limit = 1; limit <= depth; ++limit) {
        std::map<std::string, int> visited; // canonical -> best remaining depth
        visited[d1.canonical_code().text] = limit;

        std::function<bool(const GaussDiagram&, int)> dfs = [&](const GaussDiagram& cur,
                                                                int remaining) -> bool {
            if (remaining == 0) return false;
            if (v.stats.nodes_expanded >= node_budget) {
                budget_hit = true;
                return false;
            }
            ++v.stats.nodes_expanded;
            for (const MoveInstance& mi : applicable_moves(cur, max_n - cur.n())) {
                GaussDiagram next = apply(cur, mi);
                const std::string code = next.canonical_code().text;
                path.push_back(mi);
                if (CanonicalCode{code} == target) return true;
                auto it = visited.find(code);
                if (it == visited.end() || it->second < remaining - 1) {
                    visited[code] = remaining - 1;
                    v.stats.frontier_peak =
                        std::max(v.stats.frontier_peak, (long long)visited.size());
                    if (dfs(next, remaining - 1)) return true;
                }
                path.pop_back();
                if (budget_hit) return false;
            }
            return false;
        };

        path.clear();
        if (dfs(d1, limit)) {
            v.status = SearchStatus::Equivalent;
            v.witness = path;
            return v;
        }
        if (budget_hit) break;
    }
    v.status = SearchStatus::Unknown;
    return v;
}

} // namespace vknot
