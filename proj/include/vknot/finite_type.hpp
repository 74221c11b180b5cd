// Singular Gauss diagrams and the resolution map e_r into formal integer
// sums of diagrams, plus filtration generator enumeration and exact integer
// span membership.
//
// A singular chord is recorded by two endpoint tokens "S<id>", one of which
// carries a direction mark "S<id>>": the positive resolution's arrow departs
// from the marked endpoint. Resolution convention: the positive resolution
// turns the chord classical with the marked endpoint as the Over passage and
// sign +1; the negative resolution is the crossing change of that (arrow
// flipped, sign -1).

#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "gauss.hpp"

namespace vknot {

class singular_error : public std::runtime_error {
public:
    explicit singular_error(const std::string& what) : std::runtime_error(what) {}
};

struct SToken {
    bool singular = false;
    int id = 0;             // classical and singular chords number separately
    Role role = Role::Over; // classical tokens only
    bool tail = false;      // singular tokens: positive-resolution arrow departs here

    friend bool operator==(const SToken&, const SToken&) = default;
};

class SingularGaussDiagram {
public:
    SingularGaussDiagram() = default;

    SingularGaussDiagram(std::vector<SToken> word, std::vector<std::int8_t> classical_signs)
        : word_(std::move(word)), signs_(std::move(classical_signs)) {
        validate();
    }

    // Purely classical diagrams embed with no singular chords.
    explicit SingularGaussDiagram(const GaussDiagram& d) : signs_(d.signs()) {
        word_.reserve(d.length());
        for (const Passage& p : d.word()) word_.push_back({false, p.id, p.role, false});
        validate();
    }

    const std::vector<SToken>& word() const { return word_; }
    int classical_count() const { return int(signs_.size()); }
    int singular_count() const { return singular_count_; }
    int classical_sign(int id) const { return signs_.at(std::size_t(id) - 1); }
    const std::vector<std::int8_t>& classical_signs() const { return signs_; }

    // Requires no singular chords left.
    GaussDiagram to_classical() const {
        if (singular_count_ != 0)
            throw singular_error("diagram still has singular chords");
        std::vector<Passage> w;
        w.reserve(word_.size());
        for (const SToken& t : word_) w.push_back({t.id, t.role});
        return GaussDiagram(std::move(w), signs_);
    }

    std::string raw_code() const {
        std::string out;
        for (const SToken& t : word_) {
            if (t.singular) {
                out += "S" + std::to_string(t.id);
                if (t.tail) out += ">";
            } else {
                out += (t.role == Role::Over) ? 'O' : 'U';
                out += std::to_string(t.id);
                out += classical_sign(t.id) > 0 ? '+' : '-';
            }
        }
        return out;
    }

    // Least string over all rotations, with classical and singular ids each
    // relabeled by first appearance.
    std::string canonical_code() const {
        const std::size_t L = word_.size();
        if (L == 0) return "";
        std::string best;
        for (std::size_t rot = 0; rot < L; ++rot) {
            std::vector<int> rc(signs_.size(), 0), rs(std::size_t(singular_count_), 0);
            int nc = 1, ns = 1;
            std::string out;
            for (std::size_t k = 0; k < L; ++k) {
                const SToken& t = word_[(rot + k) % L];
                if (t.singular) {
                    int& lab = rs[std::size_t(t.id) - 1];
                    if (lab == 0) lab = ns++;
                    out += "S" + std::to_string(lab);
                    if (t.tail) out += ">";
                } else {
                    int& lab = rc[std::size_t(t.id) - 1];
                    if (lab == 0) lab = nc++;
                    out += (t.role == Role::Over) ? 'O' : 'U';
                    out += std::to_string(lab);
                    out += classical_sign(t.id) > 0 ? '+' : '-';
                }
            }
            if (best.empty() || out < best) best = std::move(out);
        }
        return best;
    }

    friend bool operator==(const SingularGaussDiagram& a, const SingularGaussDiagram& b) {
        return a.word_ == b.word_ && a.signs_ == b.signs_;
    }

private:
    std::vector<SToken> word_;
    std::vector<std::int8_t> signs_;
    int singular_count_ = 0;

    void validate() {
        std::vector<int> over(signs_.size(), 0), under(signs_.size(), 0);
        int max_sid = 0;
        for (const SToken& t : word_)
            if (t.singular) max_sid = std::max(max_sid, t.id);
        std::vector<int> scount(std::size_t(max_sid), 0), stails(std::size_t(max_sid), 0);
        for (const SToken& t : word_) {
            if (t.singular) {
                if (t.id < 1) throw singular_error("singular id out of range");
                scount[std::size_t(t.id) - 1]++;
                if (t.tail) stails[std::size_t(t.id) - 1]++;
            } else {
                if (t.id < 1 || std::size_t(t.id) > signs_.size())
                    throw singular_error("classical id out of range");
                (t.role == Role::Over ? over : under)[std::size_t(t.id) - 1]++;
            }
        }
        for (std::size_t k = 0; k < signs_.size(); ++k)
            if (over[k] != 1 || under[k] != 1)
                throw singular_error("classical chord " + std::to_string(k + 1) +
                                     " must appear once as Over and once as Under");
        for (int k = 0; k < max_sid; ++k) {
            if (scount[std::size_t(k)] != 2)
                throw singular_error("singular chord " + std::to_string(k + 1) +
                                     " must have exactly two endpoints");
            if (stails[std::size_t(k)] != 1)
                throw singular_error("singular chord " + std::to_string(k + 1) +
                                     " must carry exactly one direction mark");
        }
        singular_count_ = max_sid;
    }
};

// Extended grammar: classical tokens as in Gauss codes, singular tokens
// "S<id>" with "S<id>>" on the marked endpoint.
inline SingularGaussDiagram parse_singular_code(const std::string& text) {
    std::vector<SToken> toks;
    std::vector<long> craw, sraw;               // original ids in appearance order
    std::vector<std::int8_t> csigns;
    std::size_t i = 0;
    int tok_index = 0;
    auto relabel = [](std::vector<long>& seen, long id) {
        for (std::size_t k = 0; k < seen.size(); ++k)
            if (seen[k] == id) return int(k) + 1;
        seen.push_back(id);
        return int(seen.size());
    };
    while (i < text.size()) {
        if (std::isspace((unsigned char)text[i])) {
            ++i;
            continue;
        }
        const char rc = text[i];
        if (rc != 'O' && rc != 'U' && rc != 'S')
            throw gauss_parse_error("expected 'O', 'U' or 'S'", tok_index);
        ++i;
        std::size_t d0 = i;
        while (i < text.size() && std::isdigit((unsigned char)text[i])) ++i;
        if (i == d0) throw gauss_parse_error("expected chord id", tok_index);
        const long id = std::stol(text.substr(d0, i - d0));
        if (id <= 0) throw gauss_parse_error("chord id must be positive", tok_index);
        if (rc == 'S') {
            bool tail = false;
            if (i < text.size() && text[i] == '>') {
                tail = true;
                ++i;
            }
            toks.push_back({true, relabel(sraw, id), Role::Over, tail});
        } else {
            if (i >= text.size() || (text[i] != '+' && text[i] != '-'))
                throw gauss_parse_error("expected sign '+' or '-'", tok_index);
            const std::int8_t sg = text[i] == '+' ? 1 : -1;
            ++i;
            const int nid = relabel(craw, id);
            if (std::size_t(nid) > csigns.size()) csigns.push_back(sg);
            else if (csigns[std::size_t(nid) - 1] != sg)
                throw gauss_parse_error("sign disagrees with earlier token of the same crossing",
                                        tok_index);
            toks.push_back({false, nid, rc == 'O' ? Role::Over : Role::Under, false});
        }
        ++tok_index;
    }
    return SingularGaussDiagram(std::move(toks), std::move(csigns));
}

// Resolves singular chord sid with sign eps. The positive resolution takes
// the stored reference direction with sign +1; the negative one is its
// crossing change (direction flipped, sign -1).
inline SingularGaussDiagram resolve_one(const SingularGaussDiagram& d, int sid, int eps) {
    if (sid < 1 || sid > d.singular_count())
        throw singular_error("no singular chord with id " + std::to_string(sid));
    if (eps != 1 && eps != -1) throw singular_error("resolution sign must be +1 or -1");
    const int new_id = d.classical_count() + 1;
    std::vector<SToken> w;
    w.reserve(d.word().size());
    for (const SToken& t : d.word()) {
        if (t.singular && t.id == sid) {
            const bool over = (eps == 1) == t.tail;
            w.push_back({false, new_id, over ? Role::Over : Role::Under, false});
        } else if (t.singular && t.id > sid) {
            SToken s = t;
            s.id -= 1;
            w.push_back(s);
        } else {
            w.push_back(t);
        }
    }
    std::vector<std::int8_t> signs = d.classical_signs();
    signs.push_back(std::int8_t(eps));
    return SingularGaussDiagram(std::move(w), std::move(signs));
}

// Integer linear combination of diagrams, keyed by canonical code.
class FormalSum {
public:
    FormalSum() = default;

    static FormalSum single(const std::string& canonical_code, long long coeff = 1) {
        FormalSum s;
        s.add(canonical_code, coeff);
        return s;
    }

    void add(const std::string& code, long long coeff) {
        if (coeff == 0) return;
        auto [it, fresh] = terms_.emplace(code, coeff);
        if (!fresh) {
            it->second += coeff;
            if (it->second == 0) terms_.erase(it);
        }
    }

    const std::map<std::string, long long>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t support_size() const { return terms_.size(); }

    FormalSum& operator+=(const FormalSum& o) {
        for (const auto& [k, c] : o.terms_) add(k, c);
        return *this;
    }
    FormalSum& operator-=(const FormalSum& o) {
        for (const auto& [k, c] : o.terms_) add(k, -c);
        return *this;
    }
    friend FormalSum operator+(FormalSum a, const FormalSum& b) { return a += b; }
    friend FormalSum operator-(FormalSum a, const FormalSum& b) { return a -= b; }
    friend bool operator==(const FormalSum&, const FormalSum&) = default;

    std::string to_string() const {
        if (terms_.empty()) return "0";
        std::string out;
        for (const auto& [k, c] : terms_) {
            if (!out.empty()) out += c < 0 ? " - " : " + ";
            else if (c < 0) out += "-";
            const long long a = std::llabs(c);
            if (a != 1) out += std::to_string(a) + "*";
            out += "[" + k + "]";
        }
        return out;
    }

private:
    std::map<std::string, long long> terms_;
};

// Formal tagging with a fixed link label; models disjoint union with a fixed
// link at the level of free abelian groups.
inline FormalSum tag_with_link(const FormalSum& s, const std::string& label) {
    FormalSum out;
    for (const auto& [k, c] : s.terms()) out.add(label + " | " + k, c);
    return out;
}

// All 2^r resolutions in binary order (bit i set <=> eps_i = -1 for the i-th
// singular chord), each with coefficient prod eps_i. Exposed separately from
// e_r so the pre-merge coefficient pattern (+,-,-,+,...) is testable.
inline std::vector<std::pair<int, GaussDiagram>> e_r_terms(const SingularGaussDiagram& d) {
    const int r = d.singular_count();
    std::vector<std::pair<int, GaussDiagram>> out;
    out.reserve(std::size_t(1) << r);
    for (unsigned m = 0; m < (1u << r); ++m) {
        SingularGaussDiagram cur = d;
        int coeff = 1;
        // chord ids shift down as chords resolve; chord i is id 1 at step i
        for (int i = 0; i < r; ++i) {
            const int eps = (m >> i & 1) ? -1 : 1;
            coeff *= eps;
            cur = resolve_one(cur, 1, eps);
        }
        out.emplace_back(coeff, cur.to_classical());
    }
    return out;
}

// e_r: the signed sum over all resolutions, canonicalized and merged.
inline FormalSum e_r(const SingularGaussDiagram& d) {
    FormalSum s;
    for (const auto& [coeff, dia] : e_r_terms(d)) s.add(dia.canonical_code().text, coeff);
    return s;
}

struct GeneratorList {
    std::vector<FormalSum> generators;
    bool truncated = false;
};

// e_r images of all singular diagrams with exactly r singular chords and at
// most n_max - r classical chords, one per canonical form, deduplicated as
// formal sums (zero sums dropped). max_diagrams bounds the enumeration; when
// exceeded the list is returned truncated.
inline GeneratorList filtration_generators(int n_max, int r, long long max_diagrams = 2000000) {
    if (r < 0 || n_max < r) throw singular_error("need 0 <= r <= n_max");
    GeneratorList out;
    std::map<std::string, bool> seen_diagram;
    std::map<std::string, bool> seen_sum;
    long long budget = max_diagrams;

    for (int m = r; m <= n_max && !out.truncated; ++m) {
        const int k = m - r; // classical chords
        const int L = 2 * m;
        if (m == 0) continue; // no singular chords means no generator
        std::vector<std::pair<int, int>> chords;
        std::function<void(unsigned)> rec = [&](unsigned used) {
            if (out.truncated) return;
            if (int(chords.size()) == m) {
                // chords[0..r) singular, chords[r..m) classical; all subsets
                // arise via enumeration order of pairings plus masks below.
                std::vector<int> pick(std::size_t(m), 0);
                std::fill(pick.begin(), pick.begin() + r, 1);
                std::sort(pick.begin(), pick.end());
                do {
                    for (unsigned tails = 0; tails < (1u << r); ++tails)
                        for (unsigned roles = 0; roles < (1u << k); ++roles)
                            for (unsigned sgs = 0; sgs < (1u << k); ++sgs) {
                                if (--budget < 0) {
                                    out.truncated = true;
                                    return;
                                }
                                std::vector<SToken> word(static_cast<std::size_t>(L));
                                std::vector<std::int8_t> signs(static_cast<std::size_t>(k));
                                int si = 0, ci = 0;
                                for (int c = 0; c < m; ++c) {
                                    const auto [p1, p2] = chords[std::size_t(c)];
                                    if (pick[std::size_t(c)]) {
                                        const bool t1 = tails >> si & 1;
                                        word[std::size_t(p1)] = {true, si + 1, Role::Over, t1};
                                        word[std::size_t(p2)] = {true, si + 1, Role::Over, !t1};
                                        ++si;
                                    } else {
                                        const bool of = roles >> ci & 1;
                                        word[std::size_t(p1)] = {
                                            false, ci + 1, of ? Role::Over : Role::Under, false};
                                        word[std::size_t(p2)] = {
                                            false, ci + 1, of ? Role::Under : Role::Over, false};
                                        signs[std::size_t(ci)] = (sgs >> ci & 1) ? 1 : -1;
                                        ++ci;
                                    }
                                }
                                SingularGaussDiagram d(word, signs);
                                if (!seen_diagram.emplace(d.canonical_code(), true).second)
                                    continue;
                                FormalSum g = e_r(d);
                                if (g.is_zero()) continue;
                                if (seen_sum.emplace(g.to_string(), true).second)
                                    out.generators.push_back(std::move(g));
                            }
                } while (std::next_permutation(pick.begin(), pick.end()) && !out.truncated);
                return;
            }
            int a = 0;
            while (used >> a & 1) ++a;
            for (int b = a + 1; b < L; ++b) {
                if (used >> b & 1) continue;
                chords.push_back({a, b});
                rec(used | 1u << a | 1u << b);
                chords.pop_back();
                if (out.truncated) return;
            }
        };
        rec(0);
    }
    return out;
}

// Exact integer span membership: is target an integer linear combination of
// the basis sums? Column operations over Z (lattice-preserving) eliminate
// row by row; divisibility failures certify non-membership.
inline bool in_integer_span(const std::vector<FormalSum>& basis, const FormalSum& target) {
    // collect row index
    std::map<std::string, std::size_t> row_of;
    auto touch = [&](const FormalSum& s) {
        for (const auto& [k, c] : s.terms())
            row_of.emplace(k, row_of.size());
    };
    for (const auto& b : basis) touch(b);
    touch(target);
    const std::size_t rows = row_of.size();

    std::vector<std::vector<mpz_class>> cols(basis.size(), std::vector<mpz_class>(rows, 0));
    for (std::size_t j = 0; j < basis.size(); ++j)
        for (const auto& [k, c] : basis[j].terms()) cols[j][row_of[k]] = long(c);
    std::vector<mpz_class> t(rows, 0);
    for (const auto& [k, c] : target.terms()) t[row_of[k]] = long(c);

    std::vector<bool> used(cols.size(), false);
    for (std::size_t i = 0; i < rows; ++i) {
        // gather active columns with nonzero entry at row i
        std::vector<std::size_t> act;
        for (std::size_t j = 0; j < cols.size(); ++j)
            if (!used[j] && cols[j][i] != 0) act.push_back(j);
        if (act.empty()) {
            if (t[i] != 0) return false;
            continue;
        }
        // column Euclid until one nonzero entry remains at row i
        while (act.size() > 1) {
            std::size_t jmin = act[0];
            for (std::size_t j : act)
                if (abs(cols[j][i]) < abs(cols[jmin][i])) jmin = j;
            std::vector<std::size_t> next = {jmin};
            for (std::size_t j : act) {
                if (j == jmin) continue;
                mpz_class q = cols[j][i] / cols[jmin][i];
                for (std::size_t rr = 0; rr < rows; ++rr) cols[j][rr] -= q * cols[jmin][rr];
                if (cols[j][i] != 0) next.push_back(j);
            }
            act = std::move(next);
        }
        const std::size_t piv = act[0];
        used[piv] = true;
        const mpz_class& g = cols[piv][i];
        if (t[i] % g != 0) return false;
        const mpz_class q = t[i] / g;
        if (q != 0)
            for (std::size_t rr = 0; rr < rows; ++rr) t[rr] -= q * cols[piv][rr];
    }
    for (const auto& v : t)
        if (v != 0) return false;
    return true;
}

} // namespace vknot
