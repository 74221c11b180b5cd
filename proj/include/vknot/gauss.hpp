// Gauss diagrams of virtual knots: a signed, directed chord diagram on an
// oriented circle, encoded as a cyclic word of passage tokens.
//
// Arrow convention, fixed globally: the arrow of a chord points from the
// Over passage to the Under passage. Every downstream convention (move
// tables, invariant matrices) is calibrated against this choice.
//
// Textual grammar: (("O"|"U") <positive integer> ("+"|"-"))*, e.g.
// "O1+U2+O3+U1+O2+U3+". The sign is written on both tokens of a crossing
// and must agree. The empty string is the unknot diagram.

#pragma once

#include <algorithm>
#include <cctype>
#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace vknot {

enum class Role : std::uint8_t { Over, Under };

inline Role toggled(Role r) { return r == Role::Over ? Role::Under : Role::Over; }

struct Passage {
    int id = 0; // crossing id, 1-based
    Role role = Role::Over;

    friend bool operator==(const Passage&, const Passage&) = default;
};

class gauss_parse_error : public std::runtime_error {
public:
    gauss_parse_error(const std::string& what, int token_index)
        : std::runtime_error("token " + std::to_string(token_index) + ": " + what),
          token_index(token_index) {}
    int token_index;
};

// Canonical textual form of a diagram; see GaussDiagram::canonical_code().
struct CanonicalCode {
    std::string text;

    friend auto operator<=>(const CanonicalCode&, const CanonicalCode&) = default;
};

class GaussDiagram {
public:
    GaussDiagram() = default;

    // Builds and validates a diagram. Crossing ids must be exactly 1..n with
    // each id appearing once as Over and once as Under; signs are per id.
    GaussDiagram(std::vector<Passage> word, std::vector<std::int8_t> signs, int basepoint = 0)
        : word_(std::move(word)), signs_(std::move(signs)), basepoint_(basepoint) {
        validate();
    }

    int n() const { return int(signs_.size()); }
    std::size_t length() const { return word_.size(); }
    const std::vector<Passage>& word() const { return word_; }
    const Passage& at(std::size_t i) const { return word_.at(i); }
    int sign(int id) const { return signs_.at(std::size_t(id) - 1); }
    const std::vector<std::int8_t>& signs() const { return signs_; }
    int basepoint() const { return basepoint_; }

    long long writhe() const {
        long long w = 0;
        for (auto s : signs_) w += s;
        return w;
    }

    // Position of the other endpoint of the chord passing through position i.
    std::size_t mate(std::size_t i) const {
        const Passage& p = word_.at(i);
        for (std::size_t j = 0; j < word_.size(); ++j)
            if (j != i && word_[j].id == p.id) return j;
        throw std::logic_error("mate: invalid diagram");
    }

    std::string raw_code() const {
        std::string out;
        for (const Passage& p : word_) {
            out += (p.role == Role::Over) ? 'O' : 'U';
            out += std::to_string(p.id);
            out += sign(p.id) > 0 ? '+' : '-';
        }
        return out;
    }

    // Canonical code: over all rotations of the cyclic word, relabel crossing
    // ids by first appearance and take the lexicographically least string.
    // Cheap isomorphism key; two diagrams are isomorphic (equal up to rotation
    // and relabeling) iff their canonical codes agree.
    CanonicalCode canonical_code() const {
        const std::size_t L = word_.size();
        if (L == 0) return CanonicalCode{""};
        std::string best;
        for (std::size_t rot = 0; rot < L; ++rot) {
            std::string cand = rotated_relabeled_code(rot);
            if (best.empty() || cand < best) best = std::move(cand);
        }
        return CanonicalCode{best};
    }

    friend bool operator==(const GaussDiagram& a, const GaussDiagram& b) {
        return a.word_ == b.word_ && a.signs_ == b.signs_;
    }

private:
    std::vector<Passage> word_;
    std::vector<std::int8_t> signs_; // index id-1 -> +1 / -1
    int basepoint_ = 0;

    void validate() const {
        const std::size_t n = signs_.size();
        if (word_.size() != 2 * n)
            throw gauss_parse_error("word length must be twice the crossing count", 0);
        std::vector<int> over(n, 0), under(n, 0);
        for (std::size_t i = 0; i < word_.size(); ++i) {
            const Passage& p = word_[i];
            if (p.id < 1 || std::size_t(p.id) > n)
                throw gauss_parse_error("crossing id out of range", int(i));
            (p.role == Role::Over ? over : under)[std::size_t(p.id) - 1]++;
        }
        for (std::size_t id = 0; id < n; ++id) {
            if (over[id] != 1 || under[id] != 1)
                throw gauss_parse_error("crossing " + std::to_string(id + 1) +
                                            " must appear once as Over and once as Under",
                                        0);
            if (signs_[id] != 1 && signs_[id] != -1)
                throw gauss_parse_error("sign of crossing " + std::to_string(id + 1) +
                                            " must be +1 or -1",
                                        0);
        }
        if (!word_.empty() && (basepoint_ < 0 || std::size_t(basepoint_) >= word_.size()))
            throw gauss_parse_error("basepoint out of range", 0);
    }

    std::string rotated_relabeled_code(std::size_t rot) const {
        const std::size_t L = word_.size();
        std::vector<int> relabel(signs_.size(), 0);
        int next = 1;
        std::string out;
        for (std::size_t k = 0; k < L; ++k) {
            const Passage& p = word_[(rot + k) % L];
            int& lab = relabel[std::size_t(p.id) - 1];
            if (lab == 0) lab = next++;
            out += (p.role == Role::Over) ? 'O' : 'U';
            out += std::to_string(lab);
            out += sign(p.id) > 0 ? '+' : '-';
        }
        return out;
    }
};

// Parses the passage grammar. Ids may be any distinct positive integers in
// the input; they are renumbered densely by first appearance. Errors name
// the offending token index.
inline GaussDiagram parse_gauss_code(const std::string& text) {
    struct RawTok {
        Role role;
        long id;
        int sign;
    };
    std::vector<RawTok> toks;
    std::size_t i = 0;
    int tok_index = 0;
    while (i < text.size()) {
        if (std::isspace((unsigned char)text[i])) {
            ++i;
            continue;
        }
        char rc = text[i];
        if (rc != 'O' && rc != 'U')
            throw gauss_parse_error("expected 'O' or 'U'", tok_index);
        ++i;
        std::size_t d0 = i;
        while (i < text.size() && std::isdigit((unsigned char)text[i])) ++i;
        if (i == d0) throw gauss_parse_error("expected crossing id", tok_index);
        long id = std::stol(text.substr(d0, i - d0));
        if (id <= 0) throw gauss_parse_error("crossing id must be positive", tok_index);
        if (i >= text.size() || (text[i] != '+' && text[i] != '-'))
            throw gauss_parse_error("expected sign '+' or '-'", tok_index);
        int sg = text[i] == '+' ? 1 : -1;
        ++i;
        toks.push_back({rc == 'O' ? Role::Over : Role::Under, id, sg});
        ++tok_index;
    }

    // Renumber by first appearance and check pairing constraints.
    std::vector<long> seen; // seen[k] = original id of new id k+1
    std::vector<Passage> word;
    std::vector<std::int8_t> signs;
    std::vector<int> over_count, under_count;
    word.reserve(toks.size());
    for (std::size_t t = 0; t < toks.size(); ++t) {
        const RawTok& tk = toks[t];
        std::size_t k = 0;
        for (; k < seen.size(); ++k)
            if (seen[k] == tk.id) break;
        if (k == seen.size()) {
            seen.push_back(tk.id);
            signs.push_back(std::int8_t(tk.sign));
            over_count.push_back(0);
            under_count.push_back(0);
        } else if (signs[k] != tk.sign) {
            throw gauss_parse_error("sign disagrees with earlier token of the same crossing",
                                    int(t));
        }
        int& cnt = (tk.role == Role::Over) ? over_count[k] : under_count[k];
        if (++cnt > 1)
            throw gauss_parse_error(std::string("crossing appears twice as ") +
                                        (tk.role == Role::Over ? "Over" : "Under"),
                                    int(t));
        word.push_back(Passage{int(k) + 1, tk.role});
    }
    for (std::size_t k = 0; k < seen.size(); ++k)
        if (over_count[k] != 1 || under_count[k] != 1)
            throw gauss_parse_error("crossing " + std::to_string(seen[k]) +
                                        " must appear exactly twice",
                                    int(toks.size()) - 1);
    return GaussDiagram(std::move(word), std::move(signs));
}

inline CanonicalCode serialize(const GaussDiagram& d) { return d.canonical_code(); }

// Gauss diagram of the reversed knot: cyclic order inverted about the
// basepoint, roles and signs unchanged.
inline GaussDiagram reverse(const GaussDiagram& d) {
    const std::size_t L = d.length();
    std::vector<Passage> w(L);
    for (std::size_t i = 0; i < L; ++i) w[i] = d.at((L - i) % L);
    return GaussDiagram(std::move(w), d.signs(), d.basepoint());
}

// The arrow-reversal map: every passage role toggles (Over <-> Under);
// signs and word order unchanged.
inline GaussDiagram flip_arrows(const GaussDiagram& d) {
    std::vector<Passage> w(d.word());
    for (Passage& p : w) p.role = toggled(p.role);
    return GaussDiagram(std::move(w), d.signs(), d.basepoint());
}

// Orientation reversal combined with the arrow flip. This is the transform
// a reversed knot in special Seifert form induces on its Gauss diagram:
// traversal runs backwards and every overcrossing arc becomes undercrossing,
// with local crossing signs unchanged.
inline GaussDiagram ssf_reverse_transform(const GaussDiagram& d) {
    return reverse(flip_arrows(d));
}

} // namespace vknot
