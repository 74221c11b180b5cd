// Knots in special Seifert form relative to a fiber surface, recorded purely
// combinatorially: a surface signature (metadata only) plus, for each
// crossing ball, which of the two passes is the overcrossing arc and the
// local crossing sign. Geometry is out of scope; the record trusts the
// supplied flags. Each ball hosts exactly two passes of the knot.
//
// File format (one record per file):
//   surface g=<int> b=<int>
//   traversal: <id>[o|u]<sign> <id>[o|u]<sign> ...
// Lines beginning with '#' are comments. Example:
//   surface g=1 b=1
//   traversal: 1o+ 2u- 1u+ 2o-

#pragma once

#include <cctype>
#include <cstdint>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "gauss.hpp"

namespace vknot {

class ssf_parse_error : public std::runtime_error {
public:
    explicit ssf_parse_error(const std::string& what) : std::runtime_error(what) {}
};

// Fiber surface data. Orientation marker is fixed globally (blue side up),
// so only genus and boundary count are recorded. Metadata: the conversion to
// a Gauss diagram forgets the surface.
struct SurfaceSignature {
    int genus = 0;
    int boundary = 1; // fiber surfaces of links have boundary

    friend bool operator==(const SurfaceSignature&, const SurfaceSignature&) = default;
};

struct SSFCrossing {
    int id = 0;
    bool over_first = true; // the first pass in traversal order is the overcrossing arc
    std::int8_t sign = 1;

    friend bool operator==(const SSFCrossing&, const SSFCrossing&) = default;
};

class SSFDiagram {
public:
    SSFDiagram() = default;

    SSFDiagram(SurfaceSignature surface, std::vector<SSFCrossing> crossings,
               std::vector<int> traversal)
        : surface_(surface), crossings_(std::move(crossings)), traversal_(std::move(traversal)) {
        validate();
    }

    const SurfaceSignature& surface() const { return surface_; }
    const std::vector<SSFCrossing>& crossings() const { return crossings_; }
    const std::vector<int>& traversal() const { return traversal_; }

    friend bool operator==(const SSFDiagram&, const SSFDiagram&) = default;

private:
    SurfaceSignature surface_;
    std::vector<SSFCrossing> crossings_; // sorted by id, ids dense 1..n
    std::vector<int> traversal_;         // each id exactly twice

    void validate() const {
        if (surface_.genus < 0) throw ssf_parse_error("genus must be >= 0");
        if (surface_.boundary < 1) throw ssf_parse_error("boundary count must be >= 1");
        const std::size_t n = crossings_.size();
        if (traversal_.size() != 2 * n)
            throw ssf_parse_error("traversal must visit each crossing exactly twice");
        std::vector<int> seen(n, 0);
        for (int id : traversal_) {
            if (id < 1 || std::size_t(id) > n)
                throw ssf_parse_error("traversal id out of range: " + std::to_string(id));
            if (++seen[std::size_t(id) - 1] > 2)
                throw ssf_parse_error("crossing " + std::to_string(id) +
                                      " visited more than twice");
        }
        for (std::size_t k = 0; k < n; ++k) {
            if (crossings_[k].id != int(k) + 1)
                throw ssf_parse_error("crossing ids must be dense 1..n in order");
            if (seen[k] != 2)
                throw ssf_parse_error("crossing " + std::to_string(k + 1) +
                                      " visited fewer than twice");
        }
    }
};

// Gauss diagram of the knot diagram the SSF defines on the fiber: the word
// follows the traversal, roles come from over_first, signs are copied.
inline GaussDiagram to_gauss(const SSFDiagram& s) {
    const auto& tr = s.traversal();
    std::vector<Passage> word;
    word.reserve(tr.size());
    std::vector<bool> seen(s.crossings().size(), false);
    std::vector<std::int8_t> signs(s.crossings().size());
    for (const auto& c : s.crossings()) signs[std::size_t(c.id) - 1] = c.sign;
    for (int id : tr) {
        const bool first = !seen[std::size_t(id) - 1];
        seen[std::size_t(id) - 1] = true;
        const bool over = first == s.crossings()[std::size_t(id) - 1].over_first;
        word.push_back({id, over ? Role::Over : Role::Under});
    }
    return GaussDiagram(std::move(word), std::move(signs));
}

// SSF of the reversed knot relative to the reversed-orientation fiber:
// traversal runs backwards and every overcrossing arc becomes an
// undercrossing arc, signs unchanged. Because reversal also exchanges which
// pass comes first, the stored over_first flags are unchanged; the roles of
// the individual passes all toggle. Satisfies
//   to_gauss(reverse_ssf(S)) == ssf_reverse_transform(to_gauss(S)).
inline SSFDiagram reverse_ssf(const SSFDiagram& s) {
    std::vector<int> tr(s.traversal().rbegin(), s.traversal().rend());
    return SSFDiagram(s.surface(), s.crossings(), std::move(tr));
}

// Inverse of to_gauss up to isomorphism: wraps a Gauss diagram as an SSF
// record with the given surface metadata, relabeling crossings by first
// appearance so the record serializes canonically. Witnesses that to_gauss
// is onto.
inline SSFDiagram ssf_from_gauss(const GaussDiagram& d, SurfaceSignature surface) {
    std::vector<int> relabel(std::size_t(d.n()), 0);
    std::vector<SSFCrossing> crossings;
    std::vector<int> traversal;
    traversal.reserve(d.length());
    int next = 1;
    for (const Passage& p : d.word()) {
        int& lab = relabel[std::size_t(p.id) - 1];
        if (lab == 0) {
            lab = next++;
            crossings.push_back({lab, p.role == Role::Over, std::int8_t(d.sign(p.id))});
        }
        traversal.push_back(lab);
    }
    return SSFDiagram(surface, std::move(crossings), std::move(traversal));
}

// Parses the SSF file format. Accepts arbitrary positive ids and renumbers
// them densely by first appearance in the traversal.
inline SSFDiagram parse_ssf(const std::string& text) {
    SurfaceSignature surface;
    bool have_surface = false;
    std::vector<int> traversal_raw;
    std::vector<char> roles; // 'o' / 'u' per passage
    std::vector<std::int8_t> tok_signs;

    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        std::size_t i = 0;
        while (i < line.size() && std::isspace((unsigned char)line[i])) ++i;
        if (i >= line.size() || line[i] == '#') continue;
        std::istringstream ls(line.substr(i));
        std::string head;
        ls >> head;
        if (head == "surface") {
            std::string kv;
            while (ls >> kv) {
                if (kv.rfind("g=", 0) == 0) surface.genus = std::stoi(kv.substr(2));
                else if (kv.rfind("b=", 0) == 0) surface.boundary = std::stoi(kv.substr(2));
                else throw ssf_parse_error("unknown surface field: " + kv);
            }
            have_surface = true;
        } else if (head == "traversal:") {
            std::string tok;
            while (ls >> tok) {
                std::size_t k = 0;
                while (k < tok.size() && std::isdigit((unsigned char)tok[k])) ++k;
                if (k == 0 || k + 2 != tok.size() || (tok[k] != 'o' && tok[k] != 'u') ||
                    (tok[k + 1] != '+' && tok[k + 1] != '-'))
                    throw ssf_parse_error("bad traversal token: " + tok);
                traversal_raw.push_back(std::stoi(tok.substr(0, k)));
                roles.push_back(tok[k]);
                tok_signs.push_back(tok[k + 1] == '+' ? 1 : -1);
            }
        } else {
            throw ssf_parse_error("unknown record line: " + head);
        }
    }
    if (!have_surface) throw ssf_parse_error("missing surface header");

    // renumber by first appearance; derive over_first, check consistency
    std::map<int, int> relabel;
    std::vector<SSFCrossing> crossings;
    std::vector<int> traversal;
    std::vector<char> first_role;
    for (std::size_t t = 0; t < traversal_raw.size(); ++t) {
        auto [it, fresh] = relabel.emplace(traversal_raw[t], int(relabel.size()) + 1);
        const int id = it->second;
        if (fresh) {
            crossings.push_back({id, roles[t] == 'o', tok_signs[t]});
            first_role.push_back(roles[t]);
        } else {
            const std::size_t k = std::size_t(id) - 1;
            if (crossings[k].sign != tok_signs[t])
                throw ssf_parse_error("sign disagrees between the two passes of crossing " +
                                      std::to_string(traversal_raw[t]));
            if (first_role[k] == roles[t])
                throw ssf_parse_error("crossing " + std::to_string(traversal_raw[t]) +
                                      " must have one over pass and one under pass");
        }
        traversal.push_back(id);
    }
    return SSFDiagram(surface, std::move(crossings), std::move(traversal));
}

inline std::string serialize_ssf(const SSFDiagram& s) {
    std::string out = "surface g=" + std::to_string(s.surface().genus) +
                      " b=" + std::to_string(s.surface().boundary) + "\ntraversal:";
    std::vector<bool> seen(s.crossings().size(), false);
    for (int id : s.traversal()) {
        const auto& c = s.crossings()[std::size_t(id) - 1];
        const bool first = !seen[std::size_t(id) - 1];
        seen[std::size_t(id) - 1] = true;
        const bool over = first == c.over_first;
        out += " " + std::to_string(id) + (over ? "o" : "u") + (c.sign > 0 ? "+" : "-");
    }
    out += "\n";
    return out;
}

} // namespace vknot
