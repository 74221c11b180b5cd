// Link-level certificates built on the fingerprint: non-invertibility of
// J u K from the asymmetry of the associated virtual knot, non-splitness
// from its non-classicality, and virtual knot spectra with multiset
// comparison.
//
// All certificates are one-sided. A NonInvertible or NonSplit verdict is
// backed by an exact polynomial inequality; Inconclusive never claims the
// opposite property.

#pragma once

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "gauss.hpp"
#include "invariants.hpp"

namespace vknot {

class pipeline_error : public std::runtime_error {
public:
    explicit pipeline_error(const std::string& what) : std::runtime_error(what) {}
};

enum class Verdict : std::uint8_t { NonInvertible, NonSplit, Inconclusive };

inline const char* to_string(Verdict v) {
    switch (v) {
        case Verdict::NonInvertible: return "NonInvertible";
        case Verdict::NonSplit: return "NonSplit";
        case Verdict::Inconclusive: return "Inconclusive";
    }
    return "?";
}

struct Certificate {
    Verdict verdict = Verdict::Inconclusive;
    Fingerprint evidence_primary;   // fingerprint of the input diagram
    Fingerprint evidence_secondary; // fingerprint of the compared transform (when used)
    std::string narrative;
};

// Non-invertibility certificate for a link J u K presented by the Gauss
// diagram D of its associated virtual knot. If the link were invertible, the
// virtual knots of D and of reverse(flip_arrows(D)) would be equivalent, so
// any exact difference of their reduced Sawollek polynomials certifies
// non-invertibility.
inline Certificate noninvertibility_certificate(const GaussDiagram& d) {
    Certificate c;
    c.evidence_primary = fingerprint(d);
    c.evidence_secondary = fingerprint(ssf_reverse_transform(d));
    if (!same_invariants(c.evidence_primary, c.evidence_secondary)) {
        c.verdict = Verdict::NonInvertible;
        c.narrative =
            "The reduced Sawollek polynomial of the associated virtual knot differs from "
            "that of its reversed arrow-flip transform; an invertible link would force the "
            "two virtual knots to be equivalent, so the link is not invertible.";
    } else {
        c.verdict = Verdict::Inconclusive;
        c.narrative =
            "The reduced Sawollek polynomials of the diagram and its reversed arrow-flip "
            "transform agree, so this invariant does not obstruct invertibility.";
        if (c.evidence_primary.reduced_sawollek.is_zero()) {
            c.narrative +=
                " Both values vanish, as they do on every classical diagram; detecting "
                "asymmetry of classical associated knots needs a classical-sensitive "
                "fingerprint plugged into this pipeline.";
        }
    }
    return c;
}

// Non-splitness certificate: if the link were split, the associated virtual
// knot would be equivalent to the classical knot K, but a nonzero reduced
// Sawollek polynomial certifies it is not classical at all.
inline Certificate nonsplit_certificate(const GaussDiagram& d) {
    Certificate c;
    c.evidence_primary = fingerprint(d);
    c.evidence_secondary = c.evidence_primary;
    if (c.evidence_primary.nonclassical_certificate) {
        c.verdict = Verdict::NonSplit;
        c.narrative =
            "The reduced Sawollek polynomial of the associated virtual knot is nonzero, so "
            "the virtual knot is non-classical and cannot equal the classical knot K; a "
            "split link would force that equality, so the link is non-split.";
    } else {
        c.verdict = Verdict::Inconclusive;
        c.narrative =
            "The reduced Sawollek polynomial vanishes, which is consistent with a classical "
            "(hence possibly split-compatible) associated virtual knot; no conclusion.";
    }
    return c;
}

// Multiset of fingerprints of the lifts of a knot through an index-n cover.
struct Spectrum {
    int index = 0;
    std::vector<Fingerprint> lifts; // sorted by reduced polynomial text

    friend bool operator==(const Spectrum& a, const Spectrum& b) {
        if (a.index != b.index) return false;
        if (a.lifts.size() != b.lifts.size()) return false;
        for (std::size_t i = 0; i < a.lifts.size(); ++i)
            if (!same_invariants(a.lifts[i], b.lifts[i])) return false;
        return true;
    }
};

inline Spectrum spectrum(const std::vector<GaussDiagram>& lifts) {
    if (lifts.empty()) throw pipeline_error("spectrum needs at least one lift (index >= 1)");
    Spectrum s;
    s.index = int(lifts.size());
    s.lifts.reserve(lifts.size());
    for (const GaussDiagram& d : lifts) s.lifts.push_back(fingerprint(d));
    std::sort(s.lifts.begin(), s.lifts.end(), [](const Fingerprint& a, const Fingerprint& b) {
        return a.reduced_sawollek.to_string() < b.reduced_sawollek.to_string();
    });
    return s;
}

// Multiset equality of same-index spectra; throws on index mismatch.
inline bool spectra_equal(const Spectrum& a, const Spectrum& b) {
    if (a.index != b.index)
        throw pipeline_error("spectra have different covering indices: " +
                             std::to_string(a.index) + " vs " + std::to_string(b.index));
    return a == b;
}

} // namespace vknot
