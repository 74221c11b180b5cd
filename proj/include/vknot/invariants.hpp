// The Sawollek polynomial (two-variable generalized Alexander polynomial) of
// a Gauss diagram, its reduced form, and the Fingerprint bundle used by the
// certificate pipelines.
//
// Construction. Each classical crossing becomes a pair of linear relations
// between the labels carried by the four strand ends meeting it. Writing O/U
// for the over/under strand of a crossing and primes for outgoing ends,
//
//   positive crossing:  U' = (1-x) O - y U        O' = -x y^-1 O
//   negative crossing:  U' = (1-x^-1) O - y^-1 U  O' = -x^-1 y O
//
// (the negative block is the inverse of the positive one). Stacking the
// per-crossing blocks into a 2n x 2n matrix M, and recording in a 0/1 matrix
// P how each outgoing end feeds the next incoming end along the knot, the
// invariant is
//
//   Z(D) = (-1)^w(D) * det(M - P),          w(D) = writhe.
//
// Z is invariant under the diagrammatic Reidemeister moves up to units
// (+- x^a y^b), vanishes identically on classical diagrams, and is divisible
// by (x - 1). The reduced polynomial divides that universal factor out and
// normalizes to the canonical unit representative, giving a value that is
// bitwise stable across move sequences. The 0-crossing diagram maps to 0.
//
// This block convention, the port permutation, the (-1)^w sign and the
// universal factor were calibrated jointly against a corpus of classical
// diagrams (which must give 0) and frozen; the conformance tests pin them.

#pragma once

#include <cstdlib>
#include <string>

#include "gauss.hpp"
#include "laurent.hpp"

namespace vknot {

class calibration_error : public std::runtime_error {
public:
    explicit calibration_error(const std::string& what) : std::runtime_error(what) {}
};

// Entry of the 2x2 crossing block: coefficient of the in_role label in the
// equation for the out_role outgoing label.
inline LaurentPoly2 crossing_block_entry(int sign, Role out_role, Role in_role) {
    using P = LaurentPoly2;
    const int e = sign > 0 ? 1 : -1;
    if (out_role == Role::Under && in_role == Role::Under)
        return P::monomial(-1, 0, e); // -y^e
    if (out_role == Role::Under && in_role == Role::Over)
        return P::constant(1) - P::x(e); // 1 - x^e
    if (out_role == Role::Over && in_role == Role::Over)
        return P::monomial(-1, e, -e); // -x^e y^-e
    return P::zero(); // over-out never depends on under-in
}

// Builds M - P. Row 2(c-1)+r is the equation of crossing c's outgoing
// Under (r=0) / Over (r=1) end; column 2(c-1)+r is the matching incoming end.
inline LaurentMatrix sawollek_matrix(const GaussDiagram& d) {
    const int n = d.n();
    LaurentMatrix a(std::size_t(2) * n);
    const auto row = [](int id, Role r) {
        return std::size_t(2) * (id - 1) + (r == Role::Over ? 1 : 0);
    };
    for (int c = 1; c <= n; ++c)
        for (Role out : {Role::Under, Role::Over})
            for (Role in : {Role::Under, Role::Over})
                a.at(row(c, out), row(c, in)) += crossing_block_entry(d.sign(c), out, in);
    const std::size_t L = d.length();
    for (std::size_t k = 0; k < L; ++k) {
        const Passage& from = d.at(k);
        const Passage& to = d.at((k + 1) % L);
        a.at(row(from.id, from.role), row(to.id, to.role)) -= LaurentPoly2::constant(1);
    }
    return a;
}

// Exact (-1)^w det(M - P); not unit-normalized. Drifts by unit monomials
// under Reidemeister moves, which is why callers normally want sawollek().
inline LaurentPoly2 sawollek_raw(const GaussDiagram& d) {
    if (d.n() == 0) return LaurentPoly2::zero();
    LaurentPoly2 z = sawollek_matrix(d).det();
    return (d.writhe() % 2 != 0) ? -z : z;
}

// The universal factor dividing Z of every diagram (in this block
// convention): x - 1.
inline const LaurentPoly2& sawollek_universal_factor() {
    static const LaurentPoly2 f = LaurentPoly2::x() - LaurentPoly2::constant(1);
    return f;
}

// Unit-normalized Sawollek polynomial; equal for diagrams related by any
// move sequence, exactly 0 on classical diagrams.
inline LaurentPoly2 sawollek(const GaussDiagram& d) {
    return sawollek_raw(d).normalize_unit();
}

// Z divided by the universal factor, then unit-normalized.
inline LaurentPoly2 reduced_sawollek(const GaussDiagram& d) {
    LaurentPoly2 z = sawollek_raw(d);
    if (z.is_zero()) return z;
    LaurentPoly2 q;
    try {
        q = LaurentPoly2::div_exact(z, sawollek_universal_factor());
    } catch (const laurent_error&) {
        throw calibration_error("Sawollek value not divisible by the universal factor; "
                                "crossing-block calibration is broken");
    }
    return q.normalize_unit();
}

// Invariant bundle used to compare virtual knots. Only reduced_sawollek is a
// move invariant; writhe and n describe the diagram at hand and are reported
// for context. nonclassical_certificate == true proves the diagram does not
// represent a classical knot (one-sided: false proves nothing).
struct Fingerprint {
    LaurentPoly2 reduced_sawollek;
    long long writhe = 0;
    int n = 0;
    bool nonclassical_certificate = false;

    // Equality of the invariant content (not of the diagram statistics).
    friend bool same_invariants(const Fingerprint& a, const Fingerprint& b) {
        return a.reduced_sawollek == b.reduced_sawollek;
    }
};

inline Fingerprint fingerprint(const GaussDiagram& d) {
    Fingerprint f;
    f.reduced_sawollek = reduced_sawollek(d);
    f.writhe = d.writhe();
    f.n = d.n();
    f.nonclassical_certificate = !f.reduced_sawollek.is_zero();
    return f;
}

} // namespace vknot
