// Exact arithmetic for integer-coefficient Laurent polynomials in the two
// variables x and y, plus determinants of square matrices over that ring.
//
// Coefficients are arbitrary-precision integers (GMP); exponents are bounded
// machine integers with overflow checks, since they only grow additively.
// Terms are kept in graded-lexicographic order on the exponent pair (i, j),
// which fixes the textual form emitted by to_string().

#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include <gmpxx.h>

namespace vknot {

class laurent_error : public std::runtime_error {
public:
    explicit laurent_error(const std::string& what) : std::runtime_error(what) {}
};

// Exponent pair (i, j) for x^i * y^j, ordered graded-lexicographically.
struct Exp2 {
    std::int32_t x = 0;
    std::int32_t y = 0;

    friend bool operator==(const Exp2& a, const Exp2& b) { return a.x == b.x && a.y == b.y; }
    friend bool operator<(const Exp2& a, const Exp2& b) {
        const std::int64_t da = std::int64_t(a.x) + a.y;
        const std::int64_t db = std::int64_t(b.x) + b.y;
        if (da != db) return da < db;
        if (a.x != b.x) return a.x < b.x;
        return a.y < b.y;
    }

    Exp2 operator+(const Exp2& o) const {
        const std::int64_t nx = std::int64_t(x) + o.x;
        const std::int64_t ny = std::int64_t(y) + o.y;
        if (nx > INT32_MAX || nx < INT32_MIN || ny > INT32_MAX || ny < INT32_MIN)
            throw laurent_error("exponent overflow");
        return Exp2{std::int32_t(nx), std::int32_t(ny)};
    }
    Exp2 operator-(const Exp2& o) const { return *this + Exp2{std::int32_t(-o.x), std::int32_t(-o.y)}; }
};

class LaurentPoly2 {
public:
    LaurentPoly2() = default;

    static LaurentPoly2 zero() { return LaurentPoly2{}; }
    static LaurentPoly2 constant(long c) { return monomial(c, 0, 0); }

    static LaurentPoly2 monomial(mpz_class c, std::int32_t ex, std::int32_t ey) {
        LaurentPoly2 p;
        if (c != 0) p.terms_.emplace(Exp2{ex, ey}, std::move(c));
        return p;
    }
    static LaurentPoly2 x(std::int32_t e = 1) { return monomial(1, e, 0); }
    static LaurentPoly2 y(std::int32_t e = 1) { return monomial(1, 0, e); }

    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    const std::map<Exp2, mpz_class>& terms() const { return terms_; }

    // Single term with coefficient +1 or -1.
    bool is_unit_monomial() const {
        return terms_.size() == 1 &&
               (terms_.begin()->second == 1 || terms_.begin()->second == -1);
    }

    friend bool operator==(const LaurentPoly2& a, const LaurentPoly2& b) {
        return a.terms_ == b.terms_;
    }
    friend bool operator!=(const LaurentPoly2& a, const LaurentPoly2& b) { return !(a == b); }

    LaurentPoly2& operator+=(const LaurentPoly2& o) {
        for (const auto& [e, c] : o.terms_) add_term(e, c);
        return *this;
    }
    LaurentPoly2& operator-=(const LaurentPoly2& o) {
        for (const auto& [e, c] : o.terms_) {
            mpz_class neg = -c;
            add_term(e, neg);
        }
        return *this;
    }
    friend LaurentPoly2 operator+(LaurentPoly2 a, const LaurentPoly2& b) { return a += b; }
    friend LaurentPoly2 operator-(LaurentPoly2 a, const LaurentPoly2& b) { return a -= b; }
    LaurentPoly2 operator-() const {
        LaurentPoly2 r;
        for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
        return r;
    }

    friend LaurentPoly2 operator*(const LaurentPoly2& a, const LaurentPoly2& b) {
        LaurentPoly2 r;
        if (a.is_zero() || b.is_zero()) return r;
        for (const auto& [ea, ca] : a.terms_)
            for (const auto& [eb, cb] : b.terms_) r.add_term(ea + eb, ca * cb);
        return r;
    }
    LaurentPoly2& operator*=(const LaurentPoly2& o) { return *this = *this * o; }

    LaurentPoly2 mul_monomial(const mpz_class& c, std::int32_t ex, std::int32_t ey) const {
        LaurentPoly2 r;
        if (c == 0) return r;
        const Exp2 shift{ex, ey};
        for (const auto& [e, k] : terms_) r.terms_.emplace(e + shift, k * c);
        return r;
    }

    // Largest term in graded-lex order.
    std::pair<Exp2, mpz_class> leading_term() const {
        if (is_zero()) throw laurent_error("leading_term of zero polynomial");
        auto it = std::prev(terms_.end());
        return {it->first, it->second};
    }

    // Exact division in Z[x^{+-1}, y^{+-1}]. Throws laurent_error when the
    // divisor does not divide exactly; callers treat that as a bug signal,
    // not user error.
    static LaurentPoly2 div_exact(LaurentPoly2 p, const LaurentPoly2& q) {
        if (q.is_zero()) throw laurent_error("div_exact by zero");
        LaurentPoly2 quot;
        const auto [qe, qc] = q.leading_term();
        // Each step cancels the leading term exactly, so the loop runs once
        // per term of the true quotient; the cap only trips on bad input.
        std::size_t guard = 4 * (p.term_count() + 1) * (q.term_count() + 1) + 64;
        while (!p.is_zero()) {
            if (guard-- == 0) throw laurent_error("div_exact: not divisible");
            const auto [pe, pc] = p.leading_term();
            if (!mpz_divisible_p(pc.get_mpz_t(), qc.get_mpz_t()))
                throw laurent_error("div_exact: not divisible");
            mpz_class tc = pc / qc;
            const Exp2 te = pe - qe;
            quot.add_term(te, tc);
            p -= q.mul_monomial(tc, te.x, te.y);
        }
        return quot;
    }

    // Canonical representative of the unit-multiple class {+-x^a y^b * p}:
    // minimal exponents shifted to zero in each variable, and the graded-lex
    // least term of lowest total degree made positive.
    LaurentPoly2 normalize_unit() const {
        if (is_zero()) return *this;
        std::int32_t mx = INT32_MAX, my = INT32_MAX;
        for (const auto& [e, c] : terms_) {
            mx = std::min(mx, e.x);
            my = std::min(my, e.y);
        }
        LaurentPoly2 r = mul_monomial(1, -mx, -my);
        if (r.terms_.begin()->second < 0) r = -r;
        return r;
    }

    // Evaluate modulo a prime, mapping x -> xv и y -> yv. Negative exponents
    // use modular inverses, so p must be prime and xv, yv nonzero mod p.
    std::uint64_t eval_mod(std::uint64_t xv, std::uint64_t yv, std::uint64_t p) const;

    std::string to_string() const;
    static LaurentPoly2 parse(const std::string& text);

private:
    std::map<Exp2, mpz_class> terms_;

    void add_term(const Exp2& e, const mpz_class& c) {
        if (c == 0) return;
        auto [it, fresh] = terms_.emplace(e, c);
        if (!fresh) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }
};

namespace detail {

inline std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    return std::uint64_t((unsigned __int128)a * b % p);
}
inline std::uint64_t powmod(std::uint64_t b, std::uint64_t e, std::uint64_t p) {
    std::uint64_t r = 1 % p;
    b %= p;
    while (e) {
        if (e & 1) r = mulmod(r, b, p);
        b = mulmod(b, b, p);
        e >>= 1;
    }
    return r;
}
inline std::uint64_t invmod(std::uint64_t a, std::uint64_t p) { return powmod(a, p - 2, p); }

} // namespace detail

inline std::uint64_t LaurentPoly2::eval_mod(std::uint64_t xv, std::uint64_t yv,
                                            std::uint64_t p) const {
    using namespace detail;
    const std::uint64_t xi = invmod(xv, p), yi = invmod(yv, p);
    std::uint64_t acc = 0;
    for (const auto& [e, c] : terms_) {
        std::uint64_t t = mpz_class(c % p + p).get_ui() % p;
        t = mulmod(t, e.x >= 0 ? powmod(xv, e.x, p) : powmod(xi, -std::int64_t(e.x), p), p);
        t = mulmod(t, e.y >= 0 ? powmod(yv, e.y, p) : powmod(yi, -std::int64_t(e.y), p), p);
        acc = (acc + t) % p;
    }
    return acc;
}

inline std::string LaurentPoly2::to_string() const {
    if (is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        const bool neg = c < 0;
        mpz_class a = neg ? mpz_class(-c) : c;
        if (first) {
            if (neg) out += "-";
            first = false;
        } else {
            out += neg ? " - " : " + ";
        }
        std::string mono;
        if (e.x != 0) {
            mono += "x";
            if (e.x != 1) mono += "^" + std::to_string(e.x);
        }
        if (e.y != 0) {
            if (!mono.empty()) mono += "*";
            mono += "y";
            if (e.y != 1) mono += "^" + std::to_string(e.y);
        }
        if (mono.empty()) {
            out += a.get_str();
        } else {
            if (a != 1) out += a.get_str() + "*";
            out += mono;
        }
    }
    return out;
}

// Parser for the signed monomial list form, e.g. "-1 + x^2 - x^3*y^-3".
// Whitespace-insensitive; "/y^k" is accepted as an alias for "*y^-k".
inline LaurentPoly2 LaurentPoly2::parse(const std::string& text) {
    LaurentPoly2 result;
    std::size_t i = 0;
    const auto skip = [&] { while (i < text.size() && std::isspace((unsigned char)text[i])) ++i; };
    const auto parse_int = [&](bool sign_ok) -> mpz_class {
        std::size_t start = i;
        if (sign_ok && i < text.size() && (text[i] == '+' || text[i] == '-')) ++i;
        std::size_t digits = i;
        while (i < text.size() && std::isdigit((unsigned char)text[i])) ++i;
        if (i == digits) throw laurent_error("expected integer at offset " + std::to_string(start));
        return mpz_class(text.substr(start, i - start));
    };

    skip();
    bool any = false;
    while (i < text.size()) {
        int sign = 1;
        if (text[i] == '+' || text[i] == '-') {
            if (text[i] == '-') sign = -1;
            ++i;
            skip();
        } else if (any) {
            throw laurent_error("expected '+' or '-' at offset " + std::to_string(i));
        }
        // One term: optional integer coefficient and variable factors.
        mpz_class coeff = sign;
        Exp2 exp{0, 0};
        bool saw_factor = false;
        bool invert_next = false;
        while (i < text.size()) {
            skip();
            if (i >= text.size()) break;
            char ch = text[i];
            if (ch == '*' || ch == '/') {
                if (!saw_factor) throw laurent_error("dangling operator at offset " + std::to_string(i));
                invert_next = (ch == '/');
                ++i;
                skip();
                ch = i < text.size() ? text[i] : '\0';
            } else if (ch == '+' || ch == '-') {
                break;
            }
            if (std::isdigit((unsigned char)ch)) {
                if (invert_next) throw laurent_error("non-unit divisor at offset " + std::to_string(i));
                coeff *= parse_int(false);
                saw_factor = true;
            } else if (ch == 'x' || ch == 'y') {
                ++i;
                std::int64_t e = 1;
                skip();
                if (i < text.size() && text[i] == '^') {
                    ++i;
                    skip();
                    e = parse_int(true).get_si();
                }
                if (invert_next) e = -e;
                invert_next = false;
                if (ch == 'x') exp.x = std::int32_t(exp.x + e);
                else exp.y = std::int32_t(exp.y + e);
                saw_factor = true;
            } else {
                throw laurent_error(std::string("unexpected character '") + ch +
                                    "' at offset " + std::to_string(i));
            }
            skip();
        }
        if (!saw_factor) throw laurent_error("empty term at offset " + std::to_string(i));
        result.add_term(exp, coeff);
        any = true;
        skip();
    }
    return result;
}

// Square matrix over the Laurent ring. The Sawollek construction uses even
// dimension 2n, but determinants are defined for any square size.
class LaurentMatrix {
public:
    explicit LaurentMatrix(std::size_t dim) : dim_(dim), a_(dim * dim) {}

    static LaurentMatrix identity(std::size_t dim) {
        LaurentMatrix m(dim);
        for (std::size_t i = 0; i < dim; ++i) m.at(i, i) = LaurentPoly2::constant(1);
        return m;
    }

    std::size_t dim() const { return dim_; }
    LaurentPoly2& at(std::size_t i, std::size_t j) { return a_.at(i * dim_ + j); }
    const LaurentPoly2& at(std::size_t i, std::size_t j) const { return a_.at(i * dim_ + j); }

    // Fraction-free (Bareiss) elimination; every division is exact.
    LaurentPoly2 det_bareiss() const {
        const std::size_t n = dim_;
        if (n == 0) return LaurentPoly2::constant(1);
        std::vector<LaurentPoly2> m = a_;
        auto at_ = [&](std::size_t i, std::size_t j) -> LaurentPoly2& { return m[i * n + j]; };
        int sign = 1;
        LaurentPoly2 prev = LaurentPoly2::constant(1);
        for (std::size_t k = 0; k + 1 < n; ++k) {
            // Pivot: nonzero entry in column k with the fewest terms.
            std::size_t piv = n;
            for (std::size_t r = k; r < n; ++r) {
                if (at_(r, k).is_zero()) continue;
                if (piv == n || at_(r, k).term_count() < at_(piv, k).term_count()) piv = r;
            }
            if (piv == n) return LaurentPoly2::zero();
            if (piv != k) {
                for (std::size_t j = 0; j < n; ++j) std::swap(at_(piv, j), at_(k, j));
                sign = -sign;
            }
            for (std::size_t i = k + 1; i < n; ++i) {
                for (std::size_t j = k + 1; j < n; ++j) {
                    LaurentPoly2 t = at_(i, j) * at_(k, k) - at_(i, k) * at_(k, j);
                    at_(i, j) = LaurentPoly2::div_exact(std::move(t), prev);
                }
                at_(i, k) = LaurentPoly2::zero();
            }
            prev = at_(k, k);
        }
        LaurentPoly2 d = at_(n - 1, n - 1);
        return sign < 0 ? -d : d;
    }

    // Cofactor expansion along the first remaining row, memoized on the
    // active column mask. Independent code path used as the dual route.
    LaurentPoly2 det_cofactor() const {
        const std::size_t n = dim_;
        if (n == 0) return LaurentPoly2::constant(1);
        if (n > 32) throw laurent_error("det_cofactor: dimension too large");
        std::unordered_map<std::uint64_t, LaurentPoly2> memo;
        const std::uint64_t full = (n == 64) ? ~0ull : ((1ull << n) - 1);
        return det_masked(full, 0, memo);
    }

    // Elimination for general sizes, direct expansion when small.
    LaurentPoly2 det() const { return dim_ <= 4 ? det_cofactor() : det_bareiss(); }

    friend LaurentMatrix operator*(const LaurentMatrix& a, const LaurentMatrix& b) {
        if (a.dim_ != b.dim_) throw laurent_error("matrix dimension mismatch");
        LaurentMatrix r(a.dim_);
        for (std::size_t i = 0; i < a.dim_; ++i)
            for (std::size_t k = 0; k < a.dim_; ++k) {
                if (a.at(i, k).is_zero()) continue;
                for (std::size_t j = 0; j < a.dim_; ++j)
                    if (!b.at(k, j).is_zero()) r.at(i, j) += a.at(i, k) * b.at(k, j);
            }
        return r;
    }

private:
    std::size_t dim_;
    std::vector<LaurentPoly2> a_;

    LaurentPoly2 det_masked(std::uint64_t colmask, std::size_t row,
                            std::unordered_map<std::uint64_t, LaurentPoly2>& memo) const {
        if (colmask == 0) return LaurentPoly2::constant(1);
        auto it = memo.find(colmask);
        if (it != memo.end()) return it->second;
        LaurentPoly2 acc;
        int sgn = 1;
        for (std::size_t j = 0; j < dim_; ++j) {
            if (!(colmask & (1ull << j))) continue;
            if (!at(row, j).is_zero()) {
                LaurentPoly2 sub = det_masked(colmask & ~(1ull << j), row + 1, memo);
                LaurentPoly2 term = at(row, j) * sub;
                if (sgn < 0) acc -= term;
                else acc += term;
            }
            sgn = -sgn;
        }
        memo.emplace(colmask, acc);
        return acc;
    }
};

} // namespace vknot
