#ifndef LIECLASS_POLY_HPP
#define LIECLASS_POLY_HPP

#include <gmpxx.h>
#include <map>
#include <string>
#include <vector>
#include <cstdint>

namespace lieclass {

using Rat = mpq_class;

// Monomial x^i y^j. Term order everywhere in this module is graded lex with
// x before y: compare total degree, then x-degree.
struct Mono {
    unsigned i = 0, j = 0;
    unsigned deg() const { return i + j; }
    friend bool operator==(const Mono&, const Mono&) = default;
};

struct MonoGrlex {
    bool operator()(const Mono& a, const Mono& b) const {
        if (a.deg() != b.deg()) return a.deg() < b.deg();
        return a.i < b.i;
    }
};

// Polynomial in Q[x,y]. Zero polynomial is the empty term map; no stored
// term has a zero coefficient.
class Poly {
public:
    using Terms = std::map<Mono, Rat, MonoGrlex>;

    Poly() = default;
    explicit Poly(const Rat& c) { if (c != 0) terms_[{0, 0}] = c; }
    explicit Poly(long c) { if (c != 0) terms_[{0, 0}] = Rat(c); }

    static Poly mono(unsigned i, unsigned j, Rat c = Rat(1));
    static Poly var_x() { return mono(1, 0); }
    static Poly var_y() { return mono(0, 1); }

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    bool is_one() const;
    Rat constant_value() const;  // requires is_constant()

    unsigned total_degree() const;       // 0 for the zero polynomial
    unsigned degree_x() const;
    unsigned degree_y() const;
    bool depends_on_x() const { return degree_x() > 0; }
    bool depends_on_y() const { return degree_y() > 0; }

    Mono leading_mono() const;           // grlex-leading; requires nonzero
    Rat leading_coeff() const;

    Rat coeff(unsigned i, unsigned j) const;
    void set_coeff(unsigned i, unsigned j, const Rat& c);

    Poly operator-() const;
    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator*(const Poly& o) const;
    Poly& operator+=(const Poly& o) { *this = *this + o; return *this; }
    Poly& operator-=(const Poly& o) { *this = *this - o; return *this; }
    Poly& operator*=(const Poly& o) { *this = *this * o; return *this; }
    Poly scaled(const Rat& c) const;

    friend bool operator==(const Poly& a, const Poly& b) { return a.terms_ == b.terms_; }
    bool operator<(const Poly& o) const;  // arbitrary canonical order, for map keys

    Poly derive_x() const;
    Poly derive_y() const;
    Poly swap_xy() const;

    // Substitute x -> v (used by the enumeration oracle and tests).
    Rat eval(const Rat& x, const Rat& y) const;

    // Divide by a nonzero rational.
    Poly divided_by(const Rat& c) const;

    // Exact division; aborts if not divisible (internal use).
    Poly exact_div(const Poly& d) const;
    bool divisible_by(const Poly& d) const;

    // Primitive part over Q: integer coefficients, content 1, leading
    // coefficient positive.
    Poly primitive() const;
    // Leading-coefficient-1 normalization.
    Poly monic() const;

    std::string str() const;             // grlex order, x before y

private:
    Terms terms_;
    void prune();
    friend Poly poly_add_scaled(const Poly&, const Poly&, const Rat&);
};

Poly poly_gcd(const Poly& a, const Poly& b);
// Square-free part (product of distinct irreducible factors), monic.
Poly squarefree_part(const Poly& a);
// Square-free decomposition a = lc * prod f_k^k with f_k monic square-free
// pairwise coprime. Returns list of (f_k, k), constants omitted.
std::vector<std::pair<Poly, unsigned>> squarefree_decompose(const Poly& a);

}  // namespace lieclass

#endif
