#pragma once

#include "ep/gf2/bitmatrix.hpp"

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace ep::poly2 {

using gf2::Word;

/// Dense polynomial over F_2; bit i of the word array is the coefficient
/// of x^i. Zero polynomial has degree -1.
class Poly {
public:
    Poly() = default;

    static Poly zero() { return Poly(); }
    static Poly one() { return monomial(0); }
    static Poly x() { return monomial(1); }
    static Poly monomial(std::size_t e);
    /// x^r + 1 (equal to x^r - 1 in characteristic 2).
    static Poly x_pow_r_plus_1(std::size_t r);
    /// Coefficient mask for degrees 0..63, e.g. 0b1011 = x^3 + x + 1.
    static Poly from_mask(std::uint64_t mask);

    bool is_zero() const { return w_.empty(); }
    int degree() const;
    bool get(std::size_t i) const;
    void set(std::size_t i, bool value);

    Poly operator+(const Poly& other) const;
    Poly operator*(const Poly& other) const;
    /// (quotient, remainder); divisor must be nonzero.
    std::pair<Poly, Poly> divmod(const Poly& divisor) const;
    Poly operator%(const Poly& divisor) const { return divmod(divisor).second; }
    Poly operator/(const Poly& divisor) const { return divmod(divisor).first; }

    bool operator==(const Poly& other) const = default;
    /// Total order for deterministic factor lists: by degree, then by the
    /// coefficient mask read as an integer (low word last).
    bool operator<(const Poly& other) const;

    /// Formal derivative; in char 2 this keeps odd-degree terms only.
    Poly derivative() const;
    /// Square root of a polynomial with only even-degree terms.
    Poly sqrt() const;

    std::string to_string() const; // "x^3 + x + 1"

private:
    void trim();
    std::vector<Word> w_;
};

Poly gcd(Poly a, Poly b);
Poly powmod(const Poly& base, std::uint64_t e, const Poly& mod);
/// x^(2^k) mod f by repeated squaring, used by the irreducibility test.
Poly frobenius_power(std::size_t k, const Poly& f);

/// Rabin's test: f irreducible over F_2?
bool is_irreducible(const Poly& f);

/// Distinct irreducible factors of f (f need not be squarefree), sorted.
std::vector<Poly> distinct_irreducible_factors(const Poly& f);

/// Minimal polynomial of the right action v |-> v*m.
Poly min_poly(const gf2::BitMatrix& m);

/// Evaluate p at m (right-action convention), i.e. sum p_i m^i.
gf2::BitMatrix eval_at(const Poly& p, const gf2::BitMatrix& m);

/// Companion matrix of a monic polynomial of degree >= 1; its minimal and
/// characteristic polynomials both equal the input.
gf2::BitMatrix companion(const Poly& monic);

} // namespace ep::poly2
