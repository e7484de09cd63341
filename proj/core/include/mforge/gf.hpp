#pragma once

#include <memory>
#include <string>
#include <vector>

namespace mforge {

/// Exact arithmetic in GF(p^k), p prime, k >= 1, with q = p^k <= 121.
///
/// Elements are encoded as integers in [0, q). For k >= 2 the value encodes
/// the residue polynomial c_0 + c_1 x + ... + c_{k-1} x^{k-1} as
/// value = sum c_i * p^i, reduced modulo a fixed monic irreducible polynomial.
/// All operations are table driven; a GaloisField is an immutable value that
/// can be copied and shared across threads freely.
class GaloisField {
public:
    /// Prime field GF(p).
    static GaloisField make(int p);

    /// GF(p^k) with the pinned built-in reduction polynomial for (p, k)
    /// (the lexicographically least monic irreducible, by encoded value).
    static GaloisField make(int p, int k);

    /// GF(p^k) with a caller-supplied reduction polynomial, given as the
    /// degree-ascending coefficients c_0..c_{k-1} of x^k + sum c_i x^i.
    /// The polynomial is checked for irreducibility.
    static GaloisField make(int p, int k, const std::vector<int>& reduction);

    /// Builds the field of order q (q must be a prime power).
    static GaloisField of_order(int q);
    static GaloisField of_order(int q, const std::vector<int>& reduction);

    int p() const;
    int k() const;
    int q() const;
    /// Reduction polynomial coefficients c_0..c_{k-1}; empty when k == 1.
    const std::vector<int>& reduction() const;

    int add(int a, int b) const;
    int sub(int a, int b) const;
    int neg(int a) const;
    int mul(int a, int b) const;
    int inv(int a) const;  // throws std::invalid_argument on 0
    int pow(int a, long long e) const;

    /// Frobenius automorphism iterated j times: a |-> a^(p^j).
    int frobenius(int a, int j = 1) const;

    /// All q elements, or the q-1 units, in increasing encoded order.
    std::vector<int> elements() const;
    std::vector<int> units() const;

    bool is_element(int a) const { return a >= 0 && a < q(); }

    bool operator==(const GaloisField& o) const;
    bool operator!=(const GaloisField& o) const { return !(*this == o); }

    /// Human-readable description, e.g. "GF(9) = GF(3^2), reduction x^2 + 1".
    std::string describe() const;

private:
    struct Tables;
    std::shared_ptr<const Tables> t_;
    explicit GaloisField(std::shared_ptr<const Tables> t) : t_(std::move(t)) {}
};

bool is_prime(int n);

/// Lexicographically least (by encoded value of the non-leading coefficients)
/// monic irreducible polynomial of degree k over GF(p), as c_0..c_{k-1}.
std::vector<int> least_irreducible(int p, int k);

/// Irreducibility of x^k + sum tail_i x^i over GF(p), by exhaustive
/// divisor check. Intended for the desk-scale degrees used here.
bool is_irreducible(int p, const std::vector<int>& tail);

}  // namespace mforge
