#include "mforge/gf.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

namespace mforge {

namespace {

// Polynomials over GF(p) as degree-ascending coefficient vectors.

std::vector<int> poly_trim(std::vector<int> a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
    return a;
}

// Remainder of a mod b, b monic-leading (leading coefficient invertible).
std::vector<int> poly_rem(std::vector<int> a, const std::vector<int>& b, int p) {
    a = poly_trim(a);
    int db = static_cast<int>(b.size()) - 1;
    while (static_cast<int>(a.size()) - 1 >= db) {
        int da = static_cast<int>(a.size()) - 1;
        int lead = a[da];
        if (lead != 0) {
            // b is monic in every use below
            for (int i = 0; i <= db; ++i) {
                int& c = a[da - db + i];
                c = ((c - lead * b[i]) % p + p * p) % p;
            }
        }
        a.pop_back();
        a = poly_trim(a);
        if (a.empty()) break;
    }
    return a;
}

std::vector<int> decode_digits(int value, int p, int k) {
    std::vector<int> d(k, 0);
    for (int i = 0; i < k; ++i) {
        d[i] = value % p;
        value /= p;
    }
    return d;
}

int encode_digits(const std::vector<int>& d, int p, int k) {
    int v = 0;
    for (int i = k - 1; i >= 0; --i) v = v * p + d[i];
    return v;
}

// Product of two residues modulo x^k + tail, all over GF(p).
int residue_mul(int a, int b, int p, int k, const std::vector<int>& tail) {
    std::vector<int> da = decode_digits(a, p, k);
    std::vector<int> db = decode_digits(b, p, k);
    std::vector<int> prod(2 * k - 1, 0);
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) prod[i + j] = (prod[i + j] + da[i] * db[j]) % p;
    // reduce: x^k = -tail
    for (int d = 2 * k - 2; d >= k; --d) {
        int c = prod[d];
        if (c == 0) continue;
        prod[d] = 0;
        for (int i = 0; i < k; ++i) prod[d - k + i] = ((prod[d - k + i] - c * tail[i]) % p + p * p) % p;
    }
    prod.resize(k);
    return encode_digits(prod, p, k);
}

// Pinned reduction polynomials. All agree with least_irreducible(p, k);
// see the field unit tests.
const std::map<std::pair<int, int>, std::vector<int>>& builtin_reductions() {
    static const std::map<std::pair<int, int>, std::vector<int>> tbl = {
        {{2, 2}, {1, 1}},        // x^2 + x + 1
        {{2, 3}, {1, 1, 0}},     // x^3 + x + 1
        {{2, 4}, {1, 1, 0, 0}},  // x^4 + x + 1
        {{3, 2}, {1, 0}},        // x^2 + 1
        {{3, 3}, {1, 2, 0}},     // x^3 + 2x + 1
        {{5, 2}, {2, 0}},        // x^2 + 2
        {{7, 2}, {1, 0}},        // x^2 + 1
    };
    return tbl;
}

constexpr int kMaxOrder = 121;

}  // namespace

bool is_prime(int n) {
    if (n < 2) return false;
    for (int d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

bool is_irreducible(int p, const std::vector<int>& tail) {
    int k = static_cast<int>(tail.size());
    if (k == 0) throw std::invalid_argument("empty polynomial");
    std::vector<int> f = tail;
    f.push_back(1);  // monic
    // check all monic divisors of degree 1..k/2
    for (int d = 1; 2 * d <= k; ++d) {
        int count = 1;
        for (int i = 0; i < d; ++i) count *= p;
        for (int t = 0; t < count; ++t) {
            std::vector<int> g = decode_digits(t, p, d);
            g.push_back(1);
            if (poly_rem(f, g, p).empty()) return false;
        }
    }
    return true;
}

std::vector<int> least_irreducible(int p, int k) {
    int count = 1;
    for (int i = 0; i < k; ++i) count *= p;
    for (int v = 0; v < count; ++v) {
        std::vector<int> tail = decode_digits(v, p, k);
        if (is_irreducible(p, tail)) return tail;
    }
    throw std::logic_error("no irreducible polynomial found");  // unreachable
}

struct GaloisField::Tables {
    int p = 0, k = 1, q = 0;
    std::vector<int> red;           // c_0..c_{k-1}, empty for k == 1
    std::vector<int> add, mul;      // q*q, row-major
    std::vector<int> neg, inv, frob;  // q each; inv[0] unused
};

GaloisField GaloisField::make(int p) { return make(p, 1); }

GaloisField GaloisField::make(int p, int k) {
    if (!is_prime(p)) throw std::invalid_argument(std::to_string(p) + " is not prime");
    if (k < 1) throw std::invalid_argument("extension degree must be >= 1");
    if (k == 1) return make(p, 1, {});
    long long q = 1;
    for (int i = 0; i < k; ++i) q *= p;
    if (q > kMaxOrder) throw std::invalid_argument("field order exceeds supported maximum 121");
    auto it = builtin_reductions().find({p, k});
    std::vector<int> red = it != builtin_reductions().end() ? it->second : least_irreducible(p, k);
    return make(p, k, red);
}

GaloisField GaloisField::make(int p, int k, const std::vector<int>& reduction) {
    if (!is_prime(p)) throw std::invalid_argument(std::to_string(p) + " is not prime");
    if (k < 1) throw std::invalid_argument("extension degree must be >= 1");
    long long qll = 1;
    for (int i = 0; i < k; ++i) qll *= p;
    if (qll > kMaxOrder) throw std::invalid_argument("field order exceeds supported maximum 121");
    int q = static_cast<int>(qll);

    auto t = std::make_shared<Tables>();
    t->p = p;
    t->k = k;
    t->q = q;
    if (k >= 2) {
        if (static_cast<int>(reduction.size()) != k)
            throw std::invalid_argument("reduction polynomial must list k coefficients");
        for (int c : reduction)
            if (c < 0 || c >= p) throw std::invalid_argument("reduction coefficient out of range");
        if (!is_irreducible(p, reduction))
            throw std::invalid_argument("reduction polynomial is reducible over GF(p)");
        t->red = reduction;
    } else if (!reduction.empty()) {
        throw std::invalid_argument("prime fields take no reduction polynomial");
    }

    t->add.resize(q * q);
    t->mul.resize(q * q);
    t->neg.resize(q);
    t->inv.assign(q, 0);
    t->frob.resize(q);
    for (int a = 0; a < q; ++a) {
        for (int b = 0; b < q; ++b) {
            if (k == 1) {
                t->add[a * q + b] = (a + b) % p;
                t->mul[a * q + b] = (a * b) % p;
            } else {
                std::vector<int> da = decode_digits(a, p, k), db = decode_digits(b, p, k);
                std::vector<int> ds(k);
                for (int i = 0; i < k; ++i) ds[i] = (da[i] + db[i]) % p;
                t->add[a * q + b] = encode_digits(ds, p, k);
                t->mul[a * q + b] = residue_mul(a, b, p, k, t->red);
            }
            if (t->mul[a * q + b] == 1) t->inv[a] = b;
        }
    }
    for (int a = 0; a < q; ++a) {
        for (int b = 0; b < q; ++b)
            if (t->add[a * q + b] == 0) t->neg[a] = b;
    }
    // frob[a] = a^p
    for (int a = 0; a < q; ++a) {
        int acc = 1;
        for (int i = 0; i < p; ++i) acc = t->mul[acc * q + a];
        t->frob[a] = acc;
    }
    return GaloisField(std::move(t));
}

GaloisField GaloisField::of_order(int q) { return of_order(q, {}); }

GaloisField GaloisField::of_order(int q, const std::vector<int>& reduction) {
    if (q < 2) throw std::invalid_argument("field order must be >= 2");
    int p = 2;
    while (q % p != 0) {
        ++p;
        if (p > q) throw std::invalid_argument(std::to_string(q) + " is not a prime power");
    }
    int k = 0;
    int rest = q;
    while (rest % p == 0) {
        rest /= p;
        ++k;
    }
    if (rest != 1) throw std::invalid_argument(std::to_string(q) + " is not a prime power");
    if (reduction.empty() && k >= 2) return make(p, k);
    return make(p, k, reduction);
}

int GaloisField::p() const { return t_->p; }
int GaloisField::k() const { return t_->k; }
int GaloisField::q() const { return t_->q; }
const std::vector<int>& GaloisField::reduction() const { return t_->red; }

namespace {
void check_elem(int q, int a) {
    if (a < 0 || a >= q) throw std::invalid_argument("element out of range for field");
}
}  // namespace

int GaloisField::add(int a, int b) const {
    check_elem(t_->q, a);
    check_elem(t_->q, b);
    return t_->add[a * t_->q + b];
}

int GaloisField::sub(int a, int b) const { return add(a, neg(b)); }

int GaloisField::neg(int a) const {
    check_elem(t_->q, a);
    return t_->neg[a];
}

int GaloisField::mul(int a, int b) const {
    check_elem(t_->q, a);
    check_elem(t_->q, b);
    return t_->mul[a * t_->q + b];
}

int GaloisField::inv(int a) const {
    check_elem(t_->q, a);
    if (a == 0) throw std::invalid_argument("inversion of zero");
    return t_->inv[a];
}

int GaloisField::pow(int a, long long e) const {
    check_elem(t_->q, a);
    if (e < 0) throw std::invalid_argument("negative exponent");
    if (a == 0) return e == 0 ? 1 : 0;
    e %= (t_->q - 1);  // units have order dividing q-1
    int result = 1, base = a;
    while (e > 0) {
        if (e & 1) result = mul(result, base);
        base = mul(base, base);
        e >>= 1;
    }
    return result;
}

int GaloisField::frobenius(int a, int j) const {
    check_elem(t_->q, a);
    if (j < 0) throw std::invalid_argument("negative automorphism power");
    int steps = j % t_->k;
    int r = a;
    for (int i = 0; i < steps; ++i) r = t_->frob[r];
    return r;
}

std::vector<int> GaloisField::elements() const {
    std::vector<int> e(t_->q);
    for (int i = 0; i < t_->q; ++i) e[i] = i;
    return e;
}

std::vector<int> GaloisField::units() const {
    std::vector<int> e(t_->q - 1);
    for (int i = 1; i < t_->q; ++i) e[i - 1] = i;
    return e;
}

bool GaloisField::operator==(const GaloisField& o) const {
    return t_->p == o.t_->p && t_->k == o.t_->k && t_->red == o.t_->red;
}

std::string GaloisField::describe() const {
    std::ostringstream os;
    os << "GF(" << q() << ")";
    if (k() >= 2) {
        os << " = GF(" << p() << "^" << k() << "), reduction x^" << k();
        for (int i = k() - 1; i >= 0; --i) {
            int c = t_->red[i];
            if (c == 0) continue;
            os << " + ";
            if (c != 1 || i == 0) os << c;
            if (i >= 1) {
                if (c != 1) os << "*";
                os << "x";
                if (i >= 2) os << "^" << i;
            }
        }
    }
    return os.str();
}

}  // namespace mforge
