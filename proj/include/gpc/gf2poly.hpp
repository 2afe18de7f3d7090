#ifndef GPC_GF2POLY_HPP
#define GPC_GF2POLY_HPP

#include <algorithm>
#include <cstdint>
#include <limits>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "gpc/bits.hpp"

namespace gpc {

/*
 * Polynomial over GF(2), coefficient of z^i in bit (i % 64) of word (i / 64).
 * The zero polynomial reports the distinguished minus-infinity degree marker
 * rather than any valid degree.
 */
class Poly2 {
public:
    static constexpr int kNegInfDegree = std::numeric_limits<int>::min();

    Poly2() = default;

    static Poly2 zero() { return Poly2(); }
    static Poly2 one() { return monomial(0); }

    static Poly2 monomial(int d) {
        if (d < 0) throw std::invalid_argument("Poly2::monomial: negative degree");
        Poly2 p;
        p.set_coeff(d, true);
        return p;
    }

    /* z^e1 + z^e2 + ... */
    static Poly2 from_exponents(std::initializer_list<int> es) {
        Poly2 p;
        for (int e : es) p.set_coeff(e, p.coeff(e) ^ 1);
        return p;
    }

    /* bits of v as coefficients, bit 0 = constant term */
    static Poly2 from_bits(std::uint64_t v) {
        Poly2 p;
        for (int i = 0; v; ++i, v >>= 1)
            if (v & 1) p.set_coeff(i, true);
        return p;
    }

    int degree() const {
        for (std::size_t wi = w_.size(); wi-- > 0;)
            if (w_[wi]) return int(wi) * 64 + 63 - std::countl_zero(w_[wi]);
        return kNegInfDegree;
    }

    bool is_zero() const { return degree() == kNegInfDegree; }

    bool coeff(int i) const {
        if (i < 0) throw std::invalid_argument("Poly2::coeff: negative exponent");
        std::size_t wi = std::size_t(i) >> 6;
        if (wi >= w_.size()) return false;
        return (w_[wi] >> (i & 63)) & 1;
    }

    void set_coeff(int i, bool v) {
        if (i < 0) throw std::invalid_argument("Poly2::set_coeff: negative exponent");
        std::size_t wi = std::size_t(i) >> 6;
        if (wi >= w_.size()) {
            if (!v) return;
            w_.resize(wi + 1, 0);
        }
        std::uint64_t m = std::uint64_t(1) << (i & 63);
        if (v)
            w_[wi] |= m;
        else
            w_[wi] &= ~m;
        prune();
    }

    int weight() const {
        int c = 0;
        for (std::uint64_t w : w_) c += std::popcount(w);
        return c;
    }

    /* f(1) over GF(2) */
    bool eval_at_one() const { return weight() & 1; }

    Poly2& operator+=(const Poly2& o) {
        if (o.w_.size() > w_.size()) w_.resize(o.w_.size(), 0);
        for (std::size_t i = 0; i < o.w_.size(); ++i) w_[i] ^= o.w_[i];
        prune();
        return *this;
    }

    friend Poly2 operator+(Poly2 a, const Poly2& b) { return a += b; }

    friend Poly2 operator*(const Poly2& a, const Poly2& b) {
        if (a.is_zero() || b.is_zero()) return Poly2();
        Poly2 r;
        r.w_.assign(a.w_.size() + b.w_.size(), 0);
        for (int i = 0; i <= a.degree(); ++i) {
            if (!a.coeff(i)) continue;
            for (std::size_t wj = 0; wj < b.w_.size(); ++wj) {
                std::uint64_t v = b.w_[wj];
                if (!v) continue;
                std::size_t base = std::size_t(i) + wj * 64;
                std::size_t wi = base >> 6, sh = base & 63;
                r.w_[wi] ^= v << sh;
                if (sh) r.w_[wi + 1] ^= v >> (64 - sh);
            }
        }
        r.prune();
        return r;
    }

    /* polynomial long division; returns {quotient, remainder} */
    friend std::pair<Poly2, Poly2> divmod(Poly2 a, const Poly2& b) {
        if (b.is_zero()) throw std::invalid_argument("Poly2: division by zero polynomial");
        Poly2 q;
        int db = b.degree();
        while (!a.is_zero() && a.degree() >= db) {
            int sh = a.degree() - db;
            q.set_coeff(sh, true);
            a += b.shifted(sh);
        }
        return {q, a};
    }

    friend Poly2 operator%(const Poly2& a, const Poly2& b) { return divmod(a, b).second; }
    friend Poly2 operator/(const Poly2& a, const Poly2& b) { return divmod(a, b).first; }

    /* true iff d divides f */
    friend bool poly_divides(const Poly2& d, const Poly2& f) { return (f % d).is_zero(); }

    /* reduction mod z^n + 1, folding z^t onto z^(t mod n) */
    Poly2 mod_xn1(int n) const {
        if (n <= 0) throw std::invalid_argument("Poly2::mod_xn1: n must be positive");
        Poly2 r;
        for (int i = 0; i <= std::max(degree(), 0); ++i)
            if (coeff(i)) r.set_coeff(i % n, r.coeff(i % n) ^ 1);
        return r;
    }

    Poly2 shifted(int sh) const {
        Poly2 r;
        for (int i = 0; i <= std::max(degree(), 0); ++i)
            if (coeff(i)) r.set_coeff(i + sh, true);
        return r;
    }

    bool operator==(const Poly2& o) const { return w_ == o.w_; }
    bool operator!=(const Poly2& o) const { return !(*this == o); }

    /* coefficients as an n-bit vector, constant term at coordinate 0 */
    BitVector to_bitvector(std::size_t n) const {
        if (degree() >= int(n)) throw std::invalid_argument("Poly2::to_bitvector: degree too large");
        BitVector v(n);
        for (int i = 0; i <= std::max(degree(), 0); ++i)
            if (coeff(i)) v.set(i, true);
        return v;
    }

    static Poly2 from_bitvector(const BitVector& v) {
        Poly2 p;
        for (std::size_t i = 0; i < v.size(); ++i)
            if (v.get(i)) p.set_coeff(int(i), true);
        return p;
    }

    std::string to_hex() const {
        if (is_zero()) return "0";
        return to_bitvector(std::size_t(degree()) + 1).to_hex();
    }

private:
    void prune() {
        while (!w_.empty() && w_.back() == 0) w_.pop_back();
    }

    std::vector<std::uint64_t> w_;
};

/* default irreducible (in fact primitive) modulus of each degree */
inline Poly2 default_field_modulus(int w) {
    static const std::uint64_t tab[] = {0, 0, 0b111, 0b1011, 0b10011, 0b100101, 0b1000011,
                                        0b10000011, 0b100011101, 0b1000010001, 0b10000001001,
                                        0b100000000101, 0b1000001010011};
    if (w < 2 || w > 12) throw std::invalid_argument("default_field_modulus: no table entry for this degree");
    return Poly2::from_bits(tab[w]);
}

/*
 * GF(2^w) with log/antilog tables built by iterating powers of the residue
 * class alpha of z. Construction rejects any modulus under which the powers
 * of alpha repeat before exponent 2^w - 1, which covers both reducible and
 * primitive-free moduli.
 */
class FieldTable {
public:
    using Elem = std::uint32_t;

    FieldTable(int w, const Poly2& modulus) : w_(w), modulus_(modulus) {
        if (w < 2 || w > 20) throw std::invalid_argument("FieldTable: supported widths are 2..20");
        if (modulus.degree() != w) throw std::invalid_argument("FieldTable: modulus degree must equal w");
        n_ = (Elem(1) << w) - 1;
        antilog_.assign(n_, 0);
        log_.assign(std::size_t(n_) + 1, 0);
        std::vector<bool> seen(std::size_t(n_) + 1, false);
        std::uint32_t mod_bits = 0;
        for (int i = 0; i <= w; ++i)
            if (modulus.coeff(i)) mod_bits |= (1u << i);
        Elem x = 1;
        for (Elem e = 0; e < n_; ++e) {
            if (x == 0 || seen[x])
                throw std::invalid_argument("FieldTable: modulus is not primitive over GF(2)");
            seen[x] = true;
            antilog_[e] = x;
            log_[x] = e;
            x <<= 1;
            if (x >> w) x ^= mod_bits;
        }
        if (x != 1) throw std::invalid_argument("FieldTable: modulus is not primitive over GF(2)");
    }

    explicit FieldTable(int w) : FieldTable(w, default_field_modulus(w)) {}

    int w() const { return w_; }
    Elem order() const { return n_; }  /* multiplicative group order 2^w - 1 */
    const Poly2& modulus() const { return modulus_; }

    Elem alpha_pow(std::int64_t e) const {
        std::int64_t r = e % std::int64_t(n_);
        if (r < 0) r += n_;
        return antilog_[std::size_t(r)];
    }

    Elem add(Elem a, Elem b) const { return a ^ b; }

    Elem mul(Elem a, Elem b) const {
        check(a);
        check(b);
        if (a == 0 || b == 0) return 0;
        return antilog_[(std::uint64_t(log_[a]) + log_[b]) % n_];
    }

    Elem pow(Elem a, std::int64_t k) const {
        check(a);
        if (a == 0) {
            if (k < 0) throw std::invalid_argument("FieldTable::pow: inverse of zero");
            return k == 0 ? 1 : 0;
        }
        std::int64_t e = (std::int64_t(log_[a]) * (k % std::int64_t(n_))) % std::int64_t(n_);
        if (e < 0) e += n_;
        return antilog_[std::size_t(e)];
    }

    Elem inv(Elem a) const {
        check(a);
        if (a == 0) throw std::invalid_argument("FieldTable::inv: zero has no inverse");
        return antilog_[(n_ - log_[a]) % n_];
    }

    Elem log(Elem a) const {
        check(a);
        if (a == 0) throw std::invalid_argument("FieldTable::log: log of zero");
        return log_[a];
    }

    /* f(x) for a GF(2)-coefficient polynomial f, evaluated in the field */
    Elem eval(const Poly2& f, Elem x) const {
        check(x);
        Elem v = 0;
        for (int i = f.degree(); i >= 0; --i) {
            v = mul(v, x);
            if (f.coeff(i)) v ^= 1;
        }
        return v;
    }

private:
    void check(Elem a) const {
        if (a > n_) throw std::invalid_argument("FieldTable: element out of range");
    }

    int w_;
    Poly2 modulus_;
    Elem n_;
    std::vector<Elem> antilog_;
    std::vector<Elem> log_;
};

/* the 2-cyclotomic coset of i modulo odd n, sorted ascending */
inline std::vector<int> cyclotomic_coset(int n, int i) {
    if (n <= 0 || n % 2 == 0) throw std::invalid_argument("cyclotomic_coset: n must be odd and positive");
    if (i < 0 || i >= n) throw std::invalid_argument("cyclotomic_coset: i out of range");
    std::set<int> s;
    int x = i;
    do {
        s.insert(x);
        x = (2 * x) % n;
    } while (x != i);
    return std::vector<int>(s.begin(), s.end());
}

/* smallest member of each 2-cyclotomic coset modulo n, ascending */
inline std::vector<int> coset_representatives(int n) {
    std::vector<bool> seen(n, false);
    std::vector<int> reps;
    for (int i = 0; i < n; ++i) {
        if (seen[i]) continue;
        reps.push_back(i);
        for (int x : cyclotomic_coset(n, i)) seen[x] = true;
    }
    return reps;
}

/*
 * Minimal polynomial of alpha^i over GF(2): the product of (z - alpha^j)
 * over the cyclotomic coset of i, expanded with field coefficients and
 * checked to collapse to GF(2).
 */
inline Poly2 minimal_polynomial(const FieldTable& f, int i) {
    int n = int(f.order());
    std::vector<int> coset = cyclotomic_coset(n, ((i % n) + n) % n);
    std::vector<FieldTable::Elem> c{1};
    for (int j : coset) {
        FieldTable::Elem root = f.alpha_pow(j);
        std::vector<FieldTable::Elem> nc(c.size() + 1, 0);
        for (std::size_t t = 0; t < c.size(); ++t) {
            nc[t + 1] ^= c[t];
            nc[t] ^= f.mul(c[t], root);
        }
        c = nc;
    }
    Poly2 p;
    for (std::size_t t = 0; t < c.size(); ++t) {
        if (c[t] > 1) throw std::runtime_error("minimal_polynomial: product did not collapse to GF(2)");
        if (c[t]) p.set_coeff(int(t), true);
    }
    for (int j : coset)
        if (f.eval(p, f.alpha_pow(j)) != 0) throw std::runtime_error("minimal_polynomial: root check failed");
    return p;
}

/*
 * Primitive idempotent attached to the cyclotomic coset of i: the unique
 * theta of degree < n with theta(alpha^j) = 1 exactly for j in the coset,
 * obtained by solving the GF(2)-linearized evaluation system.
 */
inline Poly2 idempotent(const FieldTable& f, int i) {
    int n = int(f.order());
    int w = f.w();
    std::vector<int> coset = cyclotomic_coset(n, ((i % n) + n) % n);
    std::vector<bool> want(n, false);
    for (int j : coset) want[j] = true;

    BitMatrix m(std::size_t(n) * w, n);
    BitVector rhs(std::size_t(n) * w);
    for (int j = 0; j < n; ++j) {
        for (int t = 0; t < n; ++t) {
            FieldTable::Elem v = f.alpha_pow(std::int64_t(j) * t);
            for (int b = 0; b < w; ++b)
                if ((v >> b) & 1) m.set(std::size_t(j) * w + b, t, true);
        }
        if (want[j]) rhs.set(std::size_t(j) * w, true);  /* field value 1 = poly-basis bit 0 */
    }
    BitVector x = solve_unique(m, rhs);
    Poly2 theta = Poly2::from_bitvector(x);

    Poly2 sq = (theta * theta).mod_xn1(n);
    if (sq != theta) throw std::runtime_error("idempotent: theta^2 != theta mod z^n+1");
    for (int j = 0; j < n; ++j)
        if ((f.eval(theta, f.alpha_pow(j)) == 1) != want[j])
            throw std::runtime_error("idempotent: evaluation pattern check failed");
    return theta;
}

/*
 * Integer identity behind the Goethals/Preparata subset-sum conditions:
 * (2^(m-1)-1) - (2^(m/2-1)+1)(2^(m/2)-2) = 1  and
 * (2^(m-1)-1) - (2^(m/2-1)-1)(2^(m/2)+2) = 1,
 * which force gcd(2^(m/2-1) +- 1, 2^(m-1)-1) = 1.
 */
inline bool gp_gcd_identity_holds(int m) {
    if (m < 4 || m % 2 != 0) throw std::invalid_argument("gp_gcd_identity_holds: m must be even and >= 4");
    std::int64_t n = (std::int64_t(1) << (m - 1)) - 1;
    std::int64_t a = (std::int64_t(1) << (m / 2 - 1));
    std::int64_t b = (std::int64_t(1) << (m / 2));
    bool plus = n - (a + 1) * (b - 2) == 1;
    bool minus = n - (a - 1) * (b + 2) == 1;
    bool gcds = std::gcd(a + 1, n) == 1 && std::gcd(a - 1, n) == 1;
    return plus && minus && gcds;
}

}  // namespace gpc

#endif
