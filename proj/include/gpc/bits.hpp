#ifndef GPC_BITS_HPP
#define GPC_BITS_HPP

#include <algorithm>
#include <bit>
#include <cstdint>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace gpc {

/*
 * Packed GF(2) vector of fixed length. Coordinate i lives in bit (i % 64)
 * of word (i / 64), least significant bit first.
 */
class BitVector {
public:
    BitVector() : n_(0) {}
    explicit BitVector(std::size_t n) : n_(n), w_((n + 63) / 64, 0) {}

    std::size_t size() const { return n_; }

    bool get(std::size_t i) const {
        check_index(i);
        return (w_[i >> 6] >> (i & 63)) & 1;
    }

    void set(std::size_t i, bool v) {
        check_index(i);
        std::uint64_t m = std::uint64_t(1) << (i & 63);
        if (v)
            w_[i >> 6] |= m;
        else
            w_[i >> 6] &= ~m;
    }

    void flip(std::size_t i) {
        check_index(i);
        w_[i >> 6] ^= std::uint64_t(1) << (i & 63);
    }

    std::size_t weight() const {
        std::size_t c = 0;
        for (std::uint64_t w : w_) c += std::popcount(w);
        return c;
    }

    bool is_zero() const {
        for (std::uint64_t w : w_)
            if (w) return false;
        return true;
    }

    BitVector& operator^=(const BitVector& o) {
        check_same(o);
        for (std::size_t i = 0; i < w_.size(); ++i) w_[i] ^= o.w_[i];
        return *this;
    }

    friend BitVector operator^(BitVector a, const BitVector& b) { return a ^= b; }

    BitVector& operator&=(const BitVector& o) {
        check_same(o);
        for (std::size_t i = 0; i < w_.size(); ++i) w_[i] &= o.w_[i];
        return *this;
    }

    friend BitVector operator&(BitVector a, const BitVector& b) { return a &= b; }

    BitVector& operator|=(const BitVector& o) {
        check_same(o);
        for (std::size_t i = 0; i < w_.size(); ++i) w_[i] |= o.w_[i];
        return *this;
    }

    friend BitVector operator|(BitVector a, const BitVector& b) { return a |= b; }

    void clear_all() { std::fill(w_.begin(), w_.end(), 0); }

    /* parity of the AND, i.e. the GF(2) inner product */
    bool dot(const BitVector& o) const {
        check_same(o);
        std::uint64_t acc = 0;
        for (std::size_t i = 0; i < w_.size(); ++i) acc ^= w_[i] & o.w_[i];
        return std::popcount(acc) & 1;
    }

    bool operator==(const BitVector& o) const { return n_ == o.n_ && w_ == o.w_; }
    bool operator!=(const BitVector& o) const { return !(*this == o); }

    /*
     * Coordinate-ascending lexicographic order: at the first differing
     * coordinate, the vector holding 0 is smaller.
     */
    bool operator<(const BitVector& o) const {
        check_same(o);
        for (std::size_t i = 0; i < w_.size(); ++i) {
            std::uint64_t d = w_[i] ^ o.w_[i];
            if (d) {
                int b = std::countr_zero(d);
                return ((w_[i] >> b) & 1) == 0;
            }
        }
        return false;
    }

    /* bits [lo, lo+len) as a fresh vector */
    BitVector slice(std::size_t lo, std::size_t len) const {
        if (lo + len > n_) throw std::invalid_argument("BitVector::slice: range out of bounds");
        BitVector r(len);
        for (std::size_t i = 0; i < len; ++i)
            if (get(lo + i)) r.set(i, true);
        return r;
    }

    friend BitVector concat(const BitVector& a, const BitVector& b) {
        BitVector r(a.n_ + b.n_);
        for (std::size_t i = 0; i < a.n_; ++i)
            if (a.get(i)) r.set(i, true);
        for (std::size_t i = 0; i < b.n_; ++i)
            if (b.get(i)) r.set(a.n_ + i, true);
        return r;
    }

    const std::vector<std::uint64_t>& words() const { return w_; }
    std::uint64_t word(std::size_t i) const { return w_[i]; }

    /*
     * Hex codec: one big-endian hex group per 64-bit word, word 0 first,
     * the final group trimmed to ceil(bits/4) digits. Coordinate 0 is the
     * least significant bit of the first group.
     */
    std::string to_hex() const {
        static const char* digits = "0123456789abcdef";
        std::string out;
        for (std::size_t wi = 0; wi < w_.size(); ++wi) {
            std::size_t bits = (wi + 1 == w_.size()) ? n_ - 64 * wi : 64;
            std::size_t nd = (bits + 3) / 4;
            std::string grp(nd, '0');
            std::uint64_t v = w_[wi];
            for (std::size_t d = 0; d < nd; ++d) {
                grp[nd - 1 - d] = digits[v & 0xf];
                v >>= 4;
            }
            out += grp;
        }
        return out;
    }

    static BitVector from_hex(std::size_t n, const std::string& s) {
        BitVector r(n);
        std::size_t pos = 0;
        for (std::size_t wi = 0; wi < r.w_.size(); ++wi) {
            std::size_t bits = (wi + 1 == r.w_.size()) ? n - 64 * wi : 64;
            std::size_t nd = (bits + 3) / 4;
            if (pos + nd > s.size()) throw std::invalid_argument("BitVector::from_hex: string too short");
            std::uint64_t v = 0;
            for (std::size_t d = 0; d < nd; ++d) {
                char c = s[pos + d];
                int x;
                if (c >= '0' && c <= '9')
                    x = c - '0';
                else if (c >= 'a' && c <= 'f')
                    x = c - 'a' + 10;
                else if (c >= 'A' && c <= 'F')
                    x = c - 'A' + 10;
                else
                    throw std::invalid_argument("BitVector::from_hex: bad digit");
                v = (v << 4) | std::uint64_t(x);
            }
            if (bits < 64 && bits % 4 != 0 && (v >> bits) != 0)
                throw std::invalid_argument("BitVector::from_hex: stray bits beyond length");
            r.w_[wi] = v;
            pos += nd;
        }
        if (pos != s.size()) throw std::invalid_argument("BitVector::from_hex: string too long");
        return r;
    }

private:
    void check_index(std::size_t i) const {
        if (i >= n_) throw std::out_of_range("BitVector: index out of range");
    }
    void check_same(const BitVector& o) const {
        if (n_ != o.n_) throw std::invalid_argument("BitVector: length mismatch");
    }

    std::size_t n_;
    std::vector<std::uint64_t> w_;
};

/* GF(2) matrix stored as rows of equal length. */
class BitMatrix {
public:
    BitMatrix() : cols_(0) {}
    BitMatrix(std::size_t rows, std::size_t cols) : cols_(cols), rows_(rows, BitVector(cols)) {}

    std::size_t rows() const { return rows_.size(); }
    std::size_t cols() const { return cols_; }

    BitVector& row(std::size_t i) { return rows_.at(i); }
    const BitVector& row(std::size_t i) const { return rows_.at(i); }

    bool get(std::size_t i, std::size_t j) const { return rows_.at(i).get(j); }
    void set(std::size_t i, std::size_t j, bool v) { rows_.at(i).set(j, v); }

    void append_row(const BitVector& r) {
        if (rows_.empty() && cols_ == 0) cols_ = r.size();
        if (r.size() != cols_) throw std::invalid_argument("BitMatrix::append_row: length mismatch");
        rows_.push_back(r);
    }

    bool operator==(const BitMatrix& o) const { return cols_ == o.cols_ && rows_ == o.rows_; }

    /* H * v^T as a rows()-bit syndrome */
    BitVector mul_vec(const BitVector& v) const {
        BitVector s(rows());
        for (std::size_t i = 0; i < rows(); ++i)
            if (rows_[i].dot(v)) s.set(i, true);
        return s;
    }

    /* (A * B) with A = *this acting on B's rows */
    BitMatrix mul(const BitMatrix& b) const {
        if (cols_ != b.rows()) throw std::invalid_argument("BitMatrix::mul: shape mismatch");
        BitMatrix r(rows(), b.cols());
        for (std::size_t i = 0; i < rows(); ++i)
            for (std::size_t j = 0; j < cols_; ++j)
                if (rows_[i].get(j)) r.rows_[i] ^= b.rows_[j];
        return r;
    }

    BitMatrix transposed() const {
        BitMatrix r(cols_, rows());
        for (std::size_t i = 0; i < rows(); ++i)
            for (std::size_t j = 0; j < cols_; ++j)
                if (rows_[i].get(j)) r.set(j, i, true);
        return r;
    }

    /*
     * In-place reduced row echelon form; returns the pivot column of each
     * of the first rank() rows.
     */
    std::vector<std::size_t> rref() {
        std::vector<std::size_t> pivots;
        std::size_t r = 0;
        for (std::size_t c = 0; c < cols_ && r < rows(); ++c) {
            std::size_t sel = rows();
            for (std::size_t i = r; i < rows(); ++i)
                if (rows_[i].get(c)) {
                    sel = i;
                    break;
                }
            if (sel == rows()) continue;
            std::swap(rows_[r], rows_[sel]);
            for (std::size_t i = 0; i < rows(); ++i)
                if (i != r && rows_[i].get(c)) rows_[i] ^= rows_[r];
            pivots.push_back(c);
            ++r;
        }
        return pivots;
    }

    std::size_t rank() const {
        BitMatrix tmp(*this);
        return tmp.rref().size();
    }

    /*
     * Basis of {x : M x^T = 0} where M = *this, one kernel vector per
     * non-pivot column.
     */
    BitMatrix kernel() const {
        BitMatrix R(*this);
        std::vector<std::size_t> piv = R.rref();
        std::vector<bool> is_piv(cols_, false);
        for (std::size_t c : piv) is_piv[c] = true;
        BitMatrix K(0, cols_);
        for (std::size_t c = 0; c < cols_; ++c) {
            if (is_piv[c]) continue;
            BitVector x(cols_);
            x.set(c, true);
            for (std::size_t i = 0; i < piv.size(); ++i)
                if (R.rows_[i].get(c)) x.set(piv[i], true);
            K.append_row(x);
        }
        return K;
    }

private:
    std::size_t cols_;
    std::vector<BitVector> rows_;
};

/*
 * Incremental GF(2) eliminator: feed rows, it keeps an echelon basis and
 * reports whether each new row was independent of everything seen so far.
 */
class Eliminator {
public:
    explicit Eliminator(std::size_t cols) : cols_(cols) {}

    /* reduce v against the current basis; empty result means dependent */
    BitVector reduce(BitVector v) const {
        for (std::size_t i = 0; i < basis_.size(); ++i)
            if (v.get(pivot_[i])) v ^= basis_[i];
        return v;
    }

    bool contains(const BitVector& v) const { return reduce(v).is_zero(); }

    /* returns true (and absorbs the reduced row) if v was independent */
    bool add(const BitVector& v) {
        BitVector r = reduce(v);
        if (r.is_zero()) return false;
        std::size_t p = 0;
        while (!r.get(p)) ++p;
        for (std::size_t i = 0; i < basis_.size(); ++i)
            if (basis_[i].get(p)) basis_[i] ^= r;
        basis_.push_back(r);
        pivot_.push_back(p);
        return true;
    }

    std::size_t rank() const { return basis_.size(); }
    std::size_t cols() const { return cols_; }

private:
    std::size_t cols_;
    std::vector<BitVector> basis_;
    std::vector<std::size_t> pivot_;
};

inline BitMatrix identity(std::size_t n) {
    BitMatrix r(n, n);
    for (std::size_t i = 0; i < n; ++i) r.set(i, i, true);
    return r;
}

/* true when every row of b lies in the row space of a */
inline bool row_space_contains(const BitMatrix& a, const BitMatrix& b) {
    if (a.cols() != b.cols()) throw std::invalid_argument("row_space_contains: width mismatch");
    Eliminator e(a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) e.add(a.row(i));
    for (std::size_t i = 0; i < b.rows(); ++i)
        if (!e.contains(b.row(i))) return false;
    return true;
}

/*
 * Unique solution of M x^T = b over GF(2); throws if the system is
 * inconsistent or underdetermined.
 */
inline BitVector solve_unique(const BitMatrix& m, const BitVector& b) {
    if (m.rows() != b.size()) throw std::invalid_argument("solve_unique: shape mismatch");
    BitMatrix aug(m.rows(), m.cols() + 1);
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j)
            if (m.get(i, j)) aug.set(i, j, true);
        if (b.get(i)) aug.set(i, m.cols(), true);
    }
    std::vector<std::size_t> piv = aug.rref();
    BitVector x(m.cols());
    std::size_t solved = 0;
    for (std::size_t i = 0; i < piv.size(); ++i) {
        if (piv[i] == m.cols()) throw std::runtime_error("solve_unique: inconsistent system");
        x.set(piv[i], aug.get(i, m.cols()));
        ++solved;
    }
    if (solved != m.cols()) throw std::runtime_error("solve_unique: solution not unique");
    return x;
}

}  // namespace gpc

#endif
