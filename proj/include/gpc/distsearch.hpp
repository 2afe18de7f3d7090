#ifndef GPC_DISTSEARCH_HPP
#define GPC_DISTSEARCH_HPP

#include <atomic>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <thread>
#include <unordered_map>
#include <vector>

#include "gpc/bits.hpp"
#include "gpc/lincode.hpp"
#include "gpc/symplectic.hpp"

namespace gpc {

/* thrown when an enumeration would exceed the permitted step budget */
struct BudgetError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/* sum over w <= wmax of C(n, w) * symbol_base^w, as a double */
inline double combination_enumeration_size(std::size_t n, std::size_t wmax, double symbol_base = 1.0) {
    double total = 0, c = 1;
    for (std::size_t w = 0; w <= wmax && w <= n; ++w) {
        if (w) c = c * double(n - w + 1) / double(w);
        total += c * std::pow(symbol_base, double(w));
    }
    return total;
}

inline void ensure_budget(double steps, unsigned budget_log2) {
    double need = std::log2(std::max(steps, 1.0));
    if (need > double(budget_log2))
        throw BudgetError("about 2^" + std::to_string(need) + " enumeration steps exceed the budget of 2^" +
                          std::to_string(budget_log2));
}

/*
 * Revolving-door walk over the t-subsets of {0, ..., n-1}: consecutive
 * combinations differ by removing one element and inserting another, and
 * the slot array stays sorted ascending throughout.
 */
class RevolvingDoor {
public:
    RevolvingDoor(std::size_t n, std::size_t t) : n_(long(n)), t_(t), c_(t + 2, 0) {
        if (t > n) throw std::invalid_argument("RevolvingDoor: t exceeds n");
        for (std::size_t j = 1; j <= t; ++j) c_[j] = long(j) - 1;
        c_[t + 1] = long(n);
    }

    std::size_t size() const { return t_; }

    /* current combination, ascending; valid while !exhausted */
    const long* indices() const { return c_.data() + 1; }

    /* step to the next combination; false once the walk is complete */
    bool next(long& removed, long& added) {
        if (done_) return false;
        if (t_ == 0 || long(t_) == n_) {
            done_ = true;
            return false;
        }
        if (t_ == 1) {
            if (c_[1] + 1 >= n_) {
                done_ = true;
                return false;
            }
            removed = c_[1];
            added = ++c_[1];
            return true;
        }
        std::size_t j;
        if (t_ & 1) {
            if (c_[1] + 1 < c_[2]) {
                removed = c_[1];
                added = ++c_[1];
                return true;
            }
            j = 2;
            goto r4;
        }
        if (c_[1] > 0) {
            removed = c_[1];
            added = --c_[1];
            return true;
        }
        j = 2;
        goto r5;
    r4:
        if (c_[j] >= long(j)) {
            removed = c_[j];
            added = long(j) - 2;
            c_[j] = c_[j - 1];
            c_[j - 1] = added;
            return true;
        }
        ++j;
    r5:
        if (c_[j] + 1 < c_[j + 1]) {
            removed = c_[j - 1];
            c_[j - 1] = c_[j];
            added = ++c_[j];
            return true;
        }
        ++j;
        if (j <= t_) goto r4;
        done_ = true;
        return false;
    }

private:
    long n_;
    std::size_t t_;
    std::vector<long> c_;  /* c_[1..t] combination, c_[t+1] sentinel */
    bool done_ = false;
};

struct SearchOutcome {
    bool found = false;
    std::size_t weight = 0;  /* valid when found */
    BitVector witness;       /* valid when found */
    std::size_t radius = 0;  /* certified exhaustive up to this weight */
};

/*
 * Meet-in-the-middle minimum-weight solver for H v = s. Build once per
 * check matrix: a table of the column-subset syndromes of weight up to
 * table_weight, keeping per syndrome the two (weight, lex)-least patterns
 * (the second matters only when the best collides with the streamed
 * pattern). Each search then streams subsets of weight up to its
 * stream_weight and pairs them against the table, so one index serves any
 * number of target syndromes. The scan is exhaustive: a miss certifies
 * that no solution of weight <= stream_weight + table_weight exists, and
 * a hit reports the minimum weight with the lexicographically least
 * witness of that weight.
 */
class SyndromeIndex {
public:
    SyndromeIndex(const BitMatrix& check, std::size_t table_weight)
        : r_(check.rows()), n_(check.cols()), table_weight_(table_weight) {
        if (n_ > 65535) throw std::invalid_argument("SyndromeIndex: more than 65535 columns");
        cols_.reserve(n_);
        for (std::size_t j = 0; j < n_; ++j) {
            BitVector col(r_);
            for (std::size_t i = 0; i < r_; ++i)
                if (check.get(i, j)) col.set(i, true);
            cols_.push_back(col);
        }
        mode_ = r_ <= kDirectBits ? kDirect : (r_ <= 64 ? kMap64 : kWide);
        if (mode_ == kDirect) direct_.assign(std::size_t(1) << r_, 0);
        for (std::size_t t = 0; t <= table_weight_; ++t)
            walk(t, [&](const long* idx, std::size_t cnt, const BitVector& syn) { offer(idx, cnt, syn); });
    }

    std::size_t table_weight() const { return table_weight_; }
    std::size_t columns() const { return n_; }

    SearchOutcome search(const BitVector& target, std::size_t stream_weight, bool exclude_zero) const {
        if (target.size() != r_) throw std::invalid_argument("SyndromeIndex::search: syndrome length mismatch");
        SearchOutcome out;
        out.radius = stream_weight + table_weight_;
        std::size_t bestw = out.radius + 1;
        BitVector bestv, probe(r_), cand(n_);
        for (std::size_t t = 0; t <= stream_weight; ++t)
            walk(t, [&](const long* idx, std::size_t cnt, const BitVector& syn) {
                probe = syn;
                probe ^= target;
                const Entry* e = find(probe);
                if (!e) return;
                for (int which = 0; which < e->count; ++which) {
                    const Pattern& q = which ? e->second : e->best;
                    std::size_t w = merged_weight(idx, cnt, q);
                    if (w > bestw || (w == 0 && exclude_zero)) continue;
                    cand.clear_all();
                    for (std::size_t i = 0; i < cnt; ++i) cand.set(std::size_t(idx[i]), true);
                    for (std::uint16_t p : q) cand.flip(p);
                    if (w < bestw || cand < bestv) {
                        bestw = w;
                        bestv = cand;
                    }
                }
            });
        if (bestw <= out.radius) {
            out.found = true;
            out.weight = bestw;
            out.witness = bestv;
        }
        return out;
    }

private:
    using Pattern = std::vector<std::uint16_t>;

    struct Entry {
        Pattern best, second;
        std::uint8_t count = 0;
    };

    static constexpr std::size_t kDirectBits = 24;
    enum Mode { kDirect, kMap64, kWide };

    /* visit every t-subset once with its running syndrome */
    template <class Fn>
    void walk(std::size_t t, Fn&& fn) const {
        BitVector syn(r_);
        if (t == 0) {
            fn(nullptr, 0, syn);
            return;
        }
        if (t > n_) return;
        RevolvingDoor door(n_, t);
        for (std::size_t j = 0; j < t; ++j) syn ^= cols_[std::size_t(door.indices()[j])];
        for (;;) {
            fn(door.indices(), t, syn);
            long rem, add;
            if (!door.next(rem, add)) break;
            syn ^= cols_[std::size_t(rem)];
            syn ^= cols_[std::size_t(add)];
        }
    }

    /*
     * Pattern order matching BitVector order on characteristic vectors:
     * lower weight first; at equal weight, whichever pattern has the
     * larger index at the first disagreement holds a 0 on the earliest
     * differing coordinate.
     */
    static bool pattern_less(const Pattern& a, const Pattern& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        for (std::size_t i = 0; i < a.size(); ++i)
            if (a[i] != b[i]) return a[i] > b[i];
        return false;
    }

    /* |p symdiff q| for sorted index lists */
    static std::size_t merged_weight(const long* idx, std::size_t cnt, const Pattern& q) {
        std::size_t common = 0, i = 0, j = 0;
        while (i < cnt && j < q.size()) {
            long a = idx[i], b = long(q[j]);
            if (a == b) {
                ++common;
                ++i;
                ++j;
            } else if (a < b) {
                ++i;
            } else {
                ++j;
            }
        }
        return cnt + q.size() - 2 * common;
    }

    std::uint64_t pack64(const BitVector& syn) const { return r_ ? syn.word(0) : 0; }

    std::string wide_key(const BitVector& syn) const {
        return std::string(reinterpret_cast<const char*>(syn.words().data()), syn.words().size() * 8);
    }

    Entry& entry_for(const BitVector& syn) {
        std::uint32_t slot;
        if (mode_ == kDirect) {
            std::uint32_t& ref = direct_[std::size_t(pack64(syn))];
            if (!ref) {
                entries_.emplace_back();
                ref = std::uint32_t(entries_.size());
            }
            slot = ref - 1;
        } else if (mode_ == kMap64) {
            auto [it, fresh] = map64_.try_emplace(pack64(syn), std::uint32_t(entries_.size()));
            if (fresh) entries_.emplace_back();
            slot = it->second;
        } else {
            auto [it, fresh] = wide_.try_emplace(wide_key(syn), std::uint32_t(entries_.size()));
            if (fresh) entries_.emplace_back();
            slot = it->second;
        }
        return entries_[slot];
    }

    const Entry* find(const BitVector& syn) const {
        if (mode_ == kDirect) {
            std::uint32_t slot = direct_[std::size_t(pack64(syn))];
            return slot ? &entries_[slot - 1] : nullptr;
        }
        if (mode_ == kMap64) {
            auto it = map64_.find(pack64(syn));
            return it == map64_.end() ? nullptr : &entries_[it->second];
        }
        auto it = wide_.find(wide_key(syn));
        return it == wide_.end() ? nullptr : &entries_[it->second];
    }

    void offer(const long* idx, std::size_t cnt, const BitVector& syn) {
        Entry& e = entry_for(syn);
        Pattern p;
        p.reserve(cnt);
        for (std::size_t i = 0; i < cnt; ++i) p.push_back(std::uint16_t(idx[i]));
        if (e.count == 0) {
            e.best = std::move(p);
            e.count = 1;
        } else if (pattern_less(p, e.best)) {
            e.second = std::move(e.best);
            e.best = std::move(p);
            e.count = 2;
        } else if (e.count == 1) {
            e.second = std::move(p);
            e.count = 2;
        } else if (pattern_less(p, e.second)) {
            e.second = std::move(p);
        }
    }

    std::size_t r_, n_, table_weight_;
    std::vector<BitVector> cols_;
    Mode mode_;
    std::vector<std::uint32_t> direct_;  /* entry index + 1, 0 = empty */
    std::unordered_map<std::uint64_t, std::uint32_t> map64_;
    std::unordered_map<std::string, std::uint32_t> wide_;
    std::vector<Entry> entries_;
};

/*
 * Minimum weight of the coset shift + C within the given radius. The
 * outcome certifies min weight > radius when nothing is found.
 */
inline SearchOutcome coset_min_weight(const LinearCode& c, const BitVector& shift, std::size_t radius,
                                      unsigned budget_log2 = 64) {
    if (radius > c.n) throw std::invalid_argument("coset_min_weight: radius exceeds code length");
    std::size_t a = (radius + 1) / 2, b = radius / 2;
    ensure_budget(combination_enumeration_size(c.n, a) + combination_enumeration_size(c.n, b), budget_log2);
    SyndromeIndex idx(c.check, b);
    return idx.search(c.syndrome(shift), a, false);
}

/* minimum nonzero codeword weight within the radius */
inline SearchOutcome min_weight(const LinearCode& c, std::size_t radius, unsigned budget_log2 = 64) {
    if (radius > c.n) throw std::invalid_argument("min_weight: radius exceeds code length");
    std::size_t a = (radius + 1) / 2, b = radius / 2;
    ensure_budget(combination_enumeration_size(c.n, a) + combination_enumeration_size(c.n, b), budget_log2);
    SyndromeIndex idx(c.check, b);
    return idx.search(BitVector(c.check.rows()), a, true);
}

/*
 * Coset minimum weights for many shifts sharing one code: the syndrome
 * table is built once and scanned per shift, in parallel when workers
 * permit. Results are identical to per-shift coset_min_weight calls.
 */
inline std::vector<SearchOutcome> batch_coset_min_weight(const LinearCode& c,
                                                         const std::vector<BitVector>& shifts,
                                                         std::size_t radius, unsigned workers = 0,
                                                         unsigned budget_log2 = 64) {
    if (radius > c.n) throw std::invalid_argument("batch_coset_min_weight: radius exceeds code length");
    std::size_t a = (radius + 1) / 2, b = radius / 2;
    ensure_budget(combination_enumeration_size(c.n, a) * double(shifts.empty() ? 1 : shifts.size()) +
                      combination_enumeration_size(c.n, b),
                  budget_log2);
    SyndromeIndex idx(c.check, b);
    std::vector<SearchOutcome> out(shifts.size());
    if (workers == 0) workers = std::max(1u, std::thread::hardware_concurrency());
    if (shifts.size() < std::size_t(workers)) workers = unsigned(shifts.size() ? shifts.size() : 1);
    if (workers <= 1) {
        for (std::size_t i = 0; i < shifts.size(); ++i) out[i] = idx.search(c.syndrome(shifts[i]), a, false);
        return out;
    }
    std::atomic<std::size_t> head{0};
    auto drain = [&]() {
        for (std::size_t i; (i = head.fetch_add(1)) < shifts.size();)
            out[i] = idx.search(c.syndrome(shifts[i]), a, false);
    };
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(drain);
    for (std::thread& th : pool) th.join();
    return out;
}

/*
 * Meet-in-the-middle over Pauli patterns: minimum SYMPLECTIC weight in a
 * coset of an additive symplectic code. Columns come in three flavours
 * per position; patterns are DFS-enumerated position-ascending.
 */
class SympIndex {
public:
    SympIndex(const AdditiveSympCode& code, std::size_t table_weight)
        : n_(code.n), r_(code.euclid_check.rows()), table_weight_(table_weight), check_(code.euclid_check) {
        cols_.reserve(3 * n_);
        for (std::size_t i = 0; i < n_; ++i) {
            BitVector cx(r_), cz(r_);
            for (std::size_t row = 0; row < r_; ++row) {
                if (check_.get(row, i)) cx.set(row, true);
                if (check_.get(row, n_ + i)) cz.set(row, true);
            }
            cols_.push_back(cx);
            cols_.push_back(cz);
            cols_.push_back(cx ^ cz);
        }
        mode_ = r_ <= kDirectBits ? kDirect : (r_ <= 64 ? kMap64 : kWide);
        if (mode_ == kDirect) direct_.assign(std::size_t(1) << r_, 0);
        std::vector<std::uint32_t> pat;
        BitVector syn(r_);
        dfs(0, table_weight_, pat, syn, [&](const std::vector<std::uint32_t>& p, const BitVector& s) { offer(p, s); });
    }

    std::size_t table_weight() const { return table_weight_; }

    SearchOutcome search(const SympVector& shift, std::size_t stream_weight, bool exclude_zero) const {
        if (shift.n() != n_) throw std::invalid_argument("SympIndex::search: length mismatch");
        BitVector target = check_.mul_vec(shift.packed());
        SearchOutcome out;
        out.radius = stream_weight + table_weight_;
        std::size_t bestw = out.radius + 1;
        BitVector bestv, probe(r_), cand(2 * n_);
        std::vector<std::uint32_t> pat;
        BitVector syn(r_);
        dfs(0, stream_weight, pat, syn, [&](const std::vector<std::uint32_t>& p, const BitVector& s) {
            probe = s;
            probe ^= target;
            const Entry* e = find(probe);
            if (!e) return;
            for (int which = 0; which < e->count; ++which) {
                const Pattern& q = which ? e->second : e->best;
                std::size_t w = merged_symp_weight(p, q);
                if (w > bestw || (w == 0 && exclude_zero)) continue;
                cand.clear_all();
                toggle(cand, p);
                toggle(cand, q);
                if (w < bestw || cand < bestv) {
                    bestw = w;
                    bestv = cand;
                }
            }
        });
        if (bestw <= out.radius) {
            out.found = true;
            out.weight = bestw;
            out.witness = bestv;
        }
        return out;
    }

private:
    using Pattern = std::vector<std::uint32_t>;  /* entries 3 * position + symbol, ascending */

    struct Entry {
        Pattern best, second;
        std::uint8_t count = 0;
    };

    static constexpr std::size_t kDirectBits = 24;
    enum Mode { kDirect, kMap64, kWide };

    template <class Fn>
    void dfs(std::size_t from, std::size_t room, Pattern& pat, BitVector& syn, Fn&& fn) const {
        fn(pat, syn);
        if (!room) return;
        for (std::size_t pos = from; pos < n_; ++pos)
            for (std::uint32_t sym = 0; sym < 3; ++sym) {
                std::uint32_t id = std::uint32_t(3 * pos + sym);
                pat.push_back(id);
                syn ^= cols_[id];
                dfs(pos + 1, room - 1, pat, syn, fn);
                syn ^= cols_[id];
                pat.pop_back();
            }
    }

    void toggle(BitVector& v, const Pattern& p) const {
        for (std::uint32_t id : p) {
            std::size_t pos = id / 3, sym = id % 3;
            if (sym != 1) v.flip(pos);       /* X or Y */
            if (sym != 0) v.flip(n_ + pos);  /* Z or Y */
        }
    }

    /* symplectic weight of the pattern product: same symbol cancels,
       different symbols fuse into the third */
    static std::size_t merged_symp_weight(const Pattern& a, const Pattern& b) {
        std::size_t w = 0, i = 0, j = 0;
        while (i < a.size() && j < b.size()) {
            std::uint32_t pa = a[i] / 3, pb = b[j] / 3;
            if (pa == pb) {
                if (a[i] != b[j]) ++w;
                ++i;
                ++j;
            } else if (pa < pb) {
                ++w;
                ++i;
            } else {
                ++w;
                ++j;
            }
        }
        return w + (a.size() - i) + (b.size() - j);
    }

    /* order matching BitVector order on the packed (x | z) vectors */
    static bool pattern_less(const Pattern& a, const Pattern& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        for (int half = 0; half < 2; ++half) {
            /* supports in this half, position-ascending */
            std::size_t i = 0, j = 0;
            auto in_half = [&](std::uint32_t id) { return half == 0 ? id % 3 != 1 : id % 3 != 0; };
            for (;;) {
                while (i < a.size() && !in_half(a[i])) ++i;
                while (j < b.size() && !in_half(b[j])) ++j;
                if (i == a.size() || j == b.size()) {
                    if (i == a.size() && j == b.size()) break;
                    /* the exhausted side holds 0 on the first differing coordinate */
                    return i == a.size();
                }
                if (a[i] / 3 != b[j] / 3) return a[i] / 3 > b[j] / 3;
                ++i;
                ++j;
            }
        }
        return false;
    }

    std::uint64_t pack64(const BitVector& syn) const { return r_ ? syn.word(0) : 0; }

    std::string wide_key(const BitVector& syn) const {
        return std::string(reinterpret_cast<const char*>(syn.words().data()), syn.words().size() * 8);
    }

    Entry& entry_for(const BitVector& syn) {
        std::uint32_t slot;
        if (mode_ == kDirect) {
            std::uint32_t& ref = direct_[std::size_t(pack64(syn))];
            if (!ref) {
                entries_.emplace_back();
                ref = std::uint32_t(entries_.size());
            }
            slot = ref - 1;
        } else if (mode_ == kMap64) {
            auto [it, fresh] = map64_.try_emplace(pack64(syn), std::uint32_t(entries_.size()));
            if (fresh) entries_.emplace_back();
            slot = it->second;
        } else {
            auto [it, fresh] = wide_.try_emplace(wide_key(syn), std::uint32_t(entries_.size()));
            if (fresh) entries_.emplace_back();
            slot = it->second;
        }
        return entries_[slot];
    }

    const Entry* find(const BitVector& syn) const {
        if (mode_ == kDirect) {
            std::uint32_t slot = direct_[std::size_t(pack64(syn))];
            return slot ? &entries_[slot - 1] : nullptr;
        }
        if (mode_ == kMap64) {
            auto it = map64_.find(pack64(syn));
            return it == map64_.end() ? nullptr : &entries_[it->second];
        }
        auto it = wide_.find(wide_key(syn));
        return it == wide_.end() ? nullptr : &entries_[it->second];
    }

    void offer(const Pattern& p, const BitVector& syn) {
        Entry& e = entry_for(syn);
        if (e.count == 0) {
            e.best = p;
            e.count = 1;
        } else if (pattern_less(p, e.best)) {
            e.second = std::move(e.best);
            e.best = p;
            e.count = 2;
        } else if (e.count == 1) {
            e.second = p;
            e.count = 2;
        } else if (pattern_less(p, e.second)) {
            e.second = p;
        }
    }

    std::size_t n_, r_, table_weight_;
    BitMatrix check_;
    std::vector<BitVector> cols_;
    Mode mode_;
    std::vector<std::uint32_t> direct_;
    std::unordered_map<std::uint64_t, std::uint32_t> map64_;
    std::unordered_map<std::string, std::uint32_t> wide_;
    std::vector<Entry> entries_;
};

/*
 * Minimum symplectic weight over shift + <code> within the radius;
 * witness is the packed (x | z) vector. A miss certifies min symplectic
 * weight > radius.
 */
inline SearchOutcome symp_min_weight(const AdditiveSympCode& code, const SympVector& shift,
                                     std::size_t radius, unsigned budget_log2 = 64,
                                     bool exclude_zero = false) {
    if (radius > code.n) throw std::invalid_argument("symp_min_weight: radius exceeds code length");
    std::size_t a = (radius + 1) / 2, b = radius / 2;
    ensure_budget(combination_enumeration_size(code.n, a, 3.0) + combination_enumeration_size(code.n, b, 3.0),
                  budget_log2);
    SympIndex idx(code, b);
    return idx.search(shift, a, exclude_zero);
}

}  // namespace gpc

#endif
