#pragma once

// High-throughput comparison of the superpolarization oracle against the
// Laplace-expansion elements, over exhaustive tableau pairs and monomials.
// Variables are packed one byte each ((symbol<<4)|column) and coefficients
// ride in int64 (magnitudes here stay tiny; conversion asserts it), which
// keeps the full sweep tractable on a single core. The packed engine is
// cross-checked against the generic supersymmetric module by the unit tests
// before this sweep is trusted.

#include <algorithm>
#include <array>
#include <cstdint>
#include <functional>
#include <limits>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "koszul/capelli.hpp"
#include "koszul/tableaux.hpp"

namespace koszul {

struct OracleSweepOptions {
    int n = 4;                // proper alphabet bound (<= 4 in packed form)
    int max_shape_weight = 4; // |lambda| bound for tableau pairs
    int max_degree = 4;       // monomial degree bound
    bool determinantal = true;
    bool star = true;
    bool young = true;
    std::function<void(const std::string&)> progress = {};
};

struct OracleSweepResult {
    bool ok = true;
    std::uint64_t pairs = 0;        // (pair, flavor) combinations verified
    std::uint64_t comparisons = 0;  // nontrivial monomial equalities checked
    std::string failure;
};

namespace sweepdetail {

// Symbol codes inside a packed variable byte: proper 1..4, alpha 5..8, beta 9..12.
constexpr std::uint8_t kAlphaBase = 4;
constexpr std::uint8_t kBetaBase = 8;

inline bool odd_byte(std::uint8_t b) {
    const std::uint8_t s = b >> 4;
    return s > kAlphaBase && s <= kAlphaBase + 4;
}
inline int code_parity(std::uint8_t code) {
    return (code > kAlphaBase && code <= kBetaBase) ? 0 : 1;
}

using Mono = std::uint64_t;  // variable bytes sorted ascending from the low end
using Coef = long long;
struct Term {
    Mono m;
    Coef c;
};

inline int unpack(Mono m, std::uint8_t* out) {
    int d = 0;
    while (m != 0) {
        out[d++] = static_cast<std::uint8_t>(m & 0xff);
        m >>= 8;
    }
    return d;
}
inline Mono pack(const std::uint8_t* b, int d) {
    Mono m = 0;
    for (int i = d - 1; i >= 0; --i) m = (m << 8) | b[i];
    return m;
}

inline void merge_terms(std::vector<Term>& v) {
    std::sort(v.begin(), v.end(), [](const Term& a, const Term& b) { return a.m < b.m; });
    std::size_t w = 0;
    for (std::size_t r = 0; r < v.size(); ++r) {
        if (w > 0 && v[w - 1].m == v[r].m)
            v[w - 1].c += v[r].c;
        else
            v[w++] = v[r];
    }
    v.resize(w);
    std::erase_if(v, [](const Term& t) { return t.c == 0; });
}

// Sizes stay tiny during a chain, so a linear scan beats sorting.
inline void emit_term(std::vector<Term>& out, Mono m, Coef c) {
    for (Term& t : out)
        if (t.m == m) {
            t.c += c;
            return;
        }
    out.push_back({m, c});
}

inline void drop_zeros(std::vector<Term>& v) {
    std::erase_if(v, [](const Term& t) { return t.c == 0; });
}

/// One superpolarization step D_{a,b} over a term list.
inline void apply_D(std::uint8_t acode, std::uint8_t bcode, int dpar,
                    const std::vector<Term>& in, std::vector<Term>& out) {
    out.clear();
    std::uint8_t buf[8], nb[8];
    for (const Term& t : in) {
        if (t.c == 0) continue;
        const int d = unpack(t.m, buf);
        int odd_prefix = 0;
        for (int idx = 0; idx < d; ++idx) {
            const std::uint8_t b = buf[idx];
            if ((b >> 4) == bcode) {
                int sign = (dpar != 0 && (odd_prefix & 1) != 0) ? -1 : 1;
                const std::uint8_t w = static_cast<std::uint8_t>((acode << 4) | (b & 0x0f));
                for (int k = 0; k < d; ++k) nb[k] = buf[k];
                nb[idx] = w;
                const bool wodd = odd_byte(w);
                int pos = idx;
                while (pos > 0 && nb[pos - 1] > nb[pos]) {
                    if (wodd && odd_byte(nb[pos - 1])) sign = -sign;
                    std::swap(nb[pos - 1], nb[pos]);
                    --pos;
                }
                while (pos + 1 < d && nb[pos] > nb[pos + 1]) {
                    if (wodd && odd_byte(nb[pos + 1])) sign = -sign;
                    std::swap(nb[pos], nb[pos + 1]);
                    ++pos;
                }
                const bool dead = wodd && ((pos > 0 && nb[pos - 1] == w) ||
                                           (pos + 1 < d && nb[pos + 1] == w));
                if (!dead) emit_term(out, pack(nb, d), t.c * sign);
            }
            if (odd_byte(b)) ++odd_prefix;
        }
    }
}

struct DOp {
    std::uint8_t a, b;
    int dpar;
};

/// Apply a chain of steps given in application order (first entry first).
inline void run_chain(const std::vector<DOp>& chain, std::vector<Term>& cur,
                      std::vector<Term>& tmp) {
    for (const DOp& op : chain) {
        if (cur.empty()) return;
        apply_D(op.a, op.b, op.dpar, cur, tmp);
        cur.swap(tmp);
    }
    drop_zeros(cur);
}

// Flat form of a U(gl(n)) element: each term is a generator word packed into
// a u64 key (bytes (i<<4)|j in application order, i.e. rightmost generator
// first), with the row multiset the word needs from the polynomial.
struct ElemTerm {
    Mono ops = 0;
    int len = 0;
    Coef c = 0;
    std::uint16_t needs = 0;  // nibble-packed row counts, rows 1..4
};
using FlatElement = std::vector<ElemTerm>;

inline std::uint16_t add_row(std::uint16_t mask, int row) {
    return static_cast<std::uint16_t>(mask + (1u << (4 * (row - 1))));
}
inline bool dominates(std::uint16_t big, std::uint16_t small) {
    for (int k = 0; k < 4; ++k) {
        if (((big >> (4 * k)) & 0xf) < ((small >> (4 * k)) & 0xf)) return false;
    }
    return true;
}

inline std::uint16_t word_needs(const std::uint8_t* ops, int len) {
    // Simulate consumption/creation in application order.
    std::array<int, 5> avail{};
    std::uint16_t needs = 0;
    for (int k = 0; k < len; ++k) {
        const int i = ops[k] >> 4, j = ops[k] & 0x0f;
        if (avail[static_cast<std::size_t>(j)] > 0)
            --avail[static_cast<std::size_t>(j)];
        else
            needs = add_row(needs, j);
        ++avail[static_cast<std::size_t>(i)];
    }
    return needs;
}

inline FlatElement flatten(const UEAElement& u) {
    FlatElement out;
    for (const auto& [m, c] : u.terms()) {
        ElemTerm t;
        if (c > Int(1) << 40 || c < -(Int(1) << 40))
            throw std::logic_error("sweep: coefficient exceeds the packed range");
        t.c = static_cast<Coef>(c);
        std::uint8_t ops[8];
        const auto word = m.word();
        if (word.size() > 8) throw std::logic_error("sweep: word too long for packed form");
        t.len = static_cast<int>(word.size());
        // Application order: rightmost generator first.
        for (int k = 0; k < t.len; ++k) {
            const Generator g = word[static_cast<std::size_t>(t.len - 1 - k)];
            ops[k] = static_cast<std::uint8_t>((g.row << 4) | g.col);
        }
        t.ops = pack(ops, t.len);
        t.needs = word_needs(ops, t.len);
        out.push_back(t);
    }
    return out;
}

inline void merge_elements(FlatElement& v) {
    std::sort(v.begin(), v.end(), [](const ElemTerm& a, const ElemTerm& b) {
        return std::make_pair(a.len, a.ops) < std::make_pair(b.len, b.ops);
    });
    std::size_t w = 0;
    for (std::size_t r = 0; r < v.size(); ++r) {
        if (w > 0 && v[w - 1].ops == v[r].ops && v[w - 1].len == v[r].len)
            v[w - 1].c += v[r].c;
        else
            v[w++] = v[r];
    }
    v.resize(w);
    std::erase_if(v, [](const ElemTerm& t) { return t.c == 0; });
}

// Column element caches, keyed by the packed index lists.
class ColumnCache {
public:
    const FlatElement& det(const std::vector<int>& is, const std::vector<int>& js) {
        return get(det_, is, js, /*star=*/false);
    }
    const FlatElement& star(const std::vector<int>& is, const std::vector<int>& js) {
        return get(star_, is, js, /*star=*/true);
    }

private:
    static std::uint64_t key_half(const std::vector<int>& v) {
        std::uint64_t k = static_cast<std::uint64_t>(v.size());
        for (int x : v) k = (k << 4) | static_cast<std::uint64_t>(x);
        return k;
    }
    const FlatElement& get(std::map<std::pair<std::uint64_t, std::uint64_t>, FlatElement>& cache,
                           const std::vector<int>& is, const std::vector<int>& js, bool star) {
        const auto key = std::make_pair(key_half(is), key_half(js));
        auto it = cache.find(key);
        if (it != cache.end()) return it->second;
        FlatElement flat =
            flatten(star ? column_capelli_star(is, js) : column_capelli(is, js));
        merge_elements(flat);
        return cache.emplace(key, std::move(flat)).first->second;
    }
    std::map<std::pair<std::uint64_t, std::uint64_t>, FlatElement> det_, star_;
};

// Row-permutation tuples of a shape: position permutation plus its sign.
struct SigmaTuple {
    std::vector<int> perm;
    int sign;
};

inline std::vector<SigmaTuple> sigma_tuples(const Partition& shape) {
    std::vector<SigmaTuple> out{{.perm = {}, .sign = 1}};
    int offset = 0;
    for (int k = 0; k < shape.rows(); ++k) {
        const int len = shape.part(k);
        std::vector<int> idx(static_cast<std::size_t>(len));
        std::iota(idx.begin(), idx.end(), 0);
        std::vector<std::pair<std::vector<int>, int>> row_perms;
        do {
            int sign = 1;
            for (std::size_t a = 0; a < idx.size(); ++a)
                for (std::size_t b = a + 1; b < idx.size(); ++b)
                    if (idx[a] > idx[b]) sign = -sign;
            row_perms.emplace_back(idx, sign);
        } while (std::next_permutation(idx.begin(), idx.end()));
        std::vector<SigmaTuple> next;
        next.reserve(out.size() * row_perms.size());
        for (const auto& base : out)
            for (const auto& [p, s] : row_perms) {
                SigmaTuple t = base;
                for (int x : p) t.perm.push_back(offset + x);
                t.sign *= s;
                next.push_back(std::move(t));
            }
        out = std::move(next);
        offset += len;
    }
    return out;
}

// Readings via a mixed-radix counter.
inline std::vector<std::vector<int>> all_readings(int n, int d) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur(static_cast<std::size_t>(d), 1);
    if (d == 0) {
        out.push_back({});
        return out;
    }
    while (true) {
        out.push_back(cur);
        std::size_t k = 0;
        while (k < cur.size() && ++cur[k] > n) cur[k++] = 1;
        if (k == cur.size()) break;
    }
    return out;
}

inline Tableau tableau_from_reading(const Partition& shape, const std::vector<int>& reading) {
    std::vector<std::vector<int>> rows;
    std::size_t pos = 0;
    for (int k = 0; k < shape.rows(); ++k) {
        rows.emplace_back(reading.begin() + static_cast<long>(pos),
                          reading.begin() + static_cast<long>(pos) + shape.part(k));
        pos += static_cast<std::size_t>(shape.part(k));
    }
    return Tableau(std::move(rows));
}

// Proper monomial basis of degree <= D, packed, with row-content buckets.
struct MonomialBasis {
    std::vector<Mono> monos;
    std::vector<std::uint16_t> rowmask;
    // bucket -> (mask, monomial indices)
    std::vector<std::pair<std::uint16_t, std::vector<int>>> buckets;

    MonomialBasis(int n, int max_degree) {
        std::vector<std::uint8_t> vars;
        for (int i = 1; i <= n; ++i)
            for (int j = 1; j <= n; ++j)
                vars.push_back(static_cast<std::uint8_t>((i << 4) | j));
        std::vector<std::uint8_t> cur;
        auto rec = [&](auto&& self, std::size_t from, int left) -> void {
            monos.push_back(pack(cur.data(), static_cast<int>(cur.size())));
            std::uint16_t mask = 0;
            for (std::uint8_t b : cur) mask = add_row(mask, b >> 4);
            rowmask.push_back(mask);
            if (left == 0) return;
            for (std::size_t v = from; v < vars.size(); ++v) {
                cur.push_back(vars[v]);
                self(self, v, left - 1);
                cur.pop_back();
            }
        };
        rec(rec, 0, max_degree);
        std::map<std::uint16_t, std::vector<int>> by_mask;
        for (std::size_t k = 0; k < monos.size(); ++k)
            by_mask[rowmask[k]].push_back(static_cast<int>(k));
        for (auto& [mask, idx] : by_mask) buckets.emplace_back(mask, std::move(idx));
    }
};

// Per-monomial accumulation with cheap reset between pairs.
struct ResultStore {
    std::vector<std::vector<Term>> slots;
    std::vector<int> touched;
    std::vector<char> mark;

    explicit ResultStore(std::size_t size) : slots(size), mark(size, 0) {}
    std::vector<Term>& at(int p) {
        if (!mark[static_cast<std::size_t>(p)]) {
            mark[static_cast<std::size_t>(p)] = 1;
            touched.push_back(p);
        }
        return slots[static_cast<std::size_t>(p)];
    }
    void reset() {
        for (int p : touched) {
            slots[static_cast<std::size_t>(p)].clear();
            mark[static_cast<std::size_t>(p)] = 0;
        }
        touched.clear();
    }
};

inline std::string describe_mono(Mono m) {
    std::uint8_t buf[8];
    const int d = unpack(m, buf);
    std::ostringstream os;
    if (d == 0) os << "1";
    for (int k = 0; k < d; ++k) {
        const int sym = buf[k] >> 4, col = buf[k] & 0x0f;
        if (sym <= kAlphaBase)
            os << "(" << sym << "|" << col << ")";
        else if (sym <= kBetaBase)
            os << "(a" << sym - kAlphaBase << "|" << col << ")";
        else
            os << "(b" << sym - kBetaBase << "|" << col << ")";
    }
    return os.str();
}

}  // namespace sweepdetail

/// Exhaustively compare oracle actions with Laplace-expansion element actions
/// for every same-shape tableau pair and every proper monomial in range.
inline OracleSweepResult run_oracle_sweep(const OracleSweepOptions& opt) {
    using namespace sweepdetail;
    if (opt.n < 1 || opt.n > 4)
        throw std::invalid_argument("oracle sweep: packed engine supports n <= 4");
    if (opt.max_shape_weight > 6 || opt.max_degree > 6)
        throw std::invalid_argument("oracle sweep: size guard exceeded");

    OracleSweepResult res;
    const MonomialBasis basis(opt.n, opt.max_degree);
    ColumnCache cc;
    std::vector<Term> cur, tmp;

    // needs-mask -> indices of monomials whose row content dominates it.
    std::map<std::uint16_t, std::vector<int>> live_cache;
    auto live_for = [&](std::uint16_t needs) -> const std::vector<int>& {
        auto it = live_cache.find(needs);
        if (it != live_cache.end()) return it->second;
        std::vector<int> live;
        for (const auto& [mask, idx] : basis.buckets)
            if (dominates(mask, needs)) live.insert(live.end(), idx.begin(), idx.end());
        std::sort(live.begin(), live.end());
        return live_cache.emplace(needs, std::move(live)).first->second;
    };

    // Generator words recur across thousands of elements, so the action of a
    // word on the whole basis is computed once: a sparse (monomial -> result)
    // table at coefficient 1, scaled at use.
    struct WordActions {
        std::vector<int> ps;
        std::vector<std::uint32_t> offs{0};
        std::vector<Term> terms;
    };
    std::map<Mono, WordActions> word_cache;
    auto word_actions = [&](const ElemTerm& term) -> const WordActions& {
        auto it = word_cache.find(term.ops);
        if (it != word_cache.end()) return it->second;
        WordActions wa;
        std::uint8_t ops[8];
        unpack(term.ops, ops);
        for (int p : live_for(term.needs)) {
            cur.assign(1, Term{basis.monos[static_cast<std::size_t>(p)], 1});
            for (int k = 0; k < term.len && !cur.empty(); ++k) {
                apply_D(ops[k] >> 4, ops[k] & 0x0f, 0, cur, tmp);
                cur.swap(tmp);
            }
            drop_zeros(cur);
            if (cur.empty()) continue;
            wa.ps.push_back(p);
            wa.terms.insert(wa.terms.end(), cur.begin(), cur.end());
            wa.offs.push_back(static_cast<std::uint32_t>(wa.terms.size()));
        }
        return word_cache.emplace(term.ops, std::move(wa)).first->second;
    };

    enum Flavor { kDet = 0, kStar = 1, kYoung = 2 };
    std::vector<Flavor> flavors;
    if (opt.determinantal) flavors.push_back(kDet);
    if (opt.star) flavors.push_back(kStar);
    if (opt.young) flavors.push_back(kYoung);

    ResultStore elem_store(basis.monos.size());
    ResultStore oracle_store(basis.monos.size());

    auto fail = [&](const std::string& what, const Tableau& s, const Tableau& t, Mono p) {
        res.ok = false;
        std::ostringstream os;
        os << what << " at S=\"" << to_text(s) << "\" T=\"" << to_text(t) << "\" p="
           << describe_mono(p);
        res.failure = os.str();
    };

    // Element action on every compatible monomial, accumulated per monomial.
    auto run_element = [&](const FlatElement& elem, ResultStore& store) {
        store.reset();
        for (const ElemTerm& term : elem) {
            if (term.len == 0)
                throw std::logic_error("sweep: constant element term unsupported");
            const WordActions& wa = word_actions(term);
            for (std::size_t k = 0; k < wa.ps.size(); ++k) {
                auto& slot = store.at(wa.ps[k]);
                for (std::uint32_t o = wa.offs[k]; o < wa.offs[k + 1]; ++o)
                    slot.push_back({wa.terms[o].m, wa.terms[o].c * term.c});
            }
        }
        for (int p : store.touched) merge_terms(store.slots[static_cast<std::size_t>(p)]);
    };

    // The oracle's S-side block, applied to a stored T-half.
    auto run_oracle_block = [&](const std::vector<DOp>& s_block,
                                const std::vector<std::vector<Term>>& q,
                                const std::vector<int>& live, ResultStore& store,
                                bool& residue) {
        store.reset();
        residue = false;
        for (std::size_t li = 0; li < live.size(); ++li) {
            if (q[li].empty()) continue;
            cur = q[li];
            run_chain(s_block, cur, tmp);
            if (cur.empty()) continue;
            merge_terms(cur);
            if (cur.empty()) continue;
            for (const Term& term : cur) {
                std::uint8_t buf[8];
                const int len = unpack(term.m, buf);
                for (int k = 0; k < len; ++k)
                    if ((buf[k] >> 4) > kAlphaBase) {
                        residue = true;
                        return;
                    }
            }
            store.at(live[li]) = cur;
        }
    };

    // Compare two stores; both hold merged, sorted, zero-free slots.
    static const std::vector<Term> kEmpty;
    auto stores_match = [&](ResultStore& lhs, ResultStore& rhs, Mono& where) {
        for (int p : lhs.touched) {
            const auto& l = lhs.slots[static_cast<std::size_t>(p)];
            const bool rhas = rhs.mark[static_cast<std::size_t>(p)] != 0;
            const auto& r = rhas ? rhs.slots[static_cast<std::size_t>(p)] : kEmpty;
            if (l.size() != r.size() ||
                !std::equal(l.begin(), l.end(), r.begin(), [](const Term& a, const Term& b) {
                    return a.m == b.m && a.c == b.c;
                })) {
                where = basis.monos[static_cast<std::size_t>(p)];
                return false;
            }
            ++res.comparisons;
        }
        for (int p : rhs.touched) {
            if (lhs.mark[static_cast<std::size_t>(p)]) continue;
            if (!rhs.slots[static_cast<std::size_t>(p)].empty()) {
                where = basis.monos[static_cast<std::size_t>(p)];
                return false;
            }
            ++res.comparisons;
        }
        return true;
    };

    for (int d = 1; d <= opt.max_shape_weight && res.ok; ++d) {
        for (const Partition& shape : partitions_of(d)) {
            if (!res.ok) break;
            std::vector<int> row_of, col_of;
            for (int k = 0; k < shape.rows(); ++k)
                for (int c = 0; c < shape.part(k); ++c) {
                    row_of.push_back(k + 1);
                    col_of.push_back(c + 1);
                }
            const auto sigmas = sigma_tuples(shape);
            const auto readings = all_readings(opt.n, d);

            // Group the T readings into column-permutation orbits: the Young
            // element is the same for every member, so its actions are
            // computed once per orbit and compared against each member.
            std::map<std::vector<int>, std::vector<int>> orbit_of;
            for (int ti = 0; ti < static_cast<int>(readings.size()); ++ti) {
                std::vector<std::vector<int>> cols(static_cast<std::size_t>(shape.part(0)));
                for (int r = 0; r < d; ++r)
                    cols[static_cast<std::size_t>(col_of[static_cast<std::size_t>(r)] - 1)]
                        .push_back(readings[static_cast<std::size_t>(ti)]
                                           [static_cast<std::size_t>(r)]);
                std::vector<int> key;
                for (auto& c : cols) {
                    std::sort(c.begin(), c.end());
                    key.push_back(-1);
                    key.insert(key.end(), c.begin(), c.end());
                }
                orbit_of[key].push_back(ti);
            }

            // Per-orbit cache of Young element actions: S index -> sorted
            // (monomial index, merged terms) list.
            std::vector<std::vector<std::pair<int, std::vector<Term>>>> young_elem;

            for (const auto& [okey, orbit] : orbit_of) {
                if (!res.ok) break;
                if (opt.young) {
                    young_elem.assign(readings.size(), {});
                }
                bool young_filled = false;

                for (int ti : orbit) {
                    if (!res.ok) break;
                    const auto& t_reading = readings[static_cast<std::size_t>(ti)];
                    const Tableau t_tab = tableau_from_reading(shape, t_reading);
                    std::uint16_t t_needs = 0;
                    for (int v : t_reading) t_needs = add_row(t_needs, v);
                    const std::vector<int>& live = live_for(t_needs);

                    std::vector<std::vector<int>> colperm_readings;
                    if (opt.young && !young_filled)
                        for (const Tableau& tb : column_permutations(t_tab))
                            colperm_readings.push_back(tb.reading());

                    // T-side word prefixes in application order.
                    std::vector<DOp> det_prefix, star_prefix, young_prefix;
                    for (int r = d - 1; r >= 0; --r) {
                        const auto arow = static_cast<std::uint8_t>(
                            kAlphaBase + row_of[static_cast<std::size_t>(r)]);
                        const auto brow = static_cast<std::uint8_t>(
                            kBetaBase + row_of[static_cast<std::size_t>(r)]);
                        const auto bcol = static_cast<std::uint8_t>(
                            kBetaBase + col_of[static_cast<std::size_t>(r)]);
                        const auto tr = static_cast<std::uint8_t>(
                            t_reading[static_cast<std::size_t>(r)]);
                        det_prefix.push_back({arow, tr, 1});
                        star_prefix.push_back({brow, tr, 0});
                        young_prefix.push_back({bcol, tr, 0});
                    }
                    for (int r = d - 1; r >= 0; --r)
                        young_prefix.push_back(
                            {static_cast<std::uint8_t>(
                                 kAlphaBase + row_of[static_cast<std::size_t>(r)]),
                             static_cast<std::uint8_t>(
                                 kBetaBase + col_of[static_cast<std::size_t>(r)]),
                             1});

                    // Evaluate the T-halves once per live monomial.
                    std::vector<std::vector<Term>> q_det, q_star, q_young;
                    auto fill_q = [&](const std::vector<DOp>& prefix,
                                      std::vector<std::vector<Term>>& q) {
                        q.assign(live.size(), {});
                        for (std::size_t li = 0; li < live.size(); ++li) {
                            cur.assign(1, Term{basis.monos[static_cast<std::size_t>(live[li])], 1});
                            run_chain(prefix, cur, tmp);
                            q[li] = cur;
                        }
                    };
                    if (opt.determinantal) fill_q(det_prefix, q_det);
                    if (opt.star) fill_q(star_prefix, q_star);
                    if (opt.young) fill_q(young_prefix, q_young);

                    for (std::size_t si = 0; si < readings.size() && res.ok; ++si) {
                        const auto& s_reading = readings[si];
                        std::vector<int> permuted(static_cast<std::size_t>(d));

                        auto laplace_element = [&](const std::vector<int>& right,
                                                   bool star_flavor, FlatElement& out) {
                            for (const SigmaTuple& sig : sigmas) {
                                for (int r = 0; r < d; ++r)
                                    permuted[static_cast<std::size_t>(r)] =
                                        s_reading[static_cast<std::size_t>(
                                            sig.perm[static_cast<std::size_t>(r)])];
                                const FlatElement& col = star_flavor
                                                             ? cc.star(permuted, right)
                                                             : cc.det(permuted, right);
                                for (ElemTerm term : col) {
                                    if (!star_flavor) term.c *= sig.sign;
                                    out.push_back(term);
                                }
                            }
                        };

                        for (Flavor f : flavors) {
                            std::vector<DOp> s_block;
                            for (int r = d - 1; r >= 0; --r)
                                s_block.push_back(
                                    {static_cast<std::uint8_t>(
                                         s_reading[static_cast<std::size_t>(r)]),
                                     static_cast<std::uint8_t>(
                                         (f == kStar ? kBetaBase : kAlphaBase) +
                                         row_of[static_cast<std::size_t>(r)]),
                                     f == kStar ? 0 : 1});
                            bool residue = false;
                            Mono where = 0;

                            if (f == kDet || f == kStar) {
                                FlatElement elem;
                                laplace_element(t_reading, f == kStar, elem);
                                merge_elements(elem);
                                run_element(elem, elem_store);
                                run_oracle_block(s_block, f == kDet ? q_det : q_star, live,
                                                 oracle_store, residue);
                                if (residue) {
                                    fail("virtual residue", tableau_from_reading(shape, s_reading),
                                         t_tab, 0);
                                    break;
                                }
                                if (!stores_match(oracle_store, elem_store, where)) {
                                    fail("oracle/element mismatch",
                                         tableau_from_reading(shape, s_reading), t_tab, where);
                                    break;
                                }
                            } else {
                                if (!young_filled) {
                                    FlatElement elem;
                                    for (const auto& tbar : colperm_readings)
                                        laplace_element(tbar, false, elem);
                                    merge_elements(elem);
                                    run_element(elem, elem_store);
                                    auto& stash = young_elem[si];
                                    stash.clear();
                                    std::vector<int> touched = elem_store.touched;
                                    std::sort(touched.begin(), touched.end());
                                    for (int p : touched) {
                                        auto& slot =
                                            elem_store.slots[static_cast<std::size_t>(p)];
                                        if (!slot.empty()) stash.emplace_back(p, slot);
                                    }
                                }
                                run_oracle_block(s_block, q_young, live, oracle_store, residue);
                                if (residue) {
                                    fail("virtual residue", tableau_from_reading(shape, s_reading),
                                         t_tab, 0);
                                    break;
                                }
                                // Compare the stored element actions with this
                                // member's oracle results.
                                std::vector<int> otouched = oracle_store.touched;
                                std::sort(otouched.begin(), otouched.end());
                                const auto& stash = young_elem[si];
                                std::size_t a = 0, b = 0;
                                bool match = true;
                                while (a < stash.size() || b < otouched.size()) {
                                    int pa = a < stash.size() ? stash[a].first
                                                              : std::numeric_limits<int>::max();
                                    // Skip oracle slots that merged to zero.
                                    while (b < otouched.size() &&
                                           oracle_store
                                               .slots[static_cast<std::size_t>(otouched[b])]
                                               .empty())
                                        ++b;
                                    int pb = b < otouched.size() ? otouched[b]
                                                                 : std::numeric_limits<int>::max();
                                    if (pa != pb) {
                                        match = false;
                                        where = basis.monos[static_cast<std::size_t>(
                                            pa < pb ? pa : pb)];
                                        break;
                                    }
                                    if (pa == std::numeric_limits<int>::max()) break;
                                    const auto& l = stash[a].second;
                                    const auto& r =
                                        oracle_store.slots[static_cast<std::size_t>(pb)];
                                    if (l.size() != r.size() ||
                                        !std::equal(l.begin(), l.end(), r.begin(),
                                                    [](const Term& x, const Term& y) {
                                                        return x.m == y.m && x.c == y.c;
                                                    })) {
                                        match = false;
                                        where = basis.monos[static_cast<std::size_t>(pa)];
                                        break;
                                    }
                                    ++res.comparisons;
                                    ++a;
                                    ++b;
                                }
                                if (!match) {
                                    fail("oracle/element mismatch",
                                         tableau_from_reading(shape, s_reading), t_tab, where);
                                    break;
                                }
                            }
                            ++res.pairs;
                        }
                    }
                    young_filled = true;
                }
            }
            if (opt.progress) {
                std::ostringstream os;
                os << "shape";
                for (int p : shape.parts()) os << " " << p;
                os << " done; pair-flavor combinations so far " << res.pairs;
                opt.progress(os.str());
            }
        }
    }
    return res;
}

}  // namespace koszul
