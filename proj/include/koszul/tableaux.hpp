#pragma once

#include <algorithm>
#include <compare>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace koszul {

/// Integer partition: weakly decreasing positive parts. The empty partition
/// is legal and denotes the unit scalar case.
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
        for (std::size_t k = 0; k < parts_.size(); ++k) {
            if (parts_[k] < 1) throw std::invalid_argument("partition parts must be positive");
            if (k > 0 && parts_[k] > parts_[k - 1])
                throw std::invalid_argument("partition parts must be weakly decreasing");
        }
    }
    Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

    const std::vector<int>& parts() const { return parts_; }
    int rows() const { return static_cast<int>(parts_.size()); }
    int part(int k) const { return parts_.at(static_cast<std::size_t>(k)); }
    int weight() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }
    bool empty() const { return parts_.empty(); }

    /// Conjugate partition: part s counts the rows of length >= s. Involution.
    Partition conjugate() const {
        std::vector<int> c;
        for (int s = 1; !parts_.empty() && s <= parts_[0]; ++s) {
            int count = 0;
            for (int p : parts_)
                if (p >= s) ++count;
            c.push_back(count);
        }
        return Partition(std::move(c));
    }

    friend auto operator<=>(const Partition&, const Partition&) = default;

private:
    std::vector<int> parts_;
};

/// Enumerate all partitions of weight d (any number of parts), largest part
/// first, in a fixed deterministic order.
inline std::vector<Partition> partitions_of(int d) {
    std::vector<Partition> out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int remaining, int max_part) -> void {
        if (remaining == 0) {
            out.emplace_back(cur);
            return;
        }
        for (int p = std::min(remaining, max_part); p >= 1; --p) {
            cur.push_back(p);
            self(self, remaining - p, p);
            cur.pop_back();
        }
    };
    rec(rec, d, d);
    return out;
}

/// Young tableau: a filling of a partition shape with entries in {1..n}.
/// The bound n is not stored; it travels with each enumeration call.
class Tableau {
public:
    Tableau() = default;
    explicit Tableau(std::vector<std::vector<int>> rows) : rows_(std::move(rows)) {
        for (std::size_t k = 0; k < rows_.size(); ++k) {
            if (rows_[k].empty()) throw std::invalid_argument("tableau rows must be nonempty");
            if (k > 0 && rows_[k].size() > rows_[k - 1].size())
                throw std::invalid_argument("tableau rows must weakly decrease in length");
            for (int e : rows_[k])
                if (e < 1) throw std::invalid_argument("tableau entries must be positive");
        }
    }
    Tableau(std::initializer_list<std::vector<int>> rows)
        : Tableau(std::vector<std::vector<int>>(rows)) {}

    const std::vector<std::vector<int>>& rows() const { return rows_; }
    const std::vector<int>& row(int k) const { return rows_.at(static_cast<std::size_t>(k)); }
    int row_count() const { return static_cast<int>(rows_.size()); }
    bool empty() const { return rows_.empty(); }
    int box_count() const {
        int c = 0;
        for (const auto& r : rows_) c += static_cast<int>(r.size());
        return c;
    }

    Partition shape() const {
        std::vector<int> parts;
        parts.reserve(rows_.size());
        for (const auto& r : rows_) parts.push_back(static_cast<int>(r.size()));
        return Partition(std::move(parts));
    }

    /// Row-major reading word.
    std::vector<int> reading() const {
        std::vector<int> w;
        w.reserve(static_cast<std::size_t>(box_count()));
        for (const auto& r : rows_) w.insert(w.end(), r.begin(), r.end());
        return w;
    }

    int max_entry() const {
        int m = 0;
        for (const auto& r : rows_)
            for (int e : r) m = std::max(m, e);
        return m;
    }

    friend auto operator<=>(const Tableau&, const Tableau&) = default;

private:
    std::vector<std::vector<int>> rows_;
};

/// Rows of the output are the columns of the input; involution.
inline Tableau conjugate_tableau(const Tableau& t) {
    if (t.empty()) return Tableau{};
    std::vector<std::vector<int>> cols(static_cast<std::size_t>(t.row(0).size()));
    for (const auto& r : t.rows())
        for (std::size_t c = 0; c < r.size(); ++c) cols[c].push_back(r[c]);
    return Tableau(std::move(cols));
}

/// Rows strictly increasing left to right, columns weakly increasing downwards.
inline bool is_standard(const Tableau& t) {
    const auto& rows = t.rows();
    for (std::size_t k = 0; k < rows.size(); ++k) {
        for (std::size_t c = 0; c + 1 < rows[k].size(); ++c)
            if (rows[k][c] >= rows[k][c + 1]) return false;
        if (k > 0)
            for (std::size_t c = 0; c < rows[k].size(); ++c)
                if (rows[k - 1][c] > rows[k][c]) return false;
    }
    return true;
}

inline bool is_costandard(const Tableau& t) { return is_standard(conjugate_tableau(t)); }

namespace detail {

// Fill boxes in row-major order; `admissible` prunes partial fillings.
template <class Admissible>
void enumerate_fillings(const Partition& shape, int n, Admissible admissible,
                        std::vector<Tableau>& out) {
    std::vector<std::vector<int>> rows;
    rows.reserve(static_cast<std::size_t>(shape.rows()));
    for (int k = 0; k < shape.rows(); ++k) rows.emplace_back();
    auto rec = [&](auto&& self, int k, int c) -> void {
        if (k == shape.rows()) {
            out.emplace_back(rows);
            return;
        }
        int next_k = k, next_c = c + 1;
        if (next_c == shape.part(k)) {
            ++next_k;
            next_c = 0;
        }
        for (int e = 1; e <= n; ++e) {
            if (!admissible(rows, k, c, e)) continue;
            rows[static_cast<std::size_t>(k)].push_back(e);
            self(self, next_k, next_c);
            rows[static_cast<std::size_t>(k)].pop_back();
        }
    };
    if (shape.empty())
        out.emplace_back();
    else
        rec(rec, 0, 0);
}

}  // namespace detail

/// All standard tableaux of the given shape with entries in {1..n},
/// in lexicographic order on the row-major reading word.
inline std::vector<Tableau> enumerate_standard(const Partition& shape, int n) {
    std::vector<Tableau> out;
    detail::enumerate_fillings(
        shape, n,
        [&](const std::vector<std::vector<int>>& rows, int k, int c, int e) {
            const auto& row = rows[static_cast<std::size_t>(k)];
            if (c > 0 && e <= row[static_cast<std::size_t>(c - 1)]) return false;
            if (k > 0 && e < rows[static_cast<std::size_t>(k - 1)][static_cast<std::size_t>(c)])
                return false;
            return true;
        },
        out);
    return out;
}

/// All tableaux with strictly increasing rows (columns unconstrained).
inline std::vector<Tableau> enumerate_row_increasing(const Partition& shape, int n) {
    if (!shape.empty() && shape.part(0) > n)
        throw std::invalid_argument("enumerate_row_increasing: first part exceeds alphabet");
    std::vector<Tableau> out;
    detail::enumerate_fillings(
        shape, n,
        [&](const std::vector<std::vector<int>>& rows, int k, int c, int e) {
            const auto& row = rows[static_cast<std::size_t>(k)];
            return c == 0 || e > row[static_cast<std::size_t>(c - 1)];
        },
        out);
    return out;
}

/// All tableaux obtained by permuting the entries within each column
/// independently, with multiplicity: repeated column entries repeat the
/// resulting tableau, so exactly prod_c (len of column c)! tableaux come back.
inline std::vector<Tableau> column_permutations(const Tableau& t) {
    std::vector<Tableau> out;
    if (t.empty()) {
        out.push_back(t);
        return out;
    }
    const int ncols = t.row(0) .empty() ? 0 : static_cast<int>(t.row(0).size());
    // Column c entries, top to bottom.
    std::vector<std::vector<int>> cols(static_cast<std::size_t>(ncols));
    for (const auto& r : t.rows())
        for (std::size_t c = 0; c < r.size(); ++c) cols[c].push_back(r[c]);
    // Position permutations per column (all (len)!, even when values repeat).
    std::vector<std::vector<std::vector<int>>> perms(cols.size());
    for (std::size_t c = 0; c < cols.size(); ++c) {
        std::vector<int> idx(cols[c].size());
        std::iota(idx.begin(), idx.end(), 0);
        do {
            perms[c].push_back(idx);
        } while (std::next_permutation(idx.begin(), idx.end()));
    }
    std::vector<std::size_t> pick(cols.size(), 0);
    while (true) {
        std::vector<std::vector<int>> rows(t.rows().size());
        for (std::size_t k = 0; k < rows.size(); ++k)
            rows[k].resize(t.rows()[k].size());
        for (std::size_t c = 0; c < cols.size(); ++c)
            for (std::size_t k = 0; k < cols[c].size(); ++k)
                rows[k][c] = cols[c][static_cast<std::size_t>(perms[c][pick[c]][k])];
        out.emplace_back(std::move(rows));
        std::size_t c = 0;
        while (c < cols.size() && ++pick[c] == perms[c].size()) pick[c++] = 0;
        if (c == cols.size()) break;
    }
    return out;
}

/// Text form: rows separated by "/", entries by spaces; "1 2 / 2 4".
inline std::string to_text(const Tableau& t) {
    std::string s;
    for (int k = 0; k < t.row_count(); ++k) {
        if (k > 0) s += " / ";
        const auto& row = t.row(k);
        for (std::size_t c = 0; c < row.size(); ++c) {
            if (c > 0) s += ' ';
            s += std::to_string(row[c]);
        }
    }
    return s;
}

inline Tableau parse_tableau(const std::string& text) {
    std::vector<std::vector<int>> rows;
    std::string chunk;
    std::istringstream ss(text);
    std::vector<int> cur;
    std::string tok;
    while (ss >> tok) {
        if (tok == "/") {
            if (cur.empty()) throw std::invalid_argument("tableau text: empty row");
            rows.push_back(std::move(cur));
            cur.clear();
            continue;
        }
        std::size_t pos = 0;
        int v;
        try {
            v = std::stoi(tok, &pos);
        } catch (const std::exception&) {
            throw std::invalid_argument("tableau text: bad entry '" + tok + "'");
        }
        if (pos != tok.size() || v < 1)
            throw std::invalid_argument("tableau text: bad entry '" + tok + "'");
        cur.push_back(v);
    }
    if (!cur.empty()) rows.push_back(std::move(cur));
    return Tableau(std::move(rows));
}

inline Partition parse_shape(const std::string& text) {
    std::istringstream ss(text);
    std::vector<int> parts;
    int v;
    while (ss >> v) parts.push_back(v);
    return Partition(std::move(parts));
}

}  // namespace koszul
