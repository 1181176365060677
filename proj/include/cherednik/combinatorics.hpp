#pragma once

// Partitions, r-partitions, compositions, permutations and tableaux, plus the
// orders among them (dominance, Bruhat, and the composition order used to
// triangularise the Dunkl-Opdam operators).

#include "cherednik/error.hpp"
#include "cherednik/rational.hpp"

#include <algorithm>
#include <compare>
#include <cstddef>
#include <map>
#include <numeric>
#include <span>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

namespace cherednik {

enum class Order { less, equal, greater, incomparable };

inline const char* to_string(Order o) {
    switch (o) {
    case Order::less: return "less";
    case Order::equal: return "equal";
    case Order::greater: return "greater";
    case Order::incomparable: return "incomparable";
    }
    return "?";
}

// ---------------------------------------------------------------------------
// Partition

class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
        while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            require(parts_[i] > 0, "partition parts must be non-negative with zeros only at the end");
            require(i == 0 || parts_[i - 1] >= parts_[i], "partition parts must be non-increasing");
        }
    }
    Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

    const std::vector<int>& parts() const { return parts_; }
    int length() const { return static_cast<int>(parts_.size()); }
    bool empty() const { return parts_.empty(); }
    int size() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }
    // 1-based row access; rows past the end have length 0.
    int row(int i) const { return i >= 1 && i <= length() ? parts_[i - 1] : 0; }

    Partition conjugate() const {
        std::vector<int> out;
        for (int j = 1; j <= row(1); ++j) {
            int count = 0;
            for (int p : parts_) count += (p >= j);
            out.push_back(count);
        }
        return Partition(std::move(out));
    }

    std::string str() const {
        std::string s;
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            if (i) s += ',';
            s += std::to_string(parts_[i]);
        }
        return s;
    }

    bool operator==(const Partition&) const = default;
    auto operator<=>(const Partition&) const = default;

private:
    std::vector<int> parts_;
};

inline Partition conjugate(const Partition& p) { return p.conjugate(); }

// Partial sums comparison.
inline Order dominance_compare(const Partition& a, const Partition& b) {
    require(a.size() == b.size(), "dominance_compare: partitions of different sizes");
    if (a == b) return Order::equal;
    bool ge = true, le = true;
    int sa = 0, sb = 0;
    int len = std::max(a.length(), b.length());
    for (int i = 1; i <= len; ++i) {
        sa += a.row(i);
        sb += b.row(i);
        if (sa < sb) ge = false;
        if (sa > sb) le = false;
    }
    if (ge) return Order::greater;
    if (le) return Order::less;
    return Order::incomparable;
}

// All partitions of n, largest first in lexicographic order.
inline std::vector<Partition> enumerate_partitions(int n) {
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
    rec(rec, n, n);
    return out;
}

// ---------------------------------------------------------------------------
// Boxes and r-partitions

struct BoxRef {
    int component = 0;
    int row = 1;
    int column = 1;

    int content() const { return column - row; }
    bool operator==(const BoxRef&) const = default;
    auto operator<=>(const BoxRef&) const = default;
};

class MultiPartition {
public:
    MultiPartition() = default;
    explicit MultiPartition(std::vector<Partition> components) : comps_(std::move(components)) {
        require(!comps_.empty(), "an r-partition needs r >= 1 components");
    }
    // r empty components.
    static MultiPartition empty(int r) { return MultiPartition(std::vector<Partition>(static_cast<std::size_t>(r))); }

    int r() const { return static_cast<int>(comps_.size()); }
    int size() const {
        int n = 0;
        for (const auto& p : comps_) n += p.size();
        return n;
    }
    const Partition& component(int l) const { return comps_.at(static_cast<std::size_t>(l)); }
    const std::vector<Partition>& components() const { return comps_; }

    bool contains(const BoxRef& b) const {
        return b.component >= 0 && b.component < r() && b.row >= 1 && b.column >= 1 &&
               b.column <= comps_[static_cast<std::size_t>(b.component)].row(b.row);
    }

    // Boxes in lexicographic (component, row, column) order.
    std::vector<BoxRef> boxes() const {
        std::vector<BoxRef> out;
        for (int l = 0; l < r(); ++l)
            for (int i = 1; i <= comps_[l].length(); ++i)
                for (int j = 1; j <= comps_[l].row(i); ++j) out.push_back({l, i, j});
        return out;
    }

    // Index of a box in boxes() order.
    int box_index(const BoxRef& b) const {
        require(contains(b), "box not in shape");
        int idx = 0;
        for (int l = 0; l < b.component; ++l) idx += comps_[l].size();
        for (int i = 1; i < b.row; ++i) idx += comps_[b.component].row(i);
        return idx + b.column - 1;
    }

    // Text form: components joined by '|', each a comma list.
    std::string str() const {
        std::string s;
        for (int l = 0; l < r(); ++l) {
            if (l) s += '|';
            s += comps_[l].str();
        }
        return s;
    }

    static MultiPartition parse(std::string_view text) {
        std::vector<Partition> comps;
        std::string s(text);
        std::size_t start = 0;
        while (true) {
            std::size_t bar = s.find('|', start);
            std::string piece = s.substr(start, bar == std::string::npos ? std::string::npos : bar - start);
            std::vector<int> parts;
            std::stringstream ss(piece);
            std::string tok;
            while (std::getline(ss, tok, ',')) {
                std::string t;
                for (char c : tok)
                    if (c != ' ') t += c;
                if (t.empty()) {
                    if (piece.find_first_not_of(' ') == std::string::npos) break;
                    throw DomainError("empty part in shape component '" + piece + "'");
                }
                for (char c : t)
                    if (c < '0' || c > '9')
                        throw DomainError("bad token '" + tok + "' in shape '" + std::string(text) + "'");
                parts.push_back(std::stoi(t));
            }
            for (std::size_t i = 1; i < parts.size(); ++i)
                if (parts[i - 1] < parts[i])
                    throw DomainError("component '" + piece + "' is not non-increasing");
            try {
                comps.emplace_back(parts);
            } catch (const DomainError&) {
                throw DomainError("component '" + piece + "' is not a partition");
            }
            if (bar == std::string::npos) break;
            start = bar + 1;
        }
        return MultiPartition(std::move(comps));
    }

    bool operator==(const MultiPartition&) const = default;
    auto operator<=>(const MultiPartition&) const = default;

private:
    std::vector<Partition> comps_;
};

// (content, component) of a box.
struct BoxStats {
    int content;
    int component;
};

inline BoxStats box_stats(const MultiPartition& shape, const BoxRef& b) {
    require(shape.contains(b), "box_stats: box (" + std::to_string(b.component) + "," + std::to_string(b.row) +
                                   "," + std::to_string(b.column) + ") not in shape " + shape.str());
    return {b.content(), b.component};
}

// All r-partitions of n, each once.
inline std::vector<MultiPartition> enumerate_multipartitions(int r, int n) {
    require(r >= 1 && n >= 0, "enumerate_multipartitions: need r >= 1, n >= 0");
    std::vector<std::vector<Partition>> by_size(static_cast<std::size_t>(n + 1));
    for (int k = 0; k <= n; ++k) by_size[k] = enumerate_partitions(k);
    std::vector<MultiPartition> out;
    std::vector<Partition> cur(static_cast<std::size_t>(r));
    auto rec = [&](auto&& self, int l, int remaining) -> void {
        if (l == r - 1) {
            for (const auto& p : by_size[remaining]) {
                cur[l] = p;
                out.emplace_back(cur);
            }
            return;
        }
        for (int k = remaining; k >= 0; --k)
            for (const auto& p : by_size[k]) {
                cur[l] = p;
                self(self, l + 1, remaining - k);
            }
    };
    rec(rec, 0, n);
    return out;
}

// ---------------------------------------------------------------------------
// Compositions and permutations

using Composition = std::vector<int>;

// One-line notation, 1-based: images[i-1] = w(i).
class Permutation {
public:
    Permutation() = default;
    explicit Permutation(std::vector<int> images) : w_(std::move(images)) {
        std::vector<bool> seen(w_.size() + 1, false);
        for (int v : w_) {
            require(v >= 1 && v <= size() && !seen[v], "permutation images must be a bijection of {1..n}");
            seen[v] = true;
        }
    }
    Permutation(std::initializer_list<int> images) : Permutation(std::vector<int>(images)) {}

    static Permutation identity(int n) {
        std::vector<int> v(static_cast<std::size_t>(n));
        std::iota(v.begin(), v.end(), 1);
        return Permutation(std::move(v));
    }
    static Permutation longest(int n) {
        std::vector<int> v(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) v[i] = n - i;
        return Permutation(std::move(v));
    }
    // Simple transposition s_i = (i, i+1).
    static Permutation simple(int n, int i) { return transposition(n, i, i + 1); }
    static Permutation transposition(int n, int i, int j) {
        auto p = identity(n);
        std::swap(p.w_[i - 1], p.w_[j - 1]);
        return p;
    }

    int size() const { return static_cast<int>(w_.size()); }
    int operator()(int i) const { return w_[i - 1]; }
    const std::vector<int>& images() const { return w_; }

    Permutation inverse() const {
        std::vector<int> v(w_.size());
        for (int i = 1; i <= size(); ++i) v[w_[i - 1] - 1] = i;
        return Permutation(std::move(v));
    }
    // (a * b)(i) = a(b(i))
    friend Permutation operator*(const Permutation& a, const Permutation& b) {
        std::vector<int> v(b.w_.size());
        for (int i = 1; i <= b.size(); ++i) v[i - 1] = a(b(i));
        return Permutation(std::move(v));
    }

    int length() const {
        int inv = 0;
        for (int i = 0; i < size(); ++i)
            for (int j = i + 1; j < size(); ++j) inv += (w_[i] > w_[j]);
        return inv;
    }

    // A reduced word (i_1,...,i_p) with w = s_{i_1} ... s_{i_p}.
    std::vector<int> reduced_word() const {
        std::vector<int> word;
        Permutation cur = *this;
        while (true) {
            int k = 0;
            for (int i = 1; i < size(); ++i)
                if (cur(i) > cur(i + 1)) {
                    k = i;
                    break;
                }
            if (k == 0) break;
            std::swap(cur.w_[k - 1], cur.w_[k]);
            word.push_back(k);
        }
        std::reverse(word.begin(), word.end());
        return word;
    }

    std::string str() const {
        std::string s = "(";
        for (int i = 0; i < size(); ++i) {
            if (i) s += ',';
            s += std::to_string(w_[i]);
        }
        return s + ")";
    }

    bool operator==(const Permutation&) const = default;
    auto operator<=>(const Permutation&) const = default;

private:
    std::vector<int> w_;
};

// Bruhat order u <= w by the subword property, run as the lifting recursion
// along a reduced word of w: if w s < w then u <= w iff (us < u ? us <= ws : u <= ws).
inline bool bruhat_leq(Permutation u, Permutation w) {
    require(u.size() == w.size(), "bruhat_leq: permutations of different degree");
    const int n = w.size();
    std::vector<int> uu = u.images(), ww = w.images();
    while (true) {
        int k = 0;
        for (int i = 1; i < n; ++i)
            if (ww[i - 1] > ww[i]) {
                k = i;
                break;
            }
        if (k == 0) return std::is_sorted(uu.begin(), uu.end());
        if (uu[k - 1] > uu[k]) std::swap(uu[k - 1], uu[k]);
        std::swap(ww[k - 1], ww[k]);
    }
}

// w.mu = (mu_{w^{-1}(1)}, ..., mu_{w^{-1}(n)})
inline Composition act(const Permutation& w, const Composition& mu) {
    Composition out(mu.size());
    for (int i = 1; i <= w.size(); ++i) out[w(i) - 1] = mu[i - 1];
    return out;
}

struct SortingData {
    Partition plus;        // non-increasing rearrangement
    Composition minus;     // non-decreasing rearrangement
    Permutation w;         // longest element with w.mu = mu^-
    Permutation rank;      // r_mu, with w = w_0 r_mu
};

inline Permutation w_mu(const Composition& mu) {
    const int n = static_cast<int>(mu.size());
    std::vector<int> v(mu.size());
    for (int i = 0; i < n; ++i) {
        int c = 0;
        for (int j = 0; j < i; ++j) c += (mu[j] < mu[i]);
        for (int j = i; j < n; ++j) c += (mu[j] <= mu[i]);
        v[i] = c;
    }
    return Permutation(std::move(v));
}

inline Permutation rank_function(const Composition& mu) {
    const int n = static_cast<int>(mu.size());
    std::vector<int> v(mu.size());
    for (int i = 0; i < n; ++i) {
        int c = 0;
        for (int j = 0; j <= i; ++j) c += (mu[j] >= mu[i]);
        for (int j = i + 1; j < n; ++j) c += (mu[j] > mu[i]);
        v[i] = c;
    }
    return Permutation(std::move(v));
}

inline Partition sorted_plus(const Composition& mu) {
    std::vector<int> v(mu);
    std::sort(v.begin(), v.end(), std::greater<>());
    return Partition(std::move(v));
}

inline SortingData sorting_data(const Composition& mu) {
    for (int m : mu) require(m >= 0, "composition entries must be non-negative");
    Composition minus(mu);
    std::sort(minus.begin(), minus.end());
    return {sorted_plus(mu), minus, w_mu(mu), rank_function(mu)};
}

// mu > nu iff mu+ >_d nu+, or mu+ = nu+ and w_mu > w_nu in Bruhat order.
inline Order composition_compare(const Composition& mu, const Composition& nu) {
    require(mu.size() == nu.size(), "composition_compare: length mismatch");
    if (mu == nu) return Order::equal;
    Partition a = sorted_plus(mu), b = sorted_plus(nu);
    if (a.size() != b.size()) return Order::incomparable;
    Order d = dominance_compare(a, b);
    if (d != Order::equal) return d;
    Permutation wa = w_mu(mu), wb = w_mu(nu);
    if (bruhat_leq(wb, wa)) return Order::greater;
    if (bruhat_leq(wa, wb)) return Order::less;
    return Order::incomparable;
}

// All compositions of length n with total d.
inline std::vector<Composition> enumerate_compositions(int n, int d) {
    std::vector<Composition> out;
    Composition cur(static_cast<std::size_t>(n), 0);
    auto rec = [&](auto&& self, int i, int remaining) -> void {
        if (i == n - 1) {
            cur[i] = remaining;
            out.push_back(cur);
            return;
        }
        for (int v = remaining; v >= 0; --v) {
            cur[i] = v;
            self(self, i + 1, remaining - v);
        }
    };
    if (n == 0) {
        if (d == 0) out.emplace_back();
        return out;
    }
    rec(rec, 0, d);
    return out;
}

// ---------------------------------------------------------------------------
// Tableaux

class StandardTableau {
public:
    StandardTableau() = default;
    // box_of[i-1] is the box holding entry i.
    StandardTableau(MultiPartition shape, std::vector<BoxRef> box_of)
        : shape_(std::move(shape)), box_of_(std::move(box_of)) {
        require(static_cast<int>(box_of_.size()) == shape_.size(), "tableau must fill every box exactly once");
        entry_.assign(static_cast<std::size_t>(shape_.size()), 0);
        for (std::size_t i = 0; i < box_of_.size(); ++i) {
            int idx = shape_.box_index(box_of_[i]);
            require(entry_[idx] == 0, "tableau uses a box twice");
            entry_[idx] = static_cast<int>(i) + 1;
        }
        for (const auto& b : shape_.boxes()) {
            BoxRef right{b.component, b.row, b.column + 1}, below{b.component, b.row + 1, b.column};
            if (shape_.contains(right)) require(entry(right) > entry(b), "tableau rows must increase");
            if (shape_.contains(below)) require(entry(below) > entry(b), "tableau columns must increase");
        }
    }

    const MultiPartition& shape() const { return shape_; }
    int size() const { return shape_.size(); }
    int entry(const BoxRef& b) const { return entry_[shape_.box_index(b)]; }
    // T^{-1}(i)
    const BoxRef& box(int i) const { return box_of_.at(static_cast<std::size_t>(i - 1)); }

    // s_i T: swap the entries i and i+1 (may fail to be standard).
    bool swap_is_standard(int i) const {
        const BoxRef& a = box(i);
        const BoxRef& b = box(i + 1);
        if (a.component != b.component) return true;
        return a.row != b.row && a.column != b.column;
    }
    StandardTableau swapped(int i) const {
        auto v = box_of_;
        std::swap(v[i - 1], v[i]);
        return StandardTableau(shape_, std::move(v));
    }

    std::string str() const {
        std::string s;
        for (int l = 0; l < shape_.r(); ++l) {
            if (l) s += " | ";
            const auto& p = shape_.component(l);
            if (p.empty()) s += "-";
            for (int i = 1; i <= p.length(); ++i) {
                if (i > 1) s += " / ";
                for (int j = 1; j <= p.row(i); ++j) {
                    if (j > 1) s += ',';
                    s += std::to_string(entry({l, i, j}));
                }
            }
        }
        return s;
    }

    bool operator==(const StandardTableau& o) const { return shape_ == o.shape_ && box_of_ == o.box_of_; }
    auto operator<=>(const StandardTableau& o) const {
        if (auto c = shape_ <=> o.shape_; c != 0) return c;
        return box_of_ <=> o.box_of_;
    }

private:
    MultiPartition shape_;
    std::vector<BoxRef> box_of_;
    std::vector<int> entry_;
};

inline std::vector<StandardTableau> enumerate_syt(const MultiPartition& shape) {
    const int n = shape.size();
    std::vector<StandardTableau> out;
    std::vector<std::vector<int>> filled(static_cast<std::size_t>(shape.r()));
    for (int l = 0; l < shape.r(); ++l) filled[l].assign(static_cast<std::size_t>(shape.component(l).length()), 0);
    std::vector<BoxRef> box_of;
    auto rec = [&](auto&& self) -> void {
        if (static_cast<int>(box_of.size()) == n) {
            out.emplace_back(shape, box_of);
            return;
        }
        for (int l = 0; l < shape.r(); ++l) {
            const auto& p = shape.component(l);
            for (int i = 1; i <= p.length(); ++i) {
                int& len = filled[l][i - 1];
                if (len < p.row(i) && (i == 1 || filled[l][i - 2] > len)) {
                    ++len;
                    box_of.push_back({l, i, len});
                    self(self);
                    box_of.pop_back();
                    --len;
                }
            }
        }
    };
    rec(rec);
    return out;
}

// A filling of the boxes by non-negative integers.
class ShapeAssignment {
public:
    ShapeAssignment() = default;
    ShapeAssignment(MultiPartition shape, std::vector<int> values_in_box_order)
        : shape_(std::move(shape)), values_(std::move(values_in_box_order)) {
        require(static_cast<int>(values_.size()) == shape_.size(), "assignment needs one value per box");
    }

    const MultiPartition& shape() const { return shape_; }
    int value(const BoxRef& b) const { return values_[shape_.box_index(b)]; }
    const std::vector<int>& values() const { return values_; }

    bool is_weakly_increasing() const { return check(false); }
    bool is_column_strict() const { return check(true); }
    // S(b) = beta(b) mod r for every box.
    bool satisfies_residue() const {
        for (const auto& b : shape_.boxes())
            if (mod(value(b) - b.component, shape_.r()) != 0) return false;
        return true;
    }

    // Entries arranged in non-decreasing order.
    Composition sorted_entries() const {
        Composition v(values_.begin(), values_.end());
        std::sort(v.begin(), v.end());
        return v;
    }

    std::string str() const {
        std::string s;
        for (int l = 0; l < shape_.r(); ++l) {
            if (l) s += " | ";
            const auto& p = shape_.component(l);
            if (p.empty()) s += "-";
            for (int i = 1; i <= p.length(); ++i) {
                if (i > 1) s += " / ";
                for (int j = 1; j <= p.row(i); ++j) {
                    if (j > 1) s += ',';
                    s += std::to_string(value({l, i, j}));
                }
            }
        }
        return s;
    }

    bool operator==(const ShapeAssignment&) const = default;
    auto operator<=>(const ShapeAssignment&) const = default;

private:
    bool check(bool strict_columns) const {
        for (const auto& b : shape_.boxes()) {
            BoxRef right{b.component, b.row, b.column + 1}, below{b.component, b.row + 1, b.column};
            if (value(b) < 0) return false;
            if (shape_.contains(right) && value(right) < value(b)) return false;
            if (shape_.contains(below)) {
                if (value(below) < value(b)) return false;
                if (strict_columns && value(below) == value(b)) return false;
            }
        }
        return true;
    }

    MultiPartition shape_;
    std::vector<int> values_;
};

// S(b) = mu_{w_mu^{-1} T(b)}.
inline ShapeAssignment shape_assignment(const Composition& mu, const StandardTableau& T) {
    require(static_cast<int>(mu.size()) == T.size(), "shape_assignment: |mu| entries must equal the shape size");
    Permutation winv = w_mu(mu).inverse();
    std::vector<int> vals;
    for (const auto& b : T.shape().boxes()) vals.push_back(mu[winv(T.entry(b)) - 1]);
    return ShapeAssignment(T.shape(), std::move(vals));
}

// All column-strict fillings with entries in [0, max_entry].
inline std::vector<ShapeAssignment> enumerate_column_strict(const MultiPartition& shape, int max_entry,
                                                            bool residue_only) {
    auto boxes = shape.boxes();
    std::vector<int> vals(boxes.size(), 0);
    std::vector<ShapeAssignment> out;
    auto rec = [&](auto&& self, std::size_t k) -> void {
        if (k == boxes.size()) {
            out.emplace_back(shape, vals);
            return;
        }
        const BoxRef& b = boxes[k];
        int lo = 0;
        if (b.column > 1) lo = std::max(lo, vals[shape.box_index({b.component, b.row, b.column - 1})]);
        if (b.row > 1) lo = std::max(lo, vals[shape.box_index({b.component, b.row - 1, b.column})] + 1);
        for (int v = lo; v <= max_entry; ++v) {
            if (residue_only && mod(v - b.component, shape.r()) != 0) continue;
            vals[k] = v;
            self(self, k + 1);
        }
    };
    rec(rec, 0);
    return out;
}

// |{b in lambda : ct(b) >= j}| >= |{b in chi : ct(b) >= j}| for every integer j.
inline bool dominance_via_contents(const Partition& lambda, const Partition& chi) {
    require(lambda.size() == chi.size(), "dominance_via_contents: partitions of different sizes");
    auto contents = [](const Partition& p) {
        std::vector<int> c;
        for (int i = 1; i <= p.length(); ++i)
            for (int j = 1; j <= p.row(i); ++j) c.push_back(j - i);
        return c;
    };
    auto a = contents(lambda), b = contents(chi);
    int lo = -std::max(lambda.length(), chi.length());
    int hi = std::max(lambda.row(1), chi.row(1));
    for (int j = lo; j <= hi; ++j) {
        auto ca = std::count_if(a.begin(), a.end(), [j](int c) { return c >= j; });
        auto cb = std::count_if(b.begin(), b.end(), [j](int c) { return c >= j; });
        if (ca < cb) return false;
    }
    return true;
}

} // namespace cherednik
