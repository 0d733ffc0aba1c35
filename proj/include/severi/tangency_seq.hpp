#pragma once

#include <algorithm>
#include <atomic>
#include <compare>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "severi/arith.hpp"

namespace severi {

/// A finite-support sequence of nonnegative integers indexed from 1.
/// Entry k records how many contact points of order k a curve has with the
/// fixed conic. Stored trailing-zero-free, so equality of values is equality
/// of representations; the zero sequence is the empty vector.
class TangencySeq {
public:
    TangencySeq() = default;

    explicit TangencySeq(std::vector<int> entries) : entries_(std::move(entries)) {
        for (int e : entries_) {
            if (e < 0) throw std::invalid_argument("TangencySeq: negative entry");
        }
        strip();
    }

    TangencySeq(std::initializer_list<int> entries)
        : TangencySeq(std::vector<int>(entries)) {}

    /// e_k: a single contact point of the given order.
    static TangencySeq unit(int order) { return multiple(order, 1); }

    /// count * e_k.
    static TangencySeq multiple(int order, int count) {
        if (order < 1) throw std::invalid_argument("TangencySeq: order must be >= 1");
        if (count < 0) throw std::invalid_argument("TangencySeq: negative count");
        if (count == 0) return {};
        std::vector<int> v(static_cast<std::size_t>(order), 0);
        v.back() = count;
        return TangencySeq(std::move(v));
    }

    /// Entry for contact order k (1-based); 0 beyond the stored support.
    int at(int order) const {
        if (order < 1) throw std::invalid_argument("TangencySeq: order must be >= 1");
        auto i = static_cast<std::size_t>(order - 1);
        return i < entries_.size() ? entries_[i] : 0;
    }

    /// Largest contact order with a nonzero entry; 0 for the zero sequence.
    int max_order() const { return static_cast<int>(entries_.size()); }

    bool is_zero() const { return entries_.empty(); }

    /// |a| = number of contact points.
    int size() const {
        int s = 0;
        for (int e : entries_) s += e;
        return s;
    }

    /// I a = total intersection multiplicity with the conic.
    int weight() const {
        int w = 0;
        for (std::size_t i = 0; i < entries_.size(); ++i)
            w += static_cast<int>(i + 1) * entries_[i];
        return w;
    }

    /// I^a = product of the contact orders, one factor per point.
    Count weight_product() const {
        Count p = 1;
        for (std::size_t i = 0; i < entries_.size(); ++i)
            for (int j = 0; j < entries_[i]; ++j) p *= static_cast<int>(i + 1);
        return p;
    }

    const std::vector<int>& entries() const { return entries_; }

    TangencySeq plus_unit(int order) const {
        TangencySeq r = *this;
        auto i = static_cast<std::size_t>(order - 1);
        if (i >= r.entries_.size()) r.entries_.resize(i + 1, 0);
        ++r.entries_[i];
        return r;
    }

    TangencySeq minus_unit(int order) const {
        TangencySeq r = *this;
        auto i = static_cast<std::size_t>(order - 1);
        if (i >= r.entries_.size() || r.entries_[i] == 0)
            throw std::logic_error("TangencySeq: subtracting from zero entry");
        --r.entries_[i];
        r.strip();
        return r;
    }

    friend TangencySeq operator+(const TangencySeq& a, const TangencySeq& b) {
        std::vector<int> v(std::max(a.entries_.size(), b.entries_.size()), 0);
        for (std::size_t i = 0; i < a.entries_.size(); ++i) v[i] += a.entries_[i];
        for (std::size_t i = 0; i < b.entries_.size(); ++i) v[i] += b.entries_[i];
        return TangencySeq(std::move(v));
    }

    /// Componentwise difference; requires b <= a componentwise.
    friend TangencySeq operator-(const TangencySeq& a, const TangencySeq& b) {
        if (!componentwise_leq(b, a))
            throw std::logic_error("TangencySeq: difference would be negative");
        std::vector<int> v = a.entries_;
        for (std::size_t i = 0; i < b.entries_.size(); ++i) v[i] -= b.entries_[i];
        return TangencySeq(std::move(v));
    }

    /// b <= a in every component.
    friend bool componentwise_leq(const TangencySeq& b, const TangencySeq& a) {
        if (b.entries_.size() > a.entries_.size()) {
            for (std::size_t i = a.entries_.size(); i < b.entries_.size(); ++i)
                if (b.entries_[i] > 0) return false;
        }
        std::size_t n = std::min(a.entries_.size(), b.entries_.size());
        for (std::size_t i = 0; i < n; ++i)
            if (b.entries_[i] > a.entries_[i]) return false;
        return true;
    }

    friend TangencySeq componentwise_min(const TangencySeq& a, const TangencySeq& b) {
        std::vector<int> v(std::min(a.entries_.size(), b.entries_.size()), 0);
        for (std::size_t i = 0; i < v.size(); ++i)
            v[i] = std::min(a.entries_[i], b.entries_[i]);
        return TangencySeq(std::move(v));
    }

    // Lexicographic on the entry vectors. Componentwise domination is the
    // separate componentwise_leq above; do not confuse the two.
    friend auto operator<=>(const TangencySeq& a, const TangencySeq& b) = default;

    /// Shared text grammar: comma-separated nonnegative decimal integers,
    /// k-th item = entry for contact order k; empty string = zero sequence.
    /// Trailing zeros are accepted on input and never emitted on output.
    static TangencySeq parse(std::string_view text) {
        return TangencySeq(parse_int_list(text, "sequence"));
    }

    std::string str() const { return format_int_list(entries_); }

    static std::vector<int> parse_int_list(std::string_view text, const char* what) {
        std::vector<int> out;
        if (text.empty()) return out;
        std::size_t pos = 0;
        while (true) {
            std::size_t comma = text.find(',', pos);
            std::string_view item = text.substr(
                pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos);
            out.push_back(parse_int(item, what));
            if (comma == std::string_view::npos) break;
            pos = comma + 1;
        }
        return out;
    }

    static std::string format_int_list(std::span<const int> values) {
        std::string s;
        for (std::size_t i = 0; i < values.size(); ++i) {
            if (i) s += ',';
            s += std::to_string(values[i]);
        }
        return s;
    }

private:
    static int parse_int(std::string_view item, const char* what) {
        while (!item.empty() && (item.front() == ' ' || item.front() == '\t'))
            item.remove_prefix(1);
        while (!item.empty() && (item.back() == ' ' || item.back() == '\t'))
            item.remove_suffix(1);
        bool negative = !item.empty() && item.front() == '-';
        if (negative) item.remove_prefix(1);
        if (item.empty())
            throw std::invalid_argument(std::string(what) + ": empty item");
        long v = 0;
        for (char ch : item) {
            if (ch < '0' || ch > '9')
                throw std::invalid_argument(std::string(what) + ": expected integer, got '" +
                                            std::string(item) + "'");
            v = v * 10 + (ch - '0');
            if (v > 1'000'000'000)
                throw std::invalid_argument(std::string(what) + ": value out of range");
        }
        return negative ? static_cast<int>(-v) : static_cast<int>(v);
    }

    void strip() {
        while (!entries_.empty() && entries_.back() == 0) entries_.pop_back();
    }

    std::vector<int> entries_;
};

namespace testing {
/// Harness hook: when set, seq_binomial returns off-by-one values so the
/// regression tooling can prove it catches a corrupted computation.
inline std::atomic<bool> corrupt_seq_binomial{false};
}  // namespace testing

/// Product over k of C(a_k, b_k); 0 unless b <= a componentwise.
inline Count seq_binomial(const TangencySeq& a, const TangencySeq& b) {
    if (!componentwise_leq(b, a)) return 0;
    Count r = 1;
    for (int k = 1; k <= b.max_order(); ++k) r *= binomial(a.at(k), b.at(k));
    if (testing::corrupt_seq_binomial.load(std::memory_order_relaxed)) r += 1;
    return r;
}

/// Componentwise multinomial: product over k of a_k! / (parts_1,k! ...).
/// The parts must sum to a exactly (the caller passes the remainder part
/// explicitly); a mismatch is a caller bug, not a zero.
inline Count seq_multinomial(const TangencySeq& a, std::span<const TangencySeq> parts) {
    TangencySeq total;
    for (const TangencySeq& p : parts) total = total + p;
    if (total != a)
        throw std::logic_error("seq_multinomial: parts do not sum to the whole");
    Count r = 1;
    for (int k = 1; k <= a.max_order(); ++k) {
        std::vector<int> coords;
        coords.reserve(parts.size());
        for (const TangencySeq& p : parts) coords.push_back(p.at(k));
        r *= multinomial(a.at(k), coords);
    }
    return r;
}

inline Count seq_multinomial(const TangencySeq& a, const std::vector<TangencySeq>& parts) {
    return seq_multinomial(a, std::span<const TangencySeq>(parts));
}

}  // namespace severi
