#pragma once

#include <algorithm>
#include <compare>
#include <numeric>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "severi/tangency_seq.hpp"

namespace severi {

/// Multiplicities of the fixed multiple points imposed on the conic, one
/// entry per point. Canonical form (produced by normalized() on a config)
/// has entries >= 2 sorted non-increasing; the labeled, unsorted form is
/// what the engines pass around inside a single degeneration step.
class MultiplicityProfile {
public:
    MultiplicityProfile() = default;

    explicit MultiplicityProfile(std::vector<int> mults) : mults_(std::move(mults)) {
        for (int m : mults_) {
            if (m < 0) throw std::invalid_argument("MultiplicityProfile: negative multiplicity");
        }
    }

    MultiplicityProfile(std::initializer_list<int> mults)
        : MultiplicityProfile(std::vector<int>(mults)) {}

    const std::vector<int>& entries() const { return mults_; }

    /// Number of points carried (including any 0/1 entries in labeled form).
    int count() const { return static_cast<int>(mults_.size()); }

    bool empty() const { return mults_.empty(); }

    /// Total multiplicity: the contribution of the points to the
    /// intersection budget with the conic.
    int sum() const { return std::accumulate(mults_.begin(), mults_.end(), 0); }

    friend auto operator<=>(const MultiplicityProfile&, const MultiplicityProfile&) = default;

    static MultiplicityProfile parse(std::string_view text) {
        return MultiplicityProfile(TangencySeq::parse_int_list(text, "multiplicity list"));
    }

    std::string str() const { return TangencySeq::format_int_list(mults_); }

private:
    std::vector<int> mults_;
};

/// The full argument of a curve count: degree d, genus g, fixed contacts
/// with the conic (by order), moving contacts (by order), and the
/// multiplicities of the fixed multiple points on the conic.
///
/// genus is geometric genus for irreducible counts and arithmetic genus for
/// possibly-reducible counts; only the reducible engine accepts it negative.
struct CurveConfig {
    int degree = 0;
    int genus = 0;
    TangencySeq fixed;          // contact points at assigned positions on the conic
    TangencySeq moving;         // contact points at unassigned positions
    MultiplicityProfile mults;  // fixed multiple points on the conic

    friend auto operator<=>(const CurveConfig&, const CurveConfig&) = default;
};

/// Dimension of the family = number of general point conditions imposed:
/// d + |moving| + g - 1. May be negative; callers treat negative as an
/// empty count.
inline int upsilon(const CurveConfig& c) {
    return c.degree + c.moving.size() + c.genus - 1;
}

/// The intersection identity with the conic: the total contact order plus
/// the total multiplicity must equal 2d, or the family is empty.
inline bool is_balanced(const CurveConfig& c) {
    return c.fixed.weight() + c.moving.weight() + c.mults.sum() == 2 * c.degree;
}

/// Canonical form for memoization and display. Zero multiplicities are
/// dropped; each multiplicity-1 point becomes one more order-1 fixed
/// contact (passing through a fixed point of the conic is the same
/// condition); the rest are sorted non-increasing. Leaves degree, genus,
/// upsilon, and balancedness unchanged.
inline CurveConfig normalized(const CurveConfig& c) {
    CurveConfig n = c;
    std::vector<int> kept;
    int ones = 0;
    for (int m : c.mults.entries()) {
        if (m == 1)
            ++ones;
        else if (m >= 2)
            kept.push_back(m);
    }
    std::sort(kept.begin(), kept.end(), std::greater<int>());
    if (ones > 0) n.fixed = n.fixed + TangencySeq::multiple(1, ones);
    n.mults = MultiplicityProfile(std::move(kept));
    return n;
}

inline bool is_canonical(const CurveConfig& c) { return normalized(c) == c; }

/// Termination measure of the counting recursions: every recursive call
/// strictly decreases (degree, |moving|) lexicographically.
inline std::pair<int, int> recursion_measure(const CurveConfig& c) {
    return {c.degree, c.moving.size()};
}

/// Textual form `d=<int> g=<int> alpha=<seq> beta=<seq> s=<list>`, with the
/// sequence grammar shared with the CLI. Omitted alpha/beta/s mean empty.
inline std::string format_config(const CurveConfig& c) {
    std::string s = "d=" + std::to_string(c.degree) + " g=" + std::to_string(c.genus);
    s += " alpha=" + c.fixed.str();
    s += " beta=" + c.moving.str();
    s += " s=" + c.mults.str();
    return s;
}

inline CurveConfig parse_config(std::string_view text) {
    CurveConfig c;
    bool saw_d = false;
    std::size_t pos = 0;
    while (pos < text.size()) {
        while (pos < text.size() && text[pos] == ' ') ++pos;
        if (pos >= text.size()) break;
        std::size_t end = text.find(' ', pos);
        if (end == std::string_view::npos) end = text.size();
        std::string_view item = text.substr(pos, end - pos);
        pos = end;
        std::size_t eq = item.find('=');
        if (eq == std::string_view::npos)
            throw std::invalid_argument("config: expected key=value, got '" + std::string(item) + "'");
        std::string_view key = item.substr(0, eq);
        std::string_view value = item.substr(eq + 1);
        if (key == "d") {
            c.degree = std::stoi(std::string(value));
            saw_d = true;
        } else if (key == "g") {
            c.genus = std::stoi(std::string(value));
        } else if (key == "alpha") {
            c.fixed = TangencySeq::parse(value);
        } else if (key == "beta") {
            c.moving = TangencySeq::parse(value);
        } else if (key == "s") {
            c.mults = MultiplicityProfile::parse(value);
        } else {
            throw std::invalid_argument("config: unknown key '" + std::string(key) + "'");
        }
    }
    if (!saw_d) throw std::invalid_argument("config: missing d");
    return c;
}

}  // namespace severi
