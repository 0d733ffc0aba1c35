#pragma once

#include <algorithm>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <vector>

#include "severi/config.hpp"
#include "severi/errors.hpp"
#include "severi/irr_engine.hpp"

namespace severi {

/// A divisor class D = d H - sum_i m_i E_i on the plane blown up at
/// l = exc.size() points, together with a genus.
struct BlowupClass {
    int h_degree = 0;       // coefficient of the line class H
    std::vector<int> exc;   // coefficients m_i of the exceptional classes
    int genus = 0;
};

struct GwCount {
    Count value;
    int point_conditions = 0;  // -K.D + g - 1
    bool special_class = false;                  // exceptional divisor / conic transform
    std::optional<CurveConfig> plane_problem;    // set when the count reduces to a plane count
};

/// Genus-g curve count in class D on the blow-up of the plane at up to five
/// general points (no three collinear), through -K.D + g - 1 general points.
/// These are the Gromov-Witten invariants of the surface. The blown-up
/// points are realized as fixed multiple points on a conic through them.
inline GwCount gw_del_pezzo(const BlowupClass& cls, MemoStore& memo,
                            const CountOptions& opts = {}) {
    const int l = static_cast<int>(cls.exc.size());
    if (l > 5) throw std::invalid_argument("gw: at most five blown-up points");
    if (cls.genus < 0) throw std::invalid_argument("gw: genus must be >= 0");
    const int mult_sum = std::accumulate(cls.exc.begin(), cls.exc.end(), 0);
    const int point_conditions = 3 * cls.h_degree - mult_sum + cls.genus - 1;

    if (cls.h_degree == 0) {
        // only the exceptional divisors E_i themselves are accepted here
        int minus_ones = 0;
        bool rest_zero = true;
        for (int m : cls.exc) {
            if (m == -1)
                ++minus_ones;
            else if (m != 0)
                rest_zero = false;
        }
        if (minus_ones == 1 && rest_zero)
            return {cls.genus == 0 ? Count(1) : Count(0), point_conditions, true, std::nullopt};
        throw std::invalid_argument("gw: degree-0 class is not an exceptional divisor");
    }
    if (l == 5 && cls.h_degree == 2 &&
        std::all_of(cls.exc.begin(), cls.exc.end(), [](int m) { return m == 1; })) {
        // proper transform of the conic through the five points
        return {cls.genus == 0 ? Count(1) : Count(0), point_conditions, true, std::nullopt};
    }
    for (int m : cls.exc)
        if (m < 0)
            throw std::invalid_argument("gw: negative multiplicity on a non-exceptional class");
    const int free_contacts = 2 * cls.h_degree - mult_sum;
    if (free_contacts < 0)
        throw std::invalid_argument("gw: class meets the conic negatively; not covered");

    CurveConfig cfg{cls.h_degree, cls.genus, {}, TangencySeq::multiple(1, free_contacts),
                    MultiplicityProfile(cls.exc)};
    if (upsilon(cfg) != point_conditions)
        throw InvariantError("gw: point-condition bookkeeping drifted");
    return {count_irreducible(cfg, memo, opts), point_conditions, false, cfg};
}

/// One term of the conjectural cubic-surface count: j extra components
/// mapping isomorphically onto the conic, attached to the core curve at j
/// distinct transverse contact points.
struct CubicTerm {
    int conic_copies = 0;   // j
    Count attach_choices;   // C(b_j, j)
    Count core_count;       // plane count of the residual class D - j E'
};

struct CubicGwCount {
    Count total;
    int point_conditions = 0;
    std::vector<CubicTerm> terms;
};

/// Conjectural genus-g curve count in class D on the plane blown up at six
/// points on a conic (a degeneration of the cubic surface, which acquires
/// the conic's proper transform as a (-2)-curve). Sums, over the number j of
/// components glued onto the (-2)-curve, the count of core curves in class
/// D - j E' times the unordered choices of j distinct attachment points
/// among the core's b_j transverse conic contacts. Output is conjectural.
inline CubicGwCount gw_cubic_conjectural(const BlowupClass& cls, MemoStore& memo,
                                         const CountOptions& opts = {}) {
    if (cls.exc.size() != 6)
        throw std::invalid_argument("gw-cubic: exactly six blown-up points required");
    if (cls.genus < 0) throw std::invalid_argument("gw-cubic: genus must be >= 0");
    for (int m : cls.exc)
        if (m < 0) throw std::invalid_argument("gw-cubic: multiplicities must be >= 0");
    if (cls.h_degree < 1)
        throw std::invalid_argument("gw-cubic: class must have positive degree");

    const int mult_sum = std::accumulate(cls.exc.begin(), cls.exc.end(), 0);
    const int point_conditions = 3 * cls.h_degree - mult_sum + cls.genus - 1;
    const int max_copies = *std::min_element(cls.exc.begin(), cls.exc.end());

    CubicGwCount out{0, point_conditions, {}};
    for (int j = 0; j <= max_copies; ++j) {
        const int core_degree = cls.h_degree - 2 * j;
        if (core_degree < 1) break;
        // transverse contacts of the core with the conic left unassigned
        const int free_contacts = 2 * core_degree - (mult_sum - 6 * j);
        if (free_contacts < j) continue;
        std::vector<int> mults;
        mults.reserve(6);
        for (int m : cls.exc) mults.push_back(m - j);
        CurveConfig cfg{core_degree, cls.genus, {}, TangencySeq::multiple(1, free_contacts),
                        MultiplicityProfile(std::move(mults))};
        if (upsilon(cfg) != point_conditions)
            throw InvariantError("gw-cubic: point conditions drifted across terms");
        Count core = count_irreducible(cfg, memo, opts);
        Count attach = binomial(free_contacts, j);
        out.total += attach * core;
        out.terms.push_back({j, std::move(attach), std::move(core)});
    }
    return out;
}

}  // namespace severi
