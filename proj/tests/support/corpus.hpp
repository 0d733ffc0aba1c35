#pragma once

// Shared test corpus: the regression-table configurations plus assorted
// balanced configurations exercising assigned contacts, higher contact
// orders, and multiple points together.

#include <severi/severi.hpp>

#include <vector>

namespace corpus {

inline const std::vector<severi::CurveConfig>& configs() {
    using severi::CurveConfig;
    static const std::vector<CurveConfig> all = [] {
        std::vector<CurveConfig> v;
        for (const auto& rc : severi::reference_plane_counts())
            v.push_back(severi::reference_config(rc));
        auto add = [&](int d, int g, severi::TangencySeq a, severi::TangencySeq b,
                       severi::MultiplicityProfile s) {
            v.push_back(CurveConfig{d, g, std::move(a), std::move(b), std::move(s)});
        };
        add(1, 0, {2}, {}, {});
        add(1, 0, {0, 1}, {}, {});
        add(1, 0, {1}, {1}, {});
        add(1, 0, {}, {0, 1}, {});
        add(2, 0, {4}, {}, {});
        add(2, 0, {0, 2}, {}, {});
        add(2, 0, {2}, {2}, {});
        add(2, 0, {1}, {3}, {});
        add(2, 0, {0, 1}, {2}, {});
        add(2, 0, {}, {0, 2}, {});
        add(2, 0, {2}, {}, {2});
        add(3, 0, {6}, {}, {});
        add(3, 0, {5}, {1}, {});
        add(3, 0, {2, 2}, {}, {});
        add(3, 0, {0, 1}, {4}, {});
        add(3, 0, {}, {2, 2}, {});
        add(3, 0, {}, {0, 3}, {});
        add(3, 1, {2}, {4}, {});
        add(3, 0, {2}, {2}, {2});
        add(3, 0, {1}, {3}, {2});
        add(3, 0, {}, {2}, {2, 2});
        add(4, 0, {2}, {6}, {});
        add(4, 0, {0, 2}, {4}, {});
        add(4, 1, {1, 1}, {3}, {2});
        add(4, 0, {}, {0, 4}, {});
        add(4, 1, {}, {6}, {2});
        add(4, 0, {2}, {4}, {2});
        add(4, 0, {}, {4}, {2, 2});
        add(4, 1, {}, {4}, {2, 2});
        add(4, 0, {}, {2}, {3, 2});
        add(4, 2, {0, 1}, {6}, {});
        add(5, 1, {}, {6}, {2, 2});
        add(5, 0, {}, {4}, {2, 2, 2});
        add(5, 2, {2}, {6}, {2});
        add(5, 0, {0, 1}, {4}, {2, 2});
        return v;
    }();
    return all;
}

}  // namespace corpus
