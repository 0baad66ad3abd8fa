#pragma once

// Parameter grids shared by the construction tests and the acceptance binary.

#include <hyperturan/constructions.hpp>
#include <hyperturan/errors.hpp>

#include <optional>
#include <vector>

namespace testing_support {

struct GridPoint {
    hyperturan::ConstructionKind kind;
    hyperturan::ConstructionParams params;
};

inline auto accepted(hyperturan::ConstructionKind kind, const hyperturan::ConstructionParams & p) -> bool
{
    try {
        (void)hyperturan::construction_count(kind, p);
        return true;
    }
    catch (const hyperturan::ParameterError &) {
        return false;
    }
}

/// Every (kind, n, r, l, s) the generators accept with n <= max_n, l <= max_l.
/// Kinds ignoring a parameter appear once for it.
inline auto construction_grid(hyperturan::Count max_n, const std::vector<hyperturan::Count> & rs, hyperturan::Count max_l)
    -> std::vector<GridPoint>
{
    using hyperturan::ConstructionKind;
    std::vector<GridPoint> out;
    const ConstructionKind with_l[] = {ConstructionKind::g1, ConstructionKind::g2, ConstructionKind::g3,
        ConstructionKind::one_point, ConstructionKind::yzz, ConstructionKind::alon_frankl};
    for (auto r : rs)
        for (hyperturan::Count n = 1; n <= max_n; ++n) {
            for (hyperturan::Count l = 2; l <= max_l; ++l) {
                if (accepted(ConstructionKind::turan_partite, {n, r, l, std::nullopt}))
                    out.push_back({ConstructionKind::turan_partite, {n, r, l, std::nullopt}});
                for (hyperturan::Count s = 0; s <= n; ++s)
                    for (auto kind : with_l)
                        if (accepted(kind, {n, r, l, s}))
                            out.push_back({kind, {n, r, l, s}});
            }
            for (hyperturan::Count s = 0; s <= n; ++s)
                out.push_back({ConstructionKind::star_cover, {n, r, std::nullopt, s}});
        }
    return out;
}

/// The evaluator value the generator is meant to realise, when an evaluator
/// covers these parameters.
inline auto evaluator_value(const GridPoint & g) -> std::optional<hyperturan::Count>
{
    using hyperturan::ConstructionKind;
    const auto & p = g.params;
    auto small_s = [&](std::initializer_list<const char *> cases) -> std::optional<hyperturan::Count> {
        auto f = hyperturan::small_s_value(p.n, p.r, *p.l, *p.s);
        for (auto c : cases)
            if (f.case_id == c)
                return f.value;
        return std::nullopt;
    };
    switch (g.kind) {
    case ConstructionKind::g1: return small_s({"iii"});
    case ConstructionKind::g2: return small_s({"iv"});
    case ConstructionKind::g3: return hyperturan::emc_value(p.n, p.r, *p.s).value;
    case ConstructionKind::one_point: return small_s({"i", "ii"});
    case ConstructionKind::yzz: return hyperturan::large_s_value(p.n, p.r, *p.l, *p.s).value;
    case ConstructionKind::turan_partite: return hyperturan::turan_partite_count(p.n, *p.l, p.r);
    case ConstructionKind::star_cover: return hyperturan::emc_value(p.n, p.r, *p.s).value;
    case ConstructionKind::alon_frankl:
        if (p.r == 2)
            return hyperturan::alon_frankl_g_count(p.n, *p.l, *p.s);
        return std::nullopt;
    }
    return std::nullopt;
}

} // namespace testing_support
