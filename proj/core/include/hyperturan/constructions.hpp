#pragma once

#include <hyperturan/combinatorics.hpp>
#include <hyperturan/detectors.hpp>
#include <hyperturan/hypergraph.hpp>

#include <optional>
#include <string>
#include <string_view>

namespace hyperturan {

/// How the stated parameter window of a closed form relates to the input.
enum class WindowStatus {
    ok,                  ///< inside the stated window
    outside,             ///< value computed, but the window inequality fails
    unknown,             ///< the window depends on an unquantified threshold
    not_covered,         ///< no stated formula applies; no value
    hypothesis_violated, ///< a structural hypothesis fails; no value
};

auto to_string(WindowStatus status) -> std::string_view;

struct FormulaResult {
    std::optional<Count> value;
    std::string case_id;
    WindowStatus window = WindowStatus::ok;
    std::string note;

    [[nodiscard]] auto has_value() const noexcept -> bool { return value.has_value(); }
};

/// t_r(n, l): edges of the balanced complete l-partite r-graph.
auto turan_partite_count(Count n, Count parts, Count r) -> Count;

/// C(n,r) - C(n-s,r), cross-checked against sum_i C(s,i) C(n-s,r-i).
/// window: n >= (2s+1)r - s.
auto emc_value(Count n, Count r, Count s) -> FormulaResult;

/// Exact value for the bounded-matching clique-expansion problem with
/// s < (l^2-1)/2; case_id is one of "i".."v". Parameters outside every case
/// window give a not_covered result.
auto small_s_value(Count n, Count r, Count l, Count s) -> FormulaResult;

/// s * t_{r-1}(n-s, l-1); the threshold on s is unquantified, so the window
/// is always reported as unknown. Throws ParameterError when n < s or l < 2.
auto large_s_value(Count n, Count r, Count l, Count s) -> FormulaResult;

/// Largest total size of k layers without a rainbow expanded K_l:
/// min(k, C(l,2)-1) C(n,r) for 2k < l^2-1, k t_r(n,l-1) (window unknown) above.
auto rainbow_value(Count n, Count r, Count l, Count k) -> FormulaResult;

/// Edges of the complete l-partite graph with one part of size n-s and l-1
/// parts splitting s as evenly as possible.
auto alon_frankl_g_count(Count n, Count l, Count s) -> Count;

/// C(n,r) - C(n-s,r) - C(s,r) + ex_r(s, A(H)), the inner term computed by the
/// exact oracle. Needs weak chromatic number > 2; s above the inner cap
/// raises CapacityError.
auto gtz_value(Count n, Count r, Count s, const Hypergraph & h) -> FormulaResult;

// --- Generators ------------------------------------------------------------------

enum class ConstructionKind {
    g1,            ///< one A-vertex, or u plus at least s - C(l-1,2) other A-vertices
    g2,            ///< one A-vertex, or two A-vertices from different parts + (r-2) outside
    g3,            ///< at least one A-vertex (requires s < l when l is given)
    one_point,     ///< exactly one vertex of S
    yzz,           ///< one vertex of V0 plus an edge of T_{r-1}(n-s, l-1) outside
    turan_partite, ///< T_r(n, l)
    star_cover,    ///< all r-sets meeting {0..s-1}
    alon_frankl,   ///< complete l-partite r-graph with parts n-s, then s split in l-1
};

auto to_string(ConstructionKind kind) -> std::string_view;
/// Accepts the names used by to_string and their hyphenated/uppercase forms.
auto parse_construction_kind(std::string_view name) -> std::optional<ConstructionKind>;

struct ConstructionParams {
    Count n = 0;
    Count r = 0;
    std::optional<Count> l;
    std::optional<Count> s;
};

/// Edge count of the construction from its closed form. Throws ParameterError
/// naming the violated inequality when the parameters are outside the window.
auto construction_count(ConstructionKind kind, const ConstructionParams & p) -> Count;

/// The construction itself. Distinguished set first (indices 0..s-1), u = 0.
auto generate_construction(ConstructionKind kind, const ConstructionParams & p) -> Hypergraph;

/// For one_point: the size of S (C(l,2) when s >= C(l,2), otherwise s).
/// For g2: the derived t. Exposed for reports and tests.
auto one_point_cover_size(Count l, Count s) -> Count;
auto g2_parameter_t(Count l, Count s) -> std::optional<Count>;

enum class RainbowKind {
    identical_turan,     ///< k copies of T_r(n, l-1)
    complete_plus_empty, ///< min(k, C(l,2)-1) complete layers, the rest empty
};

auto to_string(RainbowKind kind) -> std::string_view;
auto parse_rainbow_kind(std::string_view name) -> std::optional<RainbowKind>;

auto generate_rainbow_layers(RainbowKind kind, std::size_t n, std::size_t r, std::size_t l, std::size_t k)
    -> LayeredInstance;
auto rainbow_construction_total(RainbowKind kind, Count n, Count r, Count l, Count k) -> Count;

} // namespace hyperturan
