#include <hyperturan/constructions.hpp>
#include <hyperturan/errors.hpp>
#include <hyperturan/limits.hpp>
#include <hyperturan/search.hpp>

#include <algorithm>
#include <cctype>
#include <functional>
#include <stdexcept>
#include <string>

namespace hyperturan {

namespace {

    auto c2(Count x) -> Count { return binomial(x, 2); }

    auto param_error(const std::string & what) -> ParameterError { return ParameterError(what); }

    auto require(const std::optional<Count> & value, const char * name) -> Count
    {
        if (! value)
            throw param_error(std::string("parameter ") + name + " is required");
        if (*value < 0)
            throw param_error(std::string("parameter ") + name + " must be nonnegative");
        return *value;
    }

    auto not_covered(std::string note) -> FormulaResult
    {
        FormulaResult out;
        out.window = WindowStatus::not_covered;
        out.note = std::move(note);
        return out;
    }

    // 2k < l^2 - 1, i.e. k < (l^2-1)/2 without fractions
    auto below_half_square(Count x, Count l) -> bool { return 2 * x < l * l - 1; }

    /// Builds the r-graph of r-subsets of [0,n) accepted by keep, in lexicographic order.
    auto filter_subsets(std::size_t n, std::size_t r, const std::function<bool(std::span<const unsigned>)> & keep)
        -> Hypergraph
    {
        std::vector<Vertex> flat;
        if (r <= n)
            for_each_combination(static_cast<unsigned>(n), static_cast<unsigned>(r), [&](std::span<const unsigned> c) {
                if (keep(c))
                    flat.insert(flat.end(), c.begin(), c.end());
                return true;
            });
        return Hypergraph::from_sorted_flat(n, r, std::move(flat));
    }

    /// part index per vertex for consecutive parts of the given sizes, starting at offset.
    auto part_labels(std::size_t n, std::size_t offset, const std::vector<Count> & sizes) -> std::vector<int>
    {
        std::vector<int> part(n, -1);
        std::size_t v = offset;
        for (std::size_t p = 0; p < sizes.size(); ++p)
            for (Count i = 0; i < sizes[p]; ++i)
                part[v++] = static_cast<int>(p);
        return part;
    }

    auto distinct_parts(std::span<const unsigned> c, const std::vector<int> & part) -> bool
    {
        for (std::size_t i = 0; i < c.size(); ++i) {
            if (part[c[i]] < 0)
                return false;
            for (std::size_t j = 0; j < i; ++j)
                if (part[c[i]] == part[c[j]])
                    return false;
        }
        return true;
    }

    auto count_in_prefix(std::span<const unsigned> c, Count s) -> Count
    {
        return static_cast<Count>(std::count_if(c.begin(), c.end(), [&](unsigned v) { return static_cast<Count>(v) < s; }));
    }

    auto normalise(std::string_view name) -> std::string
    {
        std::string out;
        for (char ch : name)
            out.push_back(ch == '-' ? '_' : static_cast<char>(std::tolower(static_cast<unsigned char>(ch))));
        return out;
    }

} // namespace

auto to_string(WindowStatus status) -> std::string_view
{
    switch (status) {
    case WindowStatus::ok: return "ok";
    case WindowStatus::outside: return "outside";
    case WindowStatus::unknown: return "unknown";
    case WindowStatus::not_covered: return "not_covered";
    case WindowStatus::hypothesis_violated: return "hypothesis_violated";
    }
    return "?";
}

auto turan_partite_count(Count n, Count parts, Count r) -> Count
{
    if (parts < 1)
        throw param_error("t_r(n,l) needs l >= 1");
    if (n < 0 || r < 0)
        throw param_error("t_r(n,l) needs n, r >= 0");
    if (r > parts)
        return 0;
    const auto sizes = balanced_part_sizes(n, parts);
    return elementary_symmetric(sizes, r);
}

auto emc_value(Count n, Count r, Count s) -> FormulaResult
{
    if (n < 0 || r < 1 || s < 0 || s > n)
        throw param_error("emc_value needs n >= s >= 0 and r >= 1");
    const auto direct = checked_sub(binomial(n, r), binomial(n - s, r));
    Count sum = 0;
    for (Count i = 1; i <= s; ++i)
        sum = checked_add(sum, checked_mul(binomial(s, i), binomial(n - s, r - i)));
    if (sum != direct)
        throw std::logic_error("emc_value: the two evaluation paths disagree");

    FormulaResult out;
    out.value = direct;
    out.case_id = "emc";
    out.window = n >= (2 * s + 1) * r - s ? WindowStatus::ok : WindowStatus::outside;
    if (out.window == WindowStatus::outside)
        out.note = "n < (2s+1)r - s";
    return out;
}

auto small_s_value(Count n, Count r, Count l, Count s) -> FormulaResult
{
    if (n < 0 || s < 0 || r < 0 || l < 0)
        throw param_error("small_s_value needs nonnegative parameters");
    if (n < s)
        throw param_error("small_s_value needs n >= s");
    if (! (l >= r && r >= 3))
        return not_covered("needs l >= r >= 3");

    FormulaResult out;
    out.note = "holds for sufficiently large n";
    const Count cl1 = c2(l - 1), cl = c2(l);

    if (s < l) {
        out.case_id = "v";
        out.value = checked_sub(binomial(n, r), binomial(n - s, r));
        return out;
    }
    if (auto t = g2_parameter_t(l, s)) {
        out.case_id = "iv";
        out.value = checked_add(checked_mul(s, binomial(n - s, r - 1)),
            checked_mul(turan_partite_count(s, l - *t, 2), binomial(n - s, r - 2)));
        out.note = "exact count of the two-part construction with t = " + std::to_string(*t) +
            "; the stated value carries an O(n^(r-3)) error term";
        return out;
    }
    if (s >= cl1 + 2 && s < cl1 + r) {
        if (l < 2 * r + 1)
            return not_covered("s is in the third window but l < 2r+1");
        out.case_id = "iii";
        Count value = checked_mul(s, binomial(n - s, r - 1));
        for (Count i = s - cl1 + 1; i <= r; ++i)
            value = checked_add(value, checked_mul(binomial(s - 1, i - 1), binomial(n - s, r - i)));
        out.value = value;
        return out;
    }
    if (s >= cl1 + r && s < cl) {
        if (l <= r)
            return not_covered("s is in the second window but l <= r");
        out.case_id = "ii";
        out.value = checked_mul(s, binomial(n - s, r - 1));
        return out;
    }
    if (s >= cl && below_half_square(s, l)) {
        if (l <= r)
            return not_covered("s is in the first window but l <= r");
        out.case_id = "i";
        out.value = checked_mul(cl, binomial(n - cl, r - 1));
        return out;
    }
    return not_covered("(l, s) falls in no case window");
}

auto large_s_value(Count n, Count r, Count l, Count s) -> FormulaResult
{
    if (n < s)
        throw param_error("large_s_value needs n >= s");
    if (l < 2)
        throw param_error("large_s_value needs l >= 2");
    if (r < 1 || s < 0)
        throw param_error("large_s_value needs r >= 1 and s >= 0");
    FormulaResult out;
    out.case_id = "large-s";
    out.value = checked_mul(s, turan_partite_count(n - s, l - 1, r - 1));
    out.window = WindowStatus::unknown;
    out.note = "the threshold s0(l, r) and the bound on n are not quantified";
    return out;
}

auto rainbow_value(Count n, Count r, Count l, Count k) -> FormulaResult
{
    if (n < 0)
        throw param_error("rainbow_value needs n >= 0");
    if (! (l >= r && r >= 3) || k < 1)
        return not_covered("needs l >= r >= 3 and k >= 1");
    FormulaResult out;
    if (below_half_square(k, l)) {
        out.case_id = "k-small";
        out.value = checked_mul(std::min(k, c2(l) - 1), binomial(n, r));
        out.note = "holds for sufficiently large n";
        return out;
    }
    out.case_id = "k-large";
    out.value = checked_mul(k, turan_partite_count(n, l - 1, r));
    out.window = WindowStatus::unknown;
    out.note = "exact only for k >= k0(r, l), which is not quantified";
    return out;
}

auto alon_frankl_g_count(Count n, Count l, Count s) -> Count
{
    if (l < 2 || s < 0 || n < s)
        throw param_error("alon_frankl_g_count needs l >= 2 and 0 <= s <= n");
    std::vector<Count> sizes{n - s};
    auto rest = balanced_part_sizes(s, l - 1);
    sizes.insert(sizes.end(), rest.begin(), rest.end());
    return elementary_symmetric(sizes, 2);
}

auto gtz_value(Count n, Count r, Count s, const Hypergraph & h) -> FormulaResult
{
    if (n < s || s < 0 || r < 2)
        throw param_error("gtz_value needs n >= s >= 0 and r >= 2");
    if (static_cast<Count>(h.r()) != r)
        throw param_error("gtz_value: H must be " + std::to_string(r) + "-uniform");
    if (h.empty() || weak_chromatic_number(h) <= 2) {
        FormulaResult out;
        out.case_id = "gtz";
        out.window = WindowStatus::hypothesis_violated;
        out.note = "needs weak chromatic number of H > 2";
        return out;
    }
    const auto limits = Limits::current();
    if (static_cast<std::size_t>(s) > limits.gtz_inner_max_s)
        throw CapacityError("gtz_value computes its inner term exactly only for s <= " +
            std::to_string(limits.gtz_inner_max_s));

    Count inner = 0;
    if (s >= r) {
        ForbiddenSpec spec;
        for (auto & member : independent_deletion_family(h))
            if (member.n() <= static_cast<std::size_t>(s))
                spec.add(ForbiddenSpec::pattern(std::move(member)));
        if (spec.empty())
            inner = binomial(s, r);
        else
            inner = max_edges_avoiding(static_cast<std::size_t>(s), static_cast<std::size_t>(r), spec).value;
    }
    FormulaResult out;
    out.case_id = "gtz";
    out.value = checked_add(checked_sub(checked_sub(binomial(n, r), binomial(n - s, r)), binomial(s, r)), inner);
    out.note = "inner term ex_r(s, A(H)) = " + std::to_string(inner);
    return out;
}

// --- Generators ------------------------------------------------------------------

auto to_string(ConstructionKind kind) -> std::string_view
{
    switch (kind) {
    case ConstructionKind::g1: return "g1";
    case ConstructionKind::g2: return "g2";
    case ConstructionKind::g3: return "g3";
    case ConstructionKind::one_point: return "one-point";
    case ConstructionKind::yzz: return "yzz";
    case ConstructionKind::turan_partite: return "turan-partite";
    case ConstructionKind::star_cover: return "star-cover";
    case ConstructionKind::alon_frankl: return "alon-frankl";
    }
    return "?";
}

auto parse_construction_kind(std::string_view name) -> std::optional<ConstructionKind>
{
    const auto key = normalise(name);
    for (auto kind : {ConstructionKind::g1, ConstructionKind::g2, ConstructionKind::g3, ConstructionKind::one_point,
             ConstructionKind::yzz, ConstructionKind::turan_partite, ConstructionKind::star_cover,
             ConstructionKind::alon_frankl})
        if (normalise(to_string(kind)) == key)
            return kind;
    return std::nullopt;
}

auto one_point_cover_size(Count l, Count s) -> Count { return std::min(s, c2(l)); }

auto g2_parameter_t(Count l, Count s) -> std::optional<Count>
{
    for (Count t = 2; t <= l - 2; ++t)
        if (l + 1 - t + c2(t) <= s && s < l + c2(t))
            return t;
    return std::nullopt;
}

namespace {

    struct Checked {
        Count n, r, l, s;
    };

    auto check_common(const ConstructionParams & p) -> void
    {
        if (p.n < 0 || p.r < 1)
            throw param_error("construction needs n >= 0 and r >= 1");
        if (p.s && *p.s > p.n)
            throw param_error("violated s <= n");
    }

    auto g1_check(const ConstructionParams & p) -> Checked
    {
        const auto l = require(p.l, "l"), s = require(p.s, "s");
        if (l < 2)
            throw param_error("g1 needs l >= 2");
        if (! (2 + c2(l - 1) <= s))
            throw param_error("g1 window violated: 2 + C(l-1,2) <= s");
        if (! (s < p.r + c2(l - 1)))
            throw param_error("g1 window violated: s < r + C(l-1,2)");
        return {p.n, p.r, l, s};
    }

    auto g2_check(const ConstructionParams & p) -> std::pair<Checked, Count>
    {
        const auto l = require(p.l, "l"), s = require(p.s, "s");
        auto t = g2_parameter_t(l, s);
        if (! t)
            throw param_error("g2 window violated: no t in [2, l-2] with l+1-t+C(t,2) <= s < l-t+C(t+1,2)");
        return {{p.n, p.r, l, s}, *t};
    }

    auto g3_check(const ConstructionParams & p) -> Checked
    {
        const auto s = require(p.s, "s");
        if (p.l && ! (s < *p.l))
            throw param_error("g3 window violated: s < l");
        return {p.n, p.r, p.l.value_or(0), s};
    }

    auto one_point_size(const ConstructionParams & p) -> Count
    {
        const auto s = require(p.s, "s");
        if (! p.l)
            return s;
        const auto l = *p.l;
        if (! (l > p.r))
            throw param_error("one-point window violated: l > r");
        if (! (c2(l - 1) + p.r <= s))
            throw param_error("one-point window violated: C(l-1,2) + r <= s");
        if (! below_half_square(s, l))
            throw param_error("one-point window violated: s < (l^2-1)/2");
        return one_point_cover_size(l, s);
    }

    auto yzz_check(const ConstructionParams & p) -> Checked
    {
        const auto l = require(p.l, "l"), s = require(p.s, "s");
        if (l < 2)
            throw param_error("yzz needs l >= 2");
        if (p.r < 2)
            throw param_error("yzz needs r >= 2");
        return {p.n, p.r, l, s};
    }

    auto alon_frankl_sizes(const ConstructionParams & p) -> std::vector<Count>
    {
        const auto l = require(p.l, "l"), s = require(p.s, "s");
        if (l < 2)
            throw param_error("alon-frankl needs l >= 2");
        auto sizes = balanced_part_sizes(s, l - 1);
        sizes.push_back(p.n - s);
        return sizes;
    }

} // namespace

auto construction_count(ConstructionKind kind, const ConstructionParams & p) -> Count
{
    check_common(p);
    switch (kind) {
    case ConstructionKind::g1: {
        auto [n, r, l, s] = g1_check(p);
        Count value = checked_mul(s, binomial(n - s, r - 1));
        for (Count i = s - c2(l - 1) + 1; i <= r; ++i)
            value = checked_add(value, checked_mul(binomial(s - 1, i - 1), binomial(n - s, r - i)));
        return value;
    }
    case ConstructionKind::g2: {
        auto [c, t] = g2_check(p);
        return checked_add(checked_mul(c.s, binomial(c.n - c.s, c.r - 1)),
            checked_mul(turan_partite_count(c.s, c.l - t, 2), binomial(c.n - c.s, c.r - 2)));
    }
    case ConstructionKind::g3: {
        auto c = g3_check(p);
        return checked_sub(binomial(c.n, c.r), binomial(c.n - c.s, c.r));
    }
    case ConstructionKind::one_point: {
        const auto size = one_point_size(p);
        return checked_mul(size, binomial(p.n - size, p.r - 1));
    }
    case ConstructionKind::yzz: {
        auto c = yzz_check(p);
        return checked_mul(c.s, turan_partite_count(c.n - c.s, c.l - 1, c.r - 1));
    }
    case ConstructionKind::turan_partite: {
        const auto l = require(p.l, "l");
        if (l < 1)
            throw param_error("turan-partite needs l >= 1");
        return turan_partite_count(p.n, l, p.r);
    }
    case ConstructionKind::star_cover: {
        const auto s = require(p.s, "s");
        return checked_sub(binomial(p.n, p.r), binomial(p.n - s, p.r));
    }
    case ConstructionKind::alon_frankl: return elementary_symmetric(alon_frankl_sizes(p), p.r);
    }
    throw std::logic_error("unknown construction kind");
}

auto generate_construction(ConstructionKind kind, const ConstructionParams & p) -> Hypergraph
{
    check_common(p);
    const auto n = static_cast<std::size_t>(p.n);
    const auto r = static_cast<std::size_t>(p.r);
    switch (kind) {
    case ConstructionKind::g1: {
        auto c = g1_check(p);
        const Count threshold = c.s - c2(c.l - 1) + 1;
        return filter_subsets(n, r, [&](std::span<const unsigned> e) {
            const auto in_a = count_in_prefix(e, c.s);
            return in_a == 1 || (e[0] == 0 && in_a >= threshold);
        });
    }
    case ConstructionKind::g2: {
        auto [c, t] = g2_check(p);
        const auto part = part_labels(n, 0, balanced_part_sizes(c.s, c.l - t));
        return filter_subsets(n, r, [&](std::span<const unsigned> e) {
            const auto in_a = count_in_prefix(e, c.s);
            // A-vertices come first in a sorted edge
            return in_a == 1 || (in_a == 2 && part[e[0]] != part[e[1]]);
        });
    }
    case ConstructionKind::g3: {
        auto c = g3_check(p);
        return filter_subsets(n, r, [&](std::span<const unsigned> e) { return count_in_prefix(e, c.s) >= 1; });
    }
    case ConstructionKind::one_point: {
        const auto size = one_point_size(p);
        return filter_subsets(n, r, [&](std::span<const unsigned> e) { return count_in_prefix(e, size) == 1; });
    }
    case ConstructionKind::yzz: {
        auto c = yzz_check(p);
        const auto part = part_labels(n, static_cast<std::size_t>(c.s), balanced_part_sizes(c.n - c.s, c.l - 1));
        return filter_subsets(n, r, [&](std::span<const unsigned> e) {
            return count_in_prefix(e, c.s) == 1 && distinct_parts(e.subspan(1), part);
        });
    }
    case ConstructionKind::turan_partite: {
        const auto l = require(p.l, "l");
        if (l < 1)
            throw param_error("turan-partite needs l >= 1");
        const auto part = part_labels(n, 0, balanced_part_sizes(p.n, l));
        return filter_subsets(n, r, [&](std::span<const unsigned> e) { return distinct_parts(e, part); });
    }
    case ConstructionKind::star_cover: return star_cover(n, r, static_cast<std::size_t>(require(p.s, "s")));
    case ConstructionKind::alon_frankl: {
        const auto part = part_labels(n, 0, alon_frankl_sizes(p));
        return filter_subsets(n, r, [&](std::span<const unsigned> e) { return distinct_parts(e, part); });
    }
    }
    throw std::logic_error("unknown construction kind");
}

auto to_string(RainbowKind kind) -> std::string_view
{
    switch (kind) {
    case RainbowKind::identical_turan: return "identical-turan";
    case RainbowKind::complete_plus_empty: return "complete-plus-empty";
    }
    return "?";
}

auto parse_rainbow_kind(std::string_view name) -> std::optional<RainbowKind>
{
    const auto key = normalise(name);
    for (auto kind : {RainbowKind::identical_turan, RainbowKind::complete_plus_empty})
        if (normalise(to_string(kind)) == key)
            return kind;
    return std::nullopt;
}

namespace {

    auto check_rainbow_params(Count n, Count r, Count l, Count k) -> void
    {
        if (k < 1)
            throw param_error("rainbow layers need k >= 1");
        if (l < 2)
            throw param_error("rainbow layers need l >= 2");
        if (r < 1 || n < 0)
            throw param_error("rainbow layers need r >= 1 and n >= 0");
    }

} // namespace

auto rainbow_construction_total(RainbowKind kind, Count n, Count r, Count l, Count k) -> Count
{
    check_rainbow_params(n, r, l, k);
    switch (kind) {
    case RainbowKind::identical_turan: return checked_mul(k, turan_partite_count(n, l - 1, r));
    case RainbowKind::complete_plus_empty: return checked_mul(std::min(k, c2(l) - 1), binomial(n, r));
    }
    throw std::logic_error("unknown rainbow kind");
}

auto generate_rainbow_layers(RainbowKind kind, std::size_t n, std::size_t r, std::size_t l, std::size_t k)
    -> LayeredInstance
{
    check_rainbow_params(static_cast<Count>(n), static_cast<Count>(r), static_cast<Count>(l), static_cast<Count>(k));
    std::vector<Hypergraph> layers;
    switch (kind) {
    case RainbowKind::identical_turan: {
        const auto turan = generate_construction(
            ConstructionKind::turan_partite, {static_cast<Count>(n), static_cast<Count>(r), static_cast<Count>(l - 1), {}});
        layers.assign(k, turan);
        break;
    }
    case RainbowKind::complete_plus_empty: {
        const auto full = std::min<std::size_t>(k, l * (l - 1) / 2 - 1);
        const auto complete = complete_hypergraph(n, r);
        const auto empty = make_hypergraph(n, r, {});
        for (std::size_t i = 0; i < k; ++i)
            layers.push_back(i < full ? complete : empty);
        break;
    }
    }
    return LayeredInstance(n, r, std::move(layers));
}

} // namespace hyperturan
