#include "report.hpp"

#include <hyperturan/constructions.hpp>
#include <hyperturan/errors.hpp>
#include <hyperturan/limits.hpp>
#include <hyperturan/search.hpp>

#include <algorithm>
#include <atomic>
#include <charconv>
#include <chrono>
#include <functional>
#include <sstream>
#include <thread>

#ifndef HYPERTURAN_VERSION
#define HYPERTURAN_VERSION "0.0.0"
#endif

namespace hyperturan::cli {

namespace {

    auto parse_count(std::string_view text) -> Count
    {
        Count value = 0;
        auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
        if (ec != std::errc{} || ptr != text.data() + text.size() || value < 0)
            throw ParameterError("bad grid value \"" + std::string(text) + "\"");
        return value;
    }

    // constructions are generated and checked only up to this many vertices
    constexpr Count construction_check_max_n = 24;

    auto construction_for_case(const std::string & case_id) -> std::optional<ConstructionKind>
    {
        if (case_id == "i" || case_id == "ii")
            return ConstructionKind::one_point;
        if (case_id == "iii")
            return ConstructionKind::g1;
        if (case_id == "iv")
            return ConstructionKind::g2;
        if (case_id == "v")
            return ConstructionKind::g3;
        if (case_id == "large-s")
            return ConstructionKind::yzz;
        return std::nullopt;
    }

    auto classify(const FormulaResult & f, std::optional<Count> reference) -> Agreement
    {
        if (! f.value || ! reference)
            return Agreement::not_covered;
        return *f.value == *reference ? Agreement::match : Agreement::gap_recorded;
    }

    struct RowResult {
        Json row;
        bool failed = false;
    };

    /// The value a formula is compared against: the oracle when one was
    /// requested, otherwise the construction count.
    auto reference_value(const Json & oracle, const Json & construction) -> std::optional<Count>
    {
        if (oracle.is_object())
            return oracle.contains("value") ? std::optional<Count>(oracle["value"].get<Count>()) : std::nullopt;
        if (construction.is_object() && construction.contains("edges"))
            return construction["edges"].get<Count>();
        return std::nullopt;
    }

    auto oracle_json(const std::function<SearchOutcome()> & run) -> Json
    {
        try {
            auto outcome = run();
            return Json{{"value", outcome.value}, {"proven_optimal", outcome.proven_optimal}};
        }
        catch (const CapacityError & e) {
            return Json{{"error", e.what()}};
        }
        catch (const ParameterError & e) {
            return Json{{"error", e.what()}};
        }
    }

    auto hypergraph_claim(const std::string & formula, const FormulaResult & f, Count n, Count r, Count l, Count s,
        const Json & oracle, bool & failed) -> Json
    {
        Json claim;
        claim["formula"] = formula;
        claim["result"] = to_json(f);
        Json construction = nullptr;
        if (auto kind = construction_for_case(f.case_id)) {
            ConstructionParams p{n, r, l, s};
            try {
                construction = Json::object();
                construction["kind"] = std::string(to_string(*kind));
                construction["edges"] = construction_count(*kind, p);
                if (n <= construction_check_max_n) {
                    auto h = generate_construction(*kind, p);
                    const bool no_clique = ! contains_expansion_clique(h, static_cast<std::size_t>(l + 1));
                    const auto nu = matching_number(h);
                    construction["expansion_free"] = no_clique;
                    construction["matching_number"] = nu;
                    const bool free = no_clique && static_cast<Count>(nu) <= s;
                    construction["free"] = free;
                    if (! free)
                        failed = true;
                }
                else
                    construction["free"] = nullptr;
            }
            catch (const ParameterError & e) {
                construction = Json{{"kind", std::string(to_string(*kind))}, {"error", e.what()}};
            }
            catch (const CapacityError & e) {
                construction = Json{{"kind", std::string(to_string(*kind))}, {"error", e.what()}};
            }
        }
        claim["construction"] = construction;
        claim["agreement"] = std::string(to_string(classify(f, reference_value(oracle, construction))));
        return claim;
    }

    auto small_s_row(Count n, Count r, Count l, Count s, const ReportGrid & grid) -> RowResult
    {
        RowResult out;
        out.row["params"] = Json{{"n", n}, {"r", r}, {"l", l}, {"s", s}};
        Json oracle = nullptr;
        if (grid.oracle) {
            oracle = oracle_json([&] {
                ForbiddenSpec spec({ForbiddenSpec::expansion_clique(static_cast<std::size_t>(l + 1)),
                    ForbiddenSpec::matching(static_cast<std::size_t>(s + 1))});
                SearchOptions options;
                options.budget = grid.budget;
                return max_edges_avoiding(static_cast<std::size_t>(n), static_cast<std::size_t>(r), spec, options);
            });
        }
        out.row["oracle"] = oracle;
        auto claims = Json::array();
        claims.push_back(hypergraph_claim("small-s", small_s_value(n, r, l, s), n, r, l, s, oracle, out.failed));
        if (l >= 2)
            claims.push_back(hypergraph_claim("large-s", large_s_value(n, r, l, s), n, r, l, s, oracle, out.failed));
        out.row["claims"] = std::move(claims);
        return out;
    }

    auto emc_row(Count n, Count r, Count s, const ReportGrid & grid) -> RowResult
    {
        RowResult out;
        out.row["params"] = Json{{"n", n}, {"r", r}, {"s", s}};
        Json oracle = nullptr;
        if (grid.oracle) {
            oracle = oracle_json([&] {
                ForbiddenSpec spec({ForbiddenSpec::matching(static_cast<std::size_t>(s + 1))});
                SearchOptions options;
                options.budget = grid.budget;
                return max_edges_avoiding(static_cast<std::size_t>(n), static_cast<std::size_t>(r), spec, options);
            });
        }
        out.row["oracle"] = oracle;
        const auto f = emc_value(n, r, s);
        Json construction{{"kind", std::string(to_string(ConstructionKind::star_cover))},
            {"edges", construction_count(ConstructionKind::star_cover, {n, r, std::nullopt, s})}};
        if (n <= construction_check_max_n) {
            const auto nu = matching_number(
                star_cover(static_cast<std::size_t>(n), static_cast<std::size_t>(r), static_cast<std::size_t>(s)));
            construction["matching_number"] = nu;
            construction["free"] = static_cast<Count>(nu) <= s;
            out.failed = static_cast<Count>(nu) > s;
        }
        else
            construction["free"] = nullptr;
        Json claim;
        claim["formula"] = "emc";
        claim["result"] = to_json(f);
        claim["construction"] = construction;
        claim["agreement"] = std::string(to_string(classify(f, reference_value(oracle, construction))));
        out.row["claims"] = Json::array({claim});
        return out;
    }

    auto rainbow_row(Count n, Count r, Count l, Count k, const ReportGrid & grid) -> RowResult
    {
        RowResult out;
        out.row["params"] = Json{{"n", n}, {"r", r}, {"l", l}, {"k", k}};
        Json oracle = nullptr;
        if (grid.oracle) {
            oracle = oracle_json([&] {
                SearchOptions options;
                options.budget = grid.budget;
                return rainbow_max_sum(static_cast<std::size_t>(n), static_cast<std::size_t>(r),
                    static_cast<std::size_t>(k), static_cast<std::size_t>(l), options);
            });
        }
        out.row["oracle"] = oracle;
        const auto f = rainbow_value(n, r, l, k);

        // the better of the two layered constructions
        Json construction = nullptr;
        if (k >= 1 && l >= 2) {
            auto best = RainbowKind::complete_plus_empty;
            Count best_total = -1;
            for (auto kind : {RainbowKind::complete_plus_empty, RainbowKind::identical_turan}) {
                auto total = rainbow_construction_total(kind, n, r, l, k);
                if (total > best_total) {
                    best_total = total;
                    best = kind;
                }
            }
            construction = Json{{"kind", std::string(to_string(best))}, {"edges", best_total}};
            if (n <= 12) {
                auto layers = generate_rainbow_layers(best, static_cast<std::size_t>(n), static_cast<std::size_t>(r),
                    static_cast<std::size_t>(l), static_cast<std::size_t>(k));
                const bool free = ! contains_rainbow_expansion_clique(layers, static_cast<std::size_t>(l));
                construction["free"] = free;
                out.failed = ! free;
            }
            else
                construction["free"] = nullptr;
        }
        Json claim;
        claim["formula"] = "rainbow";
        claim["result"] = to_json(f);
        claim["construction"] = construction;
        claim["agreement"] = std::string(to_string(classify(f, reference_value(oracle, construction))));
        out.row["claims"] = Json::array({claim});
        return out;
    }

} // namespace

auto parse_range(std::string_view text) -> std::vector<Count>
{
    std::vector<Count> out;
    while (! text.empty()) {
        auto comma = text.find(',');
        auto item = text.substr(0, comma);
        text = comma == std::string_view::npos ? std::string_view{} : text.substr(comma + 1);
        if (item.empty())
            continue;
        if (auto dots = item.find(".."); dots != std::string_view::npos) {
            const auto lo = parse_count(item.substr(0, dots));
            const auto hi = parse_count(item.substr(dots + 2));
            for (auto v = lo; v <= hi; ++v)
                out.push_back(v);
        }
        else
            out.push_back(parse_count(item));
    }
    return out;
}

auto to_string(Agreement a) -> std::string_view
{
    switch (a) {
    case Agreement::match: return "match";
    case Agreement::gap_recorded: return "gap-recorded";
    case Agreement::not_covered: return "not-covered";
    }
    return "?";
}

auto run_report(const ReportGrid & grid) -> Report
{
    const auto start = std::chrono::steady_clock::now();

    // grid points in output order
    std::vector<std::function<RowResult()>> tasks;
    if (grid.family == "small-s") {
        for (auto r : grid.r)
            for (auto l : grid.l)
                for (auto s : grid.s)
                    for (auto n : grid.n)
                        tasks.emplace_back([=, &grid] { return small_s_row(n, r, l, s, grid); });
    }
    else if (grid.family == "emc") {
        for (auto r : grid.r)
            for (auto s : grid.s)
                for (auto n : grid.n)
                    tasks.emplace_back([=, &grid] { return emc_row(n, r, s, grid); });
    }
    else if (grid.family == "rainbow") {
        for (auto r : grid.r)
            for (auto l : grid.l)
                for (auto k : grid.k)
                    for (auto n : grid.n)
                        tasks.emplace_back([=, &grid] { return rainbow_row(n, r, l, k, grid); });
    }
    else
        throw ParameterError("unknown report family \"" + grid.family + "\" (expected small-s, emc or rainbow)");

    std::vector<RowResult> results(tasks.size());
    std::vector<std::string> errors(tasks.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        while (true) {
            auto i = next.fetch_add(1);
            if (i >= tasks.size())
                return;
            try {
                results[i] = tasks[i]();
            }
            catch (const std::exception & e) {
                errors[i] = e.what();
            }
        }
    };
    const auto workers = std::max(1U, std::min<unsigned>(grid.jobs, static_cast<unsigned>(tasks.size())));
    std::vector<std::thread> pool;
    for (unsigned j = 1; j < workers; ++j)
        pool.emplace_back(worker);
    worker();
    for (auto & t : pool)
        t.join();

    Report report;
    auto rows = Json::array();
    std::size_t counts[3] = {0, 0, 0};
    std::size_t failed = 0, errored = 0;
    for (std::size_t i = 0; i < results.size(); ++i) {
        if (! errors[i].empty()) {
            rows.push_back(Json{{"error", errors[i]}});
            ++errored;
            continue;
        }
        for (const auto & claim : results[i].row["claims"]) {
            const auto a = claim["agreement"].get<std::string>();
            if (a == "match")
                ++counts[0];
            else if (a == "gap-recorded")
                ++counts[1];
            else
                ++counts[2];
        }
        if (results[i].failed)
            ++failed;
        results[i].row["checks_ok"] = ! results[i].failed;
        rows.push_back(std::move(results[i].row));
    }
    report.checks_failed = failed > 0;

    auto grid_json = Json::object();
    grid_json["n"] = grid.n;
    grid_json["r"] = grid.r;
    if (grid.family != "emc")
        grid_json["l"] = grid.l;
    if (grid.family == "rainbow")
        grid_json["k"] = grid.k;
    else
        grid_json["s"] = grid.s;

    Json meta;
    meta["tool"] = "hyperturan";
    meta["version"] = HYPERTURAN_VERSION;
    meta["family"] = grid.family;
    meta["grid"] = std::move(grid_json);
    meta["oracle"] = grid.oracle;
    meta["budget"] = grid.budget ? Json(*grid.budget) : Json(nullptr);
    meta["wall_time_s"] = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

    report.document["metadata"] = std::move(meta);
    report.document["rows"] = std::move(rows);
    report.document["summary"] = Json{{"rows", results.size()}, {"match", counts[0]}, {"gap_recorded", counts[1]},
        {"not_covered", counts[2]}, {"failed_checks", failed}, {"errors", errored}};
    return report;
}

auto summary_line(const Json & report) -> std::string
{
    const auto & s = report["summary"];
    std::ostringstream out;
    out << "report: " << s["rows"].get<std::size_t>() << " rows; claims: " << s["match"].get<std::size_t>()
        << " match, " << s["gap_recorded"].get<std::size_t>() << " gap-recorded, "
        << s["not_covered"].get<std::size_t>() << " not-covered; " << s["failed_checks"].get<std::size_t>()
        << " failed checks, " << s["errors"].get<std::size_t>() << " errors";
    return out.str();
}

} // namespace hyperturan::cli
