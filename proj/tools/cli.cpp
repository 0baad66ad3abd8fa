#include "cli.hpp"
#include "report.hpp"

#include <hyperturan/constructions.hpp>
#include <hyperturan/errors.hpp>
#include <hyperturan/json_io.hpp>
#include <hyperturan/search.hpp>

#include <CLI11.hpp>

#include <algorithm>
#include <charconv>
#include <fstream>
#include <iostream>
#include <sstream>

namespace hyperturan::cli {

namespace {

    /// Bad command line; maps to exit_usage.
    class UsageError : public std::runtime_error {
      public:
        using std::runtime_error::runtime_error;
    };

    /// Integer flags shared by most verbs. An Option pointer stays null when
    /// the verb does not take the flag.
    struct Params {
        long long n = 0, r = 0, l = 0, s = 0, k = 0, t = 0;
        CLI::Option *on = nullptr, *or_ = nullptr, *ol = nullptr, *os = nullptr, *ok = nullptr, *ot = nullptr;

        void add(CLI::App * app, std::string_view which)
        {
            auto flag = [&](char c, long long & v, CLI::Option *& o, const char * help) {
                if (which.find(c) != std::string_view::npos)
                    o = app->add_option(std::string("--") + c, v, help)->check(CLI::NonNegativeNumber);
            };
            flag('n', n, on, "vertex count");
            flag('r', r, or_, "uniformity");
            flag('l', l, ol, "clique size / number of parts");
            flag('s', s, os, "matching bound / cover size");
            flag('k', k, ok, "number of layers");
            flag('t', t, ot, "case (iv) parameter; checked against the derived value");
        }

        static auto given(const CLI::Option * o) -> bool { return o && o->count() > 0; }

        static auto need(const CLI::Option * o, long long v, const char * flag, const std::string & what) -> Count
        {
            if (! given(o))
                throw UsageError(std::string(flag) + " is required for " + what);
            return static_cast<Count>(v);
        }

        static auto maybe(const CLI::Option * o, long long v) -> std::optional<Count>
        {
            if (! given(o))
                return std::nullopt;
            return static_cast<Count>(v);
        }
    };

    auto read_json(const std::string & path, std::istream & in) -> Json
    {
        try {
            if (path == "-")
                return Json::parse(in);
            std::ifstream file(path);
            if (! file)
                throw UsageError("--in: cannot open " + path);
            return Json::parse(file);
        }
        catch (const Json::parse_error & e) {
            throw ValidationError(std::string("--in: not valid JSON: ") + e.what());
        }
    }

    void emit(const Json & doc, const std::string & out_path, std::ostream & out)
    {
        if (out_path.empty()) {
            out << doc.dump(2) << '\n';
            return;
        }
        std::ofstream file(out_path);
        if (! file)
            throw UsageError("--out: cannot write " + out_path);
        file << doc.dump(2) << '\n';
    }

    /// --t, when given, must equal the t derived from (l, s).
    void check_t(const Params & p, Count l, Count s)
    {
        if (! Params::given(p.ot))
            return;
        auto t = g2_parameter_t(l, s);
        if (! t)
            throw UsageError("--t: (l, s) lies in no t-window");
        if (*t != static_cast<Count>(p.t))
            throw UsageError("--t: the window derives t = " + std::to_string(*t));
    }

    // --- eval -----------------------------------------------------------------------

    auto run_eval(const std::string & formula, const Params & p, const std::string & in_path, std::istream & in,
        const std::string & out_path, std::ostream & out, std::ostream & err) -> int
    {
        const std::string what = "formula " + formula;
        auto print_count = [&](Count value) {
            emit(Json{{"value", value}}, out_path, out);
            err << formula << ": " << value << '\n';
            return static_cast<int>(exit_ok);
        };

        FormulaResult result;
        if (formula == "emc")
            result = emc_value(Params::need(p.on, p.n, "--n", what), Params::need(p.or_, p.r, "--r", what),
                Params::need(p.os, p.s, "--s", what));
        else if (formula == "small-s") {
            const auto l = Params::need(p.ol, p.l, "--l", what);
            const auto s = Params::need(p.os, p.s, "--s", what);
            result =
                small_s_value(Params::need(p.on, p.n, "--n", what), Params::need(p.or_, p.r, "--r", what), l, s);
            if (Params::given(p.ot) && result.case_id != "iv")
                throw UsageError("--t: only case iv takes t");
            check_t(p, l, s);
        }
        else if (formula == "large-s")
            result = large_s_value(Params::need(p.on, p.n, "--n", what), Params::need(p.or_, p.r, "--r", what),
                Params::need(p.ol, p.l, "--l", what), Params::need(p.os, p.s, "--s", what));
        else if (formula == "rainbow")
            result = rainbow_value(Params::need(p.on, p.n, "--n", what), Params::need(p.or_, p.r, "--r", what),
                Params::need(p.ol, p.l, "--l", what), Params::need(p.ok, p.k, "--k", what));
        else if (formula == "turan")
            return print_count(turan_partite_count(Params::need(p.on, p.n, "--n", what),
                Params::need(p.ol, p.l, "--l", what), Params::need(p.or_, p.r, "--r", what)));
        else if (formula == "alon-frankl")
            return print_count(alon_frankl_g_count(Params::need(p.on, p.n, "--n", what),
                Params::need(p.ol, p.l, "--l", what), Params::need(p.os, p.s, "--s", what)));
        else if (formula == "gtz") {
            if (in_path.empty())
                throw UsageError("--in is required for formula gtz (the hypergraph H)");
            auto h = hypergraph_from_json(read_json(in_path, in));
            const auto r = Params::given(p.or_) ? static_cast<Count>(p.r) : static_cast<Count>(h.r());
            result = gtz_value(Params::need(p.on, p.n, "--n", what), r, Params::need(p.os, p.s, "--s", what), h);
        }
        else
            throw UsageError("--formula: unknown formula \"" + formula +
                "\" (expected emc, small-s, large-s, rainbow, turan, alon-frankl or gtz)");

        emit(to_json(result), out_path, out);
        if (! result.value) {
            if (result.window == WindowStatus::hypothesis_violated)
                err << formula << ": hypothesis violated: " << result.note << '\n';
            else
                err << formula << ": window not covered by the theorem: " << result.note << '\n';
            return exit_usage;
        }
        err << formula << " case " << result.case_id << ": " << *result.value << " (window "
            << to_string(result.window) << ")\n";
        return exit_ok;
    }

    // --- gen ------------------------------------------------------------------------

    auto generate(const std::string & kind_name, const Params & p) -> Json
    {
        const std::string what = "kind " + kind_name;
        if (auto rk = parse_rainbow_kind(kind_name)) {
            auto layers = generate_rainbow_layers(*rk, static_cast<std::size_t>(Params::need(p.on, p.n, "--n", what)),
                static_cast<std::size_t>(Params::need(p.or_, p.r, "--r", what)),
                static_cast<std::size_t>(Params::need(p.ol, p.l, "--l", what)),
                static_cast<std::size_t>(Params::need(p.ok, p.k, "--k", what)));
            return to_json(layers);
        }
        auto kind = parse_construction_kind(kind_name);
        if (! kind)
            throw UsageError("unknown construction kind \"" + kind_name +
                "\" (expected g1, g2, g3, one-point, yzz, turan-partite, star-cover, alon-frankl, identical-turan or "
                "complete-plus-empty)");
        ConstructionParams cp;
        cp.n = Params::need(p.on, p.n, "--n", what);
        cp.r = Params::need(p.or_, p.r, "--r", what);
        cp.l = Params::maybe(p.ol, p.l);
        cp.s = Params::maybe(p.os, p.s);
        if (*kind == ConstructionKind::g2 && cp.l && cp.s)
            check_t(p, *cp.l, *cp.s);
        return to_json(generate_construction(*kind, cp));
    }

    auto run_gen(const std::string & kind, const Params & p, const std::string & out_path, std::ostream & out,
        std::ostream & err) -> int
    {
        auto doc = generate(kind, p);
        emit(doc, out_path, out);
        if (doc.contains("layers")) {
            std::size_t total = 0;
            for (const auto & layer : doc["layers"])
                total += layer.size();
            err << "gen " << kind << ": " << doc["layers"].size() << " layers, total " << total << '\n';
        }
        else
            err << "gen " << kind << ": n=" << doc["n"] << " r=" << doc["r"] << ", " << doc["edges"].size()
                << " edges\n";
        return exit_ok;
    }

    // --- check ------------------------------------------------------------------------

    auto parse_param(std::string_view text, std::string_view prefix) -> std::size_t
    {
        auto rest = text.substr(prefix.size());
        std::size_t value = 0;
        auto [ptr, ec] = std::from_chars(rest.data(), rest.data() + rest.size(), value);
        if (ec != std::errc{} || ptr != rest.data() + rest.size())
            throw UsageError("--forbid: bad parameter in \"" + std::string(text) + "\"");
        return value;
    }

    auto check_hypergraph(const Hypergraph & h, const std::string & forbid) -> Json
    {
        ForbiddenItem item;
        try {
            item = ForbiddenSpec::parse_item(forbid);
        }
        catch (const ParameterError & e) {
            throw UsageError(std::string("--forbid: ") + e.what());
        }
        Json c;
        c["forbid"] = forbid;
        switch (item.kind) {
        case ForbiddenItem::Kind::expansion_clique: {
            auto emb = contains_expansion_clique(h, item.param);
            c["free"] = ! emb.has_value();
            c["witness"] = emb ? to_json(*emb) : Json(nullptr);
            break;
        }
        case ForbiddenItem::Kind::covering_clique: {
            auto emb = contains_covering_clique(h, item.param);
            c["free"] = ! emb.has_value();
            c["witness"] = emb ? to_json(*emb) : Json(nullptr);
            break;
        }
        case ForbiddenItem::Kind::matching: {
            const auto nu = matching_number(h);
            c["free"] = nu < item.param;
            c["matching_number"] = nu;
            break;
        }
        case ForbiddenItem::Kind::pattern: throw UsageError("--forbid: patterns are not accepted here");
        }
        return c;
    }

    auto check_layers(const LayeredInstance & layers, const std::string & forbid) -> Json
    {
        static constexpr std::string_view rainbow = "rainbow-expansion-clique:";
        static constexpr std::string_view super = "super-rainbow:";
        Json c;
        c["forbid"] = forbid;
        if (forbid.starts_with(rainbow)) {
            auto emb = contains_rainbow_expansion_clique(layers, parse_param(forbid, rainbow));
            c["free"] = ! emb.has_value();
            c["witness"] = emb ? to_json(*emb) : Json(nullptr);
            return c;
        }
        if (forbid.starts_with(super)) {
            auto w = contains_super_rainbow(layers, parse_param(forbid, super));
            c["free"] = ! w.has_value();
            if (w)
                c["witness"] = Json{{"copy", to_json(w->copy)}, {"avoiding", w->avoiding}};
            else
                c["witness"] = nullptr;
            return c;
        }
        // plain items apply to the union graph
        auto plain = check_hypergraph(layers.union_graph(), forbid);
        plain["on"] = "union";
        return plain;
    }

    auto run_check(const std::string & construction, const Params & p, const std::vector<std::string> & forbids,
        const std::string & in_path, std::istream & in, const std::string & out_path, std::ostream & out,
        std::ostream & err) -> int
    {
        if (construction.empty() == in_path.empty())
            throw UsageError("check needs exactly one of --construction and --in");
        if (forbids.empty())
            throw UsageError("check needs at least one --forbid");

        Json source = construction.empty() ? read_json(in_path, in) : generate(construction, p);
        Json doc;
        doc["source"] = construction.empty() ? "input " + in_path : "construction " + construction;
        auto checks = Json::array();
        if (source.contains("layers")) {
            auto layers = layered_from_json(source);
            doc["n"] = layers.n();
            doc["r"] = layers.r();
            doc["layers"] = layers.layers().size();
            doc["total"] = layers.total_size();
            for (const auto & f : forbids)
                checks.push_back(check_layers(layers, f));
        }
        else {
            auto h = hypergraph_from_json(source);
            doc["n"] = h.n();
            doc["r"] = h.r();
            doc["edges"] = h.edge_count();
            for (const auto & f : forbids) {
                if (f.starts_with("rainbow-") || f.starts_with("super-rainbow"))
                    throw UsageError("--forbid " + f + " needs a layered input");
                checks.push_back(check_hypergraph(h, f));
            }
        }
        const bool ok = std::all_of(checks.begin(), checks.end(), [](const Json & c) { return c["free"].get<bool>(); });
        doc["checks"] = std::move(checks);
        doc["ok"] = ok;
        emit(doc, out_path, out);
        for (const auto & c : doc["checks"])
            err << (c["free"].get<bool>() ? "pass  " : "FAIL  ") << c["forbid"].get<std::string>() << '\n';
        return ok ? exit_ok : exit_check_failed;
    }

    // --- oracles --------------------------------------------------------------------------

    auto run_oracle(const Params & p, const std::vector<std::string> & forbids, const SearchOptions & options,
        const std::string & out_path, std::ostream & out, std::ostream & err) -> int
    {
        const std::string what = "oracle";
        if (forbids.empty())
            throw UsageError("oracle needs at least one --forbid");
        ForbiddenSpec spec;
        for (const auto & f : forbids) {
            try {
                spec.add(ForbiddenSpec::parse_item(f));
            }
            catch (const ParameterError & e) {
                throw UsageError(std::string("--forbid: ") + e.what());
            }
        }
        auto outcome = max_edges_avoiding(static_cast<std::size_t>(Params::need(p.on, p.n, "--n", what)),
            static_cast<std::size_t>(Params::need(p.or_, p.r, "--r", what)), spec, options);
        emit(to_json(outcome), out_path, out);
        err << "ex(" << p.n << ", " << spec.describe() << ") " << (outcome.proven_optimal ? "= " : ">= ")
            << outcome.value << " (" << outcome.nodes_explored << " nodes)\n";
        return exit_ok;
    }

    auto run_rainbow_oracle(const Params & p, const SearchOptions & options, const std::string & out_path,
        std::ostream & out, std::ostream & err) -> int
    {
        const std::string what = "rainbow-oracle";
        auto outcome = rainbow_max_sum(static_cast<std::size_t>(Params::need(p.on, p.n, "--n", what)),
            static_cast<std::size_t>(Params::need(p.or_, p.r, "--r", what)),
            static_cast<std::size_t>(Params::need(p.ok, p.k, "--k", what)),
            static_cast<std::size_t>(Params::need(p.ol, p.l, "--l", what)), options);
        emit(to_json(outcome), out_path, out);
        err << "rainbow sum " << (outcome.proven_optimal ? "= " : ">= ") << outcome.value << " ("
            << outcome.nodes_explored << " nodes)\n";
        return exit_ok;
    }

} // namespace

auto dispatch(const std::vector<std::string> & args, std::istream & in, std::ostream & out, std::ostream & err)
    -> int
{
    CLI::App app{"Verification toolkit for hypergraph Turan problems", "hyperturan"};
    app.require_subcommand(1, 1);

    std::string formula, kind, construction, in_path, out_path, family;
    std::vector<std::string> forbids;
    std::string grid_n, grid_r, grid_l, grid_s, grid_k;
    std::uint64_t budget = 0;
    unsigned jobs = 1;
    std::size_t symmetry_depth = 3;
    bool with_oracle = false, no_warm_start = false;

    Params ep, gp, cp, op, rp;

    auto * eval = app.add_subcommand("eval", "evaluate a closed-form value");
    eval->add_option("--formula", formula, "emc, small-s, large-s, rainbow, turan, alon-frankl, gtz")->required();
    ep.add(eval, "nrlskt");
    eval->add_option("--in", in_path, "hypergraph H for gtz ('-' for stdin)");
    eval->add_option("--out", out_path, "write JSON here instead of stdout");

    auto * gen = app.add_subcommand("gen", "generate a construction");
    gen->add_option("--kind", kind, "construction or layered kind")->required();
    gp.add(gen, "nrlskt");
    gen->add_option("--out", out_path, "write JSON here instead of stdout");

    auto * check = app.add_subcommand("check", "run detectors on a construction or input");
    check->add_option("--construction", construction, "construction kind to generate and check");
    cp.add(check, "nrlskt");
    check->add_option("--in", in_path, "hypergraph or layered JSON ('-' for stdin)");
    check->add_option("--forbid", forbids, "expansion-clique:L, matching:M, covering-clique:Q, "
                                           "rainbow-expansion-clique:L, super-rainbow:L");
    check->add_option("--out", out_path, "write JSON here instead of stdout");

    auto * oracle = app.add_subcommand("oracle", "exact maximum edge count avoiding a forbidden spec");
    op.add(oracle, "nr");
    oracle->add_option("--forbid", forbids, "expansion-clique:L, matching:M, covering-clique:Q");
    auto * obudget = oracle->add_option("--budget", budget, "node limit (best-effort beyond the exact caps)");
    oracle->add_option("--jobs", jobs, "worker threads")->check(CLI::PositiveNumber);
    oracle->add_option("--symmetry-depth", symmetry_depth, "depth of symmetric-branch rejection (0 disables)");
    oracle->add_flag("--no-warm-start", no_warm_start, "start from the empty incumbent");
    oracle->add_option("--out", out_path, "write JSON here instead of stdout");

    auto * rainbow = app.add_subcommand("rainbow-oracle", "exact maximum layered total without a rainbow copy");
    rp.add(rainbow, "nrlk");
    auto * rbudget = rainbow->add_option("--budget", budget, "node limit");
    rainbow->add_option("--out", out_path, "write JSON here instead of stdout");

    auto * report = app.add_subcommand("report", "tabulate formulas against constructions and oracles");
    report->add_option("--family", family, "small-s, emc or rainbow")->required();
    report->add_option("--n", grid_n, "range, e.g. 3..8 or 4,6");
    report->add_option("--r", grid_r, "range");
    report->add_option("--l", grid_l, "range");
    report->add_option("--s", grid_s, "range");
    report->add_option("--k", grid_k, "range");
    report->add_flag("--oracle", with_oracle, "run the exact oracle per row");
    auto * pbudget = report->add_option("--budget", budget, "node limit per oracle run");
    report->add_option("--jobs", jobs, "worker threads over rows")->check(CLI::PositiveNumber);
    report->add_option("--out", out_path, "write JSON here instead of stdout");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    }
    catch (const CLI::ParseError & e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? exit_ok : exit_usage;
    }

    try {
        if (eval->parsed())
            return run_eval(formula, ep, in_path, in, out_path, out, err);
        if (gen->parsed())
            return run_gen(kind, gp, out_path, out, err);
        if (check->parsed())
            return run_check(construction, cp, forbids, in_path, in, out_path, out, err);
        if (oracle->parsed()) {
            SearchOptions options;
            if (obudget->count())
                options.budget = budget;
            options.jobs = jobs;
            options.symmetry_depth = symmetry_depth;
            options.warm_start = ! no_warm_start;
            return run_oracle(op, forbids, options, out_path, out, err);
        }
        if (rainbow->parsed()) {
            SearchOptions options;
            if (rbudget->count())
                options.budget = budget;
            return run_rainbow_oracle(rp, options, out_path, out, err);
        }
        if (report->parsed()) {
            ReportGrid grid;
            grid.family = family;
            grid.n = parse_range(grid_n);
            grid.r = parse_range(grid_r);
            grid.l = parse_range(grid_l);
            grid.s = parse_range(grid_s);
            grid.k = parse_range(grid_k);
            grid.oracle = with_oracle;
            if (pbudget->count())
                grid.budget = budget;
            grid.jobs = jobs;
            auto result = run_report(grid);
            emit(result.document, out_path, out);
            err << summary_line(result.document) << '\n';
            return result.checks_failed ? exit_check_failed : exit_ok;
        }
    }
    catch (const UsageError & e) {
        err << "error: " << e.what() << '\n';
        return exit_usage;
    }
    catch (const CapacityError & e) {
        err << "capacity: " << e.what() << '\n';
        return exit_capacity;
    }
    catch (const PreconditionError & e) {
        err << "precondition: " << e.what() << '\n';
        return exit_usage;
    }
    catch (const std::invalid_argument & e) {
        // ParameterError and ValidationError
        err << "error: " << e.what() << '\n';
        return exit_usage;
    }
    catch (const std::logic_error & e) {
        err << "internal check failed: " << e.what() << '\n';
        return exit_check_failed;
    }
    catch (const std::exception & e) {
        err << "error: " << e.what() << '\n';
        return exit_usage;
    }
    return exit_usage;
}

} // namespace hyperturan::cli
