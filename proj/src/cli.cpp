#include "covolume/cli.hpp"

#include <chrono>
#include <cmath>
#include <cstdlib>
#include <optional>
#include <ostream>

#include <CLI11.hpp>

#include "covolume/covolume.hpp"
#include "covolume/errors.hpp"
#include "covolume/output.hpp"
#include "covolume/survey.hpp"

namespace covol::cli {

namespace {

using output::Format;
using output::json;

constexpr double kSelfcheckTolerance = 1e-9;

struct Options {
    std::string format;
    std::int64_t d = 3;
    int n = 2;
    std::int64_t max_disc = 100;
    int n_min = 2;
    int n_max = 30;
    int margin = 20;
    bool overall = false;
    bool verbose = false;
    bool quick = false;
    std::uint64_t k = 1;
    std::uint64_t m = 0;
};

Format resolve_format(Options const & opt, Context const & ctx)
{
    if (opt.format.empty())
        return ctx.interactive ? Format::Table : Format::Json;
    return output::parse_format(opt.format);
}

void emit_rows(std::vector<SurveyRow> const & rows, Format fmt, std::ostream & out)
{
    switch (fmt) {
    case Format::Json: {
        json arr = json::array();
        for (auto const & r : rows)
            arr.push_back(output::to_json(r));
        out << (rows.size() == 1 ? arr[0].dump(2) : arr.dump(2)) << '\n';
        break;
    }
    case Format::Csv:
        out << output::survey_csv_header() << '\n';
        for (auto const & r : rows)
            out << output::to_csv(r) << '\n';
        break;
    case Format::Table: {
        output::Table t(output::survey_columns());
        for (auto const & r : rows)
            t.add(output::survey_cells(r));
        t.render(out);
        break;
    }
    }
}

// Generic emitter for flat JSON objects with scalar or string values.
void emit_records(std::vector<json> const & records, Format fmt, std::ostream & out, bool single)
{
    if (fmt == Format::Json) {
        json arr(records);
        out << (single && records.size() == 1 ? arr[0].dump(2) : arr.dump(2)) << '\n';
        return;
    }
    std::vector<std::string> keys;
    if (!records.empty())
        for (auto const & [key, _] : records.front().items())
            keys.push_back(key);
    auto cell = [](json const & v) -> std::string {
        if (v.is_string())
            return v.get<std::string>();
        if (v.is_null())
            return "";
        if (v.is_number_float())
            return output::format_double(v.get<double>());
        if (v.is_object() && v.contains("lower")) {
            auto part = [&](json const & x) {
                return x.is_string() ? x.get<std::string>() : output::format_double(x.get<double>());
            };
            return part(v["lower"]) + ".." + part(v["upper"]);
        }
        return v.dump();
    };
    if (fmt == Format::Csv) {
        for (std::size_t i = 0; i < keys.size(); ++i)
            out << (i ? "," : "") << keys[i];
        out << '\n';
        for (auto const & r : records) {
            for (std::size_t i = 0; i < keys.size(); ++i)
                out << (i ? "," : "") << cell(r[keys[i]]);
            out << '\n';
        }
        return;
    }
    output::Table t(keys);
    for (auto const & r : records) {
        std::vector<std::string> row;
        for (auto const & k : keys)
            row.push_back(cell(r[k]));
        t.add(std::move(row));
    }
    t.render(out);
}

int cmd_nu(Options const & opt, Context const & ctx, std::ostream & out)
{
    QuadField const field = from_squarefree_d(opt.d);
    CovolumeResult const result = compute_covolume(reduced_forms(field), opt.n, *ctx.cache);
    Format const fmt = resolve_format(opt, ctx);
    if (fmt == Format::Json)
        out << output::to_json(result).dump(2) << '\n';
    else
        emit_rows({make_survey_row(result)}, fmt, out);
    return kSuccess;
}

int cmd_scan(Options const & opt, Context const & ctx, std::ostream & out)
{
    emit_rows(scan(opt.n, opt.max_disc), resolve_format(opt, ctx), out);
    return kSuccess;
}

int cmd_minimal(Options const & opt, Context const & ctx, std::ostream & out)
{
    Format const fmt = resolve_format(opt, ctx);
    if (opt.overall) {
        OverallMinimum const result = overall_minimum(opt.n_max, opt.margin);
        if (fmt == Format::Json) {
            out << output::to_json(result, opt.verbose).dump(2) << '\n';
            return kSuccess;
        }
        json summary = output::to_json(result, false);
        emit_records({summary}, fmt, out, true);
        if (opt.verbose) {
            out << '\n';
            std::vector<json> growth;
            for (auto const & g : result.growth)
                growth.push_back(output::to_json(g));
            emit_records(growth, fmt, out, false);
        }
        return kSuccess;
    }

    MinimalField const result = minimal_field(opt.n, opt.margin);
    if (fmt == Format::Json) {
        out << output::to_json(result, opt.verbose).dump(2) << '\n';
        return kSuccess;
    }
    emit_records({output::to_json(result, false)}, fmt, out, true);
    if (opt.verbose) {
        out << '\n';
        std::vector<json> cert;
        for (auto const & c : output::to_json(result, true)["certificate"])
            cert.push_back(c);
        emit_records(cert, fmt, out, false);
    }
    return kSuccess;
}

int cmd_growth(Options const & opt, Context const & ctx, std::ostream & out)
{
    if (opt.n_min < 2 || opt.n_max < opt.n_min)
        throw invalid_input("growth: need 2 <= --n-min <= --n-max");
    ClassGroup const group = reduced_forms(from_squarefree_d(opt.d));
    std::vector<json> records;
    for (int n = opt.n_min; n <= opt.n_max; ++n)
        records.push_back(output::to_json(growth_ratio(group, n)));
    emit_records(records, resolve_format(opt, ctx), out, false);
    return kSuccess;
}

int cmd_hwang(Options const & opt, Context const & ctx, std::ostream & out, bool range)
{
    int const last = range ? opt.n_max : opt.n;
    if (last < opt.n)
        throw invalid_input("hwang: --n-max must be >= --n");
    std::vector<json> records;
    for (int n = opt.n; n <= last; ++n) {
        json j;
        j["n"] = n;
        j["k"] = opt.k;
        j["P4"] = hwang_p(n, 4).get_str();
        j["P2"] = hwang_p(n, 2).get_str();
        j["bound"] = output::round_to_emitted(hwang_bound(n, opt.k).value);
        records.push_back(std::move(j));
    }
    emit_records(records, resolve_format(opt, ctx), out, !range);
    return kSuccess;
}

int cmd_classgroup(Options const & opt, Context const & ctx, std::ostream & out)
{
    ClassGroup const group = reduced_forms(from_squarefree_d(opt.d));
    Format const fmt = resolve_format(opt, ctx);
    json j = output::to_json(group);
    if (opt.m > 0) {
        j["m"] = opt.m;
        j["torsion"] = torsion_count(group, opt.m);
    }
    if (fmt == Format::Json) {
        out << j.dump(2) << '\n';
        return kSuccess;
    }
    std::vector<json> records;
    for (auto const & f : group.classes()) {
        json row;
        row["a"] = f.a;
        row["b"] = f.b;
        row["c"] = f.c;
        if (opt.m > 0)
            row["power_m_is_one"] = group.power(f, opt.m) == group.principal();
        records.push_back(std::move(row));
    }
    emit_records(records, fmt, out, false);
    return kSuccess;
}

double selfcheck_tolerance(std::ostream & err)
{
    char const * env = std::getenv("COVOLUME_PRECISION");
    if (env == nullptr || *env == '\0')
        return kSelfcheckTolerance;
    char * end = nullptr;
    double v = std::strtod(env, &end);
    if (end == env || *end != '\0' || !(v > 0)) {
        err << "warning: ignoring COVOLUME_PRECISION='" << env << "'\n";
        return kSelfcheckTolerance;
    }
    // can only tighten
    return std::min(v, kSelfcheckTolerance);
}

int cmd_selfcheck(Options const & opt, Context const & ctx, std::ostream & out, std::ostream & err)
{
    auto const started = std::chrono::steady_clock::now();
    double const tolerance = selfcheck_tolerance(err);

    std::vector<QuadField> fields;
    std::vector<int> dims;
    if (opt.quick) {
        fields.push_back(from_squarefree_d(3));
        dims = {2, 3, 9};
    } else {
        for (auto const & f : fields_up_to(opt.max_disc))
            if (f.r == 1)
                fields.push_back(f);
        for (int n = 2; n <= opt.n_max; ++n)
            dims.push_back(n);
    }

    auto const checks = cross_path_checks(fields, dims, tolerance, *ctx.cache);
    Format const fmt = opt.format.empty() ? Format::Table : output::parse_format(opt.format);
    std::vector<json> records;
    std::size_t failures = 0;
    for (auto const & c : checks) {
        json j;
        j["d"] = c.field.d;
        j["disc"] = c.field.disc_abs;
        j["n"] = c.n;
        j["exact"] = c.exact.to_string();
        j["numeric"] = output::round_to_emitted(c.numeric.value);
        j["rel_err"] = output::round_to_emitted(c.relative_error);
        j["status"] = c.passed ? "pass" : "FAIL";
        records.push_back(std::move(j));
        if (!c.passed) {
            ++failures;
            err << "selfcheck: d=" << c.field.d << " n=" << c.n << " relative discrepancy "
                << output::format_double(c.relative_error) << " exceeds " << output::format_double(tolerance)
                << '\n';
        }
    }
    emit_records(records, fmt, out, false);
    double const seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
    err << "selfcheck: " << checks.size() - failures << "/" << checks.size() << " passed (tolerance "
        << output::format_double(tolerance) << ", " << output::format_double(seconds) << " s)\n";
    return failures == 0 ? kSuccess : kCheckFailed;
}

} // namespace

int run(std::vector<std::string> const & args, std::ostream & out, std::ostream & err, Context const & ctx)
{
    CLI::App app{"Exact minimal covolumes of nonuniform arithmetic lattices in PU(n,1)", "covolume"};
    app.require_subcommand(1);
    Options opt;
    auto add_format = [&](CLI::App * sub) {
        sub->add_option("--format", opt.format, "json, csv or table")
            ->check(CLI::IsMember({"json", "csv", "table"}));
    };

    auto * nu = app.add_subcommand("nu", "minimal covolume data for one field and dimension");
    nu->add_option("--d", opt.d, "squarefree d of Q(sqrt(-d))")->required();
    nu->add_option("--n", opt.n, "complex dimension n >= 2")->required();
    add_format(nu);

    auto * scan_cmd = app.add_subcommand("scan", "one row per field with Disc <= max-disc");
    scan_cmd->add_option("--n", opt.n, "complex dimension n >= 2")->required();
    scan_cmd->add_option("--max-disc", opt.max_disc, "largest |discriminant|")->required();
    add_format(scan_cmd);

    auto * minimal = app.add_subcommand("minimal", "field of minimal covolume");
    auto * minimal_n = minimal->add_option("--n", opt.n, "complex dimension n >= 2");
    auto * overall = minimal->add_flag("--overall", opt.overall, "minimize over 2 <= n <= n-max as well");
    minimal->add_option("--n-max", opt.n_max, "upper end of the dimension range (with --overall)");
    minimal->add_option("--margin", opt.margin, "discriminant safety margin")->check(CLI::PositiveNumber);
    minimal->add_flag("--verbose", opt.verbose, "print the candidate certificate");
    minimal_n->excludes(overall);
    add_format(minimal);

    auto * growth = app.add_subcommand("growth", "ratios nu(n+1)/nu(n)");
    growth->add_option("--d", opt.d, "squarefree d")->capture_default_str();
    growth->add_option("--n-min", opt.n_min)->capture_default_str();
    growth->add_option("--n-max", opt.n_max)->capture_default_str();
    add_format(growth);

    auto * hwang = app.add_subcommand("hwang", "volume lower bound for smooth cusped manifolds");
    hwang->add_option("--n", opt.n, "complex dimension n >= 2")->required();
    auto * hwang_range = hwang->add_option("--n-max", opt.n_max, "tabulate n .. n-max");
    hwang->add_option("--k", opt.k, "number of cusps")->capture_default_str();
    add_format(hwang);

    auto * classgroup = app.add_subcommand("classgroup", "reduced forms and torsion of the class group");
    classgroup->add_option("--d", opt.d, "squarefree d")->required();
    classgroup->add_option("--m", opt.m, "count classes whose order divides m");
    add_format(classgroup);

    auto * selfcheck = app.add_subcommand("selfcheck", "exact vs numeric covolume consistency");
    selfcheck->add_flag("--quick", opt.quick, "only d = 3, n in {2, 3, 9}");
    selfcheck->add_option("--max-disc", opt.max_disc)->capture_default_str();
    selfcheck->add_option("--n-max", opt.n_max, "largest n (default 20)");
    add_format(selfcheck);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    if (!reversed.empty())
        reversed.pop_back(); // program name
    try {
        app.parse(reversed);
    } catch (CLI::CallForHelp const &) {
        out << app.help();
        return kSuccess;
    } catch (CLI::ParseError const & e) {
        if (e.get_exit_code() == 0) {
            out << app.help();
            return kSuccess;
        }
        err << "covolume: " << e.what() << '\n';
        return kUsage;
    }

    try {
        if (nu->parsed())
            return cmd_nu(opt, ctx, out);
        if (scan_cmd->parsed())
            return cmd_scan(opt, ctx, out);
        if (minimal->parsed()) {
            if (!opt.overall && minimal_n->count() == 0)
                throw invalid_input("minimal: give --n or --overall");
            return cmd_minimal(opt, ctx, out);
        }
        if (growth->parsed())
            return cmd_growth(opt, ctx, out);
        if (hwang->parsed())
            return cmd_hwang(opt, ctx, out, hwang_range->count() > 0);
        if (classgroup->parsed())
            return cmd_classgroup(opt, ctx, out);
        if (selfcheck->parsed()) {
            if (selfcheck->count("--n-max") == 0)
                opt.n_max = 20;
            return cmd_selfcheck(opt, ctx, out, err);
        }
    } catch (invalid_input const & e) {
        err << "covolume: " << e.what() << '\n';
        return kUsage;
    } catch (not_squarefree const & e) {
        err << "covolume: " << e.what() << '\n';
        return kUsage;
    } catch (invalid_dimension const & e) {
        err << "covolume: " << e.what() << '\n';
        return kUsage;
    } catch (error const & e) {
        err << "covolume: " << e.what() << '\n';
        return kCheckFailed;
    }
    return kUsage;
}

} // namespace covol::cli
