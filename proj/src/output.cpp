#include "covolume/output.hpp"

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <ostream>
#include <sstream>

#include "covolume/errors.hpp"

namespace covol::output {

namespace {

constexpr std::string_view kIntervalSep = "..";

std::vector<std::string_view> split(std::string_view line, char sep)
{
    std::vector<std::string_view> parts;
    std::size_t start = 0;
    while (true) {
        auto pos = line.find(sep, start);
        if (pos == std::string_view::npos) {
            parts.push_back(line.substr(start));
            return parts;
        }
        parts.push_back(line.substr(start, pos - start));
        start = pos + 1;
    }
}

double parse_double(std::string_view s)
{
    std::string buf(s);
    char * end = nullptr;
    double v = std::strtod(buf.c_str(), &end);
    if (buf.empty() || end != buf.c_str() + buf.size())
        throw invalid_input("not a number: '" + buf + "'");
    return v;
}

std::uint64_t parse_unsigned(std::string_view s)
{
    std::string buf(s);
    char * end = nullptr;
    unsigned long long v = std::strtoull(buf.c_str(), &end, 10);
    if (buf.empty() || end != buf.c_str() + buf.size())
        throw invalid_input("not an unsigned integer: '" + buf + "'");
    return v;
}

std::int64_t parse_signed(std::string_view s)
{
    std::string buf(s);
    char * end = nullptr;
    long long v = std::strtoll(buf.c_str(), &end, 10);
    if (buf.empty() || end != buf.c_str() + buf.size())
        throw invalid_input("not an integer: '" + buf + "'");
    return v;
}

NumericValue emitted(double x) { return NumericValue{round_to_emitted(x), 0.0}; }

} // namespace

Format parse_format(std::string_view name)
{
    if (name == "json")
        return Format::Json;
    if (name == "csv")
        return Format::Csv;
    if (name == "table")
        return Format::Table;
    throw invalid_input("unknown format '" + std::string(name) + "' (expected json, csv or table)");
}

std::string format_double(double x)
{
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", x);
    return buf;
}

double round_to_emitted(double x) { return std::strtod(format_double(x).c_str(), nullptr); }

json rational_json(RationalInterval const & x)
{
    if (x.is_exact())
        return x.lower.to_string();
    json j;
    j["lower"] = x.lower.to_string();
    j["upper"] = x.upper.to_string();
    return j;
}

RationalInterval rational_from_json(json const & j)
{
    if (j.is_string())
        return RationalInterval::point(Rational::parse(j.get<std::string>()));
    return {Rational::parse(j.at("lower").get<std::string>()), Rational::parse(j.at("upper").get<std::string>())};
}

json numeric_json(NumericInterval const & x)
{
    if (x.is_exact())
        return round_to_emitted(x.lower.value);
    json j;
    j["lower"] = round_to_emitted(x.lower.value);
    j["upper"] = round_to_emitted(x.upper.value);
    return j;
}

NumericInterval numeric_from_json(json const & j)
{
    if (j.is_number())
        return NumericInterval::point(emitted(j.get<double>()));
    return {emitted(j.at("lower").get<double>()), emitted(j.at("upper").get<double>())};
}

std::string rational_cell(RationalInterval const & x)
{
    if (x.is_exact())
        return x.lower.to_string();
    return x.lower.to_string() + std::string(kIntervalSep) + x.upper.to_string();
}

RationalInterval rational_from_cell(std::string_view cell)
{
    auto pos = cell.find(kIntervalSep);
    if (pos == std::string_view::npos)
        return RationalInterval::point(Rational::parse(cell));
    return {Rational::parse(cell.substr(0, pos)), Rational::parse(cell.substr(pos + kIntervalSep.size()))};
}

std::string numeric_cell(NumericInterval const & x)
{
    if (x.is_exact())
        return format_double(x.lower.value);
    return format_double(x.lower.value) + std::string(kIntervalSep) + format_double(x.upper.value);
}

NumericInterval numeric_from_cell(std::string_view cell)
{
    // "1e-07..2e-07": the separator never occurs inside a %g number
    auto pos = cell.find(kIntervalSep);
    if (pos == std::string_view::npos)
        return NumericInterval::point(emitted(parse_double(cell)));
    return {emitted(parse_double(cell.substr(0, pos))), emitted(parse_double(cell.substr(pos + kIntervalSep.size())))};
}

std::vector<std::string> const & survey_columns()
{
    static std::vector<std::string> const columns{"d", "disc",    "n", "nu",      "chi",     "volume", "h",
                                                  "h_torsion", "r", "epsilon", "mult_lo", "mult_hi", "exact"};
    return columns;
}

std::string survey_csv_header()
{
    std::string out;
    for (auto const & c : survey_columns()) {
        if (!out.empty())
            out += ',';
        out += c;
    }
    return out;
}

std::vector<std::string> survey_cells(SurveyRow const & row)
{
    return {std::to_string(row.d),
            std::to_string(row.disc),
            std::to_string(row.n),
            rational_cell(row.nu),
            rational_cell(row.chi),
            numeric_cell(row.volume),
            std::to_string(row.h),
            std::to_string(row.h_torsion),
            std::to_string(row.r),
            row.epsilon,
            row.multiplicity ? std::to_string(row.multiplicity->lower) : "",
            row.multiplicity ? std::to_string(row.multiplicity->upper) : "",
            row.exact ? "true" : "false"};
}

std::string to_csv(SurveyRow const & row)
{
    std::string out;
    bool first = true;
    for (auto const & cell : survey_cells(row)) {
        if (!first)
            out += ',';
        out += cell;
        first = false;
    }
    return out;
}

SurveyRow survey_row_from_csv(std::string_view line)
{
    auto cells = split(line, ',');
    if (cells.size() != survey_columns().size())
        throw invalid_input("survey CSV row has " + std::to_string(cells.size()) + " fields, expected " +
                            std::to_string(survey_columns().size()));
    SurveyRow row;
    row.d = parse_signed(cells[0]);
    row.disc = parse_signed(cells[1]);
    row.n = static_cast<int>(parse_signed(cells[2]));
    row.nu = rational_from_cell(cells[3]);
    row.chi = rational_from_cell(cells[4]);
    row.volume = numeric_from_cell(cells[5]);
    row.h = parse_unsigned(cells[6]);
    row.h_torsion = parse_unsigned(cells[7]);
    row.r = static_cast<unsigned>(parse_unsigned(cells[8]));
    row.epsilon = std::string(cells[9]);
    if (cells[10].empty() != cells[11].empty())
        throw invalid_input("survey CSV row has only one multiplicity bound");
    if (!cells[10].empty())
        row.multiplicity = MultiplicityBounds{parse_unsigned(cells[10]), parse_unsigned(cells[11])};
    if (cells[12] != "true" && cells[12] != "false")
        throw invalid_input("survey CSV 'exact' must be true or false");
    row.exact = cells[12] == "true";
    return row;
}

json to_json(SurveyRow const & row)
{
    json j;
    j["d"] = row.d;
    j["disc"] = row.disc;
    j["n"] = row.n;
    j["nu"] = rational_json(row.nu);
    j["chi"] = rational_json(row.chi);
    j["volume"] = numeric_json(row.volume);
    j["h"] = row.h;
    j["h_torsion"] = row.h_torsion;
    j["r"] = row.r;
    j["epsilon"] = row.epsilon;
    j["mult_lo"] = row.multiplicity ? json(row.multiplicity->lower) : json(nullptr);
    j["mult_hi"] = row.multiplicity ? json(row.multiplicity->upper) : json(nullptr);
    j["exact"] = row.exact;
    return j;
}

SurveyRow survey_row_from_json(json const & j)
{
    SurveyRow row;
    row.d = j.at("d").get<std::int64_t>();
    row.disc = j.at("disc").get<std::int64_t>();
    row.n = j.at("n").get<int>();
    row.nu = rational_from_json(j.at("nu"));
    row.chi = rational_from_json(j.at("chi"));
    row.volume = numeric_from_json(j.at("volume"));
    row.h = j.at("h").get<std::uint64_t>();
    row.h_torsion = j.at("h_torsion").get<std::uint64_t>();
    row.r = j.at("r").get<unsigned>();
    row.epsilon = j.at("epsilon").get<std::string>();
    if (!j.at("mult_lo").is_null())
        row.multiplicity = MultiplicityBounds{j.at("mult_lo").get<std::uint64_t>(), j.at("mult_hi").get<std::uint64_t>()};
    row.exact = j.at("exact").get<bool>();
    return row;
}

json to_json(CovolumeResult const & result)
{
    json j = to_json(make_survey_row(result));
    j["index"] = rational_json(result.index);
    return j;
}

json to_json(GrowthReport const & report)
{
    json j;
    j["n"] = report.n;
    j["q"] = rational_json(report.q);
    j["log_q_over_n"] = round_to_emitted(report.log_q_over_n);
    j["closed_form"] = numeric_json(report.closed_form);
    j["closed_form_rel_err"] = round_to_emitted(report.closed_form_relative_error);
    return j;
}

json to_json(MinimalField const & result, bool with_certificate)
{
    json j;
    j["n"] = result.n;
    j["d"] = result.winner.field.d;
    j["disc"] = result.winner.field.disc_abs;
    j["nu"] = rational_json(result.winner.nu);
    j["chi"] = rational_json(result.winner.chi);
    j["volume"] = numeric_json(result.winner.volume);
    j["disc_bound"] = round_to_emitted(result.bound.value);
    j["disc_limit"] = round_to_emitted(result.disc_limit);
    if (with_certificate) {
        json cert = json::array();
        for (auto const & c : result.certificate) {
            json e;
            e["d"] = c.field.d;
            e["disc"] = c.field.disc_abs;
            e["nu"] = rational_json(c.nu);
            e["exact"] = c.nu.is_exact();
            cert.push_back(std::move(e));
        }
        j["certificate"] = std::move(cert);
    }
    return j;
}

json to_json(OverallMinimum const & result, bool verbose)
{
    json j;
    j["n_max"] = result.n_max;
    j["n_star"] = result.n_star;
    j["n_star_volume"] = result.n_star_volume;
    j["d"] = result.minimum.field.d;
    j["nu"] = rational_json(result.minimum.nu);
    j["chi"] = rational_json(result.minimum.chi);
    j["volume"] = numeric_json(result.minimum.volume);
    j["monotone_from"] = result.monotone_from ? json(*result.monotone_from) : json(nullptr);
    if (verbose) {
        json dims = json::array();
        for (auto const & m : result.per_dimension)
            dims.push_back(to_json(m, true));
        j["per_dimension"] = std::move(dims);
        json growth = json::array();
        for (auto const & g : result.growth)
            growth.push_back(to_json(g));
        j["growth"] = std::move(growth);
    }
    return j;
}

json to_json(ClassGroup const & group)
{
    json j;
    j["d"] = group.field().d;
    j["disc"] = group.field().disc_abs;
    j["h"] = group.h();
    json classes = json::array();
    for (auto const & f : group.classes())
        classes.push_back(json::array({f.a, f.b, f.c}));
    j["classes"] = std::move(classes);
    return j;
}

void Table::render(std::ostream & os) const
{
    std::vector<std::size_t> width(headers_.size(), 0);
    auto measure = [&](std::vector<std::string> const & row) {
        for (std::size_t i = 0; i < row.size() && i < width.size(); ++i)
            width[i] = std::max(width[i], row[i].size());
    };
    measure(headers_);
    for (auto const & row : rows_)
        measure(row);

    auto emit = [&](std::vector<std::string> const & row) {
        std::string line;
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i > 0)
                line += "  ";
            line += row[i];
            if (i + 1 < row.size())
                line.append(width[i] - row[i].size(), ' ');
        }
        os << line << '\n';
    };
    emit(headers_);
    for (auto const & row : rows_)
        emit(row);
}

} // namespace covol::output
