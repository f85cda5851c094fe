#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "covolume/covolume.hpp"
#include "covolume/survey.hpp"

namespace covol::output {

using json = nlohmann::ordered_json;

enum class Format { Json, Csv, Table };

/// "json", "csv" or "table"; throws invalid_input otherwise.
Format parse_format(std::string_view name);

/// Every emitted float goes through this: 12 significant digits.
std::string format_double(double x);
double round_to_emitted(double x);

// Exact values are strings "num/den"; intervals become {"lower", "upper"}.
json rational_json(RationalInterval const & x);
RationalInterval rational_from_json(json const & j);
json numeric_json(NumericInterval const & x);
NumericInterval numeric_from_json(json const & j);

// Intervals in CSV / table cells are written "lower..upper".
std::string rational_cell(RationalInterval const & x);
RationalInterval rational_from_cell(std::string_view cell);
std::string numeric_cell(NumericInterval const & x);
NumericInterval numeric_from_cell(std::string_view cell);

/// d,disc,n,nu,chi,volume,h,h_torsion,r,epsilon,mult_lo,mult_hi,exact
std::vector<std::string> const & survey_columns();
std::string survey_csv_header();
std::vector<std::string> survey_cells(SurveyRow const & row);
std::string to_csv(SurveyRow const & row);
SurveyRow survey_row_from_csv(std::string_view line);

json to_json(SurveyRow const & row);
SurveyRow survey_row_from_json(json const & j);

/// Survey-row keys plus "index".
json to_json(CovolumeResult const & result);

json to_json(GrowthReport const & report);
json to_json(MinimalField const & result, bool with_certificate);
json to_json(OverallMinimum const & result, bool verbose);
json to_json(ClassGroup const & group);

/// Plain text table with columns padded to their widest cell.
class Table
{
  public:
    explicit Table(std::vector<std::string> headers) : headers_(std::move(headers)) {}
    void add(std::vector<std::string> row) { rows_.push_back(std::move(row)); }
    void render(std::ostream & os) const;

  private:
    std::vector<std::string> headers_;
    std::vector<std::vector<std::string>> rows_;
};

} // namespace covol::output
