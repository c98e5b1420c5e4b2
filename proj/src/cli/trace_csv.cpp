#include "attrition/cli/trace_csv.hpp"

#include <charconv>
#include <stdexcept>

#include "attrition/cli/format.hpp"

namespace attrition::cli {

std::string trace_to_csv(const SimulationTrace& trace) {
  std::string out(kTraceCsvHeader);
  out += '\n';
  for (const auto& r : trace.periods) {
    out += std::to_string(r.t);
    for (double v : {r.producers, r.deterrence_pirate, r.deterrence_industry, r.pirate_profit,
                     r.industry_profit, r.disc_cum_pirate, r.disc_cum_industry}) {
      out += ',';
      out += format_number(v);
    }
    out += '\n';
  }
  return out;
}

namespace {

double parse_field(std::string_view field, std::size_t line) {
  double v = 0.0;
  const auto res = std::from_chars(field.data(), field.data() + field.size(), v);
  if (res.ec != std::errc{} || res.ptr != field.data() + field.size())
    throw std::runtime_error("trace CSV line " + std::to_string(line) + ": bad number \"" +
                             std::string(field) + "\"");
  return v;
}

}  // namespace

std::vector<PeriodRecord> parse_trace_csv(std::string_view csv) {
  std::vector<PeriodRecord> rows;
  std::size_t line_no = 0;
  while (!csv.empty()) {
    const auto eol = csv.find('\n');
    const auto line = csv.substr(0, eol);
    csv = eol == std::string_view::npos ? std::string_view{} : csv.substr(eol + 1);
    ++line_no;
    if (line_no == 1) {
      if (line != kTraceCsvHeader) throw std::runtime_error("trace CSV: unexpected header");
      continue;
    }
    if (line.empty()) continue;

    std::vector<double> fields;
    std::string_view rest = line;
    for (;;) {
      const auto comma = rest.find(',');
      fields.push_back(parse_field(rest.substr(0, comma), line_no));
      if (comma == std::string_view::npos) break;
      rest = rest.substr(comma + 1);
    }
    if (fields.size() != 8)
      throw std::runtime_error("trace CSV line " + std::to_string(line_no) + ": expected 8 fields");
    rows.push_back({static_cast<std::size_t>(fields[0]), fields[1], fields[2], fields[3], fields[4],
                    fields[5], fields[6], fields[7]});
  }
  return rows;
}

}  // namespace attrition::cli
