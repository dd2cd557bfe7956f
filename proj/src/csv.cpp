#include <array>
#include <charconv>
#include <fstream>
#include <sstream>

#include "esfp/harness.hpp"

namespace esfp {
namespace {

constexpr std::size_t kColumns = 14;

void append_number(std::string& out, double value) {
  std::array<char, 32> buf{};
  const auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), value, std::chars_format::general, 17);
  if (ec != std::errc{}) throw Error("format_csv: cannot format value");
  out.append(buf.data(), ptr);
}

std::array<double, kColumns> columns(const RunRecord& r) {
  return {r.t,       r.theta.xx, r.theta.yy, r.theta.zz, r.theta.xy, r.theta.xz, r.theta.yz,
          r.temperature, r.q.x,  r.q.y,      r.q.z,      r.nu,       r.prandtl,  r.anisotropy};
}

RunRecord from_columns(const std::array<double, kColumns>& c) {
  RunRecord r;
  r.t = c[0];
  r.theta = {c[1], c[2], c[3], c[4], c[5], c[6]};
  r.temperature = c[7];
  r.q = {c[8], c[9], c[10]};
  r.nu = c[11];
  r.prandtl = c[12];
  r.anisotropy = c[13];
  return r;
}

}  // namespace

std::string format_csv(std::span<const RunRecord> records) {
  std::string out{kCsvHeader};
  out += '\n';
  for (const RunRecord& r : records) {
    const auto cols = columns(r);
    for (std::size_t i = 0; i < kColumns; ++i) {
      if (i > 0) out += ',';
      append_number(out, cols[i]);
    }
    out += '\n';
  }
  return out;
}

std::vector<RunRecord> parse_csv(std::string_view text) {
  std::vector<RunRecord> records;
  std::size_t line_no = 0;
  while (!text.empty()) {
    const auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    ++line_no;
    if (line_no == 1) {
      if (line != kCsvHeader) throw Error("csv: unexpected header '" + std::string(line) + "'");
      continue;
    }
    if (line.empty()) continue;

    std::array<double, kColumns> cols{};
    const char* p = line.data();
    const char* const end = line.data() + line.size();
    for (std::size_t i = 0; i < kColumns; ++i) {
      const auto [next, ec] = std::from_chars(p, end, cols[i]);
      if (ec != std::errc{}) throw Error("csv: bad number on line " + std::to_string(line_no));
      p = next;
      if (i + 1 < kColumns) {
        if (p == end || *p != ',') throw Error("csv: too few columns on line " + std::to_string(line_no));
        ++p;
      }
    }
    if (p != end) throw Error("csv: trailing data on line " + std::to_string(line_no));
    records.push_back(from_columns(cols));
  }
  if (line_no == 0) throw Error("csv: empty input");
  return records;
}

void write_csv(std::span<const RunRecord> records, const std::filesystem::path& path) {
  if (records.empty()) throw Error("write_csv: no records");
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("write_csv: cannot open '" + path.string() + "'");
  const std::string text = format_csv(records);
  out.write(text.data(), static_cast<std::streamsize>(text.size()));
  if (!out) throw Error("write_csv: write failed for '" + path.string() + "'");
}

std::vector<RunRecord> read_csv(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("read_csv: cannot open '" + path.string() + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_csv(buf.str());
}

AnalysisReport analyze(std::span<const RunRecord> records, std::optional<TimeWindow> window, int component) {
  if (records.empty()) throw DegenerateFit("analyze: no records");
  AnalysisReport report;
  report.estimate = extract_prandtl(records, window, component);
  report.final_nu = records.back().nu;
  report.theoretical_pr = prandtl_number(report.final_nu);
  report.component = component;
  return report;
}

AnalysisReport analyze(const std::filesystem::path& csv, std::optional<TimeWindow> window, int component) {
  const auto records = read_csv(csv);
  return analyze(records, window, component);
}

std::string format_report(const AnalysisReport& report) {
  const auto& e = report.estimate;
  std::ostringstream out;
  out.precision(6);
  out << "window        : [" << e.fit_q.window.t0 << ", " << e.fit_q.window.t1 << "] (" << e.fit_q.samples
      << " records)\n";
  out << "slope ln|q|   : " << e.slope_q << "  (r^2 = " << e.fit_q.r_squared << ")\n";
  out << "slope ln|T" << report.component << report.component << "-T|: " << e.slope_theta
      << "  (r^2 = " << e.fit_theta.r_squared << ")\n";
  out << "Pr_n          : " << e.pr_n << "\n";
  out << "final nu      : " << report.final_nu << "\n";
  out << "Pr(final nu)  : " << report.theoretical_pr << "\n";
  return out.str();
}

std::string gnuplot_script(const std::filesystem::path& csv, int component) {
  const std::string file = csv.string();
  const int col = 1 + component;  // T11 is column 2
  std::ostringstream s;
  s << "# plots for " << file << "\n"
    << "set datafile separator ','\n"
    << "set key autotitle columnhead\n"
    << "set xlabel 't'\n"
    << "set multiplot layout 2,2\n"
    << "set title 'directional temperatures'\n"
    << "plot '" << file << "' using 1:2 with lines, '' using 1:3 with lines, '' using 1:4 with lines, "
    << "'' using 1:8 with lines\n"
    << "set title 'nu'\n"
    << "plot '" << file << "' using 1:12 with lines\n"
    << "set title 'Prandtl number'\n"
    << "plot '" << file << "' using 1:13 with lines\n"
    << "set title 'log decay'\n"
    << "plot '" << file << "' using 1:(log(sqrt($9**2+$10**2+$11**2))) with linespoints title 'ln|q|', "
    << "'' using 1:(log(abs($" << col << "-$8))) with linespoints title 'ln|T" << component << component
    << "-T|'\n"
    << "unset multiplot\n";
  return s.str();
}

}  // namespace esfp
