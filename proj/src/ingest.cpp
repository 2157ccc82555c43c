#include "vlmcast/ingest.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>

#include "vlmcast/errors.hpp"

namespace vlmcast {

namespace {

std::string strip(std::string s) {
  const auto notspace = [](unsigned char c) { return !std::isspace(c); };
  s.erase(s.begin(), std::find_if(s.begin(), s.end(), notspace));
  s.erase(std::find_if(s.rbegin(), s.rend(), notspace).base(), s.end());
  return s;
}

std::optional<double> parse_number(std::string tok) {
  // Fortran D exponents are common in published coefficient files
  for (char& c : tok)
    if (c == 'D' || c == 'd') c = 'e';
  if (!tok.empty() && tok.front() == '+') tok.erase(tok.begin());
  double v = 0.0;
  const char* begin = tok.data();
  const char* end = begin + tok.size();
  auto [ptr, ec] = std::from_chars(begin, end, v);
  if (ec != std::errc{} || ptr != end) return std::nullopt;
  return v;
}

std::vector<std::string> split_csv(const std::string& line) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : line) {
    if (c == ',') {
      out.push_back(strip(cur));
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  out.push_back(strip(cur));
  return out;
}

} // namespace

StationParseResult parse_station_csv(std::istream& in,
                                     const StationParseOptions& opts) {
  StationParseResult result;
  result.header.station_id = opts.default_station_id;

  std::string line;
  std::size_t lineno = 0;
  bool header_seen = false;
  std::vector<std::pair<double, EcefCoord>> rows; // epoch in file units

  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::string t = strip(line);
    if (t.empty()) continue;
    if (t[0] == '#') {
      const auto grab = [&](const char* key) -> std::optional<std::string> {
        const std::string k = std::string("#") + key + ":";
        if (t.rfind(k, 0) == 0) return strip(t.substr(k.size()));
        const std::string k2 = std::string("# ") + key + ":";
        if (t.rfind(k2, 0) == 0) return strip(t.substr(k2.size()));
        return std::nullopt;
      };
      if (auto v = grab("station")) result.header.station_id = *v;
      if (auto v = grab("frame")) result.header.frame_label = *v;
      continue;
    }
    if (!header_seen) {
      if (t != "epoch_year,x_m,y_m,z_m")
        throw FormatError("station csv: bad header line (expected "
                          "'epoch_year,x_m,y_m,z_m')");
      header_seen = true;
      continue;
    }
    const auto fields = split_csv(t);
    if (fields.size() != 4) {
      if (opts.skip_bad_rows) {
        result.issues.push_back({lineno, "expected 4 fields"});
        continue;
      }
      throw RowError(lineno, "expected 4 fields");
    }
    double vals[4];
    bool ok = true;
    for (int i = 0; i < 4; ++i) {
      const auto v = parse_number(fields[static_cast<std::size_t>(i)]);
      if (!v || !std::isfinite(*v)) {
        if (opts.skip_bad_rows) {
          result.issues.push_back({lineno, "non-numeric field '" +
                                               fields[static_cast<std::size_t>(i)] +
                                               "'"});
          ok = false;
          break;
        }
        throw RowError(lineno, "non-numeric field '" +
                                   fields[static_cast<std::size_t>(i)] + "'");
      }
      vals[i] = *v;
    }
    if (!ok) continue;
    rows.push_back({vals[0], EcefCoord{vals[1], vals[2], vals[3]}});
  }
  if (!header_seen)
    throw FormatError("station csv: missing header line");

  std::stable_sort(rows.begin(), rows.end(),
                   [](const auto& a, const auto& b) { return a.first < b.first; });
  for (std::size_t i = 1; i < rows.size(); ++i)
    if (rows[i].first == rows[i - 1].first)
      throw FormatError("station csv: duplicate epoch " +
                        std::to_string(rows[i].first));

  std::vector<PositionSeries::Sample> samples;
  samples.reserve(rows.size());
  for (const auto& [t_file, p] : rows)
    samples.push_back({julian_to_sidereal(t_file), p});

  result.series = PositionSeries(result.header.station_id, std::move(samples),
                                 opts.nominal_step, opts.check_station_norm);
  return result;
}

StationParseResult parse_station_file(const std::string& path,
                                      StationParseOptions opts) {
  std::ifstream in(path);
  if (!in) throw FormatError("cannot open station file: " + path);
  if (opts.default_station_id == "unnamed")
    opts.default_station_id = std::filesystem::path(path).stem().string();
  return parse_station_csv(in, opts);
}

void write_station_csv(std::ostream& out, const PositionSeries& series) {
  out << "# station: " << series.station_id() << "\n";
  out << "epoch_year,x_m,y_m,z_m\n";
  char buf[160];
  for (const auto& [t, p] : series.samples()) {
    std::snprintf(buf, sizeof buf, "%.17g,%.17g,%.17g,%.17g\n",
                  sidereal_to_julian(t), p.x, p.y, p.z);
    out << buf;
  }
}

GeopotentialModel parse_gfc(std::istream& in, int max_degree,
                            EllipsoidParams ell) {
  if (max_degree < 0) throw std::domain_error("parse_gfc: negative max degree");

  double gm = 3.986004415e14; // defaults when the file has no header
  double radius = 6378136.3;
  std::vector<GfcRecord> records;

  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::istringstream ls(line);
    std::string tok;
    if (!(ls >> tok)) continue;
    if (tok == "gfc") {
      std::string sn, sm, sc, ss;
      if (!(ls >> sn >> sm >> sc >> ss))
        throw RowError(lineno, "gfc record needs n m C S");
      const auto n = parse_number(sn);
      const auto m = parse_number(sm);
      const auto c = parse_number(sc);
      const auto s = parse_number(ss);
      if (!n || !m || !c || !s)
        throw RowError(lineno, "unreadable numeric in gfc record");
      const int ni = static_cast<int>(*n);
      const int mi = static_cast<int>(*m);
      if (ni < 0 || mi < 0 || mi > ni)
        throw FormatError("gfc record with n < m at line " +
                          std::to_string(lineno));
      if (ni > max_degree) continue;
      records.push_back({ni, mi, *c, *s});
    } else if (tok == "radius" || tok == "earth_gravity_constant") {
      std::string sv;
      if (ls >> sv) {
        const auto v = parse_number(sv);
        if (!v) throw RowError(lineno, "unreadable header value");
        (tok == "radius" ? radius : gm) = *v;
      }
    }
    // max_degree header key and all other header lines are informational
  }
  return GeopotentialModel(max_degree, records, gm, radius, ell);
}

GeopotentialModel parse_gfc_file(const std::string& path, int max_degree,
                                 EllipsoidParams ell) {
  std::ifstream in(path);
  if (!in) throw FormatError("cannot open gfc file: " + path);
  return parse_gfc(in, max_degree, ell);
}

} // namespace vlmcast
