#ifndef VLMCAST_INGEST_HPP
#define VLMCAST_INGEST_HPP

#include <cstddef>
#include <istream>
#include <string>
#include <vector>

#include "vlmcast/geopotential.hpp"
#include "vlmcast/series.hpp"

namespace vlmcast {

/// Metadata of a station file. The canonical format carries the unit in the
/// header line itself (x_m etc.); station id and frame come from optional
/// `# station:` / `# frame:` comments.
struct StationFileHeader {
  std::string station_id;
  std::string frame_label = "ECEF";
  std::string unit_label = "m";
};

struct RowIssue {
  std::size_t line = 0;
  std::string message;
};

struct StationParseOptions {
  std::string default_station_id = "unnamed";
  double nominal_step = kDailyStep; ///< sidereal years
  bool skip_bad_rows = false;       ///< collect row issues instead of throwing
  bool check_station_norm = true;
};

struct StationParseResult {
  PositionSeries series;
  StationFileHeader header;
  std::vector<RowIssue> issues; ///< only populated with skip_bad_rows
};

/// Parse the canonical station CSV: header `epoch_year,x_m,y_m,z_m`, one
/// sample per line, `#` comments, LF or CRLF. Epochs are decimal Julian
/// years in the file and sidereal years in the result. Rows are sorted on
/// output. Throws FormatError on a bad header or duplicate epochs, RowError
/// on unreadable rows (unless skip_bad_rows).
StationParseResult parse_station_csv(std::istream& in,
                                     const StationParseOptions& opts = {});

/// Convenience file wrapper; the file stem becomes the default station id.
StationParseResult parse_station_file(const std::string& path,
                                      StationParseOptions opts = {});

/// Write a PositionSeries in the canonical CSV format (fixture generation
/// and round-trip tests).
void write_station_csv(std::ostream& out, const PositionSeries& series);

/// Parse an ICGEM-style gfc coefficient file, keeping degrees up to
/// max_degree. Header keys `radius`, `earth_gravity_constant` and
/// `max_degree` are honored; other header lines are ignored. Values may use
/// Fortran D exponents. Throws FormatError for m > n or duplicate (n,m),
/// RowError for unreadable numerics.
GeopotentialModel parse_gfc(std::istream& in, int max_degree,
                            EllipsoidParams ell = EllipsoidParams::wgs84());

GeopotentialModel parse_gfc_file(const std::string& path, int max_degree,
                                 EllipsoidParams ell = EllipsoidParams::wgs84());

} // namespace vlmcast

#endif
