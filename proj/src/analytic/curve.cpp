// Copyright 2026 The mimo-bc-sim Authors
// SPDX-License-Identifier: Apache-2.0

#include "mimobc/analytic/curve.hpp"

#include <fstream>
#include <ostream>

#include "mimobc/csv.hpp"
#include "mimobc/errors.hpp"

namespace mimobc::analytic
{

namespace
{

std::string optional_field(const std::optional<double> &value)
{
  return value ? csv::format_double(*value) : std::string();
}

}  // namespace

std::string to_string(CurveKind kind)
{
  switch (kind)
  {
  case CurveKind::pdf:
    return "pdf";
  case CurveKind::cdf:
    return "cdf";
  case CurveKind::bound_upper:
    return "bound_upper";
  case CurveKind::bound_lower:
    return "bound_lower";
  case CurveKind::tail:
    return "tail";
  case CurveKind::scaling:
    return "scaling";
  }
  return "unknown";
}

void write_curves(const std::vector<AnalyticCurve> &curves, std::ostream &out)
{
  out << kCurveCsvHeader << '\n';
  for (const AnalyticCurve &curve : curves)
  {
    if (curve.grid.size() != curve.values.size())
    {
      throw DimensionError("write_curves: grid and values differ in length");
    }
    const std::string prefix = to_string(curve.kind) + ',' + std::to_string(curve.params.tx) + ',' +
                               std::to_string(curve.params.rx) + ',' +
                               std::to_string(curve.params.n) + ',' +
                               optional_field(curve.params.delta) + ',' +
                               optional_field(curve.params.users) + ',' +
                               optional_field(curve.params.snr_db) + ',';
    for (std::size_t i = 0; i < curve.grid.size(); ++i)
    {
      out << prefix << csv::format_double(curve.grid[i]) << ','
          << csv::format_double(curve.values[i]) << '\n';
    }
  }
}

void emit_curves(const std::vector<AnalyticCurve> &curves, const std::filesystem::path &path)
{
  std::ofstream file(path);
  if (!file)
  {
    throw IoError("cannot open '" + path.string() + "' for writing");
  }
  write_curves(curves, file);
  file.flush();
  if (!file)
  {
    throw IoError("write to '" + path.string() + "' failed");
  }
}

std::vector<double> linspace(double first, double last, std::size_t count)
{
  std::vector<double> out(count);
  if (count == 1)
  {
    out[0] = first;
    return out;
  }
  for (std::size_t i = 0; i < count; ++i)
  {
    out[i] = first + (last - first) * static_cast<double>(i) / static_cast<double>(count - 1);
  }
  return out;
}

}  // namespace mimobc::analytic
