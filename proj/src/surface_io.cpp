#include "fvest/surface_io.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

namespace fvest {

namespace {

constexpr const char* kMagic = "# fvest-surface v1";
constexpr const char* kHeader = "t_index,T_index,t,T,I";

std::string fmt17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

double parse_double(const std::string& tok, const std::string& ctx) {
  char* end = nullptr;
  const double v = std::strtod(tok.c_str(), &end);
  if (end == tok.c_str() || *end != '\0')
    throw DataError("surface csv: bad number '" + tok + "' in " + ctx);
  return v;
}

long parse_long(const std::string& tok, const std::string& ctx) {
  char* end = nullptr;
  const long v = std::strtol(tok.c_str(), &end, 10);
  if (end == tok.c_str() || *end != '\0')
    throw DataError("surface csv: bad integer '" + tok + "' in " + ctx);
  return v;
}

std::vector<std::string> split(const std::string& line, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream ss(line);
  while (std::getline(ss, cur, sep)) out.push_back(cur);
  if (!line.empty() && line.back() == sep) out.emplace_back();
  return out;
}

bool close(double a, double b) {
  return std::abs(a - b) <= 1e-9 * std::max(1.0, std::max(std::abs(a), std::abs(b)));
}

}  // namespace

void write_surface(const CumulativeVarianceSurface& s, const std::string& path,
                   const std::vector<std::pair<std::string, std::string>>& provenance) {
  std::ofstream f(path);
  if (!f) throw DataError("write_surface: cannot open '" + path + "'");
  f << kMagic << "\n";
  f << "# n: " << s.n() << "\n";
  f << "# maturities: ";
  for (Index j = 0; j <= s.d(); ++j) {
    if (j) f << ",";
    f << fmt17(s.maturity_grid.T(j));
  }
  f << "\n";
  for (const auto& [k, v] : provenance) f << "# " << k << ": " << v << "\n";
  f << kHeader << "\n";
  for (int i = 0; i <= s.n(); ++i) {
    const double t = s.time_grid.t(i);
    for (Index j = 1; j <= s.d(); ++j) {
      if (t >= s.maturity_grid.T(j)) continue;
      f << i << "," << j << "," << fmt17(t) << "," << fmt17(s.maturity_grid.T(j)) << ","
        << fmt17(s.I(i, j)) << "\n";
    }
  }
  if (!f) throw DataError("write_surface: write failed for '" + path + "'");
}

CumulativeVarianceSurface read_surface(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw DataError("read_surface: cannot open '" + path + "'");
  std::string line;
  if (!std::getline(f, line) || line != kMagic)
    throw DataError("read_surface: missing '# fvest-surface v1' magic line");

  int n = -1;
  Vector maturities;
  while (f.peek() == '#') {
    std::getline(f, line);
    const auto colon = line.find(':');
    if (colon == std::string::npos) continue;
    const std::string key = line.substr(2, colon - 2);
    std::string value = line.substr(colon + 1);
    if (!value.empty() && value.front() == ' ') value.erase(0, 1);
    if (key == "n") {
      n = static_cast<int>(parse_long(value, "n header"));
    } else if (key == "maturities") {
      const auto toks = split(value, ',');
      maturities.resize(static_cast<Index>(toks.size()));
      for (std::size_t j = 0; j < toks.size(); ++j)
        maturities[static_cast<Index>(j)] = parse_double(toks[j], "maturities header");
    }
  }
  if (n < 1) throw DataError("read_surface: missing or invalid '# n:' header");
  if (maturities.size() < 2) throw DataError("read_surface: missing '# maturities:' header");

  if (!std::getline(f, line) || line != kHeader)
    throw DataError("read_surface: expected column header '" + std::string(kHeader) + "'");

  CumulativeVarianceSurface s;
  s.time_grid = TimeGrid(n);
  s.maturity_grid = MaturityGrid(maturities);  // throws on non-monotone grids
  const Index d = s.maturity_grid.d();
  s.I = MatrixRM::Zero(n + 1, d + 1);
  // Track which live cells have been seen.
  Eigen::Matrix<bool, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor> seen(n + 1, d + 1);
  seen.setConstant(false);

  std::size_t lineno = 0;
  while (std::getline(f, line)) {
    ++lineno;
    if (line.empty()) continue;
    const std::string ctx = "data row " + std::to_string(lineno);
    const auto toks = split(line, ',');
    if (toks.size() != 5) throw DataError("surface csv: expected 5 fields in " + ctx);
    const long i = parse_long(toks[0], ctx);
    const long j = parse_long(toks[1], ctx);
    if (i < 0 || i > n || j < 0 || j > d)
      throw DataError("surface csv: cell (" + std::to_string(i) + "," + std::to_string(j) +
                      ") out of range in " + ctx);
    const double t = parse_double(toks[2], ctx);
    const double T = parse_double(toks[3], ctx);
    const double v = parse_double(toks[4], ctx);
    if (!close(t, s.time_grid.t(static_cast<int>(i))) ||
        !close(T, s.maturity_grid.T(static_cast<Index>(j))))
      throw DataError("surface csv: t/T inconsistent with grids in " + ctx);
    if (seen(i, j))
      throw DataError("surface csv: duplicate cell (" + std::to_string(i) + "," +
                      std::to_string(j) + ") in " + ctx);
    seen(i, j) = true;
    if (!std::isfinite(v)) throw DataError("surface csv: non-finite value in " + ctx);
    if (s.time_grid.t(static_cast<int>(i)) >= s.maturity_grid.T(static_cast<Index>(j))) {
      if (v != 0.0)
        throw DataError("surface csv: zero convention violated at cell (" + std::to_string(i) +
                        "," + std::to_string(j) + "): t >= T but I = " + toks[4]);
      continue;
    }
    s.I(i, j) = v;
  }

  for (int i = 0; i <= n; ++i)
    for (Index j = 1; j <= d; ++j)
      if (s.time_grid.t(i) < s.maturity_grid.T(j) && !seen(i, j))
        throw DataError("read_surface: missing cell (i=" + std::to_string(i) +
                        ", j=" + std::to_string(j) + ")");
  return s;
}

}  // namespace fvest
