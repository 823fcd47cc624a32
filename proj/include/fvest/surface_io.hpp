#ifndef FVEST_SURFACE_IO_HPP
#define FVEST_SURFACE_IO_HPP

#include <string>
#include <utility>
#include <vector>

#include "fvest/surface.hpp"

namespace fvest {

/// Surface CSV, long format. Layout:
///
///   # fvest-surface v1
///   # n: <n>
///   # maturities: <T_0>,<T_1>,...,<T_d>
///   # <key>: <value>          (optional provenance lines)
///   t_index,T_index,t,T,I
///   0,1,0,0.25,0.0099...
///
/// Only live cells (t_i < T_j) are written; absent cells are zero by the
/// t >= T convention. Values are printed with 17 significant digits so the
/// round trip is bit-exact.
void write_surface(const CumulativeVarianceSurface& s, const std::string& path,
                   const std::vector<std::pair<std::string, std::string>>& provenance = {});

/// Throws DataError on malformed rows, duplicate cells, missing live cells,
/// nonzero dead cells, or grid inconsistencies.
CumulativeVarianceSurface read_surface(const std::string& path);

}  // namespace fvest

#endif  // FVEST_SURFACE_IO_HPP
