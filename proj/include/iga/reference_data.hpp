#pragma once

#include <vector>

namespace iga {

/// One row of a reference accuracy table: relative errors in percent.
struct ReferenceRow {
    double epsilon;
    double l2;
    double h1;
};

/// Bundled reference results for a (method, mesh, problem) combination,
/// with the tolerance used when checking a reproduction run: a cell passes
/// when |ours - ref| <= max(tol_abs, tol_rel * ref).
struct ReferenceTable {
    const char* id;
    const char* problem;  // "p1" | "ej"
    const char* method;   // "galerkin" | "ls" | "gls" | "supg"
    const char* mesh;     // mesh spec string
    double tol_abs;       // percentage points
    double tol_rel;       // fraction of the reference value
    std::vector<ReferenceRow> rows;
};

const std::vector<ReferenceTable>& reference_tables();
const ReferenceTable& reference_table(const char* id);

}  // namespace iga
