// Compares the OpenMP element kernels against the serial reference paths.
// The two-phase reduction makes the outputs bit-identical, so this doubles
// as a sanity check and a speedup measurement.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <string>

#if defined(_OPENMP)
#include <omp.h>
#endif

#include "iga/analysis.hpp"
#include "iga/formulations.hpp"

namespace {

using clock_type = std::chrono::steady_clock;

template <typename F>
double best_ms(int reps, F&& f) {
    double best = 1e300;
    for (int r = 0; r < reps; ++r) {
        const auto t0 = clock_type::now();
        f();
        const auto t1 = clock_type::now();
        best = std::min(best, std::chrono::duration<double, std::milli>(t1 - t0).count());
    }
    return best;
}

bool same_bits(const std::vector<double>& a, const std::vector<double>& b) {
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] != b[i]) return false;
    return true;
}

}  // namespace

int main(int argc, char** argv) {
    int spans = 32;
    int reps = 3;
    if (argc > 1) spans = std::atoi(argv[1]);
    if (argc > 2) reps = std::atoi(argv[2]);
    if (spans < 2 || reps < 1) {
        std::fprintf(stderr, "usage: %s [spans] [reps]\n", argv[0]);
        return 2;
    }

#if defined(_OPENMP)
    std::printf("threads: %d\n", omp_get_max_threads());
#else
    std::printf("threads: 1 (compiled without OpenMP)\n");
#endif

    const iga::TensorMesh mesh = iga::uniform_mesh(spans, spans, 2);
    const iga::ProblemSpec spec = iga::problem_ej(1e-3);
    std::printf("mesh: uniform:%d (%d dofs, %d elements)\n", spans, mesh.num_dofs(),
                mesh.num_elements());

    iga::AssemblyOptions par;
    iga::AssemblyOptions ser;
    ser.parallel = false;

    iga::AssembledSystem sys_par, sys_ser;
    const double asm_par =
        best_ms(reps, [&] { sys_par = iga::assemble(iga::Method::gls, mesh, spec, par); });
    const double asm_ser =
        best_ms(reps, [&] { sys_ser = iga::assemble(iga::Method::gls, mesh, spec, ser); });
    const bool asm_same =
        same_bits(sys_par.matrix.data, sys_ser.matrix.data) && same_bits(sys_par.rhs, sys_ser.rhs);
    std::printf("assemble(gls)    serial %8.2f ms   omp %8.2f ms   speedup %.2fx   identical %s\n",
                asm_ser, asm_par, asm_ser / asm_par, asm_same ? "yes" : "NO");

    const iga::SolutionField field = iga::solve(iga::Method::gls, mesh, spec, par);
    iga::ErrorReport rep_par, rep_ser;
    const double err_par = best_ms(
        reps, [&] { rep_par = iga::error_norms(field, spec, iga::H1Definition::full, 0, true); });
    const double err_ser = best_ms(
        reps, [&] { rep_ser = iga::error_norms(field, spec, iga::H1Definition::full, 0, false); });
    const bool err_same = rep_par.l2_rel_percent == rep_ser.l2_rel_percent &&
                          rep_par.h1_rel_percent == rep_ser.h1_rel_percent;
    std::printf("error_norms      serial %8.2f ms   omp %8.2f ms   speedup %.2fx   identical %s\n",
                err_ser, err_par, err_ser / err_par, err_same ? "yes" : "NO");

    if (!asm_same || !err_same) {
        std::fprintf(stderr, "serial and parallel kernels disagree\n");
        return 1;
    }
    return 0;
}
