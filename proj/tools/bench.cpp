// Benchmark comparing the OpenMP kernels against their serial reference
// implementations: phi-table construction, degree-3 normal-word counting,
// and overlap certification.

#include <chrono>
#include <cstdio>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "qgb/gbcheck.hpp"
#include "qgb/segre.hpp"
#include "qgb/veronese.hpp"

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

void row(const std::string& name, double serial_s, double parallel_s, bool agree) {
    std::printf("%-40s %10.4fs %10.4fs %7.2fx  %s\n", name.c_str(), serial_s, parallel_s,
                parallel_s > 0 ? serial_s / parallel_s : 0.0, agree ? "agree" : "DISAGREE");
}

void bench_phi_table(int n, int d) {
    qgb::ParamSet params;
    qgb::QuantumSpace space(n, qgb::DeformationMatrix::generic(n, params));
    qgb::TermTable table(n, d);

    const auto t0 = Clock::now();
    qgb::PhiTable serial(space, table, qgb::Exec::Serial);
    const double ts = seconds_since(t0);

    const auto t1 = Clock::now();
    qgb::PhiTable parallel(space, table, qgb::Exec::Parallel);
    const double tp = seconds_since(t1);

    row("phi_table n=" + std::to_string(n) + " d=" + std::to_string(d) + " (" +
            std::to_string(table.count()) + "^2 pairs)",
        ts, tp, serial == parallel);
}

void bench_segre_count(int n, int m) {
    qgb::ParamSet params;
    qgb::QuantumSpace x(n, qgb::DeformationMatrix::generic(n, params));
    qgb::QuantumSpace y(m, qgb::DeformationMatrix::generic(m, params, "qp"));
    qgb::Segre segre(x, y);
    qgb::QuantumSpace derived(segre.big_n(), segre.matrix());
    const auto sys = qgb::RewriteSystem::quantum_system(derived, segre.kernel_gb());

    const auto t0 = Clock::now();
    const qgb::BigInt cs = qgb::count_normal_ordered_words(sys, 3, qgb::Exec::Serial);
    const double ts = seconds_since(t0);

    const auto t1 = Clock::now();
    const qgb::BigInt cp = qgb::count_normal_ordered_words(sys, 3, qgb::Exec::Parallel);
    const double tp = seconds_since(t1);

    row("ordered count segre n=" + std::to_string(n) + " m=" + std::to_string(m) + " (N+1=" +
            std::to_string(segre.big_n() + 1) + ")",
        ts, tp, cs == cp);
}

void bench_lifted_certify(int n, int d) {
    qgb::ParamSet params;
    qgb::QuantumSpace space(n, qgb::DeformationMatrix::generic(n, params));
    qgb::Veronese ver(space, d);
    const qgb::LiftedKernel lifted = ver.lifted_kernel_gb();
    qgb::Presentation all = lifted.re1;
    all.relations.insert(all.relations.end(), lifted.re2.relations.begin(),
                         lifted.re2.relations.end());
    const auto sys = qgb::RewriteSystem::free_system(ver.big_n() + 1, all);
    const auto expected = qgb::binomial(n + 3 * d, n).convert_to<std::uint64_t>();

    const auto t0 = Clock::now();
    const auto rs = qgb::certify_quadratic_gb(sys, expected, "bench", qgb::Exec::Serial);
    const double ts = seconds_since(t0);

    const auto t1 = Clock::now();
    const auto rp = qgb::certify_quadratic_gb(sys, expected, "bench", qgb::Exec::Parallel);
    const double tp = seconds_since(t1);

    row("lifted certify n=" + std::to_string(n) + " d=" + std::to_string(d) + " (" +
            std::to_string(rs.n_overlaps) + " overlaps)",
        ts, tp, rs.pass && rp.pass && rs.normal3_count == rp.normal3_count);
}

}  // namespace

int main() {
#ifdef _OPENMP
    std::printf("OpenMP threads: %d\n", omp_get_max_threads());
#else
    std::printf("OpenMP not enabled; both columns run serially\n");
#endif
    std::printf("%-40s %11s %11s %8s\n", "kernel", "serial", "parallel", "speedup");

    bench_phi_table(2, 6);
    bench_phi_table(3, 6);
    bench_phi_table(4, 5);

    bench_segre_count(12, 12);
    bench_segre_count(20, 20);

    bench_lifted_certify(1, 8);
    bench_lifted_certify(2, 4);

    return 0;
}
