// Timings of the parallel kernels against their serial counterparts, with a
// result-equality check on every run.

#include <chrono>
#include <cstdio>
#include <string>

#include <CLI11.hpp>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "qr/links.hpp"

using namespace qr;
using Clock = std::chrono::steady_clock;

namespace {

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

template <class F>
double timed(int repeats, F&& fn) {
    double best = 1e300;
    for (int r = 0; r < repeats; ++r) {
        auto t0 = Clock::now();
        fn();
        best = std::min(best, seconds_since(t0));
    }
    return best;
}

void report(const char* name, double serial, double parallel, bool equal) {
    std::printf("%-28s serial %8.3fs   parallel %8.3fs   speedup %5.2fx   %s\n", name,
                serial, parallel, serial / parallel, equal ? "results equal" : "MISMATCH");
}

void bench_mod2(int order, int repeats) {
    Quandle q = dihedral_quandle(order);
    Mod2Set ser, par;
    double ts = timed(repeats, [&] { ser = enumerate_mod2(q, Exec::serial); });
    double tp = timed(repeats, [&] { par = enumerate_mod2(q, Exec::parallel); });
    report("mod-2 scan", ts, tp, ser.masks == par.masks);
    std::printf("  dihedral order %d, %zu idempotents\n", order, ser.masks.size());
}

void bench_integral(int order, long bound, int repeats) {
    Quandle q = dihedral_quandle(order);
    RationalSet ser, par;
    double ts = timed(repeats, [&] { ser = search_integral(q, bound, Exec::serial); });
    double tp = timed(repeats, [&] { par = search_integral(q, bound, Exec::parallel); });
    report("integral search", ts, tp, ser.elems == par.elems);
    std::printf("  dihedral order %d, bound %ld, %zu idempotents\n", order, bound,
                ser.elems.size());
}

void bench_rational(int order, int repeats) {
    Quandle q = dihedral_quandle(order);
    RationalSet ser, par;
    double ts = timed(repeats, [&] { ser = search_rational(q, 1, order, Exec::serial); });
    double tp = timed(repeats, [&] { par = search_rational(q, 1, order, Exec::parallel); });
    report("rational search", ts, tp, ser.elems == par.elems);
    std::printf("  dihedral order %d, denominators to %d, %zu idempotents\n", order, order,
                ser.elems.size());
}

void bench_color(int order, int repeats) {
    Quandle q = dihedral_quandle(order);
    ColoringTarget t = target_from_quandle(q);
    const Presentation& p = builtin_presentation("l4a1-0"); // five generators
    long ser = 0, par = 0;
    double ts = timed(repeats, [&] { ser = count_colorings(p, t, Exec::serial); });
    double tp = timed(repeats, [&] { par = count_colorings(p, t, Exec::parallel); });
    report("coloring count", ts, tp, ser == par);
    std::printf("  five generators into dihedral order %d, count %ld\n", order, ser);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"serial vs parallel kernel timings"};
    std::string kernel = "all";
    int repeats = 3, threads = 0;
    int mod2_order = 18, integral_order = 5, rational_order = 7, color_order = 14;
    long integral_bound = 5;
    app.add_option("--kernel", kernel, "mod2, integral, rational, color or all");
    app.add_option("--repeats", repeats);
    app.add_option("--threads", threads, "0 = library default");
    app.add_option("--mod2-order", mod2_order);
    app.add_option("--integral-order", integral_order);
    app.add_option("--integral-bound", integral_bound);
    app.add_option("--rational-order", rational_order);
    app.add_option("--color-order", color_order);
    CLI11_PARSE(app, argc, argv);

#ifdef _OPENMP
    if (threads > 0) omp_set_num_threads(threads);
    std::printf("OpenMP enabled, max threads %d\n", omp_get_max_threads());
#else
    std::printf("built without OpenMP; parallel timings run the serial path\n");
#endif

    if (kernel == "mod2" || kernel == "all") bench_mod2(mod2_order, repeats);
    if (kernel == "integral" || kernel == "all") bench_integral(integral_order, integral_bound, repeats);
    if (kernel == "rational" || kernel == "all") bench_rational(rational_order, repeats);
    if (kernel == "color" || kernel == "all") bench_color(color_order, repeats);
    return 0;
}
