// Times the serial reference kernels against their OpenMP counterparts and
// prints a comparison table.  The two paths must produce identical results;
// any divergence aborts the run.

#include <chrono>
#include <iomanip>
#include <iostream>
#include <string>

#include "permbp/enumeration.hpp"
#include "permbp/report.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

using namespace permbp;

namespace {

double time_once(const std::function<void()>& fn) {
    const auto start = std::chrono::steady_clock::now();
    fn();
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

void print_row(const std::string& kernel, int n, double serial_s, double parallel_s, bool equal) {
    std::cout << std::left << std::setw(18) << kernel << std::right << std::setw(4) << n
              << std::setw(12) << std::fixed << std::setprecision(3) << serial_s << std::setw(12)
              << parallel_s << std::setw(10) << std::setprecision(2)
              << (parallel_s > 0 ? serial_s / parallel_s : 0.0) << (equal ? "" : "  MISMATCH")
              << "\n";
    if (!equal) std::exit(2);
}

}  // namespace

int main(int argc, char** argv) {
    int scan_n = 9;
    int pruned_n = 11;
    int sweep_n = 8;
    for (int i = 1; i + 1 < argc; i += 2) {
        const std::string flag = argv[i];
        const int value = std::stoi(argv[i + 1]);
        if (flag == "--scan-n") scan_n = value;
        else if (flag == "--pruned-n") pruned_n = value;
        else if (flag == "--sweep-n") sweep_n = value;
        else {
            std::cerr << "usage: permbp_bench [--scan-n N] [--pruned-n N] [--sweep-n N]\n";
            return 1;
        }
    }

#ifdef _OPENMP
    std::cout << "threads: " << omp_get_max_threads() << "\n";
#else
    std::cout << "threads: 1 (built without OpenMP)\n";
#endif
    std::cout << std::left << std::setw(18) << "kernel" << std::right << std::setw(4) << "n"
              << std::setw(12) << "serial(s)" << std::setw(12) << "parallel(s)" << std::setw(10)
              << "speedup" << "\n";

    const std::vector<Permutation> patterns = {parse_permutation("3412"),
                                               parse_permutation("52341"),
                                               parse_permutation("635241")};

    {
        std::uint64_t serial_count = 0, parallel_count = 0;
        const double ts = time_once([&] { serial_count = count_avoiders_scan_serial(scan_n, patterns); });
        const double tp = time_once([&] { parallel_count = count_avoiders_scan(scan_n, patterns); });
        print_row("scan", scan_n, ts, tp, serial_count == parallel_count);
    }
    {
        std::uint64_t serial_count = 0, parallel_count = 0;
        const double ts =
            time_once([&] { serial_count = count_avoiders_pruned_serial(pruned_n, patterns); });
        const double tp = time_once([&] { parallel_count = count_avoiders_pruned(pruned_n, patterns); });
        print_row("pruned", pruned_n, ts, tp, serial_count == parallel_count);
    }
    {
        SweepOptions serial_opts, parallel_opts;
        serial_opts.jobs = 1;
        serial_opts.max_n = sweep_n;
        parallel_opts.max_n = sweep_n;
        SweepReport rs, rp;
        const double ts = time_once([&] { rs = sweep_theorem_main(sweep_n, serial_opts); });
        const double tp = time_once([&] { rp = sweep_theorem_main(sweep_n, parallel_opts); });
        print_row("sweep criteria", sweep_n, ts, tp,
                  sweep_to_json(rs, "main").dump() == sweep_to_json(rp, "main").dump());
    }
    {
        SweepOptions serial_opts, parallel_opts;
        serial_opts.jobs = 1;
        serial_opts.max_n = sweep_n;
        parallel_opts.max_n = sweep_n;
        SweepReport rs, rp;
        const double ts = time_once([&] { rs = sweep_theorem_main2(sweep_n, serial_opts); });
        const double tp = time_once([&] { rp = sweep_theorem_main2(sweep_n, parallel_opts); });
        print_row("sweep structure", sweep_n, ts, tp,
                  sweep_to_json(rs, "main2").dump() == sweep_to_json(rp, "main2").dump());
    }
    return 0;
}
