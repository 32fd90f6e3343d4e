// Times the serial reference scan against the OpenMP-parallel one on the
// fig1 and fig4 workloads and checks that both produce identical bytes.

#include <omp.h>

#include <chrono>
#include <iostream>

#include "magqsl/scanner.hpp"

using clock_type = std::chrono::steady_clock;
using namespace magqsl;

namespace {

double time_scan(const scanner::ScanRequest& req, scanner::Execution ex, std::string& csv) {
  const auto t0 = clock_type::now();
  const auto table = scanner::run_scan(req, ex);
  const auto t1 = clock_type::now();
  csv = scanner::render_csv(table);
  return std::chrono::duration<double>(t1 - t0).count();
}

void bench(const char* name, const scanner::ScanRequest& req) {
  std::string serial_csv, parallel_csv;
  const double ts = time_scan(req, scanner::Execution::serial, serial_csv);
  const double tp = time_scan(req, scanner::Execution::parallel, parallel_csv);
  const std::size_t rows = scanner::run_scan(req, scanner::Execution::serial).rows.size();
  std::cout << name << ": " << rows << " rows"
            << "  serial " << ts << " s (" << rows / ts << " rows/s)"
            << "  parallel " << tp << " s (" << rows / tp << " rows/s)"
            << "  speedup x" << ts / tp
            << "  identical=" << (serial_csv == parallel_csv ? "yes" : "NO") << "\n";
  if (serial_csv != parallel_csv) std::exit(1);
}

}  // namespace

int main(int argc, char** argv) {
  if (argc > 1) omp_set_num_threads(std::atoi(argv[1]));
  std::cout << "OpenMP max threads: " << omp_get_max_threads() << "\n";

  auto fig1 = scanner::make_preset(scanner::Figure::fig1);
  bench("fig1 (quadrature, B scan)", fig1);

  auto fig4 = scanner::make_preset(scanner::Figure::fig4);
  bench("fig4 (quadrature, p0 scan)", fig4);

  auto fig2 = scanner::make_preset(scanner::Figure::fig2);
  bench("fig2 (exact strong-field sums)", fig2);
  return 0;
}
